//! Command line, example catalog, JSON formats and the numerical scattering
//! solver for positive charts. The exact algorithms live in `poschart_core`,
//! re-exported here as [`core`].

pub use poschart_core as core;

pub mod catalog;
pub mod cli;
pub mod error;
pub mod json;
pub mod scattering;
pub mod verify;

pub use error::AppError;
