use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Which clause of the chart hypotheses was violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assumption {
    /// The Minkowski sum is not full-dimensional or does not have `d + k` facets.
    FacetCount { dim: usize, lattice_dim: usize, facets: usize, sections: usize },
    /// `det M != ±1`.
    Unimodular { det: BigInt },
    /// A section has a negative coefficient, or a vertex coefficient that is not positive.
    Positivity { section: usize, detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch { expected: (usize, usize), found: (usize, usize) },
    RankDeficient { rank: usize, rows: usize },
    /// The cokernel of `F^t` has torsion; carries the elementary divisors.
    Torsion { divisors: Vec<BigInt> },
    NotUnimodular { det: BigInt },
    Empty,
    Unbounded,
    NotFullDimensional { dim: usize, ambient: usize },
    NotLattice { index: usize },
    NotSimplicial { cone: Vec<usize> },
    /// The fan is simplicial but some maximal cone is not a lattice basis.
    NotSmoothFan { vertex: usize, cone: Vec<usize>, det: BigInt },
    NotPointed,
    NotNef { violated: usize },
    NegativeExponent { term: usize, position: usize },
    /// A section has a non-Cartier support vector on some maximal cone.
    NotCartier { section: usize, cone: Vec<usize> },
    Assumption(Assumption),
    RayMismatch,
    IdentityFailed { identity: String },
    ResourceLimit { what: &'static str, limit: usize },
    PoleAt { index: usize },
    /// A torus coordinate is zero.
    OffTorus { index: usize },
    NonGeneric { index: usize },
    Parse { input: String, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "dimension mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::RankDeficient { rank, rows } => {
                write!(f, "matrix has rank {rank} but {rows} rows")
            }
            Error::Torsion { divisors } => {
                write!(f, "class group has torsion (elementary divisors {divisors:?})")
            }
            Error::NotUnimodular { det } => write!(f, "matrix is not unimodular (det = {det})"),
            Error::Empty => f.write_str("polytope is empty"),
            Error::Unbounded => f.write_str("polyhedron is unbounded"),
            Error::NotFullDimensional { dim, ambient } => {
                write!(f, "polytope has dimension {dim} in R^{ambient}")
            }
            Error::NotLattice { index } => {
                write!(f, "support value {index} is not an integer")
            }
            Error::NotSimplicial { cone } => write!(f, "cone {cone:?} is not simplicial"),
            Error::NotSmoothFan { vertex, cone, det } => write!(
                f,
                "fan is not smooth: cone {cone:?} at vertex {vertex} has |det| = {det}"
            ),
            Error::NotPointed => f.write_str("cone is not pointed"),
            Error::NotNef { violated } => {
                write!(f, "class is not nef: deformation inequality {violated} is violated")
            }
            Error::NegativeExponent { term, position } => write!(
                f,
                "homogenization of term {term} has a negative exponent at y{}",
                position + 1
            ),
            Error::NotCartier { section, cone } => write!(
                f,
                "section {section} is not Cartier on cone {cone:?} (non-integral local vertex)"
            ),
            Error::Assumption(a) => match a {
                Assumption::FacetCount { dim, lattice_dim, facets, sections } => write!(
                    f,
                    "facet-count assumption violated: Minkowski sum has dimension {lattice_dim} \
                     (need {dim}) and {facets} facets (need {})",
                    dim + sections
                ),
                Assumption::Unimodular { det } => {
                    write!(f, "unimodularity assumption violated: det M = {det}")
                }
                Assumption::Positivity { section, detail } => {
                    write!(f, "positivity assumption violated by section {section}: {detail}")
                }
            },
            Error::RayMismatch => f.write_str("requested ray order does not match the fan"),
            Error::IdentityFailed { identity } => write!(f, "identity failed: {identity}"),
            Error::ResourceLimit { what, limit } => {
                write!(f, "resource limit exhausted: {what} > {limit}")
            }
            Error::PoleAt { index } => write!(f, "pole: section f{} vanishes", index + 1),
            Error::OffTorus { index } => write!(f, "coordinate t{} is zero", index + 1),
            Error::NonGeneric { index } => {
                write!(f, "non-generic input: induced multiplier s{} is zero", index + 1)
            }
            Error::Parse { input, message } => write!(f, "cannot parse {input:?}: {message}"),
        }
    }
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::Torsion { .. } => "Torsion",
            Error::NotUnimodular { .. } => "NotUnimodular",
            Error::Empty => "Empty",
            Error::Unbounded => "Unbounded",
            Error::NotFullDimensional { .. } => "NotFullDimensional",
            Error::NotLattice { .. } => "NotLattice",
            Error::NotSimplicial { .. } => "NotSimplicial",
            Error::NotSmoothFan { .. } => "NotSmoothFan",
            Error::NotPointed => "NotPointed",
            Error::NotNef { .. } => "NotNef",
            Error::NegativeExponent { .. } => "NegativeExponent",
            Error::NotCartier { .. } => "NotCartier",
            Error::Assumption(Assumption::FacetCount { .. }) => "AssumptionFacetCount",
            Error::Assumption(Assumption::Unimodular { .. }) => "AssumptionUnimodular",
            Error::Assumption(Assumption::Positivity { .. }) => "AssumptionPositivity",
            Error::RayMismatch => "RayMismatch",
            Error::IdentityFailed { .. } => "IdentityFailed",
            Error::ResourceLimit { .. } => "ResourceLimit",
            Error::PoleAt { .. } => "PoleAt",
            Error::OffTorus { .. } => "OffTorus",
            Error::NonGeneric { .. } => "NonGeneric",
            Error::Parse { .. } => "Parse",
        }
    }
}

impl core::error::Error for Error {}
