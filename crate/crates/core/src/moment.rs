//! The algebraic moment map of a chart.
//!
//! For weights `s`, `μ(y) = Σ_i s_i Σ_m c_{i,m} y^{η_i(m)} η_i(m)` with
//! `η_i(m) = F^t m + a_i`. On the chart, `y^{η_i(m)} = t^m / f_i(t)`, which
//! gives the second evaluation route `x = F^t ν + A^t s` with
//! `ν = Σ_i s_i μ_i(t)` and `μ_i(t) = Σ_m c_{i,m} t^m m / f_i(t)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chart::PositiveChart;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::Rational;

fn check_weights(chart: &PositiveChart, s: &[Rational]) -> Result<()> {
    if s.len() != chart.num_sections() {
        return Err(Error::DimensionMismatch { expected: (1, chart.num_sections()), found: (1, s.len()) });
    }
    Ok(())
}

/// `μ(φ(t))`, evaluated through the Cox coordinates `y = φ(t)`.
pub fn moment_eval(chart: &PositiveChart, s: &[Rational], t: &[Rational]) -> Result<Vec<Rational>> {
    check_weights(chart, s)?;
    let y = chart.phi_eval(t)?;
    Ok(moment_at_y(chart, s, &y))
}

/// `μ(y)` at an arbitrary point of the Cox coordinate space.
pub fn moment_at_y(chart: &PositiveChart, s: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = chart.num_rays();
    let mut x = vec![Rational::zero(); n];
    for (h, si) in chart.cox_sections().iter().zip(s) {
        for (eta, c) in h.poly.terms() {
            let mut v = si * c;
            for (yj, &e) in y.iter().zip(eta) {
                v *= crate::poly::pow_rat(yj, e);
            }
            for (xj, &e) in x.iter_mut().zip(eta) {
                if e != 0 {
                    *xj += &v * Rational::from_integer(BigInt::from(e));
                }
            }
        }
    }
    x
}

/// `μ_i(t) = Σ_m c_{i,m} t^m m / f_i(t)` for each section.
pub fn section_moments(chart: &PositiveChart, t: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let fv = chart.section_values(t)?;
    let d = chart.dim();
    Ok(chart
        .sections()
        .iter()
        .zip(&fv)
        .map(|(sec, fi)| {
            let mut mu = vec![Rational::zero(); d];
            for (m, c) in sec.poly.terms() {
                let mut v = c.clone();
                for (tl, &e) in t.iter().zip(m) {
                    v *= crate::poly::pow_rat(tl, e);
                }
                for (ml, &e) in mu.iter_mut().zip(m) {
                    if e != 0 {
                        *ml += &v * Rational::from_integer(BigInt::from(e));
                    }
                }
            }
            mu.into_iter().map(|v| v / fi).collect()
        })
        .collect())
}

/// `μ(φ(t))` through the torus form `F^t ν + A^t s`.
pub fn moment_eval_torus(chart: &PositiveChart, s: &[Rational], t: &[Rational]) -> Result<Vec<Rational>> {
    check_weights(chart, s)?;
    let d = chart.dim();
    let mus = section_moments(chart, t)?;
    let mut nu = vec![Rational::zero(); d];
    for (mu, si) in mus.iter().zip(s) {
        for (a, b) in nu.iter_mut().zip(mu) {
            *a += si * b;
        }
    }
    let m = chart.m();
    let n = chart.num_rays();
    Ok((0..n)
        .map(|j| {
            let mut v = Rational::zero();
            for (l, nl) in nu.iter().enumerate() {
                v += Rational::from_integer(m[(l, j)].clone()) * nl;
            }
            for (i, si) in s.iter().enumerate() {
                v += Rational::from_integer(m[(d + i, j)].clone()) * si;
            }
            v
        })
        .collect())
}

/// `K^t x` for the chart's `K`.
pub fn plane_coordinates(chart: &PositiveChart, x: &[Rational]) -> Vec<Rational> {
    let k = chart.k();
    (0..k.cols())
        .map(|i| {
            x.iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (j, xj)| acc + Rational::from_integer(k[(j, i)].clone()) * xj)
        })
        .collect()
}

/// Checks `K^t μ(φ(t)) = s` exactly and, for positive `t` and `s`, that
/// every coordinate of the image is strictly positive.
pub fn moment_plane_check(chart: &PositiveChart, s: &[Rational], t: &[Rational]) -> Result<bool> {
    let x = moment_eval(chart, s, t)?;
    if plane_coordinates(chart, &x) != s {
        return Ok(false);
    }
    if t.iter().all(Signed::is_positive) && s.iter().all(Signed::is_positive) {
        return Ok(x.iter().all(Signed::is_positive));
    }
    Ok(true)
}

/// Components of `μ` as polynomials in `y_1, …, y_n, s_1, …, s_k`.
pub fn moment_symbolic(chart: &PositiveChart) -> Vec<Poly> {
    let n = chart.num_rays();
    let k = chart.num_sections();
    let nv = n + k;
    let mut out = vec![Poly::zero(nv); n];
    for (i, h) in chart.cox_sections().iter().enumerate() {
        for (eta, c) in h.poly.terms() {
            let mut e = eta.clone();
            e.resize(nv, 0);
            e[n + i] = 1;
            for (j, &ej) in eta.iter().enumerate() {
                if ej != 0 {
                    out[j].add_term(e.clone(), c * Rational::from_integer(BigInt::from(ej)));
                }
            }
        }
    }
    out
}

/// Multipliers `s = K^t x` induced by exponents `x`; fails when one vanishes.
pub fn induced_weights(chart: &PositiveChart, x: &[Rational]) -> Result<Vec<Rational>> {
    if x.len() != chart.num_rays() {
        return Err(Error::DimensionMismatch { expected: (1, chart.num_rays()), found: (1, x.len()) });
    }
    let s = plane_coordinates(chart, x);
    if let Some(i) = s.iter().position(Zero::is_zero) {
        return Err(Error::NonGeneric { index: i });
    }
    Ok(s)
}

/// Right-hand side `B^t x` of the reduced scattering equations
/// `Σ_i s_i μ_i(t) = B^t x`.
pub fn reduced_target(chart: &PositiveChart, x: &[Rational]) -> Vec<Rational> {
    let b = chart.b();
    (0..chart.dim())
        .map(|l| {
            x.iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (j, xj)| acc + Rational::from_integer(b[(j, l)].clone()) * xj)
        })
        .collect()
}

/// Exponent vectors `η_i(m)` of the homogenized sections, as `i64`.
pub fn eta_vectors(chart: &PositiveChart) -> Vec<Vec<(Vec<i64>, Rational)>> {
    chart
        .cox_sections()
        .iter()
        .map(|h| h.poly.terms().map(|(e, c)| (e.clone(), c.clone())).collect())
        .collect()
}
