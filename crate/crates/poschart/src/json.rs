//! File formats and JSON output schemas.
//!
//! Rationals are written as strings `"p/q"` (or `"p"` when integral). Input
//! files also accept plain JSON integers where a rational is expected.

use num_traits::ToPrimitive;
use poschart_core::chart::PositiveChart;
use poschart_core::exactla::IntMatrix;
use poschart_core::poly::{var_names, Poly};
use poschart_core::polytope::Polytope;
use poschart_core::{BigInt, Rational};
use serde::{Deserialize, Serialize};

use crate::error::AppError;

pub fn rat_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, AppError> {
    let s = s.trim();
    let bad = || AppError::Input(format!("invalid rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Comma-separated list of rationals, as given on the command line.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, AppError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// A rational in an input file: `"p/q"` or an integer.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum RatIn {
    Text(String),
    Int(i64),
}

impl RatIn {
    pub fn value(&self) -> Result<Rational, AppError> {
        match self {
            RatIn::Text(s) => parse_rational(s),
            RatIn::Int(i) => Ok(Rational::from_integer(BigInt::from(*i))),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct FacetsIn {
    pub normals: Vec<Vec<i64>>,
    pub offsets: Vec<RatIn>,
}

/// Polytope file: either vertices or facet inequalities `<u_i, m> + a_i >= 0`.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    #[serde(default)]
    pub vertices: Option<Vec<Vec<RatIn>>>,
    #[serde(default)]
    pub facets: Option<FacetsIn>,
}

impl PolytopeFile {
    pub fn to_polytope(&self) -> Result<Polytope, AppError> {
        match (&self.vertices, &self.facets) {
            (Some(v), None) => {
                let pts = v
                    .iter()
                    .map(|p| p.iter().map(RatIn::value).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Polytope::from_vertices(pts)?)
            }
            (None, Some(f)) => {
                let d = f.normals.first().map_or(0, Vec::len);
                if f.normals.iter().any(|r| r.len() != d) || f.normals.len() != f.offsets.len() {
                    return Err(AppError::Input("facet normals and offsets have inconsistent sizes".into()));
                }
                // Normals are given as rows; the core expects them as columns.
                let cols: Vec<Vec<BigInt>> = f.normals.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
                let normals = IntMatrix::from_columns(&cols, d);
                let offsets = f.offsets.iter().map(RatIn::value).collect::<Result<Vec<_>, _>>()?;
                Ok(Polytope::from_facets(&normals, &offsets)?)
            }
            _ => Err(AppError::Input("polytope file needs exactly one of \"vertices\" or \"facets\"".into())),
        }
    }
}

/// Section file: Laurent polynomials in `t1..td`, optionally with a ray order.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SectionsFile {
    pub sections: Vec<String>,
    #[serde(default)]
    pub dim: Option<usize>,
    /// Rows of the ray matrix `F`.
    #[serde(default)]
    pub ray_order: Option<Vec<Vec<i64>>>,
}

/// Largest `N` such that `tN` occurs as a variable in `s`.
fn max_t_index(s: &str) -> usize {
    let b = s.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        let starts_ident = i == 0 || !(b[i - 1].is_ascii_alphanumeric() || b[i - 1] == b'_');
        if b[i] == b't' && starts_ident {
            let mut j = i + 1;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if j > i + 1 {
                best = best.max(s[i + 1..j].parse().unwrap_or(0));
            }
            i = j.max(i + 1);
        } else {
            i += 1;
        }
    }
    best
}

pub fn parse_sections(sections: &[String], dim: Option<usize>) -> Result<Vec<Poly>, AppError> {
    let d = dim.unwrap_or_else(|| sections.iter().map(|s| max_t_index(s)).max().unwrap_or(0));
    if d == 0 {
        return Err(AppError::Input("cannot infer the number of variables t1..td".into()));
    }
    let names = var_names("t", d);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    sections.iter().map(|s| Poly::parse(s, &refs).map_err(AppError::from)).collect()
}

pub fn parse_polys(polys: &[String], prefix: &str, n: usize) -> Result<Vec<Poly>, AppError> {
    let names = var_names(prefix, n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    polys.iter().map(|s| Poly::parse(s, &refs).map_err(AppError::from)).collect()
}

/// Polynomials in `y1..yn` followed by `s1..sk`.
pub fn parse_ys_polys(polys: &[String], n: usize, k: usize) -> Result<Vec<Poly>, AppError> {
    let mut names = var_names("y", n);
    names.extend(var_names("s", k));
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    polys.iter().map(|s| Poly::parse(s, &refs).map_err(AppError::from)).collect()
}

pub fn big_to_i64(x: &BigInt) -> Result<i64, AppError> {
    x.to_i64().ok_or_else(|| AppError::Internal(format!("integer {x} does not fit in 64 bits")))
}

pub fn vec_to_i64(v: &[BigInt]) -> Result<Vec<i64>, AppError> {
    v.iter().map(big_to_i64).collect()
}

pub fn matrix_rows(m: &IntMatrix) -> Result<Vec<Vec<i64>>, AppError> {
    m.to_rows().iter().map(|r| vec_to_i64(r)).collect()
}

pub fn matrix_from_rows(rows: &[Vec<i64>]) -> IntMatrix {
    let r: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_rows_i64(&r)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SectionOut {
    pub poly: String,
    pub class: Vec<i64>,
    pub support_vector: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PhiOut {
    pub t_exponent: Vec<i64>,
    pub f_powers: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChartOut {
    pub dim: usize,
    pub num_rays: usize,
    #[serde(rename = "F")]
    pub f: Vec<Vec<i64>>,
    #[serde(rename = "M")]
    pub m: Vec<Vec<i64>>,
    #[serde(rename = "M_inv")]
    pub m_inv: Vec<Vec<i64>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<i64>>,
    pub sections: Vec<SectionOut>,
    pub ideal: Vec<String>,
    pub phi: Vec<PhiOut>,
}

impl ChartOut {
    pub fn from_chart(c: &PositiveChart) -> Result<ChartOut, AppError> {
        let names = var_names("t", c.dim());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let sections = c
            .sections()
            .iter()
            .map(|s| {
                Ok(SectionOut {
                    poly: s.poly.to_string_lex(&refs),
                    class: vec_to_i64(&s.class)?,
                    support_vector: vec_to_i64(&s.support)?,
                })
            })
            .collect::<Result<Vec<_>, AppError>>()?;
        let phi = c
            .phi()
            .iter()
            .map(|p| Ok(PhiOut { t_exponent: vec_to_i64(&p.t_exponent)?, f_powers: vec_to_i64(&p.f_powers)? }))
            .collect::<Result<Vec<_>, AppError>>()?;
        Ok(ChartOut {
            dim: c.dim(),
            num_rays: c.num_rays(),
            f: matrix_rows(c.rays())?,
            m: matrix_rows(c.m())?,
            m_inv: matrix_rows(c.m_inv())?,
            k: matrix_rows(&c.k())?,
            sections,
            ideal: c.ideal_strings(),
            phi,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassGroupOut {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FanOut {
    pub dim: usize,
    #[serde(rename = "F")]
    pub f: Vec<Vec<i64>>,
    /// Maximal cones as 1-based ray indices.
    pub maximal_cones: Vec<Vec<usize>>,
    pub simplicial: bool,
    pub smooth: bool,
    pub class_group: ClassGroupOut,
    pub support_vector: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NefOut {
    pub dim: usize,
    pub ray_count: usize,
    pub rays: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ErrorOut {
    pub error: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
}
