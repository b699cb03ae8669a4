//! Polyhedral cones and the double description method.
//!
//! A [`Cone`] lives in `R^dim` and carries both an irredundant list of
//! primitive integer ray generators and an irredundant list of primitive
//! inward facet normals (`a·x >= 0`). Conversion in either direction goes
//! through [`cone_rays`], an incremental double description with the
//! combinatorial adjacency test.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{dot, primitive, IntMatrix};

/// Fixed-width bitset over inequality indices.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_superset(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: Bits,
}

/// Extreme rays of the pointed cone `{x : a·x >= 0 for every row a}`.
///
/// Rows may be redundant or repeated. Output rays are primitive and sorted
/// lexicographically. Fails with [`Error::NotPointed`] when the rows do not
/// span `R^dim`.
pub fn cone_rays(dim: usize, inequalities: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let m = inequalities.len();
    for row in inequalities {
        if row.len() != dim {
            return Err(Error::DimensionMismatch { expected: (1, dim), found: (1, row.len()) });
        }
    }
    if dim == 0 {
        return Ok(Vec::new());
    }
    // greedy basis in input order
    let mut basis: Vec<usize> = Vec::new();
    let mut echelon: Vec<Vec<crate::Rational>> = Vec::new();
    for (i, row) in inequalities.iter().enumerate() {
        if basis.len() == dim {
            break;
        }
        let mut r: Vec<crate::Rational> =
            row.iter().map(|x| crate::Rational::from_integer(x.clone())).collect();
        for e in &echelon {
            let p = e.iter().position(|x| !x.is_zero()).expect("echelon row nonzero");
            if !r[p].is_zero() {
                let f = &r[p] / &e[p];
                for (rj, ej) in r.iter_mut().zip(e) {
                    *rj -= &f * ej;
                }
            }
        }
        if r.iter().any(|x| !x.is_zero()) {
            basis.push(i);
            echelon.push(r);
        }
    }
    if basis.len() < dim {
        return Err(Error::NotPointed);
    }
    let a_basis = IntMatrix::from_rows(
        &basis.iter().map(|&i| inequalities[i].clone()).collect::<Vec<_>>(),
        dim,
    );
    let inv = a_basis.to_rational().inverse().expect("basis rows are independent");
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..dim {
        let col: Vec<crate::Rational> = (0..dim).map(|i| inv[(i, j)].clone()).collect();
        let v = crate::exactla::primitive_from_rational(&col);
        let mut zeros = Bits::new(m);
        for (bi, &row) in basis.iter().enumerate() {
            if bi != j {
                zeros.set(row);
            }
        }
        rays.push(Ray { v, zeros });
    }

    let mut in_basis = vec![false; m];
    for &b in &basis {
        in_basis[b] = true;
    }
    for (idx, row) in inequalities.iter().enumerate() {
        if in_basis[idx] {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.set(idx);
                }
            }
            continue;
        }
        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(i, r)| {
                    i == p || i == n || !r.zeros.is_superset(&common)
                });
                if !adjacent {
                    continue;
                }
                let v: Vec<BigInt> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xn, xp)| &vals[p] * xn - &vals[n] * xp)
                    .collect();
                let mut zeros = common;
                zeros.set(idx);
                new_rays.push(Ray { v: primitive(&v), zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + new_rays.len());
        for (mut r, v) in rays.into_iter().zip(vals) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                r.zeros.set(idx);
            }
            kept.push(r);
        }
        kept.extend(new_rays);
        rays = kept;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Irredundant facet normals of the full-dimensional cone generated by
/// `rays`. Fails with [`Error::NotPointed`] when the rays do not span.
pub fn cone_inequalities(dim: usize, rays: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    cone_rays(dim, rays)
}

/// A polyhedral cone with both descriptions populated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
    inequalities: Vec<Vec<BigInt>>,
}

impl Cone {
    /// Cone from (possibly redundant) inequalities; must be pointed and
    /// full-dimensional.
    pub fn from_inequalities(dim: usize, inequalities: &[Vec<BigInt>]) -> Result<Cone> {
        let rays = cone_rays(dim, inequalities)?;
        let inequalities = cone_inequalities(dim, &rays)?;
        Ok(Cone { dim, rays, inequalities })
    }

    /// Cone generated by `rays`; must be full-dimensional.
    pub fn from_rays(dim: usize, rays: &[Vec<BigInt>]) -> Result<Cone> {
        let inequalities = cone_inequalities(dim, rays)?;
        let rays = cone_rays(dim, &inequalities)?;
        Ok(Cone { dim, rays, inequalities })
    }

    /// Simplicial cone generated by `rays` in the given order (no sorting),
    /// which callers rely on to keep ray labels stable.
    pub fn simplicial(rays: Vec<Vec<BigInt>>) -> Result<Cone> {
        let dim = rays.len();
        let inequalities = cone_inequalities(dim, &rays)?;
        Ok(Cone { dim, rays: rays.into_iter().map(|r| primitive(&r)).collect(), inequalities })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn inequalities(&self) -> &[Vec<BigInt>] {
        &self.inequalities
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.inequalities.iter().all(|a| !dot(a, x).is_negative())
    }

    pub fn contains_in_interior(&self, x: &[BigInt]) -> bool {
        self.inequalities.iter().all(|a| dot(a, x).is_positive())
    }

    /// Ray matrix with the rays as columns.
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&self.rays, self.dim)
    }
}
