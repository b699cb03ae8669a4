//! Exact lattice-polytope geometry.
//!
//! A [`Polytope`] stores both descriptions: its vertices (lexicographically
//! ordered, in ambient coordinates) and an irredundant facet description
//! `{m : F^t m + z >= 0}` with primitive integer normals sorted
//! lexicographically. Polytopes that are not full-dimensional get an
//! [`AffineChart`] onto the lattice of their affine hull and their facet
//! description is expressed in those local coordinates.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cone::cone_rays;
use crate::error::{Error, Result};
use crate::exactla::{content, integer_kernel, primitive_from_rational, snf_invariants, IntMatrix, RatMatrix};
use crate::Rational;

/// Affine lattice coordinates on a lower-dimensional affine hull.
///
/// `basis` (r×D) is a lattice basis of `aff(P) ∩ Z^D - origin` scaled to the
/// saturated lattice, and `coords` (D×r) satisfies `basis · coords = I_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineChart {
    pub origin: Vec<Rational>,
    pub basis: IntMatrix,
    pub coords: IntMatrix,
}

impl AffineChart {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn to_local(&self, p: &[Rational]) -> Vec<Rational> {
        let diff: Vec<Rational> = p.iter().zip(&self.origin).map(|(a, b)| a - b).collect();
        (0..self.coords.cols())
            .map(|j| {
                diff.iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (i, x)| acc + x * Rational::from_integer(self.coords[(i, j)].clone()))
            })
            .collect()
    }

    pub fn to_ambient(&self, c: &[Rational]) -> Vec<Rational> {
        let mut out = self.origin.clone();
        for (j, cj) in c.iter().enumerate() {
            for (i, o) in out.iter_mut().enumerate() {
                *o += cj * Rational::from_integer(self.basis[(j, i)].clone());
            }
        }
        out
    }
}

/// V- or H-description accepted by [`dual_convert`].
#[derive(Clone, Debug)]
pub enum PolytopeInput {
    Vertices(Vec<Vec<Rational>>),
    /// `normals` is d×n (one column per inequality), `P = {m : normals^t m + offsets >= 0}`.
    Facets { normals: IntMatrix, offsets: Vec<Rational> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Rational>>,
    chart: Option<AffineChart>,
    normals: IntMatrix,
    offsets: Vec<Rational>,
    /// For each vertex, the sorted facet indices it lies on.
    incidence: Vec<Vec<usize>>,
}

/// Face counts by dimension `0..d-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// Euler relation for a d-polytope: `Σ (-1)^i f_i = 1 - (-1)^d`.
    pub fn satisfies_euler(&self) -> bool {
        let d = self.0.len() as i64;
        let alt: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        alt == 1 - if d % 2 == 0 { 1 } else { -1 }
    }
}

pub fn dual_convert(input: PolytopeInput) -> Result<Polytope> {
    match input {
        PolytopeInput::Vertices(v) => Polytope::from_vertices(v),
        PolytopeInput::Facets { normals, offsets } => Polytope::from_facets(&normals, &offsets),
    }
}

fn affine_chart(points: &[Vec<Rational>]) -> Option<AffineChart> {
    let ambient = points[0].len();
    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| {
            let d: Vec<Rational> = p.iter().zip(&points[0]).map(|(a, b)| a - b).collect();
            primitive_from_rational(&d)
        })
        .filter(|d| d.iter().any(|x| !x.is_zero()))
        .collect();
    if diffs.is_empty() {
        return Some(AffineChart {
            origin: points[0].clone(),
            basis: IntMatrix::zeros(0, ambient),
            coords: IntMatrix::zeros(ambient, 0),
        });
    }
    let dm = IntMatrix::from_rows(&diffs, ambient);
    let normals = integer_kernel(&dm);
    if normals.cols() == 0 {
        return None;
    }
    let lattice = integer_kernel(&normals.transpose());
    let basis = lattice.transpose();
    let coords = snf_invariants(&basis)
        .expect("saturated basis has full row rank")
        .right_inverse
        .expect("saturated lattice has free cokernel");
    Some(AffineChart { origin: points[0].clone(), basis, coords })
}

fn lex_sort_dedup(points: &mut Vec<Vec<Rational>>) {
    points.sort();
    points.dedup();
}

impl Polytope {
    /// Convex hull of finitely many points.
    pub fn from_vertices(mut points: Vec<Vec<Rational>>) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        let ambient_dim = points[0].len();
        if let Some(p) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: (1, ambient_dim), found: (1, p.len()) });
        }
        lex_sort_dedup(&mut points);
        let chart = affine_chart(&points);
        let local: Vec<Vec<Rational>> = match &chart {
            Some(c) => points.iter().map(|p| c.to_local(p)).collect(),
            None => points.clone(),
        };
        let r = chart.as_ref().map_or(ambient_dim, AffineChart::dim);
        if r == 0 {
            return Ok(Polytope {
                ambient_dim,
                vertices: vec![points[0].clone()],
                chart,
                normals: IntMatrix::zeros(0, 0),
                offsets: Vec::new(),
                incidence: vec![Vec::new()],
            });
        }

        // facets are the extreme rays of {(a, b) : a·q + b >= 0 for all q}
        let rows: Vec<Vec<BigInt>> = local
            .iter()
            .map(|q| {
                let mut h = q.clone();
                h.push(Rational::one());
                primitive_from_rational(&h)
            })
            .collect();
        let rays = cone_rays(r + 1, &rows)?;
        let mut facets: Vec<(Vec<BigInt>, Rational)> = rays
            .into_iter()
            .map(|ray| {
                let a = ray[..r].to_vec();
                let g = content(&a);
                let b = Rational::new(ray[r].clone(), g.clone());
                (a.into_iter().map(|x| x / &g).collect(), b)
            })
            .collect();
        facets.sort();
        let normals = IntMatrix::from_columns(
            &facets.iter().map(|(a, _)| a.clone()).collect::<Vec<_>>(),
            r,
        );
        let offsets: Vec<Rational> = facets.iter().map(|(_, b)| b.clone()).collect();

        let mut verts: Vec<(Vec<Rational>, Vec<usize>)> = Vec::new();
        for (p, q) in points.iter().zip(&local) {
            let tight: Vec<usize> = (0..facets.len())
                .filter(|&j| eval_facet(&facets[j].0, &facets[j].1, q).is_zero())
                .collect();
            if tight.len() < r {
                continue;
            }
            let sub = normals.select_columns(&tight);
            if crate::exactla::rank(&sub) == r {
                verts.push((p.clone(), tight));
            }
        }
        verts.sort();
        let (vertices, incidence) = verts.into_iter().unzip();
        Ok(Polytope { ambient_dim, vertices, chart, normals, offsets, incidence })
    }

    /// Polytope `{m : normals^t m + offsets >= 0}`; redundant inequalities
    /// are allowed and dropped.
    pub fn from_facets(normals: &IntMatrix, offsets: &[Rational]) -> Result<Polytope> {
        let d = normals.rows();
        if offsets.len() != normals.cols() {
            return Err(Error::DimensionMismatch {
                expected: (1, normals.cols()),
                found: (1, offsets.len()),
            });
        }
        let mut rows: Vec<Vec<BigInt>> = (0..normals.cols())
            .map(|j| {
                let mut h: Vec<Rational> =
                    normals.column(j).into_iter().map(Rational::from_integer).collect();
                h.push(offsets[j].clone());
                primitive_from_rational(&h)
            })
            .collect();
        let mut lambda = vec![BigInt::zero(); d + 1];
        lambda[d] = BigInt::one();
        rows.push(lambda);
        let rays = match cone_rays(d + 1, &rows) {
            Ok(r) => r,
            Err(Error::NotPointed) => return Err(Error::Unbounded),
            Err(e) => return Err(e),
        };
        if rays.iter().any(|r| r[d].is_zero()) {
            return Err(Error::Unbounded);
        }
        let points: Vec<Vec<Rational>> = rays
            .iter()
            .map(|r| r[..d].iter().map(|x| Rational::new(x.clone(), r[d].clone())).collect())
            .collect();
        if points.is_empty() {
            return Err(Error::Empty);
        }
        Polytope::from_vertices(points)
    }

    pub fn from_integer_points(points: &[&[i64]]) -> Result<Polytope> {
        Polytope::from_vertices(
            points.iter().map(|p| p.iter().map(|&x| crate::rat(x)).collect()).collect(),
        )
    }

    /// The polytope itself when full-dimensional, otherwise its image in
    /// the lattice coordinates of the affine hull.
    pub fn full_dimensional_model(&self) -> Result<Polytope> {
        match &self.chart {
            None => Ok(self.clone()),
            Some(c) => Polytope::from_vertices(self.vertices.iter().map(|v| c.to_local(v)).collect()),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn lattice_dim(&self) -> usize {
        self.chart.as_ref().map_or(self.ambient_dim, AffineChart::dim)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.chart.is_none()
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn chart(&self) -> Option<&AffineChart> {
        self.chart.as_ref()
    }

    /// Facet normals (columns), in local coordinates when projected.
    pub fn normals(&self) -> &IntMatrix {
        &self.normals
    }

    pub fn offsets(&self) -> &[Rational] {
        &self.offsets
    }

    pub fn num_facets(&self) -> usize {
        self.offsets.len()
    }

    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|x| x.is_integer()))
    }

    /// Integer offsets `z` when the polytope is full-dimensional and every
    /// facet offset is integral.
    pub fn integer_offsets(&self) -> Option<Vec<BigInt>> {
        self.offsets.iter().map(|z| z.is_integer().then(|| z.to_integer())).collect()
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        let local = match &self.chart {
            Some(c) => {
                let l = c.to_local(p);
                if c.to_ambient(&l).as_slice() != p {
                    return false;
                }
                l
            }
            None => p.to_vec(),
        };
        (0..self.num_facets())
            .all(|j| !eval_facet(&self.normals.column(j), &self.offsets[j], &local).is_negative())
    }

    /// Image under `m ↦ w·m`.
    pub fn scaled(&self, w: &Rational) -> Result<Polytope> {
        Polytope::from_vertices(
            self.vertices.iter().map(|v| v.iter().map(|x| x * w).collect()).collect(),
        )
    }

    pub fn translated(&self, t: &[Rational]) -> Result<Polytope> {
        Polytope::from_vertices(
            self.vertices.iter().map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect()).collect(),
        )
    }
}

fn eval_facet(a: &[BigInt], b: &Rational, q: &[Rational]) -> Rational {
    a.iter()
        .zip(q)
        .fold(b.clone(), |acc, (ai, qi)| acc + qi * Rational::from_integer(ai.clone()))
}

/// `a_j = -min_{m ∈ P} <u_j, m>` for every column `u_j` of `f`.
pub fn support_vector(p: &Polytope, f: &IntMatrix) -> Vec<Rational> {
    assert_eq!(f.rows(), p.ambient_dim(), "support_vector: dimension mismatch");
    (0..f.cols())
        .map(|j| {
            let u: Vec<Rational> = f.column(j).into_iter().map(Rational::from_integer).collect();
            let min = p
                .vertices()
                .iter()
                .map(|v| v.iter().zip(&u).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                .min()
                .expect("nonempty polytope");
            -min
        })
        .collect()
}

/// Integral support vector; fails with [`Error::NotLattice`] on the first
/// non-integral entry.
pub fn lattice_support_vector(p: &Polytope, f: &IntMatrix) -> Result<Vec<BigInt>> {
    support_vector(p, f)
        .into_iter()
        .enumerate()
        .map(|(j, a)| if a.is_integer() { Ok(a.to_integer()) } else { Err(Error::NotLattice { index: j }) })
        .collect()
}

/// All integer points of `p`, lexicographically ordered.
pub fn lattice_points(p: &Polytope) -> Vec<Vec<BigInt>> {
    let d = p.ambient_dim();
    let lo: Vec<BigInt> = (0..d)
        .map(|i| p.vertices().iter().map(|v| v[i].ceil().to_integer()).min().expect("nonempty"))
        .collect();
    let hi: Vec<BigInt> = (0..d)
        .map(|i| p.vertices().iter().map(|v| v[i].floor().to_integer()).max().expect("nonempty"))
        .collect();
    let mut out = Vec::new();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return out;
    }
    let mut cur = lo.clone();
    loop {
        let q: Vec<Rational> = cur.iter().map(|x| Rational::from_integer(x.clone())).collect();
        if p.contains(&q) {
            out.push(cur.clone());
        }
        // odometer, last coordinate fastest => lexicographic order
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                for c in cur.iter_mut().zip(&lo).skip(i + 1) {
                    *c.0 = c.1.clone();
                }
                break;
            }
        }
        if d == 0 {
            return out;
        }
    }
}

/// `Σ w_i P_i` computed from vertex sums with redundancy elimination.
pub fn minkowski_weighted(parts: &[(Polytope, Rational)]) -> Result<Polytope> {
    let Some((first, w0)) = parts.first() else {
        return Err(Error::Empty);
    };
    let d = first.ambient_dim();
    let mut acc: Vec<Vec<Rational>> =
        first.vertices().iter().map(|v| v.iter().map(|x| x * w0).collect()).collect();
    for (p, w) in &parts[1..] {
        if p.ambient_dim() != d {
            return Err(Error::DimensionMismatch { expected: (1, d), found: (1, p.ambient_dim()) });
        }
        let mut cand = Vec::with_capacity(acc.len() * p.vertices().len());
        for a in &acc {
            for v in p.vertices() {
                cand.push(a.iter().zip(v).map(|(x, y)| x + y * w).collect::<Vec<_>>());
            }
        }
        acc = Polytope::from_vertices(cand)?.vertices;
    }
    Polytope::from_vertices(acc)
}

/// Unweighted Minkowski sum.
pub fn minkowski_sum(parts: &[Polytope]) -> Result<Polytope> {
    let weighted: Vec<(Polytope, Rational)> =
        parts.iter().map(|p| (p.clone(), Rational::one())).collect();
    minkowski_weighted(&weighted)
}

fn affine_rank(points: &[&Vec<Rational>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(points[0].iter()).map(|(a, b)| a - b).collect())
        .collect();
    let cols = rows[0].len();
    RatMatrix::from_rows(&rows, cols).rank()
}

/// Face numbers from the vertex–facet incidences.
pub fn f_vector(p: &Polytope) -> FVector {
    let r = p.lattice_dim();
    let local: Vec<Vec<Rational>> = match p.chart() {
        Some(c) => p.vertices().iter().map(|v| c.to_local(v)).collect(),
        None => p.vertices().to_vec(),
    };
    let nf = p.num_facets();
    let facet_sets: Vec<BTreeSet<usize>> = (0..nf)
        .map(|j| (0..p.vertices().len()).filter(|&v| p.incidence[v].contains(&j)).collect())
        .collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<BTreeSet<usize>> = Vec::new();
    for f in &facet_sets {
        if seen.insert(f.iter().copied().collect()) {
            queue.push(f.clone());
        }
    }
    while let Some(face) = queue.pop() {
        for g in &facet_sets {
            let i: BTreeSet<usize> = face.intersection(g).copied().collect();
            if i.is_empty() || i.len() == face.len() {
                continue;
            }
            if seen.insert(i.iter().copied().collect()) {
                queue.push(i);
            }
        }
    }
    let mut counts = vec![0usize; r];
    for face in &seen {
        let pts: Vec<&Vec<Rational>> = face.iter().map(|&i| &local[i]).collect();
        let dim = affine_rank(&pts);
        if dim < r {
            counts[dim] += 1;
        }
    }
    FVector(counts)
}

/// `lcm` of vertex-coordinate denominators; 1 for lattice polytopes.
pub fn denominator(p: &Polytope) -> BigInt {
    p.vertices()
        .iter()
        .flatten()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}
