//! Complete simplicial fans, deformation and nef cones, smooth subcones.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exactla::{det, dot, hnf, primitive_from_rational, IntMatrix, RatMatrix};
use crate::polytope::Polytope;
use crate::Rational;

/// A fan given by its ray matrix (columns) and maximal cones (sorted index sets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rays: IntMatrix,
    cones: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FanProperties {
    pub simplicial: bool,
    pub smooth: bool,
}

impl Fan {
    pub fn new(rays: IntMatrix, mut cones: Vec<Vec<usize>>) -> Fan {
        for c in &mut cones {
            c.sort_unstable();
        }
        Fan { rays, cones }
    }

    pub fn dim(&self) -> usize {
        self.rays.rows()
    }

    pub fn num_rays(&self) -> usize {
        self.rays.cols()
    }

    /// Ray matrix `F` (d×n).
    pub fn rays(&self) -> &IntMatrix {
        &self.rays
    }

    pub fn ray(&self, j: usize) -> Vec<BigInt> {
        self.rays.column(j)
    }

    /// Maximal cones; for normal fans, cone `i` belongs to vertex `i`.
    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    /// Relabels the rays to follow the columns of `order`.
    pub fn with_ray_order(&self, order: &IntMatrix) -> Result<Fan> {
        if order.rows() != self.dim() || order.cols() != self.num_rays() {
            return Err(Error::RayMismatch);
        }
        let mut perm = vec![usize::MAX; self.num_rays()];
        for j in 0..self.num_rays() {
            let r = self.ray(j);
            let Some(new) = (0..order.cols()).find(|&i| order.column(i) == r) else {
                return Err(Error::RayMismatch);
            };
            perm[j] = new;
        }
        let cones = self.cones.iter().map(|c| c.iter().map(|&j| perm[j]).collect()).collect();
        Ok(Fan::new(order.clone(), cones))
    }

    pub fn properties(&self) -> FanProperties {
        let d = self.dim();
        let simplicial = self.cones.iter().all(|c| {
            c.len() == d && crate::exactla::rank(&self.rays.select_columns(c)) == d
        });
        let smooth = simplicial
            && self.cones.iter().all(|c| det(&self.rays.select_columns(c)).abs().is_one());
        FanProperties { simplicial, smooth }
    }

    pub fn require_simplicial(&self) -> Result<()> {
        let d = self.dim();
        for c in &self.cones {
            if c.len() != d || crate::exactla::rank(&self.rays.select_columns(c)) != d {
                return Err(Error::NotSimplicial { cone: c.clone() });
            }
        }
        Ok(())
    }

    /// Fails with [`Error::NotSmoothFan`] naming the first singular cone.
    pub fn require_smooth(&self) -> Result<()> {
        self.require_simplicial()?;
        for (v, c) in self.cones.iter().enumerate() {
            let dt = det(&self.rays.select_columns(c)).abs();
            if !dt.is_one() {
                return Err(Error::NotSmoothFan { vertex: v, cone: c.clone(), det: dt });
            }
        }
        Ok(())
    }

    /// Generators `y^σ̂` of the irrelevant ideal, one per maximal cone.
    pub fn irrelevant_generators(&self) -> Vec<Vec<i64>> {
        self.cones
            .iter()
            .map(|c| (0..self.num_rays()).map(|j| if c.contains(&j) { 0 } else { 1 }).collect())
            .collect()
    }

    /// Vertex `m_σ(z) = -(F_σ^t)^{-1} z_σ` of `P_z` belonging to cone `c`.
    pub fn cone_vertex(&self, c: &[usize], z: &[BigInt]) -> Vec<Rational> {
        let ft = self.rays.select_columns(c).transpose().to_rational();
        let rhs: Vec<Rational> = c.iter().map(|&j| -Rational::from_integer(z[j].clone())).collect();
        ft.solve(&rhs).expect("simplicial cone")
    }

    /// Evaluates `F^t m + z`.
    pub fn slack(&self, m: &[Rational], z: &[BigInt]) -> Vec<Rational> {
        (0..self.num_rays())
            .map(|j| {
                let u = self.rays.column(j);
                u.iter().zip(m).fold(Rational::from_integer(z[j].clone()), |acc, (a, b)| {
                    acc + Rational::from_integer(a.clone()) * b
                })
            })
            .collect()
    }
}

/// Normal fan with rays in lexicographic order.
pub fn normal_fan(p: &Polytope) -> Result<Fan> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: p.lattice_dim(), ambient: p.ambient_dim() });
    }
    // facet normals are inner normals, exactly the rays of the normal fan
    Ok(Fan::new(p.normals().clone(), p.incidence().to_vec()))
}

/// Inequalities `a·z >= 0` (rows, length n) cutting out the deformation cone.
/// One row per maximal cone and ray outside it; duplicates are kept.
pub fn deformation_cone(fan: &Fan) -> Result<Vec<Vec<BigInt>>> {
    fan.require_simplicial()?;
    let n = fan.num_rays();
    let mut rows = Vec::new();
    for c in fan.maximal_cones() {
        let fs = fan.rays().select_columns(c).to_rational();
        for j in 0..n {
            if c.contains(&j) {
                continue;
            }
            let u: Vec<Rational> =
                fan.ray(j).into_iter().map(Rational::from_integer).collect();
            let lambda = fs.solve(&u).expect("simplicial cone");
            let mut row = vec![Rational::zero(); n];
            row[j] = Rational::one();
            for (pos, &i) in c.iter().enumerate() {
                row[i] = -lambda[pos].clone();
            }
            rows.push(primitive_from_rational(&row));
        }
    }
    Ok(rows)
}

/// First violated deformation inequality at `z`, if any.
pub fn deformation_violation(rows: &[Vec<BigInt>], z: &[BigInt]) -> Option<usize> {
    rows.iter().position(|a| dot(a, z).is_negative())
}

/// Nef cone in class coordinates `c`, where `z = S c` lifts a class and
/// `K^t S = I`.
pub fn nef_cone(fan: &Fan, s: &IntMatrix) -> Result<Cone> {
    let rows = deformation_cone(fan)?;
    let k = s.cols();
    let mut sub: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|a| crate::exactla::primitive(&s.vec_mul(a)))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    sub.sort();
    sub.dedup();
    Cone::from_inequalities(k, &sub)
}

/// A full-dimensional smooth simplicial subcone of `n` whose closure contains
/// the triangulation cell holding `reference`.
pub fn smooth_subcone(n: &Cone, reference: &[BigInt]) -> Cone {
    let rays = n.rays();
    let cells = placing_triangulation(rays);
    let k = n.dim();
    let cell = cells
        .iter()
        .find(|c| coefficients(rays, c, reference).iter().all(|x| !x.is_negative()))
        .cloned()
        .unwrap_or_else(|| cells[0].clone());
    let mut current: Vec<Vec<BigInt>> = cell.iter().map(|&i| rays[i].clone()).collect();
    loop {
        let m = IntMatrix::from_columns(&current, k);
        let mult = det(&m).abs();
        if mult.is_one() {
            break;
        }
        let (p, lambda) = parallelepiped_point(&current);
        let mut chosen = None;
        for i in 0..k {
            if !lambda[i].is_positive() {
                continue;
            }
            let mut cand = current.clone();
            cand[i] = p.clone();
            let c = solve_cols(&cand, reference);
            if c.iter().all(|x| !x.is_negative()) {
                chosen = Some(cand);
                break;
            }
        }
        current = chosen.expect("stellar subdivision covers the cell");
        debug_assert!(det(&IntMatrix::from_columns(&current, k)).abs() < mult);
    }
    Cone::simplicial(current).expect("full-dimensional simplicial cone")
}

fn solve_cols(cols: &[Vec<BigInt>], x: &[BigInt]) -> Vec<Rational> {
    let k = x.len();
    let m = IntMatrix::from_columns(cols, k).to_rational();
    let rhs: Vec<Rational> = x.iter().map(|v| Rational::from_integer(v.clone())).collect();
    m.solve(&rhs).expect("nonsingular cone")
}

/// Coefficients of `x` in the basis of the cell's rays (cell spans the space).
fn coefficients(rays: &[Vec<BigInt>], cell: &[usize], x: &[BigInt]) -> Vec<Rational> {
    let cols: Vec<Vec<BigInt>> = cell.iter().map(|&i| rays[i].clone()).collect();
    solve_cols(&cols, x)
}

/// Least-squares-free solve of `A λ = b` for a consistent system whose
/// columns are independent.
fn solve_in_span(cols: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<Rational>> {
    let dim = b.len();
    let s = cols.len();
    let mut aug = RatMatrix::zeros(dim, s + 1);
    for (j, c) in cols.iter().enumerate() {
        for i in 0..dim {
            aug[(i, j)] = Rational::from_integer(c[i].clone());
        }
    }
    for i in 0..dim {
        aug[(i, s)] = Rational::from_integer(b[i].clone());
    }
    let piv = aug.rref();
    if piv.contains(&s) {
        return None;
    }
    let mut x = vec![Rational::zero(); s];
    for (r, &p) in piv.iter().enumerate() {
        x[p] = aug[(r, s)].clone();
    }
    Some(x)
}

/// Placing triangulation of the cone over `rays`, processed in input order.
fn placing_triangulation(rays: &[Vec<BigInt>]) -> Vec<Vec<usize>> {
    let mut cells: Vec<Vec<usize>> = vec![vec![0]];
    for r in 1..rays.len() {
        let basis: Vec<Vec<BigInt>> = cells[0].iter().map(|&i| rays[i].clone()).collect();
        let in_span = {
            // span of the current cone equals span of any cell
            solve_in_span(&basis, &rays[r]).is_some()
        };
        if !in_span {
            for c in &mut cells {
                c.push(r);
            }
            continue;
        }
        let mut facet_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in &cells {
            for q in 0..c.len() {
                let mut f = c.clone();
                f.remove(q);
                *facet_count.entry(f).or_insert(0) += 1;
            }
        }
        let mut new_cells = Vec::new();
        for c in &cells {
            let cols: Vec<Vec<BigInt>> = c.iter().map(|&i| rays[i].clone()).collect();
            let lambda = solve_in_span(&cols, &rays[r]).expect("ray in span");
            for q in 0..c.len() {
                let mut f = c.clone();
                f.remove(q);
                if facet_count[&f] == 1 && lambda[q].is_negative() {
                    f.push(r);
                    new_cells.push(f);
                }
            }
        }
        cells.extend(new_cells);
    }
    for c in &mut cells {
        c.sort_unstable();
    }
    cells
}

/// Nonzero lattice point `Σ λ_i r_i` with `0 <= λ_i < 1` minimizing `Σ λ_i`
/// (lexicographic tie-break on `λ`).
fn parallelepiped_point(cols: &[Vec<BigInt>]) -> (Vec<BigInt>, Vec<Rational>) {
    let k = cols.len();
    let m = IntMatrix::from_columns(cols, k);
    // rows of m^t generate the sublattice; its HNF gives a box of coset reps
    let (h, _) = hnf(&m.transpose());
    let diag: Vec<BigInt> = (0..k).map(|i| h[(i, i)].clone()).collect();
    let inv = m.to_rational().inverse().expect("nonsingular");
    let mut best: Option<(Rational, Vec<Rational>, Vec<BigInt>)> = None;
    let mut x = vec![BigInt::zero(); k];
    loop {
        let xr: Vec<Rational> = x.iter().map(|v| Rational::from_integer(v.clone())).collect();
        let lambda: Vec<Rational> = inv.mul_vec(&xr).into_iter().map(|l| &l - l.floor()).collect();
        if lambda.iter().any(|l| !l.is_zero()) {
            let sum = lambda.iter().fold(Rational::zero(), |a, b| a + b);
            let better = match &best {
                None => true,
                Some((bs, bl, _)) => sum < *bs || (sum == *bs && lambda < *bl),
            };
            if better {
                let lam_r: Vec<Rational> = lambda.clone();
                let p: Vec<BigInt> = (0..k)
                    .map(|i| {
                        (0..k)
                            .fold(Rational::zero(), |acc, j| {
                                acc + &lam_r[j] * Rational::from_integer(cols[j][i].clone())
                            })
                            .to_integer()
                    })
                    .collect();
                best = Some((sum, lambda, p));
            }
        }
        // odometer over the box ∏ [0, diag_i)
        let mut i = 0;
        loop {
            if i == k {
                let (_, l, p) = best.expect("multiplicity > 1 gives a nonzero point");
                return (p, l);
            }
            x[i] += 1;
            if x[i] < diag[i] {
                break;
            }
            x[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// Lattice points of `P_z` computed through the fan (for nef `z`).
pub fn polytope_of(fan: &Fan, z: &[BigInt]) -> Result<Polytope> {
    let verts: Vec<Vec<Rational>> =
        fan.maximal_cones().iter().map(|c| fan.cone_vertex(c, z)).collect();
    Polytope::from_vertices(verts)
}
