//! Chart assembly.
//!
//! Given Laurent polynomials `f_1, …, f_k` in `d` variables whose Newton
//! polytopes sum to a polytope `P` with `d + k` facets, the matrix
//! `M = (F; a_1; …; a_k)` is built from the ray matrix `F` of the normal fan
//! and the support vectors `a_i`. When `M` is unimodular, its inverse
//! `(B | K)` gives the parametrization `y_j = t^{B_j} ∏_i f_i^{-K_ji}` of the
//! affine variety cut out by `f_i^h(y) = 1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cone::Cone;
use crate::error::{Assumption, Error, Result};
use crate::exactla::{det, gale_dual, snf_invariants, unimodular_inverse, IntMatrix};
use crate::fan::{deformation_cone, deformation_violation, nef_cone, normal_fan, polytope_of, smooth_subcone, Fan};
use crate::groebner::{poly_gcd, Budget};
use crate::poly::{var_names, Poly};
use crate::polytope::{lattice_points, lattice_support_vector, minkowski_sum, minkowski_weighted, Polytope};
use crate::Rational;

/// A polynomial in the Cox ring with its class-group degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxPolynomial {
    pub poly: Poly,
    pub degree: Vec<BigInt>,
}

/// A section `f_i` with its Newton polytope, support vector and class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub poly: Poly,
    pub newton: Polytope,
    pub support: Vec<BigInt>,
    pub class: Vec<BigInt>,
}

/// `φ_j = t^{t_exponent} · ∏_i f_i^{-f_powers[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiComponent {
    pub t_exponent: Vec<BigInt>,
    pub f_powers: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveChart {
    fan: Fan,
    gale: IntMatrix,
    sections: Vec<Section>,
    m: IntMatrix,
    m_inv: IntMatrix,
    cox: Vec<CoxPolynomial>,
    phi: Vec<PhiComponent>,
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("exponent fits in i64")
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Sends `c t^m` to `c y^{F^t m + z}`; the degree is `K^t z`.
pub fn homogenize(f: &Poly, z: &[BigInt], rays: &IntMatrix, gale: &IntMatrix) -> Result<CoxPolynomial> {
    let n = rays.cols();
    let mut terms = Vec::with_capacity(f.len());
    for (ti, (m, c)) in f.terms().enumerate() {
        let e = rays.vec_mul(&big(m));
        let mut exp = Vec::with_capacity(n);
        for (j, (x, zj)) in e.iter().zip(z).enumerate() {
            let v = x + zj;
            if v.is_negative() {
                return Err(Error::NegativeExponent { term: ti, position: j });
            }
            exp.push(to_i64(&v));
        }
        terms.push((exp, c.clone()));
    }
    Ok(CoxPolynomial { poly: Poly::from_terms(n, terms), degree: gale.vec_mul(z) })
}

/// The all-ones section of the nef class `c`, translated so that the
/// lex-smallest vertex of its polytope is the origin.
pub fn section_from_class(fan: &Fan, gale: &IntMatrix, lift: &IntMatrix, c: &[BigInt]) -> Result<Section> {
    let z = lift.mul_vec(c);
    let rows = deformation_cone(fan)?;
    if let Some(v) = deformation_violation(&rows, &z) {
        return Err(Error::NotNef { violated: v });
    }
    let pz = polytope_of(fan, &z)?;
    let shift: Vec<Rational> = pz.vertices()[0].iter().map(|x| -x.clone()).collect();
    let newton = pz.translated(&shift)?;
    let support = lattice_support_vector(&newton, fan.rays())?;
    let d = fan.dim();
    let poly = Poly::from_terms(
        d,
        lattice_points(&newton).iter().map(|p| (p.iter().map(to_i64).collect(), Rational::one())),
    );
    let class = gale.vec_mul(&support);
    Ok(Section { poly, newton, support, class })
}

fn newton_polytope(f: &Poly) -> Result<Polytope> {
    if f.is_zero() {
        return Err(Error::Empty);
    }
    Polytope::from_vertices(
        f.exponents().map(|e| e.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect(),
    )
}

fn check_positivity(i: usize, f: &Poly) -> Result<()> {
    for (e, c) in f.terms() {
        if !c.is_positive() {
            return Err(Error::Assumption(Assumption::Positivity {
                section: i,
                detail: format!("coefficient {c} at exponent {e:?} is negative"),
            }));
        }
    }
    Ok(())
}

/// Builds the chart from sections whose Newton polytopes sum to a polytope
/// with `d + k` facets. With `ray_order`, the rays of `F` follow its columns;
/// otherwise they are in lexicographic order.
pub fn build_from_sections(polys: &[Poly], ray_order: Option<&IntMatrix>) -> Result<PositiveChart> {
    let Some(first) = polys.first() else {
        return Err(Error::Empty);
    };
    let d = first.nvars();
    let k = polys.len();
    for f in polys {
        if f.nvars() != d {
            return Err(Error::DimensionMismatch { expected: (1, d), found: (1, f.nvars()) });
        }
    }
    let newtons = polys.iter().map(newton_polytope).collect::<Result<Vec<_>>>()?;
    let p = minkowski_sum(&newtons)?;
    if !p.is_full_dimensional() || p.num_facets() != d + k {
        return Err(Error::Assumption(Assumption::FacetCount {
            dim: d,
            lattice_dim: p.lattice_dim(),
            facets: p.num_facets(),
            sections: k,
        }));
    }
    let mut fan = normal_fan(&p)?;
    if let Some(order) = ray_order {
        fan = fan.with_ray_order(order)?;
    }
    let supports = newtons
        .iter()
        .map(|q| lattice_support_vector(q, fan.rays()))
        .collect::<Result<Vec<_>>>()?;
    assemble(fan, polys, newtons, supports)
}

/// Builds a chart for a given fan and explicitly chosen support vectors,
/// rejecting supports that are not Cartier on the fan.
pub fn build_with_supports(fan: &Fan, sections: &[(Poly, Vec<BigInt>)]) -> Result<PositiveChart> {
    fan.require_simplicial()?;
    for (i, (f, a)) in sections.iter().enumerate() {
        if f.nvars() != fan.dim() || a.len() != fan.num_rays() {
            return Err(Error::DimensionMismatch { expected: (fan.dim(), fan.num_rays()), found: (f.nvars(), a.len()) });
        }
        for c in fan.maximal_cones() {
            if fan.cone_vertex(c, a).iter().any(|x| !x.is_integer()) {
                return Err(Error::NotCartier { section: i, cone: c.clone() });
            }
        }
    }
    let polys: Vec<Poly> = sections.iter().map(|(f, _)| f.clone()).collect();
    let newtons = polys.iter().map(newton_polytope).collect::<Result<Vec<_>>>()?;
    let supports = sections.iter().map(|(_, a)| a.clone()).collect();
    assemble(fan.clone(), &polys, newtons, supports)
}

fn assemble(fan: Fan, polys: &[Poly], newtons: Vec<Polytope>, supports: Vec<Vec<BigInt>>) -> Result<PositiveChart> {
    let d = fan.dim();
    let n = fan.num_rays();
    let k = polys.len();
    if n != d + k {
        return Err(Error::Assumption(Assumption::FacetCount { dim: d, lattice_dim: d, facets: n, sections: k }));
    }
    let a = IntMatrix::from_rows(&supports, n);
    let m = fan.rays().vstack(&a);
    let dm = det(&m);
    if !dm.abs().is_one() {
        return Err(Error::Assumption(Assumption::Unimodular { det: dm }));
    }
    for (i, f) in polys.iter().enumerate() {
        check_positivity(i, f)?;
    }
    let m_inv = unimodular_inverse(&m)?;
    let gale = gale_dual(fan.rays())?;
    let mut sections = Vec::with_capacity(k);
    let mut cox = Vec::with_capacity(k);
    for ((f, newton), support) in polys.iter().zip(newtons).zip(supports) {
        let h = homogenize(f, &support, fan.rays(), &gale)?;
        sections.push(Section { poly: f.clone(), newton, class: h.degree.clone(), support });
        cox.push(h);
    }
    let phi = (0..n)
        .map(|j| PhiComponent {
            t_exponent: (0..d).map(|l| m_inv[(j, l)].clone()).collect(),
            f_powers: (0..k).map(|i| m_inv[(j, d + i)].clone()).collect(),
        })
        .collect();
    Ok(PositiveChart { fan, gale, sections, m, m_inv, cox, phi })
}

/// Intermediate data of the construction starting from a smooth polytope.
#[derive(Clone, Debug)]
pub struct Construction {
    pub chart: PositiveChart,
    /// Integer `S` with `K^t S = I`, lifting classes to offset vectors.
    pub lift: IntMatrix,
    pub nef: Cone,
    pub subcone: Cone,
    /// Class of the input polytope.
    pub reference: Vec<BigInt>,
}

/// Chart of the toric variety of a smooth lattice polytope, with the
/// sections taken from a smooth subcone of the nef cone. A polytope that is
/// not full-dimensional is replaced by its model in affine-hull coordinates.
pub fn construct_from_polytope(p: &Polytope) -> Result<Construction> {
    let model = p.full_dimensional_model()?;
    let p = &model;
    let fan = normal_fan(p)?;
    let gale = gale_dual(fan.rays())?;
    fan.require_smooth()?;
    let ap = lattice_support_vector(p, fan.rays())?;
    let lift = snf_invariants(&gale.transpose())?
        .right_inverse
        .expect("a saturated kernel basis has a free cokernel");
    let reference = gale.vec_mul(&ap);
    let nef = nef_cone(&fan, &lift)?;
    let subcone = smooth_subcone(&nef, &reference);
    let polys = subcone
        .rays()
        .iter()
        .map(|c| section_from_class(&fan, &gale, &lift, c).map(|s| s.poly))
        .collect::<Result<Vec<_>>>()?;
    let chart = build_from_sections(&polys, Some(fan.rays()))?;
    Ok(Construction { chart, lift, nef, subcone, reference })
}

pub fn build_from_polytope(p: &Polytope) -> Result<PositiveChart> {
    construct_from_polytope(p).map(|c| c.chart)
}

impl PositiveChart {
    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn rays(&self) -> &IntMatrix {
        self.fan.rays()
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    pub fn num_rays(&self) -> usize {
        self.fan.num_rays()
    }

    pub fn num_sections(&self) -> usize {
        self.sections.len()
    }

    /// Canonical Gale dual of `F`; section classes are expressed in it.
    pub fn gale(&self) -> &IntMatrix {
        &self.gale
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn m(&self) -> &IntMatrix {
        &self.m
    }

    pub fn m_inv(&self) -> &IntMatrix {
        &self.m_inv
    }

    /// Support matrix `A` (k×n), the lower block of `M`.
    pub fn a(&self) -> IntMatrix {
        let d = self.dim();
        self.m.select_rows(&(d..self.num_rays()).collect::<Vec<_>>())
    }

    /// `B` (n×d), the left block of `M^{-1}`.
    pub fn b(&self) -> IntMatrix {
        self.m_inv.select_columns(&(0..self.dim()).collect::<Vec<_>>())
    }

    /// `K` (n×k), the right block of `M^{-1}`.
    pub fn k(&self) -> IntMatrix {
        self.m_inv.select_columns(&(self.dim()..self.num_rays()).collect::<Vec<_>>())
    }

    /// Homogenized sections `f_i^h`.
    pub fn cox_sections(&self) -> &[CoxPolynomial] {
        &self.cox
    }

    /// Generators `f_i^h - 1` of the ideal of the chart.
    pub fn ideal(&self) -> Vec<Poly> {
        self.cox.iter().map(|h| &h.poly - &Poly::one(self.num_rays())).collect()
    }

    /// Ideal generators as strings. Terms follow the ascending lex order of
    /// the section's exponents `m`, and the constant `-1` comes last.
    pub fn ideal_strings(&self) -> Vec<String> {
        let n = self.num_rays();
        let names = var_names("y", n);
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        let minus_one = -Rational::one();
        let zero = vec![0i64; n];
        self.sections
            .iter()
            .map(|sec| {
                let terms: Vec<(Vec<i64>, &Rational)> = sec
                    .poly
                    .terms()
                    .map(|(m, c)| {
                        let e = self.rays().vec_mul(&big(m));
                        (e.iter().zip(&sec.support).map(|(x, a)| to_i64(&(x + a))).collect(), c)
                    })
                    .collect();
                crate::poly::format_terms(
                    terms.iter().map(|(e, c)| (e.as_slice(), *c)).chain([(zero.as_slice(), &minus_one)]),
                    &names,
                )
            })
            .collect()
    }

    pub fn section_strings(&self) -> Vec<String> {
        let names = var_names("t", self.dim());
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        self.sections.iter().map(|s| s.poly.to_string_lex(&names)).collect()
    }

    pub fn phi(&self) -> &[PhiComponent] {
        &self.phi
    }

    /// Section values `f_i(t)`; fails on coordinate hyperplanes and poles.
    pub fn section_values(&self, t: &[Rational]) -> Result<Vec<Rational>> {
        if t.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: (1, self.dim()), found: (1, t.len()) });
        }
        if let Some(i) = t.iter().position(Zero::is_zero) {
            return Err(Error::OffTorus { index: i });
        }
        let mut out = Vec::with_capacity(self.num_sections());
        for (j, s) in self.sections.iter().enumerate() {
            let v = s.poly.eval(t).ok_or(Error::PoleAt { index: j })?;
            if v.is_zero() {
                return Err(Error::PoleAt { index: j });
            }
            out.push(v);
        }
        Ok(out)
    }

    /// `φ(t)`, exactly.
    pub fn phi_eval(&self, t: &[Rational]) -> Result<Vec<Rational>> {
        let fv = self.section_values(t)?;
        Ok(self
            .phi
            .iter()
            .map(|c| {
                let mut v = Rational::one();
                for (ti, e) in t.iter().zip(&c.t_exponent) {
                    v *= crate::poly::pow_rat(ti, to_i64(e));
                }
                for (fi, e) in fv.iter().zip(&c.f_powers) {
                    v *= crate::poly::pow_rat(fi, -to_i64(e));
                }
                v
            })
            .collect())
    }

    /// Whether the polynomial `p` in `y_1, …, y_n` vanishes identically on
    /// the image of `φ`.
    pub fn vanishes_on_phi(&self, p: &Poly) -> bool {
        let mut pw = Powers { sections: &self.sections, cache: BTreeMap::new() };
        cleared(self.dim(), &pullback_terms(self, p), &mut pw).0.is_zero()
    }

    /// `φ_j` as a fraction `numerator / denominator` of Laurent polynomials
    /// (not reduced).
    pub fn phi_fraction(&self, j: usize) -> (Poly, Poly) {
        let d = self.dim();
        let c = &self.phi[j];
        let pos: Vec<i64> = c.t_exponent.iter().map(|e| to_i64(e).max(0)).collect();
        let neg: Vec<i64> = c.t_exponent.iter().map(|e| (-to_i64(e)).max(0)).collect();
        let mut num = Poly::monomial(d, pos, Rational::one());
        let mut den = Poly::monomial(d, neg, Rational::one());
        for (s, e) in self.sections.iter().zip(&c.f_powers) {
            let e = to_i64(e);
            if e > 0 {
                den = &den * &s.poly.pow(e as u32);
            } else if e < 0 {
                num = &num * &s.poly.pow((-e) as u32);
            }
        }
        (num, den)
    }
}

/// Counts reported by [`verify_section_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub section_identities: usize,
    pub section_property: usize,
    pub product_monomials: usize,
}

/// Lazily computed powers of the sections.
struct Powers<'a> {
    sections: &'a [Section],
    cache: BTreeMap<(usize, u32), Poly>,
}

impl Powers<'_> {
    fn get(&mut self, i: usize, e: u32) -> Poly {
        if let Some(p) = self.cache.get(&(i, e)) {
            return p.clone();
        }
        let p = self.sections[i].poly.pow(e);
        self.cache.insert((i, e), p.clone());
        p
    }
}

/// Writes `Σ c t^β f^{-κ}` as `numerator / f^{κmax}` and returns both parts.
fn cleared(d: usize, terms: &[(Rational, Vec<BigInt>, Vec<BigInt>)], pw: &mut Powers<'_>) -> (Poly, Poly) {
    let k = pw.sections.len();
    let kmax: Vec<i64> = (0..k)
        .map(|j| terms.iter().map(|(_, _, kap)| to_i64(&kap[j])).max().unwrap_or(0).max(0))
        .collect();
    let mut num = Poly::zero(d);
    for (c, beta, kap) in terms {
        let mut p = Poly::monomial(d, beta.iter().map(to_i64).collect(), c.clone());
        for j in 0..k {
            let e = kmax[j] - to_i64(&kap[j]);
            if e > 0 {
                p = &p * &pw.get(j, e as u32);
            }
        }
        num = &num + &p;
    }
    let mut den = Poly::one(d);
    for (j, &e) in kmax.iter().enumerate() {
        if e > 0 {
            den = &den * &pw.get(j, e as u32);
        }
    }
    (num, den)
}

fn pullback_terms(chart: &PositiveChart, p: &Poly) -> Vec<(Rational, Vec<BigInt>, Vec<BigInt>)> {
    let b = chart.b();
    let kk = chart.k();
    p.terms()
        .map(|(e, c)| {
            let e = big(e);
            (c.clone(), b.vec_mul(&e), kk.vec_mul(&e))
        })
        .collect()
}

/// Symbolic checks: `f_i^h(φ(t)) = 1`, `φ_{F^t}(φ(t)) = t`, and that
/// `∏ f_i^h` avoids the base locus of the irrelevant ideal.
pub fn verify_section_identities(chart: &PositiveChart) -> Result<VerificationReport> {
    let d = chart.dim();
    let n = chart.num_rays();
    let k = chart.num_sections();
    let b = chart.b();
    let kk = chart.k();
    let mut pw = Powers { sections: &chart.sections, cache: BTreeMap::new() };
    for (i, h) in chart.cox.iter().enumerate() {
        let (num, den) = cleared(d, &pullback_terms(chart, &h.poly), &mut pw);
        if num != den {
            return Err(Error::IdentityFailed { identity: format!("f{}^h(phi(t)) = 1", i + 1) });
        }
    }
    let f = chart.rays();
    let fb = f * &b;
    let fk = f * &kk;
    for l in 0..d {
        let ok = (0..d).all(|j| fb[(l, j)] == if l == j { BigInt::one() } else { BigInt::zero() })
            && (0..k).all(|j| fk[(l, j)].is_zero());
        if !ok {
            return Err(Error::IdentityFailed { identity: format!("component {} of phi_F(phi(t)) = t", l + 1) });
        }
    }
    let gens = chart.fan.irrelevant_generators();
    let mut prod = Poly::one(n);
    for h in &chart.cox {
        prod = &prod * &h.poly;
    }
    for e in prod.exponents() {
        let covered = gens.iter().any(|g| g.iter().zip(e).all(|(gi, ei)| *gi == 0 || *ei > 0));
        if !covered {
            return Err(Error::IdentityFailed { identity: format!("monomial {e:?} of the product lies in no irrelevant generator") });
        }
    }
    Ok(VerificationReport { section_identities: k, section_property: d, product_monomials: prod.len() })
}

/// `Newt(φ)` as a translate of a weighted Minkowski sum of pairwise coprime
/// polynomial factors of the sections.
#[derive(Clone, Debug)]
pub struct NewtonDecomposition {
    pub translation: Vec<BigInt>,
    /// Factors with their total multiplicity over numerators and denominators.
    pub factors: Vec<(Poly, u64)>,
    pub polytope: Polytope,
}

fn drop_monomial_factor(p: &Poly) -> (Vec<i64>, Poly) {
    let m = p.min_exponent();
    let q = p.map_exponents(p.nvars(), |e| e.iter().zip(&m).map(|(a, b)| a - b).collect());
    (m, q)
}

/// Splits `a` and `b` along a nonconstant common factor, if they have one.
fn common_factor(a: &Poly, b: &Poly, budget: Budget) -> Result<Option<Poly>> {
    if a.len() <= b.len() {
        if b.div_exact(a).is_some() {
            return Ok(Some(a.clone()));
        }
    } else if a.div_exact(b).is_some() {
        return Ok(Some(b.clone()));
    }
    let g = poly_gcd(a, b, budget)?;
    Ok(if g.is_constant() { None } else { Some(g) })
}

pub fn newton_polytope_of_parametrization(chart: &PositiveChart, budget: Budget) -> Result<NewtonDecomposition> {
    let d = chart.dim();
    let k = chart.num_sections();
    // f_j = t^{shift_j} ∏_l basis_l^{rep_j[l]} up to a constant
    let mut basis: Vec<Option<Poly>> = Vec::new();
    let mut reps: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); k];
    let mut shifts: Vec<Vec<i64>> = Vec::with_capacity(k);
    for (j, s) in chart.sections.iter().enumerate() {
        let (m, q) = drop_monomial_factor(&s.poly);
        shifts.push(m);
        if !q.is_constant() {
            basis.push(Some(q));
            reps[j].insert(basis.len() - 1, 1);
        }
    }
    'refine: loop {
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let (Some(pa), Some(pb)) = (&basis[a], &basis[b]) else { continue };
                let Some(g) = common_factor(pa, pb, budget)? else { continue };
                let qa = pa.div_exact(&g).expect("common factor divides");
                let qb = pb.div_exact(&g).expect("common factor divides");
                let gi = basis.len();
                basis.push(Some(g));
                basis[a] = if qa.is_constant() { None } else { Some(qa) };
                basis[b] = if qb.is_constant() { None } else { Some(qb) };
                for rep in &mut reps {
                    let ea = rep.get(&a).copied().unwrap_or(0);
                    let eb = rep.get(&b).copied().unwrap_or(0);
                    if ea + eb != 0 {
                        *rep.entry(gi).or_insert(0) += ea + eb;
                    }
                    if basis[a].is_none() {
                        rep.remove(&a);
                    }
                    if basis[b].is_none() {
                        rep.remove(&b);
                    }
                }
                continue 'refine;
            }
        }
        break;
    }
    let mut translation = vec![0i64; d];
    let mut weights: BTreeMap<usize, i64> = BTreeMap::new();
    for c in &chart.phi {
        let kap: Vec<i64> = c.f_powers.iter().map(to_i64).collect();
        let mut gamma: Vec<i64> = c.t_exponent.iter().map(to_i64).collect();
        let mut e: BTreeMap<usize, i64> = BTreeMap::new();
        for j in 0..k {
            for (g, s) in gamma.iter_mut().zip(&shifts[j]) {
                *g -= kap[j] * s;
            }
            for (&l, &r) in &reps[j] {
                *e.entry(l).or_insert(0) -= kap[j] * r;
            }
        }
        for (t, g) in translation.iter_mut().zip(&gamma) {
            *t += g.abs();
        }
        for (l, x) in e {
            *weights.entry(l).or_insert(0) += x.abs();
        }
    }
    let mut factors = Vec::new();
    let mut parts = Vec::new();
    for (l, w) in weights {
        if w == 0 {
            continue;
        }
        let g = basis[l].clone().expect("live factor");
        parts.push((newton_polytope(&g)?, Rational::from_integer(BigInt::from(w))));
        factors.push((g, w as u64));
    }
    let origin = Polytope::from_vertices(vec![vec![Rational::zero(); d]])?;
    parts.push((origin, Rational::one()));
    let shift: Vec<Rational> = translation.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect();
    let polytope = minkowski_weighted(&parts)?.translated(&shift)?;
    let fan = normal_fan(&polytope)
        .and_then(|f| f.with_ray_order(chart.rays()))
        .map_err(|_| Error::IdentityFailed { identity: String::from("rays of the normal fan of Newt(phi)") })?;
    if fan.maximal_cones().iter().collect::<alloc::collections::BTreeSet<_>>()
        != chart.fan.maximal_cones().iter().collect::<alloc::collections::BTreeSet<_>>()
    {
        return Err(Error::IdentityFailed { identity: String::from("cones of the normal fan of Newt(phi)") });
    }
    Ok(NewtonDecomposition { translation: big(&translation), factors, polytope })
}
