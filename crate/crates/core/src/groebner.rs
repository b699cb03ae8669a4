//! Buchberger's algorithm over `Q` for desk-scale ideals.
//!
//! Coefficients are kept integral and primitive during the computation;
//! the final reduced basis is made monic over `Q`. Pairs are selected by
//! the sugar strategy and filtered with the Gebauer–Möller installation of
//! Buchberger's product and chain criteria.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::Cell;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Eliminates the first `e` variables: degrevlex on that block, ties
    /// broken by degrevlex on the remaining variables.
    Elimination(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs processed.
    pub max_pairs: usize,
    /// Terms held by a polynomial during reduction.
    pub max_terms: usize,
    /// Elementary reduction steps over the whole computation.
    pub max_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 200_000, max_terms: 100_000, max_steps: 50_000_000 }
    }
}

type Mono = Vec<u32>;

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination(e) => {
                degrevlex(&a[..e], &b[..e]).then_with(|| degrevlex(&a[e..], &b[e..]))
            }
        }
    }
}

/// Integer polynomial, terms sorted by decreasing monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IPoly {
    terms: Vec<(Mono, BigInt)>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm_mono(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn mono_deg(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

impl IPoly {
    fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }

    /// `a·self - b·x^shift·g`.
    fn combine(&self, a: &BigInt, b: &BigInt, shift: &[u32], g: &IPoly, order: MonomialOrder) -> IPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let shifted = g.terms.iter().map(|(m, c)| {
            (m.iter().zip(shift).map(|(x, y)| x + y).collect::<Mono>(), c)
        });
        let mut it1 = self.terms.iter().peekable();
        let mut it2 = shifted.peekable();
        loop {
            let ord = match (it1.peek(), it2.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((m1, _)), Some((m2, _))) => order.cmp(m1, m2),
            };
            match ord {
                Ordering::Greater => {
                    let (m, c) = it1.next().expect("peeked");
                    out.push((m.clone(), a * c));
                }
                Ordering::Less => {
                    let (m, c) = it2.next().expect("peeked");
                    out.push((m, -(b * c)));
                }
                Ordering::Equal => {
                    let (m, c1) = it1.next().expect("peeked");
                    let (_, c2) = it2.next().expect("peeked");
                    let v = a * c1 - b * c2;
                    if !v.is_zero() {
                        out.push((m.clone(), v));
                    }
                }
            }
        }
        IPoly { terms: out }
    }
}

fn to_ipoly(p: &Poly, order: MonomialOrder) -> Result<IPoly> {
    let den = p.terms().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
    let mut terms = Vec::with_capacity(p.len());
    for (ti, (e, c)) in p.terms().enumerate() {
        let mut m = Vec::with_capacity(e.len());
        for (pos, &x) in e.iter().enumerate() {
            if x < 0 {
                return Err(Error::NegativeExponent { term: ti, position: pos });
            }
            m.push(x as u32);
        }
        terms.push((m, (c * Rational::from_integer(den.clone())).to_integer()));
    }
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut ip = IPoly { terms };
    ip.make_primitive();
    Ok(ip)
}

fn to_poly(p: &IPoly, nvars: usize) -> Poly {
    let Some((_, lc)) = p.terms.first() else {
        return Poly::zero(nvars);
    };
    let lc = Rational::from_integer(lc.clone());
    Poly::from_terms(
        nvars,
        p.terms
            .iter()
            .map(|(m, c)| (m.iter().map(|&x| x as i64).collect(), Rational::from_integer(c.clone()) / &lc)),
    )
}

struct Reducer<'a> {
    order: MonomialOrder,
    basis: &'a [IPoly],
    active: &'a [usize],
    max_terms: usize,
    max_steps: usize,
    steps: &'a Cell<usize>,
}

impl Reducer<'_> {
    fn find_divisor(&self, m: &[u32]) -> Option<usize> {
        self.active.iter().copied().find(|&i| divides(self.basis[i].lm(), m))
    }

    /// Full reduction; returns the remainder and the rational factor `s`
    /// with `remainder = s · (p - Σ q_i g_i)`.
    fn reduce(&self, p: &IPoly, full: bool) -> Result<(IPoly, Rational)> {
        let mut p = p.clone();
        let mut rem: Vec<(Mono, BigInt)> = Vec::new();
        let mut scale = Rational::one();
        let mut steps = 0usize;
        while !p.is_zero() {
            if self.steps.get() >= self.max_steps {
                return Err(Error::ResourceLimit { what: "reduction steps", limit: self.max_steps });
            }
            let (m, c) = (p.terms[0].0.clone(), p.terms[0].1.clone());
            match self.find_divisor(&m) {
                Some(i) => {
                    let g = &self.basis[i];
                    let shift: Mono = m.iter().zip(g.lm()).map(|(x, y)| x - y).collect();
                    let gg = c.gcd(g.lc());
                    let a = g.lc() / &gg;
                    let b = &c / &gg;
                    p = p.combine(&a, &b, &shift, g, self.order);
                    if !a.is_one() {
                        for (_, rc) in &mut rem {
                            *rc = &*rc * &a;
                        }
                        scale *= Rational::from_integer(a.clone());
                    }
                    steps += 1;
                    self.steps.set(self.steps.get() + 1);
                    if steps.is_multiple_of(16) {
                        // divide out common content of remainder and tail
                        let mut g2 = BigInt::zero();
                        for (_, x) in rem.iter().chain(p.terms.iter()) {
                            g2 = g2.gcd(x);
                            if g2.is_one() {
                                break;
                            }
                        }
                        if !g2.is_zero() && !g2.is_one() {
                            for (_, x) in rem.iter_mut().chain(p.terms.iter_mut()) {
                                *x = &*x / &g2;
                            }
                            scale /= Rational::from_integer(g2);
                        }
                    }
                    if p.terms.len() + rem.len() > self.max_terms {
                        return Err(Error::ResourceLimit { what: "polynomial terms", limit: self.max_terms });
                    }
                }
                None => {
                    if !full {
                        rem.extend(p.terms);
                        return Ok((IPoly { terms: rem }, scale));
                    }
                    rem.push(p.terms.remove(0));
                }
            }
        }
        Ok((IPoly { terms: rem }, scale))
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u64,
}

/// A reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    internal: Vec<IPoly>,
    polys: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Monic generators ordered by decreasing leading monomial.
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        self.internal.iter().map(|p| p.lm().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.internal.iter().any(|p| p.lm().iter().all(|&x| x == 0))
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        let ip = to_ipoly(f, self.order)?;
        // to_ipoly rescaled f to a primitive integer polynomial; recover the factor
        let factor = if ip.is_zero() {
            Rational::one()
        } else {
            let (m0, c0) = &ip.terms[0];
            let e: Vec<i64> = m0.iter().map(|&x| x as i64).collect();
            Rational::from_integer(c0.clone()) / f.coeff(&e)
        };
        let active: Vec<usize> = (0..self.internal.len()).collect();
        let counter = Cell::new(0);
        let r = Reducer { order: self.order, basis: &self.internal, active: &active, max_terms: usize::MAX, max_steps: usize::MAX, steps: &counter };
        let (rem, scale) = r.reduce(&ip, true)?;
        let s = scale * factor;
        Ok(Poly::from_terms(
            self.nvars,
            rem.terms.iter().map(|(m, c)| {
                (m.iter().map(|&x| x as i64).collect(), Rational::from_integer(c.clone()) / &s)
            }),
        ))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` (polynomials in
/// `nvars` variables with nonnegative exponents).
pub fn groebner_basis(nvars: usize, gens: &[Poly], order: MonomialOrder, budget: Budget) -> Result<GroebnerBasis> {
    let mut basis: Vec<IPoly> = Vec::new();
    let mut sugar: Vec<u64> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0usize;
    let steps = Cell::new(0usize);

    let mut input: Vec<IPoly> = Vec::new();
    for g in gens {
        assert_eq!(g.nvars(), nvars);
        let ip = to_ipoly(g, order)?;
        if !ip.is_zero() {
            input.push(ip);
        }
    }
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    let mut queue: Vec<(IPoly, u64)> = input
        .into_iter()
        .map(|p| {
            let s = p.terms.iter().map(|(m, _)| mono_deg(m)).max().unwrap_or(0);
            (p, s)
        })
        .collect();
    queue.reverse();

    loop {
        let (h, hs) = if let Some(item) = queue.pop() {
            item
        } else {
            if pairs.is_empty() {
                break;
            }
            // sugar strategy with the order on lcm as tie-break
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    pairs[a]
                        .sugar
                        .cmp(&pairs[b].sugar)
                        .then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
                })
                .expect("nonempty");
            let pr = pairs.swap_remove(best);
            processed += 1;
            if processed > budget.max_pairs {
                return Err(Error::ResourceLimit { what: "s-pairs", limit: budget.max_pairs });
            }
            let (gi, gj) = (&basis[pr.i], &basis[pr.j]);
            let si: Mono = pr.lcm.iter().zip(gi.lm()).map(|(x, y)| x - y).collect();
            let sj: Mono = pr.lcm.iter().zip(gj.lm()).map(|(x, y)| x - y).collect();
            let g = gi.lc().gcd(gj.lc());
            let a = gj.lc() / &g;
            let b = gi.lc() / &g;
            let left = IPoly {
                terms: gi.terms.iter().map(|(m, c)| (m.iter().zip(&si).map(|(x, y)| x + y).collect(), c.clone())).collect(),
            };
            let s = left.combine(&a, &b, &sj, gj, order);
            (s, pr.sugar)
        };
        let red = Reducer { order, basis: &basis, active: &active, max_terms: budget.max_terms, max_steps: budget.max_steps, steps: &steps };
        let (mut r, _) = red.reduce(&h, true)?;
        if r.is_zero() {
            continue;
        }
        r.make_primitive();
        let idx = basis.len();
        basis.push(r);
        sugar.push(hs);
        update(&basis, &sugar, &mut active, &mut pairs, idx);
    }

    // reduced basis: minimal leading terms, fully interreduced
    let mut minimal: Vec<usize> = active.clone();
    minimal.sort_by(|&a, &b| order.cmp(basis[b].lm(), basis[a].lm()));
    let mut out: Vec<IPoly> = Vec::new();
    for (pos, &i) in minimal.iter().enumerate() {
        let others: Vec<usize> = minimal.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, &j)| j).collect();
        let red = Reducer { order, basis: &basis, active: &others, max_terms: budget.max_terms, max_steps: budget.max_steps, steps: &steps };
        let head = IPoly { terms: vec![basis[i].terms[0].clone()] };
        let tail = IPoly { terms: basis[i].terms[1..].to_vec() };
        let (rt, scale) = red.reduce(&tail, true)?;
        // head scaled consistently: (lc·s) x^lm + rt
        let mut terms = Vec::with_capacity(rt.terms.len() + 1);
        let hc = Rational::from_integer(head.terms[0].1.clone()) * &scale;
        let den = hc.denom().clone();
        let mut hnum = hc.numer().clone();
        let mut rest: Vec<(Mono, BigInt)> = rt.terms.into_iter().map(|(m, c)| (m, c * &den)).collect();
        if den.is_zero() {
            hnum = BigInt::one();
            rest.clear();
        }
        terms.push((head.terms[0].0.clone(), hnum));
        terms.append(&mut rest);
        let mut p = IPoly { terms };
        p.make_primitive();
        out.push(p);
    }
    let polys = out.iter().map(|p| to_poly(p, nvars)).collect();
    Ok(GroebnerBasis { nvars, order, internal: out, polys })
}

/// Gebauer–Möller pair update after adding `basis[h]`.
fn update(basis: &[IPoly], sugar: &[u64], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = basis[h].lm().clone();
    let pair_sugar = |i: usize, lcm: &Mono| -> u64 {
        let a = sugar[i] - mono_deg(basis[i].lm()).min(sugar[i]);
        let b = sugar[h] - mono_deg(&lh).min(sugar[h]);
        a.max(b) + mono_deg(lcm)
    };
    let mut c: Vec<(usize, Mono)> = active.iter().map(|&g| (g, lcm_mono(&lh, basis[g].lm()))).collect();
    let mut d: Vec<(usize, Mono)> = Vec::new();
    while let Some((g1, l1)) = c.pop() {
        let keep = coprime(&lh, basis[g1].lm())
            || (!c.iter().any(|(_, l2)| divides(l2, &l1)) && !d.iter().any(|(_, l2)| divides(l2, &l1)));
        if keep {
            d.push((g1, l1));
        }
    }
    let e: Vec<(usize, Mono)> = d.into_iter().filter(|(g, _)| !coprime(&lh, basis[*g].lm())).collect();
    pairs.retain(|p| {
        !(divides(&lh, &p.lcm)
            && lcm_mono(basis[p.i].lm(), &lh) != p.lcm
            && lcm_mono(basis[p.j].lm(), &lh) != p.lcm)
    });
    for (g, l) in e {
        let s = pair_sugar(g, &l);
        pairs.push(Pair { i: g, j: h, lcm: l, sugar: s });
    }
    active.retain(|&g| !divides(&lh, basis[g].lm()));
    active.push(h);
}

/// `I : m^∞` via elimination of an auxiliary variable `w` from `I + <1 - w·m>`.
pub fn saturate(nvars: usize, gens: &[Poly], m: &[i64], budget: Budget) -> Result<GroebnerBasis> {
    let ext: Vec<Poly> = gens
        .iter()
        .map(|g| g.map_exponents(nvars + 1, |e| core::iter::once(0).chain(e.iter().copied()).collect()))
        .chain(core::iter::once({
            let mut e = vec![1i64];
            e.extend_from_slice(m);
            &Poly::one(nvars + 1) - &Poly::monomial(nvars + 1, e, Rational::one())
        }))
        .collect();
    let gb = groebner_basis(nvars + 1, &ext, MonomialOrder::Elimination(1), budget)?;
    let kept: Vec<Poly> = gb
        .polys()
        .iter()
        .filter(|p| p.exponents().all(|e| e[0] == 0))
        .map(|p| p.map_exponents(nvars, |e| e[1..].to_vec()))
        .collect();
    groebner_basis(nvars, &kept, MonomialOrder::DegRevLex, budget)
}

/// Equality of ideals by mutual membership of generators.
pub fn ideal_equal(nvars: usize, a: &[Poly], b: &[Poly], budget: Budget) -> Result<bool> {
    let ga = groebner_basis(nvars, a, MonomialOrder::DegRevLex, budget)?;
    let gb = groebner_basis(nvars, b, MonomialOrder::DegRevLex, budget)?;
    for f in b {
        if !ga.contains(f)? {
            return Ok(false);
        }
    }
    for f in a {
        if !gb.contains(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension and degree of `V(I) ⊆ C^n`, read from the Hilbert series of
/// the leading-term ideal under degrevlex. `None` for the unit ideal.
pub fn affine_dim_degree(nvars: usize, gens: &[Poly], budget: Budget) -> Result<Option<(usize, BigInt)>> {
    let gb = groebner_basis(nvars, gens, MonomialOrder::DegRevLex, budget)?;
    Ok(dim_degree_of_basis(&gb))
}

pub fn dim_degree_of_basis(gb: &GroebnerBasis) -> Option<(usize, BigInt)> {
    if gb.is_unit() {
        return None;
    }
    let n = gb.nvars();
    let num = hilbert_numerator(gb.leading_monomials());
    let (ord, h) = divide_out_one_minus_z(num);
    let degree = h.iter().fold(BigInt::zero(), |a, b| a + b);
    Some((n - ord, degree))
}

/// Numerator `N(z)` of the Hilbert series `N(z)/(1-z)^n` of `S/<gens>`.
pub fn hilbert_numerator(gens: Vec<Vec<u32>>) -> Vec<BigInt> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    // pairwise coprime generators: product of (1 - z^deg)
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| coprime(a, b)));
    if pairwise_coprime {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            acc = poly_mul(&acc, &one_minus_z_pow(mono_deg(g) as usize));
        }
        return acc;
    }
    let mut rest = gens.clone();
    let last = rest.pop().expect("nonempty");
    let colon: Vec<Vec<u32>> = rest.iter().map(|g| g.iter().zip(&last).map(|(a, b)| a.saturating_sub(*b)).collect()).collect();
    let a = hilbert_numerator(rest);
    let b = hilbert_numerator(colon);
    let shift = mono_deg(&last) as usize;
    let mut out = a;
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.into_iter().enumerate() {
        out[i + shift] -= c;
    }
    while out.len() > 1 && out.last().is_some_and(|x| x.is_zero()) {
        out.pop();
    }
    out
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| mono_deg(g));
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn one_minus_z_pow(d: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d + 1];
    v[0] += 1;
    v[d] -= 1;
    v
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Writes `N(z) = (1-z)^r h(z)` with `h(1) != 0`; returns `(r, h)`.
fn divide_out_one_minus_z(mut n: Vec<BigInt>) -> (usize, Vec<BigInt>) {
    let mut r = 0;
    loop {
        let at_one = n.iter().fold(BigInt::zero(), |a, b| a + b);
        if !at_one.is_zero() || n.iter().all(|x| x.is_zero()) {
            return (r, n);
        }
        // synthetic division by (1 - z): q_i = Σ_{j<=i} n_j
        let mut q = Vec::with_capacity(n.len() - 1);
        let mut acc = BigInt::zero();
        for c in &n[..n.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        n = q;
        r += 1;
    }
}

/// Greatest common divisor of two polynomials (nonnegative exponents),
/// normalized to be monic in lex order; computed from the generator of
/// `<f> ∩ <g>`.
pub fn poly_gcd(f: &Poly, g: &Poly, budget: Budget) -> Result<Poly> {
    let n = f.nvars();
    let lift = |p: &Poly, w: i64| {
        p.map_exponents(n + 1, move |e| core::iter::once(w).chain(e.iter().copied()).collect())
    };
    let wf = lift(f, 1);
    let g0 = lift(g, 0);
    let g1 = lift(g, 1);
    let gens = [wf, &g0 - &g1];
    let gb = groebner_basis(n + 1, &gens, MonomialOrder::Elimination(1), budget)?;
    let lcm = gb
        .polys()
        .iter()
        .filter(|p| p.exponents().all(|e| e[0] == 0))
        .map(|p| p.map_exponents(n, |e| e[1..].to_vec()))
        .min_by_key(|p| p.total_degree())
        .expect("intersection of principal ideals is principal and nonzero");
    let prod = f * g;
    let q = prod.div_exact(&lcm).expect("lcm divides the product");
    let lead = q.terms().last().map(|(_, c)| c.clone()).expect("nonzero gcd");
    Ok(q.scale(&lead.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, names: &[&str]) -> Poly {
        Poly::parse(s, names).unwrap()
    }

    #[test]
    fn linear_ideal_is_its_own_basis() {
        let y = ["y1", "y2", "y3", "y4"];
        let gens = [p("y1 + y3 - 1", &y), p("y2 + y4 - 1", &y)];
        let gb = groebner_basis(4, &gens, MonomialOrder::DegRevLex, Budget::default()).unwrap();
        assert_eq!(gb.polys().len(), 2);
        assert_eq!(affine_dim_degree(4, &gens, Budget::default()).unwrap(), Some((2, BigInt::from(1))));
    }

    #[test]
    fn hand_computed_basis() {
        let v = ["x", "y"];
        let gens = [p("x^2 - y", &v), p("x^3", &v)];
        let gb = groebner_basis(2, &gens, MonomialOrder::DegRevLex, Budget::default()).unwrap();
        assert!(gb.polys().contains(&p("x*y", &v)));
        assert!(gb.polys().contains(&p("y^2", &v)));
        assert!(gb.contains(&p("x*y", &v)).unwrap());
        assert!(!gb.contains(&p("y", &v)).unwrap());
        // zero-dimensional: degree counts standard monomials 1, x, y
        assert_eq!(dim_degree_of_basis(&gb), Some((0, BigInt::from(3))));
    }

    #[test]
    fn normal_form_is_exact() {
        let v = ["x", "y"];
        let gb = groebner_basis(2, &[p("2*x - 3", &v)], MonomialOrder::Lex, Budget::default()).unwrap();
        assert_eq!(gb.normal_form(&p("x^2 + y", &v)).unwrap(), p("y + 9/4", &v));
    }

    #[test]
    fn saturation_examples() {
        let v = ["y1", "y2"];
        let s = saturate(2, &[p("y1", &v)], &[1, 0], Budget::default()).unwrap();
        assert!(s.is_unit());
        let s = saturate(2, &[p("y1*y2", &v)], &[1, 0], Budget::default()).unwrap();
        assert_eq!(s.polys(), &[p("y2", &v)]);
    }

    #[test]
    fn ideal_equality() {
        let v = ["x", "y"];
        assert!(ideal_equal(2, &[p("x", &v), p("y", &v)], &[p("x + y", &v), p("y", &v)], Budget::default()).unwrap());
        assert!(!ideal_equal(2, &[p("x", &v)], &[p("x + y", &v)], Budget::default()).unwrap());
    }

    #[test]
    fn gcd_of_products() {
        let t = ["t1", "t2"];
        let a = p("(1+t1)^2*(1+t2)", &t);
        let b = p("(1+t1)*(1+t2+t1*t2)", &t);
        assert_eq!(poly_gcd(&a, &b, Budget::default()).unwrap(), p("t1 + 1", &t));
        let c = p("1 + t2 + t1*t2", &t);
        assert!(poly_gcd(&a, &c, Budget::default()).unwrap().is_constant());
    }

    #[test]
    fn budget_is_enforced() {
        let v = ["x", "y", "z"];
        let gens = [p("x^2*y - z", &v), p("x*y^2 - x", &v), p("y*z^2 - 1", &v)];
        let tiny = Budget { max_pairs: 0, ..Budget::default() };
        assert!(matches!(
            groebner_basis(3, &gens, MonomialOrder::DegRevLex, tiny),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
