//! Invariant suite run by `poschart verify`.

use std::collections::BTreeSet;

use poschart_core::chart::{verify_section_identities, PositiveChart};
use poschart_core::exactla::IntMatrix;
use poschart_core::fan::polytope_of;
use poschart_core::moment::{moment_eval, moment_eval_torus, plane_coordinates};
use poschart_core::polytope::support_vector;
use poschart_core::{BigInt, Error, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::AppError;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub plane_samples: usize,
    pub injectivity_samples: usize,
    pub tightness_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, plane_samples: 100, injectivity_samples: 50, tightness_samples: 50 }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub section_identities: usize,
    pub section_property: usize,
    pub product_monomials: usize,
    pub block_identities: bool,
    pub homogenization_nonnegative: bool,
    pub plane_checks: usize,
    pub torus_route_checks: usize,
    pub injectivity_distinct: usize,
    pub tightness_checks: usize,
    pub ok: bool,
}

fn random_rational(rng: &mut ChaCha8Rng, positive: bool) -> Rational {
    let n: i64 = rng.gen_range(1..=60);
    let d: i64 = rng.gen_range(1..=40);
    let sign = if positive || rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::new(BigInt::from(sign * n), BigInt::from(d))
}

fn identity(n: usize) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
    IntMatrix::from_rows(&rows, n)
}

/// `M · M^{-1} = I` read blockwise: `F B = I`, `F K = 0`, `A B = 0`, `A K = I`.
pub fn block_identities(chart: &PositiveChart) -> bool {
    let n = chart.num_rays();
    let d = chart.dim();
    let f = chart.rays();
    let a = chart.a();
    let b = chart.b();
    let k = chart.k();
    let id_d = identity(d);
    let id_k = identity(n - d);
    let zero = |r: &IntMatrix| r.to_rows().iter().all(|row| row.iter().all(|x| *x == BigInt::from(0)));
    (f * &b) == id_d && zero(&(f * &k)) && zero(&(&a * &b)) && (&a * &k) == id_k
}

fn sample_t(chart: &PositiveChart, rng: &mut ChaCha8Rng, positive: bool) -> Vec<Rational> {
    loop {
        let t: Vec<Rational> = (0..chart.dim()).map(|_| random_rational(rng, positive)).collect();
        match chart.section_values(&t) {
            Ok(v) if v.iter().all(|x| *x != Rational::from_integer(BigInt::from(0))) => return t,
            _ => continue,
        }
    }
}

/// Runs every exact check on a chart; stops at the first failing identity.
pub fn run(chart: &PositiveChart, cfg: &VerifyConfig) -> Result<VerifyReport, AppError> {
    let base = verify_section_identities(chart)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let block = block_identities(chart);
    let nonneg = chart.cox_sections().iter().all(|h| h.poly.exponents().all(|e| e.iter().all(|&x| x >= 0)));
    let k = chart.num_sections();

    let mut plane = 0;
    let mut torus = 0;
    for _ in 0..cfg.plane_samples {
        let t = sample_t(chart, &mut rng, false);
        let s: Vec<Rational> = (0..k).map(|_| random_rational(&mut rng, true)).collect();
        let x = moment_eval(chart, &s, &t)?;
        if plane_coordinates(chart, &x) == s {
            plane += 1;
        }
        if moment_eval_torus(chart, &s, &t)? == x {
            torus += 1;
        }
    }

    let ones = vec![Rational::from_integer(BigInt::from(1)); k];
    let mut ts = BTreeSet::new();
    while ts.len() < cfg.injectivity_samples {
        ts.insert(sample_t(chart, &mut rng, true));
    }
    let mut images = BTreeSet::new();
    for t in &ts {
        images.insert(moment_eval(chart, &ones, t)?);
    }

    let mut tight = 0;
    let supports: Vec<&Vec<BigInt>> = chart.sections().iter().map(|s| &s.support).collect();
    let d = chart.dim();
    for _ in 0..cfg.tightness_samples {
        let mut z = vec![BigInt::from(0); chart.num_rays()];
        for a in &supports {
            let w = BigInt::from(rng.gen_range(0..=3));
            for (zi, ai) in z.iter_mut().zip(a.iter()) {
                *zi += &w * ai;
            }
        }
        let m: Vec<BigInt> = (0..d).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect();
        let shift = chart.rays().vec_mul(&m);
        for (zi, si) in z.iter_mut().zip(shift) {
            *zi += si;
        }
        let p = match polytope_of(chart.fan(), &z) {
            Ok(p) => p,
            Err(Error::Empty) => continue,
            Err(e) => return Err(e.into()),
        };
        let sv = support_vector(&p, chart.rays());
        if sv.iter().zip(&z).all(|(a, b)| *a == Rational::from_integer(b.clone())) {
            tight += 1;
        }
    }

    let ok = block
        && nonneg
        && plane == cfg.plane_samples
        && torus == cfg.plane_samples
        && images.len() == cfg.injectivity_samples
        && tight == cfg.tightness_samples;
    Ok(VerifyReport {
        section_identities: base.section_identities,
        section_property: base.section_property,
        product_monomials: base.product_monomials,
        block_identities: block,
        homogenization_nonnegative: nonneg,
        plane_checks: plane,
        torus_route_checks: torus,
        injectivity_distinct: images.len(),
        tightness_checks: tight,
        ok,
    })
}
