//! Numerical solution of the scattering equations `x = μ_{Y,K^t x}(y)` on a chart.
//!
//! The system is reduced to the `d` torus equations `Σ_i s_i μ_i(t) = B^t x`
//! with `s = K^t x`. Denominators are cleared by multiplying with `∏ f_i`.
//! The cleared system is solved by total-degree homotopy continuation when
//! the path count is at most `max_paths`, and otherwise by Newton from
//! random starts `t = exp(z)`. Each of the two seed batches uses its own
//! random `γ` (or its own starts), and their solution sets must agree. A
//! converged point is kept
//! only if the uncleared reduced system and the full system at `y = φ(t)`
//! both have residual below the tolerance and `t`, `y` stay off the
//! coordinate hyperplanes.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use poschart_core::chart::PositiveChart;
use poschart_core::moment::{eta_vectors, induced_weights, reduced_target};
use poschart_core::{BigInt, IntMatrix, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::AppError;
use crate::json::rat_to_string;

#[derive(Clone, Debug)]
pub struct ScatteringConfig {
    /// Starts per seed batch.
    pub starts: usize,
    pub tol: f64,
    pub cluster_tol: f64,
    pub torus_tol: f64,
    pub max_iter: usize,
    pub seed: u64,
    pub jobs: Option<usize>,
    /// Fewest clusters accepted as a result.
    pub min_found: usize,
    /// Largest number of homotopy paths per batch before falling back to
    /// random starts.
    pub max_paths: usize,
}

impl Default for ScatteringConfig {
    fn default() -> Self {
        ScatteringConfig {
            starts: 200,
            tol: 1e-10,
            cluster_tol: 1e-8,
            torus_tol: 1e-8,
            max_iter: 100,
            seed: 0,
            jobs: None,
            min_found: 1,
            max_paths: 20_000,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Solution {
    /// Torus coordinates as `[re, im]` pairs.
    pub t: Vec<[f64; 2]>,
    /// Cox coordinates `y = φ(t)` as `[re, im]` pairs.
    pub y: Vec<[f64; 2]>,
    pub residual_reduced: f64,
    pub residual_full: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ScatteringResult {
    pub count: usize,
    pub s: Vec<String>,
    pub target: Vec<String>,
    pub batch_counts: [usize; 2],
    /// `homotopy` or `random-starts`.
    pub method: String,
    pub starts_per_batch: usize,
    pub seed: u64,
    pub solutions: Vec<Solution>,
}

/// Float data of a chart needed by the solver.
struct System {
    d: usize,
    /// Per section: `(m, c)` pairs.
    sections: Vec<Vec<(Vec<i32>, f64)>>,
    s: Vec<f64>,
    target: Vec<f64>,
    x: Vec<f64>,
    b: Vec<Vec<i32>>,
    k: Vec<Vec<i32>>,
    etas: Vec<Vec<(Vec<i32>, f64)>>,
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn c(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn max_abs(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn monomial(t: &[Complex64], m: &[i32]) -> Complex64 {
    t.iter().zip(m).filter(|(_, &e)| e != 0).map(|(tl, &e)| tl.powi(e)).product()
}

/// Value and gradient of `Σ c t^m` and of `Σ c m t^m`.
struct SectionData {
    f: Complex64,
    df: Vec<Complex64>,
    p: Vec<Complex64>,
    dp: DMatrix<Complex64>,
}

impl System {
    fn new(chart: &PositiveChart, x: &[Rational]) -> Result<(System, Vec<Rational>, Vec<Rational>), AppError> {
        let s = induced_weights(chart, x)?;
        let target = reduced_target(chart, x);
        let small = |v: &BigInt| v.to_i32().ok_or_else(|| AppError::Input(format!("exponent {v} too large")));
        let to_i = |m: &IntMatrix| -> Result<Vec<Vec<i32>>, AppError> {
            m.to_rows().iter().map(|r| r.iter().map(small).collect()).collect()
        };
        let small64 = |v: i64| i32::try_from(v).map_err(|_| AppError::Input(format!("exponent {v} too large")));
        let sections = chart
            .sections()
            .iter()
            .map(|sec| {
                sec.poly
                    .terms()
                    .map(|(m, coef)| Ok((m.iter().map(|&e| small64(e)).collect::<Result<_, _>>()?, f(coef))))
                    .collect::<Result<Vec<_>, AppError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let etas = eta_vectors(chart)
            .into_iter()
            .map(|h| {
                h.into_iter()
                    .map(|(e, coef)| Ok((e.iter().map(|&v| small64(v)).collect::<Result<_, _>>()?, f(&coef))))
                    .collect::<Result<Vec<_>, AppError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let sys = System {
            d: chart.dim(),
            sections,
            s: s.iter().map(f).collect(),
            target: target.iter().map(f).collect(),
            x: x.iter().map(f).collect(),
            b: to_i(&chart.b())?,
            k: to_i(&chart.k())?,
            etas,
        };
        Ok((sys, s, target))
    }

    fn section_data(&self, t: &[Complex64]) -> Vec<SectionData> {
        let d = self.d;
        self.sections
            .iter()
            .map(|terms| {
                let mut sd = SectionData {
                    f: c(0.0),
                    df: vec![c(0.0); d],
                    p: vec![c(0.0); d],
                    dp: DMatrix::zeros(d, d),
                };
                for (m, coef) in terms {
                    let w = monomial(t, m) * coef;
                    sd.f += w;
                    for l in 0..d {
                        sd.p[l] += w * f64::from(m[l]);
                    }
                    for r in 0..d {
                        if m[r] == 0 {
                            continue;
                        }
                        let wr = w * f64::from(m[r]) / t[r];
                        sd.df[r] += wr;
                        for l in 0..d {
                            sd.dp[(l, r)] += wr * f64::from(m[l]);
                        }
                    }
                }
                sd
            })
            .collect()
    }

    /// Reduced residual `Σ_i s_i μ_i(t) - B^t x`.
    fn reduced_residual(&self, t: &[Complex64]) -> Vec<Complex64> {
        let mut g: Vec<Complex64> = self.target.iter().map(|&v| c(-v)).collect();
        for (sd, &si) in self.section_data(t).iter().zip(&self.s) {
            for (gl, pl) in g.iter_mut().zip(&sd.p) {
                *gl += pl / sd.f * si;
            }
        }
        g
    }

    /// The reduced system times `∏ f_i`, with its Jacobian in `t`.
    fn cleared(&self, t: &[Complex64]) -> (Vec<Complex64>, DMatrix<Complex64>) {
        let d = self.d;
        let data = self.section_data(t);
        let k = data.len();
        // products of all sections but one (and but two), without division
        let others = |skip: &[usize]| -> Complex64 {
            data.iter().enumerate().filter(|(j, _)| !skip.contains(j)).map(|(_, sd)| sd.f).product()
        };
        let prod = others(&[]);
        let mut dprod = vec![c(0.0); d];
        for i in 0..k {
            let q = others(&[i]);
            for r in 0..d {
                dprod[r] += q * data[i].df[r];
            }
        }
        let mut h: Vec<Complex64> = self.target.iter().map(|&bl| -prod * bl).collect();
        let mut jac = DMatrix::<Complex64>::zeros(d, d);
        for l in 0..d {
            for r in 0..d {
                jac[(l, r)] -= dprod[r] * self.target[l];
            }
        }
        for (i, sd) in data.iter().enumerate() {
            let si = self.s[i];
            let q = others(&[i]);
            let mut dq = vec![c(0.0); d];
            for j in (0..k).filter(|&j| j != i) {
                let qq = others(&[i, j]);
                for r in 0..d {
                    dq[r] += qq * data[j].df[r];
                }
            }
            for l in 0..d {
                h[l] += sd.p[l] * q * si;
                for r in 0..d {
                    jac[(l, r)] += (sd.dp[(l, r)] * q + sd.p[l] * dq[r]) * si;
                }
            }
        }
        (h, jac)
    }

    /// `y_j = t^{B_j} ∏_i f_i^{-K_ji}`.
    fn phi(&self, t: &[Complex64]) -> Vec<Complex64> {
        let fv: Vec<Complex64> = self.section_data(t).iter().map(|sd| sd.f).collect();
        self.b
            .iter()
            .zip(&self.k)
            .map(|(bj, kj)| {
                let mut y = monomial(t, bj);
                for (fi, &e) in fv.iter().zip(kj) {
                    if e != 0 {
                        y *= fi.powi(-e);
                    }
                }
                y
            })
            .collect()
    }

    /// `max_j |x_j - μ_j(y)|`, relative to `max(1, |x|)`.
    fn full_residual(&self, y: &[Complex64]) -> f64 {
        let mut mu = vec![c(0.0); y.len()];
        for (h, &si) in self.etas.iter().zip(&self.s) {
            for (eta, coef) in h {
                let v = monomial(y, eta) * (si * coef);
                for (mj, &e) in mu.iter_mut().zip(eta) {
                    if e != 0 {
                        *mj += v * f64::from(e);
                    }
                }
            }
        }
        let scale = self.x.iter().fold(1.0f64, |a, b| a.max(b.abs()));
        mu.iter().zip(&self.x).map(|(m, &xj)| (m - xj).norm()).fold(0.0, f64::max) / scale
    }

    /// Degree bound of the cleared system, if all section exponents are nonnegative.
    fn total_degree(&self) -> Option<u32> {
        let mut total = 0u32;
        for terms in &self.sections {
            let mut deg = 0u32;
            for (m, _) in terms {
                if m.iter().any(|&e| e < 0) {
                    return None;
                }
                deg = deg.max(m.iter().map(|&e| e as u32).sum());
            }
            total = total.checked_add(deg)?;
        }
        Some(total.max(1))
    }

    fn scale(&self) -> f64 {
        self.target.iter().chain(&self.s).fold(1.0f64, |a, b| a.max(b.abs()))
    }

    /// Plain Newton on the cleared system; stops once the step is negligible.
    fn newton(&self, mut t: Vec<Complex64>, cfg: &ScatteringConfig) -> Option<Vec<Complex64>> {
        let mut small_steps = 0;
        for _ in 0..cfg.max_iter {
            let (h, jac) = self.cleared(&t);
            if h.iter().all(|v| *v == c(0.0)) {
                return Some(t);
            }
            let rhs = DVector::from_iterator(self.d, h.iter().map(|v| -v));
            let step = jac.lu().solve(&rhs)?;
            let size = max_abs(step.as_slice()) / (1.0 + max_abs(&t));
            for (tl, dl) in t.iter_mut().zip(step.iter()) {
                *tl += dl;
            }
            if !t.iter().all(|v| v.is_finite()) {
                return None;
            }
            if size < 1e-14 {
                small_steps += 1;
                if small_steps >= 2 {
                    return Some(t);
                }
            }
        }
        Some(t)
    }

    fn solve_from(&self, t0: Vec<Complex64>, cfg: &ScatteringConfig) -> Option<Solution> {
        let t = self.newton(t0, cfg)?;
        self.accept(t, cfg)
    }

    /// Filters a converged point and evaluates it.
    fn accept(&self, t: Vec<Complex64>, cfg: &ScatteringConfig) -> Option<Solution> {
        if t.iter().any(|v| v.norm() < cfg.torus_tol) {
            return None;
        }
        let res = max_abs(&self.reduced_residual(&t)) / self.scale();
        if !(res < cfg.tol) {
            return None;
        }
        let y = self.phi(&t);
        if y.iter().any(|v| !v.is_finite() || v.norm() < cfg.torus_tol) {
            return None;
        }
        let full = self.full_residual(&y);
        if !(full < cfg.tol) {
            return None;
        }
        Some(Solution {
            t: t.iter().map(|v| [v.re, v.im]).collect(),
            y: y.iter().map(|v| [v.re, v.im]).collect(),
            residual_reduced: res,
            residual_full: full,
        })
    }
}

/// `H(t, τ) = (1 - τ) γ g(t) + τ h(t)` with `g_l = t_l^D - 1`.
struct Homotopy<'a> {
    sys: &'a System,
    degree: i32,
    gamma: Complex64,
}

impl Homotopy<'_> {
    fn eval(&self, t: &[Complex64], tau: f64) -> (DVector<Complex64>, DMatrix<Complex64>, DVector<Complex64>) {
        let d = self.sys.d;
        let (h, jh) = self.sys.cleared(t);
        let dg = f64::from(self.degree);
        let mut val = DVector::zeros(d);
        let mut jac = jh * c(tau);
        let mut dtau = DVector::zeros(d);
        for l in 0..d {
            let g = t[l].powi(self.degree) - 1.0;
            val[l] = self.gamma * g * (1.0 - tau) + h[l] * tau;
            jac[(l, l)] += self.gamma * dg * t[l].powi(self.degree - 1) * (1.0 - tau);
            dtau[l] = h[l] - self.gamma * g;
        }
        (val, jac, dtau)
    }

    /// `dt/dτ` along the path.
    fn tangent(&self, t: &[Complex64], tau: f64) -> Option<DVector<Complex64>> {
        let (_, jac, dtau) = self.eval(t, tau);
        jac.lu().solve(&-dtau)
    }

    fn correct(&self, t: &mut [Complex64], tau: f64) -> bool {
        for _ in 0..4 {
            let (val, jac, _) = self.eval(t, tau);
            let Some(step) = jac.lu().solve(&-val) else { return false };
            for (tl, dl) in t.iter_mut().zip(step.iter()) {
                *tl += dl;
            }
            if max_abs(step.as_slice()) <= 1e-10 * (1.0 + max_abs(t)) {
                return t.iter().all(|v| v.is_finite());
            }
        }
        false
    }

    /// Tracks one path from `τ = 0` to the end game at `τ = 1`.
    fn track(&self, mut t: Vec<Complex64>) -> Option<Vec<Complex64>> {
        let mut tau = 0.0f64;
        let mut step = 0.01f64;
        let mut successes = 0;
        for _ in 0..20_000 {
            if tau >= 1.0 {
                return Some(t);
            }
            let h = step.min(1.0 - tau);
            // fourth-order Runge-Kutta predictor
            let k1 = self.tangent(&t, tau)?;
            let shift = |k: &DVector<Complex64>, a: f64| -> Vec<Complex64> {
                t.iter().zip(k.iter()).map(|(tl, kl)| tl + kl * (a * h)).collect()
            };
            let predicted = self
                .tangent(&shift(&k1, 0.5), tau + 0.5 * h)
                .and_then(|k2| self.tangent(&shift(&k2, 0.5), tau + 0.5 * h).map(|k3| (k2, k3)))
                .and_then(|(k2, k3)| self.tangent(&shift(&k3, 1.0), tau + h).map(|k4| (k2, k3, k4)))
                .map(|(k2, k3, k4)| {
                    let k = (&k1 + &k2 * c(2.0) + &k3 * c(2.0) + &k4) / c(6.0);
                    shift(&k, 1.0)
                });
            let mut next = predicted.unwrap_or_default();
            if !next.is_empty() && self.correct(&mut next, tau + h) {
                let moved = max_abs(&next.iter().zip(&t).map(|(a, b)| a - b).collect::<Vec<_>>());
                if moved <= 0.1 * (1.0 + max_abs(&t)) {
                    t = next;
                    tau += h;
                    successes += 1;
                    if successes >= 3 {
                        step = (step * 2.0).min(0.1);
                        successes = 0;
                    }
                    if max_abs(&t) > 1e12 {
                        return None;
                    }
                    continue;
                }
            }
            step *= 0.5;
            successes = 0;
            if step < 1e-13 {
                return None;
            }
        }
        None
    }
}

fn random_gamma(seed: u64, batch: u64) -> Complex64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((batch << 32) | u64::from(u32::MAX));
    let theta: f64 = rand::Rng::gen_range(&mut rng, 0.0..std::f64::consts::TAU);
    Complex64::from_polar(1.0, theta)
}

/// All `D`-th roots of unity in each coordinate, in lexicographic order.
fn start_points(degree: u32, d: usize, index: usize) -> Vec<Complex64> {
    let mut rest = index;
    (0..d)
        .map(|_| {
            let k = rest % degree as usize;
            rest /= degree as usize;
            Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / f64::from(degree))
        })
        .collect()
}

fn path_count(sys: &System, cfg: &ScatteringConfig) -> Option<(u32, usize)> {
    let degree = sys.total_degree()?;
    let paths = (degree as usize).checked_pow(sys.d as u32)?;
    (paths <= cfg.max_paths && i32::try_from(degree).is_ok()).then_some((degree, paths))
}

fn run_homotopy(sys: &System, cfg: &ScatteringConfig, batch: u64, degree: u32, paths: usize) -> Vec<Solution> {
    let hom = Homotopy { sys, degree: degree as i32, gamma: random_gamma(cfg.seed, batch) };
    let found: Vec<Option<Solution>> = (0..paths)
        .into_par_iter()
        .map(|i| {
            let end = hom.track(start_points(degree, sys.d, i))?;
            sys.solve_from(end, cfg)
        })
        .collect();
    cluster(found.into_iter().flatten().collect(), cfg.cluster_tol)
}

/// Log-scales cycled over the starts so that roots far from `|t| = 1` are reached.
const START_SCALES: [f64; 3] = [1.0, 2.0, 3.0];

fn start(seed: u64, batch: u64, j: u64, d: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((batch << 32) | j);
    let sigma = START_SCALES[(j % START_SCALES.len() as u64) as usize];
    (0..d)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(sigma * re, im).exp()
        })
        .collect()
}

fn close(a: &Solution, b: &Solution, tol: f64) -> bool {
    let norm = |v: &[[f64; 2]]| v.iter().map(|p| p[0].hypot(p[1])).fold(1.0f64, f64::max);
    let diff = a.t.iter().zip(&b.t).map(|(p, q)| (p[0] - q[0]).hypot(p[1] - q[1])).fold(0.0, f64::max);
    diff / norm(&a.t).max(norm(&b.t)) < tol
}

fn cluster(mut candidates: Vec<Solution>, tol: f64) -> Vec<Solution> {
    candidates.sort_by(|a, b| {
        let ka = a.t.iter().flat_map(|p| p.iter());
        let kb = b.t.iter().flat_map(|p| p.iter());
        ka.zip(kb).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut reps: Vec<Solution> = Vec::new();
    for s in candidates {
        match reps.iter_mut().find(|r| close(r, &s, tol)) {
            Some(r) => {
                if s.residual_full < r.residual_full {
                    *r = s;
                }
            }
            None => reps.push(s),
        }
    }
    reps
}

fn run_batch(sys: &System, cfg: &ScatteringConfig, batch: u64) -> Vec<Solution> {
    let found: Vec<Option<Solution>> = (0..cfg.starts as u64)
        .into_par_iter()
        .map(|j| sys.solve_from(start(cfg.seed, batch, j, sys.d), cfg))
        .collect();
    cluster(found.into_iter().flatten().collect(), cfg.cluster_tol)
}

/// Solves the scattering equations at exponents `x`.
pub fn solve(chart: &PositiveChart, x: &[Rational], cfg: &ScatteringConfig) -> Result<ScatteringResult, AppError> {
    let (sys, s, target) = System::new(chart, x)?;
    let plan = path_count(&sys, cfg);
    let work = || match plan {
        Some((degree, paths)) => (
            run_homotopy(&sys, cfg, 0, degree, paths),
            run_homotopy(&sys, cfg, 1, degree, paths),
        ),
        None => (run_batch(&sys, cfg, 0), run_batch(&sys, cfg, 1)),
    };
    let (a, b) = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| AppError::Internal(e.to_string()))?
            .install(work),
        None => work(),
    };
    let counts = [a.len(), b.len()];
    if counts[0] != counts[1] {
        return Err(AppError::NoConvergence(format!(
            "seed batches found {} and {} solutions",
            counts[0], counts[1]
        )));
    }
    let all = cluster(a.into_iter().chain(b).collect(), cfg.cluster_tol);
    if all.len() != counts[0] {
        return Err(AppError::NoConvergence(format!(
            "seed batches found different solution sets ({} clusters in the union)",
            all.len()
        )));
    }
    if all.len() < cfg.min_found {
        return Err(AppError::NoConvergence(format!("found {} solutions, need at least {}", all.len(), cfg.min_found)));
    }
    Ok(ScatteringResult {
        count: all.len(),
        s: s.iter().map(rat_to_string).collect(),
        target: target.iter().map(rat_to_string).collect(),
        batch_counts: counts,
        method: if plan.is_some() { "homotopy" } else { "random-starts" }.to_string(),
        starts_per_batch: plan.map_or(cfg.starts, |(_, paths)| paths),
        seed: cfg.seed,
        solutions: all,
    })
}
