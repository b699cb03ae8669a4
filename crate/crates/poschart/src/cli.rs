use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use poschart_core::chart::{build_from_polytope, build_from_sections, PositiveChart};
use poschart_core::exactla::{gale_dual, snf_invariants, IntMatrix};
use poschart_core::fan::{nef_cone, normal_fan, Fan};
use poschart_core::groebner::{affine_dim_degree, ideal_equal, saturate, Budget};
use poschart_core::moment::{moment_eval, moment_eval_torus, moment_plane_check, moment_symbolic};
use poschart_core::poly::var_names;
use poschart_core::polytope::{lattice_support_vector, Polytope};
use poschart_core::{BigInt, Rational};
use serde::Serialize;
use serde_json::json;

use crate::catalog::{self, CatalogEntry, SaturationOutcome};
use crate::error::AppError;
use crate::json::{
    matrix_from_rows, matrix_rows, parse_rational_list, parse_sections, rat_to_string, vec_to_i64, ChartOut,
    ClassGroupOut, ErrorOut, FanOut, NefOut, PolytopeFile, SectionsFile,
};
use crate::scattering::{self, ScatteringConfig};
use crate::verify::{self, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "poschart", version, about = "Positive charts of smooth projective toric varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// Catalog entry name.
    #[arg(long, global = true)]
    pub catalog: Option<String>,
    /// Chart label within a catalog entry (default: its first chart).
    #[arg(long, global = true)]
    pub chart: Option<String>,
    /// Polytope JSON file ({"vertices": ...} or {"facets": ...}).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Section JSON file ({"sections": [...], "ray_order": ...}).
    #[arg(long, global = true)]
    pub sections: Option<PathBuf>,
    /// Build the chart from the polytope even when sections are available.
    #[arg(long, global = true)]
    pub from_polytope: bool,
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// S-pair budget for Gröbner computations.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Reduction-step budget for Gröbner computations.
    #[arg(long, global = true)]
    pub max_steps: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ray matrix, maximal cones and class group of the normal fan.
    Fan(Source),
    /// Rays of the nef cone in class coordinates.
    Nef(Source),
    /// Build a positive chart.
    Chart(Source),
    /// Generators f_i^h - 1 of the chart ideal.
    Ideal(Source),
    /// Saturate the chart ideal by the product of all coordinates and compare.
    Saturate(Source),
    /// Affine dimension and degree of the chart.
    Degree(Source),
    /// Evaluate the moment map (symbolic components when --t is absent).
    Moment {
        #[command(flatten)]
        source: Source,
        /// Weights s (comma-separated rationals; default all ones).
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Torus point t (comma-separated rationals).
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Solve the scattering equations at exponents x.
    Scattering {
        #[command(flatten)]
        source: Source,
        /// Exponents x (comma-separated rationals).
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Newton starts per seed batch when homotopy continuation is not used.
        #[arg(long, default_value_t = 200)]
        starts: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the invariant suite on a chart.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List catalog entries, or print one with --catalog.
    Catalog(Source),
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| AppError::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|source| AppError::Json { path: path.display().to_string(), source })
}

fn entry(name: &str) -> Result<CatalogEntry, AppError> {
    catalog::get(name).ok_or_else(|| AppError::UnknownEntry { name: name.to_string(), available: catalog::names().join(", ") })
}

fn entry_polytope(e: &CatalogEntry) -> Result<Polytope, AppError> {
    let v = e
        .vertices
        .as_ref()
        .ok_or_else(|| AppError::Input(format!("catalog entry {} has no polytope", e.name)))?;
    let pts: Vec<Vec<Rational>> =
        v.iter().map(|p| p.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
    Ok(Polytope::from_vertices(pts)?)
}

/// Polytope in full-dimensional coordinates, with the catalog ray order when one applies.
fn polytope_and_order(src: &Source) -> Result<(Polytope, Option<IntMatrix>), AppError> {
    if let Some(path) = &src.input {
        let file: PolytopeFile = read_json(path)?;
        return Ok((file.to_polytope()?.full_dimensional_model()?, None));
    }
    let name = src.catalog.as_deref().ok_or_else(|| AppError::Input("need --catalog or --input".into()))?;
    let e = entry(name)?;
    let p = entry_polytope(&e)?.full_dimensional_model()?;
    Ok((p, e.ray_order.as_ref().map(|r| matrix_from_rows(r))))
}

/// Normal fan, pinned to the given order when it describes the same rays.
fn fan_of(p: &Polytope, order: Option<&IntMatrix>) -> Result<Fan, AppError> {
    let fan = normal_fan(p)?;
    Ok(match order {
        Some(o) => fan.with_ray_order(o).unwrap_or(fan),
        None => fan,
    })
}

pub fn resolve_chart(src: &Source) -> Result<PositiveChart, AppError> {
    if let Some(path) = &src.sections {
        let file: SectionsFile = read_json(path)?;
        let polys = parse_sections(&file.sections, file.dim)?;
        let order = file.ray_order.as_ref().map(|r| matrix_from_rows(r));
        return Ok(build_from_sections(&polys, order.as_ref())?);
    }
    if let Some(path) = &src.input {
        let file: PolytopeFile = read_json(path)?;
        return Ok(build_from_polytope(&file.to_polytope()?)?);
    }
    let name = src
        .catalog
        .as_deref()
        .ok_or_else(|| AppError::Input("need one of --catalog, --input or --sections".into()))?;
    let e = entry(name)?;
    if src.from_polytope || e.charts.is_empty() {
        return Ok(build_from_polytope(&entry_polytope(&e)?)?);
    }
    let c = e.chart(src.chart.as_deref()).ok_or_else(|| {
        let labels: Vec<&str> = e.charts.iter().map(|c| c.label).collect();
        AppError::Input(format!("entry {} has no chart {:?}; charts: {}", e.name, src.chart, labels.join(", ")))
    })?;
    let polys = parse_sections(&c.sections, Some(e.dim))?;
    let order = e.chart_ray_order(c).map(|r| matrix_from_rows(r));
    Ok(build_from_sections(&polys, order.as_ref())?)
}

fn budget(src: &Source) -> Budget {
    let mut b = Budget::default();
    if let Some(p) = src.budget {
        b.max_pairs = p;
    }
    if let Some(s) = src.max_steps {
        b.max_steps = s;
    }
    b
}

/// Budget for saturation: the catalog's expected budget applies unless overridden.
fn saturation_budget(src: &Source) -> Budget {
    if src.budget.is_none() && src.max_steps.is_none() && src.sections.is_none() && src.input.is_none() {
        if let Some(e) = src.catalog.as_deref().and_then(catalog::get) {
            if let Some(c) = e.chart(src.chart.as_deref()) {
                if let Some(f) = &c.saturation {
                    if let SaturationOutcome::ResourceLimit { max_pairs, max_terms, max_steps } = f.value {
                        return Budget { max_pairs, max_terms, max_steps };
                    }
                }
            }
        }
    }
    budget(src)
}

fn y_names(n: usize) -> Vec<String> {
    var_names("y", n)
}

fn poly_strings(polys: &[poschart_core::poly::Poly], names: &[String]) -> Vec<String> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    polys.iter().map(|p| p.to_string_with(&refs)).collect()
}

fn emit<T: Serialize>(value: &T, output: Option<&Path>) -> Result<(), AppError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| AppError::Internal(e.to_string()))?;
    match output {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|source| AppError::Io { path: path.display().to_string(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}").map_err(|source| AppError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn cmd_fan(src: &Source) -> Result<serde_json::Value, AppError> {
    let (p, order) = polytope_and_order(src)?;
    let fan = fan_of(&p, order.as_ref())?;
    let props = fan.properties();
    let inv = snf_invariants(fan.rays())?;
    let torsion: Vec<i64> = vec_to_i64(&inv.divisors)?.into_iter().filter(|&d| d != 1).collect();
    let support = lattice_support_vector(&p, fan.rays()).ok().map(|v| vec_to_i64(&v)).transpose()?;
    let out = FanOut {
        dim: fan.dim(),
        f: matrix_rows(fan.rays())?,
        maximal_cones: fan.maximal_cones().iter().map(|c| c.iter().map(|i| i + 1).collect()).collect(),
        simplicial: props.simplicial,
        smooth: props.smooth,
        class_group: ClassGroupOut { free_rank: fan.num_rays() - fan.dim(), torsion },
        support_vector: support,
    };
    Ok(serde_json::to_value(out).expect("serializable"))
}

pub fn nef_of(src: &Source) -> Result<NefOut, AppError> {
    let (p, order) = polytope_and_order(src)?;
    let fan = fan_of(&p, order.as_ref())?;
    let gale = gale_dual(fan.rays())?;
    let lift = snf_invariants(&gale.transpose())?
        .right_inverse
        .ok_or_else(|| AppError::Internal("class map has no integral section".into()))?;
    let cone = nef_cone(&fan, &lift)?;
    let rays = cone.rays().iter().map(|r| vec_to_i64(r)).collect::<Result<Vec<_>, _>>()?;
    Ok(NefOut { dim: cone.dim(), ray_count: rays.len(), rays })
}

fn cmd_saturate(src: &Source) -> Result<serde_json::Value, AppError> {
    let chart = resolve_chart(src)?;
    let n = chart.num_rays();
    let ideal = chart.ideal();
    let b = saturation_budget(src);
    let sat = saturate(n, &ideal, &vec![1; n], b)?;
    let equal = ideal_equal(n, sat.polys(), &ideal, b)?;
    Ok(json!({
        "equal_to_input": equal,
        "saturated_basis": poly_strings(sat.polys(), &y_names(n)),
        "input": chart.ideal_strings(),
    }))
}

fn cmd_degree(src: &Source) -> Result<serde_json::Value, AppError> {
    let chart = resolve_chart(src)?;
    let n = chart.num_rays();
    Ok(match affine_dim_degree(n, &chart.ideal(), budget(src))? {
        Some((dim, degree)) => json!({ "dim": dim, "degree": degree.to_string().parse::<u64>().ok() }),
        None => json!({ "dim": null, "degree": 0 }),
    })
}

fn cmd_moment(src: &Source, s: Option<&str>, t: Option<&str>) -> Result<serde_json::Value, AppError> {
    let chart = resolve_chart(src)?;
    let k = chart.num_sections();
    let n = chart.num_rays();
    let Some(t) = t else {
        let mut names = y_names(n);
        names.extend(var_names("s", k));
        return Ok(json!({ "components": poly_strings(&moment_symbolic(&chart), &names) }));
    };
    let t = parse_rational_list(t)?;
    let s = match s {
        Some(s) => parse_rational_list(s)?,
        None => vec![Rational::from_integer(BigInt::from(1)); k],
    };
    if t.len() != chart.dim() {
        return Err(AppError::Input(format!("--t needs {} values, got {}", chart.dim(), t.len())));
    }
    if s.len() != k {
        return Err(AppError::Input(format!("--s needs {k} values, got {}", s.len())));
    }
    let x = moment_eval(&chart, &s, &t)?;
    let via_torus = moment_eval_torus(&chart, &s, &t)?;
    let y = chart.phi_eval(&t)?;
    Ok(json!({
        "t": t.iter().map(rat_to_string).collect::<Vec<_>>(),
        "s": s.iter().map(rat_to_string).collect::<Vec<_>>(),
        "y": y.iter().map(rat_to_string).collect::<Vec<_>>(),
        "x": x.iter().map(rat_to_string).collect::<Vec<_>>(),
        "plane_check": moment_plane_check(&chart, &s, &t)?,
        "routes_agree": via_torus == x,
    }))
}

fn cmd_catalog(src: &Source) -> Result<serde_json::Value, AppError> {
    match src.catalog.as_deref() {
        Some(name) => Ok(serde_json::to_value(entry(name)?).expect("serializable")),
        None => Ok(json!({
            "entries": catalog::all().iter().map(|e| json!({"name": e.name, "description": e.description})).collect::<Vec<_>>()
        })),
    }
}

fn execute(cli: &Cli) -> Result<(serde_json::Value, Option<PathBuf>), AppError> {
    let (value, src) = match &cli.command {
        Command::Fan(src) => (cmd_fan(src)?, src),
        Command::Nef(src) => (serde_json::to_value(nef_of(src)?).expect("serializable"), src),
        Command::Chart(src) => (serde_json::to_value(ChartOut::from_chart(&resolve_chart(src)?)?).expect("serializable"), src),
        Command::Ideal(src) => {
            let c = resolve_chart(src)?;
            (json!({ "num_rays": c.num_rays(), "ideal": c.ideal_strings() }), src)
        }
        Command::Saturate(src) => (cmd_saturate(src)?, src),
        Command::Degree(src) => (cmd_degree(src)?, src),
        Command::Moment { source, s, t } => (cmd_moment(source, s.as_deref(), t.as_deref())?, source),
        Command::Scattering { source, x, seed, starts, tol, jobs } => {
            let chart = resolve_chart(source)?;
            let x = parse_rational_list(x)?;
            let cfg = ScatteringConfig { seed: *seed, starts: *starts, tol: *tol, jobs: *jobs, ..Default::default() };
            (serde_json::to_value(scattering::solve(&chart, &x, &cfg)?).expect("serializable"), source)
        }
        Command::Verify { source, seed } => {
            let chart = resolve_chart(source)?;
            let report = verify::run(&chart, &VerifyConfig { seed: *seed, ..Default::default() })?;
            if !report.ok {
                return Err(AppError::Core(poschart_core::Error::IdentityFailed {
                    identity: format!("invariant suite: {}", serde_json::to_string(&report).unwrap_or_default()),
                }));
            }
            (serde_json::to_value(report).expect("serializable"), source)
        }
        Command::Catalog(src) => (cmd_catalog(src)?, src),
    };
    Ok((value, src.output.clone()))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            let err = ErrorOut { error: "Usage".into(), message: e.to_string().trim().to_string(), clause: None };
            eprintln!("{}", serde_json::to_string(&err).expect("serializable"));
            return 2;
        }
    };
    match execute(&cli).and_then(|(v, out)| emit(&v, out.as_deref())) {
        Ok(()) => 0,
        Err(e) => {
            let err = ErrorOut { error: e.kind().into(), message: e.to_string(), clause: e.clause().map(Into::into) };
            eprintln!("{}", serde_json::to_string(&err).expect("serializable"));
            e.exit_code()
        }
    }
}
