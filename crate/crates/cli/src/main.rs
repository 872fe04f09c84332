//! `implicitize` — fit implicit algebraic curves to parametric inputs.
//!
//! The `fit` subcommand reads a curve spec (JSON), runs the weak-gradient
//! fit (adaptive by default, fixed-degree with `--degree`) or the
//! distance-only baseline, and writes a JSON report, optionally a
//! coefficient CSV and an SVG overlay of the input against the extracted
//! implicit contour.

mod report;
mod spec;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use implicitize_core::{
    fit_fixed_degree, marching_squares, sample_uniform, wgm_polynomial, wgm_sampled, CoordMap,
    DegreeRecord, FitConfig64, FitProblem, FitTrace64, ImplicitCurve64, Method, MonomialBasis2,
    Point64, SampledCurve64, Termination,
};
use report::{coefficients_csv, termination_str, Report, ReportConfig};
use spec::CurveSpec;
use svg::{pad_bbox, Scene};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Spec(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Fit(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Spec(_) => "spec",
            CliError::Io(_) => "io",
            CliError::Fit(_) => "fit",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Spec(_) => 2,
            CliError::Io(_) => 3,
            CliError::Fit(_) => 4,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "implicitize",
    version,
    about = "Implicitization of planar parametric curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit an implicit curve to the spec'd parametric curve.
    Fit(FitArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Weak-gradient method (distance + gradient-alignment term).
    Wgm,
    /// Distance-only baseline; requires --degree.
    Dm,
}

#[derive(Args, Debug)]
struct FitArgs {
    /// Curve spec file (JSON).
    #[arg(long)]
    spec: PathBuf,
    /// Fitting method.
    #[arg(long, value_enum, default_value_t = MethodArg::Wgm)]
    method: MethodArg,
    /// Fixed implicit degree (bypasses the adaptive loop).
    #[arg(long)]
    degree: Option<usize>,
    /// Maximum implicit degree for the adaptive loop.
    #[arg(long)]
    nmax: Option<usize>,
    /// Regulator gain weighting the weak-gradient term.
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Stopping threshold on the algebraic-distance error.
    #[arg(long = "eps-ad", allow_negative_numbers = true)]
    eps_ad: Option<f64>,
    /// Stopping threshold on the weak-gradient error.
    #[arg(long = "eps-wg", allow_negative_numbers = true)]
    eps_wg: Option<f64>,
    /// Sample count (switches Bézier specs to the discrete pipeline;
    /// required for named curves).
    #[arg(long)]
    samples: Option<usize>,
    /// Fit in coordinates normalized to [-1,1]^2, mapping coefficients back.
    #[arg(long)]
    normalize: bool,
    /// Unit-normalize sampled tangent vectors.
    #[arg(long = "normalize-tangents")]
    normalize_tangents: bool,
    /// Write an SVG overlay of input and fitted contour.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Write the coefficient table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Contour grid resolution for the SVG.
    #[arg(long, default_value_t = 400)]
    resolution: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Fit(args) => run_fit(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!(
                "{}",
                serde_json::json!({"error": {"kind": err.kind(), "message": err.to_string()}})
            );
            ExitCode::from(err.exit_code())
        }
    }
}

enum Pipeline {
    Continuous(implicitize_core::BezierCurve64),
    Discrete(SampledCurve64),
}

fn run_fit(args: &FitArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.spec)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.spec.display())))?;
    let spec = spec::parse_spec(&text)?;

    if args.method == MethodArg::Dm && args.degree.is_none() {
        return Err(CliError::Spec(
            "--method dm is fixed-degree only; pass --degree".into(),
        ));
    }

    // named curves fit through samples; Bézier specs fit continuously
    // unless a sample count asks for the discrete pipeline
    let discrete = matches!(spec, CurveSpec::Named { .. }) || args.samples.is_some();
    let pipeline = if discrete {
        let n_samples = args.samples.ok_or_else(|| {
            CliError::Spec("named curves need --samples for the discrete pipeline".into())
        })?;
        let parametric = spec.parametric()?;
        let mut samples =
            sample_uniform(&parametric, n_samples).map_err(|e| CliError::Spec(e.to_string()))?;
        if args.normalize_tangents {
            samples = samples.with_unit_tangents();
        }
        Pipeline::Discrete(samples)
    } else {
        Pipeline::Continuous(spec.bezier_curve()?.expect("bezier spec"))
    };

    let mut cfg: FitConfig64 = match &pipeline {
        Pipeline::Continuous(_) => FitConfig64::polynomial_defaults(),
        Pipeline::Discrete(_) => FitConfig64::discrete_defaults(args.samples.unwrap_or(0)),
    };
    if let Some(n) = args.nmax {
        cfg.n_max = n;
    }
    if let Some(l) = args.lambda {
        cfg.lambda = l;
    }
    if let Some(e) = args.eps_ad {
        cfg.eps_ad = e;
    }
    if let Some(e) = args.eps_wg {
        cfg.eps_wg = e;
    }
    cfg.normalize_coords = args.normalize;
    cfg.normalize_tangents = args.normalize_tangents;
    cfg.method = match args.method {
        MethodArg::Wgm => Method::Wgm,
        MethodArg::Dm => Method::Dm,
    };
    let lambda = cfg.effective_lambda();
    cfg.validate().map_err(|e| CliError::Spec(e.to_string()))?;
    if let Some(d) = args.degree {
        if d < 1 {
            return Err(CliError::Spec("degree must be at least 1".into()));
        }
    }
    if args.svg.is_some() && args.resolution < 2 {
        return Err(CliError::Spec("resolution must be at least 2".into()));
    }

    if let Pipeline::Discrete(samples) = &pipeline {
        let top_degree = args.degree.unwrap_or(cfg.n_max);
        let k = MonomialBasis2::size_for(top_degree);
        if samples.len() < 3 * k {
            eprintln!(
                "warning: {} samples against {} unknowns at degree {} (under 3x); \
                 the smallest eigenvalue may be uninformative",
                samples.len(),
                k,
                top_degree
            );
        }
    }

    let (curve, trace, termination) = match args.degree {
        Some(n) => fixed_degree_fit(&pipeline, n, lambda, args.normalize)?,
        None => {
            let (curve, trace) = match &pipeline {
                Pipeline::Continuous(bezier) => wgm_polynomial(bezier, &cfg),
                // sampling already happened (the same points feed the fit,
                // the warning, and the SVG markers)
                Pipeline::Discrete(samples) => wgm_sampled(samples, &cfg),
            }
            .map_err(|e| CliError::Fit(e.to_string()))?;
            let termination = termination_str(trace.termination).to_string();
            (curve, trace, termination)
        }
    };

    let method_name = match args.method {
        MethodArg::Wgm => "wgm",
        MethodArg::Dm => "dm",
    };
    let report = Report::from_trace(
        method_name,
        ReportConfig {
            degree: args.degree,
            n_max: cfg.n_max,
            lambda,
            eps_ad: cfg.eps_ad,
            eps_wg: cfg.eps_wg,
            samples: if discrete { args.samples } else { None },
            normalize_coords: cfg.normalize_coords,
            normalize_tangents: cfg.normalize_tangents,
        },
        &trace,
        &curve,
        &termination,
    );

    let json = report.to_json();
    match &args.report {
        Some(path) => write_file(path, &json)?,
        None => print!("{json}"),
    }
    if let Some(path) = &args.csv {
        write_file(path, &coefficients_csv(&curve))?;
    }
    if let Some(path) = &args.svg {
        let svg = render_scene(&spec, &pipeline, &curve, args.resolution)?;
        write_file(path, &svg)?;
    }
    Ok(())
}

/// Single-degree fit with optional coordinate normalization, wrapped in a
/// one-entry trace so reports have a uniform shape.
fn fixed_degree_fit(
    pipeline: &Pipeline,
    n: usize,
    lambda: f64,
    normalize: bool,
) -> Result<(ImplicitCurve64, FitTrace64, String), CliError> {
    let fit_err = |e: implicitize_core::Error| CliError::Fit(e.to_string());
    let (fit, out_curve) = match pipeline {
        Pipeline::Continuous(bezier) => {
            let map = normalize.then(|| CoordMap::from_points(bezier.control_points()));
            let work = match &map {
                Some(m) => m.map_bezier(bezier).map_err(fit_err)?,
                None => bezier.clone(),
            };
            let fit =
                fit_fixed_degree(&FitProblem::Polynomial(&work), n, lambda).map_err(fit_err)?;
            let out = match &map {
                Some(m) => m.pull_back(&fit.curve).map_err(fit_err)?,
                None => fit.curve.clone(),
            };
            (fit, out)
        }
        Pipeline::Discrete(samples) => {
            let map = normalize.then(|| CoordMap::from_points(samples.points()));
            let work = match &map {
                Some(m) => m.map_samples(samples).map_err(fit_err)?,
                None => samples.clone(),
            };
            let fit = fit_fixed_degree(&FitProblem::Sampled(&work), n, lambda).map_err(fit_err)?;
            let out = match &map {
                Some(m) => m.pull_back(&fit.curve).map_err(fit_err)?,
                None => fit.curve.clone(),
            };
            (fit, out)
        }
    };
    let trace = FitTrace64 {
        records: vec![DegreeRecord {
            n,
            e1: fit.e1,
            e2: fit.e2,
            lambda_min: fit.lambda_min,
            coeffs: out_curve.coeffs().to_vec(),
            near_kernel_dim: fit.near_kernel_dim,
        }],
        chosen_degree: n,
        termination: Termination::ThresholdMet,
    };
    Ok((out_curve, trace, "fixed_degree".to_string()))
}

fn render_scene(
    spec: &CurveSpec,
    pipeline: &Pipeline,
    curve: &ImplicitCurve64,
    resolution: usize,
) -> Result<String, CliError> {
    let bbox = match pipeline {
        Pipeline::Continuous(bezier) => bezier.control_bbox(),
        Pipeline::Discrete(samples) => samples.bbox(),
    };
    let bbox = pad_bbox(bbox, 0.1);
    let mesh =
        marching_squares(curve, bbox, resolution).map_err(|e| CliError::Fit(e.to_string()))?;
    let (a, b) = spec.domain();
    let parametric = spec.parametric()?;
    let input_curve: Vec<Point64> = (0..=512)
        .map(|i| parametric.position(a + (b - a) * i as f64 / 512.0))
        .collect();
    let samples = match pipeline {
        Pipeline::Discrete(s) => s.points().to_vec(),
        Pipeline::Continuous(_) => Vec::new(),
    };
    let scene = Scene {
        bbox,
        input_curve,
        samples,
        contours: mesh.polylines(),
    };
    Ok(scene.to_svg())
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}
