// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! The `cornu` command line.
//!
//! Exit codes: 0 on success, 2 for bad input or parameters, 3 when a
//! numerical procedure fails (quadrature did not converge).

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::export::{Series, SvgPlot};
use crate::lcg::{
    self, classify_aesthetic, fit_line, gcs_lcg_trace, gradient_from_samples, gradient_gcs,
    gradient_line, lcg_gradient_numeric, lcg_numeric, AestheticTolerances, GradientSample,
    LcgTrace, LineRecord,
};
use crate::lddc::{lddc_histogram, lddc_vs_lcg};
use crate::profiles::{profile_samples_to_csv, CurvatureProfile, DegenerateClass, GcsProfile};
use crate::synthesis::{endpoint, synthesize, Pose, QuadratureConfig, Scheme};

/// Shape factors of the published GCS sweep, with κ0 = 0, κ1 = 2, S = π.
pub const FIGURE_R_VALUES: [f64; 8] = [100.0, 5.0, 2.0, 1.0, 0.0, -0.5, -0.9, -0.99];

/// Tolerance for deciding which special curve a GCS reduces to.
const DEGENERATE_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(
    name = "cornu",
    version,
    about = "Curve synthesis and logarithmic curvature graphs"
)]
pub struct Cli {
    /// Run the built-in oracle checks and exit nonzero if any fails.
    #[arg(long)]
    pub seed_check: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize a curve from a curvature profile.
    Synth(SynthArgs),
    /// Logarithmic curvature graph of a profile.
    Lcg(LcgArgs),
    /// LCG gradient along a profile, with its fitted line.
    Gradient(GradientArgs),
    /// Degenerate class and aesthetic class of a profile.
    Classify(ClassifyArgs),
    /// Histogram of arc length per log radius-of-curvature interval.
    Lddc(LddcArgs),
    /// Data and plots for the GCS parameter sweep.
    Figures(FigureArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    /// GCS segment: kappa0,kappa1,arc_length,r
    #[arg(long, value_name = "K0,K1,S,R", allow_hyphen_values = true)]
    pub gcs: Option<String>,
    /// Constant curvature; requires --length.
    #[arg(long, value_name = "KAPPA", allow_hyphen_values = true)]
    pub constant: Option<f64>,
    /// Linear curvature: kappa0,kappa1,arc_length
    #[arg(long, value_name = "K0,K1,S", allow_hyphen_values = true)]
    pub linear: Option<String>,
    /// Quadratic curvature: a,kappa0,kappa1,arc_length
    #[arg(long, value_name = "A,K0,K1,S", allow_hyphen_values = true)]
    pub quadratic: Option<String>,
    /// Arc length for --constant.
    #[arg(long)]
    pub length: Option<f64>,
    /// Profile as inline JSON or a path to a JSON file.
    #[arg(long, value_name = "JSON|PATH")]
    pub profile: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output directory.
    #[arg(long, env = "CORNU_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,
    /// Output formats to write.
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "csv,json,svg"
    )]
    pub format: Vec<Format>,
}

impl OutputArgs {
    fn wants(&self, f: Format) -> bool {
        self.format.contains(&f)
    }
}

#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Start pose: x0,y0,theta0
    #[arg(long, value_name = "X,Y,THETA", allow_hyphen_values = true)]
    pub pose: Option<String>,
    /// Absolute tolerance of each coordinate integral.
    #[arg(long, default_value_t = 1e-10)]
    pub abs_tol: f64,
    /// Recursion depth cap of adaptive quadrature.
    #[arg(long, default_value_t = 40)]
    pub max_subdivisions: usize,
    /// Number of samples along the curve.
    #[arg(long)]
    pub samples: Option<usize>,
}

impl QuadArgs {
    fn config(&self, default_samples: usize) -> QuadratureConfig {
        QuadratureConfig {
            abs_tol: self.abs_tol,
            max_subdivisions: self.max_subdivisions,
            samples_per_curve: self.samples.unwrap_or(default_samples),
            scheme: Scheme::AdaptiveSimpson,
        }
    }

    fn pose(&self) -> Result<Pose, CliError> {
        match &self.pose {
            None => Ok(Pose::default()),
            Some(text) => {
                let v = parse_list(text, "pose", 3)?;
                Ok(Pose::new(v[0], v[1], v[2]))
            }
        }
    }
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LcgArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Number of arc-length grid points.
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GradientArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Estimate the gradient from a synthesized curve instead of the profile.
    #[arg(long)]
    pub sampled: bool,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
}

#[derive(Debug, Args)]
pub struct LddcArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Number of histogram bins.
    #[arg(long, default_value_t = 16)]
    pub bins: usize,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("r = {r}: {source}")]
    Figure { r: f64, source: Error },
    #[error("oracle check failed")]
    CheckFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Usage(_) => return 2,
            CliError::CheckFailed => return 3,
            CliError::Core(e) | CliError::Figure { source: e, .. } => e,
        };
        match core {
            Error::Quadrature { .. } => 3,
            _ => 2,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_list(text: &str, what: &str, n: usize) -> Result<Vec<f64>, CliError> {
    let values = text
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| usage(format!("--{what}: {e} in {text:?}")))?;
    if values.len() != n {
        return Err(usage(format!(
            "--{what} expects {n} comma-separated numbers, got {}",
            values.len()
        )));
    }
    Ok(values)
}

impl ProfileArgs {
    pub fn resolve(&self) -> Result<CurvatureProfile, CliError> {
        let given = [
            self.gcs.is_some(),
            self.constant.is_some(),
            self.linear.is_some(),
            self.quadratic.is_some(),
            self.profile.is_some(),
        ]
        .iter()
        .filter(|b| **b)
        .count();
        if given != 1 {
            return Err(usage(
                "give exactly one of --gcs, --constant, --linear, --quadratic, --profile",
            ));
        }
        if self.length.is_some() && self.constant.is_none() {
            return Err(usage("--length only applies to --constant"));
        }
        let profile = if let Some(t) = &self.gcs {
            let v = parse_list(t, "gcs", 4)?;
            CurvatureProfile::gcs(v[0], v[1], v[2], v[3])?
        } else if let Some(k) = self.constant {
            let len = self
                .length
                .ok_or_else(|| usage("--constant needs --length"))?;
            CurvatureProfile::constant(k, len)?
        } else if let Some(t) = &self.linear {
            let v = parse_list(t, "linear", 3)?;
            CurvatureProfile::linear(v[0], v[1], v[2])?
        } else if let Some(t) = &self.quadratic {
            let v = parse_list(t, "quadratic", 4)?;
            CurvatureProfile::quadratic(v[0], v[1], v[2], v[3])?
        } else {
            let arg = self.profile.as_deref().unwrap_or_default();
            let text = if arg.trim_start().starts_with('{') {
                arg.to_owned()
            } else {
                fs::read_to_string(arg).map_err(|e| usage(format!("--profile {arg}: {e}")))?
            };
            serde_json::from_str(&text).map_err(|e| usage(format!("--profile: {e}")))?
        };
        Ok(profile)
    }
}

/// Files written by one command.
struct Writer<'a> {
    dir: &'a Path,
    written: Vec<String>,
}

impl<'a> Writer<'a> {
    fn new(dir: &'a Path) -> Result<Self, CliError> {
        fs::create_dir_all(dir).map_err(Error::from)?;
        Ok(Writer {
            dir,
            written: Vec::new(),
        })
    }

    fn put(&mut self, name: &str, contents: &str) -> Result<(), CliError> {
        let path = self.dir.join(name);
        fs::write(&path, contents).map_err(Error::from)?;
        self.written.push(path.display().to_string());
        Ok(())
    }
}

fn arc_grid(len: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n)
        .map(|i| {
            if i == n - 1 {
                len
            } else {
                len * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn distinct_ends(g: &GcsProfile) -> bool {
    !matches!(
        g.classify_degenerate(DEGENERATE_TOL),
        DegenerateClass::CircularArc | DegenerateClass::StraightLine
    )
}

/// LCG over an arc-length grid, closed form where it exists.
fn lcg_trace_for(profile: &CurvatureProfile, grid: &[f64]) -> Result<LcgTrace, Error> {
    match profile.as_gcs() {
        Some(g) if distinct_ends(&g) => gcs_lcg_trace(&g, grid),
        _ => lcg_numeric(profile, grid),
    }
}

/// Gradient along the profile (closed form for GCS) at every grid point where it is defined.
fn gradient_trace_for(
    profile: &CurvatureProfile,
    grid: &[f64],
) -> Result<Vec<GradientSample>, Error> {
    let mut trace = Vec::with_capacity(grid.len());
    match profile.as_gcs() {
        Some(g) if distinct_ends(&g) => {
            for &s in grid {
                trace.push(GradientSample {
                    s,
                    gradient: gradient_gcs(&g, s)?,
                });
            }
        }
        _ => {
            for &s in grid {
                if let Ok(gradient) = lcg_gradient_numeric(profile, s) {
                    trace.push(GradientSample { s, gradient });
                }
            }
        }
    }
    Ok(trace)
}

fn lcg_svg(trace: &LcgTrace) -> String {
    let mut plot = SvgPlot::new();
    plot.axes = true;
    plot.series.push(Series::new(
        trace
            .points
            .iter()
            .map(|p| [p.log_rho, p.log_freq])
            .collect(),
    ));
    plot.render()
}

fn gradient_svg(trace: &[GradientSample]) -> String {
    let mut plot = SvgPlot::new();
    plot.axes = true;
    plot.series.push(Series::new(
        trace.iter().map(|g| [g.s, g.gradient]).collect(),
    ));
    plot.render()
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{v}").map_err(Error::from)?;
    Ok(())
}

/// Parses arguments and runs one command, printing its summary to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    if cli.seed_check {
        return if seed_check(out)? {
            Ok(())
        } else {
            Err(CliError::CheckFailed)
        };
    }
    match cli.command {
        None => Err(usage("no command given; see --help")),
        Some(Command::Synth(a)) => cmd_synth(&a, out),
        Some(Command::Lcg(a)) => cmd_lcg(&a, out),
        Some(Command::Gradient(a)) => cmd_gradient(&a, out),
        Some(Command::Classify(a)) => cmd_classify(&a, out),
        Some(Command::Lddc(a)) => cmd_lddc(&a, out),
        Some(Command::Figures(a)) => cmd_figures(&a, out),
    }
}

pub fn cmd_synth(args: &SynthArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let profile = args.profile.resolve()?;
    let pose = args.quad.pose()?;
    let config = args
        .quad
        .config(QuadratureConfig::default().samples_per_curve);
    let curve = synthesize(&profile, &pose, &config)?;
    let mut w = Writer::new(&args.output.out_dir)?;
    if args.output.wants(Format::Csv) {
        w.put("curve.csv", &curve.to_csv())?;
    }
    if args.output.wants(Format::Svg) {
        w.put("curve.svg", &curve.to_svg())?;
    }
    if args.output.wants(Format::Json) {
        w.put(
            "profile.json",
            &serde_json::to_string_pretty(&profile).map_err(Error::from)?,
        )?;
    }
    let end = curve.end_state();
    emit(
        out,
        &json!({
            "command": "synth",
            "profile": profile,
            "endpoint": end,
            "arc_length": curve.arc_length(),
            "polyline_length": curve.polyline_length(),
            "samples": curve.len(),
            "files": w.written,
        }),
    )
}

pub fn cmd_lcg(args: &LcgArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let profile = args.profile.resolve()?;
    let grid = arc_grid(profile.arc_length(), args.samples);
    let trace = lcg_trace_for(&profile, &grid)?;
    let mut w = Writer::new(&args.output.out_dir)?;
    if args.output.wants(Format::Csv) {
        w.put("lcg.csv", &trace.to_csv())?;
    }
    if args.output.wants(Format::Svg) {
        w.put("lcg.svg", &lcg_svg(&trace))?;
    }
    emit(
        out,
        &json!({
            "command": "lcg",
            "points": trace.points.len(),
            "skipped": trace.skipped,
            "files": w.written,
        }),
    )
}

pub fn cmd_gradient(args: &GradientArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let profile = args.profile.resolve()?;
    let len = profile.arc_length();
    let (trace, line, residual, tol) = if args.sampled {
        let config = args.quad.config(2000);
        let curve = synthesize(&profile, &args.quad.pose()?, &config)?;
        let fit = gradient_from_samples(&curve)?;
        (
            fit.trace,
            fit.line,
            fit.residual,
            AestheticTolerances::sampled(len),
        )
    } else {
        let grid = arc_grid(len, args.quad.samples.unwrap_or(256));
        let trace = gradient_trace_for(&profile, &grid)?;
        let (line, residual) = match profile.as_gcs() {
            Some(g) if distinct_ends(&g) => {
                let line = gradient_line(&g)?;
                let residual = trace
                    .iter()
                    .map(|p| (p.gradient - line.eval(p.s)).abs())
                    .fold(0.0, f64::max);
                (line, residual)
            }
            _ => fit_line(&trace, [0.0, len])?,
        };
        (trace, line, residual, AestheticTolerances::closed_form(len))
    };
    let class = classify_aesthetic(&line, residual, tol);
    let record = LineRecord::new(&line, residual, class);
    let mut w = Writer::new(&args.output.out_dir)?;
    if args.output.wants(Format::Csv) {
        w.put("gradient.csv", &lcg::gradient_trace_to_csv(&trace))?;
    }
    if args.output.wants(Format::Json) {
        w.put(
            "gradient_line.json",
            &serde_json::to_string_pretty(&record).map_err(Error::from)?,
        )?;
    }
    if args.output.wants(Format::Svg) {
        w.put("gradient.svg", &gradient_svg(&trace))?;
    }
    emit(
        out,
        &json!({
            "command": "gradient",
            "line": record,
            "points": trace.len(),
            "files": w.written,
        }),
    )
}

/// The verdict printed by `classify`.
pub fn classify_profile(profile: &CurvatureProfile) -> Result<Value, Error> {
    let len = profile.arc_length();
    let tol = AestheticTolerances::closed_form(len);
    if let Some(g) = profile.as_gcs() {
        let degenerate = g.classify_degenerate(DEGENERATE_TOL);
        if matches!(
            degenerate,
            DegenerateClass::StraightLine | DegenerateClass::CircularArc
        ) {
            let reason = match degenerate {
                DegenerateClass::StraightLine => "zero curvature: radius of curvature is unbounded",
                _ => "constant curvature: rho' = 0, so the LCG is undefined",
            };
            return Ok(json!({
                "degenerate": degenerate,
                "lcg_line": Value::Null,
                "class": "lcg_undefined",
                "reason": reason,
            }));
        }
        let line = gradient_line(&g)?;
        let residual = line.max_residual(50, |t| gradient_gcs(&g, t));
        let class = classify_aesthetic(&line, residual, tol);
        return Ok(json!({
            "degenerate": degenerate,
            "lcg_line": {"A": line.slope_a, "B": line.intercept_b},
            "residual": residual,
            "class": class,
        }));
    }
    let trace = gradient_trace_for(profile, &arc_grid(len, 257))?;
    match fit_line(&trace, [0.0, len]) {
        Ok((line, residual)) => Ok(json!({
            "degenerate": Value::Null,
            "lcg_line": {"A": line.slope_a, "B": line.intercept_b},
            "residual": residual,
            "class": classify_aesthetic(&line, residual, tol),
        })),
        Err(_) => Ok(json!({
            "degenerate": Value::Null,
            "lcg_line": Value::Null,
            "class": "lcg_undefined",
            "reason": "the LCG gradient is undefined along the whole profile",
        })),
    }
}

pub fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let profile = args.profile.resolve()?;
    let verdict = classify_profile(&profile)?;
    emit(out, &verdict)
}

pub fn cmd_lddc(args: &LddcArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let profile = args.profile.resolve()?;
    let config = args.quad.config(1024);
    let curve = synthesize(&profile, &args.quad.pose()?, &config)?;
    let hist = lddc_histogram(&curve, args.bins)?;
    let mut w = Writer::new(&args.output.out_dir)?;
    if args.output.wants(Format::Csv) {
        w.put("lddc.csv", &hist.to_csv())?;
    }
    if args.output.wants(Format::Svg) {
        w.put("lddc.svg", &hist.to_svg())?;
    }
    let mut comparison = Value::Null;
    if let Some(g) = profile.as_gcs().filter(distinct_ends) {
        let cmp = lddc_vs_lcg(&hist, &gradient_line(&g)?, &g)?;
        comparison = json!({
            "max_abs_length_deviation": cmp.max_abs_length_deviation,
            "max_abs_log_deviation": cmp.max_abs_log_deviation,
        });
        if args.output.wants(Format::Json) {
            w.put(
                "lddc_vs_lcg.json",
                &serde_json::to_string_pretty(&cmp).map_err(Error::from)?,
            )?;
        }
    }
    emit(
        out,
        &json!({
            "command": "lddc",
            "bins": hist.num_bins(),
            "covered_length": hist.covered_length(),
            "excluded_length": hist.excluded_length,
            "total_length": hist.total_length,
            "comparison": comparison,
            "files": w.written,
        }),
    )
}

fn r_tag(r: f64) -> String {
    format!("r{r}")
}

pub fn cmd_figures(args: &FigureArgs, out: &mut dyn Write) -> Result<(), CliError> {
    // odd sample count so that s = S/2 is on the grid
    let config = args.quad.config(257);
    let pose = args.quad.pose()?;
    let n = config.samples_per_curve;
    let mut w = Writer::new(&args.output.out_dir)?;
    let csv = args.output.wants(Format::Csv);
    let svg = args.output.wants(Format::Svg);

    let fig1 = CurvatureProfile::linear(0.0, 2.0, 1.0)?;
    let curve = synthesize(&fig1, &pose, &config)?;
    if csv {
        w.put("fig1_curve.csv", &curve.to_csv())?;
    }
    if svg {
        w.put("fig1.svg", &curve.to_svg())?;
    }

    let mut plots: [SvgPlot; 4] = Default::default();
    for p in plots.iter_mut().skip(1) {
        p.axes = true;
    }
    for &r in &FIGURE_R_VALUES {
        let tag = r_tag(r);
        let fig = |e: Error| CliError::Figure { r, source: e };
        let g = GcsProfile::new(0.0, 2.0, PI, r).map_err(fig)?;
        let profile = CurvatureProfile::Gcs(g);
        let grid = arc_grid(PI, n);

        let kappa = profile.sample(n);
        let curve = synthesize(&profile, &pose, &config).map_err(fig)?;
        let lcg = gcs_lcg_trace(&g, &grid).map_err(fig)?;
        let gradient = gradient_trace_for(&profile, &grid).map_err(fig)?;

        if csv {
            w.put(
                &format!("fig2_curvature_{tag}.csv"),
                &profile_samples_to_csv(&kappa),
            )?;
            w.put(&format!("fig3_curve_{tag}.csv"), &curve.to_csv())?;
            w.put(&format!("fig4_lcg_{tag}.csv"), &lcg.to_csv())?;
            w.put(
                &format!("fig5_gradient_{tag}.csv"),
                &lcg::gradient_trace_to_csv(&gradient),
            )?;
        }
        let dashed = r == 0.0;
        let series = [
            kappa.iter().map(|p| [p.s, p.kappa]).collect(),
            curve.samples().iter().map(|p| [p.x, p.y]).collect(),
            lcg.points.iter().map(|p| [p.log_rho, p.log_freq]).collect(),
            gradient.iter().map(|p| [p.s, p.gradient]).collect(),
        ];
        for (plot, pts) in plots.iter_mut().zip(series) {
            plot.series
                .push(Series::new(pts).labelled(format!("r = {r}")).dashed(dashed));
        }
    }
    if svg {
        for (i, plot) in plots.iter().enumerate() {
            w.put(&format!("fig{}.svg", i + 2), &plot.render())?;
        }
    }
    emit(
        out,
        &json!({
            "command": "figures",
            "r_values": FIGURE_R_VALUES,
            "files": w.written,
        }),
    )
}

/// One line of the `--seed-check` report.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Circle endpoint, closed-form gradient identity and finite-difference
/// gradient checks.
pub fn oracle_checks() -> Vec<CheckOutcome> {
    let mut results = Vec::new();

    let (c, len) = (1.3, 2.0);
    let detail;
    let passed = match CurvatureProfile::constant(c, len)
        .and_then(|p| endpoint(&p, &Pose::default(), &QuadratureConfig::default()))
    {
        Ok(e) => {
            let ex = (c * len).sin() / c;
            let ey = (1.0 - (c * len).cos()) / c;
            let err = (e.x - ex).abs().max((e.y - ey).abs());
            detail = format!("max coordinate error {err:e}");
            err <= 1e-10
        }
        Err(e) => {
            detail = e.to_string();
            false
        }
    };
    results.push(CheckOutcome {
        name: "circle endpoint",
        passed,
        detail,
    });

    let mut worst = 0.0f64;
    for &r in &FIGURE_R_VALUES {
        let g = GcsProfile::new(0.3, 2.0, PI, r).expect("valid sweep profile");
        let line = gradient_line(&g).expect("distinct end curvatures");
        for t in arc_grid(PI, 50) {
            let closed = gradient_gcs(&g, t).expect("t in domain");
            worst = worst.max((closed - line.eval(t)).abs() / line.eval(t).abs().max(1.0));
        }
    }
    results.push(CheckOutcome {
        name: "gradient closed form is affine",
        passed: worst <= 1e-12,
        detail: format!("max relative deviation {worst:e}"),
    });

    let mut worst = 0.0f64;
    for &r in &FIGURE_R_VALUES {
        let g = GcsProfile::new(0.0, 2.0, PI, r).expect("valid sweep profile");
        let h = 1e-5 * PI;
        for t in arc_grid(PI, 50).into_iter().skip(1).take(48) {
            let (Ok(a), Ok(b)) = (
                lcg::lcg_gcs_closed_form(&g, t - h),
                lcg::lcg_gcs_closed_form(&g, t + h),
            ) else {
                continue;
            };
            let fd = (b.log_freq - a.log_freq) / (b.log_rho - a.log_rho);
            let exact = lcg_gradient_numeric(&lcg::GcsRadius(&g), t).unwrap_or(f64::NAN);
            let dev = (fd - exact).abs() / exact.abs().max(1.0);
            worst = if dev.is_nan() {
                f64::INFINITY
            } else {
                worst.max(dev)
            };
        }
    }
    results.push(CheckOutcome {
        name: "finite-difference LCG slope",
        passed: worst <= 1e-6,
        detail: format!("max relative deviation {worst:e}"),
    });
    results
}

fn seed_check(out: &mut dyn Write) -> Result<bool, CliError> {
    let results = oracle_checks();
    for r in &results {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{mark} {}: {}", r.name, r.detail).map_err(Error::from)?;
    }
    Ok(results.iter().all(|r| r.passed))
}
