//! `lpcoh`: decides the first-L^p-cohomology trichotomy for solvable
//! rational Lie algebras, computes critical exponents as certified rational
//! intervals, and runs the numerical threshold / isoperimetry labs.
//!
//! Exit codes: 0 success, 1 runtime failure or failed validation,
//! 2 not-solvable input, 3 invalid algebra (structure identities fail),
//! 4 parse error, 5 exponent requested for a non-Heintze algebra.

use clap::{Parser, Subcommand, ValueEnum};
use lpcoh_cli::{input, report};
use lpcoh_core::classifier::{classify, ClassifyError, Verdict};
use lpcoh_core::isoperimetry::{dichotomy_scan, BallModel};
use lpcoh_core::rat::{default_tol, format_rat, parse_rat, rat_to_f64, Rat};
use lpcoh_core::threshold::{quadrature_norm, rate_analysis, HeintzeModel, RateVerdict, TestFunction};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lpcoh", version, about = "L^p-cohomology trichotomy for solvable Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry and the Jacobi identity of an algebra file.
    Validate {
        path: PathBuf,
    },
    /// Classify an algebra file (closed-at-infinity | heintze | vanishing).
    Classify {
        path: PathBuf,
        /// Certified interval width, e.g. "1/1048576" (default 2^-64,
        /// overridable by LPCOH_TOL).
        #[arg(long)]
        tol: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include wall-clock timing in the report (off by default so
        /// consecutive runs are bit-identical).
        #[arg(long)]
        timing: bool,
    },
    /// Print only the critical exponent interval; fails unless the verdict
    /// is heintze.
    Exponent {
        path: PathBuf,
        #[arg(long)]
        tol: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact rate analysis and quadrature confirmation of the critical
    /// exponent threshold on a diagonal model.
    VerifyThreshold {
        /// Comma-separated positive rational weights, e.g. "1,2".
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<String>,
        /// Single exponent p to test.
        #[arg(long)]
        p: Option<String>,
        /// Inclusive rational scan "lo:hi:step", e.g. "2:4:1/2".
        #[arg(long)]
        scan: Option<String>,
        /// Quadrature cutoff T (the table also reports 2T).
        #[arg(long, default_value_t = 20.0)]
        cutoff: f64,
        /// Quadrature nodes per axis.
        #[arg(long, default_value_t = 64)]
        resolution: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cheeger and Dirichlet p-Sobolev constants on word-metric balls.
    Cheeger {
        /// Model: "grid:D", "sol:a,b,c,d" (row-major integer matrix),
        /// "heisenberg", or "tree:K".
        #[arg(long)]
        model: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
        radii: Vec<usize>,
        /// Exponent for the Sobolev constant (rational, >= 1).
        #[arg(long, default_value = "1")]
        p: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the built-in algebra catalog with expected classifications.
    Catalog {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct CliFailure {
    message: String,
    code: u8,
}

impl CliFailure {
    fn parse(message: impl Into<String>) -> Self {
        CliFailure { message: message.into(), code: 4 }
    }

    fn runtime(message: impl Into<String>) -> Self {
        CliFailure { message: message.into(), code: 1 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn effective_tol(flag: &Option<String>) -> Result<Rat, CliFailure> {
    let source = flag
        .clone()
        .or_else(|| std::env::var("LPCOH_TOL").ok());
    match source {
        None => Ok(default_tol()),
        Some(s) => {
            let t = parse_rat(&s).map_err(|e| CliFailure::parse(format!("bad tolerance: {e}")))?;
            if !num_traits::Signed::is_positive(&t) {
                return Err(CliFailure::parse("tolerance must be positive"));
            }
            Ok(t)
        }
    }
}

fn load_algebra(path: &PathBuf) -> Result<input::ParsedAlgebra, CliFailure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliFailure::parse(format!("cannot read {}: {e}", path.display())))?;
    input::parse_algebra_file(&text).map_err(CliFailure::parse)
}

fn classify_code(err: &ClassifyError) -> u8 {
    match err {
        ClassifyError::InvalidAlgebra { .. } => 3,
        ClassifyError::NotSolvable { .. } => 2,
        ClassifyError::XiNotExpanding => 1,
    }
}

fn run(cli: Cli) -> Result<u8, CliFailure> {
    match cli.command {
        Command::Validate { path } => {
            let parsed = load_algebra(&path)?;
            let report = parsed.algebra.validate();
            if report.ok() {
                println!("ok: {} satisfies antisymmetry and the Jacobi identity", parsed.name);
                Ok(0)
            } else {
                for v in &report.violations {
                    println!("{v}");
                }
                println!("{} violations", report.violations.len());
                Ok(1)
            }
        }
        Command::Classify { path, tol, format, timing } => {
            let parsed = load_algebra(&path)?;
            let tol = effective_tol(&tol)?;
            let start = std::time::Instant::now();
            let classification = classify(&parsed.algebra, &tol).map_err(|e| CliFailure {
                message: e.to_string(),
                code: classify_code(&e),
            })?;
            let timing_ms = timing.then(|| start.elapsed().as_secs_f64() * 1e3);
            let report = report::build_report(
                &parsed.name,
                parsed.algebra.dim(),
                &tol,
                &classification,
                timing_ms,
            );
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => print!("{}", report::render_text(&report)),
            }
            if let Some(expected) = &parsed.expected {
                let got = report.classification.verdict.clone();
                if expected.verdict != got {
                    return Err(CliFailure::runtime(format!(
                        "expected verdict {} but computed {got}",
                        expected.verdict
                    )));
                }
            }
            Ok(0)
        }
        Command::Exponent { path, tol, format } => {
            let parsed = load_algebra(&path)?;
            let tol = effective_tol(&tol)?;
            let classification = classify(&parsed.algebra, &tol).map_err(|e| CliFailure {
                message: e.to_string(),
                code: classify_code(&e),
            })?;
            match (classification.verdict, classification.exponent) {
                (Verdict::Heintze, Some(e)) => {
                    match format {
                        Format::Text => println!("[{}, {}]", format_rat(&e.lo), format_rat(&e.hi)),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string(&report::IntervalStr::from_interval(&e)).unwrap()
                        ),
                    }
                    Ok(0)
                }
                (v, _) => Err(CliFailure {
                    message: format!("verdict is {v}, exponent only exists for heintze"),
                    code: 5,
                }),
            }
        }
        Command::VerifyThreshold { weights, p, scan, cutoff, resolution, format } => {
            run_verify_threshold(weights, p, scan, cutoff, resolution, format)
        }
        Command::Cheeger { model, radii, p, format } => run_cheeger(model, radii, p, format),
        Command::Catalog { format } => run_catalog(format),
    }
}

#[derive(Serialize)]
struct ThresholdRow {
    p: String,
    verdict: String,
    rates: Vec<String>,
    quad_at_cutoff: f64,
    quad_at_double_cutoff: f64,
    /// ln(V(2T)/V(T)) / T: near the dominant rate when divergent.
    measured_rate: f64,
    relative_change: f64,
}

#[derive(Serialize)]
struct ThresholdOutput {
    weights: Vec<String>,
    tau: String,
    critical_exponent: String,
    cutoff: f64,
    resolution: usize,
    rows: Vec<ThresholdRow>,
}

fn run_verify_threshold(
    weights: Vec<String>,
    p: Option<String>,
    scan: Option<String>,
    cutoff: f64,
    resolution: usize,
    format: Format,
) -> Result<u8, CliFailure> {
    let ws: Result<Vec<Rat>, _> = weights.iter().map(|w| parse_rat(w)).collect();
    let ws = ws.map_err(|e| CliFailure::parse(format!("bad weight: {e}")))?;
    let model = HeintzeModel::new(ws).map_err(|e| CliFailure::parse(e.to_string()))?;
    let ps: Vec<Rat> = match (p, scan) {
        (Some(p), None) => {
            vec![parse_rat(&p).map_err(|e| CliFailure::parse(format!("bad p: {e}")))?]
        }
        (None, Some(scan)) => {
            let parts: Vec<&str> = scan.split(':').collect();
            if parts.len() != 3 {
                return Err(CliFailure::parse("scan must be lo:hi:step"));
            }
            let lo = parse_rat(parts[0]).map_err(|e| CliFailure::parse(e.to_string()))?;
            let hi = parse_rat(parts[1]).map_err(|e| CliFailure::parse(e.to_string()))?;
            let step = parse_rat(parts[2]).map_err(|e| CliFailure::parse(e.to_string()))?;
            if !num_traits::Signed::is_positive(&step) || hi < lo {
                return Err(CliFailure::parse("scan needs lo <= hi and step > 0"));
            }
            let mut ps = Vec::new();
            let mut x = lo;
            while x <= hi {
                ps.push(x.clone());
                x += &step;
            }
            ps
        }
        _ => return Err(CliFailure::parse("exactly one of --p or --scan is required")),
    };
    let tf = TestFunction::standard(model.weights().len());
    let mut rows = Vec::new();
    for p in &ps {
        let rate = rate_analysis(&model, p).map_err(|e| CliFailure::runtime(e.to_string()))?;
        let v1 = quadrature_norm(&model, &tf, p, cutoff, resolution)
            .map_err(|e| CliFailure::runtime(e.to_string()))?;
        let v2 = quadrature_norm(&model, &tf, p, 2.0 * cutoff, resolution)
            .map_err(|e| CliFailure::runtime(e.to_string()))?;
        rows.push(ThresholdRow {
            p: format_rat(p),
            verdict: match rate.verdict {
                RateVerdict::Convergent => "convergent".into(),
                RateVerdict::Divergent => "divergent".into(),
            },
            rates: rate.term_rates.iter().map(format_rat).collect(),
            quad_at_cutoff: v1,
            quad_at_double_cutoff: v2,
            measured_rate: (v2 / v1).ln() / cutoff,
            relative_change: (v2 - v1).abs() / v2,
        });
    }
    let out = ThresholdOutput {
        weights: model.weights().iter().map(format_rat).collect(),
        tau: format_rat(&model.tau()),
        critical_exponent: format_rat(&model.critical_exponent()),
        cutoff,
        resolution,
        rows,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Text => {
            println!(
                "weights ({}): tau = {}, p(G) = {}",
                out.weights.join(", "),
                out.tau,
                out.critical_exponent
            );
            println!("cutoff T = {}, resolution = {}", out.cutoff, out.resolution);
            for row in &out.rows {
                println!(
                    "p = {}: {} (rates {}); quad T = {}, 2T = {}, measured rate = {}, relative change = {}",
                    row.p,
                    row.verdict,
                    row.rates.join(", "),
                    row.quad_at_cutoff,
                    row.quad_at_double_cutoff,
                    row.measured_rate,
                    row.relative_change
                );
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct CheegerRow {
    radius: usize,
    vertices: usize,
    cheeger_lower: f64,
    cheeger_upper: f64,
    method: String,
    sobolev: f64,
}

#[derive(Serialize)]
struct CheegerOutput {
    model: String,
    p: f64,
    rows: Vec<CheegerRow>,
    trend: String,
    first_sobolev: f64,
    last_sobolev: f64,
    min_sobolev: f64,
}

fn run_cheeger(model: String, radii: Vec<usize>, p: String, format: Format) -> Result<u8, CliFailure> {
    let model: BallModel = model.parse().map_err(|e: lpcoh_core::isoperimetry::IsoError| {
        CliFailure::parse(e.to_string())
    })?;
    let p = parse_rat(&p).map_err(|e| CliFailure::parse(format!("bad p: {e}")))?;
    let pf = rat_to_f64(&p);
    if pf < 1.0 {
        return Err(CliFailure::parse("p must be at least 1"));
    }
    let scan = dichotomy_scan(&model, &radii, pf)
        .map_err(|e| CliFailure::runtime(e.to_string()))?;
    let out = CheegerOutput {
        model: model.to_string(),
        p: pf,
        rows: scan
            .rows
            .iter()
            .map(|r| CheegerRow {
                radius: r.radius,
                vertices: r.vertices,
                cheeger_lower: r.cheeger.lower,
                cheeger_upper: r.cheeger.upper,
                method: format!("{:?}", r.cheeger.method),
                sobolev: r.sobolev,
            })
            .collect(),
        trend: format!("{:?}", scan.trend),
        first_sobolev: scan.first_sobolev,
        last_sobolev: scan.last_sobolev,
        min_sobolev: scan.min_sobolev,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Text => {
            println!("model {}, p = {}", out.model, out.p);
            println!("radius  vertices  cheeger-lower  cheeger-upper  method  sobolev");
            for r in &out.rows {
                println!(
                    "{}  {}  {}  {}  {}  {}",
                    r.radius, r.vertices, r.cheeger_lower, r.cheeger_upper, r.method, r.sobolev
                );
            }
            println!(
                "trend: {} (first {}, last {}, min {})",
                out.trend, out.first_sobolev, out.last_sobolev, out.min_sobolev
            );
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct CatalogRow {
    name: String,
    dim: usize,
    description: String,
    expected_verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_exponent: Option<String>,
}

fn run_catalog(format: Format) -> Result<u8, CliFailure> {
    let rows: Vec<CatalogRow> = lpcoh_core::catalog::entries()
        .iter()
        .map(|e| CatalogRow {
            name: e.name.to_string(),
            dim: e.algebra.dim(),
            description: e.description.clone(),
            expected_verdict: report::verdict_str(e.expected_verdict).to_string(),
            expected_exponent: e.expected_exponent.as_ref().map(format_rat),
        })
        .collect();
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
        Format::Text => {
            for r in &rows {
                let exp = r.expected_exponent.as_deref().unwrap_or("-");
                println!(
                    "{:<14} dim {:<2} {:<20} exponent {:<4} {}",
                    r.name, r.dim, r.expected_verdict, exp, r.description
                );
            }
        }
    }
    Ok(0)
}
