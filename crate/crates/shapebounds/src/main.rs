//! Command-line interface: compute shape quantities, verify the inequality
//! battery, sweep thinning families, emit the thin-limit calibration table,
//! and run the full verification suite.
//!
//! Exit codes: 0 on success with all checks passing, 1 when a verification
//! entry fails, 2 on usage or input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use shapebounds::bounds::BoundValues;
use shapebounds::geometry::ShapeMeasurements;
use shapebounds::harness::{
    family_asymptotics_report, load_polygon, run_suite, sweep, thinning_ratio_specs, FamilySpec,
    RatioSpec, Realization,
};
use shapebounds::inequalities::{
    analyze, verify, verify_closed_form, ClosedFormValues, DiskReference, FunctionalSuite,
    InequalityReport,
};
use shapebounds::pde::{FunctionalValues, DEFAULT_TOLERANCE};

#[derive(Parser)]
#[command(
    name = "shapebounds",
    about = "Shape functionals of planar convex bodies: torsional rigidity, \
             the first Dirichlet eigenvalue, and sharp inequalities between them",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArgs {
    /// Polygon JSON file ({"vertices": [[x, y], ...]}) or a family spec
    /// such as family:rectangle:1:0.1, family:sector:0.4,
    /// family:ellipse:0.05, family:random_polygon:7:30
    #[arg(long)]
    shape: String,
    /// Boundary resolution for curved families
    #[arg(long, default_value_t = shapebounds::harness::DEFAULT_BOUNDARY_RESOLUTION)]
    resolution: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Compute measurements, solver values, and profile bounds for a shape
    Compute {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Relative solver tolerance
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        fem_tol: f64,
    },
    /// Evaluate every inequality on a shape and report pass/fail entries
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Extra margin tolerance applied to every entry
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
        /// Relative solver tolerance
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        fem_tol: f64,
    },
    /// Sweep a family parameter and tabulate functionals and gaps as CSV
    Sweep {
        /// Family template, e.g. family:rectangle:1:0.1 (the last knob is
        /// swept: rectangle height, sector opening, ellipse axis, box
        /// thickness)
        #[arg(long)]
        family: String,
        /// Comma-separated parameter values (at least two)
        #[arg(long)]
        param: String,
        /// Comma-separated ratio columns, e.g. gap1/param,gap2/beta^4
        #[arg(long)]
        ratios: Option<String>,
        /// Output CSV path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Relative solver tolerance
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        fem_tol: f64,
    },
    /// Emit the thin-limit calibration table for three families as JSON
    Table2 {
        /// Output JSON path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Relative solver tolerance
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        fem_tol: f64,
    },
    /// Run the verification suite over the fixed battery and seeded random
    /// polygons
    Suite {
        /// Number of random polygons (seeds 1..=N)
        #[arg(long, default_value_t = 200)]
        seeds: usize,
        /// Extra margin tolerance applied to every entry
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
        /// Relative solver tolerance
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        fem_tol: f64,
    },
}

/// A shape argument resolved to either a polygon or closed forms.
enum ResolvedShape {
    Polygon {
        label: String,
        polygon: shapebounds::geometry::ConvexPolygon,
    },
    ClosedForm {
        label: String,
        values: ClosedFormValues,
    },
}

fn resolve_shape(args: &ShapeArgs) -> Result<ResolvedShape, String> {
    if args.shape.starts_with("family:") {
        let mut spec = FamilySpec::parse(&args.shape).map_err(|e| e.to_string())?;
        spec.boundary_resolution = args.resolution;
        let label = spec.label();
        match spec.realize().map_err(|e| e.to_string())? {
            Realization::Polygon(polygon) => Ok(ResolvedShape::Polygon { label, polygon }),
            Realization::ClosedForm(values) => Ok(ResolvedShape::ClosedForm { label, values }),
        }
    } else {
        let path = Path::new(&args.shape);
        let polygon = load_polygon(path).map_err(|e| format!("{}: {e}", args.shape))?;
        let label = path
            .file_stem()
            .map_or_else(|| args.shape.clone(), |s| s.to_string_lossy().into_owned());
        Ok(ResolvedShape::Polygon { label, polygon })
    }
}

#[derive(Serialize)]
struct ComputeOutput {
    shape: String,
    measurements: ShapeMeasurements,
    values: FunctionalValues,
    bounds: BoundValues,
    functionals: FunctionalSuite,
}

#[derive(Serialize)]
struct ClosedFormOutput {
    shape: String,
    closed_form: ClosedFormValues,
    functionals: FunctionalSuite,
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_compute(shape: &ShapeArgs, fem_tol: f64) -> Result<ExitCode, String> {
    let json = match resolve_shape(shape)? {
        ResolvedShape::Polygon { label, polygon } => {
            let data = analyze(&label, polygon, fem_tol).map_err(|e| e.to_string())?;
            let output = ComputeOutput {
                shape: data.label,
                measurements: data.measurements,
                values: data.values,
                bounds: data.bounds,
                functionals: data.functionals,
            };
            serde_json::to_string_pretty(&output).expect("serializable")
        }
        ResolvedShape::ClosedForm { label, values } => {
            let output = ClosedFormOutput {
                shape: label,
                functionals: values.functionals(),
                closed_form: values,
            };
            serde_json::to_string_pretty(&output).expect("serializable")
        }
    };
    println!("{json}");
    Ok(ExitCode::SUCCESS)
}

fn report_exit(report: &InequalityReport) -> ExitCode {
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_verify(shape: &ShapeArgs, tol: f64, fem_tol: f64) -> Result<ExitCode, String> {
    let report = match resolve_shape(shape)? {
        ResolvedShape::Polygon { label, polygon } => {
            let data = analyze(&label, polygon, fem_tol).map_err(|e| e.to_string())?;
            let disk = DiskReference::compute(fem_tol).map_err(|e| e.to_string())?;
            verify(&data, &disk, tol).map_err(|e| e.to_string())?
        }
        ResolvedShape::ClosedForm { values, .. } => verify_closed_form(&values, tol),
    };
    let json = serde_json::to_string_pretty(&report).expect("serializable");
    println!("{json}");
    Ok(report_exit(&report))
}

fn run_sweep(
    family: &str,
    param: &str,
    ratios: Option<&str>,
    out: Option<&PathBuf>,
    fem_tol: f64,
) -> Result<ExitCode, String> {
    let template = FamilySpec::parse(family).map_err(|e| e.to_string())?;
    let params = param
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid parameter value {s:?}"))
        })
        .collect::<Result<Vec<f64>, String>>()?;
    let ratio_specs = match ratios {
        Some(text) => text
            .split(',')
            .map(|s| RatioSpec::parse(s.trim()).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, String>>()?,
        None => thinning_ratio_specs(),
    };
    let table = sweep(&template, &params, &ratio_specs, fem_tol).map_err(|e| e.to_string())?;
    emit(out, &table.to_csv())?;
    Ok(ExitCode::SUCCESS)
}

fn run_table2(out: Option<&PathBuf>, fem_tol: f64) -> Result<ExitCode, String> {
    let report = family_asymptotics_report(fem_tol).map_err(|e| e.to_string())?;
    let mut json = serde_json::to_string_pretty(&report).expect("serializable");
    json.push('\n');
    emit(out, &json)?;
    Ok(if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_suite_command(seeds: usize, tol: f64, fem_tol: f64) -> Result<ExitCode, String> {
    let outcome = run_suite(seeds, fem_tol, tol).map_err(|e| e.to_string())?;
    println!("{}", outcome.summary());
    Ok(if outcome.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute { shape, fem_tol } => run_compute(shape, *fem_tol),
        Command::Verify {
            shape,
            tol,
            fem_tol,
        } => run_verify(shape, *tol, *fem_tol),
        Command::Sweep {
            family,
            param,
            ratios,
            out,
            fem_tol,
        } => run_sweep(family, param, ratios.as_deref(), out.as_ref(), *fem_tol),
        Command::Table2 { out, fem_tol } => run_table2(out.as_ref(), *fem_tol),
        Command::Suite {
            seeds,
            tol,
            fem_tol,
        } => run_suite_command(*seeds, *tol, *fem_tol),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
