use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use parabolic::oracle::{
    certify_sufficient_condition_with, random_polynomial, seeded_rng, AnalyticSample, Parallelism, DEFAULT_CERTIFY_SAMPLES,
};
use parabolic::radius::{radius_entry, RADIUS_TOLERANCE};
use parabolic::series::{extremal_f0, extremal_g0, lp_coefficients, p0_coefficients, parabola_coefficients};
use parabolic::{omega_margin, ParabolaParams, RadiusId, Target, SCHEMA_VERSION};
use parabolic_cli::plot::{build_figure, PlotKind, PlotSpec};
use parabolic_cli::{jsonl, parse_params, radius_record, radius_table, read_series_csv, run_suite, series_csv, CliError, CliResult};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "parabolic", version, about = "Parabolic starlike class: evaluation, radii, verification and plots")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Tolerance for closed form vs oracle agreement.
    #[arg(long, global = true, default_value_t = RADIUS_TOLERANCE)]
    tol: f64,
    /// Sample count for plots and certification.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Seed for randomly generated inputs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Md,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKindArg {
    Region,
    MapImage,
    Discs,
    CorollaryFigure,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesMap {
    Lp,
    P0,
    F0,
    G0,
    Parabola,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a target map at z = re + i im.
    Eval {
        #[arg(allow_negative_numbers = true)]
        re: f64,
        #[arg(allow_negative_numbers = true)]
        im: f64,
        #[arg(long, default_value = "lp")]
        map: String,
        /// Map parameters as key=value (alpha, A, B).
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Taylor coefficients as CSV rows index,re,im.
    Series {
        #[arg(long, value_enum, default_value = "lp")]
        map: SeriesMap,
        #[arg(long, default_value_t = 16)]
        n: usize,
        /// tau=…, theta=… for the parabola family.
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Closed form and oracle root of one radius.
    Radius {
        id: String,
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Every catalogued radius.
    RadiusTable,
    /// Run verification reports as JSON lines.
    Verify {
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// Keep only items whose id or key matches.
        #[arg(long)]
        only: Vec<String>,
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Check the differential-inequality sufficient condition for one function.
    Certify {
        /// CSV series index,re,im; a seeded random polynomial when absent.
        #[arg(long)]
        series: Option<PathBuf>,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// Series are sampled on circles up to this radius.
        #[arg(long, default_value_t = 1.0)]
        disc_radius: f64,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        #[arg(long, default_value_t = 0.3)]
        scale: f64,
    },
    /// Emit a figure as SVG or CSV.
    Plot {
        #[arg(value_enum)]
        kind: PlotKindArg,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long, default_value = "lp")]
        map: String,
        #[arg(long = "param")]
        params: Vec<String>,
        /// Inscribed-disc center; repeatable.
        #[arg(long = "disc", allow_negative_numbers = true)]
        discs: Vec<f64>,
        /// Corollary index for corollary-figure.
        #[arg(long, default_value_t = 1)]
        k: u8,
    },
}

#[derive(Serialize)]
struct EvalRecord {
    schema: u32,
    map: String,
    z: [f64; 2],
    value: [f64; 2],
    omega_margin: f64,
}

fn format_or(global: &Global, default: Format, allowed: &[Format]) -> CliResult<Format> {
    let f = global.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage("this subcommand does not support the requested --format".into()))
    }
}

fn json_line<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string(value).map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    s.push('\n');
    Ok(s)
}

/// Runs one command; returns its output and whether every check passed.
fn run(cli: &Cli) -> CliResult<(String, bool)> {
    let g = &cli.global;
    match &cli.command {
        Command::Eval { re, im, map, params } => {
            format_or(g, Format::Json, &[Format::Json])?;
            let target = Target::from_name(map, &parse_params(params)?)?;
            let w = target.eval(Complex64::new(*re, *im))?;
            let rec = EvalRecord {
                schema: SCHEMA_VERSION,
                map: target.to_string(),
                z: [*re, *im],
                value: [w.re, w.im],
                omega_margin: omega_margin(w),
            };
            Ok((json_line(&rec)?, true))
        }
        Command::Series { map, n, params } => {
            format_or(g, Format::Csv, &[Format::Csv])?;
            let s = match map {
                SeriesMap::Lp => lp_coefficients(*n)?,
                SeriesMap::P0 => p0_coefficients(*n)?,
                SeriesMap::F0 => extremal_f0(*n)?,
                SeriesMap::G0 => extremal_g0(*n)?,
                SeriesMap::Parabola => {
                    let p = parse_params(params)?;
                    let get = |k: &str| p.get(k).copied().ok_or_else(|| CliError::Usage(format!("parabola needs --param {k}=…")));
                    parabola_coefficients(ParabolaParams::new(get("tau")?, get("theta")?)?, *n)?
                }
            };
            Ok((series_csv(&s)?, true))
        }
        Command::Radius { id, params } => {
            format_or(g, Format::Json, &[Format::Json])?;
            let entry = radius_entry(RadiusId::parse(id, &parse_params(params)?)?)?;
            let rec = radius_record(&entry)?;
            let ok = rec.gap <= g.tol;
            Ok((json_line(&rec)?, ok))
        }
        Command::RadiusTable => {
            let f = format_or(g, Format::Csv, &[Format::Csv, Format::Md])?;
            Ok((radius_table(f == Format::Md)?, true))
        }
        Command::Verify { id, all, only, params } => {
            format_or(g, Format::Json, &[Format::Json])?;
            let reports = if !params.is_empty() {
                let id = id.as_deref().ok_or_else(|| CliError::Usage("--param needs a radius id".into()))?;
                vec![radius_entry(RadiusId::parse(id, &parse_params(params)?)?)?.verify(g.tol)?]
            } else {
                let mut filters = only.clone();
                filters.extend(id.iter().cloned());
                if filters.is_empty() && !all {
                    return Err(CliError::Usage("give a radius id, --only or --all".into()));
                }
                let reports = run_suite(&filters, g.tol);
                match (reports.is_empty(), id) {
                    (true, Some(id)) => vec![radius_entry(RadiusId::parse(id, &Default::default())?)?.verify(g.tol)?],
                    (true, None) => return Err(CliError::Usage("no verification item matches".into())),
                    (false, _) => reports,
                }
            };
            let ok = reports.iter().all(|r| r.passed);
            Ok((jsonl(&reports)?, ok))
        }
        Command::Certify {
            series,
            t,
            disc_radius,
            degree,
            scale,
        } => {
            format_or(g, Format::Json, &[Format::Json])?;
            let s = match series {
                Some(path) => read_series_csv(fs::File::open(path)?)?,
                None => random_polynomial(&mut seeded_rng(g.seed), *degree, *scale),
            };
            let sample = AnalyticSample::from_series(s, *disc_radius)?;
            let samples = g.samples.unwrap_or(DEFAULT_CERTIFY_SAMPLES);
            let cert = certify_sufficient_condition_with(&sample, *t, samples, Parallelism::Global)?;
            Ok((json_line(&cert.report)?, cert.report.passed))
        }
        Command::Plot {
            kind,
            r,
            map,
            params,
            discs,
            k,
        } => {
            let f = format_or(g, Format::Svg, &[Format::Svg, Format::Csv])?;
            let mut spec = PlotSpec::new(match kind {
                PlotKindArg::Region => PlotKind::Region,
                PlotKindArg::MapImage => PlotKind::MapImage,
                PlotKindArg::Discs => PlotKind::Discs,
                PlotKindArg::CorollaryFigure => PlotKind::CorollaryFigure,
            });
            spec.r = *r;
            spec.target = Target::from_name(map, &parse_params(params)?)?;
            spec.discs = discs.clone();
            spec.corollary = *k;
            if let Some(n) = g.samples {
                spec.samples = n;
            }
            let fig = build_figure(&spec)?;
            let text = if f == Format::Svg { fig.to_svg() } else { fig.to_csv()? };
            Ok((text, true))
        }
    }
}

/// Runs `cli`, writing output to `--out` or `stdout`; returns the exit status.
fn execute(cli: &Cli, stdout: &mut dyn Write) -> u8 {
    match run(cli) {
        Ok((text, ok)) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, text),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {}", CliError::Io(e));
                return 1;
            }
            u8::from(!ok)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code() as u8
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(execute(&cli, &mut std::io::stdout().lock()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parabolic(args: &[&str]) -> (u8, String) {
        match Cli::try_parse_from(std::iter::once("parabolic").chain(args.iter().copied())) {
            Err(e) => (e.exit_code() as u8, String::new()),
            Ok(cli) => {
                let mut out = Vec::new();
                let code = execute(&cli, &mut out);
                (code, String::from_utf8(out).unwrap())
            }
        }
    }

    #[test]
    fn radius_json_fields() {
        let (code, out) = parabolic(&["radius", "delta"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["id"], "delta");
        assert!((v["closed_form"].as_f64().unwrap() - 5.0 / 12.0).abs() < 1e-15);
        assert!(v["gap"].as_f64().unwrap() < 1e-9);
    }

    #[test]
    fn radius_table_rows() {
        let (code, out) = parabolic(&["radius-table"]);
        assert_eq!(code, 0);
        let delta = out.lines().find(|l| l.starts_with("delta,")).unwrap();
        assert!(delta.contains("0.416666666667"));
        let sp = out.lines().find(|l| l.starts_with("sp,")).unwrap();
        let tanh2 = std::f64::consts::FRAC_PI_4.tanh().powi(2);
        assert!(sp.contains(&format!("{tanh2:.12}")));
        for line in out.lines().skip(1) {
            let gap: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
            assert!(gap < 1e-9, "{line}");
        }
        let (_, md) = parabolic(&["radius-table", "--format", "md"]);
        assert!(md.starts_with("| id |"));
    }

    #[test]
    fn verify_filters_and_exit_codes() {
        let (code, out) = parabolic(&["verify", "--all", "--only", "majorization"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);

        let (code, out) = parabolic(&["verify", "sp", "--tol", "1e-15"]);
        assert_eq!(code, 1);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["passed"], false);
        assert!(v["gap"].as_f64().unwrap() > 1e-15);

        assert_eq!(parabolic(&["verify", "no-such-id"]).0, 2);
        assert_eq!(parabolic(&["verify"]).0, 2);
        assert_eq!(parabolic(&["radius", "booth", "--param", "alpha=2"]).0, 2);
        assert_eq!(parabolic(&["plot", "region", "--samples", "8"]).0, 2);
        assert_eq!(parabolic(&["radius-table", "--format", "svg"]).0, 2);
        assert_eq!(parabolic(&["bogus"]).0, 2);
    }

    #[test]
    fn series_and_certify_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.csv");
        std::fs::write(&path, "index,re,im\n1,1,0\n2,0.3,0\n").unwrap();
        let p = path.to_str().unwrap();
        let (code, out) = parabolic(&["certify", "--series", p, "--t", "0"]);
        assert_eq!(code, 0, "{out}");
        std::fs::write(&path, "index,re,im\n1,1,0\n2,0.4,0\n").unwrap();
        assert_eq!(parabolic(&["certify", "--series", p, "--t", "0"]).0, 1);

        let (code, out) = parabolic(&["series", "--map", "g0", "--n", "4"]);
        assert_eq!(code, 0);
        let a2: f64 = out.lines().nth(3).unwrap().split(',').nth(1).unwrap().parse().unwrap();
        assert!((a2 - 8.0 / std::f64::consts::PI.powi(2)).abs() < 1e-12);
    }

    #[test]
    fn eval_reports_margin() {
        let (code, out) = parabolic(&["eval", "-0.5", "0", "--map", "lp"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        // LP(−r) = 1 + (8/π²) atan²(√r)
        let expected = 1.0 + 8.0 / std::f64::consts::PI.powi(2) * 0.5f64.sqrt().atan().powi(2);
        assert!((v["value"][0].as_f64().unwrap() - expected).abs() < 1e-14);
        assert!(v["omega_margin"].as_f64().unwrap() > 0.0);
    }

    #[test]
    fn plot_writes_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("region.svg");
        let (code, out) = parabolic(&["plot", "region", "--disc", "-1", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let svg = std::fs::read_to_string(&path).unwrap();
        assert!(svg.starts_with("<svg") && svg.contains(r#"class="disc[a=-1]""#));
    }
}
