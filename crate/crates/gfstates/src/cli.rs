//! Command-line entry point: run check suites, evaluate states and special
//! functions pointwise, and emit machine-readable reports and plot data.
//!
//! Exit codes: 0 all gated checks pass, 1 check failure, 2 usage/domain
//! error. Informational adjudication checks never affect the exit status.

use num_complex::Complex64;
use std::path::PathBuf;

use crate::error::Error;
use crate::genfun::{self, GeneratingFunction, Parity};
use crate::specfun;
use crate::states::{self, ModelConstants, Point};
use crate::verify::{self, checks::CheckConfig, render_reports, OutputFormat};

#[derive(Debug)]
struct UsageError(String);

/// Print a stdout line, exiting quietly when the pipe is closed (`| head`).
fn emit(line: std::fmt::Arguments<'_>) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{line}").is_err() {
        std::process::exit(0);
    }
}

macro_rules! emit {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

/// Selection of checks for `verify`.
#[derive(Debug, Clone)]
enum Selection {
    Suite(String),
    Checks(Vec<String>),
}

/// Parsed `verify` configuration (flags and optional flat key-value file).
#[derive(Debug, Clone)]
struct RunConfig {
    selection: Selection,
    format: OutputFormat,
    out: Option<PathBuf>,
    check_cfg: CheckConfig,
}

pub const USAGE: &str = "\
usage:
  gfstates verify [--suite NAME | --check ID,ID,...] [options]
  gfstates eval TARGET ARGS...
  gfstates plotdata KIND ARGS... --out PATH
  gfstates list-checks

verify options:
  --suite NAME        one of: baseline, gf, ladder, correspondence,
                      normalization, moments, orthogonality, spectrum, all
  --check ID,...      explicit check ids (see list-checks)
  --format FMT        json (default) or csv
  --out PATH          write the report file here
  --tol X             override every selected check's tolerance
  --beta X            flat-band field strength (default 1)
  --lambda X          collapse the half-line oscillator lambda grids to X
  --truncation N      override the default series truncation (60)
  --seed N            seed for randomized grids (default 42)
  --landau-c X        Landau constant M*omega/(2*hbar) (default 0.5)
  --config PATH       flat key-value file with the same keys as the flags

eval targets:
  hermite N X | assoc-legendre L M X | assoc-laguerre N ALPHA X
  bessel-j NU X | gauss-2f1 A B C X | ylm L M THETA PHI
  pochhammer A N | log-factorial N | spectrum L M
  legendre-norm M R [--series] [--printed] [--candidate]
  assoc-bessel K even|odd M BETA X
  gf-closed FAMILY X T_RE [T_IM] | gf-series FAMILY X T_RE T_IM ORDER
  cs-coeffs STATE | wavefunction STATE --at COORDS
    FAMILY: hermite | legendre-m M | laguerre-plus M | laguerre-minus M |
            laguerre-zero M | bessel-even K BETA | bessel-odd K BETA
    STATE:  canonical Z_RE Z_IM N | legendre M Z_RE Z_IM N |
            bg LAMBDA Z_RE Z_IM N | kp LAMBDA Z_RE Z_IM N |
            landau M W_RE W_IM N | bessel-cs even|odd K Z_RE Z_IM N

plotdata kinds:
  measure-density even|odd|odd-corrected|gaussian --rmax R --points N --out PATH
  measure-density legendre-m M --points N --out PATH
  gf-residual FAMILY X --tmax T --points N --order ORD --out PATH
  cs-density STATE --xmax X --points N --out PATH
";

/// Run the CLI with the given arguments (program name excluded).
pub fn run(args: Vec<String>) -> i32 {
    match dispatch(&args) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            2
        }
    }
}

fn dispatch(args: &[String]) -> CliResult<i32> {
    let Some(cmd) = args.first() else {
        return Err(UsageError("missing subcommand".into()));
    };
    match cmd.as_str() {
        "verify" => cmd_verify(&args[1..]),
        "eval" => cmd_eval(&args[1..]).map(|()| 0),
        "plotdata" => cmd_plotdata(&args[1..]).map(|()| 0),
        "list-checks" => {
            for def in verify::catalog() {
                emit!("{} ({}) suites: {}", def.id, if def.gated { "gated" } else { "informational" }, def.suites.join(","));
            }
            Ok(0)
        }
        other => Err(UsageError(format!("unknown subcommand '{other}'"))),
    }
}

fn parse_f64(s: &str, what: &str) -> CliResult<f64> {
    s.parse::<f64>().map_err(|_| UsageError(format!("invalid {what} '{s}'")))
}

fn parse_u32(s: &str, what: &str) -> CliResult<u32> {
    s.parse::<u32>().map_err(|_| UsageError(format!("invalid {what} '{s}'")))
}

fn parse_i64(s: &str, what: &str) -> CliResult<i64> {
    s.parse::<i64>().map_err(|_| UsageError(format!("invalid {what} '{s}'")))
}

fn parse_usize(s: &str, what: &str) -> CliResult<usize> {
    s.parse::<usize>().map_err(|_| UsageError(format!("invalid {what} '{s}'")))
}

/// Apply one key/value pair to the run configuration (flags and config-file
/// entries share this).
fn apply_key(cfg: &mut RunConfig, key: &str, value: &str) -> CliResult<()> {
    match key {
        "suite" => cfg.selection = Selection::Suite(value.to_string()),
        "check" => {
            cfg.selection = Selection::Checks(value.split(',').map(|s| s.trim().to_string()).collect())
        }
        "format" => {
            cfg.format = match value {
                "json" => OutputFormat::Json,
                "csv" => OutputFormat::Csv,
                other => return Err(UsageError(format!("unknown format '{other}'"))),
            }
        }
        "out" => cfg.out = Some(PathBuf::from(value)),
        "tol" => cfg.check_cfg.tol_override = Some(parse_f64(value, "tolerance")?),
        "beta" => cfg.check_cfg.constants.beta = parse_f64(value, "beta")?,
        "lambda" => cfg.check_cfg.lambda_override = Some(parse_f64(value, "lambda")?),
        "truncation" => cfg.check_cfg.truncation_override = Some(parse_usize(value, "truncation")?),
        "seed" => {
            cfg.check_cfg.seed = value
                .parse::<u64>()
                .map_err(|_| UsageError(format!("invalid seed '{value}'")))?
        }
        "landau-c" | "landau_c" => cfg.check_cfg.constants.landau_c = parse_f64(value, "landau-c")?,
        other => return Err(UsageError(format!("unknown option '{other}'"))),
    }
    Ok(())
}

fn load_config_file(cfg: &mut RunConfig, path: &str) -> CliResult<()> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read config file '{path}': {e}")))?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = match line.split_once('=') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => match line.split_once(char::is_whitespace) {
                Some((k, v)) => (k.trim(), v.trim()),
                None => {
                    return Err(UsageError(format!("config line {}: expected 'key = value', got '{line}'", lineno + 1)))
                }
            },
        };
        apply_key(cfg, key, value)?;
    }
    Ok(())
}

fn cmd_verify(args: &[String]) -> CliResult<i32> {
    let mut cfg = RunConfig {
        selection: Selection::Suite("all".into()),
        format: OutputFormat::Json,
        out: None,
        check_cfg: CheckConfig::default(),
    };
    // config file first, flags override
    let mut i = 0;
    while i < args.len() {
        if args[i] == "--config" {
            let value = args.get(i + 1).ok_or_else(|| UsageError("--config needs a path".into()))?;
            load_config_file(&mut cfg, value)?;
        }
        i += 1;
    }
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let key = arg
            .strip_prefix("--")
            .ok_or_else(|| UsageError(format!("unexpected argument '{arg}'")))?;
        let value = args
            .get(i + 1)
            .ok_or_else(|| UsageError(format!("--{key} needs a value")))?;
        if key != "config" {
            apply_key(&mut cfg, key, value)?;
        }
        i += 2;
    }
    cfg.check_cfg.constants.validate().map_err(UsageError::from)?;

    let ids: Vec<&str> = match &cfg.selection {
        Selection::Suite(name) => verify::suite_ids(name)
            .ok_or_else(|| UsageError(format!("unknown suite '{name}'")))?,
        Selection::Checks(list) => {
            let mut ids = Vec::new();
            for id in list {
                let def = verify::catalog()
                    .iter()
                    .find(|d| d.id == id.as_str())
                    .ok_or_else(|| UsageError(format!("unknown check id '{id}'")))?;
                ids.push(def.id);
            }
            ids
        }
    };

    let outcome = verify::run_ids(&ids, &cfg.check_cfg).map_err(UsageError::from)?;
    for note in &outcome.notes {
        eprintln!("note: {note}");
    }
    for report in &outcome.reports {
        let gated = verify::catalog().iter().find(|d| d.id == report.check_id).map(|d| d.gated).unwrap_or(true);
        let status = match (report.pass, gated) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "INFO-FAIL",
        };
        emit!(
            "[{status}] {} max_residual={:.3e} tolerance={:.1e}",
            report.check_id, report.max_residual, report.tolerance
        );
    }
    let rendered = render_reports(&outcome.reports, cfg.format);
    if let Some(path) = &cfg.out {
        std::fs::write(path, rendered)
            .map_err(|e| UsageError(format!("cannot write report to '{}': {e}", path.display())))?;
        emit!("report written to {}", path.display());
    }
    Ok(if outcome.gated_failures > 0 { 1 } else { 0 })
}

fn parse_gf_family(args: &[String]) -> CliResult<(GeneratingFunction, usize)> {
    let name = args.first().ok_or_else(|| UsageError("missing generating-function family".into()))?;
    match name.as_str() {
        "hermite" => Ok((GeneratingFunction::Hermite, 1)),
        "legendre-m" => {
            let m = parse_u32(args.get(1).ok_or_else(|| UsageError("legendre-m needs M".into()))?, "m")?;
            Ok((GeneratingFunction::LegendreM { m }, 2))
        }
        "laguerre-plus" => {
            let m = parse_f64(args.get(1).ok_or_else(|| UsageError("laguerre-plus needs M".into()))?, "m")?;
            Ok((GeneratingFunction::LaguerrePlus { m }, 2))
        }
        "laguerre-minus" => {
            let m = parse_f64(args.get(1).ok_or_else(|| UsageError("laguerre-minus needs M".into()))?, "m")?;
            Ok((GeneratingFunction::LaguerreMinus { m }, 2))
        }
        "laguerre-zero" => {
            let m = parse_f64(args.get(1).ok_or_else(|| UsageError("laguerre-zero needs M".into()))?, "m")?;
            Ok((GeneratingFunction::LaguerreZero { m }, 2))
        }
        "bessel-even" | "bessel-odd" => {
            let k = parse_u32(args.get(1).ok_or_else(|| UsageError("bessel family needs K".into()))?, "k")?;
            let beta = parse_f64(args.get(2).ok_or_else(|| UsageError("bessel family needs BETA".into()))?, "beta")?;
            if name == "bessel-even" {
                Ok((GeneratingFunction::BesselEven { k, beta }, 3))
            } else {
                Ok((GeneratingFunction::BesselOdd { k, beta }, 3))
            }
        }
        other => Err(UsageError(format!("unknown generating-function family '{other}'"))),
    }
}

struct StateSpec {
    series: crate::fock::CoefficientSeries,
    point_kind: PointKind,
}

enum PointKind {
    Line,
    Sphere,
    Plane,
    Band,
}

fn parse_state(args: &[String], beta: f64) -> CliResult<(StateSpec, usize)> {
    let name = args.first().ok_or_else(|| UsageError("missing state family".into()))?;
    let need = |i: usize, what: &str| -> CliResult<&String> {
        args.get(i).ok_or_else(|| UsageError(format!("state '{name}' needs {what}")))
    };
    match name.as_str() {
        "canonical" => {
            let z = Complex64::new(parse_f64(need(1, "Z_RE")?, "z")?, parse_f64(need(2, "Z_IM")?, "z")?);
            let n = parse_usize(need(3, "N")?, "N")?;
            Ok((StateSpec { series: states::canonical_cs(z, n)?, point_kind: PointKind::Line }, 4))
        }
        "legendre" => {
            let m = parse_u32(need(1, "M")?, "m")?;
            let z = Complex64::new(parse_f64(need(2, "Z_RE")?, "z")?, parse_f64(need(3, "Z_IM")?, "z")?);
            let n = parse_usize(need(4, "N")?, "N")?;
            Ok((StateSpec { series: states::legendre_cs(m, z, n)?, point_kind: PointKind::Sphere }, 5))
        }
        "bg" => {
            let lambda = parse_f64(need(1, "LAMBDA")?, "lambda")?;
            let z = Complex64::new(parse_f64(need(2, "Z_RE")?, "z")?, parse_f64(need(3, "Z_IM")?, "z")?);
            let n = parse_usize(need(4, "N")?, "N")?;
            Ok((StateSpec { series: states::cs_bg(lambda, z, n)?, point_kind: PointKind::Line }, 5))
        }
        "kp" => {
            let lambda = parse_f64(need(1, "LAMBDA")?, "lambda")?;
            let z = Complex64::new(parse_f64(need(2, "Z_RE")?, "z")?, parse_f64(need(3, "Z_IM")?, "z")?);
            let n = parse_usize(need(4, "N")?, "N")?;
            Ok((StateSpec { series: states::cs_kp(lambda, z, n)?, point_kind: PointKind::Line }, 5))
        }
        "landau" => {
            let m = parse_u32(need(1, "M")?, "m")?;
            let w = Complex64::new(parse_f64(need(2, "W_RE")?, "w")?, parse_f64(need(3, "W_IM")?, "w")?);
            let n = parse_usize(need(4, "N")?, "N")?;
            Ok((StateSpec { series: states::landau_cs(m, w, n)?, point_kind: PointKind::Plane }, 5))
        }
        "bessel-cs" => {
            let parity = match need(1, "PARITY")?.as_str() {
                "even" => Parity::Even,
                "odd" => Parity::Odd,
                other => return Err(UsageError(format!("unknown parity '{other}'"))),
            };
            let k = parse_u32(need(2, "K")?, "k")?;
            let z = Complex64::new(parse_f64(need(3, "Z_RE")?, "z")?, parse_f64(need(4, "Z_IM")?, "z")?);
            let n = parse_usize(need(5, "N")?, "N")?;
            let _ = beta;
            Ok((StateSpec { series: states::bessel_cs(parity, k, z, n)?, point_kind: PointKind::Band }, 6))
        }
        other => Err(UsageError(format!("unknown state family '{other}'"))),
    }
}

fn fmt_complex(v: Complex64) -> String {
    format!("{},{}", v.re, v.im)
}

fn cmd_eval(args: &[String]) -> CliResult<()> {
    let target = args.first().ok_or_else(|| UsageError("eval needs a target".into()))?;
    let rest = &args[1..];
    let need = |i: usize, what: &str| -> CliResult<&String> {
        rest.get(i).ok_or_else(|| UsageError(format!("eval {target} needs {what}")))
    };
    match target.as_str() {
        "hermite" => {
            let n = parse_u32(need(0, "N")?, "n")?;
            let x = parse_f64(need(1, "X")?, "x")?;
            emit!("hermite,{n},{x},{}", specfun::hermite(n, x));
        }
        "assoc-legendre" => {
            let l = parse_u32(need(0, "L")?, "l")?;
            let m = parse_u32(need(1, "M")?, "m")?;
            let x = parse_f64(need(2, "X")?, "x")?;
            emit!("assoc-legendre,{l},{m},{x},{}", specfun::assoc_legendre(l, m, x)?);
        }
        "assoc-laguerre" => {
            let n = parse_u32(need(0, "N")?, "n")?;
            let alpha = parse_f64(need(1, "ALPHA")?, "alpha")?;
            let x = parse_f64(need(2, "X")?, "x")?;
            emit!("assoc-laguerre,{n},{alpha},{x},{}", specfun::assoc_laguerre(n, alpha, x));
        }
        "bessel-j" => {
            let nu = parse_f64(need(0, "NU")?, "nu")?;
            let x = parse_f64(need(1, "X")?, "x")?;
            emit!("bessel-j,{nu},{x},{}", specfun::bessel_j(nu, x)?);
        }
        "gauss-2f1" => {
            let a = parse_f64(need(0, "A")?, "a")?;
            let b = parse_f64(need(1, "B")?, "b")?;
            let c = parse_f64(need(2, "C")?, "c")?;
            let x = parse_f64(need(3, "X")?, "x")?;
            emit!("gauss-2f1,{a},{b},{c},{x},{}", specfun::gauss_2f1(a, b, c, x)?);
        }
        "ylm" => {
            let l = parse_u32(need(0, "L")?, "l")?;
            let m = parse_i64(need(1, "M")?, "m")? as i32;
            let theta = parse_f64(need(2, "THETA")?, "theta")?;
            let phi = parse_f64(need(3, "PHI")?, "phi")?;
            emit!("ylm,{l},{m},{theta},{phi},{}", fmt_complex(specfun::spherical_harmonic(l, m, theta, phi)?));
        }
        "pochhammer" => {
            let a = parse_f64(need(0, "A")?, "a")?;
            let n = parse_u32(need(1, "N")?, "n")?;
            emit!("pochhammer,{a},{n},{}", specfun::pochhammer(a, n));
        }
        "log-factorial" => {
            let n = need(0, "N")?.parse::<u64>().map_err(|_| UsageError("invalid n".into()))?;
            emit!("log-factorial,{n},{}", specfun::log_factorial(n));
        }
        "spectrum" => {
            let l = parse_i64(need(0, "L")?, "l")?;
            let m = parse_i64(need(1, "M")?, "m")?;
            let consts = ModelConstants::default();
            emit!("spectrum,{l},{m},{}", verify::spectrum(l, m, &consts));
        }
        "legendre-norm" => {
            let m = parse_u32(need(0, "M")?, "m")?;
            let r = parse_f64(need(1, "R")?, "r")?;
            let flags: Vec<&str> = rest[2..].iter().map(|s| s.as_str()).collect();
            let all = flags.is_empty();
            let mut row = format!("legendre-norm,{m},{r}");
            if all || flags.contains(&"--series") {
                row.push_str(&format!(",{}", states::legendre_norm_series_auto(m, r)?));
            }
            if all || flags.contains(&"--printed") {
                row.push_str(&format!(",{}", states::legendre_norm_printed(m, r)?));
            }
            if flags.contains(&"--candidate") {
                row.push_str(&format!(",{}", states::legendre_norm_candidate(m, r)?));
            }
            emit!("{row}");
        }
        "assoc-bessel" => {
            let k = parse_u32(need(0, "K")?, "k")?;
            let parity = match need(1, "PARITY")?.as_str() {
                "even" => Parity::Even,
                "odd" => Parity::Odd,
                other => return Err(UsageError(format!("unknown parity '{other}'"))),
            };
            let m = parse_u32(need(2, "M")?, "m")?;
            let beta = parse_f64(need(3, "BETA")?, "beta")?;
            let x = parse_f64(need(4, "X")?, "x")?;
            emit!("assoc-bessel,{k},{m},{beta},{x},{}", genfun::assoc_bessel(k, parity, m, beta, x)?);
        }
        "gf-closed" => {
            let (spec, used) = parse_gf_family(rest)?;
            let x = parse_f64(need(used, "X")?, "x")?;
            let tre = parse_f64(need(used + 1, "T_RE")?, "t")?;
            let tim = rest.get(used + 2).map(|s| parse_f64(s, "t")).transpose()?.unwrap_or(0.0);
            let v = genfun::gf_closed(&spec, x, Complex64::new(tre, tim))?;
            emit!("gf-closed,{x},{tre},{tim},{}", fmt_complex(v));
        }
        "gf-series" => {
            let (spec, used) = parse_gf_family(rest)?;
            let x = parse_f64(need(used, "X")?, "x")?;
            let tre = parse_f64(need(used + 1, "T_RE")?, "t")?;
            let tim = parse_f64(need(used + 2, "T_IM")?, "t")?;
            let order = parse_usize(need(used + 3, "ORDER")?, "order")?;
            let (v, last) = genfun::gf_series(&spec, x, Complex64::new(tre, tim), order)?;
            emit!("gf-series,{x},{tre},{tim},{order},{},{last}", fmt_complex(v));
        }
        "cs-coeffs" => {
            let (state, _) = parse_state(rest, 1.0)?;
            for (label, c) in state.series.labels().iter().zip(state.series.coeffs().iter()) {
                emit!("{label:?},{},{}", c.re, c.im);
            }
        }
        "wavefunction" => {
            let (state, used) = parse_state(rest, 1.0)?;
            let at = rest
                .iter()
                .position(|s| s == "--at")
                .ok_or_else(|| UsageError("wavefunction needs --at COORDS".into()))?;
            if at < used {
                return Err(UsageError("--at must follow the state spec".into()));
            }
            let coords: Vec<f64> = rest[at + 1..]
                .iter()
                .map(|s| parse_f64(s, "coordinate"))
                .collect::<CliResult<_>>()?;
            let consts = ModelConstants::default();
            let point = match (state.point_kind, coords.as_slice()) {
                (PointKind::Line, [x]) => Point::Line { x: *x },
                (PointKind::Sphere, [theta, phi]) => Point::Sphere { theta: *theta, phi: *phi },
                (PointKind::Plane, [r, phi]) => Point::Plane { r: *r, phi: *phi },
                (PointKind::Band, [x, y]) => Point::Band { x: *x, y: *y },
                _ => return Err(UsageError("wrong number of coordinates for this family".into())),
            };
            let v = states::cs_wavefunction(&state.series, point, &consts)?;
            emit!("wavefunction,{}", fmt_complex(v));
        }
        other => return Err(UsageError(format!("unknown eval target '{other}'"))),
    }
    Ok(())
}

fn flag_value<'a>(args: &'a [String], name: &str) -> Option<&'a String> {
    args.iter().position(|s| s == name).and_then(|i| args.get(i + 1))
}

fn cmd_plotdata(args: &[String]) -> CliResult<()> {
    let kind = args.first().ok_or_else(|| UsageError("plotdata needs a kind".into()))?;
    let out = flag_value(args, "--out").ok_or_else(|| UsageError("plotdata needs --out PATH".into()))?;
    let points = flag_value(args, "--points").map(|s| parse_usize(s, "points")).transpose()?.unwrap_or(500);
    if points < 2 {
        return Err(UsageError("--points must be at least 2".into()));
    }
    let mut rows = String::new();
    match kind.as_str() {
        "measure-density" => {
            let which = args.get(1).ok_or_else(|| UsageError("measure-density needs a family".into()))?;
            match which.as_str() {
                "even" | "odd" | "odd-corrected" | "gaussian" => {
                    let rmax = flag_value(args, "--rmax").map(|s| parse_f64(s, "rmax")).transpose()?.unwrap_or(10.0);
                    let measure = match which.as_str() {
                        "even" => states::RadialMeasure::FlatBandEvenPrinted,
                        "odd" => states::RadialMeasure::FlatBandOddPrinted,
                        "odd-corrected" => states::RadialMeasure::FlatBandOddCorrected,
                        _ => states::RadialMeasure::CanonicalGaussian,
                    };
                    rows.push_str("r,density\n");
                    for i in 1..=points {
                        let r = rmax * i as f64 / points as f64;
                        rows.push_str(&format!("{r},{}\n", measure.density(r)?));
                    }
                }
                "legendre-m" => {
                    let m = parse_u32(args.get(2).ok_or_else(|| UsageError("legendre-m needs M".into()))?, "m")?;
                    let line1 = states::RadialMeasure::SphereLine1 { m };
                    let line2 = states::RadialMeasure::SphereLine2 { m };
                    rows.push_str("r,density_printed_line2,density_line1_series\n");
                    for i in 1..points {
                        let r = i as f64 / points as f64;
                        rows.push_str(&format!("{r},{},{}\n", line2.density(r)?, line1.density(r)?));
                    }
                }
                other => return Err(UsageError(format!("unknown measure family '{other}'"))),
            }
        }
        "gf-residual" => {
            let (spec, used) = parse_gf_family(&args[1..])?;
            let x = parse_f64(
                args.get(1 + used).ok_or_else(|| UsageError("gf-residual needs X after the family".into()))?,
                "x",
            )?;
            let tmax = flag_value(args, "--tmax").map(|s| parse_f64(s, "tmax")).transpose()?.unwrap_or(0.8);
            let order = flag_value(args, "--order").map(|s| parse_usize(s, "order")).transpose()?.unwrap_or(80);
            rows.push_str("t,residual\n");
            for i in 1..=points {
                let t = tmax * i as f64 / points as f64;
                let tc = Complex64::new(t, 0.0);
                let closed = genfun::gf_closed(&spec, x, tc)?;
                let (sum, _) = genfun::gf_series(&spec, x, tc, order)?;
                rows.push_str(&format!("{t},{}\n", (closed - sum).norm()));
            }
        }
        "cs-density" => {
            let (state, _) = parse_state(&args[1..], 1.0)?;
            let xmax = flag_value(args, "--xmax").map(|s| parse_f64(s, "xmax")).transpose()?.unwrap_or(4.0);
            let consts = ModelConstants::default();
            rows.push_str("x,density\n");
            for i in 1..=points {
                let x = xmax * i as f64 / points as f64;
                let point = match state.point_kind {
                    PointKind::Line => Point::Line { x },
                    PointKind::Plane => Point::Plane { r: x, phi: 0.0 },
                    PointKind::Band => Point::Band { x, y: 0.0 },
                    PointKind::Sphere => Point::Sphere { theta: (x / xmax * std::f64::consts::PI).min(std::f64::consts::PI), phi: 0.0 },
                };
                let v = states::cs_wavefunction(&state.series, point, &consts)?;
                rows.push_str(&format!("{x},{}\n", v.norm_sqr()));
            }
        }
        other => return Err(UsageError(format!("unknown plotdata kind '{other}'"))),
    }
    std::fs::write(out, rows).map_err(|e| UsageError(format!("cannot write '{out}': {e}")))?;
    emit!("plot data written to {out}");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert!(dispatch(&["frobnicate".to_string()]).is_err());
        assert_eq!(run(vec!["frobnicate".to_string()]), 2);
    }

    #[test]
    fn eval_spectrum_row() {
        // direct substitution values go through the spectrum kernel
        assert!(dispatch(&["eval".into(), "spectrum".into(), "0".into(), "1".into()]).is_ok());
    }

    #[test]
    fn config_file_roundtrip() {
        let dir = std::env::temp_dir().join("gfstates_cli_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cfg.txt");
        std::fs::write(&path, "suite = baseline\nformat = csv\nseed = 7\n# comment\nbeta 2.0\n").unwrap();
        let mut cfg = RunConfig {
            selection: Selection::Suite("all".into()),
            format: OutputFormat::Json,
            out: None,
            check_cfg: CheckConfig::default(),
        };
        load_config_file(&mut cfg, path.to_str().unwrap()).unwrap();
        assert!(matches!(cfg.selection, Selection::Suite(ref s) if s == "baseline"));
        assert_eq!(cfg.format, OutputFormat::Csv);
        assert_eq!(cfg.check_cfg.seed, 7);
        assert_eq!(cfg.check_cfg.constants.beta, 2.0);
        let bad = dir.join("bad.txt");
        std::fs::write(&bad, "nonsense-without-value\n").unwrap();
        assert!(load_config_file(&mut cfg, bad.to_str().unwrap()).is_err());
    }
}
