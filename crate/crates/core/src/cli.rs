//! Command-line front end.
//!
//! Every verb prints one JSON [`Report`] on stdout with keys in sorted order.
//! Exit status: 0 pass, 1 fail or domain error, 2 usage error, 3 internal error.

use std::ffi::OsString;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use clap::{ArgAction, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cover::{build_cover, f4_roots, CoverParams, RamificationCase};
use crate::curve::{case1_curve, case2_curve, case3_curve, curve_from_cover, subcover, Genus2Curve};
use crate::error::{Error, Result};
use crate::exactalg::{QuadExt, Rational, Scalar};
use crate::igusa::{igusa_from_curve, reduced_aut_group_numeric, Cx};
use crate::loci::{self, nielsen_count, recover_case3_numeric, CycleType, Group};
use crate::verify::{run_suites, Suite};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Tolerance of the numeric automorphism oracle.
const AUT_TOL: f64 = 1e-20;

#[derive(Debug, Parser)]
#[command(name = "g2d5", version, about = "Genus-2 curves with a degree-5 elliptic subcover")]
pub struct Cli {
    /// Emit the JSON report on stdout (default on).
    #[arg(long, global = true, action = ArgAction::Set, num_args = 0..=1,
          default_value_t = true, default_missing_value = "true")]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Precision of the numeric oracle.
    #[arg(long, global = true, default_value_t = 128)]
    pub precision_bits: usize,
    /// No summary on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct AbArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub a: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub b: Rational,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build F1..F4 and φ.
    Cover(AbArgs),
    /// The genus-2 curve and elliptic subcover at both roots of F4, or a
    /// specialized model with --case.
    Curve {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, required_unless_present = "case")]
        b: Option<Rational>,
        #[arg(long, value_parser = degenerate_case, conflicts_with = "b")]
        case: Option<RamificationCase>,
    },
    /// Igusa and absolute invariants of the curve at (a, b), or of
    /// y² = f0 + f1 x + ... + f6 x⁶ given by --coeffs.
    Invariants {
        #[arg(long, value_parser = rational, allow_hyphen_values = true, required_unless_present = "coeffs")]
        a: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, requires = "a")]
        b: Option<Rational>,
        #[arg(long, conflicts_with_all = ["a", "b"], allow_hyphen_values = true)]
        coeffs: Option<String>,
    },
    /// Locus data: the T-formulas for cases I and II, the case III model.
    Locus {
        #[arg(long, value_parser = degenerate_case)]
        case: RamificationCase,
        #[arg(long = "t", value_parser = rational, allow_hyphen_values = true, required_unless_present = "a")]
        t: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, conflicts_with = "t")]
        a: Option<Rational>,
    },
    /// Recover the locus parameter from (i1, i2, i3).
    Recover {
        #[arg(long, value_parser = degenerate_case)]
        case: RamificationCase,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        i1: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        i2: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        i3: Rational,
    },
    /// Count a Nielsen class by brute force.
    Nielsen {
        #[arg(long)]
        group: Group,
        /// Comma-separated cycle types, e.g. "2^2,2^2,4,2".
        #[arg(long)]
        types: String,
    },
    /// Run verification suites.
    Verify {
        /// "all" or a comma-separated list of suite names.
        #[arg(long, default_value = "default")]
        suite: String,
    },
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn degenerate_case(s: &str) -> std::result::Result<RamificationCase, String> {
    match s.parse::<RamificationCase>() {
        Ok(RamificationCase::NonDegenerate) => Err("expected I, II or III".into()),
        r => r.map_err(|e| e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub status: ReportStatus,
    pub payload: Value,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub exit_code: i32,
}

impl Report {
    fn pass(payload: Value) -> Self {
        Self::with_status(true, payload)
    }

    fn with_status(ok: bool, payload: Value) -> Self {
        Report {
            status: if ok { ReportStatus::Pass } else { ReportStatus::Fail },
            payload,
            elapsed_ms: 0,
            exit_code: if ok { EXIT_PASS } else { EXIT_FAIL },
        }
    }

    fn error(e: &Error) -> Self {
        let exit_code = match e {
            Error::InvalidInput(_) | Error::Parse(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        };
        Report {
            status: ReportStatus::Error,
            payload: json!({ "error": e.name(), "message": e.to_string() }),
            elapsed_ms: 0,
            exit_code,
        }
    }

    fn internal(msg: String) -> Self {
        Report {
            status: ReportStatus::Error,
            payload: json!({ "error": "internal", "message": msg }),
            elapsed_ms: 0,
            exit_code: EXIT_INTERNAL,
        }
    }

    /// Canonical JSON: sorted keys, one line.
    pub fn to_json(&self) -> String {
        serde_json::to_value(self)
            .and_then(|v| serde_json::to_string(&v))
            .expect("report serializes")
    }
}

fn value(x: impl Serialize) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::InvalidInput(e.to_string()))
}

fn curve_json(curve: &Genus2Curve, precision_bits: usize) -> Result<Value> {
    let igusa = igusa_from_curve(curve);
    let absolute = match igusa.absolute() {
        Ok(a) => value(a)?,
        Err(Error::J2Zero) => Value::Null,
        Err(e) => return Err(e),
    };
    let aut = reduced_aut_group_numeric(curve, precision_bits, AUT_TOL)?;
    Ok(json!({
        "curve": value(curve)?,
        "igusa": value(&igusa)?,
        "absolute": absolute,
        "reduced_aut": value(aut)?,
    }))
}

fn cover_curves(a: &Rational, b: &Rational) -> Result<Vec<(QuadExt, Genus2Curve, Value)>> {
    let params = CoverParams::new(a.clone(), b.clone())?;
    let mut out = Vec::new();
    for r in f4_roots(&params)? {
        if r.is_one {
            continue;
        }
        let curve = curve_from_cover(&params, &r.z)?;
        let sub = value(subcover(&params, &r.z)?)?;
        out.push((r.z, curve, sub));
    }
    Ok(out)
}

fn parse_coeffs(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|c| c.trim().parse()).collect()
}

fn locus(case: RamificationCase, t: Option<&Rational>, a: Option<&Rational>, bits: usize) -> Result<Value> {
    if case == RamificationCase::III {
        let a = a.ok_or_else(|| Error::InvalidInput("case III takes --a".into()))?;
        let model = case3_curve(a)?;
        let mut v = curve_json(&model.curve, bits)?;
        v["b"] = value(&model.b)?;
        v["z"] = value(&model.z)?;
        v["subcover"] = value(&model.subcover)?;
        v["y3bar_j"] = value(crate::curve::y3bar_j())?;
        return Ok(v);
    }
    let param = match (t, a) {
        (Some(t), _) => loci::TParam { t: t.clone(), case, degenerate: false },
        (None, Some(a)) => loci::t_of_a(a, case)?,
        (None, None) => return Err(Error::InvalidInput("--t or --a required".into())),
    };
    let formulas = match case {
        RamificationCase::I => loci::y1_formulas(&param.t)?,
        _ => loci::y2_formulas(&param.t)?,
    };
    let mut v = json!({
        "T": value(&param.t)?,
        "case": case.to_string(),
        "degenerate": param.degenerate,
        "formulas": value(&formulas)?,
        "v4": loci::is_v4_point(&param.t, case)?,
    });
    if let Some(a) = a {
        let model = match case {
            RamificationCase::I => case1_curve(a)?,
            _ => case2_curve(a)?,
        };
        v["model"] = curve_json(&model.curve, bits)?;
        v["subcover"] = value(&model.subcover)?;
    }
    Ok(v)
}

fn recover(case: RamificationCase, i: [Rational; 3]) -> Result<Value> {
    if case == RamificationCase::III {
        let target = i.each_ref().map(Cx::<128>::from_rational);
        return value(recover_case3_numeric(&target, 1e-25)?);
    }
    value(loci::recover_parameter(&i, case)?)
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let bits = cli.precision_bits;
    if bits == 0 || bits > 1024 {
        return Err(Error::InvalidInput(format!("--precision-bits {bits} outside 1..=1024")));
    }
    Ok(match &cli.command {
        Command::Cover(ab) => {
            let params = CoverParams::new(ab.a.clone(), ab.b.clone())?;
            Report::pass(build_cover(&params)?.to_json())
        }
        Command::Curve { a, b: Some(b), .. } => {
            let roots = cover_curves(a, b)?
                .into_iter()
                .map(|(z, c, sub)| {
                    Ok(json!({ "z": value(z)?, "curve": value(c)?, "subcover": sub }))
                })
                .collect::<Result<Vec<_>>>()?;
            Report::pass(json!({ "a": value(a)?, "b": value(b)?, "roots": roots }))
        }
        Command::Curve { a, case: Some(case), .. } => {
            let model = match case {
                RamificationCase::I => case1_curve(a)?,
                RamificationCase::II => case2_curve(a)?,
                _ => case3_curve(a)?,
            };
            Report::pass(value(model)?)
        }
        Command::Curve { .. } => return Err(Error::InvalidInput("--b or --case required".into())),
        Command::Invariants { coeffs: Some(cs), .. } => {
            let curve = Genus2Curve::from_rationals(&parse_coeffs(cs)?)?;
            Report::pass(curve_json(&curve, bits)?)
        }
        Command::Invariants { a: Some(a), b: Some(b), .. } => {
            let roots = cover_curves(a, b)?
                .into_iter()
                .map(|(z, c, _)| {
                    let mut v = curve_json(&c, bits)?;
                    v["z"] = value(z)?;
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            Report::pass(json!({ "a": value(a)?, "b": value(b)?, "roots": roots }))
        }
        Command::Invariants { .. } => {
            return Err(Error::InvalidInput("--a with --b, or --coeffs, required".into()))
        }
        Command::Locus { case, t, a } => Report::pass(locus(*case, t.as_ref(), a.as_ref(), bits)?),
        Command::Recover { case, i1, i2, i3 } => {
            Report::pass(recover(*case, [i1.clone(), i2.clone(), i3.clone()])?)
        }
        Command::Nielsen { group, types } => {
            let types: Vec<CycleType> = types.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
            Report::pass(value(nielsen_count(*group, &types)?)?)
        }
        Command::Verify { suite } => {
            let suites = match suite.as_str() {
                "default" => Suite::default_set(),
                s => Suite::parse_list(s)?,
            };
            let r = run_suites(&suites, cli.seed)?;
            Report::with_status(r.status.passed(), value(&r)?)
        }
    })
}

/// Runs a parsed command, timing it and catching panics.
pub fn run(cli: &Cli) -> Report {
    let start = Instant::now();
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let result = panic::catch_unwind(AssertUnwindSafe(|| dispatch(cli)));
    panic::set_hook(hook);
    let mut report = match result {
        Ok(Ok(r)) => r,
        Ok(Err(e)) => Report::error(&e),
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            Report::internal(msg)
        }
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

fn verb(c: &Command) -> &'static str {
    match c {
        Command::Cover(_) => "cover",
        Command::Curve { .. } => "curve",
        Command::Invariants { .. } => "invariants",
        Command::Locus { .. } => "locus",
        Command::Recover { .. } => "recover",
        Command::Nielsen { .. } => "nielsen",
        Command::Verify { .. } => "verify",
    }
}

fn summary(cli: &Cli, r: &Report) -> String {
    let status = serde_json::to_value(r.status).expect("status serializes");
    let mut s = format!("{}: {} ({} ms)", verb(&cli.command), status.as_str().unwrap_or("?"), r.elapsed_ms);
    let p = &r.payload;
    if let Some(e) = p.get("error") {
        s += &format!("\n  {}: {}", e.as_str().unwrap_or(""), p["message"].as_str().unwrap_or(""));
    }
    if let Some(c) = p.get("case").and_then(Value::as_str) {
        s += &format!("\n  case {c}");
    }
    if let Some(c) = p.get("classes") {
        s += &format!("\n  classes {c}");
    }
    if let Some(suites) = p.get("suites").and_then(Value::as_array) {
        for suite in suites {
            s += &format!("\n  {:<10} {}", suite["suite"].as_str().unwrap_or(""), suite["status"].as_str().unwrap_or(""));
            for c in suite["checks"].as_array().into_iter().flatten() {
                if c["status"] != "pass" {
                    s += &format!("\n    failed: {}", c["check"].as_str().unwrap_or(""));
                }
            }
        }
    }
    s
}

/// Parses `args`, runs the command and writes the report. Returns the exit
/// status.
pub fn main_with<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if code == EXIT_PASS {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let report = run(&cli);
    if cli.json {
        let _ = writeln!(out, "{}", report.to_json());
    } else {
        let _ = writeln!(out, "{}", summary(&cli, &report));
    }
    if !cli.quiet {
        let _ = writeln!(err, "{}", summary(&cli, &report));
    }
    report.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["g2d5", "--quiet"];
        full.extend_from_slice(args);
        let code = main_with(full, &mut out, &mut err);
        let v = serde_json::from_slice(&out).unwrap_or(Value::Null);
        (code, v)
    }

    #[test]
    fn cover_nondegenerate() {
        let (code, v) = call(&["cover", "--a", "1/1", "--b", "2/1"]);
        assert_eq!(code, 0);
        assert_eq!(v["status"], "pass");
        assert_eq!(v["payload"]["case"], "NonDegenerate");
    }

    #[test]
    fn excluded_parameters_are_domain_errors() {
        let (code, v) = call(&["cover", "--a", "0", "--b", "1"]);
        assert_eq!(code, EXIT_FAIL);
        assert_eq!(v["status"], "error");
        assert_eq!(v["payload"]["error"], "excluded-parameter");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["cover", "--a", "1/1"]).0, EXIT_USAGE);
        assert_eq!(call(&["cover", "--a", "1/0", "--b", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["cover", "--a", "1", "--b", "2", "--bogus", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["locus", "--case", "NonDegenerate", "--t", "9"]).0, EXIT_USAGE);
    }

    #[test]
    fn nielsen_row() {
        let (code, v) = call(&["nielsen", "--group", "S5", "--types", "2^2,2^2,4,2"]);
        assert_eq!(code, 0);
        assert_eq!(v["payload"]["classes"], 8);
    }

    #[test]
    fn locus_and_recover_agree() {
        let (_, v) = call(&["locus", "--case", "II", "--a", "3"]);
        assert_eq!(v["payload"]["T"], "9");
        let f = &v["payload"]["formulas"];
        let (code, r) = call(&[
            "recover", "--case", "II",
            "--i1", f["i1"].as_str().unwrap(),
            "--i2", f["i2"].as_str().unwrap(),
            "--i3", f["i3"].as_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{r}");
        assert_eq!(r["payload"]["T"], "9");
    }

    #[test]
    fn keys_are_sorted_and_output_is_stable() {
        let args = ["curve", "--a", "1", "--b", "2"];
        let (_, mut v1) = call(&args);
        let (_, mut v2) = call(&args);
        v1["elapsed_ms"] = Value::Null;
        v2["elapsed_ms"] = Value::Null;
        assert_eq!(v1, v2);
        let mut out = Vec::new();
        main_with(["g2d5", "--quiet", "cover", "--a", "1", "--b", "2"], &mut out, &mut Vec::new());
        let text = String::from_utf8(out).unwrap();
        let keys: Vec<usize> = ["\"elapsed_ms\"", "\"payload\"", "\"status\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }
}
