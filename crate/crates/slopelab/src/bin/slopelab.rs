use clap::{Parser, Subcommand};
use serde::Deserialize;
use slopelab::knot::KnotSpec;
use slopelab::qip::{lattice_min, SeparableQuadratic};
use slopelab::skein::{colored_jones, OracleConfig};
use slopelab::verify::{scan, verify, Family, OverallVerdict, VerifyConfig, VerifyError};
use std::process::ExitCode;

/// Jones slopes and Hatcher-Oertel surfaces of pretzel and Montesinos knots.
///
/// Knots are written `p:q0,q1,...` for pretzel knots and `m:r0,r1,...` for Montesinos knots.
#[derive(Parser)]
#[command(name = "slopelab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one knot: degree formulas, the realizing surface and oracle degrees.
    Verify {
        knot: String,
        /// Oracle cable count n (color n + 1); defaults to 2 for diagrams up to 30 crossings.
        #[arg(long = "oracle-n")]
        oracle_n: Option<usize>,
        /// Continue outside the theorem hypotheses.
        #[arg(long)]
        force: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
    },
    /// Check a family of knots.
    Scan {
        #[command(subcommand)]
        family: ScanFamily,
        #[arg(long = "oracle-n", global = true)]
        oracle_n: Option<usize>,
        #[arg(long, global = true)]
        json: Option<std::path::PathBuf>,
    },
    /// Minimize a separable quadratic over the scaled simplex, e.g. '{"a":[1,2],"b":[0,-1],"t":5}'.
    Qip { problem: String },
    /// Colored Jones polynomial J_{K,n+1} from the skein oracle.
    Jones {
        knot: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ScanFamily {
    /// Strict odd pretzel knots with m positive entries of size at most MAX.
    Pretzel {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 9)]
        max: i64,
    },
    /// Knots of the exceptional lemma, checked in forced mode.
    Exceptional {
        #[arg(long = "q0-min", default_value_t = -10, allow_hyphen_values = true)]
        q0_min: i64,
        #[arg(long = "qi-max", default_value_t = 10)]
        qi_max: i64,
    },
    /// An explicit list of knot specs.
    List { knots: Vec<String> },
}

#[derive(Deserialize)]
struct QipInput {
    a: Vec<i64>,
    b: Vec<i64>,
    t: i64,
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn write_json(path: &Option<std::path::PathBuf>, body: &str) -> Result<(), ExitCode> {
    if let Some(p) = path {
        std::fs::write(p, body).map_err(|e| input_error(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Verify { knot, oracle_n, force, json } => {
            let cfg = VerifyConfig { oracle_colors: oracle_n, force, ..VerifyConfig::default() };
            let report = verify(&knot, &cfg).map_err(|e| match e {
                VerifyError::Parse(_) | VerifyError::Hypothesis(_) => input_error(e),
            })?;
            let body = report.to_json();
            write_json(&json, &body)?;
            println!("{body}");
            Ok(match report.verdict {
                OverallVerdict::Fail => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            })
        }
        Command::Scan { family, oracle_n, json } => {
            let family = match family {
                ScanFamily::Pretzel { m, max } => Family::OddPretzel { m, max_abs: max },
                ScanFamily::Exceptional { q0_min, qi_max } => Family::Exceptional { q0_min, qi_max },
                ScanFamily::List { knots } => Family::List(knots),
            };
            let cfg = VerifyConfig { oracle_colors: oracle_n, ..VerifyConfig::default() };
            let report = scan(&family, &cfg);
            write_json(&json, &report.to_json())?;
            for e in &report.entries {
                match &e.report {
                    Some(r) => println!(
                        "{:<28} case {:<3} js {:>10} jx {:>10} {:?}",
                        e.knot,
                        r.degree.quadratic.case.label(),
                        slopelab::exact::format_rational(&r.degree.quadratic.js),
                        slopelab::exact::format_rational(&r.degree.quadratic.jx),
                        r.verdict
                    ),
                    None => println!("{:<28} error: {}", e.knot, e.error.as_deref().unwrap_or("")),
                }
            }
            println!("verdicts: {:?}", report.verdicts);
            let failed = report.entries.iter().any(|e| {
                e.report.as_ref().map(|r| r.verdict == OverallVerdict::Fail).unwrap_or(!family.forced())
            });
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Qip { problem } => {
            let p: QipInput = serde_json::from_str(&problem).map_err(input_error)?;
            let f = SeparableQuadratic::new(p.a, p.b).map_err(input_error)?;
            if p.t < 0 {
                return Err(input_error("t must be non-negative"));
            }
            println!("{}", serde_json::to_string_pretty(&lattice_min(&f, p.t)).expect("serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Jones { knot, n, json } => {
            let spec = KnotSpec::parse(&knot).map_err(input_error)?;
            let cfg = OracleConfig { max_color: OracleConfig::default().max_color.max(n), ..OracleConfig::default() };
            let j = colored_jones(&spec, n, &cfg).map_err(input_error)?;
            if json {
                println!("{}", serde_json::to_string(&j).expect("serializes"));
            } else {
                println!("{}", j.pretty());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
