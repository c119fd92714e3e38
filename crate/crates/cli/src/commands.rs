//! Subcommands and the exit-code contract: 0 success, 1 domain error,
//! 2 unreadable input, 3 a bound violation (which would be a solver bug).

use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use riccati_core::qpoly::{format_rational, parse_rational, Poly, Rational};
use riccati_core::riccati_poly::{cross_ratio, gen_extremal, solve_all, RiccatiEq};
use riccati_core::riccati_trig::{gen_extremal_trig, solve_all_trig, trig_cross_ratio, TrigRiccatiEq};
use riccati_core::trigring::TrigPoly;
use riccati_core::Error;

use crate::fuzz::{run_poly_fuzz, run_trig_fuzz, SEED_ENV};
use crate::json::{
    emit_json, poly_from_input, poly_report, trig_from_input, trig_report, CoeffInput, EquationSpec, InputError,
    Kind,
};
use crate::sample::sample_curves_csv;

#[derive(Debug, Parser)]
#[command(name = "riccati", version, about = "Exact polynomial and trigonometric solutions of Riccati equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All polynomial solutions of a y' = b0 + b1 y + b2 y^2.
    SolvePoly(EqArgs),
    /// All trigonometric-polynomial solutions of A Y' = B0 + B1 Y + B2 Y^2.
    SolveTrig(EqArgs),
    /// Check a candidate solution by substitution.
    Verify {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        eq: EqArgs,
        /// Candidate solution.
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Equation with the maximal number of polynomial solutions.
    GenExtremalPoly {
        #[arg(long)]
        eta: usize,
        #[arg(long)]
        j: usize,
        /// Comma-separated distinct rationals, j - 1 of them.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        roots: Vec<String>,
    },
    /// Trigonometric equation with k + 3 solutions.
    GenExtremalTrig {
        #[arg(long)]
        eta: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated distinct rationals; defaults to 2, 3, ..., k + 1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        constants: Vec<String>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        d1: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        d2: String,
    },
    /// Cross ratio of four solutions of one equation.
    CrossRatio {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Exactly four solutions, by repeating the flag.
        #[arg(long = "y", num_args = 1, allow_hyphen_values = true)]
        ys: Vec<String>,
    },
    /// CSV of A and every solution on a uniform grid over [0, 2 pi].
    Sample {
        #[command(flatten)]
        eq: EqArgs,
        #[arg(long, default_value_t = 361)]
        n: usize,
    },
    /// Random equations checked against the count and degree bounds.
    Fuzz {
        #[arg(long, value_enum, default_value_t = KindArg::Poly)]
        kind: KindArg,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_eta: usize,
        /// Falls back to RICCATI_FUZZ_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Poly,
    Trig,
}

#[derive(Debug, Clone, Args)]
pub struct EqArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub b0: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub b1: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b2: Option<String>,
    /// Known solution; may be repeated.
    #[arg(long = "seed-solution", allow_hyphen_values = true)]
    pub seeds: Vec<String>,
    /// Read a JSON equation spec from standard input instead.
    #[arg(long)]
    pub stdin: bool,
    /// Add wall-clock time to the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(#[from] InputError),
    #[error("stdin: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Domain(#[from] Error),
    /// Fuzz summary with at least one violation.
    #[error("fuzz run found bound violations")]
    Violations(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Json(_) => 2,
            CliError::Domain(Error::BoundViolation { .. }) | CliError::Violations(_) => 3,
            CliError::Domain(_) => 1,
        }
    }
}

fn input_err(field: &str, message: impl Into<String>) -> CliError {
    CliError::Input(InputError { field: field.into(), message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_spec(args: &EqArgs, kind: Kind, stdin: &mut dyn Read) -> Result<EquationSpec, CliError> {
    if args.stdin {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|e| input_err("stdin", e.to_string()))?;
        let spec: EquationSpec = serde_json::from_str(&text)?;
        if spec.kind != kind {
            return Err(input_err("kind", format!("expected {kind:?}, got {:?}", spec.kind).to_lowercase()));
        }
        return Ok(spec);
    }
    let a = args.a.clone().ok_or_else(|| input_err("a", "missing (use --a or --stdin)"))?;
    let b2 = args.b2.clone().ok_or_else(|| input_err("b2", "missing (use --b2 or --stdin)"))?;
    Ok(EquationSpec {
        kind,
        a: CoeffInput::Text(a),
        b0: Some(CoeffInput::Text(args.b0.clone())),
        b1: CoeffInput::Text(args.b1.clone()),
        b2: CoeffInput::Text(b2),
        seeds: args.seeds.iter().cloned().map(CoeffInput::Text).collect(),
    })
}

fn zero_text() -> CoeffInput {
    CoeffInput::Text("0".into())
}

fn poly_equation(spec: &EquationSpec) -> Result<(RiccatiEq, Vec<Poly>), CliError> {
    let b0 = spec.b0.clone().unwrap_or_else(zero_text);
    let eq = RiccatiEq::new(
        poly_from_input("a", &spec.a)?,
        poly_from_input("b0", &b0)?,
        poly_from_input("b1", &spec.b1)?,
        poly_from_input("b2", &spec.b2)?,
    )?;
    let seeds = spec
        .seeds
        .iter()
        .enumerate()
        .map(|(i, s)| poly_from_input(&format!("seeds[{i}]"), s))
        .collect::<Result<_, _>>()?;
    Ok((eq, seeds))
}

fn trig_equation(spec: &EquationSpec) -> Result<(TrigRiccatiEq, Vec<TrigPoly>), CliError> {
    let b0 = spec.b0.clone().unwrap_or_else(zero_text);
    let eq = TrigRiccatiEq::new(
        trig_from_input("a", &spec.a)?,
        trig_from_input("b0", &b0)?,
        trig_from_input("b1", &spec.b1)?,
        trig_from_input("b2", &spec.b2)?,
    )?;
    let seeds = spec
        .seeds
        .iter()
        .enumerate()
        .map(|(i, s)| trig_from_input(&format!("seeds[{i}]"), s))
        .collect::<Result<_, _>>()?;
    Ok((eq, seeds))
}

fn rational_arg(field: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s.trim()).ok_or_else(|| input_err(field, format!("'{s}' is not a rational number")))
}

fn rational_list(field: &str, items: &[String]) -> Result<Vec<Rational>, CliError> {
    items.iter().map(|s| rational_arg(field, s)).collect()
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Serialize)]
struct VerifyDoc {
    kind: Kind,
    solution: String,
    valid: bool,
}

#[derive(Serialize)]
struct CrossRatioDoc {
    kind: Kind,
    cross_ratio: String,
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<String, CliError> {
    match command {
        Command::SolvePoly(args) => {
            let start = Instant::now();
            let (eq, seeds) = poly_equation(&read_spec(args, Kind::Poly, stdin)?)?;
            let set = solve_all(&eq, (!seeds.is_empty()).then_some(seeds.as_slice()))?;
            let mut report = poly_report(&eq, &set);
            if args.timing {
                report.timing_ms = Some(elapsed_ms(start));
            }
            Ok(emit_json(&report))
        }
        Command::SolveTrig(args) => {
            let start = Instant::now();
            let (eq, seeds) = trig_equation(&read_spec(args, Kind::Trig, stdin)?)?;
            let set = solve_all_trig(&eq, (!seeds.is_empty()).then_some(seeds.as_slice()))?;
            let mut report = trig_report(&eq, &set);
            if args.timing {
                report.timing_ms = Some(elapsed_ms(start));
            }
            Ok(emit_json(&report))
        }
        Command::Verify { kind, eq, y } => {
            let doc = match kind {
                KindArg::Poly => {
                    let (eq, _) = poly_equation(&read_spec(eq, Kind::Poly, stdin)?)?;
                    let y = poly_from_input("y", &CoeffInput::Text(y.clone()))?;
                    VerifyDoc { kind: Kind::Poly, valid: eq.verify_solution(&y), solution: y.to_string() }
                }
                KindArg::Trig => {
                    let (eq, _) = trig_equation(&read_spec(eq, Kind::Trig, stdin)?)?;
                    let y = trig_from_input("y", &CoeffInput::Text(y.clone()))?;
                    VerifyDoc { kind: Kind::Trig, valid: eq.verify_solution(&y), solution: y.to_string() }
                }
            };
            Ok(to_json(&doc))
        }
        Command::GenExtremalPoly { eta, j, roots } => {
            let roots = rational_list("roots", roots)?;
            let (eq, set) = gen_extremal(*eta, *j, &roots)?;
            Ok(emit_json(&poly_report(&eq, &set)))
        }
        Command::GenExtremalTrig { eta, k, constants, d1, d2 } => {
            let cs = if constants.is_empty() {
                (1..=*k as i64).map(|i| Rational::from_integer((i + 1).into())).collect()
            } else {
                rational_list("constants", constants)?
            };
            if cs.len() != *k {
                return Err(input_err("constants", format!("expected {k} values, got {}", cs.len())));
            }
            let (eq, set) = gen_extremal_trig(*eta, &cs, &rational_arg("d1", d1)?, &rational_arg("d2", d2)?)?;
            Ok(emit_json(&trig_report(&eq, &set)))
        }
        Command::CrossRatio { kind, ys } => {
            if ys.len() != 4 {
                return Err(input_err("y", format!("expected 4 solutions, got {}", ys.len())));
            }
            let field = |i: usize| format!("y[{i}]");
            let (kind, r) = match kind {
                KindArg::Poly => {
                    let ps = ys
                        .iter()
                        .enumerate()
                        .map(|(i, s)| poly_from_input(&field(i), &CoeffInput::Text(s.clone())))
                        .collect::<Result<Vec<_>, _>>()?;
                    (Kind::Poly, cross_ratio(&ps[0], &ps[1], &ps[2], &ps[3])?)
                }
                KindArg::Trig => {
                    let ts = ys
                        .iter()
                        .enumerate()
                        .map(|(i, s)| trig_from_input(&field(i), &CoeffInput::Text(s.clone())))
                        .collect::<Result<Vec<_>, _>>()?;
                    (Kind::Trig, trig_cross_ratio(&ts[0], &ts[1], &ts[2], &ts[3])?)
                }
            };
            Ok(to_json(&CrossRatioDoc { kind, cross_ratio: format_rational(&r) }))
        }
        Command::Sample { eq, n } => {
            let (eq, seeds) = trig_equation(&read_spec(eq, Kind::Trig, stdin)?)?;
            let set = solve_all_trig(&eq, (!seeds.is_empty()).then_some(seeds.as_slice()))?;
            Ok(sample_curves_csv(&eq, &set, *n)?)
        }
        Command::Fuzz { kind, count, max_eta, seed } => {
            let seed = match seed {
                Some(s) => *s,
                None => match std::env::var(SEED_ENV) {
                    Ok(v) => v.trim().parse().map_err(|_| input_err(SEED_ENV, format!("'{v}' is not a u64")))?,
                    Err(_) => 0,
                },
            };
            let summary = match kind {
                KindArg::Poly => run_poly_fuzz(*count, *max_eta, seed),
                KindArg::Trig => run_trig_fuzz(*count, *max_eta, seed),
            };
            if !summary.violations.is_empty() {
                return Err(CliError::Violations(to_json(&summary)));
            }
            Ok(to_json(&summary))
        }
    }
}

/// Parse `argv` (program name first) and run it.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command, stdin) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Outcome { code: 0, stdout: out, stderr: String::new() }
        }
        Err(e) => {
            let stdout = match &e {
                CliError::Violations(summary) => format!("{summary}\n"),
                _ => String::new(),
            };
            Outcome { code: e.exit_code(), stdout, stderr: format!("error: {e}\n") }
        }
    }
}
