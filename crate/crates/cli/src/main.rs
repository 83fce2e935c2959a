//! `besse` — classify Seifert fibrations of closed orientable 3-manifolds
//! by whether they carry Besse Reeb flows, compare them up to strict
//! contactomorphism, and decide the cohomological manifold criteria on
//! cyclic graded rings.
//!
//! Every invocation writes one structured document to stdout. Exit status:
//! 0 on success, 1 on invalid input, 2 on an internal cross-check failure.

mod report;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use besse_core::classify::{classify, prime_period_spectrum};
use besse_core::cohomology::CyclicGradedRing;
use besse_core::generators::{ellipsoid_boundary, trivial_fibration, weighted_hopf};
use besse_core::rational::Rational;
use besse_core::seifert::SeifertInvariants;
use besse_core::{selftest, Error};

use report::{
    euler_class_report, CohomologyReport, CompareReport, ExampleParameters, ExampleReport,
    FibrationReport, SelfTestView,
};

/// Residue-map enumeration is O(m); above this the gcd route stands alone.
const CROSS_CHECK_CAP: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "besse",
    version,
    about = "Besse Reeb flows on Seifert fibered 3-manifolds: realizability, spectra, classification",
    after_help = "Seifert data is written as `g;(a1,b1),(a2,b2),...` with signed genus g \
                  (negative = nonorientable, |g| crosscaps). Example: besse realizable --seifert \"0;(2,1),(3,-1)\""
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct SeifertArg {
    /// Seifert data `g;(a1,b1),(a2,b2),...`
    #[arg(long, allow_hyphen_values = true)]
    seifert: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical normal form of Seifert data
    Normalize(SeifertArg),
    /// Compute the Euler number of a fibration
    Euler(SeifertArg),
    /// Describe the base 2-orbifold of a fibration
    Base(SeifertArg),
    /// Decide whether the fibration is realizable by a Besse Reeb flow
    Realizable(SeifertArg),
    /// Compute the prime period spectrum of a realizable fibration
    Spectrum(SeifertArg),
    /// Classify two fibrations up to strict contactomorphism
    Compare {
        /// First Seifert datum
        #[arg(long, allow_hyphen_values = true)]
        first: String,
        /// Second Seifert datum
        #[arg(long, allow_hyphen_values = true)]
        second: String,
        /// Also accept orientation-reversing equivalences
        #[arg(long)]
        allow_reversal: bool,
    },
    /// Evaluate the cohomological criteria on a cyclic graded ring
    #[command(group(ArgGroup::new("ring").required(true).args(["weights", "cyclic"])))]
    Cohomology {
        /// Weights of a weighted projective space, comma separated
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<i64>>,
        /// Order of a cyclic quotient orbifold C/Z_k
        #[arg(long)]
        cyclic: Option<u64>,
        /// Coefficient k of the degree-2 class k*u
        #[arg(long, allow_negative_numbers = true)]
        euler_coeff: Option<i64>,
    },
    /// Produce a standard example fibration
    #[command(group(ArgGroup::new("family").required(true).args(["hopf", "ellipsoid", "trivial"])))]
    Example {
        /// Weighted Hopf fibration with coprime weights p q
        #[arg(long, num_args = 2, value_names = ["P", "Q"], allow_negative_numbers = true)]
        hopf: Option<Vec<i64>>,
        /// Boundary of the ellipsoid with axes a b (rationals like 3/2)
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        ellipsoid: Option<Vec<String>>,
        /// Trivial fibration over the surface of the given signed genus
        #[arg(long, value_name = "GENUS", allow_negative_numbers = true)]
        trivial: Option<i64>,
    },
    /// Run the randomized self-checks
    Selftest {
        /// Seed for reproducible runs; random when omitted
        #[arg(long)]
        seed: Option<u64>,
    },
}

enum Failure {
    /// Bad input: exit status 1.
    Input(String),
    /// Cross-check disagreement: exit status 2.
    Inconsistency(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistency(msg) => Failure::Inconsistency(msg),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn parse_seifert(raw: &str) -> Result<SeifertInvariants, Failure> {
    raw.parse::<SeifertInvariants>().map_err(Failure::from)
}

fn parse_rational(raw: &str) -> Result<Rational, Failure> {
    raw.parse::<Rational>().map_err(Failure::from)
}

fn to_document<T: Serialize>(report: &T) -> Value {
    serde_json::to_value(report).expect("reports serialize cleanly")
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    match &cli.command {
        Command::Normalize(arg) | Command::Euler(arg) | Command::Base(arg) | Command::Realizable(arg) => {
            let s = parse_seifert(&arg.seifert)?;
            Ok(to_document(&FibrationReport::new(&s)))
        }
        Command::Spectrum(arg) => {
            let s = parse_seifert(&arg.seifert)?;
            prime_period_spectrum(&s).map_err(Failure::from)?;
            Ok(to_document(&FibrationReport::new(&s)))
        }
        Command::Compare {
            first,
            second,
            allow_reversal,
        } => {
            let s1 = parse_seifert(first)?;
            let s2 = parse_seifert(second)?;
            let result = classify(&s1, &s2, *allow_reversal);
            Ok(to_document(&CompareReport::new(&s1, &s2, &result)))
        }
        Command::Cohomology {
            weights,
            cyclic,
            euler_coeff,
        } => {
            let ring = match (weights, cyclic) {
                (Some(w), None) => CyclicGradedRing::weighted_projective(w).map_err(Failure::from)?,
                (None, Some(k)) => {
                    if *k == 0 {
                        return Err(Failure::Input(
                            "cyclic order must be positive".to_owned(),
                        ));
                    }
                    CyclicGradedRing::cyclic_quotient(*k)
                }
                _ => unreachable!("clap enforces exactly one ring argument"),
            };
            let euler_class = euler_coeff
                .map(|k| euler_class_report(&ring, k, CROSS_CHECK_CAP))
                .transpose()
                .map_err(Failure::from)?;
            Ok(to_document(&CohomologyReport::new(&ring, euler_class)))
        }
        Command::Example {
            hopf,
            ellipsoid,
            trivial,
        } => {
            let (parameters, invariants) = match (hopf, ellipsoid, trivial) {
                (Some(pq), None, None) => {
                    let fib = weighted_hopf(pq[0], pq[1]).map_err(Failure::from)?;
                    (
                        ExampleParameters::WeightedHopf {
                            p: fib.weights.p(),
                            q: fib.weights.q(),
                        },
                        fib.invariants,
                    )
                }
                (None, Some(ab), None) => {
                    let a = parse_rational(&ab[0])?;
                    let b = parse_rational(&ab[1])?;
                    let boundary = ellipsoid_boundary(&a, &b).map_err(Failure::from)?;
                    (
                        ExampleParameters::Ellipsoid {
                            a: a.to_string(),
                            b: b.to_string(),
                            p: boundary.hopf.weights.p(),
                            q: boundary.hopf.weights.q(),
                        },
                        boundary.hopf.invariants,
                    )
                }
                (None, None, Some(genus)) => (
                    ExampleParameters::Trivial { genus: *genus },
                    trivial_fibration(*genus),
                ),
                _ => unreachable!("clap enforces exactly one family"),
            };
            Ok(to_document(&ExampleReport {
                parameters,
                fibration: FibrationReport::new(&invariants),
            }))
        }
        Command::Selftest { seed } => {
            let seed = seed.unwrap_or_else(rand::random);
            let outcome = selftest::run(seed);
            let view = SelfTestView {
                seed,
                all_passed: outcome.all_passed(),
                checks: outcome.checks.clone(),
            };
            let doc = to_document(&view);
            if !outcome.all_passed() {
                let failed: Vec<&str> = outcome
                    .checks
                    .iter()
                    .filter(|c| !c.passed())
                    .map(|c| c.name)
                    .collect();
                // still print the document so the failure is auditable
                print_document(&doc, cli.format);
                return Err(Failure::Inconsistency(format!(
                    "self-test checks failed: {}",
                    failed.join(", ")
                )));
            }
            Ok(doc)
        }
    }
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_empty_container(val) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_text(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar_text(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar_text(value))),
    }
}

fn is_empty_container(value: &Value) -> bool {
    match value {
        Value::Object(map) => map.is_empty(),
        Value::Array(items) => items.is_empty(),
        _ => false,
    }
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_owned(),
        other => other.to_string(),
    }
}

fn print_document(doc: &Value, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(doc).expect("documents serialize cleanly")
        ),
        Format::Text => {
            let mut out = String::new();
            render_text(doc, 0, &mut out);
            print!("{out}");
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap already formats the offending token and usage
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(doc) => {
            print_document(&doc, cli.format);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconsistency(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
