use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dequant_core::dequant::FamilySign;
use dequant_core::report::{self, FamilyParams, Format, Method, Witness};
use dequant_core::selftest::{self, Fixture};
use dequant_core::{BitFn, Rat};

/// Deutsch's problem: quantum circuit vs. classical single-query solvers.
#[derive(Parser, Debug)]
#[command(name = "dequant", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run solvers on oracles and report classification, queries and witness.
    Run {
        /// 00, 01, 10, 11 or all.
        #[arg(long, value_parser = parse_oracles)]
        oracle: OracleSel,
        /// baseline, quantum, gauss, family, surd or all.
        #[arg(long, value_parser = parse_methods)]
        method: MethodSel,
        /// Nonzero rational scale for the family method, e.g. -3/7.
        #[arg(long, value_parser = parse_nonzero_rat, default_value = "1", allow_hyphen_values = true)]
        a: Rat,
        /// Family variant: minus is a(i-1), plus is a(i+1).
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Also draw SHOTS seeded samples from each quantum distribution.
        #[arg(long, num_args = 2, value_names = ["SEED", "SHOTS"])]
        sample: Option<Vec<u64>>,
    },
    /// The full 4 oracles x 5 methods comparison.
    Table {
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Run the invariant suite.
    Selftest,
}

#[derive(Clone, Debug)]
struct OracleSel(Vec<BitFn>);

#[derive(Clone, Debug)]
struct MethodSel(Vec<Method>);

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    Minus,
    Plus,
}

impl From<SignArg> for FamilySign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Minus => FamilySign::Minus,
            SignArg::Plus => FamilySign::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn parse_oracles(s: &str) -> Result<OracleSel, String> {
    if s == "all" {
        return Ok(OracleSel(BitFn::ALL.to_vec()));
    }
    s.parse()
        .map(|f| OracleSel(vec![f]))
        .map_err(|e| e.to_string())
}

fn parse_methods(s: &str) -> Result<MethodSel, String> {
    if s == "all" {
        return Ok(MethodSel(Method::ALL.to_vec()));
    }
    s.parse()
        .map(|m| MethodSel(vec![m]))
        .map_err(|e| e.to_string())
}

fn parse_nonzero_rat(s: &str) -> Result<Rat, String> {
    let a: Rat = s.parse().map_err(|e: dequant_core::Error| e.to_string())?;
    if a.is_zero() {
        return Err(dequant_core::Error::ZeroParameter.to_string());
    }
    Ok(a)
}

const EXIT_CHECK_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            oracle,
            method,
            a,
            sign,
            format,
            sample,
        } => {
            let params = match FamilyParams::new(a, sign.into()) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            if sample.is_some() && !matches!(format, FormatArg::Text) {
                eprintln!("error: --sample is only available with --format text");
                return ExitCode::from(EXIT_USAGE);
            }
            if sample.is_some() && !method.0.contains(&Method::Quantum) {
                eprintln!("error: --sample needs the quantum method");
                return ExitCode::from(EXIT_USAGE);
            }
            let reports = match report::run_grid(&oracle.0, &method.0, params) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_CHECK_FAILURE);
                }
            };
            print!("{}", report::render(&reports, format.into()));
            if let Some([seed, shots]) = sample.as_deref().map(|v| [v[0], v[1]]) {
                for rep in &reports {
                    if let Witness::Distribution(d) = rep.witness {
                        let c = d.sample_counts(seed, shots);
                        println!(
                            "sample oracle={} seed={seed} shots={shots} counts=({},{},{},{})",
                            rep.oracle, c[0], c[1], c[2], c[3]
                        );
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Table { format } => match report::full_table() {
            Ok(reports) => {
                print!("{}", report::render(&reports, format.into()));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_CHECK_FAILURE)
            }
        },
        Command::Selftest => {
            let outcome = selftest::run_all(&Fixture::default());
            println!("{outcome}");
            if outcome.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILURE)
            }
        }
    }
}
