use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use semikan::complex::text::{
    parse_complex, parse_multi_table, parse_table, write_complex, write_multi_complex, write_multi_table, write_table,
    Complex,
};
use semikan::complex::{validate, validate_multi, MultiSimplicialSet, SimplicialSet, ValidationReport};
use semikan::construct::{synthesize_with, verify_identities, verify_lemmas, SynthesisOptions};
use semikan::corpus::{external_product, free_simplicial, nerve, FiniteGroupTable};
use semikan::kan::{check_kan, check_multi_kan};
use semikan::multi::{synthesize_multi_with, verify_multi, verify_multi_lemmas};
use semikan::{Error, VerificationReport};

/// Degeneracy synthesis for Kan semisimplicial and multisemisimplicial sets.
#[derive(Debug, Parser)]
#[command(name = "semikan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the face identities of a complex file.
    Validate { complex: PathBuf },
    /// List every compatible horn up to the given target degree that has no filler.
    CheckKan {
        complex: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Build degeneracies on every simplex of degree at most the horizon.
    Synthesize {
        complex: PathBuf,
        #[arg(long)]
        horizon: usize,
        /// Also write the auxiliary `t` entries.
        #[arg(long)]
        emit_t: bool,
        /// Re-check every horn before filling it.
        #[arg(long)]
        debug_checks: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a degeneracy table against a complex.
    Verify { complex: PathBuf, table: PathBuf },
    /// Write the nerve of a group given by its multiplication table.
    GenNerve {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        truncation: usize,
        /// Write the identity-inserting degeneracies to this file.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the external product of two semisimplicial complexes.
    GenProduct {
        first: PathBuf,
        second: PathBuf,
        /// Total-degree truncation; defaults to the smaller input truncation.
        #[arg(long)]
        truncation: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the free simplicial set on a semisimplicial complex.
    Free {
        complex: PathBuf,
        #[arg(long)]
        truncation: usize,
        /// Write its degeneracies to this file.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Exit status 1 with a report, or 2 with a usage message.
enum Failure {
    Report(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoFiller { stage: Some(stage), horn } => Failure::Report(format!("NOFILL {stage} {horn}\n")),
            Error::NoFiller { stage: None, horn } => Failure::Report(format!("NOFILL {horn}\n")),
            Error::Inconsistent { .. } => Failure::Report(format!("INCONSISTENT {e}\n")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Complex, Failure> {
    parse_complex(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_single(path: &Path) -> Result<semikan::SemiSimplicialSet, Failure> {
    match load(path)? {
        Complex::Single(x) => Ok(x),
        Complex::Multi(_) => Err(Failure::Usage(format!("{}: expected a semisimplicial complex", path.display()))),
    }
}

fn emit(text: String, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => write(path, &text).map(|()| String::new()),
        None => Ok(text),
    }
}

fn verdict(mut lines: Vec<String>, clean: bool) -> Outcome {
    lines.push(if clean { "OK" } else { "FAILED" }.to_string());
    let text = lines.join("\n") + "\n";
    if clean {
        Ok(text)
    } else {
        Err(Failure::Report(text))
    }
}

fn validation_lines(report: &ValidationReport) -> Vec<String> {
    let mut lines = vec![format!("CHECK face {}", report.checked)];
    lines.extend(report.violations.iter().map(ToString::to_string));
    lines
}

fn validated(complex: &Complex) -> Result<(), Failure> {
    let report = match complex {
        Complex::Single(x) => validate(x),
        Complex::Multi(x) => validate_multi(x),
    };
    if report.is_valid() {
        Ok(())
    } else {
        verdict(validation_lines(&report), false).map(drop)
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { complex } => {
            let report = match load(&complex)? {
                Complex::Single(x) => validate(&x),
                Complex::Multi(x) => validate_multi(&x),
            };
            verdict(validation_lines(&report), report.is_valid())
        }
        Command::CheckKan { complex, depth } => {
            let lines: Vec<String> = match load(&complex)? {
                Complex::Single(x) => check_kan(&x, depth)?.iter().map(|h| format!("NOFILL {h}")).collect(),
                Complex::Multi(x) => check_multi_kan(&x, depth)?.iter().map(|h| format!("NOFILL {h}")).collect(),
            };
            let clean = lines.is_empty();
            verdict(lines, clean)
        }
        Command::Synthesize { complex, horizon, emit_t, debug_checks, output } => {
            let complex = load(&complex)?;
            let truncation = match &complex {
                Complex::Single(x) => x.truncation(),
                Complex::Multi(x) => x.truncation(),
            };
            if horizon + 2 > truncation {
                return Err(Error::InsufficientTruncation { horizon, truncation }.into());
            }
            validated(&complex)?;
            let options = SynthesisOptions { debug_checks };
            let text = match &complex {
                Complex::Single(x) => {
                    let result = synthesize_with(x, horizon, options)?;
                    write_table(result.state.s_table(), emit_t.then(|| result.state.t_table()))
                }
                Complex::Multi(x) => {
                    let result = synthesize_multi_with(x, horizon, options)?;
                    write_multi_table(result.state.s_table(), emit_t.then(|| result.state.t_table()))
                }
            };
            emit(text, output.as_deref())
        }
        Command::Verify { complex, table } => {
            let complex = load(&complex)?;
            validated(&complex)?;
            let table_text = read(&table)?;
            let located = |e: Error| Failure::Usage(format!("{}: {e}", table.display()));
            let mut report = VerificationReport::default();
            match complex {
                Complex::Single(x) => {
                    let (s, t) = parse_table(&table_text).map_err(located)?;
                    let result = SimplicialSet::with_inferred_horizon(x, s);
                    report.merge(verify_identities(&result, (!t.is_empty()).then_some(&t)));
                    report.merge(verify_lemmas(&result));
                }
                Complex::Multi(x) => {
                    let (s, t) = parse_multi_table(&table_text).map_err(located)?;
                    let result = MultiSimplicialSet::with_inferred_horizon(x, s);
                    report.merge(verify_multi(&result, (!t.is_empty()).then_some(&t)));
                    report.merge(verify_multi_lemmas(&result));
                }
            }
            verdict(report.lines(), report.is_clean())
        }
        Command::GenNerve { group, truncation, table, output } => {
            let text = read(&group)?;
            let group =
                FiniteGroupTable::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", group.display())))?;
            let nv = nerve(&group, truncation);
            if let Some(path) = table {
                write(&path, &write_table(nv.reference.degeneracies(), None))?;
            }
            emit(write_complex(&nv.complex), output.as_deref())
        }
        Command::GenProduct { first, second, truncation, output } => {
            let x = load_single(&first)?;
            let y = load_single(&second)?;
            let product = external_product(&x, &y, truncation)?;
            emit(write_multi_complex(&product), output.as_deref())
        }
        Command::Free { complex, truncation, table, output } => {
            let y = load_single(&complex)?;
            let g = free_simplicial(&y, truncation)?;
            if let Some(path) = table {
                write(&path, &write_table(g.simplicial.degeneracies(), None))?;
            }
            emit(write_complex(g.simplicial.base()), output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Report(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
