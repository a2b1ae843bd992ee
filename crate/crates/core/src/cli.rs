//! The `nrmcdm` command line.

use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra;
use crate::consistency::{select_measure, Candidate, Objective};
use crate::decision::{rank, DecisionProblem, Polarity};
use crate::document::{parse_problem, parse_set, set_document, AnySet, DocumentElement, Problem};
use crate::error::Error;
use crate::model::{Flavor, MeasureKind, SvnrSet};
use crate::report::{self, CellDisplay};
use crate::similarity::{score, WeightVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "nrmcdm", version, about = "Similarity, ranking and consistency analysis for neutrosophic refined data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MeasureArg {
    Jaccard,
    Dice,
    Cosine,
}

impl From<MeasureArg> for MeasureKind {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Jaccard => MeasureKind::Jaccard,
            MeasureArg::Dice => MeasureKind::Dice,
            MeasureArg::Cosine => MeasureKind::Cosine,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolarityArg {
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ObjectiveArg {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SetOp {
    Union,
    Intersection,
    Complement,
    Subset,
    Equal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Similarity between two set files
    Similarity {
        #[arg(long, value_enum)]
        measure: MeasureArg,
        /// Comma-separated weights, one per universe element
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weights: Option<Vec<f64>>,
        /// Use the weighted measure (requires --weights)
        #[arg(long)]
        weighted: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        a: PathBuf,
        b: PathBuf,
    },
    /// Rank alternatives by similarity to the positive ideal
    Rank {
        #[arg(long, value_enum)]
        measure: MeasureArg,
        /// Use the criterion weights
        #[arg(long)]
        weighted: bool,
        /// Which ideal alternative to print with the report
        #[arg(long, value_enum, default_value = "positive")]
        polarity: PolarityArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        problem: PathBuf,
    },
    /// Consistency degrees of all measures on an interval problem
    Consistency {
        #[arg(long, value_enum, default_value = "maximize")]
        objective: ObjectiveArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        problem: PathBuf,
    },
    /// Set algebra on single-valued set files
    Ops {
        #[arg(value_enum)]
        op: SetOp,
        a: PathBuf,
        b: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Data(String),
}

fn data_error(file: &FsPath, e: Error) -> Failure {
    Failure::Data(format!("{}: {e}", file.display()))
}

fn read(file: &FsPath) -> Result<String, Failure> {
    std::fs::read_to_string(file).map_err(|e| Failure::Data(format!("cannot read {}: {e}", file.display())))
}

fn load_problem(file: &FsPath) -> Result<Problem, Failure> {
    parse_problem(&read(file)?).map_err(|e| data_error(file, e))
}

fn load_set(file: &FsPath) -> Result<AnySet, Failure> {
    parse_set(&read(file)?).map_err(|e| data_error(file, e))
}

fn flavor_mismatch(file: &FsPath, expected: Flavor, found: Flavor) -> Failure {
    data_error(file, Error::FlavorMismatch { expected, found })
}

fn load_svnr_set(file: &FsPath) -> Result<SvnrSet, Failure> {
    match load_set(file)? {
        AnySet::Svnr(s) => Ok(s),
        AnySet::Inr(_) => Err(flavor_mismatch(file, Flavor::Svnr, Flavor::Inr)),
    }
}

fn rank_report<E: DocumentElement + CellDisplay>(
    problem: &DecisionProblem<E>,
    measure: MeasureKind,
    weighted: bool,
    polarity: Polarity,
    format: Format,
) -> crate::Result<String> {
    let r = rank(problem, measure, weighted)?;
    let ideal = problem.ideal(polarity);
    Ok(match format {
        Format::Table => report::ranking_table(&r, Some((polarity, &ideal))),
        Format::Json => report::ranking_json(&r, Some((polarity, &ideal))),
    })
}

fn set_output(set: &SvnrSet, format: Format) -> String {
    match format {
        Format::Table => report::set_table(set),
        Format::Json => serde_json::to_string_pretty(&set_document(set)).expect("documents serialize") + "\n",
    }
}

fn bool_output(value: bool, format: Format) -> String {
    match format {
        Format::Table => format!("{value}\n"),
        Format::Json => format!("{{\"result\": {value}}}\n"),
    }
}

fn execute(command: Command) -> Result<String, Failure> {
    match command {
        Command::Similarity {
            measure,
            weights,
            weighted,
            format,
            a,
            b,
        } => {
            if weighted && weights.is_none() {
                return Err(Failure::Usage("--weighted requires --weights".into()));
            }
            let weights = match weights {
                Some(w) => Some(WeightVector::new(w).map_err(|e| Failure::Data(e.to_string()))?),
                None => None,
            };
            let (sa, sb) = (load_set(&a)?, load_set(&b)?);
            let kind = MeasureKind::from(measure);
            let result = match (&sa, &sb) {
                (AnySet::Svnr(x), AnySet::Svnr(y)) => score(kind, x, y, weights.as_ref()),
                (AnySet::Inr(x), AnySet::Inr(y)) => score(kind, x, y, weights.as_ref()),
                _ => return Err(flavor_mismatch(&b, sa.flavor(), sb.flavor())),
            };
            let s = result.map_err(|e| Failure::Data(e.to_string()))?;
            Ok(match format {
                Format::Table => report::similarity_table(&s),
                Format::Json => report::similarity_json(&s),
            })
        }
        Command::Rank {
            measure,
            weighted,
            polarity,
            format,
            problem,
        } => {
            let polarity = match polarity {
                PolarityArg::Positive => Polarity::Positive,
                PolarityArg::Negative => Polarity::Negative,
            };
            let kind = MeasureKind::from(measure);
            let out = match load_problem(&problem)? {
                Problem::Svnr(p) => rank_report(&p, kind, weighted, polarity, format),
                Problem::Inr(p) => rank_report(&p, kind, weighted, polarity, format),
            };
            out.map_err(|e| data_error(&problem, e))
        }
        Command::Consistency {
            objective,
            format,
            problem,
        } => {
            let objective = match objective {
                ObjectiveArg::Maximize => Objective::Maximize,
                ObjectiveArg::Minimize => Objective::Minimize,
            };
            let p = match load_problem(&problem)? {
                Problem::Inr(p) => p,
                Problem::Svnr(_) => return Err(flavor_mismatch(&problem, Flavor::Inr, Flavor::Svnr)),
            };
            let groups = [false, true].map(|w| MeasureKind::ALL.map(|m| Candidate::new(m, w)));
            let reports = groups
                .iter()
                .map(|g| select_measure(&p, g, objective))
                .collect::<crate::Result<Vec<_>>>()
                .map_err(|e| data_error(&problem, e))?;
            Ok(match format {
                Format::Table => report::consistency_table(&reports),
                Format::Json => report::consistency_json(&reports),
            })
        }
        Command::Ops { op, a, b, format } => {
            let second = match (op, &b) {
                (SetOp::Complement, Some(_)) => {
                    return Err(Failure::Usage("complement takes exactly one set file".into()))
                }
                (SetOp::Complement, None) => None,
                (_, None) => return Err(Failure::Usage(format!("{op:?} needs two set files").to_lowercase())),
                (_, Some(b)) => Some(b.as_path()),
            };
            let sa = load_svnr_set(&a)?;
            let sb = second.map(load_svnr_set).transpose()?;
            let located = |e: Error| data_error(second.unwrap_or(&a), e);
            Ok(match (op, sb) {
                (SetOp::Complement, _) => set_output(&algebra::complement(&sa), format),
                (SetOp::Union, Some(sb)) => set_output(&algebra::union(&sa, &sb).map_err(located)?, format),
                (SetOp::Intersection, Some(sb)) => {
                    set_output(&algebra::intersection(&sa, &sb).map_err(located)?, format)
                }
                (SetOp::Subset, Some(sb)) => bool_output(algebra::subset(&sa, &sb).map_err(located)?, format),
                (SetOp::Equal, Some(sb)) => bool_output(algebra::equal(&sa, &sb).map_err(located)?, format),
                (_, None) => unreachable!("second operand checked above"),
            })
        }
    }
}

/// Runs one command line. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
                return EXIT_OK;
            }
            let _ = err.write_all(rendered.as_bytes());
            return EXIT_USAGE;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DATA
        }
    }
}
