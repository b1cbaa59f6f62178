//! `bracekit`: command-line front end for the brace workbench.

mod commands;
mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "bracekit", version, about = "Finite skew left brace workbench")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest brace or group order accepted on input.
    #[arg(long, global = true, env = "BRACEKIT_MAX_ORDER", default_value_t = 16)]
    pub max_order: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the group axioms and the brace relation.
    Verify { input: Option<PathBuf> },
    /// Print the opposite brace.
    Opposite { input: Option<PathBuf> },
    /// Print the Yang-Baxter solution of a brace.
    Ybe {
        input: Option<PathBuf>,
        /// Also check that the opposite brace's solution is the inverse.
        #[arg(long)]
        check_inverse: bool,
    },
    /// Classify every subgroup of the dot group.
    Ideals { input: Option<PathBuf> },
    /// List the group-like elements.
    Grouplikes { input: Option<PathBuf> },
    /// Count L-pairs (x o y = xy) and R-pairs (x o y = yx).
    Pairs {
        input: Option<PathBuf>,
        /// List the pairs as well.
        #[arg(long)]
        list: bool,
    },
    /// Decide whether a brace is isomorphic to its opposite.
    Selfopp { input: Option<PathBuf> },
    /// Subgroup of Perm(G) to brace, or brace to subgroup listing.
    Translate {
        /// Brace file, used when --group is absent.
        input: Option<PathBuf>,
        /// Named group G whose permutations are used.
        #[arg(long, requires = "subgroup")]
        group: Option<String>,
        /// Generators, e.g. "rho(s), lambda(s)*rho(t)".
        #[arg(long, requires = "group")]
        subgroup: Option<String>,
    },
    /// All braces with a given circle group, up to isomorphism.
    Enumerate {
        #[arg(long)]
        circle: String,
        /// Largest order to enumerate.
        #[arg(long, default_value_t = bracekit::translation::DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
    /// Print a built-in brace.
    Example {
        #[arg(long, value_enum)]
        name: ExampleName,
        /// Group for the trivial and almost trivial braces.
        #[arg(long)]
        group: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleName {
    Trivial,
    AlmostTrivial,
    PaperD4q8,
}

/// What a command produced: the text rendering, and the structured
/// payload used for JSON output.
pub struct Output {
    pub text: String,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation; exit code 2.
    Usage(String),
    /// Invalid input or a failed check; exit code 1.
    Domain { message: String, witness: Option<Value> },
}

impl From<bracekit::Error> for CliError {
    fn from(e: bracekit::Error) -> Self {
        use bracekit::Error as E;
        let witness = match &e {
            E::BraceRelationFails { x, y, z } | E::NotAssociative { x, y, z } => {
                Some(serde_json::json!({ "x": x, "y": y, "z": z }))
            }
            E::Parse { line, col, .. } => Some(serde_json::json!({ "line": line, "col": col })),
            E::NoInverse { element } => Some(serde_json::json!({ "element": element })),
            E::EntryOutOfRange { row, col, value } => {
                Some(serde_json::json!({ "row": row, "col": col, "value": value }))
            }
            _ => None,
        };
        CliError::Domain { message: e.to_string(), witness }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Ok,
    Error,
}

#[derive(Serialize)]
struct CommandResult {
    status: Status,
    payload: Value,
    diagnostics: Vec<String>,
}

fn emit(format: Format, result: Result<Output, CliError>) -> ExitCode {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let (code, written) = match (format, result) {
        (Format::Text, Ok(o)) => (0, write!(out, "{}", o.text)),
        (Format::Json, Ok(o)) => {
            let r = CommandResult { status: Status::Ok, payload: o.payload, diagnostics: o.diagnostics };
            (0, writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("serializable")))
        }
        (_, Err(CliError::Usage(msg))) => {
            eprintln!("error: {msg}");
            (2, Ok(()))
        }
        (Format::Text, Err(CliError::Domain { message, .. })) => {
            eprintln!("error: {message}");
            (1, Ok(()))
        }
        (Format::Json, Err(CliError::Domain { message, witness })) => {
            let payload = serde_json::json!({ "error": message, "witness": witness });
            let r = CommandResult { status: Status::Error, payload, diagnostics: vec![message] };
            (1, writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("serializable")))
        }
    };
    match written {
        Ok(()) => ExitCode::from(code),
        // a closed pipe downstream is not our failure to report
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli);
    emit(cli.format, result)
}
