//! Command-line front end: construct families, verify witness files, run
//! exhaustive searches, export DOT and rebuild the worked examples.

pub mod construct;
pub mod document;
pub mod dot;
pub mod reproduce;
pub mod search;
pub mod verify;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::Result;
use clap::{Parser, Subcommand};

use construct::ConstructArgs;
use document::Document;
use search::SearchArgs;
use verify::{ClassName, Mode};

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failed,
    NotFound,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Failed => 2,
            Outcome::NotFound => 3,
        }
    }
}

pub const EXIT_USAGE: i32 = 1;

#[derive(Parser)]
#[command(
    name = "edf-forge",
    version,
    about = "Graph valuations, blow-ups and external difference families",
    after_help = "EXIT CODES:\n  0 success or verified\n  1 usage, parse or parameter error\n  2 verification failed\n  3 exhaustive search found nothing"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labelled family or EDF and write it as JSON
    Construct {
        #[command(flatten)]
        args: ConstructArgs,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a JSON file and print a transcript
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Edf)]
        mode: Mode,
        /// Shift for ccedf mode (default: params.c from the file)
        #[arg(long)]
        c: Option<usize>,
        /// Class for valuation mode (default: the class recorded in the file)
        #[arg(long, value_enum)]
        class: Option<ClassName>,
    },
    /// Exhaustive valuation search on a small graph
    Search(SearchArgs),
    /// Write a JSON file as Graphviz DOT
    ExportDot {
        input: PathBuf,
        output: PathBuf,
        /// Draw every set element as its own node
        #[arg(long)]
        blown: bool,
    },
    /// Rebuild the worked examples and compare them set for set
    Reproduce {
        /// Also write each example as a JSON file here
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn dispatch(command: Command, out: &mut impl Write, err: &mut impl Write) -> Result<Outcome> {
    match command {
        Command::Construct { args, out: path } => {
            let doc = construct::build(&args)?;
            let mut transcript = Vec::new();
            let outcome = match doc.params.c {
                Some(c) => verify::verify_ccedf_doc(&doc, Some(c), &mut transcript)?,
                None => verify::verify_edf_doc(&doc, &mut transcript)?,
            };
            let v = doc.witness()?.verify()?;
            let doc = doc.with_transcript(&v);
            match path {
                Some(p) => {
                    doc.write(&p)?;
                    out.write_all(&transcript)?;
                }
                None => {
                    out.write_all(doc.to_json().as_bytes())?;
                    err.write_all(&transcript)?;
                }
            }
            Ok(outcome)
        }
        Command::Verify { file, mode, c, class } => {
            let doc = Document::read(&file)?;
            verify::verify_doc(&doc, mode, c, class, out)
        }
        Command::Search(args) => search::run_search(&args, out),
        Command::ExportDot { input, output, blown } => {
            let doc = Document::read(&input)?;
            let text = if blown { dot::blown_dot(&doc) } else { dot::witness_dot(&doc) };
            std::fs::write(&output, &text)?;
            let (nodes, edges) = dot::count_dot(&text);
            writeln!(out, "wrote {} ({nodes} nodes, {edges} edges)", output.display())?;
            Ok(Outcome::Success)
        }
        Command::Reproduce { out_dir } => reproduce::run_reproduce(out_dir.as_deref(), out),
    }
}

/// Parse `args` and run, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

pub fn main_with_stdio() -> i32 {
    run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock())
}
