use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use scrollforge::document::SpecDocument;
use scrollforge::report::{error_json, Command, Session};
use scrollforge::{Error, MonomialOrder};

/// Correspondence scrolls: construct, verify and report.
#[derive(Parser)]
#[command(name = "scrollforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// JSON spec document.
    #[arg(long)]
    spec: PathBuf,
    /// Monomial order: grevlex, lex or weight:w1,w2,...
    #[arg(long)]
    order: Option<String>,
    /// Initial number of Hilbert samples.
    #[arg(long)]
    smax: Option<u32>,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Stream Gröbner progress to stderr.
    #[arg(long)]
    progress: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generators of the scroll ideal.
    Construct(Common),
    /// Reduced Gröbner basis of the scroll ideal.
    Groebner(Common),
    /// Degree by the Hilbert and Chow routes.
    Degree(Common),
    /// Hilbert function table and polynomial.
    Hilbert(Common),
    /// Krull dimensions of the source and the scroll.
    Dimension(Common),
    /// Gorenstein and Calabi-Yau verdict.
    CheckGorenstein(Common),
    /// Three-matrix description over a divisor in P^1 x P^1.
    MatrixForm(Common),
    /// Compare the three descriptions of a projected scroll.
    Project {
        #[command(flatten)]
        common: Common,
        /// Comma-separated block numbers, starting at 1.
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
    },
    /// Run every applicable check.
    VerifyAll(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Cmd::Construct(c) => (Command::Construct, c),
        Cmd::Groebner(c) => (Command::Groebner, c),
        Cmd::Degree(c) => (Command::Degree, c),
        Cmd::Hilbert(c) => (Command::Hilbert, c),
        Cmd::Dimension(c) => (Command::Dimension, c),
        Cmd::CheckGorenstein(c) => (Command::CheckGorenstein, c),
        Cmd::MatrixForm(c) => (Command::MatrixForm, c),
        Cmd::Project { common, blocks } => (Command::Project(blocks), common),
        Cmd::VerifyAll(c) => (Command::VerifyAll, c),
    };
    let json = common.json;
    match run(&command, common) {
        Ok(report) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("json")
                );
            } else {
                print!("{}", report.to_text());
            }
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&error_json(command.name(), &e)).expect("json")
                );
            } else {
                eprintln!("error [{}]: {e}", e.code());
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: &Command, common: Common) -> Result<scrollforge::report::Report, Error> {
    let mut loaded = SpecDocument::from_path(&common.spec)?.load()?;
    if let Some(o) = &common.order {
        loaded.order = MonomialOrder::parse(o)?;
    }
    if let Some(s) = common.smax {
        loaded.s_max = s;
    }
    let session = Session::new(loaded);
    if common.progress {
        session.on_progress(|label, p| {
            if p.pairs_processed % 100 == 0 {
                eprintln!(
                    "{label}: {} pairs done, {} pending, basis {}, degree {}",
                    p.pairs_processed, p.pairs_pending, p.basis_size, p.degree
                );
            }
        });
    }
    session.run(command)
}
