use std::path::PathBuf;
use std::process::ExitCode;

use acso::cli::{self, CliError, CommandOutput, Format};
use clap::{Parser, Subcommand, ValueEnum};

/// Obstructions to complex structures on oriented real vector bundles.
#[derive(Parser)]
#[command(name = "acso", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run every obstruction check on a space file.
    Check {
        file: PathBuf,
        /// Bound on free coefficients in the Chern class search.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// List integral lifts of a Stiefel-Whitney class.
    Lifts {
        file: PathBuf,
        #[arg(long)]
        class: String,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Homotopy groups of SO(2n)/U(n) and obstruction denominators.
    Table {
        /// n and q for pi_q(SO(2n)/U(n)).
        #[arg(long, num_args = 2, value_names = ["N", "Q"], conflicts_with = "denominator", required_unless_present = "denominator")]
        pi: Option<Vec<u64>>,
        /// k for the denominator in degree 4k+3.
        #[arg(long)]
        denominator: Option<u64>,
    },
    /// Check the example corpus against its recorded expectations.
    Corpus {
        #[arg(long)]
        run: bool,
        /// Directory of space files to use instead of the bundled corpus.
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn dispatch(args: Args) -> Result<CommandOutput, CliError> {
    match args.command {
        Command::Check {
            file,
            bound,
            format,
        } => cli::cmd_check(&file, bound, format.into()),
        Command::Lifts { file, class, bound } => cli::cmd_lifts(&file, &class, bound),
        Command::Table { pi: Some(v), .. } => cli::cmd_table_pi(v[0], v[1]),
        Command::Table {
            denominator: Some(k),
            ..
        } => cli::cmd_table_denominator(k),
        Command::Table { .. } => Err(CliError::Usage(
            "table needs --pi N Q or --denominator K".into(),
        )),
        Command::Corpus { run, dir, format } => {
            if run {
                cli::cmd_corpus(dir.as_deref(), format.into())
            } else {
                let names: Vec<&str> = cli::BUILTIN_CORPUS.iter().map(|(f, _)| *f).collect();
                Ok(CommandOutput {
                    exit_code: 0,
                    stdout: format!("{}\n", names.join("\n")),
                })
            }
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Args::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
