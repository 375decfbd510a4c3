use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use zeromodes::config::load_config;
use zeromodes::report::{cmd_classify, cmd_grid, cmd_spinflip, cmd_zeromodes};
use zeromodes::Error;

/// Zero-modes of Dirac and Pauli operators with Aharonov-Bohm solenoids.
#[derive(Parser)]
#[command(name = "zeromodes", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the kernel basis, verify it, and emit a JSON report
    Zeromodes {
        /// TOML configuration file
        #[arg(long, short)]
        config: PathBuf,
        /// write the report here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Classify the extension against the EV and Maximal patterns
    Classify {
        #[arg(long, short)]
        config: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check spin-flip equivalence of two extension vectors
    Spinflip {
        #[arg(long, short)]
        config: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Emit a CSV grid of |psi|^2 for one constructed mode
    Grid {
        #[arg(long, short)]
        config: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

const EXIT_CONFIG: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;
const EXIT_EMPTY: u8 = 4;

fn emit(text: &str, output: Option<&PathBuf>) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text),
        None => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            Ok(())
        }
    }
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Zeromodes { config, output } => {
            let cfg = load_config(config).map_err(|e| e.to_string())?;
            let report = cmd_zeromodes(&cfg).map_err(|e| e.to_string())?;
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            emit(&json, output.as_ref()).map_err(|e| e.to_string())?;
            if report.verification.passed {
                Ok(0)
            } else {
                eprintln!("verification failed above tolerance");
                Ok(EXIT_VERIFICATION)
            }
        }
        Command::Classify { config, output } => {
            let cfg = load_config(config).map_err(|e| e.to_string())?;
            let report = cmd_classify(&cfg).map_err(|e| e.to_string())?;
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            emit(&json, output.as_ref()).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Spinflip { config, output } => {
            let cfg = load_config(config).map_err(|e| e.to_string())?;
            let report = cmd_spinflip(&cfg).map_err(|e| e.to_string())?;
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            emit(&json, output.as_ref()).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Grid { config, output } => {
            let cfg = load_config(config).map_err(|e| e.to_string())?;
            match cmd_grid(&cfg) {
                Ok(grid) => {
                    emit(&grid.csv, output.as_ref()).map_err(|e| e.to_string())?;
                    eprintln!(
                        "{} rows written, {} grid points skipped",
                        grid.rows, grid.skipped
                    );
                    Ok(0)
                }
                Err(e @ Error::EmptyBasis) => {
                    eprintln!("{e}");
                    Ok(EXIT_EMPTY)
                }
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}
