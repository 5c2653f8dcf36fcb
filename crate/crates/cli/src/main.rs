use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use prefseven_cli::commands::{self, Overrides, RunArgs};
use prefseven_cli::http;
use prefseven_cli::problem::exit_code;
use prefseven_core::rational::{self, Rational};
use prefseven_core::service::Store;

/// Seven-valued preference relations under several weight perspectives.
#[derive(Parser)]
#[command(name = "prefseven", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline on a dataset and configuration.
    Run {
        /// Performance table (.csv or .json).
        #[arg(long)]
        data: PathBuf,
        /// Session configuration (JSON).
        #[arg(long)]
        config: PathBuf,
        /// Where to write the report.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also record dataset, configuration and report in this session directory.
        #[arg(long)]
        session: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        /// Acceptance threshold t for sampling verdicts.
        #[arg(long, value_parser = parse_rational)]
        threshold: Option<Rational>,
        /// Check the report's self-consistency before writing it.
        #[arg(long)]
        verify: bool,
        /// Skip the matrix, scores and ranking summary.
        #[arg(long, short)]
        quiet: bool,
    },
    /// Explain one cell of the latest report of a session.
    Explain {
        /// Session directory or report file.
        #[arg(long)]
        session: PathBuf,
        /// Ordered pair, e.g. S2,S3.
        #[arg(long)]
        pair: String,
        #[arg(long)]
        json: bool,
    },
    /// Check that a report recombines and rescores consistently.
    Verify {
        #[arg(long)]
        report: PathBuf,
    },
    /// Serve the HTTP API.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: SocketAddr,
        /// Session root; defaults to $PREFSEVEN_DATA_DIR.
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    rational::parse(text).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    match execute(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn execute(command: Command) -> prefseven_core::Result<ExitCode> {
    match command {
        Command::Run { data, config, out, session, seed, samples, threshold, verify, quiet } => {
            let report = commands::run(&RunArgs {
                data: &data,
                config: &config,
                out: out.as_deref(),
                session: session.as_deref(),
                overrides: Overrides { seed, samples, threshold },
                verify,
            })?;
            if !quiet {
                print!("{}", commands::summary(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Explain { session, pair, json } => {
            let text = commands::explain(&session, &pair, json)?;
            print!("{text}");
            if json {
                println!();
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { report } => {
            let problems = commands::verify(&report)?;
            if problems.is_empty() {
                println!("report is consistent");
                return Ok(ExitCode::SUCCESS);
            }
            for p in &problems {
                println!("{p}");
            }
            Ok(ExitCode::from(2))
        }
        Command::Serve { addr, data_dir } => {
            let store = match data_dir {
                Some(dir) => Store::new(dir)?,
                None => Store::from_env()?,
            };
            let runtime = tokio::runtime::Runtime::new()?;
            runtime.block_on(async move {
                let listener = tokio::net::TcpListener::bind(addr).await?;
                eprintln!("serving {} on http://{addr}", store.root().display());
                axum::serve(listener, http::router(store))
                    .with_graceful_shutdown(async {
                        let _ = tokio::signal::ctrl_c().await;
                    })
                    .await
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
