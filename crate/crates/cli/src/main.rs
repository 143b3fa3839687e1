use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hyperball::exactnum::Rat;
use hyperball::lattice::cache;
use hyperball::suites::{self, Config, Suite};

#[derive(Parser, Debug)]
#[command(name = "hyperball", version, about = "Exact verification of the Eisenstein mirror arrangement computations")]
struct Cli {
    /// Directory for cached root lists
    #[arg(long, global = true, env = "HYPERBALL_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites (all when none are named)
    Verify {
        /// field, lattice, model, batches, geometry, identities, coxeter, or all
        suites: Vec<String>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = 3)]
        batch_max: u32,
        /// Starting t for the σ search, as a fraction
        #[arg(long, default_value = "1/2")]
        sigma_t: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        #[arg(long)]
        fail_fast: bool,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Randomized cases per property check
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
    /// Print a named object (`dump list` shows the names)
    Dump { object: String },
    /// Inspect or clear the root-list cache
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CacheAction {
    Status,
    Clear,
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(Suite::ALL.to_vec());
    }
    names.iter().map(|n| n.parse::<Suite>().map_err(anyhow::Error::msg)).collect()
}

fn cache_dir(dir: Option<&Path>) -> Result<&Path> {
    dir.context("no cache directory: pass --cache-dir or set HYPERBALL_CACHE_DIR")
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { suites: names, threads, batch_max, sigma_t, report, fail_fast, seed, cases } => {
            let sigma_t: Rat = sigma_t.parse().map_err(|e| anyhow::anyhow!("bad --sigma-t {sigma_t}: {e:?}"))?;
            let mut cfg = Config {
                suites: parse_suites(&names)?,
                cache_dir: cli.cache_dir,
                batch_max,
                sigma_t,
                seed,
                fail_fast,
                cases,
                ..Config::default()
            };
            if let Some(t) = threads {
                cfg.threads = t;
            }
            let r = suites::run(&cfg)?;
            match report {
                Format::Text => print!("{r}"),
                Format::Json => println!("{}", serde_json::to_string_pretty(&r)?),
            }
            Ok(r.passed())
        }
        Command::Dump { object } => {
            if object == "list" {
                for o in hyperball::dump::OBJECTS {
                    println!("{o}");
                }
                return Ok(true);
            }
            print!("{}", hyperball::dump::dump(&object, cli.cache_dir.as_deref())?);
            Ok(true)
        }
        Command::Cache { action } => {
            let dir = cache_dir(cli.cache_dir.as_deref())?;
            match action {
                CacheAction::Status => {
                    let mut entries = cache::status(dir)?;
                    entries.sort();
                    if entries.is_empty() {
                        println!("{}: empty", dir.display());
                    }
                    for (name, count) in entries {
                        match count {
                            Some(c) => println!("{name}\t{c}"),
                            None => println!("{name}\tunreadable header"),
                        }
                    }
                }
                CacheAction::Clear => {
                    if !dir.exists() {
                        bail!("{} does not exist", dir.display());
                    }
                    println!("removed {} lists", cache::remove_all(dir)?);
                }
            }
            Ok(true)
        }
    }
}
