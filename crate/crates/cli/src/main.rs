use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ymick::{run_suite, suite_names, Config, HarnessError, Overrides, SuiteParams};

#[derive(Parser)]
#[command(name = "ymick", version, about = "Exact verification suites for Yangian actions on Grassmann algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named suite (or `all`).
    Check {
        suite: String,
        #[arg(long = "m")]
        m: Option<usize>,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long = "l")]
        l: Option<usize>,
        #[arg(long = "N")]
        big_n: Option<usize>,
        /// Truncation order S.
        #[arg(long)]
        order: Option<usize>,
        /// Weight labels, e.g. `1/3,0`.
        #[arg(long)]
        mu: Option<String>,
        /// One-based one-line permutation, e.g. `2,1,3`.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Largest matrix dimension a suite may build.
        #[arg(long)]
        max_dim: Option<u128>,
        /// `key = value` file with optional `[suite]` sections.
        #[arg(long)]
        config: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<String>,
        /// Report elapsed_ms as 0 so identical runs give identical bytes.
        #[arg(long)]
        stable: bool,
    },
    /// List the suite names.
    Suites,
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.command {
        Command::Suites => {
            for name in suite_names() {
                println!("{name}");
            }
            Ok(true)
        }
        Command::Check {
            suite,
            m,
            n,
            l,
            big_n,
            order,
            mu,
            sigma,
            seed,
            max_dim,
            config,
            format,
            out,
            stable,
        } => {
            let from_file = match &config {
                Some(path) => Overrides::from_map(&Config::load(path)?.for_suite(&suite))?,
                None => Overrides::default(),
            };
            let flags = Overrides {
                m,
                n,
                l,
                big_n,
                order,
                mu,
                sigma,
                seed,
                max_dim,
            };
            let params = SuiteParams::resolve(&suite, &from_file.overlay(&flags))?;
            let report = run_suite(&params, stable)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|source| HarnessError::Io { path, source })?,
                None => print!("{text}"),
            }
            Ok(report.all_passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
