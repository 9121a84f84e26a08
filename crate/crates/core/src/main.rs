use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cayint::cli::{
    cmd_analyze, cmd_census, write_output, AnalyzeOptions, DEFAULT_MAX_BLOCKS,
};
use cayint::permgroup::DEFAULT_ORDER_CAP;
use cayint::spectra::{verify_cor5_identity, SpectrumOptions, DEFAULT_ORACLE_CAP, DEFAULT_TOL};
use cayint::Error;

#[derive(Parser)]
#[command(name = "cayint", version, about = "Integrality of Cayley graphs of permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one connection set and certify the spectrum of its Cayley graph.
    Analyze {
        /// sym:N | alt:N | dih:N | cyc:N | gens:<cycles>,<cycles>,...[@degree]
        #[arg(long)]
        group: String,
        /// Set spec, e.g. transpositions, star, cycles12, classof:(1 2), union[A;B]
        #[arg(long)]
        set: String,
        /// Also write the report as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Skip the dense-oracle cross-check.
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, env = "CAYINT_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: usize,
        #[arg(long, env = "CAYINT_ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        /// Exit with status 1 when the graph is not integral.
        #[arg(long)]
        expect_integral: bool,
    },
    /// Certify every inversion-closed union of conjugacy classes.
    Census {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, env = "CAYINT_MAX_BLOCKS", default_value_t = DEFAULT_MAX_BLOCKS)]
        max_blocks: usize,
        #[arg(long, env = "CAYINT_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: usize,
    },
    /// Check the group-algebra identity a = d(b - c - d) in S_n.
    VerifyCor5 {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "CAYINT_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: usize,
    },
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze {
            group,
            set,
            json,
            no_oracle,
            tol,
            order_cap,
            oracle_cap,
            expect_integral,
        } => {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Error::Parse(format!("tolerance must be positive, got {tol}")));
            }
            let opts = AnalyzeOptions {
                spectrum: SpectrumOptions { tol, oracle_cap, ..SpectrumOptions::default() },
                order_cap,
                run_oracle: !no_oracle,
            };
            let report = cmd_analyze(&group, &set, &opts)?;
            write_output(&report.to_text(), None)?;
            if let Some(path) = json {
                write_output(&(report.to_json()? + "\n"), Some(&path))?;
            }
            Ok(u8::from(expect_integral && !report.verdict.integral))
        }
        Command::Census { group, json, max_blocks, order_cap } => {
            let report = cmd_census(&group, order_cap, max_blocks)?;
            write_output(&report.to_text(), None)?;
            if let Some(path) = json {
                write_output(&(report.to_json()? + "\n"), Some(&path))?;
            }
            Ok(0)
        }
        Command::VerifyCor5 { n, order_cap } => {
            if n < 3 {
                return Err(Error::Parse("verify-cor5 needs n >= 3".into()));
            }
            if verify_cor5_identity(n, order_cap)? {
                write_output(&format!("n = {n}: a = d(b - c - d) holds; b, c, d commute\n"), None)?;
                Ok(0)
            } else {
                Err(Error::Verification(format!("group-algebra identity fails for n = {n}")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("cayint: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
