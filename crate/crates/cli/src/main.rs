//! `kalman`: Betti tables, cohomology, Hilbert series and finite-field
//! checks for Kalman varieties from the command line.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kalman_core::Error;

use commands::{CommandResult, Status};

#[derive(Parser, Debug)]
#[command(
    name = "kalman",
    version,
    about = "Equivariant resolutions of Kalman varieties"
)]
struct Cli {
    /// Print the JSON payload instead of a text table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Dims {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Terms F_i of the resolution of the normalization.
    Betti(Dims),
    /// Cohomology of the q-th exterior power of ξ, by degree.
    Cohomology {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        q: u32,
    },
    /// Hilbert series of the normalization.
    Hilbert(Dims),
    /// Compare a computation against its closed form.
    Verify {
        /// prop-2-2, prop-2-4, m2-output, thm-3-3, thm-3-5, prop-sdm1,
        /// prop-ndp1, inductive-d2 or inductive-d3
        id: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Hilbert series predicted by the inductive sequences, with the
    /// residual against the proven resolutions when d <= 3.
    Conjecture {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Minor vanishing on sampled members and on random matrices.
    KalmanTest {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Jacobian rank of the minors at a sampled member against s(n-d).
    Codim {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hilbert function of the minor ideal by evaluation ranks.
    Hf {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        kmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
}

fn run(command: Command) -> kalman_core::Result<CommandResult> {
    match command {
        Command::Betti(Dims { s, d, n }) => commands::betti(s, d, n),
        Command::Cohomology { dims, q } => commands::cohomology(dims.s, dims.d, dims.n, q),
        Command::Hilbert(Dims { s, d, n }) => commands::hilbert(s, d, n),
        Command::Verify { id, d, n } => commands::verify(&id, d, n),
        Command::Conjecture { d, n } => commands::conjecture(d, n),
        Command::KalmanTest { dims, trials, seed } => {
            commands::kalman_test(dims.s, dims.d, dims.n, trials, seed)
        }
        Command::Codim { dims, seed } => commands::codim(dims.s, dims.d, dims.n, seed),
        Command::Hf {
            dims,
            kmax,
            seed,
            budget,
        } => commands::hf(dims.s, dims.d, dims.n, kmax, seed, budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match run(cli.command) {
        Ok(r) => r,
        Err(e @ Error::BudgetExceeded { .. }) => CommandResult::refused(&e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&result.payload).expect("payload serializes")
        );
    } else if result.status == Status::Refused {
        eprintln!("{}", result.text);
    } else {
        print!("{}", result.text);
    }
    ExitCode::from(result.status.exit_code() as u8)
}
