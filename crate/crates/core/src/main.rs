use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qks_core::lattice::DEFAULT_MAX_Q;
use qks_core::ray::DEFAULT_TOL;
use qks_core::report::{default_seed, run, write_atomic, Command, Settings, SEED_ENV};
use qks_core::scan::RaySelection;
use qks_core::states::RayConfig;
use qks_core::Error;

#[derive(Parser)]
#[command(
    name = "qks",
    version,
    about = "Pauli-group eigenrays, Kochen-Specker checks and graph invariants"
)]
struct Cli {
    /// Seed for the random Hermitian combinations [default: $QKS_SEED or built-in]
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Numerical tolerance for eigenvectors, snapping and orthogonality
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here (atomically) instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Node budget for KS searches and for α of strong squares
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Largest dimension accepted by `rays` and `scan`
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_Q)]
    max_q: u32,

    /// Include wall-clock timings (makes reports non-reproducible)
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rays {
    Real,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Isotropic lines, eigenray census and real-ray degrees for dimension q
    Rays { q: u32 },
    /// Graph invariants of a catalog entry or file
    Graph { input: String },
    /// Kochen-Specker check with maximal cliques as contexts
    Context { input: String },
    /// Greedy removal-minimal contextual subset
    Minimize { input: String },
    /// Shannon-capacity bounds
    Capacity {
        input: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        kmax: u8,
    },
    /// Graph invariants, KS check and capacity bounds together
    Analyze { input: String },
    /// Run the pipeline for every dimension in a range
    Scan {
        from: u32,
        to: u32,
        #[arg(long, value_enum, default_value_t = Rays::Real)]
        rays: Rays,
    },
}

fn usage(msg: String) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if !(cli.tol > 0.0 && cli.tol < 1.0) {
        return usage(format!("--tol must lie in (0, 1), got {}", cli.tol));
    }
    let seed = match cli.seed.map_or_else(default_seed, Ok) {
        Ok(s) => s,
        Err(e) => return usage(format!("{e} (from {SEED_ENV})")),
    };
    let check_q = |q: u32| -> Result<(), String> {
        if (2..=cli.max_q).contains(&q) {
            Ok(())
        } else {
            Err(format!(
                "q must lie in 2..={} (see --max-q), got {q}",
                cli.max_q
            ))
        }
    };
    let command = match cli.command {
        Cmd::Rays { q } => {
            if let Err(m) = check_q(q) {
                return usage(m);
            }
            Command::Rays { q }
        }
        Cmd::Graph { input } => Command::Graph { input },
        Cmd::Context { input } => Command::Context { input },
        Cmd::Minimize { input } => Command::Minimize { input },
        Cmd::Capacity { input, kmax } => Command::Capacity { input, k_max: kmax },
        Cmd::Analyze { input } => Command::Analyze { input },
        Cmd::Scan { from, to, rays } => {
            if let Err(m) = check_q(from).and(check_q(to)) {
                return usage(m);
            }
            let selection = match rays {
                Rays::Real => RaySelection::Real,
                Rays::All => RaySelection::All,
            };
            Command::Scan {
                from,
                to,
                selection,
            }
        }
    };
    let settings = Settings {
        config: RayConfig { seed, tol: cli.tol },
        budget: cli.budget,
        timings: cli.timings,
    };
    let report = match run(&command, &settings) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let rendered = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match cli.out {
        Some(path) => {
            if let Err(e) = write_atomic(&path, &rendered) {
                return fail(&e);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::SUCCESS
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if e.is_analysis_error() { 2 } else { 1 })
}
