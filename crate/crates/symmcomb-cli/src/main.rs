//! Batch command-line frontend for the symmetric variety combinatorics
//! library: diagram ingestion, one subcommand per computation, and
//! machine-readable reports.

mod cache;
mod commands;
mod config;
mod report;

use clap::{Parser, Subcommand};

use config::{CoordSystem, Globals, Job};
use symmcomb::satake::Symmetric;
use symmcomb::Limits;

#[derive(Parser)]
#[command(
    name = "symmcomb",
    version,
    about = "Combinatorics of complete symmetric varieties over exact arithmetic"
)]
struct Cli {
    #[command(flatten)]
    globals: Globals,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The involution table: sigma action, restricted type, exceptional roots
    Involution,
    /// Spherical generators, Picard generators, and the distinguished basis
    Lattice,
    /// Test a weight for speciality and sphericity
    Spherical {
        /// Comma-separated integer coordinates.
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value = "theta")]
        coords: CoordSystem,
    },
    /// Enumerate the path family of a shape and emit its crystal graph
    Lspaths {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "theta")]
        coords: CoordSystem,
        /// Enumeration strategy: "chains" or "crystal".
        #[arg(long, default_value = "chains")]
        method: String,
    },
    /// Enumerate the standard monomials of a shape
    Monomials {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "theta")]
        coords: CoordSystem,
        /// 1-based orbit indices whose boundary exponents must vanish.
        #[arg(long)]
        orbit_set: Option<String>,
    },
    /// Check the dimension identity for a shape and orbit subset
    VerifyDim {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "theta")]
        coords: CoordSystem,
        #[arg(long)]
        orbit_set: Option<String>,
    },
    /// Decompose a tensor product of irreducible modules
    Tensor {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "theta")]
        coords: CoordSystem,
        /// Decomposition engine: "paths" or "characters".
        #[arg(long, default_value = "paths")]
        engine: String,
    },
    /// Find a witness for one admissible triple, or sweep them all
    Prv {
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, value_enum, default_value = "theta")]
        coords: CoordSystem,
        /// Sweep every admissible triple in the dominant spherical box.
        #[arg(long)]
        sweep: bool,
        /// Check the support side of the multiplication map for λ and μ
        /// (non-exceptional varieties only).
        #[arg(long)]
        support: bool,
        /// Basis-coordinate bound of the sweep box.
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Run the self-check battery for the diagram (or every preset)
    Accept {
        #[arg(long, default_value_t = 2)]
        theta_bound: i64,
        #[arg(long, default_value_t = 2)]
        box_bound: i64,
        /// Check every shipped preset instead of the resolved diagram.
        #[arg(long)]
        all: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(error) => {
            eprintln!("error: {error:#}");
            std::process::exit(classify_error(&error));
        }
    }
}

/// Exit 0 on success, 1 on verification failure, 2 on invalid input.
fn classify_error(error: &anyhow::Error) -> i32 {
    match error.downcast_ref::<symmcomb::Error>() {
        Some(symmcomb::Error::VerificationFailed(_)) => 1,
        Some(symmcomb::Error::Inconsistent(_)) => 1,
        Some(symmcomb::Error::GroupTooLarge { .. }) => 1,
        Some(symmcomb::Error::CrystalCapExceeded { .. }) => 1,
        Some(_) => 2,
        None => 2,
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    // the all-presets battery resolves its diagrams itself
    if let Command::Accept { theta_bound, box_bound, all: true } = &cli.command {
        let output = config::resolve_output(&cli.globals)?;
        configure_pool(output.jobs);
        let outcome = commands::accept_all(&output, *theta_bound, *box_bound)?;
        return finish(&output.out, outcome);
    }

    let job = config::resolve(&cli.globals)?;
    configure_pool(job.jobs);
    let rs = cache::root_system(job.diagram.datum.clone(), Limits::default())?;
    let sym = Symmetric::from_root_system(rs, job.diagram.clone())?;
    let outcome = dispatch(&cli.command, &job, &sym)?;
    finish(&job.out, outcome)
}

fn configure_pool(jobs: usize) {
    if jobs > 1 {
        // a failed build means a pool already exists, which is fine
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
}

fn finish(out: &Option<std::path::PathBuf>, outcome: commands::Outcome) -> anyhow::Result<i32> {
    match out {
        Some(path) => std::fs::write(path, &outcome.body)?,
        None => print!("{}", outcome.body),
    }
    Ok(if outcome.failed_verification { 1 } else { 0 })
}

fn dispatch(command: &Command, job: &Job, sym: &Symmetric) -> anyhow::Result<commands::Outcome> {
    match command {
        Command::Involution => commands::involution(job, sym),
        Command::Lattice => commands::lattice(job, sym),
        Command::Spherical { weight, coords } => {
            let w = config::parse_weight(sym, weight, *coords)?;
            commands::spherical(job, sym, &w)
        }
        Command::Lspaths { lambda, coords, method } => {
            let w = config::parse_weight(sym, lambda, *coords)?;
            commands::lspaths(job, sym, &w, method)
        }
        Command::Monomials { lambda, coords, orbit_set } => {
            let w = config::parse_weight(sym, lambda, *coords)?;
            let orbit = config::parse_orbit_set(sym, orbit_set.as_deref())?;
            commands::monomials(job, sym, &w, &orbit)
        }
        Command::VerifyDim { lambda, coords, orbit_set } => {
            let w = config::parse_weight(sym, lambda, *coords)?;
            let orbit = config::parse_orbit_set(sym, orbit_set.as_deref())?;
            commands::verify_dim(job, sym, &w, &orbit)
        }
        Command::Tensor { lambda, mu, coords, engine } => {
            let l = config::parse_weight(sym, lambda, *coords)?;
            let m = config::parse_weight(sym, mu, *coords)?;
            commands::tensor(job, sym, &l, &m, engine)
        }
        Command::Prv { nu, lambda, mu, coords, sweep, support, bound } => {
            if *sweep {
                commands::prv_sweep(job, sym, *bound)
            } else if *support {
                let (Some(lambda), Some(mu)) = (lambda, mu) else {
                    anyhow::bail!("support mode needs --lambda and --mu");
                };
                let l = config::parse_weight(sym, lambda, *coords)?;
                let m = config::parse_weight(sym, mu, *coords)?;
                commands::prv_support(job, sym, &l, &m)
            } else {
                let (Some(nu), Some(lambda), Some(mu)) = (nu, lambda, mu) else {
                    anyhow::bail!("witness mode needs --nu, --lambda and --mu (or pass --sweep)");
                };
                let n = config::parse_weight(sym, nu, *coords)?;
                let l = config::parse_weight(sym, lambda, *coords)?;
                let m = config::parse_weight(sym, mu, *coords)?;
                commands::prv_witness(job, sym, &n, &l, &m)
            }
        }
        Command::Accept { theta_bound, box_bound, all } => {
            commands::accept(job, sym, *theta_bound, *box_bound, *all)
        }
    }
}
