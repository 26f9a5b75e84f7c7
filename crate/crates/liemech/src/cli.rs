use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands;
use crate::error::CliResult;

#[derive(Debug, Parser)]
#[command(name = "liemech", version, about = "Lie algebras, momentum maps and Lie-Poisson dynamics")]
#[command(arg_required_else_help = true, propagate_version = true)]
pub struct Cli {
    /// Seed for every sampled quantity.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RootFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    RigidBody,
    HeavyTop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Rk4,
    Midpoint,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root system, Cartan matrix and Dynkin diagram of a classical family.
    Roots {
        /// A, B, C or D.
        #[arg(long)]
        family: char,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = RootFormat::Text)]
        format: RootFormat,
    },
    /// Dimensions of H^1 and H^2 with trivial coefficients.
    Cohomology {
        /// Built-in name (so3, sl3, galilei, ...) or an algebra JSON file.
        #[arg(long)]
        algebra: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        degree: Option<u8>,
        /// Include a basis of representative cocycles.
        #[arg(long)]
        witness: bool,
    },
    /// Integrate the Lie-Poisson equations of a rigid body or heavy top.
    Simulate {
        #[arg(long, value_enum)]
        model: Model,
        /// `[I1, I2, I3]` or `{"inertia": [...], "chi": [...]}`.
        #[arg(long)]
        params: String,
        #[arg(long)]
        mu0: String,
        #[arg(long = "T")]
        t_final: f64,
        #[arg(long)]
        dt: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Midpoint)]
        method: MethodArg,
        /// CSV destination; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild the motion on T*SO(3) from the reduced rigid-body motion.
    Reconstruct {
        #[arg(long, value_enum)]
        model: Model,
        /// Moments of inertia.
        #[arg(long, default_value = "[3, 2, 1]")]
        params: String,
        /// Initial group slot, a 3x3 array of rows.
        #[arg(long)]
        a0: String,
        #[arg(long)]
        mu0: String,
        #[arg(long = "T")]
        t_final: f64,
        #[arg(long)]
        dt: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Midpoint)]
        method: MethodArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimension of the coadjoint orbit through a point of g*.
    OrbitDim {
        #[arg(long)]
        algebra: String,
        /// Coordinates, or `{"alpha", "beta"}` (cm3) / `{"m0c", "s0"}` (poincare).
        #[arg(long)]
        point: String,
    },
    /// Bifurcation energies and sampled level-set topology of the rigid body.
    Scan {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value = "[3, 2, 1]")]
        params: String,
        /// Number of evenly spaced energies.
        #[arg(long, default_value_t = 41)]
        samples: usize,
        /// Latitude rings of the sphere grid.
        #[arg(long, default_value_t = 120)]
        grid: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the Euler form with the Christoffel geodesic in Euler angles.
    GeodesicCheck {
        #[arg(long)]
        inertia: String,
        #[arg(long)]
        omega0: String,
        #[arg(long = "T")]
        t_final: f64,
        #[arg(long)]
        dt: f64,
        /// Initial `[psi, theta, phi]`.
        #[arg(long)]
        angles: Option<String>,
    },
    /// Momentum-map checks.
    Moment {
        #[command(subcommand)]
        action: MomentCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum MomentCommand {
    /// Equivariance residuals of (lambda, J^l) and (rho, J^r).
    Check {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn execute(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Roots { family, rank, format } => commands::roots(*family, *rank, *format),
        Command::Cohomology { algebra, degree, witness } => commands::cohomology(algebra, *degree, *witness),
        Command::Simulate { model, params, mu0, t_final, dt, method, out } => {
            commands::simulate(*model, params, mu0, *t_final, *dt, *method, out.as_deref())
        }
        Command::Reconstruct { model, params, a0, mu0, t_final, dt, method, out } => {
            commands::reconstruct(*model, params, a0, mu0, *t_final, *dt, *method, out.as_deref())
        }
        Command::OrbitDim { algebra, point } => commands::orbit_dim(algebra, point),
        Command::Scan { model, r, params, samples, grid, jobs, out } => {
            commands::scan(*model, *r, params, *samples, *grid, *jobs, out.as_deref())
        }
        Command::GeodesicCheck { inertia, omega0, t_final, dt, angles } => {
            commands::geodesic_check(inertia, omega0, *t_final, *dt, angles.as_deref())
        }
        Command::Moment { action: MomentCommand::Check { group, samples } } => {
            commands::moment_check(group, *samples, cli.seed)
        }
    }
}

/// Parse `args` (including the program name) and run. Data goes to `out`,
/// diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                let _ = writeln!(err, "error: io: cannot write to standard output");
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{}", e.render());
            e.exit_code()
        }
    }
}

/// [`run`] on the process arguments and standard streams.
pub fn dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}
