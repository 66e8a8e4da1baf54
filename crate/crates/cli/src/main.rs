mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use himul_core::{Error, Rat};

#[derive(Parser)]
#[command(
    name = "himul",
    version,
    about = "Higher multiplier ideals, V-filtration spectra and singularity invariants"
)]
struct Cli {
    /// Print JSON instead of a table
    #[arg(long, global = true)]
    json: bool,

    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

fn rat(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|e| e.to_string())
}

#[derive(Args)]
struct Germ {
    /// diagonal, fermat-cone, ts or power
    #[arg(long)]
    class: String,

    /// Class parameters, e.g. `2,3` or `diagonal:2,3+power:2`
    #[arg(long, allow_hyphen_values = true)]
    params: String,

    /// Upper end of the computed range (default: minimal exponent + 3)
    #[arg(long, value_parser = rat, allow_hyphen_values = true)]
    cutoff: Option<Rat>,
}

#[derive(Subcommand)]
enum Command {
    /// Jump table of the microlocal V-filtration
    Spectrum(Germ),

    /// Generators of I_{k,α}; classes also include `nc` (exponents, zeros
    /// allowed) and `qdivisor` (rational coefficients)
    Ideal {
        #[command(flatten)]
        germ: Germ,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = rat, allow_hyphen_values = true)]
        alpha: Rat,
    },

    /// dim 𝒢_{k,α} at an ordinary singularity
    Gdim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = rat, allow_hyphen_values = true)]
        alpha: Rat,
    },

    /// Primitive Hodge numbers of a smooth hypersurface in P^N, or of an
    /// eigenspace of its cyclic cover
    Hodge {
        /// N, the dimension of the ambient projective space
        #[arg(long)]
        ambient_dim: usize,
        #[arg(long)]
        degree: u32,
        /// Eigenvalue e^{2πi p/m} written `p/m`, with m the degree
        #[arg(long)]
        eigen: Option<String>,
    },

    /// Numerical criteria attached to singular strata
    #[command(subcommand)]
    Criteria(Criteria),

    /// Invariants read off log resolution data
    Resolution(ResolutionArgs),

    /// Root classes of the Bernstein–Sato polynomial modulo ℤ
    BsClasses(Germ),
}

#[derive(Subcommand)]
enum Criteria {
    /// n - d = k·m + r and α = -r/m
    Nontriviality {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: u64,
    },
    /// Symbolic power containing I_{ℓ,α}
    SymbolicPower {
        #[arg(long)]
        codim: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        level: u64,
        #[arg(long, value_parser = rat, allow_hyphen_values = true)]
        alpha: Rat,
    },
    /// Smallest k in the containment criterion
    Threshold {
        /// Codimension of the stratum
        #[arg(long)]
        r: u64,
        #[arg(long)]
        m: u64,
    },
    /// Degree bound for independent conditions imposed by singular points
    IndepConditions {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        /// Evaluate the bound at this degree
        #[arg(long)]
        d: Option<i64>,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["file", "builtin"])))]
struct ResolutionArgs {
    /// JSON file with `components`, `maximal_intersections` and optional `strata`
    #[arg(long)]
    file: Option<PathBuf>,

    /// Built-in family such as `hyperelliptic_theta(5)`
    #[arg(long)]
    builtin: Option<String>,

    #[command(subcommand)]
    query: ResolutionQuery,
}

#[derive(Subcommand)]
enum ResolutionQuery {
    Lct,
    /// Lower and upper bound for the minimal exponent
    Bounds,
    /// Top weight level at α
    WeightLevel {
        #[arg(long, value_parser = rat, allow_hyphen_values = true)]
        alpha: Rat,
    },
    /// Minimal log canonical centers
    LcCenter,
}

/// Failures, sorted by exit code.
enum Failure {
    Input(String),
    Cutoff(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CutoffExceeded { .. } => Failure::Cutoff(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

fn run(cli: &Cli) -> Result<render::Report, Failure> {
    match &cli.command {
        Command::Spectrum(g) => commands::spectrum(&g.class, &g.params, g.cutoff.as_ref()),
        Command::Ideal { germ, k, alpha } => {
            commands::ideal(&germ.class, &germ.params, germ.cutoff.as_ref(), *k, alpha)
        }
        Command::Gdim { n, m, k, alpha } => commands::gdim(*n, *m, *k, alpha),
        Command::Hodge {
            ambient_dim,
            degree,
            eigen,
        } => commands::hodge(*ambient_dim, *degree, eigen.as_deref()),
        Command::Criteria(c) => match c {
            Criteria::Nontriviality { n, d, m } => commands::nontriviality(*n, *d, *m),
            Criteria::SymbolicPower {
                codim,
                m,
                level,
                alpha,
            } => commands::symbolic_power(*codim, *m, *level, alpha),
            Criteria::Threshold { r, m } => commands::threshold(*r, *m),
            Criteria::IndepConditions { n, m, d } => commands::indep_conditions(*n, *m, *d),
        },
        Command::Resolution(args) => {
            let source = match (&args.file, &args.builtin) {
                (Some(path), _) => commands::Source::File(path),
                (None, Some(name)) => commands::Source::Builtin(name),
                (None, None) => unreachable!("clap requires one source"),
            };
            let (res, strata) = commands::load_resolution(source)?;
            match &args.query {
                ResolutionQuery::Lct => commands::lct(&res),
                ResolutionQuery::Bounds => commands::bounds(&res, strata.as_ref()),
                ResolutionQuery::WeightLevel { alpha } => commands::weight_level(&res, alpha),
                ResolutionQuery::LcCenter => commands::lc_center(&res),
            }
        }
        Command::BsClasses(g) => commands::bs_classes(&g.class, &g.params, g.cutoff.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Cutoff(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let out = report.render(cli.json);
    match &cli.out {
        None => print!("{out}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    ExitCode::SUCCESS
}
