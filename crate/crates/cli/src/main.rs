//! One binary exposing every toolkit operation as a noun-verb subcommand
//! tree. Exit codes: 0 success, 1 domain error (error name on stderr),
//! 2 usage error.

mod comb;
mod crypto;
mod cx;
mod img;
mod info;
mod la;
mod nt;
mod poly;
mod util;
mod worked;

use clap::{Parser, Subcommand};
use util::CliResult;

#[derive(Parser)]
#[command(
    name = "mathbook",
    version,
    about = "Exact-arithmetic toolkit: number theory, ciphers, codes, matrices, phasors, images"
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Show angles in degrees only (default prints both units)
    #[arg(long, global = true)]
    deg: bool,
    #[command(subcommand)]
    command: Noun,
}

#[derive(Subcommand)]
enum Noun {
    /// Number theory: congruences, primes, gcd/lcm, CRT, tables, ISBN
    Nt {
        #[command(subcommand)]
        cmd: nt::NtCmd,
    },
    /// Counting: factorials, binomials, permutations, Pascal, pmf
    Comb {
        #[command(subcommand)]
        cmd: comb::CombCmd,
    },
    /// Information measures and DNA codon analysis
    Info {
        #[command(subcommand)]
        cmd: info::InfoCmd,
    },
    /// Linear algebra: products, determinants, solving, fitting
    La {
        #[command(subcommand)]
        cmd: la::LaCmd,
    },
    /// Polynomials, quadratics, interpolation, error-correcting code
    Poly {
        #[command(subcommand)]
        cmd: poly::PolyCmd,
    },
    /// Toy ciphers: RSA, affine with cracking, Hill
    Crypto {
        #[command(subcommand)]
        cmd: crypto::CryptoCmd,
    },
    /// Complex numbers and phasors
    Cx {
        #[command(subcommand)]
        cmd: cx::CxCmd,
    },
    /// Air navigation
    Nav {
        #[command(subcommand)]
        cmd: worked::NavCmd,
    },
    /// Analytic geometry
    Geo {
        #[command(subcommand)]
        cmd: worked::GeoCmd,
    },
    /// Physics formulas
    Phys {
        #[command(subcommand)]
        cmd: worked::PhysCmd,
    },
    /// Image transforms and PGM conversion
    Img {
        #[command(subcommand)]
        cmd: img::ImgCmd,
    },
}

fn dispatch(noun: &Noun) -> CliResult {
    match noun {
        Noun::Nt { cmd } => nt::run(cmd),
        Noun::Comb { cmd } => comb::run(cmd),
        Noun::Info { cmd } => info::run(cmd),
        Noun::La { cmd } => la::run(cmd),
        Noun::Poly { cmd } => poly::run(cmd),
        Noun::Crypto { cmd } => crypto::run(cmd),
        Noun::Cx { cmd } => cx::run(cmd),
        Noun::Nav { cmd } => worked::run_nav(cmd),
        Noun::Geo { cmd } => worked::run_geo(cmd),
        Noun::Phys { cmd } => worked::run_phys(cmd),
        Noun::Img { cmd } => img::run(cmd),
    }
}

fn main() {
    let cli = Cli::parse();
    util::set_degrees_only(cli.deg);
    match dispatch(&cli.command) {
        Ok(outcome) => {
            use std::io::Write;
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            let rendered = if cli.json {
                outcome.json.to_string()
            } else {
                outcome.plain
            };
            if let Err(e) = writeln!(handle, "{}", rendered) {
                // A closed pipe (e.g. piping into `head`) is not a failure.
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return;
                }
                eprintln!("IoError: {}", e);
                std::process::exit(1);
            }
        }
        Err(err) => {
            eprintln!("{}", err.0);
            std::process::exit(1);
        }
    }
}
