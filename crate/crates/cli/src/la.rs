//! `mathbook la ...`: matrix algebra and least squares.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::linalg as la;
use mathbook_core::scalar::format_rational;
use serde_json::json;

#[derive(Subcommand)]
pub enum LaCmd {
    /// Matrix product A * B
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Exact determinant
    Det {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Exact inverse
    Inv {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Solve A x = b by Gaussian elimination (b as one row of numbers)
    Solve {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Matrix inverse modulo m
    Invmod {
        #[arg(allow_hyphen_values = true)]
        a: String,
        m: String,
    },
    /// Matrix power A^p
    Pow {
        #[arg(allow_hyphen_values = true)]
        a: String,
        p: u32,
    },
    /// Length-p walks between 1-based nodes i and j of an incidence matrix
    Paths {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        i: usize,
        j: usize,
        p: u32,
    },
    /// Least-squares polynomial fit over x:y pairs or --csv data
    Fit {
        /// Points as `x:y` pairs (alternative to --csv)
        #[arg(allow_hyphen_values = true)]
        points: Vec<String>,
        /// CSV file with x,y rows (`-` reads stdin)
        #[arg(long)]
        csv: Option<String>,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Force the constant term to zero
        #[arg(long)]
        through_origin: bool,
    },
}

pub fn run(cmd: &LaCmd) -> CliResult {
    match cmd {
        LaCmd::Mul { a, b } => {
            let product = parse_matrix_arg(a)?
                .matmul(&parse_matrix_arg(b)?)
                .map_err(domain)?;
            Ok(Outcome::new(la::format_matrix(&product), matrix_json(&product)))
        }
        LaCmd::Det { a } => {
            let det = la::determinant(&parse_matrix_arg(a)?).map_err(domain)?;
            Ok(Outcome::new(format_rational(&det), rat_json(&det)))
        }
        LaCmd::Inv { a } => {
            match la::invert(&parse_matrix_arg(a)?).map_err(domain)? {
                Some(inv) => Ok(Outcome::new(la::format_matrix(&inv), matrix_json(&inv))),
                None => Err(CliError::new("Singular: the matrix has determinant 0")),
            }
        }
        LaCmd::Solve { a, b } => {
            let matrix = parse_matrix_arg(a)?;
            let rhs = parse_rat_list(&read_arg(b)?)?;
            match la::gauss_solve(&matrix, &rhs).map_err(domain)? {
                la::SolveOutcome::Unique(x) => Ok(Outcome::new(
                    format_rat_list(&x),
                    json!({ "outcome": "unique", "solution": rat_list_json(&x) }),
                )),
                la::SolveOutcome::Inconsistent => Ok(Outcome::new(
                    "inconsistent",
                    json!({ "outcome": "inconsistent" }),
                )),
                la::SolveOutcome::Underdetermined => Ok(Outcome::new(
                    "underdetermined",
                    json!({ "outcome": "underdetermined" }),
                )),
            }
        }
        LaCmd::Invmod { a, m } => {
            let matrix = parse_int_matrix_arg(a)?;
            let modulus = parse_bigint(m)?;
            match la::mat_inv_mod(&matrix, &modulus).map_err(domain)? {
                Some(inv) => Ok(Outcome::new(format_int_matrix(&inv), int_matrix_json(&inv))),
                None => Err(CliError::new(
                    "NotInvertible: determinant shares a factor with the modulus",
                )),
            }
        }
        LaCmd::Pow { a, p } => {
            let powered = parse_matrix_arg(a)?.pow(*p).map_err(domain)?;
            Ok(Outcome::new(la::format_matrix(&powered), matrix_json(&powered)))
        }
        LaCmd::Paths { lambda, i, j, p } => {
            let matrix = parse_int_matrix_arg(lambda)?;
            let count = la::path_count(&matrix, *i, *j, *p).map_err(domain)?;
            Ok(Outcome::new(count.to_string(), big_json(&count)))
        }
        LaCmd::Fit {
            points,
            csv,
            degree,
            through_origin,
        } => {
            let data: Vec<(f64, f64)> = match csv {
                Some(path) => parse_csv_points(&read_file_or_stdin(path)?)?,
                None => {
                    let joined = points.join(" ");
                    parse_points(&joined)?
                        .into_iter()
                        .map(|(x, y)| (approx(&x), approx(&y)))
                        .collect()
                }
            };
            if data.is_empty() {
                return Err(CliError::new(
                    "InsufficientPoints: no data points provided",
                ));
            }
            let fit = la::fit_poly(&data, *degree, *through_origin).map_err(domain)?;
            let coeff_txt = fit
                .coefficients
                .iter()
                .enumerate()
                .map(|(p, c)| format!("x^{}: {}", p, format_f64(*c)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::new(
                format!("{}\nsse: {}", coeff_txt, format_f64(fit.sse)),
                json!({ "coefficients": fit.coefficients, "sse": fit.sse }),
            ))
        }
    }
}
