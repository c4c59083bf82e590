//! `mathbook poly ...`: polynomial arithmetic, quadratics, interpolation
//! and the interpolation code. Polynomials are given as ascending
//! coefficient lists, e.g. "-20 6 0 1" for x^3 + 6x - 20.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::polynomials as poly;
use mathbook_core::scalar::format_rational;
use serde_json::json;

#[derive(Subcommand)]
pub enum PolyCmd {
    /// Sum of two polynomials
    Add {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Product of two polynomials
    Mul {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Quotient and remainder of p over q
    Divmod {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Monic greatest common divisor
    Gcd {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Evaluate p at a rational point
    Eval {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Term-wise derivative
    Deriv {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Both roots of a x^2 + b x + c
    Roots {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Vertex form a (x - h)^2 - k of a quadratic
    Vertex {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Lagrange interpolation through x:y points
    Interp {
        #[arg(allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Extend k data values with k redundant interpolated values
    RsEncode {
        #[arg(allow_hyphen_values = true)]
        data: Vec<String>,
    },
    /// Degree test: is a received 2k-codeword free of corruption?
    RsVerify {
        #[arg(allow_hyphen_values = true)]
        codeword: Vec<String>,
    },
    /// Locate and repair up to t corrupted entries by omission search
    RsCorrect {
        #[arg(allow_hyphen_values = true)]
        codeword: Vec<String>,
        #[arg(long, default_value_t = 1)]
        max_errors: usize,
    },
}

fn poly_outcome(p: &poly::Polynomial) -> Outcome {
    Outcome::new(
        p.to_string(),
        json!({
            "pretty": p.to_string(),
            "coefficients": rat_list_json(p.coeffs()),
        }),
    )
}

fn gather(list: &[String]) -> Result<Vec<mathbook_core::Rational>, CliError> {
    parse_rat_list(&list.join(" "))
}

pub fn run(cmd: &PolyCmd) -> CliResult {
    match cmd {
        PolyCmd::Add { p, q } => Ok(poly_outcome(&parse_poly(p)?.add(&parse_poly(q)?))),
        PolyCmd::Mul { p, q } => Ok(poly_outcome(&parse_poly(p)?.mul(&parse_poly(q)?))),
        PolyCmd::Divmod { p, q } => {
            let (quot, rem) = parse_poly(p)?.divmod(&parse_poly(q)?).map_err(domain)?;
            Ok(Outcome::new(
                format!("quotient: {}\nremainder: {}", quot, rem),
                json!({
                    "quotient": rat_list_json(quot.coeffs()),
                    "remainder": rat_list_json(rem.coeffs()),
                }),
            ))
        }
        PolyCmd::Gcd { p, q } => {
            let g = poly::poly_gcd(&parse_poly(p)?, &parse_poly(q)?).map_err(domain)?;
            Ok(poly_outcome(&g))
        }
        PolyCmd::Eval { p, x } => {
            let value = parse_poly(p)?.eval(&parse_rat(x)?);
            Ok(Outcome::new(format_rational(&value), rat_json(&value)))
        }
        PolyCmd::Deriv { p } => Ok(poly_outcome(&parse_poly(p)?.derivative())),
        PolyCmd::Roots { a, b, c } => {
            let (r1, r2) =
                poly::quadratic_roots(&parse_rat(a)?, &parse_rat(b)?, &parse_rat(c)?)
                    .map_err(domain)?;
            Ok(Outcome::new(
                format!("{}\n{}", format_complex(&r1), format_complex(&r2)),
                json!([complex_json(&r1), complex_json(&r2)]),
            ))
        }
        PolyCmd::Vertex { a, b, c } => {
            let v = poly::complete_square(&parse_rat(a)?, &parse_rat(b)?, &parse_rat(c)?)
                .map_err(domain)?;
            let (vx, vy) = v.vertex();
            Ok(Outcome::new(
                format!(
                    "a: {}\nh: {}\nk: {}\nvertex: ({}, {})",
                    format_rational(&v.a),
                    format_rational(&v.h),
                    format_rational(&v.k),
                    format_rational(&vx),
                    format_rational(&vy)
                ),
                json!({
                    "a": rat_json(&v.a),
                    "h": rat_json(&v.h),
                    "k": rat_json(&v.k),
                    "vertex": [rat_json(&vx), rat_json(&vy)],
                }),
            ))
        }
        PolyCmd::Interp { points } => {
            let pts = parse_points(&points.join(" "))?;
            let l = poly::lagrange_interpolate(&pts).map_err(domain)?;
            Ok(poly_outcome(&l))
        }
        PolyCmd::RsEncode { data } => {
            let cw = poly::rs_encode(&gather(data)?).map_err(domain)?;
            Ok(Outcome::new(
                format_rat_list(cw.values()),
                rat_list_json(cw.values()),
            ))
        }
        PolyCmd::RsVerify { codeword } => {
            let cw = poly::RsCodeword::from_values(gather(codeword)?).map_err(domain)?;
            let clean = poly::rs_verify(&cw).map_err(domain)?;
            Ok(Outcome::new(
                if clean { "clean" } else { "corrupted" },
                json!(clean),
            ))
        }
        PolyCmd::RsCorrect {
            codeword,
            max_errors,
        } => {
            let cw = poly::RsCodeword::from_values(gather(codeword)?).map_err(domain)?;
            match poly::rs_correct(&cw, *max_errors).map_err(domain)? {
                Some(fix) => {
                    let positions = fix
                        .error_positions
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ");
                    Ok(Outcome::new(
                        format!(
                            "errors at: {}\ncorrected: {}\ndata: {}",
                            if positions.is_empty() { "none" } else { &positions },
                            format_rat_list(&fix.corrected_values),
                            format_rat_list(&fix.data)
                        ),
                        json!({
                            "error_positions": fix.error_positions,
                            "corrected_values": rat_list_json(&fix.corrected_values),
                            "data": rat_list_json(&fix.data),
                        }),
                    ))
                }
                None => Err(CliError::new(format!(
                    "Uncorrectable: no omission of up to {} positions explains the word",
                    max_errors
                ))),
            }
        }
    }
}
