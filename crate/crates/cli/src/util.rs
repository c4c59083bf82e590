//! Shared argument parsing and output plumbing for the subcommands.

use mathbook_core::complexnum::{Complex, Polar};
use mathbook_core::linalg::Matrix;
use mathbook_core::scalar::{format_rational, parse_rational, rational_to_f64, Rational};
use num_bigint::BigInt;
use serde_json::Value;
use std::io::Read;
use std::sync::atomic::{AtomicBool, Ordering};

/// When set (by the global `--deg` flag), angle output shows degrees only
/// instead of both units.
static DEGREES_ONLY: AtomicBool = AtomicBool::new(false);

pub fn set_degrees_only(on: bool) {
    DEGREES_ONLY.store(on, Ordering::Relaxed);
}

fn degrees_only() -> bool {
    DEGREES_ONLY.load(Ordering::Relaxed)
}

/// Domain failure: the message starts with the library's error name and is
/// printed on stderr with exit code 1.
pub struct CliError(pub String);

impl CliError {
    pub fn new(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

pub fn domain<E: std::fmt::Display>(err: E) -> CliError {
    CliError(err.to_string())
}

/// Successful invocation: a plain rendering and a JSON value.
pub struct Outcome {
    pub plain: String,
    pub json: Value,
}

impl Outcome {
    pub fn new(plain: impl Into<String>, json: Value) -> Self {
        Outcome {
            plain: plain.into(),
            json,
        }
    }
}

pub type CliResult = Result<Outcome, CliError>;

/// Resolves file-like arguments: `-` reads stdin, `@path` reads a file,
/// anything else is taken literally.
pub fn read_arg(raw: &str) -> Result<String, CliError> {
    if raw == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError(format!("IoError: {}", e)))?;
        return Ok(buf);
    }
    if let Some(path) = raw.strip_prefix('@') {
        return std::fs::read_to_string(path)
            .map_err(|e| CliError(format!("IoError: {}: {}", path, e)));
    }
    Ok(raw.to_string())
}

/// Reads a file path (or stdin for `-`); used by flags that name files.
pub fn read_file_or_stdin(raw: &str) -> Result<String, CliError> {
    if raw == "-" {
        return read_arg("-");
    }
    let path = raw.strip_prefix('@').unwrap_or(raw);
    std::fs::read_to_string(path).map_err(|e| CliError(format!("IoError: {}: {}", path, e)))
}

/// Reads raw bytes for image inputs (`-` = stdin, plain value = path).
pub fn read_bytes(raw: &str) -> Result<Vec<u8>, CliError> {
    if raw == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError(format!("IoError: {}", e)))?;
        return Ok(buf);
    }
    std::fs::read(raw).map_err(|e| CliError(format!("IoError: {}: {}", raw, e)))
}

pub fn parse_bigint(s: &str) -> Result<BigInt, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError(format!("ParseError: {:?} is not an integer", s)))
}

pub fn parse_rat(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(domain)
}

/// Matrix from an inline literal (`"a b;c d"`), `@file` or stdin.
pub fn parse_matrix_arg(raw: &str) -> Result<Matrix<Rational>, CliError> {
    let text = read_arg(raw)?;
    mathbook_core::linalg::parse_matrix(&text).map_err(domain)
}

/// Integer matrix (for modular work and incidence graphs).
pub fn parse_int_matrix_arg(raw: &str) -> Result<Matrix<BigInt>, CliError> {
    let m = parse_matrix_arg(raw)?;
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for v in m.entries() {
        if !num_traits::One::is_one(v.denom()) {
            return Err(CliError(format!(
                "ParseError: entry {} is not an integer",
                format_rational(v)
            )));
        }
        out.push(v.numer().clone());
    }
    Matrix::new(m.rows(), m.cols(), out).map_err(domain)
}

/// Space- or comma-separated rational list.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_rat)
        .collect()
}

/// `x:y` pairs separated by whitespace, or CSV lines `x,y`.
pub fn parse_points(text: &str) -> Result<Vec<(Rational, Rational)>, CliError> {
    let mut points = Vec::new();
    for token in text.split_whitespace() {
        let (x, y) = token
            .split_once(':')
            .or_else(|| token.split_once(','))
            .ok_or_else(|| {
                CliError(format!("ParseError: expected x:y pair, got {:?}", token))
            })?;
        points.push((parse_rat(x)?, parse_rat(y)?));
    }
    Ok(points)
}

/// CSV rows `x,y`, skipping blank lines and non-numeric headers.
pub fn parse_csv_points(text: &str) -> Result<Vec<(f64, f64)>, CliError> {
    let mut points = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut cells = line.split([',', ';', '\t']);
        let (Some(a), Some(b)) = (cells.next(), cells.next()) else {
            return Err(CliError(format!("ParseError: bad CSV row {:?}", line)));
        };
        match (a.trim().parse::<f64>(), b.trim().parse::<f64>()) {
            (Ok(x), Ok(y)) => points.push((x, y)),
            _ if points.is_empty() => continue, // header row
            _ => return Err(CliError(format!("ParseError: bad CSV row {:?}", line))),
        }
    }
    Ok(points)
}

/// Complex literal `a+bi` (also `a`, `bi`, `-i`).
pub fn parse_complex(s: &str) -> Result<Complex, CliError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError(format!("ParseError: {:?} is not a complex literal", s));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some(body) = t.strip_suffix('i') {
        // Position of the sign splitting the real and imaginary parts.
        let split = body[1..]
            .rfind(['+', '-'])
            .map(|p| p + 1)
            .filter(|&p| p > 0);
        let (re_txt, im_txt) = match split {
            Some(p) => (&body[..p], &body[p..]),
            None => ("", body),
        };
        let re = if re_txt.is_empty() {
            0.0
        } else {
            re_txt.parse().map_err(|_| bad())?
        };
        let im = match im_txt {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse().map_err(|_| bad())?,
        };
        return Ok(Complex::new(re, im));
    }
    Ok(Complex::new(t.parse().map_err(|_| bad())?, 0.0))
}

/// Phasor literal `M@DEG`, `M@DEGdeg` or `M@RADrad`; the angle separator
/// may also be the angle symbol. Bare angles are degrees.
pub fn parse_phasor(s: &str) -> Result<Polar, CliError> {
    let bad = || CliError(format!("ParseError: {:?} is not a phasor literal", s));
    let (m_txt, angle_txt) = s
        .trim()
        .split_once(['@', '\u{2220}'])
        .ok_or_else(bad)?;
    let modulus: f64 = m_txt.trim().parse().map_err(|_| bad())?;
    let angle_txt = angle_txt.trim();
    if let Some(rad) = angle_txt.strip_suffix("rad") {
        return Ok(Polar::new(modulus, rad.trim().parse().map_err(|_| bad())?));
    }
    let deg_txt = angle_txt.strip_suffix("deg").unwrap_or(angle_txt);
    let degrees: f64 = deg_txt.trim().parse().map_err(|_| bad())?;
    Ok(Polar::from_degrees(modulus, degrees))
}

/// Ascending-power coefficient list, e.g. `"-20 6 0 1"` for x^3 + 6x - 20.
pub fn parse_poly(s: &str) -> Result<mathbook_core::polynomials::Polynomial, CliError> {
    Ok(mathbook_core::polynomials::Polynomial::new(parse_rat_list(
        s,
    )?))
}

// JSON encoders; rationals are {"num", "den"} objects with full precision.

pub fn big_json(n: &BigInt) -> Value {
    serde_json::from_str::<serde_json::Number>(&n.to_string())
        .map(Value::Number)
        .expect("decimal digits parse as a JSON number")
}

pub fn rat_json(r: &Rational) -> Value {
    serde_json::json!({ "num": big_json(r.numer()), "den": big_json(r.denom()) })
}

pub fn rat_list_json(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rat_json).collect())
}

pub fn matrix_json(m: &Matrix<Rational>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| rat_list_json(m.row(i)))
            .collect(),
    )
}

pub fn int_matrix_json(m: &Matrix<BigInt>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(big_json).collect()))
            .collect(),
    )
}

pub fn complex_json(z: &Complex) -> Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

pub fn polar_json(p: &Polar) -> Value {
    serde_json::json!({
        "modulus": p.modulus(),
        "argument_rad": p.argument(),
        "argument_deg": p.argument_degrees(),
    })
}

pub fn format_f64(x: f64) -> String {
    // Trim noise while keeping full interchange precision.
    let formatted = format!("{}", x);
    formatted
}

pub fn format_complex(z: &Complex) -> String {
    if z.im >= 0.0 {
        format!("{}+{}i", format_f64(z.re), format_f64(z.im))
    } else {
        format!("{}{}i", format_f64(z.re), format_f64(z.im))
    }
}

pub fn format_polar(p: &Polar) -> String {
    if degrees_only() {
        format!(
            "{}@{}deg",
            format_f64(p.modulus()),
            format_f64(p.argument_degrees())
        )
    } else {
        format!(
            "{}@{}deg ({} rad)",
            format_f64(p.modulus()),
            format_f64(p.argument_degrees()),
            format_f64(p.argument())
        )
    }
}

pub fn format_rat_list(rs: &[Rational]) -> String {
    rs.iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_int_matrix(m: &Matrix<BigInt>) -> String {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(BigInt::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Rational-to-f64 used in mixed displays.
pub fn approx(r: &Rational) -> f64 {
    rational_to_f64(r)
}
