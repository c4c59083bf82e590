//! Dense polynomials over exact rationals: ring arithmetic, Euclidean
//! division and gcd, quadratic solving, vertex form, Lagrange interpolation
//! and the interpolation-based error detecting/correcting code.

use crate::complexnum::Complex;
use crate::scalar::{format_rational, rational_to_f64, Rational};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PolyError {
    #[error("DivisionByZeroPolynomial: cannot divide by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("BothZero: gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("NotQuadratic: leading coefficient is zero")]
    NotQuadratic,
    #[error("DuplicateAbscissa: repeated x value {0}")]
    DuplicateAbscissa(String),
    #[error("LengthMismatch: {0}")]
    LengthMismatch(String),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

/// Dense polynomial; `coeffs[i]` multiplies `x^i` and the vector carries no
/// trailing zeros (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Polynomial::new(coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder with `deg r < deg d`, exact.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZeroPolynomial);
        }
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut remainder = self.coeffs.clone();
        let mut quotient = vec![Rational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while remainder.len() > ddeg {
            let rdeg = remainder.len() - 1;
            let factor = remainder.last().unwrap() / &dlead;
            quotient[rdeg - ddeg] = factor.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let idx = rdeg - ddeg + i;
                remainder[idx] -= &factor * c;
            }
            remainder.pop();
            while remainder.last().is_some_and(Zero::is_zero) {
                remainder.pop();
            }
        }
        Ok((Polynomial::new(quotient), Polynomial::new(remainder)))
    }

    /// Horner evaluation over rationals.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in doubles.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    /// Term-wise derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lead) if !lead.is_one() => {
                let inv = Rational::one() / lead;
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, magnitude) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let coeff_txt = format_rational(&magnitude);
            match power {
                0 => write!(f, "{}", coeff_txt)?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{}", coeff_txt)?;
                    }
                    if power == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", power)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Monic greatest common divisor by Euclid's algorithm.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = a.divmod(&b)?;
        a = std::mem::replace(&mut b, r);
    }
    Ok(a.monic())
}

/// Both roots of `a x^2 + b x + c`; a real pair when the discriminant is
/// non-negative, an exact conjugate pair otherwise. The first root carries
/// the `+` branch of the radical.
pub fn quadratic_roots(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<(Complex, Complex), PolyError> {
    if a.is_zero() {
        return Err(PolyError::NotQuadratic);
    }
    let disc = b * b - Rational::from_integer(4.into()) * a * c;
    let center = rational_to_f64(&(-b / (Rational::from_integer(2.into()) * a)));
    let two_a = 2.0 * rational_to_f64(a);
    if disc.is_negative() {
        let im = rational_to_f64(&-&disc).sqrt() / two_a;
        Ok((Complex::new(center, im), Complex::new(center, -im)))
    } else {
        let offset = rational_to_f64(&disc).sqrt() / two_a;
        Ok((
            Complex::new(center + offset, 0.0),
            Complex::new(center - offset, 0.0),
        ))
    }
}

/// `a (x - h)^2 - k`; note the minus sign in front of `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexForm {
    pub a: Rational,
    pub h: Rational,
    pub k: Rational,
}

impl VertexForm {
    /// Expands back to `(a, b, c)` of `a x^2 + b x + c`.
    pub fn expand(&self) -> (Rational, Rational, Rational) {
        let two = Rational::from_integer(2.into());
        let b = -(&two * &self.a * &self.h);
        let c = &self.a * &self.h * &self.h - &self.k;
        (self.a.clone(), b, c)
    }

    /// The parabola vertex `(h, -k)`.
    pub fn vertex(&self) -> (Rational, Rational) {
        (self.h.clone(), -self.k.clone())
    }
}

/// Completes the square: `h = -b/2a`, `k = b^2/4a - c`.
pub fn complete_square(a: &Rational, b: &Rational, c: &Rational) -> Result<VertexForm, PolyError> {
    if a.is_zero() {
        return Err(PolyError::NotQuadratic);
    }
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());
    let h = -(b / (&two * a));
    let k = b * b / (&four * a) - c;
    Ok(VertexForm {
        a: a.clone(),
        h,
        k,
    })
}

/// Lagrange interpolation through points with pairwise distinct abscissas;
/// the result has degree at most `n - 1` and passes through every point
/// exactly.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial, PolyError> {
    if points.is_empty() {
        return Err(PolyError::InvalidInput("no points to interpolate".into()));
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().skip(i + 1) {
            if xi == xj {
                return Err(PolyError::DuplicateAbscissa(format_rational(xi)));
            }
        }
    }
    let mut total = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        // Basis polynomial: 1 at x_i, 0 at the other abscissas.
        let mut numer = Polynomial::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            numer = numer.mul(&Polynomial::new(vec![-xj.clone(), Rational::one()]));
            denom *= xi - xj;
        }
        total = total.add(&numer.scale(&(yi / &denom)));
    }
    Ok(total)
}

/// Codeword of the interpolation code: `k` data values followed by `k`
/// redundant values, at implicit abscissas `x = 1..=2k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsCodeword {
    values: Vec<Rational>,
    k: usize,
}

impl RsCodeword {
    /// Wraps received values; the length must be even (`2k`).
    pub fn from_values(values: Vec<Rational>) -> Result<Self, PolyError> {
        if values.is_empty() || !values.len().is_multiple_of(2) {
            return Err(PolyError::LengthMismatch(format!(
                "codeword length must be even and positive, got {}",
                values.len()
            )));
        }
        let k = values.len() / 2;
        Ok(RsCodeword { values, k })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn data_len(&self) -> usize {
        self.k
    }

    /// The points `(i, value_i)` for `i = 1..=2k`.
    fn points(&self) -> Vec<(Rational, Rational)> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| (Rational::from_integer((i as i64 + 1).into()), v.clone()))
            .collect()
    }
}

/// Extends `k` data values with `k` redundant values: the redundancy is the
/// degree-`(k-1)` interpolant of the data evaluated at `x = k+1..=2k`.
pub fn rs_encode(data: &[Rational]) -> Result<RsCodeword, PolyError> {
    if data.is_empty() {
        return Err(PolyError::InvalidInput("empty data block".into()));
    }
    let k = data.len();
    let points: Vec<(Rational, Rational)> = data
        .iter()
        .enumerate()
        .map(|(i, v)| (Rational::from_integer((i as i64 + 1).into()), v.clone()))
        .collect();
    let interpolant = lagrange_interpolate(&points)?;
    let mut values = data.to_vec();
    for x in k + 1..=2 * k {
        values.push(interpolant.eval(&Rational::from_integer((x as i64).into())));
    }
    RsCodeword::from_values(values)
}

/// A codeword is clean iff the interpolant of all `2k` points has degree at
/// most `k - 1`; the degree test is exact in rationals.
pub fn rs_verify(cw: &RsCodeword) -> Result<bool, PolyError> {
    let interpolant = lagrange_interpolate(&cw.points())?;
    Ok(degree_at_most(&interpolant, cw.k - 1))
}

fn degree_at_most(p: &Polynomial, d: usize) -> bool {
    match p.degree() {
        None => true,
        Some(deg) => deg <= d,
    }
}

/// Outcome of a successful correction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsCorrection {
    /// Recovered data block (values of the clean interpolant at `1..=k`).
    pub data: Vec<Rational>,
    /// 1-based corrupted positions (empty when the codeword was clean).
    pub error_positions: Vec<usize>,
    /// Corrected value at each reported position.
    pub corrected_values: Vec<Rational>,
}

/// Omission search: drops position subsets in ascending size and
/// lexicographic order, recomputes the interpolant of the remaining points
/// and accepts the first one of degree at most `k - 1`. `None` when no
/// subset of size `<= max_errors` explains the corruption.
pub fn rs_correct(cw: &RsCodeword, max_errors: usize) -> Result<Option<RsCorrection>, PolyError> {
    let n = cw.values.len();
    let points = cw.points();
    for size in 0..=max_errors.min(n) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let kept: Vec<(Rational, Rational)> = points
                .iter()
                .enumerate()
                .filter(|(i, _)| !subset.contains(i))
                .map(|(_, p)| p.clone())
                .collect();
            if kept.len() > cw.k {
                let q = lagrange_interpolate(&kept)?;
                if degree_at_most(&q, cw.k - 1) {
                    let data = (1..=cw.k)
                        .map(|x| q.eval(&Rational::from_integer((x as i64).into())))
                        .collect();
                    let error_positions: Vec<usize> = subset.iter().map(|i| i + 1).collect();
                    let corrected_values = error_positions
                        .iter()
                        .map(|&pos| q.eval(&Rational::from_integer((pos as i64).into())))
                        .collect();
                    return Ok(Some(RsCorrection {
                        data,
                        error_positions,
                        corrected_values,
                    }));
                }
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `indices` to the next combination of `0..n` in lexicographic
/// order; `false` when exhausted.
fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] != i + n - k {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
