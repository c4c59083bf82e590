//! Dense matrices with two scalar backends: exact rationals for solving,
//! inversion, determinants and modular work, plain doubles for least-squares
//! fitting. Includes matrix powers for graph path counting.
//!
//! Elimination code indexes rows and columns directly; the index form is
//! the domain language here.
#![allow(clippy::needless_range_loop)]

use crate::numtheory;
use crate::scalar::{format_rational, parse_rational, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LinAlgError {
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("NonSquare: operation needs a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("InvalidModulus: modulus must be greater than 1, got {0}")]
    InvalidModulus(BigInt),
    #[error("IndexOutOfRange: node {index} outside 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("InsufficientPoints: need at least {needed} distinct abscissas, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("SingularNormalEquations: design matrix is rank deficient")]
    SingularNormalEquations,
    #[error("NonPositive: expected a positive value, got {0}")]
    NonPositive(f64),
    #[error("ParseError: {0}")]
    ParseError(String),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

/// Dense row-major matrix over any scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, LinAlgError> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinAlgError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(LinAlgError::DimensionMismatch("empty matrix".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::DimensionMismatch(
                "ragged rows in matrix literal".into(),
            ));
        }
        let r = rows.len();
        let data = rows.into_iter().flatten().collect();
        Matrix::new(r, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
{
    /// Row-by-column product; inner dimensions must agree.
    pub fn matmul(&self, other: &Matrix<T>) -> Result<Matrix<T>, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a.clone() * other.at(k, j).clone();
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = cur + term;
                }
            }
        }
        Ok(out)
    }

    /// `A^p` for `p >= 1`.
    pub fn pow(&self, p: u32) -> Result<Matrix<T>, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if p == 0 {
            return Err(LinAlgError::InvalidInput(
                "matrix power needs exponent >= 1".into(),
            ));
        }
        let mut result = self.clone();
        for _ in 1..p {
            result = result.matmul(self)?;
        }
        Ok(result)
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Matrix<T> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

impl<T> Matrix<T>
where
    T: Clone + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
{
    pub fn add(&self, other: &Matrix<T>) -> Result<Matrix<T>, LinAlgError> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, other: &Matrix<T>) -> Result<Matrix<T>, LinAlgError> {
        self.zip_with(other, |a, b| a.clone() * b.clone())
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|x| c.clone() * x.clone())
    }

    fn zip_with(
        &self,
        other: &Matrix<T>,
        f: impl Fn(&T, &T) -> T,
    ) -> Result<Matrix<T>, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

impl<T> Matrix<T>
where
    T: Clone + std::ops::Sub<Output = T>,
{
    pub fn sub(&self, other: &Matrix<T>) -> Result<Matrix<T>, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }
}

/// Exact determinant by rational Gaussian elimination.
pub fn determinant(a: &Matrix<Rational>) -> Result<Rational, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    let mut m = a.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m.at(r, col).is_zero()) {
            Some(r) => r,
            None => return Ok(Rational::zero()),
        };
        if pivot_row != col {
            swap_rows(&mut m, col, pivot_row);
            det = -det;
        }
        let pivot = m.at(col, col).clone();
        det *= &pivot;
        for r in col + 1..n {
            let factor = m.at(r, col) / &pivot;
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let delta = &factor * m.at(col, c);
                let cur = m.at(r, c).clone();
                *m.at_mut(r, c) = cur - delta;
            }
        }
    }
    Ok(det)
}

fn swap_rows<T>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for c in 0..m.cols {
        m.data.swap(a * m.cols + c, b * m.cols + c);
    }
}

/// Exact inverse via Gauss-Jordan; `None` for singular input.
pub fn invert(a: &Matrix<Rational>) -> Result<Option<Matrix<Rational>>, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    let mut m = a.clone();
    let mut inv = Matrix::<Rational>::identity(n);
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m.at(r, col).is_zero()) {
            Some(r) => r,
            None => return Ok(None),
        };
        swap_rows(&mut m, col, pivot_row);
        swap_rows(&mut inv, col, pivot_row);
        let pivot = m.at(col, col).clone();
        for c in 0..n {
            let v = m.at(col, c) / &pivot;
            *m.at_mut(col, c) = v;
            let w = inv.at(col, c) / &pivot;
            *inv.at_mut(col, c) = w;
        }
        for r in 0..n {
            if r == col || m.at(r, col).is_zero() {
                continue;
            }
            let factor = m.at(r, col).clone();
            for c in 0..n {
                let dm = &factor * m.at(col, c);
                let cur = m.at(r, c).clone();
                *m.at_mut(r, c) = cur - dm;
                let di = &factor * inv.at(col, c);
                let cur = inv.at(r, c).clone();
                *inv.at_mut(r, c) = cur - di;
            }
        }
    }
    Ok(Some(inv))
}

/// Result of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Gaussian elimination with partial pivoting (largest pivot in absolute
/// value) and back substitution, all in exact rationals.
pub fn gauss_solve(a: &Matrix<Rational>, b: &[Rational]) -> Result<SolveOutcome, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    if b.len() != a.rows {
        return Err(LinAlgError::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has {} entries",
            a.rows,
            b.len()
        )));
    }
    let n = a.rows;
    let mut m = Matrix::<Rational>::zero(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            *m.at_mut(i, j) = a.at(i, j).clone();
        }
        *m.at_mut(i, n) = b[i].clone();
    }

    let mut rank = 0usize;
    for col in 0..n {
        // The row with the largest coefficient in absolute value pivots.
        let pivot_row = (rank..n)
            .filter(|&r| !m.at(r, col).is_zero())
            .max_by(|&x, &y| m.at(x, col).abs().cmp(&m.at(y, col).abs()));
        let pivot_row = match pivot_row {
            Some(r) => r,
            None => continue,
        };
        swap_rows(&mut m, rank, pivot_row);
        let pivot = m.at(rank, col).clone();
        for r in rank + 1..n {
            let factor = m.at(r, col) / &pivot;
            if factor.is_zero() {
                continue;
            }
            for c in col..=n {
                let delta = &factor * m.at(rank, c);
                let cur = m.at(r, c).clone();
                *m.at_mut(r, c) = cur - delta;
            }
        }
        rank += 1;
    }

    for r in rank..n {
        if !m.at(r, n).is_zero() {
            return Ok(SolveOutcome::Inconsistent);
        }
    }
    if rank < n {
        return Ok(SolveOutcome::Underdetermined);
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m.at(i, n).clone();
        for j in i + 1..n {
            acc -= m.at(i, j) * &x[j];
        }
        x[i] = acc / m.at(i, i);
    }
    Ok(SolveOutcome::Unique(x))
}

/// Entrywise reduction mod `m` into `[0, m)`.
pub fn mat_mod(a: &Matrix<BigInt>, m: &BigInt) -> Result<Matrix<BigInt>, LinAlgError> {
    if m <= &BigInt::one() {
        return Err(LinAlgError::InvalidModulus(m.clone()));
    }
    Ok(a.map(|x| x.mod_floor(m)))
}

/// Modular matrix inverse via the adjugate: `A^-1 = inv_mod(det) * adj(A)`,
/// valid for any size. `None` when `gcd(det A, m) != 1`.
pub fn mat_inv_mod(a: &Matrix<BigInt>, m: &BigInt) -> Result<Option<Matrix<BigInt>>, LinAlgError> {
    if m <= &BigInt::one() {
        return Err(LinAlgError::InvalidModulus(m.clone()));
    }
    if !a.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let rational = a.map(|x| Rational::from_integer(x.clone()));
    let det = determinant(&rational)?;
    let det_int = det.to_integer();
    let det_inv =
        match numtheory::inv_mod(&det_int, m).map_err(|_| LinAlgError::InvalidModulus(m.clone()))? {
            Some(v) => v,
            None => return Ok(None),
        };
    // adj(A) = det(A) * A^-1 has integer entries.
    let inverse = invert(&rational)?.expect("determinant is a unit, so A is invertible");
    let adjugate = inverse.map(|x| (x * Rational::from_integer(det_int.clone())).to_integer());
    let out = adjugate.map(|x| (x * &det_inv).mod_floor(m));
    Ok(Some(out))
}

/// Number of length-`p` walks between 1-based nodes `i` and `j` in the graph
/// with incidence matrix `lambda`.
pub fn path_count(
    lambda: &Matrix<BigInt>,
    i: usize,
    j: usize,
    p: u32,
) -> Result<BigInt, LinAlgError> {
    let n = lambda.rows;
    for &idx in &[i, j] {
        if idx == 0 || idx > n {
            return Err(LinAlgError::IndexOutOfRange { index: idx, size: n });
        }
    }
    let powered = lambda.pow(p)?;
    Ok(powered.at(i - 1, j - 1).clone())
}

/// Least-squares polynomial fit.
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    /// Coefficients in ascending power, constant term first.
    pub coefficients: Vec<f64>,
    /// Sum of squared residuals.
    pub sse: f64,
}

impl FitResult {
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c)
    }
}

/// Normal-equations fit of a degree-`degree` polynomial; `through_origin`
/// drops the constant column (its coefficient is reported as 0).
pub fn fit_poly(
    points: &[(f64, f64)],
    degree: usize,
    through_origin: bool,
) -> Result<FitResult, LinAlgError> {
    let mut xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();
    if xs.len() < degree + 1 {
        return Err(LinAlgError::InsufficientPoints {
            needed: degree + 1,
            got: xs.len(),
        });
    }

    let powers: Vec<usize> = if through_origin {
        (1..=degree).collect()
    } else {
        (0..=degree).collect()
    };
    let k = powers.len();
    // Normal equations G c = r with G = X^T X, r = X^T y.
    let mut g = vec![vec![0.0f64; k]; k];
    let mut r = vec![0.0f64; k];
    for &(x, y) in points {
        let basis: Vec<f64> = powers.iter().map(|&p| x.powi(p as i32)).collect();
        for a in 0..k {
            r[a] += basis[a] * y;
            for b in 0..k {
                g[a][b] += basis[a] * basis[b];
            }
        }
    }
    let coeffs = solve_f64(&mut g, &mut r)?;

    let mut coefficients = vec![0.0; degree + 1];
    for (idx, &p) in powers.iter().enumerate() {
        coefficients[p] = coeffs[idx];
    }
    let fit = FitResult {
        coefficients,
        sse: 0.0,
    };
    let sse = points
        .iter()
        .map(|&(x, y)| {
            let e = y - fit.eval(x);
            e * e
        })
        .sum();
    Ok(FitResult { sse, ..fit })
}

/// In-place f64 Gaussian elimination with partial pivoting.
fn solve_f64(g: &mut [Vec<f64>], r: &mut [f64]) -> Result<Vec<f64>, LinAlgError> {
    let n = r.len();
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| g[a][col].abs().partial_cmp(&g[b][col].abs()).unwrap())
            .unwrap();
        if g[pivot_row][col].abs() < 1e-12 {
            return Err(LinAlgError::SingularNormalEquations);
        }
        g.swap(col, pivot_row);
        r.swap(col, pivot_row);
        for row in col + 1..n {
            let factor = g[row][col] / g[col][col];
            for c in col..n {
                g[row][c] -= factor * g[col][c];
            }
            r[row] -= factor * r[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = r[i];
        for j in i + 1..n {
            acc -= g[i][j] * x[j];
        }
        x[i] = acc / g[i][i];
    }
    Ok(x)
}

/// Friction coefficient from the quadratic braking coefficient:
/// `mu = 1 / (2 a g)` with `g = 9.81`.
pub fn friction_coefficient(a: f64) -> Result<f64, LinAlgError> {
    if !a.is_finite() || a <= 0.0 {
        return Err(LinAlgError::NonPositive(a));
    }
    Ok(1.0 / (2.0 * a * 9.81))
}

/// Parses the matrix text format: one row per line (or `;`-separated),
/// whitespace-separated entries, rationals as `p/q` or exact decimals.
pub fn parse_matrix(text: &str) -> Result<Matrix<Rational>, LinAlgError> {
    let rows: Vec<Vec<Rational>> = text
        .split(['\n', ';'])
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| {
            line.split_whitespace()
                .map(|tok| parse_rational(tok).map_err(|e| LinAlgError::ParseError(e.to_string())))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    Matrix::from_rows(rows)
}

/// Renders a rational matrix in the text format.
pub fn format_matrix(m: &Matrix<Rational>) -> String {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn rational_matrix(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
        .unwrap()
    }

    fn int_matrix(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn falk_product() {
        let a = rational_matrix(vec![vec![2, 1], vec![-1, 0], vec![4, 3]]);
        let b = Matrix::from_rows(vec![
            vec![rat(-1), rat(1), ratio(-3, 2)],
            vec![rat(0), ratio(1, 2), rat(1)],
        ])
        .unwrap();
        let c = a.matmul(&b).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![rat(-2), ratio(5, 2), rat(-2)],
            vec![rat(1), rat(-1), ratio(3, 2)],
            vec![rat(-4), ratio(11, 2), rat(-3)],
        ])
        .unwrap();
        assert_eq!(c, expected);

        let i3 = Matrix::<Rational>::identity(3);
        assert_eq!(c.matmul(&i3).unwrap(), c);
    }

    #[test]
    fn product_dimension_mismatch() {
        let a = rational_matrix(vec![vec![1, 2]]);
        assert!(a.matmul(&a).is_err());
    }

    #[test]
    fn determinant_worked_values() {
        let k = rational_matrix(vec![vec![3, 2], vec![5, 3]]);
        assert_eq!(determinant(&k).unwrap(), rat(-1));
        assert_eq!(
            determinant(&Matrix::<Rational>::identity(4)).unwrap(),
            rat(1)
        );
        let nonsquare = rational_matrix(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert!(determinant(&nonsquare).is_err());
    }

    #[test]
    fn det_multiplicative_on_small_matrices() {
        let a = rational_matrix(vec![vec![3, -1], vec![-2, 4]]);
        let b = rational_matrix(vec![vec![4, 3], vec![3, 2]]);
        let ab = a.matmul(&b).unwrap();
        assert_eq!(
            determinant(&ab).unwrap(),
            determinant(&a).unwrap() * determinant(&b).unwrap()
        );
        // The same pair witnesses non-commutativity.
        assert_ne!(ab, b.matmul(&a).unwrap());
    }

    #[test]
    fn inverse_worked_value() {
        let a = rational_matrix(vec![vec![2, -1], vec![0, 3]]);
        let inv = invert(&a).unwrap().unwrap();
        let expected = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 6)],
            vec![rat(0), ratio(1, 3)],
        ])
        .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(a.matmul(&inv).unwrap(), Matrix::<Rational>::identity(2));

        let singular = rational_matrix(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(invert(&singular).unwrap(), None);
    }

    #[test]
    fn symbolic_two_by_two_inverse_matches_adjugate() {
        // inverse of [[a,b],[c,d]] = [[d,-b],[-c,a]] / (ad - bc)
        let cases = [(3i64, 7i64, 2i64, 5i64), (1, 2, 3, 4), (-2, 5, 1, -3)];
        for (a, b, c, d) in cases {
            let m = rational_matrix(vec![vec![a, b], vec![c, d]]);
            let det = rat(a * d - b * c);
            let adj = Matrix::from_rows(vec![vec![rat(d), rat(-b)], vec![rat(-c), rat(a)]]).unwrap();
            let expected = adj.map(|x| x / &det);
            assert_eq!(invert(&m).unwrap().unwrap(), expected);
        }
    }

    #[test]
    fn gauss_solves_worked_system() {
        let a = rational_matrix(vec![vec![0, -1, 3], vec![1, 2, -1], vec![-2, 3, 1]]);
        let b = vec![rat(2), rat(-2), rat(0)];
        match gauss_solve(&a, &b).unwrap() {
            SolveOutcome::Unique(x) => {
                assert_eq!(x, vec![ratio(-1, 2), ratio(-1, 2), ratio(1, 2)]);
            }
            other => panic!("expected unique solution, got {:?}", other),
        }
    }

    #[test]
    fn gauss_solves_diet_system_with_zero_residual() {
        let a = rational_matrix(vec![
            vec![0, 0, 2, 4, 1],
            vec![2, 2, 0, 0, 1],
            vec![0, 1, 2, 0, 2],
            vec![0, 1, 1, 3, 2],
            vec![1, 0, 0, 1, 1],
        ]);
        let b = vec![rat(4), rat(6), rat(3), rat(2), rat(4)];
        match gauss_solve(&a, &b).unwrap() {
            SolveOutcome::Unique(x) => {
                for i in 0..5 {
                    let lhs: Rational = (0..5).map(|j| a.at(i, j) * &x[j]).sum();
                    assert_eq!(lhs, b[i], "row {}", i);
                }
            }
            other => panic!("expected unique solution, got {:?}", other),
        }
    }

    #[test]
    fn gauss_identity_and_degenerate_cases() {
        let i3 = Matrix::<Rational>::identity(3);
        let b = vec![rat(5), rat(-7), rat(2)];
        assert_eq!(gauss_solve(&i3, &b).unwrap(), SolveOutcome::Unique(b.clone()));

        let inconsistent = rational_matrix(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(
            gauss_solve(&inconsistent, &[rat(1), rat(2)]).unwrap(),
            SolveOutcome::Inconsistent
        );
        assert_eq!(
            gauss_solve(&inconsistent, &[rat(1), rat(1)]).unwrap(),
            SolveOutcome::Underdetermined
        );
    }

    #[test]
    fn modular_inverse_of_hill_key() {
        let k = int_matrix(vec![vec![3, 2], vec![5, 3]]);
        let m = BigInt::from(26);
        let inv = mat_inv_mod(&k, &m).unwrap().unwrap();
        let expected = int_matrix(vec![vec![23, 2], vec![5, 23]]);
        assert_eq!(inv, expected);
        let product = mat_mod(&k.matmul(&inv).unwrap(), &m).unwrap();
        assert_eq!(product, int_matrix(vec![vec![1, 0], vec![0, 1]]));

        let identity = int_matrix(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(mat_inv_mod(&identity, &m).unwrap().unwrap(), identity);

        // det 4 shares a factor with 26.
        let bad = int_matrix(vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(mat_inv_mod(&bad, &m).unwrap(), None);
    }

    fn flight_graph() -> Matrix<BigInt> {
        int_matrix(vec![
            vec![0, 2, 0, 1, 3],
            vec![2, 0, 1, 0, 1],
            vec![0, 1, 0, 1, 0],
            vec![1, 0, 1, 0, 2],
            vec![3, 1, 0, 2, 0],
        ])
    }

    #[test]
    fn incidence_square_counts_one_stop_routes() {
        let lambda = flight_graph();
        let squared = lambda.pow(2).unwrap();
        let expected = int_matrix(vec![
            vec![14, 3, 3, 6, 4],
            vec![3, 6, 0, 5, 6],
            vec![3, 0, 2, 0, 3],
            vec![6, 5, 0, 6, 3],
            vec![4, 6, 3, 3, 14],
        ]);
        assert_eq!(squared, expected);
        assert_eq!(path_count(&lambda, 5, 3, 2).unwrap(), BigInt::from(3));
        assert!(path_count(&lambda, 0, 3, 2).is_err());
        assert!(path_count(&lambda, 1, 6, 2).is_err());
    }

    #[test]
    fn hadamard_squares_entries() {
        let lambda = flight_graph();
        let h = lambda.hadamard(&lambda).unwrap();
        let first: Vec<BigInt> = h.row(0).to_vec();
        assert_eq!(
            first,
            vec![0, 4, 0, 1, 9]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        // hadamard with all-ones leaves the matrix unchanged.
        let ones = Matrix::new(5, 5, vec![BigInt::from(1); 25]).unwrap();
        assert_eq!(lambda.hadamard(&ones).unwrap(), lambda);
    }

    #[test]
    fn path_count_matches_walk_enumeration() {
        let lambda = flight_graph();
        let n = 5usize;
        // Exhaustive enumeration of length-3 walks with multiplicities.
        let count_walks = |from: usize, to: usize| -> u64 {
            let mut total = 0u64;
            for a in 0..n {
                for b in 0..n {
                    let w1 = lambda.at(from, a).to_u64().unwrap();
                    let w2 = lambda.at(a, b).to_u64().unwrap();
                    let w3 = lambda.at(b, to).to_u64().unwrap();
                    total += w1 * w2 * w3;
                }
            }
            total
        };
        for i in 1..=n {
            for j in 1..=n {
                let expected = count_walks(i - 1, j - 1);
                assert_eq!(path_count(&lambda, i, j, 3).unwrap(), BigInt::from(expected));
            }
        }
    }

    fn braking_points() -> Vec<(f64, f64)> {
        let speeds_kmh = [50.0, 55.0, 60.0, 65.0, 70.0, 75.0, 80.0];
        let distances = [35.0, 40.0, 45.0, 50.0, 55.0, 65.0, 70.0];
        speeds_kmh
            .iter()
            .zip(&distances)
            .map(|(&v, &d)| (v / 3.6, d))
            .collect()
    }

    #[test]
    fn braking_through_origin_slope() {
        let fit = fit_poly(&braking_points(), 1, true).unwrap();
        assert_eq!(fit.coefficients.len(), 2);
        assert!((fit.coefficients[0]).abs() < 1e-12);
        assert!((fit.coefficients[1] - 2.881).abs() < 0.005);
    }

    #[test]
    fn braking_ratio_model() {
        let points: Vec<(f64, f64)> = braking_points()
            .into_iter()
            .map(|(v, d)| (v, d / v))
            .collect();
        let fit = fit_poly(&points, 1, false).unwrap();
        let b = fit.coefficients[0];
        let a = fit.coefficients[1];
        assert!((a - 0.078).abs() < 0.001);
        assert!((b - 1.412).abs() < 0.01);
        let mu = friction_coefficient(a).unwrap();
        assert!((mu - 0.653).abs() < 0.005);
    }

    #[test]
    fn exact_fit_degenerates_to_interpolation() {
        let points = vec![(0.0, 1.0), (1.0, 3.0), (2.0, 11.0)];
        let fit = fit_poly(&points, 2, false).unwrap();
        assert!(fit.sse < 1e-18);
        for &(x, y) in &points {
            assert!((fit.eval(x) - y).abs() < 1e-9);
        }
    }

    #[test]
    fn fit_error_paths() {
        assert!(matches!(
            fit_poly(&[(1.0, 2.0)], 1, false),
            Err(LinAlgError::InsufficientPoints { .. })
        ));
        assert!(fit_poly(&[(1.0, 2.0), (1.0, 3.0)], 1, false).is_err());
        assert!(friction_coefficient(0.0).is_err());
        assert!((friction_coefficient(0.078).unwrap() - 0.653).abs() < 0.005);
        assert!((friction_coefficient(0.156).unwrap() - 0.3267).abs() < 5e-4);
        assert!((friction_coefficient(1.0 / (2.0 * 9.81)).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn matrix_text_roundtrip() {
        let m = parse_matrix("1/2 2 -3\n0 5/3 1.5").unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 3);
        assert_eq!(*m.at(0, 0), ratio(1, 2));
        assert_eq!(*m.at(1, 2), ratio(3, 2));
        let text = format_matrix(&m);
        assert_eq!(parse_matrix(&text).unwrap(), m);
        let semi = parse_matrix("3 2; 5 3").unwrap();
        assert_eq!(semi.rows(), 2);
        assert!(parse_matrix("1 2\n3").is_err());
        assert!(parse_matrix("").is_err());
    }

    #[test]
    fn transpose_involution_and_shapes() {
        let m = rational_matrix(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        let t = m.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(t.cols(), 2);
        assert_eq!(t.transpose(), m);
    }

    proptest! {
        #[test]
        fn inverse_roundtrip_random_3x3(entries in proptest::collection::vec(-20i64..20, 9)) {
            let m = Matrix::new(3, 3, entries.into_iter().map(rat).collect()).unwrap();
            match invert(&m).unwrap() {
                Some(inv) => {
                    prop_assert_eq!(m.matmul(&inv).unwrap(), Matrix::<Rational>::identity(3));
                    prop_assert_eq!(inv.matmul(&m).unwrap(), Matrix::<Rational>::identity(3));
                }
                None => prop_assert!(determinant(&m).unwrap().is_zero()),
            }
        }

        #[test]
        fn transpose_and_det_identities(
            a in proptest::collection::vec(-10i64..10, 9),
            b in proptest::collection::vec(-10i64..10, 9),
        ) {
            let a = Matrix::new(3, 3, a.into_iter().map(rat).collect()).unwrap();
            let b = Matrix::new(3, 3, b.into_iter().map(rat).collect()).unwrap();
            let ab = a.matmul(&b).unwrap();
            prop_assert_eq!(
                ab.transpose(),
                b.transpose().matmul(&a.transpose()).unwrap()
            );
            prop_assert_eq!(determinant(&a.transpose()).unwrap(), determinant(&a).unwrap());
            prop_assert_eq!(
                determinant(&ab).unwrap(),
                determinant(&a).unwrap() * determinant(&b).unwrap()
            );
        }

        #[test]
        fn gauss_unique_solution_has_zero_residual(
            entries in proptest::collection::vec(-10i64..10, 9),
            rhs in proptest::collection::vec(-10i64..10, 3),
        ) {
            let a = Matrix::new(3, 3, entries.into_iter().map(rat).collect()).unwrap();
            let b: Vec<Rational> = rhs.into_iter().map(rat).collect();
            if let SolveOutcome::Unique(x) = gauss_solve(&a, &b).unwrap() {
                for i in 0..3 {
                    let lhs: Rational = (0..3).map(|j| a.at(i, j) * &x[j]).sum();
                    prop_assert_eq!(&lhs, &b[i]);
                }
            }
        }

        #[test]
        fn mat_inv_mod_roundtrip(entries in proptest::collection::vec(0i64..26, 4)) {
            let a = Matrix::new(2, 2, entries.into_iter().map(BigInt::from).collect()).unwrap();
            let m = BigInt::from(26);
            let rational = a.map(|x| Rational::from_integer(x.clone()));
            let det_int = determinant(&rational).unwrap().to_integer();
            match mat_inv_mod(&a, &m).unwrap() {
                Some(inv) => {
                    let product = mat_mod(&a.matmul(&inv).unwrap(), &m).unwrap();
                    prop_assert_eq!(product, Matrix::<BigInt>::identity(2));
                }
                None => {
                    prop_assert!(det_int.gcd(&BigInt::from(26)) > BigInt::from(1));
                }
            }
        }

        #[test]
        fn fit_residual_orthogonal_to_design(
            raw in proptest::collection::vec((-50.0f64..50.0, -50.0f64..50.0), 4..20),
        ) {
            // Deduplicate abscissas to keep the fit well posed.
            let mut points: Vec<(f64, f64)> = Vec::new();
            for (x, y) in raw {
                if points.iter().all(|&(px, _)| (px - x).abs() > 1e-6) {
                    points.push((x, y));
                }
            }
            if points.len() >= 3 {
                if let Ok(fit) = fit_poly(&points, 2, false) {
                    let scale: f64 = points.iter().map(|&(_, y)| y * y).sum::<f64>().sqrt().max(1.0);
                    for p in 0..=2usize {
                        let dot: f64 = points
                            .iter()
                            .map(|&(x, y)| (y - fit.eval(x)) * x.powi(p as i32))
                            .sum();
                        let column_norm: f64 = points
                            .iter()
                            .map(|&(x, _)| x.powi(p as i32).powi(2))
                            .sum::<f64>()
                            .sqrt();
                        prop_assert!(dot.abs() <= 1e-6 * scale * column_norm.max(1.0) + 1e-6);
                    }
                }
            }
        }
    }
}
