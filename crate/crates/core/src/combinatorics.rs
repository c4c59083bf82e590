//! Factorials, binomial coefficients, the four counting formulas, Pascal
//! rows and the Bernoulli/binomial probability mass function.

use crate::scalar::{rational_from_f64, rational_to_f64, Rational};
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CombError {
    #[error("InvalidSelection: cannot pick {k} from {n} without repetition")]
    InvalidSelection { n: u64, k: u64 },
    #[error("InvalidProbability: p must lie in [0,1], got {0}")]
    InvalidProbability(f64),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

/// `n!` with `0! = 1`.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `p` choose `q`; zero when `q > p`.
pub fn binomial(p: u64, q: u64) -> BigInt {
    if q > p {
        return BigInt::from(0);
    }
    let q = q.min(p - q);
    let mut result = BigInt::one();
    for i in 0..q {
        result = result * (p - i) / (i + 1);
    }
    result
}

/// Permutations without repetition: `n! / (n-k)!`.
pub fn perm(n: u64, k: u64) -> Result<BigInt, CombError> {
    if k > n {
        return Err(CombError::InvalidSelection { n, k });
    }
    Ok((n - k + 1..=n).fold(BigInt::one(), |acc, i| acc * i))
}

/// Permutations with repetition: `n^k`.
pub fn perm_rep(n: u64, k: u64) -> BigInt {
    num_traits::Pow::pow(BigInt::from(n), k)
}

/// Combinations with repetition: `C(n+k-1, k)`.
pub fn comb_rep(n: u64, k: u64) -> BigInt {
    binomial(n + k - 1, k)
}

/// Row `n` of Pascal's triangle (`n+1` entries).
pub fn pascal_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut entry = BigInt::one();
    row.push(entry.clone());
    for k in 0..n {
        entry = entry * (n - k) / (k + 1);
        row.push(entry.clone());
    }
    row
}

/// Bernoulli process: `n` trials, success probability `p`, `x` successes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BernoulliSpec {
    pub n: u64,
    pub p: f64,
    pub x: u64,
}

impl BernoulliSpec {
    pub fn new(n: u64, p: f64, x: u64) -> Result<Self, CombError> {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return Err(CombError::InvalidProbability(p));
        }
        if x > n {
            return Err(CombError::InvalidInput(format!(
                "successes x={} exceed trials n={}",
                x, n
            )));
        }
        Ok(BernoulliSpec { n, p, x })
    }
}

/// `P(X = x) = C(n,x) p^x q^(n-x)`, evaluated exactly in rationals before the
/// final conversion so large `n` does not lose mass to cancellation.
pub fn binomial_pmf(spec: &BernoulliSpec) -> Result<f64, CombError> {
    let p = rational_from_f64(spec.p).ok_or(CombError::InvalidProbability(spec.p))?;
    let q = Rational::one() - &p;
    let coeff = Rational::from_integer(binomial(spec.n, spec.x));
    let value = coeff * pow_rational(&p, spec.x) * pow_rational(&q, spec.n - spec.x);
    Ok(rational_to_f64(&value))
}

fn pow_rational(r: &Rational, e: u64) -> Rational {
    let mut acc = Rational::one();
    let mut base = r.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        let sq = &base * &base;
        base = sq;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factorial_worked_values() {
        assert_eq!(factorial(5), big(120));
        assert_eq!(factorial(10), big(3628800));
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(1), big(1));
    }

    #[test]
    fn binomial_worked_values() {
        assert_eq!(binomial(9, 4), big(126));
        assert_eq!(binomial(7, 3), big(35));
        assert_eq!(binomial(12, 0), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(49, 6), big(13_983_816));
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(perm(26, 3).unwrap(), big(15_600));
        assert!(perm(3, 4).is_err());
        assert_eq!(perm_rep(10, 3), big(1_000));
        assert_eq!(comb_rep(5, 3), big(35));
        assert_eq!(comb_rep(5, 4), big(70));
    }

    #[test]
    fn pascal_rows() {
        assert_eq!(pascal_row(0), vec![big(1)]);
        assert_eq!(pascal_row(4), vec![big(1), big(4), big(6), big(4), big(1)]);
        assert_eq!(
            pascal_row(7),
            vec![big(1), big(7), big(21), big(35), big(35), big(21), big(7), big(1)]
        );
    }

    #[test]
    fn pmf_worked_values() {
        let coin = BernoulliSpec::new(30, 0.5, 13).unwrap();
        assert!((binomial_pmf(&coin).unwrap() - 0.1115).abs() < 5e-4);

        let single = BernoulliSpec::new(1, 0.3, 1).unwrap();
        assert!((binomial_pmf(&single).unwrap() - 0.3).abs() < 1e-12);

        assert!(BernoulliSpec::new(4, 1.5, 2).is_err());
        assert!(BernoulliSpec::new(4, 0.5, 5).is_err());
    }

    #[test]
    fn two_dice_sum_five() {
        // Enumerate ordered dice pairs summing to 5 as the independent check.
        let favorable = (1..=6)
            .flat_map(|a| (1..=6).map(move |b| (a, b)))
            .filter(|(a, b)| a + b == 5)
            .count();
        assert_eq!(favorable, 4);
        assert!((favorable as f64 / 36.0 - 1.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn induction_formulas_hold() {
        for n in 1u64..=500 {
            let direct: u64 = (1..=n).sum();
            assert_eq!(direct, n * (n + 1) / 2);
            let odds: u64 = (1..=n).map(|k| 2 * k - 1).sum();
            assert_eq!(odds, n * n);
        }
    }

    #[test]
    fn comb_rep_matches_multiset_enumeration() {
        // Count multisets of size k over n symbols by recursive enumeration.
        fn multisets(n: u64, k: u64, min: u64) -> u64 {
            if k == 0 {
                return 1;
            }
            (min..n).map(|first| multisets(n, k - 1, first)).sum()
        }
        for n in 1..=6u64 {
            for k in 0..=6u64 {
                let expected = multisets(n, k, 0);
                assert_eq!(comb_rep(n, k), BigInt::from(expected), "n={} k={}", n, k);
            }
        }
    }

    proptest! {
        #[test]
        fn pascal_rule(p in 1u64..80, q in 1u64..80) {
            prop_assert_eq!(binomial(p, q - 1) + binomial(p, q), binomial(p + 1, q));
        }

        #[test]
        fn binomial_symmetry_and_row_sum(n in 0u64..60) {
            let row = pascal_row(n);
            for k in 0..=n {
                prop_assert_eq!(&row[k as usize], &binomial(n, n - k));
            }
            let sum: BigInt = row.iter().sum();
            prop_assert_eq!(sum, BigInt::from(2u8).pow(n as u32));
        }

        #[test]
        fn pmf_sums_to_one(n in 0u64..40, p in 0.0f64..=1.0) {
            let total: f64 = (0..=n)
                .map(|x| binomial_pmf(&BernoulliSpec::new(n, p, x).unwrap()).unwrap())
                .sum();
            prop_assert!((total - 1.0).abs() < 1e-12);
        }
    }
}
