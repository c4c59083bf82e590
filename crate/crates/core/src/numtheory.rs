//! Integer arithmetic core: congruences, modular inverses and powers,
//! digit-based divisibility criteria, primes, gcd/lcm, a generalized Chinese
//! remainder solver, composition tables over Z_m and ISBN-10 check digits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::ops::Neg;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NtError {
    #[error("InvalidModulus: modulus must be {expected}, got {got}")]
    InvalidModulus { expected: &'static str, got: BigInt },
    #[error("InvalidExponent: exponent must be non-negative")]
    InvalidExponent,
    #[error("EmptyRange: sieve limit must be at least 2, got {0}")]
    EmptyRange(u64),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
    #[error("UnsupportedCriterion: no digit rule for divisor {0}")]
    UnsupportedCriterion(u32),
    #[error("ParseError: {0}")]
    ParseError(String),
}

/// Mathematical residue of `n` modulo `m`: always in `[0, m)`, also for
/// negative `n`.
pub fn mod_reduce(n: &BigInt, m: &BigInt) -> Result<BigInt, NtError> {
    if !m.is_positive() {
        return Err(NtError::InvalidModulus {
            expected: "positive",
            got: m.clone(),
        });
    }
    Ok(n.mod_floor(m))
}

/// `base^exp mod m` by binary exponentiation.
pub fn mod_pow(base: &BigInt, exp: &BigInt, m: &BigInt) -> Result<BigInt, NtError> {
    if m <= &BigInt::one() {
        return Err(NtError::InvalidModulus {
            expected: "greater than 1",
            got: m.clone(),
        });
    }
    if exp.is_negative() {
        return Err(NtError::InvalidExponent);
    }
    Ok(base.modpow(exp, m))
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (r0.neg(), s0.neg(), t0.neg())
    } else {
        (r0, s0, t0)
    }
}

/// Modular inverse of `a` mod `m`, or `None` when `gcd(a, m) != 1`.
pub fn inv_mod(a: &BigInt, m: &BigInt) -> Result<Option<BigInt>, NtError> {
    if m <= &BigInt::one() {
        return Err(NtError::InvalidModulus {
            expected: "greater than 1",
            got: m.clone(),
        });
    }
    let (g, x, _) = extended_gcd(a, m);
    if g.is_one() {
        Ok(Some(x.mod_floor(m)))
    } else {
        Ok(None)
    }
}

/// Euclid's gcd; `gcd(a, 0) = |a|` and `gcd(0, 0) = 0`.
pub fn gcd_euclid(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// `lcm(a, b) = |a b| / gcd(a, b)`, with `lcm(a, 0) = 0`.
pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a * b).abs() / gcd_euclid(a, b)
}

/// All primes up to and including `limit`, ascending.
pub fn sieve_eratosthenes(limit: u64) -> Result<Vec<u64>, NtError> {
    if limit < 2 {
        return Err(NtError::EmptyRange(limit));
    }
    let n = limit as usize;
    let mut is_composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !is_composite[p] {
            primes.push(p as u64);
            let mut multiple = p * p;
            while multiple <= n {
                is_composite[multiple] = true;
                multiple += p;
            }
        }
    }
    Ok(primes)
}

/// Prime factorization as strictly increasing `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    /// Product of `p^e` over all factors.
    pub fn value(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (p, e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", p)?;
            } else {
                write!(f, "{}^{}", p, e)?;
            }
        }
        Ok(())
    }
}

/// Trial division up to the square root, stopping early when the remaining
/// cofactor is itself prime.
pub fn factorize(n: &BigInt) -> Result<Factorization, NtError> {
    if n < &BigInt::from(2) {
        return Err(NtError::InvalidInput(format!(
            "factorize needs n >= 2, got {}",
            n
        )));
    }
    fn divide_out(remaining: &mut BigInt, p: &BigInt, factors: &mut Vec<(BigInt, u32)>) {
        let mut e = 0u32;
        while (&*remaining % p).is_zero() {
            *remaining /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
    }

    let mut remaining = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    divide_out(&mut remaining, &BigInt::from(2), &mut factors);
    divide_out(&mut remaining, &BigInt::from(3), &mut factors);
    let mut candidate = BigInt::from(5);
    let mut step = BigInt::from(2); // 6k±1 wheel: 5, 7, 11, 13, ...
    while remaining > BigInt::one() {
        if is_prime(&remaining) {
            factors.push((remaining, 1));
            break;
        }
        // Composite with no factor below `candidate`, so its least prime
        // factor lies in [candidate, sqrt(remaining)] on the wheel.
        while !(&remaining % &candidate).is_zero() {
            candidate += &step;
            step = BigInt::from(6) - step;
        }
        divide_out(&mut remaining, &candidate, &mut factors);
    }
    Ok(Factorization { factors })
}

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test.
///
/// Trial division for small inputs, the fixed Miller-Rabin witness set
/// (proven exact below 3.3e24) in the mid range, and Miller-Rabin plus a
/// strong Lucas test for anything larger.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in SMALL_PRIMES {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    if let Some(small) = n.to_u64() {
        if small < 41 * 41 {
            return true; // no prime factor <= 37 and below 37^2
        }
    }
    // 3,317,044,064,679,887,385,961,981: the proven bound for the witness
    // set {2..37}.
    let mr_bound: BigInt = "3317044064679887385961981".parse().unwrap();
    let witnesses_suffice = *n < mr_bound;
    for a in SMALL_PRIMES {
        if !miller_rabin_witness(n, &BigInt::from(a)) {
            return false;
        }
    }
    if witnesses_suffice {
        return true;
    }
    strong_lucas_probable_prime(n)
}

/// One Miller-Rabin round; `true` means "probably prime for this base".
fn miller_rabin_witness(n: &BigInt, a: &BigInt) -> bool {
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigInt::from(2), n);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas_probable_prime(n: &BigInt) -> bool {
    // Perfect squares have no D with Jacobi(D/n) = -1; they are composite
    // here anyway (n has no factor <= 37).
    let root = n.sqrt();
    if &(&root * &root) == n {
        return false;
    }
    // Find D in 5, -7, 9, -11, ... with Jacobi(D/n) = -1.
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            0 => return d.abs() == *n, // shares a factor with n
            -1 => break,
            _ => {}
        }
        d = if d.is_positive() {
            -(&d + BigInt::from(2))
        } else {
            -(&d - BigInt::from(2))
        };
    }
    let p = BigInt::one();
    let q = (BigInt::one() - &d) / BigInt::from(4);

    let n_plus_1 = n + BigInt::one();
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let t = &n_plus_1 >> s;

    // Lucas sequence U_t, V_t by binary expansion.
    let (mut u, mut v) = (BigInt::zero(), BigInt::from(2));
    let mut qk = BigInt::one();
    let bits = t.bits();
    for i in (0..bits).rev() {
        // double: (U, V, Q^k) -> (U V, V^2 - 2 Q^k, Q^2k)
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - BigInt::from(2) * &qk).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if t.bit(i) {
            // increment: U' = (P U + V)/2, V' = (D U + P V)/2
            let mut u2 = &p * &u + &v;
            if u2.is_odd() {
                u2 += n;
            }
            u2 = (u2 >> 1u32).mod_floor(n);
            let mut v2 = &d * &u + &p * &v;
            if v2.is_odd() {
                v2 += n;
            }
            v2 = (v2 >> 1u32).mod_floor(n);
            u = u2;
            v = v2;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - BigInt::from(2) * &qk).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if v.is_zero() {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % BigInt::from(8)).to_u8().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % BigInt::from(4)).to_u8() == Some(3) && (&n % BigInt::from(4)).to_u8() == Some(3) {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: &BigInt) -> BigInt {
    if n < &BigInt::from(2) {
        return BigInt::from(2);
    }
    let mut candidate: BigInt = n + 1u32;
    if candidate.is_even() {
        if candidate == BigInt::from(2) {
            return candidate;
        }
        candidate += 1u32;
    }
    while !is_prime(&candidate) {
        candidate += 2u32;
    }
    candidate
}

/// Digit-based divisibility rule for `d` in {2, 3, 4, 5, 8, 9, 10, 11},
/// applied literally on the decimal digits rather than through `mod`.
pub fn digit_divisibility(n: &BigInt, d: u32) -> Result<bool, NtError> {
    let digits: Vec<u32> = n
        .abs()
        .to_string()
        .bytes()
        .map(|b| (b - b'0') as u32)
        .collect();
    let last = *digits.last().unwrap();
    let tail_value = |k: usize| -> u64 {
        digits
            .iter()
            .skip(digits.len().saturating_sub(k))
            .fold(0u64, |acc, &d| acc * 10 + d as u64)
    };
    let digit_sum: u64 = digits.iter().map(|&d| d as u64).sum();
    Ok(match d {
        2 => last.is_multiple_of(2),
        5 => last.is_multiple_of(5),
        10 => last == 0,
        4 => tail_value(2) % 4 == 0,
        8 => tail_value(3) % 8 == 0,
        3 => digit_sum.is_multiple_of(3),
        9 => digit_sum.is_multiple_of(9),
        11 => {
            // Alternating sum of digits, sign-split by position parity.
            let alt: i64 = digits
                .iter()
                .enumerate()
                .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
                .sum();
            alt % 11 == 0
        }
        other => return Err(NtError::UnsupportedCriterion(other)),
    })
}

/// One congruence `x = residue (mod modulus)` with `0 <= residue < modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    residue: BigInt,
    modulus: BigInt,
}

impl Congruence {
    pub fn new(residue: BigInt, modulus: BigInt) -> Result<Self, NtError> {
        if modulus <= BigInt::one() {
            return Err(NtError::InvalidModulus {
                expected: "greater than 1",
                got: modulus,
            });
        }
        let residue = residue.mod_floor(&modulus);
        Ok(Congruence { residue, modulus })
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }
}

/// Generalized Chinese remainder solver: merges congruences pairwise with the
/// gcd compatibility condition, so non-coprime moduli are allowed. Returns
/// the unique class `(residue, lcm of moduli)` or `None` when the system is
/// inconsistent.
pub fn crt_solve(congruences: &[Congruence]) -> Result<Option<(BigInt, BigInt)>, NtError> {
    if congruences.is_empty() {
        return Err(NtError::InvalidInput(
            "crt_solve needs at least one congruence".into(),
        ));
    }
    let mut r = congruences[0].residue.clone();
    let mut m = congruences[0].modulus.clone();
    for c in &congruences[1..] {
        let (g, s, _) = extended_gcd(&m, &c.modulus);
        let diff = &c.residue - &r;
        let (q, rem) = diff.div_rem(&g);
        if !rem.is_zero() {
            return Ok(None);
        }
        let merged_mod = &m / &g * &c.modulus;
        // r + m * (s * q mod (c.modulus / g)) hits both classes.
        let step = (&s * &q).mod_floor(&(&c.modulus / &g));
        r = (&r + &m * step).mod_floor(&merged_mod);
        m = merged_mod;
    }
    Ok(Some((r, m)))
}

/// Composition operation for [`cayley_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOp {
    Add,
    Mul,
}

/// `m x m` composition table of Z_m; entry `(i, j)` is `(i op j) mod m` with
/// 0-based class labels.
pub fn cayley_table(m: u64, op: TableOp) -> Result<Vec<Vec<u64>>, NtError> {
    if m < 2 {
        return Err(NtError::InvalidInput(format!(
            "cayley_table needs m >= 2, got {}",
            m
        )));
    }
    let table = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| match op {
                    TableOp::Add => (i + j) % m,
                    TableOp::Mul => (i * j) % m,
                })
                .collect()
        })
        .collect();
    Ok(table)
}

/// Validated ISBN-10: nine digits plus a check symbol that may be `X` (= 10).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isbn10 {
    symbols: [u8; 10],
}

impl Isbn10 {
    /// Parses an ISBN-10, ignoring hyphens; `X` is only legal in position 10.
    pub fn parse(s: &str) -> Result<Self, NtError> {
        let cleaned: Vec<char> = s.chars().filter(|c| *c != '-' && *c != ' ').collect();
        if cleaned.len() != 10 {
            return Err(NtError::ParseError(format!(
                "ISBN-10 needs exactly 10 symbols, got {}",
                cleaned.len()
            )));
        }
        let mut symbols = [0u8; 10];
        for (i, c) in cleaned.iter().enumerate() {
            symbols[i] = match c {
                '0'..='9' => *c as u8 - b'0',
                'X' | 'x' if i == 9 => 10,
                _ => {
                    return Err(NtError::ParseError(format!(
                        "invalid ISBN symbol {:?} at position {}",
                        c,
                        i + 1
                    )))
                }
            };
        }
        Ok(Isbn10 { symbols })
    }

    pub fn symbols(&self) -> &[u8; 10] {
        &self.symbols
    }
}

impl std::fmt::Display for Isbn10 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.symbols {
            if *s == 10 {
                write!(f, "X")?;
            } else {
                write!(f, "{}", s)?;
            }
        }
        Ok(())
    }
}

/// Check digit completing nine digits so that `sum i*a_i = 0 (mod 11)`;
/// returns `'0'..'9'` or `'X'`.
pub fn isbn10_check_digit(first9: &str) -> Result<char, NtError> {
    let digits: Vec<u8> = first9
        .chars()
        .filter(|c| *c != '-' && *c != ' ')
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as u8)
                .ok_or_else(|| NtError::ParseError(format!("invalid digit {:?}", c)))
        })
        .collect::<Result<_, _>>()?;
    if digits.len() != 9 {
        return Err(NtError::ParseError(format!(
            "check digit needs exactly 9 digits, got {}",
            digits.len()
        )));
    }
    let weighted: u32 = digits
        .iter()
        .enumerate()
        .map(|(i, &d)| (i as u32 + 1) * d as u32)
        .sum();
    // Need 10*a10 = -weighted (mod 11); 10 = -1 mod 11, so a10 = weighted mod 11.
    let a10 = weighted % 11;
    Ok(match a10 {
        10 => 'X',
        d => char::from_digit(d, 10).unwrap(),
    })
}

/// True when the weighted digit sum of the full ISBN vanishes mod 11.
pub fn isbn10_validate(isbn: &Isbn10) -> bool {
    let weighted: u32 = isbn
        .symbols
        .iter()
        .enumerate()
        .map(|(i, &d)| (i as u32 + 1) * d as u32)
        .sum();
    weighted.is_multiple_of(11)
}
