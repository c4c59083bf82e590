//! Didactic cipher suite: per-character RSA over ASCII codes, the affine
//! cipher with frequency-analysis cracking, and the Hill matrix cipher
//! modulo 26. Plaintext is lowercase a-z, ciphertext uppercase A-Z, with
//! the standard a=0..z=25 table.

use crate::linalg::{mat_inv_mod, mat_mod, Matrix};
use crate::numtheory::{extended_gcd, inv_mod, is_prime, mod_pow};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CryptoError {
    #[error("NotPrime: {0} is not prime")]
    NotPrime(BigInt),
    #[error("PrimesEqual: p and q must differ")]
    PrimesEqual,
    #[error("BadExponent: gcd(e, (p-1)(q-1)) != 1")]
    BadExponent,
    #[error("CharOutOfRange: {0}")]
    CharOutOfRange(String),
    #[error("NonAlphabetic: {0:?} is outside the cipher alphabet")]
    NonAlphabetic(char),
    #[error("NonInvertibleA: gcd(a, 26) != 1 for a = {0}")]
    NonInvertibleA(i64),
    #[error("NonInvertibleKey: key determinant shares a factor with 26")]
    NonInvertibleKey,
    #[error("Degenerate: {0}")]
    Degenerate(String),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

const ALPHABET: u8 = 26;

/// Keypair of the toy RSA scheme; the primes are retained for validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsaKeypair {
    pub n: BigInt,
    pub e: BigInt,
    pub d: BigInt,
    pub p: BigInt,
    pub q: BigInt,
}

/// Builds a keypair from two distinct primes and a public exponent coprime
/// with `(p-1)(q-1)`; `d` is the smallest positive inverse of `e`.
pub fn rsa_keypair(p: &BigInt, q: &BigInt, e: &BigInt) -> Result<RsaKeypair, CryptoError> {
    if !is_prime(p) {
        return Err(CryptoError::NotPrime(p.clone()));
    }
    if !is_prime(q) {
        return Err(CryptoError::NotPrime(q.clone()));
    }
    if p == q {
        return Err(CryptoError::PrimesEqual);
    }
    let phi = (p - BigInt::one()) * (q - BigInt::one());
    let d = inv_mod(e, &phi)
        .map_err(|_| CryptoError::BadExponent)?
        .ok_or(CryptoError::BadExponent)?;
    Ok(RsaKeypair {
        n: p * q,
        e: e.clone(),
        d,
        p: p.clone(),
        q: q.clone(),
    })
}

/// Encrypts text one character at a time: `c_i = code_i^e mod N`. Every
/// character code must be an 8-bit value below `N`.
pub fn rsa_encrypt_text(s: &str, n: &BigInt, e: &BigInt) -> Result<Vec<BigInt>, CryptoError> {
    s.chars()
        .map(|ch| {
            let code = ch as u32;
            if code > 255 {
                return Err(CryptoError::CharOutOfRange(format!(
                    "{:?} is not an 8-bit character",
                    ch
                )));
            }
            let m = BigInt::from(code);
            if &m >= n {
                return Err(CryptoError::CharOutOfRange(format!(
                    "code {} of {:?} reaches the modulus {}",
                    code, ch, n
                )));
            }
            mod_pow(&m, e, n).map_err(|err| CryptoError::InvalidInput(err.to_string()))
        })
        .collect()
}

/// Inverts [`rsa_encrypt_text`] with the private exponent.
pub fn rsa_decrypt_text(blocks: &[BigInt], n: &BigInt, d: &BigInt) -> Result<String, CryptoError> {
    blocks
        .iter()
        .map(|c| {
            let m = mod_pow(c, d, n).map_err(|err| CryptoError::InvalidInput(err.to_string()))?;
            let code = m.to_u32().filter(|&v| v <= 255).ok_or_else(|| {
                CryptoError::CharOutOfRange(format!("decrypted block {} is not an 8-bit code", m))
            })?;
            char::from_u32(code).ok_or_else(|| {
                CryptoError::CharOutOfRange(format!("code {} is not a character", code))
            })
        })
        .collect()
}

fn lower_code(ch: char) -> Result<u8, CryptoError> {
    if ch.is_ascii_lowercase() {
        Ok(ch as u8 - b'a')
    } else {
        Err(CryptoError::NonAlphabetic(ch))
    }
}

fn upper_code(ch: char) -> Result<u8, CryptoError> {
    if ch.is_ascii_uppercase() {
        Ok(ch as u8 - b'A')
    } else {
        Err(CryptoError::NonAlphabetic(ch))
    }
}

fn to_upper_letter(code: u8) -> char {
    (b'A' + code % ALPHABET) as char
}

fn to_lower_letter(code: u8) -> char {
    (b'a' + code % ALPHABET) as char
}

/// Affine key `x -> (a x + b) mod 26` with `gcd(a, 26) = 1`; `a = 1, b = 3`
/// is the classical shift cipher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineKey {
    a: u8,
    b: u8,
}

impl AffineKey {
    pub fn new(a: i64, b: i64) -> Result<Self, CryptoError> {
        let a_red = a.rem_euclid(26) as u8;
        let b_red = b.rem_euclid(26) as u8;
        let (g, _, _) = extended_gcd(&BigInt::from(a_red), &BigInt::from(26));
        if !g.is_one() {
            return Err(CryptoError::NonInvertibleA(a));
        }
        Ok(AffineKey { a: a_red, b: b_red })
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn b(&self) -> u8 {
        self.b
    }
}

/// Per-letter map `(a x + b) mod 26`, lowercase in, uppercase out.
pub fn affine_encrypt(s: &str, key: &AffineKey) -> Result<String, CryptoError> {
    s.chars()
        .map(|ch| {
            let x = lower_code(ch)? as u16;
            let y = (key.a as u16 * x + key.b as u16) % ALPHABET as u16;
            Ok(to_upper_letter(y as u8))
        })
        .collect()
}

/// Inverts the affine map with `a^-1 mod 26`, uppercase in, lowercase out.
pub fn affine_decrypt(c: &str, key: &AffineKey) -> Result<String, CryptoError> {
    let a_inv = inv_mod(&BigInt::from(key.a), &BigInt::from(26))
        .expect("modulus is fixed at 26")
        .expect("key invariant gcd(a, 26) = 1");
    let a_inv = a_inv.to_u16().unwrap();
    c.chars()
        .map(|ch| {
            let y = upper_code(ch)? as i32;
            let x = (a_inv as i32 * (y - key.b as i32)).rem_euclid(26);
            Ok(to_lower_letter(x as u8))
        })
        .collect()
}

/// Letter histogram in descending count order, ties alphabetical. Counting
/// is case-insensitive; letters are reported uppercase.
pub fn letter_frequencies(s: &str) -> Result<Vec<(char, usize)>, CryptoError> {
    let mut counts = [0usize; 26];
    for ch in s.chars() {
        if !ch.is_ascii_alphabetic() {
            return Err(CryptoError::NonAlphabetic(ch));
        }
        counts[(ch.to_ascii_uppercase() as u8 - b'A') as usize] += 1;
    }
    let mut table: Vec<(char, usize)> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| ((b'A' + i as u8) as char, c))
        .collect();
    table.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    Ok(table)
}

/// Frequency-analysis attack on the affine cipher: pairs the two most
/// frequent ciphertext letters with the assumed plaintext pair (default
/// `('e', 'a')` for Spanish-like text) and solves the 2x2 congruence system
/// mod 26 for `(a, b)`.
///
/// All keys consistent with the pairing are returned, best first; when the
/// top-2 counts tie, the swapped pairing is tried as well.
pub fn affine_crack(
    ciphertext: &str,
    assumed_plain: (char, char),
) -> Result<Vec<AffineKey>, CryptoError> {
    let table = letter_frequencies(ciphertext)?;
    if table.len() < 2 {
        return Err(CryptoError::Degenerate(format!(
            "need at least 2 distinct letters, got {}",
            table.len()
        )));
    }
    let x1 = lower_code(assumed_plain.0)? as i64;
    let x2 = lower_code(assumed_plain.1)? as i64;
    if x1 == x2 {
        return Err(CryptoError::Degenerate(
            "assumed plaintext letters must differ".into(),
        ));
    }
    let (top1, top2) = (table[0], table[1]);
    let mut pairings = vec![(top1.0, top2.0)];
    if top1.1 == top2.1 {
        pairings.push((top2.0, top1.0));
    }

    let mut keys = Vec::new();
    for (c1, c2) in pairings {
        let y1 = upper_code(c1)? as i64;
        let y2 = upper_code(c2)? as i64;
        // a (x1 - x2) = y1 - y2 (mod 26)
        for a in solve_linear_congruence(x1 - x2, y1 - y2, 26) {
            if AffineKey::new(a, 0).is_err() {
                continue;
            }
            let b = (y1 - a * x1).rem_euclid(26);
            let key = AffineKey::new(a, b).expect("a was checked invertible");
            if !keys.contains(&key) {
                keys.push(key);
            }
        }
    }
    Ok(keys)
}

/// All x in [0, m) with `c x = r (mod m)`.
fn solve_linear_congruence(c: i64, r: i64, m: i64) -> Vec<i64> {
    let c = c.rem_euclid(m);
    let r = r.rem_euclid(m);
    let (g, s, _) = extended_gcd(&BigInt::from(c), &BigInt::from(m));
    let g = g.to_i64().unwrap();
    if g == 0 {
        // c = 0: solutions exist only for r = 0, and then every x works.
        return if r == 0 { (0..m).collect() } else { Vec::new() };
    }
    if r % g != 0 {
        return Vec::new();
    }
    let s = s.to_i64().unwrap();
    let base = (s * (r / g)).rem_euclid(m);
    let step = m / g;
    (0..g).map(|k| (base + k * step).rem_euclid(m)).collect()
}

/// Hill block cipher: splits the message into length-`k` blocks (padding
/// with `x`) and multiplies each block vector by the key matrix mod 26.
/// Decryption does not strip the padding.
pub fn hill_encrypt(s: &str, key: &Matrix<BigInt>) -> Result<String, CryptoError> {
    let codes: Vec<u8> = s.chars().map(lower_code).collect::<Result<_, _>>()?;
    let transformed = hill_apply(&codes, key, b'x' - b'a')?;
    Ok(transformed.iter().map(|&c| to_upper_letter(c)).collect())
}

/// Inverts [`hill_encrypt`] with the key inverse mod 26.
pub fn hill_decrypt(c: &str, key: &Matrix<BigInt>) -> Result<String, CryptoError> {
    let inverse = mat_inv_mod(key, &BigInt::from(26))
        .map_err(|e| CryptoError::InvalidInput(e.to_string()))?
        .ok_or(CryptoError::NonInvertibleKey)?;
    let codes: Vec<u8> = c.chars().map(upper_code).collect::<Result<_, _>>()?;
    if !codes.len().is_multiple_of(inverse.rows()) {
        return Err(CryptoError::InvalidInput(format!(
            "ciphertext length {} is not a multiple of the block size {}",
            codes.len(),
            inverse.rows()
        )));
    }
    let transformed = hill_apply(&codes, &inverse, 0)?;
    Ok(transformed.iter().map(|&c| to_lower_letter(c)).collect())
}

fn hill_apply(codes: &[u8], key: &Matrix<BigInt>, pad: u8) -> Result<Vec<u8>, CryptoError> {
    if !key.is_square() {
        return Err(CryptoError::InvalidInput(
            "Hill key must be square".into(),
        ));
    }
    let det_unit = {
        let rational = key.map(|x| crate::scalar::Rational::from_integer(x.clone()));
        let det = crate::linalg::determinant(&rational)
            .map_err(|e| CryptoError::InvalidInput(e.to_string()))?
            .to_integer();
        det.gcd(&BigInt::from(26)).is_one()
    };
    if !det_unit {
        return Err(CryptoError::NonInvertibleKey);
    }
    let k = key.rows();
    let mut padded = codes.to_vec();
    while !padded.len().is_multiple_of(k) {
        padded.push(pad);
    }
    let mut out = Vec::with_capacity(padded.len());
    for block in padded.chunks(k) {
        let column = Matrix::new(k, 1, block.iter().map(|&c| BigInt::from(c)).collect())
            .map_err(|e| CryptoError::InvalidInput(e.to_string()))?;
        let product = key
            .matmul(&column)
            .map_err(|e| CryptoError::InvalidInput(e.to_string()))?;
        let reduced = mat_mod(&product, &BigInt::from(26))
            .map_err(|e| CryptoError::InvalidInput(e.to_string()))?;
        for i in 0..k {
            out.push(reduced.at(i, 0).to_u8().unwrap());
        }
    }
    Ok(out)
}
