//! `mathbook crypto ...`: the toy cipher suite.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::crypto as cr;
use num_bigint::BigInt;
use serde_json::json;

#[derive(Subcommand)]
pub enum CryptoCmd {
    /// Derive the private exponent from primes p, q and public exponent e
    RsaKeygen { p: String, q: String, e: String },
    /// Encrypt text per character: c = code^e mod n
    RsaEnc {
        #[arg(long)]
        n: String,
        #[arg(long)]
        e: String,
        /// Shift plaintext codes by -32 (printable range) before encrypting
        #[arg(long)]
        printable: bool,
        text: String,
    },
    /// Decrypt blocks back to text
    RsaDec {
        #[arg(long)]
        n: String,
        #[arg(long)]
        d: String,
        /// Undo the -32 printable shift after decrypting
        #[arg(long)]
        printable: bool,
        blocks: Vec<String>,
    },
    /// Affine encryption (a x + b) mod 26, lowercase in, uppercase out
    AffineEnc { a: i64, b: i64, text: String },
    /// Affine decryption, uppercase in, lowercase out
    AffineDec { a: i64, b: i64, text: String },
    /// Frequency analysis: candidate keys assuming top letters map to e, a
    AffineCrack {
        text: String,
        /// Assumed most frequent plaintext letter
        #[arg(long, default_value = "e")]
        first: char,
        /// Assumed second most frequent plaintext letter
        #[arg(long, default_value = "a")]
        second: char,
    },
    /// Letter histogram, descending
    Freq { text: String },
    /// Hill encryption with a k x k key matrix mod 26
    HillEnc {
        #[arg(long, allow_hyphen_values = true)]
        key: String,
        text: String,
    },
    /// Hill decryption with the modular key inverse
    HillDec {
        #[arg(long, allow_hyphen_values = true)]
        key: String,
        text: String,
    },
}

const PRINTABLE_SHIFT: u32 = 32;

fn shift_down(text: &str) -> Result<String, CliError> {
    text.chars()
        .map(|c| {
            let code = c as u32;
            if !(PRINTABLE_SHIFT..=126).contains(&code) {
                return Err(CliError::new(format!(
                    "CharOutOfRange: {:?} is not printable ASCII",
                    c
                )));
            }
            Ok(char::from_u32(code - PRINTABLE_SHIFT).unwrap())
        })
        .collect()
}

fn shift_up(text: &str) -> Result<String, CliError> {
    text.chars()
        .map(|c| {
            char::from_u32(c as u32 + PRINTABLE_SHIFT).ok_or_else(|| {
                CliError::new("CharOutOfRange: shifted code is not a character".to_string())
            })
        })
        .collect()
}

pub fn run(cmd: &CryptoCmd) -> CliResult {
    match cmd {
        CryptoCmd::RsaKeygen { p, q, e } => {
            let kp = cr::rsa_keypair(&parse_bigint(p)?, &parse_bigint(q)?, &parse_bigint(e)?)
                .map_err(domain)?;
            Ok(Outcome::new(
                format!("n: {}\ne: {}\nd: {}", kp.n, kp.e, kp.d),
                json!({
                    "n": big_json(&kp.n),
                    "e": big_json(&kp.e),
                    "d": big_json(&kp.d),
                }),
            ))
        }
        CryptoCmd::RsaEnc {
            n,
            e,
            printable,
            text,
        } => {
            let message = read_arg(text)?;
            let message = message.trim_end_matches('\n');
            let effective = if *printable {
                shift_down(message)?
            } else {
                message.to_string()
            };
            let blocks = cr::rsa_encrypt_text(&effective, &parse_bigint(n)?, &parse_bigint(e)?)
                .map_err(domain)?;
            let plain = blocks
                .iter()
                .map(BigInt::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Outcome::new(
                plain,
                serde_json::Value::Array(blocks.iter().map(big_json).collect()),
            ))
        }
        CryptoCmd::RsaDec {
            n,
            d,
            printable,
            blocks,
        } => {
            let values: Vec<BigInt> = blocks
                .iter()
                .flat_map(|b| b.split_whitespace().map(str::to_string))
                .map(|b| parse_bigint(&b))
                .collect::<Result<_, _>>()?;
            let text = cr::rsa_decrypt_text(&values, &parse_bigint(n)?, &parse_bigint(d)?)
                .map_err(domain)?;
            let text = if *printable { shift_up(&text)? } else { text };
            Ok(Outcome::new(text.clone(), json!(text)))
        }
        CryptoCmd::AffineEnc { a, b, text } => {
            let key = cr::AffineKey::new(*a, *b).map_err(domain)?;
            let cipher = cr::affine_encrypt(read_arg(text)?.trim_end_matches('\n'), &key)
                .map_err(domain)?;
            Ok(Outcome::new(cipher.clone(), json!(cipher)))
        }
        CryptoCmd::AffineDec { a, b, text } => {
            let key = cr::AffineKey::new(*a, *b).map_err(domain)?;
            let clear = cr::affine_decrypt(read_arg(text)?.trim_end_matches('\n'), &key)
                .map_err(domain)?;
            Ok(Outcome::new(clear.clone(), json!(clear)))
        }
        CryptoCmd::AffineCrack {
            text,
            first,
            second,
        } => {
            let keys = cr::affine_crack(read_arg(text)?.trim_end_matches('\n'), (*first, *second))
                .map_err(domain)?;
            let plain = keys
                .iter()
                .map(|k| format!("a: {} b: {}", k.a(), k.b()))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::new(
                if plain.is_empty() {
                    "no consistent keys".to_string()
                } else {
                    plain
                },
                serde_json::Value::Array(
                    keys.iter()
                        .map(|k| json!({ "a": k.a(), "b": k.b() }))
                        .collect(),
                ),
            ))
        }
        CryptoCmd::Freq { text } => {
            let table =
                cr::letter_frequencies(read_arg(text)?.trim_end_matches('\n')).map_err(domain)?;
            let plain = table
                .iter()
                .map(|(letter, count)| format!("{} {}", letter, count))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::new(
                plain,
                serde_json::Value::Array(
                    table
                        .iter()
                        .map(|(letter, count)| json!({ "letter": letter.to_string(), "count": count }))
                        .collect(),
                ),
            ))
        }
        CryptoCmd::HillEnc { key, text } => {
            let matrix = parse_int_matrix_arg(key)?;
            let cipher = cr::hill_encrypt(read_arg(text)?.trim_end_matches('\n'), &matrix)
                .map_err(domain)?;
            Ok(Outcome::new(cipher.clone(), json!(cipher)))
        }
        CryptoCmd::HillDec { key, text } => {
            let matrix = parse_int_matrix_arg(key)?;
            let clear = cr::hill_decrypt(read_arg(text)?.trim_end_matches('\n'), &matrix)
                .map_err(domain)?;
            Ok(Outcome::new(clear.clone(), json!(clear)))
        }
    }
}
