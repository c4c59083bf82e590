//! `mathbook nt ...`: the integer arithmetic commands.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::numtheory as nt;
use serde_json::{json, Value};

#[derive(Subcommand)]
pub enum NtCmd {
    /// Mathematical residue of n modulo m (non-negative even for negative n)
    #[command(name = "mod")]
    Mod {
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Modular inverse of a modulo m, if it exists
    Invmod {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// base^exp mod m by binary exponentiation
    Powmod {
        #[arg(allow_hyphen_values = true)]
        base: String,
        #[arg(allow_hyphen_values = true)]
        exp: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// Greatest common divisor
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Least common multiple
    Lcm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Primes up to the limit
    Sieve { limit: u64 },
    /// Prime factorization by trial division
    Factor {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Deterministic primality test
    Isprime {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Smallest prime greater than n
    Nextprime {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Solve simultaneous congruences given as r:m pairs
    Crt {
        #[arg(allow_hyphen_values = true)]
        congruences: Vec<String>,
    },
    /// Composition table of Z_m under + or *
    Table {
        m: u64,
        #[arg(value_parser = ["add", "mul"])]
        op: String,
    },
    /// ISBN-10: 9 digits compute the check digit, 10 symbols validate
    Isbn { code: String },
}

pub fn run(cmd: &NtCmd) -> CliResult {
    match cmd {
        NtCmd::Mod { n, m } => {
            let r = nt::mod_reduce(&parse_bigint(n)?, &parse_bigint(m)?).map_err(domain)?;
            Ok(Outcome::new(r.to_string(), big_json(&r)))
        }
        NtCmd::Invmod { a, m } => {
            let inv = nt::inv_mod(&parse_bigint(a)?, &parse_bigint(m)?).map_err(domain)?;
            match inv {
                Some(x) => Ok(Outcome::new(x.to_string(), big_json(&x))),
                None => Err(CliError::new(format!(
                    "NotInvertible: {} has no inverse modulo {}",
                    a, m
                ))),
            }
        }
        NtCmd::Powmod { base, exp, m } => {
            let r = nt::mod_pow(&parse_bigint(base)?, &parse_bigint(exp)?, &parse_bigint(m)?)
                .map_err(domain)?;
            Ok(Outcome::new(r.to_string(), big_json(&r)))
        }
        NtCmd::Gcd { a, b } => {
            let g = nt::gcd_euclid(&parse_bigint(a)?, &parse_bigint(b)?);
            Ok(Outcome::new(g.to_string(), big_json(&g)))
        }
        NtCmd::Lcm { a, b } => {
            let l = nt::lcm(&parse_bigint(a)?, &parse_bigint(b)?);
            Ok(Outcome::new(l.to_string(), big_json(&l)))
        }
        NtCmd::Sieve { limit } => {
            let primes = nt::sieve_eratosthenes(*limit).map_err(domain)?;
            let plain = primes
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Outcome::new(plain, json!(primes)))
        }
        NtCmd::Factor { n } => {
            let f = nt::factorize(&parse_bigint(n)?).map_err(domain)?;
            let factors: Vec<Value> = f
                .factors
                .iter()
                .map(|(p, e)| json!({ "prime": big_json(p), "exponent": e }))
                .collect();
            Ok(Outcome::new(f.to_string(), Value::Array(factors)))
        }
        NtCmd::Isprime { n } => {
            let verdict = nt::is_prime(&parse_bigint(n)?);
            Ok(Outcome::new(verdict.to_string(), json!(verdict)))
        }
        NtCmd::Nextprime { n } => {
            let p = nt::next_prime(&parse_bigint(n)?);
            Ok(Outcome::new(p.to_string(), big_json(&p)))
        }
        NtCmd::Crt { congruences } => {
            let system: Vec<nt::Congruence> = congruences
                .iter()
                .map(|pair| {
                    let (r, m) = pair.split_once(':').ok_or_else(|| {
                        CliError::new(format!("ParseError: expected r:m, got {:?}", pair))
                    })?;
                    nt::Congruence::new(parse_bigint(r)?, parse_bigint(m)?).map_err(domain)
                })
                .collect::<Result<_, _>>()?;
            match nt::crt_solve(&system).map_err(domain)? {
                Some((r, m)) => Ok(Outcome::new(
                    format!("{} (mod {})", r, m),
                    json!({ "residue": big_json(&r), "modulus": big_json(&m) }),
                )),
                None => Ok(Outcome::new("inconsistent", Value::Null)),
            }
        }
        NtCmd::Table { m, op } => {
            let table_op = if op == "add" {
                nt::TableOp::Add
            } else {
                nt::TableOp::Mul
            };
            let table = nt::cayley_table(*m, table_op).map_err(domain)?;
            let plain = table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::new(plain, json!(table)))
        }
        NtCmd::Isbn { code } => {
            let digits: Vec<char> = code.chars().filter(|c| *c != '-' && *c != ' ').collect();
            match digits.len() {
                9 => {
                    let check = nt::isbn10_check_digit(code).map_err(domain)?;
                    Ok(Outcome::new(check.to_string(), json!(check.to_string())))
                }
                10 => {
                    let isbn = nt::Isbn10::parse(code).map_err(domain)?;
                    let valid = nt::isbn10_validate(&isbn);
                    Ok(Outcome::new(
                        if valid { "valid" } else { "invalid" },
                        json!(valid),
                    ))
                }
                other => Err(CliError::new(format!(
                    "ParseError: expected 9 or 10 ISBN symbols, got {}",
                    other
                ))),
            }
        }
    }
}
