//! `mathbook comb ...`: counting commands.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::combinatorics as cb;
use serde_json::json;

#[derive(Subcommand)]
pub enum CombCmd {
    /// n!
    Fact { n: u64 },
    /// Binomial coefficient p over q (0 when q > p)
    Binom { p: u64, q: u64 },
    /// Permutations of k out of n without repetition
    Perm { n: u64, k: u64 },
    /// Permutations with repetition: n^k
    Permrep { n: u64, k: u64 },
    /// Combinations with repetition: C(n+k-1, k)
    Combrep { n: u64, k: u64 },
    /// Row n of Pascal's triangle
    Pascal { n: u64 },
    /// Binomial probability P(X = x) for n trials with success probability p
    Pmf {
        n: u64,
        /// Probability as a decimal or fraction (0.5 or 1/6)
        p: String,
        x: u64,
    },
}

pub fn run(cmd: &CombCmd) -> CliResult {
    match cmd {
        CombCmd::Fact { n } => {
            let v = cb::factorial(*n);
            Ok(Outcome::new(v.to_string(), big_json(&v)))
        }
        CombCmd::Binom { p, q } => {
            let v = cb::binomial(*p, *q);
            Ok(Outcome::new(v.to_string(), big_json(&v)))
        }
        CombCmd::Perm { n, k } => {
            let v = cb::perm(*n, *k).map_err(domain)?;
            Ok(Outcome::new(v.to_string(), big_json(&v)))
        }
        CombCmd::Permrep { n, k } => {
            let v = cb::perm_rep(*n, *k);
            Ok(Outcome::new(v.to_string(), big_json(&v)))
        }
        CombCmd::Combrep { n, k } => {
            let v = cb::comb_rep(*n, *k);
            Ok(Outcome::new(v.to_string(), big_json(&v)))
        }
        CombCmd::Pascal { n } => {
            let row = cb::pascal_row(*n);
            let plain = row
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Outcome::new(
                plain,
                serde_json::Value::Array(row.iter().map(big_json).collect()),
            ))
        }
        CombCmd::Pmf { n, p, x } => {
            let p = approx(&parse_rat(p)?);
            let spec = cb::BernoulliSpec::new(*n, p, *x).map_err(domain)?;
            let v = cb::binomial_pmf(&spec).map_err(domain)?;
            Ok(Outcome::new(format_f64(v), json!(v)))
        }
    }
}
