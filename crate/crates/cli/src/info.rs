//! `mathbook info ...`: entropy and DNA codon analysis.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::information as inf;
use serde_json::json;

#[derive(Subcommand)]
pub enum InfoCmd {
    /// Shannon entropy of a probability list, or log2(N) with --uniform
    Entropy {
        /// Probabilities, whitespace- or comma-separated
        #[arg(long, conflicts_with = "uniform")]
        probs: Option<String>,
        /// Number of equally likely messages
        #[arg(long)]
        uniform: Option<u64>,
    },
    /// Codon counts and entropy of a DNA fragment (string, file path or -)
    Dna { sequence: String },
}

pub fn run(cmd: &InfoCmd) -> CliResult {
    match cmd {
        InfoCmd::Entropy { probs, uniform } => match (probs, uniform) {
            (Some(list), None) => {
                // Fractions like 2/30 are welcome; they go through the
                // exact-rational parser before conversion.
                let values: Vec<f64> = parse_rat_list(list)?
                    .iter()
                    .map(approx)
                    .collect();
                let d = inf::Distribution::new(values).map_err(domain)?;
                let h = inf::shannon_entropy(&d);
                Ok(Outcome::new(format!("{} bits", format_f64(h)), json!(h)))
            }
            (None, Some(n)) => {
                let bits = inf::uniform_information(*n).map_err(domain)?;
                Ok(Outcome::new(format!("{} bits", format_f64(bits)), json!(bits)))
            }
            _ => Err(CliError::new(
                "ParseError: provide exactly one of --probs or --uniform".to_string(),
            )),
        },
        InfoCmd::Dna { sequence } => {
            // A bare argument naming an existing file is read as a file.
            let raw = if sequence != "-" && std::path::Path::new(sequence).exists() {
                read_file_or_stdin(sequence)?
            } else {
                read_arg(sequence)?
            };
            // FASTA-like headers and blank lines are ignored.
            let cleaned: String = raw
                .lines()
                .filter(|l| !l.starts_with('>') && !l.starts_with(';'))
                .collect::<Vec<_>>()
                .join("");
            let cleaned: String = cleaned.chars().filter(|c| !c.is_whitespace()).collect();
            let counts = inf::sliding_codons(&cleaned).map_err(domain)?;
            let entropy = counts.entropy();
            let mut table: Vec<(String, u64)> = counts
                .counts()
                .iter()
                .map(|(k, &v)| (k.clone(), v))
                .collect();
            table.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
            let mut plain = String::new();
            for (codon, count) in &table {
                plain.push_str(&format!("{} {}\n", codon, count));
            }
            plain.push_str(&format!(
                "windows {}\nentropy {} bits",
                counts.total(),
                format_f64(entropy)
            ));
            Ok(Outcome::new(
                plain,
                json!({
                    "counts": counts.counts(),
                    "windows": counts.total(),
                    "entropy_bits": entropy,
                }),
            ))
        }
    }
}
