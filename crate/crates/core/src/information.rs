//! Shannon entropy and related information measures, plus the overlapping
//! codon count used for DNA fragments.

use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum InfoError {
    #[error("InvalidCount: a source must emit at least one message, got {0}")]
    InvalidCount(u64),
    #[error("InvalidDistribution: {0}")]
    InvalidDistribution(String),
    #[error("ParseError: invalid symbol {0:?}; expected A, C, G or T")]
    ParseError(char),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

/// Information of a source with `n` equally likely messages, in bits.
pub fn uniform_information(n_messages: u64) -> Result<f64, InfoError> {
    if n_messages < 1 {
        return Err(InfoError::InvalidCount(n_messages));
    }
    Ok((n_messages as f64).log2())
}

/// Probability vector with every mass in `(0, 1]` and total 1 (within 1e-9).
///
/// Zero-probability messages cannot be emitted, so a zero mass is rejected;
/// drop those rows before constructing the distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    pub fn new(probs: Vec<f64>) -> Result<Self, InfoError> {
        if probs.is_empty() {
            return Err(InfoError::InvalidDistribution(
                "empty probability list".into(),
            ));
        }
        for &p in &probs {
            if !(p > 0.0 && p <= 1.0) {
                return Err(InfoError::InvalidDistribution(format!(
                    "probability {} outside (0, 1]",
                    p
                )));
            }
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(InfoError::InvalidDistribution(format!(
                "probabilities sum to {}, not 1",
                total
            )));
        }
        Ok(Distribution { probs })
    }

    /// Empirical distribution from positive counts.
    pub fn from_counts(counts: &[u64]) -> Result<Self, InfoError> {
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(InfoError::InvalidDistribution("all counts are zero".into()));
        }
        if counts.contains(&0) {
            return Err(InfoError::InvalidDistribution(
                "zero count; drop empty rows first".into(),
            ));
        }
        Ok(Distribution {
            probs: counts.iter().map(|&c| c as f64 / total as f64).collect(),
        })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// `H = -sum p_i log2 p_i`, in bits.
pub fn shannon_entropy(d: &Distribution) -> f64 {
    -d.probs.iter().map(|&p| p * p.log2()).sum::<f64>()
}

/// Overlapping 3-letter window counts of a DNA fragment; a sequence of
/// length L yields exactly L-2 windows (stride 1), so a run like TTTT
/// contributes TTT twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodonCounts {
    counts: BTreeMap<String, u64>,
    total: u64,
}

impl CodonCounts {
    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn get(&self, codon: &str) -> u64 {
        self.counts.get(codon).copied().unwrap_or(0)
    }

    /// Entropy of the empirical codon distribution, in bits.
    pub fn entropy(&self) -> f64 {
        let counts: Vec<u64> = self.counts.values().copied().collect();
        let d = Distribution::from_counts(&counts).expect("counts are positive by construction");
        shannon_entropy(&d)
    }
}

/// Counts width-3 windows at stride 1 over a sequence of A, C, G, T.
pub fn sliding_codons(sequence: &str) -> Result<CodonCounts, InfoError> {
    let upper = sequence.trim().to_ascii_uppercase();
    if let Some(bad) = upper.chars().find(|c| !matches!(c, 'A' | 'C' | 'G' | 'T')) {
        return Err(InfoError::ParseError(bad));
    }
    if upper.len() < 3 {
        return Err(InfoError::InvalidInput(format!(
            "sequence must have at least 3 bases, got {}",
            upper.len()
        )));
    }
    let bytes = upper.as_bytes();
    let mut counts = BTreeMap::new();
    for window in bytes.windows(3) {
        let codon = String::from_utf8(window.to_vec()).unwrap();
        *counts.entry(codon).or_insert(0) += 1;
    }
    let total = (upper.len() - 2) as u64;
    Ok(CodonCounts { counts, total })
}

/// Entropy of a DNA fragment via its sliding codon counts.
pub fn sequence_entropy(sequence: &str) -> Result<f64, InfoError> {
    Ok(sliding_codons(sequence)?.entropy())
}
