//! Performance (accuracy) and agreement (Cohen's kappa) metrics.

use crate::error::{Error, Result};

/// C x C contingency table between two label vectors.
///
/// Rows index the first rater's class, columns the second rater's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementTable {
    counts: Vec<Vec<u64>>,
    n: u64,
}

impl AgreementTable {
    /// Build the table from two equal-length label vectors. The class count is
    /// inferred as `max(label) + 1` over both vectors.
    pub fn from_labels(a: &[usize], b: &[usize]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Metrics(format!(
                "label vectors have different lengths ({} vs {})",
                a.len(),
                b.len()
            )));
        }
        if a.is_empty() {
            return Err(Error::Metrics("empty label vectors".into()));
        }
        let c = a
            .iter()
            .chain(b.iter())
            .max()
            .copied()
            .expect("non-empty")
            + 1;
        let mut counts = vec![vec![0u64; c]; c];
        for (&ai, &bi) in a.iter().zip(b) {
            counts[ai][bi] += 1;
        }
        Ok(Self {
            counts,
            n: a.len() as u64,
        })
    }

    pub fn n_classes(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> u64 {
        self.n
    }

    /// Observed agreement p_o: diagonal mass over n.
    pub fn observed_agreement(&self) -> f64 {
        let diag: u64 = (0..self.counts.len()).map(|i| self.counts[i][i]).sum();
        diag as f64 / self.n as f64
    }

    /// Chance agreement p_e: sum over classes of the product of marginals.
    pub fn chance_agreement(&self) -> f64 {
        let c = self.counts.len();
        let n = self.n as f64;
        (0..c)
            .map(|k| {
                let row: u64 = self.counts[k].iter().sum();
                let col: u64 = (0..c).map(|i| self.counts[i][k]).sum();
                (row as f64 / n) * (col as f64 / n)
            })
            .sum()
    }

    /// True when both raters assign every instance to the same single class,
    /// the one situation where 1 - p_e degenerates to zero.
    fn both_constant_same(&self) -> bool {
        let c = self.counts.len();
        (0..c).any(|k| self.counts[k][k] == self.n)
    }
}

/// Fraction of exact matches between predictions and ground truth.
pub fn accuracy(pred: &[usize], truth: &[usize]) -> Result<f64> {
    if pred.len() != truth.len() {
        return Err(Error::Metrics(format!(
            "label vectors have different lengths ({} vs {})",
            pred.len(),
            truth.len()
        )));
    }
    if pred.is_empty() {
        return Err(Error::Metrics("empty label vectors".into()));
    }
    let hits = pred.iter().zip(truth).filter(|(p, t)| p == t).count();
    Ok(hits as f64 / pred.len() as f64)
}

/// Cohen's kappa between two label vectors: (p_o - p_e) / (1 - p_e).
///
/// When both raters are constant on the same class, p_e = 1 and the ratio is
/// 0/0; that case returns 1.0 (the raters agree completely).
pub fn cohens_kappa(a: &[usize], b: &[usize]) -> Result<f64> {
    let table = AgreementTable::from_labels(a, b)?;
    if table.both_constant_same() {
        return Ok(1.0);
    }
    let p_o = table.observed_agreement();
    let p_e = table.chance_agreement();
    Ok((p_o - p_e) / (1.0 - p_e))
}
