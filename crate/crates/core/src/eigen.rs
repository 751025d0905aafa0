//! Cyclic Jacobi eigenvalues for dense real symmetric matrices, and the
//! multiplicity-grouped [`Spectrum`].

use crate::error::{Error, Result};
use serde::Serialize;

pub const DEFAULT_CLUSTER_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_SWEEPS: usize = 100;
const RELATIVE_OFF_TOL: f64 = 1e-12;

/// All eigenvalues of the symmetric matrix `rows`, ascending.
///
/// Sweeps rotate every off-diagonal pair in row order until the off-diagonal
/// Frobenius norm drops below `1e-12 · ‖A‖_F`.
pub fn symmetric_eigenvalues(rows: &[Vec<f64>], max_sweeps: usize) -> Result<Vec<f64>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("matrix must be square".into()));
    }
    let mut a: Vec<f64> = rows.concat();
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = RELATIVE_OFF_TOL * norm;
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut residual = off(&a);
    let mut sweeps = 0;
    while residual > threshold {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
        sweeps += 1;
        residual = off(&a);
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
}

/// Distinct eigenvalues, strictly descending, with multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Groups values whose consecutive gaps are below `tol`; each group is
    /// represented by its mean.
    pub fn from_values(values: &[f64], tol: f64) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(|x, y| y.total_cmp(x));
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        let mut group: Vec<f64> = Vec::new();
        let flush = |group: &mut Vec<f64>, entries: &mut Vec<SpectrumEntry>| {
            if !group.is_empty() {
                let mean = group.iter().sum::<f64>() / group.len() as f64;
                entries.push(SpectrumEntry {
                    value: mean,
                    multiplicity: group.len(),
                    symbol: None,
                });
                group.clear();
            }
        };
        for v in sorted {
            if let Some(&last) = group.last() {
                if last - v >= tol {
                    flush(&mut group, &mut entries);
                }
            }
            group.push(v);
        }
        flush(&mut group, &mut entries);
        Spectrum { entries }
    }

    /// Builds a spectrum from known `(value, multiplicity, symbol)` triples;
    /// entries with equal values (within `tol`) are merged, and multiplicities
    /// may be negative to cancel a previous entry.
    pub fn from_signed(parts: &[(f64, i64, Option<&str>)], tol: f64) -> Result<Self> {
        let mut merged: Vec<(f64, i64, Option<String>)> = Vec::new();
        for &(v, m, sym) in parts {
            match merged.iter_mut().find(|(w, _, _)| (w - v).abs() < tol) {
                Some(e) => {
                    e.1 += m;
                    if e.2.is_none() {
                        e.2 = sym.map(str::to_owned);
                    }
                }
                None => merged.push((v, m, sym.map(str::to_owned))),
            }
        }
        if merged.iter().any(|e| e.1 < 0) {
            return Err(Error::Invalid("negative multiplicity".into()));
        }
        merged.retain(|e| e.1 > 0);
        merged.sort_by(|x, y| y.0.total_cmp(&x.0));
        Ok(Spectrum {
            entries: merged
                .into_iter()
                .map(|(value, m, symbol)| SpectrumEntry {
                    value,
                    multiplicity: m as usize,
                    symbol,
                })
                .collect(),
        })
    }

    /// Total multiplicity, equal to the vertex count.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// `Σ m·λ`.
    pub fn trace(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.multiplicity as f64 * e.value)
            .sum()
    }

    /// `Σ m·λ²`, which equals twice the edge count for a graph.
    pub fn sum_squares(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.multiplicity as f64 * e.value * e.value)
            .sum()
    }

    /// Multiplicity of the entry within `tol` of zero.
    pub fn multiplicity_near(&self, value: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| (e.value - value).abs() < tol)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Eigenvalues with repetition, descending.
    pub fn values(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    /// Same number of distinct values, identical multiplicities, and each
    /// value within `tol`.
    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.multiplicity == b.multiplicity && (a.value - b.value).abs() < tol)
    }

    /// Largest per-entry absolute difference, or infinity when the shapes differ.
    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        if self.entries.len() != other.entries.len()
            || self
                .entries
                .iter()
                .zip(&other.entries)
                .any(|(a, b)| a.multiplicity != b.multiplicity)
        {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a.value - b.value).abs())
            .fold(0.0, f64::max)
    }

    /// Copies symbols from `other` onto entries whose values agree within `tol`.
    pub fn adopt_symbols(&mut self, other: &Spectrum, tol: f64) {
        for e in &mut self.entries {
            if let Some(src) = other
                .entries
                .iter()
                .find(|o| (o.value - e.value).abs() < tol)
            {
                e.symbol.clone_from(&src.symbol);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn two_by_two() {
        let v = symmetric_eigenvalues(&[vec![2.0, 1.0], vec![1.0, 2.0]], 100).unwrap();
        assert_abs_diff_eq!(v[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(v[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn zero_and_empty_matrices() {
        assert_eq!(symmetric_eigenvalues(&[vec![0.0]], 100).unwrap(), vec![0.0]);
        assert!(symmetric_eigenvalues(&[], 100).unwrap().is_empty());
        assert!(symmetric_eigenvalues(&[vec![0.0, 1.0]], 100).is_err());
    }

    #[test]
    fn sweep_limit_reported() {
        let rows = vec![
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ];
        assert!(matches!(
            symmetric_eigenvalues(&rows, 0),
            Err(Error::NoConvergence { sweeps: 0, .. })
        ));
    }

    #[test]
    fn clustering() {
        let s = Spectrum::from_values(&[-1.0, 2.0, -1.0 + 1e-12, 0.5], 1e-9);
        assert_eq!(s.distinct(), 3);
        assert_eq!(s.entries[0].value, 2.0);
        assert_eq!(s.entries[2].multiplicity, 2);
        assert_eq!(s.total(), 4);
        assert_abs_diff_eq!(s.trace(), 0.5, epsilon = 1e-11);
    }

    #[test]
    fn signed_merge() {
        let s = Spectrum::from_signed(
            &[(1.0, 1, None), (-1.0, 2, Some("-1")), (-1.0, -1, None)],
            1e-9,
        )
        .unwrap();
        assert_eq!(s.values(), vec![1.0, -1.0]);
        assert!(Spectrum::from_signed(&[(1.0, -1, None)], 1e-9).is_err());
    }
}
