use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::index::FactorIndex;

/// Where a profile's counts came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Factors of a single window.
    Window { base: i64, length: usize, left_fill: bool },
    /// Union of the factor sets of several windows.
    Union { windows: usize },
    /// Counts of a whole language, computed combinatorially.
    Language(String),
}

/// Evidence that the counted factor set contains a known family of words for
/// all `n ≤ max_n`, which makes lower-bound checks meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentCertificate {
    pub max_n: usize,
    pub note: String,
}

/// `c_n` for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    counts: Vec<u128>,
    trusted_n: usize,
    window_length: usize,
    provenance: Provenance,
    certificate: Option<ContainmentCertificate>,
}

impl ComplexityProfile {
    /// Profile of an index. Counts are trusted up to a quarter of the
    /// shortest explicit window.
    pub fn from_index(index: &FactorIndex, n_max: usize) -> Result<Self> {
        if n_max == 0 || n_max > index.max_n() {
            return Err(Error::invalid(format!("n_max must be in 1..={}, got {n_max}", index.max_n())));
        }
        let windows = index.windows();
        let provenance = match windows {
            [w] => Provenance::Window { base: w.base(), length: w.len(), left_fill: w.left_fill().is_some() },
            _ => Provenance::Union { windows: windows.len() },
        };
        Ok(ComplexityProfile {
            counts: index.counts()[1..=n_max].to_vec(),
            trusted_n: n_max.min(index.min_window_len() / 4),
            window_length: index.indexed_len(),
            provenance,
            certificate: None,
        })
    }

    /// Profile from explicit counts (`counts[0]` is `c_1`).
    pub fn from_counts(counts: Vec<u128>, trusted_n: usize, window_length: usize, provenance: Provenance) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::invalid("profile needs at least c_1"));
        }
        if trusted_n > counts.len() {
            return Err(Error::invalid("trusted_n exceeds n_max"));
        }
        Ok(ComplexityProfile { counts, trusted_n, window_length, provenance, certificate: None })
    }

    /// Exact counts of a language for `n = 1..=counts.len()`.
    pub fn language(counts: Vec<u128>, label: impl Into<String>) -> Result<Self> {
        let n = counts.len();
        Self::from_counts(counts, n, usize::MAX, Provenance::Language(label.into()))
    }

    pub fn with_certificate(mut self, cert: ContainmentCertificate) -> Self {
        self.certificate = Some(cert);
        self
    }

    pub fn n_max(&self) -> usize {
        self.counts.len()
    }

    pub fn trusted_n(&self) -> usize {
        self.trusted_n
    }

    pub fn window_length(&self) -> usize {
        self.window_length
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn certificate(&self) -> Option<&ContainmentCertificate> {
        self.certificate.as_ref()
    }

    /// `c_n`, or `None` outside `1..=n_max`.
    pub fn c(&self, n: usize) -> Option<u128> {
        n.checked_sub(1).and_then(|i| self.counts.get(i)).copied()
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    /// `c_{n+1} − c_n` for `n = 1..n_max`.
    pub fn diffs(&self) -> Vec<i128> {
        self.counts.windows(2).map(|w| w[1] as i128 - w[0] as i128).collect()
    }

    /// Replace one count; used to perturb profiles in tests and tools.
    pub fn with_count(mut self, n: usize, value: u128) -> Self {
        self.counts[n - 1] = value;
        self
    }

    /// `n,c_n,diff` rows; the last row has an empty diff.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,c_n,diff\n");
        let diffs = self.diffs();
        for (i, c) in self.counts.iter().enumerate() {
            match diffs.get(i) {
                Some(d) => writeln!(out, "{},{},{}", i + 1, c, d),
                None => writeln!(out, "{},{},", i + 1, c),
            }
            .expect("write to string");
        }
        out
    }
}
