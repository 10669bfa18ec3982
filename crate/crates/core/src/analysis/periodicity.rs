use std::fmt;

use crate::error::{Error, Result};
use crate::profile::{ComplexityProfile, Provenance};
use crate::window::SequenceWindow;
use crate::word::Symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Periodic(usize),
    AperiodicEvidence,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Periodic(p) => write!(f, "periodic({p})"),
            Verdict::AperiodicEvidence => f.write_str("aperiodic-evidence"),
            Verdict::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub verdict: Verdict,
    /// Smallest `n ≤ trusted_n` with `c_n ≤ n`.
    pub witness: Option<usize>,
    /// Minimal period of the explicit symbols, when one was searched for.
    pub period: Option<usize>,
}

/// Smallest `p ≥ 1` with `x[i] = x[i + p]` for all valid `i` (`|x|` if none
/// shorter), via the prefix function.
pub fn minimal_period(x: &[Symbol]) -> usize {
    if x.is_empty() {
        return 0;
    }
    let mut fail = vec![0usize; x.len()];
    let mut k = 0;
    for i in 1..x.len() {
        while k > 0 && x[i] != x[k] {
            k = fail[k - 1];
        }
        if x[i] == x[k] {
            k += 1;
        }
        fail[i] = k;
    }
    x.len() - fail[x.len() - 1]
}

/// Morse–Hedlund test: a length with `c_n ≤ n` is a witness of periodicity,
/// confirmed by finding a period that repeats at least twice across the
/// window's explicit symbols.
pub fn morse_hedlund_classify(profile: &ComplexityProfile, window: &SequenceWindow) -> Result<PeriodicityReport> {
    match profile.provenance() {
        Provenance::Window { base, length, .. } if *base == window.base() && *length == window.len() => {}
        _ => return Err(Error::invalid("profile was not computed from this window")),
    }
    if profile.trusted_n() < 1 {
        return Ok(PeriodicityReport { verdict: Verdict::Inconclusive, witness: None, period: None });
    }
    let witness = (1..=profile.trusted_n()).find(|&n| profile.c(n).unwrap() <= n as u128);
    let Some(n) = witness else {
        return Ok(PeriodicityReport { verdict: Verdict::AperiodicEvidence, witness: None, period: None });
    };
    let p = minimal_period(window.symbols());
    let verdict = if 2 * p <= window.len() { Verdict::Periodic(p) } else { Verdict::Inconclusive };
    Ok(PeriodicityReport { verdict, witness: Some(n), period: Some(p) })
}
