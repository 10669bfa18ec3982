use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An irrational `α ∈ (0, 1)` given by partial quotients `[0; a_1, a_2, …]`.
///
/// With `period = Some(p)` the last `p` listed quotients repeat forever and
/// the expansion is infinite; otherwise the list is a truncation and only the
/// precision it implies is available.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationNumber {
    quotients: Vec<u64>,
    period: Option<usize>,
}

impl RotationNumber {
    pub fn new(quotients: Vec<u64>, period: Option<usize>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::invalid("rotation number needs at least one partial quotient"));
        }
        if quotients.contains(&0) {
            return Err(Error::invalid("partial quotients must be positive"));
        }
        if let Some(p) = period {
            if p == 0 || p > quotients.len() {
                return Err(Error::invalid(format!("period {p} must be in 1..={}", quotients.len())));
            }
        }
        Ok(RotationNumber { quotients, period })
    }

    /// `(√5 − 1)/2 = [0; 1, 1, 1, …]`.
    pub fn golden() -> Self {
        RotationNumber { quotients: vec![1], period: Some(1) }
    }

    /// `√2 − 1 = [0; 2, 2, 2, …]`.
    pub fn silver() -> Self {
        RotationNumber { quotients: vec![2], period: Some(1) }
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn period(&self) -> Option<usize> {
        self.period
    }

    /// `a_j` for `j ≥ 1`, or `None` past the end of a finite list.
    pub fn quotient(&self, j: usize) -> Option<u64> {
        let len = self.quotients.len();
        if j == 0 {
            return None;
        }
        if j <= len {
            return Some(self.quotients[j - 1]);
        }
        let p = self.period?;
        let start = len - p;
        Some(self.quotients[start + (j - 1 - start) % p])
    }

    /// Number of available quotients (`None` when infinite).
    pub fn known_depth(&self) -> Option<usize> {
        match self.period {
            Some(_) => None,
            None => Some(self.quotients.len()),
        }
    }

    /// Convergents `(p_j, q_j)` for `j = 0..=depth` (`p_0/q_0 = 0/1`).
    pub fn convergents(&self, depth: usize) -> Option<Vec<(BigInt, BigInt)>> {
        let mut out = Vec::with_capacity(depth + 1);
        let (mut p2, mut q2) = (BigInt::one(), BigInt::zero());
        let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
        out.push((p1.clone(), q1.clone()));
        for j in 1..=depth {
            let a = BigInt::from(self.quotient(j)?);
            let p = &a * &p1 + &p2;
            let q = &a * &q1 + &q2;
            p2 = std::mem::replace(&mut p1, p);
            q2 = std::mem::replace(&mut q1, q);
            out.push((p1.clone(), q1.clone()));
        }
        Some(out)
    }

    /// Floating-point approximation, for estimates only.
    pub fn approx(&self) -> f64 {
        let depth = self.known_depth().unwrap_or(60).min(60);
        let mut x = 0.0;
        for j in (1..=depth).rev() {
            x = 1.0 / (self.quotient(j).unwrap() as f64 + x);
        }
        x
    }
}

impl fmt::Display for RotationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q: Vec<String> = self.quotients.iter().map(u64::to_string).collect();
        write!(f, "[0;{}]", q.join(","))?;
        if let Some(p) = self.period {
            write!(f, "(period={p})")?;
        }
        Ok(())
    }
}

impl FromStr for RotationNumber {
    type Err = Error;

    /// `[0;a1,a2,…]` optionally followed by `(period=P)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("bad rotation number {s:?}"));
        let s = s.trim();
        let body = s.strip_prefix("[0;").ok_or_else(bad)?;
        let close = body.find(']').ok_or_else(bad)?;
        let quotients = body[..close].split(',').map(|t| t.trim().parse::<u64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        let rest = body[close + 1..].trim();
        let period = if rest.is_empty() {
            None
        } else {
            let p = rest.strip_prefix("(period=").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
            Some(p.trim().parse::<usize>().map_err(|_| bad())?)
        };
        RotationNumber::new(quotients, period)
    }
}
