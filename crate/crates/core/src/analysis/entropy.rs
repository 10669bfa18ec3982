use crate::error::{Error, Result};
use crate::profile::ComplexityProfile;

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyEstimate {
    /// `log₂(c_n) / n` for `n = 1..=trusted_n`.
    pub quotients: Vec<f64>,
    /// The quotient at `trusted_n`; no extrapolation.
    pub estimate: f64,
    pub at: usize,
}

pub fn entropy_estimate(profile: &ComplexityProfile) -> Result<EntropyEstimate> {
    let t = profile.trusted_n();
    if t == 0 {
        return Err(Error::invalid("profile has no trusted lengths"));
    }
    let quotients = (1..=t)
        .map(|n| match profile.c(n).unwrap() {
            0 => Err(Error::invalid(format!("c_{n} = 0"))),
            c => Ok(log2(c) / n as f64),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyEstimate { estimate: quotients[t - 1], at: t, quotients })
}

fn log2(c: u128) -> f64 {
    // exact enough beyond 2^53: split off the leading bits
    let shift = (128 - c.leading_zeros()).saturating_sub(64);
    ((c >> shift) as f64).log2() + shift as f64
}
