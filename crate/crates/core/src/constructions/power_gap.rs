use super::{check_budget, StandInSequence};
use crate::error::{Error, Result};
use crate::window::SequenceWindow;
use crate::word::Alphabet;

/// Run lengths of the power-gap sequence: `2^j − 1` for `j = 1..=m`, then
/// `2^{m + j + s(j)}` for `j = 1, 2, …`, stopping before the first run whose
/// exponent exceeds `max_exponent`.
fn runs(s: &StandInSequence, m: u32, max_exponent: u32) -> Result<Vec<u128>> {
    s.check_values(&[0, 1], "power-gap stand-in")?;
    if max_exponent > 100 {
        return Err(Error::invalid("max_exponent must be at most 100"));
    }
    let mut out = Vec::new();
    for j in 1..=m.min(max_exponent) {
        out.push((1u128 << j) - 1);
    }
    if m < max_exponent {
        for j in 1.. {
            let Some(v) = s.at(j as usize) else { break };
            let e = m + j + v;
            if e > max_exponent {
                break;
            }
            out.push(1u128 << e);
        }
    }
    Ok(out)
}

/// `ω0 . 1 0^{2^1−1} 1 0^{2^2−1} … 1 0^{2^m−1} 1 0^{2^{m+1+s(1)}} 1 0^{2^{m+2+s(2)}} …`
pub fn gen_power_gap(s: &StandInSequence, m: u32, max_exponent: u32, budget: usize) -> Result<SequenceWindow> {
    let runs = runs(s, m, max_exponent)?;
    if runs.is_empty() {
        return Err(Error::invalid("extent admits no runs"));
    }
    let total: u128 = runs.iter().map(|r| r + 1).sum();
    check_budget(total, budget)?;
    let mut syms = Vec::with_capacity(total as usize);
    for r in runs {
        syms.push(1);
        syms.extend(std::iter::repeat(0).take(r as usize));
    }
    SequenceWindow::new(Alphabet::binary(), 0, syms, Some(0))
}

/// Recover `s(1), s(2), …` from the run exponents after the switch point.
pub fn decode_power_gap(window: &SequenceWindow, m: u32) -> Result<Vec<u32>> {
    let x = window.symbols();
    if x.first() != Some(&1) {
        return Err(Error::invalid("power-gap window must start with 1"));
    }
    let mut runs = Vec::new();
    for &b in x {
        match b {
            1 => runs.push(0u128),
            _ => *runs.last_mut().unwrap() += 1,
        }
    }
    let mut bits = Vec::new();
    for (idx, &r) in runs.iter().enumerate() {
        let j = idx as u32 + 1;
        if j <= m {
            if r != (1 << j) - 1 {
                return Err(Error::invalid(format!("run {j} has length {r}, expected {}", (1u128 << j) - 1)));
            }
            continue;
        }
        let jj = j - m;
        if !r.is_power_of_two() {
            return Err(Error::invalid(format!("run {j} has length {r}, not a power of two")));
        }
        let e = r.trailing_zeros();
        match e.checked_sub(m + jj) {
            Some(v @ 0..=1) => bits.push(v),
            _ => return Err(Error::invalid(format!("run {j} has exponent {e}, expected {} or {}", m + jj, m + jj + 1))),
        }
    }
    Ok(bits)
}
