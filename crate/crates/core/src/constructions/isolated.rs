use num_integer::Integer;
use num_rational::Ratio;

use super::check_budget;
use crate::error::{Error, Result};
use crate::window::SequenceWindow;
use crate::word::{Alphabet, Word};

#[derive(Clone, Debug)]
pub struct IsolatedParams {
    /// `r_1, r_2, …`, each in `(0, 1)`.
    pub r: Vec<Ratio<i64>>,
    /// Block lengths `f(1) < f(2) < …`.
    pub f: Vec<u64>,
}

impl IsolatedParams {
    pub fn new(r: Vec<Ratio<i64>>, f: Vec<u64>) -> Result<Self> {
        if r.is_empty() || r.len() != f.len() {
            return Err(Error::invalid(format!("need equally many r_i and f(i), got {} and {}", r.len(), f.len())));
        }
        if let Some(x) = r.iter().find(|x| **x <= Ratio::from_integer(0) || **x >= Ratio::from_integer(1)) {
            return Err(Error::invalid(format!("r_i must lie in (0,1), got {x}")));
        }
        if f[0] == 0 || f.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::invalid("f must be positive and strictly increasing"));
        }
        Ok(IsolatedParams { r, f })
    }
}

/// `w(k) = ⌊(k+1)r⌋ − ⌊kr⌋` for `k = 1..=len`.
pub fn isolated_block(r: Ratio<i64>, len: u64) -> Word {
    let floor = |k: i64| Integer::div_floor(&(k * r.numer()), r.denom());
    Word((1..=len as i64).map(|k| (floor(k + 1) - floor(k)) as u32).collect())
}

/// `… 2 w_4 2 w_2 2 w_1 2 w_3 2 w_5 …`: even blocks to the left, odd blocks
/// to the right, each delimited by `2`; index 0 is the `2` just before `w_1`.
pub fn gen_isolated_z(params: &IsolatedParams, budget: usize) -> Result<SequenceWindow> {
    let total: u128 = params.f.iter().map(|&f| f as u128 + 1).sum::<u128>() + 1;
    check_budget(total, budget)?;
    let blocks: Vec<Word> = params.r.iter().zip(&params.f).map(|(&r, &f)| isolated_block(r, f)).collect();
    let mut left: Vec<u32> = Vec::new();
    for w in blocks.iter().skip(1).step_by(2).rev() {
        left.push(2);
        left.extend_from_slice(w);
    }
    let base = -(left.len() as i64);
    let mut syms = left;
    for w in blocks.iter().step_by(2) {
        syms.push(2);
        syms.extend_from_slice(w);
    }
    syms.push(2);
    SequenceWindow::new(Alphabet::from_chars("012")?, base, syms, None)
}

/// Lengths of the gaps between consecutive `2`s at or right of index 0.
pub fn read_right_block_lengths(window: &SequenceWindow) -> Vec<u64> {
    let twos: Vec<i64> = (0.max(window.base())..window.end()).filter(|&i| window.get(i) == Some(2)).collect();
    twos.windows(2).map(|p| (p[1] - p[0] - 1) as u64).collect()
}
