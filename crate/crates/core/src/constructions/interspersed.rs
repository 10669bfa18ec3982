use super::{check_budget, GapSpec, NumericAlphabet, StandInSequence};
use crate::error::{Error, Result};
use crate::window::SequenceWindow;

/// One window `ω0 . s(1) 0^{m_1} s(2) 0^{m_2} … s(K) 0^{m_K}` per stand-in,
/// all over a common alphabet containing `0` and every stand-in value.
pub fn gen_interspersed(seqs: &[StandInSequence], gaps: &GapSpec, blocks: usize, budget: usize) -> Result<Vec<SequenceWindow>> {
    if seqs.is_empty() || blocks == 0 {
        return Err(Error::invalid("need at least one sequence and one block"));
    }
    gaps.validate(blocks)?;
    let mut len: u128 = 0;
    for i in 1..=blocks {
        let m = gaps.m(i).ok_or_else(|| Error::invalid(format!("gap table has no m_{i}")))?;
        len += 1 + m as u128;
    }
    check_budget(len * seqs.len() as u128, budget)?;
    let alpha = NumericAlphabet::new(seqs.iter().flat_map(|s| s.values().iter().copied()).chain([0]));
    let zero = alpha.sym(0);
    seqs.iter()
        .map(|s| {
            let mut syms = Vec::with_capacity(len as usize);
            for i in 1..=blocks {
                let v = s.at(i).ok_or_else(|| Error::invalid(format!("stand-in {s} has no value at {i}")))?;
                syms.push(alpha.sym(v));
                syms.extend(std::iter::repeat(zero).take(gaps.m(i).unwrap() as usize));
            }
            SequenceWindow::new(alpha.alphabet.clone(), 0, syms, Some(zero))
        })
        .collect()
}
