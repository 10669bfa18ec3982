use super::{check_budget, GapSpec, NumericAlphabet, StandInSequence};
use crate::error::{Error, Result};
use crate::profile::ContainmentCertificate;
use crate::window::SequenceWindow;
use crate::word::Word;

/// Binary words of length `m` with no two `1`s at distance less than `i`,
/// in lexicographic order.
pub fn separated_set(i: usize, m: usize) -> Vec<Word> {
    fn rec(i: usize, m: usize, cur: &mut Vec<u32>, last_one: Option<usize>, out: &mut Vec<Word>) {
        if cur.len() == m {
            out.push(Word(cur.clone()));
            return;
        }
        let pos = cur.len();
        cur.push(0);
        rec(i, m, cur, last_one, out);
        cur.pop();
        if last_one.map_or(true, |p| pos - p >= i) {
            cur.push(1);
            rec(i, m, cur, Some(pos), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(i, m, &mut Vec::with_capacity(m), None, &mut out);
    out
}

/// `w_i`: the words of [`separated_set`] concatenated, then `0^m`.
pub fn separated_block(i: usize, m: usize) -> Word {
    let mut w = Word::concat(&separated_set(i, m));
    w.extend_from(&vec![0; m]);
    w
}

/// Window of `ω0 . s(1) w_1 s(2) w_2 … s(K) w_K`, with the block words and a
/// certificate that every `w_k` (hence every length `≤ m_K` separated
/// family) is present.
#[derive(Clone, Debug)]
pub struct SeparatedBuild {
    pub window: SequenceWindow,
    pub blocks: Vec<Word>,
    pub certificate: ContainmentCertificate,
}

fn separated_count(i: usize, m: usize) -> u128 {
    // f(len) = f(len − 1) + f(len − i), counting words of each length
    let mut f = vec![1u128; m + 1];
    for len in 1..=m {
        f[len] = f[len - 1].saturating_add(if len >= i { f[len - i] } else { 1 });
    }
    f[m]
}

pub fn gen_separated_blocks(gaps: &GapSpec, s: &StandInSequence, blocks: usize, budget: usize) -> Result<SeparatedBuild> {
    s.check_values(&[2, 3], "separated-blocks stand-in")?;
    if blocks == 0 {
        return Err(Error::invalid("need at least one block"));
    }
    gaps.validate(blocks)?;
    let mut needed: u128 = 0;
    for i in 1..=blocks {
        let m = gaps.m(i).ok_or_else(|| Error::invalid(format!("gap table has no m_{i}")))? as usize;
        needed = needed.saturating_add(1 + separated_count(i, m).saturating_add(1).saturating_mul(m as u128));
    }
    check_budget(needed, budget)?;
    let alpha = NumericAlphabet::new([0, 1, 2, 3]);
    let mut syms = Vec::with_capacity(needed as usize);
    let mut words = Vec::with_capacity(blocks);
    for i in 1..=blocks {
        let v = s.at(i).ok_or_else(|| Error::invalid(format!("stand-in {s} has no value at {i}")))?;
        let w = separated_block(i, gaps.m(i).unwrap() as usize);
        syms.push(alpha.sym(v));
        syms.extend(w.iter().map(|&b| alpha.sym(b)));
        words.push(w);
    }
    let window = SequenceWindow::new(alpha.alphabet, 0, syms, Some(0))?;
    let max_n = gaps.m(blocks).unwrap() as usize;
    let certificate = ContainmentCertificate { max_n, note: format!("window contains w_1..w_{blocks}") };
    Ok(SeparatedBuild { window, blocks: words, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let s: Vec<String> = separated_set(2, 3).iter().map(Word::to_string).collect();
        assert_eq!(s, ["000", "001", "010", "100", "101"]);
        assert_eq!(separated_block(2, 3).to_string(), "000001010100101000");
    }

    #[test]
    fn counts_match_enumeration() {
        for i in 1..5 {
            for m in 0..12 {
                let brute = (0..1u32 << m)
                    .filter(|v| {
                        let ones: Vec<u32> = (0..m).filter(|b| v >> b & 1 == 1).collect();
                        ones.windows(2).all(|p| (p[1] - p[0]) as usize >= i)
                    })
                    .count();
                assert_eq!(separated_set(i, m as usize).len(), brute);
                assert_eq!(separated_count(i, m as usize), brute as u128);
            }
        }
    }

    #[test]
    fn window_layout_and_budget() {
        let s = StandInSequence::periodic(vec![2, 3]).unwrap();
        let b = gen_separated_blocks(&GapSpec::Explicit(vec![3, 6, 10]), &s, 3, 1 << 20).unwrap();
        let x = b.window.symbols();
        assert_eq!(x[0], 2);
        assert_eq!(&x[1..1 + b.blocks[0].len()], &b.blocks[0][..]);
        assert_eq!(b.certificate.max_n, 10);
        assert!(matches!(gen_separated_blocks(&GapSpec::Explicit(vec![3, 6, 10]), &s, 3, 100), Err(Error::Budget { .. })));
        assert!(gen_separated_blocks(&GapSpec::Explicit(vec![3]), &StandInSequence::periodic(vec![1]).unwrap(), 1, 1000).is_err());
    }
}
