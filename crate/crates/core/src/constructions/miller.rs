use super::{check_budget, IntFn, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::window::SequenceWindow;
use crate::word::{Alphabet, Word};

/// Letters of the recursion: `a_ε = 1`, `b_ε = 0`.
const A: u32 = 1;
const B: u32 = 0;

/// `g` gives the repetition factor at each level (`g(0), g(1), …`, each ≥ 3);
/// `sigma` is the finite address.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MillerParams {
    pub g: IntFn,
    pub sigma: Vec<bool>,
}

impl MillerParams {
    pub fn new(g: IntFn, sigma: Vec<bool>) -> Result<Self> {
        for level in 0..sigma.len() {
            level_factor(&g, level)?;
        }
        Ok(MillerParams { g, sigma })
    }
}

fn level_factor(g: &IntFn, level: usize) -> Result<usize> {
    match g.eval(level as u64) {
        Some(v) if v >= 3 => Ok(v as usize),
        Some(v) => Err(Error::invalid(format!("g({level}) = {v}, need at least 3"))),
        None => Err(Error::invalid(format!("g({level}) is undefined"))),
    }
}

/// `h(k) = g(0)·g(1)·…·g(k−1)`.
pub fn miller_h(g: &IntFn, k: usize) -> Result<u128> {
    (0..k).try_fold(1u128, |acc, i| acc.checked_mul(level_factor(g, i)? as u128).ok_or_else(|| Error::invalid("h(k) overflows")))
}

/// `(a_σ, b_σ)` from
/// `a_{σ0} = b a^{g−1}`, `b_{σ0} = a b^g`, `a_{σ1} = a b^{g−1}`, `b_{σ1} = b a^g`.
pub fn miller_pair(params: &MillerParams) -> Result<(Word, Word)> {
    let (mut la, mut lb) = (1u128, 1u128);
    for (level, &bit) in params.sigma.iter().enumerate() {
        let g = level_factor(&params.g, level)? as u128;
        (la, lb) = if bit { (la + (g - 1) * lb, lb + g * la) } else { (lb + (g - 1) * la, la + g * lb) };
        check_budget(la.max(lb), DEFAULT_BUDGET)?;
    }
    let (mut a, mut b) = (Word(vec![A]), Word(vec![B]));
    for (level, &bit) in params.sigma.iter().enumerate() {
        let g = level_factor(&params.g, level)?;
        let (na, nb) = if bit {
            (Word::concat([&a, &b.repeat(g - 1)]), Word::concat([&b, &a.repeat(g)]))
        } else {
            (Word::concat([&b, &a.repeat(g - 1)]), Word::concat([&a, &b.repeat(g)]))
        };
        a = na;
        b = nb;
    }
    Ok((a, b))
}

/// `b_σ`.
pub fn gen_miller(params: &MillerParams) -> Result<Word> {
    Ok(miller_pair(params)?.1)
}

/// `b_σ` as a binary window starting at index 0.
pub fn miller_window(params: &MillerParams) -> Result<SequenceWindow> {
    SequenceWindow::new(Alphabet::binary(), 0, gen_miller(params)?.0, None)
}

/// Split `seq` into the two level blocks for `bit`; block `a` becomes `A`.
fn parse_level(seq: &[u32], bit: bool, g: usize) -> Option<Vec<u32>> {
    let (block_a, block_b): (Vec<u32>, Vec<u32>) = if bit {
        (
            std::iter::once(A).chain(std::iter::repeat(B).take(g - 1)).collect(),
            std::iter::once(B).chain(std::iter::repeat(A).take(g)).collect(),
        )
    } else {
        (
            std::iter::once(B).chain(std::iter::repeat(A).take(g - 1)).collect(),
            std::iter::once(A).chain(std::iter::repeat(B).take(g)).collect(),
        )
    };
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < seq.len() {
        // the two blocks start with different letters
        let (block, letter) = if seq[pos] == block_a[0] { (&block_a, A) } else { (&block_b, B) };
        if seq.get(pos..pos + block.len())? != block.as_slice() {
            return None;
        }
        out.push(letter);
        pos += block.len();
    }
    Some(out)
}

fn search(seq: &[u32], g: &IntFn, level: usize, deepest: &mut usize, found: &mut Vec<Vec<bool>>) -> Result<()> {
    if seq.len() == 1 {
        found.push(Vec::new());
        return Ok(());
    }
    *deepest = (*deepest).max(level);
    let factor = level_factor(g, level)?;
    for bit in [false, true] {
        if let Some(next) = parse_level(seq, bit, factor) {
            let mut sub = Vec::new();
            search(&next, g, level + 1, deepest, &mut sub)?;
            found.extend(sub.into_iter().map(|mut s| {
                s.insert(0, bit);
                s
            }));
        }
    }
    Ok(())
}

/// Recover `σ` from `a_σ` or `b_σ` by parsing level by level.
pub fn decode_miller(w: &Word, g: &IntFn) -> Result<Vec<bool>> {
    if w.is_empty() || w.iter().any(|&s| s > 1) {
        return Err(Error::invalid("Miller words are non-empty binary words"));
    }
    let mut deepest = 0;
    let mut found = Vec::new();
    search(w, g, 0, &mut deepest, &mut found)?;
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::Decode { step: deepest, detail: "no block structure parses at this level".into() }),
        k => Err(Error::Decode { step: 0, detail: format!("{k} addresses parse the word") }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(g: u64, bits: &str) -> MillerParams {
        MillerParams::new(IntFn::Const(g), bits.chars().map(|c| c == '1').collect()).unwrap()
    }

    fn all_sigmas(depth: usize) -> impl Iterator<Item = String> {
        (0..=depth).flat_map(|d| (0..1u32 << d).map(move |v| (0..d).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect()))
    }

    #[test]
    fn first_level() {
        let (a, b) = miller_pair(&params(3, "0")).unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("011".into(), "1000".into()));
        let (a, b) = miller_pair(&params(3, "1")).unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("100".into(), "0111".into()));
    }

    #[test]
    fn decode_inverts_generation_and_lengths_are_bounded() {
        for g in [3, 4, 5] {
            for s in all_sigmas(6) {
                let p = params(g, &s);
                let (a, b) = miller_pair(&p).unwrap();
                assert_eq!(decode_miller(&b, &p.g).unwrap(), p.sigma, "g={g} σ={s}");
                assert_eq!(decode_miller(&a, &p.g).unwrap(), p.sigma, "g={g} σ={s}");
                let k = s.len();
                let h = miller_h(&p.g, k).unwrap();
                for len in [a.len() as u128, b.len() as u128] {
                    assert!(h <= len && len <= (1u128 << k) * h, "g={g} σ={s}");
                }
            }
        }
    }

    #[test]
    fn a_and_b_start_with_different_letters() {
        for g in [3, 4, 5] {
            for s in all_sigmas(8) {
                let (a, b) = miller_pair(&params(g, &s)).unwrap();
                assert_ne!(a[0], b[0]);
                assert!(!b.starts_with(&a) && !a.starts_with(&b));
            }
        }
    }

    #[test]
    fn non_constant_g_and_bad_input() {
        let g = IntFn::List { start: 0, values: vec![3, 5, 4] };
        let p = MillerParams::new(g.clone(), vec![true, false, true]).unwrap();
        assert_eq!(decode_miller(&gen_miller(&p).unwrap(), &g).unwrap(), p.sigma);
        assert!(MillerParams::new(g, vec![true; 4]).is_err());
        assert!(MillerParams::new(IntFn::Const(2), vec![true]).is_err());
        let err = decode_miller(&Word::from_bits("0110").unwrap(), &IntFn::Const(3)).unwrap_err();
        assert!(matches!(err, Error::Decode { .. }));
    }
}
