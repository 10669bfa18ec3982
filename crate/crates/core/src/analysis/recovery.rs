use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::index::FactorIndex;
use crate::window::SequenceWindow;
use crate::word::{Symbol, Word};

/// Recover `L_n` from the right-special words of a window, given a bound `m`
/// on `c_{k+1} − c_k`.
///
/// Growing prefixes of the window are scanned for a length `k ≥ n` whose
/// right-special words have degrees summing to `m`; those are then all the
/// right-special words of length `k`. Every other length-`k` word has a
/// forced successor, so following successors from each `s·a` until the walk
/// re-enters that set reaches all of `L_k`. Only the explicit symbols are
/// used. When the window is too short for either phase the result is an
/// error, never a partial set.
pub fn recover_language(window: &SequenceWindow, n: usize, m: usize) -> Result<BTreeSet<Word>> {
    if n == 0 || m == 0 {
        return Err(Error::invalid("n and M must be at least 1"));
    }
    let explicit = SequenceWindow::new(window.alphabet().clone(), window.base(), window.symbols().to_vec(), None)?;
    let (k, special) = find_special_set(&explicit, n, m)?;
    let full = FactorIndex::build(&explicit, k + 1)?;
    let special_words: BTreeSet<&[Symbol]> = special.iter().map(|(w, _)| w.symbols()).collect();
    let mut lk: BTreeSet<Word> = special.iter().map(|(w, _)| w.clone()).collect();
    for (s, exts) in &special {
        for &a in exts {
            let mut u: Vec<Symbol> = s[1..].to_vec();
            u.push(a);
            loop {
                if special_words.contains(u.as_slice()) || !lk.insert(Word(u.clone())) {
                    break;
                }
                let next = match full.extensions(&u).as_deref() {
                    Some([b]) => *b,
                    Some([]) | None => {
                        return Err(Error::WindowExhausted { step: k, detail: format!("no successor for {} inside the window", Word(u)) })
                    }
                    Some(_) => {
                        return Err(Error::invalid(format!("{} is right-special but not in the degree-{m} set; M is too small", Word(u))))
                    }
                };
                u.remove(0);
                u.push(next);
            }
        }
    }
    // every walk stays inside the window, so this detects a missed factor
    if full.factor_count(k)? != lk.len() as u128 {
        return Err(Error::invalid(format!(
            "window factors of length {k} are unreachable from the right-special words (not recurrent at this scale)"
        )));
    }
    Ok(lk.iter().flat_map(|w| w.windows(n).map(Word::from)).collect())
}

type SpecialSet = (usize, Vec<(Word, Vec<Symbol>)>);

/// The first length `k ≥ n`, on the shortest scanned prefix, whose
/// right-special words have total degree `m`; with their extensions.
fn find_special_set(window: &SequenceWindow, n: usize, m: usize) -> Result<SpecialSet> {
    let len = window.len();
    let mut portion = len.min((8 * n).max(64));
    loop {
        let max_k = portion / 4;
        if max_k > n {
            let part = SequenceWindow::new(window.alphabet().clone(), window.base(), window.symbols()[..portion].to_vec(), None)?;
            let idx = FactorIndex::build(&part, max_k)?;
            for k in n..max_k {
                let rs = idx.right_special(k)?;
                if rs.degree_sum > m {
                    return Err(Error::invalid(format!("right-special degrees at length {k} sum to {} > M = {m}", rs.degree_sum)));
                }
                if rs.degree_sum == m {
                    return Ok((k, rs.records.into_iter().map(|r| (r.word, r.extensions)).collect()));
                }
            }
        }
        if portion == len {
            return Err(Error::WindowExhausted { step: n, detail: format!("no length ≥ {n} with right-special degree sum {m}") });
        }
        portion = (2 * portion).min(len);
    }
}
