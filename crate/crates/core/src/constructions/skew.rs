use std::collections::BTreeSet;

use super::union::gen_sturmian_union;
use crate::error::{Error, Result};
use crate::index::FactorIndex;
use crate::profile::ComplexityProfile;
use crate::sturmian::MechanicalParams;
use crate::word::{Alphabet, Symbol, Word};

/// The alphabet `{(0,a), (1,a), (1,b)}`: Sturmian letters with every `1`
/// carrying a free label.
pub struct SkewAlphabet;

impl SkewAlphabet {
    pub const ZERO_A: Symbol = 0;
    pub const ONE_A: Symbol = 1;
    pub const ONE_B: Symbol = 2;

    pub fn alphabet() -> Alphabet {
        Alphabet::new(["(0,a)", "(1,a)", "(1,b)"]).expect("fixed tokens")
    }

    /// The underlying Sturmian letter.
    pub fn project(s: Symbol) -> Symbol {
        (s != Self::ZERO_A) as Symbol
    }
}

/// `L_n(S_α)`, read from a window long enough to contain all `n + 1` factors.
pub fn sturmian_language(params: &MechanicalParams, n: usize) -> Result<BTreeSet<Word>> {
    let w = gen_sturmian_union(std::slice::from_ref(params), n)?;
    FactorIndex::build(&w[0], n)?.factor_set(n)
}

/// `c_n(Y) = Σ_{w ∈ L_n(S_α)} 2^{|w|_1}`.
pub fn skew_y_count(params: &MechanicalParams, n: usize) -> Result<u128> {
    if n >= 127 {
        return Err(Error::invalid("skew-Y counts are limited to n < 127"));
    }
    Ok(sturmian_language(params, n)?.iter().map(|w| 1u128 << w.count(1)).sum())
}

/// Every labelling of every Sturmian factor of length `n`.
pub fn skew_y_factor_set(params: &MechanicalParams, n: usize) -> Result<BTreeSet<Word>> {
    let lang = sturmian_language(params, n)?;
    let total: u128 = lang.iter().map(|w| 1u128 << w.count(1).min(100)).sum();
    if total > 1 << 22 {
        return Err(Error::Resource(format!("{total} labelled words of length {n}")));
    }
    let mut out = BTreeSet::new();
    for w in &lang {
        let ones: Vec<usize> = (0..n).filter(|&i| w[i] == 1).collect();
        for labels in 0u64..1 << ones.len() {
            let mut v: Vec<Symbol> = w.iter().map(|_| SkewAlphabet::ZERO_A).collect();
            for (j, &i) in ones.iter().enumerate() {
                v[i] = if labels >> j & 1 == 1 { SkewAlphabet::ONE_B } else { SkewAlphabet::ONE_A };
            }
            out.insert(Word(v));
        }
    }
    Ok(out)
}

pub fn skew_y_profile(params: &MechanicalParams, n_max: usize) -> Result<ComplexityProfile> {
    if n_max == 0 || n_max >= 127 {
        return Err(Error::invalid("n_max must be in 1..127"));
    }
    let w = gen_sturmian_union(std::slice::from_ref(params), n_max)?;
    let idx = FactorIndex::build(&w[0], n_max)?;
    let counts = (1..=n_max).map(|n| Ok(idx.factor_set(n)?.iter().map(|w| 1u128 << w.count(1)).sum())).collect::<Result<Vec<_>>>()?;
    ComplexityProfile::language(counts, "skew-Y")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturmian::mechanical_window;
    use crate::window::SequenceWindow;

    #[test]
    fn length_one_is_the_alphabet() {
        let p = MechanicalParams::golden();
        assert_eq!(skew_y_count(&p, 1).unwrap(), 3);
        let a = SkewAlphabet::alphabet();
        let set: Vec<String> = skew_y_factor_set(&p, 1).unwrap().iter().map(|w| a.render(w)).collect();
        assert_eq!(set.len(), 3);
        assert_eq!(SkewAlphabet::project(SkewAlphabet::ONE_B), 1);
    }

    #[test]
    fn counts_are_sandwiched() {
        let p = MechanicalParams::golden();
        let prof = skew_y_profile(&p, 30).unwrap();
        let alpha = p.alpha.approx();
        for n in 1..=30usize {
            let f = (n as f64 * alpha).floor() as u32;
            let c = prof.c(n).unwrap();
            assert_eq!(c, skew_y_count(&p, n).unwrap());
            assert!((n as u128 + 1) << f <= c && c <= (n as u128 + 1) << (f + 1), "n = {n}");
        }
    }

    #[test]
    fn labelled_window_union_matches_enumeration() {
        // label the 1s of a long Sturmian window with all patterns of a
        // de Bruijn-like pseudo-random source; small n must be complete
        let p = MechanicalParams::golden();
        let base = mechanical_window(&p, 0, 4000).unwrap();
        let mut windows = Vec::new();
        for seed in 0u64..8 {
            let mut x = seed.wrapping_mul(0x9E3779B97F4A7C15) | 1;
            let syms = base
                .symbols()
                .iter()
                .map(|&b| {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    if b == 0 {
                        SkewAlphabet::ZERO_A
                    } else if x & 1 == 0 {
                        SkewAlphabet::ONE_A
                    } else {
                        SkewAlphabet::ONE_B
                    }
                })
                .collect();
            windows.push(SequenceWindow::new(SkewAlphabet::alphabet(), 0, syms, None).unwrap());
        }
        let idx = FactorIndex::build_many(&windows, 6).unwrap();
        for n in 1..=6 {
            assert_eq!(idx.factor_set(n).unwrap(), skew_y_factor_set(&p, n).unwrap());
        }
    }
}
