use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::index::FactorIndex;
use crate::window::SequenceWindow;
use crate::word::{Symbol, Word};

/// A factorial language, queried one length at a time.
pub trait LanguageOracle {
    /// `L_n`, in lexicographic order.
    fn words(&self, n: usize) -> Result<BTreeSet<Word>>;
}

/// The factors of a window, answerable up to the index's `max_n`.
pub struct WindowLanguage {
    index: FactorIndex,
}

impl WindowLanguage {
    pub fn new(window: &SequenceWindow, max_n: usize) -> Result<Self> {
        Ok(WindowLanguage { index: FactorIndex::build(window, max_n)? })
    }
}

impl LanguageOracle for WindowLanguage {
    fn words(&self, n: usize) -> Result<BTreeSet<Word>> {
        if n > self.index.max_n() {
            return Err(Error::WindowExhausted { step: n, detail: format!("language indexed only up to length {}", self.index.max_n()) });
        }
        self.index.factor_set(n)
    }
}

/// The factors of a finite set of words.
pub struct FiniteLanguage {
    words: Vec<Word>,
}

impl FiniteLanguage {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Self {
        FiniteLanguage { words: words.into_iter().collect() }
    }
}

impl LanguageOracle for FiniteLanguage {
    fn words(&self, n: usize) -> Result<BTreeSet<Word>> {
        Ok(self.words.iter().flat_map(|w| w.windows(n).map(Word::from)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalWord {
    /// `w_1, …, w_depth`.
    pub levels: Vec<Word>,
    /// Set when `L_1` is a single letter: every level is then a power of it.
    pub degenerate: bool,
}

impl CanonicalWord {
    pub fn word(&self) -> &Word {
        self.levels.last().expect("depth ≥ 1")
    }
}

fn covers_twice(cand: &[Symbol], targets: &BTreeSet<Word>, m: usize) -> bool {
    let mut seen: HashMap<&[Symbol], u8> = HashMap::new();
    for w in cand.windows(m) {
        let c = seen.entry(w).or_default();
        *c = (*c + 1).min(2);
    }
    targets.iter().all(|t| seen.get(t.symbols()) == Some(&2))
}

/// `w_1` is the (length, lex)-least word of the language containing every
/// letter twice; `w_{i+1}` the least one containing every word of
/// `L_{|w_i|}` twice and `w_i` exactly in its centre.
pub fn canonical_recurrent_word(language: &dyn LanguageOracle, depth: usize, length_cap: usize) -> Result<CanonicalWord> {
    if depth == 0 {
        return Err(Error::invalid("depth must be at least 1"));
    }
    let letters = language.words(1)?;
    if letters.is_empty() {
        return Err(Error::invalid("empty language"));
    }
    let degenerate = letters.len() == 1;
    let mut levels: Vec<Word> = Vec::new();
    for _ in 0..depth {
        let (m, targets, start, step) = match levels.last() {
            None => (1, letters.clone(), 2 * letters.len(), 1),
            Some(prev) => (prev.len(), language.words(prev.len())?, prev.len() + 2, 2),
        };
        let mut len = start;
        let found = loop {
            if len > length_cap {
                return Err(Error::Resource(format!("no level-{} word up to length {length_cap}", levels.len() + 1)));
            }
            let hit = language.words(len)?.into_iter().find(|c| {
                let centred = match levels.last() {
                    Some(prev) => {
                        let d = (len - prev.len()) / 2;
                        c[d..d + prev.len()] == prev[..]
                    }
                    None => true,
                };
                centred && covers_twice(c, &targets, m)
            });
            if let Some(w) = hit {
                break w;
            }
            len += step;
        };
        levels.push(found);
    }
    Ok(CanonicalWord { levels, degenerate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturmian::{mechanical_window, MechanicalParams};

    fn occurrences(text: &[Symbol], pat: &[Symbol]) -> usize {
        text.windows(pat.len()).filter(|w| *w == pat).count()
    }

    #[test]
    fn sturmian_levels_nest_and_cover() {
        let w = mechanical_window(&MechanicalParams::golden(), 0, 4000).unwrap();
        let lang = WindowLanguage::new(&w, 400).unwrap();
        let c = canonical_recurrent_word(&lang, 3, 400).unwrap();
        assert!(!c.degenerate);
        // level 1 by exhaustive search: least length with both letters twice
        let l1 = &c.levels[0];
        let brute = (1..20)
            .find_map(|n| lang.words(n).unwrap().into_iter().find(|x| occurrences(x, &[0]) >= 2 && occurrences(x, &[1]) >= 2))
            .unwrap();
        assert_eq!(l1, &brute);
        for pair in c.levels.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let d = (b.len() - a.len()) / 2;
            assert_eq!(&b[d..d + a.len()], &a[..]);
            assert_eq!(b.len() - a.len(), 2 * d);
            for t in lang.words(a.len()).unwrap() {
                assert!(occurrences(b, &t) >= 2);
            }
        }
    }

    #[test]
    fn single_letter_language_is_flagged() {
        let lang = FiniteLanguage::new([Word(vec![0; 30])]);
        let c = canonical_recurrent_word(&lang, 2, 100).unwrap();
        assert!(c.degenerate);
        assert_eq!(c.levels[0], Word(vec![0, 0]));
        assert_eq!(c.levels[1], Word(vec![0; 4]));
    }

    #[test]
    fn caps_are_enforced() {
        let w = mechanical_window(&MechanicalParams::golden(), 0, 4000).unwrap();
        let lang = WindowLanguage::new(&w, 400).unwrap();
        assert!(matches!(canonical_recurrent_word(&lang, 3, 10), Err(Error::Resource(_))));
        let short = WindowLanguage::new(&w, 8).unwrap();
        assert!(matches!(canonical_recurrent_word(&short, 3, 1000), Err(Error::WindowExhausted { .. })));
    }
}
