use crate::error::{Error, Result};
use crate::index::Automaton;
use crate::word::{Symbol, Word};

/// Tracks the number of distinct length-`n` factors of a growing word.
pub(crate) struct PrefixCounter {
    n: usize,
    sam: Automaton,
    last: u32,
    len: usize,
    distinct: usize,
}

impl PrefixCounter {
    pub fn new(n: usize) -> Self {
        PrefixCounter { n, sam: Automaton::new(), last: 0, len: 0, distinct: 0 }
    }

    /// Append a symbol; returns the updated count.
    pub fn push(&mut self, c: Symbol) -> usize {
        self.last = self.sam.extend(self.last, c, self.len as u32);
        self.len += 1;
        // the length-n suffix is new iff no shorter-or-equal copy occurs earlier
        if self.len >= self.n && self.sam.link_len(self.last) < self.n {
            self.distinct += 1;
        }
        self.distinct
    }

    pub fn distinct(&self) -> usize {
        self.distinct
    }
}

/// The shortest prefix of `w` with exactly `k` distinct factors of length `n`.
pub fn exact_factor_prefix(w: &Word, n: usize, k: usize) -> Result<Word> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("n and k must be positive"));
    }
    let mut counter = PrefixCounter::new(n);
    for (i, &c) in w.iter().enumerate() {
        if counter.push(c) == k {
            return Ok(Word::from(&w[..=i]));
        }
    }
    Err(Error::invalid(format!("word has only {} distinct factors of length {n}, asked for {k}", counter.distinct())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn distinct(w: &[Symbol], n: usize) -> usize {
        if w.len() < n {
            return 0;
        }
        w.windows(n).collect::<BTreeSet<_>>().len()
    }

    #[test]
    fn examples() {
        let a = Alphabet::from_chars("ab").unwrap();
        let w = a.parse_word("aabab").unwrap();
        assert_eq!(a.render(&exact_factor_prefix(&w, 2, 2).unwrap()), "aab");
        assert_eq!(exact_factor_prefix(&w, 2, 1).unwrap().len(), 2);
        assert_eq!(a.render(&exact_factor_prefix(&w, 2, 3).unwrap()), "aaba");
        assert!(exact_factor_prefix(&w, 2, 4).is_err());
        assert!(exact_factor_prefix(&w, 2, 0).is_err());
    }

    proptest! {
        #[test]
        fn shortest_prefix_with_exactly_k(w in proptest::collection::vec(0u32..3, 1..60), n in 1usize..8) {
            let w = Word(w);
            let total = distinct(&w, n);
            for k in 1..=total {
                let p = exact_factor_prefix(&w, n, k).unwrap();
                prop_assert!(w.starts_with(&p));
                prop_assert_eq!(distinct(&p, n), k);
                prop_assert!(distinct(&p[..p.len() - 1], n) < k);
            }
            prop_assert!(exact_factor_prefix(&w, n, total + 1).is_err());
        }
    }
}
