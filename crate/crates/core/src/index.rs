use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::window::SequenceWindow;
use crate::word::{Alphabet, Symbol, Word};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct State {
    len: u32,
    link: u32,
    /// End position (in the concatenated text) of one occurrence.
    firstpos: u32,
    next: Vec<(Symbol, u32)>,
}

impl State {
    fn get(&self, c: Symbol) -> Option<u32> {
        self.next.iter().find(|&&(s, _)| s == c).map(|&(_, t)| t)
    }

    fn set(&mut self, c: Symbol, to: u32) {
        match self.next.iter_mut().find(|(s, _)| *s == c) {
            Some(slot) => slot.1 = to,
            None => {
                self.next.push((c, to));
                self.next.sort_unstable();
            }
        }
    }
}

/// Online (generalized) suffix automaton.
#[derive(Clone, Debug)]
pub(crate) struct Automaton {
    states: Vec<State>,
}

impl Automaton {
    pub fn new() -> Self {
        Automaton { states: vec![State { len: 0, link: NONE, firstpos: 0, next: Vec::new() }] }
    }

    fn clone_state(&mut self, q: u32, len: u32) -> u32 {
        let mut st = self.states[q as usize].clone();
        st.len = len;
        self.states.push(st);
        (self.states.len() - 1) as u32
    }

    fn redirect(&mut self, mut p: u32, c: Symbol, from: u32, to: u32) {
        while p != NONE && self.states[p as usize].get(c) == Some(from) {
            self.states[p as usize].set(c, to);
            p = self.states[p as usize].link;
        }
    }

    /// Append `c` (at text position `pos`) after state `last`; returns the
    /// new last state. Start each string from state 0.
    pub fn extend(&mut self, last: u32, c: Symbol, pos: u32) -> u32 {
        let last_len = self.states[last as usize].len;
        if let Some(q) = self.states[last as usize].get(c) {
            if self.states[q as usize].len == last_len + 1 {
                return q;
            }
            let clone = self.clone_state(q, last_len + 1);
            self.states[q as usize].link = clone;
            self.redirect(last, c, q, clone);
            return clone;
        }
        self.states.push(State { len: last_len + 1, link: 0, firstpos: pos, next: Vec::new() });
        let cur = (self.states.len() - 1) as u32;
        let mut p = last;
        while p != NONE && self.states[p as usize].get(c).is_none() {
            self.states[p as usize].set(c, cur);
            p = self.states[p as usize].link;
        }
        if p != NONE {
            let q = self.states[p as usize].get(c).expect("transition exists");
            if self.states[p as usize].len + 1 == self.states[q as usize].len {
                self.states[cur as usize].link = q;
            } else {
                let clone = self.clone_state(q, self.states[p as usize].len + 1);
                self.redirect(p, c, q, clone);
                self.states[q as usize].link = clone;
                self.states[cur as usize].link = clone;
            }
        }
        cur
    }

    /// Length of the longest suffix of `state`'s strings that occurs elsewhere.
    pub fn link_len(&self, state: u32) -> usize {
        self.states[self.states[state as usize].link as usize].len as usize
    }
}

/// A right-special factor and its in-window right extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightSpecialRecord {
    pub word: Word,
    pub extensions: Vec<Symbol>,
}

impl RightSpecialRecord {
    /// Number of extensions minus one.
    pub fn degree(&self) -> usize {
        self.extensions.len() - 1
    }
}

/// Right-special factors of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightSpecialReport {
    pub n: usize,
    /// Sorted by word.
    pub records: Vec<RightSpecialRecord>,
    /// Σ (extensions − 1) over the right-special factors.
    pub degree_sum: usize,
    /// Factors with no extension inside the indexed windows (window suffixes).
    pub zero_extension: usize,
}

/// Suffix-automaton index of every factor of one or more windows.
///
/// Several windows over the same alphabet share one (generalized) automaton,
/// so the counts are those of the union of their factor sets. Windows with a
/// left fill are indexed with `max_n` fill symbols prepended.
#[derive(Clone, Debug)]
pub struct FactorIndex {
    windows: Vec<SequenceWindow>,
    text: Vec<Symbol>,
    sam: Automaton,
    max_n: usize,
    /// `counts[n]` for `n in 0..=max_n`.
    counts: Vec<u128>,
}

impl FactorIndex {
    pub fn build(window: &SequenceWindow, max_n: usize) -> Result<Self> {
        Self::build_many(std::slice::from_ref(window), max_n)
    }

    pub fn build_many(windows: &[SequenceWindow], max_n: usize) -> Result<Self> {
        let first = windows.first().ok_or_else(|| Error::invalid("no windows to index"))?;
        if windows.iter().any(|w| w.alphabet() != first.alphabet()) {
            return Err(Error::invalid("windows use different alphabets"));
        }
        let longest = windows.iter().map(SequenceWindow::len).max().unwrap_or(0);
        if max_n == 0 || max_n > longest {
            return Err(Error::invalid(format!("max_n must be in 1..={longest}, got {max_n}")));
        }
        let mut text = Vec::new();
        for w in windows {
            text.extend(w.materialized(max_n));
        }
        if text.len() >= (NONE / 2) as usize {
            return Err(Error::Resource(format!("{} symbols is too many to index", text.len())));
        }
        let mut idx = FactorIndex { windows: windows.to_vec(), text: Vec::new(), sam: Automaton::new(), max_n, counts: Vec::new() };
        let mut pos = 0u32;
        for w in windows {
            let mut last = 0;
            for c in w.materialized(max_n) {
                last = idx.sam.extend(last, c, pos);
                pos += 1;
            }
        }
        idx.text = text;
        idx.counts = idx.count_lengths();
        Ok(idx)
    }

    fn count_lengths(&self) -> Vec<u128> {
        let mut diff = vec![0i128; self.max_n + 2];
        let states = &self.sam.states;
        for st in &states[1..] {
            let lo = states[st.link as usize].len as usize + 1;
            if lo > self.max_n {
                continue;
            }
            let hi = (st.len as usize).min(self.max_n);
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
        let mut acc = 0i128;
        diff.iter()
            .take(self.max_n + 1)
            .map(|d| {
                acc += d;
                acc as u128
            })
            .collect()
    }

    /// States whose length range contains `n`.
    fn states_of_length(&self, n: usize) -> impl Iterator<Item = &State> + '_ {
        let states = &self.sam.states;
        states[1..].iter().filter(move |st| (states[st.link as usize].len as usize) < n && n <= st.len as usize)
    }

    fn word_of(&self, st: &State, n: usize) -> Word {
        let end = st.firstpos as usize + 1;
        Word::from(&self.text[end - n..end])
    }

    fn check_n(&self, n: usize, limit: usize) -> Result<()> {
        if n == 0 || n > limit {
            return Err(Error::invalid(format!("length {n} outside 1..={limit}")));
        }
        Ok(())
    }

    pub fn windows(&self) -> &[SequenceWindow] {
        &self.windows
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.windows[0].alphabet()
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Number of indexed positions, including materialized left fill.
    pub fn indexed_len(&self) -> usize {
        self.text.len()
    }

    /// Shortest explicit window length.
    pub fn min_window_len(&self) -> usize {
        self.windows.iter().map(SequenceWindow::len).min().unwrap_or(0)
    }

    /// Number of distinct factors of length `n` (`1 ≤ n ≤ max_n`).
    pub fn factor_count(&self, n: usize) -> Result<u128> {
        self.check_n(n, self.max_n)?;
        Ok(self.counts[n])
    }

    pub(crate) fn counts(&self) -> &[u128] {
        &self.counts
    }

    /// The distinct factors of length `n`, in lexicographic order.
    pub fn factor_set(&self, n: usize) -> Result<BTreeSet<Word>> {
        self.check_n(n, self.max_n)?;
        Ok(self.states_of_length(n).map(|st| self.word_of(st, n)).collect())
    }

    /// Right-special factors of length `n` (`1 ≤ n < max_n`).
    pub fn right_special(&self, n: usize) -> Result<RightSpecialReport> {
        self.check_n(n, self.max_n.saturating_sub(1))?;
        let mut records = Vec::new();
        let mut zero_extension = 0;
        for st in self.states_of_length(n) {
            match st.next.len() {
                0 => zero_extension += 1,
                1 => {}
                _ => records.push(RightSpecialRecord { word: self.word_of(st, n), extensions: st.next.iter().map(|&(s, _)| s).collect() }),
            }
        }
        records.sort_by(|a, b| a.word.cmp(&b.word));
        let degree_sum = records.iter().map(RightSpecialRecord::degree).sum();
        Ok(RightSpecialReport { n, records, degree_sum, zero_extension })
    }

    fn walk(&self, word: &[Symbol]) -> Option<&State> {
        let states = &self.sam.states;
        let mut st = &states[0];
        for &c in word {
            st = &states[st.get(c)? as usize];
        }
        Some(st)
    }

    /// Whether `word` occurs in some indexed window.
    pub fn contains(&self, word: &[Symbol]) -> bool {
        self.walk(word).is_some()
    }

    /// In-window right extensions of `word`, or `None` if it does not occur.
    pub fn extensions(&self, word: &[Symbol]) -> Option<Vec<Symbol>> {
        self.walk(word).map(|st| st.next.iter().map(|&(s, _)| s).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn window(alpha: u32, syms: Vec<Symbol>, fill: Option<Symbol>) -> SequenceWindow {
        let tokens: Vec<String> = (0..alpha).map(|i| i.to_string()).collect();
        SequenceWindow::new(Alphabet::new(tokens).unwrap(), 0, syms, fill).unwrap()
    }

    /// Brute force: every length-n slice of every materialized window.
    fn brute_factors(ws: &[SequenceWindow], max_n: usize, n: usize) -> BTreeMap<Word, BTreeSet<Symbol>> {
        let mut out: BTreeMap<Word, BTreeSet<Symbol>> = BTreeMap::new();
        for w in ws {
            let t = w.materialized(max_n);
            for i in 0..t.len().saturating_sub(n - 1) {
                let e = out.entry(Word::from(&t[i..i + n])).or_default();
                if let Some(&c) = t.get(i + n) {
                    e.insert(c);
                }
            }
        }
        out
    }

    #[test]
    fn small_examples() {
        let w = window(2, vec![0, 1, 0, 0, 1, 0, 1], None);
        let idx = FactorIndex::build(&w, 7).unwrap();
        assert_eq!(idx.factor_count(1).unwrap(), 2);
        assert_eq!(idx.factor_count(2).unwrap(), 3);
        assert_eq!(idx.factor_count(7).unwrap(), 1);
        assert!(idx.contains(&[0, 0, 1]));
        assert!(!idx.contains(&[1, 1]));
        assert!(FactorIndex::build(&w, 8).is_err());
        assert!(FactorIndex::build(&w, 0).is_err());
    }

    #[test]
    fn left_fill_factors_are_exact() {
        // ω0 . 1 : factors 0^n and 0^{n-1}1
        let w = window(2, vec![1], Some(0));
        let idx = FactorIndex::build(&w, 1).unwrap();
        assert_eq!(idx.factor_count(1).unwrap(), 2);
        let w = window(2, vec![1, 0, 0, 0, 1], Some(0));
        let idx = FactorIndex::build(&w, 3).unwrap();
        let set = idx.factor_set(3).unwrap();
        assert!(set.contains(&Word(vec![0, 0, 0])));
        assert!(set.contains(&Word(vec![0, 0, 1])));
        assert!(set.contains(&Word(vec![0, 1, 0])));
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            alpha in 1u32..4,
            raw in proptest::collection::vec(proptest::collection::vec(0u32..4, 1..40), 1..4),
            fill in proptest::option::of(0u32..4),
            n_frac in 0.0f64..1.0,
        ) {
            let ws: Vec<SequenceWindow> = raw
                .into_iter()
                .map(|v| window(alpha, v.into_iter().map(|s| s % alpha).collect(), fill.map(|f| f % alpha)))
                .collect();
            let longest = ws.iter().map(|w| w.len()).max().unwrap();
            let max_n = 1 + ((longest - 1) as f64 * n_frac) as usize;
            let idx = FactorIndex::build_many(&ws, max_n).unwrap();
            for n in 1..=max_n {
                let brute = brute_factors(&ws, max_n, n);
                prop_assert_eq!(idx.factor_count(n).unwrap(), brute.len() as u128);
                let set = idx.factor_set(n).unwrap();
                prop_assert!(set.iter().eq(brute.keys()));
                if n < max_n {
                    let rs = idx.right_special(n).unwrap();
                    let expect: Vec<_> = brute.iter().filter(|(_, e)| e.len() >= 2).collect();
                    prop_assert_eq!(rs.records.len(), expect.len());
                    for (r, (w, e)) in rs.records.iter().zip(expect) {
                        prop_assert_eq!(&r.word, w);
                        prop_assert!(r.extensions.iter().eq(e.iter()));
                    }
                    let zeros = brute.values().filter(|e| e.is_empty()).count();
                    prop_assert_eq!(rs.zero_extension, zeros);
                    // Σ(deg) = c_{n+1} − c_n + z_n
                    let lhs = rs.degree_sum as i128;
                    let rhs = idx.factor_count(n + 1).unwrap() as i128 - idx.factor_count(n).unwrap() as i128
                        + rs.zero_extension as i128;
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
