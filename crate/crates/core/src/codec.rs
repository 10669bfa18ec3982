//! Encoding bit strings as nested central factors of a fixed source sequence.
//!
//! Starting from `w_0 = x(0)`, each bit picks an extension `w_{k+1}` of `w_k`:
//! a factor of `x` in which `w_k` sits exactly in the centre. The extension
//! is built from a word `u = x[p_1 ..= j]` that starts with `w_k`, contains a
//! second (consecutive) occurrence of `w_k` at `p_2`, and ends at the first
//! position `j` where the letters following the two occurrences disagree.
//! Bit 0 means the first occurrence's follower is smaller in the alphabet
//! order, bit 1 means it is larger. Then `w_{k+1} = x[i − d ..= j]` where `i`
//! is the chosen occurrence of `u` and `d = |u| − |w_k|`, so `w_k` is central.
//!
//! The decoder only needs the encoded word: read the central `w_k`, find its
//! next occurrence to the right, compare followers to recover the bit, and
//! re-centre.

use crate::error::{Error, Result};
use crate::window::SequenceWindow;
use crate::word::{occurrences, Alphabet, Symbol, Word};

/// Encoder progress after `depth` bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncoderState {
    pub word: Word,
    /// Inclusive index range of `word` in the source.
    pub span: (i64, i64),
    pub depth: usize,
}

/// Step-by-step encoder over a source window that contains index 0.
#[derive(Clone, Debug)]
pub struct Encoder<'a> {
    source: &'a SequenceWindow,
    state: EncoderState,
}

struct Candidate {
    start: usize,
    len: usize,
}

impl<'a> Encoder<'a> {
    pub fn new(source: &'a SequenceWindow) -> Result<Self> {
        let first =
            source.get(0).filter(|_| source.contains_index(0)).ok_or_else(|| Error::invalid("source window must contain index 0"))?;
        Ok(Encoder { source, state: EncoderState { word: Word(vec![first]), span: (0, 0), depth: 0 } })
    }

    pub fn state(&self) -> &EncoderState {
        &self.state
    }

    pub fn into_word(self) -> Word {
        self.state.word
    }

    fn exhausted(&self, detail: impl Into<String>) -> Error {
        Error::WindowExhausted { step: self.state.depth, detail: detail.into() }
    }

    /// Shortest (then lexicographically least) extension word for `bit`.
    fn candidate(&self, bit: bool) -> Result<Candidate> {
        let x = self.source.symbols();
        let w = &self.state.word;
        let m = w.len();
        let occ = occurrences(x, w);
        if occ.len() < 2 {
            return Err(self.exhausted(format!("fewer than two occurrences of a length-{m} word")));
        }
        let mut diverged = false;
        let mut best: Option<Candidate> = None;
        for k in 0..occ.len() - 1 {
            let (p1, p2) = (occ[k], occ[k + 1]);
            let mut t = 0;
            while p2 + m + t < x.len() && x[p1 + m + t] == x[p2 + m + t] {
                t += 1;
            }
            if p2 + m + t == x.len() {
                continue;
            }
            diverged = true;
            let j = p2 + m + t;
            // exactly two occurrences start before the divergent letter
            if occ.get(k + 2).is_some_and(|&p3| p3 + m <= j) {
                continue;
            }
            if (x[p1 + m + t] > x[p2 + m + t]) != bit {
                continue;
            }
            let cand = Candidate { start: p1, len: j - p1 + 1 };
            let better = match &best {
                None => true,
                Some(b) => cand.len < b.len || (cand.len == b.len && x[cand.start..cand.start + cand.len] < x[b.start..b.start + b.len]),
            };
            if better {
                best = Some(cand);
            }
        }
        match best {
            Some(c) => Ok(c),
            None if !diverged && occ.len() >= 2 => Err(Error::NoDivergence { step: self.state.depth }),
            None => Err(self.exhausted(format!("no extension for bit {} inside the window", bit as u8))),
        }
    }

    /// Append one bit.
    pub fn step(&mut self, bit: bool) -> Result<&EncoderState> {
        let x = self.source.symbols();
        let base = self.source.base();
        let cand = self.candidate(bit)?;
        let u = &x[cand.start..cand.start + cand.len];
        // occurrence of u nearest the origin, non-negative start on ties
        let s =
            occurrences(x, u).into_iter().map(|p| base + p as i64).min_by_key(|&s| (s.unsigned_abs(), s < 0)).expect("candidate occurs");
        let reach = s.abs();
        if base > -reach || self.source.end() < reach + u.len() as i64 {
            return Err(self.exhausted("window does not certify the occurrence nearest the origin"));
        }
        let d = (u.len() - self.state.word.len()) as i64;
        let (lo, hi) = (s - d, s + u.len() as i64 - 1);
        let word =
            self.source.slice(lo, hi + 1).filter(|_| lo >= base).ok_or_else(|| self.exhausted("centred extension leaves the window"))?;
        self.state = EncoderState { word, span: (lo, hi), depth: self.state.depth + 1 };
        Ok(&self.state)
    }
}

/// `w_{|bits|}` for the given source.
pub fn encode(source: &SequenceWindow, bits: &[bool]) -> Result<Word> {
    let mut enc = Encoder::new(source)?;
    for &b in bits {
        enc.step(b)?;
    }
    Ok(enc.into_word())
}

/// Recover `depth` bits from an encoded word (or a central factor of one
/// containing `w_depth`). Symbols compare by their index in `order`.
pub fn decode(encoded: &Word, order: &Alphabet, depth: usize) -> Result<Vec<bool>> {
    let e: &[Symbol] = encoded;
    if let Some(&s) = e.iter().find(|&&s| !order.contains(s)) {
        return Err(Error::invalid(format!("symbol {s} outside the order alphabet")));
    }
    if e.len() % 2 == 0 {
        return Err(Error::Decode { step: 0, detail: format!("even length {} has no centre", e.len()) });
    }
    let mut c = e.len() / 2;
    let mut m = 1;
    let mut bits = Vec::with_capacity(depth);
    for step in 0..depth {
        let fail = |detail: &str| Error::Decode { step, detail: detail.to_string() };
        let w = &e[c..c + m];
        let p2 = occurrences(&e[c + 1..], w).first().map(|&p| p + c + 1).ok_or_else(|| fail("no second occurrence"))?;
        let mut t = 0;
        loop {
            if p2 + m + t >= e.len() {
                return Err(fail("followers never disagree"));
            }
            if e[c + m + t] != e[p2 + m + t] {
                break;
            }
            t += 1;
        }
        bits.push(e[c + m + t] > e[p2 + m + t]);
        let j = p2 + m + t;
        let d = j - (c + m - 1);
        if d > c || c + m + d > e.len() {
            return Err(fail("extension does not fit inside the encoded word"));
        }
        c -= d;
        m += 2 * d;
    }
    Ok(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturmian::{mechanical_window, MechanicalParams};
    use proptest::prelude::*;

    fn golden(lo: i64, hi: i64) -> SequenceWindow {
        mechanical_window(&MechanicalParams::golden(), lo, hi).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn every_short_string_round_trips_with_nesting() {
        let src = golden(-20_000, 20_000);
        for len in 0..=5 {
            for v in 0..1u32 << len {
                let b: Vec<bool> = (0..len).map(|i| v >> (len - 1 - i) & 1 == 1).collect();
                let mut enc = Encoder::new(&src).unwrap();
                let mut prev = enc.state().clone();
                for &bit in &b {
                    let next = enc.step(bit).unwrap().clone();
                    // previous word sits in the centre of the next one
                    let d = (next.word.len() - prev.word.len()) / 2;
                    assert_eq!(next.word.len() % 2, 1);
                    assert_eq!(&next.word[d..d + prev.word.len()], &prev.word[..]);
                    assert_eq!(src.slice(next.span.0, next.span.1 + 1).unwrap(), next.word);
                    prev = next;
                }
                let w = enc.into_word();
                assert_eq!(decode(&w, src.alphabet(), len).unwrap(), b, "bits {b:?}");
            }
        }
    }

    #[test]
    fn prefixes_give_central_factors() {
        let src = golden(-20_000, 20_000);
        let full = encode(&src, &bits("0110")).unwrap();
        for k in 0..4 {
            let w = encode(&src, &bits(&"0110"[..k])).unwrap();
            let d = (full.len() - w.len()) / 2;
            assert_eq!(&full[d..d + w.len()], &w[..]);
            // decoding a central factor yields the prefix
            assert_eq!(decode(&w, src.alphabet(), k).unwrap(), bits(&"0110"[..k]));
        }
    }

    #[test]
    fn periodic_source_has_no_divergence() {
        let syms: Vec<u32> = (0..200).map(|i| (i % 2) as u32).collect();
        let src = SequenceWindow::new(Alphabet::binary(), -100, syms, None).unwrap();
        assert!(matches!(encode(&src, &[true]), Err(Error::NoDivergence { step: 0 })));
    }

    #[test]
    fn small_window_is_exhausted() {
        let src = golden(-40, 40);
        assert!(matches!(encode(&src, &bits("11111")), Err(Error::WindowExhausted { .. })));
        assert!(Encoder::new(&golden(1, 40)).is_err());
    }

    #[test]
    fn malformed_encodings_are_rejected() {
        let a = Alphabet::from_chars("a").unwrap();
        assert!(matches!(decode(&Word(vec![0, 0, 0]), &a, 1), Err(Error::Decode { step: 0, .. })));
        assert!(decode(&Word(vec![0, 0]), &a, 1).is_err());
        assert!(decode(&Word(vec![0, 5, 0]), &Alphabet::binary(), 1).is_err());
        assert_eq!(decode(&Word(vec![1]), &Alphabet::binary(), 0).unwrap(), Vec::<bool>::new());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn encode_decode_identity(b in proptest::collection::vec(any::<bool>(), 0..7)) {
            let src = golden(-60_000, 60_000);
            match encode(&src, &b) {
                Ok(w) => prop_assert_eq!(decode(&w, src.alphabet(), b.len()).unwrap(), b),
                Err(e) => prop_assert!(matches!(e, Error::WindowExhausted { .. }), "{e}"),
            }
        }
    }
}
