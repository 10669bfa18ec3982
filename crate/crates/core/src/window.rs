use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// A finite view `x[base .. base + len)` of a sequence indexed by integers.
///
/// A `left_fill` symbol means the sequence is constant to the left of `base`
/// (the `ω0 . x` shape), so reads left of the window are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceWindow {
    alphabet: Alphabet,
    base: i64,
    symbols: Vec<Symbol>,
    left_fill: Option<Symbol>,
}

impl SequenceWindow {
    pub fn new(alphabet: Alphabet, base: i64, symbols: Vec<Symbol>, left_fill: Option<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::invalid("window must contain at least one symbol"));
        }
        if let Some(bad) = symbols.iter().chain(left_fill.iter()).find(|&&s| !alphabet.contains(s)) {
            return Err(Error::invalid(format!("symbol index {bad} outside alphabet of size {}", alphabet.len())));
        }
        if base.checked_add(symbols.len() as i64).is_none() {
            return Err(Error::invalid("window end overflows i64"));
        }
        Ok(SequenceWindow { alphabet, base, symbols, left_fill })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    /// One past the last explicit index.
    pub fn end(&self) -> i64 {
        self.base + self.symbols.len() as i64
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn left_fill(&self) -> Option<Symbol> {
        self.left_fill
    }

    pub fn contains_index(&self, i: i64) -> bool {
        i >= self.base && i < self.end()
    }

    /// `x(i)`, or `None` outside the known range.
    pub fn get(&self, i: i64) -> Option<Symbol> {
        if i >= self.end() {
            None
        } else if i >= self.base {
            Some(self.symbols[(i - self.base) as usize])
        } else {
            self.left_fill
        }
    }

    /// `x[lo .. hi)` if every index is known.
    pub fn slice(&self, lo: i64, hi: i64) -> Option<Word> {
        if hi < lo {
            return None;
        }
        (lo..hi).map(|i| self.get(i)).collect::<Option<Vec<_>>>().map(Word)
    }

    /// The window of `T^k x`, i.e. `y(i) = x(i + k)`.
    pub fn shift(&self, k: i64) -> SequenceWindow {
        SequenceWindow { base: self.base - k, ..self.clone() }
    }

    /// Explicit symbols preceded by `pad` copies of the left fill (if any).
    pub fn materialized(&self, pad: usize) -> Vec<Symbol> {
        match self.left_fill {
            Some(f) => {
                let mut v = vec![f; pad];
                v.extend_from_slice(&self.symbols);
                v
            }
            None => self.symbols.clone(),
        }
    }

    /// Text form: alphabet line, base, left fill (`-` for none), symbols.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.alphabet.tokens().join(","));
        let _ = writeln!(out, "{}", self.base);
        let _ = writeln!(out, "{}", self.left_fill.map_or("-", |f| self.alphabet.token(f)));
        let body: Vec<&str> = self.symbols.iter().map(|&s| self.alphabet.token(s)).collect();
        let _ = writeln!(out, "{}", body.join(" "));
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let mut next = |n: usize| lines.next().ok_or_else(|| Error::Parse { line: n, msg: "missing line".into() });
        let alphabet = Alphabet::parse_list(next(1)?).map_err(|e| Error::Parse { line: 1, msg: e.to_string() })?;
        let base_line = next(2)?;
        let base: i64 = base_line.trim().parse().map_err(|_| Error::Parse { line: 2, msg: format!("bad base {base_line:?}") })?;
        let fill_line = next(3)?.trim();
        let left_fill = if fill_line == "-" {
            None
        } else {
            Some(
                alphabet
                    .symbol(fill_line)
                    .ok_or_else(|| Error::Parse { line: 3, msg: format!("left fill {fill_line:?} not in alphabet") })?,
            )
        };
        let symbols = next(4)?
            .split_whitespace()
            .map(|t| alphabet.symbol(t).ok_or_else(|| Error::Parse { line: 4, msg: format!("unknown token {t:?}") }))
            .collect::<Result<Vec<_>>>()?;
        if symbols.is_empty() {
            return Err(Error::Parse { line: 4, msg: "empty window".into() });
        }
        SequenceWindow::new(alphabet, base, symbols, left_fill)
    }

    pub fn read(path: &Path) -> Result<Self> {
        SequenceWindow::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn binary(base: i64, bits: &str, fill: Option<Symbol>) -> SequenceWindow {
        SequenceWindow::new(Alphabet::binary(), base, Word::from_bits(bits).unwrap().0, fill).unwrap()
    }

    #[test]
    fn left_fill_reads() {
        let w = binary(0, "101", Some(0));
        assert_eq!(w.get(-1000), Some(0));
        assert_eq!(w.get(2), Some(1));
        assert_eq!(w.get(3), None);
        assert_eq!(binary(0, "101", None).get(-1), None);
    }

    #[test]
    fn text_round_trip() {
        let w = binary(-3, "0110", Some(0));
        assert_eq!(w.to_text(), "0,1\n-3\n0\n0 1 1 0\n");
        assert_eq!(SequenceWindow::parse(&w.to_text()).unwrap(), w);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = SequenceWindow::parse("0,1\n0\n-\n0 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = SequenceWindow::parse("0,1\nx\n-\n0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(SequenceWindow::parse("0,1\n0\n-\n\n").is_err());
    }

    proptest! {
        #[test]
        fn shift_composes(bits in "[01]{1,40}", base in -50i64..50, a in -20i64..20, b in -20i64..20) {
            let w = binary(base, &bits, None);
            prop_assert_eq!(w.shift(a).shift(b), w.shift(a + b));
            let s = w.shift(a);
            for i in w.base()..w.end() {
                prop_assert_eq!(s.get(i - a), w.get(i));
            }
        }
    }
}
