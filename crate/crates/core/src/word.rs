use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Index of a symbol in its [`Alphabet`]; the alphabet order is the index order.
pub type Symbol = u32;

/// A finite, ordered set of symbol tokens.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    tokens: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(tokens: impl IntoIterator<Item = S>) -> Result<Self> {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return Err(Error::invalid("alphabet must be non-empty"));
        }
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() || t == "-" || t.chars().any(char::is_whitespace) {
                return Err(Error::invalid(format!("bad alphabet token {t:?}")));
            }
            if tokens[..i].contains(t) {
                return Err(Error::invalid(format!("duplicate alphabet token {t:?}")));
            }
        }
        if tokens.len() > Symbol::MAX as usize {
            return Err(Error::invalid("alphabet too large"));
        }
        Ok(Alphabet { tokens })
    }

    /// The alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Alphabet { tokens: vec!["0".into(), "1".into()] }
    }

    /// One token per character, e.g. `Alphabet::from_chars("012")`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(String::from))
    }

    /// Parse a comma-separated token list. Commas nested inside `()` or `[]`
    /// belong to the token, so product tokens such as `(1,a)` survive.
    pub fn parse_list(line: &str) -> Result<Self> {
        Alphabet::new(split_top_level(line).into_iter().map(|t| t.trim().to_string()))
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, sym: Symbol) -> &str {
        &self.tokens[sym as usize]
    }

    pub fn symbol(&self, token: &str) -> Option<Symbol> {
        self.tokens.iter().position(|t| t == token).map(|i| i as Symbol)
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        (sym as usize) < self.tokens.len()
    }

    /// Pair alphabet with tokens `(x,y)`; pair `(i, j)` has index `i * |b| + j`.
    pub fn product(a: &Alphabet, b: &Alphabet) -> Alphabet {
        let mut tokens = Vec::with_capacity(a.len() * b.len());
        for x in &a.tokens {
            for y in &b.tokens {
                tokens.push(format!("({x},{y})"));
            }
        }
        Alphabet { tokens }
    }

    fn single_chars(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Render a word: concatenated when every token is one character,
    /// space-separated otherwise.
    pub fn render(&self, word: &[Symbol]) -> String {
        let sep = if self.single_chars() { "" } else { " " };
        word.iter().map(|&s| self.token(s)).collect::<Vec<_>>().join(sep)
    }

    /// Parse a word written as in [`Alphabet::render`].
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        let syms: Option<Vec<Symbol>> = if self.single_chars() && !text.contains(' ') {
            text.chars().map(|c| self.symbol(c.encode_utf8(&mut [0; 4]))).collect()
        } else {
            text.split_whitespace().map(|t| self.symbol(t)).collect()
        };
        syms.map(Word).ok_or_else(|| Error::invalid(format!("word {text:?} uses unknown tokens")))
    }
}

/// Start positions of every occurrence of `pat` in `text` (Knuth–Morris–Pratt).
pub fn occurrences(text: &[Symbol], pat: &[Symbol]) -> Vec<usize> {
    if pat.is_empty() || pat.len() > text.len() {
        return Vec::new();
    }
    let mut fail = vec![0usize; pat.len()];
    let mut k = 0;
    for i in 1..pat.len() {
        while k > 0 && pat[i] != pat[k] {
            k = fail[k - 1];
        }
        if pat[i] == pat[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut out = Vec::new();
    k = 0;
    for (i, &c) in text.iter().enumerate() {
        while k > 0 && c != pat[k] {
            k = fail[k - 1];
        }
        if c == pat[k] {
            k += 1;
        }
        if k == pat.len() {
            out.push(i + 1 - k);
            k = fail[k - 1];
        }
    }
    out
}

pub(crate) fn split_top_level(line: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in line.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&line[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&line[start..]);
    parts
}

/// A finite word over symbol indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Binary word from a string of `0`/`1` characters.
    pub fn from_bits(bits: &str) -> Result<Self> {
        bits.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::invalid(format!("not a bit: {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn extend_from(&mut self, other: &[Symbol]) {
        self.0.extend_from_slice(other);
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        let mut out = Vec::new();
        for p in parts {
            out.extend_from_slice(&p.0);
        }
        Word(out)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Number of occurrences of `s`.
    pub fn count(&self, s: Symbol) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    pub fn is_factor_of(&self, other: &[Symbol]) -> bool {
        self.is_empty() || other.windows(self.len()).any(|w| w == self.0.as_slice())
    }
}

impl Deref for Word {
    type Target = [Symbol];
    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    /// Symbol indices, concatenated; meaningful for alphabets of size ≤ 10.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
