use std::fmt;

use crate::error::{Error, Result};

/// A computable integer function, in a small named-form grammar:
/// `const:C`, `list:a,b,…`, `linear:a,b` (a·n + b), `geom:s,b` (s·b^(n−1)),
/// `pow2` (2^n), `pow2m1` (2^n − 1), `nsqrt` (n·⌈√n⌉), `nlog2` (n·⌈log₂ n⌉).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntFn {
    Const(u64),
    /// Values for arguments `start, start + 1, …`.
    List {
        start: u64,
        values: Vec<u64>,
    },
    Linear {
        a: u64,
        b: u64,
    },
    Geom {
        scale: u64,
        base: u64,
    },
    Pow2,
    Pow2Minus1,
    NCeilSqrt,
    NCeilLog2,
}

fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

fn ceil_log2(n: u64) -> u64 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros() as u64
    }
}

impl IntFn {
    /// Value at `n`, or `None` when undefined or overflowing.
    pub fn eval(&self, n: u64) -> Option<u64> {
        match self {
            IntFn::Const(c) => Some(*c),
            IntFn::List { start, values } => values.get(n.checked_sub(*start)? as usize).copied(),
            IntFn::Linear { a, b } => a.checked_mul(n)?.checked_add(*b),
            IntFn::Geom { scale, base } => scale.checked_mul(base.checked_pow(u32::try_from(n.checked_sub(1)?).ok()?)?),
            IntFn::Pow2 => 1u64.checked_shl(u32::try_from(n).ok()?).filter(|_| n < 64),
            IntFn::Pow2Minus1 => (n < 64).then(|| (1u64 << n) - 1),
            IntFn::NCeilSqrt => n.checked_mul(ceil_sqrt(n)),
            IntFn::NCeilLog2 => n.checked_mul(ceil_log2(n)),
        }
    }

    /// Parse a named form; bare comma lists are lists starting at `list_start`.
    pub fn parse(text: &str, list_start: u64) -> Result<Self> {
        let bad = || Error::invalid(format!("bad function {text:?}"));
        let nums = |s: &str| -> Result<Vec<u64>> { s.split(',').map(|t| t.trim().parse::<u64>().map_err(|_| bad())).collect() };
        let text = text.trim();
        let (name, arg) = text.split_once(':').unwrap_or((text, ""));
        Ok(match name.trim() {
            "const" => IntFn::Const(*nums(arg)?.first().ok_or_else(bad)?),
            "list" => IntFn::List { start: list_start, values: nums(arg)? },
            "linear" | "geom" => {
                let v = nums(arg)?;
                let [x, y] = v[..] else { return Err(bad()) };
                if name == "linear" {
                    IntFn::Linear { a: x, b: y }
                } else {
                    IntFn::Geom { scale: x, base: y }
                }
            }
            "pow2" => IntFn::Pow2,
            "pow2m1" => IntFn::Pow2Minus1,
            "nsqrt" => IntFn::NCeilSqrt,
            "nlog2" => IntFn::NCeilLog2,
            _ if text.chars().next().is_some_and(|c| c.is_ascii_digit()) => IntFn::List { start: list_start, values: nums(text)? },
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for IntFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntFn::Const(c) => write!(f, "const:{c}"),
            IntFn::List { values, .. } => {
                let v: Vec<String> = values.iter().map(u64::to_string).collect();
                write!(f, "list:{}", v.join(","))
            }
            IntFn::Linear { a, b } => write!(f, "linear:{a},{b}"),
            IntFn::Geom { scale, base } => write!(f, "geom:{scale},{base}"),
            IntFn::Pow2 => f.write_str("pow2"),
            IntFn::Pow2Minus1 => f.write_str("pow2m1"),
            IntFn::NCeilSqrt => f.write_str("nsqrt"),
            IntFn::NCeilLog2 => f.write_str("nlog2"),
        }
    }
}

/// Strictly increasing positive gap lengths `m_1 < m_2 < …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapSpec {
    Explicit(Vec<u64>),
    /// `m_i = 2^i − 1`.
    Pow2,
    Custom(IntFn),
}

impl GapSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let g = match IntFn::parse(text, 1)? {
            IntFn::List { values, .. } => GapSpec::Explicit(values),
            IntFn::Pow2Minus1 => GapSpec::Pow2,
            f => GapSpec::Custom(f),
        };
        g.validate(8)?;
        Ok(g)
    }

    /// `m_i` for `i ≥ 1`, or `None` past an explicit list.
    pub fn m(&self, i: usize) -> Option<u64> {
        if i == 0 {
            return None;
        }
        match self {
            GapSpec::Explicit(v) => v.get(i - 1).copied(),
            GapSpec::Pow2 => IntFn::Pow2Minus1.eval(i as u64),
            GapSpec::Custom(f) => f.eval(i as u64),
        }
    }

    /// Check positivity and strict increase on the first `count` values.
    pub fn validate(&self, count: usize) -> Result<()> {
        let mut prev = 0;
        for i in 1..=count {
            let Some(m) = self.m(i) else { break };
            if m <= prev {
                return Err(Error::invalid(format!("gaps must be positive and strictly increasing (m_{i} = {m})")));
            }
            prev = m;
        }
        if self.m(1).is_none() {
            return Err(Error::invalid("empty gap table"));
        }
        Ok(())
    }

    /// The `k` with `m_{k−1} < n ≤ m_k` (`m_0 = 0`).
    pub fn resolve_k(&self, n: u64) -> Result<usize> {
        let mut k = 1;
        loop {
            match self.m(k) {
                Some(m) if n <= m => return Ok(k),
                Some(_) => k += 1,
                None => return Err(Error::invalid(format!("gap table does not resolve k for n = {n}"))),
            }
        }
    }
}

impl fmt::Display for GapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapSpec::Explicit(v) => {
                let v: Vec<String> = v.iter().map(u64::to_string).collect();
                f.write_str(&v.join(","))
            }
            GapSpec::Pow2 => f.write_str("pow2m1"),
            GapSpec::Custom(g) => g.fmt(f),
        }
    }
}

/// A finite stand-in for an arbitrary (possibly non-computable) sequence
/// `s(1), s(2), …`: either a repeating block or an explicit prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandInSequence {
    values: Vec<u32>,
    periodic: bool,
}

impl StandInSequence {
    pub fn periodic(values: Vec<u32>) -> Result<Self> {
        Self::make(values, true)
    }

    pub fn explicit(values: Vec<u32>) -> Result<Self> {
        Self::make(values, false)
    }

    fn make(values: Vec<u32>, periodic: bool) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("stand-in sequence needs at least one value"));
        }
        Ok(StandInSequence { values, periodic })
    }

    /// `periodic:1,2` or `explicit:1,0,1`; without commas every character is
    /// one value (`periodic:12`).
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("bad stand-in sequence {text:?}"));
        let (kind, body) = text.trim().split_once(':').ok_or_else(bad)?;
        let body = body.trim();
        let values: Vec<u32> = if body.contains(',') {
            body.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            body.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_>>()?
        };
        match kind.trim() {
            "periodic" => Self::periodic(values),
            "explicit" => Self::explicit(values),
            _ => Err(bad()),
        }
    }

    /// `s(i)` for `i ≥ 1`.
    pub fn at(&self, i: usize) -> Option<u32> {
        let k = i.checked_sub(1)?;
        if self.periodic {
            Some(self.values[k % self.values.len()])
        } else {
            self.values.get(k).copied()
        }
    }

    /// Number of defined values (`None` when periodic).
    pub fn known_len(&self) -> Option<usize> {
        (!self.periodic).then_some(self.values.len())
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn check_values(&self, allowed: &[u32], what: &str) -> Result<()> {
        match self.values.iter().find(|v| !allowed.contains(v)) {
            Some(v) => Err(Error::invalid(format!("{what}: value {v} not in {allowed:?}"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for StandInSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(u32::to_string).collect();
        write!(f, "{}:{}", if self.periodic { "periodic" } else { "explicit" }, v.join(","))
    }
}
