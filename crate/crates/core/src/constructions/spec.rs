use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_rational::Ratio;

use super::{GapSpec, IntFn, IntermediateParams, IsolatedParams, MillerParams, StandInSequence};
use crate::error::{Error, Result};
use crate::sturmian::{MechanicalParams, RotationNumber};
use crate::word::split_top_level;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConstructionKind {
    SturmianUnion,
    FiniteSet,
    CountableSet,
    CompSlow,
    Miller,
    SeparatedBlocks,
    SparseZ,
    Product,
    SkewY,
    KFold,
    Intermediate,
    IsolatedZ,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 12] = [
        Self::SturmianUnion,
        Self::FiniteSet,
        Self::CountableSet,
        Self::CompSlow,
        Self::Miller,
        Self::SeparatedBlocks,
        Self::SparseZ,
        Self::Product,
        Self::SkewY,
        Self::KFold,
        Self::Intermediate,
        Self::IsolatedZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::SturmianUnion => "sturmian-union",
            Self::FiniteSet => "finite-set",
            Self::CountableSet => "countable-set",
            Self::CompSlow => "comp-slow",
            Self::Miller => "miller",
            Self::SeparatedBlocks => "separated-blocks",
            Self::SparseZ => "sparse-z",
            Self::Product => "product",
            Self::SkewY => "skew-Y",
            Self::KFold => "k-fold",
            Self::Intermediate => "intermediate",
            Self::IsolatedZ => "isolated-z",
        }
    }

    /// Keys the construction reads besides `construction`, `extent` and `n_max`.
    fn keys(self) -> &'static [&'static str] {
        match self {
            Self::SturmianUnion => &["alpha", "alpha.c"],
            Self::FiniteSet | Self::CompSlow => &["gaps", "seq"],
            Self::CountableSet => &["gaps", "seq"],
            Self::Miller => &["g", "depth", "seq"],
            Self::SeparatedBlocks => &["gaps", "seq"],
            Self::SparseZ => &["nseq", "seq"],
            Self::Product => &["gaps", "seq", "nseq"],
            Self::SkewY => &["alpha", "alpha.c"],
            Self::KFold => &["alpha", "alpha.c", "k"],
            Self::Intermediate => &["g", "nseq", "seq"],
            Self::IsolatedZ => &["rseq", "f"],
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "sturmian" {
            return Ok(Self::SturmianUnion);
        }
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown construction {s:?}")))
    }
}

/// How much of a construction to materialise: a count (blocks, exponent,
/// …; meaning depends on the construction) or an index range `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extent {
    Count(u64),
    Range(i64, i64),
}

impl FromStr for Extent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("bad extent {s:?}"));
        match s.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi): (i64, i64) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
                if lo >= hi {
                    return Err(bad());
                }
                Ok(Extent::Range(lo, hi))
            }
            None => s.trim().parse().map(Extent::Count).map_err(|_| bad()),
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Count(c) => write!(f, "{c}"),
            Extent::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

/// A parsed spec file: `key = value` lines, `#` comments, blank lines
/// ignored. Stand-in sequences are numbered keys `seq.1`, `seq.2`, ….
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub extent: Option<Extent>,
    pub n_max: Option<usize>,
    values: BTreeMap<String, String>,
}

impl ConstructionSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: i + 1, msg };
            let (k, v) = line.split_once('=').ok_or_else(|| perr(format!("expected `key = value`, got {line:?}")))?;
            let (k, v) = (k.trim().to_string(), v.trim().to_string());
            if values.insert(k.clone(), v).is_some() {
                return Err(perr(format!("duplicate key {k:?}")));
            }
        }
        let kind: ConstructionKind = values.remove("construction").ok_or_else(|| Error::invalid("missing key `construction`"))?.parse()?;
        let extent = values.remove("extent").map(|v| v.parse()).transpose()?;
        let n_max = values
            .remove("n_max")
            .map(|v| v.parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(|| Error::invalid(format!("bad n_max {v:?}"))))
            .transpose()?;
        for k in values.keys() {
            let base = if k.starts_with("seq.") { "seq" } else { k.as_str() };
            if !kind.keys().contains(&base) {
                return Err(Error::invalid(format!("key {k:?} is not used by {kind}")));
            }
        }
        let spec = ConstructionSpec { kind, extent, n_max, values };
        spec.validate()?;
        Ok(spec)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::invalid(format!("{} needs key `{key}`", self.kind)))
    }

    /// Parse every typed parameter the construction needs.
    fn validate(&self) -> Result<()> {
        use ConstructionKind::*;
        match self.kind {
            SturmianUnion | SkewY => drop(self.mechanical()?),
            KFold => {
                self.mechanical()?;
                self.k()?;
            }
            FiniteSet | CompSlow | CountableSet | SeparatedBlocks => {
                self.gaps()?;
                self.seqs()?;
            }
            Miller => drop(self.miller()?),
            SparseZ => drop(self.nseq()?),
            Product => {
                self.gaps()?;
                self.seqs()?;
                self.nseq()?;
            }
            Intermediate => {
                self.intermediate()?;
                self.seqs()?;
            }
            IsolatedZ => drop(self.isolated()?),
        }
        Ok(())
    }

    /// `gaps`, defaulting to `m_i = 2^i − 1`.
    pub fn gaps(&self) -> Result<GapSpec> {
        self.get("gaps").map_or(Ok(GapSpec::Pow2), GapSpec::parse)
    }

    /// `seq.1`, `seq.2`, … in order; numbering must be contiguous.
    pub fn seqs(&self) -> Result<Vec<StandInSequence>> {
        let mut out = Vec::new();
        while let Some(v) = self.get(&format!("seq.{}", out.len() + 1)) {
            out.push(StandInSequence::parse(v)?);
        }
        let declared = self.values.keys().filter(|k| k.starts_with("seq.")).count();
        if declared != out.len() {
            return Err(Error::invalid("stand-in keys must be seq.1, seq.2, … without gaps"));
        }
        Ok(out)
    }

    /// `alpha` (rotation numbers) with intercepts `alpha.c` (default 0).
    pub fn mechanical(&self) -> Result<Vec<MechanicalParams>> {
        let alphas =
            split_top_level(self.require("alpha")?).into_iter().map(|t| t.trim().parse::<RotationNumber>()).collect::<Result<Vec<_>>>()?;
        let cs: Vec<Ratio<i64>> = match self.get("alpha.c") {
            None => vec![Ratio::from_integer(0); alphas.len()],
            Some(v) => v.split(',').map(parse_ratio).collect::<Result<_>>()?,
        };
        if cs.len() != alphas.len() {
            return Err(Error::invalid(format!("{} intercepts for {} rotation numbers", cs.len(), alphas.len())));
        }
        if let Some(c) = cs.iter().find(|c| **c < Ratio::from_integer(0) || **c >= Ratio::from_integer(1)) {
            return Err(Error::invalid(format!("intercept {c} outside [0,1)")));
        }
        Ok(alphas.into_iter().zip(cs).map(|(a, c)| MechanicalParams::new(a, c)).collect())
    }

    pub fn k(&self) -> Result<u32> {
        let v = self.require("k")?;
        v.parse().ok().filter(|&k| k >= 1).ok_or_else(|| Error::invalid(format!("bad k {v:?}")))
    }

    pub fn nseq(&self) -> Result<Vec<u64>> {
        let v = self.require("nseq")?;
        let n: Vec<u64> =
            v.split(',').map(|t| t.trim().parse().map_err(|_| Error::invalid(format!("bad nseq {v:?}")))).collect::<Result<_>>()?;
        if n.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::invalid("nseq must be strictly increasing"));
        }
        Ok(n)
    }

    /// `g` (values from level 0), `depth`, and `σ` = the first `depth`
    /// values of `seq.1` (default all zeros).
    pub fn miller(&self) -> Result<MillerParams> {
        let g = IntFn::parse(self.require("g")?, 0)?;
        let depth: usize = self.require("depth")?.parse().map_err(|_| Error::invalid("bad depth"))?;
        let sigma = match self.seqs()?.first() {
            None => vec![false; depth],
            Some(s) => {
                s.check_values(&[0, 1], "miller address")?;
                (1..=depth)
                    .map(|i| s.at(i).map(|v| v == 1).ok_or_else(|| Error::invalid(format!("seq.1 has no value at {i}"))))
                    .collect::<Result<_>>()?
            }
        };
        MillerParams::new(g, sigma)
    }

    pub fn intermediate(&self) -> Result<IntermediateParams> {
        IntermediateParams::new(IntFn::parse(self.require("g")?, 1)?, self.nseq()?)
    }

    /// `rseq` (rationals) with block lengths `f(1), …, f(|rseq|)`.
    pub fn isolated(&self) -> Result<IsolatedParams> {
        let r: Vec<Ratio<i64>> = self.require("rseq")?.split(',').map(parse_ratio).collect::<Result<_>>()?;
        let f = IntFn::parse(self.require("f")?, 1)?;
        let fv = (1..=r.len() as u64)
            .map(|i| f.eval(i).ok_or_else(|| Error::invalid(format!("f({i}) is undefined"))))
            .collect::<Result<Vec<_>>>()?;
        IsolatedParams::new(r, fv)
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>> {
    let s = s.trim();
    s.parse().map_err(|_| Error::invalid(format!("bad rational {s:?}")))
}
