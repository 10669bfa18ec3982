use std::fmt::{self, Write as _};

use num_rational::Ratio;

use crate::constructions::{miller_h, GapSpec, IntFn};
use crate::error::{Error, Result};
use crate::profile::{ComplexityProfile, Provenance};
use crate::sturmian::{FloorOracle, MechanicalParams};

/// A named complexity bound. Upper bounds are checked against window counts
/// for `n ≤ trusted_n`; lower bounds only where the profile is certified to
/// contain the witnessing factors (or is an exact language count).
#[derive(Clone, Debug)]
pub enum BoundCheck {
    /// `c_n < (2n + 1) + 4tn`.
    FiniteSet { t: u64 },
    /// `c_n ≤ (4k + 6)n` with `m_{k−1} < n ≤ m_k`.
    CountableSet { gaps: GapSpec },
    /// `c_n ≤ 2^k · 6n` with `m_{k−1} < n ≤ m_k`.
    CompSlow { gaps: GapSpec },
    /// `c_n ≤ (4j + 4) 4^k h(k)` with `h(k) ≤ n < h(k+1)`, `j = ⌊n / h(k)⌋`;
    /// `coarse` uses the weaker `2^{2k+3} n` instead.
    Miller { g: IntFn, coarse: bool },
    /// `c_n ≥ 2^{⌈n/k⌉}` with `m_{k−1} < n ≤ m_k`.
    SeparatedLower { gaps: GapSpec },
    /// `c_n ≥ 2^k` for `n_k ≤ n < n_{k+1}`.
    SparseLower { n_seq: Vec<u64> },
    /// `g(n_k) ≤ c_{n_k} < g(n_k) + 6n_k`, only at `n = n_k`.
    Intermediate { g: IntFn, n_seq: Vec<u64> },
    /// `(n+1)^k 2^{k⌊nα⌋} ≤ c_n ≤ (n+1)^k 2^{k(⌊nα⌋+1)}` (k-fold skew product).
    SkewY { alpha: MechanicalParams, k: u32 },
    /// `c_n ≤ tn + c`.
    StrongLinear { t: u64, c: u64 },
    /// `min (c_n − tn) ≤ c` over the upper half of the trusted range.
    WeakLinear { t: u64, c: i128 },
    /// Expects `c_n > n` throughout (aperiodic) or some `c_n ≤ n` (periodic).
    MorseHedlund { expect_aperiodic: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Upper,
    Lower,
    Sandwich,
    Classifier,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
            Direction::Sandwich => "sandwich",
            Direction::Classifier => "classifier",
        })
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundCheck::FiniteSet { t } => write!(f, "finite-set(t={t})"),
            BoundCheck::CountableSet { gaps } => write!(f, "countable-set(gaps={gaps})"),
            BoundCheck::CompSlow { gaps } => write!(f, "comp-slow(gaps={gaps})"),
            BoundCheck::Miller { g, coarse: false } => write!(f, "miller(g={g})"),
            BoundCheck::Miller { g, coarse: true } => write!(f, "miller-coarse(g={g})"),
            BoundCheck::SeparatedLower { gaps } => write!(f, "separated-lower(gaps={gaps})"),
            BoundCheck::SparseLower { n_seq } => write!(f, "sparse-lower(nseq={})", join(n_seq)),
            BoundCheck::Intermediate { g, n_seq } => write!(f, "intermediate(g={g};nseq={})", join(n_seq)),
            BoundCheck::SkewY { alpha, k } => write!(f, "skew-Y(alpha={};k={k})", alpha.alpha),
            BoundCheck::StrongLinear { t, c } => write!(f, "strong-linear(t={t};C={c})"),
            BoundCheck::WeakLinear { t, c } => write!(f, "weak-linear(t={t};C={c})"),
            BoundCheck::MorseHedlund { expect_aperiodic } => {
                write!(f, "morse-hedlund(expect={})", if *expect_aperiodic { "aperiodic" } else { "periodic" })
            }
        }
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// A bound value; `None` is +∞.
type Limit = Option<u128>;

fn pow2(e: u128) -> Limit {
    (e < 128).then(|| 1u128 << e)
}

fn mul(a: Limit, b: Limit) -> Limit {
    a?.checked_mul(b?)
}

impl BoundCheck {
    pub fn direction(&self) -> Direction {
        match self {
            BoundCheck::FiniteSet { .. }
            | BoundCheck::CountableSet { .. }
            | BoundCheck::CompSlow { .. }
            | BoundCheck::Miller { .. }
            | BoundCheck::StrongLinear { .. } => Direction::Upper,
            BoundCheck::SeparatedLower { .. } | BoundCheck::SparseLower { .. } => Direction::Lower,
            BoundCheck::Intermediate { .. } | BoundCheck::SkewY { .. } => Direction::Sandwich,
            BoundCheck::WeakLinear { .. } | BoundCheck::MorseHedlund { .. } => Direction::Classifier,
        }
    }

    /// `(lower, upper)` at `n`, both inclusive; `None` when the check says
    /// nothing at this length.
    fn limits(&self, n: usize, floors: &mut Option<FloorOracle>) -> Result<Option<(Option<Limit>, Option<Limit>)>> {
        let nn = n as u128;
        let upper = |v: Limit| Ok(Some((None, Some(v))));
        match self {
            BoundCheck::FiniteSet { t } => upper(Some(2 * nn + 4 * *t as u128 * nn)),
            BoundCheck::CountableSet { gaps } => {
                let k = gaps.resolve_k(n as u64)? as u128;
                upper(Some((4 * k + 6) * nn))
            }
            BoundCheck::CompSlow { gaps } => {
                let k = gaps.resolve_k(n as u64)? as u128;
                upper(mul(pow2(k), Some(6 * nn)))
            }
            BoundCheck::Miller { g, coarse } => {
                let mut k = 0;
                while miller_h(g, k + 1)? <= nn {
                    k += 1;
                }
                let h = miller_h(g, k)?;
                if *coarse {
                    upper(mul(pow2(2 * k as u128 + 3), Some(nn)))
                } else {
                    let j = nn / h;
                    upper(mul(mul(Some(4 * j + 4), pow2(2 * k as u128)), Some(h)))
                }
            }
            BoundCheck::SeparatedLower { gaps } => {
                let k = gaps.resolve_k(n as u64)?;
                Ok(Some((Some(pow2(n.div_ceil(k) as u128)), None)))
            }
            BoundCheck::SparseLower { n_seq } => {
                let k = n_seq.iter().take_while(|&&p| p as usize <= n).count();
                Ok(Some((Some(pow2(k as u128)), None)))
            }
            BoundCheck::Intermediate { g, n_seq } => {
                if !n_seq.contains(&(n as u64)) {
                    return Ok(None);
                }
                let gn = g.eval(n as u64).ok_or_else(|| Error::invalid(format!("g({n}) is undefined")))? as u128;
                Ok(Some((Some(Some(gn)), Some(Some(gn + 6 * nn - 1)))))
            }
            BoundCheck::SkewY { alpha, k } => {
                let oracle = floors.get_or_insert_with(|| FloorOracle::new(&alpha.alpha, Ratio::from_integer(0)));
                let f = oracle.floor(n as i64).ok_or(Error::InsufficientPrecision { index: n as i64 })? as u128;
                let base = (nn + 1).checked_pow(*k);
                let k = *k as u128;
                Ok(Some((Some(mul(base, pow2(k * f))), Some(mul(base, pow2(k * (f + 1)))))))
            }
            BoundCheck::StrongLinear { t, c } => upper(Some(*t as u128 * nn + *c as u128)),
            BoundCheck::WeakLinear { .. } | BoundCheck::MorseHedlund { .. } => Ok(None),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub n: usize,
    pub c: u128,
    /// Applied lower limit (`None` inside: +∞).
    pub lower: Option<Limit>,
    pub upper: Option<Limit>,
    /// Distance to the nearest applied limit; `None` when it is infinite.
    pub margin: Option<i128>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub check: String,
    pub direction: Direction,
    pub rows: Vec<BoundRow>,
    pub passed: bool,
    pub first_violation: Option<usize>,
    pub notes: Vec<String>,
    diffs: Vec<i128>,
}

fn certified_upto(profile: &ComplexityProfile) -> usize {
    match (profile.provenance(), profile.certificate()) {
        (Provenance::Language(_), _) => profile.n_max(),
        (_, Some(c)) => c.max_n.min(profile.n_max()),
        _ => 0,
    }
}

/// Evaluate `check` at every applicable length of `profile`.
pub fn verify_bound(profile: &ComplexityProfile, check: &BoundCheck) -> Result<BoundReport> {
    let trusted = profile.trusted_n();
    let certified = certified_upto(profile);
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    let mut floors = None;
    match check {
        BoundCheck::WeakLinear { t, c } => {
            for n in 1..=trusted {
                let v = profile.c(n).unwrap() as i128 - (*t as i128) * n as i128;
                rows.push(BoundRow { n, c: profile.c(n).unwrap(), lower: None, upper: None, margin: Some(c - v), pass: v <= *c });
            }
            let half = &rows[rows.len() / 2..];
            let passed = !half.is_empty() && half.iter().any(|r| r.pass);
            notes.push(format!("checked min over n in {}..={trusted}", half.first().map_or(0, |r| r.n)));
            let first_violation = (!passed).then(|| half.first().map_or(0, |r| r.n));
            return Ok(report(check, rows, passed, first_violation, notes, profile));
        }
        BoundCheck::MorseHedlund { expect_aperiodic } => {
            for n in 1..=trusted {
                let c = profile.c(n).unwrap();
                let margin = c as i128 - n as i128;
                rows.push(BoundRow { n, c, lower: None, upper: None, margin: Some(margin), pass: (margin > 0) == *expect_aperiodic });
            }
            let witness = rows.iter().find(|r| r.margin.unwrap() <= 0).map(|r| r.n);
            let passed = trusted > 0 && (witness.is_none() == *expect_aperiodic);
            let first_violation = match (passed, witness) {
                (true, _) => None,
                (false, Some(w)) => Some(w),
                (false, None) => Some(trusted),
            };
            return Ok(report(check, rows, passed, first_violation, notes, profile));
        }
        _ => {}
    }
    let has_lower = matches!(check.direction(), Direction::Lower | Direction::Sandwich);
    if has_lower && certified == 0 {
        notes.push("no containment certificate: lower bound not asserted".into());
    }
    let upto = if has_lower { trusted.max(certified) } else { trusted };
    for n in 1..=upto {
        let Some((lo, hi)) = check.limits(n, &mut floors)? else { continue };
        let lo = lo.filter(|_| n <= certified);
        let hi = hi.filter(|_| n <= trusted);
        if lo.is_none() && hi.is_none() {
            continue;
        }
        let c = profile.c(n).unwrap();
        let mut margin: Option<i128> = None;
        let mut pass = true;
        let mut widen = |m: Option<i128>| {
            margin = match (margin, m) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            }
        };
        if let Some(l) = lo {
            match l {
                Some(l) => {
                    pass &= c >= l;
                    widen(Some(c as i128 - l as i128));
                }
                None => pass = false,
            }
        }
        if let Some(Some(h)) = hi {
            pass &= c <= h;
            widen(Some(h as i128 - c as i128));
        }
        rows.push(BoundRow { n, c, lower: lo, upper: hi, margin, pass });
    }
    if rows.is_empty() {
        notes.push("no applicable lengths".into());
    }
    let first_violation = rows.iter().find(|r| !r.pass).map(|r| r.n);
    let passed = first_violation.is_none() && !rows.is_empty();
    Ok(report(check, rows, passed, first_violation, notes, profile))
}

fn report(
    check: &BoundCheck,
    rows: Vec<BoundRow>,
    passed: bool,
    first_violation: Option<usize>,
    notes: Vec<String>,
    profile: &ComplexityProfile,
) -> BoundReport {
    BoundReport { check: check.to_string(), direction: check.direction(), rows, passed, first_violation, notes, diffs: profile.diffs() }
}

fn show(l: Limit) -> String {
    l.map_or_else(|| "inf".into(), |v| v.to_string())
}

impl BoundReport {
    /// `n,c_n,diff,bound,margin`. The bound is the nearer applied limit;
    /// sandwich rows give `lo..hi`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,c_n,diff,bound,margin\n");
        for r in &self.rows {
            let diff = self.diffs.get(r.n - 1).map_or(String::new(), i128::to_string);
            let bound = match (r.lower, r.upper) {
                (Some(l), Some(h)) => format!("{}..{}", show(l), show(h)),
                (Some(l), None) => show(l),
                (None, Some(h)) => show(h),
                (None, None) => String::new(),
            };
            let margin = r.margin.map_or_else(|| "inf".into(), |m| m.to_string());
            writeln!(out, "{},{},{},{},{}", r.n, r.c, diff, bound, margin).expect("write to string");
        }
        out
    }

    /// Key–value summary in a fixed key order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let min_margin = self.rows.iter().filter_map(|r| r.margin).min();
        writeln!(out, "check: {}", self.check).unwrap();
        writeln!(out, "direction: {}", self.direction).unwrap();
        writeln!(out, "result: {}", if self.passed { "pass" } else { "fail" }).unwrap();
        writeln!(out, "rows: {}", self.rows.len()).unwrap();
        writeln!(out, "first_violation: {}", self.first_violation.map_or("none".into(), |n| n.to_string())).unwrap();
        writeln!(out, "min_margin: {}", min_margin.map_or("inf".into(), |m| m.to_string())).unwrap();
        for note in &self.notes {
            writeln!(out, "note: {note}").unwrap();
        }
        out
    }
}
