use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use super::rotation::RotationNumber;
use crate::error::{Error, Result};
use crate::window::SequenceWindow;
use crate::word::Alphabet;

/// Slope and intercept of a mechanical word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MechanicalParams {
    pub alpha: RotationNumber,
    pub intercept: Ratio<i64>,
}

impl MechanicalParams {
    pub fn new(alpha: RotationNumber, intercept: Ratio<i64>) -> Self {
        MechanicalParams { alpha, intercept }
    }

    pub fn golden() -> Self {
        MechanicalParams::new(RotationNumber::golden(), Ratio::from_integer(0))
    }

    /// Largest `hi ≤ max_hi` such that `[lo, hi)` can be certified.
    pub fn certified_end(&self, lo: i64, max_hi: i64) -> i64 {
        let mut oracle = FloorOracle::new(&self.alpha, self.intercept);
        let mut hi = lo;
        // bit i needs floors at i and i + 1
        if oracle.floor(lo).is_none() {
            return lo;
        }
        while hi < max_hi && oracle.floor(hi + 1).is_some() {
            hi += 1;
        }
        hi
    }
}

/// Certified `⌊nα + c⌋`.
///
/// `α` is known to lie strictly between `p_j/q_j` and the mediant
/// `(p_j + p_{j−1})/(q_j + q_{j−1})`; since `nα + c` is never an integer for
/// `n ≠ 0`, the floor is certified once no integer separates the two images.
/// The depth `j` only ever increases.
#[derive(Clone, Debug)]
pub struct FloorOracle {
    alpha: RotationNumber,
    cn: BigInt,
    cd: BigInt,
    depth: usize,
    prev: (BigInt, BigInt),
    cur: (BigInt, BigInt),
    small: Option<[(i128, i128); 2]>,
}

const MAX_DEPTH: usize = 20_000;

impl FloorOracle {
    pub fn new(alpha: &RotationNumber, intercept: Ratio<i64>) -> Self {
        let a1 = alpha.quotient(1).expect("at least one quotient");
        let mut o = FloorOracle {
            alpha: alpha.clone(),
            cn: BigInt::from(*intercept.numer()),
            cd: BigInt::from(*intercept.denom()),
            depth: 1,
            prev: (BigInt::zero(), BigInt::one()),
            cur: (BigInt::one(), BigInt::from(a1)),
            small: None,
        };
        o.refresh_small();
        o
    }

    /// The two sandwich endpoints as `(numerator, denominator)` of `nα + c`
    /// evaluated at `α = p/q`, with denominator `q·cd`.
    fn endpoints(&self) -> [(BigInt, BigInt); 2] {
        let (p0, q0) = &self.prev;
        let (p1, q1) = &self.cur;
        [(p1.clone(), q1.clone()), (p1 + p0, q1 + q0)]
    }

    fn refresh_small(&mut self) {
        let to = |x: &BigInt| x.to_i128().filter(|v| v.unsigned_abs() < 1 << 60);
        let e = self.endpoints();
        self.small = (|| Some([(to(&e[0].0)?, to(&e[0].1)?), (to(&e[1].0)?, to(&e[1].1)?)]))();
    }

    fn deepen(&mut self) -> bool {
        if self.depth >= MAX_DEPTH {
            return false;
        }
        let Some(a) = self.alpha.quotient(self.depth + 1) else { return false };
        let a = BigInt::from(a);
        let next = (&a * &self.cur.0 + &self.prev.0, &a * &self.cur.1 + &self.prev.1);
        self.prev = std::mem::replace(&mut self.cur, next);
        self.depth += 1;
        self.refresh_small();
        true
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    fn try_small(&self, n: i64) -> Option<Option<i64>> {
        let ends = self.small?;
        let cn = self.cn.to_i128()?;
        let cd = self.cd.to_i128()?;
        let mut f = [(0i128, false); 2];
        for (k, &(p, q)) in ends.iter().enumerate() {
            let num = (n as i128).checked_mul(p)?.checked_mul(cd)?.checked_add(cn.checked_mul(q)?)?;
            let den = q.checked_mul(cd)?;
            f[k] = (num.div_euclid(den), num.rem_euclid(den) == 0);
        }
        Some(certify(f[0], f[1]).map(|v| v as i64))
    }

    fn try_big(&self, n: i64) -> Option<i64> {
        let n = BigInt::from(n);
        let mut f = [(0i128, false); 2];
        for (k, (p, q)) in self.endpoints().iter().enumerate() {
            let num = &n * p * &self.cd + &self.cn * q;
            let den = q * &self.cd;
            let (d, r) = num.div_mod_floor(&den);
            f[k] = (d.to_i128()?, r.is_zero());
        }
        certify(f[0], f[1]).map(|v| v as i64)
    }

    /// `⌊nα + c⌋`, deepening as needed; `None` when the quotients run out.
    pub fn floor(&mut self, n: i64) -> Option<i64> {
        loop {
            let got = match self.try_small(n) {
                Some(r) => r,
                None => self.try_big(n),
            };
            if got.is_some() {
                return got;
            }
            if !self.deepen() {
                return None;
            }
        }
    }
}

/// Floor of every point strictly between two images, given each image's
/// floor and whether it is an exact integer.
fn certify(a: (i128, bool), b: (i128, bool)) -> Option<i128> {
    if a.0 == b.0 {
        return Some(a.0);
    }
    let (lo, hi) = if a.0 < b.0 { (a, b) } else { (b, a) };
    (hi.0 == lo.0 + 1 && hi.1).then_some(lo.0)
}

/// The mechanical word on indices `[lo, hi)`, over the alphabet `{0, 1}`.
pub fn mechanical_window(params: &MechanicalParams, lo: i64, hi: i64) -> Result<SequenceWindow> {
    if hi <= lo {
        return Err(Error::invalid(format!("empty index range [{lo}, {hi})")));
    }
    let mut oracle = FloorOracle::new(&params.alpha, params.intercept);
    let mut prev = oracle.floor(lo).ok_or(Error::InsufficientPrecision { index: lo })?;
    let mut bits = Vec::with_capacity((hi - lo) as usize);
    for n in lo..hi {
        let next = oracle.floor(n + 1).ok_or(Error::InsufficientPrecision { index: n })?;
        let bit = next - prev;
        debug_assert!(bit == 0 || bit == 1);
        bits.push(bit as u32);
        prev = next;
    }
    SequenceWindow::new(Alphabet::binary(), lo, bits, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceRow {
    pub n: usize,
    pub min_ones: usize,
    pub max_ones: usize,
    /// Certified `⌊nα⌋`.
    pub floor_n_alpha: i64,
}

/// Number of `1`s over all length-`n` factors of a binary window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub rows: Vec<BalanceRow>,
}

impl BalanceReport {
    /// Every length has factor weights differing by at most one.
    pub fn balanced(&self) -> bool {
        self.rows.iter().all(|r| r.max_ones - r.min_ones <= 1)
    }

    /// Lengths with a factor weight outside `{⌊nα⌋, ⌊nα⌋ + 1}`.
    pub fn violations(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| (r.min_ones as i64) < r.floor_n_alpha || r.max_ones as i64 > r.floor_n_alpha + 1).map(|r| r.n).collect()
    }
}

/// Weights of every length-`n` factor, checked against `⌊nα⌋`.
pub fn balance_report(window: &SequenceWindow, params: &MechanicalParams, n_max: usize) -> Result<BalanceReport> {
    if window.alphabet().len() != 2 {
        return Err(Error::invalid("balance needs a binary window"));
    }
    let s = window.symbols();
    if n_max == 0 || n_max > s.len() {
        return Err(Error::invalid(format!("n_max must be in 1..={}", s.len())));
    }
    let mut oracle = FloorOracle::new(&params.alpha, Ratio::from_integer(0));
    let mut prefix = vec![0usize; s.len() + 1];
    for (i, &b) in s.iter().enumerate() {
        prefix[i + 1] = prefix[i] + (b == 1) as usize;
    }
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let ones = (0..=s.len() - n).map(|i| prefix[i + n] - prefix[i]);
        let (min_ones, max_ones) = ones.fold((usize::MAX, 0), |(lo, hi), k| (lo.min(k), hi.max(k)));
        let floor_n_alpha = oracle.floor(n as i64).ok_or(Error::InsufficientPrecision { index: n as i64 })?;
        rows.push(BalanceRow { n, min_ones, max_ones, floor_n_alpha });
    }
    Ok(BalanceReport { rows })
}
