use super::prefix::PrefixCounter;
use super::{check_budget, IntFn, NumericAlphabet, StandInSequence};
use crate::error::{Error, Result};
use crate::profile::ContainmentCertificate;
use crate::window::SequenceWindow;
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct IntermediateParams {
    pub g: IntFn,
    pub n_seq: Vec<u64>,
}

impl IntermediateParams {
    /// Checks `n_k | n_{k+1}`, `g(n_k) < 2^{n_k}`,
    /// `g(n_{k+1}) < 2^{n_{k+1}/n_k}` and the separation
    /// `n_k > 2^k Σ_{i<k} n_i (2 + 2^{n_i})` that keeps words reaching back
    /// before `p_k` below `n_k`, naming the first one that fails.
    pub fn new(g: IntFn, n_seq: Vec<u64>) -> Result<Self> {
        if n_seq.is_empty() || n_seq[0] == 0 {
            return Err(Error::invalid("n_seq must be non-empty and positive"));
        }
        let pow2_gt = |e: u64, v: u64| e >= 64 || v < 1u64 << e;
        for (k, &n) in n_seq.iter().enumerate() {
            let gk = g.eval(n).ok_or_else(|| Error::invalid(format!("g({n}) is undefined")))?;
            if gk == 0 {
                return Err(Error::invalid(format!("g(n_{}) = 0", k + 1)));
            }
            if !pow2_gt(n, gk) {
                return Err(Error::invalid(format!("violates g(n_{k}) < 2^n_{k}: g({n}) = {gk} ≥ 2^{n}", k = k + 1)));
            }
            if k > 0 {
                let prev = n_seq[k - 1];
                if n % prev != 0 {
                    return Err(Error::invalid(format!("violates n_{k} | n_{}: {prev} ∤ {n}", k + 1)));
                }
                if !pow2_gt(n / prev, gk) {
                    return Err(Error::invalid(format!("violates g(n_{}) < 2^(n_{}/n_{k}): g({n}) = {gk} ≥ 2^{}", k + 1, k + 1, n / prev)));
                }
                let reach = n_seq[..k]
                    .iter()
                    .try_fold(0u128, |acc, &m| {
                        let p = 1u128.checked_shl(u32::try_from(m).ok()?).filter(|_| m < 127)?;
                        acc.checked_add((m as u128).checked_mul(p + 2)?)
                    })
                    .and_then(|s| s.checked_shl(k as u32 + 1).filter(|_| s.leading_zeros() > k as u32));
                if reach.map_or(true, |r| n as u128 <= r) {
                    let shown = reach.map_or_else(|| "overflow".to_string(), |r| r.to_string());
                    return Err(Error::invalid(format!("violates n_{k1} > 2^{k1} Σ_{{i<{k1}}} n_i(2 + 2^n_i): {n} ≤ {shown}", k1 = k + 1)));
                }
            }
        }
        Ok(IntermediateParams { g, n_seq })
    }

    pub fn g_at(&self, k: usize) -> u64 {
        self.g.eval(self.n_seq[k - 1]).expect("validated")
    }
}

#[derive(Clone, Debug)]
pub struct IntermediateBuild {
    pub windows: Vec<SequenceWindow>,
    /// `p_1, …, p_K` over the alphabet `{0,1,2,4,5}` (symbol indices).
    pub prefixes: Vec<Word>,
    pub certificate: ContainmentCertificate,
}

/// The blocks whose concatenation is `w_k`, generated lazily in
/// lexicographic order: all of `{1,2}^{n_1}` for `k = 1`, otherwise every
/// `0^{n_{k−1}−1} ℓ_1 … 0^{n_{k−1}−1} ℓ_r` with `ℓ ∈ {1,2}^r`.
fn w_blocks(params: &IntermediateParams, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let (len, stride) = if k == 1 { (params.n_seq[0], 1) } else { (params.n_seq[k - 1] / params.n_seq[k - 2], params.n_seq[k - 2]) };
    let count = if len >= 64 { u64::MAX } else { 1u64 << len };
    (0..count).map(move |code| {
        let mut block = Vec::with_capacity((len * stride) as usize);
        for i in (0..len).rev() {
            block.extend(std::iter::repeat(0).take(stride as usize - 1));
            let bit = if i >= 64 { 0 } else { code >> i & 1 };
            block.push(1 + bit as u32);
        }
        block
    })
}

/// Shortest prefix of `w_k` with exactly `g(n_k)` distinct `n_k`-factors
/// (values, not symbols).
fn prefix_value(params: &IntermediateParams, k: usize, budget: usize) -> Result<Vec<u32>> {
    let n = params.n_seq[k - 1] as usize;
    let target = params.g_at(k) as usize;
    let mut counter = PrefixCounter::new(n);
    let mut out = Vec::new();
    for block in w_blocks(params, k) {
        for v in block {
            out.push(v);
            if counter.push(v) == target {
                return Ok(out);
            }
        }
        check_budget(out.len() as u128, budget)?;
    }
    Err(Error::invalid(format!("w_{k} has fewer than {target} factors of length {n}")))
}

/// One window `ω0 . p_1 (0^{n_1} s(1) 0^{n_1−1}) p_2 (0^{n_2} s(2) 0^{n_2−1}) … p_K (…)`
/// per stand-in over `{4,5}`, with `K = |n_seq|`.
pub fn gen_intermediate(params: &IntermediateParams, seqs: &[StandInSequence], budget: usize) -> Result<IntermediateBuild> {
    if seqs.is_empty() {
        return Err(Error::invalid("need at least one stand-in sequence"));
    }
    for s in seqs {
        s.check_values(&[4, 5], "intermediate stand-in")?;
    }
    let alpha = NumericAlphabet::new([0, 1, 2, 4, 5]);
    let mut prefixes = Vec::new();
    let mut total: u128 = 0;
    for k in 1..=params.n_seq.len() {
        let p = prefix_value(params, k, budget)?;
        total += p.len() as u128 + 2 * params.n_seq[k - 1] as u128;
        check_budget(total * seqs.len() as u128, budget)?;
        prefixes.push(Word(p.into_iter().map(|v| alpha.sym(v)).collect()));
    }
    let zero = alpha.sym(0);
    let windows = seqs
        .iter()
        .map(|s| {
            let mut syms = Vec::with_capacity(total as usize);
            for (k, p) in prefixes.iter().enumerate() {
                let n = params.n_seq[k] as usize;
                let v = s.at(k + 1).ok_or_else(|| Error::invalid(format!("stand-in {s} has no value at {}", k + 1)))?;
                syms.extend_from_slice(p);
                syms.extend(std::iter::repeat(zero).take(n));
                syms.push(alpha.sym(v));
                syms.extend(std::iter::repeat(zero).take(n - 1));
            }
            SequenceWindow::new(alpha.alphabet.clone(), 0, syms, Some(zero))
        })
        .collect::<Result<Vec<_>>>()?;
    let k = params.n_seq.len();
    let certificate = ContainmentCertificate { max_n: *params.n_seq.last().unwrap() as usize, note: format!("window contains p_1..p_{k}") };
    Ok(IntermediateBuild { windows, prefixes, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::DEFAULT_BUDGET;
    use crate::index::FactorIndex;
    use std::collections::BTreeSet;

    fn distinct(w: &[u32], n: usize) -> usize {
        w.windows(n).collect::<BTreeSet<_>>().len()
    }

    #[test]
    fn side_conditions_are_named() {
        let e = IntermediateParams::new(IntFn::NCeilSqrt, vec![4, 8, 24]).unwrap_err().to_string();
        assert!(e.contains("g(n_2) < 2^(n_2/n_1)"), "{e}");
        let e = IntermediateParams::new(IntFn::NCeilLog2, vec![4, 30]).unwrap_err().to_string();
        assert!(e.contains("n_1 | n_2"), "{e}");
        let e = IntermediateParams::new(IntFn::Pow2, vec![4]).unwrap_err().to_string();
        assert!(e.contains("g(n_1) < 2^n_1"), "{e}");
        let e = IntermediateParams::new(IntFn::NCeilLog2, vec![4, 32]).unwrap_err().to_string();
        assert!(e.contains("n_2 > 2^2 Σ_{i<2} n_i(2 + 2^n_i): 32 ≤ 288"), "{e}");
        let e = IntermediateParams::new(IntFn::NCeilLog2, vec![4, 292, 292 * 1024]).unwrap_err().to_string();
        assert!(e.contains("≤ overflow"), "{e}");
        assert!(IntermediateParams::new(IntFn::NCeilLog2, vec![4, 292]).is_ok());
    }

    #[test]
    fn first_block_words() {
        let p = IntermediateParams { g: IntFn::Const(2), n_seq: vec![2, 8] };
        let b: Vec<Vec<u32>> = w_blocks(&p, 1).collect();
        assert_eq!(b, [vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        let b2: Vec<Vec<u32>> = w_blocks(&p, 2).take(2).collect();
        assert_eq!(b2, [vec![0, 1, 0, 1, 0, 1, 0, 1], vec![0, 1, 0, 1, 0, 1, 0, 2]]);
    }

    #[test]
    fn prefixes_have_exactly_g_factors() {
        let p = IntermediateParams::new(IntFn::NCeilLog2, vec![4, 292]).unwrap();
        let s = StandInSequence::periodic(vec![4, 5]).unwrap();
        let b = gen_intermediate(&p, &[s], DEFAULT_BUDGET).unwrap();
        for (k, w) in b.prefixes.iter().enumerate() {
            let n = p.n_seq[k] as usize;
            assert_eq!(distinct(w, n) as u64, p.g_at(k + 1));
            assert!(distinct(&w[..w.len() - 1], n) < distinct(w, n));
        }
    }

    #[test]
    fn sandwich_on_small_parameters() {
        let p = IntermediateParams::new(IntFn::NCeilLog2, vec![4, 292]).unwrap();
        let seqs = [StandInSequence::periodic(vec![4, 5]).unwrap(), StandInSequence::periodic(vec![5]).unwrap()];
        let b = gen_intermediate(&p, &seqs, DEFAULT_BUDGET).unwrap();
        let idx = FactorIndex::build_many(&b.windows, 292).unwrap();
        for (k, &n) in p.n_seq.iter().enumerate() {
            let c = idx.factor_count(n as usize).unwrap();
            let g = p.g_at(k + 1) as u128;
            assert!(g <= c && c < g + 6 * n as u128, "n = {n}: {g} ≤ {c}");
        }
        assert!(gen_intermediate(&p, &[StandInSequence::periodic(vec![3]).unwrap()], DEFAULT_BUDGET).is_err());
    }
}
