use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::profile::ComplexityProfile;
use crate::window::SequenceWindow;
use crate::word::{Alphabet, Word};

fn check_positions(n_seq: &[u64]) -> Result<()> {
    if n_seq.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::invalid("positions n_k must be strictly increasing"));
    }
    Ok(())
}

/// The point with `choice[k]` at position `n_seq[k]` and `0` elsewhere,
/// restricted to `[lo, hi)`.
pub fn gen_sparse_z(n_seq: &[u64], choice: &[bool], lo: i64, hi: i64) -> Result<SequenceWindow> {
    check_positions(n_seq)?;
    if lo >= hi {
        return Err(Error::invalid(format!("empty extent {lo}..{hi}")));
    }
    let mut syms = vec![0; (hi - lo) as usize];
    for (k, &p) in n_seq.iter().enumerate() {
        let p = p as i64;
        if p < lo || p >= hi {
            continue;
        }
        let b = choice.get(k).ok_or_else(|| Error::invalid(format!("no choice bit for n_{}", k + 1)))?;
        syms[(p - lo) as usize] = *b as u32;
    }
    let fill = (n_seq.first().map_or(true, |&p| p as i64 >= lo)).then_some(0);
    SequenceWindow::new(Alphabet::binary(), lo, syms, fill)
}

/// Supports of maximal length-`n` words: the positions `n_k` visible through
/// each window `[t, t + n)`, as bit masks.
fn supports(n_seq: &[u64], n: usize) -> Result<BTreeSet<u128>> {
    check_positions(n_seq)?;
    if n == 0 || n > 128 {
        return Err(Error::invalid("sparse language length must be in 1..=128"));
    }
    let mut out = BTreeSet::from([0u128]);
    for (i, &first) in n_seq.iter().enumerate() {
        // windows whose leftmost visible position is n_seq[i]
        for off in 0..n as i64 {
            let t = first as i64 - off;
            let mut mask = 0u128;
            for &p in &n_seq[i..] {
                if p as i64 >= t + n as i64 {
                    break;
                }
                mask |= 1 << (p as i64 - t);
            }
            out.insert(mask);
        }
    }
    Ok(out)
}

/// Length-`n` words of the sparse subshift: every word whose 1s sit inside
/// the trace of `{n_k}` on some window.
pub fn sparse_z_language(n_seq: &[u64], n: usize) -> Result<BTreeSet<Word>> {
    let mut words = BTreeSet::new();
    for mask in supports(n_seq, n)? {
        let bits: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if bits.len() > 24 {
            return Err(Error::Resource(format!("{} free positions at n = {n}", bits.len())));
        }
        for sub in 0u32..1 << bits.len() {
            let mut w = vec![0; n];
            for (j, &i) in bits.iter().enumerate() {
                w[i] = sub >> j & 1;
            }
            words.insert(Word(w));
        }
    }
    Ok(words)
}

/// `|L_n|` of the sparse subshift: the size of the union of the subset
/// lattices below each support, by inclusion over distinct masks.
pub fn sparse_z_count(n_seq: &[u64], n: usize) -> Result<u128> {
    let maximal: Vec<u128> = {
        let all = supports(n_seq, n)?;
        all.iter().copied().filter(|&m| !all.iter().any(|&o| o != m && o & m == m)).collect()
    };
    // count distinct sub-masks of any maximal support
    let mut seen = BTreeSet::new();
    for &m in &maximal {
        if m.count_ones() > 24 {
            return Err(Error::Resource(format!("{} free positions at n = {n}", m.count_ones())));
        }
        let mut sub = m;
        loop {
            seen.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
    }
    Ok(seen.len() as u128)
}

pub fn sparse_z_profile(n_seq: &[u64], n_max: usize) -> Result<ComplexityProfile> {
    let counts = (1..=n_max).map(|n| sparse_z_count(n_seq, n)).collect::<Result<Vec<_>>>()?;
    ComplexityProfile::language(counts, "sparse-z")
}
