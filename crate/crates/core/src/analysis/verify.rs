use std::fmt::Write as _;

use super::{
    cassaigne_report, entropy_estimate, morse_hedlund_classify, verify_bound, BoundCheck, BoundReport, CassaigneReport, EntropyEstimate,
    PeriodicityReport,
};
use crate::constructions::{
    gen_intermediate, gen_interspersed, gen_isolated_z, gen_power_gap, gen_product, gen_separated_blocks, gen_sparse_z, gen_sturmian_union,
    isolated_block, kfold_profile, miller_window, product_profile, read_right_block_lengths, skew_y_profile, sparse_z_profile,
    ConstructionKind, ConstructionSpec, Extent, SkewAlphabet, StandInSequence, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::index::FactorIndex;
use crate::profile::ComplexityProfile;
use crate::sturmian::{mechanical_window, MechanicalParams};
use crate::window::SequenceWindow;

/// A construction materialised from a spec: its windows, the profile its
/// bounds are checked on, the attached checks, and structural facts.
#[derive(Clone, Debug)]
pub struct Realization {
    pub kind: ConstructionKind,
    pub windows: Vec<SequenceWindow>,
    pub profile: ComplexityProfile,
    pub checks: Vec<BoundCheck>,
    /// Named yes/no facts checked directly on the windows.
    pub structural: Vec<(String, bool)>,
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub realization: Realization,
    pub reports: Vec<BoundReport>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed) && self.realization.structural.iter().all(|(_, ok)| *ok)
    }

    /// One CSV table per check, each preceded by a `# check` line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            writeln!(out, "# {}", r.check).unwrap();
            out.push_str(&r.to_csv());
        }
        out
    }

    pub fn to_text(&self) -> String {
        let r = &self.realization;
        let mut out = String::new();
        writeln!(out, "construction: {}", r.kind).unwrap();
        writeln!(out, "windows: {}", r.windows.len()).unwrap();
        writeln!(out, "n_max: {}", r.profile.n_max()).unwrap();
        writeln!(out, "trusted_n: {}", r.profile.trusted_n()).unwrap();
        writeln!(out, "result: {}", if self.passed() { "pass" } else { "fail" }).unwrap();
        for (name, ok) in &r.structural {
            writeln!(out, "structural: {name}: {}", if *ok { "pass" } else { "fail" }).unwrap();
        }
        for rep in &self.reports {
            out.push('\n');
            out.push_str(&rep.to_text());
        }
        out
    }
}

fn count_extent(spec: &ConstructionSpec, default: u64) -> Result<u64> {
    match spec.extent {
        None => Ok(default),
        Some(Extent::Count(c)) if c > 0 => Ok(c),
        Some(e) => Err(Error::invalid(format!("{} takes a positive count as extent, got {e}", spec.kind))),
    }
}

fn seqs_or(spec: &ConstructionSpec, default: &str) -> Result<Vec<StandInSequence>> {
    let s = spec.seqs()?;
    if s.is_empty() {
        return Ok(vec![StandInSequence::parse(default)?]);
    }
    Ok(s)
}

fn window_profile(windows: &[SequenceWindow], n_max: Option<usize>) -> Result<ComplexityProfile> {
    let shortest = windows.iter().map(SequenceWindow::len).min().unwrap_or(0);
    let n = n_max.unwrap_or((shortest / 4).max(1));
    ComplexityProfile::from_index(&FactorIndex::build_many(windows, n)?, n)
}

/// Sturmian windows for the language-level constructions; every `1` gets
/// the label `a` and `b` alternately.
fn skew_windows(params: &MechanicalParams, n: usize) -> Result<Vec<SequenceWindow>> {
    let base = gen_sturmian_union(std::slice::from_ref(params), n)?.remove(0);
    let mut ones = 0;
    let syms = base
        .symbols()
        .iter()
        .map(|&b| {
            if b == 0 {
                return SkewAlphabet::ZERO_A;
            }
            ones += 1;
            if ones % 2 == 1 {
                SkewAlphabet::ONE_A
            } else {
                SkewAlphabet::ONE_B
            }
        })
        .collect();
    Ok(vec![SequenceWindow::new(SkewAlphabet::alphabet(), 0, syms, None)?])
}

/// Materialise a spec. `n_max` overrides the spec's own value.
pub fn realize(spec: &ConstructionSpec, n_max: Option<usize>) -> Result<Realization> {
    use ConstructionKind::*;
    let n_max = n_max.or(spec.n_max);
    let mut structural = Vec::new();
    let (windows, profile, checks) = match spec.kind {
        SturmianUnion => {
            let params = spec.mechanical()?;
            let windows = match spec.extent {
                None => gen_sturmian_union(&params, n_max.unwrap_or(200))?,
                Some(e) => {
                    let (lo, hi) = match e {
                        Extent::Range(lo, hi) => (lo, hi),
                        Extent::Count(c) => (0, c as i64),
                    };
                    params.iter().map(|p| mechanical_window(p, lo, hi)).collect::<Result<Vec<_>>>()?
                }
            };
            let t = params.len() as u64;
            let profile = window_profile(&windows, n_max)?;
            (windows, profile, vec![BoundCheck::StrongLinear { t, c: t }, BoundCheck::MorseHedlund { expect_aperiodic: true }])
        }
        FiniteSet | CompSlow => {
            let seqs = spec.seqs()?;
            for s in &seqs {
                s.check_values(&[1, 2], "stand-in")?;
            }
            let gaps = spec.gaps()?;
            let windows = gen_interspersed(&seqs, &gaps, count_extent(spec, 12)? as usize, DEFAULT_BUDGET)?;
            let profile = window_profile(&windows, n_max)?;
            let check = if spec.kind == FiniteSet { BoundCheck::FiniteSet { t: seqs.len() as u64 } } else { BoundCheck::CompSlow { gaps } };
            (windows, profile, vec![check])
        }
        CountableSet => {
            let seqs = spec.seqs()?;
            let gaps = spec.gaps()?;
            let e = count_extent(spec, 14)?;
            let windows = seqs
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let m = gaps.m(i + 1).ok_or_else(|| Error::invalid(format!("gap table has no m_{}", i + 1)))?;
                    gen_power_gap(s, m as u32, e as u32, DEFAULT_BUDGET)
                })
                .collect::<Result<Vec<_>>>()?;
            let profile = window_profile(&windows, n_max)?;
            (windows, profile, vec![BoundCheck::CountableSet { gaps }])
        }
        Miller => {
            let params = spec.miller()?;
            let windows = vec![miller_window(&params)?];
            let profile = window_profile(&windows, n_max)?;
            let g = params.g.clone();
            (windows, profile, vec![BoundCheck::Miller { g: g.clone(), coarse: false }, BoundCheck::Miller { g, coarse: true }])
        }
        SeparatedBlocks => {
            let gaps = spec.gaps()?;
            let s = seqs_or(spec, "periodic:23")?;
            let blocks = count_extent(spec, 3)? as usize;
            let b = gen_separated_blocks(&gaps, &s[0], blocks, DEFAULT_BUDGET)?;
            let n = n_max.unwrap_or(b.certificate.max_n);
            let profile = ComplexityProfile::from_index(&FactorIndex::build(&b.window, n)?, n)?.with_certificate(b.certificate);
            (vec![b.window], profile, vec![BoundCheck::SeparatedLower { gaps }])
        }
        SparseZ => {
            let n_seq = spec.nseq()?;
            let last = *n_seq.last().ok_or_else(|| Error::invalid("empty nseq"))? as i64;
            let (lo, hi) = match spec.extent {
                None => (0, last + 1),
                Some(Extent::Range(lo, hi)) => (lo, hi),
                Some(Extent::Count(c)) => (0, c as i64),
            };
            let choice: Vec<bool> = match spec.seqs()?.first() {
                None => vec![true; n_seq.len()],
                Some(s) => (1..=n_seq.len()).map(|i| s.at(i).unwrap_or(1) == 1).collect(),
            };
            let windows = vec![gen_sparse_z(&n_seq, &choice, lo, hi)?];
            let profile = sparse_z_profile(&n_seq, n_max.unwrap_or(32))?;
            (windows, profile, vec![BoundCheck::SparseLower { n_seq }])
        }
        Product => {
            let gaps = spec.gaps()?;
            let n_seq = spec.nseq()?;
            let s = seqs_or(spec, "periodic:23")?;
            let b = gen_separated_blocks(&gaps, &s[0], count_extent(spec, 3)? as usize, DEFAULT_BUDGET)?;
            let n = n_max.unwrap_or(b.certificate.max_n);
            let py = ComplexityProfile::from_index(&FactorIndex::build(&b.window, n)?, n)?.with_certificate(b.certificate.clone());
            let z = gen_sparse_z(&n_seq, &vec![true; n_seq.len()], b.window.base(), b.window.end())?;
            let windows = vec![gen_product(&b.window, &z)?];
            let profile = product_profile(&py, &sparse_z_profile(&n_seq, n)?)?;
            (windows, profile, vec![BoundCheck::SeparatedLower { gaps }, BoundCheck::SparseLower { n_seq }])
        }
        SkewY | KFold => {
            let alpha = spec.mechanical()?.remove(0);
            let n = n_max.unwrap_or(20);
            let k = if spec.kind == KFold { spec.k()? } else { 1 };
            let base = skew_y_profile(&alpha, n)?;
            let profile = if k == 1 { base } else { kfold_profile(&base, k)? };
            (skew_windows(&alpha, n)?, profile, vec![BoundCheck::SkewY { alpha, k }])
        }
        Intermediate => {
            let params = spec.intermediate()?;
            let seqs = seqs_or(spec, "periodic:45")?;
            let b = gen_intermediate(&params, &seqs, DEFAULT_BUDGET)?;
            let n = n_max.unwrap_or(*params.n_seq.last().unwrap() as usize);
            let profile = ComplexityProfile::from_index(&FactorIndex::build_many(&b.windows, n)?, n)?.with_certificate(b.certificate);
            for (k, p) in b.prefixes.iter().enumerate() {
                let nk = params.n_seq[k] as usize;
                let w = SequenceWindow::new(b.windows[0].alphabet().clone(), 0, p.to_vec(), None)?;
                let exact = FactorIndex::build(&w, nk)?.factor_count(nk)? == params.g_at(k + 1) as u128;
                structural.push((format!("p_{} has exactly g(n_{}) factors of length n_{}", k + 1, k + 1, k + 1), exact));
            }
            (b.windows, profile, vec![BoundCheck::Intermediate { g: params.g, n_seq: params.n_seq }])
        }
        IsolatedZ => {
            let params = spec.isolated()?;
            let z = gen_isolated_z(&params, DEFAULT_BUDGET)?;
            let odd: Vec<u64> = params.f.iter().step_by(2).copied().collect();
            structural.push(("right-half delimiter gaps read back f(1), f(3), …".into(), read_right_block_lengths(&z) == odd));
            structural.push(("every block matches the floor formula".into(), blocks_match(&z, &params.r)));
            let windows = vec![z];
            let profile = window_profile(&windows, n_max)?;
            (windows, profile, Vec::new())
        }
    };
    Ok(Realization { kind: spec.kind, windows, profile, checks, structural })
}

/// Split the window at its `2`s and compare each block, in layout order,
/// with `⌊(k+1)r⌋ − ⌊kr⌋`, `k = 1..`.
fn blocks_match(z: &SequenceWindow, r: &[num_rational::Ratio<i64>]) -> bool {
    let split = |lo: i64, hi: i64| -> Vec<Vec<u32>> {
        let part: Vec<u32> = (lo..hi).map(|i| z.get(i).unwrap()).collect();
        part.split(|&s| s == 2).filter(|b| !b.is_empty()).map(<[u32]>::to_vec).collect()
    };
    let right = split(0, z.end());
    let mut left = split(z.base(), 0);
    left.reverse();
    let mut found = vec![None; r.len()];
    for (j, b) in right.into_iter().enumerate() {
        if let Some(slot) = found.get_mut(2 * j) {
            *slot = Some(b);
        }
    }
    for (j, b) in left.into_iter().enumerate() {
        if let Some(slot) = found.get_mut(2 * j + 1) {
            *slot = Some(b);
        }
    }
    found.iter().zip(r).all(|(b, r)| match b {
        Some(b) => {
            let (a, d) = (*r.numer(), *r.denom());
            let direct: Vec<u32> =
                (1..=b.len() as i64).map(|k| ((k + 1) * a).div_euclid(d) as u32 - (k * a).div_euclid(d) as u32).collect();
            *b == direct && *b == isolated_block(*r, b.len() as u64).0
        }
        None => false,
    })
}

pub fn verify_spec(spec: &ConstructionSpec, n_max: Option<usize>) -> Result<Verification> {
    let realization = realize(spec, n_max)?;
    let reports = realization.checks.iter().map(|c| verify_bound(&realization.profile, c)).collect::<Result<Vec<_>>>()?;
    Ok(Verification { realization, reports })
}

/// Periodicity, first differences and entropy of one window.
#[derive(Clone, Debug)]
pub struct WindowAnalysis {
    pub profile: ComplexityProfile,
    pub periodicity: PeriodicityReport,
    pub cassaigne: CassaigneReport,
    pub entropy: Option<EntropyEstimate>,
}

pub fn analyze_window(window: &SequenceWindow, n_max: usize) -> Result<WindowAnalysis> {
    let profile = ComplexityProfile::from_index(&FactorIndex::build(window, n_max)?, n_max)?;
    let periodicity = morse_hedlund_classify(&profile, window)?;
    let cassaigne = cassaigne_report(&profile);
    let entropy = entropy_estimate(&profile).ok();
    Ok(WindowAnalysis { profile, periodicity, cassaigne, entropy })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "none".into(), |x| x.to_string())
}

impl WindowAnalysis {
    /// Key–value report in a fixed key order; lists are comma-separated.
    pub fn to_text(&self) -> String {
        let p = &self.profile;
        let mut out = String::new();
        let list = |v: Vec<String>| v.join(",");
        writeln!(out, "window_length: {}", p.window_length()).unwrap();
        writeln!(out, "n_max: {}", p.n_max()).unwrap();
        writeln!(out, "trusted_n: {}", p.trusted_n()).unwrap();
        writeln!(out, "morse_hedlund.verdict: {}", self.periodicity.verdict).unwrap();
        writeln!(out, "morse_hedlund.witness: {}", opt(self.periodicity.witness)).unwrap();
        writeln!(out, "morse_hedlund.period: {}", opt(self.periodicity.period)).unwrap();
        writeln!(out, "cassaigne.max_diff: {}", opt(self.cassaigne.max)).unwrap();
        writeln!(out, "cassaigne.argmax: {}", opt(self.cassaigne.argmax)).unwrap();
        writeln!(out, "cassaigne.plateau: {}", opt(self.cassaigne.plateau)).unwrap();
        writeln!(out, "cassaigne.diffs: {}", list(self.cassaigne.diffs.iter().map(i128::to_string).collect())).unwrap();
        match &self.entropy {
            Some(e) => {
                writeln!(out, "entropy.estimate: {:.6}", e.estimate).unwrap();
                writeln!(out, "entropy.at: {}", e.at).unwrap();
                writeln!(out, "entropy.quotients: {}", list(e.quotients.iter().map(|q| format!("{q:.6}")).collect())).unwrap();
            }
            None => writeln!(out, "entropy.estimate: none").unwrap(),
        }
        writeln!(out, "entropy.note: log2(c_n)/n at trusted_n; a finite profile does not determine the limit").unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verify(text: &str) -> Verification {
        verify_spec(&ConstructionSpec::parse(text).unwrap(), None).unwrap()
    }

    #[test]
    fn every_kind_realises_and_passes() {
        let specs = [
            "construction = sturmian\nalpha = [0;1](period=1)\nn_max = 60",
            "construction = sturmian-union\nalpha = [0;1](period=1), [0;2](period=1)\nn_max = 40",
            "construction = finite-set\nseq.1 = periodic:1\nseq.2 = periodic:12\nextent = 8",
            "construction = comp-slow\nseq.1 = periodic:12\nextent = 8",
            "construction = countable-set\ngaps = geom:1,2\nseq.1 = periodic:01\nseq.2 = periodic:1\nextent = 10",
            "construction = miller\ng = const:3\ndepth = 4\nseq.1 = periodic:01",
            "construction = separated-blocks\ngaps = 3,6,10\nseq.1 = periodic:23",
            "construction = sparse-z\nnseq = 1,2,4,8,16\nn_max = 20",
            "construction = product\ngaps = 3,6,10\nnseq = 1,3,7\nseq.1 = periodic:2",
            "construction = skew-Y\nalpha = [0;1](period=1)\nn_max = 14",
            "construction = k-fold\nalpha = [0;1](period=1)\nk = 2\nn_max = 10",
            "construction = intermediate\ng = nlog2\nnseq = 4,292\nseq.1 = periodic:45\nseq.2 = periodic:5",
            "construction = isolated-z\nrseq = 1/2, 1/3, 2/3, 3/5\nf = 4,6,8,10",
        ];
        for s in specs {
            let v = verify(s);
            assert!(v.passed(), "{s}\n{}", v.to_text());
        }
    }

    #[test]
    fn sturmian_union_of_one_is_exactly_linear() {
        let v = verify("construction = sturmian\nalpha = [0;1](period=1)\nn_max = 200\nextent = 2000");
        let p = &v.realization.profile;
        assert!((1..=200).all(|n| p.c(n) == Some(n as u128 + 1)));
        assert!(v.to_csv().starts_with("# strong-linear(t=1;C=1)\nn,c_n,diff,bound,margin\n1,2,1,2,0\n"));
    }

    #[test]
    fn window_analysis_report() {
        let w = mechanical_window(&MechanicalParams::golden(), 0, 1000).unwrap();
        let a = analyze_window(&w, 100).unwrap();
        let text = a.to_text();
        assert!(text.contains("morse_hedlund.verdict: aperiodic-evidence\n"));
        assert!(text.contains("cassaigne.plateau: 1\n"));
        assert_eq!(text, analyze_window(&w, 100).unwrap().to_text());
    }
}
