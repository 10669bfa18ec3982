use crate::profile::ComplexityProfile;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CassaigneReport {
    /// `c_{n+1} − c_n` for `n = 1, …` while `n + 1 ≤ min(trusted_n + 1, n_max)`.
    pub diffs: Vec<i128>,
    pub max: Option<i128>,
    pub argmax: Option<usize>,
    /// The common value of the second half of `diffs`, if they agree.
    pub plateau: Option<i128>,
}

/// First differences up to `trusted_n`. A plateau is only evidence: a finite
/// profile cannot tell an eventual constant from a transient.
pub fn cassaigne_report(profile: &ComplexityProfile) -> CassaigneReport {
    let upto = profile.trusted_n().min(profile.n_max().saturating_sub(1));
    let diffs: Vec<i128> = profile.diffs().into_iter().take(upto).collect();
    let (mut max, mut argmax) = (None, None);
    for (i, &d) in diffs.iter().enumerate() {
        if max.map_or(true, |m| d > m) {
            max = Some(d);
            argmax = Some(i + 1);
        }
    }
    let tail = &diffs[diffs.len() / 2..];
    let plateau = match tail.first() {
        Some(&d) if diffs.len() >= 2 && tail.iter().all(|&x| x == d) => Some(d),
        _ => None,
    };
    CassaigneReport { diffs, max, argmax, plateau }
}
