use crate::error::{Error, Result};
use crate::profile::{ComplexityProfile, ContainmentCertificate, Provenance};
use crate::window::SequenceWindow;
use crate::word::Alphabet;

/// Pairwise window on the intersection of the two index ranges, over the
/// product alphabet. The left fill survives only when both windows start at
/// the same index and both carry one.
pub fn gen_product(a: &SequenceWindow, b: &SequenceWindow) -> Result<SequenceWindow> {
    let lo = a.base().max(b.base());
    let hi = a.end().min(b.end());
    if lo >= hi {
        return Err(Error::invalid("windows do not overlap"));
    }
    let width = b.alphabet().len() as u32;
    let syms = (lo..hi).map(|i| a.get(i).unwrap() * width + b.get(i).unwrap()).collect();
    let fill = match (a.left_fill(), b.left_fill()) {
        (Some(x), Some(y)) if a.base() == b.base() => Some(x * width + y),
        _ => None,
    };
    SequenceWindow::new(Alphabet::product(a.alphabet(), b.alphabet()), lo, syms, fill)
}

/// `c_n(X × Y) = c_n(X) · c_n(Y)`.
pub fn product_profile(pa: &ComplexityProfile, pb: &ComplexityProfile) -> Result<ComplexityProfile> {
    if pa.n_max() != pb.n_max() {
        return Err(Error::invalid(format!("profiles cover different ranges ({} vs {})", pa.n_max(), pb.n_max())));
    }
    let counts = pa
        .counts()
        .iter()
        .zip(pb.counts())
        .map(|(x, y)| x.checked_mul(*y).ok_or_else(|| Error::Resource("product count overflows u128".into())))
        .collect::<Result<Vec<_>>>()?;
    let p = ComplexityProfile::from_counts(
        counts,
        pa.trusted_n().min(pb.trusted_n()),
        pa.window_length().min(pb.window_length()),
        Provenance::Language("product".into()),
    )?;
    Ok(match (certified(pa), certified(pb)) {
        (Some(x), Some(y)) => {
            p.with_certificate(ContainmentCertificate { max_n: x.max_n.min(y.max_n), note: format!("{}; {}", x.note, y.note) })
        }
        _ => p,
    })
}

/// Exact language counts need no certificate.
fn certified(p: &ComplexityProfile) -> Option<ContainmentCertificate> {
    match p.provenance() {
        Provenance::Language(label) => Some(ContainmentCertificate { max_n: p.n_max(), note: format!("exact {label} language") }),
        _ => p.certificate().cloned(),
    }
}

/// Profile of the `k`-fold product: every count raised to the `k`-th power.
pub fn kfold_profile(p: &ComplexityProfile, k: u32) -> Result<ComplexityProfile> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let counts = p
        .counts()
        .iter()
        .map(|c| c.checked_pow(k).ok_or_else(|| Error::Resource(format!("c_n^{k} overflows u128"))))
        .collect::<Result<Vec<_>>>()?;
    let q = ComplexityProfile::from_counts(counts, p.trusted_n(), p.window_length(), Provenance::Language(format!("{k}-fold product")))?;
    Ok(match p.certificate() {
        Some(c) => q.with_certificate(c.clone()),
        None => q,
    })
}
