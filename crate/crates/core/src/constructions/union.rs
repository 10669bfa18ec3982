use crate::error::{Error, Result};
use crate::index::FactorIndex;
use crate::profile::ComplexityProfile;
use crate::sturmian::{mechanical_window, MechanicalParams};
use crate::window::SequenceWindow;

/// One mechanical window per slope/intercept pair, starting at index 0 and
/// long enough that its length-`n_max` factors are all `n_max + 1` factors of
/// the Sturmian language (so every shorter length is complete too) and
/// `trusted_n ≥ n_max`.
pub fn gen_sturmian_union(params: &[MechanicalParams], n_max: usize) -> Result<Vec<SequenceWindow>> {
    if params.is_empty() || n_max == 0 {
        return Err(Error::invalid("need at least one rotation number and n_max ≥ 1"));
    }
    params
        .iter()
        .map(|p| {
            let mut len = (10 * n_max).max(64);
            loop {
                let w = mechanical_window(p, 0, len as i64)?;
                if FactorIndex::build(&w, n_max)?.factor_count(n_max)? == n_max as u128 + 1 {
                    return Ok(w);
                }
                if len > 1 << 26 {
                    return Err(Error::Resource(format!("no complete Sturmian window for n_max = {n_max}")));
                }
                len *= 2;
            }
        })
        .collect()
}

/// Profile of the union of the windows' factor sets.
pub fn union_profile(windows: &[SequenceWindow], n_max: usize) -> Result<ComplexityProfile> {
    let idx = FactorIndex::build_many(windows, n_max)?;
    ComplexityProfile::from_index(&idx, n_max)
}

/// Whether two windows have the same length-`n` factors.
pub fn languages_agree(a: &SequenceWindow, b: &SequenceWindow, n: usize) -> Result<bool> {
    Ok(FactorIndex::build(a, n)?.factor_set(n)? == FactorIndex::build(b, n)?.factor_set(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturmian::RotationNumber;
    use num_rational::Ratio;

    #[test]
    fn union_of_two_slopes_is_at_most_twice_linear() {
        let ps = [MechanicalParams::golden(), MechanicalParams::new(RotationNumber::silver(), Ratio::from_integer(0))];
        let ws = gen_sturmian_union(&ps, 50).unwrap();
        let p = union_profile(&ws, 50).unwrap();
        assert_eq!(p.trusted_n(), 50);
        for n in 1..=50 {
            assert!(p.c(n).unwrap() <= 2 * (n as u128 + 1));
            assert!(p.c(n).unwrap() > n as u128);
        }
    }

    #[test]
    fn duplicate_slopes_do_not_change_the_profile() {
        let one = gen_sturmian_union(&[MechanicalParams::golden()], 40).unwrap();
        let two = gen_sturmian_union(&[MechanicalParams::golden(), MechanicalParams::golden()], 40).unwrap();
        assert_eq!(union_profile(&one, 40).unwrap().counts(), union_profile(&two, 40).unwrap().counts());
        let p = union_profile(&one, 40).unwrap();
        assert!((1..=40).all(|n| p.c(n) == Some(n as u128 + 1)));
    }

    #[test]
    fn shared_continued_fraction_prefix_shares_short_language() {
        // α and α' agree on many partial quotients, so short factors coincide.
        let a: RotationNumber = "[0;1,1,1,1,1,1,1,1,1,1,1,1,2](period=1)".parse().unwrap();
        let pa = MechanicalParams::new(a, Ratio::from_integer(0));
        let wa = mechanical_window(&pa, 0, 6000).unwrap();
        let wg = mechanical_window(&MechanicalParams::golden(), 0, 6000).unwrap();
        assert!(languages_agree(&wa, &wg, 20).unwrap());
        assert!(!languages_agree(&wa, &wg, 1000).unwrap());
    }
}
