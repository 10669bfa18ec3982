//! Parametrised generators for the example subshifts, each paired with the
//! bound its complexity is expected to satisfy.
//!
//! Arbitrary (even non-computable) parameter sequences are replaced by
//! explicit finite [`StandInSequence`]s, and every construction is realised
//! only up to a finite extent.

mod intermediate;
mod interspersed;
mod isolated;
mod miller;
mod params;
mod power_gap;
mod prefix;
mod product;
mod separated;
mod skew;
mod sparse;
mod spec;
mod union;

pub use intermediate::{gen_intermediate, IntermediateBuild, IntermediateParams};
pub use interspersed::gen_interspersed;
pub use isolated::{gen_isolated_z, isolated_block, read_right_block_lengths, IsolatedParams};
pub use miller::{decode_miller, gen_miller, miller_h, miller_pair, miller_window, MillerParams};
pub use params::{GapSpec, IntFn, StandInSequence};
pub use power_gap::{decode_power_gap, gen_power_gap};
pub use prefix::exact_factor_prefix;
pub use product::{gen_product, kfold_profile, product_profile};
pub use separated::{gen_separated_blocks, separated_block, separated_set, SeparatedBuild};
pub use skew::{skew_y_count, skew_y_factor_set, skew_y_profile, sturmian_language, SkewAlphabet};
pub use sparse::{gen_sparse_z, sparse_z_count, sparse_z_language, sparse_z_profile};
pub use spec::{ConstructionKind, ConstructionSpec, Extent};
pub use union::{gen_sturmian_union, languages_agree, union_profile};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol};

/// Default cap on the number of symbols a generator may materialise.
pub const DEFAULT_BUDGET: usize = 1 << 24;

/// Alphabet whose tokens are the decimal values, in increasing order.
pub(crate) struct NumericAlphabet {
    pub alphabet: Alphabet,
    values: Vec<u32>,
}

impl NumericAlphabet {
    pub fn new(values: impl IntoIterator<Item = u32>) -> Self {
        let values: Vec<u32> = values.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let alphabet = Alphabet::new(values.iter().map(u32::to_string)).expect("distinct numeric tokens");
        NumericAlphabet { alphabet, values }
    }

    pub fn sym(&self, value: u32) -> Symbol {
        self.values.binary_search(&value).expect("value in alphabet") as Symbol
    }
}

pub(crate) fn check_budget(needed: u128, budget: usize) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::Budget { needed, budget });
    }
    Ok(())
}
