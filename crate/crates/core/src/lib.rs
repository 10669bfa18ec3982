//! Factor complexity of one- and two-sided symbolic sequences.
//!
//! The crate is organised around a handful of shared types:
//!
//! * [`Alphabet`], [`Word`] and [`SequenceWindow`] describe finite views of
//!   (possibly infinite) sequences indexed by integers.
//! * [`FactorIndex`] is a suffix-automaton index over one or more windows and
//!   answers factor-count and right-special queries.
//! * [`ComplexityProfile`] records `c_n` for `n = 1..=n_max` together with the
//!   range in which the window counts are trusted.
//!
//! On top of those sit the Sturmian generator ([`sturmian`]), the
//! word-nesting bit codec ([`codec`]), parametrised subshift constructions
//! ([`constructions`]) and the analysis layer ([`analysis`]).

pub mod analysis;
pub mod codec;
pub mod constructions;
mod error;
pub(crate) mod index;
mod profile;
pub mod sturmian;
mod window;
mod word;

pub use error::{Error, Result};
pub use index::{FactorIndex, RightSpecialRecord, RightSpecialReport};
pub use profile::{ComplexityProfile, ContainmentCertificate, Provenance};
pub use window::SequenceWindow;
pub use word::{occurrences, Alphabet, Symbol, Word};
