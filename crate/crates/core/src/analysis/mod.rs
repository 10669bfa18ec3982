//! Analyses of complexity profiles and windows: periodicity, first
//! differences, language recovery from right-special words, canonical
//! recurrent words, entropy quotients, and bound verification.

mod bounds;
mod canonical;
mod cassaigne;
mod entropy;
mod periodicity;
mod recovery;
mod verify;

pub use bounds::{verify_bound, BoundCheck, BoundReport, BoundRow, Direction};
pub use canonical::{canonical_recurrent_word, CanonicalWord, FiniteLanguage, LanguageOracle, WindowLanguage};
pub use cassaigne::{cassaigne_report, CassaigneReport};
pub use entropy::{entropy_estimate, EntropyEstimate};
pub use periodicity::{minimal_period, morse_hedlund_classify, PeriodicityReport, Verdict};
pub use recovery::recover_language;
pub use verify::{analyze_window, realize, verify_spec, Realization, Verification, WindowAnalysis};
