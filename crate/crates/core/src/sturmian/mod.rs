//! Mechanical (Sturmian) words `x(n) = ⌊(n+1)α + c⌋ − ⌊nα + c⌋` with every
//! floor certified exactly from continued-fraction data.

mod mechanical;
mod rotation;

pub use mechanical::{balance_report, mechanical_window, BalanceReport, BalanceRow, FloorOracle, MechanicalParams};
pub use rotation::RotationNumber;
