//! The embedded 21-bank panel (fiscal 2016).
//!
//! Inputs are interest and non-interest expenses, outputs interest and
//! non-interest income, all in millions of yen. The `type` column marks city
//! (C), regional (R) and other (O) banks.

use super::panel::{parse_panel, Panel};

/// The fixture CSV exactly as embedded.
pub const BANKS_CSV: &str = include_str!("../../data/banks.csv");

pub fn bank_fixture() -> Panel {
    parse_panel(BANKS_CSV.as_bytes()).expect("embedded bank panel is valid")
}
