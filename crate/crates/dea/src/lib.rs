//! Files, reports and the `dea` command line on top of [`dea_core`].
//!
//! * [`io::panel`] reads and writes panel CSV files.
//! * [`io::fixture`] embeds the 21-bank panel.
//! * [`io::report`] renders panel reports as text, CSV or JSON.
//! * [`cli`] implements the `dea` subcommands.

pub mod cli;
pub mod io;

pub use dea_core;
