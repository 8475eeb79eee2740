pub mod fixture;
pub mod panel;
pub mod report;

pub use fixture::{bank_fixture, BANKS_CSV};
pub use panel::{parse_panel, render_panel, Panel, PanelError};
pub use report::{
    parse_report_csv, parse_report_json, render_report, DmuRecord, Format, Report, ReportError,
};
