//! Front end shared by the `seifert` binary: parsing, reports and tables.

pub mod parse;
pub mod report;
pub mod tables;

pub use parse::{parse_and_normalize, parse_link, LinkExpr};
pub use report::{classify_report, cover_report, ClassifyOutput, CoverOutput};
pub use tables::{table, Table, TABLE_NAMES};

use crate::error::Error;

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ZeroPolynomial | Error::NotDivisible => 3,
        _ => 2,
    }
}
