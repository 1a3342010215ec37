//! Report formats, verification suites and on-disk state for the `bsdh`
//! command-line tool. The mathematics lives in `bsdh-core`.

pub mod cache;
pub mod checkpoint;
mod error;
pub mod report;
pub mod suites;

pub use error::{Error, Result};

use bsdh_core::{CartanType, Family};

/// Parses a Cartan type, returning whether the input named the `C2` alias
/// of `B2`.
pub fn parse_type(s: &str) -> Result<(CartanType, bool)> {
    let ct: CartanType = s.parse()?;
    let alias = ct.family() == Family::B && ct.rank() == 2 && s.trim().eq_ignore_ascii_case("C2");
    Ok((ct, alias))
}
