// `!(x > eps)` is used on purpose so that NaN takes the degenerate branch;
// `is_multiple_of` is newer than the supported toolchain.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::manual_is_multiple_of)]

pub mod catalog;
pub mod cayley_dickson;
pub mod cli;
pub mod clifford;
pub mod conformal;
pub mod error;
pub mod moebius;
pub mod numfmt;
pub mod octonion;
pub mod sampling;
pub mod suites;
pub mod table;
pub mod tolerance;

pub use error::{Error, Result};
