//! Exact computer algebra for weak bialgebras and their rings of fractions.
//!
//! The crate builds weak bialgebras from structure constants over exact
//! cyclotomic fields, verifies their axioms and coquasi-triangular
//! structures, and constructs rings/WBAs of fractions at almost-central
//! monoids of group-like denominators, including the Laurent-polynomial
//! model at a central denominator and the universal maps out of a
//! localization. A catalog reproduces the worked examples end to end.

pub mod catalog;
pub mod coquasi;
pub mod exactfield;
pub mod graded;
pub mod linalg;
pub mod localization;
pub mod report;
pub mod wba;
