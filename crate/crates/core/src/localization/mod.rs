//! Rings and WBAs of fractions at almost-central monoids of group-like
//! denominators: fraction calculus, explicit materialization, the Laurent
//! model, Ore-condition checks, and universal maps.

mod fraction;
mod kernel;
mod laurent;
mod materialize;
mod monoid;
mod ore;
mod universal;

pub use fraction::{Equivalence, Fraction, FractionPair, LocalizedWBA};
pub use kernel::KernelData;
pub use laurent::{laurent_model, LaurentModel};
pub use materialize::{localize, MaterializedLocalization};
pub use monoid::{AnnihilatorStrategy, DenominatorMonoid, LocError};
pub use ore::check_ore;
pub use universal::{invert_in, universal_map, UniversalMap};
