pub mod enumeration;
pub mod error;
pub mod matchings;
pub mod oscillating;
pub mod paths;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use matchings::{Arc, ColoredMatching};
pub use oscillating::OscillatingTableau;
pub use paths::{DispersedDyckPath, DyckPath, DyckPathPacking, GuyWalk};
pub use shapes::{Cell, Partition, RimHook};
pub use tableaux::{HookPermutation, HookPlacement, HookTableau, RimHookTableau};

/// A tableau entry.
pub type Content = u32;

/// Exact count type used for every enumeration result.
pub type BigCount = num_bigint::BigUint;
