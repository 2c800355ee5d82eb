//! Exact computation of sectional-category-type invariants of maps between
//! finite T0 spaces.

pub mod bitset;
pub mod catalog;
pub mod certcheck;
pub mod cover;
pub mod error;
pub mod harness;
pub mod homotopy;
pub mod map;
pub mod par;
pub mod poset;
pub mod settings;
pub mod whitehead;

pub use crate::bitset::PointSet;
pub use crate::error::{BudgetKind, Error, Result};
pub use crate::map::{ContinuousMap, MapJson};
pub use crate::poset::{build_space, FiniteSpace, Space, SpaceJson};
pub use crate::settings::{Budget, Settings};
