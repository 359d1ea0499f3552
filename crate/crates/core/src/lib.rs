//! Exact isoperimetric connectivities, fragments and atoms of finite
//! reflexive relations, with Cayley-graph specializations and exhaustive
//! verifiers for the structure theorems over small groups.

pub mod cayley;
pub mod cli;
pub mod error;
pub mod group;
pub mod isoperimetry;
pub mod relation;
pub mod set;
pub mod theorems;

pub use cayley::{normalize_connection_set, CayleyGraph};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupDescriptor, Side};
pub use isoperimetry::{classify, fragment_report, kappa, Analysis, Direction, SearchBudget};
pub use relation::Relation;
pub use set::ElementSet;
