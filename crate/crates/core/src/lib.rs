//! Combinatorics of Langlands parameters, supercuspidal supports and Hecke
//! algebra descriptors for classical groups.

pub mod centralizer;
pub mod corpus;
pub mod error;
pub mod hecke;
pub mod matrix;
pub mod num;
pub mod params;
pub mod report;
pub mod support;
pub mod verify;
pub mod weil;
pub mod weyl;

pub use error::{Error, Result};
pub use num::{HalfInt, Sign};
pub use params::{LDParameter, LDSummand};
pub use weil::{DualGroup, Family, InertialPoint, Inventory, UnitMonomial};
