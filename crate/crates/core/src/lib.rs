//! Betti numbers of Kummer 3-folds A³/G for finite G < SL(3, ℤ).
//!
//! The pipeline goes from generators to the group ([`group`]), through the
//! torsion model of A³ ([`torus`]) and the singular strata ([`strata`]), to
//! the Poincaré polynomials ([`cohomology`]).

pub mod analysis;
pub mod catalog;
pub mod cohomology;
pub mod conjugacy;
pub mod error;
pub mod golden;
pub mod group;
pub mod matrix;
pub mod report;
pub mod snf;
pub mod strata;
pub mod torus;

pub use error::{KummerError, Result};
pub use group::{closure, FinMatGroup, IsoType};
pub use matrix::IntMat3;
