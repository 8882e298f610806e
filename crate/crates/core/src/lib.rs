//! Exact computation of torsion classes, wide subcategories, support
//! τ-tilting data and universal localisations for representation-finite
//! quiver algebras.

pub mod algebra;
pub mod census;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod localise;
pub mod repmod;
pub mod silting;
pub mod torsion;
pub mod verify;

pub use error::{CapKind, Error, Result};
