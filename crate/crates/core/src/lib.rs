//! Exact combinatorics of affine Iwahori-Hecke algebras attached to central
//! covers of split simply-connected groups.

pub mod error;
pub mod exact_algebra;
pub mod root_datum;
pub mod cover_datum;
pub mod affine_weyl;
pub mod hecke_algebra;
pub mod formal_degree;
pub mod whittaker;

pub use error::{Error, Result};
