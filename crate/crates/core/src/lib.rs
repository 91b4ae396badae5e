//! Exact verification of the Hirzebruch-Riemann-Roch formula and the Cardy
//! condition for matrix factorizations of isolated quasi-homogeneous
//! singularities.
//!
//! The categorical side (Euler characteristics of Ext, supertraces of
//! `c -> ±β∘c∘α`) and the geometric side (supertrace-exponential Chern
//! characters paired by the Grothendieck residue) are computed by separate
//! code paths and compared as exact rationals.

pub mod chern;
pub mod error;
pub mod ext;
pub mod groebner;
pub mod linalg;
pub mod mf;
pub mod milnor;
pub mod poly;
pub mod superforms;

pub use error::{Error, Result};
