//! Twisted Alexander polynomials of knots under dihedral and metacyclic
//! representations, computed exactly.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod factorization;
pub mod fox;
pub mod knots;
pub mod reps;
pub mod twisted;

pub use error::{Error, Result};
