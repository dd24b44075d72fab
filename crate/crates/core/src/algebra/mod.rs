//! Exact arithmetic: integers, Laurent polynomials, quotient rings and
//! matrices over them.

pub mod cyclotomic;
pub mod factor;
pub mod json;
mod kronecker;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod ring;

pub use cyclotomic::{cyclotomic_poly, z_pow_minus_one};
pub use factor::{int_poly_factor, is_irreducible, Factorization};
pub use matrix::{
    companion_matrix, cyclic_product, gamma_substitute, gamma_substitute_matrix, int_matrix,
    IntMatrix, PolyMatrix, RingMatrix,
};
pub use poly::{ipoly, iproduct, IntPoly, LaurentPoly};
pub use quotient::{QuotientElem, QuotientRing};
pub use ring::Ring;
