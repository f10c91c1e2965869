//! Exact arithmetic kernel.

pub mod cyclotomic;
pub mod json;
pub mod linalg;
pub mod matpoly;
pub mod matrix;
pub mod poly2;
pub mod rational;
pub mod ratpoly;

pub use cyclotomic::{geometric_character_sum, CycNum};
pub use matpoly::MatrixPoly;
pub use matrix::{CycMatrix, LaurentMatrix, Matrix, ParamMatrix, Scalar, SpectralMatrix};
pub use poly2::{LaurentPoly, ParamPoly, SpectralPoly};
pub use rational::{int, parse_rational, rat, Rational};
pub use ratpoly::cyclotomic_polynomial;
