//! Exact arithmetic over Q.

pub mod factor;
pub mod gcd;
pub mod int;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod sparse;
pub mod univar;

pub use factor::{factor_linear, LinearFactorization};
pub use gcd::{gcd, squarefree_part};
pub use int::Int;
pub use matrix::{RatMatrix, RatVector};
pub use poly::{CommPoly, PolyRing};
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use sparse::SparseMatrix;
pub use univar::{factored_form, UnivarPoly};
