//! Gröbner bases for left submodules over the Weyl algebra, its
//! homogenization, and commutative polynomial rings.

pub mod basis;
pub mod engine;
pub mod ops;

pub use basis::{buchberger, initial_ideal, GroebnerBasis, ModulePresentation};
pub use engine::{Position, Tie, TermOrder};
