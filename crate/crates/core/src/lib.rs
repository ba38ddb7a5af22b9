pub mod arith;
pub mod bfunction;
pub mod error;
pub mod gb;
pub mod homological;
pub mod io;
pub mod polysol;
pub mod ratsol;
pub mod systems;
pub mod weyl;

pub use error::{Error, Result};
