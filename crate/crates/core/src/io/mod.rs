pub mod parse;
pub mod problem;

pub use parse::{parse_operator, parse_poly};
pub use problem::{parse_problem, ProblemFile};
