pub mod algebra;
pub mod cli;
pub mod engine;
pub mod error;
pub mod exact;
pub mod groupid;
pub mod symmetry;

pub use error::{Error, Result};
pub use exact::{Matrix, Rational};
