pub mod cli;
pub mod digraph;
pub mod error;
pub mod io;
pub mod matrix;
pub mod qw;
pub mod scalar;
pub mod spectral;
pub mod ud;
pub mod verify;
pub mod walk;
pub mod window;

pub use error::{Error, Result};
pub use matrix::MaxMatrix;
pub use scalar::{MaxScalar, Numeric};
