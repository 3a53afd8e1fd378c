pub mod cli;
pub mod clifford;
pub mod coords;
pub mod domains;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod random;
pub mod spectra;
pub mod symmetry;
pub mod tensor;

pub use error::{Error, Result};
