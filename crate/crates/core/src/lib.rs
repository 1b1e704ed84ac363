pub mod affine_weyl;
pub mod bset;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod qlaurent;
pub mod reduction;
pub mod root_datum;

pub use error::{Error, Result};
