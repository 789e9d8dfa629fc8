pub mod algebra;
pub mod commands;
pub mod error;
pub mod io;
pub mod linear;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod search;
pub mod series;

pub use algebra::{AlgebraDef, IdealHandle};
pub use error::{Error, Result};
pub use linear::{Subspace, Vector};
pub use scalar::{Field, Scalar};
