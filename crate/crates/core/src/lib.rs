pub mod basis;
pub mod error;
pub mod extremal;
pub mod identities;
pub mod linalg;
pub mod repmod;
pub mod scalars;

pub use error::{Error, Result};
