//! Dragon curve boundaries: L-system generation, polyomino tracing, exact
//! transfer-matrix counting and the string/array families that share the
//! right-boundary count.

pub mod counting;
pub mod curve;
pub mod enumeration;
pub mod error;
pub mod json;
pub mod lsystem;
pub mod polyomino;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
