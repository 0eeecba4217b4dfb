//! File formats, parallel drivers, caching, the verification suite and the
//! command line for `betti-cone-core`.

pub mod cache;
pub mod cli;
pub mod document;
pub mod error;
pub mod formats;
pub mod parallel;
pub mod render;
pub mod verify;

pub use betti_cone_core;
pub use error::AppError;
