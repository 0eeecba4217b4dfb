//! Graded Betti diagrams of edge ideals and the cones they span.
//!
//! The crate is `no_std` (it needs `alloc`). It contains everything that is
//! pure computation:
//!
//! - [`graph`]: labelled simple graphs on `{1..n}` stored as neighbour bitmasks,
//!   the named families, and the exact vertex-cover / matching solvers.
//! - [`complex`]: simplicial complexes on bitmask faces and independence complexes.
//! - [`homology`]: reduced homology dimensions over `Q` or a prime field.
//! - [`betti`]: Hochster's formula, closed forms, the suspension and padding
//!   rules, Herzog–Kühl functionals and support checks.
//! - [`cone`]: index sets, the two total orders, initiality, witness families,
//!   exact diagram rank and cone dimension by enumeration.
//!
//! File formats, parallel drivers and the command line live in the
//! `betti-cone` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod betti;
pub mod complex;
pub mod cone;
mod error;
pub mod graph;
pub mod homology;
pub mod linalg;

pub use betti::{BettiDiagram, HkVector};
pub use complex::SimplicialComplex;
pub use cone::{ConeReport, IndexPair, IndexSet, Method};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use homology::{FieldSpec, HomologyProfile};
