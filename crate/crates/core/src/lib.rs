//! Exact superform calculus on `R^r` and tropical cycles.
//!
//! - [`lattice`]: Hermite/Smith normal forms, saturation, lattice indices,
//!   outward lattice vectors.
//! - [`polyhedra`]: integral `Q`-affine polyhedra, faces, complexes,
//!   refinement, truncation, triangulation.
//! - [`superform`]: `(p,q)`-superforms with polynomial coefficients, wedge,
//!   `d'`, `d''`, contraction, pullback.
//! - [`integrate`]: integration over polytopes and weighted complexes,
//!   boundary integrals, Stokes and Green residuals.
//! - [`cycle`]: balancing, closedness certificates, supercurrents,
//!   push-forward and the projection formula.
//! - [`hypersurface`]: tropical hypersurfaces as balanced test cycles.
//! - [`cli`]: JSON documents and the `tropcalc` command line.
//!
//! All arithmetic is exact over `Z` and `Q`.

// Polyhedron hashes only its H-representation, never its face cache.
#![allow(clippy::mutable_key_type)]
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod cycle;
pub mod error;
pub mod hypersurface;
pub mod integrate;
pub mod lattice;
pub mod linalg;
pub mod num;
pub mod polyhedra;
pub mod superform;

pub use error::{Error, Result};
