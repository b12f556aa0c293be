//! Spectral lower bounds on the chromatic and fractional chromatic number.
//!
//! The crate computes the squared-energy bound `1 + max(s+/s-, s-/s+)`,
//! the Hoffman, inertia and clique bounds, exact fractional chromatic
//! numbers, and homomorphism obstruction certificates from the ratio
//! `lambda_max(H) / |lambda_min(H)|` of an edge-transitive target `H`. It
//! also ships randomized numerical checks of the matrix inequalities behind
//! these bounds (PSD splits, block Frobenius matrices, pair-orbit schemes,
//! group averaging).

pub mod bounds;
pub mod certify;
pub mod error;
pub mod exec;
pub mod fracchrom;
pub mod graph;
pub mod partition;
pub mod spectra;
pub mod survey;
pub mod symmetry;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{Graph, GraphSpec};
