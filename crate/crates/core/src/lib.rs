//! Exact verification of bounded Littlewood identities and their refinements.
//!
//! The crate builds everything from exact integer arithmetic: sparse
//! polynomials, a degree-truncated ring of symmetric functions in the Schur
//! basis, determinants and Pfaffians over any commutative ring, and
//! enumerators for up-down tableaux, vacillating tableaux and lattice paths.
//! Each identity is checked as term-by-term polynomial equality.

pub mod error;
pub mod identity;
pub mod lambda_ring;
pub mod matrix;
pub mod partition;
pub mod pfaffian;
pub mod poly;
pub mod report;
pub mod ring;
pub mod so_characters;
pub mod suite;
pub mod symfunc;
pub mod syt;
pub mod walks;

pub use error::{LabError, Result};
pub use matrix::{Label, RingMatrix};
pub use partition::Partition;
pub use poly::{EgfSeries, MultiPoly, PolySpace};
pub use ring::Ring;
