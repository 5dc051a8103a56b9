//! Exact computations with quantum Schur algebras, their isotropic-flag
//! analogues, and the stabilized (modified) algebras built from them.

pub mod error;
pub mod flagconv;
pub mod laurent;
pub mod engine;
pub mod lattice;
pub mod type_a;
pub mod coideal;
pub mod suites;

pub use error::{Error, Result};
pub use laurent::Laurent;
pub use lattice::Cell;
