//! Discrete uncertainty principles on the mesh-`h` lattice, their Bessel
//! minimizers, the exact Schrodinger and wave-factorization evolutions with
//! their Virial parabolas, and the three finite-sequence variants
//! (DFT / periodic / Dirichlet), all cross-checked against independent
//! evaluation routes.

pub mod bessel;
pub mod error;

pub use error::{Error, Result};
