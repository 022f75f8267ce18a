//! Exact Z₂ homology and quantum homology of Fano toric manifolds and of
//! their real Lagrangians, computed from a Delzant moment polytope.
//!
//! The crate is `no_std` and needs only `alloc`. Modules, bottom-up:
//!
//! - [`linalg`]: exact integer and rational linear algebra.
//! - [`polytope`]: Delzant validation, vertices, primitive collections,
//!   Batyrev vectors, Morse indices.
//! - [`f2ring`]: graded polynomials over F₂, Gröbner bases, quotient rings.
//! - [`qh`]: classical and quantum presentations, Seidel elements,
//!   inversion, certificates.
#![no_std]

extern crate alloc;

pub mod linalg;
pub mod f2ring;
pub mod polytope;
pub mod qh;
