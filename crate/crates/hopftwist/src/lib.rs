//! Exact-arithmetic toolkit for finite-dimensional Hopf algebras given by
//! structure constants over cyclotomic fields: 2-cocycle deformations,
//! comodule-algebra verification, Hopf–Galois maps, and trace-based
//! invariant fingerprints of deformations.
//!
//! All arithmetic is exact (arbitrary-precision rationals on the power
//! basis of `Q(zeta_N)`); there is no floating point anywhere.
//!
//! The crate is organized around a handful of layers:
//!
//! * [`scalar`] / [`tensor`] — exact cyclotomic numbers and sparse exact
//!   multi-linear algebra (contraction, traces, fraction-free solving).
//! * [`groups`] / [`cohomology`] — finite groups as multiplication tables,
//!   group 2-cocycles valued in roots of unity and `H^2(G, mu_N)`.
//! * [`hopf`] — Hopf algebra data with full axiom verification, duals and
//!   convolution inverses.
//! * [`rewrite`] — deterministic noncommutative rewriting for presented
//!   algebras with a declared normal-form basis.
//! * [`deform`] — Hopf 2-cocycles, twisted algebras, twisted antipodes,
//!   Galois maps `M`/`T`, generator twists and double twists.
//! * [`invariants`] — trace invariants, fingerprints, Galois twisting.
//! * [`catalog`] — constructors for the worked families: group algebras,
//!   dual group algebras, Taft algebras and the two 72-dimensional
//!   bosonizations over `S_3` with their deformation families.
//! * [`io`] / [`cli`] — JSON bundles and the command-line front end.

pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod deform;
pub mod error;
pub mod groups;
pub mod hopf;
pub mod invariants;
pub mod io;
pub mod rewrite;
pub mod scalar;
pub mod snf;
pub mod tensor;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
