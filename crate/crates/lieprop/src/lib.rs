//! Exact propagators for time-dependent Hamiltonians over su(2) and su(1,1).
//!
//! Given a Hamiltonian of the form `H(t) = h1(t) S1 + h2(t) S2 + h3(t) S3`,
//! the propagator `U(t)` is assembled in two steps from one special solution
//! `a(t)` of the adjoint flow `da/dt = h x a`:
//!
//! 1. a two-angle Euler/boost factorization `V(t)` that transports `a(0)`
//!    to `a(t)`, and
//! 2. an effective time `tau(t) = -∫ alpha(s) ds` with
//!    `alpha = (a1 h1 + a2 h2)/z^2`, giving
//!    `U(t) = V(t) exp(i tau(t) a(0)·S)`.
//!
//! Every construction can be checked against a brute-force time-ordered
//! integration of `i dU/dt = H(t) U` (see [`oracle`]).
//!
//! Modules mirror the pipeline: [`algebra`] (brackets and Killing forms),
//! [`rep`] (2x2 and adjoint representations), [`dynamics`] (coefficient
//! fields and the adjoint flow), [`factorization`] (angles, alpha, tau),
//! [`propagator`] (V, U and the closed-form general solutions), [`oracle`]
//! (direct integration and comparison metrics) and [`scenario`] (config,
//! pipeline and artifact output used by the CLI).

pub mod algebra;
pub mod dynamics;
pub mod factorization;
pub mod oracle;
pub mod propagator;
pub mod rep;
pub mod scenario;

pub use algebra::{AdjointVector, AlgebraKind};
