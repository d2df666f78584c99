//! Numerical library and verification harness for generating functions and
//! series expansions of the classical orthogonal polynomials (Jacobi,
//! Gegenbauer, Chebyshev, Legendre).
//!
//! The crate is organized bottom-up:
//!
//! * [`numcore`]: gamma/Pochhammer machinery in signed log form, the Neumann
//!   factor and the complete elliptic integral `K`.
//! * [`hyp2f1`]: the Gauss hypergeometric function on the real line below the
//!   unit singularity, with terminating and Pfaff-transformed paths.
//! * [`orthopoly`]: the five polynomial families by three-term recurrence.
//! * [`legfun`]: associated Legendre and Ferrers functions of general degree
//!   and order, plus the half-integer closed forms.
//! * [`expansions`]: the identity registry, expansion coefficients, kernel
//!   (left-hand side) evaluators and truncated series driver.
//! * [`quadrature`]: Gauss-Jacobi rules via the Golub-Welsch eigenproblem and
//!   the coefficient-by-integral cross-check.
//! * [`verify`]: grid configuration, verification reports and the runners the
//!   command-line front end wraps.

pub mod error;
pub mod expansions;
pub mod hyp2f1;
pub mod legfun;
pub mod numcore;
pub mod orthopoly;
pub mod quadrature;
pub mod verify;

pub use error::{Error, Result};
