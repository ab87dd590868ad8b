//! Weighted Bergman spaces on the unit disk, the bidisk and the unit ball.
//!
//! The crate is organised by subsystem:
//!
//! * [`geometry`]: pseudo-hyperbolic and hyperbolic metrics, pseudo-hyperbolic
//!   disks, radius conversion, ball automorphisms.
//! * [`functions`]: the analytic test functions and their derivatives.
//! * [`quadrature`]: `dA_α` integration with the ε-truncation protocol, bidisk
//!   tensor grids, quasi-Monte Carlo on the ball, membership decisions.
//! * [`witness`]: Lipschitz witness construction and verification.
//! * [`lifting`]: the symmetric lifting operator `L` and the diagonal `Δ`.

pub mod error;
pub mod functions;
pub mod geometry;
pub mod lifting;
pub mod numerics;
pub mod quadrature;
pub mod sampling;
pub mod witness;

pub use error::{Error, Result};
pub use num_complex::Complex64;
