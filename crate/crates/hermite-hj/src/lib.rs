//! Staggered Hermite method for first-order Hamilton-Jacobi equations
//! `u_t + H(u_x[, u_y]) = 0` in one and two space dimensions.
//!
//! Degrees of freedom are scaled Taylor coefficients of the solution held at
//! the nodes of two staggered grids. Each half time step interpolates the
//! node data to a cell-centered polynomial of degree 2m+1 (per direction),
//! evolves the coefficients locally with RK4 using truncated Taylor series
//! arithmetic for the nonlinear Hamiltonian, and hands the evolved data to
//! the opposite grid. Kinks in the solution are detected with a modal-decay
//! smoothness sensor that activates a locally scaled artificial viscosity.

pub mod grid;
pub mod hamiltonian;
pub mod interp;
pub mod oracle;
pub mod probe;
pub mod sensor;
pub mod stepper;
pub mod taylor;

/// Errors produced by solver runs.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("numerical blow-up: nonfinite coefficient at t = {t}")]
    BlowUp { t: f64 },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
