//! Staggered grids for the Hermite solver.
//!
//! The primal grid has n+1 nodes at x_i = a + i h, i = 0..=n, with
//! h = (b - a)/n. The dual grid has n+2 nodes at the cell centers
//! x_{i+1/2} plus one ghost node beyond each boundary; for periodic
//! problems the dual grid simply holds the n interior centers and wraps.

/// Boundary treatment for a 1-D (or per-axis) problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Solution is periodic over the domain.
    Periodic,
    /// Dirichlet data supplied from the exact solution on ghost nodes.
    Dirichlet,
}

/// One axis of a staggered grid.
#[derive(Clone, Debug)]
pub struct Axis {
    pub a: f64,
    pub b: f64,
    pub n: usize,
    pub h: f64,
    pub bc: Boundary,
}

impl Axis {
    pub fn new(a: f64, b: f64, n: usize, bc: Boundary) -> Self {
        assert!(n >= 2 && b > a);
        Axis { a, b, n, h: (b - a) / n as f64, bc }
    }

    /// Coordinate of primal node i (0..=n).
    pub fn primal(&self, i: usize) -> f64 {
        self.a + i as f64 * self.h
    }

    /// Coordinate of dual node j. For periodic axes j indexes the n cell
    /// centers 0..n; for Dirichlet axes j indexes n+2 nodes where j = 0 and
    /// j = n+1 are ghost centers half a cell outside the domain.
    pub fn dual(&self, j: usize) -> f64 {
        match self.bc {
            Boundary::Periodic => self.a + (j as f64 + 0.5) * self.h,
            Boundary::Dirichlet => self.a + (j as f64 - 0.5) * self.h,
        }
    }

    /// Number of dual nodes stored.
    pub fn n_dual(&self) -> usize {
        match self.bc {
            Boundary::Periodic => self.n,
            Boundary::Dirichlet => self.n + 2,
        }
    }

    /// Number of primal nodes stored (periodic stores n, endpoint dropped).
    pub fn n_primal(&self) -> usize {
        match self.bc {
            Boundary::Periodic => self.n,
            Boundary::Dirichlet => self.n + 1,
        }
    }
}
