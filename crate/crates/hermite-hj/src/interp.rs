//! Hermite interpolation from staggered node data to cell-centered
//! polynomials.
//!
//! In 1-D, the degree-(2m+1) cell polynomial (in xi = (x - xc)/h, xi in
//! [-1/2, 1/2]) matches the m+1 scaled derivative DOFs of the two nodes at
//! xi = -1/2 and xi = +1/2. In 2-D the interpolant is the tensor product,
//! built from the four corner nodes of a cell.

use crate::taylor::Series2;

/// Interpolation operator for a given m: maps stacked node DOFs
/// [left 0..=m, right 0..=m] to the 2m+2 cell-polynomial coefficients.
#[derive(Clone, Debug)]
pub struct Interp {
    pub m: usize,
    /// (2m+2) x (2m+2), row-major: coeffs = minv * dofs.
    minv: Vec<f64>,
}

fn binom(n: usize, k: usize) -> f64 {
    let mut r = 1.0;
    for i in 0..k {
        r = r * (n - i) as f64 / (i + 1) as f64;
    }
    r
}

/// Solve a dense linear system in place (partial pivoting); returns the
/// inverse of `a` (n x n, row-major).
fn invert(a: &mut [f64], n: usize) -> Vec<f64> {
    let mut inv = vec![0.0; n * n];
    for i in 0..n {
        inv[i * n + i] = 1.0;
    }
    for col in 0..n {
        // pivot
        let mut piv = col;
        for r in col + 1..n {
            if a[r * n + col].abs() > a[piv * n + col].abs() {
                piv = r;
            }
        }
        if piv != col {
            for j in 0..n {
                a.swap(col * n + j, piv * n + j);
                inv.swap(col * n + j, piv * n + j);
            }
        }
        let d = a[col * n + col];
        assert!(d.abs() > 0.0, "singular interpolation matrix");
        for j in 0..n {
            a[col * n + j] /= d;
            inv[col * n + j] /= d;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r * n + col];
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                a[r * n + j] -= f * a[col * n + j];
                inv[r * n + j] -= f * inv[col * n + j];
            }
        }
    }
    inv
}

impl Interp {
    pub fn new(m: usize) -> Self {
        let n = 2 * m + 2;
        let mut mmat = vec![0.0; n * n];
        for (side, xi) in [(0usize, -0.5f64), (1, 0.5)] {
            for l in 0..=m {
                let row = side * (m + 1) + l;
                for k in l..n {
                    mmat[row * n + k] = binom(k, l) * xi.powi((k - l) as i32);
                }
            }
        }
        let minv = invert(&mut mmat, n);
        Interp { m, minv }
    }

    /// 1-D: cell coefficients from the first m+1 DOFs of each node series.
    pub fn cell(&self, left: &[f64], right: &[f64]) -> Vec<f64> {
        let m = self.m;
        let n = 2 * m + 2;
        let mut dofs = vec![0.0; n];
        dofs[..m + 1].copy_from_slice(&left[..m + 1]);
        dofs[m + 1..].copy_from_slice(&right[..m + 1]);
        (0..n)
            .map(|r| {
                dofs.iter()
                    .enumerate()
                    .map(|(c, &d)| self.minv[r * n + c] * d)
                    .sum()
            })
            .collect()
    }

    /// 2-D tensor-product interpolation. `corners[sy][sx]` is the node
    /// series at corner (sx, sy) of the cell (sx, sy in {0 = low, 1 = high}).
    /// Uses the first (m+1)^2 block of each corner series.
    pub fn cell2(&self, corners: [[&Series2; 2]; 2]) -> Series2 {
        let m = self.m;
        let n = 2 * m + 2;
        // Data matrix D[(sx, lx)][(sy, ly)]
        let mut d = vec![0.0; n * n];
        for sx in 0..2 {
            for sy in 0..2 {
                let node = corners[sy][sx];
                for lx in 0..=m {
                    for ly in 0..=m {
                        d[(sx * (m + 1) + lx) * n + (sy * (m + 1) + ly)] =
                            node.get(lx, ly);
                    }
                }
            }
        }
        // C = Minv * D * Minv^T
        let mut tmp = vec![0.0; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut s = 0.0;
                for j in 0..n {
                    s += self.minv[r * n + j] * d[j * n + c];
                }
                tmp[r * n + c] = s;
            }
        }
        let mut out = Series2::zeros(n - 1);
        for r in 0..n {
            for c in 0..n {
                let mut s = 0.0;
                for j in 0..n {
                    s += tmp[r * n + j] * self.minv[c * n + j];
                }
                out.set(r, c, s);
            }
        }
        out
    }
}
