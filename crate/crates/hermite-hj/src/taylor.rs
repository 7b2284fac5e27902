//! Truncated Taylor series arithmetic in one and two variables.
//!
//! A 1-D series of order K holds coefficients `p[0..=K]` of a polynomial in
//! the scaled local coordinate `xi = (x - xc)/h`, so `p[l] = h^l/l! *
//! d^l f / dx^l (xc)`. The same scaling is used per direction in 2-D.
//! All operations truncate to the order of their inputs.

/// First derivative of a series with respect to x (not xi): the result has
/// the same length, with the top coefficient set to zero.
pub fn diff(p: &[f64], h: f64) -> Vec<f64> {
    let k = p.len() - 1;
    let mut out = vec![0.0; k + 1];
    for i in 0..k {
        out[i] = (i as f64 + 1.0) * p[i + 1] / h;
    }
    out
}

/// Truncated Cauchy product of two series of equal length.
pub fn cauchy(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    debug_assert_eq!(n, b.len());
    let mut out = vec![0.0; n];
    for k in 0..n {
        let mut s = 0.0;
        for j in 0..=k {
            s += a[j] * b[k - j];
        }
        out[k] = s;
    }
    out
}

/// Evaluate a series at scaled coordinate xi (Horner).
pub fn eval(p: &[f64], xi: f64) -> f64 {
    let mut acc = 0.0;
    for &c in p.iter().rev() {
        acc = acc * xi + c;
    }
    acc
}

/// Series of sin(u) and cos(u) for a series argument u, by the coupled
/// recursion S_k = (1/k) sum_{j=1..k} j u_j C_{k-j} and the matching
/// recursion for C with opposite sign.
pub fn sincos(u: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = u.len();
    let mut s = vec![0.0; n];
    let mut c = vec![0.0; n];
    s[0] = u[0].sin();
    c[0] = u[0].cos();
    for k in 1..n {
        let mut ds = 0.0;
        let mut dc = 0.0;
        for j in 1..=k {
            let ju = j as f64 * u[j];
            dc += ju * c[k - j];
            ds += ju * s[k - j];
        }
        s[k] = dc / k as f64;
        c[k] = -ds / k as f64;
    }
    (s, c)
}

/// Series of |u|, approximated by the sign of the value at the expansion
/// point: sign(u_0) * u. Exact wherever u does not change sign on the cell.
pub fn abs_by_sign(u: &[f64]) -> Vec<f64> {
    if u[0] >= 0.0 {
        u.to_vec()
    } else {
        u.iter().map(|x| -x).collect()
    }
}

/// Dense 2-D series: coefficients `a[ix][iy]` of xi^ix * eta^iy, stored
/// row-major with per-direction order K (so (K+1)^2 entries).
#[derive(Clone, Debug, PartialEq)]
pub struct Series2 {
    pub k: usize,
    pub a: Vec<f64>,
}

impl Series2 {
    pub fn zeros(k: usize) -> Self {
        Series2 { k, a: vec![0.0; (k + 1) * (k + 1)] }
    }

    pub fn constant(k: usize, v: f64) -> Self {
        let mut s = Self::zeros(k);
        s.a[0] = v;
        s
    }

    #[inline]
    pub fn get(&self, ix: usize, iy: usize) -> f64 {
        self.a[ix * (self.k + 1) + iy]
    }

    #[inline]
    pub fn set(&mut self, ix: usize, iy: usize, v: f64) {
        self.a[ix * (self.k + 1) + iy] = v;
    }

    /// d/dx in physical units (xi = (x - xc)/hx).
    pub fn diff_x(&self, hx: f64) -> Series2 {
        let k = self.k;
        let mut out = Series2::zeros(k);
        for ix in 0..k {
            for iy in 0..=k {
                out.set(ix, iy, (ix as f64 + 1.0) * self.get(ix + 1, iy) / hx);
            }
        }
        out
    }

    /// d/dy in physical units (eta = (y - yc)/hy).
    pub fn diff_y(&self, hy: f64) -> Series2 {
        let k = self.k;
        let mut out = Series2::zeros(k);
        for ix in 0..=k {
            for iy in 0..k {
                out.set(ix, iy, (iy as f64 + 1.0) * self.get(ix, iy + 1) / hy);
            }
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Series2) -> Series2 {
        let k = self.k;
        debug_assert_eq!(k, other.k);
        let mut out = Series2::zeros(k);
        for ax in 0..=k {
            for ay in 0..=k {
                let va = self.get(ax, ay);
                if va == 0.0 {
                    continue;
                }
                for bx in 0..=(k - ax) {
                    for by in 0..=(k - ay) {
                        let v = out.get(ax + bx, ay + by) + va * other.get(bx, by);
                        out.set(ax + bx, ay + by, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Series2) -> Series2 {
        let mut out = self.clone();
        for (o, v) in out.a.iter_mut().zip(other.a.iter()) {
            *o += v;
        }
        out
    }

    pub fn scale(&self, c: f64) -> Series2 {
        Series2 { k: self.k, a: self.a.iter().map(|v| v * c).collect() }
    }

    /// Evaluate at scaled coordinates (xi, eta).
    pub fn eval(&self, xi: f64, eta: f64) -> f64 {
        let k = self.k;
        let mut acc = 0.0;
        for ix in (0..=k).rev() {
            let mut row = 0.0;
            for iy in (0..=k).rev() {
                row = row * eta + self.get(ix, iy);
            }
            acc = acc * xi + row;
        }
        acc
    }
}

/// Series of sin(u) and cos(u) for a 2-D series argument, by the
/// multivariate recursion along the x (or, for pure-y indices, the y)
/// direction: k_p S_k = sum_{e_p <= j <= k} j_p u_j C_{k-j}.
pub fn sincos2(u: &Series2) -> (Series2, Series2) {
    let k = u.k;
    let mut s = Series2::zeros(k);
    let mut c = Series2::zeros(k);
    s.set(0, 0, u.get(0, 0).sin());
    c.set(0, 0, u.get(0, 0).cos());
    // Fill by increasing total degree so all lower coefficients are known.
    for deg in 1..=(2 * k) {
        for kx in 0..=k.min(deg) {
            let ky = deg - kx;
            if ky > k {
                continue;
            }
            let (mut ds, mut dc) = (0.0, 0.0);
            if kx > 0 {
                // recurse along x: j ranges with jx >= 1
                for jx in 1..=kx {
                    for jy in 0..=ky {
                        let ju = jx as f64 * u.get(jx, jy);
                        dc += ju * c.get(kx - jx, ky - jy);
                        ds += ju * s.get(kx - jx, ky - jy);
                    }
                }
                s.set(kx, ky, dc / kx as f64);
                c.set(kx, ky, -ds / kx as f64);
            } else {
                // kx == 0, ky >= 1: recurse along y
                for jy in 1..=ky {
                    let ju = jy as f64 * u.get(0, jy);
                    dc += ju * c.get(0, ky - jy);
                    ds += ju * s.get(0, ky - jy);
                }
                s.set(0, ky, dc / ky as f64);
                c.set(0, ky, -ds / ky as f64);
            }
        }
    }
    (s, c)
}

/// |u| via the sign of the expansion-point value, as in 1-D.
pub fn abs_by_sign2(u: &Series2) -> Series2 {
    if u.get(0, 0) >= 0.0 {
        u.clone()
    } else {
        u.scale(-1.0)
    }
}
