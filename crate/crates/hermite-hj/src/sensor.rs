//! Discontinuity sensor: Legendre modal decay per dual cell.
//!
//! Each sensing window is a dual cell, mapped to z in [-1, 1]. The left
//! half (z in [-1, 0]) is covered by the evolved polynomial of the left
//! node (local coordinate xi = (z+1)/2 in [0, 1/2]), the right half by the
//! right node (xi = (z-1)/2 in [-1/2, 0]). The window function is projected
//! onto Legendre modes q-hat_n, n = 0..N_p-1; a baseline decay floor and a
//! skyline (suffix max) are applied, then the decay exponent s of
//! |q-bar_n| ~ c n^(-s) is fit by least squares in log-log. The viscosity
//! ramp maps s to nu in [0, nu0].

use crate::taylor::{eval, Series2};

/// Quadrature used to evaluate the half-window projections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadrature {
    /// Gauss-Legendre with enough points for exact projection (default).
    GaussLegendre,
    /// Gauss-Lobatto-Legendre point sampling (alternative mode).
    LobattoLegendre,
}

#[derive(Clone, Copy, Debug)]
pub struct SensorConfig {
    pub m: usize,
    /// Polynomial degree of the window pieces, N = 2m+1.
    pub n_deg: usize,
    /// Number of modes, N_p = 2m+3.
    pub np: usize,
    pub s0: f64,
    pub w: f64,
    pub quad: Quadrature,
}

impl SensorConfig {
    pub fn new(m: usize) -> Self {
        SensorConfig {
            m,
            n_deg: 2 * m + 1,
            np: 2 * m + 3,
            s0: 2.0,
            w: 1.0,
            quad: Quadrature::GaussLegendre,
        }
    }
}

/// Values P_0(x)..P_nmax(x) by the three-term recurrence.
fn legendre_all(nmax: usize, x: f64) -> Vec<f64> {
    let mut p = vec![0.0; nmax + 1];
    p[0] = 1.0;
    if nmax >= 1 {
        p[1] = x;
    }
    for n in 1..nmax {
        p[n + 1] = ((2 * n + 1) as f64 * x * p[n] - n as f64 * p[n - 1]) / (n + 1) as f64;
    }
    p
}

/// (P_n(x), P_n'(x)).
fn legendre_pd(n: usize, x: f64) -> (f64, f64) {
    let p = legendre_all(n, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p[n] - p[n - 1]) / (x * x - 1.0);
    (p[n], d)
}

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n {
        let mut xi = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_pd(n, xi);
            let dx = p / d;
            xi -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        x[i] = xi;
        let (_, d) = legendre_pd(n, xi);
        w[i] = 2.0 / ((1.0 - xi * xi) * d * d);
    }
    // ascending order for determinism
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| x[a].partial_cmp(&x[b]).unwrap());
    (
        idx.iter().map(|&i| x[i]).collect(),
        idx.iter().map(|&i| w[i]).collect(),
    )
}

/// Gauss-Lobatto-Legendre nodes and weights on [-1, 1] (n >= 2 points).
pub fn lobatto_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let nn = n - 1;
    let mut x = vec![0.0; n];
    x[0] = -1.0;
    x[n - 1] = 1.0;
    // interior nodes: roots of P'_{n-1}
    #[allow(clippy::needless_range_loop)] // i drives the Newton seed too
    for i in 1..n - 1 {
        let mut xi = (std::f64::consts::PI * i as f64 / nn as f64).cos();
        for _ in 0..100 {
            // Newton on f = P'_{nn}; f' from the Legendre ODE:
            // (1-x^2) P'' = 2x P' - nn(nn+1) P
            let (p, d) = legendre_pd(nn, xi);
            let d2 = (2.0 * xi * d - (nn * (nn + 1)) as f64 * p) / (1.0 - xi * xi);
            let dx = d / d2;
            xi -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        x[i] = xi;
    }
    x.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut w = vec![0.0; n];
    for i in 0..n {
        let (p, _) = legendre_pd(nn, x[i]);
        w[i] = 2.0 / ((nn * (nn + 1)) as f64 * p * p);
    }
    (x, w)
}

/// Modal spectrum of one window.
#[derive(Clone, Debug)]
pub struct ModalSpectrum {
    /// q-hat_n, n = 0..N_p-1 (2-D: total-degree group maxima).
    pub qhat: Vec<f64>,
    /// L2 norm of the fluctuating part of the window (mean mode excluded).
    pub l2_fluct: f64,
}

/// Precomputed 1-D window projector.
#[derive(Clone, Debug)]
pub struct Sensor1 {
    pub cfg: SensorConfig,
    /// Quadrature weights scaled by the half-window jacobian.
    gw: Vec<f64>,
    /// Local xi sample points per half (half 0 = left node, 1 = right node).
    xi: [Vec<f64>; 2],
    /// Legendre values at the mapped window coordinate z per half.
    pz: [Vec<Vec<f64>>; 2],
    b2: Vec<f64>,
    logn: Vec<f64>,
}

fn baseline_b2(np: usize, n_deg: usize) -> Vec<f64> {
    let b: Vec<f64> = (1..np).map(|k| (k as f64).powi(-(n_deg as i32))).collect();
    let s: f64 = b.iter().map(|v| v * v).sum();
    b.iter().map(|v| v * v / s).collect()
}

impl Sensor1 {
    pub fn new(cfg: SensorConfig) -> Self {
        let npts = (2 * cfg.m + 1 + cfg.np) / 2 + 2;
        let (gx, gw0) = match cfg.quad {
            Quadrature::GaussLegendre => gauss_legendre(npts),
            Quadrature::LobattoLegendre => lobatto_legendre(npts.max(2)),
        };
        let mut xi = [vec![], vec![]];
        let mut pz: [Vec<Vec<f64>>; 2] = [vec![], vec![]];
        for half in 0..2 {
            let z: Vec<f64> = gx.iter().map(|&g| (g - 1.0) / 2.0 + half as f64).collect();
            xi[half] = z
                .iter()
                .map(|&zz| if half == 0 { (zz + 1.0) / 2.0 } else { (zz - 1.0) / 2.0 })
                .collect();
            pz[half] = z.iter().map(|&zz| legendre_all(cfg.np - 1, zz)).collect();
        }
        Sensor1 {
            cfg,
            gw: gw0.iter().map(|&w| w / 2.0).collect(),
            xi,
            pz,
            b2: baseline_b2(cfg.np, cfg.n_deg),
            logn: (1..cfg.np).map(|n| (n as f64).ln()).collect(),
        }
    }

    /// Project the window spanned by node polynomials pL (left) and pR
    /// (right) onto Legendre modes.
    #[allow(clippy::needless_range_loop)] // mode index n drives both factors
    pub fn project(&self, p_left: &[f64], p_right: &[f64]) -> ModalSpectrum {
        let np = self.cfg.np;
        let mut qhat = vec![0.0; np];
        for (half, p) in [(0usize, p_left), (1, p_right)] {
            for (j, &w) in self.gw.iter().enumerate() {
                let v = w * eval(p, self.xi[half][j]);
                for n in 0..np {
                    qhat[n] += v * self.pz[half][j][n];
                }
            }
        }
        for (n, q) in qhat.iter_mut().enumerate() {
            *q *= (2 * n + 1) as f64 / 2.0;
        }
        let l2_fluct = (1..np)
            .map(|n| qhat[n] * qhat[n] * 2.0 / (2 * n + 1) as f64)
            .sum::<f64>()
            .sqrt();
        ModalSpectrum { qhat, l2_fluct }
    }

    /// Decay exponent s from a spectrum (baseline + skyline + LS fit).
    pub fn s_of(&self, sp: &ModalSpectrum) -> f64 {
        s_from_spectrum(sp, &self.b2, &self.logn)
    }
}

/// Shared spectrum -> s pipeline (1-D and 2-D grouped spectra).
pub fn s_from_spectrum(sp: &ModalSpectrum, b2: &[f64], logn: &[f64]) -> f64 {
    let np = sp.qhat.len();
    // A window that is constant to rounding precision has a spectrum made
    // of floating-point noise; treat it as fully smooth instead of fitting
    // the noise.
    if sp.l2_fluct <= 1e-13 * sp.qhat[0].abs() {
        return f64::INFINITY;
    }
    // baseline: q-tilde_n^2 = q-hat_n^2 + ||q||^2 b-hat_n^2, n >= 1
    let qt: Vec<f64> = (1..np)
        .map(|n| (sp.qhat[n] * sp.qhat[n] + sp.l2_fluct * sp.l2_fluct * b2[n - 1]).sqrt())
        .collect();
    let qb = skyline(&qt);
    if qb.iter().all(|&v| v == 0.0) {
        return f64::INFINITY;
    }
    fit_decay_rate(&qb, logn)
}

/// Skyline pessimization: q-bar_n = max over i in {min(n, N_p-2), .., N_p-1}
/// of q-tilde_i. Input holds modes 1..N_p-1 (0-based), output likewise.
pub fn skyline(qt: &[f64]) -> Vec<f64> {
    let np = qt.len() + 1;
    let mut qb = vec![0.0; np - 1];
    for n in 1..np {
        let lo = n.min(np - 2);
        qb[n - 1] = qt[lo - 1..]
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
    }
    qb
}

/// Closed-form least-squares decay exponent: slope of -log q vs log n.
pub fn fit_decay_rate(qb: &[f64], logn: &[f64]) -> f64 {
    let a = qb.len() as f64;
    let sx: f64 = logn.iter().sum();
    let sxx: f64 = logn.iter().map(|x| x * x).sum();
    let (mut sy, mut sxy) = (0.0, 0.0);
    for (x, &q) in logn.iter().zip(qb) {
        let ly = q.ln();
        sy += ly;
        sxy += x * ly;
    }
    -(a * sxy - sx * sy) / (a * sxx - sx * sx)
}

/// Viscosity ramp: nu0 for s <= s0-w, 0 for s >= s0+w, sine blend between.
pub fn viscosity_of_s(s: f64, nu0: f64, s0: f64, w: f64) -> f64 {
    if s <= s0 - w {
        nu0
    } else if s >= s0 + w {
        0.0
    } else {
        nu0 * 0.5 * (1.0 + (std::f64::consts::PI * (s0 - s) / (2.0 * w)).sin())
    }
}

/// 1-D [1,2,1]/4 viscosity average. `periodic` wraps; otherwise edges clamp.
pub fn average_viscosity_1d(nu: &[f64], periodic: bool) -> Vec<f64> {
    let n = nu.len();
    (0..n)
        .map(|i| {
            let (km, kp) = if periodic {
                (nu[(i + n - 1) % n], nu[(i + 1) % n])
            } else {
                (nu[i.saturating_sub(1)], nu[(i + 1).min(n - 1)])
            };
            0.25 * (km + 2.0 * nu[i] + kp)
        })
        .collect()
}

/// 2-D [1,2,1] x [1,2,1] / 16 average on an nx * ny grid (row-major in y).
pub fn average_viscosity_2d(nu: &[f64], nx: usize, ny: usize, periodic: bool) -> Vec<f64> {
    let at = |i: isize, j: isize| -> f64 {
        let (ii, jj) = if periodic {
            (
                (i.rem_euclid(nx as isize)) as usize,
                (j.rem_euclid(ny as isize)) as usize,
            )
        } else {
            (
                i.clamp(0, nx as isize - 1) as usize,
                j.clamp(0, ny as isize - 1) as usize,
            )
        };
        nu[jj * nx + ii]
    };
    let wt = [1.0, 2.0, 1.0];
    let mut out = vec![0.0; nx * ny];
    for j in 0..ny {
        for i in 0..nx {
            let mut s = 0.0;
            for (dj, wy) in (-1..=1).zip(wt) {
                for (di, wx) in (-1..=1).zip(wt) {
                    s += wx * wy * at(i as isize + di, j as isize + dj);
                }
            }
            out[j * nx + i] = s / 16.0;
        }
    }
    out
}

/// Precomputed 2-D window projector. The window is a dual cell quartered by
/// its four corner-node polynomials; tensor Legendre coefficients are
/// grouped by total degree (group magnitudes = max |C_{k,l}|, k+l = i).
#[derive(Clone, Debug)]
pub struct Sensor2 {
    pub cfg: SensorConfig,
    gw: Vec<f64>,
    xi: [Vec<f64>; 2],
    pz: [Vec<Vec<f64>>; 2],
    b2: Vec<f64>,
    logn: Vec<f64>,
}

impl Sensor2 {
    pub fn new(cfg: SensorConfig) -> Self {
        let s1 = Sensor1::new(cfg);
        Sensor2 {
            cfg,
            gw: s1.gw,
            xi: s1.xi,
            pz: s1.pz,
            b2: s1.b2,
            logn: s1.logn,
        }
    }

    /// `corners[qy][qx]` is the node polynomial at corner (qx, qy) of the
    /// window (0 = low side, 1 = high side); corner (qx, qy) covers the
    /// matching quadrant.
    #[allow(clippy::needless_range_loop)] // quadrant indices address corners and quadrature tables
    pub fn project(&self, corners: [[&Series2; 2]; 2]) -> ModalSpectrum {
        let np = self.cfg.np;
        let nq = self.gw.len();
        let mut c = vec![0.0; np * np];
        for qy in 0..2 {
            for qx in 0..2 {
                let p = corners[qy][qx];
                for jy in 0..nq {
                    let eta = self.xi[qy][jy];
                    for jx in 0..nq {
                        let v = self.gw[jx] * self.gw[jy] * p.eval(self.xi[qx][jx], eta);
                        for l in 0..np {
                            let vpl = v * self.pz[qy][jy][l];
                            for k in 0..np {
                                c[l * np + k] += vpl * self.pz[qx][jx][k];
                            }
                        }
                    }
                }
            }
        }
        let mut l2f2 = 0.0;
        for l in 0..np {
            for k in 0..np {
                let v = &mut c[l * np + k];
                *v *= (2 * k + 1) as f64 / 2.0 * (2 * l + 1) as f64 / 2.0;
                if k + l > 0 {
                    l2f2 += *v * *v * (2.0 / (2 * k + 1) as f64) * (2.0 / (2 * l + 1) as f64);
                }
            }
        }
        // group by total degree, capped at N_p - 1
        let mut qhat = vec![0.0f64; np];
        for l in 0..np {
            for k in 0..np {
                let g = (k + l).min(np - 1);
                if k + l < np {
                    qhat[g] = qhat[g].max(c[l * np + k].abs());
                }
            }
        }
        ModalSpectrum { qhat, l2_fluct: l2f2.sqrt() }
    }

    pub fn s_of(&self, sp: &ModalSpectrum) -> f64 {
        s_from_spectrum(sp, &self.b2, &self.logn)
    }
}
