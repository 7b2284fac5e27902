//! Independent exact / semi-analytic solutions for the built-in examples,
//! used for initial data, Dirichlet boundary data, and error measurement.

use crate::hamiltonian::Example;

/// Golden-section minimizer on [a, b].
fn golden<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let g = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    (a + b) / 2.0
}

/// Scan `npts` samples of f on [a, b], then refine the best bracket.
fn scan_min<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, npts: usize) -> f64 {
    let dy = (b - a) / (npts - 1) as f64;
    let mut best = a;
    let mut fb = f(a);
    for i in 1..npts {
        let y = a + i as f64 * dy;
        let v = f(y);
        if v < fb {
            fb = v;
            best = y;
        }
    }
    let ym = golden(f, (best - dy).max(a), (best + dy).min(b), 1e-13);
    f(ym).min(fb)
}

/// Burgers, H = p^2/2, u0 = sin x: Lax-Hopf / Hopf-Lax formula
/// u(x,t) = min_y [ (x-y)^2/(2t) + sin y ].
pub fn burgers1d_exact(x: f64, t: f64) -> f64 {
    if t == 0.0 {
        return x.sin();
    }
    let f = |y: f64| (x - y) * (x - y) / (2.0 * t) + y.sin();
    scan_min(&f, x - 3.0 * t - 1.0, x + 3.0 * t + 1.0, 400)
}

/// Eikonal, H = |p|, u0 = sin x: u(x,t) = min of sin over [x-t, x+t].
pub fn eikonal1d_exact(x: f64, t: f64) -> f64 {
    use std::f64::consts::PI;
    let (a, b) = (x - t, x + t);
    let mut best = a.sin().min(b.sin());
    // interior minimum -1 at y = -pi/2 + 2 pi k if it falls inside [a, b]
    let k0 = ((a + PI / 2.0) / (2.0 * PI)).ceil();
    if -PI / 2.0 + 2.0 * PI * k0 <= b {
        best = best.min(-1.0);
    }
    best
}

/// Nonconvex cosine, H = -cos(p + 1), u0 = -cos(pi x): characteristics
/// x = x0 + t H'(p0), solved for x0 by Newton (smooth up to the tested T).
pub fn noncvx_cos_exact(x: f64, t: f64) -> f64 {
    use std::f64::consts::PI;
    let mut x0 = x;
    for _ in 0..100 {
        let p = PI * (PI * x0).sin();
        let g = t * (p + 1.0).sin() + x0 - x;
        let dg = t * (p + 1.0).cos() * PI * PI * (PI * x0).cos() + 1.0;
        let x0n = x0 - g / dg;
        let done = (x0n - x0).abs() < 1e-15;
        x0 = x0n;
        if done {
            break;
        }
    }
    let p = PI * (PI * x0).sin();
    t * ((p + 1.0).sin() * p + (p + 1.0).cos()) - (PI * x0).cos()
}

/// Riemann quartic, H = (p^2-1)(p^2-4)/4, u0 = -2|x| = min_{|v|<=2} vx:
/// Hopf formula u(x,t) = min_{|v|<=2} [ v x - t H(v) ].
pub fn riemann_quartic_exact(x: f64, t: f64) -> f64 {
    let h = |v: f64| 0.25 * (v * v - 1.0) * (v * v - 4.0);
    let f = |v: f64| v * x - t * h(v);
    scan_min(&f, -2.0, 2.0, 400)
}

/// 2-D Burgers, H = (p+q)^2/2, u0 = -cos(x+y): reduces to w = x+y with
/// U_t + 2 U_w^2 = 0, i.e. Hopf-Lax with quadratic cost (x+y-z)^2/(8t).
pub fn burgers2d_exact(x: f64, y: f64, t: f64) -> f64 {
    let w = x + y;
    if t == 0.0 {
        return -w.cos();
    }
    let f = |z: f64| (w - z) * (w - z) / (8.0 * t) - z.cos();
    scan_min(&f, w - 9.0 * t - 1.0, w + 9.0 * t + 1.0, 600)
}

/// 2-D nonconvex, H = p q, u0 = sin x + cos y: characteristics with
/// constant (p, q) = (cos x0, -sin y0); foot point by 2-variable Newton.
pub fn xy_nonconvex_exact(x: f64, y: f64, t: f64) -> f64 {
    let (mut x0, mut y0) = (x, y);
    for _ in 0..100 {
        // x = x0 + t q0 = x0 - t sin y0;  y = y0 + t p0 = y0 + t cos x0
        let f1 = x0 - t * y0.sin() - x;
        let f2 = y0 + t * x0.cos() - y;
        // Jacobian [[1, -t cos y0], [-t sin x0, 1]]
        let (a, b) = (1.0, -t * y0.cos());
        let (c, d) = (-t * x0.sin(), 1.0);
        let det = a * d - b * c;
        let dx = (d * f1 - b * f2) / det;
        let dy = (-c * f1 + a * f2) / det;
        x0 -= dx;
        y0 -= dy;
        if dx.abs().max(dy.abs()) < 1e-15 {
            break;
        }
    }
    // u = u0 + t (p H_p + q H_q - H) = u0 + t p0 q0
    x0.sin() + y0.cos() + t * x0.cos() * (-y0.sin())
}

/// Exact solution for the 1-D examples that have one.
pub fn exact_1d(example: Example) -> Option<fn(f64, f64) -> f64> {
    match example {
        Example::Burgers1d => Some(burgers1d_exact),
        Example::Eikonal1d => Some(eikonal1d_exact),
        Example::NoncvxCos => Some(noncvx_cos_exact),
        Example::RiemannQuartic => Some(riemann_quartic_exact),
        _ => None,
    }
}

/// Exact solution for the 2-D examples that have one.
pub fn exact_2d(example: Example) -> Option<fn(f64, f64, f64) -> f64> {
    match example {
        Example::Burgers2d => Some(burgers2d_exact),
        Example::XyNonconvex => Some(xy_nonconvex_exact),
        _ => None,
    }
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// l-th derivative of the initial data of a 1-D example at x.
pub fn u0_derivs_1d(example: Example, l: usize, x: f64) -> f64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    match example {
        Example::Burgers1d | Example::Eikonal1d => (x + l as f64 * FRAC_PI_2).sin(),
        Example::NoncvxCos => -PI.powi(l as i32) * (PI * x + l as f64 * FRAC_PI_2).cos(),
        Example::RiemannQuartic => match l {
            0 => -2.0 * x.abs(),
            1 => -2.0 * sgn(x),
            _ => 0.0,
        },
        _ => panic!("u0_derivs_1d on 2-D example"),
    }
}

/// Mixed partial (lx, ly) of the initial data of a 2-D example at (x, y).
pub fn u0_derivs_2d(example: Example, lx: usize, ly: usize, x: f64, y: f64) -> f64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    match example {
        Example::Burgers2d => -((x + y) + (lx + ly) as f64 * FRAC_PI_2).cos(),
        Example::XyNonconvex => match (lx, ly) {
            (0, 0) => x.sin() + y.cos(),
            (_, 0) => (x + lx as f64 * FRAC_PI_2).sin(),
            (0, _) => (y + ly as f64 * FRAC_PI_2).cos(),
            _ => 0.0,
        },
        Example::RiemannSin2d => match (lx, ly) {
            (0, 0) => PI * (y.abs() - x.abs()),
            (1, 0) => -PI * sgn(x),
            (0, 1) => PI * sgn(y),
            _ => 0.0,
        },
        Example::OptimalControl => 0.0,
        _ => panic!("u0_derivs_2d on 1-D example"),
    }
}

/// Order-`l` derivative of the profile used to extend |x| onto a padded
/// periodic domain [-a, a]: equal to |x| for |x| <= a - 1, then blended by
/// an even polynomial in s = |x| - a so that the profile is C^3 at the
/// junction and smooth (even in s) across the periodic wrap at |x| = a.
/// Higher derivatives (l >= 4) of the blend are not matched at the junction.
pub fn padded_abs_derivs(l: usize, x: f64, a: f64) -> f64 {
    let r = a - 1.0;
    let (sg, ax) = (sgn(x), x.abs());
    if ax <= r {
        match l {
            0 => ax,
            1 => sg,
            _ => 0.0,
        }
    } else {
        // q(s) = A + B s^2 + C s^4 + D s^6 with q(-1) = r, q'(-1) = 1,
        // q''(-1) = q'''(-1) = 0.
        let s = ax - a;
        let (b, c, d) = (-15.0 / 16.0, 5.0 / 16.0, -1.0 / 16.0);
        let s2 = s * s;
        match l {
            0 => r + 11.0 / 16.0 + s2 * (b + s2 * (c + s2 * d)),
            1 => sg * s * (2.0 * b + s2 * (4.0 * c + s2 * 6.0 * d)),
            2 => 2.0 * b + s2 * (12.0 * c + s2 * 30.0 * d),
            3 => sg * s * (24.0 * c + s2 * 120.0 * d),
            _ => 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Finite-difference residual of u_t + H(u_x) = 0 at a smooth point.
    fn residual_1d<F: Fn(f64, f64) -> f64, H: Fn(f64) -> f64>(
        u: F,
        h: H,
        x: f64,
        t: f64,
        d: f64,
    ) -> f64 {
        let ut = (u(x, t + d) - u(x, t - d)) / (2.0 * d);
        let ux = (u(x + d, t) - u(x - d, t)) / (2.0 * d);
        ut + h(ux)
    }

    #[test]
    fn burgers_oracle_satisfies_pde() {
        let r = residual_1d(burgers1d_exact, |p| 0.5 * p * p, 1.3, 0.3, 1e-5);
        assert!(r.abs() < 1e-7, "residual {r}");
    }

    #[test]
    fn eikonal_oracle_matches_direct_min() {
        // dense direct minimization as an independent check
        for &(x, t) in &[(0.7, 0.4), (3.0, 1.0), (5.5, 0.2)] {
            let mut direct = f64::INFINITY;
            for i in 0..=20000 {
                let y = x - t + 2.0 * t * i as f64 / 20000.0;
                direct = direct.min(y.sin());
            }
            assert!((eikonal1d_exact(x, t) - direct).abs() < 1e-7);
        }
    }

    #[test]
    fn noncvx_oracle_satisfies_pde() {
        let t = 0.5 / (std::f64::consts::PI * std::f64::consts::PI);
        let r = residual_1d(noncvx_cos_exact, |p| -(p + 1.0).cos(), 0.3, t, 1e-6);
        assert!(r.abs() < 1e-6, "residual {r}");
    }

    #[test]
    fn quartic_oracle_satisfies_pde_off_kinks() {
        let h = |p: f64| 0.25 * (p * p - 1.0) * (p * p - 4.0);
        for &x in &[0.8, -0.9, 0.3] {
            let r = residual_1d(riemann_quartic_exact, h, x, 0.7, 1e-6);
            assert!(r.abs() < 1e-5, "x={x} residual {r}");
        }
        // initial condition
        assert!((riemann_quartic_exact(0.4, 0.0) + 0.8).abs() < 1e-10);
    }

    #[test]
    fn burgers2d_oracle_satisfies_pde() {
        let d = 1e-5;
        let (x, y, t) = (1.1, 0.4, 0.07);
        let ut = (burgers2d_exact(x, y, t + d) - burgers2d_exact(x, y, t - d)) / (2.0 * d);
        let p = (burgers2d_exact(x + d, y, t) - burgers2d_exact(x - d, y, t)) / (2.0 * d);
        let q = (burgers2d_exact(x, y + d, t) - burgers2d_exact(x, y - d, t)) / (2.0 * d);
        let r = ut + 0.5 * (p + q) * (p + q);
        assert!(r.abs() < 1e-6, "residual {r}");
    }

    #[test]
    fn xy_oracle_satisfies_pde() {
        let d = 1e-5;
        let (x, y, t) = (0.6, -0.9, 0.4);
        let ut = (xy_nonconvex_exact(x, y, t + d) - xy_nonconvex_exact(x, y, t - d)) / (2.0 * d);
        let p = (xy_nonconvex_exact(x + d, y, t) - xy_nonconvex_exact(x - d, y, t)) / (2.0 * d);
        let q = (xy_nonconvex_exact(x, y + d, t) - xy_nonconvex_exact(x, y - d, t)) / (2.0 * d);
        let r = ut + p * q;
        assert!(r.abs() < 1e-6, "residual {r}");
        // initial data
        assert!((xy_nonconvex_exact(x, y, 0.0) - (x.sin() + y.cos())).abs() < 1e-12);
    }
}
