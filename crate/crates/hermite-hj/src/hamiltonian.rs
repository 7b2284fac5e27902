//! Built-in Hamilton-Jacobi model problems: Hamiltonians acting on
//! truncated Taylor series, characteristic-speed bounds, initial data,
//! and per-example defaults (domain, boundary treatment, final time).

use crate::grid::Boundary;
use crate::taylor::{abs_by_sign, abs_by_sign2, cauchy, sincos, sincos2, Series2};

/// Identifier for the built-in examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    /// 1-D Burgers-type: H(p) = p^2 / 2, u0 = sin x on [0, 2pi], periodic.
    Burgers1d,
    /// 1-D eikonal: H(p) = |p|, u0 = sin x on [0, 2pi], periodic.
    Eikonal1d,
    /// 1-D nonconvex: H(p) = -cos(p + 1), u0 = -cos(pi x) on [-1, 1].
    NoncvxCos,
    /// 1-D Riemann with quartic H(p) = (p^2 - 1)(p^2 - 4)/4, u0 = -2|x|,
    /// Dirichlet data from the exact solution on [-1, 1].
    RiemannQuartic,
    /// 2-D Burgers-type: H = (p + q)^2 / 2, u0 = -cos(x + y) on [0, 2pi]^2.
    Burgers2d,
    /// 2-D nonconvex: H = p q, u0 = sin x + cos y on [-pi, pi]^2.
    XyNonconvex,
    /// 2-D Riemann: H = sin(p + q), u0 = pi (|y| - |x|) on [-1, 1]^2.
    RiemannSin2d,
    /// 2-D optimal control:
    /// H = sin(y) p + (sin x + sign(q)) q - sin^2(y)/2 + cos x - 1, u0 = 0.
    OptimalControl,
}

impl Example {
    pub const ALL: [Example; 8] = [
        Example::Burgers1d,
        Example::Eikonal1d,
        Example::NoncvxCos,
        Example::RiemannQuartic,
        Example::Burgers2d,
        Example::XyNonconvex,
        Example::RiemannSin2d,
        Example::OptimalControl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Example::Burgers1d => "burgers1d",
            Example::Eikonal1d => "eikonal1d",
            Example::NoncvxCos => "noncvx-cos",
            Example::RiemannQuartic => "riemann-quartic",
            Example::Burgers2d => "burgers2d",
            Example::XyNonconvex => "xy-nonconvex",
            Example::RiemannSin2d => "riemann-sin2d",
            Example::OptimalControl => "optimal-control",
        }
    }

    pub fn parse(s: &str) -> Option<Example> {
        Example::ALL.iter().copied().find(|e| e.name() == s)
    }

    pub fn is_two_d(self) -> bool {
        matches!(
            self,
            Example::Burgers2d
                | Example::XyNonconvex
                | Example::RiemannSin2d
                | Example::OptimalControl
        )
    }

    /// Domain per axis (2-D examples use the same interval on both axes).
    pub fn domain(self) -> (f64, f64) {
        use std::f64::consts::PI;
        match self {
            Example::Burgers1d | Example::Eikonal1d | Example::Burgers2d => (0.0, 2.0 * PI),
            Example::NoncvxCos | Example::RiemannQuartic | Example::RiemannSin2d => (-1.0, 1.0),
            Example::XyNonconvex | Example::OptimalControl => (-PI, PI),
        }
    }

    pub fn boundary(self) -> Boundary {
        match self {
            Example::RiemannQuartic => Boundary::Dirichlet,
            _ => Boundary::Periodic,
        }
    }

    pub fn default_tfinal(self) -> f64 {
        use std::f64::consts::PI;
        match self {
            Example::Burgers1d => 0.5,
            Example::Eikonal1d => 1.0,
            Example::NoncvxCos => 0.5 / (PI * PI),
            Example::RiemannQuartic => 1.0,
            Example::Burgers2d => 0.1,
            Example::XyNonconvex => 0.5,
            Example::RiemannSin2d => 1.0,
            Example::OptimalControl => 1.0,
        }
    }

    /// Initial data (1-D examples; for 2-D use `u0_2d`).
    pub fn u0(self, x: f64) -> f64 {
        use std::f64::consts::PI;
        match self {
            Example::Burgers1d | Example::Eikonal1d => x.sin(),
            Example::NoncvxCos => -(PI * x).cos(),
            Example::RiemannQuartic => -2.0 * x.abs(),
            _ => panic!("u0 called on 2-D example"),
        }
    }

    pub fn u0_2d(self, x: f64, y: f64) -> f64 {
        use std::f64::consts::PI;
        match self {
            Example::Burgers2d => -(x + y).cos(),
            Example::XyNonconvex => x.sin() + y.cos(),
            Example::RiemannSin2d => PI * (y.abs() - x.abs()),
            Example::OptimalControl => 0.0,
            _ => panic!("u0_2d called on 1-D example"),
        }
    }

    /// Default cell count used when none is given on the command line.
    pub fn default_n(self) -> usize {
        match self {
            Example::Burgers1d | Example::Eikonal1d | Example::NoncvxCos => 80,
            Example::RiemannQuartic => 81,
            Example::Burgers2d | Example::XyNonconvex => 40,
            Example::RiemannSin2d => 20,
            Example::OptimalControl => 40,
        }
    }

    /// Default CFL number. The quartic Riemann problem is stiffer on kink
    /// cells; the 2-D sine Riemann problem develops a sonic shock in the
    /// outflow padding.
    pub fn default_cfl(self) -> f64 {
        match self {
            Example::RiemannQuartic => 0.15,
            Example::RiemannSin2d => 0.05,
            _ => 0.25,
        }
    }

    /// Default multiplier on the reference viscosity nu0 = lambda h / N.
    pub fn default_nu0_scale(self) -> f64 {
        match self {
            Example::RiemannSin2d => 2.0,
            _ => 1.0,
        }
    }

    /// Default refinement ladder for convergence tables.
    pub fn default_ladder(self) -> Vec<usize> {
        if self == Example::RiemannQuartic {
            vec![41, 81, 161, 321]
        } else if self.is_two_d() {
            vec![10, 20, 40, 80]
        } else {
            vec![20, 40, 80, 160]
        }
    }

    /// True if the example needs a padded computational domain: waves must
    /// leave the physical domain without feeling the periodic wrap-around,
    /// and the initial kink lines must fall at cell centers, not nodes.
    pub fn padded(self) -> bool {
        matches!(self, Example::RiemannSin2d)
    }

    /// True if H contains |.| of a gradient component; such cells need the
    /// entropy (sonic-point) viscosity fix where that component changes sign.
    pub fn abs_in_p(self) -> bool {
        matches!(self, Example::Eikonal1d | Example::RiemannQuartic)
    }

    /// Signed characteristic speed H'(p), used to flag sonic cells (cells
    /// where H' changes sign and an entropy-violating stationary kink can
    /// lock in without explicit dissipation).
    pub fn hprime(self, p: f64) -> f64 {
        match self {
            Example::Burgers1d => p,
            Example::Eikonal1d => sign(p),
            Example::NoncvxCos => (p + 1.0).sin(),
            Example::RiemannQuartic => p * p * p - 2.5 * p,
            _ => panic!("hprime called on 2-D example"),
        }
    }
    pub fn abs_in_q(self) -> bool {
        matches!(self, Example::OptimalControl)
    }

    /// Hamiltonian applied to the series `vx` of the spatial derivative of
    /// the local cell polynomial (1-D examples).
    pub fn h_series(self, vx: &[f64]) -> Vec<f64> {
        match self {
            Example::Burgers1d => {
                let mut out = cauchy(vx, vx);
                for c in &mut out {
                    *c *= 0.5;
                }
                out
            }
            Example::Eikonal1d => abs_by_sign(vx),
            Example::NoncvxCos => {
                let mut u = vx.to_vec();
                u[0] += 1.0;
                let (_, c) = sincos(&u);
                c.iter().map(|&v| -v).collect()
            }
            Example::RiemannQuartic => {
                let p2 = cauchy(vx, vx);
                let mut a = p2.clone();
                a[0] -= 1.0;
                let mut b = p2;
                b[0] -= 4.0;
                let mut out = cauchy(&a, &b);
                for c in &mut out {
                    *c *= 0.25;
                }
                out
            }
            _ => panic!("h_series called on 2-D example"),
        }
    }

    /// Local characteristic speed |H'(p)| (1-D examples).
    pub fn speed(self, p: f64) -> f64 {
        match self {
            Example::Burgers1d => p.abs(),
            Example::Eikonal1d => 1.0,
            Example::NoncvxCos => (p + 1.0).sin().abs(),
            Example::RiemannQuartic => (p * p * p - 2.5 * p).abs(),
            _ => panic!("speed called on 2-D example"),
        }
    }

    /// Hamiltonian applied to the gradient series (vx, vy) of the local
    /// 2-D cell polynomial. `(xc, yc)` is the cell center and `(hx, hy)` the
    /// grid spacings, needed by Hamiltonians with explicit (x, y) terms.
    pub fn h_series2(
        self,
        vx: &Series2,
        vy: &Series2,
        xc: f64,
        yc: f64,
        hx: f64,
        hy: f64,
    ) -> Series2 {
        match self {
            Example::Burgers2d => {
                let w = vx.add(vy);
                w.mul(&w).scale(0.5)
            }
            Example::XyNonconvex => vx.mul(vy),
            Example::RiemannSin2d => {
                let w = vx.add(vy);
                sincos2(&w).0
            }
            Example::OptimalControl => {
                let k = vx.k;
                // sin y, cos x, sin^2 y / 2 as coefficient series of the
                // local scaled coordinates.
                let sin_y = axis_series(yc, hy, k, true).embed_y(k);
                let sin_x = axis_series(xc, hx, k, true).embed_x(k);
                let cos_x = axis_series(xc, hx, k, false).embed_x(k);
                let sin2y_half = {
                    // sin^2 y = (1 - cos 2y)/2
                    let c2 = axis_series(2.0 * yc, 2.0 * hy, k, false).embed_y(k);
                    let mut s = c2.scale(-0.25);
                    s.a[0] += 0.25;
                    s
                };
                let mut out = sin_y.mul(vx);
                out = out.add(&sin_x.mul(vy));
                out = out.add(&abs_by_sign2(vy));
                out = out.add(&sin2y_half.scale(-1.0));
                out = out.add(&cos_x);
                out.a[0] -= 1.0;
                out
            }
            _ => panic!("h_series2 called on 1-D example"),
        }
    }

    /// Local characteristic speed bounds (|H_p|, |H_q|) at gradient (p, q)
    /// and position (x, y).
    pub fn speed2(self, p: f64, q: f64, x: f64, y: f64) -> (f64, f64) {
        match self {
            Example::Burgers2d => {
                let s = (p + q).abs();
                (s, s)
            }
            Example::XyNonconvex => (q.abs(), p.abs()),
            Example::RiemannSin2d => {
                let s = (p + q).cos().abs();
                (s, s)
            }
            Example::OptimalControl => {
                // At the sonic point q = 0 use the one-sided maximum of |H_q|.
                let sy = if q == 0.0 {
                    (x.sin() + 1.0).abs().max((x.sin() - 1.0).abs())
                } else {
                    (x.sin() + sign(q)).abs()
                };
                (y.sin().abs(), sy)
            }
            _ => panic!("speed2 called on 1-D example"),
        }
    }
}

fn sign(v: f64) -> f64 {
    if v < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// 1-D scaled Taylor series of sin(c + h t) (if `sin` is true) or
/// cos(c + h t) about t = 0, up to degree k: coeff_l = h^l/l! f^{(l)}(c).
struct Axis1(Vec<f64>);

fn axis_series(c: f64, h: f64, k: usize, sin: bool) -> Axis1 {
    let mut out = vec![0.0; k + 1];
    let mut hl = 1.0;
    let mut fact = 1.0;
    for (l, o) in out.iter_mut().enumerate() {
        if l > 0 {
            hl *= h;
            fact *= l as f64;
        }
        let phase = c + l as f64 * std::f64::consts::FRAC_PI_2;
        *o = hl / fact * if sin { phase.sin() } else { phase.cos() };
    }
    Axis1(out)
}

impl Axis1 {
    fn embed_x(&self, k: usize) -> Series2 {
        let mut s = Series2::zeros(k);
        for (l, &v) in self.0.iter().enumerate().take(k + 1) {
            s.set(l, 0, v);
        }
        s
    }
    fn embed_y(&self, k: usize) -> Series2 {
        let mut s = Series2::zeros(k);
        for (l, &v) in self.0.iter().enumerate().take(k + 1) {
            s.set(0, l, v);
        }
        s
    }
}
