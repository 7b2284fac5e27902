//! Standalone probes: accuracy of the truncated-Taylor Hamiltonian
//! recursions on exact input data, and sensor calibration fields on
//! reference step / smooth functions.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::sensor::{viscosity_of_s, Sensor1, Sensor2, SensorConfig};
use crate::taylor::{abs_by_sign, eval, sincos, sincos2, Series2};

/// 1-D Taylor-pipeline probe targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Probe1 {
    /// H(phi_x) = -cos(phi_x + 1) with phi = sin x (smooth composition).
    CosComposition,
    /// H(phi_x) = |phi_x| with phi = sin x (sign-branch approximation).
    AbsValue,
}

/// 2-D Taylor-recursion probe targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Probe2 {
    /// cos(cos(x+y))
    CosCos,
    /// sin(sin x + cos y)
    SinAdd,
    /// sin(sin x * cos y)
    SinMult,
}

/// One row of a convergence table.
#[derive(Clone, Copy, Debug)]
pub struct ErrRow {
    pub n: usize,
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

/// Rates between consecutive rows (factor-2 ladder assumed).
pub fn rates(rows: &[ErrRow]) -> Vec<(f64, f64, f64)> {
    rows.windows(2)
        .map(|w| {
            (
                (w[0].l1 / w[1].l1).log2(),
                (w[0].l2 / w[1].l2).log2(),
                (w[0].linf / w[1].linf).log2(),
            )
        })
        .collect()
}

const SAMPLES: usize = 21;

/// Accuracy of the series recursion for H(phi_x), phi = sin x, on a
/// periodic grid of n nodes over [0, 2 pi]; errors are measured on each
/// node's window xi in [-1, 1] against the true H.
pub fn taylor_probe_1d(which: Probe1, m: usize, n: usize) -> ErrRow {
    let h = 2.0 * PI / n as f64;
    let k = 2 * m + 1;
    let (mut l1, mut l2, mut li) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..n {
        let x = i as f64 * h;
        // exact scaled series of phi_x = cos at x
        let mut u = vec![0.0; k + 1];
        let mut hf = 1.0;
        for (l, ul) in u.iter_mut().enumerate() {
            if l > 0 {
                hf *= h / l as f64;
            }
            *ul = hf * (x + l as f64 * FRAC_PI_2).cos();
        }
        let f = match which {
            Probe1::CosComposition => {
                let mut v = u.clone();
                v[0] += 1.0;
                let (_, c) = sincos(&v);
                c.iter().map(|&a| -a).collect::<Vec<f64>>()
            }
            Probe1::AbsValue => abs_by_sign(&u),
        };
        let (mut a1, mut a2) = (0.0f64, 0.0);
        for j in 0..SAMPLES {
            let xi = -1.0 + 2.0 * j as f64 / (SAMPLES - 1) as f64;
            let p = (x + h * xi).cos();
            let exact = match which {
                Probe1::CosComposition => -(p + 1.0).cos(),
                Probe1::AbsValue => p.abs(),
            };
            let e = (eval(&f, xi) - exact).abs();
            a1 += e;
            a2 += e * e;
            li = li.max(e);
        }
        l1 += h * a1 / SAMPLES as f64;
        l2 += h * a2 / SAMPLES as f64;
    }
    ErrRow { n, l1, l2: l2.sqrt(), linf: li }
}

/// Accuracy of the 2-D series recursions on exact input data over
/// [0, 2 pi]^2 with n nodes per direction.
pub fn taylor_probe_2d(which: Probe2, m: usize, n: usize) -> ErrRow {
    let h = 2.0 * PI / n as f64;
    let k = 2 * m + 1;
    let fact = |l: usize| (1..=l).product::<usize>().max(1) as f64;
    let exact = |x: f64, y: f64| -> f64 {
        match which {
            Probe2::CosCos => (x + y).cos().cos(),
            Probe2::SinAdd => (x.sin() + y.cos()).sin(),
            Probe2::SinMult => (x.sin() * y.cos()).sin(),
        }
    };
    let (mut l1, mut l2, mut li) = (0.0f64, 0.0f64, 0.0f64);
    let ns = 9; // samples per direction per cell
    for j in 0..n {
        for i in 0..n {
            let (x, y) = (i as f64 * h, j as f64 * h);
            // exact scaled inner series u(x + h xi, y + h eta)
            let mut u = Series2::zeros(k);
            for lx in 0..=k {
                for ly in 0..=k - lx {
                    let d = match which {
                        Probe2::CosCos => {
                            ((x + y) + (lx + ly) as f64 * FRAC_PI_2).cos()
                        }
                        Probe2::SinAdd => match (lx, ly) {
                            (0, 0) => x.sin() + y.cos(),
                            (_, 0) => (x + lx as f64 * FRAC_PI_2).sin(),
                            (0, _) => (y + ly as f64 * FRAC_PI_2).cos(),
                            _ => 0.0,
                        },
                        Probe2::SinMult => {
                            (x + lx as f64 * FRAC_PI_2).sin()
                                * (y + ly as f64 * FRAC_PI_2).cos()
                        }
                    };
                    u.set(lx, ly, h.powi((lx + ly) as i32) / (fact(lx) * fact(ly)) * d);
                }
            }
            let (s, c) = sincos2(&u);
            let f = match which {
                Probe2::CosCos => c,
                Probe2::SinAdd | Probe2::SinMult => s,
            };
            let (mut a1, mut a2) = (0.0f64, 0.0);
            for jy in 0..ns {
                let eta = -1.0 + 2.0 * jy as f64 / (ns - 1) as f64;
                for jx in 0..ns {
                    let xi = -1.0 + 2.0 * jx as f64 / (ns - 1) as f64;
                    let e = (f.eval(xi, eta) - exact(x + h * xi, y + h * eta)).abs();
                    a1 += e;
                    a2 += e * e;
                    li = li.max(e);
                }
            }
            l1 += h * h * a1 / (ns * ns) as f64;
            l2 += h * h * a2 / (ns * ns) as f64;
        }
    }
    ErrRow { n, l1, l2: l2.sqrt(), linf: li }
}

/// Sensor field entry for one window.
#[derive(Clone, Copy, Debug)]
pub struct SenseCell {
    pub x: f64,
    pub y: f64,
    pub s: f64,
    pub nu: f64,
    /// For step probes: the window straddles the discontinuity (its corner
    /// node values disagree).
    pub crossing: bool,
}

/// 1-D smooth sine probe: sensor response on exact degree-(2m+1) node data
/// of sin x over [0, 2 pi] with n nodes. nu is reported with nu0 = 1.
pub fn sensor_probe_1d_sine(m: usize, n: usize) -> Vec<SenseCell> {
    let cfg = SensorConfig::new(m);
    let sensor = Sensor1::new(cfg);
    let h = 2.0 * PI / n as f64;
    let k = 2 * m + 1;
    let node = |i: usize| -> Vec<f64> {
        let x = i as f64 * h;
        let mut p = vec![0.0; k + 1];
        let mut hf = 1.0;
        for (l, pl) in p.iter_mut().enumerate() {
            if l > 0 {
                hf *= h / l as f64;
            }
            *pl = hf * (x + l as f64 * FRAC_PI_2).sin();
        }
        p
    };
    (0..n)
        .map(|i| {
            let sp = sensor.project(&node(i), &node((i + 1) % n));
            let s = sensor.s_of(&sp);
            SenseCell {
                x: (i as f64 + 0.5) * h,
                y: 0.0,
                s,
                nu: viscosity_of_s(s, 1.0, cfg.s0, cfg.w),
                crossing: false,
            }
        })
        .collect()
}

/// 2-D sensor probe targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepProbe {
    /// f = 1 if x^2 + y^2 <= 1, else 0, on [-2, 2]^2.
    RadialStep,
    /// f = 1 if x + y <= 1, else 0, on [-2, 2]^2.
    ObliqueStep,
    /// f = sin x * sin y on [0, 2 pi]^2.
    SmoothSine,
}

/// 2-D sensor probe with n nodes per direction. Step probes use the exact
/// piecewise-constant node data (value at the node, zero derivatives); the
/// smooth probe uses exact derivatives. nu is reported with nu0 = 1.
pub fn sensor_probe_2d(which: StepProbe, m: usize, n: usize) -> Vec<SenseCell> {
    let cfg = SensorConfig::new(m);
    let sensor = Sensor2::new(cfg);
    let k = 2 * m + 1;
    let (a, b) = match which {
        StepProbe::SmoothSine => (0.0, 2.0 * PI),
        _ => (-2.0, 2.0),
    };
    let h = (b - a) / n as f64;
    let fact = |l: usize| (1..=l).product::<usize>().max(1) as f64;
    let node = |i: usize, j: usize| -> Series2 {
        let (x, y) = (a + i as f64 * h, a + j as f64 * h);
        let mut p = Series2::zeros(k);
        match which {
            StepProbe::RadialStep => {
                p.set(0, 0, if x * x + y * y <= 1.0 { 1.0 } else { 0.0 });
            }
            StepProbe::ObliqueStep => {
                p.set(0, 0, if x + y <= 1.0 { 1.0 } else { 0.0 });
            }
            StepProbe::SmoothSine => {
                for lx in 0..=m {
                    for ly in 0..=m {
                        p.set(
                            lx,
                            ly,
                            h.powi((lx + ly) as i32) / (fact(lx) * fact(ly))
                                * (x + lx as f64 * FRAC_PI_2).sin()
                                * (y + ly as f64 * FRAC_PI_2).sin(),
                        );
                    }
                }
            }
        }
        p
    };
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let (ip, jp) = ((i + 1) % n, (j + 1) % n);
            let c00 = node(i, j);
            let c10 = node(ip, j);
            let c01 = node(i, jp);
            let c11 = node(ip, jp);
            let sp = sensor.project([[&c00, &c10], [&c01, &c11]]);
            let s = sensor.s_of(&sp);
            let crossing = match which {
                StepProbe::SmoothSine => false,
                _ => {
                    let vals = [c00.get(0, 0), c10.get(0, 0), c01.get(0, 0), c11.get(0, 0)];
                    vals.iter().any(|&v| v != vals[0])
                }
            };
            out.push(SenseCell {
                x: a + (i as f64 + 0.5) * h,
                y: a + (j as f64 + 0.5) * h,
                s,
                nu: viscosity_of_s(s, 1.0, cfg.s0, cfg.w),
                crossing,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cos_composition_rate_is_2m_plus_2() {
        let m = 2;
        let rows: Vec<ErrRow> = [20usize, 40]
            .iter()
            .map(|&n| taylor_probe_1d(Probe1::CosComposition, m, n))
            .collect();
        let r = rates(&rows)[0];
        assert!((r.0 - 6.0).abs() < 0.4, "L1 rate {}", r.0);
    }

    #[test]
    fn abs_value_linf_is_order_h() {
        let m = 2;
        let row = taylor_probe_1d(Probe1::AbsValue, m, 20);
        // worst window has phi_x sign change at its center node:
        // max error = 2 sin(h) over the +/- h window
        let h = 2.0 * PI / 20.0;
        assert!((row.linf - 2.0 * h.sin()).abs() < 1e-2, "{}", row.linf);
    }

    #[test]
    fn smooth_2d_sine_probe_is_quiet() {
        for cell in sensor_probe_2d(StepProbe::SmoothSine, 2, 20) {
            assert!(cell.nu == 0.0, "nu={} at ({},{})", cell.nu, cell.x, cell.y);
        }
    }
}
