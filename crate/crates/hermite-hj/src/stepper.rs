//! Half-step marching: interpolate node DOFs to the opposite staggered
//! grid, sense each destination cell, evolve the local cell polynomial
//! with RK4, truncate back to DOFs.

use rayon::prelude::*;

use crate::grid::{Axis, Boundary};
use crate::hamiltonian::Example;
use crate::interp::Interp;
use crate::sensor::{
    average_viscosity_1d, average_viscosity_2d, viscosity_of_s, Sensor1, Sensor2, SensorConfig,
};
use crate::taylor::{diff, Series2};
use crate::{Error, Result};

/// Which staggered grid currently holds the data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Primal,
    Dual,
}

/// Classical RK4 on a vector of coefficients.
fn rk4<F: Fn(&[f64]) -> Vec<f64>>(y: &[f64], dt: f64, f: F) -> Vec<f64> {
    let k1 = f(y);
    let mut y2: Vec<f64> = y.iter().zip(&k1).map(|(a, b)| a + dt / 2.0 * b).collect();
    let k2 = f(&y2);
    y2 = y.iter().zip(&k2).map(|(a, b)| a + dt / 2.0 * b).collect();
    let k3 = f(&y2);
    y2 = y.iter().zip(&k3).map(|(a, b)| a + dt * b).collect();
    let k4 = f(&y2);
    y.iter()
        .enumerate()
        .map(|(i, a)| a + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

/// Central divided difference of order `order` with spacing `d`.
pub fn divided_diff<F: Fn(f64) -> f64>(f: F, x: f64, order: usize, d: f64) -> f64 {
    if order == 0 {
        return f(x);
    }
    let mut num = 0.0;
    let mut c = 1.0; // binomial C(order, k)
    for k in 0..=order {
        let sgn = if (order - k).is_multiple_of(2) { 1.0 } else { -1.0 };
        num += sgn * c * f(x + (k as f64 - order as f64 / 2.0) * d);
        c = c * (order - k) as f64 / (k + 1) as f64;
    }
    num / d.powi(order as i32)
}

/// One-sided DOF override at a single primal node, used to start Riemann
/// problems whose initial kink sits exactly on a grid node. Consumed by the
/// first primal-to-dual gather only.
#[derive(Clone, Debug)]
pub struct SplitDofs {
    pub node: usize,
    /// DOFs seen by the cell for which this node is the left endpoint
    /// (i.e. the trace from the right of the kink).
    pub as_left: Vec<f64>,
    /// DOFs seen by the cell for which this node is the right endpoint.
    pub as_right: Vec<f64>,
}

/// Per-cell sensor diagnostics from the most recent half-step.
#[derive(Clone, Debug, Default)]
pub struct SenseSnapshot {
    /// Cell-center coordinates (x; and y for 2-D).
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub s: Vec<f64>,
    pub nu: Vec<f64>,
    pub kbar: Vec<f64>,
}

pub struct Solver1D {
    pub example: Example,
    pub m: usize,
    pub axis: Axis,
    pub sensor_on: bool,
    pub nu0_scale: f64,
    pub t: f64,
    pub parity: Parity,
    /// Node polynomials, length K+1 = 2m+2 each.
    pub polys: Vec<Vec<f64>>,
    pub split: Option<SplitDofs>,
    interp: Interp,
    sensor: Sensor1,
    /// Exact-solution callback for Dirichlet ghost data: (x, t) -> u.
    pub oracle: Option<Box<dyn Fn(f64, f64) -> f64 + Send + Sync>>,
    pub last_sense: SenseSnapshot,
    pub last_lambda: f64,
}

impl Solver1D {
    pub fn new(example: Example, m: usize, n: usize, sensor_cfg: SensorConfig) -> Self {
        let (a, b) = example.domain();
        let axis = Axis::new(a, b, n, example.boundary());
        Solver1D {
            example,
            m,
            axis,
            sensor_on: true,
            nu0_scale: 1.0,
            t: 0.0,
            parity: Parity::Primal,
            polys: Vec::new(),
            split: None,
            interp: Interp::new(m),
            sensor: Sensor1::new(sensor_cfg),
            oracle: None,
            last_sense: SenseSnapshot::default(),
            last_lambda: 0.0,
        }
    }

    pub fn k_top(&self) -> usize {
        2 * self.m + 1
    }

    /// Initialize from the example's own initial data. Installs the exact
    /// solution as boundary oracle where one exists, and one-sided DOFs when
    /// the initial kink of the quartic Riemann example sits exactly on a
    /// node (even grids).
    pub fn init_example(&mut self) {
        let ex = self.example;
        self.init(|l, x| crate::oracle::u0_derivs_1d(ex, l, x));
        if let Some(f) = crate::oracle::exact_1d(ex) {
            self.oracle = Some(Box::new(f));
        }
        if ex == Example::RiemannQuartic {
            let node = (0..self.axis.n_primal())
                .find(|&i| self.axis.primal(i).abs() < 1e-12 * self.axis.h);
            if let Some(node) = node {
                let h = self.axis.h;
                let mut as_left = vec![0.0; self.k_top() + 1];
                let mut as_right = vec![0.0; self.k_top() + 1];
                as_left[1] = -2.0 * h; // right-limit slope of -2|x|
                as_right[1] = 2.0 * h; // left-limit slope
                self.split = Some(SplitDofs {
                    node,
                    as_left,
                    as_right,
                });
            }
        }
    }

    /// Initialize node DOFs from a derivative callback: derivs(l, x) is the
    /// l-th derivative of u0 at x, needed for l = 0..=m.
    pub fn init<F: Fn(usize, f64) -> f64>(&mut self, derivs: F) {
        let (m, h) = (self.m, self.axis.h);
        let npn = match self.axis.bc {
            Boundary::Periodic => self.axis.n,
            Boundary::Dirichlet => self.axis.n + 1,
        };
        self.polys = (0..npn)
            .map(|i| {
                let x = self.axis.primal(i);
                let mut p = vec![0.0; self.k_top() + 1];
                let mut hf = 1.0;
                for (l, pl) in p.iter_mut().enumerate().take(m + 1) {
                    if l > 0 {
                        hf *= h / l as f64;
                    }
                    *pl = hf * derivs(l, x);
                }
                p
            })
            .collect();
        self.t = 0.0;
        self.parity = Parity::Primal;
    }

    /// Ghost DOFs from the oracle by divided differences (spacing h/8).
    fn ghost_poly(&self, x: f64) -> Vec<f64> {
        let h = self.axis.h;
        let t = self.t;
        let f = self.oracle.as_ref().expect("Dirichlet run needs an oracle");
        let d = h / 8.0;
        let mut p = vec![0.0; self.k_top() + 1];
        let mut hf = 1.0;
        for (l, pl) in p.iter_mut().enumerate() {
            if l > 0 {
                hf *= h / l as f64;
            }
            *pl = hf * divided_diff(|xx| f(xx, t), x, l, d);
        }
        p
    }

    /// Source node-poly pairs for each destination cell of this half-step.
    fn gather(&mut self) -> Vec<(Vec<f64>, Vec<f64>)> {
        let n = self.axis.n;
        match (self.axis.bc, self.parity) {
            (Boundary::Periodic, Parity::Primal) => {
                let split = self.split.take();
                (0..n)
                    .map(|i| {
                        let mut l = self.polys[i].clone();
                        let mut r = self.polys[(i + 1) % n].clone();
                        if let Some(sp) = &split {
                            if i == sp.node {
                                l = sp.as_left.clone();
                            }
                            if (i + 1) % n == sp.node {
                                r = sp.as_right.clone();
                            }
                        }
                        (l, r)
                    })
                    .collect()
            }
            (Boundary::Periodic, Parity::Dual) => (0..n)
                .map(|i| {
                    (
                        self.polys[(i + n - 1) % n].clone(),
                        self.polys[i].clone(),
                    )
                })
                .collect(),
            (Boundary::Dirichlet, Parity::Primal) => {
                let split = self.split.take();
                (0..n)
                    .map(|i| {
                        let mut l = self.polys[i].clone();
                        let mut r = self.polys[i + 1].clone();
                        if let Some(sp) = &split {
                            if i == sp.node {
                                l = sp.as_left.clone();
                            }
                            if i + 1 == sp.node {
                                r = sp.as_right.clone();
                            }
                        }
                        (l, r)
                    })
                    .collect()
            }
            (Boundary::Dirichlet, Parity::Dual) => {
                // dual nodes live at i + 1/2 for i = 0..n; ghost centers at
                // -1/2 and n + 1/2 come from the oracle.
                let gl = self.ghost_poly(self.axis.a - 0.5 * self.axis.h);
                let gr = self.ghost_poly(self.axis.b + 0.5 * self.axis.h);
                let mut pairs = Vec::with_capacity(n + 1);
                pairs.push((gl, self.polys[0].clone()));
                for i in 1..n {
                    pairs.push((self.polys[i - 1].clone(), self.polys[i].clone()));
                }
                pairs.push((self.polys[n - 1].clone(), gr));
                pairs
            }
        }
    }

    fn cell_center(&self, i: usize) -> f64 {
        match self.parity {
            Parity::Primal => self.axis.a + (i as f64 + 0.5) * self.axis.h,
            Parity::Dual => self.axis.primal(i),
        }
    }

    /// True if the characteristic speed H'(v_x) changes sign inside the
    /// cell (entropy fix at sonic points).
    fn sonic(&self, cell: &[f64]) -> bool {
        let h = self.axis.h;
        let vx = diff(cell, h);
        let mut pos = false;
        let mut neg = false;
        for k in 0..5 {
            let xi = -0.5 + k as f64 * 0.25;
            let v = self.example.hprime(crate::taylor::eval(&vx, xi));
            pos |= v > 0.0;
            neg |= v < 0.0;
        }
        pos && neg
    }

    pub fn half_step(&mut self, dt: f64) -> Result<()> {
        let (m, h) = (self.m, self.axis.h);
        let ex = self.example;
        let pairs = self.gather();
        let nc = pairs.len();
        let interp = &self.interp;
        let cells: Vec<Vec<f64>> = pairs
            .par_iter()
            .map(|(l, r)| interp.cell(l, r))
            .collect();
        let lam = cells
            .par_iter()
            .map(|c| ex.speed(diff(c, h)[0]))
            .reduce(|| 0.0, f64::max);
        let n_deg = (2 * m + 1) as f64;
        let nu0 = lam * h / n_deg * self.nu0_scale;
        let kbar: Vec<f64> = if self.sensor_on {
            let sensor = &self.sensor;
            let sonic_fix = ex.abs_in_p();
            let s_nu: Vec<(f64, f64)> = pairs
                .par_iter()
                .zip(&cells)
                .map(|((l, r), c)| {
                    if sonic_fix && self.sonic(c) {
                        return (0.0, nu0);
                    }
                    let sp = sensor.project(l, r);
                    let s = sensor.s_of(&sp);
                    (s, viscosity_of_s(s, nu0, sensor.cfg.s0, sensor.cfg.w))
                })
                .collect();
            let nu: Vec<f64> = s_nu.iter().map(|&(_, v)| v).collect();
            let kb = average_viscosity_1d(&nu, self.axis.bc == Boundary::Periodic);
            self.last_sense = SenseSnapshot {
                x: (0..nc).map(|i| self.cell_center(i)).collect(),
                y: vec![],
                s: s_nu.iter().map(|&(s, _)| s).collect(),
                nu,
                kbar: kb.clone(),
            };
            kb
        } else {
            vec![0.0; nc]
        };
        let new: Vec<Vec<f64>> = cells
            .par_iter()
            .zip(&kbar)
            .map(|(c, &kb)| {
                rk4(c, dt, |d| {
                    let vx = diff(d, h);
                    let mut b: Vec<f64> =
                        ex.h_series(&vx).iter().map(|&v| -v).collect();
                    if kb != 0.0 {
                        let vxx = diff(&vx, h);
                        for (bi, &v) in b.iter_mut().zip(&vxx) {
                            *bi += kb * v;
                        }
                    }
                    b
                })
            })
            .collect();
        if new
            .iter()
            .any(|p| p.iter().any(|v| !v.is_finite()))
        {
            return Err(Error::BlowUp { t: self.t });
        }
        self.polys = new;
        self.parity = match self.parity {
            Parity::Primal => Parity::Dual,
            Parity::Dual => Parity::Primal,
        };
        self.t += dt;
        self.last_lambda = lam;
        if self.axis.bc == Boundary::Dirichlet && self.parity == Parity::Primal {
            // re-impose exact data at the boundary nodes
            let g0 = self.ghost_poly(self.axis.a);
            let gn = self.ghost_poly(self.axis.b);
            self.polys[0] = g0;
            let last = self.polys.len() - 1;
            self.polys[last] = gn;
        }
        Ok(())
    }

    /// Maximum characteristic speed over the initial cell centers.
    pub fn lambda0(&self) -> f64 {
        let n = self.axis.n;
        let h = self.axis.h;
        let npn = self.polys.len();
        (0..n)
            .map(|i| {
                let c = self
                    .interp
                    .cell(&self.polys[i], &self.polys[(i + 1) % npn]);
                self.example.speed(diff(&c, h)[0])
            })
            .fold(0.0, f64::max)
    }

    /// March to time T with full steps of size dt (two half-steps each);
    /// the last step is shortened to land exactly on T.
    pub fn run(&mut self, tfinal: f64, dt: f64) -> Result<()> {
        let mut t = 0.0;
        while t < tfinal - 1e-14 {
            let step = dt.min(tfinal - t);
            self.half_step(step / 2.0)?;
            self.half_step(step / 2.0)?;
            t += step;
        }
        Ok(())
    }

    /// L1, L2, Linf node errors against an exact solution at time `t`.
    pub fn errors<F: Fn(f64) -> f64>(&self, exact: F) -> (f64, f64, f64) {
        assert_eq!(self.parity, Parity::Primal);
        let h = self.axis.h;
        let (mut l1, mut l2, mut li) = (0.0f64, 0.0f64, 0.0f64);
        for (i, p) in self.polys.iter().enumerate() {
            let e = (p[0] - exact(self.axis.primal(i))).abs();
            l1 += e;
            l2 += e * e;
            li = li.max(e);
        }
        (h * l1, (h * l2).sqrt(), li)
    }

    pub fn max_abs(&self) -> f64 {
        self.polys
            .iter()
            .map(|p| p[0].abs())
            .fold(0.0, f64::max)
    }
}

/// 2-D solver (periodic boundaries; all built-in 2-D examples are periodic).
pub struct Solver2D {
    pub example: Example,
    pub m: usize,
    pub ax: Axis,
    pub ay: Axis,
    pub sensor_on: bool,
    pub nu0_scale: f64,
    pub t: f64,
    pub parity: Parity,
    /// Node polynomials, row-major: index j * nx + i.
    pub polys: Vec<Series2>,
    interp: Interp,
    sensor: Sensor2,
    pub last_sense: SenseSnapshot,
    pub last_lambda: f64,
}

impl Solver2D {
    pub fn new(example: Example, m: usize, n: usize, sensor_cfg: SensorConfig) -> Self {
        let (mut a, mut b) = example.domain();
        assert_eq!(example.boundary(), Boundary::Periodic);
        let mut n_tot = n;
        if example.padded() {
            // Extend the domain so outgoing waves never feel the periodic
            // wrap, and shift the grid by half a cell so that the kink lines
            // of the initial data fall at cell centers rather than at nodes
            // (a node carries one-sided derivative data; placing a kink on a
            // node feeds contradictory slopes to the neighboring cell and the
            // local polynomial evolution blows up).
            let h = (b - a) / n as f64;
            let pad = (2.1 / h).ceil() as usize;
            a -= (pad as f64 + 0.5) * h;
            b += (pad as f64 + 0.5) * h;
            n_tot = n + 2 * pad + 1;
        }
        let n = n_tot;
        Solver2D {
            example,
            m,
            ax: Axis::new(a, b, n, Boundary::Periodic),
            ay: Axis::new(a, b, n, Boundary::Periodic),
            sensor_on: true,
            nu0_scale: 1.0,
            t: 0.0,
            parity: Parity::Primal,
            polys: Vec::new(),
            interp: Interp::new(m),
            sensor: Sensor2::new(sensor_cfg),
            last_sense: SenseSnapshot::default(),
            last_lambda: 0.0,
        }
    }

    pub fn k_top(&self) -> usize {
        2 * self.m + 1
    }

    /// Initialize from the example's own initial data, including the smooth
    /// periodic extension used on padded domains.
    pub fn init_example(&mut self) {
        let ex = self.example;
        if ex.padded() {
            let half = self.ax.b;
            self.init(move |lx, ly, x, y| {
                use std::f64::consts::PI;
                match (lx, ly) {
                    (0, 0) => {
                        PI * (crate::oracle::padded_abs_derivs(0, y, half)
                            - crate::oracle::padded_abs_derivs(0, x, half))
                    }
                    (_, 0) => -PI * crate::oracle::padded_abs_derivs(lx, x, half),
                    (0, _) => PI * crate::oracle::padded_abs_derivs(ly, y, half),
                    _ => 0.0,
                }
            });
        } else {
            self.init(|lx, ly, x, y| crate::oracle::u0_derivs_2d(ex, lx, ly, x, y));
        }
    }

    /// Initialize from derivs(lx, ly, x, y) = mixed partial of u0.
    pub fn init<F: Fn(usize, usize, f64, f64) -> f64>(&mut self, derivs: F) {
        let (m, hx, hy) = (self.m, self.ax.h, self.ay.h);
        let (nx, ny) = (self.ax.n, self.ay.n);
        let k = self.k_top();
        let fact = |l: usize| (1..=l).product::<usize>().max(1) as f64;
        self.polys = (0..nx * ny)
            .map(|id| {
                let (i, j) = (id % nx, id / nx);
                let (x, y) = (self.ax.primal(i), self.ay.primal(j));
                let mut p = Series2::zeros(k);
                for lx in 0..=m {
                    for ly in 0..=m {
                        p.set(
                            lx,
                            ly,
                            hx.powi(lx as i32) / fact(lx) * hy.powi(ly as i32) / fact(ly)
                                * derivs(lx, ly, x, y),
                        );
                    }
                }
                p
            })
            .collect();
        self.t = 0.0;
        self.parity = Parity::Primal;
    }

    /// Corner node indices [ [ll, lr], [ul, ur] ] for destination cell (i, j).
    fn corners(&self, i: usize, j: usize) -> [[usize; 2]; 2] {
        let (nx, ny) = (self.ax.n, self.ay.n);
        match self.parity {
            Parity::Primal => {
                let ip = (i + 1) % nx;
                let jp = (j + 1) % ny;
                [[j * nx + i, j * nx + ip], [jp * nx + i, jp * nx + ip]]
            }
            Parity::Dual => {
                let im = (i + nx - 1) % nx;
                let jm = (j + ny - 1) % ny;
                [[jm * nx + im, jm * nx + i], [j * nx + im, j * nx + i]]
            }
        }
    }

    fn cell_center(&self, i: usize, j: usize) -> (f64, f64) {
        match self.parity {
            Parity::Primal => (
                self.ax.a + (i as f64 + 0.5) * self.ax.h,
                self.ay.a + (j as f64 + 0.5) * self.ay.h,
            ),
            Parity::Dual => (self.ax.primal(i), self.ay.primal(j)),
        }
    }

    fn sonic_q(&self, cell: &Series2) -> bool {
        let vy = cell.diff_y(self.ay.h);
        let mut pos = false;
        let mut neg = false;
        for ky in 0..5 {
            for kx in 0..5 {
                let v = vy.eval(-0.5 + kx as f64 * 0.25, -0.5 + ky as f64 * 0.25);
                pos |= v > 0.0;
                neg |= v < 0.0;
            }
        }
        pos && neg
    }

    pub fn half_step(&mut self, dt: f64) -> Result<()> {
        let (nx, ny) = (self.ax.n, self.ay.n);
        let (hx, hy) = (self.ax.h, self.ay.h);
        let ex = self.example;
        let nc = nx * ny;
        let interp = &self.interp;
        let polys = &self.polys;
        let corner_ids: Vec<[[usize; 2]; 2]> =
            (0..nc).map(|id| self.corners(id % nx, id / nx)).collect();
        let centers: Vec<(f64, f64)> =
            (0..nc).map(|id| self.cell_center(id % nx, id / nx)).collect();
        let cells: Vec<Series2> = corner_ids
            .par_iter()
            .map(|ids| {
                interp.cell2([
                    [&polys[ids[0][0]], &polys[ids[0][1]]],
                    [&polys[ids[1][0]], &polys[ids[1][1]]],
                ])
            })
            .collect();
        let lam = cells
            .par_iter()
            .zip(&centers)
            .map(|(c, &(xc, yc))| {
                let p = c.diff_x(hx).get(0, 0);
                let q = c.diff_y(hy).get(0, 0);
                let (sx, sy) = ex.speed2(p, q, xc, yc);
                sx.max(sy)
            })
            .reduce(|| 0.0, f64::max);
        let n_deg = (2 * self.m + 1) as f64;
        let nu0 = lam * hx.max(hy) / n_deg * self.nu0_scale;
        let kbar: Vec<f64> = if self.sensor_on {
            let sensor = &self.sensor;
            let sonic_fix = ex.abs_in_q();
            let s_nu: Vec<(f64, f64)> = corner_ids
                .par_iter()
                .zip(&cells)
                .map(|(ids, c)| {
                    if sonic_fix && self.sonic_q(c) {
                        return (0.0, nu0);
                    }
                    let sp = sensor.project([
                        [&polys[ids[0][0]], &polys[ids[0][1]]],
                        [&polys[ids[1][0]], &polys[ids[1][1]]],
                    ]);
                    let s = sensor.s_of(&sp);
                    (s, viscosity_of_s(s, nu0, sensor.cfg.s0, sensor.cfg.w))
                })
                .collect();
            let nu: Vec<f64> = s_nu.iter().map(|&(_, v)| v).collect();
            let kb = average_viscosity_2d(&nu, nx, ny, true);
            self.last_sense = SenseSnapshot {
                x: centers.iter().map(|&(x, _)| x).collect(),
                y: centers.iter().map(|&(_, y)| y).collect(),
                s: s_nu.iter().map(|&(s, _)| s).collect(),
                nu,
                kbar: kb.clone(),
            };
            kb
        } else {
            vec![0.0; nc]
        };
        let new: Vec<Series2> = cells
            .par_iter()
            .zip(&kbar)
            .zip(&centers)
            .map(|((c, &kb), &(xc, yc))| {
                let k = c.k;
                let y0 = c.a.clone();
                let out = rk4(&y0, dt, |a| {
                    let d = Series2 { k, a: a.to_vec() };
                    let vx = d.diff_x(hx);
                    let vy = d.diff_y(hy);
                    let mut b = ex.h_series2(&vx, &vy, xc, yc, hx, hy).scale(-1.0);
                    if kb != 0.0 {
                        b = b.add(&vx.diff_x(hx).scale(kb));
                        b = b.add(&vy.diff_y(hy).scale(kb));
                    }
                    b.a
                });
                Series2 { k, a: out }
            })
            .collect();
        if new.iter().any(|p| p.a.iter().any(|v| !v.is_finite())) {
            return Err(Error::BlowUp { t: self.t });
        }
        self.polys = new;
        self.parity = match self.parity {
            Parity::Primal => Parity::Dual,
            Parity::Dual => Parity::Primal,
        };
        self.t += dt;
        self.last_lambda = lam;
        Ok(())
    }

    pub fn lambda0(&self) -> f64 {
        let (nx, ny) = (self.ax.n, self.ay.n);
        let (hx, hy) = (self.ax.h, self.ay.h);
        (0..nx * ny)
            .map(|id| {
                let (i, j) = (id % nx, id / nx);
                let ids = self.corners(i, j);
                let c = self.interp.cell2([
                    [&self.polys[ids[0][0]], &self.polys[ids[0][1]]],
                    [&self.polys[ids[1][0]], &self.polys[ids[1][1]]],
                ]);
                let p = c.diff_x(hx).get(0, 0);
                let q = c.diff_y(hy).get(0, 0);
                let (xc, yc) = self.cell_center(i, j);
                let (sx, sy) = self.example.speed2(p, q, xc, yc);
                sx.max(sy)
            })
            .fold(0.0, f64::max)
    }

    pub fn run(&mut self, tfinal: f64, dt: f64) -> Result<()> {
        let mut t = 0.0;
        while t < tfinal - 1e-14 {
            let step = dt.min(tfinal - t);
            self.half_step(step / 2.0)?;
            self.half_step(step / 2.0)?;
            t += step;
        }
        Ok(())
    }

    pub fn errors<F: Fn(f64, f64) -> f64>(&self, exact: F) -> (f64, f64, f64) {
        assert_eq!(self.parity, Parity::Primal);
        let (nx, ny) = (self.ax.n, self.ay.n);
        let cell = self.ax.h * self.ay.h;
        let (mut l1, mut l2, mut li) = (0.0f64, 0.0f64, 0.0f64);
        for j in 0..ny {
            for i in 0..nx {
                let e = (self.polys[j * nx + i].get(0, 0)
                    - exact(self.ax.primal(i), self.ay.primal(j)))
                .abs();
                l1 += e;
                l2 += e * e;
                li = li.max(e);
            }
        }
        (cell * l1, (cell * l2).sqrt(), li)
    }

    pub fn max_abs(&self) -> f64 {
        self.polys
            .iter()
            .map(|p| p.get(0, 0).abs())
            .fold(0.0, f64::max)
    }

    pub fn node_values(&self) -> Vec<(f64, f64, f64)> {
        let (nx, ny) = (self.ax.n, self.ay.n);
        let mut out = Vec::with_capacity(nx * ny);
        for j in 0..ny {
            for i in 0..nx {
                out.push((
                    self.ax.primal(i),
                    self.ay.primal(j),
                    self.polys[j * nx + i].get(0, 0),
                ));
            }
        }
        out
    }
}
