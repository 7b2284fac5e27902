//! Python bindings for the hermite-hj solver: truncated-Taylor arithmetic,
//! the modal smoothness sensor, the 1-D/2-D steppers with their built-in
//! examples and exact-solution oracles, and the standalone probes.

// pyo3's #[pyfunction] expansion triggers clippy::useless_conversion on
// PyResult-returning functions; not actionable in our code.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hermite_hj::hamiltonian::Example;
use hermite_hj::oracle;
use hermite_hj::probe;
use hermite_hj::sensor::{viscosity_of_s, Sensor1, SensorConfig};
use hermite_hj::stepper::{Solver1D as Core1D, Solver2D as Core2D};
use hermite_hj::taylor;

fn parse_example(name: &str) -> PyResult<Example> {
    Example::parse(name).ok_or_else(|| {
        PyValueError::new_err(format!(
            "unknown example '{name}'; choose one of {:?}",
            Example::ALL.iter().map(|e| e.name()).collect::<Vec<_>>()
        ))
    })
}

fn run_err(e: hermite_hj::Error) -> PyErr {
    PyRuntimeError::new_err(format!("{e}"))
}

// ------------------------------------------------------- Taylor arithmetic

/// Cauchy product of two truncated Taylor series (same length, truncated).
#[pyfunction]
fn cauchy(a: Vec<f64>, b: Vec<f64>) -> Vec<f64> {
    taylor::cauchy(&a, &b)
}

/// Series of the scaled derivative of a node polynomial with unit h.
#[pyfunction]
fn diff(p: Vec<f64>, h: f64) -> Vec<f64> {
    taylor::diff(&p, h)
}

/// (sin u, cos u) of a truncated Taylor series, computed jointly.
#[pyfunction]
fn sincos(u: Vec<f64>) -> (Vec<f64>, Vec<f64>) {
    taylor::sincos(&u)
}

/// |u| via the sign of the leading coefficient (sign(0) = +1).
#[pyfunction]
fn abs_by_sign(u: Vec<f64>) -> Vec<f64> {
    taylor::abs_by_sign(&u)
}

/// Evaluate a series at local coordinate xi.
#[pyfunction(name = "eval_series")]
fn eval_series(p: Vec<f64>, xi: f64) -> f64 {
    taylor::eval(&p, xi)
}

// ----------------------------------------------------------------- sensor

/// Modal-decay exponent s of the window spanned by two degree-(2m+1) node
/// polynomials (left and right, node-local coefficients).
#[pyfunction]
fn sensor_s(m: usize, p_left: Vec<f64>, p_right: Vec<f64>) -> f64 {
    let sensor = Sensor1::new(SensorConfig::new(m));
    sensor.s_of(&sensor.project(&p_left, &p_right))
}

/// Viscosity ramp: nu0 for s <= s0 - w, 0 for s >= s0 + w, cosine blend
/// in between (defaults s0 = 2, w = 1).
#[pyfunction]
#[pyo3(signature = (s, nu0, s0 = 2.0, w = 1.0))]
fn viscosity(s: f64, nu0: f64, s0: f64, w: f64) -> f64 {
    viscosity_of_s(s, nu0, s0, w)
}

// ----------------------------------------------------------------- probes

/// Taylor-recursion accuracy probe. which: "cos-composition", "abs-value"
/// (1-D) or "cos-cos", "sin-add", "sin-mult" (2-D). Returns (l1, l2, linf).
#[pyfunction]
fn taylor_probe(which: &str, m: usize, n: usize) -> PyResult<(f64, f64, f64)> {
    let row = match which {
        "cos-composition" => probe::taylor_probe_1d(probe::Probe1::CosComposition, m, n),
        "abs-value" => probe::taylor_probe_1d(probe::Probe1::AbsValue, m, n),
        "cos-cos" => probe::taylor_probe_2d(probe::Probe2::CosCos, m, n),
        "sin-add" => probe::taylor_probe_2d(probe::Probe2::SinAdd, m, n),
        "sin-mult" => probe::taylor_probe_2d(probe::Probe2::SinMult, m, n),
        _ => return Err(PyValueError::new_err(format!("unknown probe '{which}'"))),
    };
    Ok((row.l1, row.l2, row.linf))
}

/// One sensor-probe row: (x, y, s, nu, crossing).
type SenseRow = (f64, f64, f64, f64, bool);

/// Sensor calibration probe. which: "radial-step", "oblique-step",
/// "smooth-sine" (2-D) or "sine-1d". Returns rows (x, y, s, nu, crossing).
#[pyfunction]
fn sensor_probe(which: &str, m: usize, n: usize) -> PyResult<Vec<SenseRow>> {
    let cells = match which {
        "radial-step" => probe::sensor_probe_2d(probe::StepProbe::RadialStep, m, n),
        "oblique-step" => probe::sensor_probe_2d(probe::StepProbe::ObliqueStep, m, n),
        "smooth-sine" => probe::sensor_probe_2d(probe::StepProbe::SmoothSine, m, n),
        "sine-1d" => probe::sensor_probe_1d_sine(m, n),
        _ => return Err(PyValueError::new_err(format!("unknown probe '{which}'"))),
    };
    Ok(cells
        .into_iter()
        .map(|c| (c.x, c.y, c.s, c.nu, c.crossing))
        .collect())
}

// ---------------------------------------------------------------- solvers

/// 1-D staggered Hermite solver for one of the built-in examples.
#[pyclass]
struct Solver1D {
    inner: Core1D,
}

#[pymethods]
impl Solver1D {
    /// Create a solver and initialize it from the example's initial data.
    #[new]
    #[pyo3(signature = (example, m, n, sensor = true, nu0_scale = 1.0))]
    fn new(example: &str, m: usize, n: usize, sensor: bool, nu0_scale: f64) -> PyResult<Self> {
        let ex = parse_example(example)?;
        if ex.is_two_d() {
            return Err(PyValueError::new_err(format!(
                "'{example}' is two-dimensional; use Solver2D"
            )));
        }
        let mut inner = Core1D::new(ex, m, n, SensorConfig::new(m));
        inner.sensor_on = sensor;
        inner.nu0_scale = nu0_scale;
        inner.init_example();
        Ok(Solver1D { inner })
    }

    /// Advance to tfinal. dt defaults to cfl * h / lambda with the
    /// example's default CFL number.
    #[pyo3(signature = (tfinal, dt = None))]
    fn run(&mut self, tfinal: f64, dt: Option<f64>) -> PyResult<()> {
        let dt = dt.unwrap_or_else(|| {
            self.inner.example.default_cfl() * self.inner.axis.h / self.inner.lambda0().max(1e-12)
        });
        self.inner.run(tfinal, dt).map_err(run_err)
    }

    /// (L1, L2, Linf) errors against the exact solution at the current time.
    fn errors(&self, tfinal: f64) -> PyResult<(f64, f64, f64)> {
        let f = oracle::exact_1d(self.inner.example).ok_or_else(|| {
            PyValueError::new_err("example has no exact solution")
        })?;
        Ok(self.inner.errors(|x| f(x, tfinal)))
    }

    /// Node coordinates and values as (x, u) pairs.
    fn node_values(&self) -> Vec<(f64, f64)> {
        (0..self.inner.axis.n_primal())
            .map(|i| (self.inner.axis.primal(i), self.inner.polys[i][0]))
            .collect()
    }

    fn max_abs(&self) -> f64 {
        self.inner.max_abs()
    }

    /// Per-cell sensor diagnostics from the most recent half-step:
    /// rows (x, s, nu).
    fn diagnostics(&self) -> Vec<(f64, f64, f64)> {
        let d = &self.inner.last_sense;
        d.x.iter()
            .zip(&d.s)
            .zip(&d.nu)
            .map(|((&x, &s), &nu)| (x, s, nu))
            .collect()
    }

    #[getter]
    fn h(&self) -> f64 {
        self.inner.axis.h
    }
}

/// 2-D staggered Hermite solver for one of the built-in examples.
#[pyclass]
struct Solver2D {
    inner: Core2D,
}

#[pymethods]
impl Solver2D {
    #[new]
    #[pyo3(signature = (example, m, n, sensor = true, nu0_scale = None))]
    fn new(
        example: &str,
        m: usize,
        n: usize,
        sensor: bool,
        nu0_scale: Option<f64>,
    ) -> PyResult<Self> {
        let ex = parse_example(example)?;
        if !ex.is_two_d() {
            return Err(PyValueError::new_err(format!(
                "'{example}' is one-dimensional; use Solver1D"
            )));
        }
        let mut inner = Core2D::new(ex, m, n, SensorConfig::new(m));
        inner.sensor_on = sensor;
        inner.nu0_scale = nu0_scale.unwrap_or_else(|| ex.default_nu0_scale());
        inner.init_example();
        Ok(Solver2D { inner })
    }

    #[pyo3(signature = (tfinal, dt = None))]
    fn run(&mut self, tfinal: f64, dt: Option<f64>) -> PyResult<()> {
        let dt = dt.unwrap_or_else(|| {
            self.inner.example.default_cfl() * self.inner.ax.h.min(self.inner.ay.h)
                / self.inner.lambda0().max(1e-12)
        });
        self.inner.run(tfinal, dt).map_err(run_err)
    }

    fn errors(&self, tfinal: f64) -> PyResult<(f64, f64, f64)> {
        let f = oracle::exact_2d(self.inner.example).ok_or_else(|| {
            PyValueError::new_err("example has no exact solution")
        })?;
        Ok(self.inner.errors(|x, y| f(x, y, tfinal)))
    }

    /// Node coordinates and values as (x, y, u) triples.
    fn node_values(&self) -> Vec<(f64, f64, f64)> {
        self.inner.node_values()
    }

    fn max_abs(&self) -> f64 {
        self.inner.max_abs()
    }

    /// Per-cell sensor diagnostics from the most recent half-step:
    /// rows (x, y, s, nu).
    fn diagnostics(&self) -> Vec<(f64, f64, f64, f64)> {
        let d = &self.inner.last_sense;
        d.x.iter()
            .zip(&d.y)
            .zip(&d.s)
            .zip(&d.nu)
            .map(|(((&x, &y), &s), &nu)| (x, y, s, nu))
            .collect()
    }

    #[getter]
    fn h(&self) -> f64 {
        self.inner.ax.h
    }
}

// ----------------------------------------------------------------- module

/// Names of the built-in examples.
#[pyfunction]
fn examples() -> Vec<&'static str> {
    Example::ALL.iter().map(|e| e.name()).collect()
}

/// Exact solution of an example at (x[, y], t), if one exists.
#[pyfunction]
#[pyo3(signature = (example, x, t, y = None))]
fn exact(example: &str, x: f64, t: f64, y: Option<f64>) -> PyResult<f64> {
    let ex = parse_example(example)?;
    if ex.is_two_d() {
        let y = y.ok_or_else(|| PyValueError::new_err("2-D example needs y"))?;
        oracle::exact_2d(ex)
            .map(|f| f(x, y, t))
            .ok_or_else(|| PyValueError::new_err("example has no exact solution"))
    } else {
        oracle::exact_1d(ex)
            .map(|f| f(x, t))
            .ok_or_else(|| PyValueError::new_err("example has no exact solution"))
    }
}

#[pymodule]
fn hermite_hj_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(cauchy, m)?)?;
    m.add_function(wrap_pyfunction!(diff, m)?)?;
    m.add_function(wrap_pyfunction!(sincos, m)?)?;
    m.add_function(wrap_pyfunction!(abs_by_sign, m)?)?;
    m.add_function(wrap_pyfunction!(eval_series, m)?)?;
    m.add_function(wrap_pyfunction!(sensor_s, m)?)?;
    m.add_function(wrap_pyfunction!(viscosity, m)?)?;
    m.add_function(wrap_pyfunction!(taylor_probe, m)?)?;
    m.add_function(wrap_pyfunction!(sensor_probe, m)?)?;
    m.add_function(wrap_pyfunction!(examples, m)?)?;
    m.add_function(wrap_pyfunction!(exact, m)?)?;
    m.add_class::<Solver1D>()?;
    m.add_class::<Solver2D>()?;
    Ok(())
}
