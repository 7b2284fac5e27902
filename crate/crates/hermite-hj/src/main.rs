//! Command-line harness: run the built-in examples, produce convergence
//! tables, and probe the sensor and Taylor recursions. All output is CSV
//! (header row, `%.16e` floats) so any plotting tool can consume it.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical blow-up.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use hermite_hj::hamiltonian::Example;
use hermite_hj::oracle;
use hermite_hj::probe::{
    rates, sensor_probe_1d_sine, sensor_probe_2d, taylor_probe_1d, taylor_probe_2d, ErrRow,
    Probe1, Probe2, StepProbe,
};
use hermite_hj::sensor::SensorConfig;
use hermite_hj::stepper::{Solver1D, Solver2D};
use hermite_hj::Error;

#[derive(Parser)]
#[command(name = "hermite-hj", version, about = "Hermite method for Hamilton-Jacobi equations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one example and write solution/diagnostics/summary CSVs.
    Run(RunArgs),
    /// Run a refinement ladder against the exact solution and print a rate table.
    Convergence(ConvArgs),
    /// Evaluate the smoothness sensor on a built-in probe function.
    SensorProbe(SensorProbeArgs),
    /// Measure accuracy of the Hamiltonian Taylor recursions on a ladder.
    TaylorProbe(TaylorProbeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(Args)]
struct RunArgs {
    /// TOML config file; command-line flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    example: Option<String>,
    /// Number of derivatives carried per node.
    #[arg(long)]
    m: Option<usize>,
    /// Cells per direction.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    cfl: Option<f64>,
    /// Fixed time step; overrides --cfl.
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    tfinal: Option<f64>,
    #[arg(long, value_enum)]
    sensor: Option<OnOff>,
    #[arg(long)]
    nu0_scale: Option<f64>,
    #[arg(long)]
    threads: Option<usize>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConvArgs {
    #[arg(long)]
    example: String,
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Comma-separated cell counts; defaults to the example's ladder.
    #[arg(long, value_delimiter = ',')]
    ladder: Option<Vec<usize>>,
    #[arg(long)]
    cfl: Option<f64>,
    /// `scaled` shrinks the CFL with resolution so the RK4 error stays
    /// below the spatial error on smooth runs; `fixed` keeps it constant
    /// (appropriate for first-order post-kink ladders).
    #[arg(long, value_enum, default_value_t = CflMode::Scaled)]
    cfl_mode: CflMode,
    #[arg(long)]
    tfinal: Option<f64>,
    #[arg(long, value_enum, default_value_t = OnOff::On)]
    sensor: OnOff,
    #[arg(long)]
    nu0_scale: Option<f64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Optional CSV output path for the table.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CflMode {
    Scaled,
    Fixed,
}

#[derive(Args)]
struct SensorProbeArgs {
    /// One of: radial-step, oblique-step, smooth-sine (2-D), sine-1d.
    #[arg(long)]
    probe: String,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 40)]
    n: usize,
    /// Output CSV path (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TaylorProbeArgs {
    /// One of: cos-composition, abs-value, cos-cos, sin-add, sin-mult.
    #[arg(long)]
    probe: String,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, value_delimiter = ',')]
    ladder: Option<Vec<usize>>,
    /// Optional CSV output path for the table.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// On-disk config: every key optional, unknown keys rejected.
#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    example: Option<String>,
    m: Option<usize>,
    n: Option<usize>,
    cfl: Option<f64>,
    dt: Option<f64>,
    tfinal: Option<f64>,
    sensor: Option<bool>,
    nu0_scale: Option<f64>,
    threads: Option<usize>,
    out: Option<String>,
}

/// Fully resolved run configuration; a copy is written next to the outputs.
#[derive(Serialize)]
struct RunConfig {
    example: String,
    m: usize,
    n: usize,
    cfl: f64,
    dt: Option<f64>,
    tfinal: f64,
    sensor: bool,
    nu0_scale: f64,
    threads: usize,
    out: String,
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Run(a) => cmd_run(a),
        Cmd::Convergence(a) => cmd_convergence(a),
        Cmd::SensorProbe(a) => cmd_sensor_probe(a),
        Cmd::TaylorProbe(a) => cmd_taylor_probe(a),
    }
}

fn config_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_example(name: &str) -> Result<Example, ExitCode> {
    Example::parse(name).ok_or_else(|| config_error(&format!("unknown example '{name}'")))
}

fn set_threads(threads: usize) -> Result<(), ExitCode> {
    if threads == 0 {
        return Err(config_error("--threads must be >= 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| config_error(&format!("thread pool: {e}")))
}

fn fmt_csv_row(vals: &[f64]) -> String {
    let mut s = String::new();
    for (i, v) in vals.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{v:.16e}");
    }
    s
}

fn write_file(path: &Path, contents: &str) -> Result<(), ExitCode> {
    std::fs::write(path, contents)
        .map_err(|e| config_error(&format!("cannot write {}: {e}", path.display())))
}

fn cmd_run(a: RunArgs) -> ExitCode {
    let file: FileConfig = match &a.config {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(text) => match toml::from_str(&text) {
                Ok(c) => c,
                Err(e) => return config_error(&format!("config parse: {e}")),
            },
            Err(e) => return config_error(&format!("cannot read {}: {e}", p.display())),
        },
        None => FileConfig::default(),
    };
    let name = match a.example.or(file.example) {
        Some(n) => n,
        None => return config_error("an example must be given via --example or the config file"),
    };
    let ex = match parse_example(&name) {
        Ok(ex) => ex,
        Err(code) => return code,
    };
    let cfg = RunConfig {
        example: ex.name().to_string(),
        m: a.m.or(file.m).unwrap_or(2),
        n: a.n.or(file.n).unwrap_or(ex.default_n()),
        cfl: a.cfl.or(file.cfl).unwrap_or(ex.default_cfl()),
        dt: a.dt.or(file.dt),
        tfinal: a.tfinal.or(file.tfinal).unwrap_or(ex.default_tfinal()),
        sensor: a.sensor.map(|s| s == OnOff::On).or(file.sensor).unwrap_or(true),
        nu0_scale: a.nu0_scale.or(file.nu0_scale).unwrap_or(ex.default_nu0_scale()),
        threads: a.threads.or(file.threads).unwrap_or(1),
        out: a
            .out
            .map(|p| p.display().to_string())
            .or(file.out)
            .unwrap_or_else(|| "out".to_string()),
    };
    if cfg.m < 1 || cfg.n < 2 {
        return config_error("need m >= 1 and n >= 2");
    }
    if let Err(code) = set_threads(cfg.threads) {
        return code;
    }
    let out_dir = PathBuf::from(&cfg.out);
    if let Err(e) = std::fs::create_dir_all(&out_dir) {
        return config_error(&format!("cannot create {}: {e}", out_dir.display()));
    }
    let resolved = toml::to_string_pretty(&cfg).expect("config serializes");
    if let Err(code) = write_file(&out_dir.join("resolved-config.toml"), &resolved) {
        return code;
    }

    let result = if ex.is_two_d() {
        run_2d(ex, &cfg, &out_dir)
    } else {
        run_1d(ex, &cfg, &out_dir)
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Code(c)) => ExitCode::from(c),
    }
}

struct Code(u8);

fn blow_up_or_config(e: Error) -> Code {
    match e {
        Error::BlowUp { t } => {
            eprintln!("error: numerical blow-up at t = {t}");
            Code(3)
        }
        Error::Config(msg) => {
            eprintln!("error: {msg}");
            Code(2)
        }
    }
}

fn run_1d(ex: Example, cfg: &RunConfig, out: &Path) -> Result<(), Code> {
    let mut s = Solver1D::new(ex, cfg.m, cfg.n, SensorConfig::new(cfg.m));
    s.sensor_on = cfg.sensor;
    s.nu0_scale = cfg.nu0_scale;
    s.init_example();
    let dt = cfg
        .dt
        .unwrap_or_else(|| cfg.cfl * s.axis.h / s.lambda0().max(1e-12));
    s.run(cfg.tfinal, dt).map_err(blow_up_or_config)?;

    let exact = oracle::exact_1d(ex);
    let mut sol = String::from(if exact.is_some() { "x,u,exact\n" } else { "x,u\n" });
    for i in 0..s.axis.n_primal() {
        let x = s.axis.primal(i);
        let u = s.polys[i][0];
        let mut row = vec![x, u];
        if let Some(f) = exact {
            row.push(f(x, cfg.tfinal));
        }
        sol.push_str(&fmt_csv_row(&row));
        sol.push('\n');
    }
    write_file(&out.join("solution.csv"), &sol).map_err(|_| Code(2))?;

    let d = &s.last_sense;
    let mut diag = String::from("x,s,nu,kbar\n");
    for i in 0..d.x.len() {
        diag.push_str(&fmt_csv_row(&[d.x[i], d.s[i], d.nu[i], d.kbar[i]]));
        diag.push('\n');
    }
    write_file(&out.join("diagnostics.csv"), &diag).map_err(|_| Code(2))?;

    let mut sum = String::from("tfinal,max_abs,l1,l2,linf\n");
    let (l1, l2, li) = match exact {
        Some(f) => s.errors(|x| f(x, cfg.tfinal)),
        None => (f64::NAN, f64::NAN, f64::NAN),
    };
    sum.push_str(&fmt_csv_row(&[cfg.tfinal, s.max_abs(), l1, l2, li]));
    sum.push('\n');
    write_file(&out.join("summary.csv"), &sum).map_err(|_| Code(2))?;
    println!(
        "{} m={} n={} T={}: max|u| = {:.6e}",
        ex.name(),
        cfg.m,
        cfg.n,
        cfg.tfinal,
        s.max_abs()
    );
    Ok(())
}

fn run_2d(ex: Example, cfg: &RunConfig, out: &Path) -> Result<(), Code> {
    let mut s = Solver2D::new(ex, cfg.m, cfg.n, SensorConfig::new(cfg.m));
    s.sensor_on = cfg.sensor;
    s.nu0_scale = cfg.nu0_scale;
    s.init_example();
    let dt = cfg
        .dt
        .unwrap_or_else(|| cfg.cfl * s.ax.h.min(s.ay.h) / s.lambda0().max(1e-12));
    s.run(cfg.tfinal, dt).map_err(blow_up_or_config)?;

    let exact = oracle::exact_2d(ex);
    let mut sol = String::from(if exact.is_some() {
        "x,y,u,exact\n"
    } else {
        "x,y,u\n"
    });
    for (x, y, u) in s.node_values() {
        let mut row = vec![x, y, u];
        if let Some(f) = exact {
            row.push(f(x, y, cfg.tfinal));
        }
        sol.push_str(&fmt_csv_row(&row));
        sol.push('\n');
    }
    write_file(&out.join("solution.csv"), &sol).map_err(|_| Code(2))?;

    let d = &s.last_sense;
    let mut diag = String::from("x,y,s,nu,kbar\n");
    for i in 0..d.x.len() {
        diag.push_str(&fmt_csv_row(&[d.x[i], d.y[i], d.s[i], d.nu[i], d.kbar[i]]));
        diag.push('\n');
    }
    write_file(&out.join("diagnostics.csv"), &diag).map_err(|_| Code(2))?;

    let mut sum = String::from("tfinal,max_abs,l1,l2,linf\n");
    let (l1, l2, li) = match exact {
        Some(f) => s.errors(|x, y| f(x, y, cfg.tfinal)),
        None => (f64::NAN, f64::NAN, f64::NAN),
    };
    sum.push_str(&fmt_csv_row(&[cfg.tfinal, s.max_abs(), l1, l2, li]));
    sum.push('\n');
    write_file(&out.join("summary.csv"), &sum).map_err(|_| Code(2))?;
    println!(
        "{} m={} n={} T={}: max|u| = {:.6e}",
        ex.name(),
        cfg.m,
        cfg.n,
        cfg.tfinal,
        s.max_abs()
    );
    Ok(())
}

/// Shared ladder driver; returns error rows for the requested resolutions.
#[allow(clippy::too_many_arguments)] // mirrors the CLI parameter set
fn ladder_errors(
    ex: Example,
    m: usize,
    ladder: &[usize],
    tfinal: f64,
    cfl0: f64,
    cfl_mode: CflMode,
    sensor: bool,
    nu0_scale: f64,
) -> Result<Vec<ErrRow>, Code> {
    let n0 = ladder[0] as f64;
    let mut rows = Vec::new();
    for &n in ladder {
        let cfl = match cfl_mode {
            CflMode::Fixed => cfl0,
            CflMode::Scaled => {
                cfl0 * (n0 / n as f64).powf((2.0 * m as f64 - 3.0).max(0.0) / 4.0)
            }
        };
        let (l1, l2, linf) = if ex.is_two_d() {
            let f = oracle::exact_2d(ex)
                .ok_or_else(|| blow_up_or_config(Error::Config(format!(
                    "{} has no exact solution; convergence needs one",
                    ex.name()
                ))))?;
            let mut s = Solver2D::new(ex, m, n, SensorConfig::new(m));
            s.sensor_on = sensor;
            s.nu0_scale = nu0_scale;
            s.init_example();
            let dt = cfl * s.ax.h.min(s.ay.h) / s.lambda0().max(1e-12);
            s.run(tfinal, dt).map_err(blow_up_or_config)?;
            s.errors(|x, y| f(x, y, tfinal))
        } else {
            let f = oracle::exact_1d(ex)
                .ok_or_else(|| blow_up_or_config(Error::Config(format!(
                    "{} has no exact solution; convergence needs one",
                    ex.name()
                ))))?;
            let mut s = Solver1D::new(ex, m, n, SensorConfig::new(m));
            s.sensor_on = sensor;
            s.nu0_scale = nu0_scale;
            s.init_example();
            let dt = cfl * s.axis.h / s.lambda0().max(1e-12);
            s.run(tfinal, dt).map_err(blow_up_or_config)?;
            s.errors(|x| f(x, tfinal))
        };
        rows.push(ErrRow { n, l1, l2, linf });
    }
    Ok(rows)
}

fn print_rate_table(rows: &[ErrRow], out: &Option<PathBuf>) -> Result<(), Code> {
    let rt = rates(rows);
    println!(
        "{:>6} {:>13} {:>6} {:>13} {:>6} {:>13} {:>6}",
        "n", "L1", "rate", "L2", "rate", "Linf", "rate"
    );
    let mut csv = String::from("n,l1,l1_rate,l2,l2_rate,linf,linf_rate\n");
    for (i, r) in rows.iter().enumerate() {
        let (r1, r2, ri) = if i == 0 {
            (f64::NAN, f64::NAN, f64::NAN)
        } else {
            rt[i - 1]
        };
        let f = |v: f64| {
            if v.is_nan() {
                "-".to_string()
            } else {
                format!("{v:.2}")
            }
        };
        println!(
            "{:>6} {:>13.4e} {:>6} {:>13.4e} {:>6} {:>13.4e} {:>6}",
            r.n,
            r.l1,
            f(r1),
            r.l2,
            f(r2),
            r.linf,
            f(ri)
        );
        let _ = writeln!(
            csv,
            "{},{}",
            r.n,
            fmt_csv_row(&[r.l1, r1, r.l2, r2, r.linf, ri])
        );
    }
    if let Some(p) = out {
        write_file(p, &csv).map_err(|_| Code(2))?;
    }
    Ok(())
}

fn cmd_convergence(a: ConvArgs) -> ExitCode {
    let ex = match parse_example(&a.example) {
        Ok(ex) => ex,
        Err(code) => return code,
    };
    if let Err(code) = set_threads(a.threads) {
        return code;
    }
    let ladder = a.ladder.unwrap_or_else(|| ex.default_ladder());
    if ladder.len() < 2 {
        return config_error("ladder needs at least two resolutions");
    }
    let tfinal = a.tfinal.unwrap_or(ex.default_tfinal());
    let cfl = a.cfl.unwrap_or(ex.default_cfl());
    let nu0 = a.nu0_scale.unwrap_or(ex.default_nu0_scale());
    println!("{} m={} T={}", ex.name(), a.m, tfinal);
    let rows = match ladder_errors(
        ex,
        a.m,
        &ladder,
        tfinal,
        cfl,
        a.cfl_mode,
        a.sensor == OnOff::On,
        nu0,
    ) {
        Ok(r) => r,
        Err(Code(c)) => return ExitCode::from(c),
    };
    match print_rate_table(&rows, &a.out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Code(c)) => ExitCode::from(c),
    }
}

fn cmd_sensor_probe(a: SensorProbeArgs) -> ExitCode {
    let mut csv = String::from("x,y,s,nu,crossing\n");
    match a.probe.as_str() {
        "radial-step" | "oblique-step" | "smooth-sine" => {
            let p = match a.probe.as_str() {
                "radial-step" => StepProbe::RadialStep,
                "oblique-step" => StepProbe::ObliqueStep,
                _ => StepProbe::SmoothSine,
            };
            for c in sensor_probe_2d(p, a.m, a.n) {
                let _ = writeln!(
                    csv,
                    "{},{}",
                    fmt_csv_row(&[c.x, c.y, c.s, c.nu]),
                    u8::from(c.crossing)
                );
            }
        }
        "sine-1d" => {
            for c in sensor_probe_1d_sine(a.m, a.n) {
                let _ = writeln!(csv, "{},{}", fmt_csv_row(&[c.x, c.y, c.s, c.nu]), 0);
            }
        }
        other => return config_error(&format!("unknown probe '{other}'")),
    }
    match a.out {
        Some(p) => match write_file(&p, &csv) {
            Ok(()) => ExitCode::SUCCESS,
            Err(code) => code,
        },
        None => {
            print!("{csv}");
            ExitCode::SUCCESS
        }
    }
}

fn cmd_taylor_probe(a: TaylorProbeArgs) -> ExitCode {
    let one_d = |p: Probe1, ladder: &[usize]| -> Vec<ErrRow> {
        ladder.iter().map(|&n| taylor_probe_1d(p, a.m, n)).collect()
    };
    let two_d = |p: Probe2, ladder: &[usize]| -> Vec<ErrRow> {
        ladder.iter().map(|&n| taylor_probe_2d(p, a.m, n)).collect()
    };
    type LadderFn<'a> = Box<dyn Fn(&[usize]) -> Vec<ErrRow> + 'a>;
    let (rows, default_ladder): (LadderFn<'_>, Vec<usize>) =
        match a.probe.as_str() {
            "cos-composition" => (
                Box::new(move |l| one_d(Probe1::CosComposition, l)),
                vec![20, 40, 80, 160],
            ),
            "abs-value" => (
                Box::new(move |l| one_d(Probe1::AbsValue, l)),
                vec![20, 40, 80, 160],
            ),
            "cos-cos" => (Box::new(move |l| two_d(Probe2::CosCos, l)), vec![10, 20, 40, 80]),
            "sin-add" => (Box::new(move |l| two_d(Probe2::SinAdd, l)), vec![10, 20, 40, 80]),
            "sin-mult" => (
                Box::new(move |l| two_d(Probe2::SinMult, l)),
                vec![10, 20, 40, 80],
            ),
            other => return config_error(&format!("unknown probe '{other}'")),
        };
    let ladder = a.ladder.unwrap_or(default_ladder);
    if ladder.len() < 2 {
        return config_error("ladder needs at least two resolutions");
    }
    println!("taylor probe {} m={}", a.probe, a.m);
    let rows = rows(&ladder);
    match print_rate_table(&rows, &a.out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Code(c)) => ExitCode::from(c),
    }
}
