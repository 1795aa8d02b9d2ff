//! `nvsinc` — coefficient generation, oracle checks, one-shot interpolation,
//! convergence sweeps, batch experiment runs, and a built-in selftest.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nvsinc::runner::{self, RunError};
use nvsinc::samples::read_samples_csv;
use nvsinc::selftest::{all_passed, run_selftest};
use nvsinc::spec::{parse_signal_spec, ConfigSpec, ExperimentSpec};
use nvsinc_core::{
    classical_row, coeff, coeff_by_quadrature, coeff_row, interpolate, report, Formula,
    SamplingConfig, TruncationWindow, WindowMode,
};
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nvsinc", about = "Band-limited signal reconstruction from integer samples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Sampling parameters shared by the numeric subcommands. Omitted values fall
/// back to a config file and then to the reference choice omega = 5*pi/12
/// with the default recipe for omega1 and n.
#[derive(Args)]
struct ConfigArgs {
    /// Band edge omega in (0, pi)
    #[arg(long)]
    omega: Option<f64>,
    /// Oversampled band edge omega1 in (omega, pi)
    #[arg(long)]
    omega1: Option<f64>,
    /// Even segment parameter n
    #[arg(long)]
    n: Option<i64>,
    /// JSON config file with keys omega, omega1 (optional), n (optional)
    #[arg(long)]
    config: Option<PathBuf>,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<SamplingConfig, String> {
        let mut spec = if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("reading config {path:?}: {e}"))?;
            serde_json::from_str::<ConfigSpec>(&text)
                .map_err(|e| format!("parsing config {path:?}: {e}"))?
        } else {
            ConfigSpec { omega: 5.0 * PI / 12.0, omega1: None, n: None }
        };
        if let Some(omega) = self.omega {
            spec.omega = omega;
        }
        if let Some(omega1) = self.omega1 {
            spec.omega1 = Some(omega1);
        }
        if let Some(n) = self.n {
            spec.n = Some(n);
        }
        spec.resolve().map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Modified,
    Classical,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Run a batch experiment spec (a JSON file or a bundled name)
    Run {
        /// Path to a spec file, or one of: paper_sec3_cosine, paper_sec3_kpt
        #[arg(long)]
        spec: String,
        /// Directory the artifact is written into
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Run the built-in verification suites
    Selftest,
    /// Emit interpolation coefficients as CSV `k,value`
    Coeffs {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, allow_negative_numbers = true)]
        k_lo: i64,
        #[arg(long, allow_negative_numbers = true)]
        k_hi: i64,
        /// Emit classical instead of modified coefficients
        #[arg(long)]
        classical: bool,
        #[command(flatten)]
        config: ConfigArgs,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare one closed-form coefficient against the quadrature oracle
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        /// Initial panel count for the composite quadrature
        #[arg(long, default_value_t = 64)]
        panels: u32,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Reconstruct one point and report both formulas as JSON
    Interp {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// Truncation half-width (required for --window zero|t)
        #[arg(long, short = 'L')]
        l: Option<u64>,
        /// Window: `zero`, `t`, or an explicit `lo:hi`
        #[arg(long, default_value = "t", allow_hyphen_values = true)]
        window: String,
        /// Signal spec, e.g. cosine:omega=1.3,shift=500
        #[arg(long)]
        signal: Option<String>,
        /// CSV file with rows k,re[,im] instead of a signal
        #[arg(long)]
        samples: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindArg,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Error-vs-L sweep as CSV `L,err_classical,err_modified`
    Sweep {
        /// Comma-separated half-widths, e.g. 1e3,1e4,1e5
        #[arg(long = "Ls")]
        ls: String,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// Window centering: `zero` or `t`
        #[arg(long, default_value = "t")]
        window: String,
        #[arg(long)]
        signal: String,
        #[command(flatten)]
        config: ConfigArgs,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("NVSINC_THREADS") {
        if let Ok(threads) = v.parse::<usize>() {
            if threads >= 1 {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global()
                    .ok();
            }
        }
    }
    match Cli::parse().command {
        Command::Run { spec, out_dir } => cmd_run(&spec, &out_dir),
        Command::Selftest => cmd_selftest(),
        Command::Coeffs { t, k_lo, k_hi, classical, config, output } => {
            cmd_coeffs(t, k_lo, k_hi, classical, &config, output.as_deref())
        }
        Command::Oracle { t, k, panels, config } => cmd_oracle(t, k, panels, &config),
        Command::Interp { t, l, window, signal, samples, kind, config } => {
            cmd_interp(t, l, &window, signal.as_deref(), samples.as_deref(), kind, &config)
        }
        Command::Sweep { ls, t, window, signal, config, output } => {
            cmd_sweep(&ls, t, &window, &signal, &config, output.as_deref())
        }
    }
}

fn fail(msg: impl std::fmt::Display, code: u8) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn cmd_run(spec_arg: &str, out_dir: &std::path::Path) -> ExitCode {
    let text = if let Some(bundled) = nvsinc::bundled_spec(spec_arg) {
        bundled.to_string()
    } else {
        match std::fs::read_to_string(spec_arg) {
            Ok(t) => t,
            Err(e) => return fail(format!("reading spec `{spec_arg}`: {e}"), 2),
        }
    };
    let spec: ExperimentSpec = match serde_json::from_str(&text) {
        Ok(s) => s,
        Err(e) => return fail(format!("parsing spec `{spec_arg}`: {e}"), 2),
    };
    match runner::run_spec(&spec, out_dir) {
        Ok(artifacts) => {
            println!(
                "wrote {} rows to {}",
                artifacts.rows.len(),
                artifacts.path.display()
            );
            ExitCode::SUCCESS
        }
        Err(e @ RunError::Invalid { .. }) => fail(e, 2),
        Err(e @ RunError::Numeric(_)) => fail(e, 3),
        Err(e @ RunError::Io(_)) => fail(e, 1),
    }
}

fn cmd_selftest() -> ExitCode {
    let results = run_selftest(0.0);
    for r in &results {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!("[{status}] {:<20} {}", r.name, r.detail);
    }
    if all_passed(&results) {
        println!("selftest: all {} suites passed", results.len());
        ExitCode::SUCCESS
    } else {
        println!("selftest: FAILURES detected");
        ExitCode::from(1)
    }
}

fn cmd_coeffs(
    t: f64,
    k_lo: i64,
    k_hi: i64,
    classical: bool,
    config: &ConfigArgs,
    output: Option<&std::path::Path>,
) -> ExitCode {
    let cfg = match config.resolve() {
        Ok(c) => c,
        Err(e) => return fail(e, 2),
    };
    let row = if classical {
        classical_row(t, k_lo, k_hi)
    } else {
        coeff_row(&cfg, t, k_lo, k_hi)
    };
    let row = match row {
        Ok(r) => r,
        Err(e) => return fail(e, 3),
    };
    let mut text = String::from("k,value\n");
    for k in row.k_lo..=row.k_hi() {
        text.push_str(&format!(
            "{k},{}\n",
            runner::full_precision(row.value_at(k).unwrap())
        ));
    }
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                return fail(e, 1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}

fn cmd_oracle(t: f64, k: i64, panels: u32, config: &ConfigArgs) -> ExitCode {
    let cfg = match config.resolve() {
        Ok(c) => c,
        Err(e) => return fail(e, 2),
    };
    let closed = match coeff(&cfg, t, k) {
        Ok(v) => v,
        Err(e) => return fail(e, 3),
    };
    let quad = match coeff_by_quadrature(&cfg, t, k, panels) {
        Ok(v) => v,
        Err(e) => return fail(e, 3),
    };
    println!("closed-form: {}", runner::full_precision(closed));
    println!("quadrature:  {}", runner::full_precision(quad));
    println!("difference:  {:e}", (closed - quad).abs());
    ExitCode::SUCCESS
}

enum WindowArg {
    Mode(WindowMode),
    Explicit(i64, i64),
}

fn parse_window_arg(s: &str) -> Result<WindowArg, String> {
    match s {
        "zero" => Ok(WindowArg::Mode(WindowMode::CenteredAtZero)),
        "t" => Ok(WindowArg::Mode(WindowMode::CenteredAtT)),
        other => {
            let (lo, hi) = other
                .split_once(':')
                .ok_or_else(|| format!("window must be zero, t, or lo:hi, got `{other}`"))?;
            Ok(WindowArg::Explicit(
                lo.parse().map_err(|e| format!("bad window lo: {e}"))?,
                hi.parse().map_err(|e| format!("bad window hi: {e}"))?,
            ))
        }
    }
}

fn cmd_interp(
    t: f64,
    l: Option<u64>,
    window: &str,
    signal: Option<&str>,
    samples: Option<&std::path::Path>,
    kind: KindArg,
    config: &ConfigArgs,
) -> ExitCode {
    let cfg = match config.resolve() {
        Ok(c) => c,
        Err(e) => return fail(e, 2),
    };
    let window = match parse_window_arg(window) {
        Ok(WindowArg::Mode(mode)) => match l {
            Some(l) => TruncationWindow::from_mode(mode, l),
            None => return fail("--window zero|t requires -L <half-width>", 2),
        },
        Ok(WindowArg::Explicit(k_lo, k_hi)) => TruncationWindow::Explicit { k_lo, k_hi },
        Err(e) => return fail(e, 2),
    };
    let mut out = serde_json::Map::new();
    out.insert("t".into(), serde_json::json!(t));
    out.insert("window".into(), serde_json::json!(window));
    out.insert("config".into(), serde_json::json!(cfg));
    match (signal, samples) {
        (Some(sig_str), None) => {
            let sig_spec = match parse_signal_spec(sig_str) {
                Ok(s) => s,
                Err(e) => return fail(e, 2),
            };
            if sig_spec.depends_on_l() && l.is_none() {
                return fail("this signal's shift is bound to L; pass -L", 2);
            }
            let sig = match sig_spec.resolve(l.unwrap_or(0)) {
                Ok(s) => s,
                Err(e) => return fail(e, 2),
            };
            let rep = match report(&cfg, &sig, t, &window) {
                Ok(r) => r,
                Err(e) => return fail(e, 3),
            };
            out.insert("truth".into(), serde_json::json!(rep.truth));
            if matches!(kind, KindArg::Modified | KindArg::Both) {
                out.insert("estimate_modified".into(), serde_json::json!(rep.estimate_modified));
                out.insert("abs_err_modified".into(), serde_json::json!(rep.abs_err_modified));
            }
            if matches!(kind, KindArg::Classical | KindArg::Both) {
                out.insert("estimate_classical".into(), serde_json::json!(rep.estimate_classical));
                out.insert("abs_err_classical".into(), serde_json::json!(rep.abs_err_classical));
            }
        }
        (None, Some(path)) => {
            let grid = match read_samples_csv(path) {
                Ok(g) => g,
                Err(e) => return fail(e, 2),
            };
            let mut run = |formula: Formula, label_est: &str| -> Result<(), ExitCode> {
                match interpolate(&cfg, &grid, t, &window, formula) {
                    Ok(v) => {
                        out.insert(label_est.into(), serde_json::json!(v));
                        Ok(())
                    }
                    Err(e) => Err(fail(e, 3)),
                }
            };
            if matches!(kind, KindArg::Modified | KindArg::Both) {
                if let Err(code) = run(Formula::Modified, "estimate_modified") {
                    return code;
                }
            }
            if matches!(kind, KindArg::Classical | KindArg::Both) {
                if let Err(code) = run(Formula::Classical, "estimate_classical") {
                    return code;
                }
            }
        }
        _ => return fail("exactly one of --signal or --samples is required", 2),
    }
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    ExitCode::SUCCESS
}

fn cmd_sweep(
    ls: &str,
    t: f64,
    window: &str,
    signal: &str,
    config: &ConfigArgs,
    output: Option<&std::path::Path>,
) -> ExitCode {
    let cfg = match config.resolve() {
        Ok(c) => c,
        Err(e) => return fail(e, 2),
    };
    let mode = match parse_window_arg(window) {
        Ok(WindowArg::Mode(mode)) => mode,
        Ok(WindowArg::Explicit(..)) => return fail("sweep windows must be zero or t", 2),
        Err(e) => return fail(e, 2),
    };
    let sig_spec = match parse_signal_spec(signal) {
        Ok(s) => s,
        Err(e) => return fail(e, 2),
    };
    let mut l_values = Vec::new();
    for part in ls.split(',') {
        match part.trim().parse::<f64>() {
            Ok(v) if v >= 1.0 && v.fract() == 0.0 => l_values.push(v as u64),
            _ => return fail(format!("bad L value `{part}`"), 2),
        }
    }
    if l_values.is_empty() {
        return fail("--Ls must list at least one half-width", 2);
    }
    let mut text = String::from("L,err_classical,err_modified\n");
    for &l in &l_values {
        let sig = match sig_spec.resolve(l) {
            Ok(s) => s,
            Err(e) => return fail(e, 2),
        };
        let rep = match report(&cfg, &sig, t, &TruncationWindow::from_mode(mode, l)) {
            Ok(r) => r,
            Err(e) => return fail(e, 3),
        };
        text.push_str(&format!(
            "{l},{},{}\n",
            runner::full_precision(rep.abs_err_classical),
            runner::full_precision(rep.abs_err_modified),
        ));
    }
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                return fail(e, 1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
