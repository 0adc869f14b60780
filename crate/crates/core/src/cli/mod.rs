// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `qwalk` command line: `simulate`, `limits`, `convergence`, `sweep`.
//!
//! Complex values are given as `re,im`; angles are in radians. Output goes
//! to `--out PATH` (plus a `PATH.meta.json` sidecar describing the run) or
//! to stdout. Data files carry no timestamps, so identical invocations give
//! byte-identical output.
//!
//! Exit codes: 0 ok, 1 I/O failure, 2 configuration error, 3 resource
//! limit, 4 degenerate coin, 5 numerical failure.

mod commands;
pub mod table;

pub use commands::{cmd_convergence, cmd_limits, cmd_simulate, cmd_sweep, LimitsReport};

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use thiserror::Error;

use crate::coin::{Coin, QubitState};
use crate::WalkError;

/// Environment variable consulted for the sweep thread count.
pub const THREADS_ENV: &str = "QWALK_THREADS";

/// States off the unit sphere by less than this are rescaled with a warning.
pub const STATE_RENORMALIZE_TOL: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(_) => 1,
            CliError::Walk(e) => match e {
                WalkError::NonUnitary { .. }
                | WalkError::OutOfRange { .. }
                | WalkError::OutOfDomain(_) => 2,
                WalkError::ResourceLimit { .. } => 3,
                WalkError::DegenerateCoin { .. } => 4,
                WalkError::NoConvergence { .. }
                | WalkError::NumericallyInvalid(_)
                | WalkError::ZeroComponent(_) => 5,
            },
        }
    }
}

/// A complex number parsed from `re,im`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexArg(pub Complex64);

impl FromStr for ComplexArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| format!("expected `re,im`, got `{s}`"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("`{t}` is not a finite number"))
        };
        Ok(Self(Complex64::new(parse(re)?, parse(im)?)))
    }
}

impl fmt::Display for ComplexArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0.re, self.0.im)
    }
}

/// `start:stop:count`, evenly spaced and inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaGrid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl ThetaGrid {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for ThetaGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts[..] else {
            return Err(format!("expected `start:stop:count`, got `{s}`"));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
        let count: usize = count
            .trim()
            .parse()
            .map_err(|e| format!("`{count}`: {e}"))?;
        if count == 0 {
            return Err("grid needs at least one point".into());
        }
        Ok(Self {
            start: num(start)?,
            stop: num(stop)?,
            count,
        })
    }
}

impl fmt::Display for ThetaGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.count)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    EntropySeries,
    Distribution,
    Amplitudes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qwalk", version, about = "Discrete-time quantum walks on the line")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the walk and emit per-step entropies, the final distribution, or amplitudes.
    Simulate(SimulateArgs),
    /// Evaluate the long-time limits in closed form and by quadrature (JSON).
    Limits(LimitsArgs),
    /// Track Shannon and entanglement entropies against their limits.
    Convergence(ConvergenceArgs),
    /// Limits over a grid of real coins U(theta).
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CoinArgs {
    /// Real coin U(theta), 0 < theta < pi/2.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// First row entry a as `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub coin_a: Option<ComplexArg>,
    /// First row entry b as `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub coin_b: Option<ComplexArg>,
    /// Determinant as `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub coin_delta: Option<ComplexArg>,
}

#[derive(Debug, Clone, Args)]
pub struct StateArgs {
    /// Amplitude of |L> as `re,im`.
    #[arg(long, allow_hyphen_values = true, default_value = "1,0")]
    pub alpha: ComplexArg,
    /// Amplitude of |R> as `re,im`.
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    pub beta: ComplexArg,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub coin: CoinArgs,
    #[command(flatten)]
    pub state: StateArgs,
    /// Number of walk steps, at most 1000000.
    #[arg(long)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Emit::EntropySeries)]
    pub emit: Emit,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LimitsArgs {
    #[command(flatten)]
    pub coin: CoinArgs,
    #[command(flatten)]
    pub state: StateArgs,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ConvergenceArgs {
    #[command(flatten)]
    pub coin: CoinArgs,
    #[command(flatten)]
    pub state: StateArgs,
    /// Number of walk steps, at most 1000000.
    #[arg(long)]
    pub steps: usize,
    /// Steps averaged in the running mean of S^c.
    #[arg(long, default_value_t = 100)]
    pub window: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// `start:stop:count` in radians.
    #[arg(long)]
    pub theta_grid: ThetaGrid,
    #[command(flatten)]
    pub state: StateArgs,
    /// Also report the finite-n Shannon entropy at this step.
    #[arg(long)]
    pub steps: Option<usize>,
    /// Worker threads; falls back to QWALK_THREADS, then all cores.
    #[arg(long)]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// How the coin was specified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoinSpec {
    Theta(f64),
    Entries {
        a: Complex64,
        b: Complex64,
        delta: Complex64,
    },
}

/// A validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub coin_spec: CoinSpec,
    pub coin: Coin,
    pub state: QubitState,
    pub steps: usize,
    pub window: usize,
    pub emit: Emit,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub threads: usize,
}

impl RunConfig {
    pub fn new(coin: &CoinArgs, state: &StateArgs) -> Result<Self, CliError> {
        let coin_spec = resolve_coin_spec(coin)?;
        let coin = match coin_spec {
            CoinSpec::Theta(t) => Coin::from_theta(t)?,
            CoinSpec::Entries { a, b, delta } => Coin::new(a, b, delta)?,
        };
        Ok(Self {
            coin_spec,
            coin,
            state: resolve_state(state)?,
            steps: 0,
            window: 1,
            emit: Emit::EntropySeries,
            format: Format::Csv,
            out: None,
            threads: 1,
        })
    }
}

fn resolve_coin_spec(args: &CoinArgs) -> Result<CoinSpec, CliError> {
    let entries = [args.coin_a, args.coin_b, args.coin_delta];
    let given = entries.iter().filter(|e| e.is_some()).count();
    match (args.theta, given) {
        (Some(t), 0) => Ok(CoinSpec::Theta(t)),
        (None, 3) => Ok(CoinSpec::Entries {
            a: entries[0].unwrap().0,
            b: entries[1].unwrap().0,
            delta: entries[2].unwrap().0,
        }),
        (Some(_), _) => Err(CliError::Config(
            "give either --theta or --coin-a/--coin-b/--coin-delta, not both".into(),
        )),
        (None, 0) => Err(CliError::Config(
            "a coin is required: --theta or --coin-a/--coin-b/--coin-delta".into(),
        )),
        (None, _) => Err(CliError::Config(
            "--coin-a, --coin-b and --coin-delta must be given together".into(),
        )),
    }
}

/// Accepts states within [`STATE_RENORMALIZE_TOL`] of the unit sphere,
/// rescaling them.
pub fn resolve_state(args: &StateArgs) -> Result<QubitState, CliError> {
    let (alpha, beta) = (args.alpha.0, args.beta.0);
    let off = (alpha.norm_sqr() + beta.norm_sqr() - 1.0).abs();
    if off > STATE_RENORMALIZE_TOL {
        return Err(CliError::Config(format!(
            "initial state is not normalized (|alpha|^2 + |beta|^2 - 1 = {off:e})"
        )));
    }
    if off > 1e-12 {
        log::warn!("renormalizing initial state (off by {off:e})");
    }
    Ok(QubitState::normalized(alpha, beta)?)
}

/// `--threads`, then `QWALK_THREADS`, then available parallelism.
pub fn resolve_threads(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return if n == 0 {
            Err(CliError::Config("--threads must be positive".into()))
        } else {
            Ok(n)
        };
    }
    if let Ok(v) = std::env::var(THREADS_ENV) {
        return match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Config(format!("{THREADS_ENV}=`{v}` is not a positive integer"))),
        };
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// What a command produced, before it is written out.
#[derive(Debug, Clone)]
pub enum Output {
    Table(table::Table),
    Json(serde_json::Value),
}

impl Output {
    pub fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match (self, format) {
            (Output::Table(t), Format::Csv) => t.write_csv(out),
            (Output::Table(t), Format::Json) => write_json(&t.to_json(), out),
            (Output::Json(v), _) => write_json(v, out),
        }
    }

    pub fn to_bytes(&self, format: Format) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write(format, &mut buf).expect("writing to memory");
        buf
    }
}

fn write_json(v: &serde_json::Value, out: &mut impl Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    out.write_all(b"\n")
}

fn emit(
    output: &Output,
    format: Format,
    path: Option<&PathBuf>,
    command: &str,
    argv: &[String],
) -> Result<(), CliError> {
    match path {
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            output.write(format, &mut lock)?;
            lock.flush()?;
        }
        Some(path) => {
            std::fs::write(path, output.to_bytes(format))?;
            let mut sidecar = path.clone().into_os_string();
            sidecar.push(".meta.json");
            let meta = serde_json::json!({
                "tool": "qwalk",
                "version": env!("CARGO_PKG_VERSION"),
                "command": command,
                "args": argv,
            });
            let mut bytes = serde_json::to_vec_pretty(&meta).expect("serializable");
            bytes.push(b'\n');
            std::fs::write(sidecar, bytes)?;
        }
    }
    Ok(())
}

/// Parses `argv` and runs the selected command; returns the exit code.
pub fn main_with_args(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli, &argv) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("qwalk: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli, argv: &[String]) -> Result<(), CliError> {
    match &cli.command {
        Command::Simulate(args) => {
            let mut cfg = RunConfig::new(&args.coin, &args.state)?;
            cfg.steps = args.steps;
            cfg.emit = args.emit;
            cfg.format = args.output.format;
            cfg.out = args.output.out.clone();
            let out = cmd_simulate(&cfg)?;
            emit(&out, cfg.format, cfg.out.as_ref(), "simulate", argv)
        }
        Command::Limits(args) => {
            let mut cfg = RunConfig::new(&args.coin, &args.state)?;
            cfg.format = Format::Json;
            cfg.out = args.out.clone();
            let report = cmd_limits(&cfg)?;
            let out = Output::Json(serde_json::to_value(&report).expect("serializable"));
            emit(&out, Format::Json, cfg.out.as_ref(), "limits", argv)
        }
        Command::Convergence(args) => {
            let mut cfg = RunConfig::new(&args.coin, &args.state)?;
            cfg.steps = args.steps;
            cfg.window = args.window;
            cfg.format = args.output.format;
            cfg.out = args.output.out.clone();
            let out = cmd_convergence(&cfg)?;
            emit(&out, cfg.format, cfg.out.as_ref(), "convergence", argv)
        }
        Command::Sweep(args) => {
            let state = resolve_state(&args.state)?;
            let threads = resolve_threads(args.threads)?;
            let out = cmd_sweep(&args.theta_grid, &state, args.steps, threads)?;
            emit(&out, args.output.format, args.output.out.as_ref(), "sweep", argv)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(
            "0.5,-0.25".parse::<ComplexArg>().unwrap().0,
            Complex64::new(0.5, -0.25)
        );
        assert!("0.5".parse::<ComplexArg>().is_err());
        assert!("a,b".parse::<ComplexArg>().is_err());
        assert!("inf,0".parse::<ComplexArg>().is_err());
    }

    #[test]
    fn grid_parsing() {
        let g: ThetaGrid = "0.1:0.5:5".parse().unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], 0.1);
        assert_eq!(pts[4], 0.5);
        assert!((pts[2] - 0.3).abs() < 1e-15);
        assert_eq!("0.7:0.9:1".parse::<ThetaGrid>().unwrap().points(), vec![0.7]);
        assert!("0.1:0.5".parse::<ThetaGrid>().is_err());
        assert!("0.1:0.5:0".parse::<ThetaGrid>().is_err());
    }

    #[test]
    fn coin_spec_resolution() {
        let mut args = CoinArgs {
            theta: Some(0.3),
            coin_a: None,
            coin_b: None,
            coin_delta: None,
        };
        assert_eq!(resolve_coin_spec(&args).unwrap(), CoinSpec::Theta(0.3));
        args.coin_a = Some("1,0".parse().unwrap());
        assert!(matches!(resolve_coin_spec(&args), Err(CliError::Config(_))));
        args.theta = None;
        assert!(matches!(resolve_coin_spec(&args), Err(CliError::Config(_))));
        args.coin_b = Some("0,0".parse().unwrap());
        args.coin_delta = Some("1,0".parse().unwrap());
        assert!(matches!(resolve_coin_spec(&args).unwrap(), CoinSpec::Entries { .. }));
    }

    #[test]
    fn state_renormalization() {
        let near = StateArgs {
            alpha: "0.7071067812,0".parse().unwrap(),
            beta: "0,0.7071067812".parse().unwrap(),
        };
        let s = resolve_state(&near).unwrap();
        assert!((s.alpha.norm_sqr() + s.beta.norm_sqr() - 1.0).abs() < 1e-15);
        let far = StateArgs {
            alpha: "0.7,0".parse().unwrap(),
            beta: "0,0.7".parse().unwrap(),
        };
        assert!(matches!(resolve_state(&far), Err(CliError::Config(_))));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Config(String::new()).exit_code(), 2);
        let degenerate = WalkError::DegenerateCoin {
            factor: "b".into(),
            abcd: 0.0,
        };
        assert_eq!(CliError::from(degenerate).exit_code(), 4);
        let limit = WalkError::ResourceLimit {
            what: "steps",
            requested: 2,
            cap: 1,
        };
        assert_eq!(CliError::from(limit).exit_code(), 3);
        let nc = WalkError::NoConvergence {
            nodes: 1,
            residual: 1.0,
        };
        assert_eq!(CliError::from(nc).exit_code(), 5);
    }

    #[test]
    fn explicit_thread_count_wins() {
        assert_eq!(resolve_threads(Some(3)).unwrap(), 3);
        assert!(resolve_threads(Some(0)).is_err());
    }
}
