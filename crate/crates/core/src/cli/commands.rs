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

//! The four subcommands as pure functions from a configuration to output.

use rayon::prelude::*;
use serde::Serialize;

use super::table::{Cell, Table};
use super::{CliError, CoinSpec, Emit, Output, RunConfig, ThetaGrid};
use crate::asymptotics::{
    real_family_limits, max_entropy, normalization_check, shannon_constants, closed_form_limits,
    limits_via_quadrature, DensityKernel,
};
use crate::coin::{Coin, QubitState};
use crate::entropy::{entanglement, reduced_coin_density, shannon, shannon_component};
use crate::evolution::{Walk, DEFAULT_STEP_CAP};
use crate::{Chirality, WalkError};

/// Smallest step count accepted by `convergence`.
pub const MIN_CONVERGENCE_STEPS: usize = 8;

fn check_steps(steps: usize) -> Result<(), CliError> {
    if steps > DEFAULT_STEP_CAP {
        return Err(WalkError::ResourceLimit {
            what: "steps",
            requested: steps,
            cap: DEFAULT_STEP_CAP,
        }
        .into());
    }
    Ok(())
}

fn describe(cfg: &RunConfig, table: &mut Table, command: &str) {
    table.meta("command", command);
    match cfg.coin_spec {
        CoinSpec::Theta(t) => table.meta("theta", t),
        CoinSpec::Entries { a, b, delta } => {
            table.meta("coin_a", format!("{},{}", a.re, a.im));
            table.meta("coin_b", format!("{},{}", b.re, b.im));
            table.meta("coin_delta", format!("{},{}", delta.re, delta.im));
        }
    }
    let s = &cfg.state;
    table.meta("alpha", format!("{},{}", s.alpha.re, s.alpha.im));
    table.meta("beta", format!("{},{}", s.beta.re, s.beta.im));
    table.meta("steps", cfg.steps);
}

fn component_entropy(walk: &Walk, which: Chirality) -> Result<Option<f64>, CliError> {
    match shannon_component(walk.field(), which) {
        Ok(v) => Ok(Some(v)),
        Err(WalkError::ZeroComponent(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Per-step entropies, or the final distribution or amplitudes.
pub fn cmd_simulate(cfg: &RunConfig) -> Result<Output, CliError> {
    check_steps(cfg.steps)?;
    let mut walk = Walk::with_capacity(cfg.coin, &cfg.state, cfg.steps);
    let mut table = match cfg.emit {
        Emit::EntropySeries => Table::new(vec![
            "n", "s_c", "det", "r_plus", "r_minus", "shannon", "shannon_l", "shannon_r", "norm_l",
            "norm_r", "overlap_re", "overlap_im",
        ]),
        Emit::Distribution => Table::new(vec!["n", "x", "p"]),
        Emit::Amplitudes => {
            Table::new(vec!["n", "x", "psi_l_re", "psi_l_im", "psi_r_re", "psi_r_im"])
        }
    };
    describe(cfg, &mut table, "simulate");
    if cfg.emit == Emit::EntropySeries {
        for n in 0..=cfg.steps {
            if n > 0 {
                walk.step();
            }
            let rho = reduced_coin_density(walk.field());
            let report = entanglement(&rho)?;
            table.push(vec![
                Cell::from(n),
                Cell::from(report.s_c),
                Cell::from(report.det),
                Cell::from(report.r_plus),
                Cell::from(report.r_minus),
                Cell::from(shannon(&walk.field().distribution())),
                Cell::from(component_entropy(&walk, Chirality::Left)?),
                Cell::from(component_entropy(&walk, Chirality::Right)?),
                Cell::from(rho.norm_l),
                Cell::from(rho.norm_r),
                Cell::from(rho.overlap_rl.re),
                Cell::from(rho.overlap_rl.im),
            ]);
        }
        return Ok(Output::Table(table));
    }
    walk.advance(cfg.steps);
    let field = walk.field();
    let n = field.time();
    for x in field.positions() {
        // sites of the wrong parity are identically zero
        if (x + n as i64) % 2 != 0 {
            continue;
        }
        let (l, r) = field.at(x);
        let mut row = vec![Cell::from(n), Cell::Int(x)];
        match cfg.emit {
            Emit::Distribution => row.push(Cell::from(l.norm_sqr() + r.norm_sqr())),
            _ => row.extend([l.re, l.im, r.re, r.im].map(Cell::from)),
        }
        table.push(row);
    }
    Ok(Output::Table(table))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShannonBlock {
    pub l: f64,
    pub r: f64,
    pub total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodBlock {
    pub closed_form_vs_quadrature: f64,
    pub quadrature_norm_l_inf: f64,
    pub quadrature_norm_r_inf: f64,
    pub quadrature_overlap_inf: ComplexValue,
    pub quadrature_nodes: usize,
    pub integral_f: f64,
    pub integral_f_residual: f64,
    pub rho_l: f64,
    pub rho_r: f64,
    pub normalization_nodes: usize,
    pub shannon_nodes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_family_residual: Option<f64>,
}

/// The document written by `limits`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitsReport {
    pub norm_l_inf: f64,
    pub norm_r_inf: f64,
    pub overlap_inf: ComplexValue,
    pub det_inf: f64,
    pub r_plus: f64,
    pub r_minus: f64,
    pub s_c_inf: f64,
    pub shannon_c: ShannonBlock,
    pub method: MethodBlock,
}

/// Closed-form limits, cross-checked by quadrature.
pub fn cmd_limits(cfg: &RunConfig) -> Result<LimitsReport, CliError> {
    limits_report(&cfg.coin, &cfg.state, theta_of(cfg))
}

fn theta_of(cfg: &RunConfig) -> Option<f64> {
    match cfg.coin_spec {
        CoinSpec::Theta(t) => Some(t),
        CoinSpec::Entries { .. } => None,
    }
}

fn limits_report(
    coin: &Coin,
    state: &QubitState,
    theta: Option<f64>,
) -> Result<LimitsReport, CliError> {
    let closed = closed_form_limits(coin, state)?;
    let kernel = DensityKernel::new(coin, state)?;
    let quad = limits_via_quadrature(&kernel)?;
    let norm = normalization_check(&kernel)?;
    let constants = shannon_constants(&kernel)?;
    let theta_family_residual = match theta {
        Some(t) => Some(real_family_limits(t, state)?.max_density_diff(&closed)),
        None => None,
    };
    let complex = |z: num_complex::Complex64| ComplexValue { re: z.re, im: z.im };
    Ok(LimitsReport {
        norm_l_inf: closed.norm_l_inf,
        norm_r_inf: closed.norm_r_inf,
        overlap_inf: complex(closed.overlap_inf),
        det_inf: closed.det_inf,
        r_plus: closed.r_plus_inf,
        r_minus: closed.r_minus_inf,
        s_c_inf: closed.s_c_inf,
        shannon_c: ShannonBlock {
            l: constants.c_l,
            r: constants.c_r,
            total: constants.c_total,
        },
        method: MethodBlock {
            closed_form_vs_quadrature: closed.max_density_diff(&quad.summary),
            quadrature_norm_l_inf: quad.summary.norm_l_inf,
            quadrature_norm_r_inf: quad.summary.norm_r_inf,
            quadrature_overlap_inf: complex(quad.summary.overlap_inf),
            quadrature_nodes: quad.nodes,
            integral_f: norm.total,
            integral_f_residual: (norm.total - 1.0).abs(),
            rho_l: norm.rho_l,
            rho_r: norm.rho_r,
            normalization_nodes: norm.nodes,
            shannon_nodes: constants.nodes,
            theta_family_residual,
        },
    })
}

/// Entropies against `log₂(n/2)` and the limit constants, from `n = 3`.
pub fn cmd_convergence(cfg: &RunConfig) -> Result<Output, CliError> {
    if cfg.steps < MIN_CONVERGENCE_STEPS {
        return Err(CliError::Config(format!(
            "--steps must be at least {MIN_CONVERGENCE_STEPS}"
        )));
    }
    if cfg.window == 0 {
        return Err(CliError::Config("--window must be positive".into()));
    }
    check_steps(cfg.steps)?;
    let limits = closed_form_limits(&cfg.coin, &cfg.state)?;
    let constants = shannon_constants(&DensityKernel::new(&cfg.coin, &cfg.state)?)?;

    let mut table = Table::new(vec![
        "n",
        "shannon",
        "ratio",
        "offset",
        "ratio_max",
        "shannon_l",
        "ratio_l",
        "offset_l",
        "shannon_r",
        "ratio_r",
        "offset_r",
        "s_c",
        "s_c_window_mean",
    ]);
    describe(cfg, &mut table, "convergence");
    table.meta("window", cfg.window);

    let mut walk = Walk::with_capacity(cfg.coin, &cfg.state, cfg.steps);
    let mut s_c_history = Vec::with_capacity(cfg.steps);
    for n in 1..=cfg.steps {
        walk.step();
        let s_c = entanglement(&reduced_coin_density(walk.field()))?.s_c;
        s_c_history.push(s_c);
        if n < 3 {
            continue;
        }
        let scale = (n as f64 / 2.0).log2();
        let recent = &s_c_history[s_c_history.len().saturating_sub(cfg.window)..];
        let mean = recent.iter().sum::<f64>() / recent.len() as f64;
        let s = shannon(&walk.field().distribution());
        let mut row = vec![
            Cell::from(n),
            Cell::from(s),
            Cell::from(s / scale),
            Cell::from(s - scale),
            Cell::from(s / max_entropy(n)),
        ];
        for which in [Chirality::Left, Chirality::Right] {
            let v = component_entropy(&walk, which)?;
            row.extend([
                Cell::from(v),
                Cell::from(v.map(|v| v / scale)),
                Cell::from(v.map(|v| v - scale)),
            ]);
        }
        row.extend([Cell::from(s_c), Cell::from(mean)]);
        table.push(row);
    }
    table.trailing("c_l", constants.c_l);
    table.trailing("c_r", constants.c_r);
    table.trailing("c_total", constants.c_total);
    table.trailing("s_c_inf", limits.s_c_inf);
    Ok(Output::Table(table))
}

/// One sweep row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub s_c_inf: f64,
    pub det_inf: f64,
    pub c_l: f64,
    pub c_r: f64,
    pub c_total: f64,
    pub shannon_n: Option<f64>,
}

fn sweep_point(theta: f64, state: &QubitState, steps: Option<usize>) -> Result<SweepRow, CliError> {
    let coin = Coin::from_theta(theta)?;
    let limits = closed_form_limits(&coin, state)?;
    let constants = shannon_constants(&DensityKernel::new(&coin, state)?)?;
    let shannon_n = steps.map(|n| {
        let mut walk = Walk::with_capacity(coin, state, n);
        walk.advance(n);
        shannon(&walk.field().distribution())
    });
    Ok(SweepRow {
        theta,
        s_c_inf: limits.s_c_inf,
        det_inf: limits.det_inf,
        c_l: constants.c_l,
        c_r: constants.c_r,
        c_total: constants.c_total,
        shannon_n,
    })
}

/// Evaluates every grid point on a pool of `threads` workers.
pub fn sweep_rows(
    grid: &ThetaGrid,
    state: &QubitState,
    steps: Option<usize>,
    threads: usize,
) -> Result<Vec<SweepRow>, CliError> {
    if let Some(n) = steps {
        check_steps(n)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    let points = grid.points();
    pool.install(|| {
        points
            .par_iter()
            .map(|&t| sweep_point(t, state, steps))
            .collect()
    })
}

/// Limits over a grid of real coins, in grid order.
pub fn cmd_sweep(
    grid: &ThetaGrid,
    state: &QubitState,
    steps: Option<usize>,
    threads: usize,
) -> Result<Output, CliError> {
    let rows = sweep_rows(grid, state, steps, threads)?;
    let mut table = Table::new(vec![
        "theta",
        "s_c_inf",
        "det_inf",
        "c_l",
        "c_r",
        "c_total",
        "shannon_n",
        "shannon_offset",
    ]);
    table.meta("command", "sweep");
    table.meta("theta_grid", grid);
    table.meta("alpha", format!("{},{}", state.alpha.re, state.alpha.im));
    table.meta("beta", format!("{},{}", state.beta.re, state.beta.im));
    if let Some(n) = steps {
        table.meta("steps", n);
    }
    for row in rows {
        let offset = match (row.shannon_n, steps) {
            (Some(s), Some(n)) if n >= 3 => Some(s - (n as f64 / 2.0).log2()),
            _ => None,
        };
        table.push(vec![
            Cell::from(row.theta),
            Cell::from(row.s_c_inf),
            Cell::from(row.det_inf),
            Cell::from(row.c_l),
            Cell::from(row.c_r),
            Cell::from(row.c_total),
            Cell::from(row.shannon_n),
            Cell::from(offset),
        ]);
    }
    Ok(Output::Table(table))
}
