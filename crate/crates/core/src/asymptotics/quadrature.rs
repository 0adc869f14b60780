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

//! Integrals against the arcsine kernel `1/√(r² − x²)` on `(−r, r)`.
//!
//! The substitution `x = r sin t` turns `∫ g(x)/√(r² − x²) dx` into
//! `∫_{−π/2}^{π/2} g(r sin t) dt`, which Gauss–Legendre handles without ever
//! sampling the endpoints. Rules are doubled from [`MIN_NODES`] up to
//! [`MAX_NODES`] until two successive estimates agree to within
//! [`CONVERGENCE_TOL`].

use std::f64::consts::FRAC_PI_2;
use std::num::NonZeroUsize;
use std::sync::OnceLock;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;

use crate::{Result, WalkError};

pub const MIN_NODES: usize = 64;
pub const MAX_NODES: usize = 1 << 16;
pub const CONVERGENCE_TOL: f64 = 1e-10;
/// Largest last-step change accepted when the node cap is reached.
pub const ACCEPT_TOL: f64 = 1e-8;

const LEVELS: usize = (MAX_NODES / MIN_NODES).trailing_zeros() as usize + 1;

static RULES: [OnceLock<Box<[(f64, f64)]>>; LEVELS] = [const { OnceLock::new() }; LEVELS];

/// Nodes and weights of the `MIN_NODES << level` point rule on `[−1, 1]`.
fn rule(level: usize) -> &'static [(f64, f64)] {
    RULES[level].get_or_init(|| {
        let degree = NonZeroUsize::new(MIN_NODES << level).expect("nonzero");
        GaussLegendre::new(degree).into_node_weight_pairs()
    })
}

/// An integral estimate with the rule size that produced it and the change
/// from the previous rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature<T> {
    pub value: T,
    pub nodes: usize,
    pub residual: f64,
}

trait Accumulate: Copy + std::ops::Add<Output = Self> + std::ops::Mul<f64, Output = Self> {
    const ZERO: Self;
    fn dist(self, other: Self) -> f64;
}

impl Accumulate for f64 {
    const ZERO: Self = 0.0;
    fn dist(self, other: Self) -> f64 {
        (self - other).abs()
    }
}

impl Accumulate for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);
    fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }
}

fn adaptive<T: Accumulate>(h: impl Fn(f64) -> T) -> Result<Quadrature<T>> {
    let mut previous: Option<T> = None;
    let mut residual = f64::INFINITY;
    for level in 0..LEVELS {
        let estimate = rule(level)
            .iter()
            .fold(T::ZERO, |acc, &(x, w)| acc + h(FRAC_PI_2 * x) * w)
            * FRAC_PI_2;
        let nodes = MIN_NODES << level;
        if let Some(prev) = previous {
            residual = estimate.dist(prev);
            if residual < CONVERGENCE_TOL || (nodes == MAX_NODES && residual < ACCEPT_TOL) {
                return Ok(Quadrature {
                    value: estimate,
                    nodes,
                    residual,
                });
            }
        }
        previous = Some(estimate);
    }
    Err(WalkError::NoConvergence {
        nodes: MAX_NODES,
        residual,
    })
}

/// `∫_{−π/2}^{π/2} h(t) dt`.
pub fn integrate_angle(h: impl Fn(f64) -> f64) -> Result<Quadrature<f64>> {
    adaptive(h)
}

/// `∫_{−π/2}^{π/2} h(t, π/2 − |t|) dt` for integrands with logarithmic
/// growth at `t = ±π/2`.
///
/// A second substitution `t = (π/2) sin s` makes `dt/ds` vanish at the
/// endpoints, so a `log cos t` singularity becomes `(1 − u) log(1 − u)` in
/// the node variable. The endpoint gap is passed separately because
/// `π/2 − |t|` cancels catastrophically when formed from `t`.
pub fn integrate_angle_clustered(h: impl Fn(f64, f64) -> f64) -> Result<Quadrature<f64>> {
    adaptive(|s| {
        let half = (FRAC_PI_2 - s.abs()) / 2.0;
        let gap = FRAC_PI_2 * 2.0 * half.sin() * half.sin();
        h(FRAC_PI_2 * s.sin(), gap) * FRAC_PI_2 * s.cos()
    })
}

/// Complex-valued [`integrate_angle`].
pub fn integrate_angle_complex(h: impl Fn(f64) -> Complex64) -> Result<Quadrature<Complex64>> {
    adaptive(h)
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(WalkError::OutOfRange {
            what: "r",
            value: r,
            range: "(0, 1)",
        })
    }
}

/// `∫_{−r}^{r} g(x) / √(r² − x²) dx` for `0 < r < 1`.
///
/// ```
/// use qwalk::asymptotics::integrate_singular;
///
/// let q = integrate_singular(|_| 1.0, 0.5)?;
/// assert!((q.value - std::f64::consts::PI).abs() < 1e-12);
/// # Ok::<(), qwalk::WalkError>(())
/// ```
pub fn integrate_singular(g: impl Fn(f64) -> f64, r: f64) -> Result<Quadrature<f64>> {
    check_radius(r)?;
    adaptive(|t| g(r * t.sin()))
}

/// Complex-valued [`integrate_singular`].
pub fn integrate_singular_complex(
    g: impl Fn(f64) -> Complex64,
    r: f64,
) -> Result<Quadrature<Complex64>> {
    check_radius(r)?;
    adaptive(|t| g(r * t.sin()))
}
