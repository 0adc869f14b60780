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

//! Long-time limits for coins with `abcd ≠ 0`.
//!
//! The coin density converges: `‖Ψ_n^L‖²`, `‖Ψ_n^R‖²` and `⟨Ψ_n^R, Ψ_n^L⟩`
//! have closed-form limits in `|b|`, `|α|²`, `|β|²` and `Γ`
//! ([`closed_form_limits`]). The same limits are integrals of weight functions
//! `h^L`, `h^R`, `h^{RL}` against `|b|³/(2π√(|a|² − x²))` on `(−|a|, |a|)`
//! ([`limits_via_quadrature`]); the integrands `f^L`, `f^R` are the
//! chirality-resolved weak-limit densities of `X_n / n`. Their differential
//! entropies are the constants in the second-order behaviour of the Shannon
//! entropy ([`shannon_constants`]).

mod quadrature;

pub use quadrature::{
    integrate_angle, integrate_angle_clustered, integrate_angle_complex, integrate_singular, integrate_singular_complex,
    Quadrature, ACCEPT_TOL, CONVERGENCE_TOL, MAX_NODES, MIN_NODES,
};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::coin::{derive_scalars, Coin, DerivedScalars, QubitState};
use crate::entropy::spectrum_from_det;
use crate::{Result, WalkError};

pub use crate::entropy::max_entropy;

/// Pointwise tolerance between `f^L + f^R` and the simplified total density.
pub const DENSITY_SUM_TOL: f64 = 1e-10;

/// Limiting coin density and its entanglement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitSummary {
    pub norm_l_inf: f64,
    pub norm_r_inf: f64,
    /// `lim ⟨Ψ_n^R, Ψ_n^L⟩`
    pub overlap_inf: Complex64,
    pub det_inf: f64,
    pub r_plus_inf: f64,
    pub r_minus_inf: f64,
    /// `lim S_n^c` in bits.
    pub s_c_inf: f64,
}

impl LimitSummary {
    pub fn from_density(norm_l: f64, norm_r: f64, overlap: Complex64) -> Result<Self> {
        let spectrum = spectrum_from_det(norm_l * norm_r - overlap.norm_sqr())?;
        Ok(Self {
            norm_l_inf: norm_l,
            norm_r_inf: norm_r,
            overlap_inf: overlap,
            det_inf: spectrum.det,
            r_plus_inf: spectrum.r_plus,
            r_minus_inf: spectrum.r_minus,
            s_c_inf: spectrum.s_c,
        })
    }

    /// Largest deviation between the three density entries of two summaries.
    pub fn max_density_diff(&self, other: &Self) -> f64 {
        (self.norm_l_inf - other.norm_l_inf)
            .abs()
            .max((self.norm_r_inf - other.norm_r_inf).abs())
            .max((self.overlap_inf - other.overlap_inf).norm())
    }
}

/// Closed-form limits of the coin density for a general coin.
pub fn closed_form_limits(coin: &Coin, state: &QubitState) -> Result<LimitSummary> {
    coin.ensure_nondegenerate()?;
    let DerivedScalars { gamma, .. } = derive_scalars(coin, state);
    let b = coin.b.norm();
    let (pa, pb) = (state.alpha.norm_sqr(), state.beta.norm_sqr());
    let norm_l = (1.0 - b / 2.0) * pa + b / 2.0 * pb + gamma / (2.0 * (1.0 + b));
    let norm_r = b / 2.0 * pa + (1.0 - b / 2.0) * pb - gamma / (2.0 * (1.0 + b));

    let aa = coin.a * state.alpha;
    let bb = coin.b * state.beta;
    let inner = b * (1.0 - b) * (pa - pb)
        + (gamma * b + aa * bb.conj() - aa.conj() * bb) / (1.0 + b);
    let overlap = b / (2.0 * coin.a * coin.b.conj()) * inner;
    LimitSummary::from_density(norm_l, norm_r, overlap)
}

/// Closed-form limits for the real coin `U(θ)`.
pub fn real_family_limits(theta: f64, state: &QubitState) -> Result<LimitSummary> {
    // validates θ ∈ (0, π/2)
    Coin::from_theta(theta)?;
    let (s, c) = theta.sin_cos();
    let (alpha, beta) = (state.alpha, state.beta);
    let (pa, pb) = (alpha.norm_sqr(), beta.norm_sqr());
    let cross = (alpha * beta.conj() + alpha.conj() * beta).re;
    let skew = alpha * beta.conj() - alpha.conj() * beta;
    let k = s * (1.0 - s) / (2.0 * c);
    let norm_l = (1.0 - s / 2.0) * pa + s / 2.0 * pb + k * cross;
    let norm_r = s / 2.0 * pa + (1.0 - s / 2.0) * pb - k * cross;
    let overlap = k * ((pa - pb) + (s * cross + skew) / c);
    LimitSummary::from_density(norm_l, norm_r, overlap)
}

/// Which weight function of the limit integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    Left,
    Right,
    /// The cross term `h^{RL}` whose integral is the limiting overlap.
    Cross,
}

/// Which limit density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityComponent {
    Left,
    Right,
    Total,
}

/// Coin, state and derived scalars of a non-degenerate walk, with the
/// coefficients of the weight functions precomputed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityKernel {
    pub coin: Coin,
    pub state: QubitState,
    pub derived: DerivedScalars,
    re_theta: f64,
    a_abs: f64,
    b_abs: f64,
}

impl DensityKernel {
    pub fn new(coin: &Coin, state: &QubitState) -> Result<Self> {
        coin.ensure_nondegenerate()?;
        let derived = derive_scalars(coin, state);
        Ok(Self {
            coin: *coin,
            state: *state,
            derived,
            re_theta: derived.theta()?.re,
            a_abs: coin.a.norm(),
            b_abs: coin.b.norm(),
        })
    }

    /// Support radius `|a|` of the limit densities.
    pub fn radius(&self) -> f64 {
        self.a_abs
    }

    fn check_inside(&self, x: f64) -> Result<()> {
        if x.abs() < self.a_abs {
            Ok(())
        } else {
            Err(WalkError::OutOfDomain(format!(
                "x = {x} outside (-|a|, |a|) = (-{0}, {0})",
                self.a_abs
            )))
        }
    }

    fn h_left(&self, x: f64) -> f64 {
        let (a2, b2) = (self.a_abs * self.a_abs, self.b_abs * self.b_abs);
        let big_a = self.derived.cap_a.norm_sqr();
        let big_b = self.derived.cap_b.norm_sqr();
        big_a / (a2 * b2) * (1.0 - x) / (1.0 + x) - 2.0 * (big_a / a2 + self.re_theta) / (1.0 + x)
            + (big_a / a2 + big_b / b2 + 2.0 * self.re_theta)
    }

    fn h_right(&self, x: f64) -> f64 {
        let (a2, b2) = (self.a_abs * self.a_abs, self.b_abs * self.b_abs);
        let big_a = self.derived.cap_a.norm_sqr();
        let big_b = self.derived.cap_b.norm_sqr();
        big_b / (a2 * b2) * (1.0 + x) / (1.0 - x) - 2.0 * (big_b / a2 - self.re_theta) / (1.0 - x)
            + (big_b / a2 + big_a / b2 - 2.0 * self.re_theta)
    }

    fn h_cross(&self, x: f64) -> Complex64 {
        let Coin { a, b, delta, .. } = self.coin;
        let (cap_a, cap_b) = (self.derived.cap_a, self.derived.cap_b);
        let b2 = self.b_abs * self.b_abs;
        let ab_conj = a * b.conj();
        let t = cap_a * cap_b.conj() / (delta.conj() * a * a);
        t / b2 - (t - cap_a.norm_sqr() / ab_conj) / (1.0 + x)
            - (t + cap_b.norm_sqr() / ab_conj) / (1.0 - x)
            + t
            - cap_a.conj() * cap_b / (delta * b.conj() * b.conj())
            + (cap_b.norm_sqr() - cap_a.norm_sqr()) / ab_conj
    }

    /// `|b|³ h^D(x) / 2π`, i.e. `f^D(x)·√(|a|² − x²)`.
    fn scaled_weight(&self, which: DensityComponent, x: f64) -> f64 {
        let k = self.b_abs.powi(3) / (2.0 * PI);
        match which {
            DensityComponent::Left => k * self.h_left(x),
            DensityComponent::Right => k * self.h_right(x),
            DensityComponent::Total => k * (self.h_left(x) + self.h_right(x)),
        }
    }

    /// `f(x)·√(|a|² − x²)` from the simplified total-density formula.
    fn scaled_total_simplified(&self, x: f64) -> f64 {
        let (pa, pb) = (self.state.alpha.norm_sqr(), self.state.beta.norm_sqr());
        let slope = pa - pb + self.derived.gamma / (self.a_abs * self.a_abs);
        self.b_abs / (PI * (1.0 - x * x)) * (1.0 - slope * x)
    }
}

/// `h^L(x)`, `h^R(x)` or `h^{RL}(x)` for `|x| < |a|`. The first two are real.
pub fn h_weight(kernel: &DensityKernel, which: Weight, x: f64) -> Result<Complex64> {
    kernel.check_inside(x)?;
    Ok(match which {
        Weight::Left => Complex64::new(kernel.h_left(x), 0.0),
        Weight::Right => Complex64::new(kernel.h_right(x), 0.0),
        Weight::Cross => kernel.h_cross(x),
    })
}

/// `f^L`, `f^R` or `f = f^L + f^R` at `|x| < |a|`.
///
/// The total is the component sum; the simplified closed form is evaluated
/// alongside and a disagreement beyond [`DENSITY_SUM_TOL`] is logged.
pub fn limit_density(kernel: &DensityKernel, which: DensityComponent, x: f64) -> Result<f64> {
    kernel.check_inside(x)?;
    let root = (kernel.a_abs * kernel.a_abs - x * x).sqrt();
    let value = kernel.scaled_weight(which, x) / root;
    if which == DensityComponent::Total {
        let simplified = kernel.scaled_total_simplified(x) / root;
        if (simplified - value).abs() > DENSITY_SUM_TOL * value.abs().max(1.0) {
            log::warn!("f^L + f^R = {value} but simplified f = {simplified} at x = {x}");
        }
    }
    if value < -DENSITY_SUM_TOL {
        log::warn!("limit density {which:?} is negative ({value}) at x = {x}");
    }
    Ok(value)
}

/// The simplified closed form of the total limit density.
pub fn limit_density_simplified(kernel: &DensityKernel, x: f64) -> Result<f64> {
    kernel.check_inside(x)?;
    let root = (kernel.a_abs * kernel.a_abs - x * x).sqrt();
    Ok(kernel.scaled_total_simplified(x) / root)
}

/// Limits obtained by integrating the weight functions, with the largest
/// rule size any of the three integrals needed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureLimits {
    pub summary: LimitSummary,
    pub nodes: usize,
}

/// The coin-density limits as arcsine-kernel integrals of `h^L`, `h^R`,
/// `h^{RL}`.
pub fn limits_via_quadrature(kernel: &DensityKernel) -> Result<QuadratureLimits> {
    let r = kernel.a_abs;
    let k = kernel.b_abs.powi(3) / (2.0 * PI);
    // the prefactor goes inside so that the stopping rule sees the limits
    // themselves rather than integrals of size |b|^-3
    let left = integrate_singular(|x| k * kernel.h_left(x), r)?;
    let right = integrate_singular(|x| k * kernel.h_right(x), r)?;
    let cross = integrate_singular_complex(|x| k * kernel.h_cross(x), r)?;
    let summary = LimitSummary::from_density(left.value, right.value, cross.value)?;
    Ok(QuadratureLimits {
        summary,
        nodes: left.nodes.max(right.nodes).max(cross.nodes),
    })
}

/// Integrals of the limit densities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Normalization {
    /// `∫ f`
    pub total: f64,
    /// `∫ f^L`
    pub rho_l: f64,
    /// `∫ f^R`
    pub rho_r: f64,
    pub nodes: usize,
}

/// Tolerance on `∫ f = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-10;
/// Tolerance between `∫ f^L` and the closed-form `‖Ψ_∞^L‖²`.
pub const RHO_TOL: f64 = 1e-8;

/// Integrates `f^L` and `f^R` and checks them against the closed forms.
///
/// Fails with [`WalkError::NumericallyInvalid`] if `∫ f` misses 1 by more
/// than [`NORMALIZATION_TOL`] or `∫ f^L` misses `‖Ψ_∞^L‖²` by more than
/// [`RHO_TOL`].
pub fn normalization_check(kernel: &DensityKernel) -> Result<Normalization> {
    let r = kernel.a_abs;
    let left = integrate_singular(|x| kernel.scaled_weight(DensityComponent::Left, x), r)?;
    let right = integrate_singular(|x| kernel.scaled_weight(DensityComponent::Right, x), r)?;
    let norm = Normalization {
        total: left.value + right.value,
        rho_l: left.value,
        rho_r: right.value,
        nodes: left.nodes.max(right.nodes),
    };
    if (norm.total - 1.0).abs() > NORMALIZATION_TOL {
        return Err(WalkError::NumericallyInvalid(format!(
            "limit density integrates to {}",
            norm.total
        )));
    }
    let closed = closed_form_limits(&kernel.coin, &kernel.state)?;
    if (norm.rho_l - closed.norm_l_inf).abs() > RHO_TOL {
        return Err(WalkError::NumericallyInvalid(format!(
            "integral of f^L = {} but closed form gives {}",
            norm.rho_l, closed.norm_l_inf
        )));
    }
    Ok(norm)
}

/// Differential entropies (bits) of the normalized limit densities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShannonConstants {
    /// `−∫ (f^L/ρ^L) log₂(f^L/ρ^L)`
    pub c_l: f64,
    /// `−∫ (f^R/ρ^R) log₂(f^R/ρ^R)`
    pub c_r: f64,
    /// `−∫ f log₂ f`
    pub c_total: f64,
    pub nodes: usize,
}

/// Smallest chirality weight `ρ^D` for which `c_D` is defined.
pub const MIN_COMPONENT_WEIGHT: f64 = 1e-12;

/// `−∫ (f/ρ) log₂(f/ρ) dx` in the angle variable. With `x = r sin t`,
/// `f(x) dx = w(x) dt` and `f(x) = w(x)/(r cos t)`, where `w = f·√(r² − x²)`
/// is bounded; the remaining `log cos t` endpoint growth is integrable and
/// is smoothed by [`integrate_angle_clustered`].
fn differential_entropy(
    kernel: &DensityKernel,
    which: DensityComponent,
    rho: f64,
) -> Result<Quadrature<f64>> {
    let r = kernel.a_abs;
    integrate_angle_clustered(|t, gap| {
        let w = kernel.scaled_weight(which, r * t.sin()) / rho;
        if w <= 0.0 {
            if w < -DENSITY_SUM_TOL {
                log::warn!("negative limit density {which:?} at t = {t}");
            }
            return 0.0;
        }
        // gap > 0 at every interior node
        -w * (w / (r * gap.sin())).log2()
    })
}

/// The three differential-entropy constants of the Shannon-entropy limits.
pub fn shannon_constants(kernel: &DensityKernel) -> Result<ShannonConstants> {
    let limits = closed_form_limits(&kernel.coin, &kernel.state)?;
    for (rho, which) in [
        (limits.norm_l_inf, crate::Chirality::Left),
        (limits.norm_r_inf, crate::Chirality::Right),
    ] {
        if rho <= MIN_COMPONENT_WEIGHT {
            return Err(WalkError::ZeroComponent(which));
        }
    }
    let left = differential_entropy(kernel, DensityComponent::Left, limits.norm_l_inf)?;
    let right = differential_entropy(kernel, DensityComponent::Right, limits.norm_r_inf)?;
    let total = differential_entropy(kernel, DensityComponent::Total, 1.0)?;
    Ok(ShannonConstants {
        c_l: left.value,
        c_r: right.value,
        c_total: total.value,
        nodes: left.nodes.max(right.nodes).max(total.nodes),
    })
}

/// `½ log₂(2πe)`, the differential entropy of a standard normal in bits.
pub fn rw_baseline() -> f64 {
    0.5 * (2.0 * PI * std::f64::consts::E).log2()
}
