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

//! Entanglement and Shannon entropies of a walk state, in bits.
//!
//! For the pure state `|Ψ_n⟩` the coin reduced density is the 2×2 matrix
//! `[[‖Ψ^L‖², ⟨Ψ^R, Ψ^L⟩], [⟨Ψ^L, Ψ^R⟩, ‖Ψ^R‖²]]`. Its determinant lies in
//! `[0, 1/4]` and its eigenvalues give the entanglement entropy `S^c`.
//! The position reduced density has the same nonzero spectrum.

use num_complex::Complex64;

use crate::evolution::{AmplitudeField, ProbabilityDistribution};
use crate::{Chirality, Result, WalkError};

/// Probabilities at or below this count as exact zeros in entropy sums.
pub const ZERO_PROBABILITY: f64 = 1e-300;

/// Slack allowed on `det ∈ [0, 1/4]` before clamping becomes an error.
pub const DET_CLAMP_WINDOW: f64 = 1e-12;

/// `−p log₂ p` with `0 log₂ 0 = 0`, floored at zero against `p` rounding
/// just above one.
fn plogp(p: f64) -> f64 {
    if p <= ZERO_PROBABILITY {
        0.0
    } else {
        (-p * p.log2()).max(0.0)
    }
}

/// Entries of the coin reduced density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinDensity {
    /// `‖Ψ^L‖²`
    pub norm_l: f64,
    /// `‖Ψ^R‖²`
    pub norm_r: f64,
    /// `⟨Ψ^R, Ψ^L⟩ = Σ_x conj(Ψ^R(x)) Ψ^L(x)`
    pub overlap_rl: Complex64,
}

impl CoinDensity {
    pub fn det(&self) -> f64 {
        self.norm_l * self.norm_r - self.overlap_rl.norm_sqr()
    }
}

/// Spectrum and entropy of a coin density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    pub det: f64,
    pub r_plus: f64,
    pub r_minus: f64,
    /// Entanglement entropy `S^c` in bits.
    pub s_c: f64,
}

/// Traces out position.
pub fn reduced_coin_density(field: &AmplitudeField) -> CoinDensity {
    let mut norm_l = 0.0;
    let mut norm_r = 0.0;
    let mut overlap_rl = Complex64::new(0.0, 0.0);
    for (l, r) in field.left().iter().zip(field.right()) {
        norm_l += l.norm_sqr();
        norm_r += r.norm_sqr();
        overlap_rl += r.conj() * l;
    }
    CoinDensity {
        norm_l,
        norm_r,
        overlap_rl,
    }
}

/// Clamps a determinant that rounding pushed just outside `[0, 1/4]`.
pub(crate) fn clamp_det(det: f64) -> Result<f64> {
    if !(-DET_CLAMP_WINDOW..=0.25 + DET_CLAMP_WINDOW).contains(&det) {
        return Err(WalkError::NumericallyInvalid(format!(
            "determinant {det} outside [0, 1/4]"
        )));
    }
    Ok(det.clamp(0.0, 0.25))
}

/// Eigenvalues `(1 ± √(1 − 4det))/2` and the resulting entropy.
pub fn spectrum_from_det(det: f64) -> Result<EntanglementReport> {
    let det = clamp_det(det)?;
    let r_plus = (1.0 + (1.0 - 4.0 * det).sqrt()) / 2.0;
    // r₊r₋ = det avoids cancellation in 1 − √(1 − 4det)
    let r_minus = if r_plus > 0.0 { det / r_plus } else { 0.0 };
    Ok(EntanglementReport {
        det,
        r_plus,
        r_minus,
        s_c: plogp(r_plus) + plogp(r_minus),
    })
}

/// Entanglement entropy of a coin density.
pub fn entanglement(density: &CoinDensity) -> Result<EntanglementReport> {
    spectrum_from_det(density.det())
}

/// Entropy of the position reduced density.
///
/// `ρ^p = Ψ^L Ψ^L† + Ψ^R Ψ^R†` has rank at most two, and its nonzero
/// eigenvalues are those of the Gram matrix of `Ψ^L`, `Ψ^R`, so the
/// `(2n+1)×(2n+1)` matrix is never formed.
pub fn position_entropy(field: &AmplitudeField) -> f64 {
    let (mut g_ll, mut g_rr) = (0.0, 0.0);
    let mut g_lr = Complex64::new(0.0, 0.0);
    for (l, r) in field.left().iter().zip(field.right()) {
        g_ll += l.norm_sqr();
        g_rr += r.norm_sqr();
        g_lr += l.conj() * r;
    }
    let trace = g_ll + g_rr;
    let det = (g_ll * g_rr - g_lr.norm_sqr()).max(0.0);
    let disc = (trace * trace - 4.0 * det).max(0.0).sqrt();
    let hi = (trace + disc) / 2.0;
    let lo = if hi > 0.0 { det / hi } else { 0.0 };
    plogp(hi) + plogp(lo)
}

/// Shannon entropy `−Σ_x P(x) log₂ P(x)`.
pub fn shannon(dist: &ProbabilityDistribution) -> f64 {
    shannon_of(dist.probs())
}

/// Shannon entropy of raw probabilities.
pub fn shannon_of(probs: &[f64]) -> f64 {
    probs.iter().fold(0.0, |acc, &p| acc + plogp(p))
}

/// Entropy of `|Ψ^D(x)|² / ‖Ψ^D‖²`.
pub fn shannon_component(field: &AmplitudeField, which: Chirality) -> Result<f64> {
    let comp = match which {
        Chirality::Left => field.left(),
        Chirality::Right => field.right(),
    };
    let norm: f64 = comp.iter().map(|z| z.norm_sqr()).sum();
    if norm < ZERO_PROBABILITY {
        return Err(WalkError::ZeroComponent(which));
    }
    Ok(comp.iter().fold(0.0, |acc, z| acc + plogp(z.norm_sqr() / norm)))
}

/// Upper bound `log₂(n + 1)` on the Shannon entropy at time `n`, reached by
/// the uniform distribution on the `n + 1` reachable sites.
pub fn max_entropy(n: usize) -> f64 {
    ((n + 1) as f64).log2()
}
