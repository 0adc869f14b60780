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

//! Closed forms of the amplitudes at interior sites.
//!
//! With `l` left and `m` right moves (`l, m ≥ 1`), path counting collapses
//! `Ξ_n(l, m)φ` to a single alternating sum over `γ = 1..=min(l, m)` of
//! `(−|b|²/|a|²)^γ·C(l−1, γ−1)·C(m−1, γ−1)` times terms linear in `A` and `B`.
//! The alternating terms cancel badly as `n` grows, so these forms are only
//! offered up to [`CLOSED_FORM_MAX_STEPS`] and are meant for cross-checks.

use num_complex::Complex64;

use crate::coin::{derive_scalars, Coin, QubitState};
use crate::special::jacobi_p;
use crate::{Result, WalkError};

pub const CLOSED_FORM_MAX_STEPS: usize = 40;

/// Kahan-compensated complex accumulator.
#[derive(Default)]
struct CompensatedSum {
    sum: Complex64,
    carry: Complex64,
}

impl CompensatedSum {
    fn add(&mut self, term: Complex64) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Moves `(l, m)` for site `x` at time `n`, checking parity and range.
fn moves(n: usize, x: i64) -> Result<(usize, usize)> {
    let n_i = n as i64;
    if x.abs() > n_i || (n_i + x) % 2 != 0 {
        return Err(WalkError::OutOfDomain(format!(
            "site {x} is not reachable at time {n}"
        )));
    }
    Ok((((n_i - x) / 2) as usize, ((n_i + x) / 2) as usize))
}

/// `(Ψ_n^L(x), Ψ_n^R(x))` from the single-sum closed form.
///
/// Only interior sites are covered; the boundary sites `x = ±n` carry
/// `P^n φ` and `Q^n φ` and are rejected here.
pub fn amplitude_closed_form(
    coin: &Coin,
    state: &QubitState,
    n: usize,
    x: i64,
) -> Result<(Complex64, Complex64)> {
    coin.ensure_nondegenerate()?;
    if n > CLOSED_FORM_MAX_STEPS {
        return Err(WalkError::ResourceLimit {
            what: "closed-form steps",
            requested: n,
            cap: CLOSED_FORM_MAX_STEPS,
        });
    }
    let (l, m) = moves(n, x)?;
    if l == 0 || m == 0 {
        return Err(WalkError::OutOfDomain(format!(
            "boundary site {x} at time {n} has a single path"
        )));
    }

    let Coin { a, b, delta, .. } = *coin;
    let scalars = derive_scalars(coin, state);
    let (cap_a, cap_b) = (scalars.cap_a, scalars.cap_b);
    let ratio = -b.norm_sqr() / a.norm_sqr();

    let left_b = cap_b / (delta * b.conj());
    let right_a = cap_a / b;
    let mut left = CompensatedSum::default();
    let mut right = CompensatedSum::default();
    // weight_γ = ratio^γ · C(l−1, γ−1) · C(m−1, γ−1), updated by ratios
    let mut weight = ratio;
    for gamma in 1..=l.min(m) {
        let g = gamma as f64;
        let lterm = cap_a * ((l - gamma) as f64 / g) / a - left_b;
        let rterm = cap_b * ((m - gamma) as f64 / g) / (delta * a.conj()) + right_a;
        left.add(lterm * weight);
        right.add(rterm * weight);
        weight *= ratio * ((l - gamma) as f64 / g) * ((m - gamma) as f64 / g);
    }

    let prefactor = a.powu(l as u32) * a.conj().powu(m as u32) * delta.powu(m as u32);
    Ok((prefactor * left.sum, prefactor * right.sum))
}

/// `|Ψ_n^L(x)|²` written through the Jacobi polynomials
/// `P^i = P^{(i, n−2l)}_{l−1}(2|a|² − 1)`, `i = 0, 1`, for `1 ≤ l ≤ ⌊n/2⌋`.
pub fn prob_left_jacobi(coin: &Coin, state: &QubitState, n: usize, x: i64) -> Result<f64> {
    coin.ensure_nondegenerate()?;
    let (l, _) = moves(n, x)?;
    if l < 1 || l > n / 2 {
        return Err(WalkError::OutOfDomain(format!(
            "l = {l} outside [1, {}] at time {n}",
            n / 2
        )));
    }
    let a2 = coin.a.norm_sqr();
    let b2 = coin.b.norm_sqr();
    let scalars = derive_scalars(coin, state);
    let re_theta = scalars.theta()?.re;
    let a_term = scalars.cap_a.norm_sqr() / a2;
    let b_term = scalars.cap_b.norm_sqr() / b2;

    let arg = 2.0 * a2 - 1.0;
    let mu = (n - 2 * l) as f64;
    let p0 = jacobi_p(l - 1, 0.0, mu, arg)?;
    let p1 = jacobi_p(l - 1, 1.0, mu, arg)?;

    let bracket = a_term * p1 * p1 - 2.0 * (a_term + re_theta) * p1 * p0
        + (a_term + b_term + 2.0 * re_theta) * p0 * p0;
    Ok(a2.powi((n - 2 * l) as i32) * b2 * b2 * bracket)
}
