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

//! Jacobi polynomials and the binomial sums they close.

use crate::coin::Coin;
use crate::{Result, WalkError};

/// Parameters of a Jacobi polynomial `P^{(ν, μ)}_degree(x)`, orthogonal on
/// `[−1, 1]` against `(1 − x)^ν (1 + x)^μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub degree: usize,
    pub nu: f64,
    pub mu: f64,
}

impl JacobiParams {
    pub fn new(degree: usize, nu: f64, mu: f64) -> Result<Self> {
        for (what, v) in [("nu", nu), ("mu", mu)] {
            if !(v > -1.0) {
                return Err(WalkError::OutOfRange {
                    what,
                    value: v,
                    range: "(-1, inf)",
                });
            }
        }
        Ok(Self { degree, nu, mu })
    }

    /// Evaluates by the three-term recurrence in the degree.
    pub fn eval(&self, x: f64) -> f64 {
        let (al, be) = (self.nu, self.mu);
        let mut prev = 1.0;
        if self.degree == 0 {
            return prev;
        }
        let mut cur = (al + 1.0) + (al + be + 2.0) * (x - 1.0) / 2.0;
        for k in 2..=self.degree {
            let k = k as f64;
            let s = 2.0 * k + al + be;
            let a1 = 2.0 * k * (k + al + be) * (s - 2.0);
            let a2 = (s - 1.0) * (al * al - be * be);
            let a3 = (s - 2.0) * (s - 1.0) * s;
            let a4 = 2.0 * (k + al - 1.0) * (k + be - 1.0) * s;
            let next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// `P^{(ν, μ)}_degree(x)`.
pub fn jacobi_p(degree: usize, nu: f64, mu: f64, x: f64) -> Result<f64> {
    Ok(JacobiParams::new(degree, nu, mu)?.eval(x))
}

fn check_moves(coin: &Coin, l: usize, n: usize) -> Result<()> {
    if l < 1 || l > n / 2 {
        return Err(WalkError::OutOfDomain(format!(
            "l = {l} outside [1, {}] for n = {n}",
            n / 2
        )));
    }
    if coin.a.norm_sqr() == 0.0 || coin.b.norm_sqr() == 0.0 {
        return Err(WalkError::DegenerateCoin {
            factor: if coin.a.norm_sqr() == 0.0 { "a" } else { "b" }.into(),
            abcd: coin.abcd(),
        });
    }
    Ok(())
}

/// `Σ_{γ=1}^{l} r^{γ−1} w(γ) C(l−1, γ−1) C(n−l−1, γ−1)` with
/// `r = −|b|²/|a|²`.
fn binomial_sum(coin: &Coin, l: usize, n: usize, reciprocal: bool) -> f64 {
    let ratio = -coin.b.norm_sqr() / coin.a.norm_sqr();
    let (p, q) = (l - 1, n - l - 1);
    let mut term = 1.0;
    let mut sum = 0.0;
    for gamma in 1..=l {
        let g = gamma as f64;
        sum += if reciprocal { term / g } else { term };
        // C(p, γ)C(q, γ) / (C(p, γ−1)C(q, γ−1)) = (p−γ+1)(q−γ+1)/γ²
        term *= ratio * (p + 1 - gamma) as f64 * (q as f64 + 1.0 - g) / (g * g);
    }
    sum
}

/// `Σ_γ (−|b|²/|a|²)^{γ−1} (1/γ) C(l−1, γ−1) C(n−l−1, γ−1)`, which equals
/// `|a|^{−2(l−1)} P^{(1, n−2l)}_{l−1}(2|a|² − 1) / l`.
pub fn binomial_sum_reciprocal(coin: &Coin, l: usize, n: usize) -> Result<f64> {
    check_moves(coin, l, n)?;
    Ok(binomial_sum(coin, l, n, true))
}

/// `Σ_γ (−|b|²/|a|²)^{γ−1} C(l−1, γ−1) C(n−l−1, γ−1)`, which equals
/// `|a|^{−2(l−1)} P^{(0, n−2l)}_{l−1}(2|a|² − 1)`.
pub fn binomial_sum_plain(coin: &Coin, l: usize, n: usize) -> Result<f64> {
    check_moves(coin, l, n)?;
    Ok(binomial_sum(coin, l, n, false))
}

/// Jacobi side of [`binomial_sum_reciprocal`].
pub fn binomial_sum_reciprocal_jacobi(coin: &Coin, l: usize, n: usize) -> Result<f64> {
    check_moves(coin, l, n)?;
    let a2 = coin.a.norm_sqr();
    let p = jacobi_p(l - 1, 1.0, (n - 2 * l) as f64, 2.0 * a2 - 1.0)?;
    Ok(a2.powi(-(l as i32 - 1)) * p / l as f64)
}

/// Jacobi side of [`binomial_sum_plain`].
pub fn binomial_sum_plain_jacobi(coin: &Coin, l: usize, n: usize) -> Result<f64> {
    check_moves(coin, l, n)?;
    let a2 = coin.a.norm_sqr();
    let p = jacobi_p(l - 1, 0.0, (n - 2 * l) as f64, 2.0 * a2 - 1.0)?;
    Ok(a2.powi(-(l as i32 - 1)) * p)
}
