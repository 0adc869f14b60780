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

//! Shared generators and independent oracles for the integration tests.

#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use qwalk::coin::{Coin, QubitState};
use qwalk::evolution::AmplitudeField;
use qwalk::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a = e^{iφ₁} cos θ`, `b = e^{iφ₂} sin θ`, `Δ = e^{iφ₃}` with
/// `θ ∈ (0.05, π/2 − 0.05)`, away from the degenerate boundary.
pub fn random_coin(rng: &mut impl Rng) -> Coin {
    let theta = rng.gen_range(0.05..FRAC_PI_2 - 0.05);
    let mut phase = || Complex64::from_polar(1.0, rng.gen_range(0.0..2.0 * PI));
    let (p1, p2, p3) = (phase(), phase(), phase());
    Coin::new(p1 * theta.cos(), p2 * theta.sin(), p3).expect("unitary by construction")
}

/// Uniform on the unit sphere of C².
pub fn random_state(rng: &mut impl Rng) -> QubitState {
    loop {
        let mut g = || rng.gen_range(-1.0..1.0);
        let alpha = Complex64::new(g(), g());
        let beta = Complex64::new(g(), g());
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if norm > 1e-3 && norm <= 1.0 {
            return QubitState::new(alpha / norm, beta / norm).expect("normalized");
        }
    }
}

/// Exact Shannon entropy (bits) of Binomial(n, 1/2).
pub fn binomial_entropy(n: usize) -> f64 {
    let mut ln_p = -(n as f64) * std::f64::consts::LN_2;
    let mut h = 0.0;
    for k in 0..=n {
        let p = ln_p.exp();
        if p > 0.0 {
            h -= p * ln_p;
        }
        if k < n {
            ln_p += ((n - k) as f64 / (k + 1) as f64).ln();
        }
    }
    h / std::f64::consts::LN_2
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(mut m: Vec<Vec<f64>>) -> Vec<f64> {
    let n = m.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let tau = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    (0..n).map(|i| m[i][i]).collect()
}

/// Entropy of the position reduced density from its full dense matrix.
///
/// The Hermitian `ρ^p` is embedded as the real symmetric
/// `[[Re ρ, −Im ρ], [Im ρ, Re ρ]]`, whose spectrum is that of `ρ^p` with
/// every eigenvalue doubled.
pub fn dense_position_entropy(field: &AmplitudeField) -> f64 {
    let (l, r) = (field.left(), field.right());
    let dim = l.len();
    assert!(dim <= 13, "dense oracle is for n ≤ 6");
    let rho = |x: usize, y: usize| l[x] * l[y].conj() + r[x] * r[y].conj();
    let mut m = vec![vec![0.0; 2 * dim]; 2 * dim];
    for x in 0..dim {
        for y in 0..dim {
            let z = rho(x, y);
            m[x][y] = z.re;
            m[x + dim][y + dim] = z.re;
            m[x][y + dim] = -z.im;
            m[x + dim][y] = z.im;
        }
    }
    symmetric_eigenvalues(m)
        .into_iter()
        .filter(|&v| v > 1e-15)
        .map(|v| -0.5 * v * v.log2())
        .sum()
}
