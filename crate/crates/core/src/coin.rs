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

//! Coins, initial qubit states and the scalars derived from them.
//!
//! A coin is stored with all five of `a, b, c, d` and the determinant `Δ`
//! materialized, since the limit formulas mix them freely. Unitarity forces
//! `c = −Δ·conj(b)` and `d = Δ·conj(a)`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::{Result, WalkError};

/// Tolerance accepted on the unitarity constraints of user input.
pub const INPUT_TOLERANCE: f64 = 1e-10;

/// Coins with `|abcd|` at or below this are treated as degenerate.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;

/// A 2×2 unitary coin `[[a, b], [c, d]]` with determinant `delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coin {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub delta: Complex64,
}

impl Coin {
    /// Builds a coin from its first row and determinant, synthesizing the
    /// second row as `c = −Δ·conj(b)`, `d = Δ·conj(a)`.
    pub fn new(a: Complex64, b: Complex64, delta: Complex64) -> Result<Self> {
        let row = (a.norm_sqr() + b.norm_sqr() - 1.0).abs();
        if row > INPUT_TOLERANCE {
            return Err(WalkError::NonUnitary {
                what: "|a|^2 + |b|^2 - 1",
                residual: row,
            });
        }
        let det = (delta.norm() - 1.0).abs();
        if det > INPUT_TOLERANCE {
            return Err(WalkError::NonUnitary {
                what: "|delta| - 1",
                residual: det,
            });
        }
        Ok(Self {
            a,
            b,
            c: -delta * b.conj(),
            d: delta * a.conj(),
            delta,
        })
    }

    /// Validates a full user-supplied matrix; `Δ` is computed as `ad − bc`.
    pub fn from_matrix(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let coin = Self {
            a,
            b,
            c,
            d,
            delta: a * d - b * c,
        };
        let worst = coin
            .residuals()
            .into_iter()
            .fold(0.0_f64, |acc, r| acc.max(r));
        if worst > INPUT_TOLERANCE {
            return Err(WalkError::NonUnitary {
                what: "unitarity",
                residual: worst,
            });
        }
        Ok(coin)
    }

    /// The real one-parameter coin `[[cos θ, sin θ], [sin θ, −cos θ]]`,
    /// `0 < θ < π/2`. `θ = π/4` is the Hadamard coin.
    pub fn from_theta(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < FRAC_PI_2) {
            return Err(WalkError::OutOfRange {
                what: "theta",
                value: theta,
                range: "(0, pi/2)",
            });
        }
        let (s, c) = theta.sin_cos();
        Self::new(
            Complex64::new(c, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(-1.0, 0.0),
        )
    }

    pub fn hadamard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            a: Complex64::new(h, 0.0),
            b: Complex64::new(h, 0.0),
            c: Complex64::new(h, 0.0),
            d: Complex64::new(-h, 0.0),
            delta: Complex64::new(-1.0, 0.0),
        }
    }

    /// Residuals of the five unitarity relations, in order: row norms of
    /// `(a, b)` and `(c, d)`, row orthogonality, `c + Δ·conj(b)`, `d − Δ·conj(a)`,
    /// and `|Δ| − 1`.
    pub fn residuals(&self) -> [f64; 6] {
        let Self { a, b, c, d, delta } = *self;
        [
            (a.norm_sqr() + b.norm_sqr() - 1.0).abs(),
            (c.norm_sqr() + d.norm_sqr() - 1.0).abs(),
            (a * c.conj() + b * d.conj()).norm(),
            (c + delta * b.conj()).norm(),
            (d - delta * a.conj()).norm(),
            (delta.norm() - 1.0).abs(),
        ]
    }

    /// `|abcd|`, which equals `|a|²|b|²` for a unitary coin.
    pub fn abcd(&self) -> f64 {
        (self.a * self.b * self.c * self.d).norm()
    }

    /// Rejects coins for which the path-counting limit theorems do not apply.
    pub fn ensure_nondegenerate(&self) -> Result<()> {
        let abcd = self.abcd();
        if abcd > DEGENERACY_THRESHOLD {
            return Ok(());
        }
        let small = |z: Complex64| z.norm_sqr() <= DEGENERACY_THRESHOLD.sqrt();
        let names: Vec<&str> = [
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
            ("d", self.d),
        ]
        .into_iter()
        .filter(|&(_, z)| small(z))
        .map(|(n, _)| n)
        .collect();
        let factor = if names.is_empty() {
            "abcd".to_string()
        } else {
            names.join(" and ")
        };
        Err(WalkError::DegenerateCoin { factor, abcd })
    }
}

/// Initial chirality state `α|L⟩ + β|R⟩` at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl QubitState {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let residual = (alpha.norm_sqr() + beta.norm_sqr() - 1.0).abs();
        if residual > INPUT_TOLERANCE {
            return Err(WalkError::NonUnitary {
                what: "|alpha|^2 + |beta|^2 - 1",
                residual,
            });
        }
        Ok(Self { alpha, beta })
    }

    /// Rescales `(α, β)` onto the unit sphere. Fails for the zero vector.
    pub fn normalized(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(WalkError::NonUnitary {
                what: "|alpha|^2 + |beta|^2",
                residual: norm,
            });
        }
        Ok(Self {
            alpha: alpha / norm,
            beta: beta / norm,
        })
    }

    /// `|L⟩`
    pub fn left() -> Self {
        Self {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    /// `|R⟩`
    pub fn right() -> Self {
        Self {
            alpha: Complex64::new(0.0, 0.0),
            beta: Complex64::new(1.0, 0.0),
        }
    }

    /// `(|L⟩ + i|R⟩)/√2`, which gives a mirror-symmetric distribution for
    /// every real coin.
    pub fn symmetric() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            alpha: Complex64::new(h, 0.0),
            beta: Complex64::new(0.0, h),
        }
    }

    /// Multiplies both amplitudes by `e^{iχ}`.
    pub fn with_global_phase(&self, chi: f64) -> Self {
        let phase = Complex64::from_polar(1.0, chi);
        Self {
            alpha: self.alpha * phase,
            beta: self.beta * phase,
        }
    }
}

/// Scalars of a (coin, state) pair that recur throughout the limit formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScalars {
    /// `A = aα + bβ`, the `L` component of `Uφ`.
    pub cap_a: Complex64,
    /// `B = cα + dβ`, the `R` component of `Uφ`.
    pub cap_b: Complex64,
    /// `Γ = aα·conj(bβ) + conj(aα)·bβ`, real.
    pub gamma: f64,
    /// `Θ = A·conj(B) / (conj(Δ)·a·b)`; `None` when `ab = 0`.
    pub theta_scalar: Option<Complex64>,
}

impl DerivedScalars {
    pub fn new(coin: &Coin, state: &QubitState) -> Self {
        let aa = coin.a * state.alpha;
        let bb = coin.b * state.beta;
        let gamma = aa * bb.conj() + aa.conj() * bb;
        debug_assert!(gamma.im.abs() < 1e-12, "Γ has imaginary part {}", gamma.im);
        let cap_a = aa + bb;
        let cap_b = coin.c * state.alpha + coin.d * state.beta;
        let ab = coin.a * coin.b;
        let theta_scalar =
            (ab.norm() > 0.0).then(|| cap_a * cap_b.conj() / (coin.delta.conj() * ab));
        Self {
            cap_a,
            cap_b,
            gamma: gamma.re,
            theta_scalar,
        }
    }

    pub fn theta(&self) -> Result<Complex64> {
        self.theta_scalar.ok_or_else(|| WalkError::DegenerateCoin {
            factor: "a or b".into(),
            abcd: 0.0,
        })
    }
}

/// `A`, `B`, `Γ` and (when defined) `Θ` for a coin and an initial state.
pub fn derive_scalars(coin: &Coin, state: &QubitState) -> DerivedScalars {
    DerivedScalars::new(coin, state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(x: Complex64, y: Complex64, tol: f64) -> bool {
        (x - y).norm() < tol
    }

    #[test]
    fn hadamard_from_first_row() {
        let h = FRAC_1_SQRT_2;
        let coin = Coin::new(c(h, 0.0), c(h, 0.0), c(-1.0, 0.0)).unwrap();
        assert!(close(coin.c, c(h, 0.0), 1e-15));
        assert!(close(coin.d, c(-h, 0.0), 1e-15));
        assert!(coin.residuals().iter().all(|&r| r < 1e-12));
    }

    #[test]
    fn identity_coin_is_accepted_but_degenerate() {
        let coin = Coin::new(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(coin.c, c(0.0, 0.0));
        assert_eq!(coin.d, c(1.0, 0.0));
        match coin.ensure_nondegenerate() {
            Err(WalkError::DegenerateCoin { factor, .. }) => assert_eq!(factor, "b and c"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn real_coin_second_row() {
        let (s, co) = FRAC_PI_3.sin_cos();
        let coin = Coin::new(c(co, 0.0), c(s, 0.0), c(-1.0, 0.0)).unwrap();
        assert!(close(coin.c, c(s, 0.0), 1e-15));
        assert!(close(coin.d, c(-co, 0.0), 1e-15));
    }

    #[test]
    fn rejects_non_unitary_input() {
        assert!(matches!(
            Coin::new(c(0.8, 0.0), c(0.8, 0.0), c(1.0, 0.0)),
            Err(WalkError::NonUnitary { .. })
        ));
        assert!(matches!(
            Coin::new(c(0.6, 0.0), c(0.8, 0.0), c(1.1, 0.0)),
            Err(WalkError::NonUnitary { .. })
        ));
        assert!(Coin::from_matrix(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn from_matrix_recovers_determinant() {
        let h = Coin::hadamard();
        let coin = Coin::from_matrix(h.a, h.b, h.c, h.d).unwrap();
        assert!(close(coin.delta, c(-1.0, 0.0), 1e-15));
    }

    #[test]
    fn theta_family() {
        let h = Coin::from_theta(FRAC_PI_4).unwrap();
        let reference = Coin::hadamard();
        for (x, y) in [(h.a, reference.a), (h.b, reference.b), (h.c, reference.c), (h.d, reference.d)] {
            assert!(close(x, y, 1e-15));
        }

        let coin = Coin::from_theta(FRAC_PI_6).unwrap();
        assert!(close(coin.a, c(3f64.sqrt() / 2.0, 0.0), 1e-15));
        assert!(close(coin.b, c(0.5, 0.0), 1e-15));
        assert!(close(coin.c, c(0.5, 0.0), 1e-15));
        assert!(close(coin.d, c(-(3f64.sqrt()) / 2.0, 0.0), 1e-15));

        let edge = Coin::from_theta(FRAC_PI_2 - 1e-12).unwrap();
        assert!(edge.a.norm() < 1e-11);

        for bad in [0.0, FRAC_PI_2, -0.1, 2.0, f64::NAN] {
            assert!(matches!(
                Coin::from_theta(bad),
                Err(WalkError::OutOfRange { .. })
            ));
        }
    }

    #[test]
    fn hadamard_scalars_from_left() {
        let d = derive_scalars(&Coin::hadamard(), &QubitState::left());
        assert!(close(d.cap_a, c(FRAC_1_SQRT_2, 0.0), 1e-15));
        assert!(close(d.cap_b, c(FRAC_1_SQRT_2, 0.0), 1e-15));
        assert_eq!(d.gamma, 0.0);
        assert!(close(d.theta().unwrap(), c(-1.0, 0.0), 1e-15));
    }

    #[test]
    fn hadamard_symmetric_state_has_zero_gamma() {
        let d = derive_scalars(&Coin::hadamard(), &QubitState::symmetric());
        assert!(d.gamma.abs() < 1e-16);
    }

    #[test]
    fn theta_requires_nonzero_ab() {
        let coin = Coin::new(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let d = derive_scalars(&coin, &QubitState::symmetric());
        assert!(matches!(d.theta(), Err(WalkError::DegenerateCoin { .. })));
    }

    #[test]
    fn normalizing_states() {
        let s = QubitState::normalized(c(3.0, 0.0), c(0.0, 4.0)).unwrap();
        assert!(close(s.alpha, c(0.6, 0.0), 1e-15));
        assert!(close(s.beta, c(0.0, 0.8), 1e-15));
        assert!(QubitState::normalized(c(0.0, 0.0), c(0.0, 0.0)).is_err());
        assert!(QubitState::new(c(1.0, 0.0), c(0.1, 0.0)).is_err());
    }
}
