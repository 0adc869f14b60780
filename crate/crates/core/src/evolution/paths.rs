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

//! Path counting: `Ξ_n(l, m)` is the sum over all orderings of `l` left
//! moves (`P`) and `m` right moves (`Q`), with the first move rightmost in
//! each product. It satisfies `Ξ(l, m) = P·Ξ(l − 1, m) + Q·Ξ(l, m − 1)` and
//! `Ψ_n(x) = Ξ_n(l, m)·φ` for `n = l + m`, `x = m − l`.

use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::coin::{Coin, QubitState};
use crate::{Result, WalkError};

/// Longest word length [`xi_bruteforce`] will enumerate.
pub const BRUTEFORCE_MAX_LENGTH: usize = 22;

/// A row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2(pub [[Complex64; 2]; 2]);

impl Matrix2 {
    pub const ZERO: Self = Self([[Complex64::new(0.0, 0.0); 2]; 2]);
    pub const IDENTITY: Self = Self([
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    ]);

    pub fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        Self([[m00, m01], [m10, m11]])
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    /// `Ξ·φ` as `(Ψ^L, Ψ^R)`.
    pub fn apply_state(&self, state: &QubitState) -> (Complex64, Complex64) {
        let [l, r] = self.apply([state.alpha, state.beta]);
        (l, r)
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }
}

impl Mul for Matrix2 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Self::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    }
}

impl Add for Matrix2 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl Coin {
    /// The left-move block `P = [[a, b], [0, 0]]`.
    pub fn p(&self) -> Matrix2 {
        let z = Complex64::new(0.0, 0.0);
        Matrix2::new(self.a, self.b, z, z)
    }

    /// The right-move block `Q = [[0, 0], [c, d]]`.
    pub fn q(&self) -> Matrix2 {
        let z = Complex64::new(0.0, 0.0);
        Matrix2::new(z, z, self.c, self.d)
    }

    pub fn matrix(&self) -> Matrix2 {
        Matrix2::new(self.a, self.b, self.c, self.d)
    }
}

/// `Ξ(l, m)` by enumerating every word of `l` `P`s and `m` `Q`s.
///
/// Bit `k` of the word mask selects the move at time `k + 1` (set = `Q`);
/// the product is accumulated by left multiplication so the time-1 factor
/// ends up rightmost.
pub fn xi_bruteforce(coin: &Coin, l: usize, m: usize) -> Result<Matrix2> {
    let len = l + m;
    if len > BRUTEFORCE_MAX_LENGTH {
        return Err(WalkError::ResourceLimit {
            what: "word length l + m",
            requested: len,
            cap: BRUTEFORCE_MAX_LENGTH,
        });
    }
    let (p, q) = (coin.p(), coin.q());
    let mut sum = Matrix2::ZERO;
    for mask in 0u32..(1u32 << len) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let word = (0..len).fold(Matrix2::IDENTITY, |acc, k| {
            let factor = if mask >> k & 1 == 1 { q } else { p };
            factor * acc
        });
        sum = sum + word;
    }
    Ok(sum)
}

/// Memoized table of `Ξ(l, m)` for `0 ≤ l ≤ max_l`, `0 ≤ m ≤ max_m`.
#[derive(Debug, Clone)]
pub struct XiTable {
    max_m: usize,
    entries: Vec<Matrix2>,
}

impl XiTable {
    pub fn new(coin: &Coin, max_l: usize, max_m: usize) -> Self {
        let (p, q) = (coin.p(), coin.q());
        let width = max_m + 1;
        let mut entries = vec![Matrix2::ZERO; (max_l + 1) * width];
        for l in 0..=max_l {
            for m in 0..=max_m {
                entries[l * width + m] = if l == 0 && m == 0 {
                    Matrix2::IDENTITY
                } else {
                    let mut acc = Matrix2::ZERO;
                    if l > 0 {
                        acc = acc + p * entries[(l - 1) * width + m];
                    }
                    if m > 0 {
                        acc = acc + q * entries[l * width + m - 1];
                    }
                    acc
                };
            }
        }
        Self { max_m, entries }
    }

    /// `Ξ(l, m)`; panics outside the table.
    pub fn get(&self, l: usize, m: usize) -> Matrix2 {
        assert!(m <= self.max_m, "m = {m} outside table");
        self.entries[l * (self.max_m + 1) + m]
    }
}

/// `Ξ(l, m)` via the recurrence.
pub fn xi_recurrence(coin: &Coin, l: usize, m: usize) -> Matrix2 {
    XiTable::new(coin, l, m).get(l, m)
}
