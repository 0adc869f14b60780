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

//! Time evolution of the walk.
//!
//! The amplitude at site `x` and time `n + 1` is
//! `Ψ_{n+1}(x) = P·Ψ_n(x + 1) + Q·Ψ_n(x − 1)`. Fields are stored densely on
//! `x ∈ [−n, n]`; sites with `x + n` odd are never written and stay exactly
//! zero.
//!
//! Besides the step recurrence, [`paths`] computes the transfer matrices
//! `Ξ_n(l, m)` by enumerating words and by memoized recurrence, and
//! [`closed_form`] evaluates the single-sum and Jacobi-polynomial forms of
//! the amplitudes. The three routes are independent and cross-checked in
//! the test suite.

pub mod closed_form;
pub mod paths;

pub use closed_form::{amplitude_closed_form, prob_left_jacobi, CLOSED_FORM_MAX_STEPS};
pub use paths::{xi_bruteforce, xi_recurrence, Matrix2, XiTable, BRUTEFORCE_MAX_LENGTH};

use num_complex::Complex64;

use crate::coin::{Coin, QubitState};
use crate::{Result, WalkError};

/// Default upper bound on the number of steps [`evolve`] will run.
pub const DEFAULT_STEP_CAP: usize = 1_000_000;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The spinor field `Ψ_n(x) = (Ψ_n^L(x), Ψ_n^R(x))` on `x ∈ [−n, n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeField {
    n: usize,
    left: Vec<Complex64>,
    right: Vec<Complex64>,
}

impl AmplitudeField {
    /// The walker localized at the origin in `state`.
    pub fn initial(state: &QubitState) -> Self {
        Self {
            n: 0,
            left: vec![state.alpha],
            right: vec![state.beta],
        }
    }

    /// Builds a field from raw component arrays of length `2n + 1`.
    pub fn from_components(n: usize, left: Vec<Complex64>, right: Vec<Complex64>) -> Result<Self> {
        if left.len() != 2 * n + 1 || right.len() != 2 * n + 1 {
            return Err(WalkError::OutOfDomain(format!(
                "components must have length {} at time {n}",
                2 * n + 1
            )));
        }
        Ok(Self { n, left, right })
    }

    pub fn time(&self) -> usize {
        self.n
    }

    /// `Ψ^L(x)` for `x = −n, …, n`.
    pub fn left(&self) -> &[Complex64] {
        &self.left
    }

    /// `Ψ^R(x)` for `x = −n, …, n`.
    pub fn right(&self) -> &[Complex64] {
        &self.right
    }

    /// Sites `−n..=n` in storage order.
    pub fn positions(&self) -> impl Iterator<Item = i64> {
        let n = self.n as i64;
        -n..=n
    }

    /// `(Ψ^L(x), Ψ^R(x))`; zero outside `[−n, n]`.
    pub fn at(&self, x: i64) -> (Complex64, Complex64) {
        match self.index(x) {
            Some(i) => (self.left[i], self.right[i]),
            None => (ZERO, ZERO),
        }
    }

    fn index(&self, x: i64) -> Option<usize> {
        let i = x + self.n as i64;
        (0..self.left.len() as i64).contains(&i).then_some(i as usize)
    }

    /// `Σ_x |Ψ^L(x)|² + |Ψ^R(x)|²`
    pub fn norm_sqr(&self) -> f64 {
        self.left
            .iter()
            .chain(&self.right)
            .map(|z| z.norm_sqr())
            .sum()
    }

    /// `P(X_n = x) = |Ψ^L(x)|² + |Ψ^R(x)|²`
    pub fn distribution(&self) -> ProbabilityDistribution {
        ProbabilityDistribution {
            n: self.n,
            probs: self
                .left
                .iter()
                .zip(&self.right)
                .map(|(l, r)| l.norm_sqr() + r.norm_sqr())
                .collect(),
        }
    }
}

/// The position distribution at time `n` on `x ∈ [−n, n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    n: usize,
    probs: Vec<f64>,
}

impl ProbabilityDistribution {
    pub fn from_probs(n: usize, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != 2 * n + 1 {
            return Err(WalkError::OutOfDomain(format!(
                "distribution at time {n} needs {} entries",
                2 * n + 1
            )));
        }
        Ok(Self { n, probs })
    }

    pub fn time(&self) -> usize {
        self.n
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn at(&self, x: i64) -> f64 {
        let i = x + self.n as i64;
        if (0..self.probs.len() as i64).contains(&i) {
            self.probs[i as usize]
        } else {
            0.0
        }
    }

    /// `(x, P(X_n = x))` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let n = self.n as i64;
        (-n..=n).zip(self.probs.iter().copied())
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

/// Same as [`AmplitudeField::distribution`].
pub fn distribution(field: &AmplitudeField) -> ProbabilityDistribution {
    field.distribution()
}

/// `a·b` as an unevaluated sum `hi + lo`, exactly.
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let hi = a * b;
    (hi, a.mul_add(b, -hi))
}

/// `Σ xᵢyᵢ + extra` computed in twice the working precision and rounded
/// once, so that sub-ulp contributions survive in expectation.
fn dot2<const N: usize>(x: [f64; N], y: [f64; N], extra: f64) -> f64 {
    let (mut hi, mut lo) = (extra, 0.0f64);
    for i in 0..N {
        let (p, e) = two_prod(x[i], y[i]);
        let s = hi + p;
        let bp = s - hi;
        lo += (hi - (s - bp)) + (p - bp) + e;
        hi = s;
    }
    hi + lo
}

/// First-order polar correction `K = −½·U·(U†U − I)`.
///
/// A coin stored in double precision is unitary only to about one ulp, and
/// that defect has a fixed sign from step to step, so the norm drifts
/// linearly in time. `U + K` is unitary to second order in the defect; the
/// defect itself is evaluated with error-free products, and [`row_apply`]
/// keeps the correction from being rounded away.
fn unitarity_correction(coin: &Coin) -> [[Complex64; 2]; 2] {
    let Coin { a, b, c, d, .. } = *coin;
    let e00 = dot2([a.re, a.im, c.re, c.im], [a.re, a.im, c.re, c.im], -1.0);
    let e11 = dot2([b.re, b.im, d.re, d.im], [b.re, b.im, d.re, d.im], -1.0);
    // (U†U)₀₁ = conj(a)·b + conj(c)·d
    let e01 = Complex64::new(
        dot2([a.re, a.im, c.re, c.im], [b.re, b.im, d.re, d.im], 0.0),
        dot2([a.re, -a.im, c.re, -c.im], [b.im, b.re, d.im, d.re], 0.0),
    );
    let e = [[Complex64::from(e00), e01], [e01.conj(), Complex64::from(e11)]];
    let u = [[a, b], [c, d]];
    let mut k = [[ZERO; 2]; 2];
    for (i, row) in k.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = -0.5 * (u[i][0] * e[0][j] + u[i][1] * e[1][j]);
        }
    }
    k
}

/// Amplitude components below this are flushed to zero after each step, so
/// the far tails never enter subnormal arithmetic. The discarded probability
/// is below `1e-560` per site.
pub const UNDERFLOW_FLUSH: f64 = 1e-280;

#[inline(always)]
fn flush(x: f64) -> f64 {
    if x.abs() < UNDERFLOW_FLUSH {
        0.0
    } else {
        x
    }
}

/// `p·l + q·r + extra` as a chain of fused multiply-adds. Each link rounds
/// its exact value once, so the sub-ulp `extra` shifts the result in
/// expectation instead of being absorbed by an earlier rounding.
#[inline(always)]
fn row_apply(p: Complex64, q: Complex64, l: Complex64, r: Complex64, extra: Complex64) -> Complex64 {
    let re = p.re.mul_add(
        l.re,
        (-p.im).mul_add(l.im, q.re.mul_add(r.re, (-q.im).mul_add(r.im, extra.re))),
    );
    let im = p.re.mul_add(
        l.im,
        p.im.mul_add(l.re, q.re.mul_add(r.im, q.im.mul_add(r.re, extra.im))),
    );
    Complex64::new(flush(re), flush(im))
}

struct StepKernel<'a> {
    coin: &'a Coin,
    k: &'a [[Complex64; 2]; 2],
    src_left: &'a [Complex64],
    src_right: &'a [Complex64],
}

impl StepKernel<'_> {
    // Storage index j ↔ site x = j − (n + 1). Old index of x ± 1 is j and
    // j − 2; only even j carry amplitude.
    #[inline(always)]
    fn run(&self, left: &mut [Complex64], right: &mut [Complex64]) {
        let Coin { a, b, c, d, .. } = *self.coin;
        let k = self.k;
        let len = left.len();
        for j in (0..len).step_by(2) {
            if j < len - 2 {
                let (l, r) = (self.src_left[j], self.src_right[j]);
                left[j] = row_apply(a, b, l, r, k[0][0] * l + k[0][1] * r);
            }
            if j >= 2 {
                let (l, r) = (self.src_left[j - 2], self.src_right[j - 2]);
                right[j] = row_apply(c, d, l, r, k[1][0] * l + k[1][1] * r);
            }
        }
    }

    #[cfg(target_arch = "x86_64")]
    #[target_feature(enable = "fma")]
    unsafe fn run_fma(&self, left: &mut [Complex64], right: &mut [Complex64]) {
        self.run(left, right)
    }

    fn dispatch(&self, left: &mut [Complex64], right: &mut [Complex64]) {
        #[cfg(target_arch = "x86_64")]
        if std::arch::is_x86_feature_detected!("fma") {
            // SAFETY: the CPU supports the enabled feature.
            unsafe { self.run_fma(left, right) };
            return;
        }
        self.run(left, right)
    }
}

/// Writes `Ψ_{n+1}` into `dst`, reusing its allocation.
fn step_into(
    src: &AmplitudeField,
    coin: &Coin,
    k: &[[Complex64; 2]; 2],
    dst: &mut AmplitudeField,
) {
    let len = 2 * src.n + 3;
    dst.n = src.n + 1;
    dst.left.clear();
    dst.left.resize(len, ZERO);
    dst.right.clear();
    dst.right.resize(len, ZERO);
    StepKernel {
        coin,
        k,
        src_left: &src.left,
        src_right: &src.right,
    }
    .dispatch(&mut dst.left, &mut dst.right);
}

/// One application of the walk operator.
pub fn step(field: &AmplitudeField, coin: &Coin) -> AmplitudeField {
    let mut out = AmplitudeField {
        n: 0,
        left: Vec::with_capacity(2 * field.n + 3),
        right: Vec::with_capacity(2 * field.n + 3),
    };
    step_into(field, coin, &unitarity_correction(coin), &mut out);
    out
}

/// The field after `n` steps from the origin, with the default step cap.
pub fn evolve(coin: &Coin, state: &QubitState, n: usize) -> Result<AmplitudeField> {
    evolve_with_cap(coin, state, n, DEFAULT_STEP_CAP)
}

pub fn evolve_with_cap(
    coin: &Coin,
    state: &QubitState,
    n: usize,
    cap: usize,
) -> Result<AmplitudeField> {
    if n > cap {
        return Err(WalkError::ResourceLimit {
            what: "steps",
            requested: n,
            cap,
        });
    }
    let mut walk = Walk::with_capacity(*coin, state, n);
    walk.advance(n);
    Ok(walk.into_field())
}

/// A running walk with ping-pong buffers, for callers that need every
/// intermediate time step.
///
/// ```
/// use qwalk::{coin::{Coin, QubitState}, evolution::Walk};
///
/// let mut walk = Walk::new(Coin::hadamard(), &QubitState::left());
/// for _ in 0..10 {
///     walk.step();
///     assert!((walk.field().norm_sqr() - 1.0).abs() < 1e-12);
/// }
/// assert_eq!(walk.time(), 10);
/// ```
#[derive(Debug, Clone)]
pub struct Walk {
    coin: Coin,
    correction: [[Complex64; 2]; 2],
    current: AmplitudeField,
    scratch: AmplitudeField,
}

impl Walk {
    pub fn new(coin: Coin, state: &QubitState) -> Self {
        Self::with_capacity(coin, state, 0)
    }

    /// Preallocates buffers for `steps` steps so that stepping never
    /// reallocates.
    pub fn with_capacity(coin: Coin, state: &QubitState, steps: usize) -> Self {
        let cap = 2 * steps + 1;
        let mut current = AmplitudeField::initial(state);
        current.left.reserve(cap);
        current.right.reserve(cap);
        Self {
            coin,
            correction: unitarity_correction(&coin),
            current,
            scratch: AmplitudeField {
                n: 0,
                left: Vec::with_capacity(cap),
                right: Vec::with_capacity(cap),
            },
        }
    }

    pub fn coin(&self) -> &Coin {
        &self.coin
    }

    pub fn time(&self) -> usize {
        self.current.n
    }

    pub fn field(&self) -> &AmplitudeField {
        &self.current
    }

    pub fn into_field(self) -> AmplitudeField {
        self.current
    }

    pub fn step(&mut self) {
        step_into(&self.current, &self.coin, &self.correction, &mut self.scratch);
        std::mem::swap(&mut self.current, &mut self.scratch);
    }

    pub fn advance(&mut self, steps: usize) {
        for _ in 0..steps {
            self.step();
        }
    }
}
