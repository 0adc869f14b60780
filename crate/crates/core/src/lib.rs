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

//! Discrete-time quantum walks on the integer line.
//!
//! A walker with a two-valued chirality (left/right) starts at the origin in
//! the qubit state `α|L⟩ + β|R⟩` and is driven by a 2×2 unitary coin
//! `U = P + Q`, where `P` moves the walker one site left and `Q` one site
//! right. This crate provides:
//!
//! - [`coin`]: coins, initial states, and the derived scalars `A`, `B`, `Γ`, `Θ`.
//! - [`evolution`]: the step recurrence, the path-counting transfer matrices
//!   `Ξ_n(l, m)` (brute force and memoized), and single-sum closed forms.
//! - [`special`]: Jacobi polynomials and the binomial-sum identities that tie
//!   path counting to them.
//! - [`entropy`]: the reduced coin density, entanglement entropy, and Shannon
//!   entropies of the position distribution.
//! - [`asymptotics`]: long-time limits of the coin density, the weak-limit
//!   densities, and the differential-entropy constants governing the Shannon
//!   entropy, each evaluated in closed form and by quadrature.
//! - [`cli`]: the `qwalk` command-line front end.
//!
//! ```
//! use qwalk::{coin::{Coin, QubitState}, evolution::evolve, entropy};
//!
//! let hadamard = Coin::from_theta(std::f64::consts::FRAC_PI_4)?;
//! let field = evolve(&hadamard, &QubitState::left(), 2)?;
//! let dist = field.distribution();
//! assert!((entropy::shannon(&dist) - 1.5).abs() < 1e-12);
//! # Ok::<(), qwalk::WalkError>(())
//! ```

pub mod asymptotics;
pub mod cli;
pub mod coin;
pub mod entropy;
mod error;
pub mod evolution;
pub mod special;

pub use error::{Result, WalkError};
pub use num_complex::Complex64;

/// One of the two chirality components of the walker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    Left,
    Right,
}
