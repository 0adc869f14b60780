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

//! The weak-limit density of X_n / n and its chirality components, with a
//! histogram of the simulated walk for comparison.

use qwalk::asymptotics::{limit_density, normalization_check, DensityComponent, DensityKernel};
use qwalk::coin::{Coin, QubitState};
use qwalk::evolution::evolve;

fn main() -> qwalk::Result<()> {
    let coin = Coin::from_theta(0.6)?;
    let state = QubitState::left();
    let kernel = DensityKernel::new(&coin, &state)?;
    let norm = normalization_check(&kernel)?;
    println!(
        "U(0.6) from |L>: int f = {:.12}, int f^L = {:.10}, int f^R = {:.10} ({} nodes)",
        norm.total, norm.rho_l, norm.rho_r, norm.nodes
    );

    let n = 4000;
    let dist = evolve(&coin, &state, n)?.distribution();
    let r = kernel.radius();
    let bins = 16;
    let width = 2.0 * r / bins as f64;
    println!("\n  v        f(v)      f^L(v)    f^R(v)    simulated");
    for k in 0..bins {
        let lo = -r + k as f64 * width;
        let mid = lo + width / 2.0;
        let mass: f64 = dist
            .iter()
            .filter(|&(x, _)| {
                let v = x as f64 / n as f64;
                v >= lo && v < lo + width
            })
            .map(|(_, p)| p)
            .sum();
        println!(
            "{mid:>6.3}   {:>8.5}  {:>8.5}  {:>8.5}  {:>8.5}",
            limit_density(&kernel, DensityComponent::Total, mid)?,
            limit_density(&kernel, DensityComponent::Left, mid)?,
            limit_density(&kernel, DensityComponent::Right, mid)?,
            mass / width
        );
    }
    Ok(())
}
