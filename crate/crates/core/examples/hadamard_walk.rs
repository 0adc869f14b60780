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

//! Evolve the Hadamard walk and print its distribution and entropies.
//!
//! ```text
//! cargo run --example hadamard_walk -- 100
//! ```

use qwalk::coin::{Coin, QubitState};
use qwalk::entropy::{entanglement, max_entropy, reduced_coin_density, shannon};
use qwalk::evolution::evolve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let steps: usize = std::env::args().nth(1).map_or(Ok(100), |s| s.parse())?;
    let field = evolve(&Coin::hadamard(), &QubitState::symmetric(), steps)?;
    let dist = field.distribution();

    let peak = dist
        .iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty");
    let mean_sq: f64 = dist.iter().map(|(x, p)| (x * x) as f64 * p).sum();
    println!("n = {steps}, total probability {:.15}", dist.total());
    println!("peak P({}) = {:.6}", peak.0, peak.1);
    println!("spread sqrt(E[x^2])/n = {:.5}", mean_sq.sqrt() / steps.max(1) as f64);

    let report = entanglement(&reduced_coin_density(&field))?;
    println!("S^c = {:.6} bits (det {:.6})", report.s_c, report.det);
    println!(
        "S = {:.6} bits of at most {:.6}",
        shannon(&dist),
        max_entropy(steps)
    );

    println!("\n   x        P(x)");
    for (x, p) in dist.iter().filter(|&(x, _)| x % 10 == 0 && (x + steps as i64) % 2 == 0) {
        println!("{x:>4}  {p:.8}");
    }
    Ok(())
}
