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

//! Long-time coin-position entanglement: closed form, quadrature of the
//! weight functions, and a windowed mean of the simulated entropy.

use qwalk::asymptotics::{closed_form_limits, limits_via_quadrature, DensityKernel};
use qwalk::coin::{Coin, QubitState};
use qwalk::entropy::{entanglement, reduced_coin_density};
use qwalk::evolution::Walk;
use qwalk::Complex64;

fn main() -> qwalk::Result<()> {
    let cases = [
        ("Hadamard, |L>", Coin::hadamard(), QubitState::left()),
        ("Hadamard, symmetric", Coin::hadamard(), QubitState::symmetric()),
        (
            "U(0.5), (0.8, 0.6i)",
            Coin::from_theta(0.5)?,
            QubitState::new(Complex64::new(0.8, 0.0), Complex64::new(0.0, 0.6))?,
        ),
    ];
    for (name, coin, state) in cases {
        let closed = closed_form_limits(&coin, &state)?;
        let quad = limits_via_quadrature(&DensityKernel::new(&coin, &state)?)?;

        let mut walk = Walk::with_capacity(coin, &state, 2000);
        walk.advance(1900);
        let mut mean = 0.0;
        for _ in 0..100 {
            walk.step();
            mean += entanglement(&reduced_coin_density(walk.field()))?.s_c / 100.0;
        }

        println!("{name}");
        println!("  norm_l_inf {:.10}  overlap_inf {:.10}", closed.norm_l_inf, closed.overlap_inf);
        println!("  det_inf    {:.10}  s_c_inf     {:.10}", closed.det_inf, closed.s_c_inf);
        println!(
            "  quadrature deviation {:.1e} ({} nodes); simulated mean over n in [1901, 2000] {:.6}",
            closed.max_density_diff(&quad.summary),
            quad.nodes,
            mean
        );
    }
    Ok(())
}
