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

//! Shannon entropy growth against log2(n/2) and the differential-entropy
//! constants of the limit density.

use qwalk::asymptotics::{rw_baseline, shannon_constants, DensityKernel};
use qwalk::coin::{Coin, QubitState};
use qwalk::entropy::{max_entropy, shannon, shannon_component};
use qwalk::evolution::Walk;
use qwalk::Chirality;

fn main() -> qwalk::Result<()> {
    let coin = Coin::hadamard();
    let state = QubitState::symmetric();
    let c = shannon_constants(&DensityKernel::new(&coin, &state)?)?;
    println!(
        "c_total {:.10}  c_l {:.10}  c_r {:.10} ({} nodes)",
        c.c_total, c.c_l, c.c_r, c.nodes
    );
    println!("random-walk constant (1/2) log2(2 pi e) = {:.10}\n", rw_baseline());

    println!("     n   S_n        S/log2(n/2)  S - log2(n/2)  S^L - log2(n/2)  S/S_max");
    let mut walk = Walk::with_capacity(coin, &state, 8192);
    for n in [64usize, 128, 256, 512, 1024, 2048, 4096, 8192] {
        walk.advance(n - walk.time());
        let f = walk.field();
        let s = shannon(&f.distribution());
        let sl = shannon_component(f, Chirality::Left)?;
        let scale = (n as f64 / 2.0).log2();
        println!(
            "{n:>6}   {s:.6}   {:.6}     {:>9.5}      {:>9.5}        {:.6}",
            s / scale,
            s - scale,
            sl - scale,
            s / max_entropy(n)
        );
    }
    Ok(())
}
