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

//! Alternating binomial sums of the amplitude closed forms against their
//! Jacobi-polynomial evaluations.

use qwalk::coin::Coin;
use qwalk::special::{
    binomial_sum_plain, binomial_sum_plain_jacobi, binomial_sum_reciprocal,
    binomial_sum_reciprocal_jacobi, jacobi_p,
};

fn main() -> qwalk::Result<()> {
    println!("P_3^(1,2)(x) on a grid:");
    for i in 0..=4 {
        let x = -1.0 + 0.5 * i as f64;
        println!("  x = {x:>5.2}: {:>10.6}", jacobi_p(3, 1.0, 2.0, x)?);
    }

    let coin = Coin::from_theta(0.4)?;
    let n = 24;
    println!("\nU(0.4), n = {n}");
    println!(" l   reciprocal sum   Jacobi form      plain sum        Jacobi form");
    for l in 1..=n / 2 {
        println!(
            "{l:>2}   {:>14.9}   {:>14.9}   {:>14.9}   {:>14.9}",
            binomial_sum_reciprocal(&coin, l, n)?,
            binomial_sum_reciprocal_jacobi(&coin, l, n)?,
            binomial_sum_plain(&coin, l, n)?,
            binomial_sum_plain_jacobi(&coin, l, n)?,
        );
    }
    Ok(())
}
