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

//! Transfer matrices by word enumeration, by recurrence, and the single-sum
//! closed form of the amplitudes, checked against direct evolution.

use qwalk::coin::{Coin, QubitState};
use qwalk::evolution::{amplitude_closed_form, evolve, xi_bruteforce, XiTable};
use qwalk::Complex64;

fn main() -> qwalk::Result<()> {
    let coin = Coin::new(
        Complex64::from_polar(0.6, 0.4),
        Complex64::from_polar(0.8, -1.1),
        Complex64::from_polar(1.0, 0.7),
    )?;
    let state = QubitState::normalized(Complex64::new(0.6, 0.2), Complex64::new(-0.3, 0.7))?;

    let (p, q) = (coin.p(), coin.q());
    let words = q * p * p * p + p * q * p * p + p * p * q * p + p * p * p * q;
    let brute = xi_bruteforce(&coin, 3, 1)?;
    println!("three left moves, one right: |brute - four words| = {:.1e}", brute.max_abs_diff(&words));

    let n = 14;
    let table = XiTable::new(&coin, n, n);
    let field = evolve(&coin, &state, n)?;
    println!("\n  x   |Xi phi - evolve|   |closed form - evolve|");
    for l in 0..=n {
        let m = n - l;
        let x = m as i64 - l as i64;
        let (pl, pr) = table.get(l, m).apply_state(&state);
        let (fl, fr) = field.at(x);
        let via_table = (pl - fl).norm().max((pr - fr).norm());
        let via_sum = match amplitude_closed_form(&coin, &state, n, x) {
            Ok((cl, cr)) => format!("{:.1e}", (cl - fl).norm().max((cr - fr).norm())),
            Err(_) => "boundary".to_owned(),
        };
        println!("{x:>3}   {via_table:.1e}             {via_sum}");
    }
    Ok(())
}
