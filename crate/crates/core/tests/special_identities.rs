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

mod common;

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use qwalk::special::{
    binomial_sum_plain, binomial_sum_plain_jacobi, binomial_sum_reciprocal,
    binomial_sum_reciprocal_jacobi, jacobi_p,
};

#[test]
fn binomial_sums_are_jacobi_polynomials() {
    let mut rng = common::rng(20);
    for _ in 0..10 {
        let coin = common::random_coin(&mut rng);
        for n in 2..=40usize {
            for l in 1..=n / 2 {
                let lhs = binomial_sum_reciprocal(&coin, l, n).unwrap();
                let rhs = binomial_sum_reciprocal_jacobi(&coin, l, n).unwrap();
                assert!((lhs - rhs).abs() < 1e-9 * lhs.abs().max(1.0), "n={n} l={l}");
                let lhs = binomial_sum_plain(&coin, l, n).unwrap();
                let rhs = binomial_sum_plain_jacobi(&coin, l, n).unwrap();
                assert!((lhs - rhs).abs() < 1e-9 * lhs.abs().max(1.0), "n={n} l={l}");
            }
        }
    }
}

#[test]
fn jacobi_orthogonality() {
    // the weight is polynomial for integer parameters, so 16 nodes are exact
    let rule = GaussLegendre::new(NonZeroUsize::new(16).unwrap());
    for nu in 0..=2 {
        for mu in 0..=2 {
            let (nu, mu) = (nu as f64, mu as f64);
            let integral = rule.integrate(-1.0, 1.0, |x| {
                jacobi_p(2, nu, mu, x).unwrap()
                    * jacobi_p(3, nu, mu, x).unwrap()
                    * (1.0 - x).powf(nu)
                    * (1.0 + x).powf(mu)
            });
            assert!(integral.abs() < 1e-8, "nu={nu} mu={mu}: {integral}");
        }
    }
}
