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

//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};
use std::time::{Duration, Instant};

use qwalk::asymptotics::{
    integrate_singular, normalization_check, rw_baseline, shannon_constants, closed_form_limits,
    limits_via_quadrature, DensityKernel,
};
use qwalk::coin::{Coin, QubitState};
use qwalk::entropy::{
    entanglement, max_entropy, position_entropy, reduced_coin_density, shannon,
    shannon_component,
};
use qwalk::evolution::{
    amplitude_closed_form, prob_left_jacobi, xi_bruteforce, Walk, XiTable,
};
use qwalk::special::{
    binomial_sum_plain, binomial_sum_plain_jacobi, binomial_sum_reciprocal,
    binomial_sum_reciprocal_jacobi,
};
use qwalk::Chirality;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn within_budget(v: Verdict, elapsed: Duration, budget: Duration) -> Verdict {
    let ok = elapsed <= budget;
    Verdict::new(
        v.pass && ok,
        format!("{}; {:.2?} (budget {:.0?})", v.detail, elapsed, budget),
    )
}

fn timed(budget_secs: u64, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let v = f();
    within_budget(v, start.elapsed(), Duration::from_secs(budget_secs))
}

fn oracle_triangle() -> Verdict {
    let mut rng = common::rng(1001);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let coin = common::random_coin(&mut rng);
        let state = common::random_state(&mut rng);
        let table = XiTable::new(&coin, 12, 12);
        let mut walk = Walk::new(coin, &state);
        for n in 0..=12usize {
            for l in 0..=n {
                let m = n - l;
                let rec = table.get(l, m);
                worst = worst.max(xi_bruteforce(&coin, l, m).unwrap().max_abs_diff(&rec));
                let (pl, pr) = rec.apply_state(&state);
                let (fl, fr) = walk.field().at(m as i64 - l as i64);
                worst = worst.max((pl - fl).norm()).max((pr - fr).norm());
            }
            walk.step();
        }
    }
    let coin = common::random_coin(&mut rng);
    let (p, q) = (coin.p(), coin.q());
    let expansion = q * p * p * p + p * q * p * p + p * p * q * p + p * p * p * q;
    let four_words = xi_bruteforce(&coin, 3, 1)
        .unwrap()
        .max_abs_diff(&expansion)
        .max(XiTable::new(&coin, 3, 1).get(3, 1).max_abs_diff(&expansion));
    Verdict::new(
        worst < 1e-12 && four_words < 1e-15,
        format!("max deviation {worst:.2e} (tol 1e-12); four-word expansion {four_words:.2e}"),
    )
}

fn closed_form_amplitudes() -> Verdict {
    let mut rng = common::rng(1002);
    let (mut amp, mut jac): (f64, f64) = (0.0, 0.0);
    for _ in 0..10 {
        let coin = common::random_coin(&mut rng);
        let state = common::random_state(&mut rng);
        let mut walk = Walk::new(coin, &state);
        for n in 1..=30usize {
            walk.step();
            for x in (-(n as i64) + 2..=n as i64 - 2).step_by(2) {
                let (l, r) = amplitude_closed_form(&coin, &state, n, x).unwrap();
                let (fl, fr) = walk.field().at(x);
                amp = amp.max((l - fl).norm()).max((r - fr).norm());
                if ((n as i64 - x) / 2) as usize <= n / 2 {
                    let p = prob_left_jacobi(&coin, &state, n, x).unwrap();
                    jac = jac.max((p - fl.norm_sqr()).abs());
                }
            }
        }
    }
    Verdict::new(
        amp < 1e-9 && jac < 1e-9,
        format!("single-sum {amp:.2e}, Jacobi {jac:.2e} (tol 1e-9)"),
    )
}

fn jacobi_identities() -> Verdict {
    let mut rng = common::rng(1003);
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let coin = common::random_coin(&mut rng);
        for n in 2..=40usize {
            for l in 1..=n / 2 {
                let pairs = [
                    (
                        binomial_sum_reciprocal(&coin, l, n).unwrap(),
                        binomial_sum_reciprocal_jacobi(&coin, l, n).unwrap(),
                    ),
                    (
                        binomial_sum_plain(&coin, l, n).unwrap(),
                        binomial_sum_plain_jacobi(&coin, l, n).unwrap(),
                    ),
                ];
                for (lhs, rhs) in pairs {
                    worst = worst.max((lhs - rhs).abs() / lhs.abs().max(1.0));
                }
            }
        }
    }
    Verdict::new(worst < 1e-9, format!("max relative deviation {worst:.2e} (tol 1e-9)"))
}

fn arcsine_integrals() -> Verdict {
    let mut worst: f64 = 0.0;
    for r in [0.3, FRAC_1_SQRT_2, 0.95] {
        let b = (1.0 - r * r).sqrt();
        let cases: [(Box<dyn Fn(f64) -> f64>, f64); 3] = [
            (Box::new(|_| 1.0), PI),
            (Box::new(|x| 1.0 / (1.0 + x)), PI / b),
            (Box::new(|x| (1.0 - x) / (1.0 + x)), (2.0 - b) * PI / b),
        ];
        for (g, want) in cases {
            worst = worst.max((integrate_singular(g, r).unwrap().value - want).abs());
        }
    }
    Verdict::new(worst < 1e-10, format!("max error {worst:.2e} (tol 1e-10)"))
}

fn entanglement_dual_route() -> Verdict {
    let mut rng = common::rng(1005);
    let (mut diff, mut sum): (f64, f64) = (0.0, 0.0);
    for _ in 0..50 {
        let coin = common::random_coin(&mut rng);
        let state = common::random_state(&mut rng);
        let closed = closed_form_limits(&coin, &state).unwrap();
        sum = sum.max((closed.norm_l_inf + closed.norm_r_inf - 1.0).abs());
        let quad = limits_via_quadrature(&DensityKernel::new(&coin, &state).unwrap()).unwrap();
        diff = diff.max(closed.max_density_diff(&quad.summary));
    }
    Verdict::new(
        diff < 1e-8 && sum < 1e-12,
        format!("closed vs quadrature {diff:.2e} (tol 1e-8); norm sum {sum:.2e} (tol 1e-12)"),
    )
}

fn hadamard_landmarks() -> Verdict {
    let det = (SQRT_2 - 1.0) / 2.0;
    let (rp, rm) = ((1.0 + (SQRT_2 - 1.0)) / 2.0, (1.0 - (SQRT_2 - 1.0)) / 2.0);
    let s_formula = -rp * rp.log2() - rm * rm.log2();
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, state) in [("|L>", QubitState::left()), ("symmetric", QubitState::symmetric())] {
        let limits = closed_form_limits(&Coin::hadamard(), &state).unwrap();
        let mut walk = Walk::with_capacity(Coin::hadamard(), &state, 2000);
        walk.advance(1900);
        let mut mean = 0.0;
        for _ in 1901..=2000 {
            walk.step();
            mean += entanglement(&reduced_coin_density(walk.field())).unwrap().s_c / 100.0;
        }
        let (e_det, e_s) = ((limits.det_inf - det).abs(), (limits.s_c_inf - s_formula).abs());
        let e_sim = (mean - limits.s_c_inf).abs();
        pass &= e_det < 1e-10 && e_s < 1e-10 && e_sim < 5e-3 && (limits.s_c_inf - 0.87243).abs() < 1e-5;
        parts.push(format!(
            "{name}: s_c_inf {:.7} det err {e_det:.1e} s_c err {e_s:.1e} window mean {mean:.5} (|diff| {e_sim:.1e}, tol 5e-3)",
            limits.s_c_inf
        ));
    }
    Verdict::new(pass, parts.join("; "))
}

fn density_normalization() -> Verdict {
    let mut rng = common::rng(1007);
    let (mut total, mut rho): (f64, f64) = (0.0, 0.0);
    for _ in 0..20 {
        let coin = common::random_coin(&mut rng);
        let state = common::random_state(&mut rng);
        let kernel = DensityKernel::new(&coin, &state).unwrap();
        let norm = match normalization_check(&kernel) {
            Ok(n) => n,
            Err(e) => return Verdict::new(false, format!("{e}")),
        };
        let closed = closed_form_limits(&coin, &state).unwrap();
        total = total.max((norm.total - 1.0).abs());
        rho = rho.max((norm.rho_l - closed.norm_l_inf).abs());
    }
    Verdict::new(
        total < 1e-10 && rho < 1e-8,
        format!("|int f - 1| {total:.2e} (tol 1e-10); |int f^L - norm_l_inf| {rho:.2e} (tol 1e-8)"),
    )
}

fn shannon_finite_n() -> Verdict {
    let coin = Coin::hadamard();
    let state = QubitState::symmetric();
    let c = shannon_constants(&DensityKernel::new(&coin, &state).unwrap()).unwrap();
    let mut walk = Walk::with_capacity(coin, &state, 8192);
    let mut trail = Vec::new();
    let mut last = (0.0, 0.0, 0.0);
    for target in [512usize, 1024, 2048, 4096, 8192] {
        walk.advance(target - walk.time());
        let f = walk.field();
        let s = shannon(&f.distribution());
        let sl = shannon_component(f, Chirality::Left).unwrap();
        let sr = shannon_component(f, Chirality::Right).unwrap();
        trail.push(format!("{:.4}", s - (target as f64 / 2.0).log2()));
        last = (s, sl, sr);
    }
    let scale = (8192f64 / 2.0).log2();
    let mut pass = true;
    let mut parts = vec![format!("offsets n=512..8192: [{}]", trail.join(", "))];
    for (name, s, target) in [
        ("S", last.0, c.c_total),
        ("S^L", last.1, c.c_l),
        ("S^R", last.2, c.c_r),
    ] {
        let ratio = s / scale;
        let off = s - scale;
        let ok = (0.98..=1.02).contains(&ratio) && (off - target).abs() < 0.05;
        pass &= ok;
        parts.push(format!(
            "{name}: ratio {ratio:.5} (need [0.98, 1.02]) offset {off:.4} vs {target:.4} (|diff| {:.4}, tol 0.05)",
            (off - target).abs()
        ));
    }
    Verdict::new(pass, parts.join("; "))
}

fn random_walk_baseline() -> Verdict {
    let n = 10_000usize;
    let s = common::binomial_entropy(n);
    let offset = s - (n as f64).sqrt().log2();
    let err = (offset - rw_baseline()).abs();
    Verdict::new(
        err < 0.01,
        format!(
            "S_RW - log2(sqrt n) = {offset:.5} vs {:.5} (|diff| {err:.4}, tol 0.01)",
            rw_baseline()
        ),
    )
}

fn theta_sweep() -> Verdict {
    let state = QubitState::symmetric();
    let grid: Vec<f64> = (0..25)
        .map(|i| 0.05 + (FRAC_PI_2 - 0.1) * i as f64 / 24.0)
        .collect();
    let mut c_total = Vec::new();
    for &t in &grid {
        let coin = Coin::from_theta(t).unwrap();
        match shannon_constants(&DensityKernel::new(&coin, &state).unwrap()) {
            Ok(c) => c_total.push(c.c_total),
            Err(e) => return Verdict::new(false, format!("theta {t}: {e}")),
        }
    }
    let nearest = (0..25)
        .min_by(|&i, &j| {
            (grid[i] - FRAC_PI_4)
                .abs()
                .total_cmp(&(grid[j] - FRAC_PI_4).abs())
        })
        .unwrap();
    let argmax = (0..25).max_by(|&i, &j| c_total[i].total_cmp(&c_total[j])).unwrap();
    let rising = (0..nearest).all(|i| c_total[i] < c_total[i + 1]);
    let falling = (nearest..24).all(|i| c_total[i] > c_total[i + 1]);
    Verdict::new(
        argmax == nearest && rising && falling,
        format!(
            "argmax theta {:.4} (c_total {:.5}); nearest to pi/4 theta {:.4} (c_total {:.5}); monotone up {rising}, down {falling}",
            grid[argmax], c_total[argmax], grid[nearest], c_total[nearest]
        ),
    )
}

fn invariant_suite() -> Verdict {
    let mut rng = common::rng(1011);
    let mut cases = vec![
        (Coin::hadamard(), QubitState::symmetric()),
        (Coin::hadamard(), QubitState::left()),
    ];
    for _ in 0..5 {
        cases.push((common::random_coin(&mut rng), common::random_state(&mut rng)));
    }
    let (mut norm, mut det_out, mut sc_sp, mut phase): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    let mut over_max = 0usize;
    for (k, (coin, state)) in cases.iter().enumerate() {
        let steps = if k < 2 { 10_000 } else { 2_000 };
        let mut walk = Walk::with_capacity(*coin, state, steps);
        let mut turned = Walk::with_capacity(*coin, &state.with_global_phase(0.37 + k as f64), steps);
        for n in 0..=steps {
            if n > 0 {
                walk.step();
                turned.step();
            }
            norm = norm.max((walk.field().norm_sqr() - 1.0).abs());
            let report = entanglement(&reduced_coin_density(walk.field())).unwrap();
            det_out = det_out.max((-report.det).max(report.det - 0.25));
            sc_sp = sc_sp.max((report.s_c - position_entropy(walk.field())).abs());
            let s = shannon(&walk.field().distribution());
            if s > max_entropy(n) + 1e-12 {
                over_max += 1;
            }
            if n % 50 == 0 {
                let other = entanglement(&reduced_coin_density(turned.field())).unwrap();
                let s2 = shannon(&turned.field().distribution());
                phase = phase.max((other.s_c - report.s_c).abs()).max((s2 - s).abs());
            }
        }
    }
    Verdict::new(
        norm < 1e-12 && det_out <= 0.0 && sc_sp < 1e-12 && over_max == 0 && phase < 1e-12,
        format!(
            "norm {norm:.1e}; det outside [0,1/4] by {det_out:.1e}; |S^c - S^p| {sc_sp:.1e}; steps with S above log2(n+1): {over_max}; phase {phase:.1e}"
        ),
    )
}

fn main() {
    let criteria: [(&str, u64, fn() -> Verdict); 11] = [
        ("oracle triangle", 10, oracle_triangle),
        ("closed-form amplitudes", 5, closed_form_amplitudes),
        ("Jacobi identities", 5, jacobi_identities),
        ("arcsine integrals", 1, arcsine_integrals),
        ("entanglement limits by two routes", 10, entanglement_dual_route),
        ("Hadamard landmarks", 10, hadamard_landmarks),
        ("density normalization", 5, density_normalization),
        ("Shannon entropy at n = 8192", 180, shannon_finite_n),
        ("random-walk baseline", 1, random_walk_baseline),
        ("theta sweep maximum", 60, theta_sweep),
        ("invariant suite", 120, invariant_suite),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let v = timed(budget, check);
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{:>2}] {name}: {}", i + 1, v.detail);
        if !v.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", 11 - failed, 11);
    if failed > 0 {
        std::process::exit(1);
    }
}

