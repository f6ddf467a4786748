//! Long kick sequences: the Zeno limit, figure orderings, and an independent
//! transfer-matrix check for kick counts beyond the dense oracle's reach.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use zeno_core::analytics::{finite_difference_rate, rate_after_n_kicks, Side};
use zeno_core::engine::{p10_at, run_equally_spaced, sweep, SweepMode, SweepSpec};
use zeno_core::{Kick, SystemParams};

type M2 = [[Complex64; 2]; 2];

fn mul(x: &M2, y: &M2) -> M2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

/// Final P₁₀ after `n` resonant steps of (rotate by Gτ, then scale b by cos g),
/// computed as the n-th power of the one-step 2×2 map by repeated squaring.
fn p10_by_matrix_power(n: usize, g: f64, total_time: f64) -> f64 {
    let tau = total_time / n as f64;
    let (s, c) = tau.sin_cos();
    let rot = [
        [Complex64::new(c, 0.0), Complex64::new(0.0, -s)],
        [Complex64::new(0.0, -s), Complex64::new(c, 0.0)],
    ];
    let kick = [
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(g.cos(), 0.0)],
    ];
    let mut base = mul(&kick, &rot);
    let mut acc = [
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    ];
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul(&base, &acc);
        }
        base = mul(&base, &base);
        k >>= 1;
    }
    acc[0][0].norm_sqr()
}

fn unit() -> SystemParams {
    SystemParams::resonant(1.0).unwrap()
}

#[test]
fn long_sequences_match_matrix_power() {
    for &g in &[FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4, 0.3, 2.9] {
        for &n in &[1usize, 7, 64, 1023, 4096] {
            let engine = run_equally_spaced(n, g, SweepMode::FixedTotalTime(FRAC_PI_2), &unit())
                .unwrap()
                .p10;
            let power = p10_by_matrix_power(n, g, FRAC_PI_2);
            assert!(
                (engine - power).abs() < 1e-10,
                "g={g} n={n}: {engine} vs {power}"
            );
        }
    }
}

#[test]
fn survival_approaches_one_at_quarter_period() {
    let mode = SweepMode::FixedTotalTime(FRAC_PI_4);
    for &g in &[FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4, 0.2] {
        let p = |n| run_equally_spaced(n, g, mode, &unit()).unwrap().p10;
        assert!(p(1024) > p(32));
        if g != 0.2 {
            assert!(p(1024) > 0.99, "g={g}: {}", p(1024));
        }
    }
}

#[test]
fn loss_shrinks_along_doubling_ladder() {
    let mode = SweepMode::FixedTotalTime(FRAC_PI_2);
    for &g in &[FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4, 1.0] {
        let losses: Vec<f64> = (3..=12)
            .map(|k| 1.0 - run_equally_spaced(1 << k, g, mode, &unit()).unwrap().p10)
            .collect();
        assert!(losses.windows(2).all(|w| w[1] < w[0]), "g={g}: {losses:?}");
    }
}

#[test]
fn unit_modulus_kicks_do_not_freeze() {
    // |cos g| = 1: g = 0 never inhibits, g = π only echoes
    let mode = SweepMode::FixedTotalTime(FRAC_PI_2);
    assert!(run_equally_spaced(1024, 0.0, mode, &unit()).unwrap().p10 < 1e-20);
    let odd = run_equally_spaced(1023, PI, mode, &unit()).unwrap().p10;
    assert!((odd - (FRAC_PI_2 / 1023.0).cos().powi(2)).abs() < 1e-12);
}

#[test]
fn stronger_incomplete_kicks_inhibit_more() {
    let ns: Vec<usize> = (1..=64).collect();
    for mode in [
        SweepMode::FixedTotalTime(FRAC_PI_2),
        SweepMode::FixedTotalTime(1.0),
        SweepMode::FixedInterval(0.05),
    ] {
        let spec = SweepSpec::new(
            mode,
            vec![FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4],
            ns.clone(),
            unit(),
        )
        .unwrap();
        let rows = sweep(&spec).unwrap();
        let (low, rest) = rows.split_at(ns.len());
        let (mid, high) = rest.split_at(ns.len());
        for i in 0..ns.len() {
            assert!(low[i].p10 <= mid[i].p10 + 1e-15, "{mode:?} N={}", ns[i]);
            assert!(mid[i].p10 <= high[i].p10 + 1e-15, "{mode:?} N={}", ns[i]);
        }
    }
}

#[test]
fn pi_sequence_bounds_complete_measurements() {
    let ns: Vec<usize> = (1..=60).collect();
    for mode in [
        SweepMode::FixedTotalTime(FRAC_PI_2),
        SweepMode::FixedInterval(0.1),
    ] {
        let spec = SweepSpec::new(mode, vec![FRAC_PI_2, PI], ns.clone(), unit()).unwrap();
        let rows = sweep(&spec).unwrap();
        let (complete, echo) = rows.split_at(ns.len());
        for i in 0..ns.len() {
            assert!(
                echo[i].p10 + 1e-15 >= complete[i].p10,
                "{mode:?} N={}",
                ns[i]
            );
        }
        for w in echo.windows(2) {
            let (odd, even) = if w[0].n % 2 == 1 {
                (w[0], w[1])
            } else {
                (w[1], w[0])
            };
            assert!(even.p10 > odd.p10);
        }
    }
}

#[test]
fn spread_kicks_approach_back_to_back_rate() {
    let (t1, t2, g) = (0.5, 0.2, FRAC_PI_4);
    let p = unit();
    let mut gaps = Vec::new();
    for &n in &[16usize, 64, 256, 1024] {
        let kicks: Vec<Kick> = (1..=n)
            .map(|k| Kick {
                time: t1 + t2 * k as f64 / n as f64,
                strength: g,
            })
            .collect();
        let end = kicks.last().unwrap().time;
        let spread =
            finite_difference_rate(|t| p10_at(&kicks, t, &p), end, Side::Right, 1e-7).unwrap();
        let burst = rate_after_n_kicks(t1, g, n, &p).unwrap();
        gaps.push((spread - burst).abs());
    }
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    assert!(gaps[3] < 1e-3);
}
