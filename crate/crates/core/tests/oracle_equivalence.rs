//! The reduced engine against the full state-vector oracle.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeno_core::engine::{engine_run, engine_run_with};
use zeno_core::oracle::{
    oracle_final_state, oracle_free_step, oracle_gamma, oracle_init, oracle_kick, oracle_run,
    FullState,
};
use zeno_core::{Kick, KickSchedule, ProbeEnergies, ReducedState, SystemParams, Trajectory};

fn random_schedule(
    rng: &mut ChaCha8Rng,
    max_kicks: usize,
    total_time: f64,
    samples: usize,
) -> KickSchedule {
    let n = rng.gen_range(0..=max_kicks);
    let mut times: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..=total_time)).collect();
    times.sort_by(f64::total_cmp);
    let kicks = times
        .into_iter()
        .map(|time| Kick {
            time,
            strength: rng.gen_range(0.0..TAU),
        })
        .collect();
    KickSchedule::new(kicks, total_time, samples).unwrap()
}

fn max_deviation(x: &Trajectory, y: &Trajectory) -> f64 {
    assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .map(|(a, b)| {
            assert_eq!(a.t, b.t);
            (a.p10 - b.p10)
                .abs()
                .max((a.p01 - b.p01).abs())
                .max((a.pvac - b.pvac).abs())
        })
        .fold(0.0, f64::max)
}

fn random_state(rng: &mut ChaCha8Rng, n_probes: usize) -> FullState {
    let mut amps: Vec<Complex64> = (0..4 << n_probes)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|z| *z /= norm);
    FullState::from_amplitudes(amps, n_probes).unwrap()
}

#[test]
fn engine_matches_oracle_on_random_schedules() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0_f64;
    for trial in 0..200 {
        let total_time = rng.gen_range(0.1..4.0);
        let params = if trial % 2 == 0 {
            SystemParams::resonant(rng.gen_range(0.2..2.0)).unwrap()
        } else {
            SystemParams::new(
                rng.gen_range(0.2..2.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            )
            .unwrap()
            .with_probe_energies(
                (0..10)
                    .map(|_| ProbeEnergies {
                        lambda1: rng.gen_range(-2.0..2.0),
                        lambda0: rng.gen_range(-2.0..2.0),
                    })
                    .collect(),
            )
            .unwrap()
        };
        let schedule = random_schedule(&mut rng, 10, total_time, 40);
        let engine = engine_run(&schedule, &params).unwrap();
        let oracle = oracle_run(&schedule, &params).unwrap();
        assert!(oracle.max_norm_deviation() < 1e-10);
        worst = worst.max(max_deviation(&engine, &oracle));
    }
    assert!(worst <= 1e-10, "max deviation {worst:e}");
}

#[test]
fn corrupted_engine_is_caught() {
    // kick acting on the survivor amplitude instead of the partner
    fn wrong(s: ReducedState, g: f64) -> ReducedState {
        let (sn, c) = g.sin_cos();
        ReducedState::new(s.a * c, s.b, s.v + s.a.norm_sqr() * sn * sn)
    }
    let params = SystemParams::default();
    let schedule = KickSchedule::equally_spaced(4, 1.0, 1.0, 10).unwrap();
    let bad = engine_run_with(&schedule, &params, wrong).unwrap();
    let oracle = oracle_run(&schedule, &params).unwrap();
    assert!(max_deviation(&bad, &oracle) > 1e-3);
}

#[test]
fn probes_never_flip_while_the_system_is_excited() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let schedule = random_schedule(&mut rng, 8, 2.0, 2);
        let n = schedule.kicks().len();
        let params = SystemParams::new(1.0, 0.2, -0.1).unwrap();
        let state = oracle_final_state(&schedule, &params).unwrap();
        for (i, z) in state.amplitudes().iter().enumerate() {
            let system = i & 3;
            let probes = i >> 2;
            if system != 0 && probes != 0 {
                assert_eq!(*z, Complex64::new(0.0, 0.0), "index {i}");
            }
            // at most one probe carries the excitation
            if probes.count_ones() > 1 {
                assert_eq!(*z, Complex64::new(0.0, 0.0));
            }
        }
        assert!(state.p11() == 0.0);
        assert!((state.norm_sqr() - 1.0).abs() < 1e-10);
        assert_eq!(state.n_probes(), n);
    }
}

#[test]
fn gamma_squares_to_identity_on_exchanged_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for probe in 0..3 {
        let psi = random_state(&mut rng, 3);
        let once = oracle_gamma(&psi, probe).unwrap();
        let twice = oracle_gamma(&once, probe).unwrap();
        // Γ² fixes everything Γ reaches, so Γ³ = Γ
        let thrice = oracle_gamma(&twice, probe).unwrap();
        for (x, y) in thrice.amplitudes().iter().zip(once.amplitudes()) {
            assert!((x - y).norm() < 1e-13);
        }
        let bit = 4usize << probe;
        for (i, (x, y)) in twice.amplitudes().iter().zip(psi.amplitudes()).enumerate() {
            let paired = (i & 1 == 1) != (i & bit != 0);
            if paired {
                assert!((x - y).norm() < 1e-13);
            } else {
                assert_eq!(x.norm(), 0.0);
            }
        }
    }
}

#[test]
fn kick_is_unitary_and_periodic() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let psi = random_state(&mut rng, 3);
        let g = rng.gen_range(-10.0..10.0);
        let probe = rng.gen_range(0..3);
        let kicked = oracle_kick(&psi, probe, g).unwrap();
        assert!((kicked.norm_sqr() - 1.0).abs() < 1e-13);
        let back = oracle_kick(&kicked, probe, -g).unwrap();
        assert!((back.inner(&psi).norm() - 1.0).abs() < 1e-13);
        let full_turn = oracle_kick(&psi, probe, g + TAU).unwrap();
        for (x, y) in full_turn.amplitudes().iter().zip(kicked.amplitudes()) {
            assert!((x - y).norm() < 1e-13);
        }
    }
    let psi = random_state(&mut rng, 2);
    assert_eq!(oracle_kick(&psi, 1, 0.0).unwrap(), psi);
}

#[test]
fn free_step_preserves_norm_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let params = SystemParams::new(1.3, 0.4, -0.2)
        .unwrap()
        .with_probe_energies(vec![
            ProbeEnergies {
                lambda1: 0.7,
                lambda0: -0.3
            };
            3
        ])
        .unwrap();
    let psi = random_state(&mut rng, 3);
    let out = oracle_free_step(&psi, 0.37, &params).unwrap();
    assert!((out.norm_sqr() - 1.0).abs() < 1e-13);
    assert_eq!(oracle_free_step(&psi, 0.0, &params).unwrap(), psi);
}

#[test]
fn free_oracle_follows_cos_squared() {
    let params = SystemParams::resonant(1.4).unwrap();
    for &dt in &[0.0, 0.2, 0.9, 2.0] {
        let s = oracle_free_step(&oracle_init(0).unwrap(), dt, &params).unwrap();
        assert!((s.p10() - (1.4 * dt).cos().powi(2)).abs() < 1e-14);
    }
    let schedule = KickSchedule::free(PI / 2.0, 11).unwrap();
    let traj = oracle_run(&schedule, &SystemParams::default()).unwrap();
    assert!(traj.last().unwrap().p10 < 1e-30);
}

#[test]
fn oracle_reproduces_single_interaction_branching() {
    // one kick at t_m: survivor untouched, partner scaled by cos g, leak = β² sin² g
    let (t_m, g) = (0.5, 2.2);
    let schedule = KickSchedule::new(
        vec![Kick {
            time: t_m,
            strength: g,
        }],
        t_m,
        2,
    )
    .unwrap();
    let s = oracle_final_state(&schedule, &SystemParams::default()).unwrap();
    let a = s.amplitudes();
    assert!((a[2] - Complex64::new(t_m.cos(), 0.0)).norm() < 1e-15);
    assert!((a[1] - Complex64::new(0.0, -t_m.sin() * g.cos())).norm() < 1e-15);
    assert!((a[4] - Complex64::new(-t_m.sin() * g.sin(), 0.0)).norm() < 1e-15);
}
