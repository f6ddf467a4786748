//! Reduced O(N) simulation on [`ReducedState`], and parameter sweeps built on it.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::params::{Kick, KickSchedule, SystemParams};
use crate::state::{apply_kick, free_propagate, ReducedState};
use crate::trajectory::{drive, Dynamics, Sample, Trajectory};

/// How a kick acts on the reduced state. [`apply_kick`] is the physical rule;
/// other rules exist so the cross-checks can be shown to catch a broken engine.
pub type KickRule = fn(ReducedState, f64) -> ReducedState;

struct Reduced<'a> {
    params: &'a SystemParams,
    kick: KickRule,
}

impl Dynamics for Reduced<'_> {
    type State = ReducedState;

    fn free(&self, state: &ReducedState, dt: f64) -> Result<ReducedState> {
        free_propagate(*state, dt, self.params)
    }

    fn kick(&self, state: &ReducedState, _probe: usize, g: f64) -> Result<ReducedState> {
        Ok((self.kick)(*state, g))
    }

    fn sample(&self, s: &ReducedState, t: f64) -> Sample {
        Sample {
            t,
            p10: s.p10(),
            p01: s.p01(),
            pvac: s.pvac(),
            norm: s.norm(),
        }
    }
}

/// Run `schedule` from `|1,0⟩|0_M⟩`.
pub fn engine_run(schedule: &KickSchedule, params: &SystemParams) -> Result<Trajectory> {
    engine_run_with(schedule, params, apply_kick)
}

pub fn engine_run_with(
    schedule: &KickSchedule,
    params: &SystemParams,
    kick: KickRule,
) -> Result<Trajectory> {
    drive(&Reduced { params, kick }, ReducedState::initial(), schedule)
}

/// State at time `t` starting from `|1,0⟩|0_M⟩`, with every kick at or
/// before `t` applied. `kicks` must be ordered by time.
pub fn state_at(kicks: &[Kick], t: f64, params: &SystemParams) -> Result<ReducedState> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "time must be finite and non-negative, got {t}"
        )));
    }
    let mut state = ReducedState::initial();
    let mut now = 0.0;
    for kick in kicks.iter().take_while(|k| k.time <= t) {
        if kick.time < now {
            return Err(Error::InvalidSchedule(
                "kick times must be non-decreasing".into(),
            ));
        }
        state = apply_kick(
            free_propagate(state, kick.time - now, params)?,
            kick.strength,
        );
        now = kick.time;
    }
    free_propagate(state, t - now, params)
}

/// Survival probability `P₁₀(t)`; see [`state_at`].
pub fn p10_at(kicks: &[Kick], t: f64, params: &SystemParams) -> Result<f64> {
    state_at(kicks, t, params).map(|s| s.p10())
}

/// How the kick interval relates to the total time in a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepMode {
    /// Total time `T` is fixed; kicks are spaced by `τ = T/N`.
    FixedTotalTime(f64),
    /// Interval `τ` is fixed; the run lasts `T = N·τ`.
    FixedInterval(f64),
}

impl SweepMode {
    fn validate(&self) -> Result<()> {
        let (SweepMode::FixedTotalTime(x) | SweepMode::FixedInterval(x)) = *self;
        if x.is_finite() && x > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "sweep time must be positive and finite, got {x}"
            )))
        }
    }

    /// Kick schedule with `n` equally spaced kicks of strength `g`.
    pub fn schedule(&self, n: usize, g: f64, samples: usize) -> Result<KickSchedule> {
        match *self {
            SweepMode::FixedTotalTime(total) => KickSchedule::equally_spaced(n, g, total, samples),
            SweepMode::FixedInterval(tau) => {
                let kicks = (1..=n)
                    .map(|k| Kick {
                        time: k as f64 * tau,
                        strength: g,
                    })
                    .collect();
                KickSchedule::new(kicks, n as f64 * tau, samples)
            }
        }
    }
}

/// Grid of kick strengths and kick counts to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub mode: SweepMode,
    pub g_values: Vec<f64>,
    pub n_values: Vec<usize>,
    pub params: SystemParams,
}

impl SweepSpec {
    pub fn new(
        mode: SweepMode,
        g_values: Vec<f64>,
        n_values: Vec<usize>,
        params: SystemParams,
    ) -> Result<Self> {
        mode.validate()?;
        if g_values.is_empty() || n_values.is_empty() {
            return Err(Error::InvalidArgument(
                "sweep needs at least one g and one N".into(),
            ));
        }
        if g_values.iter().any(|g| !g.is_finite()) {
            return Err(Error::InvalidArgument(
                "kick strengths must be finite".into(),
            ));
        }
        Ok(Self {
            mode,
            g_values,
            n_values,
            params,
        })
    }
}

/// Populations at the end of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FinalPopulations {
    pub p10: f64,
    pub p01: f64,
    pub pvac: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub g: f64,
    pub n: usize,
    pub p10: f64,
    pub p01: f64,
    pub pvac: f64,
}

/// Final populations after `n` kicks of strength `g` at `kτ`, `k = 1..=n`.
pub fn run_equally_spaced(
    n: usize,
    g: f64,
    mode: SweepMode,
    params: &SystemParams,
) -> Result<FinalPopulations> {
    mode.validate()?;
    let schedule = mode.schedule(n, g, 2)?;
    let trajectory = engine_run(&schedule, params)?;
    let last = trajectory
        .last()
        .expect("a trajectory always holds the endpoint samples");
    Ok(FinalPopulations {
        p10: last.p10,
        p01: last.p01,
        pvac: last.pvac,
    })
}

/// One row per `(g, N)`, `g` outer and `N` inner. Rows are computed in
/// parallel; the output order does not depend on scheduling.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let cells: Vec<(f64, usize)> = spec
        .g_values
        .iter()
        .flat_map(|&g| spec.n_values.iter().map(move |&n| (g, n)))
        .collect();
    cells
        .into_par_iter()
        .map(|(g, n)| {
            let fin = run_equally_spaced(n, g, spec.mode, &spec.params)?;
            Ok(SweepRow {
                g,
                n,
                p10: fin.p10,
                p01: fin.p01,
                pvac: fin.pvac,
            })
        })
        .collect()
}
