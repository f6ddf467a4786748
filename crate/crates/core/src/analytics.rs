//! Closed-form transition rates on resonance and a finite-difference
//! instrument that measures them from the reduced engine.
//!
//! All rates are `dP₁₀/dt` for a system started in `|1,0⟩|0_M⟩` with
//! `eps_a = eps_b`, where `P₁₀(t) = cos²(Gt)` between kicks.

use std::f64::consts::PI;

use crate::engine::p10_at;
use crate::error::{Error, Result};
use crate::params::{Kick, SystemParams};

/// Smallest step accepted by [`finite_difference_rate`].
pub const MIN_FD_STEP: f64 = 1e-9;
/// Default step and tolerance for one-sided differences.
pub const ONE_SIDED_STEP: f64 = 1e-6;
pub const ONE_SIDED_TOL: f64 = 1e-4;
/// Default step and tolerance for central differences on smooth segments.
pub const CENTRAL_STEP: f64 = 1e-5;
pub const CENTRAL_TOL: f64 = 1e-8;

fn require_resonance(params: &SystemParams) -> Result<()> {
    if params.is_resonant() {
        Ok(())
    } else {
        Err(Error::UnsupportedRegime(format!(
            "closed-form rates need eps_a = eps_b, got {} and {}",
            params.eps_a(),
            params.eps_b()
        )))
    }
}

fn require_time(name: &str, t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be finite and non-negative, got {t}"
        )))
    }
}

/// Rate with no kicks: `−2G cos(Gt) sin(Gt)`.
pub fn rate_free(t: f64, params: &SystemParams) -> Result<f64> {
    require_resonance(params)?;
    require_time("t", t)?;
    let g = params.coupling();
    let (s, c) = (g * t).sin_cos();
    Ok(-2.0 * g * c * s)
}

/// One-sided rate just after a kick of strength `g` at `t_m`:
/// `−2G cos(Gt_m) sin(Gt_m) cos g`.
pub fn rate_after_one_kick(t_m: f64, g: f64, params: &SystemParams) -> Result<f64> {
    Ok(rate_free(t_m, params)? * g.cos())
}

/// Rate at `t_m + t` after a single `π` kick at `t_m`: `G sin(2G(t_m − t))`.
/// Positive exactly while `t < t_m`.
pub fn rate_super_zeno(t_m: f64, t: f64, params: &SystemParams) -> Result<f64> {
    require_resonance(params)?;
    require_time("t_m", t_m)?;
    require_time("t", t)?;
    let g = params.coupling();
    Ok(g * (2.0 * g * (t_m - t)).sin())
}

/// Rate after free evolution `t1` followed by `n` back-to-back kicks of
/// strength `g`: `−2G cos(Gt₁) sin(Gt₁) cosⁿ g`.
///
/// The power is accumulated one factor at a time, so the value for `n + 1` is
/// exactly the value for `n` multiplied by `cos g`.
pub fn rate_after_n_kicks(t1: f64, g: f64, n: usize, params: &SystemParams) -> Result<f64> {
    let c = g.cos();
    let mut rate = rate_free(t1, params)?;
    for _ in 0..n {
        rate *= c;
    }
    Ok(rate)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Central,
}

/// Difference quotient of `p10` at `t`. Truncation error is O(step) for the
/// one-sided forms and O(step²) for the central one.
pub fn finite_difference_rate<F>(p10: F, t: f64, side: Side, step: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !step.is_finite() || step < MIN_FD_STEP {
        return Err(Error::IllConditionedStep(step));
    }
    Ok(match side {
        Side::Right => (p10(t + step)? - p10(t)?) / step,
        Side::Left => (p10(t)? - p10(t - step)?) / step,
        Side::Central => (p10(t + step)? - p10(t - step)?) / (2.0 * step),
    })
}

/// A rate that has both a closed form and an engine measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RateQuery {
    /// No kicks, rate at `t`.
    Free { t: f64 },
    /// One kick of strength `g` at `t_m`, rate just after it.
    AfterOneKick { t_m: f64, g: f64 },
    /// One `π` kick at `t_m`, rate at `t_m + t`.
    SuperZeno { t_m: f64, t: f64 },
    /// Free evolution `t1`, then `n` kicks of strength `g` at the same instant.
    AfterNKicks { t1: f64, g: f64, n: usize },
}

impl RateQuery {
    pub fn analytic(&self, params: &SystemParams) -> Result<f64> {
        match *self {
            RateQuery::Free { t } => rate_free(t, params),
            RateQuery::AfterOneKick { t_m, g } => rate_after_one_kick(t_m, g, params),
            RateQuery::SuperZeno { t_m, t } => rate_super_zeno(t_m, t, params),
            RateQuery::AfterNKicks { t1, g, n } => rate_after_n_kicks(t1, g, n, params),
        }
    }

    /// Which difference quotient measures this rate. Kick instants only admit
    /// the right-sided form; smooth points use the central one.
    pub fn side(&self) -> Side {
        match *self {
            RateQuery::Free { t } if t < CENTRAL_STEP => Side::Right,
            RateQuery::Free { .. } => Side::Central,
            RateQuery::SuperZeno { t, .. } if t >= CENTRAL_STEP => Side::Central,
            _ => Side::Right,
        }
    }

    pub fn default_step(&self) -> f64 {
        match self.side() {
            Side::Central => CENTRAL_STEP,
            _ => ONE_SIDED_STEP,
        }
    }

    pub fn default_tolerance(&self) -> f64 {
        match self.side() {
            Side::Central => CENTRAL_TOL,
            _ => ONE_SIDED_TOL,
        }
    }

    /// Measure the rate from fresh engine runs.
    pub fn numeric(&self, params: &SystemParams, step: f64) -> Result<f64> {
        require_resonance(params)?;
        let (kicks, at) = match *self {
            RateQuery::Free { t } => (Vec::new(), t),
            RateQuery::AfterOneKick { t_m, g } => (
                vec![Kick {
                    time: t_m,
                    strength: g,
                }],
                t_m,
            ),
            RateQuery::SuperZeno { t_m, t } => (
                vec![Kick {
                    time: t_m,
                    strength: PI,
                }],
                t_m + t,
            ),
            RateQuery::AfterNKicks { t1, g, n } => (
                vec![
                    Kick {
                        time: t1,
                        strength: g
                    };
                    n
                ],
                t1,
            ),
        };
        finite_difference_rate(|x| p10_at(&kicks, x, params), at, self.side(), step)
    }
}
