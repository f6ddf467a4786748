//! The four scenario commands. Each `*_data` function computes results in
//! memory; the `cmd_*` wrappers add file output.

use std::f64::consts::{FRAC_PI_4, PI, TAU};
use std::fmt;
use std::fmt::Write as _;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeno_core::analytics::RateQuery;
use zeno_core::engine::{engine_run_with, sweep, KickRule, SweepRow, SweepSpec};
use zeno_core::oracle::oracle_run;
use zeno_core::{apply_kick, Kick, KickSchedule, Trajectory};

use crate::config::ScenarioConfig;
use crate::error::{CliError, Result};
use crate::output::{self, real, write_atomic};

/// Largest kick count the oracle cross-check accepts.
pub const MAX_CHECK_KICKS: usize = 10;
/// Largest tolerated `|ΔP₁₀|` between engine and oracle.
pub const ORACLE_TOLERANCE: f64 = 1e-10;
const DEFAULT_CHECK_KICKS: usize = 8;
const DEFAULT_CHECK_TIME: f64 = 2.0;

/// One trajectory per kick strength in `g_list`.
///
/// Kick times come from `t_kicks` over `[0, T]`, or, without `t_kicks`, from
/// a single `N_list` entry spaced according to the sweep mode.
pub fn run_data(cfg: &ScenarioConfig) -> Result<Vec<(f64, Trajectory)>> {
    let params = cfg.params()?;
    let schedules: Vec<(f64, KickSchedule)> = match (&cfg.t_kicks, cfg.n_list.as_slice()) {
        (Some(times), _) => {
            let total = cfg
                .total_time
                .ok_or_else(|| CliError::Usage("`run` needs `T`".into()))?;
            if times.is_empty() {
                vec![(0.0, KickSchedule::free(total, cfg.resolution)?)]
            } else {
                if cfg.g_list.is_empty() {
                    return Err(CliError::Usage("kicks given without `g_list`".into()));
                }
                cfg.g_list
                    .iter()
                    .map(|&g| {
                        let kicks = times
                            .iter()
                            .map(|&time| Kick { time, strength: g })
                            .collect();
                        Ok((g, KickSchedule::new(kicks, total, cfg.resolution)?))
                    })
                    .collect::<Result<_>>()?
            }
        }
        (None, &[n]) => {
            let mode = cfg.sweep_mode()?;
            let gs = if cfg.g_list.is_empty() {
                vec![0.0]
            } else {
                cfg.g_list.clone()
            };
            gs.into_iter()
                .map(|g| Ok((g, mode.schedule(n, g, cfg.resolution)?)))
                .collect::<Result<_>>()?
        }
        (None, _) => {
            return Err(CliError::Usage(
                "`run` needs `t_kicks`, or exactly one value in `N_list`".into(),
            ))
        }
    };
    schedules
        .into_iter()
        .map(|(g, s)| Ok((g, zeno_core::engine::engine_run(&s, &params)?)))
        .collect()
}

/// Write trajectories: a single one goes to `out`, several go to
/// `out_g0`, `out_g1`, … in `g_list` order.
pub fn cmd_run(cfg: &ScenarioConfig, gnuplot: bool) -> Result<Vec<PathBuf>> {
    let out = cfg.out_path()?.clone();
    let runs = run_data(cfg)?;
    let many = runs.len() > 1;
    let mut written = Vec::with_capacity(runs.len());
    for (i, (g, traj)) in runs.iter().enumerate() {
        let path = if many {
            output::sibling(&out, &format!("g{i}"))
        } else {
            out.clone()
        };
        write_atomic(&path, &output::trajectory_csv(traj))?;
        written.push((*g, path));
    }
    if gnuplot {
        write_atomic(
            &out.with_extension("gp"),
            &output::gnuplot_trajectories(&written),
        )?;
    }
    Ok(written.into_iter().map(|(_, p)| p).collect())
}

pub fn sweep_data(cfg: &ScenarioConfig) -> Result<Vec<SweepRow>> {
    let spec = SweepSpec::new(
        cfg.sweep_mode()?,
        cfg.g_list.clone(),
        cfg.n_list.clone(),
        cfg.params()?,
    )?;
    Ok(sweep(&spec)?)
}

pub fn cmd_sweep(cfg: &ScenarioConfig, gnuplot: bool) -> Result<PathBuf> {
    let out = cfg.out_path()?.clone();
    let rows = sweep_data(cfg)?;
    write_atomic(&out, &output::sweep_csv(&rows))?;
    if gnuplot {
        write_atomic(
            &out.with_extension("gp"),
            &output::gnuplot_sweep(&out, &cfg.g_list),
        )?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub trials: usize,
    pub max_dev: f64,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.max_dev <= ORACLE_TOLERANCE
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "status={status} max_dev={:e} trials={}",
            self.max_dev, self.trials
        )
    }
}

/// Random schedules for the cross-check: up to `max(N_list)` kicks (8 by
/// default), strengths uniform in `[0, 2π)`, times uniform in `[0, T]`.
pub fn random_schedules(cfg: &ScenarioConfig) -> Result<Vec<KickSchedule>> {
    let max_kicks = cfg
        .n_list
        .iter()
        .copied()
        .max()
        .unwrap_or(DEFAULT_CHECK_KICKS);
    if max_kicks > MAX_CHECK_KICKS {
        return Err(zeno_core::Error::Capacity {
            requested: max_kicks,
            max: MAX_CHECK_KICKS,
        }
        .into());
    }
    let total = cfg.total_time.unwrap_or(DEFAULT_CHECK_TIME);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trials)
        .map(|_| {
            let n = rng.gen_range(0..=max_kicks);
            let mut times: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..=total)).collect();
            times.sort_by(f64::total_cmp);
            let kicks = times
                .into_iter()
                .map(|time| Kick {
                    time,
                    strength: rng.gen_range(0.0..TAU),
                })
                .collect();
            Ok(KickSchedule::new(kicks, total, cfg.resolution)?)
        })
        .collect()
}

/// Pointwise `max |P₁₀(engine) − P₁₀(oracle)|` over random schedules. The
/// engine's kick rule is a parameter so a broken rule can be shown to fail.
pub fn oracle_check_with(cfg: &ScenarioConfig, kick: KickRule) -> Result<OracleReport> {
    let params = cfg.params()?;
    let mut max_dev = 0.0_f64;
    for schedule in random_schedules(cfg)? {
        let engine = engine_run_with(&schedule, &params, kick)?;
        let oracle = oracle_run(&schedule, &params)?;
        for (e, o) in engine.iter().zip(&oracle) {
            max_dev = max_dev.max((e.p10 - o.p10).abs());
        }
    }
    Ok(OracleReport {
        trials: cfg.trials,
        max_dev,
    })
}

pub fn oracle_check(cfg: &ScenarioConfig) -> Result<OracleReport> {
    oracle_check_with(cfg, apply_kick)
}

/// Runs the check, writes the summary line to `out` when given, and returns
/// the report. Whether it passed is left to the caller.
pub fn cmd_oracle_check(cfg: &ScenarioConfig) -> Result<OracleReport> {
    let report = oracle_check(cfg)?;
    if let Some(out) = &cfg.out {
        write_atomic(out, &format!("{report}\n"))?;
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateRow {
    pub kind: &'static str,
    /// `t` for free rows, `t_m` for one-kick rows, time since the kick for
    /// super-Zeno rows, `N` for n-kick rows.
    pub t_or_n: f64,
    pub g: f64,
    pub analytic: f64,
    pub numeric: f64,
    pub abs_error: f64,
    pub tolerance: f64,
}

impl RateRow {
    pub fn passed(&self) -> bool {
        self.abs_error <= self.tolerance
    }
}

/// Default strength grid: 17 points over `[0, 2π]`.
pub fn default_g_grid() -> Vec<f64> {
    (0..=16).map(|j| j as f64 * TAU / 16.0).collect()
}

/// Closed-form rates against engine finite differences.
///
/// * `free`: 50 interior points of `[0, T]` (`T` defaults to `π`).
/// * `one_kick`: every `t_m` in `t_kicks` (default `0.5`) × every `g` in
///   `g_list` (default 17-point grid).
/// * `super_zeno`: 20 points in `(0, 2 t_m]` after a `π` kick at the first `t_m`.
/// * `n_kicks`: back-to-back kicks at the first `t_m`, strength the first
///   `g_list` entry (default `π/4`), for each `N` in `N_list` (default `0..=10`).
pub fn rates_data(cfg: &ScenarioConfig) -> Result<Vec<RateRow>> {
    let params = cfg.params()?;
    let span = cfg.total_time.unwrap_or(PI);
    let t_ms = match &cfg.t_kicks {
        Some(v) if !v.is_empty() => v.clone(),
        _ => vec![0.5],
    };
    let gs = if cfg.g_list.is_empty() {
        default_g_grid()
    } else {
        cfg.g_list.clone()
    };
    let g_burst = cfg.g_list.first().copied().unwrap_or(FRAC_PI_4);
    let ns = if cfg.n_list.is_empty() {
        (0..=10).collect()
    } else {
        cfg.n_list.clone()
    };

    let mut queries: Vec<(&'static str, f64, f64, RateQuery)> = Vec::new();
    for i in 0..50 {
        let t = span * (i + 1) as f64 / 51.0;
        queries.push(("free", t, 0.0, RateQuery::Free { t }));
    }
    for &t_m in &t_ms {
        for &g in &gs {
            queries.push(("one_kick", t_m, g, RateQuery::AfterOneKick { t_m, g }));
        }
    }
    let t_m = t_ms[0];
    for j in 0..20 {
        let t = 2.0 * t_m * (j + 1) as f64 / 20.0;
        queries.push(("super_zeno", t, PI, RateQuery::SuperZeno { t_m, t }));
    }
    for &n in &ns {
        queries.push((
            "n_kicks",
            n as f64,
            g_burst,
            RateQuery::AfterNKicks {
                t1: t_m,
                g: g_burst,
                n,
            },
        ));
    }

    queries
        .into_iter()
        .map(|(kind, t_or_n, g, q)| {
            let analytic = q.analytic(&params)?;
            let numeric = q.numeric(&params, q.default_step())?;
            Ok(RateRow {
                kind,
                t_or_n,
                g,
                analytic,
                numeric,
                abs_error: (analytic - numeric).abs(),
                tolerance: q.default_tolerance(),
            })
        })
        .collect()
}

pub fn rates_csv(rows: &[RateRow]) -> String {
    let mut out = String::from("kind,t_or_N,g,analytic,numeric,abs_error\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.kind,
            real(r.t_or_n),
            real(r.g),
            real(r.analytic),
            real(r.numeric),
            real(r.abs_error)
        );
    }
    out
}

/// Writes the comparison table, then fails if any row is out of tolerance.
pub fn cmd_rates(cfg: &ScenarioConfig) -> Result<PathBuf> {
    let out = cfg.out_path()?.clone();
    let rows = rates_data(cfg)?;
    write_atomic(&out, &rates_csv(&rows))?;
    let failed: Vec<&RateRow> = rows.iter().filter(|r| !r.passed()).collect();
    if let Some(worst) = failed
        .iter()
        .max_by(|a, b| a.abs_error.total_cmp(&b.abs_error))
    {
        return Err(CliError::Verification(format!(
            "{} of {} rate rows out of tolerance; worst {} at {} with error {:e}",
            failed.len(),
            rows.len(),
            worst.kind,
            worst.t_or_n,
            worst.abs_error
        )));
    }
    Ok(out)
}
