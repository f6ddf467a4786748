//! Flat `key = value` scenario files.
//!
//! ```text
//! # fig. 4 style sweep
//! scenario = fig4
//! G = 1
//! g_list = pi/4, pi/2, 3pi/4
//! N_list = 1..60
//! T = pi/2
//! out = fig4.csv
//! ```
//!
//! Reals accept plain decimals and multiples of `pi` (`pi`, `3pi/4`,
//! `-2*pi`, `0.5/3`). Count lists accept inclusive ranges (`1..60`).
//! Text after `#` is a comment. Unknown or repeated keys are errors.
//!
//! Defaults: `G = 1`, `eps_a = eps_b = 0`, `resolution = 1000`,
//! `trials = 200`, `seed = 0`.

use std::collections::HashSet;
use std::path::PathBuf;

use zeno_core::engine::SweepMode;
use zeno_core::SystemParams;

use crate::error::{CliError, Result};

pub const DEFAULT_RESOLUTION: usize = 1000;
pub const DEFAULT_TRIALS: usize = 200;

const KEYS: &[&str] = &[
    "scenario",
    "G",
    "eps_a",
    "eps_b",
    "g_list",
    "N_list",
    "T",
    "tau",
    "mode",
    "t_kicks",
    "resolution",
    "trials",
    "seed",
    "out",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeKind {
    FixedTotalTime,
    FixedInterval,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: String,
    pub coupling: f64,
    pub eps_a: f64,
    pub eps_b: f64,
    pub g_list: Vec<f64>,
    pub n_list: Vec<usize>,
    pub total_time: Option<f64>,
    pub tau: Option<f64>,
    pub mode: Option<ModeKind>,
    /// `None` when the key is absent; `Some(vec![])` for an explicit empty schedule.
    pub t_kicks: Option<Vec<f64>>,
    pub resolution: usize,
    pub trials: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            scenario: String::new(),
            coupling: 1.0,
            eps_a: 0.0,
            eps_b: 0.0,
            g_list: Vec::new(),
            n_list: Vec::new(),
            total_time: None,
            tau: None,
            mode: None,
            t_kicks: None,
            resolution: DEFAULT_RESOLUTION,
            trials: DEFAULT_TRIALS,
            seed: 0,
            out: None,
        }
    }
}

impl ScenarioConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ScenarioConfig::default();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| CliError::Config { line, message };
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{content}`")))?;
            let (key, value) = (key.trim(), value.trim());
            if !KEYS.contains(&key) {
                return Err(err(format!("unknown key `{key}`")));
            }
            if !seen.insert(key.to_string()) {
                return Err(err(format!("key `{key}` given twice")));
            }
            cfg.set(key, value).map_err(err)?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        match key {
            "scenario" => self.scenario = value.to_string(),
            "G" => self.coupling = parse_real(value)?,
            "eps_a" => self.eps_a = parse_real(value)?,
            "eps_b" => self.eps_b = parse_real(value)?,
            "g_list" => self.g_list = parse_real_list(value)?,
            "N_list" => self.n_list = parse_count_list(value)?,
            "T" => self.total_time = Some(parse_real(value)?),
            "tau" => self.tau = Some(parse_real(value)?),
            "mode" => {
                self.mode = Some(match value {
                    "fixed-total-time" | "total" => ModeKind::FixedTotalTime,
                    "fixed-interval" | "interval" => ModeKind::FixedInterval,
                    _ => {
                        return Err(format!(
                            "unknown mode `{value}` (fixed-total-time | fixed-interval)"
                        ))
                    }
                })
            }
            "t_kicks" => self.t_kicks = Some(parse_real_list(value)?),
            "resolution" => self.resolution = parse_count(value)?,
            "trials" => self.trials = parse_count(value)?,
            "seed" => {
                self.seed = value
                    .parse()
                    .map_err(|_| format!("malformed seed `{value}`"))?
            }
            "out" => {
                if value.is_empty() {
                    return Err("empty output path".into());
                }
                self.out = Some(PathBuf::from(value))
            }
            _ => unreachable!("key list and setter out of sync"),
        }
        Ok(())
    }

    pub fn params(&self) -> Result<SystemParams> {
        Ok(SystemParams::new(self.coupling, self.eps_a, self.eps_b)?)
    }

    /// Sweep timing: an explicit `mode` wins; otherwise `tau` alone selects
    /// the fixed-interval mode and anything else the fixed-total-time mode.
    pub fn sweep_mode(&self) -> Result<SweepMode> {
        let kind = self.mode.unwrap_or(match (self.total_time, self.tau) {
            (None, Some(_)) => ModeKind::FixedInterval,
            _ => ModeKind::FixedTotalTime,
        });
        match kind {
            ModeKind::FixedTotalTime => self
                .total_time
                .map(SweepMode::FixedTotalTime)
                .ok_or_else(|| CliError::Usage("fixed-total-time mode needs `T`".into())),
            ModeKind::FixedInterval => self
                .tau
                .map(SweepMode::FixedInterval)
                .ok_or_else(|| CliError::Usage("fixed-interval mode needs `tau`".into())),
        }
    }

    pub fn out_path(&self) -> Result<&PathBuf> {
        self.out
            .as_ref()
            .ok_or_else(|| CliError::Usage("config needs an `out` path".into()))
    }
}

/// A decimal, or a rational multiple of `pi`.
pub fn parse_real(text: &str) -> std::result::Result<f64, String> {
    let malformed = || format!("malformed number `{text}`");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text.trim(), None),
    };
    let numerator = match num.strip_suffix("pi") {
        Some(coef) => {
            let coef = coef.trim_end().strip_suffix('*').unwrap_or(coef).trim();
            let k = match coef {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => c.parse::<f64>().map_err(|_| malformed())?,
            };
            k * std::f64::consts::PI
        }
        None => num.parse::<f64>().map_err(|_| malformed())?,
    };
    let value = match den {
        Some(d) => {
            let d: f64 = d.parse().map_err(|_| malformed())?;
            if d == 0.0 {
                return Err(format!("division by zero in `{text}`"));
            }
            numerator / d
        }
        None => numerator,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("non-finite number `{text}`"))
    }
}

fn parse_real_list(text: &str) -> std::result::Result<Vec<f64>, String> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| parse_real(s.trim())).collect()
}

fn parse_count(text: &str) -> std::result::Result<usize, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("malformed count `{}`", text.trim()))
}

fn parse_count_list(text: &str) -> std::result::Result<Vec<usize>, String> {
    let mut out = Vec::new();
    if text.is_empty() {
        return Ok(out);
    }
    for item in text.split(',').map(str::trim) {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (parse_count(lo)?, parse_count(hi)?);
                if lo > hi {
                    return Err(format!("empty range `{item}`"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(parse_count(item)?),
        }
    }
    Ok(out)
}
