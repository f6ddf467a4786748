//! Built-in scenarios for the figure and verification runs.
//!
//! Where the figures leave a number open, the preset pins it: the `N`
//! sweeps use a fixed total time `T = π/2` with `G = 1`, and kicks are
//! spaced `τ = T/N`.

use std::path::Path;

use crate::config::ScenarioConfig;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Run,
    Sweep,
    OracleCheck,
    Rates,
}

pub struct Preset {
    pub name: &'static str,
    pub command: Command,
    pub config: &'static str,
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "fig1",
        command: Command::Run,
        config: "\
scenario = fig1
# one kick at t_m = 0.5, survival curves for five strengths
G = 1
T = 1
t_kicks = 0.5
g_list = 0, pi/4, pi/2, 3pi/4, pi
resolution = 1000
out = fig1.csv
",
    },
    Preset {
        name: "fig2",
        command: Command::Sweep,
        config: "\
scenario = fig2
# pi kicks against complete measurements
G = 1
T = pi/2
mode = fixed-total-time
g_list = pi/2, pi
N_list = 1..60
out = fig2.csv
",
    },
    Preset {
        name: "fig4",
        command: Command::Sweep,
        config: "\
scenario = fig4
# incomplete measurements either side of the complete one
G = 1
T = pi/2
mode = fixed-total-time
g_list = pi/4, pi/2, 3pi/4
N_list = 1..60
out = fig4.csv
",
    },
    Preset {
        name: "rates",
        command: Command::Rates,
        config: "\
scenario = rates
G = 1
T = pi
t_kicks = 0.15, 0.3, 0.45, 0.6, 0.75, 0.9, 1.05, 1.2, 1.35, 1.5
N_list = 0..12
out = rates.csv
",
    },
    Preset {
        name: "oracle-check",
        command: Command::OracleCheck,
        config: "\
scenario = oracle-check
G = 1
T = 2
N_list = 8
trials = 200
seed = 42
resolution = 64
",
    },
];

pub fn find(name: &str) -> Result<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name).ok_or_else(|| {
        let names: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
        CliError::Usage(format!(
            "unknown preset `{name}`; available: {}",
            names.join(", ")
        ))
    })
}

/// Parse the preset and place its output file (if any) inside `out_dir`.
pub fn load(preset: &Preset, out_dir: &Path) -> Result<ScenarioConfig> {
    let mut cfg = ScenarioConfig::parse(preset.config)?;
    if let Some(out) = cfg.out.take() {
        cfg.out = Some(out_dir.join(out));
    }
    Ok(cfg)
}
