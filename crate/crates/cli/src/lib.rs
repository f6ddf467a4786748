//! Command-line harness for the kicked two-qubit simulator: scenario files,
//! figure presets, sweeps, rate tables and the oracle cross-check.

pub mod commands;
pub mod config;
mod error;
pub mod output;
pub mod presets;

pub use config::ScenarioConfig;
pub use error::{CliError, Result};
pub use presets::Command;

/// Run `command` on `cfg`, returning the lines to print on success.
pub fn execute(command: Command, cfg: &ScenarioConfig, gnuplot: bool) -> Result<Vec<String>> {
    match command {
        Command::Run => Ok(commands::cmd_run(cfg, gnuplot)?
            .into_iter()
            .map(|p| format!("wrote {}", p.display()))
            .collect()),
        Command::Sweep => Ok(vec![format!(
            "wrote {}",
            commands::cmd_sweep(cfg, gnuplot)?.display()
        )]),
        Command::Rates => Ok(vec![format!(
            "wrote {}",
            commands::cmd_rates(cfg)?.display()
        )]),
        Command::OracleCheck => {
            if cfg.trials == 0 {
                eprintln!("warning: trials = 0, nothing was compared");
            }
            let report = commands::cmd_oracle_check(cfg)?;
            if report.passed() {
                Ok(vec![report.to_string()])
            } else {
                Err(CliError::Verification(report.to_string()))
            }
        }
    }
}
