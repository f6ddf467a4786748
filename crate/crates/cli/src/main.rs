use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zeno_cli::{execute, presets, CliError, Command, ScenarioConfig};

#[derive(Parser)]
#[command(
    name = "zeno",
    version,
    about = "Zeno dynamics of two coupled qubits under probe kicks"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Simulate trajectories and write `t,p10,p01,pvac,norm` CSV.
    Run {
        config: PathBuf,
        /// Also write a gnuplot script next to the output.
        #[arg(long)]
        gnuplot: bool,
    },
    /// Final populations over a (g, N) grid as `g,N,p10,p01,pvac` CSV.
    Sweep {
        config: PathBuf,
        #[arg(long)]
        gnuplot: bool,
    },
    /// Compare the reduced engine against the full state-vector oracle.
    OracleCheck { config: PathBuf },
    /// Compare closed-form rates against finite differences.
    Rates { config: PathBuf },
    /// Run a built-in scenario: fig1, fig2, fig4, rates, oracle-check.
    Preset {
        name: String,
        /// Directory for output files.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long)]
        gnuplot: bool,
        /// Print the preset's config instead of running it.
        #[arg(long)]
        print: bool,
    },
}

fn load(path: &PathBuf) -> Result<ScenarioConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    ScenarioConfig::parse(&text)
}

fn dispatch(cli: Cli) -> Result<Vec<String>, CliError> {
    match cli.command {
        Cmd::Run { config, gnuplot } => execute(Command::Run, &load(&config)?, gnuplot),
        Cmd::Sweep { config, gnuplot } => execute(Command::Sweep, &load(&config)?, gnuplot),
        Cmd::OracleCheck { config } => execute(Command::OracleCheck, &load(&config)?, false),
        Cmd::Rates { config } => execute(Command::Rates, &load(&config)?, false),
        Cmd::Preset {
            name,
            out_dir,
            gnuplot,
            print,
        } => {
            let preset = presets::find(&name)?;
            if print {
                return Ok(vec![preset.config.trim_end().to_string()]);
            }
            execute(preset.command, &presets::load(preset, &out_dir)?, gnuplot)
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                CliError::Verification(msg) => println!("{msg}"),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
