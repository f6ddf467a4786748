//! CSV rendering and atomic file writes.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use zeno_core::engine::SweepRow;
use zeno_core::Trajectory;

use crate::error::{CliError, Result};

/// 17 significant digits, enough to round-trip any `f64`.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut out = String::from("t,p10,p01,pvac,norm\n");
    for s in traj {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            real(s.t),
            real(s.p10),
            real(s.p01),
            real(s.pvac),
            real(s.norm)
        );
    }
    out
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("g,N,p10,p01,pvac\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            real(r.g),
            r.n,
            real(r.p10),
            real(r.p01),
            real(r.pvac)
        );
    }
    out
}

/// Write `contents` to `path` through a temporary file in the same directory,
/// so a failed write never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

/// `dir/stem_<suffix>.ext` next to `path`.
pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{suffix}"),
    };
    path.with_file_name(name)
}

/// gnuplot script plotting `p10` against `t` for each trajectory file.
pub fn gnuplot_trajectories(files: &[(f64, PathBuf)]) -> String {
    let mut out = String::from(
        "set datafile separator ','\nset key autotitle columnhead\nset xlabel 't'\nset ylabel 'P10'\nplot \\\n",
    );
    let lines: Vec<String> = files
        .iter()
        .map(|(g, p)| format!("  '{}' using 1:2 with lines title 'g={g:.4}'", file_name(p)))
        .collect();
    out.push_str(&lines.join(", \\\n"));
    out.push('\n');
    out
}

/// gnuplot script plotting `p10` against `N`, one curve per `g`.
pub fn gnuplot_sweep(csv: &Path, g_values: &[f64]) -> String {
    let mut out =
        String::from("set datafile separator ','\nset xlabel 'N'\nset ylabel 'P10'\nplot \\\n");
    let lines: Vec<String> = g_values
        .iter()
        .map(|g| {
            format!(
                "  '{}' every ::1 using 2:(abs($1 - {}) < 1e-12 ? $3 : 1/0) with linespoints title 'g={g:.4}'",
                file_name(csv),
                real(*g)
            )
        })
        .collect();
    out.push_str(&lines.join(", \\\n"));
    out.push('\n');
    out
}

fn file_name(p: &Path) -> String {
    p.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}
