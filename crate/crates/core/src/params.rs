use crate::error::{Error, Result};

/// Eigenenergies of one probe: `lambda1` for `|1_M⟩`, `lambda0` for `|0_M⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ProbeEnergies {
    pub lambda1: f64,
    pub lambda0: f64,
}

/// Physical constants of the two-qubit system (ħ = 1).
///
/// Energies are angular frequencies. Probe energies only contribute phases to
/// mutually orthogonal branches, so they never change a population; they are
/// kept so the full state-vector path evolves under the complete Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    coupling: f64,
    eps_a: f64,
    eps_b: f64,
    probes: Vec<ProbeEnergies>,
}

impl SystemParams {
    pub fn new(coupling: f64, eps_a: f64, eps_b: f64) -> Result<Self> {
        if !(coupling.is_finite() && coupling > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "coupling G must be positive and finite, got {coupling}"
            )));
        }
        if !eps_a.is_finite() || !eps_b.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "qubit energies must be finite, got eps_a={eps_a}, eps_b={eps_b}"
            )));
        }
        Ok(Self {
            coupling,
            eps_a,
            eps_b,
            probes: Vec::new(),
        })
    }

    /// Degenerate qubits (`eps_a = eps_b = 0`) at coupling `G`.
    pub fn resonant(coupling: f64) -> Result<Self> {
        Self::new(coupling, 0.0, 0.0)
    }

    /// Per-probe energies, indexed by kick order. Probes past the end of the
    /// list have zero energies.
    pub fn with_probe_energies(mut self, probes: Vec<ProbeEnergies>) -> Result<Self> {
        if probes
            .iter()
            .any(|p| !p.lambda0.is_finite() || !p.lambda1.is_finite())
        {
            return Err(Error::InvalidArgument(
                "probe energies must be finite".into(),
            ));
        }
        self.probes = probes;
        Ok(self)
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    pub fn eps_a(&self) -> f64 {
        self.eps_a
    }

    pub fn eps_b(&self) -> f64 {
        self.eps_b
    }

    pub fn probe_energies(&self, k: usize) -> ProbeEnergies {
        self.probes.get(k).copied().unwrap_or_default()
    }

    pub fn is_resonant(&self) -> bool {
        self.eps_a == self.eps_b
    }
}

impl Default for SystemParams {
    fn default() -> Self {
        Self {
            coupling: 1.0,
            eps_a: 0.0,
            eps_b: 0.0,
            probes: Vec::new(),
        }
    }
}

/// A single instantaneous interaction with a fresh probe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kick {
    pub time: f64,
    /// Kick strength `g` in radians.
    pub strength: f64,
}

/// Kick times and strengths over a window `[0, total_time]`, plus the number
/// of uniform trajectory samples to record.
///
/// Kick times are non-decreasing. Coincident kicks are allowed and are applied
/// back to back, each with its own probe.
#[derive(Debug, Clone, PartialEq)]
pub struct KickSchedule {
    kicks: Vec<Kick>,
    total_time: f64,
    samples: usize,
}

impl KickSchedule {
    pub fn new(kicks: Vec<Kick>, total_time: f64, samples: usize) -> Result<Self> {
        if !(total_time.is_finite() && total_time >= 0.0) {
            return Err(Error::InvalidSchedule(format!(
                "total time must be finite and non-negative, got {total_time}"
            )));
        }
        let mut prev = 0.0;
        for (k, kick) in kicks.iter().enumerate() {
            if !kick.strength.is_finite() {
                return Err(Error::InvalidSchedule(format!(
                    "kick {k} has non-finite strength"
                )));
            }
            if !(kick.time >= 0.0 && kick.time <= total_time) {
                return Err(Error::InvalidSchedule(format!(
                    "kick {k} at t={} lies outside [0, {total_time}]",
                    kick.time
                )));
            }
            if kick.time < prev {
                return Err(Error::InvalidSchedule(format!(
                    "kick {k} at t={} precedes the previous kick at t={prev}",
                    kick.time
                )));
            }
            prev = kick.time;
        }
        Ok(Self {
            kicks,
            total_time,
            samples,
        })
    }

    /// No kicks at all.
    pub fn free(total_time: f64, samples: usize) -> Result<Self> {
        Self::new(Vec::new(), total_time, samples)
    }

    /// `n` kicks of strength `g` at `k·T/n` for `k = 1..=n`; the last kick
    /// lands exactly on `total_time`.
    pub fn equally_spaced(n: usize, g: f64, total_time: f64, samples: usize) -> Result<Self> {
        let kicks = (1..=n)
            .map(|k| Kick {
                time: if k == n {
                    total_time
                } else {
                    total_time * k as f64 / n as f64
                },
                strength: g,
            })
            .collect();
        Self::new(kicks, total_time, samples)
    }

    pub fn kicks(&self) -> &[Kick] {
        &self.kicks
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    /// Number of uniform samples over `[0, T]`, endpoints included.
    pub fn samples(&self) -> usize {
        self.samples
    }

    /// Uniform sample times, always containing both `0` and `T`.
    pub(crate) fn grid(&self) -> Vec<f64> {
        let n = self.samples.max(2);
        let last = n - 1;
        (0..n)
            .map(|i| {
                if i == last {
                    self.total_time
                } else {
                    self.total_time * i as f64 / last as f64
                }
            })
            .collect()
    }
}
