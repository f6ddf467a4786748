//! Dense state-vector simulation of the two qubits and every probe.
//!
//! Basis index layout: bit 0 is qubit `b`, bit 1 is qubit `a`, and bit
//! `2 + k` is probe `k`. So the system part is `2·a + b` (`|1,0⟩` is index 2)
//! and probe bits sit little-endian above it. This module tracks the whole
//! Hilbert space with no reduction. It is the ground truth for [`crate::engine`].

use std::io::{self, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{KickSchedule, SystemParams};
use crate::state::exchange_propagator;
use crate::trajectory::{drive, Dynamics, Sample, Trajectory};

/// Largest probe register the oracle will allocate (4·2²⁰ amplitudes).
pub const MAX_PROBES: usize = 20;

const SYS_00: usize = 0;
const SYS_01: usize = 1;
const SYS_10: usize = 2;
const SYS_11: usize = 3;
const SYS_MASK: usize = 3;
const B_BIT: usize = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct FullState {
    amplitudes: Vec<Complex64>,
    n_probes: usize,
}

impl FullState {
    /// Wrap an amplitude vector of length `4·2ⁿ`. No normalisation is applied.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>, n_probes: usize) -> Result<Self> {
        check_capacity(n_probes)?;
        if amplitudes.len() != 4 << n_probes {
            return Err(Error::InvalidArgument(format!(
                "expected {} amplitudes for {n_probes} probes, got {}",
                4 << n_probes,
                amplitudes.len()
            )));
        }
        Ok(Self {
            amplitudes,
            n_probes,
        })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn n_probes(&self) -> usize {
        self.n_probes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Total weight with the system in basis state `sys` (`2·a + b`), traced
    /// over all probe configurations.
    pub fn system_population(&self, sys: usize) -> f64 {
        self.amplitudes
            .iter()
            .skip(sys & SYS_MASK)
            .step_by(4)
            .map(|z| z.norm_sqr())
            .sum()
    }

    pub fn p10(&self) -> f64 {
        self.system_population(SYS_10)
    }

    pub fn p01(&self) -> f64 {
        self.system_population(SYS_01)
    }

    pub fn pvac(&self) -> f64 {
        self.system_population(SYS_00)
    }

    pub fn p11(&self) -> f64 {
        self.system_population(SYS_11)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &FullState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(x, y)| x.conj() * y)
            .sum()
    }

    /// Plain-text dump, one `index re im` triple per line, preceded by a
    /// comment naming the index layout. Values use 17 significant digits.
    pub fn dump<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "# index = (2*a + b) + 4*sum_k(probe_k << k); n_probes={}",
            self.n_probes
        )?;
        for (i, z) in self.amplitudes.iter().enumerate() {
            writeln!(out, "{i} {:.16e} {:.16e}", z.re, z.im)?;
        }
        Ok(())
    }
}

fn check_capacity(n_probes: usize) -> Result<()> {
    if n_probes > MAX_PROBES {
        Err(Error::Capacity {
            requested: n_probes,
            max: MAX_PROBES,
        })
    } else {
        Ok(())
    }
}

/// `|1,0⟩ ⊗ |0…0⟩` with `n_probes` probes.
pub fn oracle_init(n_probes: usize) -> Result<FullState> {
    check_capacity(n_probes)?;
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 4 << n_probes];
    amplitudes[SYS_10] = Complex64::new(1.0, 0.0);
    Ok(FullState {
        amplitudes,
        n_probes,
    })
}

/// Apply `exp(-i (H_S + H_M) dt)`.
///
/// `H_S` is block diagonal in the system factor: `|0,0⟩` has energy 0,
/// `|1,1⟩` has `eps_a + eps_b`, and `{|1,0⟩, |0,1⟩}` rotate under the
/// exchange block. `H_M` is diagonal in the probe bits.
pub fn oracle_free_step(state: &FullState, dt: f64, params: &SystemParams) -> Result<FullState> {
    if !(dt.is_finite() && dt >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "free evolution time must be finite and non-negative, got {dt}"
        )));
    }
    let u = exchange_propagator(dt, params);
    let doubly_excited = Complex64::from_polar(1.0, -(params.eps_a() + params.eps_b()) * dt);
    let n = state.n_probes;
    let mut out = state.amplitudes.clone();
    for (config, block) in out.chunks_exact_mut(4).enumerate() {
        let probe_energy: f64 = (0..n)
            .map(|k| {
                let e = params.probe_energies(k);
                if config >> k & 1 == 1 {
                    e.lambda1
                } else {
                    e.lambda0
                }
            })
            .sum();
        let phase = Complex64::from_polar(1.0, -probe_energy * dt);
        let (x10, x01) = (block[SYS_10], block[SYS_01]);
        block[SYS_00] *= phase;
        block[SYS_10] = phase * (u[0][0] * x10 + u[0][1] * x01);
        block[SYS_01] = phase * (u[1][0] * x10 + u[1][1] * x01);
        block[SYS_11] *= phase * doubly_excited;
    }
    Ok(FullState {
        amplitudes: out,
        n_probes: n,
    })
}

fn check_probe(state: &FullState, probe: usize) -> Result<()> {
    if probe >= state.n_probes {
        Err(Error::InvalidArgument(format!(
            "probe index {probe} out of range for {} probes",
            state.n_probes
        )))
    } else {
        Ok(())
    }
}

/// Index pairs `(i, j)` exchanged by `Γ⁽ᵏ⁾`: `i` has `b = 1, probe_k = 0`,
/// `j` has `b = 0, probe_k = 1`, all other bits equal.
fn gamma_pairs(n_probes: usize, probe: usize) -> impl Iterator<Item = (usize, usize)> {
    let probe_bit = 1usize << (2 + probe);
    (0..4usize << n_probes)
        .filter(move |i| i & B_BIT != 0 && i & probe_bit == 0)
        .map(move |i| (i, (i & !B_BIT) | probe_bit))
}

/// Apply `Γ⁽ᵏ⁾` itself. It is not unitary: amplitudes with `b` and probe `k`
/// both 0 or both 1 are annihilated, and `Γ²` is the projector onto the
/// exchanged pairs.
pub fn oracle_gamma(state: &FullState, probe: usize) -> Result<FullState> {
    check_probe(state, probe)?;
    let mut out = vec![Complex64::new(0.0, 0.0); state.dim()];
    for (i, j) in gamma_pairs(state.n_probes, probe) {
        out[i] = state.amplitudes[j];
        out[j] = state.amplitudes[i];
    }
    Ok(FullState {
        amplitudes: out,
        n_probes: state.n_probes,
    })
}

/// Apply `exp(-i g Γ⁽ᵏ⁾)`: a rotation `cos g − i sin g·X` on each exchanged
/// pair, identity on every other amplitude.
pub fn oracle_kick(state: &FullState, probe: usize, g: f64) -> Result<FullState> {
    check_probe(state, probe)?;
    let (s, c) = g.sin_cos();
    let mis = Complex64::new(0.0, -s);
    let mut out = state.amplitudes.clone();
    for (i, j) in gamma_pairs(state.n_probes, probe) {
        let (xi, xj) = (state.amplitudes[i], state.amplitudes[j]);
        out[i] = xi * c + mis * xj;
        out[j] = xj * c + mis * xi;
    }
    Ok(FullState {
        amplitudes: out,
        n_probes: state.n_probes,
    })
}

struct Dense<'a> {
    params: &'a SystemParams,
}

impl Dynamics for Dense<'_> {
    type State = FullState;

    fn free(&self, state: &FullState, dt: f64) -> Result<FullState> {
        oracle_free_step(state, dt, self.params)
    }

    fn kick(&self, state: &FullState, probe: usize, g: f64) -> Result<FullState> {
        oracle_kick(state, probe, g)
    }

    fn sample(&self, s: &FullState, t: f64) -> Sample {
        Sample {
            t,
            p10: s.p10(),
            p01: s.p01(),
            pvac: s.pvac(),
            norm: s.norm_sqr(),
        }
    }
}

/// Run `schedule` on the full Hilbert space, using probe `k` for the `k`-th
/// kick.
pub fn oracle_run(schedule: &KickSchedule, params: &SystemParams) -> Result<Trajectory> {
    let initial = oracle_init(schedule.kicks().len())?;
    drive(&Dense { params }, initial, schedule)
}

/// Final full state of `schedule`.
pub fn oracle_final_state(schedule: &KickSchedule, params: &SystemParams) -> Result<FullState> {
    let mut state = oracle_init(schedule.kicks().len())?;
    let mut now = 0.0;
    for (probe, kick) in schedule.kicks().iter().enumerate() {
        state = oracle_kick(
            &oracle_free_step(&state, kick.time - now, params)?,
            probe,
            kick.strength,
        )?;
        now = kick.time;
    }
    oracle_free_step(&state, schedule.total_time() - now, params)
}
