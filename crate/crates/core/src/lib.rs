//! Quantum Zeno dynamics of two coupled qubits under instantaneous probe kicks.
//!
//! Qubit `a` and qubit `b` exchange a single excitation at coupling `G`.
//! Qubit `b` is repeatedly kicked by fresh two-level probes with strength
//! `g`; each kick is the unitary `exp(-i g Γ)` where `Γ` swaps
//! `|1_b, 0_probe⟩ ↔ |0_b, 1_probe⟩`.
//!
//! Three computation paths are provided and cross-check each other:
//!
//! * [`engine`]: the O(N) reduced simulation on the two single-excitation
//!   amplitudes plus a scalar leaked population.
//! * [`oracle`]: a dense state vector over the two qubits and every probe.
//! * [`analytics`]: closed-form transition rates on resonance, together with
//!   a finite-difference instrument that measures them from the engine.

pub mod analytics;
pub mod engine;
mod error;
pub mod oracle;
mod params;
mod state;
mod trajectory;

pub use error::{Error, Result};
pub use params::{Kick, KickSchedule, ProbeEnergies, SystemParams};
pub use state::{apply_kick, free_propagate, information_measure, ReducedState};
pub use trajectory::{Sample, Trajectory};

pub use num_complex::Complex64;
