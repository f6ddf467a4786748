use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::SystemParams;

/// System state restricted to the sectors reachable from `|1,0⟩`.
///
/// `a` and `b` are the amplitudes on `|1,0⟩` and `|0,1⟩` with every probe
/// still in `|0_M⟩`. `v` is the total population parked on the branches
/// `|0,0⟩ ⊗ |1_M^(k)⟩`: those branches carry orthogonal probe flags and the
/// vacuum is stationary, so only their summed weight matters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedState {
    pub a: Complex64,
    pub b: Complex64,
    pub v: f64,
}

impl ReducedState {
    /// `|1,0⟩|0_M⟩`.
    pub fn initial() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            v: 0.0,
        }
    }

    pub fn new(a: Complex64, b: Complex64, v: f64) -> Self {
        Self { a, b, v }
    }

    pub fn p10(&self) -> f64 {
        self.a.norm_sqr()
    }

    pub fn p01(&self) -> f64 {
        self.b.norm_sqr()
    }

    pub fn pvac(&self) -> f64 {
        self.v
    }

    pub fn norm(&self) -> f64 {
        self.p10() + self.p01() + self.v
    }
}

impl Default for ReducedState {
    fn default() -> Self {
        Self::initial()
    }
}

/// `exp(-i H dt)` for `H = [[eps_a, G], [G, eps_b]]` on `(|1,0⟩, |0,1⟩)`.
///
/// Writing `H = m·I + d·σz + G·σx` with `Ω = sqrt(d² + G²)`:
/// `U = e^{-i m dt} (cos(Ω dt) I − i sin(Ω dt)/Ω (d σz + G σx))`.
pub(crate) fn exchange_propagator(dt: f64, params: &SystemParams) -> [[Complex64; 2]; 2] {
    let mean = 0.5 * (params.eps_a() + params.eps_b());
    let half_detuning = 0.5 * (params.eps_a() - params.eps_b());
    let coupling = params.coupling();
    let omega = half_detuning.hypot(coupling);
    let (s, c) = (omega * dt).sin_cos();
    let sz = half_detuning / omega * s;
    let sx = coupling / omega * s;
    let phase = Complex64::from_polar(1.0, -mean * dt);
    [
        [
            phase * Complex64::new(c, -sz),
            phase * Complex64::new(0.0, -sx),
        ],
        [
            phase * Complex64::new(0.0, -sx),
            phase * Complex64::new(c, sz),
        ],
    ]
}

/// Free evolution for `dt` under the two-qubit Hamiltonian.
///
/// `|0,0⟩` is a zero-energy eigenstate, so the leaked population is untouched.
pub fn free_propagate(state: ReducedState, dt: f64, params: &SystemParams) -> Result<ReducedState> {
    if !(dt.is_finite() && dt >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "free evolution time must be finite and non-negative, got {dt}"
        )));
    }
    let u = exchange_propagator(dt, params);
    Ok(ReducedState {
        a: u[0][0] * state.a + u[0][1] * state.b,
        b: u[1][0] * state.a + u[1][1] * state.b,
        v: state.v,
    })
}

/// Kick with a fresh probe in `|0_M⟩`: `a` is untouched, `b` keeps the
/// `cos g` part and the `sin g` part leaks to the vacuum branch.
pub fn apply_kick(state: ReducedState, g: f64) -> ReducedState {
    let (s, c) = g.sin_cos();
    ReducedState {
        a: state.a,
        b: state.b * c,
        v: state.v + state.b.norm_sqr() * s * s,
    }
}

/// Which-way information a kick of strength `g` writes into its probe:
/// `1 − |cos g|`. Zero for `g = 0, π` (no entanglement), one for `g = π/2`.
pub fn information_measure(g: f64) -> f64 {
    1.0 - g.cos().abs()
}
