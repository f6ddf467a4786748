use crate::error::Result;
use crate::params::KickSchedule;

/// Populations recorded at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub p10: f64,
    pub p01: f64,
    pub pvac: f64,
    pub norm: f64,
}

/// Time-ordered samples of a run.
///
/// `t` is non-decreasing but not strictly increasing: every kick contributes a
/// pre-kick and a post-kick record at the same `t`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Trajectory {
    samples: Vec<Sample>,
}

impl Trajectory {
    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// The state at `T` after every kick has been applied.
    pub fn last(&self) -> Option<&Sample> {
        self.samples.last()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sample> {
        self.samples.iter()
    }

    pub fn max_norm_deviation(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| (s.norm - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

impl<'a> IntoIterator for &'a Trajectory {
    type Item = &'a Sample;
    type IntoIter = std::slice::Iter<'a, Sample>;

    fn into_iter(self) -> Self::IntoIter {
        self.samples.iter()
    }
}

/// A state representation that can be driven through a kick schedule.
pub(crate) trait Dynamics {
    type State;

    fn free(&self, state: &Self::State, dt: f64) -> Result<Self::State>;
    fn kick(&self, state: &Self::State, probe: usize, g: f64) -> Result<Self::State>;
    fn sample(&self, state: &Self::State, t: f64) -> Sample;
}

/// Alternate free evolution and kicks, recording the uniform grid plus a
/// pre/post pair at each kick. Grid points that coincide with a kick are
/// covered by the kick's pair.
///
/// Every sample is propagated from the state right after the most recent
/// kick, so round-off does not accumulate across grid points.
pub(crate) fn drive<D: Dynamics>(
    dynamics: &D,
    initial: D::State,
    schedule: &KickSchedule,
) -> Result<Trajectory> {
    let grid = schedule.grid();
    let mut samples = Vec::with_capacity(grid.len() + 2 * schedule.kicks().len());
    let mut anchor = initial;
    let mut anchor_t = 0.0;
    let mut next = 0;

    for (probe, kick) in schedule.kicks().iter().enumerate() {
        while next < grid.len() && grid[next] < kick.time {
            let s = dynamics.free(&anchor, grid[next] - anchor_t)?;
            samples.push(dynamics.sample(&s, grid[next]));
            next += 1;
        }
        while next < grid.len() && grid[next] == kick.time {
            next += 1;
        }
        let pre = dynamics.free(&anchor, kick.time - anchor_t)?;
        samples.push(dynamics.sample(&pre, kick.time));
        anchor = dynamics.kick(&pre, probe, kick.strength)?;
        anchor_t = kick.time;
        samples.push(dynamics.sample(&anchor, kick.time));
    }
    for &t in &grid[next..] {
        let s = dynamics.free(&anchor, t - anchor_t)?;
        samples.push(dynamics.sample(&s, t));
    }
    Ok(Trajectory { samples })
}
