//! Experiment configurations. Each one is echoed verbatim into the JSON
//! document it produces so a run can be replayed from its output.

use runoff_core::region::RegionSpec;
use runoff_core::{Model, SupportVector, SweepParams};
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = runoff_core::sampling::DEFAULT_SEED;
pub const DEFAULT_MAP_SAMPLES: u64 = 10_000;
pub const DEFAULT_REGION_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_GRID: u32 = 120;
pub const DEFAULT_MIN_HITS: u32 = 3;
pub const DEFAULT_AREA_THRESHOLD: f64 = 0.001;
pub const DEFAULT_SWEEP_FROM: f64 = 1.0 / 3.0;
pub const DEFAULT_SWEEP_TO: f64 = 0.60;
pub const DEFAULT_SWEEP_STEP: f64 = 0.005;

fn support(omega: [f64; 3]) -> runoff_core::Result<SupportVector> {
    SupportVector::new(omega[0], omega[1], omega[2])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MapConfig {
    pub model: Model,
    pub omega: [f64; 3],
    pub n: u64,
    pub seed: u64,
}

impl MapConfig {
    pub fn support(&self) -> runoff_core::Result<SupportVector> {
        support(self.omega)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionConfig {
    pub model: Model,
    pub omega: [f64; 3],
    pub n: u64,
    pub grid: u32,
    pub seed: u64,
    pub min_hits: u32,
    pub area_threshold: f64,
    pub oracle: bool,
}

impl RegionConfig {
    /// Defaults for the given model and support.
    pub fn new(model: Model, omega: SupportVector) -> Self {
        Self {
            model,
            omega: omega.as_array(),
            n: DEFAULT_REGION_SAMPLES,
            grid: DEFAULT_GRID,
            seed: DEFAULT_SEED,
            min_hits: DEFAULT_MIN_HITS,
            area_threshold: DEFAULT_AREA_THRESHOLD,
            oracle: true,
        }
    }

    pub fn spec(&self) -> runoff_core::Result<RegionSpec> {
        if !(0.0..=1.0).contains(&self.area_threshold) {
            return Err(runoff_core::Error::InvalidParameter("area threshold must lie in [0, 1]"));
        }
        let spec = RegionSpec {
            model: self.model,
            omega: support(self.omega)?,
            n: self.n,
            resolution: self.grid,
            seed: self.seed,
            min_hits: self.min_hits,
            oracle: self.oracle,
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub model: Model,
    pub omega2_from: f64,
    pub omega2_to: f64,
    pub step: f64,
    pub n: u64,
    pub grid: u32,
    pub seed: u64,
    pub min_hits: u32,
    pub area_threshold: f64,
    pub oracle: bool,
}

impl SweepConfig {
    pub fn new(model: Model) -> Self {
        Self {
            model,
            omega2_from: DEFAULT_SWEEP_FROM,
            omega2_to: DEFAULT_SWEEP_TO,
            step: DEFAULT_SWEEP_STEP,
            n: DEFAULT_REGION_SAMPLES,
            grid: DEFAULT_GRID,
            seed: DEFAULT_SEED,
            min_hits: DEFAULT_MIN_HITS,
            area_threshold: DEFAULT_AREA_THRESHOLD,
            oracle: true,
        }
    }

    pub fn params(&self) -> runoff_core::Result<SweepParams> {
        let params = SweepParams {
            model: self.model,
            omega2_from: self.omega2_from,
            omega2_to: self.omega2_to,
            step: self.step,
            n: self.n,
            resolution: self.grid,
            min_hits: self.min_hits,
            area_threshold: self.area_threshold,
            oracle: self.oracle,
            seed: self.seed,
        };
        params.validate()?;
        Ok(params)
    }
}
