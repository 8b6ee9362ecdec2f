use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{analyze_region, RegionSpec};
use crate::election::SupportVector;
use crate::sampling::Model;
use crate::{Error, Result};

/// Ladder of leader supports `ω2` with `ω0 = ω1 = (1 - ω2)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepParams {
    pub model: Model,
    pub omega2_from: f64,
    pub omega2_to: f64,
    pub step: f64,
    pub n: u64,
    pub resolution: u32,
    pub min_hits: u32,
    pub area_threshold: f64,
    pub oracle: bool,
    pub seed: u64,
}

impl SweepParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0) || !self.step.is_finite() {
            return Err(Error::InvalidParameter("sweep step must be positive"));
        }
        if !(self.omega2_from >= 1.0 / 3.0 - 1e-12 && self.omega2_from < self.omega2_to && self.omega2_to <= 1.0) {
            return Err(Error::InvalidParameter("sweep range must satisfy 1/3 <= from < to <= 1"));
        }
        if !(0.0..=1.0).contains(&self.area_threshold) {
            return Err(Error::InvalidParameter("area threshold must lie in [0, 1]"));
        }
        self.region_spec(self.omega2_from)?.validate()
    }

    /// `from + k·step` for every `k` that stays within `to`.
    pub fn ladder(&self) -> Vec<f64> {
        let slack = self.step * 1e-9;
        (0u64..)
            .map(|k| self.omega2_from + k as f64 * self.step)
            .take_while(|&w| w <= self.omega2_to + slack)
            .map(|w| w.min(1.0))
            .collect()
    }

    pub fn region_spec(&self, omega2: f64) -> Result<RegionSpec> {
        Ok(RegionSpec {
            model: self.model,
            omega: SupportVector::with_leader(omega2)?,
            n: self.n,
            resolution: self.resolution,
            seed: self.seed,
            min_hits: self.min_hits,
            oracle: self.oracle,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub omega2: f64,
    pub raw_fraction: f64,
    pub confirmed_fraction: Option<f64>,
}

impl SweepPoint {
    pub fn fraction(&self) -> f64 {
        self.confirmed_fraction.unwrap_or(self.raw_fraction)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub points: Vec<SweepPoint>,
    pub area_threshold: f64,
    pub step: f64,
    pub critical_omega2: Option<f64>,
}

impl SweepResult {
    pub fn from_points(points: Vec<SweepPoint>, area_threshold: f64, step: f64) -> Self {
        let critical_omega2 = critical_omega2(&points, area_threshold);
        Self {
            points,
            area_threshold,
            step,
            critical_omega2,
        }
    }

    pub fn critical(&self) -> Result<f64> {
        self.critical_omega2.ok_or(Error::NoVanishingFound {
            threshold: self.area_threshold,
        })
    }
}

/// First `ω2` from which every tested fraction stays below `threshold`.
pub fn critical_omega2(points: &[SweepPoint], threshold: f64) -> Option<f64> {
    let tail = points
        .iter()
        .rev()
        .take_while(|p| p.fraction() < threshold)
        .count();
    if tail == 0 {
        None
    } else {
        Some(points[points.len() - tail].omega2)
    }
}

/// Runs the whole sweep on the current thread.
pub fn critical_support_sweep(params: &SweepParams) -> Result<SweepResult> {
    params.validate()?;
    let mut points = Vec::new();
    for omega2 in params.ladder() {
        let out = analyze_region(&params.region_spec(omega2)?)?;
        points.push(SweepPoint {
            omega2,
            raw_fraction: out.report.fractions.relevant_raw,
            confirmed_fraction: out.report.fractions.relevant_confirmed,
        });
    }
    let result = SweepResult::from_points(points, params.area_threshold, params.step);
    result.critical()?;
    Ok(result)
}
