//! Coverage of the elimination simplex by strategy class.
//!
//! For a fixed support vector every sampled strategy is inverted to the
//! elimination distribution that realises it. Feasible results are binned
//! into a [`TernaryCoverageGrid`]; cells hit by intransitive strategies but
//! never by transitive ones form the *relevant* region, which
//! [`TransitiveOracle`] then confirms point by point.

mod grid;
mod oracle;
mod sweep;

use alloc::vec::Vec;
use core::ops::Range;

use serde::{Deserialize, Serialize};

use crate::election::{EliminationDistribution, SupportVector};
use crate::sampling::{Model, SampleStream};
use crate::{Error, Result};

pub use grid::{CellCoord, CellCounts, TernaryCoverageGrid};
pub use oracle::{nearest_transitive_distance, TransitiveOracle, REFINEMENT_TOLERANCE};
pub use sweep::{critical_omega2, critical_support_sweep, SweepParams, SweepPoint, SweepResult};

/// Coordinates in the plane of the triangle `V0 = (0,0)`, `V1 = (1,0)`,
/// `V2 = (1/2, √3/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub fn distance(&self, other: &Self) -> f64 {
        libm::hypot(self.x - other.x, self.y - other.y)
    }
}

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

pub(crate) fn project_unchecked(q: &EliminationDistribution) -> PlanarPoint {
    PlanarPoint {
        x: q.q1 + 0.5 * q.q2,
        y: HALF_SQRT3 * q.q2,
    }
}

pub fn project_to_ternary(q: &EliminationDistribution) -> Result<PlanarPoint> {
    let q = EliminationDistribution::new(q.q0, q.q1, q.q2)?;
    if !q.is_feasible() {
        return Err(Error::Infeasible);
    }
    Ok(project_unchecked(&q))
}

/// Bins samples `range` of `stream` into `grid`.
pub fn accumulate_coverage(
    grid: &mut TernaryCoverageGrid,
    stream: &SampleStream,
    omega: &SupportVector,
    range: Range<u64>,
) {
    for sample in stream.samples(range) {
        grid.record_strategy(&sample.strategy, omega);
    }
}

pub fn build_coverage(
    model: Model,
    omega: &SupportVector,
    n: u64,
    resolution: u32,
    seed: u64,
) -> Result<TernaryCoverageGrid> {
    if n == 0 {
        return Err(Error::InvalidParameter("sample count must be positive"));
    }
    if resolution == 0 {
        return Err(Error::InvalidParameter("grid resolution must be positive"));
    }
    let mut grid = TernaryCoverageGrid::new(resolution);
    accumulate_coverage(&mut grid, &SampleStream::new(seed, model), omega, 0..n);
    Ok(grid)
}

/// Cells reached only by intransitive strategies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelevantRegion {
    pub cells: Vec<usize>,
    pub fraction: f64,
}

pub fn relevant_region(grid: &TernaryCoverageGrid, min_hits: u32) -> RelevantRegion {
    let cells: Vec<usize> = grid
        .cells()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.intransitive >= min_hits && c.transitive_side() == 0)
        .map(|(i, _)| i)
        .collect();
    let fraction = cells.len() as f64 / grid.cell_count() as f64;
    RelevantRegion { cells, fraction }
}

/// A raw relevant cell is confirmed when its centroid lies more than one
/// cell diameter from every transitive image.
pub fn is_confirmed(oracle: &TransitiveOracle, grid: &TernaryCoverageGrid, cell: usize) -> bool {
    oracle.distance(&grid.centroid(cell)) > grid.cell_diameter()
}

pub fn confirm_cells(oracle: &TransitiveOracle, grid: &TernaryCoverageGrid, cells: &[usize]) -> Vec<usize> {
    cells
        .iter()
        .copied()
        .filter(|&c| is_confirmed(oracle, grid, c))
        .collect()
}

/// Parameters of one coverage experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub model: Model,
    pub omega: SupportVector,
    pub n: u64,
    pub resolution: u32,
    pub seed: u64,
    pub min_hits: u32,
    pub oracle: bool,
}

impl RegionSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("sample count must be positive"));
        }
        if self.resolution == 0 {
            return Err(Error::InvalidParameter("grid resolution must be positive"));
        }
        let w = self.omega;
        SupportVector::new(w.omega0, w.omega1, w.omega2)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaFractions {
    pub any: f64,
    pub transitive: f64,
    pub intransitive: f64,
    pub relevant_raw: f64,
    pub relevant_confirmed: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellTally {
    pub any: usize,
    pub transitive: usize,
    pub intransitive: usize,
    pub relevant_raw: usize,
    pub relevant_confirmed: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleTally {
    pub in_grid: u64,
    pub infeasible: u64,
    pub singular: u64,
}

/// Summary of one coverage experiment. Fractions are of the whole triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionReport {
    pub model: Model,
    pub omega: SupportVector,
    pub n: u64,
    pub resolution: u32,
    pub seed: u64,
    pub min_hits: u32,
    pub fractions: AreaFractions,
    pub cells: CellTally,
    pub samples: SampleTally,
}

impl RegionReport {
    /// Confirmed fraction when the oracle ran, raw fraction otherwise.
    pub fn relevant_fraction(&self) -> f64 {
        self.fractions
            .relevant_confirmed
            .unwrap_or(self.fractions.relevant_raw)
    }
}

/// Grid, relevant cells and report of one experiment.
#[derive(Debug, Clone)]
pub struct RegionOutcome {
    pub grid: TernaryCoverageGrid,
    pub raw: RelevantRegion,
    pub confirmed: Option<Vec<usize>>,
    pub report: RegionReport,
}

impl RegionOutcome {
    pub fn assemble(
        spec: &RegionSpec,
        grid: TernaryCoverageGrid,
        raw: RelevantRegion,
        confirmed: Option<Vec<usize>>,
    ) -> Self {
        let total = grid.cell_count() as f64;
        let count = |pred: &dyn Fn(&CellCounts) -> bool| grid.cells().iter().filter(|c| pred(c)).count();
        let cells = CellTally {
            any: count(&|c| c.total() > 0),
            transitive: count(&|c| c.transitive_side() > 0),
            intransitive: count(&|c| c.intransitive > 0),
            relevant_raw: raw.cells.len(),
            relevant_confirmed: confirmed.as_ref().map(Vec::len),
        };
        let fractions = AreaFractions {
            any: cells.any as f64 / total,
            transitive: cells.transitive as f64 / total,
            intransitive: cells.intransitive as f64 / total,
            relevant_raw: raw.fraction,
            relevant_confirmed: cells.relevant_confirmed.map(|c| c as f64 / total),
        };
        let report = RegionReport {
            model: spec.model,
            omega: spec.omega,
            n: spec.n,
            resolution: spec.resolution,
            seed: spec.seed,
            min_hits: spec.min_hits,
            fractions,
            cells,
            samples: SampleTally {
                in_grid: grid.in_grid_hits(),
                infeasible: grid.infeasible(),
                singular: grid.singular(),
            },
        };
        Self {
            grid,
            raw,
            confirmed,
            report,
        }
    }
}

/// Runs a full experiment on the current thread.
pub fn analyze_region(spec: &RegionSpec) -> Result<RegionOutcome> {
    spec.validate()?;
    let grid = build_coverage(spec.model, &spec.omega, spec.n, spec.resolution, spec.seed)?;
    let raw = relevant_region(&grid, spec.min_hits);
    let confirmed = spec.oracle.then(|| {
        let oracle = TransitiveOracle::new(spec.model, spec.omega);
        confirm_cells(&oracle, &grid, &raw.cells)
    });
    Ok(RegionOutcome::assemble(spec, grid, raw, confirmed))
}
