//! Rayon drivers for coverage, confirmation and sweeps.
//!
//! Samples are split into fixed-size index chunks. Each chunk fills its own
//! grid and the grids are summed, so the merged counters do not depend on
//! the number of worker threads.

use rayon::prelude::*;
use runoff_core::region::{
    accumulate_coverage, is_confirmed, relevant_region, RegionOutcome, RegionSpec,
};
use runoff_core::{
    Model, SampleStream, SupportVector, SweepParams, SweepPoint, SweepResult, TernaryCoverageGrid,
    TransitiveOracle,
};

use crate::CliError;

const CHUNK: u64 = 1 << 15;

pub fn coverage(model: Model, omega: &SupportVector, n: u64, resolution: u32, seed: u64) -> TernaryCoverageGrid {
    let stream = SampleStream::new(seed, model);
    let chunks = n.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut grid = TernaryCoverageGrid::new(resolution);
            let start = c * CHUNK;
            accumulate_coverage(&mut grid, &stream, omega, start..(start + CHUNK).min(n));
            grid
        })
        .reduce(
            || TernaryCoverageGrid::new(resolution),
            |mut a, b| {
                a.merge(&b);
                a
            },
        )
}

/// Cells whose centroid the oracle places beyond one cell diameter from all
/// transitive images, in input order.
pub fn confirm(oracle: &TransitiveOracle, grid: &TernaryCoverageGrid, cells: &[usize]) -> Vec<usize> {
    cells
        .par_iter()
        .copied()
        .filter(|&c| is_confirmed(oracle, grid, c))
        .collect()
}

pub fn region(spec: &RegionSpec) -> Result<RegionOutcome, CliError> {
    spec.validate()?;
    let grid = coverage(spec.model, &spec.omega, spec.n, spec.resolution, spec.seed);
    let raw = relevant_region(&grid, spec.min_hits);
    let confirmed = spec.oracle.then(|| {
        let oracle = TransitiveOracle::new(spec.model, spec.omega);
        confirm(&oracle, &grid, &raw.cells)
    });
    Ok(RegionOutcome::assemble(spec, grid, raw, confirmed))
}

/// Evaluates every rung of the ladder. The critical value may be absent.
pub fn sweep(params: &SweepParams) -> Result<SweepResult, CliError> {
    params.validate()?;
    let mut points = Vec::new();
    for omega2 in params.ladder() {
        let out = region(&params.region_spec(omega2)?)?;
        points.push(SweepPoint {
            omega2,
            raw_fraction: out.report.fractions.relevant_raw,
            confirmed_fraction: out.report.fractions.relevant_confirmed,
        });
    }
    Ok(SweepResult::from_points(points, params.area_threshold, params.step))
}

/// Runs `f` on a pool of `workers` threads, or on the global pool for `None`.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(CliError::InvalidArgument("worker count must be positive".into())),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| CliError::InvalidArgument(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}
