use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::election::{invert_raw, EliminationDistribution, Strategy, SupportVector};
use crate::preference::{classify_strategy, Classification};

/// Hit counters of one small triangle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCounts {
    pub transitive: u32,
    pub intransitive: u32,
    pub boundary: u32,
}

impl CellCounts {
    /// Hits by strategies that are transitive or on a tie boundary.
    pub fn transitive_side(&self) -> u32 {
        self.transitive + self.boundary
    }

    pub fn total(&self) -> u32 {
        self.transitive + self.intransitive + self.boundary
    }

    fn add(&mut self, other: &Self) {
        self.transitive += other.transitive;
        self.intransitive += other.intransitive;
        self.boundary += other.boundary;
    }
}

/// Position of a cell in the barycentric lattice.
///
/// Lattice coordinates are `(a, b) = (q1 R, q2 R)`. An upward cell has
/// corners `(i, j)`, `(i+1, j)`, `(i, j+1)`; a downward one `(i+1, j)`,
/// `(i+1, j+1)`, `(i, j+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellCoord {
    pub i: u32,
    pub j: u32,
    pub downward: bool,
}

/// The simplex split into `R²` small triangles by the lines `q_k = m / R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryCoverageGrid {
    resolution: u32,
    cells: Vec<CellCounts>,
    infeasible: u64,
    singular: u64,
}

impl TernaryCoverageGrid {
    /// `resolution` must be at least 1.
    pub fn new(resolution: u32) -> Self {
        assert!(resolution >= 1, "grid resolution must be positive");
        let r = resolution as usize;
        Self {
            resolution,
            cells: vec![CellCounts::default(); r * r],
            infeasible: 0,
            singular: 0,
        }
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }

    pub fn cells(&self) -> &[CellCounts] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn infeasible(&self) -> u64 {
        self.infeasible
    }

    pub fn singular(&self) -> u64 {
        self.singular
    }

    pub fn in_grid_hits(&self) -> u64 {
        self.cells.iter().map(|c| c.total() as u64).sum()
    }

    /// In-grid hits plus both kinds of discards.
    pub fn total_samples(&self) -> u64 {
        self.in_grid_hits() + self.infeasible + self.singular
    }

    /// Side length of a small triangle in the unit-side plane.
    pub fn cell_diameter(&self) -> f64 {
        1.0 / self.resolution as f64
    }

    fn row_offset(&self, j: u32) -> usize {
        let (r, j) = (self.resolution as usize, j as usize);
        2 * r * j - j * j
    }

    pub fn index_of(&self, coord: CellCoord) -> usize {
        self.row_offset(coord.j) + 2 * coord.i as usize + coord.downward as usize
    }

    pub fn coord_of(&self, index: usize) -> CellCoord {
        assert!(index < self.cells.len(), "cell index out of range");
        let r = self.resolution;
        let mut j = 0;
        while j + 1 < r && self.row_offset(j + 1) <= index {
            j += 1;
        }
        let within = index - self.row_offset(j);
        CellCoord {
            i: (within / 2) as u32,
            j,
            downward: within % 2 == 1,
        }
    }

    /// Cell containing a point of the simplex. Only `q1` and `q2` are read.
    pub fn cell_of(&self, q: &EliminationDistribution) -> usize {
        let r = self.resolution as f64;
        let last = self.resolution - 1;
        let a = (q.q1 * r).clamp(0.0, r);
        let b = (q.q2 * r).clamp(0.0, r);
        let j = (libm::floor(b) as u32).min(last);
        let i = (libm::floor(a) as u32).min(last - j);
        let frac = (a - i as f64) + (b - j as f64);
        let downward = frac > 1.0 && i + j + 1 < self.resolution;
        self.index_of(CellCoord { i, j, downward })
    }

    /// Corners of a cell as elimination distributions.
    pub fn cell_vertices(&self, index: usize) -> [EliminationDistribution; 3] {
        let c = self.coord_of(index);
        let r = self.resolution as f64;
        let at = |a: u32, b: u32| {
            let (q1, q2) = (a as f64 / r, b as f64 / r);
            EliminationDistribution::unchecked(1.0 - q1 - q2, q1, q2)
        };
        let (i, j) = (c.i, c.j);
        if c.downward {
            [at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)]
        } else {
            [at(i, j), at(i + 1, j), at(i, j + 1)]
        }
    }

    pub fn centroid(&self, index: usize) -> EliminationDistribution {
        let c = self.coord_of(index);
        let r = self.resolution as f64;
        let shift = if c.downward { 2.0 / 3.0 } else { 1.0 / 3.0 };
        let q1 = (c.i as f64 + shift) / r;
        let q2 = (c.j as f64 + shift) / r;
        EliminationDistribution::unchecked(1.0 - q1 - q2, q1, q2)
    }

    /// Bins a feasible elimination distribution under a class.
    pub fn record(&mut self, class: Classification, q: &EliminationDistribution) {
        let idx = self.cell_of(q);
        let cell = &mut self.cells[idx];
        match class {
            Classification::Transitive(_) => cell.transitive += 1,
            Classification::Intransitive(_) => cell.intransitive += 1,
            Classification::Boundary => cell.boundary += 1,
        }
    }

    /// Classifies and inverts one strategy at `omega`, then bins or discards it.
    pub fn record_strategy(&mut self, strategy: &Strategy, omega: &SupportVector) {
        let Some((_, [q0, q1, q2])) = invert_raw(strategy, omega) else {
            self.singular += 1;
            return;
        };
        match EliminationDistribution::unchecked(q0, q1, q2).clamped() {
            Some(q) => self.record(classify_strategy(strategy), &q),
            None => self.infeasible += 1,
        }
    }

    /// Adds another grid's counters. Both grids must share a resolution.
    pub fn merge(&mut self, other: &Self) {
        assert_eq!(self.resolution, other.resolution, "grid resolution mismatch");
        for (a, b) in self.cells.iter_mut().zip(&other.cells) {
            a.add(b);
        }
        self.infeasible += other.infeasible;
        self.singular += other.singular;
    }
}
