//! Distance from a target elimination distribution to the set reachable by
//! transitive strategies.
//!
//! The search runs over the transitive part of the strategy space: a dense
//! deterministic lattice first, then compass-style coordinate descent from the
//! closest lattice points. Strategies whose inversion is singular, infeasible
//! or intransitive score `+∞`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::election::{invert_raw, BlochPoint, EliminationDistribution, Strategy, SupportVector};
use crate::preference::classify_strategy;
use crate::sampling::Model;

use super::{project_unchecked, PlanarPoint};

/// Fibonacci lattice size on the sphere; about three quarters are transitive.
const SPHERE_LATTICE: usize = 40_000;
/// Points per axis of the cube lattice (`i / 28`, so 1/2 is on it).
const CUBE_LATTICE: usize = 29;
/// Lattice points refined per query.
const STARTS: usize = 6;
/// Refinement stops once the parameter step drops below this. The image of
/// a parameter step can be several times longer, so this sits well below
/// the 1e-6 planar accuracy the oracle promises.
pub const REFINEMENT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy)]
struct Candidate {
    params: [f64; 3],
    image: PlanarPoint,
}

#[derive(Debug, Clone)]
pub struct TransitiveOracle {
    model: Model,
    omega: SupportVector,
    candidates: Vec<Candidate>,
    lattice_transitive: usize,
    initial_step: f64,
}

impl TransitiveOracle {
    pub fn new(model: Model, omega: SupportVector) -> Self {
        let mut oracle = Self {
            model,
            omega,
            candidates: Vec::new(),
            lattice_transitive: 0,
            initial_step: 0.0,
        };
        let lattice: Vec<[f64; 3]> = match model {
            Model::Quantum => {
                oracle.initial_step = libm::sqrt(4.0 * PI / SPHERE_LATTICE as f64);
                let golden = PI * (3.0 - libm::sqrt(5.0));
                (0..SPHERE_LATTICE)
                    .map(|k| {
                        let z = 1.0 - (2 * k + 1) as f64 / SPHERE_LATTICE as f64;
                        [libm::acos(z), golden * k as f64, 0.0]
                    })
                    .collect()
            }
            Model::Classical => {
                let m = CUBE_LATTICE;
                oracle.initial_step = 1.0 / (m - 1) as f64;
                let v = |i: usize| i as f64 / (m - 1) as f64;
                (0..m * m * m)
                    .map(|k| [v(k / (m * m)), v((k / m) % m), v(k % m)])
                    .collect()
            }
        };
        for params in lattice {
            let strategy = oracle.strategy(&params);
            if !classify_strategy(&strategy).is_transitive_side() {
                continue;
            }
            oracle.lattice_transitive += 1;
            if let Some(image) = oracle.image(&strategy) {
                oracle.candidates.push(Candidate { params, image });
            }
        }
        oracle
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn omega(&self) -> SupportVector {
        self.omega
    }

    /// Transitive lattice points examined per query.
    pub fn lattice_size(&self) -> usize {
        self.lattice_transitive
    }

    fn strategy(&self, params: &[f64; 3]) -> Strategy {
        match self.model {
            Model::Quantum => {
                crate::election::bloch_unchecked(&BlochPoint::from_angles(params[0], params[1]))
            }
            Model::Classical => {
                Strategy::new(params[0], params[1], params[2]).expect("cube parameters are clamped")
            }
        }
    }

    fn image(&self, strategy: &Strategy) -> Option<PlanarPoint> {
        let (_, [q0, q1, q2]) = invert_raw(strategy, &self.omega)?;
        let q = EliminationDistribution::unchecked(q0, q1, q2).clamped()?;
        Some(project_unchecked(&q))
    }

    fn objective(&self, params: &[f64; 3], target: &PlanarPoint) -> f64 {
        let strategy = self.strategy(params);
        if !classify_strategy(&strategy).is_transitive_side() {
            return f64::INFINITY;
        }
        self.image(&strategy)
            .map_or(f64::INFINITY, |img| img.distance(target))
    }

    fn dimensions(&self) -> usize {
        match self.model {
            Model::Quantum => 2,
            Model::Classical => 3,
        }
    }

    fn refine(&self, start: [f64; 3], start_value: f64, target: &PlanarPoint) -> f64 {
        let mut x = start;
        let mut best = start_value;
        let mut step = self.initial_step;
        while step >= REFINEMENT_TOLERANCE && best > 0.0 {
            let mut improved = false;
            'axes: for axis in 0..self.dimensions() {
                for dir in [1.0, -1.0] {
                    let mut y = x;
                    y[axis] += dir * step;
                    if self.model == Model::Classical {
                        y[axis] = y[axis].clamp(0.0, 1.0);
                    }
                    let value = self.objective(&y, target);
                    if value < best {
                        x = y;
                        best = value;
                        improved = true;
                        break 'axes;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        best
    }

    /// Planar distance from `target` to the closest image of a transitive
    /// strategy; `+∞` if no transitive strategy has a feasible image.
    pub fn distance(&self, target: &EliminationDistribution) -> f64 {
        let target = project_unchecked(target);
        let mut nearest: Vec<(f64, usize)> = self
            .candidates
            .iter()
            .enumerate()
            .map(|(i, c)| (c.image.distance(&target), i))
            .collect();
        let k = STARTS.min(nearest.len());
        if k == 0 {
            return f64::INFINITY;
        }
        nearest.select_nth_unstable_by(k - 1, |a, b| a.0.total_cmp(&b.0));
        nearest.truncate(k);
        nearest.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        nearest
            .iter()
            .map(|&(d, i)| self.refine(self.candidates[i].params, d, &target))
            .fold(f64::INFINITY, f64::min)
    }
}

/// One-shot form of [`TransitiveOracle::distance`].
pub fn nearest_transitive_distance(
    q_target: &EliminationDistribution,
    omega: &SupportVector,
    model: Model,
) -> crate::Result<f64> {
    if !q_target.is_feasible() {
        return Err(crate::Error::Infeasible);
    }
    let q = EliminationDistribution::new(q_target.q0, q_target.q1, q_target.q2)?;
    Ok(TransitiveOracle::new(model, *omega).distance(&q))
}
