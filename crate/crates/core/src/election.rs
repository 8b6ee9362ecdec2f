//! Algebra of the runoff model.
//!
//! Candidates are numbered 0, 1, 2. `P(C_k | B_j)` is the probability that
//! candidate `k` wins the runoff when candidate `j` was eliminated in the
//! first round. The three free parameters are stored in [`Strategy`]; the
//! other three are complements.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Tolerance on simplex normalisation for support vectors and elimination
/// distributions.
pub const SIMPLEX_TOLERANCE: f64 = 1e-12;

/// Components at or above this value count as nonnegative.
pub const FEASIBILITY_TOLERANCE: f64 = -1e-12;

/// `|d|` below this is treated as a singular conditional-probability matrix.
pub const SINGULAR_THRESHOLD: f64 = 1e-9;

/// Allowed deviation of `|x|` from 1 for a [`BlochPoint`].
pub const SPHERE_TOLERANCE: f64 = 1e-6;

/// Second-round choice probabilities.
///
/// Only `p = P(C1|B0)`, `r = P(C2|B1)` and `s = P(C0|B2)` are stored, so the
/// complementary pairs always sum to one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Strategy {
    p: f64,
    r: f64,
    s: f64,
}

fn check_probability(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::InvalidProbability { name, value })
    }
}

impl Strategy {
    pub fn new(p: f64, r: f64, s: f64) -> Result<Self> {
        Ok(Self {
            p: check_probability("p", p)?,
            r: check_probability("r", r)?,
            s: check_probability("s", s)?,
        })
    }

    /// `P(C1|B0)`: candidate 1 beats candidate 2.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// `P(C2|B1)`: candidate 2 beats candidate 0.
    pub fn r(&self) -> f64 {
        self.r
    }

    /// `P(C0|B2)`: candidate 0 beats candidate 1.
    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn params(&self) -> [f64; 3] {
        [self.p, self.r, self.s]
    }

    /// `P(C_winner | B_eliminated)`. Returns 0 when `winner == eliminated`.
    pub fn conditional(&self, winner: usize, eliminated: usize) -> f64 {
        match (winner, eliminated) {
            (1, 0) => self.p,
            (2, 0) => 1.0 - self.p,
            (2, 1) => self.r,
            (0, 1) => 1.0 - self.r,
            (0, 2) => self.s,
            (1, 2) => 1.0 - self.s,
            _ => 0.0,
        }
    }

    /// The matrix `M[k][j] = P(C_k|B_j)` with a zero diagonal. Each column
    /// sums to one.
    pub fn matrix(&self) -> [[f64; 3]; 3] {
        let mut m = [[0.0; 3]; 3];
        for (k, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.conditional(k, j);
            }
        }
        m
    }

    /// Relabels candidates by the cycle 0 -> 1 -> 2 -> 0.
    pub fn relabeled(&self) -> Self {
        Self {
            p: self.s,
            r: self.p,
            s: self.r,
        }
    }
}

fn check_simplex(what: &'static str, c: [f64; 3]) -> Result<[f64; 3]> {
    let sum = c[0] + c[1] + c[2];
    let in_range = c.iter().all(|&x| (-SIMPLEX_TOLERANCE..=1.0 + SIMPLEX_TOLERANCE).contains(&x));
    if in_range && (sum - 1.0).abs() <= SIMPLEX_TOLERANCE {
        Ok(c)
    } else {
        Err(Error::InvalidSimplex {
            what,
            components: (c[0], c[1], c[2]),
        })
    }
}

fn rotate(c: [f64; 3]) -> [f64; 3] {
    [c[2], c[0], c[1]]
}

/// Winning probabilities `(ω0, ω1, ω2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupportVector {
    pub omega0: f64,
    pub omega1: f64,
    pub omega2: f64,
}

impl SupportVector {
    pub fn new(omega0: f64, omega1: f64, omega2: f64) -> Result<Self> {
        let [omega0, omega1, omega2] = check_simplex("support vector", [omega0, omega1, omega2])?;
        Ok(Self {
            omega0,
            omega1,
            omega2,
        })
    }

    /// `ω0 = ω1 = (1 - ω2) / 2`: candidate 2 leads, the others are level.
    pub fn with_leader(omega2: f64) -> Result<Self> {
        let rest = (1.0 - omega2) / 2.0;
        Self::new(rest, rest, omega2)
    }

    pub fn uniform() -> Self {
        Self {
            omega0: 1.0 / 3.0,
            omega1: 1.0 / 3.0,
            omega2: 1.0 / 3.0,
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.omega0, self.omega1, self.omega2]
    }

    pub fn relabeled(&self) -> Self {
        let [omega0, omega1, omega2] = rotate(self.as_array());
        Self {
            omega0,
            omega1,
            omega2,
        }
    }
}

/// First-round elimination probabilities `(q0, q1, q2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EliminationDistribution {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
}

impl EliminationDistribution {
    pub fn new(q0: f64, q1: f64, q2: f64) -> Result<Self> {
        let [q0, q1, q2] = check_simplex("elimination distribution", [q0, q1, q2])?;
        Ok(Self { q0, q1, q2 })
    }

    /// Builds a distribution without validating it. Used for raw inversion
    /// output, which may lie outside the simplex.
    pub fn unchecked(q0: f64, q1: f64, q2: f64) -> Self {
        Self { q0, q1, q2 }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.q0, self.q1, self.q2]
    }

    pub fn is_feasible(&self) -> bool {
        self.as_array().iter().all(|&q| q >= FEASIBILITY_TOLERANCE)
    }

    /// Clamps floating-point dust below zero and renormalises.
    /// Returns `None` for infeasible distributions.
    pub fn clamped(&self) -> Option<Self> {
        if !self.is_feasible() {
            return None;
        }
        let c = self.as_array().map(|q| q.max(0.0));
        let sum = c[0] + c[1] + c[2];
        if sum <= 0.0 || !sum.is_finite() {
            return None;
        }
        Some(Self::unchecked(c[0] / sum, c[1] / sum, c[2] / sum))
    }

    pub fn relabeled(&self) -> Self {
        let [q0, q1, q2] = rotate(self.as_array());
        Self { q0, q1, q2 }
    }
}

/// A point on the unit sphere encoding a quantum pure strategy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl BlochPoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        let norm = libm::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
        if (norm - 1.0).abs() > SPHERE_TOLERANCE || !norm.is_finite() {
            return Err(Error::OffSphere((x1, x2, x3)));
        }
        Ok(Self { x1, x2, x3 })
    }

    /// Spherical angles: polar `theta` from `+x3`, azimuth `phi` in the
    /// `x1, x2` plane.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let st = libm::sin(theta);
        Self {
            x1: st * libm::cos(phi),
            x2: st * libm::sin(phi),
            x3: libm::cos(theta),
        }
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3)
    }
}

/// Output of [`inverse_elimination`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InversionResult {
    /// Clamped and renormalised when feasible, raw otherwise.
    pub q: EliminationDistribution,
    pub d: f64,
    pub feasible: bool,
}

/// `ω_k = Σ_{j≠k} P(C_k|B_j) q_j`.
pub fn forward_support(strategy: &Strategy, q: &EliminationDistribution) -> Result<SupportVector> {
    let q = EliminationDistribution::new(q.q0, q.q1, q.q2)?;
    Ok(forward_unchecked(strategy, &q))
}

pub(crate) fn forward_unchecked(strategy: &Strategy, q: &EliminationDistribution) -> SupportVector {
    let (p, r, s) = (strategy.p, strategy.r, strategy.s);
    SupportVector {
        omega0: (1.0 - r) * q.q1 + s * q.q2,
        omega1: p * q.q0 + (1.0 - s) * q.q2,
        omega2: (1.0 - p) * q.q0 + r * q.q1,
    }
}

/// Determinant of [`Strategy::matrix`], `prs + (1-p)(1-r)(1-s)`.
pub fn determinant(strategy: &Strategy) -> f64 {
    let (p, r, s) = (strategy.p, strategy.r, strategy.s);
    p * r * s + (1.0 - p) * (1.0 - r) * (1.0 - s)
}

/// Raw closed-form inverse. `None` when the matrix is singular.
pub(crate) fn invert_raw(strategy: &Strategy, omega: &SupportVector) -> Option<(f64, [f64; 3])> {
    let (p, r, s) = (strategy.p, strategy.r, strategy.s);
    let [w0, w1, w2] = omega.as_array();
    let d = determinant(strategy);
    if d.abs() < SINGULAR_THRESHOLD {
        return None;
    }
    let q0 = (-r * w0 + r * s + (1.0 - r - s) * w2) / d;
    let q1 = (-s * w1 + s * p + (1.0 - s - p) * w0) / d;
    let q2 = (-p * w2 + p * r + (1.0 - p - r) * w1) / d;
    Some((d, [q0, q1, q2]))
}

/// Elimination distribution that, under `strategy`, produces support `omega`.
pub fn inverse_elimination(strategy: &Strategy, omega: &SupportVector) -> Result<InversionResult> {
    let (d, [q0, q1, q2]) =
        invert_raw(strategy, omega).ok_or(Error::SingularDeterminant(determinant(strategy)))?;
    let raw = EliminationDistribution::unchecked(q0, q1, q2);
    Ok(match raw.clamped() {
        Some(q) => InversionResult {
            q,
            d,
            feasible: true,
        },
        None => InversionResult {
            q: raw,
            d,
            feasible: false,
        },
    })
}

/// Quantum strategy read off a Bloch vector:
/// `s = (1 - x3)/2`, `r = (1 - x1)/2`, `p = (1 + x2)/2`.
pub fn strategy_from_bloch(x: &BlochPoint) -> Result<Strategy> {
    let x = BlochPoint::new(x.x1, x.x2, x.x3)?;
    Ok(bloch_unchecked(&x))
}

pub(crate) fn bloch_unchecked(x: &BlochPoint) -> Strategy {
    let half = |v: f64| (v / 2.0).clamp(0.0, 1.0);
    Strategy {
        p: half(1.0 + x.x2),
        r: half(1.0 - x.x1),
        s: half(1.0 - x.x3),
    }
}
