//! Pairwise order relations induced by a strategy.

use core::fmt;

use serde::{Deserialize, Serialize};

use crate::election::{Strategy, SIMPLEX_TOLERANCE};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Candidate(pub u8);

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Outcome for an unordered pair `{a, b}` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairOutcome {
    FirstPreferred,
    SecondPreferred,
    Tie,
}

impl PairOutcome {
    /// `prob` is the probability that the first member of the pair wins.
    fn from_probability(prob: f64) -> Self {
        if prob > 0.5 {
            Self::FirstPreferred
        } else if prob < 0.5 {
            Self::SecondPreferred
        } else {
            Self::Tie
        }
    }

    fn reversed(self) -> Self {
        match self {
            Self::FirstPreferred => Self::SecondPreferred,
            Self::SecondPreferred => Self::FirstPreferred,
            Self::Tie => Self::Tie,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwisePreference {
    pub zero_one: PairOutcome,
    pub zero_two: PairOutcome,
    pub one_two: PairOutcome,
}

impl PairwisePreference {
    pub fn of(strategy: &Strategy) -> Self {
        Self {
            zero_one: PairOutcome::from_probability(strategy.s()),
            zero_two: PairOutcome::from_probability(strategy.r()).reversed(),
            one_two: PairOutcome::from_probability(strategy.p()),
        }
    }

    fn outcomes(&self) -> [(u8, u8, PairOutcome); 3] {
        [
            (0, 1, self.zero_one),
            (0, 2, self.zero_two),
            (1, 2, self.one_two),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleDirection {
    /// `0 ≻ 1 ≻ 2 ≻ 0`, all three parameters above 1/2.
    Forward,
    /// `1 ≻ 0 ≻ 2 ≻ 1`, all three parameters below 1/2.
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    /// Linear order, most preferred first.
    Transitive([Candidate; 3]),
    Intransitive(CycleDirection),
    /// At least one parameter is exactly 1/2.
    Boundary,
}

impl Classification {
    pub fn is_intransitive(&self) -> bool {
        matches!(self, Self::Intransitive(_))
    }

    /// Boundary strategies count on the transitive side in coverage analysis.
    pub fn is_transitive_side(&self) -> bool {
        !self.is_intransitive()
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::Transitive(_) => "transitive",
            Self::Intransitive(_) => "intransitive",
            Self::Boundary => "boundary",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Transitive([a, b, c]) => write!(f, "transitive order: {a}≻{b}≻{c}"),
            Self::Intransitive(CycleDirection::Forward) => f.write_str("intransitive cycle: 0≻1≻2≻0"),
            Self::Intransitive(CycleDirection::Backward) => {
                f.write_str("intransitive cycle: 1≻0≻2≻1")
            }
            Self::Boundary => f.write_str("boundary (tie in at least one pair)"),
        }
    }
}

pub fn classify_strategy(strategy: &Strategy) -> Classification {
    let [p, r, s] = strategy.params();
    if p == 0.5 || r == 0.5 || s == 0.5 {
        return Classification::Boundary;
    }
    if p > 0.5 && r > 0.5 && s > 0.5 {
        return Classification::Intransitive(CycleDirection::Forward);
    }
    if p < 0.5 && r < 0.5 && s < 0.5 {
        return Classification::Intransitive(CycleDirection::Backward);
    }
    let mut wins = [0u8; 3];
    for (a, b, outcome) in PairwisePreference::of(strategy).outcomes() {
        match outcome {
            PairOutcome::FirstPreferred => wins[a as usize] += 1,
            PairOutcome::SecondPreferred => wins[b as usize] += 1,
            PairOutcome::Tie => unreachable!("ties handled above"),
        }
    }
    // a non-cyclic tournament on three vertices has scores 2, 1, 0
    let mut order = [Candidate(0); 3];
    for (c, &w) in wins.iter().enumerate() {
        order[2 - w as usize] = Candidate(c as u8);
    }
    Classification::Transitive(order)
}

/// Weights of the orders `A≻B≻C`, `B≻C≻A` and `C≻A≻B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixtureWeights {
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
}

impl MixtureWeights {
    pub fn new(w1: f64, w2: f64, w3: f64) -> Result<Self> {
        let ok = [w1, w2, w3].iter().all(|w| (0.0..=1.0).contains(w));
        if !ok || (w1 + w2 + w3 - 1.0).abs() > SIMPLEX_TOLERANCE {
            return Err(Error::InvalidSimplex {
                what: "mixture weights",
                components: (w1, w2, w3),
            });
        }
        Ok(Self { w1, w2, w3 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Alternative {
    A,
    B,
    C,
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
        })
    }
}

/// Strict-majority relation of a Condorcet mixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CollectiveRelation {
    Cyclic,
    /// Most preferred first.
    Transitive([Alternative; 3]),
    /// Some pair is exactly split.
    Tie,
}

impl fmt::Display for CollectiveRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic => f.write_str("cyclic"),
            Self::Transitive([a, b, c]) => write!(f, "transitive {a}≻{b}≻{c}"),
            Self::Tie => f.write_str("tie"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CondorcetOutcome {
    pub a_over_b: f64,
    pub b_over_c: f64,
    pub c_over_a: f64,
    pub relation: CollectiveRelation,
}

pub fn condorcet_mixture(weights: &MixtureWeights) -> CondorcetOutcome {
    let MixtureWeights { w1, w2, w3 } = *weights;
    let a_over_b = w1 + w3;
    let b_over_c = w1 + w2;
    let c_over_a = w2 + w3;

    use Alternative::*;
    let pairs = [(A, B, a_over_b), (B, C, b_over_c), (C, A, c_over_a)];
    let relation = if pairs.iter().any(|&(_, _, prob)| prob == 0.5) {
        CollectiveRelation::Tie
    } else if pairs.iter().all(|&(_, _, prob)| prob > 0.5)
        || pairs.iter().all(|&(_, _, prob)| prob < 0.5)
    {
        CollectiveRelation::Cyclic
    } else {
        let mut wins = [0usize; 3];
        let idx = |a: Alternative| a as usize;
        for (x, y, prob) in pairs {
            let winner = if prob > 0.5 { x } else { y };
            wins[idx(winner)] += 1;
        }
        let mut order = [A; 3];
        for (alt, &w) in [A, B, C].iter().zip(&wins) {
            order[2 - w] = *alt;
        }
        CollectiveRelation::Transitive(order)
    };
    CondorcetOutcome {
        a_over_b,
        b_over_c,
        c_over_a,
        relation,
    }
}

fn binary_entropy(x: f64) -> f64 {
    let term = |v: f64| if v <= 0.0 { 0.0 } else { -v * libm::log(v) };
    term(x) + term(1.0 - x)
}

/// `H(p) + H(r) + H(s)` in nats.
pub fn strategy_entropy(strategy: &Strategy) -> f64 {
    strategy.params().into_iter().map(binary_entropy).sum()
}
