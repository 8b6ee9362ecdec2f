//! Counter-based sample streams.
//!
//! Sample `i` of a stream is drawn from a ChaCha8 generator keyed by the
//! stream seed and positioned on stream number `i`, so it depends on
//! `(seed, i)` only. Any partition of the index range across workers yields
//! the same samples.

use alloc::vec::Vec;
use core::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::election::{bloch_unchecked, BlochPoint, Strategy};

/// Seed used by golden files and documented defaults.
pub const DEFAULT_SEED: u64 = 42;

const MIN_NORMAL_NORM: f64 = 1e-12;

/// Strategy space being sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Bloch sphere with the uniform (Fubini–Study) measure.
    Quantum,
    /// Unit cube `[0,1]^3` with the uniform measure.
    Classical,
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Quantum => "quantum",
            Self::Classical => "classical",
        }
    }
}

/// One draw from a [`SampleStream`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    /// Present for the quantum model.
    pub bloch: Option<BlochPoint>,
    pub strategy: Strategy,
}

#[derive(Debug, Clone)]
pub struct SampleStream {
    seed: u64,
    model: Model,
    base: ChaCha8Rng,
}

impl SampleStream {
    pub fn new(seed: u64, model: Model) -> Self {
        Self {
            seed,
            model,
            base: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn model(&self) -> Model {
        self.model
    }

    fn rng_at(&self, index: u64) -> ChaCha8Rng {
        let mut rng = self.base.clone();
        rng.set_stream(index);
        rng.set_word_pos(0);
        rng
    }

    /// Uniform point on the unit sphere: three normals, normalised.
    pub fn sphere_point(&self, index: u64) -> BlochPoint {
        let mut rng = self.rng_at(index);
        loop {
            let x: f64 = rng.sample(StandardNormal);
            let y: f64 = rng.sample(StandardNormal);
            let z: f64 = rng.sample(StandardNormal);
            let norm = libm::sqrt(x * x + y * y + z * z);
            if norm >= MIN_NORMAL_NORM {
                return BlochPoint {
                    x1: x / norm,
                    x2: y / norm,
                    x3: z / norm,
                };
            }
        }
    }

    /// Uniform point of the strategy cube.
    pub fn cube_point(&self, index: u64) -> Strategy {
        let mut rng = self.rng_at(index);
        let p = rng.random::<f64>();
        let r = rng.random::<f64>();
        let s = rng.random::<f64>();
        Strategy::new(p, r, s).expect("uniform draws lie in [0, 1)")
    }

    pub fn sample(&self, index: u64) -> Sample {
        match self.model {
            Model::Quantum => {
                let bloch = self.sphere_point(index);
                Sample {
                    bloch: Some(bloch),
                    strategy: bloch_unchecked(&bloch),
                }
            }
            Model::Classical => Sample {
                bloch: None,
                strategy: self.cube_point(index),
            },
        }
    }

    pub fn samples(&self, range: Range<u64>) -> impl Iterator<Item = Sample> + '_ {
        range.map(move |i| self.sample(i))
    }
}

/// First `n` sphere points of the stream, regardless of its model.
pub fn sample_sphere_uniform(stream: &SampleStream, n: usize) -> Vec<BlochPoint> {
    (0..n as u64).map(|i| stream.sphere_point(i)).collect()
}

/// First `n` cube strategies of the stream, regardless of its model.
pub fn sample_cube_uniform(stream: &SampleStream, n: usize) -> Vec<Strategy> {
    (0..n as u64).map(|i| stream.cube_point(i)).collect()
}
