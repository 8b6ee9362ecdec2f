//! Statistical properties of the coverage analysis at full size.

use runoff::parallel;
use runoff_core::region::RegionSpec;
use runoff_core::{classify_strategy, Model, SupportVector, TransitiveOracle};

const R: u32 = 120;
const N: u64 = 1_000_000;

fn spec(model: Model, omega: SupportVector, seed: u64) -> RegionSpec {
    RegionSpec {
        model,
        omega,
        n: N,
        resolution: R,
        seed,
        min_hits: 3,
        oracle: true,
    }
}

#[test]
fn leader_relabeling_preserves_relevant_area() {
    let w2 = 0.42;
    let rest = (1.0 - w2) / 2.0;
    let leader2 = parallel::region(&spec(Model::Quantum, SupportVector::new(rest, rest, w2).unwrap(), 42)).unwrap();
    let leader0 = parallel::region(&spec(Model::Quantum, SupportVector::new(w2, rest, rest).unwrap(), 42)).unwrap();
    let (f2, f0) = (leader2.report.relevant_fraction(), leader0.report.relevant_fraction());
    let f = (f2 + f0) / 2.0;
    let tolerance = 2.0 * (f * (1.0 - f) / (R as f64 * R as f64)).sqrt();
    assert!((f2 - f0).abs() <= tolerance, "{f2} vs {f0}, tolerance {tolerance}");
}

#[test]
fn confirmed_cells_stay_free_of_transitive_hits() {
    let omega = SupportVector::uniform();
    let outcome = parallel::region(&spec(Model::Quantum, omega, 42)).unwrap();
    let confirmed = outcome.confirmed.unwrap();
    assert!(!confirmed.is_empty());
    let denser = parallel::coverage(Model::Quantum, &omega, 4 * N, R, 7);
    let stride = (confirmed.len() / 100).max(1);
    for &cell in confirmed.iter().step_by(stride) {
        assert_eq!(denser.cells()[cell].transitive_side(), 0, "cell {cell}");
    }
}

#[test]
fn confirmed_regions_are_subsets_of_raw() {
    let omega = SupportVector::with_leader(0.52).unwrap();
    let outcome = parallel::region(&spec(Model::Quantum, omega, 3)).unwrap();
    let confirmed = outcome.confirmed.unwrap();
    assert!(confirmed.iter().all(|c| outcome.raw.cells.contains(c)));
    let oracle = TransitiveOracle::new(Model::Quantum, omega);
    let diameter = outcome.grid.cell_diameter();
    for &c in &confirmed {
        assert!(oracle.distance(&outcome.grid.centroid(c)) > diameter);
    }
}

#[test]
fn relevant_area_shrinks_as_leader_grows() {
    let fractions: Vec<f64> = [1.0 / 3.0, 0.42, 0.52, 0.54, 0.58]
        .iter()
        .map(|&w2| {
            let omega = SupportVector::with_leader(w2).unwrap();
            parallel::region(&spec(Model::Quantum, omega, 11)).unwrap().report.relevant_fraction()
        })
        .collect();
    assert!(fractions.windows(2).all(|w| w[1] <= w[0]), "{fractions:?}");
    assert!(fractions[4] < 0.001);
}

#[test]
fn classical_model_has_no_relevant_region() {
    for w2 in [1.0 / 3.0, 0.42, 0.52, 0.54] {
        let omega = SupportVector::with_leader(w2).unwrap();
        let outcome = parallel::region(&spec(Model::Classical, omega, 42)).unwrap();
        assert!(outcome.report.fractions.relevant_raw < 0.005, "raw at {w2}");
        assert!(outcome.report.relevant_fraction() < 0.001, "confirmed at {w2}");
    }
}

#[test]
fn coverage_counts_every_sample_once() {
    let omega = SupportVector::with_leader(0.5).unwrap();
    let n = 200_000;
    let grid = parallel::coverage(Model::Quantum, &omega, n, 60, 1);
    assert_eq!(grid.total_samples(), n);
    let stream = runoff_core::SampleStream::new(1, Model::Quantum);
    let intransitive = (0..n)
        .filter(|&i| classify_strategy(&stream.sample(i).strategy).is_intransitive())
        .count() as u64;
    let binned: u64 = grid.cells().iter().map(|c| u64::from(c.intransitive)).sum();
    assert!(binned <= intransitive);
}
