use runoff_core::election::SINGULAR_THRESHOLD;
use runoff_core::{
    build_coverage, classify_strategy, inverse_elimination, nearest_transitive_distance,
    project_to_ternary, strategy_from_bloch, BlochPoint, EliminationDistribution, Model,
    SampleStream, SupportVector, TransitiveOracle,
};

fn centroid() -> EliminationDistribution {
    let t = 1.0 / 3.0;
    EliminationDistribution::new(t, t, t).unwrap()
}

/// Minimum over a dense Fibonacci lattice of transitive sphere points.
fn brute_force_sphere(target: &EliminationDistribution, omega: &SupportVector, n: usize) -> f64 {
    let target = project_to_ternary(target).unwrap();
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .filter_map(|k| {
            let z = 1.0 - (2 * k + 1) as f64 / n as f64;
            let rho = (1.0 - z * z).sqrt();
            let phi = golden * k as f64;
            let x = BlochPoint::new(rho * phi.cos(), rho * phi.sin(), z).unwrap();
            let s = strategy_from_bloch(&x).unwrap();
            if !classify_strategy(&s).is_transitive_side() {
                return None;
            }
            let inv = inverse_elimination(&s, omega).ok()?;
            inv.feasible
                .then(|| project_to_ternary(&inv.q).unwrap().distance(&target))
        })
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn centroid_is_out_of_transitive_reach_in_quantum_model() {
    let omega = SupportVector::uniform();
    let oracle = TransitiveOracle::new(Model::Quantum, omega);
    assert!(oracle.lattice_size() >= 10_000);
    let d = oracle.distance(&centroid());
    let brute = brute_force_sphere(&centroid(), &omega, 2_000_000);
    assert!(d > 1.0 / 120.0, "oracle distance {d}");
    assert!(d <= brute + 1e-9, "oracle {d} worse than brute force {brute}");
    assert!(brute - d < 1e-3, "oracle {d} far below brute force {brute}");
}

#[test]
fn centroid_is_reachable_in_classical_model() {
    // p = r = s = 1/2 is a tie strategy and maps onto the centroid
    let d = nearest_transitive_distance(&centroid(), &SupportVector::uniform(), Model::Classical).unwrap();
    assert!(d <= 1e-6, "distance {d}");
}

#[test]
fn transitive_images_are_self_witnesses() {
    let omega = SupportVector::with_leader(0.45).unwrap();
    for model in [Model::Quantum, Model::Classical] {
        let oracle = TransitiveOracle::new(model, omega);
        let stream = SampleStream::new(17, model);
        let mut tested = 0;
        for i in 0.. {
            let s = stream.sample(i).strategy;
            if !classify_strategy(&s).is_transitive_side() {
                continue;
            }
            let Ok(inv) = inverse_elimination(&s, &omega) else { continue };
            if !inv.feasible || inv.d < SINGULAR_THRESHOLD {
                continue;
            }
            let d = oracle.distance(&inv.q);
            assert!(d <= 1e-6, "{model:?} sample {i}: distance {d}");
            tested += 1;
            if tested == 25 {
                break;
            }
        }
    }
}

#[test]
fn transitive_covered_cells_are_within_one_diameter() {
    let omega = SupportVector::uniform();
    let grid = build_coverage(Model::Quantum, &omega, 100_000, 120, 5).unwrap();
    let oracle = TransitiveOracle::new(Model::Quantum, omega);
    let covered: Vec<usize> = (0..grid.cell_count())
        .filter(|&c| grid.cells()[c].transitive_side() > 0)
        .step_by(37)
        .collect();
    assert!(covered.len() > 50);
    for c in covered {
        let d = oracle.distance(&grid.centroid(c));
        assert!(d < grid.cell_diameter(), "cell {c}: {d}");
    }
}

#[test]
fn rejects_infeasible_target() {
    let bad = EliminationDistribution::unchecked(1.5, -0.5, 0.0);
    assert!(nearest_transitive_distance(&bad, &SupportVector::uniform(), Model::Quantum).is_err());
}
