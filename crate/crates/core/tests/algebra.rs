use nalgebra::Matrix3;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use runoff_core::{
    determinant, forward_support, inverse_elimination, EliminationDistribution, Strategy,
};

fn random_strategy(rng: &mut impl Rng) -> Strategy {
    Strategy::new(rng.random(), rng.random(), rng.random()).unwrap()
}

fn random_simplex(rng: &mut impl Rng) -> EliminationDistribution {
    let (a, b): (f64, f64) = (rng.random(), rng.random());
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let (q0, q1) = (lo, hi - lo);
    EliminationDistribution::new(q0, q1, 1.0 - q0 - q1).unwrap()
}

fn generic_det(s: &Strategy) -> f64 {
    let m = s.matrix();
    Matrix3::new(m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2])
        .determinant()
}

#[test]
fn matrix_columns_are_stochastic_and_output_normalised() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100_000 {
        let s = random_strategy(&mut rng);
        let m = s.matrix();
        for j in 0..3 {
            assert!((m[0][j] + m[1][j] + m[2][j] - 1.0).abs() < 1e-15);
            assert_eq!(m[j][j], 0.0);
        }
        let w = forward_support(&s, &random_simplex(&mut rng)).unwrap();
        assert!((w.omega0 + w.omega1 + w.omega2 - 1.0).abs() < 1e-12);
    }
}

#[test]
fn closed_form_determinant_matches_generic() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100_000 {
        let s = random_strategy(&mut rng);
        assert!((determinant(&s) - generic_det(&s)).abs() < 1e-12);
    }
    // hand examples against the generic routine too
    for (p, r, s, want) in [(0.5, 0.5, 0.5, 0.25), (0.7, 0.4, 0.2, 0.2), (0.0, 1.0, 0.3, 0.0)] {
        assert!((generic_det(&Strategy::new(p, r, s).unwrap()) - want).abs() < 1e-15);
    }
}

#[test]
fn determinant_bounded_by_unit_interval() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1_000_000 {
        let d = determinant(&random_strategy(&mut rng));
        assert!((0.0..=1.0).contains(&d));
    }
}

#[test]
fn inverse_recovers_forward() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    while checked < 100_000 {
        let s = random_strategy(&mut rng);
        if determinant(&s) < 1e-6 {
            continue;
        }
        let q = random_simplex(&mut rng);
        let inv = inverse_elimination(&s, &forward_support(&s, &q).unwrap()).unwrap();
        assert!(inv.feasible);
        for (a, b) in inv.q.as_array().iter().zip(q.as_array()) {
            assert!((a - b).abs() < 1e-9, "{s:?} {q:?} -> {inv:?}");
        }
        checked += 1;
    }
}

proptest! {
    #[test]
    fn cyclic_relabeling_is_equivariant(p in 0.0f64..=1.0, r in 0.0f64..=1.0, s in 0.0f64..=1.0,
                                        a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let st = Strategy::new(p, r, s).unwrap();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let q = EliminationDistribution::new(lo, hi - lo, 1.0 - hi).unwrap();
        let direct = forward_support(&st, &q).unwrap().relabeled();
        let relabeled = forward_support(&st.relabeled(), &q.relabeled()).unwrap();
        for (x, y) in direct.as_array().iter().zip(relabeled.as_array()) {
            prop_assert!((x - y).abs() < 1e-15);
        }
        // conditional probabilities move with the labels
        let moved = st.relabeled();
        for k in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(moved.conditional((k + 1) % 3, (j + 1) % 3), st.conditional(k, j));
            }
        }
    }

    #[test]
    fn inversion_sums_to_one(p in 0.0f64..=1.0, r in 0.0f64..=1.0, s in 0.0f64..=1.0,
                             a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let st = Strategy::new(p, r, s).unwrap();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let w = runoff_core::SupportVector::new(lo, hi - lo, 1.0 - hi).unwrap();
        if let Ok(inv) = inverse_elimination(&st, &w) {
            let [q0, q1, q2] = inv.q.as_array();
            prop_assert!((q0 + q1 + q2 - 1.0).abs() < 1e-9);
            prop_assert_eq!(inv.feasible, inv.q.is_feasible());
        }
    }
}
