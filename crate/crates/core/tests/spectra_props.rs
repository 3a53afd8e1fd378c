mod common;

use clifford_bloch::coords::{tensor_config, DensityMatrix};
use clifford_bloch::invariants::{epsilon_d3, InvariantSet};
use clifford_bloch::linalg::{char_poly, real_quartic_roots};
use clifford_bloch::random::{random_generator, random_tensor, stream_rng};
use clifford_bloch::spectra::{
    degeneracy_pattern, factorized_charpoly, numeric_spectrum, p4_pm, tunnel_spectrum, two_tensor_matrix,
    two_tensor_spectrum, vector_spectrum, ConfigKind, Spectrum,
};
use clifford_bloch::symmetry::{orthogonal_from_generator, rotate_tensor};
use clifford_bloch::tensor::AntisymTensor;
use clifford_bloch::Error;
use proptest::prelude::*;

/// A grade-2 tensor over `2m` indices supported on a random 6-dimensional subspace.
fn rank_six(seed: u64, m: usize, half_width: f64) -> AntisymTensor {
    let mut rng = stream_rng(seed, 5);
    let block = random_tensor(&mut rng, 6, 2, half_width);
    let mut g = AntisymTensor::zeros(2 * m, 2);
    for (idx, v) in block.iter() {
        g.set(idx.indices(), v).unwrap();
    }
    let l = orthogonal_from_generator(&random_generator(&mut rng, 2 * m, 2.0));
    rotate_tensor(&g, &l).unwrap()
}

fn oracle(m: usize, g: &AntisymTensor) -> Spectrum {
    numeric_spectrum(&tensor_config(&common::standard(m), g).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(common::config(30))]

    #[test]
    fn vector_closed_form(seed in any::<u64>(), m in 1usize..=4, pseudo in prop::option::of(-0.5..0.5f64)) {
        let mut rng = stream_rng(seed, 0);
        let g = random_tensor(&mut rng, 2 * m, 1, 0.6);
        let closed = vector_spectrum(m, &g, pseudo).unwrap();
        let basis = common::standard(m);
        let mut coords = clifford_bloch::coords::StateCoords::new(m, clifford_bloch::clifford::BasisMode::Standard)
            .with_grade(g.clone()).unwrap();
        if let Some(p) = pseudo {
            coords.set(&(1..=2 * m).collect::<Vec<_>>(), p).unwrap();
        }
        let rho = clifford_bloch::coords::encode(&coords, &basis).unwrap();
        let numeric = numeric_spectrum(&rho).unwrap();
        prop_assert!(closed.max_abs_diff(&numeric) < 1e-10);
        let pattern = degeneracy_pattern(&closed, 1e-8);
        prop_assert_eq!(pattern.len(), 2);
        prop_assert!(pattern.iter().all(|(_, n)| *n == 1 << (m - 1)));
        prop_assert!((closed.sum() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn vector_deviation_scales_linearly(seed in any::<u64>(), m in 1usize..=4) {
        let g = random_tensor(&mut stream_rng(seed, 0), 2 * m, 1, 0.5);
        let base = vector_spectrum(m, &g, None).unwrap();
        let centre = 1.0 / (1u64 << m) as f64;
        for s in [0.25, 0.5] {
            let scaled = vector_spectrum(m, &g.scale(s), None).unwrap();
            for (a, b) in scaled.eigenvalues.iter().zip(&base.eigenvalues) {
                prop_assert!(((a - centre) - s * (b - centre)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn two_tensor_m2(seed in any::<u64>()) {
        let g = random_tensor(&mut stream_rng(seed, 0), 4, 2, 0.5);
        let closed = two_tensor_spectrum(2, &g).unwrap();
        prop_assert!(closed.max_abs_diff(&oracle(2, &g)) < 1e-9);
        prop_assert!((closed.sum() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn two_tensor_m3(seed in any::<u64>()) {
        let g = random_tensor(&mut stream_rng(seed, 0), 6, 2, 0.5);
        let closed = two_tensor_spectrum(3, &g).unwrap();
        prop_assert!(closed.max_abs_diff(&oracle(3, &g)) < 1e-9);
    }

    #[test]
    fn quartets_coincide_iff_d3_vanishes(seed in any::<u64>()) {
        let g = random_tensor(&mut stream_rng(seed, 0), 6, 2, 0.5);
        let d3 = epsilon_d3(&g).unwrap();
        let inv = InvariantSet::of_two_tensor(&g).unwrap();
        let (plus, _) = real_quartic_roots(&p4_pm(inv.r, inv.t4, d3, 1.0)).unwrap();
        let (minus, _) = real_quartic_roots(&p4_pm(inv.r, inv.t4, d3, -1.0)).unwrap();
        let gap = common::max_diff(&plus, &minus);
        prop_assert_eq!(gap < 1e-8, d3.abs() < 1e-8);
        let (swapped, _) = real_quartic_roots(&p4_pm(inv.r, inv.t4, -d3, -1.0)).unwrap();
        prop_assert_eq!(plus, swapped);
    }

    #[test]
    fn two_tensor_m4_rank_six(seed in any::<u64>()) {
        let g = rank_six(seed, 4, 0.5);
        let closed = two_tensor_spectrum(4, &g).unwrap();
        prop_assert!(closed.max_abs_diff(&oracle(4, &g)) < 1e-9);
        prop_assert!(closed.multiplets.iter().all(|mp| mp.multiplicity % 2 == 0));
    }

    #[test]
    fn factorized_vector_charpoly(seed in any::<u64>(), m in 1usize..=4) {
        let g = random_tensor(&mut stream_rng(seed, 0), 2 * m, 1, 0.5);
        let inv = InvariantSet::of_vector(&g, None).unwrap();
        let closed = factorized_charpoly(m, ConfigKind::Vector, &inv).unwrap();
        let direct = char_poly(tensor_config(&common::standard(m), &g).unwrap().matrix()).unwrap();
        let z = (1u64 << m) as f64;
        prop_assert!(closed.rescale_argument(1.0 / z).relative_distance(&direct.rescale_argument(1.0 / z)) < 1e-9);
    }

    #[test]
    fn factorized_two_tensor_charpoly(seed in any::<u64>(), m in 2usize..=4) {
        let g = if m == 4 { rank_six(seed, 4, 0.5) } else { random_tensor(&mut stream_rng(seed, 0), 2 * m, 2, 0.5) };
        let mut inv = InvariantSet::of_two_tensor(&g).unwrap();
        if m == 4 {
            inv.d3 = Some(clifford_bloch::spectra::third_order_magnitude(&g).unwrap());
        }
        let closed = factorized_charpoly(m, ConfigKind::TwoTensor, &inv).unwrap();
        let direct = char_poly(&two_tensor_matrix(m, &g).unwrap()).unwrap();
        let z = (1u64 << m) as f64;
        prop_assert!(closed.rescale_argument(1.0 / z).relative_distance(&direct.rescale_argument(1.0 / z)) < 1e-8);
    }

    #[test]
    fn tunnel_agrees_with_two_tensor(x in -1.0..1.0f64, y in -1.0..1.0f64, z in -1.0..1.0f64) {
        let g = clifford_bloch::domains::tunnel_tensor(x, y, z);
        let a = tunnel_spectrum(x, y, z);
        let b = two_tensor_spectrum(2, &g).unwrap();
        prop_assert!(a.max_abs_diff(&b) < 1e-12);
    }
}

#[test]
fn generic_rank_eight_is_rejected_at_m4() {
    let g = random_tensor(&mut stream_rng(11, 0), 8, 2, 0.4);
    match two_tensor_spectrum(4, &g) {
        Err(Error::FactorizationMismatch { residual }) => assert!(residual > 1e-6),
        other => panic!("expected a factorization mismatch, got {other:?}"),
    }
    let distinct = degeneracy_pattern(&oracle(4, &g), 1e-8).len();
    assert_eq!(distinct, 16);
}

#[test]
fn single_block_at_m4() {
    let g = AntisymTensor::from_entries(8, 2, &[(&[1, 2], 0.5)]).unwrap();
    let closed = two_tensor_spectrum(4, &g).unwrap();
    assert!(closed.max_abs_diff(&oracle(4, &g)) < 1e-12);
    assert_eq!(degeneracy_pattern(&closed, 1e-8), vec![(0.03125, 8), (0.09375, 8)]);
}

#[test]
fn numeric_examples() {
    let mixed = numeric_spectrum(&DensityMatrix::maximally_mixed(3)).unwrap();
    assert_eq!(degeneracy_pattern(&mixed, 1e-8), vec![(0.125, 8)]);
    let g = AntisymTensor::vector(&[0.0, 0.0, 0.0, 1.0]);
    let pure = numeric_spectrum(&tensor_config(&common::standard(2), &g).unwrap()).unwrap();
    assert!(common::max_diff(&pure.eigenvalues, &[0.0, 0.0, 0.5, 0.5]) < 1e-12);
}

#[test]
fn octet_example() {
    let a = 1.0 / 3f64.sqrt();
    let g = AntisymTensor::from_entries(6, 2, &[(&[1, 2], a), (&[3, 4], a), (&[5, 6], a)]).unwrap();
    let inv = InvariantSet::of_two_tensor(&g).unwrap();
    assert!((inv.r - 1.0).abs() < 1e-15 && (inv.t4 - 2.0 / 3.0).abs() < 1e-15);
    assert!((inv.d3.unwrap() - 16.0 / 3f64.sqrt()).abs() < 1e-12);
    let closed = two_tensor_spectrum(3, &g).unwrap();
    assert!(closed.max_abs_diff(&oracle(3, &g)) < 1e-9);
    let (plus, _) = real_quartic_roots(&p4_pm(1.0, 2.0 / 3.0, inv.d3.unwrap(), 1.0)).unwrap();
    let (minus, _) = real_quartic_roots(&p4_pm(1.0, 2.0 / 3.0, inv.d3.unwrap(), -1.0)).unwrap();
    assert!(common::max_diff(&plus, &minus) > 1e-3);
}
