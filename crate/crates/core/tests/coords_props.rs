mod common;

use clifford_bloch::clifford::BasisMode;
use clifford_bloch::coords::{alt_expand, alt_project, decode, encode, DensityMatrix, StateCoords};
use clifford_bloch::random::{random_tensor, random_unit_trace_hermitian, stream_rng};
use proptest::prelude::*;

fn random_density(seed: u64, stream: u64, m: usize) -> DensityMatrix {
    DensityMatrix::new(m, random_unit_trace_hermitian(&mut stream_rng(seed, stream), m, 0.7)).unwrap()
}

proptest! {
    #![proptest_config(common::config(40))]

    #[test]
    fn round_trip(seed in any::<u64>(), m in 1usize..=3) {
        let basis = common::standard(m);
        let rho = random_density(seed, 0, m);
        let back = encode(&decode(&rho, &basis).unwrap(), &basis).unwrap();
        prop_assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-10);
    }

    #[test]
    fn coordinates_are_real(seed in any::<u64>(), m in 1usize..=3) {
        let basis = common::standard(m);
        let rho = random_density(seed, 0, m);
        let worst = basis.project(rho.matrix()).iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        prop_assert!(worst < 1e-10);
    }

    #[test]
    fn decode_is_affine(seed in any::<u64>(), m in 1usize..=3, alpha in 0.0..1.0f64) {
        let basis = common::standard(m);
        let (r1, r2) = (random_density(seed, 0, m), random_density(seed, 1, m));
        let mix = (&r1.matrix().scale_real(alpha)) + &r2.matrix().scale_real(1.0 - alpha);
        let lhs = decode(&DensityMatrix::new(m, mix).unwrap(), &basis).unwrap();
        let (c1, c2) = (decode(&r1, &basis).unwrap(), decode(&r2, &basis).unwrap());
        for (idx, _) in basis.elements() {
            let expected = alpha * c1.component(idx) + (1.0 - alpha) * c2.component(idx);
            prop_assert!((lhs.component(idx) - expected).abs() < 1e-10);
        }
    }

    #[test]
    fn extended_round_trip(seed in any::<u64>(), m in 1usize..=3) {
        let basis = common::extended(m);
        let mut coords = StateCoords::new(m, BasisMode::Extended);
        let mut rng = stream_rng(seed, 2);
        for k in 1..=m {
            coords.set_grade(random_tensor(&mut rng, 2 * m + 1, k, 0.3)).unwrap();
        }
        let rho = alt_expand(&coords, &basis).unwrap();
        let projected = alt_project(&rho, &basis).unwrap();
        prop_assert!(projected.coords.max_abs_diff(&coords) < 1e-10);
        prop_assert!(projected.residual_norm() < 1e-10);
    }
}

#[test]
fn slot_count_is_four_to_the_m_minus_one() {
    for m in 1..=4 {
        assert_eq!(
            StateCoords::new(m, BasisMode::Standard).slot_count(),
            (1 << (2 * m)) - 1
        );
        assert_eq!(
            StateCoords::new(m, BasisMode::Extended).slot_count(),
            (1 << (2 * m)) - 1
        );
    }
}
