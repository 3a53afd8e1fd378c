//! O(2m) invariants of a 2-tensor and the identities tying them together.

use clifford_bloch::invariants::{
    det_identity_check, dual_identity, epsilon_d3, epsilon_d3_bruteforce, frobenius_r, pfaffian, trace_t4, InvariantSet,
};
use clifford_bloch::random::{random_tensor, stream_rng};
use clifford_bloch::tensor::AntisymTensor;

fn main() -> clifford_bloch::Result<()> {
    let g = random_tensor(&mut stream_rng(3, 0), 4, 2, 0.5);
    println!("m=2: r = {:.6}, T4 = {:.6}", frobenius_r(&g)?, trace_t4(&g)?);
    let (lhs, rhs) = det_identity_check(&g, 2)?;
    println!("  2r² − T4 = {lhs:.12}, 4·det G = {rhs:.12}");

    let g = random_tensor(&mut stream_rng(3, 1), 6, 2, 0.5);
    let inv = InvariantSet::of_two_tensor(&g)?;
    println!("m=3: {}", serde_json::to_string(&inv).unwrap());
    let (lhs, rhs) = dual_identity(&g, 3)?;
    println!("  2r² − T4 = {lhs:.12}, dual form = {rhs:.12}");
    println!(
        "  D³ = {:.12} (ε-sum {:.12}, 48·Pf {:.12})",
        epsilon_d3(&g)?,
        epsilon_d3_bruteforce(&g)?,
        48.0 * pfaffian(&g.to_matrix()?)
    );

    let block = AntisymTensor::from_entries(6, 2, &[(&[1, 2], 1.0), (&[3, 4], 1.0), (&[5, 6], 1.0)])?;
    println!("canonical block: D³ = {}", epsilon_d3(&block)?);
    Ok(())
}
