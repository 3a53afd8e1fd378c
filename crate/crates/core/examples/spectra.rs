//! Closed-form spectra of vector and 2-tensor configurations next to the eigensolver.

use clifford_bloch::clifford::{full_basis, BasisMode};
use clifford_bloch::coords::tensor_config;
use clifford_bloch::spectra::{
    degeneracy_pattern, numeric_spectrum, tunnel_spectrum, two_tensor_spectrum, vector_spectrum,
};
use clifford_bloch::tensor::AntisymTensor;

fn main() -> clifford_bloch::Result<()> {
    let v = AntisymTensor::vector(&[0.3, -0.2, 0.1, 0.4]);
    let s = vector_spectrum(2, &v, None)?;
    println!("vector m=2: {:?}", degeneracy_pattern(&s, 1e-8));

    let g = AntisymTensor::from_entries(4, 2, &[(&[1, 2], 0.6), (&[3, 4], 0.3)])?;
    let closed = two_tensor_spectrum(2, &g)?;
    let oracle = numeric_spectrum(&tensor_config(&full_basis(2, BasisMode::Standard)?, &g)?)?;
    println!(
        "2-tensor m=2: {:?}, |Δ| = {:e}",
        closed.eigenvalues,
        closed.max_abs_diff(&oracle)
    );

    // three equal blocks: the D³ term splits the octet into two quartets
    let a = 1.0 / 3f64.sqrt();
    let g = AntisymTensor::from_entries(6, 2, &[(&[1, 2], a), (&[3, 4], a), (&[5, 6], a)])?;
    let closed = two_tensor_spectrum(3, &g)?;
    let oracle = numeric_spectrum(&tensor_config(&full_basis(3, BasisMode::Standard)?, &g)?)?;
    println!(
        "2-tensor m=3: {:?}, |Δ| = {:e}",
        degeneracy_pattern(&closed, 1e-8),
        closed.max_abs_diff(&oracle)
    );

    println!(
        "tunnel (0.3, 0.2, 0.4): {:?}",
        tunnel_spectrum(0.3, 0.2, 0.4).eigenvalues
    );
    Ok(())
}
