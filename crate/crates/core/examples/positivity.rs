//! Admissibility verdicts: Bloch ball, the (r, T4) region, tunnels and Descartes.

use clifford_bloch::clifford::{full_basis, BasisMode};
use clifford_bloch::coords::{decode, DensityMatrix};
use clifford_bloch::domains::{
    compare_rz_display, descartes_positivity, rt4_domain, tunnel_membership, validate, vector_domain, DOMAIN_TOL,
};
use clifford_bloch::linalg::char_poly;
use clifford_bloch::random::{random_unit_trace_hermitian, stream_rng};
use clifford_bloch::tensor::AntisymTensor;

fn main() -> clifford_bloch::Result<()> {
    let v = vector_domain(&AntisymTensor::vector(&[0.6, 0.8]), None, DOMAIN_TOL)?;
    println!("pure qubit: admissible={} boundary={}", v.admissible, v.boundary);

    for (r, t4) in [(0.5, 0.4), (1.0, 2.0), (0.9, 0.2)] {
        let v = rt4_domain(r, t4, DOMAIN_TOL);
        println!(
            "(r, T4) = ({r}, {t4}): admissible={} violated={:?}",
            v.admissible, v.violated
        );
    }

    let t = tunnel_membership(0.5, 0.5, 0.0, DOMAIN_TOL);
    println!(
        "tunnel (0.5, 0.5, 0): admissible={} margin={:.3}",
        t.admissible, t.margin
    );

    let h = random_unit_trace_hermitian(&mut stream_rng(2, 0), 3, 0.1);
    let d = descartes_positivity(&char_poly(&h)?, DOMAIN_TOL);
    println!("random m=3 matrix by Descartes: admissible={}", d.admissible);

    let rho = DensityMatrix::new(3, h)?;
    let basis = full_basis(3, BasisMode::Standard)?;
    let routed = validate(&decode(&rho, &basis)?, &basis, DOMAIN_TOL)?;
    println!("validate routes it via {:?}", routed.route);

    let rz = compare_rz_display(41, DOMAIN_TOL)?;
    println!(
        "(r, z) display vs (r, T4): {} realizable disagreements",
        rz.realizable_disagreements()
    );
    Ok(())
}
