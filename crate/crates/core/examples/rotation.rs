//! An SO(2m) rotation of the coordinates against conjugation by its spin lift.

use clifford_bloch::clifford::{full_basis, BasisMode};
use clifford_bloch::coords::{decode, encode};
use clifford_bloch::random::{random_generator, random_state, stream_rng};
use clifford_bloch::spectra::numeric_spectrum;
use clifford_bloch::symmetry::{
    conjugate_state, orthogonal_from_generator, rotate_coords, spin_lift, RotationGenerator,
};

fn main() -> clifford_bloch::Result<()> {
    let m = 3;
    let basis = full_basis(m, BasisMode::Standard)?;
    let mut rng = stream_rng(7, 0);
    let rho = random_state(&mut rng, m, 3)?;
    let coords = decode(&rho, &basis)?;

    let generators = [
        RotationGenerator::plane(2 * m, 1, 4, 0.9)?,
        random_generator(&mut rng, 2 * m, 2.0),
    ];
    for generator in &generators {
        let l = orthogonal_from_generator(generator);
        let u = spin_lift(generator, &basis)?;
        let lhs = encode(&rotate_coords(&coords, &l)?, &basis)?;
        let rhs = conjugate_state(&rho, &u)?;
        println!(
            "det L = {:+.3}, ‖encode∘rotate − U ρ U†‖ = {:e}, spectrum shift {:e}",
            l.determinant(),
            lhs.matrix().max_abs_diff(rhs.matrix()),
            numeric_spectrum(&lhs)?.max_abs_diff(&numeric_spectrum(&rho)?)
        );
    }
    Ok(())
}
