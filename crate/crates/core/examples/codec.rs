//! Density matrix <-> Clifford coordinates, in both index conventions.

use clifford_bloch::clifford::{full_basis, BasisMode};
use clifford_bloch::coords::{alt_expand, alt_project, decode, encode, DensityMatrix};
use clifford_bloch::random::{random_state, stream_rng};

fn main() -> clifford_bloch::Result<()> {
    let m = 2;
    let rho = random_state(&mut stream_rng(1, 0), m, 2)?;

    let standard = full_basis(m, BasisMode::Standard)?;
    let coords = decode(&rho, &standard)?;
    for (idx, value) in coords.entries() {
        if value.abs() > 1e-12 {
            println!("G{:?} = {value:+.6}", idx.indices());
        }
    }
    let back = encode(&coords, &standard)?;
    println!(
        "standard round trip error {:e}",
        back.matrix().max_abs_diff(rho.matrix())
    );

    let extended = full_basis(m, BasisMode::Extended)?;
    let projection = alt_project(&rho, &extended)?;
    let back = alt_expand(&projection.coords, &extended)?;
    println!(
        "extended round trip error {:e}, residual {:e}",
        back.matrix().max_abs_diff(rho.matrix()),
        projection.residual_norm()
    );

    println!("{}", serde_json::to_string_pretty(&coords).unwrap());
    let mixed = decode(&DensityMatrix::maximally_mixed(m), &standard)?;
    println!(
        "I/4 has {} nonzero coordinates",
        mixed.entries().iter().filter(|(_, v)| *v != 0.0).count()
    );
    Ok(())
}
