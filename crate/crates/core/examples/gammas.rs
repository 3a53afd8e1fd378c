//! Generators, chirality and the full Hermitian basis for a few qubit counts.

use clifford_bloch::clifford::{full_basis, verify_algebra, BasisMode};

fn main() -> clifford_bloch::Result<()> {
    for m in 1..=4 {
        let basis = full_basis(m, BasisMode::Standard)?;
        let report = verify_algebra(&basis);
        println!(
            "m={m}: {} generators of size {}, {} basis elements, max residual {:e}",
            basis.gammas().len(),
            basis.dim(),
            basis.elements().len(),
            report.max_residual()
        );
    }

    // m = 1 gives the Pauli matrices back
    let basis = full_basis(1, BasisMode::Standard)?;
    for (i, g) in basis.gammas().iter().enumerate() {
        println!("Γ{} = {:?}", i + 1, g.entries());
    }
    println!("Γ3 = {:?}", basis.chirality().entries());

    let extended = full_basis(2, BasisMode::Extended)?;
    println!("extended m=2: {} generators", extended.side());
    Ok(())
}
