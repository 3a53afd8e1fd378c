//! Dense complex linear algebra: products, Kronecker products, the Jacobi
//! hermitian eigensolver, characteristic polynomials and quartic roots.

mod eigen;
mod matrix;
mod poly;
mod roots;

pub use eigen::{exp_i_hermitian, hermitian_eigen, hermitian_eigenvalues, HermitianEigen, DEFAULT_TOL, MAX_SWEEPS};
pub use matrix::{kron, pauli, ComplexMatrix, RealMatrix, I, ONE, ZERO};
pub use poly::{char_poly, RealPolynomial};
pub use roots::{cubic_roots, durand_kerner, quartic_roots, real_quartic_roots, RESOLVENT_FALLBACK_TOL};
