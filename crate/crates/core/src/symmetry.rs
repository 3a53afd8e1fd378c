//! The O(2m) action on coordinates and its spin lift to unitaries.
//!
//! Conventions: `α_{ij}` (i<j) rotates axis i toward axis j, so the rotation is
//! `L = exp(X)` with `X_{ji} = α_{ij} = −X_{ij}`. The lift is
//! `U = exp(−(i/2) Σ_{i<j} α_ij · iΓ_iΓ_j)`, and with these choices
//! `encode(rotate_coords(G, L)) = U† encode(G) U`.

use num_complex::Complex64;

use crate::clifford::CliffordBasis;
use crate::coords::{DensityMatrix, StateCoords};
use crate::error::{Error, Result};
use crate::linalg::{exp_i_hermitian, ComplexMatrix, RealMatrix};
use crate::tensor::{combinations, AntisymTensor};

const ORTHOGONALITY_TOL: f64 = 1e-10;
const UNITARITY_TOL: f64 = 1e-8;
const SERIES_TOL: f64 = 1e-13;

/// Antisymmetric array of rotation parameters over `1..=side`.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationGenerator {
    alpha: AntisymTensor,
}

impl RotationGenerator {
    pub fn new(alpha: AntisymTensor) -> Result<Self> {
        if alpha.grade() != 2 {
            return Err(Error::GradeMismatch {
                expected: 2,
                found: alpha.grade(),
            });
        }
        Ok(Self { alpha })
    }

    /// Rotation by `angle` in the (i, j) plane.
    pub fn plane(side: usize, i: usize, j: usize, angle: f64) -> Result<Self> {
        Self::new(AntisymTensor::from_entries(side, 2, &[(&[i, j], angle)])?)
    }

    pub fn side(&self) -> usize {
        self.alpha.side()
    }

    pub fn alpha(&self) -> &AntisymTensor {
        &self.alpha
    }

    fn generator_matrix(&self) -> RealMatrix {
        let n = self.side();
        RealMatrix::from_fn(n, |i, j| -self.alpha.get(&[i + 1, j + 1]))
    }
}

/// Real matrix with `LᵀL = I`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalMatrix(RealMatrix);

impl OrthogonalMatrix {
    pub fn new(l: RealMatrix) -> Result<Self> {
        let residual = (&l.transpose() * &l).max_abs_diff(&RealMatrix::identity(l.dim()));
        if residual > ORTHOGONALITY_TOL {
            return Err(Error::Invalid(format!(
                "matrix is not orthogonal (residual {residual:e})"
            )));
        }
        Ok(Self(l))
    }

    /// `diag(1, …, −1 (at 1-based axis), …, 1)`
    pub fn reflection(side: usize, axis: usize) -> Self {
        Self(RealMatrix::from_fn(side, |i, j| match (i == j, i + 1 == axis) {
            (true, true) => -1.0,
            (true, false) => 1.0,
            _ => 0.0,
        }))
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn compose(&self, other: &OrthogonalMatrix) -> Self {
        Self(&self.0 * &other.0)
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }
}

/// `exp` of the generator matrix by scaling and squaring.
pub fn orthogonal_from_generator(generator: &RotationGenerator) -> OrthogonalMatrix {
    let x = generator.generator_matrix();
    let n = x.dim();
    let norm = x.max_abs() * n as f64;
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let xs = x.scale(scale);
    let mut result = RealMatrix::identity(n);
    let mut term = RealMatrix::identity(n);
    for k in 1..64 {
        term = (&term * &xs).scale(1.0 / k as f64);
        result = &result + &term;
        if term.max_abs() < SERIES_TOL * 1e-3 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    OrthogonalMatrix(result)
}

/// `U = exp(−(i/4) α_ij Γ_ij)` summed over both index orders, `Γ_ij = iΓ_iΓ_j`.
pub fn spin_lift(generator: &RotationGenerator, basis: &CliffordBasis) -> Result<ComplexMatrix> {
    if generator.side() != basis.side() {
        return Err(Error::ModeMismatch {
            basis: format!("{} (side {})", basis.mode(), basis.side()),
            coords: format!("generator side {}", generator.side()),
        });
    }
    let gammas = basis.gammas();
    let mut h = ComplexMatrix::zeros(basis.dim());
    for (idx, a) in generator.alpha.iter() {
        let [i, j] = [idx.indices()[0], idx.indices()[1]];
        let gij = (&gammas[i - 1] * &gammas[j - 1]).scale(Complex64::new(0.0, 1.0));
        // both orders: α_ij Γ_ij + α_ji Γ_ji = 2 α_ij Γ_ij, times 1/4
        h.add_scaled(Complex64::new(0.5 * a, 0.0), &gij);
    }
    exp_i_hermitian(&h, -1.0)
}

/// Determinant of the k×k minor of `l` with the given 1-based rows and columns.
fn minor(l: &RealMatrix, rows: &[usize], cols: &[usize]) -> f64 {
    let k = rows.len();
    RealMatrix::from_fn(k, |a, b| l[(rows[a] - 1, cols[b] - 1)]).determinant()
}

/// Applies `L` to every grade: `G'_{i1…ik} = L_{i1j1}⋯L_{ikjk} G_{j1…jk}`.
/// On increasing tuples this is `G'_I = Σ_J det(L[I, J]) G_J`.
pub fn rotate_tensor(tensor: &AntisymTensor, l: &OrthogonalMatrix) -> Result<AntisymTensor> {
    if tensor.side() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: tensor.side(),
            found: l.dim(),
        });
    }
    let k = tensor.grade();
    let mut out = AntisymTensor::zeros(tensor.side(), k);
    for target in combinations(tensor.side(), k) {
        let mut acc = 0.0;
        for (source, v) in tensor.iter() {
            acc += minor(l.matrix(), target.indices(), source.indices()) * v;
        }
        if acc != 0.0 {
            out.set(target.indices(), acc)?;
        }
    }
    Ok(out)
}

pub fn rotate_coords(coords: &StateCoords, l: &OrthogonalMatrix) -> Result<StateCoords> {
    if coords.side() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: coords.side(),
            found: l.dim(),
        });
    }
    let mut out = StateCoords::new(coords.m(), coords.mode());
    out.scalar = coords.scalar;
    for k in coords.active_grades() {
        out.set_grade(rotate_tensor(&coords.grade(k), l)?)?;
    }
    Ok(out)
}

/// `U† ρ U`
pub fn conjugate_state(rho: &DensityMatrix, u: &ComplexMatrix) -> Result<DensityMatrix> {
    let residual = u.unitarity_residual();
    if residual > UNITARITY_TOL {
        return Err(Error::NotUnitary { residual });
    }
    let out = &(&u.adjoint() * rho.matrix()) * u;
    DensityMatrix::new(rho.m(), out)
}
