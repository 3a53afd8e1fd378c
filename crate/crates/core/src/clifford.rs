//! Hermitian matrix representation of the Clifford algebra Cl_{2m}.
//!
//! Generators are built by the Kronecker iteration
//! `Γ^{m+1} = {Γ^m_1⊗σ1, …, Γ^m_{2m}⊗σ1, I⊗σ2, I⊗σ3}` starting from `{σ1, σ2}`.
//! Graded elements are `i^{k(k−1)/2} Γ_{i1}⋯Γ_{ik}` for increasing indices,
//! which makes every element hermitian and `trace(E_A E_B) = 2^m δ_AB`.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kron, pauli, ComplexMatrix, I, ONE};
use crate::tensor::{combinations, MultiIndex};

/// Largest m for which generators are built at all.
pub const MAX_M: usize = 6;
/// Largest m for which the exhaustive pairwise orthogonality check runs.
pub const MAX_EXHAUSTIVE_M: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisMode {
    /// 2m generators, grades 0..=2m.
    Standard,
    /// 2m generators plus the chirality element, grades 0..=m.
    Extended,
}

impl BasisMode {
    pub fn side(self, m: usize) -> usize {
        match self {
            BasisMode::Standard => 2 * m,
            BasisMode::Extended => 2 * m + 1,
        }
    }

    pub fn max_grade(self, m: usize) -> usize {
        match self {
            BasisMode::Standard => 2 * m,
            BasisMode::Extended => m,
        }
    }
}

impl fmt::Display for BasisMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisMode::Standard => "standard",
            BasisMode::Extended => "extended",
        })
    }
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 || m > MAX_M {
        Err(Error::ResourceLimit(format!("m must be in 1..={MAX_M}, got {m}")))
    } else {
        Ok(())
    }
}

pub fn generate_gammas(m: usize) -> Result<Vec<ComplexMatrix>> {
    check_m(m)?;
    let mut gammas = vec![pauli(1), pauli(2)];
    for level in 1..m {
        let id = ComplexMatrix::identity(1 << level);
        let s1 = pauli(1);
        let mut next: Vec<ComplexMatrix> = gammas.iter().map(|g| kron(g, &s1)).collect();
        next.push(kron(&id, &pauli(2)));
        next.push(kron(&id, &pauli(3)));
        gammas = next;
    }
    Ok(gammas)
}

/// `Γ_{2m+1} = (−i)^m Γ_1⋯Γ_{2m}`.
pub fn chirality(m: usize) -> Result<ComplexMatrix> {
    let gammas = generate_gammas(m)?;
    Ok(chirality_of(&gammas))
}

fn chirality_of(gammas: &[ComplexMatrix]) -> ComplexMatrix {
    let m = gammas.len() / 2;
    let product = ordered_product(gammas, &(1..=gammas.len()).collect::<Vec<_>>());
    product.scale(Complex64::new(0.0, -1.0).powu(m as u32))
}

/// `Γ_1, …, Γ_{2m}, Γ_{2m+1}`: the 2m+1 mutually anticommuting generators.
pub fn extended_gammas(m: usize) -> Result<Vec<ComplexMatrix>> {
    let mut gammas = generate_gammas(m)?;
    let chi = chirality_of(&gammas);
    gammas.push(chi);
    Ok(gammas)
}

/// `i^{k(k−1)/2}`
pub fn hermiticity_phase(k: usize) -> Complex64 {
    match (k * k.saturating_sub(1) / 2) % 4 {
        0 => ONE,
        1 => I,
        2 => -ONE,
        _ => -I,
    }
}

fn ordered_product(gammas: &[ComplexMatrix], indices: &[usize]) -> ComplexMatrix {
    let dim = gammas[0].dim();
    indices
        .iter()
        .fold(ComplexMatrix::identity(dim), |acc, &i| &acc * &gammas[i - 1])
}

fn element_from(gammas: &[ComplexMatrix], idx: &MultiIndex) -> ComplexMatrix {
    ordered_product(gammas, idx.indices()).scale(hermiticity_phase(idx.grade()))
}

/// Standard-mode basis element for an increasing multi-index over `1..=2m`.
pub fn basis_element(m: usize, idx: &MultiIndex) -> Result<ComplexMatrix> {
    let gammas = generate_gammas(m)?;
    let checked = MultiIndex::new(2 * m, idx.indices().to_vec())?;
    Ok(element_from(&gammas, &checked))
}

/// All graded basis elements for one `m` and mode, plus the generators they
/// were built from. Immutable once constructed.
#[derive(Clone, Debug)]
pub struct CliffordBasis {
    m: usize,
    mode: BasisMode,
    gammas: Vec<ComplexMatrix>,
    chirality: ComplexMatrix,
    elements: Vec<(MultiIndex, ComplexMatrix)>,
    lookup: HashMap<MultiIndex, usize>,
    certificate: Option<AlgebraReport>,
}

pub fn full_basis(m: usize, mode: BasisMode) -> Result<CliffordBasis> {
    let gammas = match mode {
        BasisMode::Standard => generate_gammas(m)?,
        BasisMode::Extended => extended_gammas(m)?,
    };
    let side = mode.side(m);
    let mut elements = Vec::new();
    for k in 0..=mode.max_grade(m) {
        for idx in combinations(side, k) {
            let e = element_from(&gammas, &idx);
            elements.push((idx, e));
        }
    }
    let mut basis = CliffordBasis::from_parts(m, mode, gammas, elements);
    if m <= MAX_EXHAUSTIVE_M {
        basis.certificate = Some(verify_algebra(&basis));
    }
    Ok(basis)
}

impl CliffordBasis {
    /// Assembles a basis without any checks; `verify_algebra` reports on it.
    pub fn from_parts(
        m: usize,
        mode: BasisMode,
        gammas: Vec<ComplexMatrix>,
        elements: Vec<(MultiIndex, ComplexMatrix)>,
    ) -> Self {
        let chirality = chirality_of(&gammas[..2 * m]);
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, (idx, _))| (idx.clone(), i))
            .collect();
        Self {
            m,
            mode,
            gammas,
            chirality,
            elements,
            lookup,
            certificate: None,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mode(&self) -> BasisMode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn side(&self) -> usize {
        self.mode.side(self.m)
    }

    pub fn gammas(&self) -> &[ComplexMatrix] {
        &self.gammas
    }

    pub fn chirality(&self) -> &ComplexMatrix {
        &self.chirality
    }

    pub fn elements(&self) -> &[(MultiIndex, ComplexMatrix)] {
        &self.elements
    }

    pub fn element(&self, idx: &MultiIndex) -> Option<&ComplexMatrix> {
        self.lookup.get(idx).map(|&i| &self.elements[i].1)
    }

    pub fn certificate(&self) -> Option<&AlgebraReport> {
        self.certificate.as_ref()
    }

    /// Complex coefficients `c_A = trace(E_A M) / 2^m` of `M` in this basis.
    pub fn project(&self, matrix: &ComplexMatrix) -> Vec<Complex64> {
        let norm = self.dim() as f64;
        self.elements
            .iter()
            .map(|(_, e)| e.trace_product(matrix) / norm)
            .collect()
    }

    /// `Σ c_A E_A`
    pub fn synthesize(&self, coeffs: &[Complex64]) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim());
        for ((_, e), c) in self.elements.iter().zip(coeffs) {
            if *c != Complex64::new(0.0, 0.0) {
                out.add_scaled(*c, e);
            }
        }
        out
    }
}

/// Residuals of the defining relations of a basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub m: usize,
    pub mode: BasisMode,
    pub generator_count: usize,
    pub element_count: usize,
    /// max over generator pairs of |Γ_iΓ_j + Γ_jΓ_i − 2δ_ij I|
    pub max_anticommutator_residual: f64,
    pub max_hermiticity_residual: f64,
    /// max |trace E| over non-scalar elements
    pub max_trace_residual: f64,
    /// max |trace(E_A E_B) − 2^m δ_AB| over the checked pairs
    pub max_orthogonality_residual: f64,
    pub pairs_checked: usize,
    pub exhaustive: bool,
}

impl AlgebraReport {
    pub fn max_residual(&self) -> f64 {
        self.max_anticommutator_residual
            .max(self.max_hermiticity_residual)
            .max(self.max_trace_residual)
            .max(self.max_orthogonality_residual)
    }
}

const SPOT_CHECK_PAIRS: usize = 200;
const SPOT_CHECK_SEED: u64 = 0x5eed_c11f;

pub fn verify_algebra(basis: &CliffordBasis) -> AlgebraReport {
    let dim = basis.dim();
    let id = ComplexMatrix::identity(dim);
    let mut anti: f64 = 0.0;
    for (i, gi) in basis.gammas.iter().enumerate() {
        for (j, gj) in basis.gammas.iter().enumerate() {
            let expected = if i == j {
                id.scale_real(2.0)
            } else {
                ComplexMatrix::zeros(dim)
            };
            anti = anti.max(gi.anticommutator(gj).max_abs_diff(&expected));
        }
    }

    let mut herm: f64 = 0.0;
    let mut tr: f64 = 0.0;
    for (idx, e) in &basis.elements {
        herm = herm.max(e.hermiticity_residual());
        if idx.grade() > 0 {
            tr = tr.max(e.trace().norm());
        }
    }

    let n = basis.elements.len();
    let check = |a: usize, b: usize| {
        let t = basis.elements[a].1.trace_product(&basis.elements[b].1);
        let expected = if a == b { dim as f64 } else { 0.0 };
        (t - expected).norm()
    };
    let mut ortho: f64 = 0.0;
    let mut pairs = 0;
    let exhaustive = basis.m <= MAX_EXHAUSTIVE_M;
    if exhaustive {
        for a in 0..n {
            for b in a..n {
                ortho = ortho.max(check(a, b));
                pairs += 1;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
        for _ in 0..SPOT_CHECK_PAIRS {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            ortho = ortho.max(check(a, b));
            pairs += 1;
        }
    }

    AlgebraReport {
        m: basis.m,
        mode: basis.mode,
        generator_count: basis.gammas.len(),
        element_count: n,
        max_anticommutator_residual: anti,
        max_hermiticity_residual: herm,
        max_trace_residual: tr,
        max_orthogonality_residual: ortho,
        pairs_checked: pairs,
        exhaustive,
    }
}
