//! Codec between density matrices and graded antisymmetric coordinates:
//! `ρ = 2^{−m} (G⁰ I + Σ_k Σ_{i1<…<ik} G^k_{i1…ik} E_{i1…ik})` and
//! `G_A = trace(ρ E_A)`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::clifford::{BasisMode, CliffordBasis};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tensor::{binomial, AntisymTensor, MultiIndex};

pub const HERMITIAN_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-8;
const IMAG_TOL: f64 = 1e-10;

/// Hermitian unit-trace matrix of dimension 2^m. Positivity is not assumed.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    m: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(m: usize, matrix: ComplexMatrix) -> Result<Self> {
        if matrix.dim() != 1 << m {
            return Err(Error::DimensionMismatch {
                expected: 1 << m,
                found: matrix.dim(),
            });
        }
        let residual = matrix.hermiticity_residual();
        if residual > HERMITIAN_TOL {
            return Err(Error::NotHermitian { residual });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::NonUnitTrace { trace: trace.re });
        }
        Ok(Self { m, matrix })
    }

    /// Infers m from the matrix dimension.
    pub fn from_matrix(matrix: ComplexMatrix) -> Result<Self> {
        let dim = matrix.dim();
        if !dim.is_power_of_two() || dim < 2 {
            return Err(Error::Invalid(format!("dimension {dim} is not 2^m with m ≥ 1")));
        }
        Self::new(dim.trailing_zeros() as usize, matrix)
    }

    pub fn maximally_mixed(m: usize) -> Self {
        let dim = 1 << m;
        Self {
            m,
            matrix: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

/// Scalar plus one antisymmetric tensor per grade. Grades that are absent are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct StateCoords {
    m: usize,
    mode: BasisMode,
    pub scalar: f64,
    grades: BTreeMap<usize, AntisymTensor>,
}

impl StateCoords {
    /// Scalar 1, all grades zero (the maximally mixed state).
    pub fn new(m: usize, mode: BasisMode) -> Self {
        Self {
            m,
            mode,
            scalar: 1.0,
            grades: BTreeMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mode(&self) -> BasisMode {
        self.mode
    }

    pub fn side(&self) -> usize {
        self.mode.side(self.m)
    }

    pub fn max_grade(&self) -> usize {
        self.mode.max_grade(self.m)
    }

    pub fn with_grade(mut self, tensor: AntisymTensor) -> Result<Self> {
        self.set_grade(tensor)?;
        Ok(self)
    }

    pub fn set_grade(&mut self, tensor: AntisymTensor) -> Result<()> {
        let k = tensor.grade();
        if k == 0 || k > self.max_grade() {
            return Err(Error::GradeOutOfRange {
                k,
                max: self.max_grade(),
            });
        }
        if tensor.side() != self.side() {
            return Err(Error::DimensionMismatch {
                expected: self.side(),
                found: tensor.side(),
            });
        }
        if tensor.is_zero() {
            self.grades.remove(&k);
        } else {
            self.grades.insert(k, tensor);
        }
        Ok(())
    }

    pub fn set(&mut self, idx: &[usize], value: f64) -> Result<()> {
        let k = idx.len();
        if k == 0 {
            self.scalar = value;
            return Ok(());
        }
        let mut t = self.grade(k);
        t.set(idx, value)?;
        self.set_grade(t)
    }

    /// Grade-`k` tensor (zero tensor when absent).
    pub fn grade(&self, k: usize) -> AntisymTensor {
        self.grades
            .get(&k)
            .cloned()
            .unwrap_or_else(|| AntisymTensor::zeros(self.side(), k))
    }

    /// Grades carrying at least one nonzero component.
    pub fn active_grades(&self) -> Vec<usize> {
        self.grades.keys().copied().collect()
    }

    /// Component for an increasing multi-index (grade 0 is the scalar).
    pub fn component(&self, idx: &MultiIndex) -> f64 {
        if idx.grade() == 0 {
            return self.scalar;
        }
        self.grades.get(&idx.grade()).map_or(0.0, |t| t.get_sorted(idx))
    }

    /// Number of non-scalar coordinate slots.
    pub fn slot_count(&self) -> usize {
        (1..=self.max_grade()).map(|k| binomial(self.side(), k)).sum()
    }

    /// Every component with its increasing multi-index, grade by grade.
    pub fn entries(&self) -> Vec<(MultiIndex, f64)> {
        let mut out = vec![(MultiIndex::empty(), self.scalar)];
        for t in self.grades.values() {
            out.extend(t.iter().map(|(i, v)| (i.clone(), v)));
        }
        out
    }

    /// Largest componentwise difference.
    pub fn max_abs_diff(&self, other: &StateCoords) -> f64 {
        let mut worst = (self.scalar - other.scalar).abs();
        for (idx, _) in self.entries().into_iter().chain(other.entries()) {
            worst = worst.max((self.component(&idx) - other.component(&idx)).abs());
        }
        worst
    }
}

fn check_mode(coords: &StateCoords, basis: &CliffordBasis) -> Result<()> {
    if coords.mode != basis.mode() {
        return Err(Error::ModeMismatch {
            basis: basis.mode().to_string(),
            coords: coords.mode.to_string(),
        });
    }
    if coords.m != basis.m() {
        return Err(Error::DimensionMismatch {
            expected: basis.m(),
            found: coords.m,
        });
    }
    Ok(())
}

/// `2^{−m} (G⁰ I + G ∘ E)` without any normalization requirement.
pub fn encode_matrix(coords: &StateCoords, basis: &CliffordBasis) -> Result<ComplexMatrix> {
    check_mode(coords, basis)?;
    let dim = basis.dim();
    let mut rho = ComplexMatrix::identity(dim).scale_real(coords.scalar);
    for t in coords.grades.values() {
        for (idx, v) in t.iter() {
            let e = basis
                .element(idx)
                .ok_or_else(|| Error::BadIndex(format!("{idx:?} not in basis")))?;
            rho.add_scaled(Complex64::new(v, 0.0), e);
        }
    }
    Ok(rho.scale_real(1.0 / dim as f64))
}

/// Encodes normalized coordinates (scalar = 1) as a density matrix.
pub fn encode(coords: &StateCoords, basis: &CliffordBasis) -> Result<DensityMatrix> {
    let matrix = encode_matrix(coords, basis)?;
    DensityMatrix::new(basis.m(), matrix)
}

/// `G_A = trace(ρ E_A)` for every element of `basis`.
pub fn decode(rho: &DensityMatrix, basis: &CliffordBasis) -> Result<StateCoords> {
    if rho.m != basis.m() {
        return Err(Error::DimensionMismatch {
            expected: basis.m(),
            found: rho.m,
        });
    }
    let mut coords = StateCoords::new(basis.m(), basis.mode());
    let mut tensors: BTreeMap<usize, AntisymTensor> = BTreeMap::new();
    for (idx, e) in basis.elements() {
        let t = e.trace_product(&rho.matrix);
        if t.im.abs() > IMAG_TOL {
            return Err(Error::NotHermitian { residual: t.im.abs() });
        }
        if idx.grade() == 0 {
            coords.scalar = t.re;
        } else if t.re != 0.0 {
            tensors
                .entry(idx.grade())
                .or_insert_with(|| AntisymTensor::zeros(basis.side(), idx.grade()))
                .set(idx.indices(), t.re)?;
        }
    }
    for t in tensors.into_values() {
        coords.set_grade(t)?;
    }
    Ok(coords)
}

/// `(I + G ∘ E^k) / 2^m`
pub fn tensor_config(basis: &CliffordBasis, tensor: &AntisymTensor) -> Result<DensityMatrix> {
    let k = tensor.grade();
    let max = basis.mode().max_grade(basis.m());
    if k == 0 || k > max {
        return Err(Error::GradeOutOfRange { k, max });
    }
    let coords = StateCoords::new(basis.m(), basis.mode()).with_grade(tensor.clone())?;
    encode(&coords, basis)
}

/// Expansion over the 2m+1 extended generators, grades 0..=m.
pub fn alt_expand(coords: &StateCoords, basis: &CliffordBasis) -> Result<DensityMatrix> {
    if basis.mode() != BasisMode::Extended {
        return Err(Error::ModeMismatch {
            basis: basis.mode().to_string(),
            coords: BasisMode::Extended.to_string(),
        });
    }
    encode(coords, basis)
}

/// Projection onto the extended expansion together with the part of `ρ` it
/// does not reproduce.
#[derive(Clone, Debug)]
pub struct AltProjection {
    pub coords: StateCoords,
    pub residual: ComplexMatrix,
}

impl AltProjection {
    pub fn residual_norm(&self) -> f64 {
        self.residual.frobenius_norm()
    }
}

pub fn alt_project(rho: &DensityMatrix, basis: &CliffordBasis) -> Result<AltProjection> {
    if basis.mode() != BasisMode::Extended {
        return Err(Error::ModeMismatch {
            basis: basis.mode().to_string(),
            coords: BasisMode::Extended.to_string(),
        });
    }
    let coords = decode(rho, basis)?;
    let rebuilt = encode_matrix(&coords, basis)?;
    let residual = &rho.matrix - &rebuilt;
    Ok(AltProjection { coords, residual })
}

// JSON: {"m":2,"mode":"standard","scalar":1.0,"grades":{"2":[{"idx":[1,2],"val":0.6}]}}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    idx: Vec<usize>,
    val: f64,
}

fn unit_scalar() -> f64 {
    1.0
}

#[derive(Serialize, Deserialize)]
struct CoordsJson {
    m: usize,
    mode: BasisMode,
    #[serde(default = "unit_scalar")]
    scalar: f64,
    #[serde(default)]
    grades: BTreeMap<String, Vec<ComponentJson>>,
}

impl Serialize for StateCoords {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let grades = self
            .grades
            .iter()
            .map(|(k, t)| {
                let comps = t
                    .iter()
                    .map(|(i, v)| ComponentJson {
                        idx: i.indices().to_vec(),
                        val: v,
                    })
                    .collect();
                (k.to_string(), comps)
            })
            .collect();
        CoordsJson {
            m: self.m,
            mode: self.mode,
            scalar: self.scalar,
            grades,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StateCoords {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CoordsJson::deserialize(d)?;
        if raw.m == 0 || raw.m > crate::clifford::MAX_M {
            return Err(D::Error::custom(format!("m = {} out of range", raw.m)));
        }
        let mut coords = StateCoords::new(raw.m, raw.mode);
        coords.scalar = raw.scalar;
        for (key, comps) in raw.grades {
            let k: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("grade key {key:?} is not an integer")))?;
            for c in comps {
                if c.idx.len() != k {
                    return Err(D::Error::custom(format!("index {:?} listed under grade {k}", c.idx)));
                }
                if !c.val.is_finite() {
                    return Err(D::Error::custom("non-finite coordinate"));
                }
                let current = coords.grade(k).get(&c.idx);
                coords.set(&c.idx, current + c.val).map_err(D::Error::custom)?;
            }
        }
        Ok(coords)
    }
}
