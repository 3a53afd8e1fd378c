//! Closed-form probability spectra of vector and 2-tensor configurations,
//! their factorized characteristic polynomials, and the numeric oracle.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::generate_gammas;
use crate::coords::{DensityMatrix, StateCoords};
use crate::error::{Error, Result};
use crate::invariants::{epsilon_d3, frobenius_r, trace_t4, trace_t6, InvariantSet};
use crate::linalg::{char_poly, hermitian_eigenvalues, real_quartic_roots, ComplexMatrix, RealPolynomial, DEFAULT_TOL};
use crate::tensor::AntisymTensor;

pub const CLUSTER_TOL: f64 = 1e-8;
const IMAG_TOL: f64 = 1e-8;
const FACTORIZATION_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Multiplet {
    pub value: f64,
    pub multiplicity: usize,
}

/// Sorted eigenvalues of a 2^m × 2^m state with their multiplet structure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub m: usize,
    pub eigenvalues: Vec<f64>,
    pub multiplets: Vec<Multiplet>,
}

impl Spectrum {
    pub fn new(m: usize, mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        let multiplets = cluster(&eigenvalues, CLUSTER_TOL);
        Self {
            m,
            eigenvalues,
            multiplets,
        }
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        assert_eq!(self.eigenvalues.len(), other.eigenvalues.len());
        self.eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

fn cluster(sorted: &[f64], tol: f64) -> Vec<Multiplet> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for &v in sorted {
        match out.last_mut() {
            Some((sum, n)) if v - last <= tol => {
                *sum += v;
                *n += 1;
            }
            _ => out.push((v, 1)),
        }
        last = v;
    }
    out.into_iter()
        .map(|(sum, n)| Multiplet {
            value: sum / n as f64,
            multiplicity: n,
        })
        .collect()
}

/// Clusters eigenvalues that lie within `tol` of their sorted neighbour.
pub fn degeneracy_pattern(s: &Spectrum, tol: f64) -> Vec<(f64, usize)> {
    cluster(&s.eigenvalues, tol)
        .into_iter()
        .map(|mp| (mp.value, mp.multiplicity))
        .collect()
}

/// Doublet `(1 ± ‖G̃‖)/2^m`, each value repeated 2^{m−1} times, where
/// `‖G̃‖² = Σ G_i² + (pseudoscalar)²`.
pub fn vector_spectrum(m: usize, g: &AntisymTensor, pseudoscalar: Option<f64>) -> Result<Spectrum> {
    if g.grade() != 1 {
        return Err(Error::GradeMismatch {
            expected: 1,
            found: g.grade(),
        });
    }
    if g.side() != 2 * m {
        return Err(Error::DimensionMismatch {
            expected: 2 * m,
            found: g.side(),
        });
    }
    let p = pseudoscalar.unwrap_or(0.0);
    let norm = (g.norm_sqr() + p * p).sqrt();
    let dim = 1usize << m;
    let half = dim / 2;
    let scale = 1.0 / dim as f64;
    let mut ev = vec![(1.0 - norm) * scale; half];
    ev.extend(std::iter::repeat_n((1.0 + norm) * scale, half));
    Ok(Spectrum::new(m, ev))
}

/// The m = 3 quartic factor in λ, written with the third-order invariant
/// normalized as `D = D³/512` (D³ the ε-contraction):
/// `λ⁴ − λ³/2 + (3−r)λ²/32 + (r−1 ± 64D/3)λ/128 + (2−(r+1)²+T4 ∓ 256D/3)/4096`.
pub fn p4_pm(r: f64, t4: f64, d3: f64, sign: f64) -> RealPolynomial {
    let d = d3 / 512.0;
    RealPolynomial::new(vec![
        (2.0 - (r + 1.0).powi(2) + t4 - sign * 256.0 / 3.0 * d) / 4096.0,
        (r - 1.0 + sign * 64.0 / 3.0 * d) / 128.0,
        (3.0 - r) / 32.0,
        -0.5,
        1.0,
    ])
}

/// The quartet polynomial in `z = 2^m λ`:
/// `z⁴ − 4z³ + 2(3−r)z² − (4(1−r) ∓ D³/6)z + (2−(r+1)²+T4 ∓ D³/6)`.
/// `4096·p4_pm(z/8) = pbar_pm(z)`.
pub fn pbar_pm(r: f64, t4: f64, d3: f64, sign: f64) -> RealPolynomial {
    RealPolynomial::new(vec![
        2.0 - (r + 1.0).powi(2) + t4 - sign * d3 / 6.0,
        -(4.0 * (1.0 - r) - sign * d3 / 6.0),
        2.0 * (3.0 - r),
        -4.0,
        1.0,
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigKind {
    Vector,
    TwoTensor,
}

/// Expanded characteristic polynomial det(ρ − λI) of a pure vector or 2-tensor
/// configuration, built from its invariants. For vectors `r` is ‖G̃‖².
pub fn factorized_charpoly(m: usize, kind: ConfigKind, inv: &InvariantSet) -> Result<RealPolynomial> {
    let dim = (1u64 << m) as f64;
    match kind {
        ConfigKind::Vector => {
            let quad = RealPolynomial::new(vec![(1.0 - inv.r) / (dim * dim), -2.0 / dim, 1.0]);
            Ok(quad.pow(1 << (m - 1)))
        }
        ConfigKind::TwoTensor => {
            let z_poly = match m {
                0 | 1 => return Err(Error::KindMismatch(format!("no 2-tensor configurations at m = {m}"))),
                2 => pbar_pm(inv.r, inv.t4, 0.0, 1.0),
                _ => {
                    let d3 = inv
                        .d3
                        .ok_or_else(|| Error::KindMismatch("2-tensor factorization at m ≥ 3 needs D3".into()))?;
                    pbar_pm(inv.r, inv.t4, d3, 1.0)
                        .mul(&pbar_pm(inv.r, inv.t4, d3, -1.0))
                        .pow(1 << (m - 3))
                }
            };
            Ok(z_poly.rescale_argument(dim).monic())
        }
    }
}

/// `(I + Σ_{i<j} G_ij iΓ_iΓ_j)/2^m` built straight from the generators.
pub fn two_tensor_matrix(m: usize, g: &AntisymTensor) -> Result<ComplexMatrix> {
    let gammas = generate_gammas(m)?;
    let dim = 1usize << m;
    let mut rho = ComplexMatrix::identity(dim);
    for (idx, v) in g.iter() {
        let (i, j) = (idx.indices()[0], idx.indices()[1]);
        let e = (&gammas[i - 1] * &gammas[j - 1]).scale(Complex64::new(0.0, 1.0));
        rho.add_scaled(Complex64::new(v, 0.0), &e);
    }
    Ok(rho.scale_real(1.0 / dim as f64))
}

/// |D³| for tensors of rank ≤ 6, from the power sums of the block weights
/// (`r`, `T4/2`, `T6/2`): `48·√e₃`.
pub fn third_order_magnitude(g: &AntisymTensor) -> Result<f64> {
    let p1 = frobenius_r(g)?;
    let p2 = trace_t4(g)? / 2.0;
    let p3 = trace_t6(g)? / 2.0;
    let e3 = (p1.powi(3) - 3.0 * p1 * p2 + 2.0 * p3) / 6.0;
    Ok(48.0 * e3.max(0.0).sqrt())
}

fn quartet(poly: &RealPolynomial) -> Result<Vec<f64>> {
    let (roots, imag) = real_quartic_roots(poly)?;
    let scale = roots.iter().map(|x| x.abs()).fold(1.0, f64::max);
    if imag > IMAG_TOL * scale {
        return Err(Error::ComplexRoots { residual: imag });
    }
    Ok(roots)
}

/// Closed-form spectrum of `(I + G∘E²)/2^m`.
///
/// m = 2 uses `(1 ± √(r ± √(2r²−T4)))/4`; m = 3 the two quartic factors split
/// by the sign of D³; m ≥ 4 the quartets of `(P̄₊P̄₋)^{2^{m−3}}`, accepted only
/// after its coefficients match the characteristic polynomial of the encoded
/// state.
pub fn two_tensor_spectrum(m: usize, g: &AntisymTensor) -> Result<Spectrum> {
    if g.grade() != 2 {
        return Err(Error::GradeMismatch {
            expected: 2,
            found: g.grade(),
        });
    }
    if m < 2 {
        return Err(Error::UnsupportedM(m));
    }
    if g.side() != 2 * m {
        return Err(Error::DimensionMismatch {
            expected: 2 * m,
            found: g.side(),
        });
    }
    let r = frobenius_r(g)?;
    let t4 = trace_t4(g)?;
    match m {
        2 => {
            let disc = 2.0 * r * r - t4;
            let root = disc.max(0.0).sqrt();
            let mut ev = Vec::with_capacity(4);
            for inner in [r + root, r - root] {
                if inner < -IMAG_TOL {
                    return Err(Error::ComplexRoots {
                        residual: inner.abs().sqrt(),
                    });
                }
                let s = inner.max(0.0).sqrt();
                ev.push((1.0 - s) / 4.0);
                ev.push((1.0 + s) / 4.0);
            }
            Ok(Spectrum::new(2, ev))
        }
        3 => {
            let d3 = epsilon_d3(g)?;
            let mut ev = quartet(&p4_pm(r, t4, d3, 1.0))?;
            ev.extend(quartet(&p4_pm(r, t4, d3, -1.0))?);
            Ok(Spectrum::new(3, ev))
        }
        _ => {
            let d3 = third_order_magnitude(g)?;
            let inv = InvariantSet::new(r, t4, Some(d3))?;
            let closed = factorized_charpoly(m, ConfigKind::TwoTensor, &inv)?;
            let direct = char_poly(&two_tensor_matrix(m, g)?)?;
            let dim = (1u64 << m) as f64;
            let residual = closed
                .rescale_argument(1.0 / dim)
                .relative_distance(&direct.rescale_argument(1.0 / dim));
            if residual > FACTORIZATION_TOL {
                return Err(Error::FactorizationMismatch { residual });
            }
            let rep = 1usize << (m - 3);
            let mut ev = Vec::with_capacity(1 << m);
            for sign in [1.0, -1.0] {
                for z in quartet(&pbar_pm(r, t4, d3, sign))? {
                    ev.extend(std::iter::repeat_n(z / dim, rep));
                }
            }
            Ok(Spectrum::new(m, ev))
        }
    }
}

/// m = 2 family `G12 = x, G34 = y, G23 = z`: `(1 ± α_±)/4`, `α_± = √((x±y)² + z²)`.
pub fn tunnel_spectrum(x: f64, y: f64, z: f64) -> Spectrum {
    let (ap, am) = tunnel_alphas(x, y, z);
    Spectrum::new(
        2,
        vec![(1.0 - ap) / 4.0, (1.0 + ap) / 4.0, (1.0 - am) / 4.0, (1.0 + am) / 4.0],
    )
}

pub fn tunnel_alphas(x: f64, y: f64, z: f64) -> (f64, f64) {
    (((x + y).powi(2) + z * z).sqrt(), ((x - y).powi(2) + z * z).sqrt())
}

/// Jacobi eigenvalues of the state.
pub fn numeric_spectrum(rho: &DensityMatrix) -> Result<Spectrum> {
    Ok(Spectrum::new(
        rho.m(),
        hermitian_eigenvalues(rho.matrix(), DEFAULT_TOL)?,
    ))
}

/// Which closed form, if any, applies to a set of standard coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum Configuration {
    Vector {
        g: AntisymTensor,
        pseudoscalar: Option<f64>,
    },
    TwoTensor {
        g: AntisymTensor,
    },
    Other,
}

pub fn classify(coords: &StateCoords) -> Configuration {
    let m = coords.m();
    let grades = coords.active_grades();
    if coords.mode() != crate::clifford::BasisMode::Standard {
        return Configuration::Other;
    }
    let top = 2 * m;
    match grades.as_slice() {
        [] | [1] => Configuration::Vector {
            g: coords.grade(1),
            pseudoscalar: None,
        },
        [k] if *k == top => Configuration::Vector {
            g: coords.grade(1),
            pseudoscalar: Some(coords.grade(top).get(&(1..=top).collect::<Vec<_>>())),
        },
        [1, k] if *k == top => Configuration::Vector {
            g: coords.grade(1),
            pseudoscalar: Some(coords.grade(top).get(&(1..=top).collect::<Vec<_>>())),
        },
        [2] if m >= 2 => Configuration::TwoTensor { g: coords.grade(2) },
        _ => Configuration::Other,
    }
}

/// Closed-form spectrum when the coordinates (scalar 1) form a vector or 2-tensor
/// configuration; `None` otherwise.
pub fn closed_form_spectrum(coords: &StateCoords) -> Result<Option<Spectrum>> {
    if (coords.scalar - 1.0).abs() > crate::coords::TRACE_TOL {
        return Err(Error::NonUnitTrace { trace: coords.scalar });
    }
    match classify(coords) {
        Configuration::Vector { g, pseudoscalar } => vector_spectrum(coords.m(), &g, pseudoscalar).map(Some),
        Configuration::TwoTensor { g } => two_tensor_spectrum(coords.m(), &g).map(Some),
        Configuration::Other => Ok(None),
    }
}
