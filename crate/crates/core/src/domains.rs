//! Admissibility of parameter configurations: vector balls, the (r, T4)
//! region, the m = 2 tunnel family and the coefficient-sign test for
//! arbitrary states.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::clifford::{full_basis, BasisMode, CliffordBasis};
use crate::coords::{alt_expand, encode, tensor_config, StateCoords};
use crate::error::{Error, Result};
use crate::invariants::{dual_tensor, frobenius_r, pfaffian, trace_t4, InvariantSet};
use crate::linalg::{char_poly, hermitian_eigenvalues, RealPolynomial, DEFAULT_TOL};
use crate::random::{random_tensor, stream_rng};
use crate::spectra::{classify, tunnel_alphas, two_tensor_spectrum, Configuration};
use crate::tensor::{binomial, AntisymTensor};

pub const DOMAIN_TOL: f64 = 1e-9;
/// Largest `n` accepted by [`sample_domain`].
pub const MAX_SAMPLES: usize = 1_000_000;
const DISCRIMINANT_TOL: f64 = 1e-12;
const COEFF_ROUNDING: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainVerdict {
    pub admissible: bool,
    pub boundary: bool,
    pub violated: Option<String>,
    /// Smallest constraint slack; negative outside the domain.
    pub margin: f64,
    pub invariants_used: InvariantSet,
    pub tol: f64,
}

impl DomainVerdict {
    fn from_slacks(slacks: &[(&str, f64)], invariants_used: InvariantSet, tol: f64) -> Self {
        let violated = slacks
            .iter()
            .find(|(_, s)| *s < -tol || s.is_nan())
            .map(|(name, _)| name.to_string());
        let margin = slacks.iter().map(|(_, s)| *s).fold(f64::INFINITY, f64::min);
        let admissible = violated.is_none();
        Self {
            admissible,
            boundary: admissible && margin <= tol,
            violated,
            margin,
            invariants_used,
            tol,
        }
    }
}

/// `‖G̃‖ ≤ 1`, where `‖G̃‖² = Σ G_i² + (pseudoscalar)²`.
pub fn vector_domain(g: &AntisymTensor, pseudoscalar: Option<f64>, tol: f64) -> Result<DomainVerdict> {
    let inv = InvariantSet::of_vector(g, pseudoscalar)?;
    let norm = inv.r.sqrt();
    Ok(DomainVerdict::from_slacks(&[("bloch_ball", 1.0 - norm)], inv, tol))
}

/// `0 ≤ r ≤ 1` and `max((r+1)² − 2, 0) ≤ T4 ≤ 2r²`.
///
/// The lower slack `T4 − (r+1)² + 2` equals `256·det ρ`, which is second order
/// wherever two eigenvalues are small. It is divided by its positive cofactor
/// `4(1 + √(r+w))(1 − r + w)`, `w = √(2r² − T4)`, so it reads as the smallest
/// eigenvalue; within [`COFACTOR_FLOOR`] of the corner `(1, 2)` the raw slack
/// is kept.
pub fn rt4_domain(r: f64, t4: f64, tol: f64) -> DomainVerdict {
    let raw = t4 - ((r + 1.0).powi(2) - 2.0).max(0.0);
    let w = (2.0 * r * r - t4).max(0.0).sqrt();
    let cofactor = 4.0 * (1.0 + (r + w).sqrt()) * (1.0 - r + w);
    let lower = if cofactor > COFACTOR_FLOOR {
        (t4 - (r + 1.0).powi(2) + 2.0) / cofactor
    } else {
        raw
    };
    let inv = InvariantSet {
        r,
        t4,
        ..Default::default()
    };
    DomainVerdict::from_slacks(
        &[
            ("r_range", r.min(1.0 - r)),
            ("T4_upper", 2.0 * r * r - t4),
            ("T4_lower", lower),
        ],
        inv,
        tol,
    )
}

/// Cofactor size below which the lower slack of [`rt4_domain`] is not rescaled.
pub const COFACTOR_FLOOR: f64 = 1e-4;

/// `z = ½ − √(2r² − T4)`.
pub fn z_variable(r: f64, t4: f64) -> Result<f64> {
    let disc = 2.0 * r * r - t4;
    if disc < -DISCRIMINANT_TOL {
        return Err(Error::NegativeDiscriminant(disc));
    }
    Ok(0.5 - disc.max(0.0).sqrt())
}

/// `z` straight from the tensor entries: `½ − 2|Pf G|` at m = 2 and
/// `½ − √(trace(ÃᵀÃ)/32)` at m = 3.
pub fn z_from_coords(g: &AntisymTensor, m: usize) -> Result<f64> {
    match m {
        2 => Ok(0.5 - 2.0 * pfaffian(&g.to_matrix()?).abs()),
        3 => {
            let a = dual_tensor(g, 3)?.to_matrix()?;
            Ok(0.5 - ((&a.transpose() * &a).trace() / 32.0).max(0.0).sqrt())
        }
        _ => Err(Error::UnsupportedM(m)),
    }
}

/// The transformed region in `(r, z)` exactly as displayed: `½−z ≤ r ≤ ½+z`
/// for `0 ≤ z ≤ ½`, and `½+z ≤ r ≤ ½−z` for `−½ ≤ z ≤ 0`.
pub fn rz_display_region(r: f64, z: f64, tol: f64) -> bool {
    let upper_branch = (-tol..=0.5 + tol).contains(&z) && 0.5 - z - tol <= r && r <= 0.5 + z + tol;
    let lower_branch = (-0.5 - tol..=tol).contains(&z) && 0.5 + z - tol <= r && r <= 0.5 - z + tol;
    upper_branch || lower_branch
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RzDisagreement {
    pub r: f64,
    #[serde(rename = "T4")]
    pub t4: f64,
    pub z: f64,
    pub display: bool,
    pub inequality: bool,
    /// `T4 ≥ r²`, necessary for `(r, T4)` to come from an m = 2 tensor.
    pub realizable: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RzComparison {
    pub points: usize,
    pub unmapped: usize,
    pub disagreements: Vec<RzDisagreement>,
}

impl RzComparison {
    pub fn realizable_disagreements(&self) -> usize {
        self.disagreements.iter().filter(|d| d.realizable).count()
    }
}

/// Compares the `(r, z)` display with [`rt4_domain`] on the fig1 grid.
/// Points with `T4 > 2r²` have no real `z` and are counted as unmapped.
pub fn compare_rz_display(resolution: usize, tol: f64) -> Result<RzComparison> {
    let mut out = RzComparison::default();
    for (r, t4) in fig1_grid(resolution)? {
        let Ok(z) = z_variable(r, t4) else {
            out.unmapped += 1;
            continue;
        };
        out.points += 1;
        let display = rz_display_region(r, z, tol);
        let inequality = rt4_domain(r, t4, tol).admissible;
        if display != inequality {
            out.disagreements.push(RzDisagreement {
                r,
                t4,
                z,
                display,
                inequality,
                realizable: t4 >= r * r - tol,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TunnelOptions {
    /// Also require `0 ≤ x, y, z ≤ 1`.
    pub paper_cube: bool,
}

/// The 2-tensor `G12 = x, G34 = y, G23 = z` at m = 2.
pub fn tunnel_tensor(x: f64, y: f64, z: f64) -> AntisymTensor {
    AntisymTensor::from_entries(4, 2, &[(&[1, 2], x), (&[3, 4], y), (&[2, 3], z)]).expect("valid indices")
}

pub fn tunnel_membership(x: f64, y: f64, z: f64, tol: f64) -> DomainVerdict {
    tunnel_membership_with(x, y, z, TunnelOptions::default(), tol)
}

/// `α₊ ≤ 1 ∧ α₋ ≤ 1` with `α± = √((x±y)² + z²)`.
pub fn tunnel_membership_with(x: f64, y: f64, z: f64, options: TunnelOptions, tol: f64) -> DomainVerdict {
    let (ap, am) = tunnel_alphas(x, y, z);
    let mut inv = InvariantSet::of_two_tensor(&tunnel_tensor(x, y, z)).expect("grade-2 tensor over 4 indices");
    inv.extras.insert("alpha_plus".into(), ap);
    inv.extras.insert("alpha_minus".into(), am);
    let mut slacks = vec![("tunnel_plus", 1.0 - ap), ("tunnel_minus", 1.0 - am)];
    if options.paper_cube {
        let cube = [x, y, z, 1.0 - x, 1.0 - y, 1.0 - z]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        slacks.push(("cube", cube));
    }
    DomainVerdict::from_slacks(&slacks, inv, tol)
}

/// Sign test on the characteristic polynomial `P(λ) = Σ (−1)^i a_i λ^i` of a
/// unit-trace hermitian matrix: all `a_i ≥ 0` for the matrix shifted by `tol·I`,
/// which holds exactly when every eigenvalue is at least `−tol`.
///
/// Coefficients are compared after dividing `e_k` (the `a_{n−k}` of a monic
/// polynomial) by its value `C(n,k)/n^k` at the maximally mixed state.
pub fn descartes_positivity(p: &RealPolynomial, tol: f64) -> DomainVerdict {
    let shifted = normalized_sign_coefficients(&p.shift_argument(-tol));
    let raised = normalized_sign_coefficients(&p.shift_argument(tol));
    let n = shifted.len() - 1;
    let mut inv = InvariantSet::default();
    let names: Vec<String> = (0..=n).map(|i| format!("a{i}")).collect();
    for (name, a) in names.iter().zip(normalized_sign_coefficients(p)) {
        inv.extras.insert(name.clone(), a);
    }
    let slacks: Vec<(&str, f64)> = names
        .iter()
        .zip(&shifted)
        .map(|(name, a)| (name.as_str(), *a + COEFF_ROUNDING))
        .collect();
    let mut verdict = DomainVerdict::from_slacks(&slacks, inv, 0.0);
    verdict.tol = tol;
    verdict.boundary = verdict.admissible && raised.iter().any(|a| *a < -COEFF_ROUNDING);
    verdict
}

/// `[a_0, …, a_n]` with `a_n = 1`, `a_{n−k}` scaled by `n^k / C(n,k)`.
fn normalized_sign_coefficients(p: &RealPolynomial) -> Vec<f64> {
    let c = p.coeffs();
    let n = c.len() - 1;
    let lead = c[n];
    (0..=n)
        .map(|i| {
            let sign = if (n - i).is_multiple_of(2) { 1.0 } else { -1.0 };
            let k = n - i;
            let norm = (n as f64).powi(k as i32) / binomial(n, k) as f64;
            sign * c[i] / lead * norm
        })
        .collect()
}

/// Closed-form verdict for a pure 2-tensor configuration: the (r, T4) region at
/// m = 2, the sign of the smallest closed-form eigenvalue beyond.
pub fn two_tensor_domain(m: usize, g: &AntisymTensor, tol: f64) -> Result<DomainVerdict> {
    if m == 2 {
        return Ok(rt4_domain(frobenius_r(g)?, trace_t4(g)?, tol));
    }
    let spectrum = two_tensor_spectrum(m, g)?;
    let mut inv = InvariantSet::of_two_tensor(g)?;
    inv.extras.insert("lambda_min".into(), spectrum.min());
    let scaled_min = spectrum.min() * (1u64 << m) as f64;
    Ok(DomainVerdict::from_slacks(&[("quartet_min", scaled_min)], inv, tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Vector,
    TwoTensor,
    Descartes,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Validation {
    pub route: Route,
    pub verdict: DomainVerdict,
}

/// Full verdict for arbitrary coordinates: closed forms for pure vector and
/// 2-tensor configurations, the coefficient-sign test otherwise.
pub fn validate(coords: &StateCoords, basis: &CliffordBasis, tol: f64) -> Result<Validation> {
    let rho = match coords.mode() {
        BasisMode::Standard => encode(coords, basis)?,
        BasisMode::Extended => alt_expand(coords, basis)?,
    };
    match classify(coords) {
        Configuration::Vector { g, pseudoscalar } => {
            return Ok(Validation {
                route: Route::Vector,
                verdict: vector_domain(&g, pseudoscalar, tol)?,
            })
        }
        Configuration::TwoTensor { g } => match two_tensor_domain(coords.m(), &g, tol) {
            Ok(verdict) => {
                return Ok(Validation {
                    route: Route::TwoTensor,
                    verdict,
                })
            }
            Err(Error::FactorizationMismatch { .. }) => {}
            Err(e) => return Err(e),
        },
        Configuration::Other => {}
    }
    Ok(Validation {
        route: Route::Descartes,
        verdict: descartes_positivity(&char_poly(rho.matrix())?, tol),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleOptions {
    /// Coefficients are drawn from `[-half_width, half_width]`.
    pub half_width: f64,
    pub tol: f64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        Self {
            half_width: 1.2,
            tol: DOMAIN_TOL,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainSample {
    pub index: usize,
    pub tensor: AntisymTensor,
    pub closed_form: DomainVerdict,
    pub oracle_min_eigenvalue: f64,
    pub oracle_admissible: bool,
}

impl DomainSample {
    pub fn agrees(&self) -> bool {
        self.closed_form.admissible == self.oracle_admissible
    }
}

/// `n` tensors of grade `k` classified by the closed form and by the
/// eigensolver. Sample `i` uses stream `i` of `seed`.
pub fn sample_domain(m: usize, k: usize, n: usize, seed: u64, options: SampleOptions) -> Result<Vec<DomainSample>> {
    if n > MAX_SAMPLES {
        return Err(Error::ResourceLimit(format!("{n} samples exceeds {MAX_SAMPLES}")));
    }
    match (k, m) {
        (1, 1..=4) | (2, 2..=3) => {}
        (1 | 2, _) => return Err(Error::UnsupportedM(m)),
        _ => return Err(Error::GradeOutOfRange { k, max: 2 }),
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let basis = full_basis(m, BasisMode::Standard)?;
    (0..n)
        .map(|index| {
            let mut rng = stream_rng(seed, index as u64);
            let tensor = random_tensor(&mut rng, 2 * m, k, options.half_width);
            classify_sample(&basis, index, tensor, options.tol)
        })
        .collect()
}

/// Classifies one tensor both ways.
pub fn classify_sample(basis: &CliffordBasis, index: usize, tensor: AntisymTensor, tol: f64) -> Result<DomainSample> {
    let m = basis.m();
    let closed_form = match tensor.grade() {
        1 => vector_domain(&tensor, None, tol)?,
        _ => two_tensor_domain(m, &tensor, tol)?,
    };
    let rho = tensor_config(basis, &tensor)?;
    let oracle_min_eigenvalue = hermitian_eigenvalues(rho.matrix(), DEFAULT_TOL)?[0];
    Ok(DomainSample {
        index,
        tensor,
        closed_form,
        oracle_min_eigenvalue,
        oracle_admissible: oracle_min_eigenvalue >= -tol,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
}

impl std::str::FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(Self::Fig1),
            "fig2" => Ok(Self::Fig2),
            "fig3" => Ok(Self::Fig3),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fig1Row {
    pub r: f64,
    #[serde(rename = "T4")]
    pub t4: f64,
    pub admissible: bool,
    pub on_boundary: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfacePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub surface_id: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Curve {
    pub name: String,
    pub points: Vec<[f64; 2]>,
}

/// A surface `α_sign = level`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceLabel {
    pub id: usize,
    pub sign: i8,
    pub level: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "figure", rename_all = "lowercase")]
pub enum FigureData {
    Fig1 {
        rows: Vec<Fig1Row>,
        curves: Vec<Curve>,
    },
    Surfaces {
        which: Figure,
        surfaces: Vec<SurfaceLabel>,
        points: Vec<SurfacePoint>,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FigureOptions {
    pub paper_cube: bool,
}

fn fig1_grid(resolution: usize) -> Result<Vec<(f64, f64)>> {
    if resolution < 2 {
        return Err(Error::BadResolution(resolution));
    }
    let step = (resolution - 1) as f64;
    let mut out = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        for j in 0..resolution {
            out.push((i as f64 / step, 2.0 * j as f64 / step));
        }
    }
    Ok(out)
}

/// fig1: the (r, T4) grid with verdicts and both boundary curves.
/// fig2: points on `α₊ = 1` and `α₋ = 1` inside `[−1.5, 1.5]³`.
/// fig3: points on `α₊ ∈ {1, 0.1}` and `α₋ ∈ {1, 0.01}` inside the admissible
/// intersection.
pub fn figure_data(which: Figure, resolution: usize, options: FigureOptions) -> Result<FigureData> {
    let grid = fig1_grid(resolution)?;
    match which {
        Figure::Fig1 => {
            let rows = grid
                .into_iter()
                .map(|(r, t4)| {
                    let v = rt4_domain(r, t4, DOMAIN_TOL);
                    Fig1Row {
                        r,
                        t4,
                        admissible: v.admissible,
                        on_boundary: v.boundary,
                    }
                })
                .collect();
            let step = (resolution - 1) as f64;
            let upper = (0..resolution)
                .map(|i| {
                    let r = i as f64 / step;
                    [r, 2.0 * r * r]
                })
                .collect();
            let r0 = 2f64.sqrt() - 1.0;
            let lower = (0..resolution)
                .map(|i| {
                    let r = r0 + (1.0 - r0) * i as f64 / step;
                    [r, ((r + 1.0).powi(2) - 2.0).max(0.0)]
                })
                .collect();
            Ok(FigureData::Fig1 {
                rows,
                curves: vec![
                    Curve {
                        name: "T4_upper".into(),
                        points: upper,
                    },
                    Curve {
                        name: "T4_lower".into(),
                        points: lower,
                    },
                ],
            })
        }
        Figure::Fig2 => {
            let surfaces = vec![
                SurfaceLabel {
                    id: 0,
                    sign: 1,
                    level: 1.0,
                },
                SurfaceLabel {
                    id: 1,
                    sign: -1,
                    level: 1.0,
                },
            ];
            let points = surface_points(&surfaces, resolution, 3.0, |p| {
                p.x.abs() <= 1.5 && p.y.abs() <= 1.5 && p.z.abs() <= 1.5
            });
            Ok(FigureData::Surfaces {
                which,
                surfaces,
                points,
            })
        }
        Figure::Fig3 => {
            let surfaces = vec![
                SurfaceLabel {
                    id: 0,
                    sign: 1,
                    level: 1.0,
                },
                SurfaceLabel {
                    id: 1,
                    sign: 1,
                    level: 0.1,
                },
                SurfaceLabel {
                    id: 2,
                    sign: -1,
                    level: 1.0,
                },
                SurfaceLabel {
                    id: 3,
                    sign: -1,
                    level: 0.01,
                },
            ];
            let opts = TunnelOptions {
                paper_cube: options.paper_cube,
            };
            let points = surface_points(&surfaces, resolution, 1.0, |p| {
                tunnel_membership_with(p.x, p.y, p.z, opts, 1e-12).admissible
            });
            Ok(FigureData::Surfaces {
                which,
                surfaces,
                points,
            })
        }
    }
}

/// `(x + s·y, z) = level·(cos θ, sin θ)` with `x − s·y` swept over
/// `[−half_length, half_length]`.
fn surface_points(
    surfaces: &[SurfaceLabel],
    resolution: usize,
    half_length: f64,
    keep: impl Fn(&SurfacePoint) -> bool,
) -> Vec<SurfacePoint> {
    let mut out = Vec::new();
    let step = (resolution - 1) as f64;
    for s in surfaces {
        let sign = f64::from(s.sign);
        for i in 0..resolution {
            let theta = std::f64::consts::TAU * i as f64 / resolution as f64;
            let (u, z) = (s.level * theta.cos(), s.level * theta.sin());
            for j in 0..resolution {
                let w = -half_length + 2.0 * half_length * j as f64 / step;
                let p = SurfacePoint {
                    x: 0.5 * (u + w),
                    y: 0.5 * sign * (u - w),
                    z,
                    surface_id: s.id,
                };
                if keep(&p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

impl FigureData {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self {
            FigureData::Fig1 { rows, .. } => {
                out.push_str("r,T4,admissible,on_boundary\n");
                for row in rows {
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        row.r,
                        row.t4,
                        u8::from(row.admissible),
                        u8::from(row.on_boundary)
                    );
                }
            }
            FigureData::Surfaces { points, .. } => {
                out.push_str("x,y,z,surface_id\n");
                for p in points {
                    let _ = writeln!(out, "{},{},{},{}", p.x, p.y, p.z, p.surface_id);
                }
            }
        }
        out
    }

    /// Flat scatter: the (r, T4) plane for fig1, x–y and x–z projections otherwise.
    pub fn to_svg(&self) -> String {
        const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e"];
        let mut body = String::new();
        let (width, height) = match self {
            FigureData::Fig1 { rows, curves } => {
                let map = |r: f64, t4: f64| (40.0 + 400.0 * r, 440.0 - 200.0 * t4);
                for row in rows.iter().filter(|row| row.admissible) {
                    let (cx, cy) = map(row.r, row.t4);
                    let color = if row.on_boundary { PALETTE[1] } else { PALETTE[0] };
                    let _ = writeln!(body, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="1" fill="{color}"/>"#);
                }
                for (c, color) in curves.iter().zip([PALETTE[2], PALETTE[3]]) {
                    let pts: Vec<String> = c
                        .points
                        .iter()
                        .map(|p| {
                            let (x, y) = map(p[0], p[1]);
                            format!("{x:.2},{y:.2}")
                        })
                        .collect();
                    let _ = writeln!(
                        body,
                        r#"<polyline points="{}" fill="none" stroke="{color}"/>"#,
                        pts.join(" ")
                    );
                }
                (480, 480)
            }
            FigureData::Surfaces { points, .. } => {
                for (panel, offset) in [(0usize, 0.0), (1, 440.0)] {
                    for p in points {
                        let second = if panel == 0 { p.y } else { p.z };
                        let cx = offset + 220.0 + 130.0 * p.x;
                        let cy = 220.0 - 130.0 * second;
                        let color = PALETTE[p.surface_id % PALETTE.len()];
                        let _ = writeln!(body, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="0.8" fill="{color}"/>"#);
                    }
                }
                (880, 440)
            }
        };
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{body}</svg>\n"
        )
    }

    pub fn row_count(&self) -> usize {
        match self {
            FigureData::Fig1 { rows, .. } => rows.len(),
            FigureData::Surfaces { points, .. } => points.len(),
        }
    }
}
