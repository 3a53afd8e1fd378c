//! O(2m) / O(2m+1) invariants of vector and 2-tensor coordinates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coords::StateCoords;
use crate::error::{Error, Result};
use crate::linalg::RealMatrix;
use crate::tensor::{sort_with_sign, AntisymTensor};

fn require_grade(g: &AntisymTensor, k: usize) -> Result<()> {
    if g.grade() != k {
        return Err(Error::GradeMismatch {
            expected: k,
            found: g.grade(),
        });
    }
    Ok(())
}

fn require_side(g: &AntisymTensor, side: usize) -> Result<()> {
    if g.side() != side {
        return Err(Error::DimensionMismatch {
            expected: side,
            found: g.side(),
        });
    }
    Ok(())
}

/// `r = Σ_{i<j} G_ij²`
pub fn frobenius_r(g: &AntisymTensor) -> Result<f64> {
    require_grade(g, 2)?;
    Ok(g.norm_sqr())
}

/// Eigen-free symmetric square `GᵀG` of the full antisymmetric matrix.
fn gram(g: &AntisymTensor) -> Result<RealMatrix> {
    let a = g.to_matrix()?;
    Ok(&a.transpose() * &a)
}

/// `T4 = trace((GᵀG)²)`
pub fn trace_t4(g: &AntisymTensor) -> Result<f64> {
    require_grade(g, 2)?;
    let s = gram(g)?;
    Ok((&s * &s).trace())
}

/// `T6 = trace((GᵀG)³)`
pub fn trace_t6(g: &AntisymTensor) -> Result<f64> {
    require_grade(g, 2)?;
    let s = gram(g)?;
    Ok((&(&s * &s) * &s).trace())
}

/// All permutations of `items` with their signs.
pub fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, f64)> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut perms = Vec::new();
    rec(&mut Vec::new(), &mut items.to_vec(), &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let mut scratch = p.clone();
            let s = sort_with_sign(&mut scratch);
            (p, s as f64)
        })
        .collect()
}

/// `ε_{i1…i6} G_{i1i2} G_{i3i4} G_{i5i6}` summed over all 720 orderings.
pub fn epsilon_d3_bruteforce(g: &AntisymTensor) -> Result<f64> {
    require_grade(g, 2)?;
    require_side(g, 6)?;
    Ok(signed_permutations(&[1, 2, 3, 4, 5, 6])
        .into_iter()
        .map(|(p, s)| s * g.get(&p[0..2]) * g.get(&p[2..4]) * g.get(&p[4..6]))
        .sum())
}

/// Pfaffian by expansion over perfect matchings along the first row.
pub fn pfaffian(a: &RealMatrix) -> f64 {
    fn rec(a: &RealMatrix, idx: &[usize]) -> f64 {
        if idx.is_empty() {
            return 1.0;
        }
        let first = idx[0];
        let mut acc = 0.0;
        for j in 1..idx.len() {
            let w = a[(first, idx[j])];
            if w == 0.0 {
                continue;
            }
            let rest: Vec<usize> = idx[1..]
                .iter()
                .enumerate()
                .filter(|(k, _)| k + 1 != j)
                .map(|(_, &v)| v)
                .collect();
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * w * rec(a, &rest);
        }
        acc
    }
    let n = a.dim();
    if n % 2 == 1 {
        return 0.0;
    }
    rec(a, &(0..n).collect::<Vec<_>>())
}

/// D³ for m = 3, computed as `48·Pf(G)`.
pub fn epsilon_d3(g: &AntisymTensor) -> Result<f64> {
    require_grade(g, 2)?;
    require_side(g, 6)?;
    Ok(48.0 * pfaffian(&g.to_matrix()?))
}

/// Dual 2-tensor: m = 2 gives `G̃_{ab} = ε_{abcd} G_cd`, m = 3 gives
/// `Ã_{ab} = ε_{abcdef} G_cd G_ef` (sums over all index orders).
pub fn dual_tensor(g: &AntisymTensor, m: usize) -> Result<AntisymTensor> {
    require_grade(g, 2)?;
    if m != 2 && m != 3 {
        return Err(Error::UnsupportedM(m));
    }
    let side = 2 * m;
    require_side(g, side)?;
    let mut out = AntisymTensor::zeros(side, 2);
    for a in 1..=side {
        for b in a + 1..=side {
            let rest: Vec<usize> = (1..=side).filter(|&x| x != a && x != b).collect();
            let mut acc = 0.0;
            for (p, _) in signed_permutations(&rest) {
                let mut full = vec![a, b];
                full.extend(&p);
                let s = sort_with_sign(&mut full.clone()) as f64;
                let term = if m == 2 {
                    g.get(&p[0..2])
                } else {
                    g.get(&p[0..2]) * g.get(&p[2..4])
                };
                acc += s * term;
            }
            out.set(&[a, b], acc)?;
        }
    }
    Ok(out)
}

/// trace(A·B) of two antisymmetric 2-tensors viewed as matrices.
fn trace_dot(a: &AntisymTensor, b: &AntisymTensor) -> Result<f64> {
    Ok((&a.to_matrix()? * &b.to_matrix()?).trace())
}

/// `(2r² − T4, dual-form)`: m = 2 uses `(trace(G̃·G))² / 16`, m = 3 uses
/// `trace(ÃᵀÃ) / 32`.
pub fn dual_identity(g: &AntisymTensor, m: usize) -> Result<(f64, f64)> {
    let r = frobenius_r(g)?;
    let lhs = 2.0 * r * r - trace_t4(g)?;
    let dual = dual_tensor(g, m)?;
    let rhs = if m == 2 {
        trace_dot(&dual, g)?.powi(2) / 16.0
    } else {
        let a = dual.to_matrix()?;
        (&a.transpose() * &a).trace() / 32.0
    };
    Ok((lhs, rhs))
}

/// `(2r² − T4, 4·det G)` for m = 2.
pub fn det_identity_check(g: &AntisymTensor, m: usize) -> Result<(f64, f64)> {
    require_grade(g, 2)?;
    if m != 2 {
        return Err(Error::UnsupportedM(m));
    }
    require_side(g, 4)?;
    let r = frobenius_r(g)?;
    let lhs = 2.0 * r * r - trace_t4(g)?;
    Ok((lhs, 4.0 * g.to_matrix()?.determinant()))
}

/// `V_i = ε_{i i1…i6} Ǧ_{i1i2} Ǧ_{i3i4} Ǧ_{i5i6}` for a 2-tensor over 7 indices.
pub fn pseudo_vector_v(g: &AntisymTensor) -> Result<[f64; 7]> {
    require_grade(g, 2)?;
    require_side(g, 7)?;
    let mut v = [0.0; 7];
    for (i, slot) in v.iter_mut().enumerate() {
        let lead = i + 1;
        let rest: Vec<usize> = (1..=7).filter(|&x| x != lead).collect();
        let mut acc = 0.0;
        for (p, _) in signed_permutations(&rest) {
            let mut full = vec![lead];
            full.extend(&p);
            let s = sort_with_sign(&mut full) as f64;
            acc += s * g.get(&p[0..2]) * g.get(&p[2..4]) * g.get(&p[4..6]);
        }
        *slot = acc;
    }
    Ok(v)
}

/// Homogeneity degree of a named invariant under `G → sG`, with the scalar
/// counted as one unit.
pub fn scale_dimension(name: &str) -> Result<u32> {
    match name {
        "scalar" => Ok(1),
        "r" => Ok(2),
        "D3" => Ok(3),
        "T4" | "r2" | "r^2" => Ok(4),
        "T6" => Ok(6),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Invariants of a state's coordinates. `r`/`T4` refer to the grade-2 part,
/// `D3` is present only at m = 3.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct InvariantSet {
    pub r: f64,
    #[serde(rename = "T4")]
    pub t4: f64,
    #[serde(rename = "D3", skip_serializing_if = "Option::is_none", default)]
    pub d3: Option<f64>,
    #[serde(default)]
    pub extras: BTreeMap<String, f64>,
}

/// Relative slack for `T4 ≤ 2r²`.
const T4_BOUND_TOL: f64 = 1e-12;

impl InvariantSet {
    pub fn new(r: f64, t4: f64, d3: Option<f64>) -> Result<Self> {
        if r < 0.0 || t4 < 0.0 || !r.is_finite() || !t4.is_finite() {
            return Err(Error::Invalid(format!(
                "invariants must be finite and nonnegative: r = {r}, T4 = {t4}"
            )));
        }
        Ok(Self {
            r,
            t4,
            d3,
            extras: BTreeMap::new(),
        })
    }

    /// Invariants of a single 2-tensor over side 2m.
    pub fn of_two_tensor(g: &AntisymTensor) -> Result<Self> {
        let r = frobenius_r(g)?;
        let t4 = trace_t4(g)?;
        debug_assert!(
            t4 <= 2.0 * r * r * (1.0 + T4_BOUND_TOL) + 1e-300,
            "T4 = {t4} > 2r² = {}",
            2.0 * r * r
        );
        let d3 = if g.side() == 6 { Some(epsilon_d3(g)?) } else { None };
        let mut set = Self::new(r, t4, d3)?;
        set.extras.insert("2r2_minus_T4".into(), (2.0 * r * r - t4).max(0.0));
        if g.side() >= 8 {
            set.extras.insert("T6".into(), trace_t6(g)?);
        }
        Ok(set)
    }

    /// Invariants of a vector (plus optional pseudoscalar): `r` is ‖G‖².
    pub fn of_vector(g: &AntisymTensor, pseudoscalar: Option<f64>) -> Result<Self> {
        require_grade(g, 1)?;
        let p = pseudoscalar.unwrap_or(0.0);
        let r = g.norm_sqr() + p * p;
        let mut set = Self::new(r, r * r, None)?;
        set.extras.insert("vector_norm".into(), r.sqrt());
        if let Some(p) = pseudoscalar {
            set.extras.insert("pseudoscalar".into(), p);
        }
        Ok(set)
    }

    pub fn discriminant(&self) -> f64 {
        2.0 * self.r * self.r - self.t4
    }
}

/// Everything the CLI reports for a coordinate set: per-grade norms, and the
/// 2-tensor invariants when a grade-2 part is present.
pub fn invariants_of_coords(coords: &StateCoords) -> Result<InvariantSet> {
    let g2 = coords.grade(2);
    let mut set = if g2.is_zero() || coords.max_grade() < 2 {
        InvariantSet::default()
    } else {
        InvariantSet::of_two_tensor(&g2)?
    };
    for k in coords.active_grades() {
        set.extras
            .insert(format!("grade{k}_norm_sq"), coords.grade(k).norm_sqr());
    }
    if coords.side() == 7 && !g2.is_zero() {
        let v = pseudo_vector_v(&g2)?;
        set.extras.insert("V_norm_sq".into(), v.iter().map(|x| x * x).sum());
        set.extras.insert("V7".into(), v[6]);
    }
    Ok(set)
}
