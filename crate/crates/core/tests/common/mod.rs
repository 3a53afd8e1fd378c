#![allow(dead_code)]

use clifford_bloch::clifford::{full_basis, BasisMode, CliffordBasis};
use clifford_bloch::coords::DensityMatrix;
use clifford_bloch::linalg::{hermitian_eigenvalues, ComplexMatrix, RealPolynomial, DEFAULT_TOL};

pub fn standard(m: usize) -> CliffordBasis {
    full_basis(m, BasisMode::Standard).unwrap()
}

pub fn extended(m: usize) -> CliffordBasis {
    full_basis(m, BasisMode::Extended).unwrap()
}

pub fn eigenvalues(h: &ComplexMatrix) -> Vec<f64> {
    hermitian_eigenvalues(h, DEFAULT_TOL).unwrap()
}

pub fn min_eigenvalue(rho: &DensityMatrix) -> f64 {
    eigenvalues(rho.matrix())[0]
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// All roots of a real-rooted polynomial: the roots of `p'` split the line into
/// intervals holding at most one root of `p` each, found by bisection.
pub fn bisection_roots(p: &RealPolynomial) -> Vec<f64> {
    let n = p.degree();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        let c = p.coeffs();
        return vec![-c[0] / c[1]];
    }
    let c = p.coeffs();
    let bound = 1.0 + c[..n].iter().map(|x| (x / c[n]).abs()).fold(0.0, f64::max);
    let mut knots = vec![-bound];
    knots.extend(bisection_roots(&p.derivative()));
    knots.push(bound);
    let mut roots = Vec::with_capacity(n);
    for w in knots.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (p.eval(lo), p.eval(hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            // Touching root at a critical point.
            if fhi.abs() < 1e-12 * bound.powi(n as i32) {
                roots.push(hi);
            }
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if p.eval(mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots.truncate(n);
    roots.sort_by(f64::total_cmp);
    roots
}

pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        failure_persistence: None,
        ..Default::default()
    }
}
