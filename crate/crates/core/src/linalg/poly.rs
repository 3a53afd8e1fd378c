use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Real polynomial, coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    /// Trailing (highest-degree) exact zeros are dropped.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn monomial(c: f64, degree: usize) -> Self {
        let mut coeffs = vec![0.0; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// ∏ (λ − rᵢ)
    pub fn from_roots(roots: &[f64]) -> Self {
        roots
            .iter()
            .fold(Self::new(vec![1.0]), |acc, &r| acc.mul(&Self::new(vec![-r, 1.0])))
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::new(vec![0.0]);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i as f64)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::new(vec![1.0]), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// p(s·x): coefficient i is multiplied by sⁱ.
    pub fn rescale_argument(&self, s: f64) -> Self {
        let mut f = 1.0;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * f);
            f *= s;
        }
        Self::new(out)
    }

    /// `p(x + t)`, by repeated synthetic division.
    pub fn shift_argument(&self, t: f64) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                c[j] += t * c[j + 1];
            }
        }
        Self::new(c)
    }

    pub fn monic(&self) -> Self {
        self.scale(1.0 / self.leading())
    }

    /// Largest coefficient-wise difference relative to the largest coefficient
    /// magnitude of either polynomial.
    pub fn relative_distance(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).copied().unwrap_or(0.0);
        let scale = (0..n)
            .map(|i| get(self, i).abs().max(get(other, i).abs()))
            .fold(0.0, f64::max);
        if scale == 0.0 {
            return 0.0;
        }
        (0..n).map(|i| (get(self, i) - get(other, i)).abs()).fold(0.0, f64::max) / scale
    }
}

impl fmt::Display for RealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0.0 && self.coeffs.len() > 1 {
                continue;
            }
            if !first {
                write!(f, " {} ", if *c < 0.0 { '-' } else { '+' })?;
            } else if *c < 0.0 {
                write!(f, "-")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c.abs())?,
                1 => write!(f, "{}λ", c.abs())?,
                _ => write!(f, "{}λ^{}", c.abs(), i)?,
            }
        }
        Ok(())
    }
}

const IMAG_RESIDUE_TOL: f64 = 1e-10;

/// Coefficients of det(A − λI) via the Faddeev–LeVerrier recursion.
///
/// The recursion produces the monic det(λI − A); the result is multiplied by
/// (−1)ⁿ. Imaginary parts must vanish to 1e−10 relative to the coefficient
/// scale before they are dropped.
pub fn char_poly(a: &ComplexMatrix) -> Result<RealPolynomial> {
    a.ensure_hermitian(1e-10)?;
    let n = a.dim();
    let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
    c[n] = Complex64::new(1.0, 0.0);
    let mut m = ComplexMatrix::zeros(n);
    for k in 1..=n {
        // M_k = A M_{k−1} + c_{n−k+1} I
        let mut next = a * &m;
        for i in 0..n {
            next[(i, i)] += c[n - k + 1];
        }
        m = next;
        c[n - k] = -a.trace_product(&m) / k as f64;
    }
    let scale = c.iter().map(|z| z.re.abs()).fold(1.0, f64::max);
    let residual = c.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if residual > IMAG_RESIDUE_TOL * scale {
        return Err(Error::ImaginaryResidue { residual });
    }
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(RealPolynomial::new(c.iter().map(|z| sign * z.re).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift() {
        let p = RealPolynomial::from_roots(&[1.0, 2.0, -3.0]);
        let q = p.shift_argument(0.5);
        assert!(q.relative_distance(&RealPolynomial::from_roots(&[0.5, 1.5, -3.5])) < 1e-15);
    }

    #[test]
    fn identity_two() {
        let p = char_poly(&ComplexMatrix::identity(2)).unwrap();
        assert_eq!(p.coeffs(), &[1.0, -2.0, 1.0]);
    }

    #[test]
    fn diag_one_zero() {
        let p = char_poly(&ComplexMatrix::diagonal(&[1.0, 0.0])).unwrap();
        assert_eq!(p.coeffs(), &[0.0, -1.0, 1.0]);
    }

    #[test]
    fn odd_dimension_sign() {
        // det(A − λI) for 3×3 has leading coefficient −1
        let p = char_poly(&ComplexMatrix::diagonal(&[1.0, 2.0, 3.0])).unwrap();
        let expected = RealPolynomial::from_roots(&[1.0, 2.0, 3.0]).scale(-1.0);
        assert!(p.relative_distance(&expected) < 1e-15);
    }

    #[test]
    fn from_roots_and_eval() {
        let p = RealPolynomial::from_roots(&[0.5, -2.0]);
        assert_eq!(p.coeffs(), &[-1.0, 1.5, 1.0]);
        assert_eq!(p.eval(0.5), 0.0);
        assert_eq!(p.derivative().coeffs(), &[1.5, 2.0]);
        assert_eq!(format!("{}", p), "1λ^2 + 1.5λ - 1");
    }

    #[test]
    fn rescale_argument() {
        let p = RealPolynomial::new(vec![1.0, 1.0, 1.0]).rescale_argument(2.0);
        assert_eq!(p.coeffs(), &[1.0, 2.0, 4.0]);
    }
}
