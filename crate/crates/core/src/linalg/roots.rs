//! Low-degree polynomial roots: Ferrari's method for quartics with a
//! Durand–Kerner fallback for (near-)degenerate resolvents.

use num_complex::Complex64;

use super::poly::RealPolynomial;
use crate::error::{Error, Result};

/// Resolvent-discriminant magnitude (relative) below which Ferrari is abandoned.
pub const RESOLVENT_FALLBACK_TOL: f64 = 1e-12;

type C = Complex64;

fn c(re: f64) -> C {
    C::new(re, 0.0)
}

/// Roots of a quartic, in no particular order.
pub fn quartic_roots(p: &RealPolynomial) -> Result<[C; 4]> {
    if p.degree() != 4 {
        return Err(Error::DegreeMismatch {
            expected: 4,
            found: p.degree(),
        });
    }
    let k = p.coeffs();
    let lead = k[4];
    let (b, cc, d, e) = (k[3] / lead, k[2] / lead, k[1] / lead, k[0] / lead);
    let monic = [e, d, cc, b, 1.0];

    let roots = ferrari(b, cc, d, e).unwrap_or_else(|| durand_kerner(&monic));
    Ok(roots.map(|z| polish(&monic, z)))
}

/// Ferrari on the monic quartic x⁴ + b x³ + c x² + d x + e. Returns `None` when
/// the resolvent cubic is too close to having a repeated root.
fn ferrari(b: f64, c2: f64, d: f64, e: f64) -> Option<[C; 4]> {
    let shift = b / 4.0;
    let b2 = b * b;
    let p = c2 - 3.0 * b2 / 8.0;
    let q = d - b * c2 / 2.0 + b2 * b / 8.0;
    let r = e - b * d / 4.0 + b2 * c2 / 16.0 - 3.0 * b2 * b2 / 256.0;
    let scale = p.abs().max(q.abs().powf(2.0 / 3.0)).max(r.abs().sqrt());

    if scale == 0.0 {
        return Some([c(-shift); 4]);
    }
    if q.abs() <= 1e-14 * scale.powf(1.5) {
        // biquadratic: w² + p w + r = 0, y = ±√w
        let disc = (c(p * p - 4.0 * r)).sqrt();
        let w1 = (-p + disc) / 2.0;
        let w2 = (-p - disc) / 2.0;
        let (y1, y2) = (w1.sqrt(), w2.sqrt());
        return Some([y1 - shift, -y1 - shift, y2 - shift, -y2 - shift]);
    }

    // resolvent: m³ + p m² + (p²/4 − r) m − q²/8 = 0
    let (ra, rb, rc) = (p, p * p / 4.0 - r, -q * q / 8.0);
    let disc = 18.0 * ra * rb * rc - 4.0 * ra.powi(3) * rc + ra * ra * rb * rb - 4.0 * rb.powi(3) - 27.0 * rc * rc;
    if disc.abs() <= RESOLVENT_FALLBACK_TOL * scale.powi(6) {
        return None;
    }
    let m = cubic_roots(ra, rb, rc)
        .into_iter()
        .max_by(|x, y| x.re.total_cmp(&y.re))
        .unwrap();
    let s = (m * 2.0).sqrt();
    if s.norm() == 0.0 {
        return None;
    }
    let half_p = c(p / 2.0);
    let t = c(q) / (s * 2.0);
    let (u1, u2) = quadratic(-s, half_p + m + t);
    let (u3, u4) = quadratic(s, half_p + m - t);
    Some([u1 - shift, u2 - shift, u3 - shift, u4 - shift])
}

/// Roots of y² + b y + c.
fn quadratic(b: C, c0: C) -> (C, C) {
    let disc = (b * b - c0 * 4.0).sqrt();
    // avoid cancellation
    let q = if (b.conj() * disc).re >= 0.0 {
        -(b + disc) / 2.0
    } else {
        -(b - disc) / 2.0
    };
    if q.norm() == 0.0 {
        return (C::new(0.0, 0.0), C::new(0.0, 0.0));
    }
    (q, c0 / q)
}

/// Roots of t³ + a t² + b t + c by Cardano, each refined by Newton steps.
pub fn cubic_roots(a: f64, b: f64, c0: f64) -> [C; 3] {
    let p = b - a * a / 3.0;
    let q = 2.0 * a.powi(3) / 27.0 - a * b / 3.0 + c0;
    let shift = a / 3.0;
    let d = c(q * q / 4.0 + p.powi(3) / 27.0).sqrt();
    let mut s = (c(-q / 2.0) + d).powf(1.0 / 3.0);
    if s.norm() < 1e-300 {
        s = (c(-q / 2.0) - d).powf(1.0 / 3.0);
    }
    let omega = C::new(-0.5, 3f64.sqrt() / 2.0);
    let mut out = [C::new(0.0, 0.0); 3];
    let mut w = C::new(1.0, 0.0);
    for slot in out.iter_mut() {
        let sk = s * w;
        let u = if sk.norm() < 1e-300 {
            C::new(0.0, 0.0)
        } else {
            sk - c(p) / (sk * 3.0)
        };
        *slot = u - shift;
        w *= omega;
    }
    let coeffs = [c0, b, a, 1.0];
    out.map(|z| polish(&coeffs, z))
}

/// Simultaneous Durand–Kerner iteration on a monic polynomial (ascending coeffs).
pub fn durand_kerner(monic: &[f64]) -> [C; 4] {
    let n = monic.len() - 1;
    debug_assert_eq!(n, 4);
    let bound = 1.0 + monic[..n].iter().map(|x| x.abs()).fold(0.0, f64::max);
    let seed = C::new(0.4, 0.9);
    let mut z: Vec<C> = (0..n).map(|k| seed.powu(k as u32) * bound * 0.5).collect();
    for _ in 0..5000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let num = horner(monic, z[i]);
            let mut den = C::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                z[i] += C::new(1e-8, 1e-8);
                continue;
            }
            let step = num / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta <= 1e-16 * bound {
            break;
        }
    }
    [z[0], z[1], z[2], z[3]]
}

fn horner(coeffs: &[f64], z: C) -> C {
    coeffs.iter().rev().fold(C::new(0.0, 0.0), |acc, &k| acc * z + k)
}

fn horner_with_derivative(coeffs: &[f64], z: C) -> (C, C) {
    let mut p = C::new(0.0, 0.0);
    let mut dp = C::new(0.0, 0.0);
    for &k in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + k;
    }
    (p, dp)
}

/// A few Newton steps, each kept only if it lowers |p(z)|.
fn polish(coeffs: &[f64], mut z: C) -> C {
    let mut val = horner(coeffs, z).norm();
    for _ in 0..4 {
        let (p, dp) = horner_with_derivative(coeffs, z);
        if dp.norm() == 0.0 || val == 0.0 {
            break;
        }
        let cand = z - p / dp;
        let cv = horner(coeffs, cand).norm();
        if cv < val {
            z = cand;
            val = cv;
        } else {
            break;
        }
    }
    z
}

/// Real parts of the quartic roots sorted ascending, plus the largest imaginary part.
///
/// Computed roots that split from a multiple root are recombined: a run of k
/// nearby roots is replaced by one k-fold root when p and its first k−1
/// derivatives all vanish there to rounding level.
pub fn real_quartic_roots(p: &RealPolynomial) -> Result<(Vec<f64>, f64)> {
    let roots = quartic_roots(p)?;
    let monic = p.monic();
    let mut sorted = roots.to_vec();
    sorted.sort_by(|a, b| a.re.total_cmp(&b.re));
    let scale = sorted.iter().map(|z| z.norm()).fold(1.0, f64::max);

    let mut re = Vec::with_capacity(4);
    let mut imag: f64 = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut taken = 1;
        for k in (2..=sorted.len() - i).rev() {
            let run = &sorted[i..i + k];
            if diameter(run) > CLUSTER_SPREAD * scale {
                continue;
            }
            if let Some(centre) = multiple_root(&monic, run) {
                re.extend(std::iter::repeat_n(centre, k));
                taken = k;
                break;
            }
        }
        if taken == 1 {
            re.push(sorted[i].re);
            imag = imag.max(sorted[i].im.abs());
        }
        i += taken;
    }
    re.sort_by(f64::total_cmp);
    Ok((re, imag))
}

/// Largest spread (relative) a split multiple root may show before recombination.
const CLUSTER_SPREAD: f64 = 1e-2;
const MULTIPLICITY_TOL: f64 = 1e3 * f64::EPSILON;

fn diameter(run: &[C]) -> f64 {
    let mut d: f64 = 0.0;
    for a in run {
        for b in run {
            d = d.max((a - b).norm());
        }
    }
    d
}

/// Centre of `run` as a root of multiplicity `run.len()`, if it is one.
fn multiple_root(p: &RealPolynomial, run: &[C]) -> Option<f64> {
    let k = run.len();
    let mut centre = run.iter().map(|z| z.re).sum::<f64>() / k as f64;
    let mut derivs = vec![p.clone()];
    for _ in 1..k {
        let next = derivs.last().unwrap().derivative();
        derivs.push(next);
    }
    // simple root of p^(k−1)
    let top = &derivs[k - 1];
    let slope = top.derivative();
    for _ in 0..8 {
        let (v, dv) = (top.eval(centre), slope.eval(centre));
        if dv == 0.0 || v == 0.0 {
            break;
        }
        let step = v / dv;
        centre -= step;
        if step.abs() <= f64::EPSILON * centre.abs().max(1.0) {
            break;
        }
    }
    let vanishes = derivs[..k].iter().all(|d| {
        let size: f64 = d
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c.abs() * centre.abs().powi(i as i32))
            .sum();
        d.eval(centre).abs() <= MULTIPLICITY_TOL * size.max(f64::MIN_POSITIVE)
    });
    vanishes.then_some(centre)
}
