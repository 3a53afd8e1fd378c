//! Seeded generators for tensors, rotations and states.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coords::DensityMatrix;
use crate::error::Result;
use crate::linalg::ComplexMatrix;
use crate::symmetry::RotationGenerator;
use crate::tensor::{combinations, AntisymTensor};

/// Deterministic stream `index` of `seed`; streams are independent of each other.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Each increasing slot drawn uniformly from `[-half_width, half_width]`.
pub fn random_tensor<R: Rng>(rng: &mut R, side: usize, k: usize, half_width: f64) -> AntisymTensor {
    let mut t = AntisymTensor::zeros(side, k);
    for idx in combinations(side, k) {
        t.set(idx.indices(), rng.gen_range(-half_width..=half_width))
            .expect("increasing index");
    }
    t
}

pub fn random_generator<R: Rng>(rng: &mut R, side: usize, scale: f64) -> RotationGenerator {
    RotationGenerator::new(random_tensor(rng, side, 2, scale)).expect("grade 2")
}

fn random_complex_matrix<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

/// `I/n + spread·H₀` with `H₀` traceless hermitian; indefinite for large spread.
pub fn random_unit_trace_hermitian<R: Rng>(rng: &mut R, m: usize, spread: f64) -> ComplexMatrix {
    let n = 1usize << m;
    let a = random_complex_matrix(rng, n);
    let h = (&a + &a.adjoint()).scale_real(0.5);
    let shift = h.trace().re / n as f64;
    let mut traceless = h;
    traceless.add_scaled(Complex64::new(-shift, 0.0), &ComplexMatrix::identity(n));
    let mut out = ComplexMatrix::identity(n).scale_real(1.0 / n as f64);
    out.add_scaled(Complex64::new(spread, 0.0), &traceless);
    out
}

/// `AA†/trace(AA†)` for a random square `A` of rank `rank`.
pub fn random_state<R: Rng>(rng: &mut R, m: usize, rank: usize) -> Result<DensityMatrix> {
    let n = 1usize << m;
    let rank = rank.clamp(1, n);
    let a = ComplexMatrix::from_fn(n, |_, j| {
        if j < rank {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let p = &a * &a.adjoint();
    let t = p.trace().re;
    let mut rho = p.scale_real(1.0 / t);
    let sym = (&rho + &rho.adjoint()).scale_real(0.5);
    rho = sym;
    DensityMatrix::new(m, rho)
}
