//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::time::Instant;

use clifford_bloch::clifford::{chirality, generate_gammas, BasisMode};
use clifford_bloch::coords::{decode, encode, tensor_config, DensityMatrix, StateCoords};
use clifford_bloch::domains::{
    descartes_positivity, figure_data, rt4_domain, tunnel_membership, tunnel_tensor, Figure, FigureData, FigureOptions,
    DOMAIN_TOL,
};
use clifford_bloch::invariants::{
    det_identity_check, dual_identity, epsilon_d3, epsilon_d3_bruteforce, frobenius_r, pfaffian, trace_t4, InvariantSet,
};
use clifford_bloch::linalg::{char_poly, ComplexMatrix, I, ONE, ZERO};
use clifford_bloch::random::{random_generator, random_tensor, random_unit_trace_hermitian, stream_rng};
use clifford_bloch::spectra::{
    degeneracy_pattern, factorized_charpoly, numeric_spectrum, third_order_magnitude, two_tensor_matrix,
    two_tensor_spectrum, vector_spectrum, ConfigKind, Spectrum,
};
use clifford_bloch::symmetry::{conjugate_state, orthogonal_from_generator, rotate_coords, rotate_tensor, spin_lift};
use clifford_bloch::tensor::AntisymTensor;
use clifford_bloch::Error;
use rand::Rng;

use common::{min_eigenvalue, standard};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn oracle(m: usize, g: &AntisymTensor) -> Spectrum {
    numeric_spectrum(&tensor_config(&standard(m), g).unwrap()).unwrap()
}

fn exactly_equal(a: &ComplexMatrix, b: &ComplexMatrix) -> bool {
    a.entries() == b.entries()
}

fn algebra_generation() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for m in 1..=5 {
        let gammas = generate_gammas(m).unwrap();
        let n = 1 << m;
        let two = ComplexMatrix::identity(n).scale_real(2.0);
        let zero = ComplexMatrix::zeros(n);
        for (i, a) in gammas.iter().enumerate() {
            for (j, b) in gammas.iter().enumerate() {
                let expected = if i == j { &two } else { &zero };
                if !exactly_equal(&a.anticommutator(b), expected) {
                    failures.push(format!("m={m} ({i},{j})"));
                }
            }
            let entries_ok = a.entries().iter().all(|z| [ZERO, ONE, -ONE, I, -I].contains(z));
            if !entries_ok {
                failures.push(format!("m={m} Γ{} entries", i + 1));
            }
        }
        let chi = chirality(m).unwrap();
        for (i, g) in gammas.iter().enumerate() {
            if !exactly_equal(&chi.anticommutator(g), &zero) {
                failures.push(format!("m={m} chirality vs Γ{}", i + 1));
            }
        }
        if !exactly_equal(&(&chi * &chi), &ComplexMatrix::identity(n)) {
            failures.push(format!("m={m} chirality squared"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        failures.is_empty() && secs < 10.0,
        format!("m=1..5 exact anticommutators, chirality anticommutes; {secs:.3}s; failures {failures:?}"),
    )
}

fn basis_orthogonality() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut pairs = 0usize;
    for m in 1..=4 {
        let basis = standard(m);
        let n = (1u64 << m) as f64;
        let elements = basis.elements();
        for (a, (_, ea)) in elements.iter().enumerate() {
            for (b, (_, eb)) in elements.iter().enumerate() {
                let expected = if a == b { n } else { 0.0 };
                let t = ea.trace_product(eb);
                worst = worst.max((t.re - expected).abs()).max(t.im.abs());
                pairs += 1;
            }
        }
    }
    let basis = standard(5);
    let elements = basis.elements();
    let mut rng = stream_rng(2, 0);
    for _ in 0..200 {
        let a = rng.gen_range(0..elements.len());
        let b = if rng.gen_bool(0.2) {
            a
        } else {
            rng.gen_range(0..elements.len())
        };
        let expected = if a == b { 32.0 } else { 0.0 };
        let t = elements[a].1.trace_product(&elements[b].1);
        worst = worst.max((t.re - expected).abs()).max(t.im.abs());
        pairs += 1;
    }
    outcome(
        worst < 1e-10,
        format!("{pairs} pairs (exhaustive m≤4, 200 at m=5); max deviation {worst:.2e}"),
    )
}

fn codec_round_trip() -> Outcome {
    let mut worst: f64 = 0.0;
    for m in 1..=3 {
        let basis = standard(m);
        for i in 0..100 {
            let mut rng = stream_rng(3, (m * 1000 + i) as u64);
            let spread = rng.gen_range(0.01..1.0);
            let rho = DensityMatrix::new(m, random_unit_trace_hermitian(&mut rng, m, spread)).unwrap();
            let back = encode(&decode(&rho, &basis).unwrap(), &basis).unwrap();
            worst = worst.max(back.matrix().max_abs_diff(rho.matrix()));
        }
    }
    outcome(
        worst < 1e-10,
        format!("300 unit-trace hermitian matrices, m=1..3; max error {worst:.2e}"),
    )
}

fn vector_spectra() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut bad_patterns = 0;
    for i in 0..200u64 {
        let m = 1 + (i % 4) as usize;
        let mut rng = stream_rng(4, i);
        let g = random_tensor(&mut rng, 2 * m, 1, 0.6);
        let pseudo = if i % 3 == 0 {
            Some(rng.gen_range(-0.4..0.4))
        } else {
            None
        };
        let closed = vector_spectrum(m, &g, pseudo).unwrap();
        let mut coords = StateCoords::new(m, BasisMode::Standard).with_grade(g).unwrap();
        if let Some(p) = pseudo {
            coords.set(&(1..=2 * m).collect::<Vec<_>>(), p).unwrap();
        }
        let numeric = numeric_spectrum(&encode(&coords, &standard(m)).unwrap()).unwrap();
        worst = worst.max(closed.max_abs_diff(&numeric));
        let pattern = degeneracy_pattern(&closed, 1e-8);
        if pattern.len() != 2 || pattern.iter().any(|(_, k)| *k != 1 << (m - 1)) {
            bad_patterns += 1;
        }
    }
    outcome(
        worst < 1e-9 && bad_patterns == 0,
        format!("200 configs m=1..4; max |Δλ| {worst:.2e}; pattern violations {bad_patterns}"),
    )
}

/// Grade-2 tensor over `2m` indices living on a random 6-dimensional subspace.
fn rank_six(seed: u64, m: usize) -> AntisymTensor {
    let mut rng = stream_rng(seed, 5);
    let block = random_tensor(&mut rng, 6, 2, 0.3);
    let mut g = AntisymTensor::zeros(2 * m, 2);
    for (idx, v) in block.iter() {
        g.set(idx.indices(), v).unwrap();
    }
    let l = orthogonal_from_generator(&random_generator(&mut rng, 2 * m, 2.0));
    rotate_tensor(&g, &l).unwrap()
}

fn two_tensor_spectra() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;

    let mut worst2: f64 = 0.0;
    for i in 0..200 {
        let g = random_tensor(&mut stream_rng(5, i), 4, 2, 0.5);
        worst2 = worst2.max(two_tensor_spectrum(2, &g).unwrap().max_abs_diff(&oracle(2, &g)));
    }
    pass &= worst2 < 1e-9;
    lines.push(format!("m=2 200 tensors max |Δλ| {worst2:.2e}"));

    let mut worst3: f64 = 0.0;
    let mut with_d3 = 0;
    for i in 0..200 {
        let g = random_tensor(&mut stream_rng(6, i), 6, 2, 0.4);
        if epsilon_d3(&g).unwrap().abs() > 1e-3 {
            with_d3 += 1;
        }
        worst3 = worst3.max(two_tensor_spectrum(3, &g).unwrap().max_abs_diff(&oracle(3, &g)));
    }
    let a = 1.0 / 3f64.sqrt();
    let octet = AntisymTensor::from_entries(6, 2, &[(&[1, 2], a), (&[3, 4], a), (&[5, 6], a)]).unwrap();
    worst3 = worst3.max(two_tensor_spectrum(3, &octet).unwrap().max_abs_diff(&oracle(3, &octet)));
    pass &= worst3 < 1e-9 && with_d3 > 150;
    lines.push(format!(
        "m=3 201 tensors ({with_d3} with |D³|>1e-3) max |Δλ| {worst3:.2e}"
    ));

    // D³ = 0: a 4-index tensor embedded at m = 3 and rotated
    let mut worst_pattern: f64 = 0.0;
    for i in 0..100 {
        let mut rng = stream_rng(7, i);
        let small = random_tensor(&mut rng, 4, 2, 0.5);
        let mut g = AntisymTensor::zeros(6, 2);
        for (idx, v) in small.iter() {
            g.set(idx.indices(), v).unwrap();
        }
        let g = rotate_tensor(&g, &orthogonal_from_generator(&random_generator(&mut rng, 6, 2.0))).unwrap();
        let mut expected: Vec<f64> = two_tensor_spectrum(2, &small)
            .unwrap()
            .eigenvalues
            .iter()
            .flat_map(|x| [x / 2.0, x / 2.0])
            .collect();
        expected.sort_by(f64::total_cmp);
        let got = two_tensor_spectrum(3, &g).unwrap();
        worst_pattern = worst_pattern.max(common::max_diff(&got.eigenvalues, &expected));
    }
    pass &= worst_pattern < 1e-9;
    lines.push(format!(
        "D³=0 at m=3 vs m=2 pattern at 1/8: max |Δλ| {worst_pattern:.2e}"
    ));

    let mut worst4: f64 = 0.0;
    for i in 0..50 {
        let g = rank_six(8 + i, 4);
        let mut inv = InvariantSet::of_two_tensor(&g).unwrap();
        inv.d3 = Some(third_order_magnitude(&g).unwrap());
        let closed = factorized_charpoly(4, ConfigKind::TwoTensor, &inv).unwrap();
        let direct = char_poly(&two_tensor_matrix(4, &g).unwrap()).unwrap();
        worst4 = worst4.max(closed.relative_distance(&direct));
        worst4 = worst4.max(
            closed
                .rescale_argument(1.0 / 16.0)
                .relative_distance(&direct.rescale_argument(1.0 / 16.0)),
        );
    }
    pass &= worst4 < 1e-8;
    lines.push(format!(
        "m=4 factorization vs char_poly on 50 rank-≤6 tensors: relative {worst4:.2e}"
    ));

    let generic = random_tensor(&mut stream_rng(9, 0), 8, 2, 0.3);
    let distinct = degeneracy_pattern(&oracle(4, &generic), 1e-8).len();
    let rejected = matches!(
        two_tensor_spectrum(4, &generic),
        Err(Error::FactorizationMismatch { .. })
    );
    pass &= rejected;
    lines.push(format!(
        "note: generic rank-8 tensor at m=4 has {distinct} distinct eigenvalues, factorization reported as mismatch: {rejected}"
    ));
    outcome(pass, lines.join("; "))
}

fn invariant_identities() -> Outcome {
    let mut det_err: f64 = 0.0;
    let mut dual_err: f64 = 0.0;
    let mut pf_err: f64 = 0.0;
    for i in 0..100 {
        let g = random_tensor(&mut stream_rng(10, i), 4, 2, 1.0);
        let (lhs, rhs) = det_identity_check(&g, 2).unwrap();
        det_err = det_err.max((lhs - rhs).abs());
        let (lhs, rhs) = dual_identity(&g, 2).unwrap();
        det_err = det_err.max((lhs - rhs).abs());

        let g = random_tensor(&mut stream_rng(11, i), 6, 2, 1.0);
        let (lhs, rhs) = dual_identity(&g, 3).unwrap();
        dual_err = dual_err.max((lhs - rhs).abs());
        let brute = epsilon_d3_bruteforce(&g).unwrap();
        pf_err = pf_err.max((brute - 48.0 * pfaffian(&g.to_matrix().unwrap())).abs());
    }
    let block = AntisymTensor::from_entries(6, 2, &[(&[1, 2], 1.0), (&[3, 4], 1.0), (&[5, 6], 1.0)]).unwrap();
    let (d3, d3_brute) = (epsilon_d3(&block).unwrap(), epsilon_d3_bruteforce(&block).unwrap());
    let exact = d3 == 48.0 && d3_brute == 48.0;
    outcome(
        det_err < 1e-10 && dual_err < 1e-10 && pf_err < 1e-10 && exact,
        format!(
            "m=2 det identity {det_err:.2e}; m=3 dual identity {dual_err:.2e}; ε-sum vs 48·Pf {pf_err:.2e}; block D³ = {d3} / {d3_brute}"
        ),
    )
}

fn rotation_compatibility() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut spectral: f64 = 0.0;
    for m in 2..=3 {
        let basis = standard(m);
        for i in 0..50 {
            let mut rng = stream_rng(12, (m * 100 + i) as u64);
            let rho = DensityMatrix::new(m, random_unit_trace_hermitian(&mut rng, m, 0.3)).unwrap();
            let coords = decode(&rho, &basis).unwrap();
            let generator = random_generator(&mut rng, 2 * m, 3.0);
            let l = orthogonal_from_generator(&generator);
            let u = spin_lift(&generator, &basis).unwrap();
            let lhs = encode(&rotate_coords(&coords, &l).unwrap(), &basis).unwrap();
            let rhs = conjugate_state(&rho, &u).unwrap();
            worst = worst.max(lhs.matrix().max_abs_diff(rhs.matrix()));
            let before = numeric_spectrum(&rho).unwrap();
            spectral = spectral.max(numeric_spectrum(&lhs).unwrap().max_abs_diff(&before));
        }
    }
    outcome(
        worst < 1e-9 && spectral < 1e-9,
        format!("100 rotations at m=2,3; encode∘rotate vs conjugation {worst:.2e}; spectrum drift {spectral:.2e}"),
    )
}

fn domain_equivalence() -> Outcome {
    let basis = standard(2);
    let mut disagreements = 0;
    let mut near = 0;
    for i in 0..2000u64 {
        let mut rng = stream_rng(13, i);
        let mut g = random_tensor(&mut rng, 4, 2, 1.0);
        if i % 2 == 1 {
            // boundary-adjacent: rescale so λmin = 0, then nudge by up to 1e−6
            let lam = min_eigenvalue(&tensor_config(&basis, &g).unwrap());
            let nudge = rng.gen_range(-1e-6..1e-6);
            g = g.scale(0.25 / (0.25 - lam) * (1.0 + nudge));
        }
        let lam = min_eigenvalue(&tensor_config(&basis, &g).unwrap());
        let verdict = rt4_domain(frobenius_r(&g).unwrap(), trace_t4(&g).unwrap(), DOMAIN_TOL);
        if lam.abs() <= 1e-8 {
            near += 1;
            continue;
        }
        if verdict.admissible != (lam >= -DOMAIN_TOL) {
            disagreements += 1;
        }
    }
    let corner = rt4_domain(1.0, 2.0, DOMAIN_TOL);
    outcome(
        disagreements == 0 && corner.admissible && corner.boundary,
        format!(
            "2000 tensors ({near} within 1e-8 of the boundary skipped); disagreements {disagreements}; (1,2) admissible={} boundary={}",
            corner.admissible, corner.boundary
        ),
    )
}

fn tunnel_geometry() -> Outcome {
    let basis = standard(2);
    let mut disagreements = 0;
    for i in 0..21 {
        for j in 0..21 {
            for k in 0..21 {
                let c = |n: usize| -1.0 + n as f64 / 10.0;
                let (x, y, z) = (c(i), c(j), c(k));
                let lam = min_eigenvalue(&tensor_config(&basis, &tunnel_tensor(x, y, z)).unwrap());
                if tunnel_membership(x, y, z, DOMAIN_TOL).admissible != (lam >= -DOMAIN_TOL) {
                    disagreements += 1;
                }
            }
        }
    }
    let FigureData::Surfaces { points, .. } = figure_data(Figure::Fig3, 41, FigureOptions::default()).unwrap() else {
        return outcome(false, "fig3 returned the wrong dataset".into());
    };
    let negative = points
        .iter()
        .filter(|p| min_eigenvalue(&tensor_config(&basis, &tunnel_tensor(p.x, p.y, p.z)).unwrap()) < -DOMAIN_TOL)
        .count();
    outcome(
        disagreements == 0 && negative == 0 && !points.is_empty(),
        format!(
            "21³ grid disagreements {disagreements}; fig3 {} points, {negative} oracle-negative",
            points.len()
        ),
    )
}

fn descartes_fallback() -> Outcome {
    let mut disagreements = 0;
    let mut admissible = 0;
    for i in 0..500u64 {
        let mut rng = stream_rng(14, i);
        let spread = rng.gen_range(0.01..0.5);
        let h = random_unit_trace_hermitian(&mut rng, 3, spread);
        let verdict = descartes_positivity(&char_poly(&h).unwrap(), DOMAIN_TOL);
        let lam = common::eigenvalues(&h)[0];
        if verdict.admissible != (lam >= -DOMAIN_TOL) {
            disagreements += 1;
        }
        admissible += usize::from(verdict.admissible);
    }
    outcome(
        disagreements == 0 && admissible > 0 && admissible < 500,
        format!("500 m=3 matrices ({admissible} admissible); disagreements {disagreements}"),
    )
}

fn figure_reproduction() -> Outcome {
    let FigureData::Fig1 { rows, curves } = figure_data(Figure::Fig1, 101, FigureOptions::default()).unwrap() else {
        return outcome(false, "fig1 returned the wrong dataset".into());
    };
    let mismatches = rows
        .iter()
        .filter(|row| {
            let (r, t4) = (row.r, row.t4);
            let inside = (0.0..=1.0).contains(&r)
                && t4 <= 2.0 * r * r + DOMAIN_TOL
                && t4 >= (r + 1.0).powi(2) - 2.0 - DOMAIN_TOL;
            row.admissible != inside
        })
        .count();
    let end = |name: &str| {
        curves
            .iter()
            .find(|c| c.name == name)
            .and_then(|c| c.points.last().copied())
    };
    let (upper, lower) = (end("T4_upper"), end("T4_lower"));
    let meet = matches!((upper, lower), (Some(a), Some(b)) if a == [1.0, 2.0] && b == [1.0, 2.0]);
    outcome(
        rows.len() == 10201 && mismatches == 0 && meet,
        format!(
            "{} rows, {mismatches} mismatches; curve ends {upper:?} {lower:?}",
            rows.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("algebra generation", algebra_generation),
        ("basis orthogonality", basis_orthogonality),
        ("codec round trip", codec_round_trip),
        ("vector spectra", vector_spectra),
        ("two-tensor spectra", two_tensor_spectra),
        ("invariant identities", invariant_identities),
        ("rotation compatibility", rotation_compatibility),
        ("domain equivalence at m=2", domain_equivalence),
        ("tunnel geometry", tunnel_geometry),
        ("descartes fallback", descartes_fallback),
        ("figure reproduction", figure_reproduction),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{tag} {:>2} {name} ({:.2}s): {}",
            n + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
