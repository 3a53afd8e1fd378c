//! Monte-Carlo estimate of the admissible fraction of random tensor configurations.

use clifford_bloch::domains::{sample_domain, SampleOptions};

fn main() -> clifford_bloch::Result<()> {
    for (m, k) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)] {
        let samples = sample_domain(m, k, 4000, 42, SampleOptions::default())?;
        let admissible = samples.iter().filter(|s| s.closed_form.admissible).count();
        let disagree = samples.iter().filter(|s| !s.agrees()).count();
        println!(
            "m={m} k={k}: admissible fraction {:.4}, oracle disagreements {disagree}",
            admissible as f64 / samples.len() as f64
        );
    }
    Ok(())
}
