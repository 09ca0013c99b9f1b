//! The full point-check pipeline on a random instance over F_p.
//!
//! Run with `cargo run --release --example certify_point`.

use fanocert::cli::certify::{check_point, CheckOptions, PointSource, TaskId};
use fanocert::cover::{default_prime, validate_family, CoverInstance};
use fanocert::poly::CoeffDomain;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let family = validate_family(5, 4, 2, 2)?;
    let p = default_prime(family.sheets());
    let instance = CoverInstance::random(family, CoeffDomain::prime_field(p)?, 2024, 0);
    let opts = CheckOptions::default();

    for (index, source) in [PointSource::SampleOffBranch, PointSource::SampleOnBranch].iter().enumerate() {
        let task = TaskId { master_seed: 2024, trial: 0, index: index as u64 };
        let record = check_point(&instance, source, Some(p), task, &opts);
        println!("point {} ({})", record.point.as_deref().unwrap_or("?"), record.branch.as_deref().unwrap_or("?"));
        println!("  sequence: {}", record.sequence.join(", "));
        if let Some(v) = &record.regularity {
            println!("  regularity: {:?}", v.outcome);
        }
        for check in &record.arc_checks {
            println!("  {}: {}/{} arcs reach order {}", check.function, check.passes(), check.arcs.len(), check.required);
        }
        println!("  status: {:?}", record.status);
    }
    Ok(())
}
