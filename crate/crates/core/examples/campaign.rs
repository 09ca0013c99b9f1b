//! A small deterministic campaign over random instances of a family.
//!
//! Run with `cargo run --release --example campaign`.

use fanocert::cli::campaign::{run_campaign, CampaignConfig};
use fanocert::cli::certify::CheckOptions;
use fanocert::cover::{default_prime, validate_family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let family = validate_family(5, 4, 2, 2)?;
    let config = CampaignConfig {
        family,
        trials: 3,
        points_off: 2,
        points_on: 1,
        prime: default_prime(2),
        seed: 1,
        concurrent: true,
        options: CheckOptions::default(),
    };
    let mut report = run_campaign(&config)?;
    let s = &report.summary;
    println!("{} checks, {} certified, regularity {}", s.checks, s.certified, s.regularity_certified);
    println!("verdict {:?}, exit code {}", s.verdict, report.exit_code());

    report.strip_timings();
    let again = {
        let mut r = run_campaign(&config)?;
        r.strip_timings();
        r
    };
    println!("rerun byte-identical: {}", report.to_json() == again.to_json());
    Ok(())
}
