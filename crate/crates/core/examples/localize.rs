//! Localize a double cover at a point and print the chart data.
//!
//! Run with `cargo run --example localize`.

use fanocert::cli::instance::parse_instance;
use fanocert::cli::parse_point;
use fanocert::cover::{localize, regularity_sequence, smooth_at};

const INSTANCE: &str = include_str!("data/fermat.inst");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = parse_instance(INSTANCE)?;
    let instance = &file.instance;
    println!("family {}, degree {}", instance.family(), instance.family().degree());

    let point = parse_point("1:0:0:0:0:0:1", instance.domain())?;
    let chart = localize(instance, &point)?;
    println!("point {} is {} (pivot x{})", chart.point(), chart.branch(), chart.pivot());
    println!("smooth: {}", smooth_at(&chart));
    for (j, qj) in chart.q().iter().enumerate() {
        println!("  q_{} = {qj}", j + 1);
    }
    for (j, wj) in chart.w().iter().enumerate().take(3) {
        println!("  w_{j} = {wj}");
    }

    let case = regularity_sequence(&chart)?;
    println!("case {}: {}", case.tag, case.labels.join(", "));
    Ok(())
}
