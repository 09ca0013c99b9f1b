//! Reading, validating and re-printing instance files.
//!
//! Run with `cargo run --example parse_instance`.

use fanocert::cli::instance::{parse_instance, render_instance};

const BROKEN: &str = "M = 5\nm = 4\nl = 2\nK = 2\nf = x0^4 + 2x1^4\ng = x0^8\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = parse_instance(include_str!("data/fermat.inst"))?;
    print!("{}", render_instance(&file));

    let generalized = parse_instance(include_str!("data/generalized.inst"))?;
    println!("generalized: {}", generalized.instance.is_generalized());

    match parse_instance(BROKEN) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
