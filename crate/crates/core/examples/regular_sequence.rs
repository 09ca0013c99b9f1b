//! Gröbner bases, dimensions and the regular-sequence certifier.
//!
//! Run with `cargo run --example regular_sequence`.

use fanocert::cli::parser::parse_polynomial;
use fanocert::poly::{CoeffDomain, PolyRing, Polynomial};
use fanocert::regseq::{groebner_basis, ideal_dimension, regular_at_origin, GroebnerOptions, IdealPresentation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(["x", "y", "z"], CoeffDomain::Rationals)?;
    let opts = GroebnerOptions::default();
    let parse = |s: &str| parse_polynomial(s, &ring);

    let twisted = IdealPresentation::new(&ring, vec![parse("x*z - y^2")?, parse("y - x^2")?])?;
    let gb = groebner_basis(&twisted, &opts)?;
    println!("reduced basis:");
    for g in gb.basis() {
        println!("  {g}");
    }
    println!("dimension: {}", ideal_dimension(&twisted, &opts)?);

    let sequences: [(&str, Vec<Polynomial>); 3] = [
        ("x, y, z", vec![parse("x")?, parse("y")?, parse("z")?]),
        ("x*y, x*z", vec![parse("x*y")?, parse("x*z")?]),
        ("x + y^2, y + z^3", vec![parse("x + y^2")?, parse("y + z^3")?]),
    ];
    for (name, seq) in sequences {
        let verdict = regular_at_origin(&seq, 3, 5, 11, &opts)?;
        println!("({name}): {:?}", verdict.outcome);
    }
    Ok(())
}
