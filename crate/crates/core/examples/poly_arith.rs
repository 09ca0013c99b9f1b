//! Sparse polynomial arithmetic, translation and vanishing orders.
//!
//! Run with `cargo run --example poly_arith`.

use fanocert::cli::parser::parse_polynomial;
use fanocert::poly::{CoeffDomain, PolyRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(["x", "y", "z"], CoeffDomain::Rationals)?;
    let f = parse_polynomial("3/2*x^2*y - z^3 + x*y*z", &ring)?;
    let g = parse_polynomial("x - y", &ring)?;

    println!("f         = {f}");
    println!("g         = {g}");
    println!("f + g     = {}", &f + &g);
    println!("f * g     = {}", &f * &g);
    println!("g^3       = {}", g.pow(3));
    println!("d f / d x = {}", f.partial_derivative(0));

    for (d, piece) in f.homogeneous_components() {
        println!("degree {d} piece: {piece}");
    }

    // move the point (1, 1, 1) to the origin
    let domain = ring.domain();
    let point = vec![domain.from_i64(1), domain.from_i64(0), domain.from_i64(0)];
    let local = f.translate_origin(&point)?;
    println!("f around (1,0,0): {local}");
    println!("vanishing order of f there: {:?}", f.vanishing_order(&point)?);
    println!("vanishing order of f at the origin: {:?}", f.vanishing_order(&[domain.zero(), domain.zero(), domain.zero()])?);

    // the same product over F_7
    let f7 = PolyRing::new(["x", "y", "z"], CoeffDomain::prime_field(7)?)?;
    // the grammar puts exponents on variables only, so powers of sums go through `pow`
    let h = parse_polynomial("x + y", &f7)?.pow(7) - parse_polynomial("x^7 + y^7", &f7)?;
    println!("(x + y)^7 - x^7 - y^7 over F_7 = {h}");
    Ok(())
}
