//! Truncated power series, Hensel lifting of arcs and orders along them.
//!
//! Run with `cargo run --example arcs`.

use fanocert::cli::parser::parse_polynomial;
use fanocert::poly::{CoeffDomain, PolyRing};
use fanocert::series::{arc_lift, compose, series_kth_root, TruncatedSeries};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = CoeffDomain::Rationals;
    let n = 8;

    let s = TruncatedSeries::from_i64s(q, &[1, 1], n);
    let root = series_kth_root(&s, 2)?;
    println!("sqrt(1 + t) = {:?}", root.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("order of (sqrt(1+t))^2 - (1+t): {:?}", root.pow(2).sub(&s).order());

    // the curve y = x^2 + y^3, parametrized by x = t
    let ring = PolyRing::new(["x", "y"], q)?;
    let f = parse_polynomial("y - x^2 - y^3", &ring)?;
    let x = TruncatedSeries::t(q, n);
    let y = arc_lift(&f, 1, &[Some(x.clone()), None], n)?;
    println!("y(t) = {:?}", y.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let residual = compose(&f, &[x.clone(), y.clone()])?;
    println!("F(t, y(t)) order: {:?}", residual.order());

    let d = parse_polynomial("y - x^2", &ring)?;
    println!("ord_t (y - x^2) along the arc: {:?}", compose(&d, &[x, y])?.order());
    Ok(())
}
