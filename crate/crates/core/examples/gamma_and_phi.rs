//! Binomial coefficients `γ_i` of `(1 + s)^{1/K}` and the homogeneous pieces
//! `Φ_i` of `(1 + w_1 + w_2 + …)^{1/K}`.
//!
//! Run with `cargo run --example gamma_and_phi`.

use fanocert::cli::parser::parse_polynomial;
use fanocert::poly::{rational_string, CoeffDomain, PolyRing};
use fanocert::series::{gamma_coefficients, phi_polynomials, truncated_kth_root};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in [2, 3, 5] {
        let table = gamma_coefficients(k, 6)?;
        let shown: Vec<String> = table.coefficients().iter().map(rational_string).collect();
        println!("K = {k}: gamma = [{}]", shown.join(", "));
    }

    let ring = PolyRing::new(["a", "b"], CoeffDomain::Rationals)?;
    let w = vec![parse_polynomial("a + b", &ring)?, parse_polynomial("a*b", &ring)?];
    let phis = phi_polynomials(&ring, &w, 2, 4)?;
    for (i, phi) in phis.iter().enumerate() {
        println!("Phi_{} = {phi}", i + 1);
    }

    // ([g^{1/2}]_3)^2 agrees with g = 1 + w_1 + w_2 up to degree 3
    let root = truncated_kth_root(&ring, &w, 2, 3)?;
    let g = parse_polynomial("1 + a + b + a*b", &ring)?;
    let error = root.pow(2) - g;
    println!("([g^(1/2)]_3)^2 - g starts in degree {:?}", error.low_degree());
    Ok(())
}
