//! Ordering tables and exact degree-bound certificates.
//!
//! Run with `cargo run --example bound_certificates`.

use fanocert::chain::{main_case_bound, ordering_table, ramified_case_bound, telescoping_product};
use fanocert::cover::validate_family;
use fanocert::poly::rational_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let family = validate_family(6, 4, 3, 2)?;
    let table = ordering_table(&family)?;
    println!("family {family}");
    println!("  M set {:?}, L set {:?}", table.m_set, table.l_set);
    println!("  chi = {:?}", table.chi);

    let cert = main_case_bound(&family)?;
    println!("  product {} = closed form {}", rational_string(&cert.product), rational_string(&cert.closed_form));
    println!("  bound {} vs 4/deg = {}: {:?}", rational_string(&cert.bound), rational_string(&cert.threshold), cert.verdict);

    let ramified = ramified_case_bound(&validate_family(5, 4, 2, 2)?)?;
    println!("ramified (5,4,2,2): product {}, {:?}", rational_string(&ramified.product), ramified.verdict);

    let block = telescoping_product(4, 10);
    println!("prod_(a=4..10) (a/(a-1)) = {}", rational_string(&block.literal));
    Ok(())
}
