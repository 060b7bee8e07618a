// Eisenstein series, the discriminant and the ring M_* = Q[E4, E6].

use std::error::Error;

use vvmf::modforms::{basis_mk, delta, dim_mk, eisenstein, euler_product};
use vvmf::rational::int;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let order = 12;
    let e4 = eisenstein(4, order);
    let e6 = eisenstein(6, order);
    println!("E4 = {}", e4.series);
    println!("E6 = {}", e6.series);

    let d = delta(order);
    println!("Δ  = {}", d.series);

    // the same Δ from the product side
    let product = euler_product(order).pow_rational(&int(24))?.shift(&int(1));
    if !d.series.agrees_with(&product) {
        return Err("Δ routes disagree".into());
    }

    let e12 = eisenstein(12, order);
    let coords = e12.coordinates().ok_or("E12 not in span")?;
    println!("E12 = {} E4^3 + {} E6^2", coords[0], coords[1]);

    for k in [0, 2, 4, 12, 24] {
        println!(
            "dim M_{k} = {} (monomials: {})",
            dim_mk(k),
            basis_mk(k, 1).len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
