// Modular Wronskians of fundamental systems are pure powers of η.

use std::error::Error;

use vvmf::mlde::operator_from_roots;
use vvmf::rational::rat;
use vvmf::vvmf::wronskian_eta_test;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let roots = [rat(1, 7), rat(2, 7), rat(4, 7)];
    let op = operator_from_roots(&roots)?;
    let f = op.solve_fundamental_system(12)?;
    let t = wronskian_eta_test(&f, &op.weight)?;
    println!("weight {} vector, λ = {}", op.weight, t.lambda);
    println!("W = {}", t.wronskian);
    println!(
        "W / η^(24λ) = {} (weight {})",
        t.quotient, t.quotient_weight
    );
    if !t.is_pure_eta_power {
        return Err("expected a pure η power".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
