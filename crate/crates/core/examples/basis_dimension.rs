// Free-module bases and their graded ranks against the dimension formula.

use std::error::Error;

use vvmf::rational::{int, rat, Rational};
use vvmf::vvmf::{classify, construct_basis, graded_dimension, module_rank};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r: Vec<Rational> = [1, 6, 11, 21, 26].iter().map(|&a| rat(a, 30)).collect();
    let report = classify(5, &r, &int(0), None)?;
    let basis = construct_basis(&report, 25, 12)?;
    for (entry, v) in report.basis_recipe.iter().zip(&basis) {
        let leads: Vec<String> = v
            .components
            .iter()
            .map(|c| c.leading_exponent().to_string())
            .collect();
        println!(
            "{:<4} weight {:<5} leading exponents {}",
            entry.label,
            v.weight,
            leads.join(" ")
        );
    }
    for k in 0..6 {
        let rank = module_rank(&report, &basis, k, 12)?;
        let dim = graded_dimension(&report, k);
        println!("offset {k}: rank {rank}, formula {dim}");
        if rank != dim {
            return Err("rank and formula disagree".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
