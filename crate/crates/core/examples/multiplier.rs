// Multiplier systems υ_k χⁿ: T and S eigenvalues, cusp parameters, products.

use std::error::Error;

use vvmf::multsys::{canonical_multiplier, chi, scalar_space_structure, MultiplierSystem};
use vvmf::rational::{int, rat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let u = MultiplierSystem::new(&rat(1, 2), 0);
    println!(
        "{u}: T ↦ e({}), S ↦ e({}), cusp parameter {}",
        u.t_exponent(),
        u.s_exponent(),
        u.cusp_parameter()
    );

    // υ_1 is the character χ
    if canonical_multiplier(&int(1)) != chi() {
        return Err("υ_1 ≠ χ".into());
    }

    let mut x = MultiplierSystem::new(&int(0), 0);
    for n in 1..=12 {
        x = x.product(&chi());
        println!("χ^{n}: cusp parameter {}", x.cusp_parameter());
    }
    if !x.is_trivial() {
        return Err("χ does not have order 12".into());
    }

    let s = scalar_space_structure(&MultiplierSystem::new(&rat(1, 3), 5));
    println!("scalar forms for υ_1/3 χ^5: {}", s.description);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
