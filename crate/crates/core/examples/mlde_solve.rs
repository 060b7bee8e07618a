// Eisenstein operators from indicial roots, and their Frobenius solutions.

use std::error::Error;

use vvmf::mlde::operator_from_roots;
use vvmf::rational::rat;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let roots = [rat(1, 12), rat(5, 12)];
    let op = operator_from_roots(&roots)?;
    println!(
        "weight {}, alphas {:?}",
        op.weight,
        op.alphas.iter().map(|a| a.to_string()).collect::<Vec<_>>()
    );
    println!(
        "indicial polynomial {}",
        op.indicial_polynomial().to_text("r")
    );

    let order = 10;
    let mlde = op.to_mlde(order);
    for f in op.solve_fundamental_system(order)? {
        println!("{f}");
        let residual = mlde.apply(&f);
        if !residual.is_zero() {
            return Err(format!("residual {residual}").into());
        }
    }

    // a resonant set is rejected
    let err =
        operator_from_roots(&[rat(0, 1), rat(1, 1)]).and_then(|o| o.solve_fundamental_system(5));
    println!(
        "roots 0, 1: {}",
        err.map(|_| "solved".to_string())
            .unwrap_or_else(|e| e.name().to_string())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
