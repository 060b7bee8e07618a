// Powers of η and the kernel of the modular derivative.

use std::error::Error;

use vvmf::modforms::{eta_power, modular_derivative, p_series};
use vvmf::rational::{int, rat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("P = {}", p_series(6));
    for k in [rat(1, 2), int(1), rat(13, 7)] {
        let w = &k * int(2);
        let f = eta_power(&w, 10);
        let d = modular_derivative(&f, &k);
        println!("η^{w} = {f}");
        println!("  D_{k} η^{w} = {}", d);
        if !d.is_zero() {
            return Err(format!("D_{k} does not kill η^{w}").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
