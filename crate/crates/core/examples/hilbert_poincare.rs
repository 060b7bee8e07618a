// Hilbert–Poincaré series of the graded modules.

use std::error::Error;

use vvmf::rational::{int, rat};
use vvmf::vvmf::{classify, hilbert_poincare, series_expansion};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = classify(3, &[rat(1, 7), rat(2, 7), rat(4, 7)], &int(0), None)?;
    let hp = hilbert_poincare(&report, 12);
    println!("{}", hp.to_text());

    // (1+t²)/((1−t⁴)(1−t⁶)) = 1/((1−t²)(1−t⁶))
    let a = series_expansion(&[1, 0, 1], &[4, 6], 20);
    let b = series_expansion(&[1], &[2, 6], 20);
    println!("{a:?}");
    if a != b {
        return Err("the two forms differ".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
