// Classification reports for each supported dimension.

use std::error::Error;

use vvmf::rational::{int, rat, Rational};
use vvmf::vvmf::{classify, validate_rep, RepClass};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| rat(a, b)).collect::<Vec<Rational>>();

    let report = classify(2, &r(&[(1, 12), (5, 12)]), &int(0), None)?;
    println!("{}\n", report.to_text());

    let four = r(&[(1, 15), (2, 15), (2, 5), (11, 15)]);
    for class in [RepClass::Rho0, RepClass::Rho1] {
        let rep = classify(4, &four, &int(0), Some(class))?;
        println!(
            "d=4 {class}: minimal weight {}, dim {}",
            rep.minimal_weight, rep.dimension_function
        );
    }

    for n in [0, 1, 2, 3, 4] {
        let mut a: Vec<i64> = vec![1, 6, 11, 16, 21, 26];
        a.remove((n + 1) % 5);
        let five: Vec<Rational> = a.iter().map(|&x| rat(x, 30)).collect();
        let rep = classify(5, &five, &int(0), None)?;
        println!(
            "d=5 N={}: minimal weight {}, cyclic {}",
            rep.residue_n.unwrap_or_default(),
            rep.minimal_weight,
            rep.cyclic
        );
    }

    for bad in [r(&[(0, 1), (1, 3), (1, 2)]), r(&[(1, 5), (1, 5)])] {
        let d = bad.len();
        let e = validate_rep(d, &bad, &int(0))
            .err()
            .ok_or("expected rejection")?;
        let shown: Vec<String> = bad.iter().map(|x| x.to_string()).collect();
        println!("({}): {}", shown.join(", "), e.name());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
