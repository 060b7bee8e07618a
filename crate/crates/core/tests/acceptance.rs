use vvmf::acceptance::{run, summary, Options};

fn main() {
    let only = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let results = run(&Options {
        only,
        ..Options::default()
    });
    for r in &results {
        println!("{}", r.line());
    }
    println!("{}", summary(&results));
    if results.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
}
