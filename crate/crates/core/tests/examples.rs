mod eisenstein_delta {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/eisenstein_delta.rs"
    ));
}

#[test]
fn eisenstein_delta_example_runs() {
    eisenstein_delta::run_example().expect("eisenstein_delta example should run");
}

mod eta_kernel {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/eta_kernel.rs"
    ));
}

#[test]
fn eta_kernel_example_runs() {
    eta_kernel::run_example().expect("eta_kernel example should run");
}

mod multiplier {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/multiplier.rs"
    ));
}

#[test]
fn multiplier_example_runs() {
    multiplier::run_example().expect("multiplier example should run");
}

mod mlde_solve {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/mlde_solve.rs"
    ));
}

#[test]
fn mlde_solve_example_runs() {
    mlde_solve::run_example().expect("mlde_solve example should run");
}

mod wronskian {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/wronskian.rs"
    ));
}

#[test]
fn wronskian_example_runs() {
    wronskian::run_example().expect("wronskian example should run");
}

mod classify {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify.rs"));
}

#[test]
fn classify_example_runs() {
    classify::run_example().expect("classify example should run");
}

mod basis_dimension {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/basis_dimension.rs"
    ));
}

#[test]
fn basis_dimension_example_runs() {
    basis_dimension::run_example().expect("basis_dimension example should run");
}

mod hilbert_poincare {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/hilbert_poincare.rs"
    ));
}

#[test]
fn hilbert_poincare_example_runs() {
    hilbert_poincare::run_example().expect("hilbert_poincare example should run");
}
