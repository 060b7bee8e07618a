//! Exact computations with vector-valued modular forms of rank at most five.
//!
//! Everything works over Q: q-expansions carry rational leading exponents and
//! rational coefficients, and all linear algebra is exact.

pub mod acceptance;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod mlde;
pub mod modforms;
pub mod multsys;
pub mod poly;
pub mod qseries;
pub mod rational;
pub mod vvmf;

pub use error::{Error, Result};
pub use qseries::QSeries;
pub use rational::Rational;
