//! Multiplier systems `υ_k χⁿ`, tracked through exponents modulo 1.
//!
//! Every multiplier system of weight `k` is `υ_k χⁿ` for a unique twist
//! `n mod 12`, and `υ_1 = χ`. Values are normalized so the weight class lies
//! in `[0,1)`, which makes equality structural.

use std::fmt;

use num_traits::Zero;

use crate::rational::{frac, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplierSystem {
    weight_class: Rational,
    twist: u8,
}

impl MultiplierSystem {
    /// `υ_k χⁿ`.
    pub fn new(k: &Rational, n: i64) -> MultiplierSystem {
        let whole = k.floor();
        let shift: i64 = i64::try_from(whole.to_integer()).expect("weight fits in i64");
        MultiplierSystem {
            weight_class: k - whole,
            twist: (n + shift).rem_euclid(12) as u8,
        }
    }

    pub fn weight_class(&self) -> &Rational {
        &self.weight_class
    }

    pub fn twist(&self) -> u8 {
        self.twist
    }

    /// `e(x)` exponent of the value at `T`, in `[0,1)`.
    pub fn t_exponent(&self) -> Rational {
        frac(&((&self.weight_class + int(self.twist as i64)) / int(12)))
    }

    /// Exponent of the value at `S`.
    pub fn s_exponent(&self) -> Rational {
        frac(&(-(&self.weight_class + int(self.twist as i64)) / int(4)))
    }

    /// Exponent of the value at `ST`, from `(ω+1)^{−k}` with `ω+1 = e(1/6)`.
    pub fn st_exponent(&self) -> Rational {
        frac(&(-(&self.weight_class + int(self.twist as i64)) / int(6)))
    }

    /// Cusp parameter `m ∈ [0,12)` with `υ(T) = e(m/12)`.
    pub fn cusp_parameter(&self) -> Rational {
        self.t_exponent() * int(12)
    }

    pub fn product(&self, other: &MultiplierSystem) -> MultiplierSystem {
        MultiplierSystem::new(
            &(&self.weight_class + &other.weight_class),
            self.twist as i64 + other.twist as i64,
        )
    }

    pub fn is_trivial(&self) -> bool {
        self.weight_class.is_zero() && self.twist == 0
    }
}

/// `υ_k`.
pub fn canonical_multiplier(k: &Rational) -> MultiplierSystem {
    MultiplierSystem::new(k, 0)
}

/// `χ`, with `χ(T) = e(1/12)`.
pub fn chi() -> MultiplierSystem {
    MultiplierSystem::new(&Rational::zero(), 1)
}

/// `H(k, υ) = M_{k−m} · η^{2m}` where `m` is the cusp parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSpace {
    pub cusp_parameter: Rational,
    pub minimal_weight: Rational,
    pub description: String,
}

pub fn scalar_space_structure(u: &MultiplierSystem) -> ScalarSpace {
    let m = u.cusp_parameter();
    let description = format!("M_(k-{m}) * eta^(2*{m})");
    ScalarSpace {
        minimal_weight: m.clone(),
        cusp_parameter: m,
        description,
    }
}

impl fmt::Display for MultiplierSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "upsilon_{} chi^{}", self.weight_class, self.twist)
    }
}
