//! Vector-valued modular forms for T-unitarizable representations of rank ≤ 5.

mod classify;
mod construct;
mod hp;
mod wronskian;

pub use classify::{
    classify, graded_dimension, minimal_admissible, validate_rep, Case, ClassificationReport,
    RecipeEntry, RepClass, RepData,
};
pub use construct::{construct_basis, module_rank, relation_in_span, BasisContext};
pub use hp::{hilbert_poincare, series_expansion, HilbertPoincare};
pub use wronskian::{modular_wronskian, series_determinant, wronskian_eta_test, EtaTest};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modforms::{modular_derivative_with, ModularForm};
use crate::multsys::MultiplierSystem;
use crate::qseries::{QSeries, SeriesJson};
use crate::rational::{fmt_rational, int, parse_rational, Rational};

/// A truncated vector-valued form: one q-expansion per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VvmfVector {
    pub weight: Rational,
    pub components: Vec<QSeries>,
    pub rep_exponents: Vec<Rational>,
    pub multiplier: MultiplierSystem,
}

impl VvmfVector {
    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    /// `D_k` applied componentwise; `p` is the series `P` to at least the components' order.
    pub fn derivative(&self, p: &QSeries) -> VvmfVector {
        VvmfVector {
            weight: &self.weight + int(2),
            components: self
                .components
                .iter()
                .map(|c| modular_derivative_with(c, &self.weight, p))
                .collect(),
            ..self.clone()
        }
    }

    pub fn derivative_n(&self, n: usize, p: &QSeries) -> VvmfVector {
        let mut v = self.clone();
        for _ in 0..n {
            v = v.derivative(p);
        }
        v
    }

    pub fn times_form(&self, f: &ModularForm) -> VvmfVector {
        VvmfVector {
            weight: &self.weight + int(f.weight),
            components: self.components.iter().map(|c| c.mul(&f.series)).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> VvmfVector {
        VvmfVector {
            components: self.components.iter().map(|s| s.scale(c)).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &VvmfVector) -> Result<VvmfVector> {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(VvmfVector {
            components,
            ..self.clone()
        })
    }

    /// Divides every component by the scalar form `f`, lowering the weight accordingly.
    pub fn divide_by_form(&self, f: &ModularForm) -> Result<VvmfVector> {
        let components = self
            .components
            .iter()
            .map(|c| c.divide_exact(&f.series))
            .collect::<Result<Vec<_>>>()?;
        Ok(VvmfVector {
            weight: &self.weight - int(f.weight),
            components,
            ..self.clone()
        })
    }

    pub fn min_order(&self) -> usize {
        self.components
            .iter()
            .map(QSeries::order)
            .min()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> VectorJson {
        VectorJson {
            weight: fmt_rational(&self.weight),
            components: self.components.iter().map(QSeries::to_json).collect(),
        }
    }
}

/// Wire form of a vector: weight plus component series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    pub weight: String,
    pub components: Vec<SeriesJson>,
}

impl VectorJson {
    pub fn parse(&self) -> Result<(Rational, Vec<QSeries>)> {
        let w = parse_rational(&self.weight)?;
        let comps = self
            .components
            .iter()
            .map(QSeries::from_json)
            .collect::<Result<Vec<_>>>()?;
        if comps.is_empty() {
            return Err(Error::Parse("a vector needs at least one component".into()));
        }
        Ok((w, comps))
    }
}
