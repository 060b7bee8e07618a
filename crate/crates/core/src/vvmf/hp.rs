use serde::Serialize;

use crate::rational::{fmt_rational, Rational};
use crate::vvmf::classify::ClassificationReport;

/// `Σ_k dim H(k) t^k = t^{shift} · numerator(t) / ((1 − t⁴)(1 − t⁶))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPoincare {
    pub shift: Rational,
    /// Coefficients of the numerator, indexed by the power of `t`.
    pub numerator: Vec<u64>,
    /// `expansion[k]` is the coefficient of `t^{shift + 2k}`.
    pub expansion: Vec<u64>,
}

/// Power series of `numerator / Π (1 − t^{d})` through `t^top`.
pub fn series_expansion(numerator: &[u64], denominator_degrees: &[usize], top: usize) -> Vec<u64> {
    let mut c = vec![0u64; top + 1];
    for (i, &a) in numerator.iter().enumerate().take(top + 1) {
        c[i] = a;
    }
    for &d in denominator_degrees {
        for i in d..=top {
            c[i] += c[i - d];
        }
    }
    c
}

pub fn hilbert_poincare(report: &ClassificationReport, expand_to: usize) -> HilbertPoincare {
    let full = series_expansion(&report.hp_numerator, &[4, 6], 2 * expand_to);
    HilbertPoincare {
        shift: report.minimal_weight.clone(),
        numerator: report.hp_numerator.clone(),
        expansion: full.iter().step_by(2).copied().collect(),
    }
}

#[derive(Serialize)]
struct HpJson<'a> {
    shift: String,
    numerator: &'a [u64],
    denominator: &'static str,
    expansion: &'a [u64],
}

impl HilbertPoincare {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(HpJson {
            shift: fmt_rational(&self.shift),
            numerator: &self.numerator,
            denominator: "(1-t^4)(1-t^6)",
            expansion: &self.expansion,
        })
        .expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let terms: Vec<String> = self
            .numerator
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, _) => c.to_string(),
                (_, 1) => format!("t^{i}"),
                _ => format!("{c}t^{i}"),
            })
            .collect();
        format!(
            "t^{} ({}) / ((1-t^4)(1-t^6))\ndims: {}",
            fmt_rational(&self.shift),
            terms.join(" + "),
            self.expansion
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}
