use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modforms::dim_mk;
use crate::rational::{div_floor, fmt_rational, frac, int, is_integer, mod_floor, Rational};

/// The two four-dimensional classes, told apart by the user.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepClass {
    Rho0,
    Rho1,
}

impl FromStr for RepClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<RepClass> {
        match s {
            "rho0" => Ok(RepClass::Rho0),
            "rho1" => Ok(RepClass::Rho1),
            _ => Err(Error::Parse(format!(
                "unknown class '{s}', expected rho0 or rho1"
            ))),
        }
    }
}

impl fmt::Display for RepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepClass::Rho0 => "rho0",
            RepClass::Rho1 => "rho1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    One,
    Two,
    Three,
    FourRho0,
    FourRho1,
    /// Dimension five, with the residue `N ∈ 0..5`.
    Five(u8),
}

/// Checked representation data: sorted exponents of `ρ(T)` and the cusp parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepData {
    pub dimension: usize,
    pub exponents: Vec<Rational>,
    pub cusp_parameter: Rational,
    /// Proper sub-products of eigenvalues that are 12th roots of unity.
    pub warnings: Vec<String>,
}

pub fn validate_rep(d: usize, exponents: &[Rational], m: &Rational) -> Result<RepData> {
    if !(1..=5).contains(&d) || exponents.len() != d {
        return Err(Error::UnsupportedDimension(if exponents.len() != d {
            exponents.len()
        } else {
            d
        }));
    }
    for r in exponents {
        if r < &Rational::zero() || r >= &Rational::one() {
            return Err(Error::ExponentOutOfRange(fmt_rational(r)));
        }
    }
    if m < &Rational::zero() || m >= &int(12) {
        return Err(Error::CuspParameterOutOfRange(fmt_rational(m)));
    }
    let mut sorted = exponents.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateExponents(fmt_rational(&w[0])));
        }
    }
    let sum: Rational = sorted.iter().fold(Rational::zero(), |a, b| a + b);
    let twelve_sum = int(12) * &sum;
    if !is_integer(&twelve_sum) {
        return Err(Error::NotTUnitarizableData(fmt_rational(&sum)));
    }
    if d <= 4 && !is_integer(&(&twelve_sum / int(d as i64))) {
        return Err(Error::DivisibilityViolation {
            d,
            sum: fmt_rational(&sum),
        });
    }
    let mut warnings = Vec::new();
    for mask in 1usize..(1 << d) - 1 {
        let s: Rational = (0..d)
            .filter(|i| mask & (1 << i) != 0)
            .fold(Rational::zero(), |a, i| a + &sorted[i]);
        if is_integer(&(int(12) * s)) {
            let picked: Vec<String> = (0..d)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| fmt_rational(&sorted[i]))
                .collect();
            warnings.push(format!(
                "e(r) over {{{}}} multiplies to a 12th root of unity; T-determinedness is not guaranteed",
                picked.join(", ")
            ));
        }
    }
    Ok(RepData {
        dimension: d,
        exponents: sorted,
        cusp_parameter: m.clone(),
        warnings,
    })
}

/// `λ_j = frac(r_j + m/12)` and their sum.
pub fn minimal_admissible(exponents: &[Rational], m: &Rational) -> (Vec<Rational>, Rational) {
    let shift = m / int(12);
    let lambdas: Vec<Rational> = exponents.iter().map(|r| frac(&(r + &shift))).collect();
    let total = lambdas.iter().fold(Rational::zero(), |a, b| a + b);
    (lambdas, total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecipeEntry {
    pub label: String,
    /// Weight minus the minimal weight.
    pub weight_offset: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub dimension: usize,
    pub rep_exponents: Vec<Rational>,
    pub cusp_parameter: Rational,
    pub class: Option<RepClass>,
    pub case: Case,
    /// Minimal admissible exponents, in the order of `rep_exponents`.
    pub lambdas: Vec<Rational>,
    pub lambda0: Rational,
    pub residue_n: Option<u8>,
    /// `k_N = 12(λ0+N)/5 − 4` in dimension five.
    pub k_n: Option<Rational>,
    pub minimal_weight: Rational,
    pub basis_recipe: Vec<RecipeEntry>,
    pub dimension_function: String,
    pub hp_numerator: Vec<u64>,
    pub cyclic: bool,
    pub warnings: Vec<String>,
}

fn recipe(entries: &[(&str, u32)]) -> Vec<RecipeEntry> {
    entries
        .iter()
        .map(|&(l, o)| RecipeEntry {
            label: l.to_string(),
            weight_offset: o,
        })
        .collect()
}

pub fn classify(
    d: usize,
    exponents: &[Rational],
    m: &Rational,
    class: Option<RepClass>,
) -> Result<ClassificationReport> {
    let rep = validate_rep(d, exponents, m)?;
    let (lambdas, lambda0) = minimal_admissible(&rep.exponents, m);
    debug_assert!(is_integer(&(int(12) * &lambda0 - m * int(d as i64))));
    let dd = int(d as i64);
    let generic_k0 = int(12) * &lambda0 / &dd + int(1) - &dd;
    let mut residue_n = None;
    let mut k_n = None;
    let (case, minimal_weight, basis, dimension_function, cyclic) = match d {
        1 => (
            Case::One,
            int(12) * &lambda0,
            recipe(&[("eta^(2k0)", 0)]),
            "dim M_(2k)".to_string(),
            true,
        ),
        2 => (
            Case::Two,
            generic_k0,
            recipe(&[("F0", 0), ("DF0", 2)]),
            "floor(k/3)+1".to_string(),
            true,
        ),
        3 => (
            Case::Three,
            generic_k0,
            recipe(&[("F0", 0), ("DF0", 2), ("D^2F0", 4)]),
            "floor(k/2)+1".to_string(),
            true,
        ),
        4 => match class.ok_or(Error::MissingClass)? {
            RepClass::Rho0 => (
                Case::FourRho0,
                generic_k0,
                recipe(&[("F0", 0), ("DF0", 2), ("D^2F0", 4), ("D^3F0", 6)]),
                "floor(2k/3)+1".to_string(),
                true,
            ),
            RepClass::Rho1 => (
                Case::FourRho1,
                generic_k0 + int(1),
                recipe(&[("G", 0), ("DG", 2), ("F1", 2), ("D^2G", 4)]),
                "floor((2k+1)/3)+1".to_string(),
                false,
            ),
        },
        _ => {
            let n = (0u8..5)
                .find(|&n| {
                    is_integer(&(int(12) * (&lambda0 + int(n as i64)) / int(5) - int(4) - m))
                })
                .expect("12·λ0 is an integer, so some residue works");
            let kn = int(12) * (&lambda0 + int(n as i64)) / int(5) - int(4);
            residue_n = Some(n);
            k_n = Some(kn.clone());
            let tail = |n: u8| {
                let var = match [0, 0, 2, 3, 4][n as usize] {
                    0 => "k".to_string(),
                    s => format!("(k-{s})"),
                };
                format!("floor(5{var}/6)+{} ({} if {var} = 5 mod 6)", n + 1, n)
            };
            let (min_w, entries, cyc): (Rational, Vec<RecipeEntry>, bool) = match n {
                0 => (
                    kn,
                    recipe(&[
                        ("F0", 0),
                        ("DF0", 2),
                        ("D^2F0", 4),
                        ("D^3F0", 6),
                        ("D^4F0", 8),
                    ]),
                    true,
                ),
                1 => (
                    kn,
                    recipe(&[("F1", 0), ("G", 0), ("DF1", 2), ("DG", 2), ("D^2F1", 4)]),
                    false,
                ),
                2 => (
                    kn - int(4),
                    recipe(&[("G", 0), ("DG", 2), ("D^2G", 4), ("D^3G", 6), ("F2", 4)]),
                    false,
                ),
                3 => (
                    kn - int(6),
                    recipe(&[("G1", 0), ("DG1", 2), ("G2", 2), ("D^2G1", 4), ("D^3G1", 6)]),
                    false,
                ),
                _ => (
                    kn - int(8),
                    recipe(&[("G1", 0), ("DG1", 2), ("G2", 2), ("DG2", 4), ("G3", 4)]),
                    false,
                ),
            };
            (Case::Five(n), min_w, entries, tail(n), cyc)
        }
    };
    let top = basis.iter().map(|e| e.weight_offset).max().unwrap_or(0) as usize;
    let mut hp_numerator = vec![0u64; top + 1];
    for e in &basis {
        hp_numerator[e.weight_offset as usize] += 1;
    }
    Ok(ClassificationReport {
        dimension: d,
        rep_exponents: rep.exponents,
        cusp_parameter: m.clone(),
        class: if d == 4 { class } else { None },
        case,
        lambdas,
        lambda0,
        residue_n,
        k_n,
        minimal_weight,
        basis_recipe: basis,
        dimension_function,
        hp_numerator,
        cyclic,
        warnings: rep.warnings,
    })
}

/// `dim H(k_min + 2k)` from the closed forms; zero below the minimal weight.
pub fn graded_dimension(report: &ClassificationReport, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let v = match report.case {
        Case::One => dim_mk(2 * k) as i64,
        Case::Two => div_floor(k, 3) + 1,
        Case::Three => div_floor(k, 2) + 1,
        Case::FourRho0 => div_floor(2 * k, 3) + 1,
        Case::FourRho1 => div_floor(2 * k + 1, 3) + 1,
        Case::Five(n) => {
            let shift = [0, 0, 2, 3, 4][n as usize];
            let kk = k - shift;
            let bump = if mod_floor(kk, 6) == 5 { 0 } else { 1 };
            div_floor(5 * kk, 6) + n as i64 + bump
        }
    };
    usize::try_from(v.max(0)).expect("nonnegative")
}

impl ClassificationReport {
    /// Absolute weight of a recipe entry.
    pub fn weight_of(&self, entry: &RecipeEntry) -> Rational {
        &self.minimal_weight + int(entry.weight_offset as i64)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strs = |v: &[Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>();
        serde_json::json!({
            "dimension": self.dimension,
            "rep_exponents": strs(&self.rep_exponents),
            "cusp_parameter": fmt_rational(&self.cusp_parameter),
            "class": self.class,
            "lambdas": strs(&self.lambdas),
            "lambda0": fmt_rational(&self.lambda0),
            "residue_n": self.residue_n,
            "k_n": self.k_n.as_ref().map(fmt_rational),
            "minimal_weight": fmt_rational(&self.minimal_weight),
            "basis_recipe": self.basis_recipe.iter().map(|e| serde_json::json!({
                "label": e.label,
                "weight": fmt_rational(&self.weight_of(e)),
            })).collect::<Vec<_>>(),
            "dimension_function": self.dimension_function,
            "hp_numerator": self.hp_numerator,
            "hp_shift": fmt_rational(&self.minimal_weight),
            "cyclic_over_r": self.cyclic,
            "warnings": self.warnings,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("dimension        {}\n", self.dimension));
        out.push_str(&format!(
            "exponents        {}\n",
            self.lambdas
                .iter()
                .map(fmt_rational)
                .collect::<Vec<_>>()
                .join(", ")
        ));
        if let Some(n) = self.residue_n {
            out.push_str(&format!("residue N        {n}\n"));
        }
        out.push_str(&format!(
            "minimal weight   {}\n",
            fmt_rational(&self.minimal_weight)
        ));
        let labels: Vec<String> = self
            .basis_recipe
            .iter()
            .map(|e| format!("{} ({})", e.label, fmt_rational(&self.weight_of(e))))
            .collect();
        out.push_str(&format!("basis            {}\n", labels.join(", ")));
        out.push_str(&format!("dim H(k0+2k)     {}\n", self.dimension_function));
        out.push_str(&format!("cyclic over R    {}\n", self.cyclic));
        for w in &self.warnings {
            out.push_str(&format!("warning          {w}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn validation_errors() {
        assert!(matches!(
            validate_rep(2, &[rat(1, 7), rat(2, 7)], &int(0)),
            Err(Error::NotTUnitarizableData(_))
        ));
        assert!(matches!(
            validate_rep(3, &[int(0), rat(1, 3), rat(1, 2)], &int(0)),
            Err(Error::DivisibilityViolation { d: 3, .. })
        ));
        assert!(matches!(
            validate_rep(2, &[rat(1, 4), rat(1, 4)], &int(0)),
            Err(Error::DuplicateExponents(_))
        ));
        assert!(matches!(
            validate_rep(2, &[rat(1, 4), int(1)], &int(0)),
            Err(Error::ExponentOutOfRange(_))
        ));
        assert!(matches!(
            validate_rep(6, &vec![int(0); 6], &int(0)),
            Err(Error::UnsupportedDimension(6))
        ));
        assert!(validate_rep(2, &[rat(1, 12), rat(5, 12)], &int(0)).is_ok());
    }

    #[test]
    fn two_dimensional_example() {
        let r = classify(2, &[rat(1, 12), rat(5, 12)], &int(0), None).unwrap();
        assert_eq!(r.minimal_weight, int(2));
        assert_eq!(r.hp_numerator, vec![1, 0, 1]);
        let dims: Vec<usize> = (0..4).map(|k| graded_dimension(&r, k)).collect();
        assert_eq!(dims, vec![1, 1, 1, 2]);
    }

    #[test]
    fn minimal_exponents_wrap() {
        let (l, s) = minimal_admissible(&[rat(1, 12), rat(5, 12)], &int(6));
        assert_eq!(l, vec![rat(7, 12), rat(11, 12)]);
        assert_eq!(s, rat(3, 2));
        let (l, _) = minimal_admissible(&[rat(3, 4)], &int(6));
        assert_eq!(l, vec![rat(1, 4)]);
    }

    #[test]
    fn four_needs_class() {
        let r = [rat(1, 15), rat(2, 15), rat(2, 5), rat(11, 15)];
        assert_eq!(classify(4, &r, &int(0), None), Err(Error::MissingClass));
        let r0 = classify(4, &r, &int(0), Some(RepClass::Rho0)).unwrap();
        let r1 = classify(4, &r, &int(0), Some(RepClass::Rho1)).unwrap();
        assert_eq!(&r1.minimal_weight - &r0.minimal_weight, int(1));
        assert_eq!(r1.hp_numerator, vec![1, 0, 2, 0, 1]);
    }

    #[test]
    fn five_dimensional_residues() {
        let sets: [(&[i64], u8); 5] = [
            (&[1, 11, 16, 21, 26], 0),
            (&[1, 6, 16, 21, 26], 1),
            (&[1, 6, 11, 21, 26], 2),
            (&[1, 6, 11, 16, 26], 3),
            (&[6, 11, 16, 21, 26], 4),
        ];
        for (a, n) in sets {
            let r: Vec<Rational> = a.iter().map(|&x| rat(x, 30)).collect();
            let rep = classify(5, &r, &int(0), None).unwrap();
            assert_eq!(rep.residue_n, Some(n));
            assert!(rep.warnings.is_empty());
            assert_eq!(rep.hp_numerator.iter().sum::<u64>(), 5);
        }
    }

    #[test]
    fn five_dimensional_numerators() {
        let r: Vec<Rational> = [1, 6, 11, 21, 26].iter().map(|&x| rat(x, 30)).collect();
        let rep = classify(5, &r, &int(0), None).unwrap();
        assert_eq!(rep.hp_numerator, vec![1, 0, 1, 0, 2, 0, 1]);
        // support starts at the minimal weight
        assert_eq!(graded_dimension(&rep, 0), 1);
        assert_eq!(graded_dimension(&rep, 1), 1);
        assert_eq!(graded_dimension(&rep, 2), 3);
    }

    #[test]
    fn dimension_formula_branches() {
        let (l, s) = minimal_admissible(&[int(0)], &int(0));
        assert_eq!((l, s), (vec![int(0)], int(0)));
        let three = classify(3, &[rat(1, 7), rat(2, 7), rat(4, 7)], &int(0), None).unwrap();
        assert_eq!(graded_dimension(&three, 5), 3);
        assert_eq!(graded_dimension(&three, -1), 0);
        let thirtieths = |a: &[i64]| a.iter().map(|&x| rat(x, 30)).collect::<Vec<_>>();
        let n0 = classify(5, &thirtieths(&[1, 11, 16, 21, 26]), &int(0), None).unwrap();
        assert_eq!(graded_dimension(&n0, 5), 4);
        assert_eq!(graded_dimension(&n0, -3), 0);
        let n2 = classify(5, &thirtieths(&[1, 6, 11, 21, 26]), &int(0), None).unwrap();
        assert_eq!(n2.minimal_weight, n2.k_n.clone().unwrap() - int(4));
        let n4 = classify(5, &thirtieths(&[6, 11, 16, 21, 26]), &int(0), None).unwrap();
        assert_eq!(n4.hp_numerator, vec![1, 0, 2, 0, 2]);
        assert_eq!(n4.minimal_weight, n4.k_n.clone().unwrap() - int(8));
    }

    #[test]
    fn sub_products_warn() {
        let rep = validate_rep(2, &[rat(1, 12), rat(5, 12)], &int(0)).unwrap();
        assert_eq!(rep.warnings.len(), 2);
    }
}
