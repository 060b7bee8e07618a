//! Truncated q-expansions `q^λ · Σ a(n) qⁿ` with exact rational coefficients.
//!
//! A series stores its leading exponent `λ` and the coefficients `a(0..=N)`;
//! `N` is the truncation order, so everything beyond `q^{λ+N}` is unknown.
//! Series are kept canonical: either `a(0) ≠ 0` or the series is the zero
//! series, which sits at `λ = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{congruent_mod_one, fmt_rational, int, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    exponent: Rational,
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Builds `q^exponent · Σ coeffs[n] qⁿ` and canonicalizes. `coeffs` must be nonempty.
    pub fn new(exponent: Rational, coeffs: Vec<Rational>) -> QSeries {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one known coefficient"
        );
        let mut s = QSeries { exponent, coeffs };
        s.canonicalize();
        s
    }

    pub fn from_integers(exponent: Rational, coeffs: &[i64]) -> QSeries {
        QSeries::new(exponent, coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Zero series known through `q^order`.
    pub fn zero(order: usize) -> QSeries {
        QSeries {
            exponent: Rational::zero(),
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> QSeries {
        QSeries::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> QSeries {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        QSeries::new(Rational::zero(), coeffs)
    }

    /// `c · q^exponent` known to relative order `order`.
    pub fn monomial(c: Rational, exponent: Rational, order: usize) -> QSeries {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        QSeries::new(exponent, coeffs)
    }

    pub fn leading_exponent(&self) -> &Rational {
        &self.exponent
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest exponent whose coefficient is known.
    pub fn precision(&self) -> Rational {
        &self.exponent + int(self.order() as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn leading_coefficient(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// True when every known coefficient past the leading one vanishes.
    pub fn is_monomial(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn canonicalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.exponent += int(k as i64);
            }
            None => {
                let p = self.precision().floor();
                let order = if p.is_negative() {
                    0
                } else {
                    usize::try_from(p.to_integer()).unwrap_or(0)
                };
                *self = QSeries::zero(order);
            }
        }
    }

    /// Coefficient of `q^e`. Zero below the leading exponent.
    pub fn coeff_at(&self, e: &Rational) -> Result<Rational> {
        if e > &self.precision() {
            return Err(Error::InsufficientTruncation {
                needed: fmt_rational(e),
                known: fmt_rational(&self.precision()),
            });
        }
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let offset = e - &self.exponent;
        if !offset.is_integer() {
            return Err(Error::IncompatibleBranch(
                fmt_rational(e),
                fmt_rational(&self.exponent),
            ));
        }
        if offset.is_negative() {
            return Ok(Rational::zero());
        }
        let i: usize = offset.to_integer().try_into().expect("offset fits");
        Ok(self.coeffs[i].clone())
    }

    /// Keeps coefficients up to relative order `order`.
    pub fn truncate(&self, order: usize) -> QSeries {
        if order >= self.order() {
            return self.clone();
        }
        QSeries::new(self.exponent.clone(), self.coeffs[..=order].to_vec())
    }

    /// Keeps coefficients of exponents `≤ p`.
    pub fn truncate_to_precision(&self, p: &Rational) -> QSeries {
        if p >= &self.precision() {
            return self.clone();
        }
        if self.is_zero() || p < &self.exponent {
            let f = p.floor();
            let order = if f.is_negative() {
                0
            } else {
                usize::try_from(f.to_integer()).unwrap_or(0)
            };
            return QSeries::zero(order);
        }
        let keep: usize = (p - &self.exponent)
            .floor()
            .to_integer()
            .try_into()
            .expect("fits");
        self.truncate(keep)
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            exponent: self.exponent.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries::new(
            self.exponent.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: &Rational) -> QSeries {
        if self.is_zero() {
            return self.clone();
        }
        QSeries {
            exponent: &self.exponent + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        if self.is_zero() {
            return Ok(other.truncate_to_precision(&self.precision()));
        }
        if other.is_zero() {
            return Ok(self.truncate_to_precision(&other.precision()));
        }
        if !congruent_mod_one(&self.exponent, &other.exponent) {
            return Err(Error::IncompatibleBranch(
                fmt_rational(&self.exponent),
                fmt_rational(&other.exponent),
            ));
        }
        let base = if self.exponent <= other.exponent {
            self.exponent.clone()
        } else {
            other.exponent.clone()
        };
        let prec = std::cmp::min(self.precision(), other.precision());
        let order: usize = (&prec - &base)
            .to_integer()
            .try_into()
            .expect("nonnegative");
        let mut coeffs = vec![Rational::zero(); order + 1];
        for s in [self, other] {
            let off: usize = (&s.exponent - &base)
                .to_integer()
                .try_into()
                .expect("nonnegative");
            for (i, c) in s.coeffs.iter().enumerate() {
                if off + i > order {
                    break;
                }
                coeffs[off + i] += c;
            }
        }
        Ok(QSeries::new(base, coeffs))
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries> {
        self.add(&other.neg())
    }

    /// Cauchy product; the truncation order is the smaller of the two.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let (da, a) = integral_numerators(&self.coeffs[..=order]);
        let (db, b) = integral_numerators(&other.coeffs[..=order]);
        let den = da * db;
        let mut acc = vec![BigInt::zero(); order + 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(order + 1 - i) {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        let coeffs = acc
            .into_iter()
            .map(|n| Rational::new(n, den.clone()))
            .collect();
        QSeries::new(&self.exponent + &other.exponent, coeffs)
    }

    /// `f^c` for a series with leading coefficient 1; the leading exponent becomes `c·λ`.
    pub fn pow_rational(&self, c: &Rational) -> Result<QSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitLeadingCoefficient(fmt_rational(
                &self.coeffs[0],
            )));
        }
        let n = self.order();
        let a = &self.coeffs;
        let mut g = vec![Rational::zero(); n + 1];
        g[0] = Rational::one();
        // n·g(n) = Σ_{j=1}^{n} ((c+1)·j − n)·a(j)·g(n−j)
        let c1 = c + Rational::one();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=m {
                if a[j].is_zero() {
                    continue;
                }
                let w = &c1 * int(j as i64) - int(m as i64);
                acc += w * &a[j] * &g[m - j];
            }
            g[m] = acc / int(m as i64);
        }
        Ok(QSeries::new(c * &self.exponent, g))
    }

    /// `q d/dq`: the coefficient of `q^{λ+n}` becomes `(λ+n)·a(n)`.
    pub fn q_derivative(&self) -> QSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| a * (&self.exponent + int(n as i64)))
            .collect();
        QSeries::new(self.exponent.clone(), coeffs)
    }

    /// Ordinary `d/dq`.
    pub fn derivative(&self) -> QSeries {
        if self.is_zero() {
            let order = self.order().saturating_sub(1);
            return QSeries::zero(order);
        }
        self.q_derivative().shift(&-Rational::one())
    }

    /// Multiplicative inverse of a series with nonzero leading coefficient.
    pub fn inverse(&self) -> Result<QSeries> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroSeries);
        }
        let n = self.order();
        let a0_inv = self.coeffs[0].recip();
        let mut b = vec![Rational::zero(); n + 1];
        b[0] = a0_inv.clone();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &b[m - j];
                }
            }
            b[m] = -acc * &a0_inv;
        }
        Ok(QSeries::new(-&self.exponent, b))
    }

    pub fn divide_exact(&self, other: &QSeries) -> Result<QSeries> {
        Ok(self.mul(&other.inverse()?))
    }

    /// The two series agree on every coefficient both of them know.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        match self.sub(other) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }

    /// Coefficients of `q^{base+s}` for `s` in `0..depth`.
    pub fn window(&self, base: &Rational, depth: usize) -> Result<Vec<Rational>> {
        (0..depth)
            .map(|s| self.coeff_at(&(base + int(s as i64))))
            .collect()
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            leading_exponent: fmt_rational(&self.exponent),
            coefficients: self.coeffs.iter().map(fmt_rational).collect(),
            order: self.order(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<QSeries> {
        if j.coefficients.len() != j.order + 1 {
            return Err(Error::Parse(format!(
                "order {} needs {} coefficients, got {}",
                j.order,
                j.order + 1,
                j.coefficients.len()
            )));
        }
        let exponent = parse_rational(&j.leading_exponent)?;
        let coeffs = j
            .coefficients
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries::new(exponent, coeffs))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<QSeries> {
        let j: SeriesJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        QSeries::from_json(&j)
    }

    /// `q^{λ}·(a0 + a1 q + …) + O(q^{λ+N+1})`.
    pub fn to_text(&self) -> String {
        let mut body = String::new();
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            let sign = if a.is_negative() { "-" } else { "+" };
            if body.is_empty() {
                if a.is_negative() {
                    body.push('-');
                }
            } else {
                body.push_str(&format!(" {sign} "));
            }
            let var = match n {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{n}"),
            };
            if n == 0 || !mag.is_one() {
                body.push_str(&fmt_rational(&mag));
                if !var.is_empty() {
                    body.push(' ');
                }
            }
            body.push_str(&var);
        }
        if body.is_empty() {
            body.push('0');
        }
        let big_o = format!(
            "O(q^{{{}}})",
            fmt_rational(&(self.precision() + Rational::one()))
        );
        if self.exponent.is_zero() {
            format!("{body} + {big_o}")
        } else {
            format!("q^{{{}}}·({body}) + {big_o}", fmt_rational(&self.exponent))
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Wire form of a series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub leading_exponent: String,
    pub coefficients: Vec<String>,
    pub order: usize,
}

/// Rank of the coefficient matrix built from `vectors`, each a list of
/// component series. Column `j` is read from a common base exponent (the
/// smallest leading exponent in that column) over `probe_depth` terms.
pub fn rank_of_span(vectors: &[Vec<QSeries>], probe_depth: usize) -> Result<usize> {
    let rows = coefficient_rows(vectors, probe_depth)?;
    Ok(crate::linalg::rank(rows))
}

pub(crate) fn coefficient_rows(
    vectors: &[Vec<QSeries>],
    probe_depth: usize,
) -> Result<Vec<Vec<Rational>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let width = vectors[0].len();
    let mut bases = Vec::with_capacity(width);
    for j in 0..width {
        let mut base: Option<Rational> = None;
        for v in vectors {
            let s = &v[j];
            if s.is_zero() {
                continue;
            }
            match &base {
                None => base = Some(s.leading_exponent().clone()),
                Some(b) => {
                    if !congruent_mod_one(b, s.leading_exponent()) {
                        return Err(Error::IncompatibleBranch(
                            fmt_rational(b),
                            fmt_rational(s.leading_exponent()),
                        ));
                    }
                    if s.leading_exponent() < b {
                        base = Some(s.leading_exponent().clone());
                    }
                }
            }
        }
        bases.push(base);
    }
    let mut rows = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut row = Vec::with_capacity(width * probe_depth);
        for (j, s) in v.iter().enumerate() {
            match &bases[j] {
                None => {
                    let top = int(probe_depth as i64 - 1);
                    if s.precision() < top {
                        return Err(Error::InsufficientTruncation {
                            needed: fmt_rational(&top),
                            known: fmt_rational(&s.precision()),
                        });
                    }
                    row.extend(std::iter::repeat(Rational::zero()).take(probe_depth));
                }
                Some(b) => row.extend(s.window(b, probe_depth)?),
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Common denominator and the integer numerators over it.
fn integral_numerators(c: &[Rational]) -> (BigInt, Vec<BigInt>) {
    let den = c.iter().fold(BigInt::one(), |d, x| d.lcm(x.denom()));
    let nums = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (den, nums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn s(e: Rational, c: &[i64]) -> QSeries {
        QSeries::from_integers(e, c)
    }

    #[test]
    fn add_on_same_branch() {
        let x = s(rat(1, 24), &[1, -1, -1]);
        let y = s(rat(1, 24), &[1, 1, 0]);
        assert_eq!(x.add(&y).unwrap(), s(rat(1, 24), &[2, 0, -1]));
    }

    #[test]
    fn add_rejects_mismatched_branch() {
        let x = s(int(0), &[1, 1]);
        let y = s(rat(1, 2), &[1]);
        assert!(matches!(x.add(&y), Err(Error::IncompatibleBranch(..))));
    }

    #[test]
    fn adding_zero_is_identity() {
        let x = s(rat(1, 3), &[2, 0, 5]);
        assert_eq!(x.add(&QSeries::zero(10)).unwrap(), x);
        assert_eq!(QSeries::zero(10).add(&x).unwrap(), x);
    }

    #[test]
    fn cancellation_shifts_leading_exponent() {
        let x = s(int(0), &[1, 2, 3]);
        let y = s(int(0), &[1, 0, 0]);
        let d = x.sub(&y).unwrap();
        assert_eq!(d.leading_exponent(), &int(1));
        assert_eq!(d.coefficients(), &[int(2), int(3)]);
        let z = x.sub(&x).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.leading_exponent(), &int(0));
        assert_eq!(z.order(), 2);
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let x = s(int(0), &[1, 1]);
        let y = s(int(0), &[1, -1, 0, 0]);
        let p = x.mul(&y);
        assert_eq!(p.order(), 1);
        assert_eq!(p.coefficients(), &[int(1), int(0)]);
    }

    #[test]
    fn square_root_of_one_minus_q() {
        let x = s(int(0), &[1, -1, 0, 0]);
        let r = x.pow_rational(&rat(1, 2)).unwrap();
        assert_eq!(
            r.coefficients(),
            &[int(1), rat(-1, 2), rat(-1, 8), rat(-1, 16)]
        );
    }

    #[test]
    fn power_needs_unit_leading_coefficient() {
        let x = s(int(0), &[2, 1]);
        assert!(matches!(
            x.pow_rational(&rat(1, 2)),
            Err(Error::NonUnitLeadingCoefficient(_))
        ));
    }

    #[test]
    fn q_derivative_of_eta_like_series() {
        let x = s(rat(1, 24), &[1, -1, -1]);
        let d = x.q_derivative();
        assert_eq!(d.coefficients(), &[rat(1, 24), rat(-25, 24), rat(-49, 24)]);
    }

    #[test]
    fn divide_by_zero_series() {
        let x = s(int(0), &[1, 1]);
        assert_eq!(
            x.divide_exact(&QSeries::zero(3)),
            Err(Error::DivisionByZeroSeries)
        );
    }

    #[test]
    fn text_form() {
        let x = s(rat(1, 24), &[1, -1, -1]);
        assert_eq!(x.to_text(), "q^{1/24}·(1 - q - q^2) + O(q^{73/24})");
        let y = s(int(0), &[1, 240, 2160]);
        assert_eq!(y.to_text(), "1 + 240 q + 2160 q^2 + O(q^{3})");
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let x = QSeries::new(rat(-5, 12), vec![rat(3, 4), int(0), rat(-7, 2)]);
        let j = x.to_json_string();
        assert_eq!(
            j,
            r#"{"leading_exponent":"-5/12","coefficients":["3/4","0","-7/2"],"order":2}"#
        );
        let back = QSeries::from_json_str(&j).unwrap();
        assert_eq!(back, x);
        assert_eq!(back.to_json_string(), j);
    }

    #[test]
    fn json_rejects_wrong_length() {
        let bad = r#"{"leading_exponent":"0","coefficients":["1"],"order":2}"#;
        assert!(matches!(QSeries::from_json_str(bad), Err(Error::Parse(_))));
    }

    #[test]
    fn rank_needs_enough_terms() {
        let x = s(int(0), &[1, 2]);
        assert!(matches!(
            rank_of_span(&[vec![x]], 5),
            Err(Error::InsufficientTruncation { .. })
        ));
    }

    #[test]
    fn rank_of_dependent_vectors() {
        let a = vec![s(int(0), &[1, 2, 3]), s(rat(1, 2), &[1, 0, 0])];
        let b = vec![s(int(0), &[2, 4, 6]), s(rat(1, 2), &[2, 0, 0])];
        let c = vec![s(int(1), &[1, 0]), s(rat(1, 2), &[0, 0, 0])];
        assert_eq!(rank_of_span(&[a.clone(), b], 2).unwrap(), 1);
        assert_eq!(rank_of_span(&[a, c], 2).unwrap(), 2);
    }

    #[test]
    fn branch_offset_addition() {
        let x = s(rat(1, 2), &[1, 1]);
        let y = s(rat(3, 2), &[1]);
        assert_eq!(x.add(&y).unwrap(), s(rat(1, 2), &[1, 2]));
        assert!(s(int(0), &[1, -1])
            .add(&s(int(0), &[-1, 1]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn products_and_units() {
        let x = s(rat(1, 24), &[1, -1, 0]);
        assert_eq!(x.mul(&x), s(rat(1, 12), &[1, -2, 1]));
        assert_eq!(x.mul(&QSeries::one(5)), x);
        let short = crate::modforms::eta_power(&int(1), 3);
        let long = crate::modforms::eta_power(&int(1), 5);
        assert_eq!(short.mul(&long).order(), 3);
    }

    #[test]
    fn powers() {
        let x = s(int(0), &[1, -1, 0, 0]);
        assert_eq!(x.pow_rational(&int(1)).unwrap(), x);
        assert_eq!(x.pow_rational(&int(-1)).unwrap(), s(int(0), &[1, 1, 1, 1]));
    }

    #[test]
    fn q_derivative_examples() {
        let m = QSeries::monomial(int(1), rat(1, 12), 3);
        assert_eq!(
            m.q_derivative(),
            QSeries::monomial(rat(1, 12), rat(1, 12), 3)
        );
        assert!(QSeries::one(4).q_derivative().is_zero());
        assert_eq!(s(int(1), &[1, 3]).q_derivative(), s(int(1), &[1, 6]));
    }

    #[test]
    fn exact_division() {
        let num = s(int(2), &[1, -1, 0, 0]);
        let den = s(int(1), &[1, -1, 0, 0]);
        assert_eq!(num.divide_exact(&den).unwrap(), s(int(1), &[1, 0, 0, 0]));
        let x = s(rat(1, 3), &[2, 5, -1]);
        assert_eq!(x.divide_exact(&x).unwrap(), QSeries::one(2));
        let d = crate::modforms::delta(12).series;
        let eta24 = crate::modforms::eta_power(&int(24), 12);
        assert_eq!(d.divide_exact(&eta24).unwrap(), QSeries::one(12));
    }

    #[test]
    fn rank_examples() {
        let one = s(int(0), &[1, 0, 0]);
        let q = s(int(1), &[1, 0]);
        assert_eq!(rank_of_span(&[vec![one], vec![q]], 2).unwrap(), 2);
        let x = s(rat(1, 5), &[1, 3, 2]);
        assert_eq!(
            rank_of_span(&[vec![x.clone()], vec![x.scale(&int(2))]], 2).unwrap(),
            1
        );
    }

    fn arb_series() -> impl Strategy<Value = QSeries> {
        (
            -3i64..4,
            1i64..5,
            prop::collection::vec((-9i64..10, 1i64..4), 1..8),
        )
            .prop_map(|(p, q, cs)| {
                QSeries::new(rat(p, q), cs.into_iter().map(|(a, b)| rat(a, b)).collect())
            })
    }

    fn arb_pair() -> impl Strategy<Value = (QSeries, QSeries)> {
        (
            arb_series(),
            prop::collection::vec((-9i64..10, 1i64..4), 1..8),
            0i64..3,
        )
            .prop_map(|(x, cs, k)| {
                let e = x.leading_exponent() + int(k);
                let y = QSeries::new(e, cs.into_iter().map(|(a, b)| rat(a, b)).collect());
                (x, y)
            })
    }

    proptest! {
        #[test]
        fn canonical_form_holds((x, y) in arb_pair()) {
            for z in [x.add(&y).unwrap(), x.mul(&y), x.q_derivative()] {
                prop_assert!(!z.coefficients()[0].is_zero() || (z.is_zero() && z.leading_exponent().is_zero()));
                prop_assert_eq!(z.coefficients().len(), z.order() + 1);
            }
        }

        #[test]
        fn addition_commutes((x, y) in arb_pair()) {
            prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        }

        #[test]
        fn multiplication_commutes((x, y) in arb_pair()) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn q_derivative_is_a_derivation((x, y) in arb_pair()) {
            let lhs = x.mul(&y).q_derivative();
            let rhs = x.q_derivative().mul(&y).add(&x.mul(&y.q_derivative())).unwrap();
            prop_assert!(lhs.agrees_with(&rhs));
        }

        #[test]
        fn division_undoes_multiplication((x, y) in arb_pair()) {
            if !y.is_zero() {
                let back = x.mul(&y).divide_exact(&y).unwrap();
                prop_assert!(back.agrees_with(&x));
            }
        }

        #[test]
        fn powers_add(x in arb_series(), a in -4i64..5, b in -4i64..5, d in 1i64..4) {
            prop_assume!(!x.is_zero());
            let u = x.scale(&x.leading_coefficient().recip());
            let (pa, pb) = (rat(a, d), rat(b, d));
            let lhs = u.pow_rational(&(&pa + &pb)).unwrap();
            let rhs = u.pow_rational(&pa).unwrap().mul(&u.pow_rational(&pb).unwrap());
            prop_assert!(lhs.agrees_with(&rhs));
        }

        #[test]
        fn json_round_trips(x in arb_series()) {
            let j = x.to_json_string();
            let back = QSeries::from_json_str(&j).unwrap();
            prop_assert_eq!(back.to_json_string(), j);
        }
    }
}
