use num_traits::Zero;

use crate::error::{Error, Result};
use crate::modforms::{eta_power, modular_derivative_with, p_series};
use crate::qseries::QSeries;
use crate::rational::{int, Rational};

/// Determinant of a square matrix of series, expanded along columns with
/// memoized minors.
pub fn series_determinant(m: &[Vec<QSeries>]) -> Result<QSeries> {
    let d = m.len();
    let top = m.iter().flatten().map(QSeries::order).max().unwrap_or(0);
    let mut minors: Vec<Option<QSeries>> = vec![None; 1 << d];
    minors[0] = Some(QSeries::one(top));
    for mask in 1usize..(1 << d) {
        let col = mask.count_ones() as usize - 1;
        let mut acc: Option<QSeries> = None;
        let mut pos = 0;
        for i in 0..d {
            if mask & (1 << i) == 0 {
                continue;
            }
            let rest = minors[mask ^ (1 << i)].as_ref().expect("smaller minor");
            let mut term = m[i][col].mul(rest);
            if (pos + col) % 2 == 1 {
                term = term.neg();
            }
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
            pos += 1;
        }
        minors[mask] = acc;
    }
    Ok(minors[(1 << d) - 1].take().expect("full minor"))
}

/// `det(F, D F, …, D^{d−1} F)` with the derivative tracking the weight.
/// The result is truncated to the input order minus `d − 1`.
pub fn modular_wronskian(f: &[QSeries], k: &Rational) -> Result<QSeries> {
    let d = f.len();
    let order = f.iter().map(QSeries::order).min().unwrap_or(0);
    let p = p_series(order);
    let mut columns = vec![f.to_vec()];
    for j in 1..d {
        let w = k + int(2 * (j as i64 - 1));
        let next: Vec<QSeries> = columns[j - 1]
            .iter()
            .map(|c| modular_derivative_with(c, &w, &p))
            .collect();
        columns.push(next);
    }
    let matrix: Vec<Vec<QSeries>> = (0..d)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    let w = series_determinant(&matrix)?;
    let keep = order.saturating_sub(d - 1);
    Ok(w.truncate_to_precision(&(w.leading_exponent() + int(keep as i64))))
}

/// Outcome of dividing a Wronskian by `η^{24λ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaTest {
    /// Sum of the leading exponents.
    pub lambda: Rational,
    pub wronskian: QSeries,
    /// `W / η^{24λ}`.
    pub quotient: QSeries,
    /// Weight of the quotient, `d(k+d−1) − 12λ`.
    pub quotient_weight: Rational,
    /// The quotient is a nonzero constant, so `W` is a pure power of η.
    pub is_pure_eta_power: bool,
}

pub fn wronskian_eta_test(f: &[QSeries], k: &Rational) -> Result<EtaTest> {
    if let Some(j) = f.iter().position(QSeries::is_zero) {
        return Err(Error::DegenerateLeading(j));
    }
    let d = int(f.len() as i64);
    let lambda = f
        .iter()
        .fold(Rational::zero(), |a, s| a + s.leading_exponent());
    let w = modular_wronskian(f, k)?;
    if w.is_zero() {
        return Err(Error::ZeroWronskian);
    }
    let eta = eta_power(&(int(24) * &lambda), w.order());
    let g = w.divide_exact(&eta)?;
    let is_pure = g.leading_exponent().is_zero() && g.is_monomial();
    Ok(EtaTest {
        quotient_weight: &d * (k + &d - int(1)) - int(12) * &lambda,
        lambda,
        wronskian: w,
        quotient: g,
        is_pure_eta_power: is_pure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modforms::{delta, eisenstein};
    use crate::rational::rat;

    #[test]
    fn two_by_two_determinant() {
        let a = QSeries::from_integers(int(0), &[1, 1, 0]);
        let b = QSeries::from_integers(int(0), &[0, 1, 0]);
        let m = vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]];
        let det = series_determinant(&m).unwrap();
        // (1+q)² − q² = 1 + 2q
        assert_eq!(det.coefficients()[..2], [int(1), int(2)]);
    }

    #[test]
    fn scalar_wronskian_is_the_form() {
        let d = delta(10).series;
        let t = wronskian_eta_test(&[d.clone()], &int(12)).unwrap();
        assert_eq!(t.lambda, int(1));
        assert!(t.is_pure_eta_power);
        assert_eq!(t.quotient_weight, int(0));
    }

    #[test]
    fn zero_component_is_degenerate() {
        let e = eisenstein(4, 5).series;
        assert_eq!(
            wronskian_eta_test(&[e, QSeries::zero(5)], &int(4)),
            Err(Error::DegenerateLeading(1))
        );
    }

    #[test]
    fn dependent_components_have_zero_wronskian() {
        let e = eta_power(&int(2), 10);
        let err = wronskian_eta_test(&[e.clone(), e.scale(&rat(3, 2))], &int(1)).unwrap_err();
        assert_eq!(err, Error::ZeroWronskian);
    }

    #[test]
    fn quotient_weight_from_inputs() {
        let op = crate::mlde::operator_from_roots(&[rat(1, 12), rat(5, 12)]).unwrap();
        let f = op.solve_fundamental_system(15).unwrap();
        let t = wronskian_eta_test(&f, &op.weight).unwrap();
        assert!(t.is_pure_eta_power);
        assert_eq!(t.quotient_weight, int(0));
        // multiplying by E4 raises the weight of g by d·4
        let e4 = eisenstein(4, 15).series;
        let g: Vec<QSeries> = f.iter().map(|c| c.mul(&e4)).collect();
        let t = wronskian_eta_test(&g, &(&op.weight + int(4))).unwrap();
        assert_eq!(t.quotient_weight, int(2 * (6 + 1) - 6));
        let c = t.quotient.leading_coefficient().clone();
        assert!(t.quotient.agrees_with(&e4.mul(&e4).scale(&c)));
        assert!(!t.is_pure_eta_power);
    }

    #[test]
    fn wronskian_order_drops() {
        let e = eisenstein(4, 10).series;
        let d = delta(10).series;
        let w = modular_wronskian(&[e, d], &int(4)).unwrap();
        assert_eq!(w.leading_exponent(), &int(1));
        assert_eq!(w.order(), 9);
    }
}
