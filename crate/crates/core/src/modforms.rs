//! Eisenstein series, Δ, powers of η, the quasimodular `P` and the modular derivative.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::solve_combination;
use crate::qseries::QSeries;
use crate::rational::{binomial, int, rat, Rational};

/// Holomorphic modular form of integral weight for the full modular group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularForm {
    pub weight: i64,
    pub series: QSeries,
    /// Coordinates in [`basis_mk`] when known.
    pub basis_coords: Option<Vec<Rational>>,
}

impl ModularForm {
    pub fn new(weight: i64, series: QSeries) -> ModularForm {
        ModularForm {
            weight,
            series,
            basis_coords: None,
        }
    }

    /// Coordinates in the monomial basis `E4^a E6^b` of `M_k`.
    pub fn coordinates(&self) -> Option<Vec<Rational>> {
        if let Some(c) = &self.basis_coords {
            return Some(c.clone());
        }
        let dim = dim_mk(self.weight);
        if dim == 0 {
            return if self.series.is_zero() {
                Some(Vec::new())
            } else {
                None
            };
        }
        let basis = basis_mk(self.weight, self.series.order());
        let window = |s: &QSeries| s.window(&Rational::zero(), self.series.order() + 1).ok();
        let cols: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| window(&b.series))
            .collect::<Option<_>>()?;
        solve_combination(&cols, &window(&self.series)?)
    }

    pub fn mul(&self, other: &ModularForm) -> ModularForm {
        ModularForm::new(self.weight + other.weight, self.series.mul(&other.series))
    }
}

/// Bernoulli numbers `B_0..=B_n` from `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += binomial(&int(m as i64 + 1), j) * bj;
        }
        b.push(-acc / int(m as i64 + 1));
    }
    b
}

pub fn bernoulli(k: usize) -> Rational {
    bernoulli_table(k).pop().expect("nonempty")
}

/// `σ_s(n)`.
pub fn divisor_sum(n: u64, s: u32) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(s);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(s);
            }
        }
        d += 1;
    }
    acc
}

/// `1 + c · Σ σ_{k−1}(n) qⁿ`.
fn divisor_series(k: u32, c: &Rational, order: usize) -> QSeries {
    let mut coeffs = vec![Rational::one()];
    for n in 1..=order as u64 {
        coeffs.push(c * Rational::from_integer(divisor_sum(n, k - 1)));
    }
    QSeries::new(Rational::zero(), coeffs)
}

/// Normalized Eisenstein series `E_k = 1 − (2k/B_k) Σ σ_{k−1}(n) qⁿ` for even `k ≥ 4`.
pub fn eisenstein(k: u32, order: usize) -> ModularForm {
    eisenstein_with_bernoulli(k, &bernoulli(k as usize), order)
}

/// Same as [`eisenstein`] with the Bernoulli number supplied by the caller.
pub fn eisenstein_with_bernoulli(k: u32, b_k: &Rational, order: usize) -> ModularForm {
    assert!(k >= 4 && k % 2 == 0, "E_k needs even k >= 4");
    let c = -int(2 * k as i64) / b_k;
    let series = divisor_series(k, &c, order);
    let mut mf = ModularForm::new(k as i64, series);
    if k == 4 || k == 6 {
        mf.basis_coords = Some(vec![Rational::one()]);
    }
    mf
}

/// `E_2 = 1 − 24 Σ σ_1(n) qⁿ`.
pub fn eisenstein2(order: usize) -> QSeries {
    divisor_series(2, &int(-24), order)
}

/// `Δ = (E4³ − E6²)/1728`, known through relative order `order`.
pub fn delta(order: usize) -> ModularForm {
    delta_from(
        &eisenstein(4, order + 1).series,
        &eisenstein(6, order + 1).series,
    )
}

pub(crate) fn delta_from(e4: &QSeries, e6: &QSeries) -> ModularForm {
    let cube = e4.mul(e4).mul(e4);
    let sq = e6.mul(e6);
    let d = cube.sub(&sq).expect("integral branch").scale(&rat(1, 1728));
    ModularForm {
        weight: 12,
        series: d,
        basis_coords: Some(vec![rat(1, 1728), rat(-1, 1728)]),
    }
}

/// `Π_{n≥1} (1 − qⁿ)` through `q^order`.
pub fn euler_product(order: usize) -> QSeries {
    let mut c = vec![Rational::zero(); order + 1];
    c[0] = Rational::one();
    for n in 1..=order {
        for i in (n..=order).rev() {
            let t = c[i - n].clone();
            c[i] -= t;
        }
    }
    QSeries::new(Rational::zero(), c)
}

/// `η^w = q^{w/24} Π (1 − qⁿ)^w`.
pub fn eta_power(w: &Rational, order: usize) -> QSeries {
    euler_product(order)
        .pow_rational(w)
        .expect("unit leading coefficient")
        .shift(&(w / int(24)))
}

/// `P = −2 · (q d/dq η) / η = −1/12 + 2q + 6q² + …`.
pub fn p_series(order: usize) -> QSeries {
    let eta = eta_power(&Rational::one(), order);
    eta.q_derivative()
        .divide_exact(&eta)
        .expect("η is a unit")
        .scale(&int(-2))
}

/// `D_k f = q df/dq + k·P·f`.
pub fn modular_derivative(f: &QSeries, k: &Rational) -> QSeries {
    let p = p_series(f.order());
    modular_derivative_with(f, k, &p)
}

pub(crate) fn modular_derivative_with(f: &QSeries, k: &Rational, p: &QSeries) -> QSeries {
    if k.is_zero() {
        return f.q_derivative();
    }
    f.q_derivative()
        .add(&p.mul(f).scale(k))
        .expect("P is integral")
}

/// `dim M_k` for the full modular group.
pub fn dim_mk(k: i64) -> usize {
    if k < 0 || k % 2 != 0 {
        return 0;
    }
    let base = (k / 12) as usize;
    if k % 12 == 2 {
        base
    } else {
        base + 1
    }
}

/// Exponent pairs `(a, b)` with `4a + 6b = k`, `a` descending.
pub fn monomial_exponents(k: i64) -> Vec<(u32, u32)> {
    if k < 0 || k % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for a in (0..=k / 4).rev() {
        let rest = k - 4 * a;
        if rest % 6 == 0 {
            out.push((a as u32, (rest / 6) as u32));
        }
    }
    out
}

/// Monomials `E4^a E6^b` spanning `M_k`.
pub fn basis_mk(k: i64, order: usize) -> Vec<ModularForm> {
    let e4 = eisenstein(4, order).series;
    let e6 = eisenstein(6, order).series;
    monomials_from(k, &e4, &e6)
}

pub(crate) fn monomials_from(k: i64, e4: &QSeries, e6: &QSeries) -> Vec<ModularForm> {
    let exps = monomial_exponents(k);
    let n = exps.len();
    exps.iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            let mut s = QSeries::one(e4.order().min(e6.order()));
            for _ in 0..a {
                s = s.mul(e4);
            }
            for _ in 0..b {
                s = s.mul(e6);
            }
            let mut coords = vec![Rational::zero(); n];
            coords[i] = Rational::one();
            ModularForm {
                weight: k,
                series: s,
                basis_coords: Some(coords),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(s: &QSeries) -> Vec<Rational> {
        s.coefficients().to_vec()
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(3), int(0));
    }

    #[test]
    fn eisenstein_leading_terms() {
        assert_eq!(
            ints(&eisenstein(4, 2).series),
            vec![int(1), int(240), int(2160)]
        );
        assert_eq!(ints(&eisenstein(6, 1).series), vec![int(1), int(-504)]);
        assert_eq!(ints(&eisenstein(8, 1).series), vec![int(1), int(480)]);
        assert_eq!(ints(&eisenstein2(2)), vec![int(1), int(-24), int(-72)]);
    }

    #[test]
    fn delta_leading_terms() {
        let d = delta(3).series;
        assert_eq!(d.leading_exponent(), &int(1));
        assert_eq!(ints(&d), vec![int(1), int(-24), int(252), int(-1472)]);
        assert_eq!(d.order(), 3);
    }

    #[test]
    fn eta_leading_terms() {
        let e = eta_power(&int(1), 3);
        assert_eq!(e.leading_exponent(), &rat(1, 24));
        assert_eq!(ints(&e), vec![int(1), int(-1), int(-1), int(0)]);
    }

    #[test]
    fn p_matches_e2() {
        let p = p_series(12);
        assert_eq!(&ints(&p)[..3], &[rat(-1, 12), int(2), int(6)]);
        assert!(p.agrees_with(&eisenstein2(12).scale(&rat(-1, 12))));
    }

    #[test]
    fn dimensions_of_mk() {
        let expected = [
            (0, 1),
            (2, 0),
            (4, 1),
            (6, 1),
            (12, 2),
            (14, 1),
            (24, 3),
            (26, 2),
            (-2, 0),
            (3, 0),
        ];
        for (k, d) in expected {
            assert_eq!(dim_mk(k), d, "k = {k}");
            assert_eq!(monomial_exponents(k).len(), d, "k = {k}");
        }
    }

    #[test]
    fn monomial_order_is_a_descending() {
        assert_eq!(monomial_exponents(12), vec![(3, 0), (0, 2)]);
        assert_eq!(basis_mk(12, 3).len(), 2);
    }

    #[test]
    fn e8_is_e4_squared() {
        let e8 = eisenstein(8, 10);
        assert!(e8
            .series
            .agrees_with(&eisenstein(4, 10).series.mul(&eisenstein(4, 10).series)));
        assert_eq!(e8.coordinates().unwrap(), vec![int(1)]);
    }

    #[test]
    fn e12_coordinates() {
        // 691·E12 = 441·E4³ + 250·E6²
        let c = eisenstein(12, 8).coordinates().unwrap();
        assert_eq!(c, vec![rat(441, 691), rat(250, 691)]);
    }

    #[test]
    fn derivative_of_delta_vanishes() {
        let d = delta(20).series;
        assert!(modular_derivative(&d, &int(12)).is_zero());
    }

    #[test]
    fn kernel_and_constants() {
        let eta = eta_power(&int(1), 20);
        let d = modular_derivative(&eta, &rat(1, 2));
        assert!(d.is_zero() && d.precision() >= int(20));
        assert!(modular_derivative(&QSeries::one(10), &int(0)).is_zero());
        assert_eq!(eta_power(&int(0), 6), QSeries::one(6));
    }

    #[test]
    fn ramanujan_theta_e4() {
        // θE4 = (E2·E4 − E6)/3
        let e4 = eisenstein(4, 15).series;
        let rhs = eisenstein2(15)
            .mul(&e4)
            .sub(&eisenstein(6, 15).series)
            .unwrap()
            .scale(&rat(1, 3));
        assert!(e4.q_derivative().agrees_with(&rhs));
    }

    #[test]
    fn monomial_bases() {
        let b8 = basis_mk(8, 6);
        assert_eq!(b8.len(), 1);
        assert!(b8[0]
            .series
            .agrees_with(&eisenstein(4, 6).series.mul(&eisenstein(4, 6).series)));
        assert!(basis_mk(2, 6).is_empty());
        let b12: Vec<Vec<QSeries>> = basis_mk(12, 6)
            .into_iter()
            .map(|f| vec![f.series])
            .collect();
        assert_eq!(crate::qseries::rank_of_span(&b12, 5).unwrap(), 2);
    }

    #[test]
    fn derivative_of_e4_is_multiple_of_e6() {
        // D_4 E4 = −E6/3
        let e4 = eisenstein(4, 15).series;
        let d = modular_derivative(&e4, &int(4));
        assert!(d.agrees_with(&eisenstein(6, 15).series.scale(&rat(-1, 3))));
    }
}
