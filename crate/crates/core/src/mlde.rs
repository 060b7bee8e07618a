//! Modular linear differential equations `D_kⁿ f + Σ M_{2i} D_k^{n−i} f = 0`.
//!
//! Operators are rewritten as `Σ_j g_j(q) q^j d^j/dq^j`; the indicial
//! polynomial is `Σ_j g_j(0) r(r−1)…(r−j+1)` and Frobenius solutions come
//! from the standard recursion on that form.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::modforms::{eisenstein, modular_derivative_with, p_series, ModularForm};
use crate::poly::Poly;
use crate::qseries::QSeries;
use crate::rational::{congruent_mod_one, fmt_rational, int, Rational};

/// `f_{m,j}` for every `m ≤ n`: `levels[m][j]` is the coefficient of
/// `q^j d^j/dq^j` in `D_k^m`.
pub fn rewrite_levels(n: usize, k: &Rational, order: usize) -> Vec<Vec<QSeries>> {
    let p = p_series(order);
    let mut levels = vec![vec![QSeries::one(order)]];
    for i in 0..n {
        let w = k + int(2 * i as i64);
        let prev = &levels[i];
        let mut next = Vec::with_capacity(i + 2);
        for j in 0..=i + 1 {
            let mut acc = QSeries::zero(order);
            if j <= i {
                let f = &prev[j];
                let term = f
                    .q_derivative()
                    .add(&f.scale(&int(j as i64)))
                    .and_then(|t| t.add(&p.mul(f).scale(&w)))
                    .expect("integral branch");
                acc = acc.add(&term).expect("integral branch");
            }
            if j >= 1 {
                acc = acc.add(&prev[j - 1]).expect("integral branch");
            }
            next.push(acc);
        }
        levels.push(next);
    }
    levels
}

/// `D_kⁿ = Σ_{j=0}^{n} q^j f_{n,j}(q) d^j/dq^j`, with `f_{n,n} = 1`.
pub fn rewrite_dk_power(n: usize, k: &Rational, order: usize) -> Vec<QSeries> {
    rewrite_levels(n, k, order).pop().expect("level n")
}

/// Constant terms `f_{m,j}(0)` for `m ≤ n`, using `P(0) = −1/12`.
pub fn rewrite_constants(n: usize, k: &Rational) -> Vec<Vec<Rational>> {
    let p0 = -Rational::one() / int(12);
    let mut levels = vec![vec![Rational::one()]];
    for i in 0..n {
        let w = k + int(2 * i as i64);
        let prev = &levels[i];
        let mut next = vec![Rational::zero(); i + 2];
        for (j, slot) in next.iter_mut().enumerate() {
            if j <= i {
                *slot += &prev[j] * (int(j as i64) + &w * &p0);
            }
            if j >= 1 {
                *slot += &prev[j - 1];
            }
        }
        levels.push(next);
    }
    levels
}

/// `f_{n,n−1}(0) = n(5(n−1) − k)/12`.
pub fn subleading_constant(n: usize, k: &Rational) -> Rational {
    let n = int(n as i64);
    &n * (int(5) * (&n - int(1)) - k) / int(12)
}

/// Where `q = 0` sits for the rewritten equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityKind {
    Ordinary,
    RegularSingular,
}

/// `D_kⁿ + Σ_{i=1}^{n} M_{2i} D_k^{n−i}` with explicit coefficient series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mlde {
    pub weight: Rational,
    /// `coefficients[i−1]` multiplies `D_k^{n−i}`.
    pub coefficients: Vec<QSeries>,
}

impl Mlde {
    pub fn new(weight: Rational, coefficients: Vec<QSeries>) -> Mlde {
        Mlde {
            weight,
            coefficients,
        }
    }

    pub fn from_forms(weight: Rational, forms: &[ModularForm]) -> Mlde {
        Mlde::new(weight, forms.iter().map(|f| f.series.clone()).collect())
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    fn constant_terms(&self) -> Vec<Rational> {
        self.coefficients
            .iter()
            .map(|s| {
                s.coeff_at(&Rational::zero())
                    .expect("coefficients start at q^0 or later")
            })
            .collect()
    }

    /// Coefficients `g_0..=g_n` of `q^j d^j/dq^j`.
    pub fn rewritten(&self, order: usize) -> Vec<QSeries> {
        let n = self.order();
        let levels = rewrite_levels(n, &self.weight, order);
        (0..=n)
            .map(|j| {
                let mut g = levels[n][j].clone();
                for i in 1..=n {
                    if j <= n - i {
                        let t = self.coefficients[i - 1].mul(&levels[n - i][j]);
                        g = g.add(&t).expect("integral branch");
                    }
                }
                g
            })
            .collect()
    }

    pub fn indicial_polynomial(&self) -> Poly {
        let n = self.order();
        let c = rewrite_constants(n, &self.weight);
        let m0 = self.constant_terms();
        let falling: Vec<Rational> = (0..=n)
            .map(|j| {
                let mut g = c[n][j].clone();
                for i in 1..=n {
                    if j <= n - i {
                        g += &m0[i - 1] * &c[n - i][j];
                    }
                }
                g
            })
            .collect();
        Poly::from_falling(&falling)
    }

    pub fn indicial_roots(&self) -> Result<Vec<Rational>> {
        let p = self.indicial_polynomial();
        p.rational_roots()
            .ok_or_else(|| Error::IrrationalIndicialRoots(p.to_text("r")))
    }

    pub fn singularity_kind(&self, order: usize) -> SingularityKind {
        let n = self.order();
        let g = self.rewritten(order.max(n));
        let ordinary = (0..n).all(|j| {
            let s = &g[j];
            s.is_zero() || s.leading_exponent() >= &int((n - j) as i64)
        });
        if ordinary {
            SingularityKind::Ordinary
        } else {
            SingularityKind::RegularSingular
        }
    }

    /// `L[f]`, evaluated through repeated modular derivatives.
    pub fn apply(&self, f: &QSeries) -> QSeries {
        let n = self.order();
        let p = p_series(f.order());
        let mut derivs = vec![f.clone()];
        for i in 0..n {
            let w = &self.weight + int(2 * i as i64);
            let next = modular_derivative_with(&derivs[i], &w, &p);
            derivs.push(next);
        }
        let mut acc = derivs[n].clone();
        for i in 1..=n {
            let c = &self.coefficients[i - 1];
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&c.mul(&derivs[n - i])).expect("same branch");
        }
        acc
    }

    /// `q^r Σ b(j) q^j` with `b(0) = 1`, through relative order `order`.
    pub fn frobenius_solve(&self, root: &Rational, order: usize) -> Result<QSeries> {
        let ind = self.indicial_polynomial();
        if !ind.eval(root).is_zero() {
            return Err(Error::NotAnIndicialRoot(fmt_rational(root)));
        }
        frobenius_series(&self.rewritten(order), root, order)
    }

    /// Frobenius solutions for all indicial roots, sorted by root.
    pub fn solve_fundamental_system(&self, order: usize) -> Result<Vec<QSeries>> {
        let roots = self.indicial_roots()?;
        check_incongruent(&roots)?;
        self.solve_at(&roots, order)
    }

    /// Frobenius solutions at the given indicial roots, in the given order.
    pub fn solve_at(&self, roots: &[Rational], order: usize) -> Result<Vec<QSeries>> {
        let ind = self.indicial_polynomial();
        if let Some(r) = roots.iter().find(|r| !ind.eval(r).is_zero()) {
            return Err(Error::NotAnIndicialRoot(fmt_rational(r)));
        }
        let g = self.rewritten(order);
        roots
            .iter()
            .map(|r| frobenius_series(&g, r, order))
            .collect()
    }
}

fn frobenius_series(g: &[QSeries], root: &Rational, order: usize) -> Result<QSeries> {
    let n = g.len() - 1;
    // gc[t][j]: coefficient of q^t in g_j
    let gc: Vec<Vec<Rational>> = (0..=order)
        .map(|t| {
            g.iter()
                .map(|s| s.coeff_at(&int(t as i64)).expect("rewritten to this order"))
                .collect()
        })
        .collect();
    let falling = |s: &Rational| {
        let mut ff = Vec::with_capacity(n + 1);
        let mut acc = Rational::one();
        for j in 0..=n {
            ff.push(acc.clone());
            acc *= s - int(j as i64);
        }
        ff
    };
    let eval = |t: usize, ff: &[Rational]| -> Rational {
        let mut v = Rational::zero();
        for (c, f) in gc[t].iter().zip(ff) {
            if !c.is_zero() {
                v += c * f;
            }
        }
        v
    };
    let mut b = vec![Rational::one()];
    let mut ffs = vec![falling(root)];
    for t in 1..=order {
        let mut rhs = Rational::zero();
        for i in 0..t {
            if b[i].is_zero() {
                continue;
            }
            rhs += &b[i] * eval(t - i, &ffs[i]);
        }
        let s = root + int(t as i64);
        let ff = falling(&s);
        let lead = eval(0, &ff);
        let bt = if lead.is_zero() {
            if !rhs.is_zero() {
                return Err(Error::ResonantRoot(fmt_rational(&s)));
            }
            Rational::zero()
        } else {
            -rhs / lead
        };
        b.push(bt);
        ffs.push(ff);
    }
    Ok(QSeries::new(root.clone(), b))
}

/// Fails with `CongruentRoots` when two roots differ by an integer.
pub fn check_incongruent(roots: &[Rational]) -> Result<()> {
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            if congruent_mod_one(a, b) {
                return Err(Error::CongruentRoots(fmt_rational(a), fmt_rational(b)));
            }
        }
    }
    Ok(())
}

/// `D_kⁿ + α_4 E_4 D_k^{n−2} + … + α_{2n} E_{2n}` for `2 ≤ n ≤ 5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinOperator {
    pub weight: Rational,
    /// `α_4, …, α_{2n}`.
    pub alphas: Vec<Rational>,
}

impl EisensteinOperator {
    pub fn new(weight: Rational, alphas: Vec<Rational>) -> Result<EisensteinOperator> {
        let n = alphas.len() + 1;
        if !(2..=5).contains(&n) {
            return Err(Error::UnsupportedOrder(n));
        }
        Ok(EisensteinOperator { weight, alphas })
    }

    pub fn order(&self) -> usize {
        self.alphas.len() + 1
    }

    pub fn to_mlde(&self, order: usize) -> Mlde {
        let mut coeffs = vec![QSeries::zero(order)];
        for (i, a) in self.alphas.iter().enumerate() {
            let e = eisenstein(2 * (i as u32 + 2), order).series;
            coeffs.push(e.scale(a));
        }
        Mlde::new(self.weight.clone(), coeffs)
    }

    pub fn indicial_polynomial(&self) -> Poly {
        self.to_mlde(0).indicial_polynomial()
    }

    pub fn indicial_roots(&self) -> Result<Vec<Rational>> {
        self.to_mlde(0).indicial_roots()
    }

    pub fn frobenius_solve(&self, root: &Rational, order: usize) -> Result<QSeries> {
        self.to_mlde(order).frobenius_solve(root, order)
    }

    pub fn solve_fundamental_system(&self, order: usize) -> Result<Vec<QSeries>> {
        self.to_mlde(order).solve_fundamental_system(order)
    }
}

/// The unique Eisenstein operator whose indicial roots are `roots`.
pub fn operator_from_roots(roots: &[Rational]) -> Result<EisensteinOperator> {
    let n = roots.len();
    if !(2..=5).contains(&n) {
        return Err(Error::UnsupportedOrder(n));
    }
    for (i, a) in roots.iter().enumerate() {
        if roots[i + 1..].contains(a) {
            return Err(Error::DuplicateRoots(fmt_rational(a)));
        }
    }
    let target = Poly::from_roots(roots).to_falling();
    let nn = int(n as i64);
    let k = int(5) * (&nn - int(1)) - int(12) * &target[n - 1] / &nn;
    let c = rewrite_constants(n, &k);
    let mut alphas: Vec<Rational> = Vec::with_capacity(n - 1);
    for i in 2..=n {
        let mut a = &target[n - i] - &c[n][n - i];
        for (ip, prev) in (2..i).zip(&alphas) {
            a -= prev * &c[n - ip][n - i];
        }
        alphas.push(a);
    }
    EisensteinOperator::new(k, alphas)
}
