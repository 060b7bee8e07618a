//! Univariate polynomials over Q, stored low degree first.

use num_traits::{One, Signed, Zero};

use crate::rational::{fmt_rational, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn new(mut c: Vec<Rational>) -> Poly {
        while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        if c.is_empty() {
            c.push(Rational::zero());
        }
        Poly(c)
    }

    /// `Π (x − r)`.
    pub fn from_roots(roots: &[Rational]) -> Poly {
        let mut p = Poly::new(vec![Rational::one()]);
        for r in roots {
            p = p.mul(&Poly::new(vec![-r.clone(), Rational::one()]));
        }
        p
    }

    /// `Σ c[j] · x(x−1)…(x−j+1)`.
    pub fn from_falling(c: &[Rational]) -> Poly {
        let mut acc = Poly::new(vec![Rational::zero()]);
        let mut ff = Poly::new(vec![Rational::one()]);
        for (j, cj) in c.iter().enumerate() {
            acc = acc.add(&ff.scale(cj));
            ff = ff.mul(&Poly::new(vec![-int(j as i64), Rational::one()]));
        }
        acc
    }

    /// Coefficients in the falling-factorial basis.
    pub fn to_falling(&self) -> Vec<Rational> {
        let n = self.degree();
        let mut rest = self.clone();
        let mut out = vec![Rational::zero(); n + 1];
        for j in (0..=n).rev() {
            let c = rest.0.get(j).cloned().unwrap_or_else(Rational::zero);
            out[j] = c.clone();
            let mut unit = vec![Rational::zero(); j + 1];
            unit[j] = c;
            rest = rest.sub(&Poly::from_falling(&unit));
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_zero()
    }

    pub fn lead(&self) -> &Rational {
        self.0.last().expect("nonempty")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = o.0.get(i).cloned().unwrap_or_else(Rational::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut c = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::new(vec![Rational::zero()]);
        }
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        self.scale(&self.lead().recip())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.clone();
        let dd = d.degree();
        if r.degree() < dd {
            return (Poly::new(vec![Rational::zero()]), r);
        }
        let mut q = vec![Rational::zero(); r.degree() - dd + 1];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let f = r.lead() / d.lead();
            let mut t = vec![Rational::zero(); shift + 1];
            t[shift] = f.clone();
            q[shift] = f;
            r = r.sub(&d.mul(&Poly::new(t)));
        }
        (Poly::new(q), r)
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn to_text(&self, var: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let v = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let mag = c.abs();
            let coef = if i > 0 && mag.is_one() {
                String::new()
            } else {
                fmt_rational(&mag)
            };
            let body = match (coef.is_empty(), v.is_empty()) {
                (true, _) => v,
                (false, true) => coef,
                (false, false) => format!("{coef}·{v}"),
            };
            parts.push((c.is_negative(), body));
        }
        let mut out = String::new();
        for (k, (neg, body)) in parts.into_iter().enumerate() {
            match (k, neg) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }

    /// All rational roots with multiplicity if the polynomial splits over Q.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        if self.degree() == 0 {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        let mut rest = self.monic();
        let sqfree = {
            let g = rest.gcd(&rest.derivative());
            rest.div_rem(&g).0.monic()
        };
        for r in real_roots_rational(&sqfree)? {
            loop {
                let (q, rem) = rest.div_rem(&Poly::new(vec![-r.clone(), Rational::one()]));
                if !rem.is_zero() {
                    break;
                }
                roots.push(r.clone());
                rest = q;
            }
        }
        if rest.degree() == 0 {
            roots.sort();
            Some(roots)
        } else {
            None
        }
    }
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.scale(&-Rational::one()));
    }
    chain
}

fn sign_changes(chain: &[Poly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        };
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

/// Rational number with the smallest denominator in `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi.clone(), &-lo.clone());
    }
    let fl = lo.floor();
    if fl == *lo || fl.clone() + Rational::one() <= *hi {
        return if fl == *lo { fl } else { fl + Rational::one() };
    }
    // lo and hi share the integer part; recurse on reciprocals of fractional parts
    let a = lo - &fl;
    let b = hi - &fl;
    let inner = simplest_between(&b.recip(), &a.recip());
    fl + inner.recip()
}

/// Rational roots of a square-free polynomial, or `None` once some real or
/// complex root is irrational.
fn real_roots_rational(p: &Poly) -> Option<Vec<Rational>> {
    let n = p.degree();
    let chain = sturm_chain(p);
    let lead = p.lead().abs();
    let bound = Rational::one()
        + p.0
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |a, b| a.max(b));
    let lo = -bound.clone();
    let total = sign_changes(&chain, &lo) - sign_changes(&chain, &bound);
    if total < n {
        return None;
    }
    // Denominator bound for any rational root of the primitive integer form.
    let den_lcm = p.0.iter().fold(num_bigint::BigInt::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    let q_bound = Rational::from_integer(
        (p.lead() * Rational::from_integer(den_lcm))
            .abs()
            .to_integer(),
    );
    let gap = (q_bound.clone() * q_bound).recip();
    let mut out = Vec::new();
    let mut stack = vec![(lo, bound)];
    while let Some((a, b)) = stack.pop() {
        let count = sign_changes(&chain, &a) - sign_changes(&chain, &b);
        if count == 0 {
            continue;
        }
        if count == 1 && &b - &a < gap {
            let c = simplest_between(&a, &b);
            if p.eval(&c).is_zero() {
                out.push(c);
                continue;
            }
            return None;
        }
        let mid = (&a + &b) / int(2);
        if p.eval(&mid).is_zero() {
            out.push(mid.clone());
            let eps = gap.clone() / int(4);
            stack.push((a, &mid - &eps));
            stack.push((&mid + &eps, b));
        } else {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn falling_basis_round_trip() {
        let p = Poly::new(vec![int(3), int(-1), int(2), int(1)]);
        let f = p.to_falling();
        assert_eq!(Poly::from_falling(&f), p);
        // x(x−1) = x² − x
        assert_eq!(
            Poly::from_falling(&[int(0), int(0), int(1)]),
            Poly::new(vec![int(0), int(-1), int(1)])
        );
    }

    #[test]
    fn finds_rational_roots_with_multiplicity() {
        let p = Poly::from_roots(&[rat(1, 6), int(0), rat(1, 6), rat(-7, 3)]);
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![rat(-7, 3), int(0), rat(1, 6), rat(1, 6)]
        );
    }

    #[test]
    fn rejects_irrational_and_complex_roots() {
        assert!(Poly::new(vec![int(-2), int(0), int(1)])
            .rational_roots()
            .is_none());
        assert!(Poly::new(vec![int(1), int(0), int(1)])
            .rational_roots()
            .is_none());
        let mixed = Poly::from_roots(&[int(1)]).mul(&Poly::new(vec![int(-3), int(0), int(1)]));
        assert!(mixed.rational_roots().is_none());
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-4, 10), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_between(&rat(1, 2), &rat(3, 2)), int(1));
    }

    proptest! {
        #[test]
        fn recovers_random_roots(rs in prop::collection::vec((-30i64..30, 1i64..13), 1..6)) {
            let roots: Vec<Rational> = rs.iter().map(|&(a, b)| rat(a, b)).collect();
            let mut expected = roots.clone();
            expected.sort();
            prop_assert_eq!(Poly::from_roots(&roots).rational_roots().unwrap(), expected);
        }
    }
}
