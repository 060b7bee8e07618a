//! Explicit free bases over `M = C[E4, E6]`.
//!
//! The cyclic cases take `D^j F0` for the fundamental solution `F0` of the
//! MLDE whose roots are the minimal admissible exponents. The others raise
//! some roots by one, solve again, and carve out extra generators `G` as
//! combinations of `E_k D^j F` that vanish at the cusp to high enough order
//! to be divided by Δ.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{kernel, solve_combination};
use crate::mlde::operator_from_roots;
use crate::modforms::{basis_mk, delta, eisenstein, eta_power, p_series, ModularForm};
use crate::multsys::canonical_multiplier;
use crate::qseries::{coefficient_rows, rank_of_span, QSeries};
use crate::rational::{fmt_rational, int, Rational};
use crate::vvmf::classify::{graded_dimension, Case, ClassificationReport};
use crate::vvmf::VvmfVector;

/// Series shared while building one basis.
pub struct BasisContext {
    pub order: usize,
    pub probe_depth: usize,
    pub p: QSeries,
    pub delta: ModularForm,
    eis: Vec<ModularForm>,
}

impl BasisContext {
    pub fn new(order: usize, probe_depth: usize) -> BasisContext {
        BasisContext {
            order,
            probe_depth,
            p: p_series(order),
            delta: delta(order),
            eis: (2..=6).map(|h| eisenstein(2 * h, order)).collect(),
        }
    }

    /// `E_k` for `k ∈ {4, 6, 8, 10, 12}`.
    pub fn e(&self, k: u32) -> &ModularForm {
        &self.eis[(k / 2 - 2) as usize]
    }
}

fn fundamental(
    report: &ClassificationReport,
    ctx: &BasisContext,
    bumps: &[i64],
) -> Result<VvmfVector> {
    let roots: Vec<Rational> = report
        .lambdas
        .iter()
        .zip(bumps)
        .map(|(l, &b)| l + int(b))
        .collect();
    let sum = roots.iter().fold(Rational::zero(), |a, b| a + b);
    let det = int(12) * &sum - &report.cusp_parameter * int(roots.len() as i64);
    assert!(det.is_integer(), "det ρ bookkeeping: 12λ − md = {det}");
    let op = operator_from_roots(&roots)?;
    let components = op.to_mlde(ctx.order).solve_at(&roots, ctx.order)?;
    Ok(VvmfVector {
        weight: op.weight,
        components,
        rep_exponents: report.rep_exponents.clone(),
        multiplier: canonical_multiplier(&report.cusp_parameter),
    })
}

/// The combination of `span` whose component `j` starts at `q^{λ_j + 1 + extra[j]}`
/// or later, divided by Δ.
fn delta_quotient(
    report: &ClassificationReport,
    ctx: &BasisContext,
    span: &[VvmfVector],
    extra: &[usize],
) -> Result<VvmfVector> {
    let mut rows = Vec::new();
    for (j, lam) in report.lambdas.iter().enumerate() {
        for s in 0..=extra[j] {
            let e = lam + int(s as i64);
            let row = span
                .iter()
                .map(|v| v.components[j].coeff_at(&e))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
    }
    let ker = kernel(&rows, span.len());
    let Some(c) = ker.first() else {
        return Err(Error::NoDeltaDivisibleCombination(format!(
            "no combination of {} vectors of weight {} vanishes to the required order",
            span.len(),
            fmt_rational(&span[0].weight)
        )));
    };
    let mut acc: Option<VvmfVector> = None;
    for (ci, v) in c.iter().zip(span) {
        if ci.is_zero() {
            continue;
        }
        let t = v.scale(ci);
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t)?,
        });
    }
    let g = acc
        .expect("kernel vectors are nonzero")
        .divide_by_form(&ctx.delta)?;
    for (j, (s, lam)) in g.components.iter().zip(&report.lambdas).enumerate() {
        if !s.is_zero() && s.leading_exponent() < &(lam + int(extra[j] as i64)) {
            return Err(Error::NoDeltaDivisibleCombination(format!(
                "component {j} is not divisible by Δ"
            )));
        }
    }
    Ok(g)
}

fn bumps_with(d: usize, ones: &[usize], base: i64) -> Vec<i64> {
    let mut b = vec![base; d];
    for &i in ones {
        b[i] = 1 - base;
    }
    b
}

fn unit(d: usize, idx: &[usize]) -> Vec<usize> {
    let mut v = vec![0; d];
    for &i in idx {
        v[i] += 1;
    }
    v
}

/// Builds the basis listed in `report.basis_recipe`, in that order.
pub fn construct_basis(
    report: &ClassificationReport,
    order: usize,
    probe_depth: usize,
) -> Result<Vec<VvmfVector>> {
    let ctx = BasisContext::new(order, probe_depth);
    let d = report.dimension;
    let lam = &report.lambdas;
    let candidates: Vec<Vec<usize>> = match report.case {
        Case::FourRho1 => {
            let k1 = &report.minimal_weight;
            (0..d)
                .filter(|&i| lam[i] != k1 / int(12))
                .map(|i| vec![i])
                .collect()
        }
        Case::Five(1) => (0..d).map(|i| vec![i]).collect(),
        Case::Five(2) => (0..d)
            .flat_map(|a| (a + 1..d).map(move |b| vec![a, b]))
            .collect(),
        Case::Five(3) => {
            let w = &report.minimal_weight / int(12);
            (0..d)
                .filter(|&a| lam[a] != w)
                .flat_map(|a| (0..d).filter(move |&b| b != a).map(move |b| vec![a, b]))
                .collect()
        }
        Case::Five(4) => {
            let w1 = &report.minimal_weight / int(12);
            let w2 = (&report.minimal_weight + int(2)) / int(12);
            let mut out = Vec::new();
            for i in 0..d {
                for i1 in (0..d).filter(|&x| lam[x] != w1) {
                    for i2 in (0..d).filter(|&x| x != i1 && lam[x] != w2) {
                        out.push(vec![i, i1, i2]);
                    }
                }
            }
            out
        }
        _ => vec![Vec::new()],
    };
    let mut last_err = Error::RankDeficient("no admissible index choice".into());
    for choice in candidates {
        match build(report, &ctx, &choice) {
            Ok(basis) => match verify(report, &basis, &ctx) {
                Ok(()) => return Ok(basis),
                Err(e) => last_err = e,
            },
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

fn build(
    report: &ClassificationReport,
    ctx: &BasisContext,
    choice: &[usize],
) -> Result<Vec<VvmfVector>> {
    let d = report.dimension;
    let p = &ctx.p;
    let zeros = vec![0usize; d];
    let basis = match report.case {
        Case::One => {
            let k0 = &report.minimal_weight;
            vec![VvmfVector {
                weight: k0.clone(),
                components: vec![eta_power(&(int(2) * k0), ctx.order)],
                rep_exponents: report.rep_exponents.clone(),
                multiplier: canonical_multiplier(&report.cusp_parameter),
            }]
        }
        Case::Two | Case::Three | Case::FourRho0 | Case::Five(0) => {
            let f = fundamental(report, ctx, &vec![0; d])?;
            (0..d).map(|j| f.derivative_n(j, p)).collect()
        }
        Case::FourRho1 => {
            let f1 = fundamental(report, ctx, &bumps_with(d, choice, 0))?;
            let span = vec![
                f1.times_form(ctx.e(10)),
                f1.derivative(p).times_form(ctx.e(8)),
                f1.derivative_n(2, p).times_form(ctx.e(6)),
                f1.derivative_n(3, p).times_form(ctx.e(4)),
            ];
            let g = delta_quotient(report, ctx, &span, &zeros)?;
            vec![g.clone(), g.derivative(p), f1, g.derivative_n(2, p)]
        }
        Case::Five(1) => {
            let f1 = fundamental(report, ctx, &bumps_with(d, choice, 0))?;
            let span = vec![
                f1.derivative_n(4, p).times_form(ctx.e(4)),
                f1.derivative_n(3, p).times_form(ctx.e(6)),
                f1.derivative_n(2, p).times_form(ctx.e(8)),
                f1.derivative(p).times_form(ctx.e(10)),
                f1.times_form(ctx.e(12)),
            ];
            let g = delta_quotient(report, ctx, &span, &zeros)?;
            vec![
                f1.clone(),
                g.clone(),
                f1.derivative(p),
                g.derivative(p),
                f1.derivative_n(2, p),
            ]
        }
        Case::Five(2) => {
            let f2 = fundamental(report, ctx, &bumps_with(d, choice, 0))?;
            let span = vec![
                f2.derivative_n(4, p),
                f2.derivative_n(2, p).times_form(ctx.e(4)),
                f2.derivative(p).times_form(ctx.e(6)),
                f2.times_form(ctx.e(8)),
            ];
            let g = delta_quotient(report, ctx, &span, &zeros)?;
            vec![
                g.clone(),
                g.derivative(p),
                g.derivative_n(2, p),
                g.derivative_n(3, p),
                f2,
            ]
        }
        Case::Five(3) => {
            let (j1, j2) = (choice[0], choice[1]);
            let f3 = fundamental(report, ctx, &bumps_with(d, &[j1, j2], 1))?;
            let span1 = vec![
                f3.derivative_n(3, p),
                f3.derivative(p).times_form(ctx.e(4)),
                f3.times_form(ctx.e(6)),
            ];
            let g1 = delta_quotient(report, ctx, &span1, &zeros)?;
            let span2 = vec![
                f3.derivative_n(4, p),
                f3.derivative_n(2, p).times_form(ctx.e(4)),
                f3.derivative(p).times_form(ctx.e(6)),
                f3.times_form(ctx.e(8)),
            ];
            let g2 = delta_quotient(report, ctx, &span2, &unit(d, &[j1]))?;
            vec![
                g1.clone(),
                g1.derivative(p),
                g2,
                g1.derivative_n(2, p),
                g1.derivative_n(3, p),
            ]
        }
        Case::Five(_) => {
            let (i, i1, i2) = (choice[0], choice[1], choice[2]);
            let f4 = fundamental(report, ctx, &bumps_with(d, &[i], 1))?;
            let span1 = vec![f4.derivative_n(2, p), f4.times_form(ctx.e(4))];
            let g1 = delta_quotient(report, ctx, &span1, &zeros)?;
            let span2 = vec![
                f4.derivative_n(3, p),
                f4.derivative(p).times_form(ctx.e(4)),
                f4.times_form(ctx.e(6)),
            ];
            let g2 = delta_quotient(report, ctx, &span2, &unit(d, &[i1]))?;
            let span3 = vec![
                f4.derivative_n(4, p),
                f4.derivative_n(2, p).times_form(ctx.e(4)),
                f4.derivative(p).times_form(ctx.e(6)),
                f4.times_form(ctx.e(8)),
            ];
            let g3 = delta_quotient(report, ctx, &span3, &unit(d, &[i1, i2]))?;
            vec![
                g1.clone(),
                g1.derivative(p),
                g2.clone(),
                g2.derivative(p),
                g3,
            ]
        }
    };
    for (v, e) in basis.iter().zip(&report.basis_recipe) {
        let expected = report.weight_of(e);
        if v.weight != expected {
            return Err(Error::RankDeficient(format!(
                "{} came out with weight {}, expected {}",
                e.label,
                fmt_rational(&v.weight),
                fmt_rational(&expected)
            )));
        }
    }
    Ok(basis)
}

fn verify(report: &ClassificationReport, basis: &[VvmfVector], ctx: &BasisContext) -> Result<()> {
    let comps: Vec<Vec<QSeries>> = basis.iter().map(|v| v.components.clone()).collect();
    let r = rank_of_span(&comps, ctx.probe_depth)?;
    if r != report.dimension {
        return Err(Error::RankDeficient(format!(
            "basis has rank {r}, expected {}",
            report.dimension
        )));
    }
    let top = report
        .basis_recipe
        .iter()
        .map(|e| e.weight_offset)
        .max()
        .unwrap_or(0) as i64
        / 2;
    for k in 0..=top {
        let got = module_rank(report, basis, k, ctx.probe_depth)?;
        let want = graded_dimension(report, k);
        if got != want {
            return Err(Error::RankDeficient(format!(
                "weight {} spans {got} dimensions, expected {want}",
                fmt_rational(&(&report.minimal_weight + int(2 * k)))
            )));
        }
    }
    Ok(())
}

/// Rank of every product `m · B` with `m` a monomial in `E4, E6` and `B` a
/// basis vector, landing in weight `k_min + 2k`.
pub fn module_rank(
    report: &ClassificationReport,
    basis: &[VvmfVector],
    k: i64,
    probe_depth: usize,
) -> Result<usize> {
    if k < 0 {
        return Ok(0);
    }
    let order = basis.iter().map(VvmfVector::min_order).min().unwrap_or(0);
    let mut products = Vec::new();
    for (v, e) in basis.iter().zip(&report.basis_recipe) {
        let mw = 2 * k - e.weight_offset as i64;
        if mw < 0 {
            continue;
        }
        for m in basis_mk(mw, order) {
            products.push(v.times_form(&m).components);
        }
    }
    if products.is_empty() {
        return Ok(0);
    }
    rank_of_span(&products, probe_depth)
}

/// Coefficients `c` with `target = Σ c_i span_i`, checked on every known
/// coefficient, or `None` when the target is outside the span.
pub fn relation_in_span(
    target: &VvmfVector,
    span: &[VvmfVector],
    probe_depth: usize,
) -> Result<Option<Vec<Rational>>> {
    let mut all: Vec<Vec<QSeries>> = span.iter().map(|v| v.components.clone()).collect();
    all.push(target.components.clone());
    let rows = coefficient_rows(&all, probe_depth)?;
    let (target_row, cols) = rows.split_last().expect("target row");
    let Some(c) = solve_combination(cols, target_row) else {
        return Ok(None);
    };
    let mut acc = target.scale(&int(-1));
    for (ci, v) in c.iter().zip(span) {
        acc = acc.add(&v.scale(ci))?;
    }
    if acc.components.iter().all(QSeries::is_zero) {
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::vvmf::{classify, RepClass};

    #[test]
    fn one_dimensional_basis_is_an_eta_power() {
        let r = classify(1, &[rat(1, 4)], &int(1), None).unwrap();
        assert_eq!(r.minimal_weight, int(4));
        let b = construct_basis(&r, 10, 5).unwrap();
        assert_eq!(b[0].components[0].leading_exponent(), &rat(1, 3));
    }

    #[test]
    fn two_dimensional_basis() {
        let r = classify(2, &[rat(1, 12), rat(5, 12)], &int(0), None).unwrap();
        let b = construct_basis(&r, 20, 10).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[1].weight, int(4));
        for k in 0..6 {
            assert_eq!(module_rank(&r, &b, k, 10).unwrap(), graded_dimension(&r, k));
        }
    }

    #[test]
    fn rho1_relation() {
        let e = [rat(1, 15), rat(2, 15), rat(2, 5), rat(11, 15)];
        let r = classify(4, &e, &int(0), Some(RepClass::Rho1)).unwrap();
        let b = construct_basis(&r, 24, 10).unwrap();
        let ctx = BasisContext::new(24, 10);
        // D F1 = a D²G + b E4 G with both coefficients nonzero
        let target = b[2].derivative(&ctx.p);
        let span = [b[3].clone(), b[0].times_form(ctx.e(4))];
        let c = relation_in_span(&target, &span, 10)
            .unwrap()
            .expect("relation holds");
        assert!(c.iter().all(|x| !x.is_zero()));
    }
}
