//! End-to-end checks, shared by the `acceptance` test target and `vvmf selftest`.
//!
//! Each check recomputes its expectation by an independent route (product
//! formulas, brute-force ranks, Leibniz determinants, closed forms) and
//! compares exactly.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::mlde::{check_incongruent, operator_from_roots, rewrite_dk_power, subleading_constant};
use crate::modforms::{
    bernoulli_table, delta_from, eisenstein, eisenstein_with_bernoulli, eta_power, euler_product,
    modular_derivative,
};
use crate::qseries::QSeries;
use crate::rational::{fmt_rational, int, rat, Rational};
use crate::vvmf::{
    classify, construct_basis, graded_dimension, hilbert_poincare, modular_wronskian, module_rank,
    series_expansion, validate_rep, wronskian_eta_test, ClassificationReport, RepClass,
};

/// Deliberate corruptions, used to prove a check can fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Faults {
    pub corrupt_bernoulli: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Run only criteria whose tag matches.
    pub only: Option<String>,
    pub faults: Faults,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub tag: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<10} {} ({:.2}s, limit {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.tag,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

type Check = fn(&Faults) -> std::result::Result<String, String>;

const CRITERIA: [(u8, &str, &str, u64, Check); 10] = [
    (
        1,
        "delta",
        "Δ from Eisenstein series equals q·Π(1−qⁿ)²⁴",
        2,
        check_delta,
    ),
    (2, "kernel", "D_k η^{2k} vanishes", 2, check_kernel),
    (
        3,
        "subleading",
        "f_{n,n−1}(0) closed form",
        2,
        check_subleading,
    ),
    (
        4,
        "eisop",
        "Eisenstein operator round trip through its roots",
        30,
        check_round_trip,
    ),
    (
        5,
        "frobenius",
        "Frobenius solutions satisfy their equation",
        60,
        check_frobenius,
    ),
    (6, "wronskian", "Wronskian laws", 60, check_wronskian),
    (
        7,
        "dimension",
        "dimension formulas against brute-force ranks",
        300,
        check_dimensions,
    ),
    (8, "hp", "Hilbert–Poincaré series", 5, check_hp),
    (
        9,
        "noncyclic",
        "d=5, N=2 Wronskian is a multiple of E4",
        30,
        check_noncyclic,
    ),
    (
        10,
        "validate",
        "representation data validation table",
        1,
        check_validation,
    ),
];

pub fn run(opts: &Options) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    for (id, tag, title, secs, check) in CRITERIA {
        if opts
            .only
            .as_deref()
            .is_some_and(|o| o != tag && o != id.to_string())
        {
            continue;
        }
        let start = Instant::now();
        let res = check(&opts.faults);
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(secs);
        let (passed, detail) = match res {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        out.push(CriterionResult {
            id,
            tag,
            title,
            passed,
            detail,
            elapsed,
            limit,
        });
    }
    out
}

pub fn tags() -> Vec<&'static str> {
    CRITERIA.iter().map(|c| c.1).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{}: {e}", e.name()))
}

fn check_delta(faults: &Faults) -> std::result::Result<String, String> {
    const ORDER: usize = 50;
    let mut b = bernoulli_table(6);
    if faults.corrupt_bernoulli {
        b[4] += rat(1, 1000);
    }
    let e4 = eisenstein_with_bernoulli(4, &b[4], ORDER + 1).series;
    let e6 = eisenstein_with_bernoulli(6, &b[6], ORDER + 1).series;
    let via_eisenstein = delta_from(&e4, &e6).series;
    let via_product = euler_product(ORDER)
        .pow_rational(&int(24))
        .map_err(|e| e.to_string())?
        .shift(&int(1));
    ensure(via_eisenstein.order() >= ORDER, || {
        format!("only order {}", via_eisenstein.order())
    })?;
    for n in 0..=ORDER {
        let e = int(1 + n as i64);
        let a = lift(via_eisenstein.coeff_at(&e))?;
        let b = lift(via_product.coeff_at(&e))?;
        ensure(a == b, || {
            format!("coefficient of q^{} differs: {a} vs {b}", n + 1)
        })?;
    }
    Ok(format!("{} coefficients agree", ORDER + 1))
}

fn check_kernel(_: &Faults) -> std::result::Result<String, String> {
    const ORDER: usize = 30;
    let ks = [rat(1, 2), int(1), int(3), int(6), rat(13, 7)];
    for k in &ks {
        let f = eta_power(&(int(2) * k), ORDER);
        let d = modular_derivative(&f, k);
        ensure(d.is_zero() && d.precision() >= int(ORDER as i64), || {
            format!("D_{k} η^{} = {}", int(2) * k, d.to_text())
        })?;
    }
    Ok(format!("{} weights, order {ORDER}", ks.len()))
}

fn random_rational(
    rng: &mut ChaCha8Rng,
    num: std::ops::Range<i64>,
    den: std::ops::RangeInclusive<i64>,
) -> Rational {
    rat(rng.gen_range(num), rng.gen_range(den))
}

fn check_subleading(_: &Faults) -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ks: Vec<Rational> = (0..20)
        .map(|_| random_rational(&mut rng, -60..61, 1..=12))
        .collect();
    let mut count = 0;
    for n in 1..=5 {
        for k in &ks {
            let f = rewrite_dk_power(n, k, 2);
            let got = lift(f[n - 1].coeff_at(&Rational::zero()))?;
            let want = subleading_constant(n, k);
            let want_direct = int(n as i64) * (int(5) * int(n as i64 - 1) - k) / int(12);
            ensure(got == want && want == want_direct, || {
                format!("n={n}, k={k}: {got} vs {want}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} (n, k) pairs"))
}

/// 100 random sets of distinct roots for each order 2..=5.
fn random_root_sets() -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut sets = Vec::new();
    for n in 2..=5 {
        while sets
            .iter()
            .filter(|s: &&Vec<Rational>| s.len() == n)
            .count()
            < 100
        {
            let mut roots: Vec<Rational> = Vec::new();
            while roots.len() < n {
                let r = random_rational(&mut rng, -12..37, 1..=12);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            sets.push(roots);
        }
    }
    sets
}

fn check_round_trip(_: &Faults) -> std::result::Result<String, String> {
    let sets = random_root_sets();
    for roots in &sets {
        let op = lift(operator_from_roots(roots))?;
        let mut want = roots.clone();
        want.sort();
        let got = lift(op.indicial_roots())?;
        ensure(got == want, || {
            format!("roots {want:?} came back as {got:?}")
        })?;
        let again = lift(operator_from_roots(&got))?;
        ensure(again == op, || {
            format!("operator for {want:?} changed on the second pass")
        })?;
        // root-sum identity as an independent cross-check on the weight
        let d = int(roots.len() as i64);
        let sum = roots.iter().fold(Rational::zero(), |a, b| a + b);
        ensure(sum == &d * (&op.weight + &d - int(1)) / int(12), || {
            format!("root sum for {want:?}")
        })?;
    }
    Ok(format!("{} operators", sets.len()))
}

fn check_frobenius(_: &Faults) -> std::result::Result<String, String> {
    const ORDER: usize = 20;
    let mut operators = 0;
    let mut solutions = 0;
    for roots in random_root_sets() {
        if check_incongruent(&roots).is_err() {
            continue;
        }
        let op = lift(operator_from_roots(&roots))?;
        let m = op.to_mlde(ORDER);
        for f in lift(m.solve_fundamental_system(ORDER))? {
            let residual = m.apply(&f);
            ensure(
                residual.is_zero()
                    && residual.precision() >= f.leading_exponent().floor() + int(ORDER as i64),
                || {
                    format!(
                        "residual {} for root {}",
                        residual.to_text(),
                        f.leading_exponent()
                    )
                },
            )?;
            solutions += 1;
        }
        operators += 1;
    }
    Ok(format!("{operators} operators, {solutions} solutions"))
}

/// Leibniz-formula determinant of the ordinary Wronskian `det(f_i^{(j)})`.
fn ordinary_wronskian(f: &[QSeries]) -> Result<QSeries> {
    let n = f.len();
    let mut derivs: Vec<Vec<QSeries>> = Vec::new();
    for s in f {
        let mut row = vec![s.clone()];
        for j in 1..n {
            let next = row[j - 1].derivative();
            row.push(next);
        }
        derivs.push(row);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc: Option<QSeries> = None;
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = derivs[0][perm[0]].clone();
        for i in 1..n {
            term = term.mul(&derivs[i][perm[i]]);
        }
        if inversions % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(acc.expect("at least one permutation"))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn fundamental_examples() -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut sets = vec![
        vec![rat(1, 12), rat(5, 12)],
        vec![rat(1, 7), rat(2, 7), rat(4, 7)],
        vec![rat(1, 15), rat(2, 15), rat(2, 5), rat(11, 15)],
        [1, 11, 16, 21, 26].iter().map(|&a| rat(a, 30)).collect(),
    ];
    while sets.len() < 12 {
        let n = rng.gen_range(2..=5);
        let roots: Vec<Rational> = (0..n)
            .map(|_| random_rational(&mut rng, 0..24, 1..=12))
            .collect();
        if check_incongruent(&roots).is_ok() {
            sets.push(roots);
        }
    }
    sets
}

fn check_wronskian(_: &Faults) -> std::result::Result<String, String> {
    const ORDER: usize = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for trial in 0..20 {
        let n = 2 + trial % 3;
        let k = random_rational(&mut rng, -24..25, 1..=6);
        let comps: Vec<QSeries> = (0..n)
            .map(|_| {
                let e = random_rational(&mut rng, 0..36, 1..=12);
                let coeffs = (0..=ORDER + n)
                    .map(|_| random_rational(&mut rng, -9..10, 1..=4))
                    .collect::<Vec<_>>();
                let mut coeffs = coeffs;
                if coeffs[0].is_zero() {
                    coeffs[0] = Rational::one();
                }
                QSeries::new(e, coeffs)
            })
            .collect();
        let w = lift(modular_wronskian(&comps, &k))?;
        let ordinary = lift(ordinary_wronskian(&comps))?.shift(&int((n * (n - 1) / 2) as i64));
        ensure(w.agrees_with(&ordinary), || {
            format!("trial {trial}: {} vs {}", w.to_text(), ordinary.to_text())
        })?;
        let lambda = comps
            .iter()
            .fold(Rational::zero(), |a, s| a + s.leading_exponent());
        ensure(w.precision() >= &lambda + int(ORDER as i64), || {
            format!("trial {trial}: precision {}", w.precision())
        })?;
    }
    let sets = fundamental_examples();
    for roots in &sets {
        let op = lift(operator_from_roots(roots))?;
        let f = lift(op.solve_fundamental_system(15))?;
        let t = lift(wronskian_eta_test(&f, &op.weight))?;
        let d = int(roots.len() as i64);
        let expected_weight = int(12) * &t.lambda / &d + int(1) - &d;
        ensure(t.is_pure_eta_power, || {
            format!("roots {roots:?}: quotient {}", t.quotient.to_text())
        })?;
        ensure(
            op.weight == expected_weight && t.quotient_weight.is_zero(),
            || {
                format!(
                    "roots {roots:?}: weight {} vs {}",
                    op.weight, expected_weight
                )
            },
        )?;
    }
    Ok(format!(
        "20 random vectors, {} fundamental systems",
        sets.len()
    ))
}

/// One concrete exponent set per classified case.
pub fn reference_cases() -> Vec<(&'static str, ClassificationReport)> {
    let thirtieths = |a: &[i64]| a.iter().map(|&x| rat(x, 30)).collect::<Vec<_>>();
    let four = [rat(1, 15), rat(2, 15), rat(2, 5), rat(11, 15)];
    let specs: Vec<(&str, usize, Vec<Rational>, Rational, Option<RepClass>)> = vec![
        ("d=1", 1, vec![rat(1, 4)], int(1), None),
        ("d=2", 2, vec![rat(1, 12), rat(5, 12)], int(0), None),
        (
            "d=3",
            3,
            vec![rat(1, 7), rat(2, 7), rat(4, 7)],
            int(0),
            None,
        ),
        ("d=4 rho0", 4, four.to_vec(), int(0), Some(RepClass::Rho0)),
        ("d=4 rho1", 4, four.to_vec(), int(0), Some(RepClass::Rho1)),
        ("d=5 N=0", 5, thirtieths(&[1, 11, 16, 21, 26]), int(0), None),
        ("d=5 N=1", 5, thirtieths(&[1, 6, 16, 21, 26]), int(0), None),
        ("d=5 N=2", 5, thirtieths(&[1, 6, 11, 21, 26]), int(0), None),
        ("d=5 N=3", 5, thirtieths(&[1, 6, 11, 16, 26]), int(0), None),
        ("d=5 N=4", 5, thirtieths(&[6, 11, 16, 21, 26]), int(0), None),
    ];
    specs
        .into_iter()
        .map(|(name, d, r, m, c)| {
            (
                name,
                classify(d, &r, &m, c).expect("reference data is valid"),
            )
        })
        .collect()
}

fn check_dimensions(_: &Faults) -> std::result::Result<String, String> {
    const ORDER: usize = 30;
    const DEPTH: usize = 15;
    let mut checked = 0;
    for (name, report) in reference_cases() {
        let basis =
            lift(construct_basis(&report, ORDER, DEPTH)).map_err(|e| format!("{name}: {e}"))?;
        for k in 0..=9 {
            let got =
                lift(module_rank(&report, &basis, k, DEPTH)).map_err(|e| format!("{name}: {e}"))?;
            let want = graded_dimension(&report, k);
            ensure(got == want, || {
                format!("{name}, k={k}: rank {got}, formula {want}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} graded pieces"))
}

fn check_hp(_: &Faults) -> std::result::Result<String, String> {
    let mut pieces = 0;
    for (name, report) in reference_cases() {
        let hp = hilbert_poincare(&report, 29);
        ensure(
            hp.numerator.iter().sum::<u64>() as usize == report.dimension,
            || format!("{name}: numerator(1)"),
        )?;
        for k in 0..30 {
            let want = graded_dimension(&report, k as i64) as u64;
            ensure(hp.expansion[k] == want, || {
                format!("{name}, k={k}: {} vs {want}", hp.expansion[k])
            })?;
            pieces += 1;
        }
        let odd = series_expansion(&hp.numerator, &[4, 6], 60)
            .iter()
            .skip(1)
            .step_by(2)
            .all(|&c| c == 0);
        ensure(odd, || format!("{name}: odd offsets are not empty"))?;
    }
    let lhs = series_expansion(&[1, 0, 1], &[4, 6], 40);
    let rhs = series_expansion(&[1], &[2, 6], 40);
    ensure(lhs == rhs, || "the two d=2 forms differ".into())?;
    Ok(format!(
        "{pieces} graded pieces, d=2 alternate form to t^40"
    ))
}

fn check_noncyclic(_: &Faults) -> std::result::Result<String, String> {
    const ORDER: usize = 15;
    let (_, report) = reference_cases()
        .into_iter()
        .find(|(n, _)| *n == "d=5 N=2")
        .expect("case present");
    let basis = lift(construct_basis(&report, ORDER + 10, 12))?;
    let g = &basis[0];
    let t = lift(wronskian_eta_test(&g.components, &g.weight))?;
    ensure(t.quotient_weight == int(4), || {
        format!("quotient weight {}", t.quotient_weight)
    })?;
    let c = t.quotient.coefficients()[0].clone();
    ensure(
        !c.is_zero() && t.quotient.leading_exponent().is_zero(),
        || "quotient does not start at q^0".into(),
    )?;
    let e4 = eisenstein(4, ORDER).series.scale(&c);
    ensure(t.quotient.order() >= ORDER, || {
        format!("quotient known to order {}", t.quotient.order())
    })?;
    ensure(t.quotient.agrees_with(&e4), || {
        format!("quotient {} is not a multiple of E4", t.quotient.to_text())
    })?;
    ensure(!t.is_pure_eta_power, || {
        "Wronskian is a pure η power".into()
    })?;
    Ok(format!(
        "g = {}·E4 through q^{}",
        fmt_rational(&c),
        t.quotient.order()
    ))
}

fn check_validation(_: &Faults) -> std::result::Result<String, String> {
    let r = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| rat(a, b)).collect::<Vec<_>>();
    let table: Vec<(usize, Vec<Rational>, &str)> = vec![
        (2, r(&[(1, 12), (5, 12)]), "ok"),
        (3, r(&[(0, 1), (1, 3), (1, 2)]), "DivisibilityViolation"),
        (2, r(&[(1, 5), (1, 5)]), "DuplicateExponents"),
        (1, r(&[(1, 12)]), "ok"),
        (1, r(&[(1, 7)]), "NotTUnitarizableData"),
        (2, r(&[(1, 7), (2, 7)]), "NotTUnitarizableData"),
        (2, r(&[(0, 1), (1, 12)]), "DivisibilityViolation"),
        (2, r(&[(1, 4), (3, 4)]), "ok"),
        (2, r(&[(1, 3), (1, 4)]), "DivisibilityViolation"),
        (3, r(&[(1, 7), (2, 7), (4, 7)]), "ok"),
        (3, r(&[(0, 1), (1, 4), (1, 2)]), "ok"),
        (3, r(&[(1, 12), (1, 6), (1, 3)]), "DivisibilityViolation"),
        (4, r(&[(1, 15), (2, 15), (2, 5), (11, 15)]), "ok"),
        (
            4,
            r(&[(0, 1), (1, 4), (1, 2), (3, 4)]),
            "DivisibilityViolation",
        ),
        (
            4,
            r(&[(1, 12), (1, 4), (5, 12), (2, 3)]),
            "DivisibilityViolation",
        ),
        (4, r(&[(0, 1), (1, 6), (1, 3), (1, 2)]), "ok"),
        (5, r(&[(1, 30), (11, 30), (8, 15), (7, 10), (13, 15)]), "ok"),
        (5, r(&[(0, 1), (1, 12), (1, 6), (1, 4), (1, 3)]), "ok"),
        (
            5,
            r(&[(1, 11), (2, 11), (3, 11), (4, 11), (5, 11)]),
            "NotTUnitarizableData",
        ),
        (
            5,
            r(&[(1, 10), (1, 10), (1, 5), (2, 5), (1, 2)]),
            "DuplicateExponents",
        ),
    ];
    for (d, rs, want) in &table {
        let got = match validate_rep(*d, rs, &Rational::zero()) {
            Ok(_) => "ok",
            Err(e) => e.name(),
        };
        ensure(got == *want, || {
            format!("d={d}, r={rs:?}: got {got}, expected {want}")
        })?;
    }
    Ok(format!("{} cases", table.len()))
}

pub fn summary(results: &[CriterionResult]) -> String {
    let passed = results.iter().filter(|r| r.passed).count();
    format!("{passed}/{} criteria passed", results.len())
}
