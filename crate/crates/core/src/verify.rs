//! Named cross-check suites with a pass/fail line per identity.
//!
//! Each suite compares two independent computations of the same numbers:
//! brute-force enumeration against recursion, recursion against generating
//! functions, one construction of P_g against another. On mismatch the first
//! differing coefficient is kept. Checks marked as observations are reported
//! but do not decide whether the suite passes.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{self, Integer, Rational};
use crate::asymptotics::{self, Interval};
use crate::biseries::BiSeries;
use crate::error::Result;
use crate::genfunc::{self, theorem};
use crate::oracle::{EnumerationCaps, Oracle};
use crate::poly::ExactPoly;
use crate::recurrences;
use crate::series::ExactSeries;
use crate::table::GenusTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Oracle,
    Hz,
    Theorem3,
    Shapes,
    Mm,
    Asymptotics,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Oracle, Suite::Hz, Suite::Theorem3, Suite::Shapes, Suite::Mm, Suite::Asymptotics];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Hz => "hz",
            Suite::Theorem3 => "theorem3",
            Suite::Shapes => "shapes",
            Suite::Mm => "mm",
            Suite::Asymptotics => "asymptotics",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| crate::error::Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Observations are reported but never fail a suite.
    pub gating: bool,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, gating: true, detail: detail.into(), counterexample: None }
    }

    fn from_mismatch(name: impl Into<String>, scope: impl Into<String>, mismatch: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed: mismatch.is_none(),
            gating: true,
            detail: scope.into(),
            counterexample: mismatch,
        }
    }

    fn observation(mut self) -> Self {
        self.gating = false;
        self
    }

    fn from_error(name: impl Into<String>, err: crate::error::Error) -> Self {
        Check::new(name, false, format!("error: {err}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.gating)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match (c.passed, c.gating) {
                (true, _) => "pass",
                (false, true) => "FAIL",
                (false, false) => "note",
            };
            write!(f, "[{status}] {}/{}: {}", self.suite.name(), c.name, c.detail)?;
            if let Some(cx) = &c.counterexample {
                write!(f, " (first counterexample: {cx})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Sizes for the suites. Oracle-backed limits are also bounded by `caps`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub caps: EnumerationCaps,
    /// Largest chord count checked against full enumeration.
    pub oracle_n_max: usize,
    pub hz_n_max: usize,
    pub g_max: usize,
    /// Largest chord count for shape comparisons.
    pub shapes_n_max: usize,
    /// Largest backbone length for macromolecular comparisons.
    pub mm_n_max: usize,
    pub growth_n: usize,
    /// Perturb one value on one side of every comparison, to exercise the
    /// failure path.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            caps: EnumerationCaps::default(),
            oracle_n_max: 8,
            hz_n_max: 12,
            g_max: 6,
            shapes_n_max: 7,
            mm_n_max: 14,
            growth_n: 400,
            inject_fault: false,
        }
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Report {
    let checks = match suite {
        Suite::Oracle => oracle_suite(opts),
        Suite::Hz => hz_suite(opts),
        Suite::Theorem3 => theorem3_suite(opts),
        Suite::Shapes => shapes_suite(opts),
        Suite::Mm => mm_suite(opts),
        Suite::Asymptotics => asymptotics_suite(opts),
    };
    Report { suite, checks }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<Report> {
    Suite::ALL.iter().map(|&s| run(s, opts)).collect()
}

fn bump(v: &Integer) -> Integer {
    v + 1u32
}

fn first_table_difference(a: &GenusTable, b: &GenusTable) -> Option<String> {
    a.differences(b)
        .into_iter()
        .next()
        .map(|(g, n, x, y)| format!("g={g}, n={n}: {x} vs {y}"))
}

fn first_series_difference(a: &ExactSeries, b: &ExactSeries) -> Option<String> {
    let order = a.order().min(b.order());
    (0..=order).find(|&i| a.coeff(i) != b.coeff(i)).map(|i| {
        format!("[z^{i}]: {} vs {}", arith::format_rational(a.coeff(i)), arith::format_rational(b.coeff(i)))
    })
}

fn first_poly_difference(a: &ExactPoly, b: &ExactPoly) -> Option<String> {
    let d = a.coeffs().len().max(b.coeffs().len());
    (0..d).find(|&i| a.coeff(i) != b.coeff(i)).map(|i| {
        format!("[z^{i}]: {} vs {}", arith::format_rational(&a.coeff(i)), arith::format_rational(&b.coeff(i)))
    })
}

fn first_bi_difference(a: &BiSeries, b: &BiSeries) -> Option<String> {
    let (n, m) = (a.orders().0.min(b.orders().0), a.orders().1.min(b.orders().1));
    for i in 0..=n {
        for j in 0..=m {
            if a.coeff(i, j) != b.coeff(i, j) {
                return Some(format!(
                    "(n={i}, m={j}): {} vs {}",
                    arith::format_rational(a.coeff(i, j)),
                    arith::format_rational(b.coeff(i, j))
                ));
            }
        }
    }
    None
}

fn bi_against_table(bi: &BiSeries, table: &GenusTable, g: usize, n_max: usize) -> Option<String> {
    for n in 0..=n_max {
        for m in 0..=n_max {
            let expect = if g <= table.g_max() && n <= table.n_max() { table.get_m(g, n, m) } else { Integer::zero() };
            let got = bi.coeff(n, m);
            if *got != Rational::from_integer(expect.clone()) {
                return Some(format!("g={g}, n={n}, m={m}: {} vs {expect}", arith::format_rational(got)));
            }
        }
    }
    None
}

fn oracle_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    let n_max = opts.oracle_n_max;
    let oracle = Oracle::new(opts.caps);
    let mut recursion = recurrences::cg_table(n_max / 2, n_max);
    if opts.inject_fault {
        let n = n_max.max(2);
        recursion.set(1, n.min(n_max), bump(recursion.get(1, n.min(n_max))));
    }
    match oracle.cg(n_max) {
        Ok(enumerated) => {
            checks.push(Check::from_mismatch(
                "recursion = enumeration",
                format!("all g, n <= {n_max}"),
                first_table_difference(&recursion, &enumerated),
            ));
            let bad = (0..=n_max).find(|&n| enumerated.column_sum(n) != arith::double_factorial_odd(n as u64));
            checks.push(Check::from_mismatch(
                "enumerated totals = (2n-1)!!",
                format!("n <= {n_max}"),
                bad.map(|n| format!("n={n}: {}", enumerated.column_sum(n))),
            ));
            let bad = (0..=n_max).flat_map(|n| (0..=n_max / 2).map(move |g| (g, n))).find(|&(g, n)| {
                enumerated.get(g, n).is_zero() != (2 * g > n)
            });
            checks.push(Check::from_mismatch(
                "c_g(n) = 0 exactly when 2g > n",
                format!("n <= {n_max}"),
                bad.map(|(g, n)| format!("g={g}, n={n}: {}", enumerated.get(g, n))),
            ));
        }
        Err(e) => checks.push(Check::from_error("recursion = enumeration", e)),
    }

    let big = recurrences::cg_table(15, 30);
    let bad = (0..=30).find(|&n| big.column_sum(n) != arith::double_factorial_odd(n as u64));
    checks.push(Check::from_mismatch(
        "recursion totals = (2n-1)!!",
        "n <= 30",
        bad.map(|n| format!("n={n}: {}", big.column_sum(n))),
    ));

    let table = recurrences::cg_table(3, 40);
    let mut bad = None;
    'outer: for g in 1..=3 {
        for n in 2 * g..=40 {
            let mut closed = recurrences::cg_closed_form(g, n).expect("valid range");
            if opts.inject_fault && g == 3 && n == 40 {
                closed = bump(&closed);
            }
            if &closed != table.get(g, n) {
                bad = Some(format!("g={g}, n={n}: {closed} vs {}", table.get(g, n)));
                break 'outer;
            }
        }
    }
    checks.push(Check::from_mismatch("closed forms g = 1, 2, 3", "n <= 40", bad));

    let at_2g = recurrences::cg_table(10, 20);
    let bad = (0..=10).find(|&g| recurrences::cg_at_2g(g) != *at_2g.get(g, 2 * g));
    checks.push(Check::from_mismatch(
        "c_g(2g) = (4g)!/(4^g (2g+1)!)",
        "g <= 10",
        bad.map(|g| format!("g={g}: {} vs {}", recurrences::cg_at_2g(g), at_2g.get(g, 2 * g))),
    ));
    checks.push(Check::from_mismatch(
        "EGF of c_g(2g)",
        "to x^20",
        first_series_difference(&recurrences::cg_at_2g_egf(20), &recurrences::cg_at_2g_egf_closed(20)),
    ));
    checks
}

fn hz_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    let n_max = opts.hz_n_max;
    let lhs = recurrences::hz_polys(n_max);
    let mut rhs_rows: Vec<ExactPoly> = recurrences::hz_rhs(n_max).rows().to_vec();
    if opts.inject_fault {
        let last = rhs_rows.len() - 1;
        rhs_rows[last] = &rhs_rows[last] + &ExactPoly::monomial(arith::rat(1, 3), 1);
    }
    let bad = (0..=n_max).find_map(|n| first_poly_difference(lhs.get(n), &rhs_rows[n]).map(|d| format!("n={n} {d}")));
    checks.push(Check::from_mismatch("recursion = exp/log expansion", format!("n <= {n_max}"), bad));

    let bad = (0..=n_max).find(|&n| !lhs.get(n).coeff(0).is_zero() || lhs.get(n).degree() != Some(n + 1));
    checks.push(Check::from_mismatch(
        "p(n,0) = 0 and deg p(n,x) = n+1",
        format!("n <= {n_max}"),
        bad.map(|n| format!("n={n}: {}", lhs.get(n))),
    ));

    let n_oracle = opts.oracle_n_max.min(8);
    match Oracle::new(opts.caps).cg(n_oracle) {
        Ok(t) => {
            let mut bad = None;
            'outer: for n in 0..=n_oracle {
                for big_n in 0..=8i64 {
                    let x = arith::rat_int(big_n);
                    let left = lhs.get(n).eval(&x) * Rational::from_integer(arith::double_factorial_odd(n as u64));
                    let right: Integer = (0..=n / 2)
                        .map(|g| t.get(g, n) * Integer::from(big_n).pow((n + 1 - 2 * g) as u32))
                        .sum();
                    if left != Rational::from_integer(right.clone()) {
                        bad = Some(format!("n={n}, N={big_n}: {} vs {right}", arith::format_rational(&left)));
                        break 'outer;
                    }
                }
            }
            checks.push(Check::from_mismatch(
                "p(n,N)(2n-1)!! = sum_g c_g(n) N^(n+1-2g)",
                format!("n <= {n_oracle}, N <= 8, enumerated c_g(n)"),
                bad,
            ));
        }
        Err(e) => checks.push(Check::from_error("p(n,N)(2n-1)!! = sum_g c_g(n) N^(n+1-2g)", e)),
    }
    checks
}

/// Reference values of P_1, …, P_5.
pub fn golden_pg(g: usize) -> Option<ExactPoly> {
    let (c, k, inner): (i64, usize, &[i64]) = match g {
        1 => (1, 2, &[1]),
        2 => (21, 4, &[1, 1]),
        3 => (11, 6, &[135, 558, 158]),
        4 => (143, 8, &[1575, 13689, 18378, 2339]),
        5 => (88179, 10, &[675, 9660, 28764, 18908, 1354]),
        _ => return None,
    };
    Some(ExactPoly::from_integers(inner).shift_up(k).scale(&arith::rat_int(c)))
}

fn theorem3_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    let g_max = opts.g_max.max(1);
    let chain = match theorem::pg_pipeline(g_max) {
        Ok(c) => c,
        Err(e) => return vec![Check::from_error("pipeline", e)],
    };
    checks.push(Check::new(
        "pipeline invariants",
        true,
        format!("P_1..P_{g_max}: integral, deg <= 3g-1, divisible by z^(2g), P(1/4) != 0, R(0) = c_g(2g)"),
    ));
    for rec in &chain {
        if let Some(mut golden) = golden_pg(rec.g) {
            if opts.inject_fault && rec.g == 2 {
                golden = &golden + &ExactPoly::monomial(arith::rat_int(1), 5);
            }
            checks.push(Check::from_mismatch(
                format!("P_{} = reference value", rec.g),
                golden.to_string(),
                first_poly_difference(&rec.p, &golden),
            ));
        }
    }
    for rec in &chain {
        match theorem::pg_direct(rec.g) {
            Ok(direct) => checks.push(Check::from_mismatch(
                format!("direct P_{} = pipeline P_{}", rec.g, rec.g),
                "series product to order 3g+10",
                first_poly_difference(&direct, &rec.p),
            )),
            Err(e) => checks.push(Check::from_error(format!("direct P_{}", rec.g), e)),
        }
    }
    for g in 1..=g_max.min(5) {
        let r = genfunc::ode_residual(g, 15);
        checks.push(Check::from_mismatch(
            format!("differential equation residual g={g}"),
            "order 15",
            first_series_difference(&r, &ExactSeries::zero(15)),
        ));
    }
    for g in 1..=g_max.min(5) {
        match genfunc::cg_series_from_closed_form(g, 25) {
            Ok(s) => checks.push(Check::from_mismatch(
                format!("closed-form series g={g}"),
                "order 25",
                first_series_difference(&s, &genfunc::cg_series(g, 25)),
            )),
            Err(e) => checks.push(Check::from_error(format!("closed-form series g={g}"), e)),
        }
    }
    for rec in &chain {
        let degree = rec.p.degree().unwrap_or(0);
        let positive = rec.p.coeffs().iter().all(|c| !c.is_negative());
        checks.push(
            Check::new(
                format!("P_{} has degree 3g-1 and nonnegative coefficients", rec.g),
                positive && degree == 3 * rec.g - 1,
                format!("degree {degree}, nonnegative {positive}"),
            )
            .observation(),
        );
    }
    checks
}

fn shapes_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    let oracle = Oracle::new(opts.caps);
    let n_c = opts.shapes_n_max;
    let n_s = opts.shapes_n_max.saturating_sub(1);
    let (cm, mut sm) = match (oracle.cg_onechords(n_c), oracle.shapes(n_s)) {
        (Ok(c), Ok(s)) => (c, s),
        (Err(e), _) | (_, Err(e)) => return vec![Check::from_error("enumeration", e)],
    };
    if opts.inject_fault {
        sm = corrupt_one_chord_cell(&sm);
    }
    for g in 0..=n_c / 2 {
        match genfunc::sg_bivariate(g, (n_s, n_s)) {
            Ok(s) => checks.push(Check::from_mismatch(
                format!("S_{g}(z,u) = enumerated shapes"),
                format!("n <= {n_s}, all m"),
                bi_against_table(&s, &sm, g, n_s),
            )),
            Err(e) => checks.push(Check::from_error(format!("S_{g}(z,u)"), e)),
        }
        match genfunc::cg_bivariate(g, (n_c, n_c)) {
            Ok(c) => checks.push(Check::from_mismatch(
                format!("C_{g}(x,y) = enumerated diagrams"),
                format!("n <= {n_c}, all m"),
                bi_against_table(&c, &cm, g, n_c),
            )),
            Err(e) => checks.push(Check::from_error(format!("C_{g}(x,y)"), e)),
        }
    }
    for g in 0..=2 {
        let inflated = genfunc::sg_bivariate(g, (8, 8)).and_then(|s| genfunc::inflate_stacks(&s));
        let direct = genfunc::cg_bivariate(g, (8, 8));
        match (inflated, direct) {
            (Ok(a), Ok(b)) => checks.push(Check::from_mismatch(
                format!("S_{g}(x/(1-x), y) = C_{g}(x,y)"),
                "orders (8,8)",
                first_bi_difference(&a, &b),
            )),
            (Err(e), _) | (_, Err(e)) => checks.push(Check::from_error(format!("stack inflation g={g}"), e)),
        }
        match genfunc::pde_residual(g, (10, 10)) {
            Ok(r) => checks.push(Check::from_mismatch(
                format!("1-chord PDE residual g={g}"),
                "orders (10,10)",
                first_bi_difference(&r, &BiSeries::zero((10, 10))),
            )),
            Err(e) => checks.push(Check::from_error(format!("PDE g={g}"), e)),
        }
    }
    checks.push(Check::from_mismatch(
        "(m+1)c(n+1,m+1) = (m+1)c(n,m+1) + (2n+1-m)c(n,m)",
        format!("enumerated, n <= {n_c}"),
        genfunc::one_chord_recursion_failure(&cm).map(|(g, n, m)| format!("g={g}, n={n}, m={m}")),
    ));
    let mut bad = None;
    for g in 0..=sm.g_max() {
        for n in 0..=n_s {
            for m in 0..=n {
                if sm.get_m(g, n, m) > cm.get_m(g, n, m) {
                    bad.get_or_insert(format!("g={g}, n={n}, m={m}"));
                }
            }
        }
    }
    checks.push(Check::from_mismatch("s_g(n,m) <= c_g(n,m)", format!("n <= {n_s}"), bad));
    checks
}

/// A copy of a table refined by 1-chords with c(1, 2, 0) raised by one.
fn corrupt_one_chord_cell(t: &GenusTable) -> GenusTable {
    let mut out = GenusTable::with_one_chords(t.class(), t.g_max(), t.n_max());
    for g in 0..=t.g_max() {
        for n in 0..=t.n_max() {
            for m in 0..=n {
                let mut v = t.get_m(g, n, m);
                if (g, n, m) == (1, 2, 0) {
                    v += 1u32;
                }
                if !v.is_zero() {
                    out.add_m(g, n, m, v);
                }
            }
        }
    }
    out
}

fn mm_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    let oracle = Oracle::new(opts.caps);
    let n_max = opts.mm_n_max;
    let shapes = oracle.shapes(5);
    for sigma in 1..=3 {
        let mut enumerated = match oracle.macromolecular(n_max, sigma) {
            Ok(t) => t,
            Err(e) => {
                checks.push(Check::from_error(format!("enumeration sigma={sigma}"), e));
                continue;
            }
        };
        if opts.inject_fault && sigma == 2 {
            let n = n_max.min(8);
            enumerated.set(1, n, bump(enumerated.get(1, n)));
        }
        for g in 0..=2 {
            let series = match genfunc::dg_sigma_series(g, sigma, n_max) {
                Ok(s) => s,
                Err(e) => {
                    checks.push(Check::from_error(format!("D_{g},{sigma}"), e));
                    continue;
                }
            };
            let row = ExactSeries::from_big_integers((0..=n_max).map(|n| enumerated.get(g, n).clone()), n_max);
            let check = Check::from_mismatch(
                format!("D_{g},{sigma}(z) = enumerated"),
                format!("n <= {n_max}"),
                first_series_difference(&series, &row),
            );
            // the formula is only claimed for g >= 1
            checks.push(if g == 0 { check.observation() } else { check });
            if g == 0 {
                continue;
            }
            let fiber_order = n_max.min(10);
            if let Ok(shapes) = &shapes {
                match genfunc::dg_fiber_sum(shapes, g, sigma, fiber_order) {
                    Ok(f) => checks.push(Check::from_mismatch(
                        format!("fiber sum = D_{g},{sigma}(z)"),
                        format!("n <= {fiber_order}"),
                        first_series_difference(&f, &series.truncate(fiber_order)),
                    )),
                    Err(e) => checks.push(Check::from_error(format!("fiber sum g={g} sigma={sigma}"), e)),
                }
            }
            if let Ok(long) = genfunc::dg_sigma_series(g, sigma, 20) {
                let ok = long.coeffs().iter().all(|c| arith::is_integral(c) && !c.is_negative());
                checks.push(Check::new(
                    format!("D_{g},{sigma} coefficients are counts"),
                    ok,
                    "nonnegative integers to order 20",
                ));
            }
        }
    }
    if let Err(e) = shapes {
        checks.push(Check::from_error("shape enumeration", e));
    }
    checks
}

/// 1.9685 ± 5·10⁻⁴, the reference growth rate for σ = 2 and its tolerance.
pub fn reference_gamma2() -> (Rational, Rational) {
    (arith::rat(19685, 10000), arith::rat(5, 10000))
}

fn asymptotics_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    let width = asymptotics::default_width();
    let one_percent = arith::rat(1, 100);
    for sigma in 1..=3 {
        let iso = match asymptotics::dominant_singularity(sigma, &width) {
            Ok(iso) => iso,
            Err(e) => {
                checks.push(Check::from_error(format!("root isolation sigma={sigma}"), e));
                continue;
            }
        };
        let growth = iso.growth_rate();
        checks.push(Check::new(
            format!("rho_{sigma} isolated"),
            iso.sign_change && iso.roots_below == 0,
            format!("rho in {}, 1/rho in {}", iso.interval, growth),
        ));
        if sigma == 2 {
            let (reference, tol) = reference_gamma2();
            checks.push(
                Check::new(
                    "1/rho_2 = 1.9685 +- 5e-4",
                    growth.within(&reference, &tol),
                    format!("1/rho_2 in {growth}"),
                )
                .observation(),
            );
        }
        if sigma <= 2 {
            match asymptotics::empirical_growth(1, sigma, opts.growth_n) {
                Ok(emp) => {
                    let mut ratio = emp.ratio.clone();
                    if opts.inject_fault {
                        ratio *= arith::rat(11, 10);
                    }
                    checks.push(Check::new(
                        format!("d_1,{sigma}(n+1)/d_1,{sigma}(n) -> 1/rho_{sigma}"),
                        asymptotics::relative_agreement(&ratio, &growth, &one_percent),
                        format!("n={}: ratio {} within 1%", emp.n, arith::to_decimal(&ratio, 6)),
                    ));
                }
                Err(e) => checks.push(Check::from_error(format!("empirical growth sigma={sigma}"), e)),
            }
        }
    }
    let catalan = genfunc::catalan_series(opts.growth_n + 1);
    if let Some(emp) = asymptotics::coefficient_ratio(&catalan, opts.growth_n) {
        checks.push(Check::new(
            "Catalan ratio -> 4",
            asymptotics::relative_agreement(&emp.ratio, &Interval::point(arith::rat_int(4)), &one_percent),
            format!("n={}: {}", emp.n, arith::to_decimal(&emp.ratio, 6)),
        ));
    }
    for g in 1..=2 {
        let errs: Result<Vec<Interval>> = [250, 500, 1000]
            .iter()
            .map(|&n| asymptotics::cg_constant_check(g, n).map(|c| c.relative_error))
            .collect();
        match errs {
            Ok(errs) => {
                let mags: Vec<Rational> = errs.iter().map(|e| e.lo.abs().max(e.hi.abs())).collect();
                checks.push(Check::new(
                    format!("c_{g}(n) constant error decreases"),
                    mags.windows(2).all(|w| w[0] > w[1]),
                    format!(
                        "n = 250, 500, 1000: {}",
                        mags.iter().map(|m| arith::to_decimal(m, 5)).collect::<Vec<_>>().join(", ")
                    ),
                ));
            }
            Err(e) => checks.push(Check::from_error(format!("constant g={g}"), e)),
        }
    }
    match asymptotics::cg_constant_check(1, 1000) {
        Ok(c) => checks.push(Check::new(
            "c_1(1000)/(n^(3/2)4^n) within 2% of 1/(12 sqrt(pi))",
            c.passes(&arith::rat(2, 100)),
            format!("relative error in {}", c.relative_error),
        )),
        Err(e) => checks.push(Check::from_error("constant g=1", e)),
    }
    checks
}
