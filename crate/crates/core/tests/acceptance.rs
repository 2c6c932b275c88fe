//! Acceptance suite. Each test prints one line:
//! `criterion <n>: PASS|FAIL <detail>` and then asserts the same outcome.

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, FileFailurePersistence, RngSeed, TestRunner};
use umbral_core::families::{
    bernoulli_number, bernoulli_poly, bernoulli_table, carlitz_hermite, euler_number, euler_poly, euler_table,
    hermite, u, v, x, zeilberger_hermite,
};
use umbral_core::stochastic::{
    exact_moment, ks_check, ks_check_against, mc_moment, quad_bernoulli_even, Cdf, Complex64,
};
use umbral_core::umbrae::scalar_moment;
use umbral_core::{
    expect, verify, verify_all_with, Bounds, Construction, ExactScalar, IdentityId, MultiPoly, Path, SamplerSpec,
    Umbra, UmbralExpr, UmbralSymbol, Var,
};

const SEED: u64 = 42;
const MC_COUNT: usize = 1_000_000;
const KS_COUNT: usize = 100_000;
const SE_GATE: f64 = 5.0;
const QUAD_TOL: f64 = 1e-8;

fn report(criterion: &str, ok: bool, detail: &str) {
    println!("criterion {criterion}: {} {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn within(start: Instant, limit_s: u64) -> (bool, Duration) {
    let e = start.elapsed();
    (e < Duration::from_secs(limit_s), e)
}

fn r(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

#[test]
fn criterion_1_first_values() {
    let start = Instant::now();
    let b = [r(1, 1), r(-1, 2), r(1, 6), r(0, 1), r(-1, 30)];
    let e = [r(1, 1), r(0, 1), r(-1, 1), r(0, 1), r(5, 1)];
    let xp = MultiPoly::var(x());
    let b2 = &(&xp.pow(2) - &xp) + &MultiPoly::ratio(1, 6);
    let e3 = &(&xp.pow(3) - &xp.pow(2).scale(&r(3, 2))) + &MultiPoly::ratio(1, 4);
    let mut bad = Vec::new();
    for path in [Path::Oracle, Path::Umbral] {
        for n in 0..=4u32 {
            if bernoulli_number(n, path) != b[n as usize] {
                bad.push(format!("B_{n} via {path}"));
            }
            if euler_number(n, path) != e[n as usize] {
                bad.push(format!("E_{n} via {path}"));
            }
        }
        if bernoulli_poly(2, path) != b2 {
            bad.push(format!("B_2(x) via {path}"));
        }
        if euler_poly(3, path) != e3 {
            bad.push(format!("E_3(x) via {path}"));
        }
    }
    let (fast, t) = within(start, 1);
    report(
        "1",
        bad.is_empty() && fast,
        &format!("first values on both paths, mismatches {bad:?}, {t:.2?} (limit 1 s)"),
    );
}

#[test]
fn criterion_2_dual_path_equality() {
    let start = Instant::now();
    let mut bad = Vec::new();
    if bernoulli_table(40, Path::Oracle) != bernoulli_table(40, Path::Umbral) {
        bad.push("Bernoulli numbers".to_string());
    }
    if euler_table(40, Path::Oracle) != euler_table(40, Path::Umbral) {
        bad.push("Euler numbers".to_string());
    }
    for n in 0..=40 {
        if bernoulli_poly(n, Path::Oracle) != bernoulli_poly(n, Path::Umbral) {
            bad.push(format!("B_{n}(x)"));
        }
        if euler_poly(n, Path::Oracle) != euler_poly(n, Path::Umbral) {
            bad.push(format!("E_{n}(x)"));
        }
    }
    for n in 0..=30 {
        if hermite(n, Path::Oracle) != hermite(n, Path::Umbral) {
            bad.push(format!("H_{n}"));
        }
    }
    for m in 0..=12 {
        for n in 0..=12 {
            if carlitz_hermite(m, n, Path::Oracle) != carlitz_hermite(m, n, Path::Umbral) {
                bad.push(format!("Carlitz ({m},{n})"));
            }
            if zeilberger_hermite(m, n, Path::Oracle) != zeilberger_hermite(m, n, Path::Umbral) {
                bad.push(format!("Zeilberger ({m},{n})"));
            }
        }
    }
    let (fast, t) = within(start, 30);
    report(
        "2",
        bad.is_empty() && fast,
        &format!("oracle = umbral for B, E (n <= 40), H (n <= 30), two-index (<= 12); mismatches {bad:?}, {t:.2?} (limit 30 s)"),
    );
}

#[test]
fn criterion_3_identity_suite_full_profile() {
    let start = Instant::now();
    let bounds = Bounds::full();
    let reports = verify_all_with(&bounds).expect("valid bounds");
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.id.name()).collect();
    let gessel = reports.iter().find(|r| r.id == IdentityId::Gessel72).unwrap();
    let gessel_witness_fails = gessel.witness("excluded index").is_some_and(|w| !w.held);
    let mult = bounds.multipliers == [2, 3, 5];
    let ranges = bounds.index == 30 && bounds.pair_index == 12 && bounds.series_order == 24 && bounds.quintuple_order >= 6;
    let (fast, t) = within(start, 60);
    report(
        "3",
        failed.is_empty() && gessel_witness_fails && mult && ranges && fast,
        &format!(
            "{} identities at index <= 30, pair <= 12, order 24, quintuple {}; failed {failed:?}; GESSEL_72 n=1 witness fails: {gessel_witness_fails}; {t:.2?} (limit 60 s)",
            reports.len(),
            bounds.quintuple_order
        ),
    );
}

/// The registry's n = 1 witness for REFLECT_B is required to fail.
#[test]
fn criterion_3_reflect_b_witness_fails_at_n1() {
    let rep = verify(IdentityId::ReflectB, &Bounds::full()).unwrap();
    let w = rep.witness("excluded index").expect("witness present");
    // (B+1)^1 = E(iL + 1/2) = 1/2 and (-1)^1 B_1 = 1/2
    let l = UmbralSymbol::scalar(Umbra::Logistic, 0);
    let lhs = expect(&UmbralExpr::new(&l.poly().scale(&ExactScalar::i()) + &MultiPoly::ratio(1, 2)).bind(&l)).unwrap();
    let rhs = MultiPoly::constant(-bernoulli_number(1, Path::Oracle));
    report(
        "3 (REFLECT_B witness)",
        !w.held,
        &format!("REFLECT_B at n=1: lhs = {lhs}, rhs = {rhs}, witness held = {}", w.held),
    );
}

#[test]
fn criterion_4_hermite_master_misprint() {
    let rep = verify(IdentityId::HermiteMaster, &Bounds::full()).unwrap();
    let printed = rep.witness("denominator 1 + 4y^2").expect("witness present");
    report(
        "4",
        rep.passed() && !printed.held && printed.params == "order 2",
        &format!(
            "1+4y form passes at order 24: {}; 1+4y^2 form fails at {}: {}",
            rep.passed(),
            printed.params,
            !printed.held
        ),
    );
}

#[test]
fn criterion_5_stochastic() {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut ok = true;
    let l = SamplerSpec::of(Construction::LogUniformRatio, SEED);
    let l0 = SamplerSpec::of(Construction::LogAbsCauchy, SEED);
    let half = ExactScalar::ratio(-1, 2);
    for n in [2, 3, 4] {
        let exact = bernoulli_number(n, Path::Oracle).to_f64_parts().0;
        assert_eq!(exact_moment(l.target, &half, n), bernoulli_number(n, Path::Oracle));
        let s = mc_moment(&l, -0.5, n, MC_COUNT).unwrap();
        let pass = s.within(Complex64::new(exact, 0.0), SE_GATE);
        ok &= pass;
        lines.push(format!("B_{n} z={:.2}", s.z_score(Complex64::new(exact, 0.0))));
    }
    // E_2 = 2^2 E (i L0)^2
    let s = mc_moment(&l0, 0.0, 2, MC_COUNT).unwrap();
    let target = Complex64::new(euler_number(2, Path::Oracle).to_f64_parts().0 / 4.0, 0.0);
    ok &= s.within(target, SE_GATE);
    lines.push(format!("E_2 z={:.2}", s.z_score(target)));
    for c in [
        Construction::LogUniformRatio,
        Construction::LogExpRatio,
        Construction::LogAbsCauchy,
        Construction::LogAbsGaussRatio,
        Construction::AverageL0L,
    ] {
        let k = ks_check(&SamplerSpec::of(c, SEED), KS_COUNT).unwrap();
        ok &= k.pass;
        lines.push(format!("KS {c} {:.3}", k.scaled));
    }
    let neg = ks_check_against(&l, KS_COUNT, Cdf::HyperbolicSecant).unwrap();
    ok &= !neg.pass;
    lines.push(format!("wrong-CDF control {:.3} rejected={}", neg.scaled, !neg.pass));
    let (fast, t) = within(start, 30);
    report("5", ok && fast, &format!("{}; {t:.2?} (limit 30 s)", lines.join(", ")));
}

#[test]
fn criterion_6_quadrature() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        let exact = bernoulli_number(2 * n, Path::Oracle).to_f64_parts().0;
        let q = quad_bernoulli_even(n).unwrap();
        worst = worst.max((q - exact).abs());
    }
    let (fast, t) = within(start, 5);
    report(
        "6",
        worst < QUAD_TOL && fast,
        &format!("B_2..B_10 by quadrature, worst error {worst:.2e} (tolerance 1e-8), {t:.2?} (limit 5 s)"),
    );
}

fn small_poly(var: Var) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..5, -9i64..=9, 1i64..=5), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (e, a, b)| {
            &acc + &MultiPoly::var(var).pow(e).scale(&ExactScalar::ratio(a, b))
        })
    })
}

#[test]
fn criterion_7_property_suites() {
    let config = Config {
        cases: 48,
        rng_seed: RngSeed::Fixed(7),
        failure_persistence: Some(Box::new(FileFailurePersistence::Off)),
        ..Config::default()
    };
    let a = Var::new("a");
    let mut results = Vec::new();

    let mut runner = TestRunner::new(config.clone());
    let linearity = runner.run(&(small_poly(a), small_poly(a), -5i64..=5, -5i64..=5), |(p, q, s, t)| {
        let l = UmbralSymbol::scalar(Umbra::Logistic, 0);
        let sub = |f: &MultiPoly| f.substitute(a, &l.poly());
        let e = |f: MultiPoly| expect(&UmbralExpr::new(f).bind(&l)).unwrap();
        let (s, t) = (ExactScalar::from_int(s), ExactScalar::from_int(t));
        let lhs = e(&sub(&p).scale(&s) + &sub(&q).scale(&t));
        prop_assert_eq!(lhs, &e(sub(&p)).scale(&s) + &e(sub(&q)).scale(&t));
        Ok(())
    });
    results.push(("linearity", linearity.is_ok()));

    let mut runner = TestRunner::new(config.clone());
    let independence = runner.run(&(small_poly(a), small_poly(a), 0usize..3), |(p, q, which)| {
        let umbra = [Umbra::Logistic, Umbra::HyperbolicSecant, Umbra::GaussM][which];
        let (s0, s1) = (UmbralSymbol::scalar(umbra, 0), UmbralSymbol::scalar(umbra, 1));
        let p0 = p.substitute(a, &s0.poly());
        let q1 = q.substitute(a, &s1.poly());
        let joint = expect(&UmbralExpr::new(&p0 * &q1).bind(&s0).bind(&s1)).unwrap();
        let sep = &expect(&UmbralExpr::new(p0).bind(&s0)).unwrap() * &expect(&UmbralExpr::new(q1).bind(&s1)).unwrap();
        prop_assert_eq!(joint, sep);
        Ok(())
    });
    results.push(("independence factorization", independence.is_ok()));

    let mut runner = TestRunner::new(config.clone());
    let odd = runner.run(&(0u32..32, 0usize..3), |(k, which)| {
        let umbra = [Umbra::Logistic, Umbra::HyperbolicSecant, Umbra::GaussM][which];
        prop_assert_eq!(scalar_moment(umbra, 2 * k + 1), ExactScalar::from_int(0));
        Ok(())
    });
    results.push(("odd moments vanish", odd.is_ok()));

    let mut runner = TestRunner::new(config.clone());
    let symmetry = runner.run(&(0u32..12, 0u32..12), |(m, n)| {
        prop_assert_eq!(zeilberger_hermite(m, n, Path::Umbral), zeilberger_hermite(n, m, Path::Umbral));
        let swapped = carlitz_hermite(n, m, Path::Umbral).rename(&[(u(), v()), (v(), u())]);
        prop_assert_eq!(carlitz_hermite(m, n, Path::Umbral), swapped);
        Ok(())
    });
    results.push(("Zeilberger/Carlitz symmetry", symmetry.is_ok()));

    let mut runner = TestRunner::new(config);
    let appell = runner.run(&(1u32..30), |n| {
        let k = ExactScalar::from_int(n as i64);
        prop_assert_eq!(
            bernoulli_poly(n, Path::Umbral).derivative(x()),
            bernoulli_poly(n - 1, Path::Umbral).scale(&k)
        );
        prop_assert_eq!(euler_poly(n, Path::Umbral).derivative(x()), euler_poly(n - 1, Path::Umbral).scale(&k));
        Ok(())
    });
    results.push(("Appell derivative", appell.is_ok()));

    let ok = results.iter().all(|(_, p)| *p);
    let detail = results.iter().map(|(name, p)| format!("{name}={p}")).collect::<Vec<_>>().join(", ");
    report("7", ok, &format!("{detail} (48 cases each, seed 7)"));
}
