//! Index identities for Bernoulli numbers and polynomials.

use num_traits::Zero;

use super::{Checker, IdentityId, IdentityReport};
use crate::arith::{ExactScalar, MultiPoly, Var};
use crate::expectation::{expect, UmbralExpr, UmbralSymbol};
use crate::families::{bernoulli_poly, bernoulli_table, chen_k_from, power_sum, x, Path, PowerSumPath};
use crate::umbrae::Umbra;
use crate::util::{binomial_scalar, sign};

fn c(s: ExactScalar) -> MultiPoly {
    MultiPoly::constant(s)
}

/// `E (iL + shift)^n` for `n = 0..=n_max`, with `shift` constant.
fn logistic_powers(shift: ExactScalar, n_max: u32) -> Vec<MultiPoly> {
    let l = UmbralSymbol::scalar(Umbra::Logistic, 0);
    let base = &l.poly().scale(&ExactScalar::i()) + &c(shift);
    let mut power = MultiPoly::one();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for _ in 0..=n_max {
        out.push(expect(&UmbralExpr::new(power.clone()).bind(&l)).expect("bound"));
        power = &power * &base;
    }
    out
}

fn shifted_logistic_check(id: IdentityId, n_max: u32, signed: bool) -> IdentityReport {
    let lhs = logistic_powers(ExactScalar::ratio(1, 2), n_max.max(1));
    let b = bernoulli_table(n_max.max(1), Path::Oracle);
    let rhs = |n: u32| {
        let v = if signed { &sign(n) * &b[n as usize] } else { b[n as usize].clone() };
        c(v)
    };
    let mut ck = Checker::default();
    for n in (0..=n_max).filter(|&n| n != 1) {
        ck.check(|| format!("n={n}"), lhs[n as usize].clone(), rhs(n));
    }
    ck.witness("excluded index", "n=1".into(), false, &lhs[1], &rhs(1));
    ck.finish(id, format!("0 <= n <= {n_max}, n != 1"))
}

pub(super) fn gessel_72(n_max: u32) -> IdentityReport {
    shifted_logistic_check(IdentityId::Gessel72, n_max, false)
}

pub(super) fn reflect_b(n_max: u32) -> IdentityReport {
    shifted_logistic_check(IdentityId::ReflectB, n_max, true)
}

pub(super) fn kaneko(n_max: u32) -> IdentityReport {
    let b = bernoulli_table(2 * n_max + 1, Path::Oracle);
    let mut ck = Checker::default();
    for n in 0..=n_max {
        let s = (0..=n + 1).fold(ExactScalar::zero(), |acc, i| {
            let t = &binomial_scalar(n + 1, i) * &ExactScalar::from_int((n + i + 1) as i64);
            &acc + &(&t * &b[(n + i) as usize])
        });
        ck.check(|| format!("n={n}, route=oracle"), c(s), MultiPoly::zero());
    }
    // (n+1) E[(iL - 1/2)^n (iL + 1/2)^n (2 iL)] = 0 with a single logistic copy
    let l = UmbralSymbol::scalar(Umbra::Logistic, 0);
    let il = l.poly().scale(&ExactScalar::i());
    let minus = &il - &MultiPoly::ratio(1, 2);
    let plus = &il + &MultiPoly::ratio(1, 2);
    let product = &minus * &plus;
    let mut acc = il.scale(&ExactScalar::from_int(2));
    for n in 0..=n_max {
        let e = expect(&UmbralExpr::new(acc.clone()).bind(&l)).expect("bound");
        ck.check(
            || format!("n={n}, route=umbral"),
            e.scale(&ExactScalar::from_int(n as i64 + 1)),
            MultiPoly::zero(),
        );
        acc = &acc * &product;
    }
    ck.finish(IdentityId::Kaneko, format!("0 <= n <= {n_max}"))
}

fn momiyama_side(b: &[ExactScalar], m: u32, n: u32, upper: u32) -> ExactScalar {
    (0..=upper).fold(ExactScalar::zero(), |acc, k| {
        let t = &binomial_scalar(m + 1, k) * &ExactScalar::from_int((n + k + 1) as i64);
        &acc + &(&t * &b[(n + k) as usize])
    })
}

pub(super) fn momiyama(p: u32) -> IdentityReport {
    let oracle = bernoulli_table(2 * p + 1, Path::Oracle);
    let umbral = bernoulli_table(2 * p + 1, Path::Umbral);
    // sums running to m and n
    let printed = |m: u32, n: u32| {
        let l = &sign(m) * &momiyama_side(&oracle, m, n, m);
        let r = &sign(n + 1) * &momiyama_side(&umbral, n, m, n);
        (l, r)
    };
    // sums running to m+1 and n+1
    let full = |m: u32, n: u32| {
        let l = &sign(m) * &momiyama_side(&oracle, m, n, m + 1);
        let r = &sign(n + 1) * &momiyama_side(&umbral, n, m, n + 1);
        (l, r)
    };
    let mut ck = Checker::default();
    for m in 0..=p {
        for n in 0..=p {
            if (m, n) == (0, 0) {
                continue;
            }
            let (l, r) = printed(m, n);
            ck.check(|| format!("m={m}, n={n}"), c(l), c(r));
        }
    }
    let (l, r) = printed(0, 0);
    ck.witness("excluded corner", "m=0, n=0".into(), false, &c(l), &c(r));
    let all_full = (0..=p).all(|m| (0..=p).all(|n| {
        let (l, r) = full(m, n);
        l == r
    }));
    ck.witness_outcome(
        "sums to m+1 and n+1",
        format!("0 <= m, n <= {p}"),
        true,
        all_full,
    );
    ck.finish(IdentityId::Momiyama, format!("0 <= m, n <= {p}, (m, n) != (0, 0)"))
}

fn poly_tables(n_max: u32) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
    let oracle = (0..=n_max).map(|n| bernoulli_poly(n, Path::Oracle)).collect();
    let umbral = (0..=n_max).map(|n| bernoulli_poly(n, Path::Umbral)).collect();
    (oracle, umbral)
}

fn z() -> Var {
    Var::new("z")
}

fn y() -> Var {
    Var::new("y")
}

pub(super) fn b_integral(n_max: u32) -> IdentityReport {
    let n_max = n_max.max(2);
    let (oracle, umbral) = poly_tables(n_max + 1);
    let (xp, yp) = (MultiPoly::var(x()), MultiPoly::var(y()));
    let mut ck = Checker::default();
    for n in 2..=n_max {
        let integrand = oracle[n as usize].rename(&[(x(), z())]);
        let lhs = integrand.integrate(z(), &xp, &yp);
        let next = &umbral[n as usize + 1];
        let diff = &next.rename(&[(x(), y())]) - next;
        let rhs = diff.scale(&ExactScalar::ratio(1, n as i64 + 1));
        ck.check(|| format!("n={n}"), lhs, rhs);
    }
    ck.finish(IdentityId::BIntegral, format!("2 <= n <= {n_max}"))
}

pub(super) fn b_unit_interval(n_max: u32) -> IdentityReport {
    let (_, umbral) = poly_tables(n_max);
    let xp = MultiPoly::var(x());
    let upper = &xp + &MultiPoly::one();
    let mut ck = Checker::default();
    for n in 0..=n_max {
        let integrand = umbral[n as usize].rename(&[(x(), z())]);
        let lhs = integrand.integrate(z(), &xp, &upper);
        ck.check(|| format!("n={n}"), lhs, xp.pow(n));
    }
    ck.finish(IdentityId::BUnitInterval, format!("0 <= n <= {n_max}"))
}

pub(super) fn symm_binom(p: u32) -> IdentityReport {
    let oracle = bernoulli_table(2 * p, Path::Oracle);
    let umbral = bernoulli_table(2 * p, Path::Umbral);
    let side = |b: &[ExactScalar], m: u32, n: u32| {
        (0..=m).fold(ExactScalar::zero(), |acc, k| &acc + &(&binomial_scalar(m, k) * &b[(n + k) as usize]))
    };
    let mut ck = Checker::default();
    for m in 0..=p {
        for n in 0..=p {
            let lhs = side(&oracle, m, n);
            let rhs = &sign(m + n) * &side(&umbral, n, m);
            ck.check(|| format!("m={m}, n={n}"), c(lhs), c(rhs));
        }
    }
    ck.finish(IdentityId::SymmBinom, format!("0 <= m, n <= {p}"))
}

/// `K_0..=K_{n_max}` from the oracle table, cross-checked against the
/// umbral form `K_k = E (iL - 1/2)^{k+1} (iL + 1/2)^k`.
fn chen_constants(ck: &mut Checker, n_max: u32) -> Vec<ExactScalar> {
    let b = bernoulli_table(2 * n_max + 1, Path::Oracle);
    let k: Vec<ExactScalar> = (0..=n_max).map(|n| chen_k_from(&b, n)).collect();
    let l = UmbralSymbol::scalar(Umbra::Logistic, 0);
    let il = l.poly().scale(&ExactScalar::i());
    let minus = &il - &MultiPoly::ratio(1, 2);
    let plus = &il + &MultiPoly::ratio(1, 2);
    let step = &minus * &plus;
    let mut body = minus.clone();
    for (n, kn) in k.iter().enumerate() {
        let e = expect(&UmbralExpr::new(body.clone()).bind(&l)).expect("bound");
        ck.check(|| format!("K_{n} umbral form"), c(kn.clone()), e);
        body = &body * &step;
    }
    k
}

pub(super) fn chen_1(n_max: u32) -> IdentityReport {
    let mut ck = Checker::default();
    let k = chen_constants(&mut ck, n_max);
    let b = bernoulli_table(2 * n_max, Path::Umbral);
    for n in 1..=n_max {
        let lhs = (0..=n).fold(ExactScalar::zero(), |acc, j| {
            let w = &binomial_scalar(2 * n - j, j) * &ExactScalar::ratio(2 * n as i64, (2 * n - j) as i64);
            &acc + &(&w * &k[j as usize])
        });
        ck.check(|| format!("n={n}"), c(lhs), c(-b[2 * n as usize].clone()));
    }
    ck.finish(IdentityId::Chen1, format!("1 <= n <= {n_max}"))
}

pub(super) fn chen_2(n_max: u32) -> IdentityReport {
    let mut ck = Checker::default();
    let k = chen_constants(&mut ck, n_max);
    let b = bernoulli_table(2 * n_max, Path::Umbral);
    for n in 1..=n_max {
        let lhs = (0..n).fold(ExactScalar::zero(), |acc, j| {
            let w = &binomial_scalar(2 * n - j - 1, j) * &ExactScalar::ratio((2 * n - 1) as i64, (2 * n - j - 1) as i64);
            &acc + &(&w * &k[j as usize])
        });
        ck.check(|| format!("n={n}"), c(lhs), c(b[(2 * n - 1) as usize].clone()));
    }
    ck.finish(IdentityId::Chen2, format!("1 <= n <= {n_max}"))
}

pub(super) fn gessel_mult(n_max: u32, multipliers: &[u32]) -> IdentityReport {
    let oracle = bernoulli_table(n_max, Path::Oracle);
    let umbral = bernoulli_table(n_max, Path::Umbral);
    let mut ck = Checker::default();
    for &a in multipliers {
        let ai = ExactScalar::from_int(a as i64);
        let sums: Vec<ExactScalar> = (0..=n_max).map(|j| power_sum(j, a - 1, PowerSumPath::Direct)).collect();
        for n in 1..=n_max {
            let s = (0..n).fold(ExactScalar::zero(), |acc, k| {
                let t = &(&ai.pow(k) * &binomial_scalar(n, k)) * &umbral[k as usize];
                &acc + &(&t * &sums[(n - k) as usize])
            });
            let denom = &ai * &(&ExactScalar::from_int(1) - &ai.pow(n));
            let rhs = &s * &denom.inv().expect("a >= 2");
            ck.check(|| format!("a={a}, n={n}"), c(oracle[n as usize].clone()), c(rhs));
        }
    }
    let list = multipliers.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    ck.finish(IdentityId::GesselMult, format!("a in {{{list}}}, 1 <= n <= {n_max}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_logistic_witness_values() {
        // E (iL + 1/2) = 1/2 while B_1 = -1/2
        let p = logistic_powers(ExactScalar::ratio(1, 2), 2);
        assert_eq!(p[1], MultiPoly::ratio(1, 2));
        assert_eq!(p[2], MultiPoly::ratio(1, 6));
    }

    #[test]
    fn small_ranges_pass() {
        for r in [gessel_72(6), kaneko(5), momiyama(4), b_integral(5), symm_binom(4), chen_1(4), chen_2(4)] {
            assert!(r.passed(), "{:?}", r);
        }
        assert!(gessel_mult(6, &[2, 3]).passed());
    }

    #[test]
    fn momiyama_corner_fails() {
        let r = momiyama(3);
        let w = r.witness("excluded corner").unwrap();
        assert!(!w.held);
        assert!(r.witness("sums to m+1 and n+1").unwrap().held);
    }
}
