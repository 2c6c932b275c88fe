//! Index identities for Euler numbers and polynomials, and the links
//! between the Bernoulli and Euler families.

use num_traits::Zero;

use super::{Checker, IdentityId, IdentityReport};
use crate::arith::{ExactScalar, MultiPoly, Var};
use crate::families::{bernoulli_poly, euler_poly, euler_table, x, Path};
use crate::util::{binomial_scalar, sign};

fn table(n_max: u32, f: fn(u32, Path) -> MultiPoly, path: Path) -> Vec<MultiPoly> {
    (0..=n_max).map(|n| f(n, path)).collect()
}

fn y() -> Var {
    Var::new("y")
}

fn z() -> Var {
    Var::new("z")
}

fn two_pow_inv(n: u32) -> ExactScalar {
    ExactScalar::from_int(2).pow(n).inv().expect("nonzero")
}

pub(super) fn euler_reflect(n_max: u32) -> IdentityReport {
    let oracle = table(n_max, euler_poly, Path::Oracle);
    let umbral = table(n_max, euler_poly, Path::Umbral);
    let reflected = &MultiPoly::one() - &MultiPoly::var(x());
    let mut ck = Checker::default();
    for n in 0..=n_max {
        let lhs = oracle[n as usize].substitute(x(), &reflected);
        let rhs = umbral[n as usize].scale(&sign(n));
        ck.check(|| format!("n={n}"), lhs, rhs);
    }
    ck.finish(IdentityId::EulerReflect, format!("0 <= n <= {n_max}"))
}

pub(super) fn euler_shift(n_max: u32) -> IdentityReport {
    let oracle = table(n_max, euler_poly, Path::Oracle);
    let umbral = table(n_max, euler_poly, Path::Umbral);
    let shifted = &MultiPoly::var(x()) + &MultiPoly::one();
    let mut ck = Checker::default();
    for n in 0..=n_max {
        let lhs = (0..=n).fold(MultiPoly::zero(), |acc, r| {
            &acc + &oracle[r as usize].scale(&binomial_scalar(n, r))
        });
        let rhs = umbral[n as usize].substitute(x(), &shifted);
        ck.check(|| format!("n={n}"), lhs, rhs);
    }
    ck.finish(IdentityId::EulerShift, format!("0 <= n <= {n_max}"))
}

fn even_sum(e: &[ExactScalar], n: u32) -> ExactScalar {
    (0..=n).fold(ExactScalar::zero(), |acc, r| {
        &acc + &(&binomial_scalar(2 * n, 2 * r) * &e[2 * r as usize])
    })
}

pub(super) fn euler_even_sum(n_max: u32) -> IdentityReport {
    let oracle = euler_table(2 * n_max, Path::Oracle);
    let umbral = euler_table(2 * n_max, Path::Umbral);
    let mut ck = Checker::default();
    for n in 1..=n_max {
        ck.check(|| format!("n={n}, route=oracle"), MultiPoly::constant(even_sum(&oracle, n)), MultiPoly::zero());
        ck.check(|| format!("n={n}, route=umbral"), MultiPoly::constant(even_sum(&umbral, n)), MultiPoly::zero());
    }
    ck.witness(
        "excluded index",
        "n=0".into(),
        false,
        &MultiPoly::constant(even_sum(&oracle, 0)),
        &MultiPoly::zero(),
    );
    ck.finish(IdentityId::EulerEvenSum, format!("1 <= n <= {n_max}"))
}

pub(super) fn be_link_sum(n_max: u32) -> IdentityReport {
    let b_oracle = table(n_max, bernoulli_poly, Path::Oracle);
    let b_umbral = table(n_max, bernoulli_poly, Path::Umbral);
    let e_umbral = table(n_max, euler_poly, Path::Umbral);
    let (xp, yp) = (MultiPoly::var(x()), MultiPoly::var(y()));
    let midpoint = (&xp + &yp).scale(&ExactScalar::ratio(1, 2));
    let two_x = xp.scale(&ExactScalar::from_int(2));
    let mut ck = Checker::default();
    let mut special_holds = true;
    for n in 0..=n_max {
        let lhs = b_oracle[n as usize].substitute(x(), &midpoint);
        let convolve = |e_arg: &MultiPoly, b: &[MultiPoly]| {
            (0..=n).fold(MultiPoly::zero(), |acc, k| {
                let e = e_umbral[k as usize].substitute(x(), e_arg);
                let term = (&b[(n - k) as usize] * &e).scale(&binomial_scalar(n, k));
                &acc + &term
            })
            .scale(&two_pow_inv(n))
        };
        let rhs = convolve(&yp, &b_umbral);
        ck.check(|| format!("n={n}"), lhs, rhs);
        // B_n(x) = 2^-n sum binom(n,k) B_{n-k} E_k(2x): the y = x case with x -> 0 in B
        let constants: Vec<MultiPoly> = b_umbral.iter().map(|p| MultiPoly::constant(p.substitute(x(), &MultiPoly::zero()).constant_term())).collect();
        special_holds &= convolve(&two_x, &constants) == b_oracle[n as usize];
    }
    ck.witness_outcome(
        "B_n(x) = 2^-n sum binom(n,k) B_{n-k} E_k(2x)",
        format!("0 <= n <= {n_max}"),
        true,
        special_holds,
    );
    ck.finish(IdentityId::BeLinkSum, format!("0 <= n <= {n_max}"))
}

pub(super) fn be_link_int(n_max: u32) -> IdentityReport {
    let b_oracle = table(n_max, bernoulli_poly, Path::Oracle);
    let e_umbral = table(n_max, euler_poly, Path::Umbral);
    let xp = MultiPoly::var(x());
    let upper = &xp + &MultiPoly::ratio(1, 2);
    let two_x = xp.scale(&ExactScalar::from_int(2));
    let mut ck = Checker::default();
    for n in 0..=n_max {
        let lhs = b_oracle[n as usize].rename(&[(x(), z())]).integrate(z(), &xp, &upper);
        let rhs = e_umbral[n as usize].substitute(x(), &two_x).scale(&two_pow_inv(n + 1));
        ck.check(|| format!("n={n}"), lhs, rhs);
    }
    ck.finish(IdentityId::BeLinkInt, format!("0 <= n <= {n_max}"))
}

pub(super) fn euler_two_term(n_max: u32) -> IdentityReport {
    let umbral = table(n_max, euler_poly, Path::Umbral);
    let xp = MultiPoly::var(x());
    let shifted = &xp + &MultiPoly::one();
    let mut ck = Checker::default();
    for n in 0..=n_max {
        let p = &umbral[n as usize];
        let lhs = &p.substitute(x(), &shifted) + p;
        ck.check(|| format!("n={n}"), lhs, xp.pow(n).scale(&ExactScalar::from_int(2)));
    }
    ck.finish(IdentityId::EulerTwoTerm, format!("0 <= n <= {n_max}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        for r in [
            euler_reflect(8),
            euler_shift(8),
            euler_even_sum(6),
            be_link_sum(6),
            be_link_int(6),
            euler_two_term(8),
        ] {
            assert!(r.passed(), "{:?}", r);
            assert!(r.witnesses.iter().all(|w| w.as_expected()), "{:?}", r.witnesses);
        }
    }

    #[test]
    fn even_sum_at_zero_is_one() {
        let e = euler_table(0, Path::Oracle);
        assert_eq!(even_sum(&e, 0), ExactScalar::from_int(1));
    }
}
