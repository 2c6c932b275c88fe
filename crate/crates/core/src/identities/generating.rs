//! Generating-function identities for the Hermite family and its two-index
//! relatives. Left sides are literal sums of family values or expectations
//! of exponentials; right sides are closed forms expanded as truncated
//! series. Both are compared coefficient by coefficient.

use super::{Checker, IdentityId, IdentityReport};
use crate::arith::{ExactScalar, Monomial, MultiPoly, Truncation, Var};
use crate::error::Result;
use crate::expectation::{expect_exp, expect_exp_gauss, expect_exp_quadratic, UmbralExpr, UmbralSymbol};
use crate::families::{hermite_oracle_table, zeilberger_hermite_in, Path};
use crate::util::inv_factorial;

fn var(name: &str) -> Var {
    Var::new(name)
}

fn p(name: &str) -> MultiPoly {
    MultiPoly::var(var(name))
}

fn k(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

fn mono(pairs: &[(Var, u32)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().copied())
}

/// `(1 + 4 s)` as a polynomial.
fn one_plus_four(s: &MultiPoly) -> MultiPoly {
    &MultiPoly::one() + &s.scale(&k(4))
}

/// `exp(n / d) / sqrt(d)` by direct composition.
fn sqrt_form(tr: &Truncation, d: &MultiPoly, n: &MultiPoly) -> Result<MultiPoly> {
    let ratio = tr.mul(n, &tr.recip(d)?);
    Ok(tr.mul(&tr.inv_sqrt(d)?, &tr.exp(&ratio)?))
}

pub(super) fn hermite_master(order: u32) -> Result<IdentityReport> {
    let tr = Truncation::new([var("x"), var("y")], order);
    let (x, y) = (p("x"), p("y"));
    let lhs = expect_exp_gauss(&x, &y, &tr)?;
    let minus_x2 = -&x.pow(2);
    let rhs = sqrt_form(&tr, &one_plus_four(&y), &minus_x2)?;
    let mut ck = Checker::default();
    ck.check(|| format!("order {order}"), lhs.clone(), rhs);
    // variant with 1 + 4y^2 in place of 1 + 4y
    let low = tr.with_order(2);
    let printed = sqrt_form(&low, &one_plus_four(&y.pow(2)), &minus_x2)?;
    ck.witness("denominator 1 + 4y^2", "order 2".into(), false, &low.truncate(&lhs), &printed);
    Ok(ck.finish(IdentityId::HermiteMaster, format!("total degree <= {order} in x, y")))
}

pub(super) fn hermite_gf_even(order: u32) -> Result<IdentityReport> {
    let tr = Truncation::new([var("x")], order);
    let (x, u) = (p("x"), p("u"));
    let h = hermite_oracle_table(2 * order);
    let lhs = (0..=order).fold(MultiPoly::zero(), |acc, n| {
        &acc + &h[2 * n as usize].mul_monomial(&mono(&[(var("x"), n)])).scale(&inv_factorial(n))
    });
    let d = one_plus_four(&x);
    let four_u2x = (&u.pow(2) * &x).scale(&k(4));
    let rhs = sqrt_form(&tr, &d, &four_u2x)?;
    let mut ck = Checker::default();
    ck.check(|| format!("order {order}"), lhs.clone(), rhs);
    let low = tr.with_order(1);
    let printed = sqrt_form(&low, &d, &-&four_u2x)?;
    ck.witness("exponent -4u^2 x/(1+4x)", "order 1".into(), false, &low.truncate(&lhs), &printed);
    Ok(ck.finish(IdentityId::HermiteGfEven, format!("degree <= {order} in x")))
}

pub(super) fn hermite_gf_bivar(order: u32) -> Result<IdentityReport> {
    let tr = Truncation::new([var("x"), var("y")], order);
    let (x, y, u) = (p("x"), p("y"), p("u"));
    let h = hermite_oracle_table(2 * order);
    let mut lhs = MultiPoly::zero();
    for m in 0..=order {
        for n in 0..=order - m {
            let c = &inv_factorial(m) * &inv_factorial(n);
            let term = h[(2 * m + n) as usize].mul_monomial(&mono(&[(var("x"), m), (var("y"), n)]));
            lhs = &lhs + &term.scale(&c);
        }
    }
    // (2u sqrt x + y/(2 sqrt x))^2/(1+4x) - y^2/(4x) = (4u^2 x + 2uy - y^2)/(1+4x)
    let num = &(&(&u.pow(2) * &x).scale(&k(4)) + &(&u * &y).scale(&k(2))) - &y.pow(2);
    let rhs = sqrt_form(&tr, &one_plus_four(&x), &num)?;
    let mut ck = Checker::default();
    ck.check(|| format!("order {order}"), lhs.clone(), rhs);
    // E exp((2u + M)^2 x + (2u + M) y) = e^{4u^2 x + 2uy} E exp(M(4ux + y) + M^2 x)
    let free = tr.exp(&(&(&u.pow(2) * &x).scale(&k(4)) + &(&u * &y).scale(&k(2))))?;
    let gauss = expect_exp_gauss(&(&(&u * &x).scale(&k(4)) + &y), &x, &tr)?;
    ck.witness("umbral route", format!("order {order}"), true, &lhs, &tr.mul(&free, &gauss));
    Ok(ck.finish(IdentityId::HermiteGfBivar, format!("total degree <= {order} in x, y")))
}

pub(super) fn carlitz_master(order: u32) -> Result<IdentityReport> {
    let names = ["a", "b", "u", "v", "w"];
    let tr = Truncation::new(names.map(var), order);
    let [a, b, u, v, w] = names.map(p);
    let lhs = expect_exp_quadratic(&a, &b, &u, &v, &w, &tr)?;
    let one_minus_v = &MultiPoly::one() - &v;
    let d = &one_minus_v.pow(2) - &(&u * &w).scale(&k(4));
    let n = &(&(&a.pow(2) * &w) + &(&b.pow(2) * &u)) + &(&(&a * &b) * &one_minus_v);
    let rhs = tr.power_exp_rational(&d, &ExactScalar::ratio(-1, 2), &n)?;
    let mut ck = Checker::default();
    ck.check(|| format!("order {order}"), lhs.clone(), rhs);
    let low = tr.with_order(order.min(6));
    ck.witness(
        "closed form by composition",
        format!("order {}", low.order()),
        true,
        &low.truncate(&lhs),
        &sqrt_form(&low, &d, &n)?,
    );
    Ok(ck.finish(IdentityId::CarlitzMaster, format!("total degree <= {order} in a, b, u, v, w")))
}

/// `H_{m,n}` in `var` for all `m, n <= max`.
fn zeilberger_grid(max: u32, in_var: Var) -> Vec<Vec<MultiPoly>> {
    (0..=max)
        .map(|m| (0..=max).map(|n| zeilberger_hermite_in(m, n, in_var, Path::Oracle)).collect())
        .collect()
}

fn zeil_sum(order: u32, coeff: impl Fn(u32, u32) -> MultiPoly) -> MultiPoly {
    let mut lhs = MultiPoly::zero();
    for m in 0..=order {
        for n in 0..=order - m {
            let c = &inv_factorial(m) * &inv_factorial(n);
            lhs = &lhs + &coeff(m, n).mul_monomial(&mono(&[(var("x"), m), (var("y"), n)])).scale(&c);
        }
    }
    lhs
}

pub(super) fn zeil_gf(order: u32) -> Result<IdentityReport> {
    let tr = Truncation::new([var("x"), var("y")], order);
    let grid = zeilberger_grid(order, var("w"));
    let lhs = zeil_sum(order, |m, n| grid[m as usize][n as usize].clone());
    let rhs = tr.exp(&(&(&p("x") + &p("y")) + &(&p("w") * &(&p("x") * &p("y")))))?;
    let mut ck = Checker::default();
    ck.check(|| format!("order {order}"), lhs, rhs);
    Ok(ck.finish(IdentityId::ZeilGf, format!("total degree <= {order} in x, y")))
}

pub(super) fn zeil_bilinear(order: u32) -> Result<IdentityReport> {
    let tr = Truncation::new([var("x"), var("y")], order);
    let gu = zeilberger_grid(order, var("u"));
    let gv = zeilberger_grid(order, var("v"));
    let lhs = zeil_sum(order, |m, n| &gu[m as usize][n as usize] * &gv[m as usize][n as usize]);
    let (x, y, u, v) = (p("x"), p("y"), p("u"), p("v"));
    let xy = &x * &y;
    let d = &MultiPoly::one() - &(&(&u * &v) * &xy);
    let num = &(&x + &y) + &(&(&u + &v) * &xy);
    let r = tr.recip(&d)?;
    let rhs = tr.mul(&r, &tr.exp(&tr.mul(&num, &r))?);
    let mut ck = Checker::default();
    ck.check(|| format!("order {order}"), lhs.clone(), rhs);
    // E exp(x (1 + Z1)(1 + Z2) + y (1 + u conj Z1)(1 + v conj Z2))
    let low = tr.with_order(order.min(8));
    let (z1, zb1) = UmbralSymbol::circular_pair(0);
    let (z2, zb2) = UmbralSymbol::circular_pair(1);
    let one = MultiPoly::one();
    let body = &(&x * &(&(&one + &z1.poly()) * &(&one + &z2.poly())))
        + &(&y * &(&(&one + &(&u * &zb1.poly())) * &(&one + &(&v * &zb2.poly()))));
    let engine = expect_exp(&UmbralExpr::new(body).bind_all([&z1, &zb1, &z2, &zb2]), &low)?;
    ck.witness("two circular copies", format!("order {}", low.order()), true, &low.truncate(&lhs), &engine);
    Ok(ck.finish(IdentityId::ZeilBilinear, format!("total degree <= {order} in x, y")))
}

pub(super) fn quintuple(order: u32) -> Result<IdentityReport> {
    let names = ["v", "w", "x", "y", "t"];
    let vars = names.map(var);
    let tr = Truncation::new(vars, order);
    let grid = zeilberger_grid(2 * order, var("u"));
    let mut lhs = MultiPoly::zero();
    for i in 0..=order {
        for j in 0..=order - i {
            for kk in 0..=order - i - j {
                for l in 0..=order - i - j - kk {
                    for m in 0..=order - i - j - kk - l {
                        let h = &grid[(i + 2 * kk + m) as usize][(j + 2 * l + m) as usize];
                        let c = [i, j, kk, l, m].iter().fold(ExactScalar::from_int(1), |acc, &e| &acc * &inv_factorial(e));
                        let mo = mono(&[(vars[0], i), (vars[1], j), (vars[2], kk), (vars[3], l), (vars[4], m)]);
                        lhs = &lhs + &h.mul_monomial(&mo).scale(&c);
                    }
                }
            }
        }
    }
    let [v, w, x, y, t] = names.map(p);
    let u = p("u");
    let one = MultiPoly::one();
    let one_minus_ut = &one - &(&u * &t);
    let d = &one_minus_ut.pow(2) - &(&(&u.pow(2) * &x) * &y).scale(&k(4));
    let n = &(&(&(&(&one + &(&u * &w)).pow(2) * &x) + &(&(&one + &(&u * &v)).pow(2) * &y))
        + &(&(&u * &x) * &y).scale(&k(4)))
        + &(&one_minus_ut * &(&(&(&v + &w) + &t) + &(&(&u * &v) * &w)));
    let rhs = tr.power_exp_rational(&d, &ExactScalar::ratio(-1, 2), &n)?;
    let mut ck = Checker::default();
    ck.check(|| format!("order {order}"), lhs.clone(), rhs);

    // v = w = x = y = 0 slice: sum H_{m,m}(u) t^m / m! = exp(t/(1-ut)) / (1-ut)
    let tt = Truncation::new([vars[4]], order);
    let diagonal = (0..=order).fold(MultiPoly::zero(), |acc, m| {
        &acc + &grid[m as usize][m as usize].mul_monomial(&mono(&[(vars[4], m)])).scale(&inv_factorial(m))
    });
    let closed = tt.power_exp_rational(&one_minus_ut, &ExactScalar::from_int(-1), &t)?;
    ck.witness("diagonal slice", format!("order {order}"), true, &diagonal, &closed);

    // E exp(v(1+Z) + w(1+u Zb) + x(1+Z)^2 + y(1+u Zb)^2 + t(1+Z)(1+u Zb))
    let (z, zb) = UmbralSymbol::circular_pair(0);
    let a = &one + &z.poly();
    let bb = &one + &(&u * &zb.poly());
    let body = &(&(&(&(&v * &a) + &(&w * &bb)) + &(&x * &a.pow(2))) + &(&y * &bb.pow(2))) + &(&t * &(&a * &bb));
    let engine = expect_exp(&UmbralExpr::new(body).bind(&z).bind(&zb), &tr)?;
    ck.witness("umbral route", format!("order {order}"), true, &lhs, &engine);
    Ok(ck.finish(IdentityId::Quintuple, format!("total degree <= {order} in v, w, x, y, t")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders_pass() {
        for r in [
            hermite_master(6).unwrap(),
            hermite_gf_even(6).unwrap(),
            hermite_gf_bivar(5).unwrap(),
            carlitz_master(5).unwrap(),
            zeil_gf(6).unwrap(),
            zeil_bilinear(5).unwrap(),
            quintuple(3).unwrap(),
        ] {
            assert!(r.passed(), "{:?}", r.counterexample);
            assert!(r.witnesses.iter().all(|w| w.as_expected()), "{:?}", r.witnesses);
        }
    }

    #[test]
    fn diagonal_second_coefficient() {
        // 2! [t^2] of the diagonal slice is H_{2,2}(u) = 2u^2 + 4u + 1
        let h = zeilberger_hermite_in(2, 2, var("u"), Path::Oracle);
        let u = p("u");
        assert_eq!(h, &(&u.pow(2).scale(&k(2)) + &u.scale(&k(4))) + &MultiPoly::one());
    }
}
