//! The formal expectation operator.
//!
//! An [`UmbralExpr`] is a polynomial whose indeterminates are either free
//! formal variables or umbral symbols bound to a component of an umbra copy.
//! [`expect`] eliminates the umbral symbols by linearity: every monomial is
//! split by `(umbra, copy)` group, independent groups factorize, and each
//! group is replaced by its (joint) moment.
//!
//! Exponential expectations are only ever computed as truncated expansions
//! from first principles, never through closed forms.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::arith::{ExactScalar, Monomial, MultiPoly, Truncation, Var};
use crate::error::{Error, Result};
use crate::umbrae::{moment, MomentIndex, Umbra};
use crate::util::inv_factorial;

/// Largest truncation order accepted by the exponential expansions.
pub const MAX_TRUNCATION_ORDER: u32 = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binding {
    pub umbra: Umbra,
    /// 0 for scalar umbrae; 0 (`Z`) or 1 (`conj Z`) for `CircZ`.
    pub component: u8,
    /// Distinct tags of the same umbra are independent copies.
    pub copy: u32,
}

/// An umbral symbol together with its binding.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct UmbralSymbol {
    pub var: Var,
    pub binding: Binding,
}

impl UmbralSymbol {
    pub fn new(umbra: Umbra, component: u8, copy: u32) -> Self {
        assert!((component as usize) < umbra.arity(), "component out of range for {umbra}");
        let base = match (umbra, component) {
            (Umbra::CircZ, 1) => "Zbar",
            (u, _) => u.symbol(),
        };
        UmbralSymbol {
            var: Var::umbral(&format!("{base}_{copy}")),
            binding: Binding {
                umbra,
                component,
                copy,
            },
        }
    }

    pub fn scalar(umbra: Umbra, copy: u32) -> Self {
        Self::new(umbra, 0, copy)
    }

    /// `(Z, conj Z)` of one circular-normal copy.
    pub fn circular_pair(copy: u32) -> (Self, Self) {
        (Self::new(Umbra::CircZ, 0, copy), Self::new(Umbra::CircZ, 1, copy))
    }

    pub fn poly(&self) -> MultiPoly {
        MultiPoly::var(self.var)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UmbralExpr {
    pub body: MultiPoly,
    pub bindings: BTreeMap<Var, Binding>,
}

impl UmbralExpr {
    pub fn new(body: MultiPoly) -> Self {
        UmbralExpr {
            body,
            bindings: BTreeMap::new(),
        }
    }

    pub fn bind(mut self, sym: &UmbralSymbol) -> Self {
        self.bindings.insert(sym.var, sym.binding);
        self
    }

    pub fn bind_all<'a, I: IntoIterator<Item = &'a UmbralSymbol>>(mut self, syms: I) -> Self {
        for s in syms {
            self.bindings.insert(s.var, s.binding);
        }
        self
    }
}

type GroupKey = (Umbra, u32);

/// Accumulated exponents of one `(umbra, copy)` group.
type GroupExps = BTreeMap<GroupKey, [u32; 2]>;

fn group_moment(groups: &GroupExps) -> ExactScalar {
    let mut acc = ExactScalar::one();
    for (&(umbra, _), exps) in groups {
        let idx = match umbra {
            Umbra::CircZ => MomentIndex::Joint(exps[0], exps[1]),
            _ => MomentIndex::Scalar(exps[0]),
        };
        let m = moment(umbra, idx);
        if m.is_zero() {
            return m;
        }
        acc = &acc * &m;
    }
    acc
}

fn split_umbral(
    m: &Monomial,
    bindings: &BTreeMap<Var, Binding>,
) -> Result<(GroupExps, Monomial)> {
    let (umbral, free) = m.split(|v| v.is_umbral() || bindings.contains_key(&v));
    let mut groups = GroupExps::new();
    for (v, e) in umbral.iter() {
        let b = bindings
            .get(&v)
            .ok_or_else(|| Error::UnboundSymbol(v.name().to_string()))?;
        groups.entry((b.umbra, b.copy)).or_default()[b.component as usize] += e;
    }
    Ok((groups, free))
}

/// `E[expr]` as a polynomial in the free variables.
pub fn expect(expr: &UmbralExpr) -> Result<MultiPoly> {
    let mut out: HashMap<Monomial, ExactScalar> = HashMap::new();
    for (m, c) in expr.body.terms() {
        let (groups, free) = split_umbral(m, &expr.bindings)?;
        let mom = group_moment(&groups);
        if !mom.is_zero() {
            *out.entry(free).or_default() += c * &mom;
        }
    }
    Ok(MultiPoly::from_terms(out))
}

/// `E[exp(exponent)]` truncated by `trunc`, from first principles.
///
/// The exponent is split as `sum_j c_j * m_j` with `m_j` a monomial in the
/// umbral symbols and `c_j` a free polynomial of positive graded degree.
/// Then `exp` is expanded factor by factor,
/// `prod_j sum_k c_j^k m_j^k / k!`, and the moment rule is applied to each
/// resulting umbral monomial.
pub fn expect_exp(exponent: &UmbralExpr, trunc: &Truncation) -> Result<MultiPoly> {
    if trunc.order() > MAX_TRUNCATION_ORDER {
        return Err(Error::TruncationOverflow {
            requested: trunc.order(),
            bound: MAX_TRUNCATION_ORDER,
        });
    }
    let mut parts: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
    for (m, c) in exponent.body.terms() {
        let (umbral, free) = m.split(|v| v.is_umbral() || exponent.bindings.contains_key(&v));
        // validate bindings early
        split_umbral(&umbral, &exponent.bindings)?;
        parts.entry(umbral).or_default().add_term(free, c.clone());
    }

    struct Factor {
        groups: GroupExps,
        min_degree: u32,
        /// `c^k / k!` for `k = 0..`
        powers: Vec<MultiPoly>,
    }

    let mut factors = Vec::new();
    for (umbral, coeff) in parts {
        let coeff = trunc.truncate(&coeff);
        if coeff.is_zero() {
            continue;
        }
        let min_degree = trunc.min_degree(&coeff).unwrap_or(0);
        if min_degree == 0 {
            return Err(Error::CompositionNonNilpotent);
        }
        let (groups, _) = split_umbral(&umbral, &exponent.bindings)?;
        let mut powers = vec![MultiPoly::one()];
        let mut k = 1;
        while k * min_degree <= trunc.order() {
            let next = trunc.mul(&powers[k as usize - 1], &coeff).scale(&ExactScalar::ratio(1, k as i64));
            if next.is_zero() {
                break;
            }
            powers.push(next);
            k += 1;
        }
        factors.push(Factor {
            groups,
            min_degree,
            powers,
        });
    }

    fn walk(
        factors: &[Factor],
        trunc: &Truncation,
        budget: u32,
        coeff: &MultiPoly,
        groups: &GroupExps,
        out: &mut HashMap<Monomial, ExactScalar>,
    ) {
        let Some((first, rest)) = factors.split_first() else {
            let mom = group_moment(groups);
            if !mom.is_zero() {
                for (m, c) in coeff.terms() {
                    *out.entry(m.clone()).or_default() += c * &mom;
                }
            }
            return;
        };
        for (k, power) in first.powers.iter().enumerate() {
            let cost = k as u32 * first.min_degree;
            if cost > budget {
                break;
            }
            let mut next_groups = groups.clone();
            for (key, exps) in &first.groups {
                let entry = next_groups.entry(*key).or_default();
                entry[0] += exps[0] * k as u32;
                entry[1] += exps[1] * k as u32;
            }
            let next_coeff = if k == 0 { coeff.clone() } else { trunc.mul(coeff, power) };
            if next_coeff.is_zero() {
                continue;
            }
            walk(rest, trunc, budget - cost, &next_coeff, &next_groups, out);
        }
    }

    let mut out = HashMap::new();
    walk(
        &factors,
        trunc,
        trunc.order(),
        &MultiPoly::one(),
        &GroupExps::new(),
        &mut out,
    );
    Ok(MultiPoly::from_terms(out.into_iter().filter(|(_, c)| !c.is_zero())))
}

/// `E exp(Z a + conj(Z) b + Z^2 u + Z conj(Z) v + conj(Z)^2 w)` for a
/// circular normal `Z`, truncated by `trunc`.
pub fn expect_exp_quadratic(
    a: &MultiPoly,
    b: &MultiPoly,
    u: &MultiPoly,
    v: &MultiPoly,
    w: &MultiPoly,
    trunc: &Truncation,
) -> Result<MultiPoly> {
    let (z, zb) = UmbralSymbol::circular_pair(0);
    let (zp, zbp) = (z.poly(), zb.poly());
    let body = &(&(&(&zp * a) + &(&zbp * b)) + &(&(&zp.pow(2) * u) + &(&(&zp * &zbp) * v)))
        + &(&zbp.pow(2) * w);
    expect_exp(&UmbralExpr::new(body).bind(&z).bind(&zb), trunc)
}

/// `E exp(M x + M^2 y)` with `M = i G`, `G ~ N(0, 2)`, truncated by `trunc`.
pub fn expect_exp_gauss(x_coef: &MultiPoly, y_coef: &MultiPoly, trunc: &Truncation) -> Result<MultiPoly> {
    let g = UmbralSymbol::scalar(Umbra::GaussM, 0);
    let m = g.poly().scale(&ExactScalar::i());
    let body = &(&m * x_coef) + &(&m.pow(2) * y_coef);
    expect_exp(&UmbralExpr::new(body).bind(&g), trunc)
}

/// `sum_k c_k t^k / k!` helper used by tests and identity checks.
pub fn egf_term(k: u32) -> ExactScalar {
    inv_factorial(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(n: &str) -> MultiPoly {
        MultiPoly::var(Var::new(n))
    }

    fn i() -> ExactScalar {
        ExactScalar::i()
    }

    #[test]
    fn second_bernoulli_number() {
        let l = UmbralSymbol::scalar(Umbra::Logistic, 0);
        let body = (&l.poly().scale(&i()) - &MultiPoly::ratio(1, 2)).pow(2);
        let e = expect(&UmbralExpr::new(body).bind(&l)).unwrap();
        assert_eq!(e, MultiPoly::ratio(1, 6));
    }

    #[test]
    fn hermite_two_via_gauss() {
        let g = UmbralSymbol::scalar(Umbra::GaussM, 0);
        let body = (&var("u").scale(&ExactScalar::from_int(2)) + &g.poly().scale(&i())).pow(2);
        let e = expect(&UmbralExpr::new(body).bind(&g)).unwrap();
        assert_eq!(e, &var("u").pow(2).scale(&ExactScalar::from_int(4)) - &MultiPoly::int(2));
    }

    #[test]
    fn zeilberger_one_one() {
        let (z, zb) = UmbralSymbol::circular_pair(0);
        let body = &(&MultiPoly::one() + &z.poly()) * &(&MultiPoly::one() + &(&var("w") * &zb.poly()));
        let e = expect(&UmbralExpr::new(body).bind(&z).bind(&zb)).unwrap();
        assert_eq!(e, &MultiPoly::one() + &var("w"));
    }

    #[test]
    fn constants_pass_through() {
        let c = MultiPoly::ratio(-3, 7);
        assert_eq!(expect(&UmbralExpr::new(c.clone())).unwrap(), c);
    }

    #[test]
    fn unbound_symbol_is_reported() {
        let stray = MultiPoly::var(Var::umbral("Q"));
        match expect(&UmbralExpr::new(stray)) {
            Err(Error::UnboundSymbol(name)) => assert_eq!(name, "Q"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn independent_copies_do_not_merge() {
        let l1 = UmbralSymbol::scalar(Umbra::Logistic, 1);
        let l2 = UmbralSymbol::scalar(Umbra::Logistic, 2);
        // E[L1^2 L2^2] = (1/12)^2 while E[L^4] = 7/240
        let body = &l1.poly().pow(2) * &l2.poly().pow(2);
        let e = expect(&UmbralExpr::new(body).bind(&l1).bind(&l2)).unwrap();
        assert_eq!(e, MultiPoly::ratio(1, 144));
    }

    #[test]
    fn quadratic_special_cases() {
        let v = Var::new("v");
        let tr = Truncation::new([Var::new("a"), Var::new("b"), Var::new("u"), v, Var::new("w")], 6);
        let zero = MultiPoly::zero();
        // only v: sum v^n
        let e = expect_exp_quadratic(&zero, &zero, &zero, &var("v"), &zero, &tr).unwrap();
        let geometric = (0..=6).fold(MultiPoly::zero(), |acc, n| &acc + &var("v").pow(n));
        assert_eq!(e, geometric);
        // only u: nothing survives
        let e = expect_exp_quadratic(&zero, &zero, &var("u"), &zero, &zero, &tr).unwrap();
        assert_eq!(e, MultiPoly::one());
        // a, b: exp(ab)
        let e = expect_exp_quadratic(&var("a"), &var("b"), &zero, &zero, &zero, &tr).unwrap();
        let ab = &var("a") * &var("b");
        let expected = (0..=3).fold(MultiPoly::zero(), |acc, n| &acc + &ab.pow(n).scale(&egf_term(n)));
        assert_eq!(e, expected);
    }

    #[test]
    fn gauss_special_cases() {
        let tr = Truncation::new([Var::new("x"), Var::new("y")], 8);
        let zero = MultiPoly::zero();
        let e = expect_exp_gauss(&var("x"), &zero, &tr).unwrap();
        let minus_x2 = -&var("x").pow(2);
        let expected = (0..=4).fold(MultiPoly::zero(), |acc, n| &acc + &minus_x2.pow(n).scale(&egf_term(n)));
        assert_eq!(e, expected);
        // x = 0: sum binom(2n, n) (-y)^n
        let e = expect_exp_gauss(&zero, &var("y"), &tr).unwrap();
        let expected = (0..=8u32).fold(MultiPoly::zero(), |acc, n| {
            &acc + &(-&var("y")).pow(n).scale(&crate::util::binomial_scalar(2 * n, n))
        });
        assert_eq!(e, expected);
        assert_eq!(expect_exp_gauss(&zero, &zero, &tr).unwrap(), MultiPoly::one());
    }

    #[test]
    fn overflow_and_non_nilpotent() {
        let tr = Truncation::new([Var::new("x")], MAX_TRUNCATION_ORDER + 1);
        assert!(matches!(
            expect_exp_gauss(&var("x"), &MultiPoly::zero(), &tr),
            Err(Error::TruncationOverflow { .. })
        ));
        let tr = Truncation::new([Var::new("x")], 4);
        assert_eq!(
            expect_exp_gauss(&MultiPoly::one(), &MultiPoly::zero(), &tr),
            Err(Error::CompositionNonNilpotent)
        );
    }
}
