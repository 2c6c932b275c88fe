//! Multivariate power series represented as polynomials truncated by total
//! degree in a chosen set of graded variables.
//!
//! Variables outside the graded set act as polynomial parameters: they are
//! carried through every operation without counting toward the order.

use std::collections::HashMap;

use num_traits::Zero;

use super::poly::{Monomial, MultiPoly};
use super::scalar::ExactScalar;
use super::series::TruncSeries;
use super::var::Var;
use crate::error::{Error, Result};

/// Default total-degree bound for multivariate expansions.
pub const DEFAULT_TOTAL_ORDER: u32 = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    graded: Vec<Var>,
    order: u32,
}

impl Truncation {
    pub fn new<I: IntoIterator<Item = Var>>(graded: I, order: u32) -> Self {
        let mut graded: Vec<Var> = graded.into_iter().collect();
        graded.sort();
        graded.dedup();
        Truncation { graded, order }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn graded(&self) -> &[Var] {
        &self.graded
    }

    pub fn with_order(&self, order: u32) -> Self {
        Truncation {
            graded: self.graded.clone(),
            order,
        }
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.degree_in(&self.graded)
    }

    /// Smallest graded degree among the terms, `None` for zero.
    pub fn min_degree(&self, p: &MultiPoly) -> Option<u32> {
        p.terms().map(|(m, _)| self.degree(m)).min()
    }

    pub fn truncate(&self, p: &MultiPoly) -> MultiPoly {
        p.filter_terms(|m| self.degree(m) <= self.order)
    }

    /// Splits `p` into homogeneous parts of graded degree `0..=order`.
    pub fn homogeneous_parts(&self, p: &MultiPoly) -> Vec<MultiPoly> {
        let mut parts = vec![MultiPoly::zero(); self.order as usize + 1];
        for (m, c) in p.terms() {
            let d = self.degree(m);
            if d <= self.order {
                parts[d as usize].add_term(m.clone(), c.clone());
            }
        }
        parts
    }

    pub fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        if a.is_zero() || b.is_zero() {
            return MultiPoly::zero();
        }
        let mut buckets: Vec<Vec<(&Monomial, &ExactScalar)>> = vec![Vec::new(); self.order as usize + 1];
        for (m, c) in b.terms() {
            let d = self.degree(m);
            if d <= self.order {
                buckets[d as usize].push((m, c));
            }
        }
        let mut acc: HashMap<Monomial, ExactScalar> = HashMap::new();
        for (ma, ca) in a.terms() {
            let da = self.degree(ma);
            if da > self.order {
                continue;
            }
            for bucket in &buckets[..=(self.order - da) as usize] {
                for &(mb, cb) in bucket {
                    *acc.entry(ma.mul(mb)).or_default() += ca * cb;
                }
            }
        }
        MultiPoly::from_terms(acc.into_iter().filter(|(_, c)| !c.is_zero()))
    }

    pub fn pow(&self, a: &MultiPoly, exp: u32) -> MultiPoly {
        let mut acc = self.truncate(&MultiPoly::one());
        for _ in 0..exp {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn require_nilpotent(&self, g: &MultiPoly) -> Result<()> {
        match self.min_degree(g) {
            Some(0) => Err(Error::CompositionNonNilpotent),
            _ => Ok(()),
        }
    }

    /// `f(g)` for a univariate series `f`, by Horner's rule.
    ///
    /// `g` must have no terms of graded degree zero. Coefficients of `f`
    /// beyond `order` are irrelevant and those below it must exist.
    pub fn compose(&self, f: &TruncSeries, g: &MultiPoly) -> Result<MultiPoly> {
        self.require_nilpotent(g)?;
        let g = self.truncate(g);
        let n = (self.order as usize).min(f.order());
        let mut acc = MultiPoly::constant(f.coeff(n).clone());
        for k in (0..n).rev() {
            acc = self.mul(&acc, &g);
            acc.add_term(Monomial::one(), f.coeff(k).clone());
        }
        Ok(acc)
    }

    /// `exp(g)` for `g` without graded-degree-zero terms.
    ///
    /// Uses the degree-operator recurrence `n F_n = sum_d d h_d F_{n-d}`,
    /// where `h_d` and `F_n` are the homogeneous parts of `g` and `exp(g)`.
    pub fn exp(&self, g: &MultiPoly) -> Result<MultiPoly> {
        self.require_nilpotent(g)?;
        let h = self.homogeneous_parts(g);
        let mut f: Vec<MultiPoly> = Vec::with_capacity(self.order as usize + 1);
        f.push(MultiPoly::one());
        for n in 1..=self.order as usize {
            let mut acc = MultiPoly::zero();
            for d in 1..=n {
                if h[d].is_zero() || f[n - d].is_zero() {
                    continue;
                }
                let term = (&h[d] * &f[n - d]).scale(&ExactScalar::from_int(d as i64));
                acc = &acc + &term;
            }
            f.push(acc.scale(&ExactScalar::ratio(1, n as i64)));
        }
        Ok(f.into_iter().fold(MultiPoly::zero(), |acc, part| &acc + &part))
    }

    /// `1 / p` where the graded-degree-zero part of `p` is a nonzero scalar.
    pub fn recip(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let (c0, rest) = self.split_unit(p)?;
        let inv = c0.inv().ok_or(Error::DivisionByNonUnit)?;
        // 1/p = inv * 1/(1 + inv*rest)
        let g = rest.scale(&inv);
        let series = TruncSeries::from_fn(Var::new("_s"), self.order as usize, |k| crate::util::sign(k as u32));
        Ok(self.compose(&series, &g)?.scale(&inv))
    }

    /// `1 / sqrt(p)` where the graded-degree-zero part of `p` is exactly 1,
    /// via the binomial series `sum binom(2n,n) (-g/4)^n`.
    pub fn inv_sqrt(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let (c0, g) = self.split_unit(p)?;
        if c0 != ExactScalar::from_int(1) {
            return Err(Error::InvalidArgument(
                "inv_sqrt needs a unit constant term equal to 1".into(),
            ));
        }
        let series = TruncSeries::from_fn(Var::new("_s"), self.order as usize, |n| {
            let n = n as u32;
            &crate::util::binomial_scalar(2 * n, n)
                * &ExactScalar::real(num_rational::BigRational::new(
                    crate::util::sign(n).re().numer().clone(),
                    num_bigint::BigInt::from(4).pow(n),
                ))
        });
        self.compose(&series, &g)
    }

    /// Degree operator `sum_v v d/dv` over the graded variables.
    pub fn euler_op(&self, p: &MultiPoly) -> MultiPoly {
        MultiPoly::from_terms(
            p.terms()
                .map(|(m, c)| (m.clone(), c * &ExactScalar::from_int(self.degree(m) as i64)))
                .filter(|(_, c)| !c.is_zero()),
        )
    }

    /// `D^alpha exp(N / D)` for polynomials `D`, `N` with `D` of unit
    /// graded-degree-zero part and `N` without graded-degree-zero terms.
    ///
    /// `F = D^alpha exp(N/D)` is the unique series with `F_0 = 1` solving
    /// `D^2 theta F = F (alpha D theta D + D theta N - N theta D)`, so the
    /// homogeneous parts follow from a recurrence that only multiplies by
    /// the few-term polynomials `D^2` and the bracket.
    pub fn power_exp_rational(&self, d: &MultiPoly, alpha: &ExactScalar, n: &MultiPoly) -> Result<MultiPoly> {
        let (c0, _) = self.split_unit(d)?;
        if c0 != ExactScalar::from_int(1) {
            return Err(Error::InvalidArgument(
                "power_exp_rational needs a unit constant term equal to 1".into(),
            ));
        }
        self.require_nilpotent(n)?;
        let td = self.euler_op(d);
        let tn = self.euler_op(n);
        let bracket = &(&(d * &td).scale(alpha) + &(d * &tn)) - &(n * &td);
        let q = self.homogeneous_parts(&(d * d));
        let b = self.homogeneous_parts(&bracket);
        let mut f: Vec<MultiPoly> = vec![MultiPoly::one()];
        for deg in 1..=self.order as usize {
            let mut acc: HashMap<Monomial, ExactScalar> = HashMap::new();
            for j in 1..=deg {
                let prev = &f[deg - j];
                if prev.is_zero() {
                    continue;
                }
                let lag = ExactScalar::from_int((deg - j) as i64);
                for (mp, cp) in prev.terms() {
                    for (mb, cb) in b[j].terms() {
                        *acc.entry(mp.mul(mb)).or_default() += cp * cb;
                    }
                    if deg > j {
                        let cpl = cp * &lag;
                        for (mq, cq) in q[j].terms() {
                            *acc.entry(mp.mul(mq)).or_default() -= &(&cpl * cq);
                        }
                    }
                }
            }
            let inv = ExactScalar::ratio(1, deg as i64);
            f.push(MultiPoly::from_terms(
                acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m, &c * &inv)),
            ));
        }
        Ok(f.into_iter().fold(MultiPoly::zero(), |acc, part| &acc + &part))
    }

    fn split_unit(&self, p: &MultiPoly) -> Result<(ExactScalar, MultiPoly)> {
        let low = p.filter_terms(|m| self.degree(m) == 0);
        let c0 = low.as_constant().ok_or(Error::DivisionByNonUnit)?;
        if c0.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let rest = p.filter_terms(|m| self.degree(m) > 0);
        Ok((c0, rest))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::series::exp_series;

    fn var(n: &str) -> MultiPoly {
        MultiPoly::var(Var::new(n))
    }

    #[test]
    fn exp_recurrence_matches_horner() {
        let tr = Truncation::new([Var::new("x"), Var::new("y")], 7);
        let g = &(&var("x") + &(&var("x") * &var("y")).scale(&ExactScalar::ratio(3, 2))) + &var("y").pow(2);
        let fast = tr.exp(&g).unwrap();
        let slow = tr.compose(&exp_series(Var::new("s"), 7), &g).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn parameters_are_not_graded() {
        // exp(u x) with only x graded keeps arbitrary powers of u
        let tr = Truncation::new([Var::new("x")], 3);
        let g = &var("u") * &var("x");
        let e = tr.exp(&g).unwrap();
        let expected = tr.compose(&exp_series(Var::new("s"), 3), &g).unwrap();
        assert_eq!(e, expected);
        assert_eq!(e.degree_in(Var::new("u")), 3);
    }

    #[test]
    fn recip_and_inv_sqrt() {
        let tr = Truncation::new([Var::new("y")], 6);
        let p = &MultiPoly::one() + &var("y").scale(&ExactScalar::from_int(4));
        let r = tr.recip(&p).unwrap();
        assert_eq!(tr.mul(&r, &p), MultiPoly::one());
        let s = tr.inv_sqrt(&p).unwrap();
        assert_eq!(tr.mul(&tr.mul(&s, &s), &p), MultiPoly::one());
        assert_eq!(tr.recip(&var("y")), Err(Error::DivisionByNonUnit));
        assert_eq!(tr.exp(&MultiPoly::one()), Err(Error::CompositionNonNilpotent));
    }

    #[test]
    fn power_exp_rational_matches_composition() {
        // (1 - 2v + v^2 - 4uw)^{-1/2} exp((a^2 w + b u)/(...)) with parameter c
        let tr = Truncation::new(["a", "b", "u", "v", "w"].map(Var::new), 6);
        let d = &(&(&MultiPoly::one() - &var("v").scale(&ExactScalar::from_int(2))) + &var("v").pow(2))
            - &(&var("u") * &var("w")).scale(&ExactScalar::from_int(4));
        let n = &(&var("a").pow(2) * &var("w")) + &(&(&var("b") * &var("u")) * &var("c"));
        let direct = tr.mul(&tr.inv_sqrt(&d).unwrap(), &tr.exp(&tr.mul(&n, &tr.recip(&d).unwrap())).unwrap());
        let fast = tr.power_exp_rational(&d, &ExactScalar::ratio(-1, 2), &n).unwrap();
        assert_eq!(direct, fast);
        let one = tr.power_exp_rational(&d, &ExactScalar::from_int(-1), &MultiPoly::zero()).unwrap();
        assert_eq!(one, tr.recip(&d).unwrap());
    }
}
