//! Number and polynomial families, each built by two independent routes.
//!
//! The oracle route uses classical recurrences or series division and never
//! touches the expectation engine. The umbral route evaluates the
//! probabilistic representation with [`crate::expectation::expect`].

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{exp_series, ExactScalar, MultiPoly, TruncSeries, Var};
use crate::expectation::{expect, UmbralExpr, UmbralSymbol};
use crate::umbrae::Umbra;
use crate::util::{binomial_scalar, factorial_scalar};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    Oracle,
    Umbral,
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Path::Oracle => "oracle",
            Path::Umbral => "umbral",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    BernoulliNum,
    BernoulliPoly,
    EulerNum,
    EulerPoly,
    Hermite,
    CarlitzHermite,
    ZeilbergerHermite,
    PowerSum,
    ChenK,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::BernoulliNum,
        Family::BernoulliPoly,
        Family::EulerNum,
        Family::EulerPoly,
        Family::Hermite,
        Family::CarlitzHermite,
        Family::ZeilbergerHermite,
        Family::PowerSum,
        Family::ChenK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BernoulliNum => "bernoulli",
            Family::BernoulliPoly => "bernoulli-poly",
            Family::EulerNum => "euler",
            Family::EulerPoly => "euler-poly",
            Family::Hermite => "hermite",
            Family::CarlitzHermite => "carlitz",
            Family::ZeilbergerHermite => "zeilberger",
            Family::PowerSum => "power-sum",
            Family::ChenK => "chen-k",
        }
    }

    /// Number of integer indices the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::CarlitzHermite | Family::ZeilbergerHermite | Family::PowerSum => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == wanted)
            .ok_or_else(|| crate::Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

/// A computed family member; numbers are constant polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyValue {
    pub family: Family,
    pub indices: Vec<u32>,
    pub value: MultiPoly,
}

impl FamilyValue {
    /// Conventional symbol, e.g. `B_4`, `E_3(x)`, `H_{2,1}(u,v)`.
    pub fn label(&self) -> String {
        let i = &self.indices;
        match self.family {
            Family::BernoulliNum => format!("B_{}", i[0]),
            Family::BernoulliPoly => format!("B_{}(x)", i[0]),
            Family::EulerNum => format!("E_{}", i[0]),
            Family::EulerPoly => format!("E_{}(x)", i[0]),
            Family::Hermite => format!("H_{}(u)", i[0]),
            Family::CarlitzHermite => format!("H_{{{},{}}}(u,v)", i[0], i[1]),
            Family::ZeilbergerHermite => format!("H_{{{},{}}}(w)", i[0], i[1]),
            Family::PowerSum => format!("S_{}({})", i[0], i[1]),
            Family::ChenK => format!("K_{}", i[0]),
        }
    }
}

impl fmt::Display for FamilyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.label(), self.value)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PowerSumPath {
    Direct,
    BernoulliFormula,
    Integral,
}

pub fn x() -> Var {
    Var::new("x")
}
pub fn u() -> Var {
    Var::new("u")
}
pub fn v() -> Var {
    Var::new("v")
}
pub fn w() -> Var {
    Var::new("w")
}

fn half() -> MultiPoly {
    MultiPoly::ratio(1, 2)
}

fn t_var() -> Var {
    Var::new("t")
}

// ---------------------------------------------------------------- Bernoulli

/// `B_0..=B_{n_max}` by the recurrence `sum_{k<=n} binom(n+1, k) B_k = 0`.
fn bernoulli_oracle_table(n_max: u32) -> Vec<ExactScalar> {
    let mut b: Vec<ExactScalar> = Vec::with_capacity(n_max as usize + 1);
    b.push(ExactScalar::one());
    for n in 1..=n_max {
        let mut acc = ExactScalar::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += &binomial_scalar(n + 1, k as u32) * bk;
            }
        }
        b.push(-(&acc * &ExactScalar::ratio(1, n as i64 + 1)));
    }
    b
}

fn logistic_shifted(shift: &MultiPoly) -> (UmbralSymbol, MultiPoly) {
    let l = UmbralSymbol::scalar(Umbra::Logistic, 0);
    let base = &l.poly().scale(&ExactScalar::i()) + shift;
    (l, base)
}

/// `E (iL + shift)^n`
fn logistic_power(shift: &MultiPoly, n: u32) -> MultiPoly {
    let (l, base) = logistic_shifted(shift);
    expect(&UmbralExpr::new(base.pow(n)).bind(&l)).expect("bound")
}

/// `B_0..=B_{n_max}` along the chosen route.
pub fn bernoulli_table(n_max: u32, path: Path) -> Vec<ExactScalar> {
    match path {
        Path::Oracle => bernoulli_oracle_table(n_max),
        Path::Umbral => {
            let (l, base) = logistic_shifted(&-&half());
            let mut out = Vec::with_capacity(n_max as usize + 1);
            let mut power = MultiPoly::one();
            for _ in 0..=n_max {
                let e = expect(&UmbralExpr::new(power.clone()).bind(&l)).expect("bound");
                out.push(e.as_constant().expect("no free variables"));
                power = &power * &base;
            }
            out
        }
    }
}

pub fn bernoulli_number(n: u32, path: Path) -> ExactScalar {
    match path {
        Path::Oracle => bernoulli_oracle_table(n).pop().unwrap(),
        Path::Umbral => logistic_power(&-&half(), n)
            .as_constant()
            .expect("no free variables"),
    }
}

/// Appell polynomial `sum_k binom(n, k) c_k x^{n-k}`.
fn appell(constants: &[ExactScalar], n: u32, var: Var) -> MultiPoly {
    let xp = MultiPoly::var(var);
    (0..=n).fold(MultiPoly::zero(), |acc, k| {
        let c = &binomial_scalar(n, k) * &constants[k as usize];
        &acc + &xp.pow(n - k).scale(&c)
    })
}

pub fn bernoulli_poly(n: u32, path: Path) -> MultiPoly {
    match path {
        Path::Oracle => appell(&bernoulli_oracle_table(n), n, x()),
        Path::Umbral => logistic_power(&(&MultiPoly::var(x()) - &half()), n),
    }
}

// -------------------------------------------------------------------- Euler

/// `n! [t^n] sech(t)` for `n = 0..=n_max`.
fn euler_oracle_table(n_max: u32) -> Vec<ExactScalar> {
    let order = n_max as usize;
    let cosh = TruncSeries::from_fn(t_var(), order, |k| {
        if k % 2 == 0 {
            crate::util::inv_factorial(k as u32)
        } else {
            ExactScalar::zero()
        }
    });
    let sech = cosh.reciprocal().expect("unit constant term");
    (0..=order).map(|k| sech.egf_coeff(k)).collect()
}

/// `E_k(0) = k! [t^k] 2/(e^t + 1)`
fn euler_poly_constants(n_max: u32) -> Vec<ExactScalar> {
    let order = n_max as usize;
    let mut denom = exp_series(t_var(), order);
    // (e^t + 1) / 2
    let shifted = TruncSeries::from_fn(t_var(), order, |k| {
        let c = denom.coeff(k).clone();
        if k == 0 {
            &(&c + &ExactScalar::one()) * &ExactScalar::ratio(1, 2)
        } else {
            &c * &ExactScalar::ratio(1, 2)
        }
    });
    denom = shifted.reciprocal().expect("unit constant term");
    (0..=order).map(|k| denom.egf_coeff(k)).collect()
}

fn sech_shifted(shift: &MultiPoly) -> (UmbralSymbol, MultiPoly) {
    let l0 = UmbralSymbol::scalar(Umbra::HyperbolicSecant, 0);
    let base = &l0.poly().scale(&ExactScalar::i()) + shift;
    (l0, base)
}

pub fn euler_table(n_max: u32, path: Path) -> Vec<ExactScalar> {
    match path {
        Path::Oracle => euler_oracle_table(n_max),
        Path::Umbral => (0..=n_max).map(|n| euler_number(n, Path::Umbral)).collect(),
    }
}

pub fn euler_number(n: u32, path: Path) -> ExactScalar {
    match path {
        Path::Oracle => euler_oracle_table(n).pop().unwrap(),
        Path::Umbral => {
            // E_n = 2^n E (i L0)^n
            let (l0, base) = sech_shifted(&MultiPoly::zero());
            let e = expect(&UmbralExpr::new(base.pow(n)).bind(&l0)).expect("bound");
            &e.as_constant().expect("no free variables") * &ExactScalar::from_int(2).pow(n)
        }
    }
}

pub fn euler_poly(n: u32, path: Path) -> MultiPoly {
    match path {
        Path::Oracle => appell(&euler_poly_constants(n), n, x()),
        Path::Umbral => {
            let (l0, base) = sech_shifted(&(&MultiPoly::var(x()) - &half()));
            expect(&UmbralExpr::new(base.pow(n)).bind(&l0)).expect("bound")
        }
    }
}

// ------------------------------------------------------------------ Hermite

/// Physicists' Hermite polynomial `H_n(u)`.
pub fn hermite(n: u32, path: Path) -> MultiPoly {
    match path {
        Path::Oracle => hermite_oracle_table(n).pop().unwrap(),
        Path::Umbral => {
            // H_n(u) = E (2u + iG)^n, G ~ N(0, 2)
            let g = UmbralSymbol::scalar(Umbra::GaussM, 0);
            let base = &MultiPoly::var(u()).scale(&ExactScalar::from_int(2)) + &g.poly().scale(&ExactScalar::i());
            expect(&UmbralExpr::new(base.pow(n)).bind(&g)).expect("bound")
        }
    }
}

/// `H_0..=H_{n_max}` by `H_{n+1} = 2u H_n - 2n H_{n-1}`.
pub fn hermite_oracle_table(n_max: u32) -> Vec<MultiPoly> {
    let two_u = MultiPoly::var(u()).scale(&ExactScalar::from_int(2));
    let mut h = vec![MultiPoly::one()];
    if n_max >= 1 {
        h.push(two_u.clone());
    }
    for n in 1..n_max {
        let next = &(&two_u * &h[n as usize]) - &h[n as usize - 1].scale(&ExactScalar::from_int(2 * n as i64));
        h.push(next);
    }
    h
}

// ------------------------------------------------- Carlitz and Zeilberger

fn two_index_sum(m: u32, n: u32, term: impl Fn(u32) -> MultiPoly) -> MultiPoly {
    (0..=m.min(n)).fold(MultiPoly::zero(), |acc, k| {
        let c = &(&binomial_scalar(m, k) * &binomial_scalar(n, k)) * &factorial_scalar(k);
        &acc + &term(k).scale(&c)
    })
}

/// `H_{m,n}(u, v) = sum_k binom(m,k) binom(n,k) k! u^{m-k} v^{n-k}`
pub fn carlitz_hermite(m: u32, n: u32, path: Path) -> MultiPoly {
    let (up, vp) = (MultiPoly::var(u()), MultiPoly::var(v()));
    match path {
        Path::Oracle => two_index_sum(m, n, |k| &up.pow(m - k) * &vp.pow(n - k)),
        Path::Umbral if m < n => carlitz_hermite(n, m, Path::Umbral).rename(&[(u(), v()), (v(), u())]),
        Path::Umbral => {
            // u^{m-n} E (1 + Z)^m (uv + conj Z)^n
            let (z, zb) = UmbralSymbol::circular_pair(0);
            let body = &(&MultiPoly::one() + &z.poly()).pow(m) * &(&(&up * &vp) + &zb.poly()).pow(n);
            let e = expect(&UmbralExpr::new(body).bind(&z).bind(&zb)).expect("bound");
            &e * &up.pow(m - n)
        }
    }
}

/// `H_{m,n}(w) = sum_k binom(m,k) binom(n,k) k! w^k`
pub fn zeilberger_hermite(m: u32, n: u32, path: Path) -> MultiPoly {
    zeilberger_hermite_in(m, n, w(), path)
}

/// Zeilberger's polynomial in an arbitrary variable.
pub fn zeilberger_hermite_in(m: u32, n: u32, var: Var, path: Path) -> MultiPoly {
    let wp = MultiPoly::var(var);
    match path {
        Path::Oracle => two_index_sum(m, n, |k| wp.pow(k)),
        Path::Umbral => {
            // E (1 + Z)^m (1 + w conj Z)^n
            let (z, zb) = UmbralSymbol::circular_pair(0);
            let body = &(&MultiPoly::one() + &z.poly()).pow(m) * &(&MultiPoly::one() + &(&wp * &zb.poly())).pow(n);
            expect(&UmbralExpr::new(body).bind(&z).bind(&zb)).expect("bound")
        }
    }
}

// ----------------------------------------------------- power sums and K_n

/// `S_k(n) = sum_{i=1}^n i^k`
pub fn power_sum(k: u32, n: u32, path: PowerSumPath) -> ExactScalar {
    match path {
        PowerSumPath::Direct => (1..=n as i64).fold(ExactScalar::zero(), |acc, i| &acc + &ExactScalar::from_int(i).pow(k)),
        PowerSumPath::BernoulliFormula => {
            // sum_i (-1)^{k-i} binom(k,i) n^{i+1}/(i+1) B_{k-i}
            let b = bernoulli_oracle_table(k);
            let nn = ExactScalar::from_int(n as i64);
            (0..=k).fold(ExactScalar::zero(), |acc, i| {
                let term = &(&(&crate::util::sign(k - i) * &binomial_scalar(k, i)) * &nn.pow(i + 1))
                    * &(&ExactScalar::ratio(1, i as i64 + 1) * &b[(k - i) as usize]);
                &acc + &term
            })
        }
        PowerSumPath::Integral => {
            // int_0^n B_k(z + 1) dz
            let z = Var::new("z");
            let shifted = bernoulli_poly(k, Path::Umbral).substitute(x(), &(&MultiPoly::var(z) + &MultiPoly::one()));
            integrate_poly(&shifted, z, &MultiPoly::zero(), &MultiPoly::int(n as i64))
                .as_constant()
                .expect("definite integral of a univariate polynomial")
        }
    }
}

/// `K_n = sum_{i=0}^n binom(n, i) B_{n+i+1}` from a precomputed Bernoulli table.
pub fn chen_k_from(bernoulli: &[ExactScalar], n: u32) -> ExactScalar {
    (0..=n).fold(ExactScalar::zero(), |acc, i| {
        &acc + &(&binomial_scalar(n, i) * &bernoulli[(n + i + 1) as usize])
    })
}

pub fn chen_k(n: u32) -> ExactScalar {
    chen_k_from(&bernoulli_oracle_table(2 * n + 1), n)
}

/// `int_lower^upper p d(var)`, bounds may be polynomials in other variables.
pub fn integrate_poly(p: &MultiPoly, var: Var, lower: &MultiPoly, upper: &MultiPoly) -> MultiPoly {
    p.integrate(var, lower, upper)
}

/// Dispatches a family request given by name and indices.
pub fn family_value(family: Family, indices: &[u32], path: Path) -> Option<FamilyValue> {
    let value = match (family, indices) {
        (Family::BernoulliNum, &[n]) => bernoulli_number(n, path).into(),
        (Family::BernoulliPoly, &[n]) => bernoulli_poly(n, path),
        (Family::EulerNum, &[n]) => euler_number(n, path).into(),
        (Family::EulerPoly, &[n]) => euler_poly(n, path),
        (Family::Hermite, &[n]) => hermite(n, path),
        (Family::CarlitzHermite, &[m, n]) => carlitz_hermite(m, n, path),
        (Family::ZeilbergerHermite, &[m, n]) => zeilberger_hermite(m, n, path),
        (Family::PowerSum, &[k, n]) => {
            let route = match path {
                Path::Oracle => PowerSumPath::Direct,
                Path::Umbral => PowerSumPath::Integral,
            };
            power_sum(k, n, route).into()
        }
        (Family::ChenK, &[n]) => chen_k(n).into(),
        _ => return None,
    };
    Some(FamilyValue {
        family,
        indices: indices.to_vec(),
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExactScalar {
        ExactScalar::ratio(n, d)
    }

    fn xp() -> MultiPoly {
        MultiPoly::var(x())
    }

    #[test]
    fn labels_render() {
        let v = family_value(Family::BernoulliNum, &[4], Path::Oracle).unwrap();
        assert_eq!(v.to_string(), "B_4 = -1/30");
        let c = family_value(Family::CarlitzHermite, &[1, 1], Path::Umbral).unwrap();
        assert_eq!(c.label(), "H_{1,1}(u,v)");
        assert_eq!("euler_poly".parse::<Family>().unwrap(), Family::EulerPoly);
        assert!(family_value(Family::Hermite, &[1, 2], Path::Oracle).is_none());
    }

    #[test]
    fn bernoulli_first_values() {
        for path in [Path::Oracle, Path::Umbral] {
            assert_eq!(bernoulli_number(0, path), r(1, 1));
            assert_eq!(bernoulli_number(4, path), r(-1, 30));
            assert_eq!(bernoulli_number(12, path), r(-691, 2730));
        }
        assert_eq!(bernoulli_table(10, Path::Umbral), bernoulli_table(10, Path::Oracle));
    }

    #[test]
    fn bernoulli_polys() {
        for path in [Path::Oracle, Path::Umbral] {
            assert_eq!(bernoulli_poly(2, path), &(&xp().pow(2) - &xp()) + &MultiPoly::ratio(1, 6));
            let b3 = &(&xp().pow(3) - &xp().pow(2).scale(&r(3, 2))) + &xp().scale(&r(1, 2));
            assert_eq!(bernoulli_poly(3, path), b3);
        }
        let b = bernoulli_table(30, Path::Oracle);
        for n in 0..=30 {
            assert_eq!(bernoulli_poly(n, Path::Umbral).substitute(x(), &MultiPoly::zero()), MultiPoly::constant(b[n as usize].clone()));
        }
    }

    #[test]
    fn euler_first_values() {
        for path in [Path::Oracle, Path::Umbral] {
            assert_eq!(euler_number(4, path), r(5, 1));
            assert_eq!(euler_number(2, path), r(-1, 1));
            assert_eq!(euler_number(6, path), r(-61, 1));
            assert_eq!(euler_poly(2, path), &xp().pow(2) - &xp());
            let e3 = &(&xp().pow(3) - &xp().pow(2).scale(&r(3, 2))) + &MultiPoly::ratio(1, 4);
            assert_eq!(euler_poly(3, path), e3);
            assert_eq!(euler_poly(0, path), MultiPoly::one());
        }
    }

    #[test]
    fn hermite_low_orders() {
        let up = MultiPoly::var(u());
        for path in [Path::Oracle, Path::Umbral] {
            assert_eq!(hermite(1, path), up.scale(&r(2, 1)));
            assert_eq!(hermite(2, path), &up.pow(2).scale(&r(4, 1)) - &MultiPoly::int(2));
            assert_eq!(hermite(3, path), &up.pow(3).scale(&r(8, 1)) - &up.scale(&r(12, 1)));
        }
    }

    #[test]
    fn two_index_examples() {
        let (up, vp, wp) = (MultiPoly::var(u()), MultiPoly::var(v()), MultiPoly::var(w()));
        let uv = &up * &vp;
        for path in [Path::Oracle, Path::Umbral] {
            assert_eq!(carlitz_hermite(1, 1, path), &uv + &MultiPoly::one());
            assert_eq!(carlitz_hermite(3, 0, path), up.pow(3));
            let c22 = &(&uv.pow(2) + &uv.scale(&r(4, 1))) + &MultiPoly::int(2);
            assert_eq!(carlitz_hermite(2, 2, path), c22);
            assert_eq!(carlitz_hermite(1, 3, path), carlitz_hermite(1, 3, Path::Oracle));
            assert_eq!(zeilberger_hermite(1, 1, path), &MultiPoly::one() + &wp);
            assert_eq!(zeilberger_hermite(0, 5, path), MultiPoly::one());
            let z22 = &(&MultiPoly::one() + &wp.scale(&r(4, 1))) + &wp.pow(2).scale(&r(2, 1));
            assert_eq!(zeilberger_hermite(2, 2, path), z22);
        }
    }

    #[test]
    fn power_sums_agree() {
        for path in [PowerSumPath::Direct, PowerSumPath::BernoulliFormula, PowerSumPath::Integral] {
            assert_eq!(power_sum(2, 3, path), r(14, 1));
            assert_eq!(power_sum(1, 5, path), r(15, 1));
            assert_eq!(power_sum(7, 0, path), r(0, 1));
        }
        for k in 0..=8 {
            for n in 0..=6 {
                let d = power_sum(k, n, PowerSumPath::Direct);
                assert_eq!(power_sum(k, n, PowerSumPath::BernoulliFormula), d);
                assert_eq!(power_sum(k, n, PowerSumPath::Integral), d);
            }
        }
    }

    #[test]
    fn chen_k_values() {
        assert_eq!(chen_k(0), r(-1, 2));
        assert_eq!(chen_k(1), r(1, 6));
        // B3 + 2 B4 + B5
        assert_eq!(chen_k(2), r(-1, 15));
    }

    #[test]
    fn integration_examples() {
        let z = Var::new("z");
        let b1 = bernoulli_poly(1, Path::Oracle).rename(&[(x(), z)]);
        assert!(integrate_poly(&b1, z, &MultiPoly::zero(), &MultiPoly::one()).is_zero());
        let b2 = bernoulli_poly(2, Path::Oracle).rename(&[(x(), z)]);
        assert_eq!(integrate_poly(&b2, z, &xp(), &(&xp() + &MultiPoly::one())), xp().pow(2));
        assert!(integrate_poly(&b2, z, &MultiPoly::zero(), &MultiPoly::zero()).is_zero());
    }
}
