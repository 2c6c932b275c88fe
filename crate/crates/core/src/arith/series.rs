use num_traits::{One, Zero};

use super::poly::{Monomial, MultiPoly};
use super::scalar::ExactScalar;
use super::var::Var;
use crate::error::{Error, Result};

/// Default truncation order for univariate series.
pub const DEFAULT_ORDER: usize = 32;

/// Formal power series in one variable, truncated after `t^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    var: Var,
    coeffs: Vec<ExactScalar>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Div,
    Compose,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ElementaryKind {
    /// `exp(t)`
    Exp,
    /// `(t/2) / sinh(t/2)`, the characteristic function of the logistic umbra
    SinhRatio,
    /// `sech(t/2)`, the characteristic function of the hyperbolic secant umbra
    SechHalf,
}

impl TruncSeries {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(var: Var, order: usize, mut coeffs: Vec<ExactScalar>) -> Self {
        coeffs.resize(order + 1, ExactScalar::zero());
        TruncSeries { var, coeffs }
    }

    pub fn from_fn<F: FnMut(usize) -> ExactScalar>(var: Var, order: usize, f: F) -> Self {
        TruncSeries {
            var,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::new(var, order, Vec::new())
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::new(var, order, vec![ExactScalar::one()])
    }

    /// `c * t^k`
    pub fn monomial(var: Var, order: usize, k: usize, c: ExactScalar) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &ExactScalar {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    fn check_compatible(&self, other: &TruncSeries) -> Result<()> {
        if self.var != other.var || self.order() != other.order() {
            return Err(Error::IncompatibleSeries);
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(other)?;
        Ok(TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(other)?;
        Ok(TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(other)?;
        let n = self.order();
        let mut out = vec![ExactScalar::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }

    pub fn reciprocal(&self) -> Result<TruncSeries> {
        let lead_inv = self.coeffs[0].inv().ok_or(Error::DivisionByNonUnit)?;
        let n = self.order();
        let mut out: Vec<ExactScalar> = Vec::with_capacity(n + 1);
        out.push(lead_inv.clone());
        for k in 1..=n {
            let mut acc = ExactScalar::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-(&acc * &lead_inv));
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }

    pub fn div(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(other)?;
        self.mul(&other.reciprocal()?)
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionNonNilpotent);
        }
        let n = self.order();
        let mut acc = TruncSeries::monomial(self.var, n, 0, self.coeffs[n].clone());
        for k in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    pub fn apply(&self, other: &TruncSeries, op: SeriesOp) -> Result<TruncSeries> {
        match op {
            SeriesOp::Add => self.add(other),
            SeriesOp::Mul => self.mul(other),
            SeriesOp::Div => self.div(other),
            SeriesOp::Compose => self.compose(other),
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> TruncSeries {
        TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `t -> c t`.
    pub fn scale_var(&self, c: &ExactScalar) -> TruncSeries {
        let mut power = ExactScalar::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        TruncSeries { var: self.var, coeffs }
    }

    /// Coefficient `k` multiplied by `k!`.
    pub fn egf_coeff(&self, k: usize) -> ExactScalar {
        &self.coeffs[k] * &ExactScalar::from_bigint(crate::util::factorial(k as u32))
    }

    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::power(self.var, k as u32), c.clone())),
        )
    }
}

/// `exp(t)` to `order`.
pub fn exp_series(var: Var, order: usize) -> TruncSeries {
    TruncSeries::from_fn(var, order, |k| {
        ExactScalar::real(num_rational::BigRational::new(
            1.into(),
            crate::util::factorial(k as u32),
        ))
    })
}

/// `cosh(t/2) = sum (t/2)^{2k} / (2k)!`
pub fn cosh_half(var: Var, order: usize) -> TruncSeries {
    let half = ExactScalar::ratio(1, 2);
    exp_series(var, order)
        .scale_var(&half)
        .filter_parity(0)
}

/// `sinh(t/2) / (t/2) = sum (t/2)^{2k} / (2k+1)!`
fn sinh_half_over_half(var: Var, order: usize) -> TruncSeries {
    TruncSeries::from_fn(var, order, |k| {
        if k % 2 == 1 {
            return ExactScalar::zero();
        }
        let denom = crate::util::factorial(k as u32 + 1) * num_bigint::BigInt::from(2).pow(k as u32);
        ExactScalar::real(num_rational::BigRational::new(1.into(), denom))
    })
}

impl TruncSeries {
    /// Keeps the coefficients whose index has the given parity.
    fn filter_parity(&self, parity: usize) -> TruncSeries {
        TruncSeries {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == parity { c.clone() } else { ExactScalar::zero() })
                .collect(),
        }
    }
}

pub fn elementary_series(kind: ElementaryKind, var: Var, order: usize) -> TruncSeries {
    match kind {
        ElementaryKind::Exp => exp_series(var, order),
        ElementaryKind::SinhRatio => sinh_half_over_half(var, order)
            .reciprocal()
            .expect("constant term is 1"),
        ElementaryKind::SechHalf => cosh_half(var, order)
            .reciprocal()
            .expect("constant term is 1"),
    }
}
