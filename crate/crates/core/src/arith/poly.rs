use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::scalar::{format_rational, ExactScalar};
use super::var::Var;

/// Exponent vector in canonical form: sorted by variable, zero exponents dropped.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, exp: u32) -> Self {
        let mut inner = SmallVec::new();
        if exp > 0 {
            inner.push((v, exp));
        }
        Monomial(inner)
    }

    /// Builds a canonical monomial from arbitrary `(var, exp)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut inner: SmallVec<[(Var, u32); 4]> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        inner.sort_by_key(|&(v, _)| v);
        let mut merged: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(inner.len());
        for (v, e) in inner {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial(merged)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Sum of the exponents of the variables in `vars`.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| vars.contains(v))
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits into (exponent of `v`, rest).
    pub fn take(&self, v: Var) -> (u32, Monomial) {
        let mut rest = self.clone();
        let mut exp = 0;
        if let Some(pos) = rest.0.iter().position(|&(w, _)| w == v) {
            exp = rest.0.remove(pos).1;
        }
        (exp, rest)
    }

    /// Partitions the factors into (matching `pred`, not matching).
    pub fn split<F: Fn(Var) -> bool>(&self, pred: F) -> (Monomial, Monomial) {
        let mut yes = SmallVec::new();
        let mut no = SmallVec::new();
        for &(v, e) in &self.0 {
            if pred(v) {
                yes.push((v, e));
            } else {
                no.push((v, e));
            }
        }
        (Monomial(yes), Monomial(no))
    }

    fn render(&self) -> String {
        let mut parts: Vec<(&str, u32)> = self.0.iter().map(|&(v, e)| (v.name(), e)).collect();
        parts.sort();
        parts
            .iter()
            .map(|&(n, e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Sparse multivariate polynomial over Q(i).
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// map and equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(ExactScalar::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(ExactScalar::ratio(num, den))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), ExactScalar::one())
    }

    pub fn term(m: Monomial, c: ExactScalar) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, ExactScalar)>>(terms: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, ExactScalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> ExactScalar {
        self.terms.get(m).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.coeff(&Monomial::one())
    }

    /// The value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(ExactScalar::is_real)
    }

    /// Drops the imaginary part of every coefficient.
    pub fn real_part(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), ExactScalar::real(c.re().clone()))),
        )
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &ExactScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let mut by_power: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.take(v);
            by_power.entry(e).or_default().add_term(rest, c.clone());
        }
        let mut out = MultiPoly::zero();
        let mut power = MultiPoly::one();
        let mut current = 0;
        for (e, part) in by_power {
            while current < e {
                power = &power * value;
                current += 1;
            }
            out = &out + &(&part * &power);
        }
        out
    }

    /// Simultaneous renaming of variables (so swaps like u <-> v work).
    pub fn rename(&self, map: &[(Var, Var)]) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let renamed = Monomial::from_pairs(m.iter().map(|(v, e)| {
                let target = map.iter().find(|(from, _)| *from == v).map(|&(_, to)| to).unwrap_or(v);
                (target, e)
            }));
            (renamed, c.clone())
        }))
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (e, rest) = m.take(v);
            (e > 0).then(|| {
                let mono = rest.mul(&Monomial::power(v, e - 1));
                (mono, c * &ExactScalar::from_int(e as i64))
            })
        }))
    }

    /// Antiderivative in `v` with zero constant of integration.
    pub fn antiderivative(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let (e, rest) = m.take(v);
            let mono = rest.mul(&Monomial::power(v, e + 1));
            (mono, c * &ExactScalar::ratio(1, e as i64 + 1))
        }))
    }

    /// Definite integral over `v` from `lower` to `upper`; other variables pass through.
    pub fn integrate(&self, v: Var, lower: &MultiPoly, upper: &MultiPoly) -> MultiPoly {
        let anti = self.antiderivative(v);
        &anti.substitute(v, upper) - &anti.substitute(v, lower)
    }

    /// Keeps only terms whose monomial satisfies `keep`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl From<ExactScalar> for MultiPoly {
    fn from(c: ExactScalar) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut acc: HashMap<Monomial, ExactScalar> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_poly {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly { (&self).$m(rhs) }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly { self.$m(&rhs) }
        }
    )*};
}

forward_poly!(Add add, Sub sub, Mul mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut rendered: Vec<(u32, String, &ExactScalar)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.total_degree(), m.render(), c))
            .collect();
        rendered.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        for (idx, (_, mono, c)) in rendered.iter().enumerate() {
            let negative = c.is_real() && c.re().is_negative();
            let sep = match (idx == 0, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            f.write_str(sep)?;
            let body = if c.is_real() {
                let mag = c.re().abs();
                match (mono.is_empty(), mag.is_one()) {
                    (true, _) => format_rational(&mag),
                    (false, true) => mono.clone(),
                    (false, false) => format!("{}*{}", format_rational(&mag), mono),
                }
            } else if mono.is_empty() {
                c.to_string()
            } else {
                format!("{c}*{mono}")
            };
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
