//! The four umbrae as moment rules of concrete random variables.
//!
//! * `Logistic` (L): density `(pi/2) sech^2(pi x)`, `E e^{itL} = (t/2)/sinh(t/2)`.
//! * `HyperbolicSecant` (L0): density `sech(pi x)`, `E e^{itL0} = sech(t/2)`.
//! * `GaussM`: `N(0, 2)`; the Hermite umbra is `M = i * GaussM`.
//! * `CircZ`: circular complex normal, components `Z` (0) and `conj(Z)` (1),
//!   with `E Z^m conj(Z)^n = delta_{m,n} m!`.
//!
//! Moments of the scalar umbrae come from exact series expansion of their
//! characteristic functions and are cached on demand.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{elementary_series, ElementaryKind, ExactScalar, Var};
use crate::util::factorial;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Umbra {
    Logistic,
    HyperbolicSecant,
    GaussM,
    CircZ,
}

impl Umbra {
    pub const ALL: [Umbra; 4] = [Umbra::Logistic, Umbra::HyperbolicSecant, Umbra::GaussM, Umbra::CircZ];

    /// Number of components: 2 for the `(Z, conj Z)` pair, 1 otherwise.
    pub fn arity(self) -> usize {
        match self {
            Umbra::CircZ => 2,
            _ => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Umbra::Logistic => "L",
            Umbra::HyperbolicSecant => "L0",
            Umbra::GaussM => "G",
            Umbra::CircZ => "Z",
        }
    }
}

impl fmt::Display for Umbra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MomentIndex {
    Scalar(u32),
    /// `(m, n)` for `E Z^m conj(Z)^n`
    Joint(u32, u32),
}

/// A snapshot of an umbra's moments up to some order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentTable {
    pub umbra: Umbra,
    pub entries: BTreeMap<MomentIndex, ExactScalar>,
}

impl MomentTable {
    /// All moments with every index component `<= order`.
    pub fn snapshot(umbra: Umbra, order: u32) -> Self {
        let entries = match umbra {
            Umbra::CircZ => (0..=order)
                .flat_map(|m| (0..=order).map(move |n| MomentIndex::Joint(m, n)))
                .map(|idx| (idx, moment(umbra, idx)))
                .collect(),
            _ => (0..=order)
                .map(|n| (MomentIndex::Scalar(n), moment(umbra, MomentIndex::Scalar(n))))
                .collect(),
        };
        MomentTable { umbra, entries }
    }
}

/// Grow-only cache of real moments `E X^n`, `n = 0..len`.
struct MomentCache {
    umbra: Umbra,
    values: RwLock<Vec<BigRational>>,
}

impl MomentCache {
    const fn new(umbra: Umbra) -> Self {
        MomentCache {
            umbra,
            values: RwLock::new(Vec::new()),
        }
    }

    fn get(&self, n: u32) -> BigRational {
        if let Some(v) = self.values.read().unwrap().get(n as usize) {
            return v.clone();
        }
        let mut guard = self.values.write().unwrap();
        if guard.len() <= n as usize {
            let order = (n as usize).max(2 * guard.len()).max(16);
            *guard = compute_scalar_moments(self.umbra, order);
        }
        guard[n as usize].clone()
    }
}

static LOGISTIC: MomentCache = MomentCache::new(Umbra::Logistic);
static SECH: MomentCache = MomentCache::new(Umbra::HyperbolicSecant);
static GAUSS: MomentCache = MomentCache::new(Umbra::GaussM);

static SERIES_VAR: LazyLock<Var> = LazyLock::new(|| Var::new("t"));

fn compute_scalar_moments(umbra: Umbra, order: usize) -> Vec<BigRational> {
    match umbra {
        Umbra::Logistic | Umbra::HyperbolicSecant => {
            let kind = if umbra == Umbra::Logistic {
                ElementaryKind::SinhRatio
            } else {
                ElementaryKind::SechHalf
            };
            // E (iX)^n = n! [t^n] phi(t), so E X^n = n! [t^n] phi(t) / i^n
            let cf = elementary_series(kind, *SERIES_VAR, order);
            (0..=order)
                .map(|n| {
                    let m = cf.egf_coeff(n);
                    let plain = &m * &ExactScalar::i_pow(n as u32).inv().expect("unit");
                    debug_assert!(plain.is_real());
                    plain.into_parts().0
                })
                .collect()
        }
        Umbra::GaussM => (0..=order as u32).map(gauss_moment).collect(),
        Umbra::CircZ => unreachable!("CircZ moments are joint"),
    }
}

/// `E G^n` for `G ~ N(0, 2)`: zero for odd `n`, `(2k-1)!! 2^k = (2k)!/k!` for `n = 2k`.
fn gauss_moment(n: u32) -> BigRational {
    if n % 2 == 1 {
        return BigRational::zero();
    }
    let k = n / 2;
    BigRational::from_integer(factorial(2 * k) / factorial(k))
}

/// Exact moment of the plain (un-rotated) variable.
///
/// Panics if the index shape does not match the umbra's arity.
pub fn moment(umbra: Umbra, index: MomentIndex) -> ExactScalar {
    match (umbra, index) {
        (Umbra::CircZ, MomentIndex::Joint(m, n)) => {
            if m == n {
                ExactScalar::from_bigint(factorial(m))
            } else {
                ExactScalar::zero()
            }
        }
        (Umbra::Logistic, MomentIndex::Scalar(n)) => ExactScalar::real(LOGISTIC.get(n)),
        (Umbra::HyperbolicSecant, MomentIndex::Scalar(n)) => ExactScalar::real(SECH.get(n)),
        (Umbra::GaussM, MomentIndex::Scalar(n)) => ExactScalar::real(GAUSS.get(n)),
        (u, idx) => panic!("moment index {idx:?} does not fit umbra {u}"),
    }
}

pub fn scalar_moment(umbra: Umbra, n: u32) -> ExactScalar {
    moment(umbra, MomentIndex::Scalar(n))
}
