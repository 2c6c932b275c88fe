//! Registry of identities and their exact verifier.
//!
//! Every identity is checked by computing both sides along independent
//! routes (oracle recurrence, umbral expectation, or a closed form expanded
//! as a truncated series) and comparing canonical polynomials structurally.
//!
//! Identities that only hold away from certain indices carry those indices
//! as expected-fail witnesses. Witnesses are reported next to the main
//! check but never count toward its status.

mod bernoulli;
mod euler;
mod generating;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arith::MultiPoly;
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Gessel72,
    ReflectB,
    Kaneko,
    Momiyama,
    BIntegral,
    BUnitInterval,
    SymmBinom,
    Chen1,
    Chen2,
    GesselMult,
    EulerReflect,
    EulerShift,
    EulerEvenSum,
    BeLinkSum,
    BeLinkInt,
    EulerTwoTerm,
    HermiteMaster,
    HermiteGfEven,
    HermiteGfBivar,
    CarlitzMaster,
    ZeilGf,
    ZeilBilinear,
    Quintuple,
}

impl IdentityId {
    pub const ALL: [IdentityId; 23] = [
        IdentityId::Gessel72,
        IdentityId::ReflectB,
        IdentityId::Kaneko,
        IdentityId::Momiyama,
        IdentityId::BIntegral,
        IdentityId::BUnitInterval,
        IdentityId::SymmBinom,
        IdentityId::Chen1,
        IdentityId::Chen2,
        IdentityId::GesselMult,
        IdentityId::EulerReflect,
        IdentityId::EulerShift,
        IdentityId::EulerEvenSum,
        IdentityId::BeLinkSum,
        IdentityId::BeLinkInt,
        IdentityId::EulerTwoTerm,
        IdentityId::HermiteMaster,
        IdentityId::HermiteGfEven,
        IdentityId::HermiteGfBivar,
        IdentityId::CarlitzMaster,
        IdentityId::ZeilGf,
        IdentityId::ZeilBilinear,
        IdentityId::Quintuple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Gessel72 => "GESSEL_72",
            IdentityId::ReflectB => "REFLECT_B",
            IdentityId::Kaneko => "KANEKO",
            IdentityId::Momiyama => "MOMIYAMA",
            IdentityId::BIntegral => "B_INTEGRAL",
            IdentityId::BUnitInterval => "B_UNIT_INTERVAL",
            IdentityId::SymmBinom => "SYMM_BINOM",
            IdentityId::Chen1 => "CHEN_1",
            IdentityId::Chen2 => "CHEN_2",
            IdentityId::GesselMult => "GESSEL_MULT",
            IdentityId::EulerReflect => "EULER_REFLECT",
            IdentityId::EulerShift => "EULER_SHIFT",
            IdentityId::EulerEvenSum => "EULER_EVEN_SUM",
            IdentityId::BeLinkSum => "BE_LINK_SUM",
            IdentityId::BeLinkInt => "BE_LINK_INT",
            IdentityId::EulerTwoTerm => "EULER_TWO_TERM",
            IdentityId::HermiteMaster => "HERMITE_MASTER",
            IdentityId::HermiteGfEven => "HERMITE_GF_EVEN",
            IdentityId::HermiteGfBivar => "HERMITE_GF_BIVAR",
            IdentityId::CarlitzMaster => "CARLITZ_MASTER",
            IdentityId::ZeilGf => "ZEIL_GF",
            IdentityId::ZeilBilinear => "ZEIL_BILINEAR",
            IdentityId::Quintuple => "QUINTUPLE",
        }
    }

    /// The statement being checked, in plain notation.
    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::Gessel72 => "(B+1)^n = B^n for n != 1",
            IdentityId::ReflectB => "(B+1)^n = (-1)^n B^n for n != 1",
            IdentityId::Kaneko => "sum_{i=0}^{n+1} binom(n+1,i) (n+i+1) B_{n+i} = 0",
            IdentityId::Momiyama => {
                "(-1)^m sum_{k=0}^{m} binom(m+1,k)(n+k+1)B_{n+k} = (-1)^{n+1} sum_{k=0}^{n} binom(n+1,k)(m+k+1)B_{m+k}"
            }
            IdentityId::BIntegral => "int_x^y B_n(z) dz = (B_{n+1}(y) - B_{n+1}(x))/(n+1), n >= 2",
            IdentityId::BUnitInterval => "int_x^{x+1} B_n(z) dz = x^n",
            IdentityId::SymmBinom => "sum_k binom(m,k) B_{n+k} = (-1)^{m+n} sum_k binom(n,k) B_{m+k}",
            IdentityId::Chen1 => "sum_{k=0}^{n} binom(2n-k,k) 2n/(2n-k) K_k = -B_{2n}, n >= 1",
            IdentityId::Chen2 => "sum_{k=0}^{n-1} binom(2n-k-1,k) (2n-1)/(2n-k-1) K_k = B_{2n-1}, n >= 1",
            IdentityId::GesselMult => "B_n = 1/(a(1-a^n)) sum_{k<n} a^k binom(n,k) B_k S_{n-k}(a-1)",
            IdentityId::EulerReflect => "E_n(1-x) = (-1)^n E_n(x)",
            IdentityId::EulerShift => "sum_r binom(n,r) E_r(x) = E_n(x+1)",
            IdentityId::EulerEvenSum => "sum_{r=0}^{n} binom(2n,2r) E_{2r} = 0, n >= 1",
            IdentityId::BeLinkSum => "B_n((x+y)/2) = 2^-n sum_k binom(n,k) B_{n-k}(x) E_k(y)",
            IdentityId::BeLinkInt => "int_x^{x+1/2} B_n(z) dz = E_n(2x)/2^{n+1}",
            IdentityId::EulerTwoTerm => "E_n(x+1) + E_n(x) = 2 x^n",
            IdentityId::HermiteMaster => "e^{Mx + M^2 y} = exp(-x^2/(1+4y)) / sqrt(1+4y)",
            IdentityId::HermiteGfEven => "sum H_{2n}(u) x^n/n! = exp(4u^2 x/(1+4x)) / sqrt(1+4x)",
            IdentityId::HermiteGfBivar => {
                "sum H_{2m+n}(u) x^m/m! y^n/n! = e^{-y^2/(4x)} exp((2u sqrt(x) + y/(2 sqrt(x)))^2/(1+4x)) / sqrt(1+4x)"
            }
            IdentityId::CarlitzMaster => {
                "E exp(Za + Zb b + Z^2 u + Z Zb v + Zb^2 w) = exp((a^2 w + b^2 u + ab(1-v))/D) / sqrt(D), D = (1-v)^2 - 4uw"
            }
            IdentityId::ZeilGf => "sum H_{m,n}(w) x^m/m! y^n/n! = exp(x + y + wxy)",
            IdentityId::ZeilBilinear => {
                "sum H_{m,n}(u) H_{m,n}(v) x^m/m! y^n/n! = exp((x + y + (u+v)xy)/(1-uvxy)) / (1-uvxy)"
            }
            IdentityId::Quintuple => {
                "sum H_{i+2k+m, j+2l+m}(u) v^i w^j x^k y^l t^m / (i!j!k!l!m!) = exp(N/D)/sqrt(D)"
            }
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown identity `{s}`")))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    Quick,
    Full,
}

/// Parameter ranges for a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest index for one-parameter index identities.
    pub index: u32,
    /// Largest index for each parameter of two-parameter identities.
    pub pair_index: u32,
    /// Truncation order for generating-function identities.
    pub series_order: u32,
    /// Total index for the five-variable quintuple sum.
    pub quintuple_order: u32,
    /// Values of `a` for the multiplication theorem.
    pub multipliers: Vec<u32>,
}

impl Bounds {
    pub fn quick() -> Self {
        Bounds {
            index: 10,
            pair_index: 8,
            series_order: 8,
            quintuple_order: 6,
            multipliers: vec![2, 3],
        }
    }

    pub fn full() -> Self {
        Bounds {
            index: 30,
            pair_index: 12,
            series_order: 24,
            quintuple_order: 8,
            multipliers: vec![2, 3, 5],
        }
    }

    pub fn for_profile(profile: Profile) -> Self {
        match profile {
            Profile::Quick => Self::quick(),
            Profile::Full => Self::full(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.index == 0 || self.pair_index == 0 || self.series_order == 0 || self.quintuple_order == 0 {
            return Err(Error::InvalidArgument("bounds must be positive".into()));
        }
        if self.multipliers.is_empty() || self.multipliers.iter().any(|&a| a < 2) {
            return Err(Error::InvalidArgument(
                "multiplication theorem needs at least one multiplier a >= 2".into(),
            ));
        }
        if self.series_order > crate::expectation::MAX_TRUNCATION_ORDER
            || self.quintuple_order > crate::expectation::MAX_TRUNCATION_ORDER
        {
            return Err(Error::TruncationOverflow {
                requested: self.series_order.max(self.quintuple_order),
                bound: crate::expectation::MAX_TRUNCATION_ORDER,
            });
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub params: String,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

/// A side check attached to an identity: a proviso witness, a printed
/// variant, or an alternative route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub label: String,
    pub params: String,
    /// Whether the two sides are expected to agree.
    pub expect_hold: bool,
    pub held: bool,
}

impl Witness {
    pub fn as_expected(&self) -> bool {
        self.expect_hold == self.held
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub range: String,
    pub status: Status,
    /// Number of individual equalities compared.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
    pub witnesses: Vec<Witness>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn witness(&self, label: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.label == label)
    }
}

/// Records comparisons and keeps the first mismatch.
#[derive(Default)]
pub(crate) struct Checker {
    checked: usize,
    counterexample: Option<Counterexample>,
    witnesses: Vec<Witness>,
}

impl Checker {
    pub(crate) fn check<F: FnOnce() -> String>(&mut self, params: F, lhs: MultiPoly, rhs: MultiPoly) -> bool {
        self.checked += 1;
        let ok = lhs == rhs;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                params: params(),
                lhs,
                rhs,
            });
        }
        ok
    }

    pub(crate) fn witness(&mut self, label: &str, params: String, expect_hold: bool, lhs: &MultiPoly, rhs: &MultiPoly) {
        self.witnesses.push(Witness {
            label: label.to_string(),
            params,
            expect_hold,
            held: lhs == rhs,
        });
    }

    pub(crate) fn witness_outcome(&mut self, label: &str, params: String, expect_hold: bool, held: bool) {
        self.witnesses.push(Witness {
            label: label.to_string(),
            params,
            expect_hold,
            held,
        });
    }

    pub(crate) fn finish(self, id: IdentityId, range: String) -> IdentityReport {
        IdentityReport {
            id,
            range,
            status: if self.counterexample.is_none() { Status::Pass } else { Status::Fail },
            checked: self.checked,
            counterexample: self.counterexample,
            witnesses: self.witnesses,
        }
    }
}

/// Checks one identity over `bounds`.
pub fn verify(id: IdentityId, bounds: &Bounds) -> Result<IdentityReport> {
    bounds.validate()?;
    Ok(match id {
        IdentityId::Gessel72 => bernoulli::gessel_72(bounds.index),
        IdentityId::ReflectB => bernoulli::reflect_b(bounds.index),
        IdentityId::Kaneko => bernoulli::kaneko(bounds.index),
        IdentityId::Momiyama => bernoulli::momiyama(bounds.pair_index),
        IdentityId::BIntegral => bernoulli::b_integral(bounds.index),
        IdentityId::BUnitInterval => bernoulli::b_unit_interval(bounds.index),
        IdentityId::SymmBinom => bernoulli::symm_binom(bounds.pair_index),
        IdentityId::Chen1 => bernoulli::chen_1(bounds.index),
        IdentityId::Chen2 => bernoulli::chen_2(bounds.index),
        IdentityId::GesselMult => bernoulli::gessel_mult(bounds.index, &bounds.multipliers),
        IdentityId::EulerReflect => euler::euler_reflect(bounds.index),
        IdentityId::EulerShift => euler::euler_shift(bounds.index),
        IdentityId::EulerEvenSum => euler::euler_even_sum(bounds.index),
        IdentityId::BeLinkSum => euler::be_link_sum(bounds.index),
        IdentityId::BeLinkInt => euler::be_link_int(bounds.index),
        IdentityId::EulerTwoTerm => euler::euler_two_term(bounds.index),
        IdentityId::HermiteMaster => generating::hermite_master(bounds.series_order)?,
        IdentityId::HermiteGfEven => generating::hermite_gf_even(bounds.series_order)?,
        IdentityId::HermiteGfBivar => generating::hermite_gf_bivar(bounds.series_order)?,
        IdentityId::CarlitzMaster => generating::carlitz_master(bounds.series_order)?,
        IdentityId::ZeilGf => generating::zeil_gf(bounds.series_order)?,
        IdentityId::ZeilBilinear => generating::zeil_bilinear(bounds.series_order)?,
        IdentityId::Quintuple => generating::quintuple(bounds.quintuple_order)?,
    })
}

/// Runs every registered identity, in parallel, ordered by id.
pub fn verify_all_with(bounds: &Bounds) -> Result<Vec<IdentityReport>> {
    bounds.validate()?;
    IdentityId::ALL.par_iter().map(|&id| verify(id, bounds)).collect()
}

pub fn verify_all(profile: Profile) -> Vec<IdentityReport> {
    verify_all_with(&Bounds::for_profile(profile)).expect("built-in profiles are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert!("NOPE".parse::<IdentityId>().is_err());
        assert_eq!("zeil-gf".parse::<IdentityId>().unwrap(), IdentityId::ZeilGf);
    }

    #[test]
    fn empty_bounds_rejected() {
        let mut b = Bounds::quick();
        b.index = 0;
        assert!(verify(IdentityId::Kaneko, &b).is_err());
        let mut b = Bounds::quick();
        b.multipliers = vec![1];
        assert!(verify(IdentityId::GesselMult, &b).is_err());
    }
}
