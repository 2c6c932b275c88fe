//! Exact umbral calculus through probabilistic representations.
//!
//! Bernoulli, Euler, Hermite, Carlitz and Zeilberger Hermite families are
//! realized as moments of concrete random variables (logistic, hyperbolic
//! secant, Gaussian, circular complex normal). Every family is built twice,
//! once from a classical recurrence and once through the expectation
//! operator, and a registry of identities checks the two against each other
//! in exact Gaussian-rational arithmetic. Distributional claims that exact
//! arithmetic cannot reach are covered by seeded Monte Carlo and quadrature.

pub mod arith;
pub mod error;
pub mod expectation;
pub mod families;
pub mod identities;
pub mod stochastic;
pub mod umbrae;
pub mod util;

pub use arith::{ExactScalar, Monomial, MultiPoly, TruncSeries, Truncation, Var};
pub use error::{Error, Result};
pub use expectation::{expect, Binding, UmbralExpr, UmbralSymbol};
pub use families::{Family, FamilyValue, Path};
pub use identities::{
    verify, verify_all, verify_all_with, Bounds, Counterexample, IdentityId, IdentityReport, Profile, Status, Witness,
};
pub use stochastic::{Construction, SampleStats, SamplerSpec, Target};
pub use umbrae::{moment, MomentIndex, Umbra};
