//! Seeded Monte Carlo samplers for the logistic and hyperbolic secant laws,
//! moment estimators, Kolmogorov-Smirnov gates and numeric quadrature.
//!
//! Streams are split into fixed-size chunks. Chunk `k` draws from a ChaCha8
//! generator seeded with the sampler seed on stream `k`, so output is identical
//! regardless of how many threads run.

mod quadrature;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

pub use num_complex::Complex64;
use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::ExactScalar;
use crate::error::{Error, Result};
use crate::umbrae::{scalar_moment, Umbra};
use crate::util::{binomial_scalar, factorial_scalar};

pub use quadrature::{gauss_kronrod, quad_bernoulli_even, QuadResult};

/// Draws per independently seeded chunk.
pub const CHUNK: usize = 1 << 16;

/// Highest moment `mc_moment` accepts; variance grows too fast beyond it.
pub const MOMENT_CAP: u32 = 8;

/// Asymptotic Kolmogorov-Smirnov critical value at alpha ~ 0.001.
pub const KS_CRITICAL: f64 = 1.949;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    LogisticL,
    SechL0,
    LaplaceViaGauss,
    /// `(L0 + L)/2` with independent summands.
    CompoundHalf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `(1/2pi) log(U/(1-U))`
    LogUniformRatio,
    /// `(1/2pi) log(E1/E2)`
    LogExpRatio,
    /// `(1/pi) log|C|`
    LogAbsCauchy,
    /// `(1/pi) (log|N1| - log|N2|)`
    LogAbsGaussRatio,
    /// `N / sqrt(2E)`, heavy-tailed, not Laplace.
    GaussOverSqrtExp,
    /// `N sqrt(2E)`, standard Laplace.
    GaussTimesSqrtExp,
    /// `(L0 + L)/2` from the Cauchy and uniform constructions.
    AverageL0L,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::LogUniformRatio,
        Construction::LogExpRatio,
        Construction::LogAbsCauchy,
        Construction::LogAbsGaussRatio,
        Construction::GaussOverSqrtExp,
        Construction::GaussTimesSqrtExp,
        Construction::AverageL0L,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::LogUniformRatio => "log_uniform_ratio",
            Construction::LogExpRatio => "log_exp_ratio",
            Construction::LogAbsCauchy => "log_abs_cauchy",
            Construction::LogAbsGaussRatio => "log_abs_gauss_ratio",
            Construction::GaussOverSqrtExp => "gauss_over_sqrt_exp",
            Construction::GaussTimesSqrtExp => "gauss_times_sqrt_exp",
            Construction::AverageL0L => "average_L0_L",
        }
    }

    /// The law this construction is meant to produce.
    pub fn target(self) -> Target {
        match self {
            Construction::LogUniformRatio | Construction::LogExpRatio => Target::LogisticL,
            Construction::LogAbsCauchy | Construction::LogAbsGaussRatio => Target::SechL0,
            Construction::GaussOverSqrtExp | Construction::GaussTimesSqrtExp => Target::LaplaceViaGauss,
            Construction::AverageL0L => Target::CompoundHalf,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown construction `{s}`")))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SamplerSpec {
    pub target: Target,
    pub construction: Construction,
    pub seed: u64,
}

impl SamplerSpec {
    pub fn new(target: Target, construction: Construction, seed: u64) -> Result<Self> {
        if construction.target() != target {
            return Err(Error::InvalidArgument(format!(
                "construction {construction} does not sample {target:?}"
            )));
        }
        Ok(SamplerSpec {
            target,
            construction,
            seed,
        })
    }

    pub fn of(construction: Construction, seed: u64) -> Self {
        SamplerSpec {
            target: construction.target(),
            construction,
            seed,
        }
    }
}

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(Open01)
}

fn exponential(rng: &mut ChaCha8Rng) -> f64 {
    -uniform(rng).ln()
}

fn cauchy(rng: &mut ChaCha8Rng) -> f64 {
    (PI * (uniform(rng) - 0.5)).tan()
}

/// Box-Muller, cosine branch only: one normal per two uniforms.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let (u1, u2) = (uniform(rng), uniform(rng));
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

fn logistic_uniform(rng: &mut ChaCha8Rng) -> f64 {
    let u = uniform(rng);
    (u / (1.0 - u)).ln() / (2.0 * PI)
}

fn sech_cauchy(rng: &mut ChaCha8Rng) -> f64 {
    cauchy(rng).abs().ln() / PI
}

fn draw(c: Construction, rng: &mut ChaCha8Rng) -> f64 {
    match c {
        Construction::LogUniformRatio => logistic_uniform(rng),
        Construction::LogExpRatio => (exponential(rng) / exponential(rng)).ln() / (2.0 * PI),
        Construction::LogAbsCauchy => sech_cauchy(rng),
        Construction::LogAbsGaussRatio => (gaussian(rng).abs().ln() - gaussian(rng).abs().ln()) / PI,
        Construction::GaussOverSqrtExp => gaussian(rng) / (2.0 * exponential(rng)).sqrt(),
        Construction::GaussTimesSqrtExp => gaussian(rng) * (2.0 * exponential(rng)).sqrt(),
        Construction::AverageL0L => 0.5 * (sech_cauchy(rng) + logistic_uniform(rng)),
    }
}

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

fn chunk_bounds(count: usize) -> impl IndexedParallelIterator<Item = (usize, usize)> {
    let chunks = count.div_ceil(CHUNK);
    (0..chunks).into_par_iter().map(move |k| (k, CHUNK.min(count - k * CHUNK)))
}

/// `count` i.i.d. draws from the sampler's construction.
pub fn sample(spec: &SamplerSpec, count: usize) -> Vec<f64> {
    let parts: Vec<Vec<f64>> = chunk_bounds(count)
        .map(|(k, len)| {
            let mut rng = chunk_rng(spec.seed, k);
            (0..len).map(|_| draw(spec.construction, &mut rng)).collect()
        })
        .collect();
    parts.concat()
}

/// Welford accumulator, mergeable across chunks.
#[derive(Copy, Clone, Debug, Default)]
struct Running {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Running {
    fn push(&mut self, x: f64) {
        self.n += 1.0;
        let d = x - self.mean;
        self.mean += d / self.n;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Running) -> Running {
        if self.n == 0.0 {
            return other;
        }
        if other.n == 0.0 {
            return self;
        }
        let n = self.n + other.n;
        let d = other.mean - self.mean;
        Running {
            n,
            mean: self.mean + d * other.n / n,
            m2: self.m2 + other.m2 + d * d * self.n * other.n / n,
        }
    }

    fn std_error(&self) -> f64 {
        (self.m2 / (self.n - 1.0)).sqrt() / self.n.sqrt()
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SampleStats {
    pub count: usize,
    pub estimate: Complex64,
    /// Standard errors of the real and imaginary parts.
    pub std_error: Complex64,
}

impl SampleStats {
    /// Whether both components lie within `k` standard errors of `exact`.
    pub fn within(&self, exact: Complex64, k: f64) -> bool {
        let slack = 1e-12;
        (self.estimate.re - exact.re).abs() <= k * self.std_error.re + slack
            && (self.estimate.im - exact.im).abs() <= k * self.std_error.im + slack
    }

    /// Distance to `exact` in units of standard error, worst component.
    pub fn z_score(&self, exact: Complex64) -> f64 {
        let z = |d: f64, se: f64| if se > 0.0 { d.abs() / se } else if d == 0.0 { 0.0 } else { f64::INFINITY };
        z(self.estimate.re - exact.re, self.std_error.re).max(z(self.estimate.im - exact.im, self.std_error.im))
    }
}

/// Estimates `E (i X + shift)^n` for `X` drawn from `spec`.
pub fn mc_moment(spec: &SamplerSpec, shift: f64, n: u32, count: usize) -> Result<SampleStats> {
    if n > MOMENT_CAP {
        return Err(Error::MomentTooHigh {
            requested: n,
            cap: MOMENT_CAP,
        });
    }
    if count < 2 {
        return Err(Error::InvalidArgument("mc_moment needs at least two draws".into()));
    }
    let (re, im) = chunk_bounds(count)
        .map(|(k, len)| {
            let mut rng = chunk_rng(spec.seed, k);
            let (mut re, mut im) = (Running::default(), Running::default());
            for _ in 0..len {
                let z = Complex64::new(shift, draw(spec.construction, &mut rng)).powu(n);
                re.push(z.re);
                im.push(z.im);
            }
            (re, im)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((Running::default(), Running::default()), |(ar, ai), (br, bi)| (ar.merge(br), ai.merge(bi)));
    Ok(SampleStats {
        count,
        estimate: Complex64::new(re.mean, im.mean),
        std_error: Complex64::new(re.std_error(), im.std_error()),
    })
}

/// Exact `E (i X + shift)^n` under the law the target is claimed to have.
///
/// `CompoundHalf` is referenced against the logistic law, which is the
/// distributional claim under test.
pub fn exact_moment(target: Target, shift: &ExactScalar, n: u32) -> ExactScalar {
    let plain = |k: u32| match target {
        Target::LogisticL | Target::CompoundHalf => scalar_moment(Umbra::Logistic, k),
        Target::SechL0 => scalar_moment(Umbra::HyperbolicSecant, k),
        // standard Laplace: E X^k = k! for even k
        Target::LaplaceViaGauss if k.is_multiple_of(2) => factorial_scalar(k),
        Target::LaplaceViaGauss => ExactScalar::from_int(0),
    };
    (0..=n).fold(ExactScalar::from_int(0), |acc, k| {
        let term = &(&binomial_scalar(n, k) * &shift.pow(n - k)) * &(&ExactScalar::i_pow(k) * &plain(k));
        &acc + &term
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cdf {
    /// `(1 + tanh(pi x))/2`
    Logistic,
    /// `(2/pi) arctan(e^{pi x})`
    HyperbolicSecant,
    /// Standard Laplace, density `e^{-|x|}/2`.
    Laplace,
}

impl Cdf {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            Cdf::Logistic => 0.5 * (1.0 + (PI * x).tanh()),
            Cdf::HyperbolicSecant => 2.0 / PI * (PI * x).exp().atan(),
            Cdf::Laplace => {
                if x < 0.0 {
                    0.5 * x.exp()
                } else {
                    1.0 - 0.5 * (-x).exp()
                }
            }
        }
    }

    pub fn for_target(target: Target) -> Cdf {
        match target {
            Target::LogisticL | Target::CompoundHalf => Cdf::Logistic,
            Target::SechL0 => Cdf::HyperbolicSecant,
            Target::LaplaceViaGauss => Cdf::Laplace,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct KsOutcome {
    pub count: usize,
    /// Sup distance between empirical and analytic CDF.
    pub statistic: f64,
    /// `sqrt(count) * statistic`
    pub scaled: f64,
    pub pass: bool,
}

/// One-sample Kolmogorov-Smirnov statistic of `samples` against `cdf`.
pub fn ks_statistic(samples: &mut [f64], cdf: Cdf) -> f64 {
    samples.par_sort_unstable_by(|a, b| a.total_cmp(b));
    let n = samples.len() as f64;
    samples
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf.eval(x);
            ((i as f64 + 1.0) / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// KS gate against the target's own law.
pub fn ks_check(spec: &SamplerSpec, count: usize) -> Result<KsOutcome> {
    ks_check_against(spec, count, Cdf::for_target(spec.target))
}

/// KS gate against an arbitrary CDF, e.g. a deliberately wrong one.
pub fn ks_check_against(spec: &SamplerSpec, count: usize, cdf: Cdf) -> Result<KsOutcome> {
    if count < 10_000 {
        return Err(Error::InvalidArgument("ks_check needs at least 10^4 draws".into()));
    }
    let mut draws = sample(spec, count);
    let statistic = ks_statistic(&mut draws, cdf);
    let scaled = (count as f64).sqrt() * statistic;
    Ok(KsOutcome {
        count,
        statistic,
        scaled,
        pass: scaled < KS_CRITICAL,
    })
}
