//! Adaptive Gauss-Kronrod (7, 15) quadrature and the csch^2 integral for
//! even Bernoulli numbers.
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use crate::error::{Error, Result};

// QUADPACK nodes and weights at their published digits
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Kronrod estimate and `|Kronrod - Gauss|` on `[a, b]`.
fn kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        k += WGK[j] * pair;
        if j % 2 == 1 {
            g += WG[j / 2] * pair;
        }
    }
    (k * h, ((k - g) * h).abs())
}

struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Interval {}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

/// Globally adaptive G7-K15 on `[a, b]`: bisects the interval with the
/// largest error estimate until the total estimate drops below `tol`.
pub fn gauss_kronrod<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, max_intervals: usize) -> Result<QuadResult> {
    let (value, error) = kronrod_15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Interval { a, b, value, error });
    let (mut total, mut err) = (value, error);
    let mut evaluations = 15;
    while err > tol {
        if heap.len() >= max_intervals || !err.is_finite() {
            return Err(Error::QuadratureNonConvergent {
                tolerance: tol,
                estimate: err,
            });
        }
        let worst = heap.pop().expect("non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (lv, le) = kronrod_15(&f, worst.a, mid);
        let (rv, re) = kronrod_15(&f, mid, worst.b);
        evaluations += 30;
        total += lv + rv - worst.value;
        err += le + re - worst.error;
        heap.push(Interval { a: worst.a, b: mid, value: lv, error: le });
        heap.push(Interval { a: mid, b: worst.b, value: rv, error: re });
    }
    // re-sum to shed drift from the running updates
    let value = heap.iter().map(|i| i.value).sum::<f64>();
    debug_assert!((value - total).abs() <= 1e-9 * value.abs().max(1.0));
    Ok(QuadResult {
        value,
        error: heap.iter().map(|i| i.error).sum(),
        evaluations,
    })
}

/// `t^{2n} csch^2(pi t)`, written to stay finite at both ends.
fn csch2_integrand(t: f64, n: u32) -> f64 {
    if t <= 0.0 {
        // t^{2n} / (pi t)^2 -> 0 for n >= 2 and 1/pi^2 for n = 1
        return if n == 1 { 1.0 / (PI * PI) } else { 0.0 };
    }
    if !t.is_finite() {
        return 0.0;
    }
    let e = (-2.0 * PI * t).exp();
    let denom = (-2.0 * PI * t).exp_m1();
    t.powi(2 * n as i32) * 4.0 * e / (denom * denom)
}

/// `B_{2n} = (-1)^{n+1} pi int_0^inf t^{2n} csch^2(pi t) dt`, `1 <= n <= 5`,
/// integrated on `s in (0, 1)` with `t = s/(1-s)`.
pub fn quad_bernoulli_even(n: u32) -> Result<f64> {
    if !(1..=5).contains(&n) {
        return Err(Error::InvalidArgument(format!("quad_bernoulli_even needs 1 <= n <= 5, got {n}")));
    }
    let integrand = |s: f64| {
        if s >= 1.0 {
            return 0.0;
        }
        let one_minus = 1.0 - s;
        csch2_integrand(s / one_minus, n) / (one_minus * one_minus)
    };
    let r = gauss_kronrod(integrand, 0.0, 1.0, 1e-13, 2000)?;
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * PI * r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_polynomials() {
        for k in 0..=21 {
            let r = gauss_kronrod(|x: f64| x.powi(k), 0.0, 1.0, 1e-14, 10).unwrap();
            assert!((r.value - 1.0 / (k as f64 + 1.0)).abs() < 1e-15, "x^{k}");
        }
        let (_, err) = kronrod_15(&|x: f64| x.powi(13), -1.0, 1.0);
        assert!(err < 1e-15, "Gauss part exact to degree 13");
    }

    #[test]
    fn weights_sum_to_two() {
        let k: f64 = WGK[7] + 2.0 * WGK[..7].iter().sum::<f64>();
        let g: f64 = WG[3] + 2.0 * WG[..3].iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15 && (g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn even_bernoulli_numbers() {
        let exact = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0];
        for (n, b) in (1..=5).zip(exact) {
            let q = quad_bernoulli_even(n).unwrap();
            assert!((q - b).abs() < 1e-8, "n = {n}: {q} vs {b}");
        }
    }

    #[test]
    fn budget_exhaustion_reports() {
        let r = gauss_kronrod(|x: f64| 1.0 / x.sqrt().max(1e-300), 0.0, 1.0, 1e-300, 4);
        assert!(matches!(r, Err(Error::QuadratureNonConvergent { .. })));
        assert!(quad_bernoulli_even(6).is_err());
    }
}
