use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::ExactScalar;

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial_scalar(n: u32) -> ExactScalar {
    ExactScalar::from_bigint(factorial(n))
}

pub fn binomial_scalar(n: u32, k: u32) -> ExactScalar {
    ExactScalar::from_bigint(binomial(n, k))
}

/// `1 / n!`
pub fn inv_factorial(n: u32) -> ExactScalar {
    ExactScalar::real(BigRational::new(BigInt::one(), factorial(n)))
}

/// `(-1)^n` as a scalar
pub fn sign(n: u32) -> ExactScalar {
    if n.is_multiple_of(2) {
        ExactScalar::from_int(1)
    } else {
        ExactScalar::from_int(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }
}
