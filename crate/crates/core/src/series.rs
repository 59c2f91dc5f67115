//! Truncated power series for eta-quotient style products.
//!
//! Every partition generating function used here has the shape
//! `∏_{k≥1} ∏_j (1 - q^{s_j k})^{e_j}`; coefficients are computed exactly
//! up to `q^n_max` with one pass per factor.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// One factor family `∏_{k≥1} (1 - q^{stride·k})^{exponent}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerFactor {
    pub stride: usize,
    pub exponent: i32,
}

impl EulerFactor {
    pub const fn new(stride: usize, exponent: i32) -> Self {
        Self { stride, exponent }
    }
}

/// Coefficients `[q^0, …, q^n_max]` of the product of the given factor families.
///
/// Division by `(1 - q^m)` is an in-place strided prefix sum and
/// multiplication by it is an in-place strided difference, so no general
/// series multiplication is needed.
pub fn eta_quotient(n_max: usize, factors: &[EulerFactor]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); n_max + 1];
    coeffs[0] = BigInt::one();

    // Divisions first keeps intermediates nonnegative for the common cases.
    let mut ordered: Vec<EulerFactor> = factors.to_vec();
    ordered.sort_by_key(|f| f.exponent);

    for factor in ordered {
        assert!(factor.stride >= 1, "stride must be positive");
        let mut m = factor.stride;
        while m <= n_max {
            if factor.exponent < 0 {
                for _ in 0..factor.exponent.unsigned_abs() {
                    divide_by_binomial(&mut coeffs, m);
                }
            } else {
                for _ in 0..factor.exponent {
                    multiply_by_binomial(&mut coeffs, m);
                }
            }
            m += factor.stride;
        }
    }
    coeffs
}

/// `coeffs *= (1 - q^m)` truncated.
fn multiply_by_binomial(coeffs: &mut [BigInt], m: usize) {
    for i in (m..coeffs.len()).rev() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] -= &lo[i - m];
    }
}

/// `coeffs /= (1 - q^m)` truncated.
fn divide_by_binomial(coeffs: &mut [BigInt], m: usize) {
    for i in m..coeffs.len() {
        let (lo, hi) = coeffs.split_at_mut(i);
        hi[0] += &lo[i - m];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn euler_function_is_pentagonal() {
        // (q;q)_∞ = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + …
        let c = eta_quotient(15, &[EulerFactor::new(1, 1)]);
        assert_eq!(
            small(&c),
            vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]
        );
    }

    #[test]
    fn inverse_cancels() {
        let c = eta_quotient(30, &[EulerFactor::new(3, 2), EulerFactor::new(3, -2)]);
        assert!(c[0].is_one());
        assert!(c[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn partition_numbers() {
        let c = eta_quotient(10, &[EulerFactor::new(1, -1)]);
        assert_eq!(small(&c), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
