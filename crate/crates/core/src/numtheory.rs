//! Legendre symbols, twisted divisor sums and the constants `δ_ℓ`, `1/α_ℓ`
//! that govern the growth of `c_ℓ(n)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use twofloat::TwoFloat;

use crate::abacus::core_counts;
use crate::{BigCount, Error, Result};

/// Trial-division primality test.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Checks that `ell` is a prime `≥ min`.
pub fn require_prime(ell: usize, min: usize) -> Result<()> {
    if !is_prime(ell) {
        return Err(Error::InvalidModulus {
            ell,
            reason: "not prime",
        });
    }
    if ell < min {
        return Err(Error::InvalidModulus {
            ell,
            reason: match min {
                5 => "must be at least 5",
                11 => "must be at least 11",
                _ => "too small",
            },
        });
    }
    Ok(())
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a/ℓ)` for an odd prime `ℓ`, by Euler's criterion.
pub fn legendre(a: i64, ell: usize) -> i8 {
    assert!(ell > 2 && is_prime(ell), "legendre needs an odd prime, got {ell}");
    let m = ell as i64;
    let r = a.rem_euclid(m) as u64;
    if r == 0 {
        return 0;
    }
    match pow_mod(r, (ell as u64 - 1) / 2, ell as u64) {
        1 => 1,
        _ => -1,
    }
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `σ_ℓ(n) = Σ_{d | n} ((n/d)/ℓ) d^{(ℓ-3)/2}`.
pub fn sigma_twisted(n: usize, ell: usize) -> BigInt {
    assert!(n >= 1, "sigma_twisted needs n >= 1");
    assert!(ell >= 3 && is_prime(ell), "sigma_twisted needs an odd prime");
    let exponent = ((ell - 3) / 2) as u32;
    divisors(n)
        .into_iter()
        .map(|d| match legendre((n / d) as i64, ell) {
            0 => BigInt::zero(),
            1 => BigInt::from(d).pow(exponent),
            _ => -BigInt::from(d).pow(exponent),
        })
        .sum()
}

/// `δ_ℓ = (ℓ² - 1)/24` for primes `ℓ ≥ 5`.
pub fn delta_ell(ell: usize) -> Result<usize> {
    if ell == 2 || ell == 3 {
        return Err(Error::DeltaNotIntegral { ell });
    }
    require_prime(ell, 5)?;
    Ok((ell * ell - 1) / 24)
}

/// Per-prime constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllParams {
    pub ell: usize,
    pub delta: usize,
    pub inv_alpha: BigUint,
    /// `(ℓ - 3)/2`, the divisor-power exponent in `σ_ℓ`.
    pub exponent: u32,
}

impl EllParams {
    pub fn new(ell: usize) -> Result<Self> {
        Ok(Self {
            ell,
            delta: delta_ell(ell)?,
            inv_alpha: inv_alpha(ell)?,
            exponent: ((ell - 3) / 2) as u32,
        })
    }
}

/// Bernoulli numbers `B_0, …, B_m` with `B_1 = -1/2`.
pub fn bernoulli_numbers(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    for n in 1..=m {
        // Σ_{j=0}^{n} C(n+1, j) B_j = 0
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// Bernoulli polynomial `B_k(x)`.
pub fn bernoulli_poly(k: usize, x: &BigRational, numbers: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    let mut binom = BigInt::one();
    for j in 0..=k {
        let power = num_traits::pow(x.clone(), k - j);
        acc += BigRational::from_integer(binom.clone()) * &numbers[j] * power;
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    acc
}

/// Generalised Bernoulli number `B_{k,χ} = ℓ^{k-1} Σ_{a=1}^{ℓ} χ(a) B_k(a/ℓ)`
/// for the quadratic character `χ = (·/ℓ)`.
pub fn generalized_bernoulli(k: usize, ell: usize) -> BigRational {
    let numbers = bernoulli_numbers(k);
    let ell_big = BigInt::from(ell);
    let mut sum = BigRational::zero();
    for a in 1..=ell {
        let chi = legendre(a as i64, ell);
        if chi == 0 {
            continue;
        }
        let x = BigRational::new(BigInt::from(a), ell_big.clone());
        let term = bernoulli_poly(k, &x, &numbers);
        if chi > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum * BigRational::from_integer(ell_big.pow(k as u32 - 1))
}

/// `1/α_ℓ` as an exact rational, through the functional equation.
///
/// With `k = (ℓ-1)/2` and `χ = (·/ℓ)` of parity `k`,
/// `L(k, χ) = (-1)^{1+(k-a)/2} (√ℓ/2) (2π/ℓ)^k B_{k,χ}/k!` where `a ≡ k mod 2`.
/// Substituting into `1/α_ℓ = ((ℓ-3)/2)! ℓ^{ℓ/2} L(k, χ) / (2π)^k` every
/// power of `π` and `√ℓ` cancels, leaving `±ℓ B_{k,χ} / (2k)`.
pub fn inv_alpha_exact(ell: usize) -> Result<BigRational> {
    require_prime(ell, 5)?;
    let k = (ell - 1) / 2;
    let parity = k % 2;
    let sign = if (1 + (k - parity) / 2) % 2 == 0 { 1 } else { -1 };
    let b = generalized_bernoulli(k, ell);
    Ok(b * BigRational::new(BigInt::from(sign * ell as i64), BigInt::from(2 * k)))
}

/// `1/α_ℓ` from a truncated Dirichlet series for `L(k, χ)` in double-double
/// arithmetic.
///
/// By partial summation with `|Σ_{a<n≤b} χ(n)| ≤ ℓ`, the tail after `N`
/// terms is at most `ℓ N^{-k}`; `N` is chosen so the tail contributes less
/// than `1e-9` to the result.
pub fn inv_alpha_numeric(ell: usize) -> Result<f64> {
    require_prime(ell, 5)?;
    let k = (ell - 1) / 2;
    let two_pi = TwoFloat::from(2.0) * twofloat::consts::PI;

    let mut factor = TwoFloat::from(1.0);
    for j in 1..k {
        factor *= TwoFloat::from(j as f64);
    }
    let ell_tf = TwoFloat::from(ell as f64);
    factor *= ell_tf.powi(k as i32) * ell_tf.sqrt();
    factor /= two_pi.powi(k as i32);

    let target = 1e-9 / (factor.hi() * ell as f64);
    let terms = target.powf(-1.0 / k as f64).ceil() as usize + ell;

    let chi: Vec<i8> = (0..ell).map(|a| legendre(a as i64, ell)).collect();
    let mut l_value = TwoFloat::from(0.0);
    // Smallest terms first.
    for n in (1..=terms).rev() {
        let c = chi[n % ell];
        if c == 0 {
            continue;
        }
        let term = TwoFloat::from(n as f64).powi(k as i32).recip();
        if c > 0 {
            l_value += term;
        } else {
            l_value -= term;
        }
    }
    Ok((factor * l_value).hi())
}

/// Exact positive integer `1/α_ℓ`, cross-checked against the numeric route.
pub fn inv_alpha(ell: usize) -> Result<BigUint> {
    let exact = inv_alpha_exact(ell)?;
    let numeric = inv_alpha_numeric(ell)?;
    let as_f64 = exact.to_f64().unwrap_or(f64::NAN);
    let inconsistent = || Error::LValueInconsistent {
        ell,
        exact: exact.to_string(),
        numeric,
    };
    if !exact.is_integer() || !exact.is_positive() {
        return Err(inconsistent());
    }
    if (as_f64 - numeric).abs() > 1e-6 {
        return Err(inconsistent());
    }
    Ok(exact.to_integer().magnitude().clone())
}

/// `c_2(n)`: 1 iff `n` is triangular.
pub fn c2_closed(n: usize) -> u8 {
    let disc = 8 * n as u128 + 1;
    let root = disc.isqrt();
    u8::from(root * root == disc)
}

/// `c_3(n) = Σ_{d | 3n+1} (d/3)`.
pub fn c3_closed(n: usize) -> u64 {
    let total: i64 = divisors(3 * n + 1)
        .into_iter()
        .map(|d| i64::from(legendre(d as i64, 3)))
        .sum();
    debug_assert!(total >= 0);
    total as u64
}

/// `α_ℓ σ_ℓ(n + δ_ℓ)`, the main term of `c_ℓ(n)`, as an exact rational.
pub fn core_main_term(n: usize, ell: usize) -> Result<BigRational> {
    let params = EllParams::new(ell)?;
    Ok(main_term_with(n, &params))
}

pub(crate) fn main_term_with(n: usize, params: &EllParams) -> BigRational {
    BigRational::new(
        sigma_twisted(n + params.delta, params.ell),
        BigInt::from(params.inv_alpha.clone()),
    )
}

/// `c_ℓ(n) > (2α_ℓ/5) n^{(ℓ-3)/2}`, i.e. `5 c_ℓ(n) / α_ℓ > 2 n^{(ℓ-3)/2}`,
/// in integer arithmetic.
pub fn core_lower_bound_ok(n: usize, ell: usize) -> Result<bool> {
    require_prime(ell, 11)?;
    let inv = inv_alpha(ell)?;
    let count = core_counts(n, ell).pop().expect("table has n+1 entries");
    Ok(lower_bound_holds(&count, n, ell, &inv))
}

/// The inequality behind [`core_lower_bound_ok`] for a precomputed `c_ℓ(n)`.
pub fn lower_bound_holds(count: &BigCount, n: usize, ell: usize, inv_alpha: &BigUint) -> bool {
    let lhs = count * inv_alpha * 5u32;
    let rhs = BigUint::from(n).pow(((ell - 3) / 2) as u32) * 2u32;
    lhs > rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::count_cores;

    #[test]
    fn primes() {
        let ps: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(require_prime(9, 5).is_err());
        assert!(require_prime(3, 5).is_err());
        assert!(require_prime(5, 5).is_ok());
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(1, 5), 1);
        assert_eq!(legendre(2, 5), -1);
        assert_eq!(legendre(5, 5), 0);
        assert_eq!(legendre(-1, 7), -1);
        assert_eq!(legendre(-1, 13), 1);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_twisted(1, 5), 1.into());
        assert_eq!(sigma_twisted(5, 5), 5.into());
        assert_eq!(sigma_twisted(7, 5), 6.into());
        assert_eq!(sigma_twisted(2, 7), 5.into());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_ell(5).unwrap(), 1);
        assert_eq!(delta_ell(7).unwrap(), 2);
        assert_eq!(delta_ell(13).unwrap(), 7);
        assert!(matches!(delta_ell(2), Err(Error::DeltaNotIntegral { ell: 2 })));
        assert!(matches!(delta_ell(3), Err(Error::DeltaNotIntegral { ell: 3 })));
    }

    #[test]
    fn bernoulli() {
        let b = bernoulli_numbers(8);
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], r(0, 1));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[8], r(-1, 30));
        // B_{2,χ} for χ = (·/5) is 4/5.
        assert_eq!(generalized_bernoulli(2, 5), r(4, 5));
        assert_eq!(generalized_bernoulli(3, 7), r(48, 7));
    }

    #[test]
    fn inv_alpha_values() {
        let want = [(5, 1u64), (7, 8), (11, 1275), (13, 33463)];
        for (ell, v) in want {
            assert_eq!(inv_alpha(ell).unwrap(), BigUint::from(v), "ell = {ell}");
        }
        assert!(inv_alpha(3).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(c2_closed(3), 1);
        assert_eq!(c2_closed(4), 0);
        assert_eq!(c2_closed(0), 1);
        assert_eq!(c3_closed(0), 1);
        assert_eq!(c3_closed(1), 1);
        assert_eq!(c3_closed(2), 2);
        assert_eq!(BigCount::from(c3_closed(2)), count_cores(2, 3));
    }

    #[test]
    fn main_terms() {
        for n in 0..20 {
            let exact = BigRational::from_integer(BigInt::from(count_cores(n, 5)));
            assert_eq!(core_main_term(n, 5).unwrap(), exact);
        }
        assert_eq!(
            core_main_term(0, 7).unwrap(),
            BigRational::new(5.into(), 8.into())
        );
    }

    #[test]
    fn lower_bound_rejects_small_primes() {
        assert!(core_lower_bound_ok(100, 7).is_err());
        assert!(core_lower_bound_ok(150, 11).unwrap());
    }
}
