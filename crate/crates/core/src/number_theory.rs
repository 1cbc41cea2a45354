//! Small exact number-theoretic helpers: divisors, Euler's totient, the
//! Möbius function and the 3-adic valuation.
//!
//! Arguments are word lengths, so plain trial division is enough.

use num_bigint::BigInt;

use crate::error::{require_positive, Result};

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    require_positive(n, "n")?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Prime factorization of `n >= 1` as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    require_positive(n, "n")?;
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(factors)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

pub fn moebius(n: u64) -> Result<i8> {
    let factors = factorize(n)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Exponent of the largest power of 3 dividing `n`.
pub fn nu3(n: u64) -> Result<u32> {
    require_positive(n, "n")?;
    let mut rest = n;
    let mut e = 0;
    while rest.is_multiple_of(3) {
        rest /= 3;
        e += 1;
    }
    Ok(e)
}

/// `sum over d | n of (-1)^d * phi(n / d)`, evaluated term by term.
///
/// The sum collapses to `0` for even `n` and `-n` for odd `n`; this function
/// deliberately does not use that shortcut so the identity can be checked.
pub fn signed_phi_divisor_sum(n: u64) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for d in divisors(n)? {
        let phi = BigInt::from(euler_phi(n / d)?);
        if d % 2 == 0 {
            total += phi;
        } else {
            total -= phi;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use num_integer::Integer;

    fn phi_by_scan(n: u64) -> u64 {
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn divisors_match_scan() {
        for n in 1..=1000u64 {
            let scan: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n).unwrap(), scan, "n = {n}");
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(7).unwrap(), 6);
        assert_eq!(phi_by_scan(12), 4);
        assert_eq!(euler_phi(12).unwrap(), 4);
        for n in 1..=300 {
            assert_eq!(euler_phi(n).unwrap(), phi_by_scan(n), "n = {n}");
        }
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(12).unwrap(), 0);
        assert_eq!(moebius(30).unwrap(), -1);
        assert_eq!(moebius(7).unwrap(), -1);
        assert_eq!(moebius(6).unwrap(), 1);
    }

    #[test]
    fn nu3_examples() {
        assert_eq!(nu3(7).unwrap(), 0);
        assert_eq!(nu3(18).unwrap(), 2);
        assert_eq!(nu3(81).unwrap(), 4);
    }

    #[test]
    fn signed_sum_examples() {
        assert_eq!(signed_phi_divisor_sum(4).unwrap(), BigInt::from(0));
        assert_eq!(signed_phi_divisor_sum(5).unwrap(), BigInt::from(-5));
        assert_eq!(signed_phi_divisor_sum(1).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn zero_is_rejected() {
        let zero = Err(Error::Zero { arg: "n" });
        assert_eq!(divisors(0), zero.clone().map(|_: ()| vec![]));
        assert_eq!(euler_phi(0), zero.clone().map(|_: ()| 0));
        assert_eq!(moebius(0), zero.clone().map(|_: ()| 0));
        assert_eq!(nu3(0), zero.clone().map(|_: ()| 0));
        assert!(signed_phi_divisor_sum(0).is_err());
    }

    #[test]
    fn divisor_sum_identities() {
        for n in 1..=500u64 {
            let ds = divisors(n).unwrap();
            let phi_sum: u64 = ds.iter().map(|&d| euler_phi(d).unwrap()).sum();
            assert_eq!(phi_sum, n);
            let mu_sum: i64 = ds.iter().map(|&d| moebius(d).unwrap() as i64).sum();
            assert_eq!(mu_sum, i64::from(n == 1));
            let expected = if n % 2 == 0 { 0 } else { -(n as i64) };
            assert_eq!(signed_phi_divisor_sum(n).unwrap(), BigInt::from(expected));
        }
    }

    proptest::proptest! {
        #[test]
        fn phi_is_multiplicative(a in 1u64..200, b in 1u64..200) {
            proptest::prop_assume!(a.gcd(&b) == 1);
            proptest::prop_assert_eq!(
                euler_phi(a * b).unwrap(),
                euler_phi(a).unwrap() * euler_phi(b).unwrap()
            );
        }
    }
}
