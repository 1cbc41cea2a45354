//! Closed-form counts of colorful three-color necklaces and bracelets.
//!
//! Everything is evaluated in exact integer arithmetic. Every division that
//! the formulas claim to be exact is checked, and a failed check surfaces as
//! [`Error::Internal`].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::count::{exact_div, Count};
use crate::error::{require_positive, Error, Result};
use crate::group::{CycleType, GroupElement};
use crate::number_theory::{divisors, euler_phi, moebius, nu3};

/// Rotation-only (necklace) or rotation-and-reversal (bracelet) equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arrangement {
    Necklace,
    Bracelet,
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn neg_one_pow(e: u64) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn alpha_signed(n: u64) -> BigInt {
    pow2(n) + 2 * neg_one_pow(n)
}

/// Number of colorful words of length `n`: `2^n + 2(-1)^n`.
pub fn alpha(n: u64) -> Result<Count> {
    require_positive(n, "n")?;
    Count::from_signed(alpha_signed(n), "alpha")
}

/// Divisor weight `(1 + [k even, 3 ∤ k]) * gcd(k, 6)`, one of 1, 3, 4, 6.
pub fn chi(k: u64) -> Result<u8> {
    require_positive(k, "k")?;
    Ok(match k.gcd(&6) {
        1 => 1,
        2 => 4,
        3 => 3,
        _ => 6,
    })
}

/// Number of colorful words of length `g.n()` left fixed by `g`.
///
/// The color permutation is first reduced to its cycle type and, for
/// reflections, the shift to its parity; the value then comes from the
/// closed form for that representative.
pub fn fixed_points(g: &GroupElement) -> Result<Count> {
    let n = g.n();
    let shift = g.shift();
    let value = match (g.reflected(), g.sigma().cycle_type()) {
        (false, CycleType::Identity) => alpha_signed(shift.gcd(&n)),
        (false, CycleType::Transposition) => {
            if !n.is_multiple_of(2) {
                BigInt::zero()
            } else {
                let d = shift.gcd(&(n / 2));
                if (shift / d).is_multiple_of(2) {
                    BigInt::zero()
                } else {
                    pow2(d)
                }
            }
        }
        (false, CycleType::ThreeCycle) => {
            if !n.is_multiple_of(3) {
                BigInt::zero()
            } else {
                let d = shift.gcd(&(n / 3));
                if (shift / d).is_multiple_of(3) {
                    BigInt::zero()
                } else {
                    pow2(d) - neg_one_pow(d)
                }
            }
        }
        (true, CycleType::Identity) => {
            if shift.is_multiple_of(2) && n.is_multiple_of(2) {
                3 * pow2(n / 2)
            } else {
                BigInt::zero()
            }
        }
        (true, CycleType::Transposition) => {
            let index = if shift.is_multiple_of(2) {
                n.div_ceil(2)
            } else {
                n / 2 + 1
            };
            exact_div(
                &alpha_signed(index),
                &BigInt::from(3),
                "reflected transposition",
            )?
        }
        (true, CycleType::ThreeCycle) => BigInt::zero(),
    };
    Count::from_signed(value, "fixed point count")
}

/// `sum over d | n of chi(d) * phi(d) * 2^(n/d)`, the numerator of the
/// necklace count before the correction term.
pub fn necklace_weighted_sum(n: u64) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for d in divisors(n)? {
        let weight = u64::from(chi(d)?) * euler_phi(d)?;
        total += BigUint::from(weight) << (n / d);
    }
    Ok(total)
}

/// The correction `K(n) - S/(6n)`: `-1 / 3^(1 + nu3(n))` for odd `n`, else 0.
pub fn correction_term(n: u64) -> Result<BigRational> {
    let power = nu3(n)?;
    if n.is_multiple_of(2) {
        return Ok(BigRational::zero());
    }
    Ok(BigRational::new(
        -BigInt::one(),
        BigInt::from(3u32).pow(1 + power),
    ))
}

/// Number of colorful necklaces of length `n` up to rotation and color permutation.
pub fn necklace_count(n: u64) -> Result<Count> {
    let sum = BigInt::from(necklace_weighted_sum(n)?);
    let six_n = BigInt::from(6 * n);
    let floor = sum.div_floor(&six_n);

    // 6n * eps_n is an integer: -2 * (n / 3^nu3(n)) for odd n.
    let scaled_correction = if n.is_multiple_of(2) {
        BigInt::zero()
    } else {
        let odd_part = n / 3u64.pow(nu3(n)?);
        BigInt::from(-2 * odd_part as i64)
    };
    if &six_n * &floor != &sum + scaled_correction {
        return Err(Error::Internal(format!(
            "necklace count for n = {n}: floor and corrected forms disagree"
        )));
    }
    Count::from_signed(floor, "necklace count")
}

/// Sums of fixed points of rotations by identity, a transposition and a
/// 3-cycle. The necklace count is `(a + 3b + 2c) / (6n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceComponents {
    pub a: Count,
    pub b: Count,
    pub c: Count,
}

impl NecklaceComponents {
    /// `a + 3b + 2c`, the total number of fixed points over the rotation group.
    pub fn burnside_total(&self) -> BigUint {
        self.a.as_biguint() + 3u32 * self.b.as_biguint() + 2u32 * self.c.as_biguint()
    }
}

pub fn necklace_count_components(n: u64) -> Result<NecklaceComponents> {
    let phi = |d: u64| -> Result<BigInt> { Ok(BigInt::from(euler_phi(n / d)?)) };

    let mut a = BigInt::zero();
    for d in divisors(n)? {
        a += alpha_signed(d) * phi(d)?;
    }
    let mut b = BigInt::zero();
    if n.is_multiple_of(2) {
        for d in divisors(n / 2)? {
            b += pow2(d) * phi(d)?;
        }
    }
    let mut c = BigInt::zero();
    if n.is_multiple_of(3) {
        for d in divisors(n / 3)? {
            c += (pow2(d) - neg_one_pow(d)) * phi(d)?;
        }
    }
    let components = NecklaceComponents {
        a: Count::from_signed(a, "identity component")?,
        b: Count::from_signed(b, "transposition component")?,
        c: Count::from_signed(c, "three-cycle component")?,
    };

    let total = BigInt::from(components.burnside_total());
    let quotient = exact_div(&total, &BigInt::from(6 * n), "necklace components")?;
    if quotient != necklace_count(n)?.to_bigint() {
        return Err(Error::Internal(format!(
            "necklace components for n = {n} disagree with the closed form"
        )));
    }
    Ok(components)
}

/// Reflection contribution `R(n) = 2 K'(n) - K(n)`.
pub fn reflection_term(n: u64) -> Result<Count> {
    require_positive(n, "n")?;
    let value = if n.is_multiple_of(2) {
        pow2(n / 2 - 1)
    } else {
        let h = (n - 1) / 2;
        exact_div(
            &(pow2(h) - neg_one_pow(h)),
            &BigInt::from(3),
            "reflection term",
        )?
    };
    Count::from_signed(value, "reflection term")
}

/// Number of colorful bracelets of length `n` up to rotation, reversal and
/// color permutation.
pub fn bracelet_count(n: u64) -> Result<Count> {
    let total = necklace_count(n)?.to_bigint() + reflection_term(n)?.to_bigint();
    let value = exact_div(&total, &BigInt::from(2), "bracelet count")?;
    Count::from_signed(value, "bracelet count")
}

pub fn count(n: u64, arrangement: Arrangement) -> Result<Count> {
    match arrangement {
        Arrangement::Necklace => necklace_count(n),
        Arrangement::Bracelet => bracelet_count(n),
    }
}

/// Classes that use all three colors. For even `n` the single two-color
/// class is removed.
pub fn exact_color_count(n: u64, arrangement: Arrangement) -> Result<Count> {
    let total = count(n, arrangement)?.to_bigint();
    let adjust = BigInt::from(u8::from(n.is_multiple_of(2)));
    Count::from_signed(total - adjust, "exact color count")
}

/// Classes whose minimal period is exactly `n`, by Möbius inversion.
pub fn exact_period_count(n: u64, arrangement: Arrangement) -> Result<Count> {
    let mut total = BigInt::zero();
    for d in divisors(n)? {
        let mu = moebius(n / d)?;
        if mu != 0 {
            total += BigInt::from(mu) * count(d, arrangement)?.to_bigint();
        }
    }
    if total.is_negative() {
        return Err(Error::Internal(format!(
            "exact period count for n = {n} is negative: {total}"
        )));
    }
    Count::from_signed(total, "exact period count")
}

/// Necklaces of length `n` over `colors` colors, up to rotation only.
pub fn classical_necklace(n: u64, colors: u64) -> Result<Count> {
    require_positive(n, "n")?;
    require_positive(colors, "colors")?;
    let c = BigInt::from(colors);
    let mut total = BigInt::zero();
    for d in divisors(n)? {
        total += BigInt::from(euler_phi(d)?) * c.pow(u32_exp(n / d)?);
    }
    let value = exact_div(&total, &BigInt::from(n), "classical necklace")?;
    Count::from_signed(value, "classical necklace")
}

/// Bracelets of length `n` over `colors` colors, up to rotation and reversal.
pub fn classical_bracelet(n: u64, colors: u64) -> Result<Count> {
    let necklaces = classical_necklace(n, colors)?.to_bigint();
    let c = BigInt::from(colors);
    let reflections = if n % 2 == 1 {
        c.pow(u32_exp(n.div_ceil(2))?)
    } else {
        let scaled = (BigInt::one() + &c) * c.pow(u32_exp(n / 2)?);
        exact_div(&scaled, &BigInt::from(2), "classical reflection term")?
    };
    let value = exact_div(
        &(necklaces + reflections),
        &BigInt::from(2),
        "classical bracelet",
    )?;
    Count::from_signed(value, "classical bracelet")
}

fn u32_exp(e: u64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::Internal(format!("exponent {e} out of range")))
}
