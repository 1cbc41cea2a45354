//! The symmetry groups acting on colorful words.
//!
//! A group element is a triple `(sigma, reflected, shift)`: a permutation of
//! the three colors together with a position map `t(i) = (-1)^eps * i + shift`
//! on `Z/nZ`. It acts on a word `w` by `(g.w)(i) = sigma(w(t^-1(i)))`, which
//! is a left action for the product defined in [`GroupElement::compose`].

use std::fmt;
use std::str::FromStr;

use crate::error::{require_positive, Error, Result};

/// An element of the symmetric group on the colors `{1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum S3Perm {
    Identity,
    /// Swaps colors 1 and 2.
    T12,
    T13,
    T23,
    /// The 3-cycle `1 -> 2 -> 3 -> 1`.
    C,
    /// `C` squared: `1 -> 3 -> 2 -> 1`.
    C2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleType {
    Identity,
    Transposition,
    ThreeCycle,
}

impl S3Perm {
    pub const ALL: [S3Perm; 6] = [
        S3Perm::Identity,
        S3Perm::T12,
        S3Perm::T13,
        S3Perm::T23,
        S3Perm::C,
        S3Perm::C2,
    ];

    /// Image of a color in `1..=3`.
    pub fn apply(self, color: u8) -> u8 {
        debug_assert!((1..=3).contains(&color));
        self.images()[usize::from(color - 1)]
    }

    fn images(self) -> [u8; 3] {
        match self {
            S3Perm::Identity => [1, 2, 3],
            S3Perm::T12 => [2, 1, 3],
            S3Perm::T13 => [3, 2, 1],
            S3Perm::T23 => [1, 3, 2],
            S3Perm::C => [2, 3, 1],
            S3Perm::C2 => [3, 1, 2],
        }
    }

    fn from_images(images: [u8; 3]) -> S3Perm {
        S3Perm::ALL
            .into_iter()
            .find(|p| p.images() == images)
            .expect("every bijection of {1,2,3} is listed")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: S3Perm) -> S3Perm {
        S3Perm::from_images([1, 2, 3].map(|x| self.apply(other.apply(x))))
    }

    pub fn inverse(self) -> S3Perm {
        match self {
            S3Perm::C => S3Perm::C2,
            S3Perm::C2 => S3Perm::C,
            other => other,
        }
    }

    pub fn cycle_type(self) -> CycleType {
        match self {
            S3Perm::Identity => CycleType::Identity,
            S3Perm::T12 | S3Perm::T13 | S3Perm::T23 => CycleType::Transposition,
            S3Perm::C | S3Perm::C2 => CycleType::ThreeCycle,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            S3Perm::Identity => "id",
            S3Perm::T12 => "t12",
            S3Perm::T13 => "t13",
            S3Perm::T23 => "t23",
            S3Perm::C => "c",
            S3Perm::C2 => "c2",
        }
    }
}

impl fmt::Display for S3Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for S3Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        S3Perm::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPermutation(s.to_string()))
    }
}

/// Selects the rotation group (necklaces) or the full dihedral group (bracelets),
/// each combined with all color permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Rotations,
    Dihedral,
}

impl GroupKind {
    /// `6n` for rotations, `12n` for the dihedral group.
    pub fn order(self, n: u64) -> u64 {
        match self {
            GroupKind::Rotations => 6 * n,
            GroupKind::Dihedral => 12 * n,
        }
    }

    /// Every element of the group for word length `n`, in a fixed order.
    pub fn elements(self, n: u64) -> Result<Vec<GroupElement>> {
        require_positive(n, "n")?;
        let reflections: &[bool] = match self {
            GroupKind::Rotations => &[false],
            GroupKind::Dihedral => &[false, true],
        };
        let mut out = Vec::with_capacity(self.order(n) as usize);
        for &reflected in reflections {
            for sigma in S3Perm::ALL {
                for shift in 0..n {
                    out.push(GroupElement {
                        n,
                        sigma,
                        reflected,
                        shift,
                    });
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    n: u64,
    sigma: S3Perm,
    reflected: bool,
    shift: u64,
}

impl GroupElement {
    /// Builds `(sigma, eps, shift)` for words of length `n`; `shift` is
    /// reduced modulo `n`, so negative shifts are accepted.
    pub fn new(n: u64, sigma: S3Perm, reflected: bool, shift: i64) -> Result<Self> {
        require_positive(n, "n")?;
        let shift = i128::from(shift).rem_euclid(i128::from(n)) as u64;
        Ok(GroupElement {
            n,
            sigma,
            reflected,
            shift,
        })
    }

    pub fn identity(n: u64) -> Result<Self> {
        Self::new(n, S3Perm::Identity, false, 0)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn sigma(&self) -> S3Perm {
        self.sigma
    }

    pub fn reflected(&self) -> bool {
        self.reflected
    }

    /// The reflection exponent as `0` or `1`.
    pub fn eps(&self) -> u8 {
        u8::from(self.reflected)
    }

    pub fn shift(&self) -> u64 {
        self.shift
    }

    /// Position map `t(i) = (-1)^eps * i + shift (mod n)`.
    pub fn position(&self, i: u64) -> u64 {
        let i = i % self.n;
        let base = if self.reflected {
            (self.n - i) % self.n
        } else {
            i
        };
        (base + self.shift) % self.n
    }

    /// Inverse position map `t^-1(i) = (-1)^eps * (i - shift)`.
    pub fn position_inverse(&self, i: u64) -> u64 {
        let diff = (i % self.n + self.n - self.shift) % self.n;
        if self.reflected {
            (self.n - diff) % self.n
        } else {
            diff
        }
    }

    /// Group product `self · other`, so that acting by the product equals
    /// acting by `other` and then by `self`. Uses `r s r = s^-1`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: other.n,
            });
        }
        let n = self.n;
        let carried = if self.reflected {
            (n - other.shift) % n
        } else {
            other.shift
        };
        Ok(GroupElement {
            n,
            sigma: self.sigma.compose(other.sigma),
            reflected: self.reflected ^ other.reflected,
            shift: (self.shift + carried) % n,
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.n;
        let shift = if self.reflected {
            self.shift
        } else {
            (n - self.shift) % n
        };
        GroupElement {
            n,
            sigma: self.sigma.inverse(),
            reflected: self.reflected,
            shift,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.sigma, self.eps(), self.shift)
    }
}
