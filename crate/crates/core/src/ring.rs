//! Coefficient rings: prime fields `F_p` with `p < 2^16`, and the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime (exclusive). Products of two residues fit in a `u32`.
pub const PRIME_BOUND: u32 = 1 << 16;

/// A coefficient ring. Internally the modulus, with `0` standing for `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    modulus: u32,
}

impl Ring {
    pub const F2: Ring = Ring { modulus: 2 };
    pub const F3: Ring = Ring { modulus: 3 };
    pub const Z: Ring = Ring { modulus: 0 };

    pub fn integers() -> Ring {
        Ring::Z
    }

    /// The prime field `F_p`. Primality is checked by trial division.
    pub fn prime_field(p: u64) -> Result<Ring> {
        if p >= PRIME_BOUND as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Ring { modulus: p as u32 })
    }

    /// Ring selected by a `--mod` style argument: `0` is the integers.
    pub fn from_modulus(m: u64) -> Result<Ring> {
        if m == 0 {
            Ok(Ring::Z)
        } else {
            Ring::prime_field(m)
        }
    }

    /// `p` for `F_p`, `0` for `Z`.
    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn prime(self) -> Option<u32> {
        (self.modulus != 0).then_some(self.modulus)
    }

    pub fn is_field(self) -> bool {
        self.modulus != 0
    }

    pub(crate) fn require_field(self) -> Result<u32> {
        self.prime().ok_or(Error::NotAField(self))
    }

    pub(crate) fn require_same(self, other: Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self, other))
        }
    }

    /// Canonical representative of `c`: reduced into `0..p` for fields.
    pub fn reduce(self, c: &BigInt) -> BigInt {
        if self.modulus == 0 {
            c.clone()
        } else {
            c.mod_floor(&BigInt::from(self.modulus))
        }
    }

    pub fn reduce_i64(self, c: i64) -> i64 {
        if self.modulus == 0 {
            c
        } else {
            c.rem_euclid(self.modulus as i64)
        }
    }

    pub fn is_canonical(self, c: i64) -> bool {
        self.modulus == 0 || (0..self.modulus as i64).contains(&c)
    }

    /// Multiplicative inverse of a nonzero canonical field element.
    pub(crate) fn inverse(self, c: &BigInt) -> Option<BigInt> {
        let p = self.prime()?;
        let c = self.reduce(c).to_u32()?;
        if c == 0 {
            return None;
        }
        Some(BigInt::from(inv_mod(c, p)))
    }

    /// Whether `c` divides `d` exactly in this ring.
    pub(crate) fn divides(self, c: &BigInt, d: &BigInt) -> bool {
        if self.is_field() {
            !self.reduce(c).is_zero() || self.reduce(d).is_zero()
        } else if c.is_zero() {
            d.is_zero()
        } else {
            (d % c).is_zero()
        }
    }

    /// Exact quotient `d / c`, assuming [`Ring::divides`].
    pub(crate) fn div(self, d: &BigInt, c: &BigInt) -> BigInt {
        match self.inverse(c) {
            Some(inv) => self.reduce(&(d * inv)),
            None => d / c,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            0 => write!(f, "Z"),
            p => write!(f, "F_{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
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

/// Inverse of `a` modulo the prime `p`; `a` must be nonzero mod `p`.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "{a} is not invertible mod {p}");
    t.rem_euclid(p as i64) as u32
}
