//! Dense univariate polynomials over `F_p`.
//!
//! These are the workhorse for everything that reduces to one variable:
//! line-polynomial contents, Sylvester entries, cofactor bookkeeping and
//! period extraction from univariate annihilators.

use std::fmt;

use crate::ring::inv_mod;

/// Polynomial `sum c_k T^k` over `F_p`, coefficients little-endian and trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn zero(p: u32) -> Self {
        UniPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u32, c: u64) -> Self {
        Self::from_coeffs(p, vec![(c % p as u64) as u32])
    }

    /// The indeterminate `T`.
    pub fn var(p: u32) -> Self {
        Self::from_coeffs(p, vec![0, 1])
    }

    pub fn from_coeffs(p: u32, coeffs: Vec<u32>) -> Self {
        let mut f = UniPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.trim();
        f
    }

    pub fn from_signed(p: u32, coeffs: &[i64]) -> Self {
        let cs = coeffs
            .iter()
            .map(|c| c.rem_euclid(p as i64) as u32)
            .collect();
        Self::from_coeffs(p, cs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, `0` for the zero polynomial.
    pub fn lc(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p as u64;
        let n = self.coeffs.len().max(other.coeffs.len());
        let cs = (0..n)
            .map(|k| ((self.coeff(k) as u64 + other.coeff(k) as u64) % p) as u32)
            .collect();
        Self::from_coeffs(self.p, cs)
    }

    pub fn neg(&self) -> Self {
        let cs = self
            .coeffs
            .iter()
            .map(|&c| if c == 0 { 0 } else { self.p - c })
            .collect();
        Self::from_coeffs(self.p, cs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::from_coeffs(self.p, out.into_iter().map(|c| c as u32).collect())
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p as u64;
        let cs = self
            .coeffs
            .iter()
            .map(|&a| ((a as u64 * (c % self.p) as u64) % p) as u32)
            .collect();
        Self::from_coeffs(self.p, cs)
    }

    /// Multiply by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut cs = vec![0; k];
        cs.extend_from_slice(&self.coeffs);
        UniPoly { p: self.p, coeffs: cs }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let p = self.p as u64;
        let inv = inv_mod(d.lc(), self.p) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k] % p;
            if c == 0 {
                continue;
            }
            let q = c * inv % p;
            quot[k - dd] = q;
            for (j, &b) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = (rem[idx] + (p - q) * b as u64) % p;
            }
        }
        rem.truncate(dd);
        (
            Self::from_coeffs(self.p, quot.into_iter().map(|c| c as u32).collect()),
            Self::from_coeffs(self.p, rem.into_iter().map(|c| c as u32).collect()),
        )
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// `self / d` when the division is exact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Number of trailing zero coefficients (the power of `T` dividing `self`).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|&&c| c == 0).count()
    }

    /// Smallest `n >= 1` with `T^n = 1` modulo `self`, searched up to `cap`.
    ///
    /// Requires a nonzero constant term (so `T` is a unit). A nonzero constant
    /// polynomial has order 1.
    pub fn order_of_var(&self, cap: u64) -> Option<u64> {
        if self.is_zero() || self.coeff(0) == 0 {
            return None;
        }
        if self.degree() == Some(0) {
            return Some(1);
        }
        let t = Self::var(self.p).rem(self);
        let one = Self::one(self.p);
        let mut acc = t.clone();
        for n in 1..=cap {
            if acc == one {
                return Some(n);
            }
            acc = acc.mul(&t).rem(self);
        }
        None
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[F_{}]{:?}", self.p, self.coeffs)
    }
}
