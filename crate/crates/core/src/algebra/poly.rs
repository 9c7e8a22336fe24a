use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fp::UniPoly;
use crate::ring::Ring;
use crate::Point;

/// One of the two indeterminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }

    pub(crate) fn name(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::Y => "Y",
        }
    }

    /// Exponent of this variable in `e`.
    pub(crate) fn of(self, e: Point) -> i64 {
        match self {
            Var::X => e.0,
            Var::Y => e.1,
        }
    }

    pub(crate) fn point(self, k: i64) -> Point {
        match self {
            Var::X => (k, 0),
            Var::Y => (0, k),
        }
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A single nonzero term `coeff * X^i * Y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub ring: Ring,
    pub exponent: Point,
    pub coeff: BigInt,
}

impl Monomial {
    pub fn unit(ring: Ring, exponent: Point) -> Self {
        Monomial {
            ring,
            exponent,
            coeff: BigInt::one(),
        }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.ring, self.exponent, self.coeff.clone())
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Sparse Laurent polynomial in `X, Y` over a [`Ring`].
///
/// Terms are kept in a `BTreeMap` keyed by exponent pair, so iteration is in
/// lexicographic `(i, j)` order. No stored coefficient is zero and field
/// coefficients live in `0..p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ring: Ring,
    terms: BTreeMap<Point, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ring: Ring) -> Self {
        LaurentPoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: Ring, c: impl Into<BigInt>) -> Self {
        Self::monomial(ring, (0, 0), c)
    }

    pub fn monomial(ring: Ring, exponent: Point, c: impl Into<BigInt>) -> Self {
        Self::from_terms(ring, [(exponent, c.into())])
    }

    pub fn x(ring: Ring) -> Self {
        Self::monomial(ring, (1, 0), 1)
    }

    pub fn y(ring: Ring) -> Self {
        Self::monomial(ring, (0, 1), 1)
    }

    /// Builds a polynomial from (possibly repeated) terms, summing duplicates.
    pub fn from_terms<C, I>(ring: Ring, terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (Point, C)>,
    {
        let mut acc: BTreeMap<Point, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: Ring, mut terms: BTreeMap<Point, BigInt>) -> Self {
        terms.retain(|_, c| {
            *c = ring.reduce(c);
            !c.is_zero()
        });
        LaurentPoly { ring, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (Point, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The support `supp(f)`, lexicographically sorted.
    pub fn support(&self) -> Vec<Point> {
        self.terms.keys().copied().collect()
    }

    pub fn coeff(&self, e: Point) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(Point, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Componentwise minimum and maximum exponents.
    pub fn exponent_bounds(&self) -> Option<(Point, Point)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), &(i, j)| {
            ((lo.0.min(i), lo.1.min(j)), (hi.0.max(i), hi.1.max(j)))
        }))
    }

    /// No negative exponents.
    pub fn is_proper(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i >= 0 && j >= 0)
    }

    /// Every term is free of `v`.
    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|&e| v.of(e) == 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.require_same(other.ring)?;
        let mut acc = self.terms.clone();
        for (e, c) in &other.terms {
            *acc.entry(*e).or_default() += c;
        }
        Ok(Self::from_map(self.ring, acc))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    /// Convolution product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.require_same(other.ring)?;
        let mut acc: BTreeMap<Point, BigInt> = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                *acc.entry((i1 + i2, j1 + j2)).or_default() += c1 * c2;
            }
        }
        Ok(Self::from_map(self.ring, acc))
    }

    pub fn neg(&self) -> Self {
        Self::from_map(
            self.ring,
            self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_map(
            self.ring,
            self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        )
    }

    /// Multiplication by the monomial `X^e.0 Y^e.1`.
    pub fn shift(&self, e: Point) -> Self {
        self.map_exponents(|(i, j)| (i + e.0, j + e.1))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies an injective map to every exponent.
    pub(crate) fn map_exponents(&self, f: impl Fn(Point) -> Point) -> Self {
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, c)| (f(*e), c.clone())).collect(),
        }
    }

    /// Exchanges the roles of `X` and `Y`.
    pub fn swap_xy(&self) -> Self {
        self.map_exponents(|(i, j)| (j, i))
    }

    /// Splits `f = m * f'` with `f'` proper and `min` exponents of `f'` both zero.
    pub fn monomial_normal_form(&self) -> Result<(LaurentPoly, Monomial)> {
        let (lo, _) = self.exponent_bounds().ok_or(Error::ZeroPolynomial)?;
        let proper = self.shift((-lo.0, -lo.1));
        Ok((proper, Monomial::unit(self.ring, lo)))
    }

    /// The smallest monomial shift making `self` proper: exponents that are
    /// already non-negative are left alone. Returns the shift applied.
    pub fn make_proper(&self) -> (LaurentPoly, Point) {
        let Some((lo, _)) = self.exponent_bounds() else {
            return (self.clone(), (0, 0));
        };
        let shift = (-lo.0.min(0), -lo.1.min(0));
        (self.shift(shift), shift)
    }

    /// The proper part of [`LaurentPoly::monomial_normal_form`]; zero stays zero.
    pub fn normalized(&self) -> Self {
        match self.monomial_normal_form() {
            Ok((f, _)) => f,
            Err(_) => self.clone(),
        }
    }

    /// Scales a field polynomial so that its lexicographically leading
    /// coefficient is 1. Integer polynomials are made primitive with a positive
    /// leading coefficient instead.
    pub fn make_monic(&self) -> Self {
        let Some((_, lc)) = self.leading_term() else {
            return self.clone();
        };
        match self.ring.inverse(lc) {
            Some(inv) => self.scale(&inv),
            None => {
                let g = self
                    .terms
                    .values()
                    .fold(BigInt::zero(), |g, c| num_integer::Integer::gcd(&g, c));
                let g = if lc.is_negative() { -g } else { g };
                Self::from_map(
                    self.ring,
                    self.terms.iter().map(|(e, c)| (*e, c / &g)).collect(),
                )
            }
        }
    }

    /// Replaces `X` by `r` (a polynomial free of `X`).
    ///
    /// With `g` proper in `X` this computes the remainder of `g` modulo the
    /// ideal `(X - r)`, which is free of `X`.
    pub fn substitute_x(&self, r: &LaurentPoly) -> Result<LaurentPoly> {
        self.ring.require_same(r.ring)?;
        if !r.is_free_of(Var::X) {
            return Err(Error::UnexpectedVariable("X"));
        }
        if self.terms.keys().any(|&(i, _)| i < 0) {
            return Err(Error::NegativeExponent("X"));
        }
        // Horner in X over the coefficient rows.
        let mut rows: BTreeMap<i64, BTreeMap<Point, BigInt>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            rows.entry(i).or_default().insert((0, j), c.clone());
        }
        let max_i = rows.keys().next_back().copied().unwrap_or(0);
        let mut acc = Self::zero(self.ring);
        for i in (0..=max_i).rev() {
            acc = &acc * r;
            if let Some(row) = rows.remove(&i) {
                acc = &acc + &Self::from_map(self.ring, row);
            }
        }
        Ok(acc)
    }

    /// Reduces integer coefficients into `F_p`.
    pub fn reduce_mod_p(&self, field: Ring) -> Result<LaurentPoly> {
        field.require_field()?;
        if self.ring == field {
            return Ok(self.clone());
        }
        if self.ring.is_field() {
            return Err(Error::RingMismatch(self.ring, field));
        }
        Ok(Self::from_map(field, self.terms.clone()))
    }

    /// Reinterprets `F_p` coefficients `0..p` as integers.
    pub fn lift_to_integers(&self) -> LaurentPoly {
        LaurentPoly {
            ring: Ring::Z,
            terms: self.terms.clone(),
        }
    }

    /// Exact division. Returns `Ok(None)` when `d` does not divide `self`.
    ///
    /// Both operands are monomial-normalized and then divided as ordinary
    /// polynomials with the lexicographic order; a single divisor is its own
    /// Gröbner basis, so a nonzero remainder means non-divisibility.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        self.ring.require_same(d.ring)?;
        let (dn, dm) = d.monomial_normal_form()?;
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        let (mut rem, fm) = self.monomial_normal_form()?;
        let (de, dc) = dn.leading_term().map(|(e, c)| (e, c.clone())).unwrap();
        let mut quot: BTreeMap<Point, BigInt> = BTreeMap::new();
        while let Some((e, c)) = rem.leading_term().map(|(e, c)| (e, c.clone())) {
            let qe = (e.0 - de.0, e.1 - de.1);
            if qe.0 < 0 || qe.1 < 0 || !self.ring.divides(&dc, &c) {
                return Ok(None);
            }
            let qc = self.ring.div(&c, &dc);
            let step = Self::monomial(self.ring, qe, qc.clone());
            rem = &rem - &(&step * &dn);
            quot.insert(qe, qc);
        }
        let offset = (fm.exponent.0 - dm.exponent.0, fm.exponent.1 - dm.exponent.1);
        let scale = self.ring.div(&fm.coeff, &dm.coeff);
        Ok(Some(
            Self::from_map(self.ring, quot).shift(offset).scale(&scale),
        ))
    }

    /// Whether `d` divides `self`.
    pub fn is_divisible_by(&self, d: &LaurentPoly) -> Result<bool> {
        Ok(self.div_exact(d)?.is_some())
    }

    /// The polynomial in `v` alone as a dense [`UniPoly`], after shifting by the
    /// smallest exponent. Returns the shift too. `None` unless the polynomial is
    /// free of the other variable and the ring is a field.
    pub(crate) fn to_unipoly(&self, v: Var) -> Option<(UniPoly, i64)> {
        let p = self.ring.prime()?;
        if !self.is_free_of(v.other()) {
            return None;
        }
        let lo = self.terms.keys().map(|&e| v.of(e)).min().unwrap_or(0);
        let hi = self.terms.keys().map(|&e| v.of(e)).max().unwrap_or(0);
        let mut cs = vec![0u32; (hi - lo + 1) as usize];
        for (&e, c) in &self.terms {
            cs[(v.of(e) - lo) as usize] = c.to_u32().expect("canonical field coefficient");
        }
        Some((UniPoly::from_coeffs(p, cs), lo))
    }

    pub(crate) fn from_unipoly(u: &UniPoly, v: Var, offset: i64) -> Self {
        let ring = Ring::prime_field(u.modulus() as u64).expect("unipoly modulus is prime");
        Self::from_terms(
            ring,
            u.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (v.point(k as i64 + offset), BigInt::from(c))),
        )
    }

    /// Coefficients as `i128`, failing on overflow.
    pub(crate) fn small_terms(&self) -> Result<Vec<(Point, i128)>> {
        self.terms
            .iter()
            .map(|(e, c)| c.to_i128().map(|c| (*e, c)).ok_or(Error::Overflow))
            .collect()
    }
}

impl<'a> Add for &'a LaurentPoly {
    type Output = LaurentPoly;

    /// Panics on ring mismatch; use [`LaurentPoly::checked_add`] to recover.
    fn add(self, rhs: Self) -> LaurentPoly {
        self.checked_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Sub for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: Self) -> LaurentPoly {
        self.checked_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> Mul for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: Self) -> LaurentPoly {
        self.checked_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}
