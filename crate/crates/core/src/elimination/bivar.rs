//! Polynomials in one main variable with coefficients in `F_p[T]`, where `T`
//! is the other variable. Only proper (non-negative exponent) polynomials.

use crate::algebra::{LaurentPoly, Var};
use crate::error::{Error, Result};
use crate::fp::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BiPoly {
    p: u32,
    /// `coeffs[k]` multiplies `main^k`.
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero(p: u32) -> Self {
        BiPoly { p, coeffs: Vec::new() }
    }

    pub fn constant(c: UniPoly) -> Self {
        let p = c.modulus();
        Self::from_coeffs(p, vec![c])
    }

    fn from_coeffs(p: u32, coeffs: Vec<UniPoly>) -> Self {
        let mut b = BiPoly { p, coeffs };
        while b.coeffs.last().is_some_and(UniPoly::is_zero) {
            b.coeffs.pop();
        }
        b
    }

    pub fn from_laurent(f: &LaurentPoly, main: Var) -> Result<Self> {
        let p = f.ring().require_field()?;
        if !f.is_proper() {
            return Err(Error::NegativeExponent(main.name()));
        }
        let other = main.other();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (e, c) in f.terms() {
            let (k, t) = (main.of(e) as usize, other.of(e) as usize);
            if rows.len() <= k {
                rows.resize(k + 1, Vec::new());
            }
            if rows[k].len() <= t {
                rows[k].resize(t + 1, 0);
            }
            rows[k][t] = u32::try_from(c).expect("canonical field coefficient");
        }
        Ok(Self::from_coeffs(
            p,
            rows.into_iter().map(|r| UniPoly::from_coeffs(p, r)).collect(),
        ))
    }

    pub fn to_laurent(&self, main: Var) -> LaurentPoly {
        let ring = crate::ring::Ring::prime_field(self.p as u64).expect("prime modulus");
        let terms = self.coeffs.iter().enumerate().flat_map(|(k, u)| {
            u.coeffs().iter().enumerate().filter(|(_, &c)| c != 0).map(move |(t, &c)| {
                let e = match main {
                    Var::X => (k as i64, t as i64),
                    Var::Y => (t as i64, k as i64),
                };
                (e, num_bigint::BigInt::from(c))
            })
        });
        LaurentPoly::from_terms(ring, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn lc(&self) -> UniPoly {
        self.coeffs.last().cloned().unwrap_or_else(|| UniPoly::zero(self.p))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = UniPoly::zero(self.p);
        let cs = (0..n)
            .map(|k| {
                self.coeffs
                    .get(k)
                    .unwrap_or(&zero)
                    .add(other.coeffs.get(k).unwrap_or(&zero))
            })
            .collect();
        Self::from_coeffs(self.p, cs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.mul_uni(&UniPoly::constant(self.p, self.p as u64 - 1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut cs = vec![UniPoly::zero(self.p); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                cs[i + j] = cs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(self.p, cs)
    }

    pub fn mul_uni(&self, c: &UniPoly) -> Self {
        Self::from_coeffs(self.p, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplication by `main^k`.
    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut cs = vec![UniPoly::zero(self.p); k];
        cs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(self.p, cs)
    }

    /// Pseudo-division: returns `(q, r, m)` with `m * self = q * d + r`,
    /// `deg r < deg d` and `m = lc(d)^(deg self - deg d + 1)` (or `1` when
    /// `deg self < deg d`).
    pub fn pseudo_divrem(&self, d: &Self) -> (Self, Self, UniPoly) {
        let dd = d.degree().expect("pseudo-division by zero");
        let one = UniPoly::one(self.p);
        let Some(ds) = self.degree() else {
            return (Self::zero(self.p), self.clone(), one);
        };
        if ds < dd {
            return (Self::zero(self.p), self.clone(), one);
        }
        let lc = d.lc();
        let k = ds - dd + 1;
        let mut q = Self::zero(self.p);
        let mut r = self.clone();
        let mut steps = 0;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lead = Self::constant(r.lc()).shift(dr - dd);
            q = q.mul_uni(&lc).add(&lead);
            r = r.mul_uni(&lc).sub(&lead.mul(d));
            steps += 1;
        }
        let fix = lc.pow((k - steps) as u64);
        (q.mul_uni(&fix), r.mul_uni(&fix), lc.pow(k as u64))
    }

    /// Monic gcd of the coefficients.
    pub fn content(&self) -> UniPoly {
        self.coeffs
            .iter()
            .fold(UniPoly::zero(self.p), |g, c| g.gcd(c))
    }

    pub fn div_uni(&self, c: &UniPoly) -> Self {
        Self::from_coeffs(
            self.p,
            self.coeffs
                .iter()
                .map(|a| a.exact_div(c).expect("content divides every coefficient"))
                .collect(),
        )
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.div_uni(&self.content())
    }
}
