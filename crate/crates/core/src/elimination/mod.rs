//! Sylvester resultants, Bezout-style cofactors and bivariate gcds over `F_p`.
//!
//! Inputs with negative exponents are first multiplied by the smallest
//! monomial that makes them proper, so resultants are defined up to a
//! monomial unit. Callers only rely on the
//! resultant being zero or not, and on it being free of the eliminated
//! variable.

mod bivar;

use std::fmt;

use crate::algebra::{LaurentPoly, Var};
use crate::error::{Error, Result};
use crate::fp::UniPoly;

use bivar::BiPoly;

/// Fraction-free determinant of a square matrix over `F_p[T]`.
///
/// Bareiss elimination: every intermediate entry is a minor of the input, so
/// the division by the previous pivot is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<UniPoly>>, p: u32) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(p);
    }
    let mut negate = false;
    let mut prev = UniPoly::one(p);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return UniPoly::zero(p),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = UniPoly::zero(p);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Sylvester matrix of `f` and `g` in their main variable.
fn sylvester_matrix(f: &BiPoly, g: &BiPoly, p: u32) -> Vec<Vec<UniPoly>> {
    let m = f.degree().expect("nonzero");
    let n = g.degree().expect("nonzero");
    let size = m + n;
    let mut rows = vec![vec![UniPoly::zero(p); size]; size];
    for i in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    rows
}

fn prepare(f: &LaurentPoly, g: &LaurentPoly, axis: Var) -> Result<(BiPoly, BiPoly, u32)> {
    let p = f.ring().require_field()?;
    f.ring().require_same(g.ring())?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok((
        BiPoly::from_laurent(&f.make_proper().0, axis)?,
        BiPoly::from_laurent(&g.make_proper().0, axis)?,
        p,
    ))
}

/// `Res_axis(f, g)`, a polynomial in the other variable only.
///
/// Zero exactly when `f` and `g` share a factor of positive degree in `axis`.
pub fn resultant(f: &LaurentPoly, g: &LaurentPoly, axis: Var) -> Result<LaurentPoly> {
    let (bf, bg, p) = prepare(f, g, axis)?;
    let det = bareiss_determinant(sylvester_matrix(&bf, &bg, p), p);
    Ok(BiPoly::constant(det).to_laurent(axis))
}

/// A combination `alpha * f + beta * g = relation` free of `axis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationResult {
    pub axis: Var,
    /// The Sylvester resultant (up to a monomial unit).
    pub resultant: LaurentPoly,
    pub alpha: LaurentPoly,
    pub beta: LaurentPoly,
    /// Nonzero, free of `axis`; a polynomial multiple of an associate of the
    /// resultant.
    pub relation: LaurentPoly,
    /// `alpha * f + beta * g - relation` expanded to zero.
    pub identity_holds: bool,
}

impl EliminationResult {
    /// The variable the relation still depends on.
    pub fn remaining(&self) -> Var {
        self.axis.other()
    }
}

impl fmt::Display for EliminationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "axis: {}", self.axis)?;
        writeln!(f, "resultant: {}", self.resultant)?;
        writeln!(f, "alpha: {}", self.alpha)?;
        writeln!(f, "beta: {}", self.beta)?;
        writeln!(f, "relation: {}", self.relation)?;
        write!(
            f,
            "identity alpha*f + beta*g = relation: {}",
            if self.identity_holds { "verified" } else { "FAILED" }
        )
    }
}

/// Extended Euclid in `axis` over the rational functions in the other
/// variable, with denominators cleared along the way.
///
/// Fails with [`Error::CommonFactor`] when `f` and `g` share a factor of
/// positive degree in `axis`.
pub fn bezout_cofactors(f: &LaurentPoly, g: &LaurentPoly, axis: Var) -> Result<EliminationResult> {
    let (bf, bg, p) = prepare(f, g, axis)?;
    let one = BiPoly::constant(UniPoly::one(p));
    let zero = BiPoly::zero(p);

    // Invariant: s * f' + t * g' = r for the normalized f', g'.
    let mut prev = (bf.clone(), one.clone(), zero.clone());
    let mut cur = (bg.clone(), zero, one);
    if prev.0.degree() < cur.0.degree() {
        std::mem::swap(&mut prev, &mut cur);
    }
    loop {
        match cur.0.degree() {
            None => return Err(Error::CommonFactor(axis.name())),
            Some(0) => break,
            Some(_) => {}
        }
        let (q, rem, mult) = prev.0.pseudo_divrem(&cur.0);
        let next_s = prev.1.mul_uni(&mult).sub(&q.mul(&cur.1));
        let next_t = prev.2.mul_uni(&mult).sub(&q.mul(&cur.2));
        let c = rem.content().gcd(&next_s.content()).gcd(&next_t.content());
        let next = if c.is_zero() {
            (rem, next_s, next_t)
        } else {
            (rem.div_uni(&c), next_s.div_uni(&c), next_t.div_uni(&c))
        };
        prev = std::mem::replace(&mut cur, next);
    }

    let (r, s, t) = cur;
    let scale = UniPoly::constant(p, crate::ring::inv_mod(r.lc().lc(), p) as u64);
    let (r, s, t) = (r.mul_uni(&scale), s.mul_uni(&scale), t.mul_uni(&scale));

    // Undo the proper shift: f' = m_f f, so s f' = (s m_f) f.
    let (_, sf) = f.make_proper();
    let (_, sg) = g.make_proper();
    let alpha = s.to_laurent(axis).shift(sf);
    let beta = t.to_laurent(axis).shift(sg);
    let relation = r.to_laurent(axis);
    let lhs = &(&alpha * f) + &(&beta * g);
    let identity_holds = lhs == relation;
    Ok(EliminationResult {
        axis,
        resultant: resultant(f, g, axis)?,
        alpha,
        beta,
        relation,
        identity_holds,
    })
}

/// Univariate annihilators obtained from two coprime annihilators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimePeriodicity {
    /// Eliminates `X`; its relation is a polynomial in `Y` only.
    pub eliminate_x: EliminationResult,
    /// Eliminates `Y`; its relation is a polynomial in `X` only.
    pub eliminate_y: EliminationResult,
}

impl CoprimePeriodicity {
    /// The annihilator in `Y` alone (forces vertical periodicity).
    pub fn vertical_annihilator(&self) -> &LaurentPoly {
        &self.eliminate_x.relation
    }

    /// The annihilator in `X` alone (forces horizontal periodicity).
    pub fn horizontal_annihilator(&self) -> &LaurentPoly {
        &self.eliminate_y.relation
    }

    /// Periods `(a, b)` such that `(a, 0)` and `(0, b)` are vectors of
    /// periodicity of every configuration annihilated by both inputs.
    /// `None` if an order exceeds `cap`.
    pub fn periods(&self, cap: u64) -> Option<(u64, u64)> {
        Some((
            univariate_period(self.horizontal_annihilator(), Var::X, cap)?,
            univariate_period(self.vertical_annihilator(), Var::Y, cap)?,
        ))
    }
}

/// Smallest `n` such that the univariate `r` (in `v`) divides `v^n - 1` after
/// monomial normalization, searched up to `cap`. A monomial gives 1: it only
/// annihilates the zero configuration.
pub fn univariate_period(r: &LaurentPoly, v: Var, cap: u64) -> Option<u64> {
    let (u, _) = r.normalized().to_unipoly(v)?;
    u.order_of_var(cap)
}

/// Both eliminations for a pair with no common factor.
pub fn coprime_periodicity(f: &LaurentPoly, g: &LaurentPoly) -> Result<CoprimePeriodicity> {
    Ok(CoprimePeriodicity {
        eliminate_x: bezout_cofactors(f, g, Var::X)?,
        eliminate_y: bezout_cofactors(f, g, Var::Y)?,
    })
}

/// Greatest common divisor over `F_p[X^±1, Y^±1]`, monomial-normalized and
/// with leading coefficient 1. Units (monomials) are dropped, so coprime
/// inputs give `1`.
pub fn poly_gcd(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    let p = f.ring().require_field()?;
    f.ring().require_same(g.ring())?;
    if f.is_zero() {
        return Ok(g.normalized().make_monic());
    }
    if g.is_zero() {
        return Ok(f.normalized().make_monic());
    }
    let a = BiPoly::from_laurent(&f.normalized(), Var::X)?;
    let b = BiPoly::from_laurent(&g.normalized(), Var::X)?;
    let content = a.content().gcd(&b.content());
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let (_, r, _) = a.pseudo_divrem(&b);
        a = std::mem::replace(&mut b, r.primitive_part());
    }
    let main = if a.degree() == Some(0) {
        BiPoly::constant(UniPoly::one(p))
    } else {
        a.primitive_part()
    };
    Ok(main
        .mul_uni(&content)
        .to_laurent(Var::X)
        .normalized()
        .make_monic())
}

#[cfg(test)]
mod tests;
