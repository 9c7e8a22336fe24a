//! Line-polynomial factors and the classification they induce.
//!
//! A line factor in direction `u` becomes a polynomial in `X` alone after a
//! unimodular change of exponents sending `u` to `(1, 0)`. Viewing the result
//! as a polynomial in `Y` with coefficients in `F_p[X^±1]`, the largest such
//! factor is the gcd of those coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{LaurentPoly, Unimodular, Var};
use crate::error::{Error, Result};
use crate::fp::UniPoly;
use crate::newton::{candidate_line_directions, sublattice_index, Direction, SublatticeIndex};

/// Direction of `f` if its support is collinear with at least two points.
pub fn line_direction_of(f: &LaurentPoly) -> Result<Option<Direction>> {
    let support = f.support();
    let &base = support.first().ok_or(Error::ZeroPolynomial)?;
    let mut dir: Option<Direction> = None;
    for &(i, j) in &support[1..] {
        let d = Direction::new(i - base.0, j - base.1).expect("distinct support points");
        match dir {
            None => dir = Some(d),
            Some(prev) if prev != d => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(dir)
}

/// Whether `f` is a line polynomial (in any direction).
pub fn is_line_polynomial(f: &LaurentPoly) -> bool {
    matches!(line_direction_of(f), Ok(Some(_)))
}

/// The maximal factor of `f` that is a line polynomial in direction `u`,
/// monomial-normalized and monic; `1` when only monomials divide.
pub fn line_content(f: &LaurentPoly, u: Direction) -> Result<LaurentPoly> {
    let p = f.ring().require_field()?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = Unimodular::sending_to_x_axis(u.vector())?;
    let g = f.unimodular_change(&m);
    let mut rows: BTreeMap<i64, Vec<(i64, u32)>> = BTreeMap::new();
    for ((i, j), c) in g.terms() {
        let c = u32::try_from(c).expect("canonical field coefficient");
        rows.entry(j).or_default().push((i, c));
    }
    let mut content = UniPoly::zero(p);
    for row in rows.values() {
        let lo = row.iter().map(|t| t.0).min().unwrap();
        let hi = row.iter().map(|t| t.0).max().unwrap();
        let mut cs = vec![0u32; (hi - lo + 1) as usize];
        for &(i, c) in row {
            cs[(i - lo) as usize] = c;
        }
        content = content.gcd(&UniPoly::from_coeffs(p, cs));
        if content.degree() == Some(0) {
            break;
        }
    }
    let line = LaurentPoly::from_unipoly(&content, Var::X, 0);
    Ok(line.unimodular_change(&m.inverse()).normalized().make_monic())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFactorEntry {
    pub direction: Direction,
    /// Line polynomial in `direction`, or `1`.
    pub content: LaurentPoly,
}

/// Per-direction line contents of a polynomial, over the Newton-polygon
/// candidate directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFactorProfile {
    entries: Vec<LineFactorEntry>,
}

impl LineFactorProfile {
    /// Candidate directions whose content is a genuine line polynomial.
    pub fn factors(&self) -> impl Iterator<Item = &LineFactorEntry> {
        self.entries.iter().filter(|e| !e.content.is_monomial())
    }

    /// All candidate directions, including those with trivial content.
    pub fn candidates(&self) -> &[LineFactorEntry] {
        &self.entries
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.factors().map(|e| e.direction).collect()
    }

    pub fn content(&self, u: Direction) -> Option<&LaurentPoly> {
        self.factors().find(|e| e.direction == u).map(|e| &e.content)
    }

    pub fn has_none(&self) -> bool {
        self.factors().next().is_none()
    }

    pub fn single_direction(&self) -> bool {
        self.factors().count() == 1
    }

    pub fn multi_direction(&self) -> bool {
        self.factors().count() > 1
    }
}

pub fn line_factor_profile(f: &LaurentPoly) -> Result<LineFactorProfile> {
    f.ring().require_field()?;
    let mut entries = Vec::new();
    for u in candidate_line_directions(f)? {
        let content = line_content(f, u)?;
        if !content.is_monomial() && !f.is_divisible_by(&content)? {
            return Err(Error::Precondition(format!(
                "line content {content} does not divide {f}"
            )));
        }
        entries.push(LineFactorEntry { direction: u, content });
    }
    Ok(LineFactorProfile { entries })
}

/// Where a polynomial falls relative to the line-factor criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NivatClass {
    NoLineFactors,
    SingleDirection {
        direction: Direction,
        content: LaurentPoly,
    },
    MultiDirection {
        directions: Vec<Direction>,
        sublattice_index: SublatticeIndex,
    },
}

impl NivatClass {
    pub fn name(&self) -> &'static str {
        match self {
            NivatClass::NoLineFactors => "NoLineFactors",
            NivatClass::SingleDirection { .. } => "SingleDirection",
            NivatClass::MultiDirection { .. } => "MultiDirection",
        }
    }

    pub fn verdict(&self) -> String {
        match self {
            NivatClass::NoLineFactors => "generalized Nivat property holds; any element with a \
                nontrivial Z-annihilator is two-periodic"
                .to_string(),
            NivatClass::SingleDirection { direction, .. } => format!(
                "generalized Nivat property holds; any element with a nontrivial \
                 Z-annihilator is periodic in direction {direction}"
            ),
            NivatClass::MultiDirection { .. } => {
                "line factors in several directions; generalized Nivat property \
                 status unknown"
                    .to_string()
            }
        }
    }

    /// The generalized Nivat property is guaranteed for this class.
    pub fn is_guaranteed(&self) -> bool {
        !matches!(self, NivatClass::MultiDirection { .. })
    }
}

impl fmt::Display for NivatClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NivatClass::NoLineFactors => write!(f, "NoLineFactors"),
            NivatClass::SingleDirection { direction, content } => {
                write!(f, "SingleDirection {direction} content {content}")
            }
            NivatClass::MultiDirection {
                directions,
                sublattice_index,
            } => {
                let ds: Vec<String> = directions.iter().map(|d| d.to_string()).collect();
                write!(
                    f,
                    "MultiDirection {{{}}} sublattice index {sublattice_index}",
                    ds.join(", ")
                )
            }
        }
    }
}

pub fn classify_nivat(f: &LaurentPoly) -> Result<NivatClass> {
    let profile = line_factor_profile(f)?;
    let mut factors = profile.factors();
    Ok(match (factors.next(), factors.next()) {
        (None, _) => NivatClass::NoLineFactors,
        (Some(e), None) => NivatClass::SingleDirection {
            direction: e.direction,
            content: e.content.clone(),
        },
        _ => NivatClass::MultiDirection {
            directions: profile.directions(),
            sublattice_index: sublattice_index(f)?,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn f2(s: &str) -> LaurentPoly {
        LaurentPoly::parse(Ring::F2, s).unwrap()
    }

    #[test]
    fn line_directions() {
        let d = |s: &str| line_direction_of(&f2(s)).unwrap().map(Direction::vector);
        assert_eq!(d("1 + X^2"), Some((1, 0)));
        assert_eq!(d("1 + X*Y + X^2*Y^2"), Some((1, 1)));
        assert_eq!(d("1 + X + Y"), None);
        assert_eq!(d("X^4*Y"), None);
        assert_eq!(d("X^-1*Y^2 + X*Y^-2"), Some((1, -2)));
        assert!(line_direction_of(&LaurentPoly::zero(Ring::F2)).is_err());
    }

    #[test]
    fn contents() {
        let ft = f2("1 + X^2 + Y^2 + X^2*Y^2");
        assert_eq!(line_content(&ft, Direction::HORIZONTAL).unwrap(), f2("1 + X^2"));
        assert_eq!(line_content(&ft, Direction::VERTICAL).unwrap(), f2("1 + Y^2"));
        let fs = f2("1 + X + Y + X*Y");
        assert_eq!(line_content(&fs, Direction::VERTICAL).unwrap(), f2("1 + Y"));
        let fl = f2("1 + X + Y");
        assert!(line_content(&fl, Direction::HORIZONTAL).unwrap().is_one());
        let diag = &f2("1 + X*Y") * &fl;
        let u = Direction::new(1, 1).unwrap();
        assert_eq!(line_content(&diag, u).unwrap(), f2("1 + X*Y"));
        assert!(line_content(&LaurentPoly::parse(Ring::Z, "1 + X").unwrap(), u).is_err());
    }

    #[test]
    fn profiles() {
        assert!(line_factor_profile(&f2("1 + X + Y")).unwrap().has_none());
        let ps = line_factor_profile(&f2("1 + X + Y + X*Y")).unwrap();
        assert!(ps.multi_direction());
        assert_eq!(ps.content(Direction::HORIZONTAL), Some(&f2("1 + X")));
        assert_eq!(ps.content(Direction::VERTICAL), Some(&f2("1 + Y")));
        let single = &f2("1 + X") * &f2("1 + X + Y");
        let p1 = line_factor_profile(&single).unwrap();
        assert!(p1.single_direction());
        assert_eq!(p1.content(Direction::HORIZONTAL), Some(&f2("1 + X")));
    }

    #[test]
    fn classification() {
        assert_eq!(classify_nivat(&f2("1 + X + Y")).unwrap(), NivatClass::NoLineFactors);
        let ca = LaurentPoly::parse(Ring::F3, "Y - X - X^2").unwrap();
        assert_eq!(classify_nivat(&ca).unwrap(), NivatClass::NoLineFactors);
        match classify_nivat(&f2("1 + X^2 + Y^2 + X^2*Y^2")).unwrap() {
            NivatClass::MultiDirection {
                directions,
                sublattice_index,
            } => {
                assert_eq!(directions, vec![Direction::VERTICAL, Direction::HORIZONTAL]);
                assert_eq!(sublattice_index, SublatticeIndex::Finite(4));
            }
            other => panic!("unexpected {other:?}"),
        }
        // a line polynomial is its own single line factor
        match classify_nivat(&f2("X^-1 + Y^3")).unwrap() {
            NivatClass::SingleDirection { direction, content } => {
                assert_eq!(direction.vector(), (1, 3));
                assert_eq!(content, f2("X^-1 + Y^3").normalized());
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
