use std::fmt;

use crate::algebra::{four_dot, LaurentPoly};
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::Point;

use super::source::{ConfigSource, LineFamily};
use super::window::{apply_poly, apply_poly_torus, Region, Window};

/// Where an annihilation check was carried out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateScope {
    /// One fundamental domain with wraparound: a global verdict.
    ExactTorus(Region),
    /// The cells of `f c` computable from a finite window: evidence only.
    Window(Region),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateStatus {
    Verified,
    Failed { witness: Point, value: i64 },
}

/// The outcome of evaluating `f c` on some set of cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorCertificate {
    pub polynomial: LaurentPoly,
    pub scope: CertificateScope,
    pub status: CertificateStatus,
}

impl AnnihilatorCertificate {
    fn from_product(polynomial: &LaurentPoly, product: &Window, exact: bool) -> Self {
        let scope = if exact {
            CertificateScope::ExactTorus(product.region())
        } else {
            CertificateScope::Window(product.region())
        };
        let status = match product.first_nonzero() {
            None => CertificateStatus::Verified,
            Some((witness, value)) => CertificateStatus::Failed { witness, value },
        };
        AnnihilatorCertificate { polynomial: polynomial.clone(), scope, status }
    }

    pub fn is_verified(&self) -> bool {
        self.status == CertificateStatus::Verified
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.scope, CertificateScope::ExactTorus(_))
    }
}

impl fmt::Display for AnnihilatorCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            CertificateStatus::Verified => write!(f, "verified")?,
            CertificateStatus::Failed { witness, value } => {
                write!(f, "failed: (f c)({},{}) = {value}", witness.0, witness.1)?
            }
        }
        match self.scope {
            CertificateScope::ExactTorus(r) => write!(f, " (exact, torus fundamental domain {r})"),
            CertificateScope::Window(r) => write!(f, " (window evidence on {r}, not a proof)"),
        }
    }
}

/// Checks whether `f c = 0`.
///
/// Torus sources are checked exactly on one fundamental domain and `region`
/// is ignored; every other source is checked on the part of `region` where
/// `f c` can be computed.
pub fn check_annihilates(
    f: &LaurentPoly,
    src: &ConfigSource,
    region: Region,
) -> Result<AnnihilatorCertificate> {
    f.ring().require_same(src.ring())?;
    if let Some(grid) = src.torus_view() {
        let product = apply_poly_torus(f, &grid)?;
        return Ok(AnnihilatorCertificate::from_product(f, &product, true));
    }
    let win = src.generate_window(region)?;
    let product = apply_poly(f, &win)?;
    Ok(AnnihilatorCertificate::from_product(f, &product, false))
}

/// `c = h + v` over `F_2` for a configuration annihilated by `(1+X)(1+Y)`,
/// with `h` horizontally and `v` vertically periodic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourDotDecomposition {
    pub anchor: Point,
    /// `h_(i,j) = c_(a,j)`: constant along rows.
    pub h: Window,
    /// `v_(i,j) = c_(i,b) + c_(a,b)`: constant along columns.
    pub v: Window,
    /// Ones exactly where both `h` and `v` have ones.
    pub d: Window,
    /// `c = h + v` cellwise over `F_2`.
    pub field_identity: bool,
    /// `c = h + v - 2d` cellwise over the integers.
    pub integer_identity: bool,
}

/// Decomposes with the anchor at the origin.
pub fn fourdot_decompose(win: &Window) -> Result<FourDotDecomposition> {
    fourdot_decompose_at(win, (0, 0))
}

/// Decomposes using row `anchor.1` and column `anchor.0` of the window.
pub fn fourdot_decompose_at(win: &Window, anchor: Point) -> Result<FourDotDecomposition> {
    win.ring().require_same(Ring::F2)?;
    let Some(c_ab) = win.get(anchor) else {
        return Err(Error::Precondition(format!(
            "anchor ({},{}) lies outside {}",
            anchor.0,
            anchor.1,
            win.region()
        )));
    };
    let check = apply_poly(&four_dot(Ring::F2), win)?;
    if let Some((q, _)) = check.first_nonzero() {
        return Err(Error::Precondition(format!(
            "(1+X)(1+Y) does not annihilate the window: nonzero at ({},{})",
            q.0, q.1
        )));
    }
    let region = win.region();
    let h = Window::from_fn(Ring::F2, region, |(_, y)| win.at((anchor.0, y)))?;
    let v = Window::from_fn(Ring::F2, region, |(x, _)| win.at((x, anchor.1)) + c_ab)?;
    let d = Window::from_fn(Ring::F2, region, |q| h.at(q) * v.at(q))?;
    let field_identity = h.add(&v)? == *win;
    let (cz, hz, vz, dz) = (win.zlift()?, h.zlift()?, v.zlift()?, d.zlift()?);
    let integer_identity = region
        .cells()
        .all(|q| cz.at(q) == hz.at(q) + vz.at(q) - 2 * dz.at(q));
    Ok(FourDotDecomposition { anchor, h, v, d, field_identity, integer_identity })
}

/// The non-periodic, low-complexity configuration annihilated by
/// `(1 + X^2)(1 + Y^2)`: ones on row 0 at even `i` plus ones on column 1 at
/// even `j`.
pub fn sublattice_counterexample() -> ConfigSource {
    ConfigSource::sublattice_lines(LineFamily::Both)
}

/// A product `(X^(i_1) Y^(j_1) - 1) ... (X^(i_m) Y^(j_m) - 1)` over the
/// integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceProduct {
    pub vectors: Vec<Point>,
    pub polynomial: LaurentPoly,
}

/// `X^i Y^j - 1` over the integers.
pub fn monomial_difference((i, j): Point) -> LaurentPoly {
    LaurentPoly::from_terms(Ring::Z, [((i, j), 1), ((0, 0), -1)])
}

/// Bounded search for a product of at most `m_max` factors `X^i Y^j - 1`
/// annihilating the integer lift of a torus source.
///
/// Factors are normalized to `i > 0`, or `i = 0 < j`, with `i <= w` and
/// `|j| <= h` for a `w x h` fundamental domain. The first product in order of
/// `m`, then lexicographic order of the sorted factor list, is returned.
pub fn search_monomial_difference_annihilator(
    src: &ConfigSource,
    m_max: usize,
) -> Result<Option<DifferenceProduct>> {
    let grid = src
        .torus_view()
        .ok_or_else(|| Error::Precondition(format!("{src} is not a torus source")))?;
    let grid = if grid.ring().is_field() { grid.zlift()? } else { grid };
    let (w, h) = (grid.width() as i64, grid.height() as i64);
    let vectors: Vec<Point> = (0..=w)
        .flat_map(|i| (-h..=h).map(move |j| (i, j)))
        .filter(|&(i, j)| i > 0 || j > 0)
        .collect();
    let factors: Vec<LaurentPoly> = vectors.iter().map(|&t| monomial_difference(t)).collect();

    fn search(
        grid: &Window,
        factors: &[LaurentPoly],
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<bool> {
        if left == 0 {
            return Ok(grid.is_zero());
        }
        for k in start..factors.len() {
            let next = apply_poly_torus(&factors[k], grid)?;
            chosen.push(k);
            if search(&next, factors, k, left - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    for m in 1..=m_max {
        let mut chosen = Vec::new();
        if search(&grid, &factors, 0, m, &mut chosen)? {
            let vectors: Vec<Point> = chosen.iter().map(|&k| vectors[k]).collect();
            let polynomial = chosen
                .iter()
                .fold(LaurentPoly::one(Ring::Z), |acc, &k| &acc * &factors[k]);
            return Ok(Some(DifferenceProduct { vectors, polynomial }));
        }
    }
    Ok(None)
}

/// Runs the additive automaton with rule `g` on the cyclic row `seed` and,
/// if the seed recurs within `max_height` steps, returns the torus whose
/// rows are the orbit (row `-t` holds the state after `t` steps).
///
/// Seeds on a pre-periodic tail never recur and give `None`.
pub fn close_ca_torus(rule: &LaurentPoly, seed: &[i64], max_height: usize) -> Result<Option<ConfigSource>> {
    let src = ConfigSource::additive_ca(rule, seed)?;
    let n = seed.len();
    let rows = src.generate_window(Region::new((0, -(max_height as i64)), n, max_height + 1))?;
    let row = |t: usize| {
        let j = max_height - t;
        &rows.values()[j * n..(j + 1) * n]
    };
    let Some(period) = (1..=max_height).find(|&t| row(t) == row(0)) else {
        return Ok(None);
    };
    let values = (0..period).rev().flat_map(|t| row(t).to_vec()).collect();
    let grid = Window::new(rule.ring(), Region::new((0, 1 - period as i64), n, period), values)?;
    Ok(Some(ConfigSource::torus(grid)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ledrappier, sublattice_four_dot};
    use crate::config::detect_periods;

    fn p2(s: &str) -> LaurentPoly {
        LaurentPoly::parse(Ring::F2, s).unwrap()
    }

    #[test]
    fn counterexample_is_annihilated_and_aperiodic() {
        let c = sublattice_counterexample();
        let r = Region::new((-64, -64), 128, 128);
        let cert = check_annihilates(&sublattice_four_dot(Ring::F2), &c, r).unwrap();
        assert!(cert.is_verified());
        assert!(!cert.is_exact());
        assert_eq!(cert.scope, CertificateScope::Window(Region::new((-62, -62), 126, 126)));
        assert!(detect_periods(&c.generate_window(r).unwrap(), 32).is_empty());
        let h = ConfigSource::sublattice_lines(LineFamily::Horizontal).generate_window(r).unwrap();
        assert!(detect_periods(&h, 4).iter().any(|e| e.vector == (2, 0)));
        let v = ConfigSource::sublattice_lines(LineFamily::Vertical).generate_window(r).unwrap();
        assert!(detect_periods(&v, 4).iter().any(|e| e.vector == (0, 2)));
    }

    #[test]
    fn fourdot_sources_are_annihilated() {
        let src = ConfigSource::fourdot(&[0, 1, 1], &[1, 0, 0, 0, 1]).unwrap();
        let cert = check_annihilates(&four_dot(Ring::F2), &src, Region::centered(64)).unwrap();
        assert!(cert.is_verified());
        let bad = check_annihilates(&p2("1 + X"), &src, Region::centered(8)).unwrap();
        assert!(matches!(bad.status, CertificateStatus::Failed { .. }));
    }

    #[test]
    fn constant_torus_is_killed_exactly() {
        let grid = Window::constant(Ring::F2, Region::new((0, 0), 3, 2), 1).unwrap();
        let cert = check_annihilates(&p2("1 + X"), &ConfigSource::torus(grid), Region::centered(1)).unwrap();
        assert!(cert.is_verified() && cert.is_exact());
        assert!(cert.to_string().starts_with("verified (exact"));
    }

    #[test]
    fn too_small_region() {
        let c = sublattice_counterexample();
        let err = check_annihilates(&sublattice_four_dot(Ring::F2), &c, Region::centered(2));
        assert!(matches!(err, Err(Error::RegionTooSmall(_))));
    }

    #[test]
    fn decompose_all_ones() {
        let c = Window::constant(Ring::F2, Region::new((-2, -2), 5, 5), 1).unwrap();
        let dec = fourdot_decompose(&c).unwrap();
        assert!(dec.h.values().iter().all(|&x| x == 1));
        assert!(dec.v.is_zero() && dec.d.is_zero());
        assert!(dec.field_identity && dec.integer_identity);
    }

    #[test]
    fn decompose_checkerboard() {
        let c = Window::from_fn(Ring::F2, Region::new((0, 0), 6, 6), |(x, y)| x + y).unwrap();
        let dec = fourdot_decompose(&c).unwrap();
        for (x, y) in c.region().cells() {
            assert_eq!(dec.h.at((x, y)), y % 2);
            assert_eq!(dec.v.at((x, y)), x % 2);
            assert_eq!(dec.d.at((x, y)), (x % 2) * (y % 2));
        }
        assert!(dec.field_identity && dec.integer_identity);
    }

    #[test]
    fn decompose_row_word_only() {
        let src = ConfigSource::fourdot(&[0, 1], &[0]).unwrap();
        let c = src.generate_window(Region::new((0, 0), 6, 4)).unwrap();
        let dec = fourdot_decompose(&c).unwrap();
        assert!(dec.h.is_zero());
        assert!(c.region().cells().all(|(x, y)| dec.v.at((x, y)) == x % 2));
    }

    #[test]
    fn decompose_preconditions() {
        let c = Window::constant(Ring::F2, Region::new((1, 1), 3, 3), 1).unwrap();
        assert!(matches!(fourdot_decompose(&c), Err(Error::Precondition(_))));
        let x = ConfigSource::sublattice_lines(LineFamily::Both)
            .generate_window(Region::new((0, 0), 4, 4))
            .unwrap();
        assert!(matches!(fourdot_decompose(&x), Err(Error::Precondition(_))));
    }

    #[test]
    fn difference_products() {
        let stripes = Window::from_fn(Ring::F2, Region::new((0, 0), 3, 2), |(x, _)| (x == 0) as i64).unwrap();
        let found = search_monomial_difference_annihilator(&ConfigSource::torus(stripes), 2)
            .unwrap()
            .unwrap();
        assert_eq!(found.vectors, vec![(0, 1)]);

        let checker = Window::from_fn(Ring::F2, Region::new((0, 0), 2, 2), |(x, y)| x + y).unwrap();
        let src = ConfigSource::torus(checker);
        let found = search_monomial_difference_annihilator(&src, 1).unwrap().unwrap();
        assert_eq!(found.vectors.len(), 1);
        let lifted = ConfigSource::zlift(src.clone()).unwrap();
        assert!(check_annihilates(&found.polynomial, &lifted, Region::centered(1)).unwrap().is_verified());
        let xy = monomial_difference((1, 1));
        assert!(check_annihilates(&xy, &lifted, Region::centered(1)).unwrap().is_verified());

        assert!(search_monomial_difference_annihilator(&sublattice_counterexample(), 1).is_err());
    }

    #[test]
    fn ledrappier_tori() {
        let g = p2("1 + X");
        let torus = close_ca_torus(&g, &[1, 1, 0], 16).unwrap().unwrap();
        let grid = torus.torus_view().unwrap();
        assert_eq!(grid.to_grid_text(), "%grid mod=2 origin=0,-2 size=3x3\n110\n101\n011\n");
        let cert = check_annihilates(&ledrappier(Ring::F2), &torus, Region::centered(1)).unwrap();
        assert!(cert.is_verified() && cert.is_exact());
        // 1 + X is nilpotent on cyclic rows of length 4: every seed dies out.
        assert!(close_ca_torus(&g, &[1, 0, 0, 0], 64).unwrap().is_none());
    }
}
