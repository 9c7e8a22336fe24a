use std::fmt;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::Point;

use super::window::{Region, Window};

/// Which families of lines make up the sublattice configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineFamily {
    /// Ones on row `j = 0` at even `i`.
    Horizontal,
    /// Ones on column `i = 1` at even `j`.
    Vertical,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum SourceKind {
    Torus(Window),
    AdditiveCa { rule: Vec<(i64, i64)>, seed: Vec<i64> },
    FourDot { row: Vec<i64>, col: Vec<i64> },
    SublatticeLines(LineFamily),
    Sum(Box<ConfigSource>, Box<ConfigSource>),
    ZLift(Box<ConfigSource>),
}

/// A finite description of an infinite configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConfigSource {
    ring: Ring,
    kind: SourceKind,
}

impl ConfigSource {
    /// The two-periodic configuration whose fundamental domain is `grid`.
    pub fn torus(grid: Window) -> Self {
        ConfigSource { ring: grid.ring(), kind: SourceKind::Torus(grid) }
    }

    /// Space-time diagram of the additive cellular automaton with local rule
    /// `g(X)`: row `j - 1` is `g` applied to row `j`, starting from `seed`
    /// (repeated with period `seed.len()`) on row `j = 0`.
    ///
    /// The result is annihilated by `Y - g(X)`.
    pub fn additive_ca(rule: &LaurentPoly, seed: &[i64]) -> Result<Self> {
        let ring = rule.ring();
        ring.require_field()?;
        if rule.is_zero() {
            return Err(Error::Source("the rule has no terms".into()));
        }
        if !rule.is_free_of(crate::Var::Y) {
            return Err(Error::UnexpectedVariable("Y"));
        }
        if seed.is_empty() {
            return Err(Error::Source("empty seed row".into()));
        }
        let seed = seed.iter().map(|&v| ring.reduce_i64(v)).collect();
        let rule = rule
            .small_terms()?
            .into_iter()
            .map(|((i, _), c)| (i, c as i64))
            .collect();
        Ok(ConfigSource { ring, kind: SourceKind::AdditiveCa { rule, seed } })
    }

    /// `c_(i,j) = r_i + s_j` over `F_2`, with both words repeated periodically.
    pub fn fourdot(row: &[u8], col: &[u8]) -> Result<Self> {
        let word = |w: &[u8], name: &str| -> Result<Vec<i64>> {
            if w.is_empty() {
                return Err(Error::Source(format!("empty {name} word")));
            }
            w.iter()
                .map(|&b| match b {
                    0 | 1 => Ok(b as i64),
                    _ => Err(Error::Source(format!("{name} word has non-binary symbol {b}"))),
                })
                .collect()
        };
        Ok(ConfigSource {
            ring: Ring::F2,
            kind: SourceKind::FourDot { row: word(row, "row")?, col: word(col, "column")? },
        })
    }

    /// Sum of horizontal and vertical dotted lines on the index-4 sublattice,
    /// a non-periodic configuration of low complexity annihilated by
    /// `(1 + X^2)(1 + Y^2)`.
    pub fn sublattice_lines(family: LineFamily) -> Self {
        ConfigSource { ring: Ring::F2, kind: SourceKind::SublatticeLines(family) }
    }

    /// Pointwise sum.
    pub fn sum(left: ConfigSource, right: ConfigSource) -> Result<Self> {
        left.ring.require_same(right.ring)?;
        Ok(ConfigSource {
            ring: left.ring,
            kind: SourceKind::Sum(Box::new(left), Box::new(right)),
        })
    }

    /// The same symbols read as integers `0..p`.
    pub fn zlift(base: ConfigSource) -> Result<Self> {
        base.ring.require_field()?;
        Ok(ConfigSource { ring: Ring::Z, kind: SourceKind::ZLift(Box::new(base)) })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_torus(&self) -> bool {
        self.torus_view().is_some()
    }

    /// A fundamental domain when the source is a torus (possibly lifted or
    /// summed with other tori), so that checks on it are exact.
    pub fn torus_view(&self) -> Option<Window> {
        match &self.kind {
            SourceKind::Torus(w) => Some(w.clone()),
            SourceKind::ZLift(b) => b.torus_view().map(|w| w.with_ring(Ring::Z)),
            SourceKind::Sum(a, b) => {
                let (ta, tb) = (a.torus_view()?, b.torus_view()?);
                let w = lcm(ta.width(), tb.width());
                let h = lcm(ta.height(), tb.height());
                let region = Region::new(ta.origin(), w, h);
                Window::from_fn(self.ring, region, |q| ta.wrapped(q) + tb.wrapped(q)).ok()
            }
            _ => None,
        }
    }

    /// Value at a single cell.
    pub fn value(&self, (x, y): Point) -> Result<i64> {
        Ok(match &self.kind {
            SourceKind::Torus(w) => w.wrapped((x, y)),
            SourceKind::FourDot { row, col } => {
                (row[x.rem_euclid(row.len() as i64) as usize]
                    + col[y.rem_euclid(col.len() as i64) as usize])
                    % 2
            }
            SourceKind::SublatticeLines(family) => sublattice_value(*family, (x, y)),
            SourceKind::Sum(a, b) => self.ring.reduce_i64(a.value((x, y))? + b.value((x, y))?),
            SourceKind::ZLift(b) => b.value((x, y))?,
            SourceKind::AdditiveCa { .. } => {
                return self.generate_window(Region::new((x, y), 1, 1)).map(|w| w.values()[0])
            }
        })
    }

    /// The exact values of the configuration on `region`.
    pub fn generate_window(&self, region: Region) -> Result<Window> {
        if region.is_empty() {
            return Err(Error::Grid("window must be at least 1x1".into()));
        }
        match &self.kind {
            SourceKind::AdditiveCa { rule, seed } => self.ca_window(rule, seed, region),
            SourceKind::Sum(a, b) => a.generate_window(region)?.add(&b.generate_window(region)?),
            SourceKind::ZLift(b) => b.generate_window(region)?.zlift(),
            _ => Window::from_fn(self.ring, region, |q| self.value(q).unwrap_or(0)),
        }
    }

    fn ca_window(&self, rule: &[(i64, i64)], seed: &[i64], region: Region) -> Result<Window> {
        let top = region.origin.1 + region.height as i64 - 1;
        if top > 0 {
            return Err(Error::Unreachable(top));
        }
        let p = self.ring.modulus() as i64;
        let n = seed.len() as i64;
        // The seed is periodic, so each row is too; evolve one period.
        let mut row = seed.to_vec();
        let mut j = 0;
        let mut rows = Vec::with_capacity(region.height);
        while j >= region.origin.1 {
            if j <= top {
                rows.push(row.clone());
            }
            row = (0..n)
                .map(|i| {
                    rule.iter()
                        .map(|&(k, g)| g * row[(i - k).rem_euclid(n) as usize])
                        .sum::<i64>()
                        .rem_euclid(p)
                })
                .collect();
            j -= 1;
        }
        // `rows` runs from the top row downwards.
        rows.reverse();
        let values = rows
            .iter()
            .flat_map(|r| {
                (0..region.width as i64).map(move |i| r[(region.origin.0 + i).rem_euclid(n) as usize])
            })
            .collect();
        Window::new(self.ring, region, values)
    }
}

fn sublattice_value(family: LineFamily, (x, y): Point) -> i64 {
    let h = (y == 0 && x.rem_euclid(2) == 0) as i64;
    let v = (x == 1 && y.rem_euclid(2) == 0) as i64;
    match family {
        LineFamily::Horizontal => h,
        LineFamily::Vertical => v,
        LineFamily::Both => (h + v) % 2,
    }
}

fn lcm(a: usize, b: usize) -> usize {
    num_integer::lcm(a, b)
}

fn word(w: &[i64], ring: Ring) -> String {
    let sep = if ring.modulus() <= 10 { "" } else { "," };
    w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for ConfigSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SourceKind::Torus(w) => write!(f, "torus {}x{} over {}", w.width(), w.height(), self.ring),
            SourceKind::AdditiveCa { rule, seed } => {
                let g = LaurentPoly::from_terms(self.ring, rule.iter().map(|&(k, c)| ((k, 0), c)));
                write!(f, "additive-ca over {} rule {} seed {}", self.ring, g, word(seed, self.ring))
            }
            SourceKind::FourDot { row, col } => {
                write!(f, "fourdot r={} s={}", word(row, self.ring), word(col, self.ring))
            }
            SourceKind::SublatticeLines(LineFamily::Both) => f.write_str("sublattice-lines"),
            SourceKind::SublatticeLines(LineFamily::Horizontal) => f.write_str("sublattice-lines (horizontal part)"),
            SourceKind::SublatticeLines(LineFamily::Vertical) => f.write_str("sublattice-lines (vertical part)"),
            SourceKind::Sum(a, b) => write!(f, "({a}) + ({b})"),
            SourceKind::ZLift(b) => write!(f, "zlift({b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::apply_poly;

    fn rows(w: &Window) -> Vec<String> {
        w.to_grid_text().lines().skip(1).map(String::from).collect()
    }

    #[test]
    fn sublattice_lines_near_origin() {
        let r = Region::new((0, 0), 4, 4);
        let h = ConfigSource::sublattice_lines(LineFamily::Horizontal).generate_window(r).unwrap();
        assert_eq!(rows(&h), ["0000", "0000", "0000", "1010"]);
        let v = ConfigSource::sublattice_lines(LineFamily::Vertical).generate_window(r).unwrap();
        assert_eq!(rows(&v), ["0000", "0100", "0000", "0100"]);
        let c = ConfigSource::sublattice_lines(LineFamily::Both).generate_window(r).unwrap();
        assert_eq!(c.get((0, 0)), Some(1));
        assert_eq!(c.get((1, 0)), Some(1));
        assert_eq!(rows(&c), ["0000", "0100", "0000", "1110"]);
    }

    #[test]
    fn pascal_triangle_below_the_seed() {
        let g = LaurentPoly::parse(Ring::F2, "1 + X").unwrap();
        let mut seed = vec![0; 16];
        seed[3] = 1;
        let src = ConfigSource::additive_ca(&g, &seed).unwrap();
        let w = src.generate_window(Region::new((0, -3), 8, 4)).unwrap();
        assert_eq!(rows(&w), ["00010000", "00011000", "00010100", "00011110"]);
        let f = crate::algebra::ledrappier(Ring::F2);
        assert!(apply_poly(&f, &w).unwrap().is_zero());
        assert!(matches!(
            src.generate_window(Region::new((0, -1), 2, 3)),
            Err(Error::Unreachable(1))
        ));
    }

    #[test]
    fn ca_rows_wrap_with_the_seed_period() {
        let g = LaurentPoly::parse(Ring::F3, "X + 2*X^-1").unwrap();
        let src = ConfigSource::additive_ca(&g, &[1, 2, 0]).unwrap();
        let w = src.generate_window(Region::new((-3, -5), 9, 6)).unwrap();
        for q in w.region().cells() {
            assert_eq!(w.get(q).unwrap(), src.value((q.0 + 3, q.1)).unwrap());
        }
        let ann = LaurentPoly::parse(Ring::F3, "Y - X - 2*X^-1").unwrap();
        assert!(apply_poly(&ann, &w).unwrap().is_zero());
    }

    #[test]
    fn constant_torus() {
        let grid = Window::constant(Ring::F3, Region::new((0, 0), 1, 1), 2).unwrap();
        let src = ConfigSource::torus(grid);
        let w = src.generate_window(Region::new((-5, 7), 3, 2)).unwrap();
        assert!(w.values().iter().all(|&v| v == 2));
    }

    #[test]
    fn fourdot_and_lifts() {
        let src = ConfigSource::fourdot(&[0, 1], &[1, 1, 0]).unwrap();
        assert_eq!(src.value((1, 2)).unwrap(), 1);
        assert_eq!(src.value((-1, -1)).unwrap(), 1);
        assert_eq!(src.value((0, 0)).unwrap(), 1);
        assert_eq!(src.value((1, 0)).unwrap(), 0);
        let z = ConfigSource::zlift(src.clone()).unwrap();
        assert_eq!(z.ring(), Ring::Z);
        let r = Region::new((0, 0), 5, 5);
        assert_eq!(z.generate_window(r).unwrap().reduce(Ring::F2), src.generate_window(r).unwrap());
        assert!(ConfigSource::zlift(z).is_err());
        assert!(ConfigSource::fourdot(&[2], &[0]).is_err());
        assert!(ConfigSource::fourdot(&[], &[0]).is_err());
    }

    #[test]
    fn sum_of_tori_is_a_torus() {
        let a = Window::from_fn(Ring::F2, Region::new((0, 0), 2, 1), |(x, _)| x).unwrap();
        let b = Window::from_fn(Ring::F2, Region::new((0, 0), 1, 3), |(_, y)| (y == 0) as i64).unwrap();
        let s = ConfigSource::sum(ConfigSource::torus(a), ConfigSource::torus(b)).unwrap();
        let t = s.torus_view().unwrap();
        assert_eq!((t.width(), t.height()), (2, 3));
        assert_eq!(t.get((1, 0)), Some(0));
        assert_eq!(t.get((1, 1)), Some(1));
        assert!(ConfigSource::sublattice_lines(LineFamily::Both).torus_view().is_none());
    }
}
