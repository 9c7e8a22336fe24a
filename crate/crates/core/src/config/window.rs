use std::fmt;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::Point;

/// An axis-aligned rectangle of cells `origin + [0, width) x [0, height)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    pub origin: Point,
    pub width: usize,
    pub height: usize,
}

impl Region {
    pub fn new(origin: Point, width: usize, height: usize) -> Self {
        Region { origin, width, height }
    }

    /// A `size x size` square centered (up to rounding) on the origin.
    pub fn centered(size: usize) -> Self {
        let half = (size / 2) as i64;
        Region::new((-half, -half), size, size)
    }

    pub fn is_empty(&self) -> bool {
        self.width == 0 || self.height == 0
    }

    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn contains(&self, (x, y): Point) -> bool {
        let (dx, dy) = (x - self.origin.0, y - self.origin.1);
        dx >= 0 && dy >= 0 && (dx as usize) < self.width && (dy as usize) < self.height
    }

    /// Cells row by row, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.height as i64).flat_map(move |j| {
            (0..self.width as i64).map(move |i| (self.origin.0 + i, self.origin.1 + j))
        })
    }

    /// Grows the region so that every cell `t + u` with `t` in `self` and
    /// `u` in `[lo, hi]` is covered.
    pub fn expand(&self, lo: Point, hi: Point) -> Region {
        Region::new(
            (self.origin.0 + lo.0, self.origin.1 + lo.1),
            self.width + (hi.0 - lo.0) as usize,
            self.height + (hi.1 - lo.1) as usize,
        )
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} at ({},{})",
            self.width, self.height, self.origin.0, self.origin.1
        )
    }
}

/// A finite rectangular excerpt of a configuration.
///
/// Cell `(i, j)` of the value array holds `c` at `origin + (i, j)`; values are
/// stored bottom row first and are canonical in the ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Window {
    ring: Ring,
    region: Region,
    values: Vec<i64>,
}

impl Window {
    pub fn new(ring: Ring, region: Region, values: Vec<i64>) -> Result<Self> {
        if region.is_empty() {
            return Err(Error::Grid("window must be at least 1x1".into()));
        }
        if values.len() != region.len() {
            return Err(Error::Grid(format!(
                "expected {} values, got {}",
                region.len(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| !ring.is_canonical(v)) {
            return Err(Error::Grid(format!("value {v} is not canonical in {ring}")));
        }
        Ok(Window { ring, region, values })
    }

    /// Builds a window from a function of absolute coordinates; values are
    /// reduced into the ring.
    pub fn from_fn(ring: Ring, region: Region, mut f: impl FnMut(Point) -> i64) -> Result<Self> {
        let values = region.cells().map(|q| ring.reduce_i64(f(q))).collect();
        Window::new(ring, region, values)
    }

    pub fn constant(ring: Ring, region: Region, value: i64) -> Result<Self> {
        Window::from_fn(ring, region, |_| value)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn origin(&self) -> Point {
        self.region.origin
    }

    pub fn width(&self) -> usize {
        self.region.width
    }

    pub fn height(&self) -> usize {
        self.region.height
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Value at absolute coordinates.
    pub fn get(&self, q: Point) -> Option<i64> {
        self.region.contains(q).then(|| self.at(q))
    }

    /// Value at absolute coordinates that are known to be inside.
    #[inline]
    pub(crate) fn at(&self, (x, y): Point) -> i64 {
        let i = (x - self.region.origin.0) as usize;
        let j = (y - self.region.origin.1) as usize;
        self.values[j * self.region.width + i]
    }

    /// Value with wraparound, treating the window as a torus.
    #[inline]
    pub fn wrapped(&self, (x, y): Point) -> i64 {
        let w = self.region.width as i64;
        let h = self.region.height as i64;
        let i = (x - self.region.origin.0).rem_euclid(w) as usize;
        let j = (y - self.region.origin.1).rem_euclid(h) as usize;
        self.values[j * self.region.width + i]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// First nonzero cell, bottom row first.
    pub fn first_nonzero(&self) -> Option<(Point, i64)> {
        self.region
            .cells()
            .zip(&self.values)
            .find(|(_, &v)| v != 0)
            .map(|(q, &v)| (q, v))
    }

    /// Sub-window on a region contained in this one.
    pub fn crop(&self, region: Region) -> Result<Window> {
        let inside = !region.is_empty()
            && self.region.contains(region.origin)
            && self.region.contains((
                region.origin.0 + region.width as i64 - 1,
                region.origin.1 + region.height as i64 - 1,
            ));
        if !inside {
            return Err(Error::RegionTooSmall(format!(
                "{region} is not inside {}",
                self.region
            )));
        }
        Window::from_fn(self.ring, region, |q| self.at(q))
    }

    /// Cellwise sum in the ring.
    pub fn add(&self, other: &Window) -> Result<Window> {
        self.ring.require_same(other.ring)?;
        if self.region != other.region {
            return Err(Error::Grid(format!(
                "regions differ: {} vs {}",
                self.region, other.region
            )));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| self.ring.reduce_i64(a + b))
            .collect();
        Ok(Window { ring: self.ring, region: self.region, values })
    }

    /// Reinterprets a prime-field window over the integers, `a -> a`.
    pub fn zlift(&self) -> Result<Window> {
        self.ring.require_field()?;
        Ok(Window {
            ring: Ring::Z,
            region: self.region,
            values: self.values.clone(),
        })
    }

    /// Reduces every value into another ring (e.g. integers back to `F_p`).
    pub fn reduce(&self, ring: Ring) -> Window {
        Window {
            ring,
            region: self.region,
            values: self.values.iter().map(|&v| ring.reduce_i64(v)).collect(),
        }
    }

    pub(crate) fn with_ring(mut self, ring: Ring) -> Window {
        self.ring = ring;
        self
    }

    /// Serializes in the `%grid` text format.
    pub fn to_grid_text(&self) -> String {
        let m = self.ring.modulus();
        let digits = m != 0 && m <= 10;
        let mut out = format!(
            "%grid mod={m} origin={},{} size={}x{}\n",
            self.region.origin.0, self.region.origin.1, self.region.width, self.region.height
        );
        for j in (0..self.region.height).rev() {
            let row = &self.values[j * self.region.width..(j + 1) * self.region.width];
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(if digits { "" } else { " " }));
            out.push('\n');
        }
        out
    }

    /// Parses the `%grid` text format.
    pub fn parse_grid(text: &str) -> Result<Window> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Grid("empty input".into()))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("%grid") {
            return Err(Error::Grid(format!("expected a %grid header, got {header:?}")));
        }
        let (mut modulus, mut origin, mut size) = (None, None, None);
        for field in fields {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Grid(format!("malformed header field {field:?}")))?;
            match key {
                "mod" => modulus = Some(parse_num::<u64>(value)?),
                "origin" => origin = Some(parse_pair(value, ',')?),
                "size" => {
                    let (w, h): (i64, i64) = parse_pair(value, 'x')?;
                    if w < 1 || h < 1 {
                        return Err(Error::Grid(format!("bad size {value}")));
                    }
                    size = Some((w as usize, h as usize));
                }
                _ => return Err(Error::Grid(format!("unknown header field {key:?}"))),
            }
        }
        let ring = Ring::from_modulus(modulus.ok_or_else(|| Error::Grid("missing mod".into()))?)?;
        let origin = origin.unwrap_or((0, 0));
        let (w, h) = size.ok_or_else(|| Error::Grid("missing size".into()))?;
        let digits = ring.is_field() && ring.modulus() <= 10;
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(h);
        for line in lines {
            let row: Vec<i64> = if digits {
                line.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as i64)
                            .ok_or_else(|| Error::Grid(format!("bad symbol {c:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                line.split_whitespace().map(parse_num).collect::<Result<_>>()?
            };
            if row.len() != w {
                return Err(Error::Grid(format!(
                    "row {} has {} cells, expected {w}",
                    rows.len(),
                    row.len()
                )));
            }
            rows.push(row);
        }
        if rows.len() != h {
            return Err(Error::Grid(format!("expected {h} rows, got {}", rows.len())));
        }
        let values = rows.into_iter().rev().flatten().collect();
        Window::new(ring, Region::new(origin, w, h), values)
    }
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Grid(format!("not a number: {s:?}")))
}

fn parse_pair(s: &str, sep: char) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| Error::Grid(format!("expected a{sep}b, got {s:?}")))?;
    Ok((parse_num(a)?, parse_num(b)?))
}

impl fmt::Debug for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid_text())
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid_text())
    }
}

/// Evaluates `sum_u f_u c_(n-u)` into a reducer, one output cell at a time.
fn convolve(
    f: &LaurentPoly,
    ring: Ring,
    region: Region,
    value: impl Fn(Point) -> i64,
) -> Result<Window> {
    let terms = f.small_terms()?;
    let values = match ring.prime() {
        Some(p) => {
            let p = p as i128;
            let terms: Vec<(Point, i128)> = terms.into_iter().map(|(e, c)| (e, c.rem_euclid(p))).collect();
            region
                .cells()
                .map(|(x, y)| {
                    let mut acc: i128 = 0;
                    for &((i, j), c) in &terms {
                        acc += c * value((x - i, y - j)) as i128;
                    }
                    acc.rem_euclid(p) as i64
                })
                .collect::<Vec<_>>()
        }
        None => region
            .cells()
            .map(|(x, y)| {
                let mut acc: i128 = 0;
                for &((i, j), c) in &terms {
                    let term = c
                        .checked_mul(value((x - i, y - j)) as i128)
                        .ok_or(Error::Overflow)?;
                    acc = acc.checked_add(term).ok_or(Error::Overflow)?;
                }
                i64::try_from(acc).map_err(|_| Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Window::new(ring, region, values)
}

/// The window of `f * c` on the largest sub-rectangle where every term only
/// reads cells of `win`, with `(f c)_n = sum_u f_u c_(n-u)`.
///
/// Multiplication by `X^i Y^j` is translation by `(i, j)`.
pub fn apply_poly(f: &LaurentPoly, win: &Window) -> Result<Window> {
    f.ring().require_same(win.ring)?;
    let Some((lo, hi)) = f.exponent_bounds() else {
        return Window::constant(win.ring, win.region, 0);
    };
    let span = ((hi.0 - lo.0) as usize, (hi.1 - lo.1) as usize);
    if span.0 >= win.width() || span.1 >= win.height() {
        return Err(Error::RegionTooSmall(format!(
            "{} cannot be applied to a {}x{} window",
            f,
            win.width(),
            win.height()
        )));
    }
    let out = Region::new(
        (win.origin().0 + hi.0, win.origin().1 + hi.1),
        win.width() - span.0,
        win.height() - span.1,
    );
    convolve(f, win.ring, out, |q| win.at(q))
}

/// `f * c` for the torus configuration with fundamental domain `grid`,
/// on the same fundamental domain.
pub fn apply_poly_torus(f: &LaurentPoly, grid: &Window) -> Result<Window> {
    f.ring().require_same(grid.ring)?;
    convolve(f, grid.ring, grid.region, |q| grid.wrapped(q))
}

/// A translation vector under which a window agrees with itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodEvidence {
    pub vector: Point,
    /// Number of cells where the window and its translate were compared.
    pub overlap: usize,
}

/// All `t` with `0 < max(|t_x|, |t_y|) <= bound` such that `c_n = c_(n-t)`
/// wherever both cells lie in `win`. Vectors without overlap are skipped.
///
/// This is evidence on a finite window, not a proof of global periodicity.
pub fn detect_periods(win: &Window, bound: usize) -> Vec<PeriodEvidence> {
    let (w, h) = (win.width() as i64, win.height() as i64);
    let b = bound as i64;
    let mut out = Vec::new();
    for tx in -b..=b {
        for ty in -b..=b {
            if (tx, ty) <= (0, 0) {
                continue;
            }
            if tx.abs() >= w || ty.abs() >= h {
                continue;
            }
            let xs = tx.max(0)..w + tx.min(0);
            let ys = ty.max(0)..h + ty.min(0);
            let agrees = ys.clone().all(|j| {
                let row = (j * w) as usize;
                let shifted = ((j - ty) * w) as usize;
                xs.clone()
                    .all(|i| win.values[row + i as usize] == win.values[shifted + (i - tx) as usize])
            });
            if agrees {
                let overlap = ((w - tx.abs()) * (h - ty.abs())) as usize;
                out.push(PeriodEvidence { vector: (tx, ty), overlap });
                out.push(PeriodEvidence { vector: (-tx, -ty), overlap });
            }
        }
    }
    out.sort_by_key(|e| e.vector);
    out
}
