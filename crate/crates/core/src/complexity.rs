//! Finite shapes, pattern counting, and annihilators read off pattern kernels.
//!
//! A configuration of low complexity with respect to `D` has few enough
//! `D`-patterns that the pattern matrix has a nontrivial kernel. A kernel
//! vector `a` gives `sum_u a_u c_(t+u) = 0`, i.e. the polynomial
//! `f = sum_u a_u X^(-u_1) Y^(-u_2)` annihilates `c` on every sampled `t`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::LaurentPoly;
use crate::config::{check_annihilates, AnnihilatorCertificate, ConfigSource, Region};
use crate::error::{Error, Result};
use crate::linalg::{nullspace_integer, nullspace_mod_p};
use crate::ring::Ring;
use crate::Point;

/// A nonempty finite subset of `Z^2`, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    cells: Vec<Point>,
}

impl Shape {
    pub fn new(cells: impl IntoIterator<Item = Point>) -> Result<Self> {
        let cells: BTreeSet<Point> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::Precondition("a shape needs at least one cell".into()));
        }
        Ok(Shape { cells: cells.into_iter().collect() })
    }

    /// `{0, step, ..., (n-1) step}^2`.
    pub fn scattered_square(n: usize, step: usize) -> Result<Self> {
        if n == 0 || step == 0 {
            return Err(Error::Precondition("scattered square needs n, step >= 1".into()));
        }
        let coords: Vec<i64> = (0..n as i64).map(|k| k * step as i64).collect();
        Shape::new(coords.iter().flat_map(|&i| coords.iter().map(move |&j| (i, j))))
    }

    /// The `w x h` block `[0, w) x [0, h)`.
    pub fn block(w: usize, h: usize) -> Result<Self> {
        Shape::new((0..w as i64).flat_map(|i| (0..h as i64).map(move |j| (i, j))))
    }

    pub fn cells(&self) -> &[Point] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Componentwise minimum and maximum.
    pub fn bounds(&self) -> (Point, Point) {
        let xs = self.cells.iter().map(|c| c.0);
        let ys = self.cells.iter().map(|c| c.1);
        (
            (xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            (xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    /// Parses the `%shape` format: a header line, then one `i j` per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        if lines.next() != Some("%shape") {
            return Err(Error::Grid("expected a %shape header".into()));
        }
        let cells = lines
            .map(|line| {
                let nums: Vec<i64> = line
                    .split_whitespace()
                    .map(|s| s.parse().map_err(|_| Error::Grid(format!("bad shape line {line:?}"))))
                    .collect::<Result<_>>()?;
                match nums[..] {
                    [i, j] => Ok((i, j)),
                    _ => Err(Error::Grid(format!("bad shape line {line:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Shape::new(cells)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("%shape\n");
        for (i, j) in &self.cells {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

/// The distinct `D`-patterns `(c_(t+u))_(u in D)` over all `t` in a region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    pub shape: Shape,
    pub ring: Ring,
    pub region: Region,
    pub patterns: BTreeSet<Vec<i64>>,
    /// True when the region covers a full fundamental domain of a torus
    /// source, so the set is all of `P(c, D)`; otherwise a lower bound.
    pub exact: bool,
}

impl PatternSet {
    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

/// Collects the `D`-patterns at every translate `t` in `region`.
pub fn enumerate_patterns(src: &ConfigSource, shape: &Shape, region: Region) -> Result<PatternSet> {
    if region.is_empty() {
        return Err(Error::RegionTooSmall("empty sample region".into()));
    }
    let mut patterns = BTreeSet::new();
    let exact;
    if let Some(grid) = src.torus_view() {
        exact = region.width >= grid.width() && region.height >= grid.height();
        for (x, y) in region.cells() {
            patterns.insert(shape.cells().iter().map(|&(i, j)| grid.wrapped((x + i, y + j))).collect());
        }
    } else {
        exact = false;
        let (lo, hi) = shape.bounds();
        let win = src.generate_window(region.expand(lo, hi))?;
        for (x, y) in region.cells() {
            patterns.insert(shape.cells().iter().map(|&(i, j)| win.at((x + i, y + j))).collect());
        }
    }
    Ok(PatternSet { shape: shape.clone(), ring: src.ring(), region, patterns, exact })
}

/// `|P(c, D)|` on a region, with the low-complexity test `|P| <= |D|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexityCount {
    pub count: usize,
    pub shape_size: usize,
    pub is_low: bool,
    pub exact: bool,
}

impl fmt::Display for ComplexityCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} patterns for |D| = {}: {} complexity{}",
            self.count,
            self.shape_size,
            if self.is_low { "low" } else { "high" },
            if self.exact { " (exact)" } else { " (lower bound from the sampled region)" }
        )
    }
}

pub fn complexity_count(src: &ConfigSource, shape: &Shape, region: Region) -> Result<ComplexityCount> {
    let set = enumerate_patterns(src, shape, region)?;
    Ok(ComplexityCount {
        count: set.len(),
        shape_size: shape.len(),
        is_low: set.len() <= shape.len(),
        exact: set.exact,
    })
}

/// How a kernel annihilator was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelRoute {
    /// `sum_u a_u c_(t+u) = 0`.
    Homogeneous,
    /// `sum_u a_u c_(t+u) = b`, turned into an annihilator by the factor `X - 1`.
    Affine,
}

impl fmt::Display for KernelRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelRoute::Homogeneous => "homogeneous kernel",
            KernelRoute::Affine => "affine kernel, times (X - 1)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelAnnihilator {
    /// The kernel vector indexed by the cells of the shape.
    pub vector: Vec<BigInt>,
    pub route: KernelRoute,
    pub certificate: AnnihilatorCertificate,
}

impl KernelAnnihilator {
    pub fn polynomial(&self) -> &LaurentPoly {
        &self.certificate.polynomial
    }
}

/// The first kernel annihilator, if any; see [`kernel_annihilators`].
pub fn annihilator_from_kernel(
    src: &ConfigSource,
    shape: &Shape,
    region: Region,
    ring: Ring,
) -> Result<Option<KernelAnnihilator>> {
    Ok(kernel_annihilators(src, shape, region, ring)?.into_iter().next())
}

/// One annihilator per kernel basis vector of the pattern matrix over
/// `ring`, each re-verified with [`check_annihilates`].
///
/// Asking for integers on a prime-field source works on its integer lift.
/// When the homogeneous kernel is trivial the affine variant is tried; empty
/// output means neither has a nonzero solution.
pub fn kernel_annihilators(
    src: &ConfigSource,
    shape: &Shape,
    region: Region,
    ring: Ring,
) -> Result<Vec<KernelAnnihilator>> {
    let lifted;
    let src = if ring != src.ring() && ring == Ring::Z && src.ring().is_field() {
        lifted = ConfigSource::zlift(src.clone())?;
        &lifted
    } else {
        ring.require_same(src.ring())?;
        src
    };
    let set = enumerate_patterns(src, shape, region)?;
    for route in [KernelRoute::Homogeneous, KernelRoute::Affine] {
        let affine = route == KernelRoute::Affine;
        let rows: Vec<Vec<i64>> = set
            .patterns
            .iter()
            .map(|p| {
                let mut row = p.clone();
                if affine {
                    row.push(1);
                }
                row
            })
            .collect();
        let basis = kernel(&rows, shape.len() + affine as usize, ring);
        if basis.is_empty() {
            continue;
        }
        let (lo, hi) = shape.bounds();
        let lo = if affine { (lo.0 - 1, lo.1) } else { lo };
        let check_region = region.expand(lo, hi);
        let mut out = Vec::new();
        for mut vector in basis {
            if affine {
                vector.pop();
            }
            let mut f = LaurentPoly::from_terms(
                ring,
                shape.cells().iter().zip(&vector).map(|(&(i, j), a)| ((-i, -j), a.clone())),
            );
            if affine {
                let x_minus_1 = LaurentPoly::from_terms(ring, [((1, 0), 1), ((0, 0), -1)]);
                f = &x_minus_1 * &f;
            }
            let certificate = check_annihilates(&f, src, check_region)?;
            out.push(KernelAnnihilator { vector, route, certificate });
        }
        return Ok(out);
    }
    Ok(Vec::new())
}

fn kernel(rows: &[Vec<i64>], ncols: usize, ring: Ring) -> Vec<Vec<BigInt>> {
    match ring.prime() {
        Some(p) => {
            let rows: Vec<Vec<u32>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u32).collect())
                .collect();
            nullspace_mod_p(&rows, ncols, p)
                .into_iter()
                .map(|v| v.into_iter().map(BigInt::from).collect())
                .collect()
        }
        None => {
            let rows: Vec<Vec<BigInt>> =
                rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            nullspace_integer(&rows, ncols)
        }
    }
}
