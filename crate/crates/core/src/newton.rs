//! Support geometry: convex hulls, outer edges, line-factor directions and
//! the sublattice index of a polynomial's support.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::Point;

/// A primitive nonzero integer vector with canonical sign
/// (`a > 0`, or `a == 0` and `b > 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    a: i64,
    b: i64,
}

impl Direction {
    pub const HORIZONTAL: Direction = Direction { a: 1, b: 0 };
    pub const VERTICAL: Direction = Direction { a: 0, b: 1 };

    /// The canonical direction of the line through `0` and `(a, b)`.
    pub fn new(a: i64, b: i64) -> Option<Direction> {
        let (a, b) = primitive((a, b))?;
        Some(if a > 0 || (a == 0 && b > 0) {
            Direction { a, b }
        } else {
            Direction { a: -a, b: -b }
        })
    }

    pub fn vector(self) -> Point {
        (self.a, self.b)
    }

    /// A vector perpendicular to this direction.
    pub fn normal(self) -> Point {
        (-self.b, self.a)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Divides out the gcd of the components; `None` for the zero vector.
pub fn primitive((a, b): Point) -> Option<Point> {
    let g = a.gcd(&b);
    (g != 0).then(|| (a / g, b / g))
}

/// A hull edge from `start` to `end` with its primitive outward normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub start: Point,
    pub end: Point,
    pub normal: Point,
}

/// Convex hull of a polynomial's support.
///
/// Vertices run counter-clockwise from the lexicographically smallest point.
/// A monomial gives a single vertex and no edges; a collinear support gives
/// two vertices and the segment reported twice, once per outward normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<Point>,
    edges: Vec<Edge>,
}

impl NewtonPolygon {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Whether `q` lies inside or on the boundary.
    pub fn contains(&self, q: Point) -> bool {
        match self.vertices.len() {
            1 => self.vertices[0] == q,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                cross(a, b, q) == 0
                    && (a.0.min(b.0)..=a.0.max(b.0)).contains(&q.0)
                    && (a.1.min(b.1)..=a.1.max(b.1)).contains(&q.1)
            }
            _ => self.edges.iter().all(|e| cross(e.start, e.end, q) >= 0),
        }
    }
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

/// Monotone-chain hull of a sorted, deduplicated point list. Collinear
/// boundary points are dropped, so only extreme points remain.
fn hull(points: &[Point]) -> Vec<Point> {
    if points.len() <= 2 {
        return points.to_vec();
    }
    let mut lower: Vec<Point> = Vec::new();
    for &q in points {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], q) <= 0 {
            lower.pop();
        }
        lower.push(q);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &q in points.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], q) <= 0 {
            upper.pop();
        }
        upper.push(q);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn outward_normal(start: Point, end: Point) -> Point {
    // For a counter-clockwise traversal the interior is on the left.
    primitive((end.1 - start.1, start.0 - end.0)).expect("distinct hull vertices")
}

pub fn newton_polygon(f: &LaurentPoly) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vertices = hull(&f.support());
    let edges = match vertices.len() {
        1 => Vec::new(),
        2 => {
            let (a, b) = (vertices[0], vertices[1]);
            vec![
                Edge { start: a, end: b, normal: outward_normal(a, b) },
                Edge { start: b, end: a, normal: outward_normal(b, a) },
            ]
        }
        n => (0..n)
            .map(|k| {
                let (a, b) = (vertices[k], vertices[(k + 1) % n]);
                Edge { start: a, end: b, normal: outward_normal(a, b) }
            })
            .collect(),
    };
    Ok(NewtonPolygon { vertices, edges })
}

/// Directions in which `f` could have a line-polynomial factor.
///
/// A line factor in direction `u` forces outer edges perpendicular to both
/// `v` and `-v` for `v ⊥ u`, i.e. a pair of parallel hull edges along `u`.
pub fn candidate_line_directions(f: &LaurentPoly) -> Result<BTreeSet<Direction>> {
    let poly = newton_polygon(f)?;
    let mut out = BTreeSet::new();
    match poly.vertices.len() {
        1 => {}
        2 => {
            let (a, b) = (poly.vertices[0], poly.vertices[1]);
            out.extend(Direction::new(b.0 - a.0, b.1 - a.1));
        }
        _ => {
            let normals: BTreeSet<Point> = poly.edges.iter().map(|e| e.normal).collect();
            for e in &poly.edges {
                if normals.contains(&(-e.normal.0, -e.normal.1)) {
                    out.extend(Direction::new(e.end.0 - e.start.0, e.end.1 - e.start.1));
                }
            }
        }
    }
    Ok(out)
}

/// Index in `Z^2` of a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SublatticeIndex {
    Finite(u64),
    /// The lattice has rank below 2.
    Infinite,
}

impl fmt::Display for SublatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SublatticeIndex::Finite(n) => write!(f, "{n}"),
            SublatticeIndex::Infinite => f.write_str("infinite"),
        }
    }
}

/// Index of the lattice spanned by the vectors, computed by incremental
/// Hermite reduction to a triangular basis.
pub fn lattice_index(vectors: &[Point]) -> SublatticeIndex {
    let mut basis: Vec<Point> = Vec::new();
    for &v in vectors {
        basis = reduce_basis(basis, v);
    }
    match basis.as_slice() {
        [a, b] => {
            let det = (a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128).unsigned_abs();
            SublatticeIndex::Finite(det as u64)
        }
        _ => SublatticeIndex::Infinite,
    }
}

/// Inserts `v` into a Hermite-style basis `[(a, b), (0, d)]` (or shorter).
fn reduce_basis(basis: Vec<Point>, v: Point) -> Vec<Point> {
    if v == (0, 0) {
        return basis;
    }
    let mut rows: Vec<Point> = basis;
    let mut v = v;
    // Eliminate the first coordinate against the row with nonzero first entry.
    if let Some(pos) = rows.iter().position(|r| r.0 != 0) {
        if v.0 != 0 {
            let r = rows[pos];
            let eg = r.0.extended_gcd(&v.0);
            let g = eg.gcd;
            let new_r = (g, eg.x * r.1 + eg.y * v.1);
            let (rq, vq) = (r.0 / g, v.0 / g);
            // (v.0/g) * r - (r.0/g) * v has zero first coordinate.
            let rest = (0, vq * r.1 - rq * v.1);
            rows[pos] = new_r;
            v = rest;
        }
    } else if v.0 != 0 {
        rows.insert(0, v);
        v = (0, 0);
    }
    if v.1 != 0 {
        if let Some(pos) = rows.iter().position(|r| r.0 == 0) {
            let g = rows[pos].1.gcd(&v.1);
            rows[pos] = (0, g);
        } else {
            rows.push(v);
        }
    }
    rows
}

/// Index of the lattice generated by differences of support points.
pub fn sublattice_index(f: &LaurentPoly) -> Result<SublatticeIndex> {
    let support = f.support();
    let &base = support.first().ok_or(Error::ZeroPolynomial)?;
    let diffs: Vec<Point> = support
        .iter()
        .skip(1)
        .map(|&(i, j)| (i - base.0, j - base.1))
        .collect();
    Ok(lattice_index(&diffs))
}
