use num_integer::Integer;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::Point;

/// A 2x2 integer matrix with determinant `±1`, acting on exponent vectors.
///
/// The induced map `X^e -> X^(M e)` is a ring automorphism of the Laurent
/// polynomial ring, so it preserves factorizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unimodular {
    rows: [[i64; 2]; 2],
}

impl Unimodular {
    pub const IDENTITY: Unimodular = Unimodular {
        rows: [[1, 0], [0, 1]],
    };

    /// The matrix `[[a, b], [c, d]]`.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if (a * d - b * c).abs() != 1 {
            return Err(Error::NotUnimodular(a, b, c, d));
        }
        Ok(Unimodular {
            rows: [[a, b], [c, d]],
        })
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.rows;
        a * d - b * c
    }

    pub fn apply(&self, (x, y): Point) -> Point {
        let [[a, b], [c, d]] = self.rows;
        (a * x + b * y, c * x + d * y)
    }

    pub fn inverse(&self) -> Self {
        let [[a, b], [c, d]] = self.rows;
        let det = self.det();
        Unimodular {
            rows: [[d * det, -b * det], [-c * det, a * det]],
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        let [[a, b], [c, d]] = self.rows;
        let [[e, f], [g, h]] = other.rows;
        Unimodular {
            rows: [
                [a * e + b * g, a * f + b * h],
                [c * e + d * g, c * f + d * h],
            ],
        }
    }

    /// A matrix with determinant 1 sending the primitive vector `(a, b)` to `(1, 0)`.
    pub fn sending_to_x_axis((a, b): Point) -> Result<Self> {
        let eg = a.extended_gcd(&b);
        if eg.gcd.abs() != 1 {
            return Err(Error::Precondition(format!(
                "({a}, {b}) is not a primitive vector"
            )));
        }
        // x a + y b = ±1; fix the sign so the image is exactly (1, 0).
        let (x, y) = (eg.x * eg.gcd, eg.y * eg.gcd);
        Unimodular::new(x, y, -b, a)
    }
}

impl LaurentPoly {
    /// Replaces every exponent `e` by `M e`.
    pub fn unimodular_change(&self, m: &Unimodular) -> LaurentPoly {
        self.map_exponents(|e| m.apply(e))
    }
}
