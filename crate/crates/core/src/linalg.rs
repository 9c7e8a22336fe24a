//! Exact kernels of dense matrices over `F_p` and over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::ring::inv_mod;

/// Basis of `{x : A x = 0}` over `F_p`, one vector per free column of the
/// reduced row echelon form, in increasing free-column order.
pub fn nullspace_mod_p(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let p64 = p as u64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            r.iter().map(|&c| (c % p) as u64).collect()
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(src) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, src);
        let inv = inv_mod(m[rank][col] as u32, p) as u64;
        for c in m[rank].iter_mut() {
            *c = *c * inv % p64;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (c, &pv) in row.iter_mut().zip(&pivot_row) {
                *c = (*c + (p64 - factor) * pv) % p64;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![0u32; ncols];
        v[f] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = ((p64 - m[r][f]) % p64) as u32;
        }
        v
    })
    .collect()
}

fn primitive_row(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && g != BigInt::from(1) {
        for c in row.iter_mut() {
            *c /= &g;
        }
    }
}

/// Basis of the rational kernel of an integer matrix, each vector cleared to
/// a primitive integer vector whose first nonzero entry is positive.
///
/// Elimination is fraction-free: rows are combined by cross multiplication
/// and kept primitive, and back substitution rescales the partial solution
/// instead of introducing denominators.
pub fn nullspace_integer(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            r.clone()
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m.len() {
            break;
        }
        // Prefer the smallest pivot to keep entries short.
        let Some(src) = (rank..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| m[i][col].abs())
        else {
            continue;
        };
        m.swap(rank, src);
        let pivot_row = m[rank].clone();
        let a = pivot_row[col].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let b = row[col].clone();
            for (c, pv) in row.iter_mut().zip(&pivot_row) {
                *c = &a * &*c - &b * pv;
            }
            primitive_row(row);
        }
        pivots.push(col);
        rank += 1;
    }
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut x = vec![BigInt::zero(); ncols];
        x[f] = BigInt::from(1);
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let s: BigInt = (pc + 1..ncols).map(|j| &m[r][j] * &x[j]).sum();
            let a = &m[r][pc];
            let g = a.gcd(&s);
            let scale = a / &g;
            for v in x.iter_mut() {
                *v *= &scale;
            }
            x[pc] = -(&s / &g);
        }
        primitive_row(&mut x);
        if x.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            for v in x.iter_mut() {
                *v = -&*v;
            }
        }
        x
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect()
    }

    fn mul_int(rows: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
        rows.iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn stripes_kernel_mod_2() {
        let rows = vec![vec![0, 1, 0], vec![1, 0, 1]];
        assert_eq!(nullspace_mod_p(&rows, 3, 2), vec![vec![1, 0, 1]]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let rows = vec![vec![1, 0], vec![1, 1]];
        assert!(nullspace_mod_p(&rows, 2, 3).is_empty());
        assert!(nullspace_integer(&big(&[&[1, 0], &[1, 1]]), 2).is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate_mod_p() {
        let rows = vec![vec![1, 2, 0, 4], vec![2, 4, 1, 1], vec![3, 1, 1, 0]];
        let ker = nullspace_mod_p(&rows, 4, 5);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in &rows {
                let s: u32 = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert_eq!(s % 5, 0);
            }
        }
    }

    #[test]
    fn integer_kernel_is_primitive() {
        let rows = big(&[&[2, 4, 6, 0], &[1, 3, 0, 5], &[3, 7, 6, 5]]);
        let ker = nullspace_integer(&rows, 4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(mul_int(&rows, v).iter().all(Zero::is_zero));
            let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
            assert_eq!(g, BigInt::from(1));
            assert!(v.iter().find(|c| !c.is_zero()).unwrap().is_positive());
        }
        assert_eq!(
            nullspace_integer(&big(&[&[0, 1, 0], &[1, 0, 1]]), 3),
            big(&[&[1, 0, -1]])
        );
    }
}
