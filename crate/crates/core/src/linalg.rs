//! Exact nullspaces by fraction-free row reduction over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::Scalar;

/// Reduced integer row-echelon form: rows are primitive, pivots positive,
/// and each pivot column is zero outside its pivot row.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub columns: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
    if !g.is_zero() && !g.is_one() {
        for a in row.iter_mut() {
            *a /= &g;
        }
    }
}

/// Clears denominators row by row.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
    row.iter()
        .map(|a| a.numer() * (&l / a.denom()))
        .collect()
}

pub fn row_reduce(matrix: &[Vec<Scalar>], columns: usize) -> Echelon {
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), columns);
            integer_row(r)
        })
        .filter(|r| r.iter().any(|a| !a.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..columns {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        if rows[next][col].is_negative() {
            for a in rows[next].iter_mut() {
                *a = -&*a;
            }
        }
        primitive(&mut rows[next]);
        let pivot_row = rows[next].clone();
        let p = pivot_row[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                *a = &*a * &p - &factor * b;
            }
            primitive(row);
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    Echelon {
        rows,
        pivots,
        columns,
    }
}

/// Integer basis of `{x : M x = 0}`, one vector per free column in
/// ascending column order. Each vector is primitive with a positive entry in
/// its free column.
pub fn nullspace(matrix: &[Vec<Scalar>], columns: usize) -> Vec<Vec<BigInt>> {
    let ech = row_reduce(matrix, columns);
    let free: Vec<usize> = (0..columns).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        // x_f = L, x_{pivot_r} = -row_r[f] * L / row_r[pivot_r]
        let l = ech
            .rows
            .iter()
            .zip(&ech.pivots)
            .fold(BigInt::one(), |l, (row, &p)| l.lcm(&row[p]));
        let mut v = vec![BigInt::zero(); columns];
        v[f] = l.clone();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if !row[f].is_zero() {
                v[p] = -(&row[f] * (&l / &row[p]));
            }
        }
        primitive(&mut v);
        basis.push(v);
    }
    basis
}

pub fn rank(matrix: &[Vec<Scalar>], columns: usize) -> usize {
    row_reduce(matrix, columns).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{frac, int};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&a| int(a)).collect()).collect()
    }

    fn apply(m: &[Vec<Scalar>], v: &[BigInt]) -> Vec<Scalar> {
        m.iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(Scalar::zero(), |s, (a, b)| s + a * Scalar::from_integer(b.clone()))
            })
            .collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(apply(&m, v).iter().all(Zero::is_zero));
        }
        assert_eq!(rank(&m, 3), 1);
    }

    #[test]
    fn fractional_entries() {
        let m = vec![vec![frac(1, 2), frac(-1, 3)], vec![int(3), int(-2)]];
        let ns = nullspace(&m, 2);
        assert_eq!(ns, vec![vec![BigInt::from(2), BigInt::from(3)]]);
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        assert!(nullspace(&m, 2).is_empty());
        assert_eq!(rank(&m, 2), 2);
        assert_eq!(nullspace(&[], 2).len(), 2);
    }
}
