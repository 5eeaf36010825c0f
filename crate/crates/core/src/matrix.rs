//! Dense matrices of arbitrary-precision integers and their exact rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// The matrix restricted to the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> IntegerMatrix {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            entries.extend(cols.iter().map(|&j| self.get(i, j).clone()));
        }
        IntegerMatrix {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    /// The first `rows` rows.
    pub fn take_rows(&self, rows: usize) -> IntegerMatrix {
        let rows = rows.min(self.rows);
        IntegerMatrix {
            rows,
            cols: self.cols,
            entries: self.entries[..rows * self.cols].to_vec(),
        }
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// `self * v`
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        self.row_iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn to_row_vecs(&self) -> Vec<Vec<BigInt>> {
        self.row_iter().map(<[BigInt]>::to_vec).collect()
    }
}

/// Rank over the rationals by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact and no fractions appear.
pub fn exact_rank(m: &IntegerMatrix) -> usize {
    let mut a = m.to_row_vecs();
    let (rows, cols) = (m.rows(), m.cols());
    let mut previous = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let num = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                let (q, r) = num.div_rem(&previous);
                debug_assert!(r.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
            row[col] = BigInt::zero();
        }
        previous = pivot_row[col].clone();
        rank += 1;
    }
    rank
}

/// Mersenne prime `2^61 - 1`.
pub const RANK_PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank over `Z/pZ` for a prime `p`. A lower bound for the rational rank,
/// equal to it unless `p` divides every maximal non-zero minor.
pub fn rank_mod_prime(m: &IntegerMatrix, p: u64) -> usize {
    let big_p = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = m
        .row_iter()
        .map(|r| {
            r.iter()
                .map(|x| x.mod_floor(&big_p).to_u64().expect("reduced below p"))
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = pow_mod(a[rank][col], p - 2, p);
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let f = mul_mod(row[col], inv, p);
            for j in col..cols {
                row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Largest absolute entry; handy for diagnosing growth.
pub fn max_abs_entry(m: &IntegerMatrix) -> BigInt {
    m.entries.iter().map(Signed::abs).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn small_ranks() {
        assert_eq!(exact_rank(&IntegerMatrix::identity(3)), 3);
        assert_eq!(exact_rank(&IntegerMatrix::zeros(4, 5)), 0);
        assert_eq!(exact_rank(&IntegerMatrix::zeros(0, 0)), 0);
        assert_eq!(exact_rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(exact_rank(&m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
        assert_eq!(exact_rank(&m(&[&[0, 0, 3], &[0, 0, 0], &[0, 5, 1]])), 2);
        // det = -2: full rank over Q, rank 1 mod 2.
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(exact_rank(&a), 2);
        assert_eq!(rank_mod_prime(&a, 2), 1);
        assert_eq!(rank_mod_prime(&a, RANK_PRIME), 2);
    }

    #[test]
    fn wide_and_tall() {
        let tall = m(&[&[1, 0], &[0, 1], &[1, 1], &[2, 3]]);
        assert_eq!(exact_rank(&tall), 2);
        assert_eq!(exact_rank(&tall.transpose()), 2);
        let vandermonde = m(&[&[1, 1, 1, 1], &[1, 2, 4, 8], &[1, 3, 9, 27], &[1, 4, 16, 64]]);
        assert_eq!(exact_rank(&vandermonde), 4);
        assert_eq!(max_abs_entry(&vandermonde), BigInt::from(64));
    }

    #[test]
    fn helpers() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.select_columns(&[2, 0]), m(&[&[3, 1], &[6, 4]]));
        assert_eq!(a.take_rows(1), m(&[&[1, 2, 3]]));
        assert_eq!(a.column(1), vec![BigInt::from(2), BigInt::from(5)]);
        let v: Vec<BigInt> = [1, 0, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(a.mul_vec(&v), vec![BigInt::from(-2), BigInt::from(-2)]);
    }

    /// Rank as the size of the largest non-vanishing minor, by brute force.
    fn minor_rank(a: &[Vec<i64>]) -> usize {
        fn det(rows: &[Vec<i64>], cols: &[usize]) -> i128 {
            if rows.is_empty() {
                return 1;
            }
            let mut total = 0i128;
            for (k, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                total += sign * rows[0][c] as i128 * det(&rows[1..], &rest);
            }
            total
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            (0..n)
                .flat_map(|last| {
                    subsets(last, k - 1).into_iter().map(move |mut s| {
                        s.push(last);
                        s
                    })
                })
                .collect()
        }
        let (r, c) = (a.len(), a.first().map_or(0, Vec::len));
        (1..=r.min(c))
            .rev()
            .find(|&k| {
                subsets(r, k).iter().any(|rs| {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&i| a[i].clone()).collect();
                    subsets(c, k).iter().any(|cs| det(&sub, cs) != 0)
                })
            })
            .unwrap_or(0)
    }

    proptest! {
        #[test]
        fn bareiss_matches_minors_and_modular(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-3i64..=3, 25),
        ) {
            let a: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * 5..i * 5 + cols].to_vec()).collect();
            let mat = IntegerMatrix::from_rows(&a);
            let r = exact_rank(&mat);
            prop_assert_eq!(r, minor_rank(&a));
            prop_assert_eq!(r, rank_mod_prime(&mat, RANK_PRIME));
            prop_assert_eq!(r, exact_rank(&mat.transpose()));
        }
    }
}
