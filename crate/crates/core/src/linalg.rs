//! Exact matrix rank over `Q` and `GF(p)`.
//!
//! Over the rationals we run fraction-free (Bareiss) elimination on integer
//! matrices. Every intermediate entry is a minor of the input, so an `i128`
//! pass succeeds for all matrices of the sizes met in practice; on overflow
//! the elimination restarts with arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::field::FieldSpec;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `self * other`, with `i64` arithmetic.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Rationals => rank_rational(self),
            FieldSpec::PrimeField(p) => rank_mod_p(self, p),
        }
    }
}

pub fn rank_rational(m: &IntMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let small: Vec<i128> = m.data.iter().map(|&x| x as i128).collect();
    if let Some(r) = bareiss_i128(small, m.rows, m.cols) {
        return r;
    }
    let big: Vec<BigInt> = m.data.iter().map(|&x| BigInt::from(x)).collect();
    bareiss_big(big, m.rows, m.cols)
}

fn bareiss_i128(mut a: Vec<i128>, rows: usize, cols: usize) -> Option<usize> {
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r * cols + c] != 0) else { continue };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c];
        for i in rank + 1..rows {
            let lead = a[i * cols + c];
            for j in c + 1..cols {
                let t = pivot.checked_mul(a[i * cols + j])?.checked_sub(lead.checked_mul(a[rank * cols + j])?)?;
                debug_assert_eq!(t % prev, 0);
                a[i * cols + j] = t / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else { continue };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let t = &pivot * &a[i * cols + j] - &lead * &a[rank * cols + j];
                a[i * cols + j] = t / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let pi = p as i64;
    let mut a: Vec<u64> = m.data.iter().map(|&x| x.rem_euclid(pi) as u64).collect();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else { continue };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = pow_mod(a[rank * cols + c], p - 2, p);
        for j in c..cols {
            a[rank * cols + j] = a[rank * cols + j] * inv % p;
        }
        for i in rank + 1..rows {
            let f = a[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = f * a[rank * cols + j] % p;
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
