//! Dense matrices over a prime field `F_p`.

use std::fmt;

use rand::Rng;

/// `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse by Fermat; `a` must be nonzero.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverting zero mod {p}");
    pow_mod(a, p - 2, p)
}

#[derive(Clone, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        PrimeFieldMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Entries are reduced mod `p`.
    pub fn from_rows(rows: &[Vec<u64>], p: u64) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols, p);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x % p);
            }
        }
        m
    }

    pub fn random(rows: usize, cols: usize, p: u64, rng: &mut impl Rng) -> Self {
        let mut m = Self::zeros(rows, cols, p);
        for x in &mut m.data {
            *x = rng.gen_range(0..p);
        }
        m
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols, self.p);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(r0 + i, c0 + j));
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j));
            }
        }
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len(), self.p);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn vstack(blocks: &[Self]) -> Self {
        let p = blocks[0].p;
        let cols = blocks[0].cols;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(rows, cols, p);
        let mut r = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            m.set_block(r, 0, b);
            r += b.rows;
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.p;
        let mut m = Self::zeros(self.rows, other.cols, p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = add_mod(m.get(i, j), mul_mod(a, other.get(k, j), p), p);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (x, &y) in m.data.iter_mut().zip(&other.data) {
            *x = add_mod(*x, y, self.p);
        }
        m
    }

    /// Row echelon form in place; returns the rank and the determinant
    /// factor accumulated from pivots and swaps.
    fn eliminate(&mut self) -> (usize, u64) {
        let p = self.p;
        let mut rank = 0;
        let mut det = 1u64;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| self.get(r, c) != 0) else {
                det = 0;
                continue;
            };
            if pivot != rank {
                for j in 0..self.cols {
                    self.data.swap(pivot * self.cols + j, rank * self.cols + j);
                }
                det = sub_mod(0, det, p);
            }
            let pv = self.get(rank, c);
            det = mul_mod(det, pv, p);
            let inv = inv_mod(pv, p);
            for r in rank + 1..self.rows {
                let f = mul_mod(self.get(r, c), inv, p);
                if f == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = sub_mod(self.get(r, j), mul_mod(f, self.get(rank, j), p), p);
                    self.set(r, j, v);
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    pub fn det(&self) -> u64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (rank, det) = self.clone().eliminate();
        if rank < self.rows {
            0
        } else {
            det
        }
    }

    /// Gauss–Jordan inverse, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let p = self.p;
        let mut aug = Self::zeros(n, 2 * n, p);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Self::identity(n, p));
        for c in 0..n {
            let pivot = (c..n).find(|&r| aug.get(r, c) != 0)?;
            for j in 0..2 * n {
                aug.data.swap(pivot * 2 * n + j, c * 2 * n + j);
            }
            let inv = inv_mod(aug.get(c, c), p);
            for j in 0..2 * n {
                aug.set(c, j, mul_mod(aug.get(c, j), inv, p));
            }
            for r in 0..n {
                let f = aug.get(r, c);
                if r == c || f == 0 {
                    continue;
                }
                for j in 0..2 * n {
                    let v = sub_mod(aug.get(r, j), mul_mod(f, aug.get(c, j), p), p);
                    aug.set(r, j, v);
                }
            }
        }
        Some(aug.block(0, n, n, n))
    }

    /// Adjugate of a square matrix via cofactors.
    pub fn adjugate(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut adj = Self::zeros(n, n, self.p);
        if n == 1 {
            adj.set(0, 0, 1);
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = self.select(&rows, &cols).det();
                let cof = if (i + j) % 2 == 0 {
                    minor
                } else {
                    sub_mod(0, minor, self.p)
                };
                adj.set(j, i, cof);
            }
        }
        adj
    }
}

impl fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over F_{}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
