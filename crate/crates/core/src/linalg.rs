//! Dense linear algebra over GF(p).
//!
//! Row-major matrices with Gaussian elimination; rank and kernel dimension
//! are all the engine needs. Slice dimensions at desk scale stay small, so
//! no sparse machinery.

use crate::field::PrimeField;

#[derive(Debug, Clone)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[u64], f: &PrimeField) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = f.characteristic();
        let mut out = vec![0u64; self.rows];
        for r in 0..self.rows {
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            let mut acc: u64 = 0;
            for (a, b) in row.iter().zip(v) {
                acc = (acc + a * b) % p;
            }
            out[r] = acc;
        }
        out
    }

    pub fn mul_mat(&self, other: &Mat, f: &PrimeField) -> Mat {
        assert_eq!(self.cols, other.rows);
        let p = f.characteristic();
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) + a * other.get(k, c)) % p;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank by in-place forward elimination (consumes the copy).
    pub fn rank(mut self, f: &PrimeField) -> usize {
        let p = f.characteristic();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let pivot = (rank..self.rows).find(|&r| self.get(r, col) != 0);
            let Some(pr) = pivot else { continue };
            if pr != rank {
                for c in 0..self.cols {
                    let a = self.get(rank, c);
                    let b = self.get(pr, c);
                    self.set(rank, c, b);
                    self.set(pr, c, a);
                }
            }
            let inv = f.inv(self.get(rank, col));
            for r in rank + 1..self.rows {
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                let scale = factor * inv % p;
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), self.get(rank, c) * scale % p);
                    self.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn kernel_dim(self, f: &PrimeField) -> usize {
        let cols = self.cols;
        cols - self.rank(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_singular() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(Mat::identity(4).rank(&f), 4);
        let mut m = Mat::zeros(3, 3);
        // rows (1,2,3), (2,4,6), (0,0,1): rank 2
        for (r, row) in [[1, 2, 3], [2, 4, 6], [0, 0, 1]].iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        assert_eq!(m.clone().rank(&f), 2);
        assert_eq!(m.kernel_dim(&f), 1);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // (1 1; 1 -1) is singular exactly in characteristic 2
        let m = {
            let mut m = Mat::zeros(2, 2);
            m.set(0, 0, 1);
            m.set(0, 1, 1);
            m.set(1, 0, 1);
            m.set(1, 1, 1);
            m
        };
        let f2 = PrimeField::new(2).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let mut m3 = m.clone();
        m3.set(1, 1, 2); // -1 mod 3
        assert_eq!(m.rank(&f2), 1);
        assert_eq!(m3.rank(&f3), 2);
    }

    #[test]
    fn mul_vec_works() {
        let f = PrimeField::new(5).unwrap();
        let mut m = Mat::zeros(2, 3);
        m.set(0, 0, 1);
        m.set(0, 2, 2);
        m.set(1, 1, 3);
        assert_eq!(m.mul_vec(&[1, 1, 1], &f), vec![3, 3]);
    }
}
