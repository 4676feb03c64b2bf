//! Dense square matrices over exact rationals.

use std::fmt;
use std::ops::Mul;

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i128>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zero(n: usize) -> Matrix {
        Matrix {
            n,
            data: vec![Q::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn diagonal(values: &[Q]) -> Matrix {
        let mut m = Matrix::zero(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, *v);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn scale(&self, c: Q) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// `exp(N)` for nilpotent `N`.
    pub fn exp_nilpotent(&self) -> Matrix {
        let mut acc = Matrix::identity(self.n);
        let mut term = Matrix::identity(self.n);
        for k in 1..=self.n {
            term = (&term * self).scale(Q::new(1, k as i128));
            acc = acc.add(&term);
        }
        acc
    }

    /// Inverse of a diagonal matrix with nonzero diagonal.
    pub fn diagonal_inverse(&self) -> Matrix {
        let mut m = Matrix::zero(self.n);
        for i in 0..self.n {
            m.set(i, i, self.get(i, i).recip());
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_alternating(&self) -> bool {
        *self == self.transpose().scale(-Q::one()) && (0..self.n).all(|i| self.get(i, i).is_zero())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[Matrix]) -> Matrix {
        let n = blocks.iter().map(Matrix::size).sum();
        let mut m = Matrix::zero(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.n;
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let n = self.n * other.n;
        let mut m = Matrix::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..other.n {
                    for l in 0..other.n {
                        m.set(
                            i * other.n + k,
                            j * other.n + l,
                            self.get(i, j) * other.get(k, l),
                        );
                    }
                }
            }
        }
        m
    }

    pub fn rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| crate::num::format_ratio(&self.get(i, j).into_i64()))
                    .collect()
            })
            .collect()
    }
}

trait IntoI64 {
    fn into_i64(self) -> Ratio<i64>;
}

impl IntoI64 for Q {
    fn into_i64(self) -> Ratio<i64> {
        Ratio::new(*self.numer() as i64, *self.denom() as i64)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = m.get(i, j) + a * rhs.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_and_powers() {
        let mut n = Matrix::zero(2);
        n.set(0, 1, Q::one());
        let u = n.exp_nilpotent();
        assert_eq!(u.pow(4).get(0, 1), Q::from_integer(4));
        let s = Matrix::diagonal(&[Q::from_integer(2), Q::new(1, 2)]);
        assert_eq!(&(&s * &u) * &s.diagonal_inverse(), u.pow(4));
    }

    #[test]
    fn kron_sizes() {
        let a = Matrix::identity(2);
        let b = Matrix::identity(3);
        assert_eq!(a.kron(&b), Matrix::identity(6));
    }
}
