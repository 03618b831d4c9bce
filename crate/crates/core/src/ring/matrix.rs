use rand::Rng;

use super::{Ring, Sample};
use crate::error::{Error, Result};

/// A square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E> Matrix<E> {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.entries.chunks(self.n)
    }
}

/// `n x n` matrices over a base ring.
#[derive(Clone, Debug)]
pub struct MatrixRing<R: Ring> {
    n: usize,
    base: R,
}

impl<R: Ring> MatrixRing<R> {
    pub fn new(base: R, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimension must be at least 1".into(),
            ));
        }
        Ok(MatrixRing { n, base })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn from_fn(&self, mut f: impl FnMut(usize, usize) -> R::Elem) -> Matrix<R::Elem> {
        let n = self.n;
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Matrix { n, entries }
    }

    pub fn from_rows(&self, rows: Vec<Vec<R::Elem>>) -> Result<Matrix<R::Elem>> {
        if rows.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(self.n * self.n);
        for row in rows {
            if row.len() != self.n {
                return Err(Error::DimensionMismatch {
                    left: self.n,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { n: self.n, entries })
    }

    /// `c * I`.
    pub fn scalar(&self, c: R::Elem) -> Matrix<R::Elem> {
        let zero = self.base.zero();
        self.from_fn(|i, j| if i == j { c.clone() } else { zero.clone() })
    }

    fn check(&self, a: &Matrix<R::Elem>) -> Result<()> {
        if a.n != self.n || a.entries.len() != self.n * self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: a.n,
            });
        }
        Ok(())
    }

    /// Matrix product, `n^3` base multiplications.
    pub fn try_mul(&self, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
        self.check(a)?;
        self.check(b)?;
        let n = self.n;
        let base = &self.base;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = base.mul(&a.entries[i * n], &b.entries[j]);
                for k in 1..n {
                    acc = base.add(
                        &acc,
                        &base.mul(&a.entries[i * n + k], &b.entries[k * n + j]),
                    );
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { n, entries })
    }

    /// Gauss–Jordan elimination; the pivot is the first nonzero entry of the
    /// column at or below the diagonal.
    pub fn try_inv(&self, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
        self.check(a)?;
        let n = self.n;
        let base = &self.base;
        let mut m = a.entries.clone();
        let mut inv = self.scalar(base.one()).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !base.is_zero(&m[r * n + col]))
                .ok_or(Error::NotInvertible)?;
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let pinv = base.inv(&m[col * n + col])?;
            for j in 0..n {
                m[col * n + j] = base.mul(&pinv, &m[col * n + j]);
                inv[col * n + j] = base.mul(&pinv, &inv[col * n + j]);
            }
            for r in 0..n {
                if r == col || base.is_zero(&m[r * n + col]) {
                    continue;
                }
                let f = m[r * n + col].clone();
                for j in 0..n {
                    m[r * n + j] = base.sub(&m[r * n + j], &base.mul(&f, &m[col * n + j]));
                    inv[r * n + j] = base.sub(&inv[r * n + j], &base.mul(&f, &inv[col * n + j]));
                }
            }
        }
        Ok(Matrix { n, entries: inv })
    }
}

impl<R: Ring> Ring for MatrixRing<R> {
    type Elem = Matrix<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.scalar(self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        self.scalar(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let entries = a
            .entries
            .iter()
            .zip(&b.entries)
            .map(|(x, y)| self.base.add(x, y))
            .collect();
        Matrix { n: self.n, entries }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let entries = a
            .entries
            .iter()
            .zip(&b.entries)
            .map(|(x, y)| self.base.sub(x, y))
            .collect();
        Matrix { n: self.n, entries }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Matrix {
            n: self.n,
            entries: a.entries.iter().map(|x| self.base.neg(x)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match self.try_mul(a, b) {
            Ok(c) => c,
            Err(e) => panic!("matrix product: {e}"),
        }
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.try_inv(a)
    }

    fn is_commutative(&self) -> bool {
        self.n == 1 && self.base.is_commutative()
    }

    fn mul_count(&self) -> u64 {
        self.base.mul_count()
    }

    fn with_fresh_counter(&self) -> Self {
        MatrixRing {
            n: self.n,
            base: self.base.with_fresh_counter(),
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.entries.iter().all(|x| self.base.is_zero(x))
    }
}

impl<R: Sample> Sample for MatrixRing<R> {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        self.from_fn(|_, _| self.base.sample(rng))
    }
}
