//! Dense univariate polynomials `R[x]` where `x` commutes with `R`.

mod division;
mod mul;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::Ring;

pub use division::{classical_div, pseudo_div};
pub use mul::{MulOptions, DEFAULT_KARATSUBA_THRESHOLD};

/// Which side the divisor sits on.
///
/// `Right` keeps every product as written, `a * b`; `Left` swaps the
/// operands, `b * a`. A right quotient satisfies `u = q*v + r`, a left
/// quotient `u = v*q + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Right,
}

impl Orientation {
    #[inline]
    pub fn mul<R: Ring>(self, ring: &R, a: &R::Elem, b: &R::Elem) -> R::Elem {
        match self {
            Orientation::Right => ring.mul(a, b),
            Orientation::Left => ring.mul(b, a),
        }
    }

    pub fn mul_poly<R: Ring>(self, a: &DensePoly<R>, b: &DensePoly<R>) -> DensePoly<R> {
        match self {
            Orientation::Right => a.mul(b),
            Orientation::Left => b.mul(a),
        }
    }
}

/// A polynomial `sum c[i] x^i`, coefficients little-endian.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has no degree.
#[derive(Clone)]
pub struct DensePoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> DensePoly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        DensePoly { ring, coeffs }
    }

    pub fn zero(ring: R) -> Self {
        DensePoly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one])
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c x^n`.
    pub fn monomial(ring: R, c: R::Elem, n: usize) -> Self {
        let mut coeffs = vec![ring.zero(); n];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    /// `x^n`.
    pub fn x_pow(ring: R, n: usize) -> Self {
        let one = ring.one();
        Self::monomial(ring, one, n)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of coefficients, `degree + 1` (0 for the zero polynomial).
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading_coeff(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    /// The same coefficients attached to another context of the same ring,
    /// typically one with a fresh operation counter.
    pub fn rebind(&self, ring: R) -> Self {
        DensePoly {
            ring,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let ring = &self.ring;
        let (long, short) = if self.prec() >= other.prec() {
            (self, other)
        } else {
            (other, self)
        };
        let coeffs = long
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| match short.coeffs.get(i) {
                Some(d) => ring.add(c, d),
                None => c.clone(),
            })
            .collect();
        Self::new(ring.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let ring = &self.ring;
        let n = self.prec().max(other.prec());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => ring.sub(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => ring.neg(b),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(ring.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        DensePoly {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// `self * other` with `self`'s coefficients on the left.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_with(other, MulOptions::default())
    }

    pub fn mul_with(&self, other: &Self, opts: MulOptions) -> Self {
        Self::new(
            self.ring.clone(),
            mul::mul_slices(&self.ring, &self.coeffs, &other.coeffs, opts),
        )
    }

    pub fn mul_oriented(&self, other: &Self, o: Orientation) -> Self {
        o.mul_poly(self, other)
    }

    /// `c * self`.
    pub fn scale_left(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(c, a)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// `self * c`.
    pub fn scale_right(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// Whole shift: multiply by `x^n`, dropping terms whose exponent would be
    /// negative.
    pub fn shift(&self, n: isize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        if n > 0 {
            let mut coeffs = vec![self.ring.zero(); n as usize];
            coeffs.extend_from_slice(&self.coeffs);
            DensePoly {
                ring: self.ring.clone(),
                coeffs,
            }
        } else {
            let drop = n.unsigned_abs();
            let coeffs = self
                .coeffs
                .get(drop..)
                .map(<[_]>::to_vec)
                .unwrap_or_default();
            DensePoly {
                ring: self.ring.clone(),
                coeffs,
            }
        }
    }

    /// `self rem x^n`.
    pub fn truncate(&self, n: usize) -> Self {
        let coeffs = self.coeffs[..self.prec().min(n)].to_vec();
        Self::new(self.ring.clone(), coeffs)
    }

    /// The oriented product reduced modulo `x^n`, without forming
    /// coefficients at or above `x^n`.
    pub fn mul_mod(&self, other: &Self, n: usize, o: Orientation) -> Self {
        let (a, b) = match o {
            Orientation::Right => (self, other),
            Orientation::Left => (other, self),
        };
        let coeffs = mul::mul_trunc(&self.ring, &a.coeffs, &b.coeffs, n, MulOptions::default());
        Self::new(self.ring.clone(), coeffs)
    }

    /// Formal derivative with respect to `x`.
    pub fn derivative(&self) -> Self {
        let ring = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| ring.mul(&ring.from_int(i as i64), c))
            .collect();
        Self::new(ring.clone(), coeffs)
    }
}

impl<R: Ring> PartialEq for DensePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> fmt::Debug for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("DensePoly").field(&self.coeffs).finish()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl<R: Ring> $tr<&DensePoly<R>> for &DensePoly<R> {
            type Output = DensePoly<R>;
            fn $method(self, rhs: &DensePoly<R>) -> DensePoly<R> {
                DensePoly::$method(self, rhs)
            }
        }

        impl<R: Ring> $tr for DensePoly<R> {
            type Output = DensePoly<R>;
            fn $method(self, rhs: DensePoly<R>) -> DensePoly<R> {
                DensePoly::$method(&self, &rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<R: Ring> Neg for &DensePoly<R> {
    type Output = DensePoly<R>;
    fn neg(self) -> DensePoly<R> {
        DensePoly::neg(self)
    }
}

impl<R: Ring> Neg for DensePoly<R> {
    type Output = DensePoly<R>;
    fn neg(self) -> DensePoly<R> {
        DensePoly::neg(&self)
    }
}
