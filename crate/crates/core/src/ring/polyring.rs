use rand::Rng;

use super::{Ring, Sample};
use crate::error::{Error, Result};
use crate::poly::DensePoly;

/// Dense polynomials over `R`, used as a coefficient ring in their own right
/// (for instance `GF(p)[y]` under differential operators).
#[derive(Clone, Debug)]
pub struct PolyRing<R: Ring> {
    base: R,
    sample_degree: usize,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing {
            base,
            sample_degree: 3,
        }
    }

    /// Degree bound for [`Sample::sample`].
    pub fn with_sample_degree(mut self, d: usize) -> Self {
        self.sample_degree = d;
        self
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn poly(&self, coeffs: Vec<R::Elem>) -> DensePoly<R> {
        DensePoly::new(self.base.clone(), coeffs)
    }

    /// Formal derivative `d/dy`.
    pub fn derivative(&self, a: &DensePoly<R>) -> DensePoly<R> {
        a.derivative()
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = DensePoly<R>;

    fn zero(&self) -> Self::Elem {
        DensePoly::zero(self.base.clone())
    }

    fn one(&self) -> Self::Elem {
        DensePoly::one(self.base.clone())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a + b
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a - b
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        -a
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a * b
    }

    /// Only constants with an invertible value are units (the base is
    /// assumed to have no nilpotents).
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        match a.degree() {
            Some(0) => Ok(DensePoly::constant(
                self.base.clone(),
                self.base.inv(&a.coeffs()[0])?,
            )),
            _ => Err(Error::NotInvertible),
        }
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }

    fn mul_count(&self) -> u64 {
        self.base.mul_count()
    }

    fn with_fresh_counter(&self) -> Self {
        PolyRing {
            base: self.base.with_fresh_counter(),
            sample_degree: self.sample_degree,
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        DensePoly::constant(self.base.clone(), self.base.from_int(n))
    }
}

impl<R: Sample> Sample for PolyRing<R> {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        let len = rng.random_range(0..=self.sample_degree + 1);
        self.poly((0..len).map(|_| self.base.sample(rng)).collect())
    }

    fn sample_unit<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        DensePoly::constant(self.base.clone(), self.base.sample_unit(rng))
    }
}
