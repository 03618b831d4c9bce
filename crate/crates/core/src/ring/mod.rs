//! Coefficient rings.
//!
//! A [`Ring`] is a context object: elements are plain values and every
//! operation goes through the context. Contexts are cheap to clone and carry
//! an [`OpCounter`] that tallies base-field multiplications.

mod gfp;
mod matrix;
mod polyring;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::Rng;

use crate::error::Result;

pub use gfp::{Fp, GFp};
pub use matrix::{Matrix, MatrixRing};
pub use polyring::PolyRing;

/// Shared, monotone counter of base-field multiplications.
///
/// Clones share the same cell, so a ring context and everything built from it
/// report into one tally.
#[derive(Clone, Debug, Default)]
pub struct OpCounter(Arc<AtomicU64>);

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&self, n: u64) {
        self.0.fetch_add(n, Ordering::Relaxed);
    }

    pub fn get(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }
}

/// An exact ring, not necessarily commutative.
pub trait Ring: Clone + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Two-sided inverse, or [`Error::NotInvertible`](crate::Error::NotInvertible).
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn is_commutative(&self) -> bool;

    /// Base-field multiplications performed through this context so far.
    fn mul_count(&self) -> u64;

    /// Same ring, new counter starting at zero.
    fn with_fresh_counter(&self) -> Self;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// The image of the integer `n` under `Z -> R`.
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut result = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    fn commutes(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
}

/// Rings that can draw uniformly random elements (for tests and benchmarks).
pub trait Sample: Ring {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;

    /// A random invertible element.
    fn sample_unit<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        loop {
            let a = self.sample(rng);
            if self.inv(&a).is_ok() {
                return a;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_axioms<R: Sample>(ring: &R, trials: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..trials {
            let (a, b, c) = (
                ring.sample(&mut rng),
                ring.sample(&mut rng),
                ring.sample(&mut rng),
            );
            assert_eq!(
                ring.add(&ring.add(&a, &b), &c),
                ring.add(&a, &ring.add(&b, &c))
            );
            assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
            assert_eq!(
                ring.mul(&ring.mul(&a, &b), &c),
                ring.mul(&a, &ring.mul(&b, &c))
            );
            assert_eq!(
                ring.mul(&a, &ring.add(&b, &c)),
                ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
            );
            assert_eq!(
                ring.mul(&ring.add(&a, &b), &c),
                ring.add(&ring.mul(&a, &c), &ring.mul(&b, &c))
            );
            assert!(ring.is_zero(&ring.add(&a, &ring.neg(&a))));
            assert_eq!(ring.mul(&ring.one(), &a), a);
            assert_eq!(ring.mul(&a, &ring.one()), a);
            if let Ok(ai) = ring.inv(&a) {
                assert!(ring.is_one(&ring.mul(&a, &ai)));
                assert!(ring.is_one(&ring.mul(&ai, &a)));
            }
        }
    }

    #[test]
    fn ring_axioms_hold_on_random_triples() {
        for p in [7, 127] {
            let f = GFp::new(p).unwrap();
            check_axioms(&f, 200);
            for n in 1..=4 {
                check_axioms(&MatrixRing::new(f.clone(), n).unwrap(), 100);
            }
            check_axioms(&PolyRing::new(f.clone()), 100);
        }
    }

    #[test]
    fn from_int_and_pow() {
        let f = GFp::new(7).unwrap();
        assert_eq!(f.from_int(10), f.elem(3));
        assert_eq!(f.from_int(-1), f.elem(6));
        assert_eq!(f.pow(&f.elem(3), 6), f.one());
        let m = MatrixRing::new(f.clone(), 2).unwrap();
        assert_eq!(m.from_int(9), m.scalar(f.elem(2)));
    }

    #[test]
    fn counters_are_shared_by_clones_and_reset_by_fresh() {
        let f = GFp::new(127).unwrap();
        let g = f.clone();
        f.mul(&f.elem(3), &f.elem(4));
        assert_eq!(g.mul_count(), 1);
        assert_eq!(f.with_fresh_counter().mul_count(), 0);
    }
}
