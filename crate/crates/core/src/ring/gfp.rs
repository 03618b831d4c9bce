use std::fmt;

use rand::Rng;

use super::{OpCounter, Ring, Sample};
use crate::error::{Error, Result};

/// Residue class modulo the prime of its [`GFp`] context, always in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(u32);

impl Fp {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field `GF(p)`.
///
/// `p` is trusted to be prime; only the range `2 <= p < 2^31` is checked.
#[derive(Clone, Debug)]
pub struct GFp {
    p: u32,
    counter: OpCounter,
}

impl GFp {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::InvalidArgument(format!("modulus {p} out of range")));
        }
        Ok(GFp {
            p,
            counter: OpCounter::new(),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer into the field.
    pub fn elem(&self, v: i64) -> Fp {
        Fp(v.rem_euclid(self.p as i64) as u32)
    }

    /// Accepts only canonical representatives.
    pub fn try_elem(&self, v: u64) -> Result<Fp> {
        if v < self.p as u64 {
            Ok(Fp(v as u32))
        } else {
            Err(Error::InvalidArgument(format!(
                "{v} is not reduced modulo {}",
                self.p
            )))
        }
    }

    pub fn counter(&self) -> &OpCounter {
        &self.counter
    }
}

impl Ring for GFp {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp(0)
    }

    fn one(&self) -> Fp {
        Fp(1)
    }

    #[inline]
    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        let s = a.0 + b.0;
        Fp(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        Fp(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    #[inline]
    fn neg(&self, a: &Fp) -> Fp {
        Fp(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        self.counter.add(1);
        Fp(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    fn inv(&self, a: &Fp) -> Result<Fp> {
        if a.0 == 0 {
            return Err(Error::NotInvertible);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return Err(Error::NotInvertible);
        }
        Ok(self.elem(t0))
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn mul_count(&self) -> u64 {
        self.counter.get()
    }

    fn with_fresh_counter(&self) -> Self {
        GFp {
            p: self.p,
            counter: OpCounter::new(),
        }
    }

    fn is_zero(&self, a: &Fp) -> bool {
        a.0 == 0
    }

    fn from_int(&self, n: i64) -> Fp {
        self.elem(n)
    }
}

impl Sample for GFp {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Fp {
        Fp(rng.random_range(0..self.p))
    }
}
