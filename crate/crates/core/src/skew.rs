//! Skew (Ore) polynomials `R[x; σ, δ]`, where `x r = σ(r) x + δ(r)`.
//!
//! Elements are kept in the normal form `Σ u_i x^i` with coefficients on the
//! left. Multiplication moves `x` past coefficients one step at a time, which
//! is quadratic in the degree but exact for any `σ`, `δ`. Division and the
//! shifted inverses are only provided for `σ = id` (differential polynomial
//! rings `R[x, δ]`); other endomorphisms are carried by the types but rejected
//! with [`Error::UnsupportedSigma`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Orientation;
use crate::ring::{GFp, PolyRing, Ring};

pub type ElemFn<R> = Arc<dyn Fn(&<R as Ring>::Elem) -> <R as Ring>::Elem + Send + Sync>;

/// The endomorphism `σ`.
pub enum Sigma<R: Ring> {
    Identity,
    Map(ElemFn<R>),
}

impl<R: Ring> Clone for Sigma<R> {
    fn clone(&self) -> Self {
        match self {
            Sigma::Identity => Sigma::Identity,
            Sigma::Map(f) => Sigma::Map(f.clone()),
        }
    }
}

impl<R: Ring> Sigma<R> {
    pub fn apply(&self, r: &R::Elem) -> R::Elem {
        match self {
            Sigma::Identity => r.clone(),
            Sigma::Map(f) => f(r),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Sigma::Identity)
    }
}

/// An endomorphism `σ` together with a `σ`-derivation `δ`. Both must be pure.
pub struct OrePair<R: Ring> {
    pub sigma: Sigma<R>,
    pub delta: ElemFn<R>,
}

impl<R: Ring> Clone for OrePair<R> {
    fn clone(&self) -> Self {
        OrePair {
            sigma: self.sigma.clone(),
            delta: self.delta.clone(),
        }
    }
}

impl<R: Ring> OrePair<R> {
    pub fn new(sigma: Sigma<R>, delta: ElemFn<R>) -> Self {
        OrePair { sigma, delta }
    }

    /// `σ = id` with the given derivation.
    pub fn differential(delta: impl Fn(&R::Elem) -> R::Elem + Send + Sync + 'static) -> Self {
        OrePair {
            sigma: Sigma::Identity,
            delta: Arc::new(delta),
        }
    }

    pub fn sigma(&self, r: &R::Elem) -> R::Elem {
        self.sigma.apply(r)
    }

    pub fn delta(&self, r: &R::Elem) -> R::Elem {
        (self.delta)(r)
    }
}

struct Inner<R: Ring> {
    ring: R,
    ore: OrePair<R>,
    var: String,
    coeff_var: Option<String>,
}

/// Context of a skew polynomial ring: coefficient ring, Ore pair and the name
/// of the variable.
pub struct SkewRing<R: Ring> {
    inner: Arc<Inner<R>>,
}

impl<R: Ring> Clone for SkewRing<R> {
    fn clone(&self) -> Self {
        SkewRing {
            inner: self.inner.clone(),
        }
    }
}

impl<R: Ring> fmt::Debug for SkewRing<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewRing")
            .field("ring", &self.inner.ring)
            .field("var", &self.inner.var)
            .field("sigma_is_identity", &self.inner.ore.sigma.is_identity())
            .finish()
    }
}

impl<R: Ring> SkewRing<R> {
    pub fn new(ring: R, ore: OrePair<R>, var: impl Into<String>) -> Self {
        SkewRing {
            inner: Arc::new(Inner {
                ring,
                ore,
                var: var.into(),
                coeff_var: None,
            }),
        }
    }

    /// As [`SkewRing::new`], also naming the variable of a polynomial
    /// coefficient ring.
    pub fn with_coeff_var(
        ring: R,
        ore: OrePair<R>,
        var: impl Into<String>,
        coeff_var: impl Into<String>,
    ) -> Self {
        let inner = Inner {
            ring,
            ore,
            var: var.into(),
            coeff_var: Some(coeff_var.into()),
        };
        SkewRing {
            inner: Arc::new(inner),
        }
    }

    pub fn coeff_var(&self) -> Option<&str> {
        self.inner.coeff_var.as_deref()
    }

    pub fn ring(&self) -> &R {
        &self.inner.ring
    }

    pub fn ore(&self) -> &OrePair<R> {
        &self.inner.ore
    }

    pub fn var(&self) -> &str {
        &self.inner.var
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn poly(&self, coeffs: Vec<R::Elem>) -> SkewPoly<R> {
        SkewPoly::new(self.clone(), coeffs)
    }

    pub fn zero(&self) -> SkewPoly<R> {
        self.poly(Vec::new())
    }

    pub fn one(&self) -> SkewPoly<R> {
        self.constant(self.ring().one())
    }

    pub fn constant(&self, c: R::Elem) -> SkewPoly<R> {
        self.poly(vec![c])
    }

    /// `c x^n`.
    pub fn monomial(&self, c: R::Elem, n: usize) -> SkewPoly<R> {
        let mut coeffs = vec![self.ring().zero(); n];
        coeffs.push(c);
        self.poly(coeffs)
    }

    pub fn x_pow(&self, n: usize) -> SkewPoly<R> {
        self.monomial(self.ring().one(), n)
    }

    fn require_identity_sigma(&self) -> Result<()> {
        if self.ore().sigma.is_identity() {
            Ok(())
        } else {
            Err(Error::UnsupportedSigma)
        }
    }
}

/// A skew polynomial `Σ u_i x^i`.
pub struct SkewPoly<R: Ring> {
    ctx: SkewRing<R>,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> Clone for SkewPoly<R> {
    fn clone(&self) -> Self {
        SkewPoly {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.clone(),
        }
    }
}

impl<R: Ring> PartialEq for SkewPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> fmt::Debug for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<R: Ring> SkewPoly<R> {
    pub fn new(ctx: SkewRing<R>, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ctx.ring().is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { ctx, coeffs }
    }

    pub fn context(&self) -> &SkewRing<R> {
        &self.ctx
    }

    pub fn ring(&self) -> &R {
        self.ctx.ring()
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

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring().zero())
    }

    pub fn leading_coeff(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let ring = self.ring();
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => ring.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(self.ctx.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let ring = self.ring();
        Self::new(
            self.ctx.clone(),
            self.coeffs.iter().map(|c| ring.neg(c)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `c · self` for a coefficient `c` on the left.
    pub fn scale_left(&self, c: &R::Elem) -> Self {
        let ring = self.ring();
        Self::new(
            self.ctx.clone(),
            self.coeffs.iter().map(|a| ring.mul(c, a)).collect(),
        )
    }

    /// `x · self = Σ σ(b_i) x^(i+1) + δ(b_i) x^i`.
    pub fn mul_var_left(&self) -> Self {
        let ring = self.ring();
        let ore = self.ctx.ore();
        let mut out = vec![ring.zero(); self.coeffs.len() + 1];
        for (i, b) in self.coeffs.iter().enumerate() {
            out[i + 1] = ring.add(&out[i + 1], &ore.sigma(b));
            out[i] = ring.add(&out[i], &ore.delta(b));
        }
        Self::new(self.ctx.clone(), out)
    }

    /// Skew product `self × other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = self.ctx.zero();
        let mut xb = other.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                xb = xb.mul_var_left();
            }
            if !self.ring().is_zero(a) {
                acc = acc.add(&xb.scale_left(a));
            }
        }
        acc
    }

    /// Binary powering; `a^0 = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Left whole shift `x^n × self`; negative `n` is not a skew polynomial
    /// operation and is rejected.
    pub fn lshift(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::NegativeLeftShift(n));
        }
        let mut out = self.clone();
        for _ in 0..n {
            out = out.mul_var_left();
        }
        Ok(out)
    }

    /// Right whole shift: `Σ_{i+n>=0} u_i x^(i+n)`.
    pub fn rshift(&self, n: isize) -> Self {
        let coeffs = if n >= 0 {
            let mut c = vec![self.ring().zero(); n as usize];
            c.extend(self.coeffs.iter().cloned());
            c
        } else {
            self.coeffs.iter().skip(n.unsigned_abs()).cloned().collect()
        };
        Self::new(self.ctx.clone(), coeffs)
    }

    /// Applies the operator to `p`: `Σ c_i δ^i(p)`.
    pub fn apply(&self, p: &R::Elem) -> Result<R::Elem> {
        self.ctx.require_identity_sigma()?;
        let ring = self.ring();
        let ore = self.ctx.ore();
        let mut acc = ring.zero();
        let mut d = p.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                d = ore.delta(&d);
            }
            acc = ring.add(&acc, &ring.mul(c, &d));
        }
        Ok(acc)
    }
}

/// Classical division in `R[x, δ]`: `Left` gives `u = v × q + r`, `Right`
/// gives `u = q × v + r`, with `deg r < deg v`.
pub fn skew_classical_div<R: Ring>(
    u: &SkewPoly<R>,
    v: &SkewPoly<R>,
    o: Orientation,
) -> Result<(SkewPoly<R>, SkewPoly<R>)> {
    let ctx = u.context();
    ctx.require_identity_sigma()?;
    let ring = ctx.ring();
    let k = v.degree().ok_or(Error::ZeroDivision)?;
    let v_inv = ring.inv(&v.coeffs[k])?;
    let mut q = vec![ring.zero(); u.coeffs.len().saturating_sub(k)];
    let mut r = u.clone();
    while let Some(d) = r.degree().filter(|&d| d >= k) {
        let i = d - k;
        let lead = &r.coeffs[d];
        let c = match o {
            Orientation::Left => ring.mul(&v_inv, lead),
            Orientation::Right => ring.mul(lead, &v_inv),
        };
        let t = ctx.monomial(c.clone(), i);
        let sub = match o {
            Orientation::Left => v.mul(&t),
            Orientation::Right => t.mul(v),
        };
        r = r.sub(&sub);
        q[i] = ring.add(&q[i], &c);
    }
    Ok((ctx.poly(q), r))
}

/// Residual degrees seen by [`lshinv_traced`], one per evaluation (the
/// starting value included).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LshinvTrace {
    pub residual_degrees: Vec<Option<usize>>,
}

impl LshinvTrace {
    /// Number of updates of `w`.
    pub fn iterations(&self) -> usize {
        self.residual_degrees.len().saturating_sub(1)
    }
}

/// Left whole shifted inverse `x^h lquo v` for monic `v`.
pub fn lshinv<R: Ring>(v: &SkewPoly<R>, h: usize) -> Result<SkewPoly<R>> {
    lshinv_traced(v, h).map(|(w, _)| w)
}

/// Iterates `w <- w + rshift(w × (x^h - v × w), -h)` from
/// `x^(h-k) - v_(k-1) x^(h-k-1)` until `deg(x^h - v × w) < k`. Every pass
/// may fix as little as one coefficient, so the loop is capped at `h-k+1`
/// passes.
pub fn lshinv_traced<R: Ring>(v: &SkewPoly<R>, h: usize) -> Result<(SkewPoly<R>, LshinvTrace)> {
    let ctx = v.context();
    ctx.require_identity_sigma()?;
    let ring = ctx.ring();
    let k = v.degree().ok_or(Error::ZeroDivision)?;
    if !ring.is_one(&v.coeffs[k]) {
        return Err(Error::NotMonic);
    }
    let mut trace = LshinvTrace::default();
    if h < k {
        return Ok((ctx.zero(), trace));
    }
    let xh = ctx.x_pow(h);
    let mut w = ctx.x_pow(h - k);
    if h > k && k > 0 {
        w = w.sub(&ctx.monomial(v.coeffs[k - 1].clone(), h - k - 1));
    }
    let cap = h - k + 1;
    loop {
        let residual = xh.sub(&v.mul(&w));
        let rd = residual.degree();
        trace.residual_degrees.push(rd);
        if rd.is_none_or(|d| d < k) {
            return Ok((w, trace));
        }
        if trace.iterations() >= cap {
            return Err(Error::NoConvergence { iterations: cap });
        }
        w = w.add(&w.mul(&residual).rshift(-(h as isize)));
    }
}

/// Right whole shifted inverse `x^h rquo v`, by classical right division.
pub fn rshinv<R: Ring>(v: &SkewPoly<R>, h: usize) -> Result<SkewPoly<R>> {
    let xh = v.context().x_pow(h);
    skew_classical_div(&xh, v, Orientation::Right).map(|(q, _)| q)
}

/// Right quotient and remainder from the left shifted inverse:
/// `q = rshift(u × lshinv_h(v), -h)` with `h = deg u`, `r = u - q × v`.
pub fn rquo_via_lshinv<R: Ring>(
    u: &SkewPoly<R>,
    v: &SkewPoly<R>,
) -> Result<(SkewPoly<R>, SkewPoly<R>)> {
    let ctx = u.context();
    ctx.require_identity_sigma()?;
    let k = v.degree().ok_or(Error::ZeroDivision)?;
    if !ctx.ring().is_one(&v.coeffs[k]) {
        return Err(Error::NotMonic);
    }
    let Some(h) = u.degree() else {
        return Ok((ctx.zero(), ctx.zero()));
    };
    let w = lshinv(v, h)?;
    let q = u.mul(&w).rshift(-(h as isize));
    let r = u.sub(&q.mul(v));
    Ok((q, r))
}

/// Linear ordinary differential operators `GF(p)[var][op; id, d/dvar]`.
pub fn make_lodo(p: u32, var: &str, op: &str) -> Result<SkewRing<PolyRing<GFp>>> {
    let ring = PolyRing::new(GFp::new(p)?);
    let ore = OrePair::differential(|a: &crate::poly::DensePoly<GFp>| a.derivative());
    Ok(SkewRing::with_coeff_var(ring, ore, op, var))
}
