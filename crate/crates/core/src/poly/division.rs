//! Classical quadratic division and pseudodivision in `R[x]`.

use super::{DensePoly, Orientation};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Long division by a divisor with invertible leading coefficient.
///
/// Returns `(q, r)` with `u = v*q + r` for [`Orientation::Left`] and
/// `u = q*v + r` for [`Orientation::Right`], where `r` is zero or has degree
/// below `deg v`.
pub fn classical_div<R: Ring>(
    u: &DensePoly<R>,
    v: &DensePoly<R>,
    o: Orientation,
) -> Result<(DensePoly<R>, DensePoly<R>)> {
    let ring = u.ring();
    let k = v.degree().ok_or(Error::ZeroDivision)?;
    let v_inv = ring.inv(&v.coeffs()[k])?;
    let h = match u.degree() {
        Some(h) if h >= k => h,
        _ => return Ok((DensePoly::zero(ring.clone()), u.clone())),
    };
    let mut r = u.coeffs().to_vec();
    let mut q = vec![ring.zero(); h - k + 1];
    for i in (0..=h - k).rev() {
        if ring.is_zero(&r[i + k]) {
            continue;
        }
        let c = o.mul(ring, &r[i + k], &v_inv);
        // u <- u - (c x^i) *_o v
        for (j, vj) in v.coeffs().iter().enumerate().take(k) {
            r[i + j] = ring.sub(&r[i + j], &o.mul(ring, &c, vj));
        }
        r[i + k] = ring.zero();
        q[i] = c;
    }
    r.truncate(k);
    Ok((
        DensePoly::new(ring.clone(), q),
        DensePoly::new(ring.clone(), r),
    ))
}

/// Pseudodivision for a divisor whose leading coefficient `lc` commutes with
/// all of the divisor's coefficients.
///
/// With `m = lc^(deg u - deg v + 1)` the result satisfies `m*u = v*q + r`
/// ([`Orientation::Left`]) or `u*m = q*v + r` ([`Orientation::Right`]); the
/// two agree when `lc` is central in the whole ring. No inverses are taken.
pub fn pseudo_div<R: Ring>(
    u: &DensePoly<R>,
    v: &DensePoly<R>,
    o: Orientation,
) -> Result<(DensePoly<R>, DensePoly<R>)> {
    let ring = u.ring();
    let k = v.degree().ok_or(Error::ZeroDivision)?;
    let lc = &v.coeffs()[k];
    if !v.coeffs()[..k].iter().all(|c| ring.commutes(lc, c)) {
        return Err(Error::NotCentral);
    }
    let h = match u.degree() {
        Some(h) if h >= k => h,
        _ => return Ok((DensePoly::zero(ring.clone()), u.clone())),
    };
    let mut lc_pows = Vec::with_capacity(h - k + 1);
    lc_pows.push(ring.one());
    for i in 1..=h - k {
        lc_pows.push(ring.mul(&lc_pows[i - 1], lc));
    }
    let mut r = u.coeffs().to_vec();
    let mut q = vec![ring.zero(); h - k + 1];
    for i in (0..=h - k).rev() {
        let c = r[i + k].clone();
        // u <- u *_o lc - (c x^i) *_o v; the x^(i+k) term cancels
        for rj in r.iter_mut().take(i + k) {
            *rj = o.mul(ring, rj, lc);
        }
        for (j, vj) in v.coeffs().iter().enumerate().take(k) {
            r[i + j] = ring.sub(&r[i + j], &o.mul(ring, &c, vj));
        }
        r[i + k] = ring.zero();
        q[i] = o.mul(ring, &c, &lc_pows[i]);
    }
    r.truncate(k);
    Ok((
        DensePoly::new(ring.clone(), q),
        DensePoly::new(ring.clone(), r),
    ))
}
