//! The whole shifted inverse `shinv_h(v) = x^h quo v` over `R[x]` and the
//! quotients it yields.
//!
//! Because `x` is central, `x^h` has the same left and right quotient by `v`,
//! so one value serves both orientations. It is computed by a Newton–Schulz
//! style iteration
//!
//! ```text
//! w <- shift_m(w) + shift_{2m-h}( w * (x^(h-m) - v*w) )
//! ```
//!
//! that (roughly) doubles the number of correct leading coefficients per
//! step. Three refinement schedules are provided: [`Refine::One`] keeps `w`
//! full length, [`Refine::Two`] grows `w` with its accuracy and
//! [`Refine::Three`] additionally drops low-order divisor coefficients that
//! cannot affect the next step.
//!
//! The schedules are written for a generic domain that may have carries
//! (integers); polynomials have none, so guard places and doubling shortfall
//! are always zero here.

use crate::error::{Error, Result};
use crate::poly::{DensePoly, Orientation};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Refine {
    One,
    Two,
    Three,
}

impl Refine {
    pub const ALL: [Refine; 3] = [Refine::One, Refine::Two, Refine::Three];

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(Refine::One),
            2 => Some(Refine::Two),
            3 => Some(Refine::Three),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Refine::One => 1,
            Refine::Two => 2,
            Refine::Three => 3,
        }
    }
}

/// Per-domain knobs of the refinement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShinvConfig {
    /// Carry-bearing domains are not implemented; must be `false`.
    pub has_carries: bool,
    /// Guard places, only meaningful with carries.
    pub guard: usize,
    /// Precision doubling shortfall, only meaningful with carries.
    pub shortfall: usize,
    pub refine: Refine,
    /// Extra full-length steps after [`Refine::One`] has converged.
    pub extra_guard_steps: usize,
}

impl Default for ShinvConfig {
    fn default() -> Self {
        ShinvConfig {
            has_carries: false,
            guard: 0,
            shortfall: 0,
            refine: Refine::Three,
            extra_guard_steps: 0,
        }
    }
}

impl ShinvConfig {
    /// Defaults for a coefficient ring: one extra guard step when the ring is
    /// not commutative, none otherwise.
    pub fn for_ring<R: Ring>(ring: &R) -> Self {
        ShinvConfig {
            extra_guard_steps: usize::from(!ring.is_commutative()),
            ..Self::default()
        }
    }

    pub fn with_refine(self, refine: Refine) -> Self {
        ShinvConfig { refine, ..self }
    }

    pub fn with_extra_guard_steps(self, extra_guard_steps: usize) -> Self {
        ShinvConfig {
            extra_guard_steps,
            ..self
        }
    }

    fn validate(&self) -> Result<()> {
        if self.has_carries {
            return Err(Error::InvalidArgument(
                "carry-bearing domains are not supported for polynomials".into(),
            ));
        }
        if self.guard != 0 || self.shortfall != 0 {
            return Err(Error::InvalidArgument(
                "guard places and shortfall must be zero without carries".into(),
            ));
        }
        Ok(())
    }

    /// `(g, d)` for a refinement schedule.
    fn carry_params(&self) -> (usize, usize) {
        if self.has_carries {
            (self.guard, self.shortfall)
        } else {
            (0, 0)
        }
    }
}

/// One pass of a refinement loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IterationRecord {
    /// Accurate leading coefficients after the pass.
    pub ell: usize,
    /// `prec(w)` after the pass.
    pub prec: usize,
    /// Growth `m` used by the step (0 for [`Refine::One`]).
    pub m: usize,
    /// Low-order divisor coefficients dropped (only [`Refine::Three`]).
    pub s: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IterationTrace {
    pub records: Vec<IterationRecord>,
    /// Guard steps run after the loop; not counted as iterations.
    pub extra_steps: usize,
}

impl IterationTrace {
    pub fn iterations(&self) -> usize {
        self.records.len()
    }

    pub fn precs(&self) -> Vec<usize> {
        self.records.iter().map(|r| r.prec).collect()
    }

    fn push(&mut self, ell: usize, prec: usize, m: usize, s: usize) {
        self.records.push(IterationRecord { ell, prec, m, s });
    }
}

/// Starting value with two correct coefficients:
/// `lc^-1 x - lc^-1 v_{k-1} lc^-1`.
pub fn shinv0<R: Ring>(v: &DensePoly<R>) -> Result<(DensePoly<R>, usize)> {
    let k = match v.degree() {
        Some(k) if k >= 1 => k,
        _ => {
            return Err(Error::InvalidArgument(
                "starting value needs deg v >= 1".into(),
            ))
        }
    };
    let ring = v.ring();
    let ilc = ring.inv(&v.coeffs()[k])?;
    let c0 = ring.mul(&ring.mul(&ilc, &ring.neg(&v.coeffs()[k - 1])), &ilc);
    Ok((DensePoly::new(ring.clone(), vec![c0, ilc]), 2))
}

/// `x^h - v*w` (oriented), using only the low coefficients of the product
/// when `w` is already accurate in its top `ell` places.
pub fn pow_diff<R: Ring>(
    v: &DensePoly<R>,
    w: &DensePoly<R>,
    h: usize,
    ell: usize,
    o: Orientation,
) -> DensePoly<R> {
    let c = 0;
    let l = (v.prec() + w.prec() + c) as isize - ell as isize;
    if v.is_zero() || w.is_zero() || l >= h as isize {
        DensePoly::x_pow(v.ring().clone(), h).sub(&o.mul_poly(v, w))
    } else {
        // no carries, so the coefficient at x^(L-1) never needs a peek
        v.mul_mod(w, l.max(0) as usize, o).neg()
    }
}

/// `shift_m(w) + shift_{2m-h}(w * pow_diff(v, w, h-m, ell))` in the given
/// orientation: `Right` multiplies `w * (x^(h-m) - v*w)`, `Left` multiplies
/// `(x^(h-m) - w*v) * w`.
pub fn step<R: Ring>(
    h: usize,
    v: &DensePoly<R>,
    w: &DensePoly<R>,
    m: usize,
    ell: usize,
    o: Orientation,
) -> DensePoly<R> {
    assert!(h >= m, "step: h = {h} < m = {m}");
    let diff = pow_diff(v, w, h - m, ell, o);
    let correction = o.mul_poly(w, &diff).shift(2 * m as isize - h as isize);
    w.shift(m as isize).add(&correction)
}

/// Full-length iteration: `w` is scaled to degree `h-k` up front and every
/// step works at that length.
#[allow(clippy::too_many_arguments)]
pub fn refine1<R: Ring>(
    v: &DensePoly<R>,
    h: usize,
    k: usize,
    w: &DensePoly<R>,
    ell: usize,
    cfg: &ShinvConfig,
    o: Orientation,
    trace: &mut IterationTrace,
) -> DensePoly<R> {
    let (g, d) = cfg.carry_params();
    let h = h + g;
    let target = h - k + 1 - d;
    let lead = w.degree().unwrap_or(0);
    let mut w = w.shift((h - k) as isize - lead as isize);
    let mut ell = ell;
    while target > ell {
        w = step(h, v, &w, 0, ell, o);
        ell = (2 * ell - d).min(target);
        trace.push(ell, w.prec(), 0, 0);
    }
    for _ in 0..cfg.extra_guard_steps {
        w = step(h, v, &w, 0, ell, o);
        trace.extra_steps += 1;
    }
    w
}

/// Growing iteration: after each pass `w = shinv_{k+ell-1}(v)` exactly.
#[allow(clippy::too_many_arguments)]
pub fn refine2<R: Ring>(
    v: &DensePoly<R>,
    h: usize,
    k: usize,
    w: &DensePoly<R>,
    ell: usize,
    cfg: &ShinvConfig,
    o: Orientation,
    trace: &mut IterationTrace,
) -> DensePoly<R> {
    let (g, d) = cfg.carry_params();
    let mut w = w.shift(g as isize);
    let mut ell = ell;
    while h - k + 1 - d > ell {
        let m = (h - k + 1 - ell).min(ell);
        w = step(k + ell + m + d - 1 + g, v, &w, m, ell - g, o).shift(-(d as isize));
        ell = ell + m - d;
        trace.push(ell, w.prec(), m, 0);
    }
    w
}

/// As [`refine2`], but each step sees only the top `k - s + 1` divisor
/// coefficients, `s = max(0, k - 2 ell + 1)`.
#[allow(clippy::too_many_arguments)]
pub fn refine3<R: Ring>(
    v: &DensePoly<R>,
    h: usize,
    k: usize,
    w: &DensePoly<R>,
    ell: usize,
    cfg: &ShinvConfig,
    o: Orientation,
    trace: &mut IterationTrace,
) -> DensePoly<R> {
    let (g, d) = cfg.carry_params();
    let mut w = w.shift(g as isize);
    let mut ell = ell;
    while h - k + 1 - d > ell {
        let m = (h - k + 1 - ell).min(ell);
        let s = (k as isize - 2 * ell as isize + 1 - g as isize).max(0) as usize;
        let vs = v.shift(-(s as isize));
        w = step(k + ell + m - s - 1 + d + g, &vs, &w, m, ell - g, o).shift(-(d as isize));
        ell = ell + m - d;
        trace.push(ell, w.prec(), m, s);
    }
    w.shift(-(g as isize))
}

/// `x^h quo v` for a divisor with invertible leading coefficient.
pub fn shinv<R: Ring>(
    v: &DensePoly<R>,
    h: usize,
    cfg: &ShinvConfig,
    o: Orientation,
) -> Result<DensePoly<R>> {
    shinv_traced(v, h, cfg, o).map(|(w, _)| w)
}

pub fn shinv_traced<R: Ring>(
    v: &DensePoly<R>,
    h: usize,
    cfg: &ShinvConfig,
    o: Orientation,
) -> Result<(DensePoly<R>, IterationTrace)> {
    cfg.validate()?;
    let ring = v.ring();
    let k = v.degree().ok_or(Error::ZeroDivision)?;
    let ilc = ring.inv(&v.coeffs()[k])?;
    let mut trace = IterationTrace::default();
    if h < k {
        return Ok((DensePoly::zero(ring.clone()), trace));
    }
    let is_monomial = v.coeffs()[..k].iter().all(|c| ring.is_zero(c));
    if k == 0 || h == k || is_monomial {
        return Ok((DensePoly::monomial(ring.clone(), ilc, h - k), trace));
    }
    let (w0, ell) = shinv0(v)?;
    let w = match cfg.refine {
        Refine::One => refine1(v, h, k, &w0, ell, cfg, o, &mut trace),
        Refine::Two => refine2(v, h, k, &w0, ell, cfg, o, &mut trace),
        Refine::Three => refine3(v, h, k, &w0, ell, cfg, o, &mut trace),
    };
    Ok((w, trace))
}

/// Quotient and remainder via `shinv_{h+1}(v)`, `h = deg u`:
/// `q = shift_{-h-1}(u * shinv)` for the right quotient and
/// `q = shift_{-h-1}(shinv * u)` for the left one.
pub fn quo<R: Ring>(
    u: &DensePoly<R>,
    v: &DensePoly<R>,
    o: Orientation,
    cfg: &ShinvConfig,
) -> Result<(DensePoly<R>, DensePoly<R>)> {
    quo_traced(u, v, o, cfg).map(|(q, r, _)| (q, r))
}

pub fn quo_traced<R: Ring>(
    u: &DensePoly<R>,
    v: &DensePoly<R>,
    o: Orientation,
    cfg: &ShinvConfig,
) -> Result<(DensePoly<R>, DensePoly<R>, IterationTrace)> {
    let ring = u.ring();
    let k = v.degree().ok_or(Error::ZeroDivision)?;
    ring.inv(&v.coeffs()[k])?;
    let Some(h) = u.degree() else {
        let zero = DensePoly::zero(ring.clone());
        return Ok((zero.clone(), zero, IterationTrace::default()));
    };
    let (w, trace) = shinv_traced(v, h + 1, cfg, o)?;
    let q = o.mul_poly(u, &w).shift(-(h as isize) - 1);
    let r = u.sub(&o.mul_poly(&q, v));
    Ok((q, r, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::classical_div;
    use crate::ring::{GFp, MatrixRing, Sample};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32, c: &[i64]) -> DensePoly<GFp> {
        let f = GFp::new(p).unwrap();
        DensePoly::new(f.clone(), c.iter().map(|&v| f.elem(v)).collect())
    }

    fn random_divisor<R: Sample>(ring: &R, rng: &mut impl Rng, k: usize) -> DensePoly<R> {
        let mut c: Vec<_> = (0..k).map(|_| ring.sample(rng)).collect();
        c.push(ring.sample_unit(rng));
        DensePoly::new(ring.clone(), c)
    }

    fn oracle<R: Ring>(v: &DensePoly<R>, h: usize) -> DensePoly<R> {
        classical_div(
            &DensePoly::x_pow(v.ring().clone(), h),
            v,
            Orientation::Right,
        )
        .unwrap()
        .0
    }

    #[test]
    fn shinv0_examples() {
        let (w, ell) = shinv0(&gf(7, &[3, 0, 1])).unwrap();
        assert_eq!((w, ell), (gf(7, &[0, 1]), 2));
        let (w, ell) = shinv0(&gf(7, &[1, 2])).unwrap();
        assert_eq!((w, ell), (gf(7, &[5, 4]), 2));
    }

    #[test]
    fn pow_diff_paths() {
        let x = gf(7, &[0, 1]);
        let zero = gf(7, &[]);
        assert_eq!(
            pow_diff(&x, &zero, 3, 0, Orientation::Right),
            gf(7, &[0, 0, 0, 1])
        );
        assert!(pow_diff(&x, &x, 2, 0, Orientation::Right).is_zero());
        // truncated branch: L = 3 + 2 - 2 = 3 < 5
        let v = gf(7, &[3, 1, 4]);
        let w = gf(7, &[6, 5]);
        assert_eq!(
            pow_diff(&v, &w, 5, 2, Orientation::Right),
            (&v * &w).truncate(3).neg()
        );
    }

    #[test]
    fn one_step_from_the_scaled_start() {
        // v = 2x + 1 over GF(7), shinv_3 = 4x^2 + 5x + 1
        let v = gf(7, &[1, 2]);
        let expected = gf(7, &[1, 5, 4]);
        assert_eq!(oracle(&v, 3), expected);
        let (w0, _) = shinv0(&v).unwrap();
        let w = step(3, &v, &w0.shift(1), 0, 2, Orientation::Right);
        assert_eq!(w, expected);
        // an exact w is a fixed point
        assert_eq!(step(3, &v, &expected, 0, 3, Orientation::Right), expected);
    }

    #[test]
    fn shinv_dispatch_cases() {
        let cfg = ShinvConfig::default();
        let o = Orientation::Right;
        assert_eq!(
            shinv(&gf(7, &[0, 0, 1]), 5, &cfg, o).unwrap(),
            gf(7, &[0, 0, 0, 1])
        );
        assert_eq!(shinv(&gf(7, &[1, 1]), 2, &cfg, o).unwrap(), gf(7, &[6, 1]));
        assert!(shinv(&gf(7, &[1, 1, 1]), 1, &cfg, o).unwrap().is_zero());
        assert_eq!(shinv(&gf(7, &[2]), 2, &cfg, o).unwrap(), gf(7, &[0, 0, 4]));
        assert_eq!(shinv(&gf(7, &[]), 2, &cfg, o), Err(Error::ZeroDivision));
    }

    #[test]
    fn rejects_carry_configuration() {
        let cfg = ShinvConfig {
            has_carries: true,
            ..Default::default()
        };
        assert!(matches!(
            shinv(&gf(7, &[1, 1, 1]), 9, &cfg, Orientation::Left),
            Err(Error::InvalidArgument(_))
        ));
        let cfg = ShinvConfig {
            guard: 1,
            ..Default::default()
        };
        assert!(shinv(&gf(7, &[1, 1, 1]), 9, &cfg, Orientation::Left).is_err());
    }

    #[test]
    fn schedules_agree_with_classical_division() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let m = MatrixRing::new(GFp::new(127).unwrap(), 2).unwrap();
        for _ in 0..60 {
            let k = rng.random_range(1..9);
            let v = random_divisor(&m, &mut rng, k);
            let h = k + rng.random_range(0..40);
            let expected = oracle(&v, h);
            for refine in Refine::ALL {
                for o in [Orientation::Left, Orientation::Right] {
                    for extra in [0, 1] {
                        let cfg = ShinvConfig::default()
                            .with_refine(refine)
                            .with_extra_guard_steps(extra);
                        assert_eq!(shinv(&v, h, &cfg, o).unwrap(), expected, "{refine:?} {o:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn each_pass_is_accurate_in_its_leading_places() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = MatrixRing::new(GFp::new(127).unwrap(), 3).unwrap();
        let v = random_divisor(&m, &mut rng, 6);
        let (h, k) = (70, 6);
        let exact = oracle(&v, h);
        let (w0, ell) = shinv0(&v).unwrap();
        let cfg = ShinvConfig::default();
        // Refine2/3: after each pass w = shinv_{k+ell-1}(v), i.e. the top ell
        // coefficients of the final answer
        let mut trace = IterationTrace::default();
        let mut w = w0.clone();
        let mut ell_now = ell;
        while h - k + 1 > ell_now {
            let mut t = IterationTrace::default();
            w = refine2(
                &v,
                k + ell_now + (h - k + 1 - ell_now).min(ell_now) - 1,
                k,
                &w,
                ell_now,
                &cfg,
                Orientation::Right,
                &mut t,
            );
            ell_now = t.records.last().unwrap().ell;
            assert_eq!(w, exact.shift(-((h - k + 1 - ell_now) as isize)));
            trace.records.extend(t.records);
        }
        assert!(trace.records.windows(2).all(|p| p[0].ell < p[1].ell));
        // Refine1: top ell coefficients of the full-length w
        let mut w1 = w0.shift((h - k - 1) as isize);
        let mut ell1 = ell;
        while h - k + 1 > ell1 {
            w1 = step(h, &v, &w1, 0, ell1, Orientation::Left);
            ell1 = (2 * ell1).min(h - k + 1);
            let drop = (h - k + 1 - ell1) as isize;
            assert_eq!(w1.shift(-drop), exact.shift(-drop));
        }
    }

    #[test]
    fn truncated_pow_diff_never_changes_the_result() {
        fn full_step<R: Ring>(
            h: usize,
            v: &DensePoly<R>,
            w: &DensePoly<R>,
            m: usize,
        ) -> DensePoly<R> {
            let diff = DensePoly::x_pow(v.ring().clone(), h - m).sub(&v.mul(w));
            w.shift(m as isize)
                .add(&w.mul(&diff).shift(2 * m as isize - h as isize))
        }
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let m = MatrixRing::new(GFp::new(127).unwrap(), 2).unwrap();
        for _ in 0..40 {
            let k = rng.random_range(2..7);
            let v = random_divisor(&m, &mut rng, k);
            let h = k + rng.random_range(2..30);
            let (mut w, mut ell) = shinv0(&v).unwrap();
            let mut w_full = w.clone();
            while h - k + 1 > ell {
                let mm = (h - k + 1 - ell).min(ell);
                w = step(k + ell + mm - 1, &v, &w, mm, ell, Orientation::Right);
                w_full = full_step(k + ell + mm - 1, &v, &w_full, mm);
                assert_eq!(w, w_full);
                ell += mm;
            }
        }
    }

    #[test]
    fn quotients_match_classical_division() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let m = MatrixRing::new(GFp::new(127).unwrap(), 3).unwrap();
        for _ in 0..40 {
            let k = rng.random_range(1..7);
            let v = random_divisor(&m, &mut rng, k);
            let len = rng.random_range(0..25);
            let u = DensePoly::new(m.clone(), (0..len).map(|_| m.sample(&mut rng)).collect());
            for o in [Orientation::Left, Orientation::Right] {
                let cfg = ShinvConfig::for_ring(&m);
                assert_eq!(
                    quo(&u, &v, o, &cfg).unwrap(),
                    classical_div(&u, &v, o).unwrap()
                );
            }
        }
        let one = DensePoly::one(m.clone());
        let mut c = random_divisor(&m, &mut rng, 3).into_coeffs();
        c[3] = m.one();
        let monic = DensePoly::new(m.clone(), c);
        let (q, r) = quo(&monic, &monic, Orientation::Right, &ShinvConfig::default()).unwrap();
        assert_eq!(q, one);
        assert!(r.is_zero());
    }

    #[test]
    fn trace_shapes_for_small_instance() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = MatrixRing::new(GFp::new(127).unwrap(), 3).unwrap();
        let v = random_divisor(&m, &mut rng, 5);
        let cfg = ShinvConfig::for_ring(&m);
        let (_, t1) =
            shinv_traced(&v, 13, &cfg.with_refine(Refine::One), Orientation::Right).unwrap();
        assert_eq!(t1.precs(), vec![9, 9, 9]);
        assert_eq!(t1.extra_steps, 1);
        let (_, t2) =
            shinv_traced(&v, 13, &cfg.with_refine(Refine::Two), Orientation::Right).unwrap();
        assert_eq!(t2.precs(), vec![4, 8, 9]);
        let ells: Vec<_> = t2.records.iter().map(|r| r.ell).collect();
        assert_eq!(ells, vec![4, 8, 9]);
        let (_, t3) =
            shinv_traced(&v, 13, &cfg.with_refine(Refine::Three), Orientation::Left).unwrap();
        let s: Vec<_> = t3.records.iter().map(|r| r.s).collect();
        assert_eq!(s, vec![2, 0, 0]);
    }
}
