//! Coefficient convolution: schoolbook, Karatsuba and truncated products.
//!
//! Every routine keeps the left operand's coefficients on the left of each
//! product, so the results are correct over non-commutative rings.

use crate::par::{self, Execution};
use crate::ring::Ring;

pub const DEFAULT_KARATSUBA_THRESHOLD: usize = 16;

/// Karatsuba halves at least this long are multiplied concurrently.
const PARALLEL_MIN_LEN: usize = 128;

/// Knobs for polynomial multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MulOptions {
    /// Operands shorter than this use the schoolbook method.
    /// `usize::MAX` disables Karatsuba.
    pub karatsuba_threshold: usize,
    pub exec: Execution,
}

impl Default for MulOptions {
    fn default() -> Self {
        MulOptions {
            karatsuba_threshold: DEFAULT_KARATSUBA_THRESHOLD,
            exec: Execution::default(),
        }
    }
}

impl MulOptions {
    pub fn schoolbook() -> Self {
        MulOptions {
            karatsuba_threshold: usize::MAX,
            ..Self::default()
        }
    }

    pub fn sequential(self) -> Self {
        MulOptions {
            exec: Execution::Sequential,
            ..self
        }
    }
}

pub(crate) fn mul_slices<R: Ring>(
    ring: &R,
    a: &[R::Elem],
    b: &[R::Elem],
    opts: MulOptions,
) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    mul_acc(ring, a, b, &mut out, opts);
    out
}

/// `a * b mod x^n`.
pub(crate) fn mul_trunc<R: Ring>(
    ring: &R,
    a: &[R::Elem],
    b: &[R::Elem],
    n: usize,
    opts: MulOptions,
) -> Vec<R::Elem> {
    let a = &a[..a.len().min(n)];
    let b = &b[..b.len().min(n)];
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let out_len = (a.len() + b.len() - 1).min(n);
    if a.len().min(b.len()) < opts.karatsuba_threshold {
        let mut out = vec![ring.zero(); out_len];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().take(out_len - i).enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
            }
        }
        out
    } else {
        let mut out = mul_slices(ring, a, b, opts);
        out.truncate(out_len);
        out
    }
}

// out[i + j] += a[i] * b[j]
fn mul_acc<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem], out: &mut [R::Elem], opts: MulOptions) {
    let (na, nb) = (a.len(), b.len());
    if na == 0 || nb == 0 {
        return;
    }
    if na.min(nb) < opts.karatsuba_threshold.max(2) {
        schoolbook_acc(ring, a, b, out);
    } else if na > nb {
        for (c, chunk) in a.chunks(nb).enumerate() {
            mul_acc(ring, chunk, b, &mut out[c * nb..], opts);
        }
    } else if nb > na {
        for (c, chunk) in b.chunks(na).enumerate() {
            mul_acc(ring, a, chunk, &mut out[c * na..], opts);
        }
    } else {
        karatsuba_acc(ring, a, b, out, opts);
    }
}

fn schoolbook_acc<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem], out: &mut [R::Elem]) {
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
}

fn add_padded<R: Ring>(ring: &R, short: &[R::Elem], long: &[R::Elem]) -> Vec<R::Elem> {
    long.iter()
        .enumerate()
        .map(|(i, y)| match short.get(i) {
            Some(x) => ring.add(x, y),
            None => y.clone(),
        })
        .collect()
}

// Balanced operands: (a0 + a1 x^m)(b0 + b1 x^m) with the middle term
// (a0 + a1)(b0 + b1) - a0 b0 - a1 b1 = a0 b1 + a1 b0.
fn karatsuba_acc<R: Ring>(
    ring: &R,
    a: &[R::Elem],
    b: &[R::Elem],
    out: &mut [R::Elem],
    opts: MulOptions,
) {
    let n = a.len();
    let m = n / 2;
    let (a0, a1) = a.split_at(m);
    let (b0, b1) = b.split_at(m);
    let exec = if n >= PARALLEL_MIN_LEN {
        opts.exec
    } else {
        Execution::Sequential
    };
    let ((z0, z2), z1) = par::join(
        exec,
        || {
            par::join(
                exec,
                || mul_slices(ring, a0, b0, opts),
                || mul_slices(ring, a1, b1, opts),
            )
        },
        || {
            let sa = add_padded(ring, a0, a1);
            let sb = add_padded(ring, b0, b1);
            mul_slices(ring, &sa, &sb, opts)
        },
    );
    for (i, c) in z1.iter().enumerate() {
        let mut t = c.clone();
        if let Some(x) = z0.get(i) {
            t = ring.sub(&t, x);
        }
        if let Some(x) = z2.get(i) {
            t = ring.sub(&t, x);
        }
        out[m + i] = ring.add(&out[m + i], &t);
    }
    for (i, c) in z0.iter().enumerate() {
        out[i] = ring.add(&out[i], c);
    }
    for (i, c) in z2.iter().enumerate() {
        out[2 * m + i] = ring.add(&out[2 * m + i], c);
    }
}
