//! The `divide`, `shinv` and `bench` commands. Every quotient or shifted
//! inverse is checked against its defining identity before it is returned;
//! a failed check becomes [`CliError::Residual`].

use clap::ValueEnum;
use ncquo::bench::{self, BenchConfig};
use ncquo::shinv::{quo_traced, shinv_traced};
use ncquo::skew::{lshinv_traced, rquo_via_lshinv, rshinv, skew_classical_div};
use ncquo::{
    classical_div, make_lodo, pseudo_div, DensePoly, GFp, IterationTrace, MatrixRing, Orientation,
    PolyRing, Refine, Ring, ShinvConfig, SkewPoly,
};

use crate::codec::Codec;
use crate::document::{PolyDocument, RingDescriptor, TraceDoc, TraceRecord};
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    /// `u = v*q + r`
    Left,
    /// `u = q*v + r`
    Right,
}

impl From<Side> for Orientation {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => Orientation::Left,
            Side::Right => Orientation::Right,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Classical,
    /// Through the whole shifted inverse.
    Fast,
    Pseudo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivideArgs {
    pub side: Side,
    pub method: Method,
    pub refine: Refine,
    pub trace: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShinvArgs {
    pub h: usize,
    pub side: Side,
    pub refine: Refine,
    pub trace: bool,
}

pub fn divide(doc: &PolyDocument, args: &DivideArgs) -> CliResult<PolyDocument> {
    match &doc.ring {
        RingDescriptor::Gfp { p } => divide_dense(&GFp::new(*p)?, doc, args),
        RingDescriptor::Matrix { p, n } => {
            divide_dense(&MatrixRing::new(GFp::new(*p)?, *n)?, doc, args)
        }
        RingDescriptor::Polyring { p, .. } => {
            divide_dense(&PolyRing::new(GFp::new(*p)?), doc, args)
        }
        RingDescriptor::Lodo { p, var, op } => divide_lodo(*p, var, op, doc, args),
    }
}

pub fn shinv(doc: &PolyDocument, args: &ShinvArgs) -> CliResult<PolyDocument> {
    match &doc.ring {
        RingDescriptor::Gfp { p } => shinv_dense(&GFp::new(*p)?, doc, args),
        RingDescriptor::Matrix { p, n } => {
            shinv_dense(&MatrixRing::new(GFp::new(*p)?, *n)?, doc, args)
        }
        RingDescriptor::Polyring { p, .. } => shinv_dense(&PolyRing::new(GFp::new(*p)?), doc, args),
        RingDescriptor::Lodo { p, var, op } => shinv_lodo(*p, var, op, doc, args),
    }
}

pub fn bench(cfg: &BenchConfig) -> CliResult<String> {
    Ok(bench::to_csv(&bench::run(cfg)?))
}

fn trace_doc(t: &IterationTrace) -> TraceDoc {
    TraceDoc {
        records: t
            .records
            .iter()
            .map(|r| TraceRecord {
                ell: r.ell,
                prec: r.prec,
                m: r.m,
                s: r.s,
            })
            .collect(),
        extra_steps: t.extra_steps,
        residual_degrees: Vec::new(),
    }
}

fn below(r: Option<usize>, k: usize) -> bool {
    r.is_none_or(|d| d < k)
}

fn divide_dense<C: Codec>(
    codec: &C,
    doc: &PolyDocument,
    args: &DivideArgs,
) -> CliResult<PolyDocument> {
    let ring = codec.ring();
    let u = codec.decode_poly(doc.poly("u")?)?;
    let v = codec.decode_poly(doc.poly("v")?)?;
    let o = Orientation::from(args.side);
    let mut trace = None;
    let mut lhs = u.clone();
    let (q, r) = match args.method {
        Method::Classical => classical_div(&u, &v, o)?,
        Method::Fast => {
            let cfg = ShinvConfig::for_ring(ring).with_refine(args.refine);
            let (q, r, t) = quo_traced(&u, &v, o, &cfg)?;
            trace = args.trace.then(|| trace_doc(&t));
            (q, r)
        }
        Method::Pseudo => {
            let (q, r) = pseudo_div(&u, &v, o)?;
            let (h, k) = (u.degree(), v.degree().unwrap_or(0));
            if let Some(h) = h.filter(|&h| h >= k) {
                let m = ring.pow(
                    v.leading_coeff().expect("nonzero divisor"),
                    (h - k + 1) as u64,
                );
                lhs = match o {
                    Orientation::Left => u.scale_left(&m),
                    Orientation::Right => u.scale_right(&m),
                };
            }
            (q, r)
        }
    };
    let k = v.degree().ok_or(ncquo::Error::ZeroDivision)?;
    let rhs = o.mul_poly(&q, &v).add(&r);
    if lhs != rhs || !below(r.degree(), k) {
        return Err(CliError::Residual(
            "u differs from the recombined q, v and r".into(),
        ));
    }
    let mut out = PolyDocument::new(doc.ring.clone());
    out.polys
        .insert("q".into(), codec.encode_coeffs(q.coeffs()));
    out.polys
        .insert("r".into(), codec.encode_coeffs(r.coeffs()));
    out.verified = Some(true);
    out.trace = trace;
    Ok(out)
}

fn shinv_dense<C: Codec>(
    codec: &C,
    doc: &PolyDocument,
    args: &ShinvArgs,
) -> CliResult<PolyDocument> {
    let v = codec.decode_poly(doc.poly("v")?)?;
    let cfg = ShinvConfig::for_ring(codec.ring()).with_refine(args.refine);
    let (w, t) = shinv_traced(&v, args.h, &cfg, args.side.into())?;
    let k = v.degree().ok_or(ncquo::Error::ZeroDivision)?;
    let xh = DensePoly::x_pow(codec.ring().clone(), args.h);
    // x^h quo v is the same on both sides, so check both residuals
    for o in [Orientation::Left, Orientation::Right] {
        if !below(xh.sub(&o.mul_poly(&v, &w)).degree(), k) {
            return Err(CliError::Residual(format!(
                "x^{} - v*shinv is too large",
                args.h
            )));
        }
    }
    let mut out = PolyDocument::new(doc.ring.clone());
    out.polys
        .insert("shinv".into(), codec.encode_coeffs(w.coeffs()));
    out.verified = Some(true);
    out.trace = args.trace.then(|| trace_doc(&t));
    Ok(out)
}

type LodoPoly = SkewPoly<PolyRing<GFp>>;

fn divide_lodo(
    p: u32,
    var: &str,
    op: &str,
    doc: &PolyDocument,
    args: &DivideArgs,
) -> CliResult<PolyDocument> {
    let l = make_lodo(p, var, op)?;
    let codec = l.ring().clone();
    let u: LodoPoly = l.poly(codec.decode_coeffs(doc.poly("u")?)?);
    let v: LodoPoly = l.poly(codec.decode_coeffs(doc.poly("v")?)?);
    let o = Orientation::from(args.side);
    let (q, r) = match (args.method, o) {
        (Method::Classical, _) => skew_classical_div(&u, &v, o)?,
        (Method::Fast, Orientation::Right) => rquo_via_lshinv(&u, &v)?,
        (Method::Fast, Orientation::Left) => {
            return Err(CliError::Usage(
                "differential operators only have a fast right quotient".into(),
            ))
        }
        (Method::Pseudo, _) => {
            return Err(CliError::Usage(
                "pseudodivision is only defined for commuting variables".into(),
            ))
        }
    };
    let k = v.degree().ok_or(ncquo::Error::ZeroDivision)?;
    let rhs = match o {
        Orientation::Left => v.mul(&q),
        Orientation::Right => q.mul(&v),
    }
    .add(&r);
    if rhs != u || !below(r.degree(), k) {
        return Err(CliError::Residual(
            "u differs from the recombined q, v and r".into(),
        ));
    }
    let mut out = PolyDocument::new(doc.ring.clone());
    out.polys
        .insert("q".into(), codec.encode_coeffs(q.coeffs()));
    out.polys
        .insert("r".into(), codec.encode_coeffs(r.coeffs()));
    out.verified = Some(true);
    Ok(out)
}

fn shinv_lodo(
    p: u32,
    var: &str,
    op: &str,
    doc: &PolyDocument,
    args: &ShinvArgs,
) -> CliResult<PolyDocument> {
    let l = make_lodo(p, var, op)?;
    let codec = l.ring().clone();
    let v: LodoPoly = l.poly(codec.decode_coeffs(doc.poly("v")?)?);
    let k = v.degree().ok_or(ncquo::Error::ZeroDivision)?;
    let xh = l.x_pow(args.h);
    let (w, trace, residual) = match args.side {
        Side::Left => {
            let (w, t) = lshinv_traced(&v, args.h)?;
            let trace = TraceDoc {
                residual_degrees: t.residual_degrees,
                ..TraceDoc::default()
            };
            let residual = xh.sub(&v.mul(&w));
            (w, trace, residual)
        }
        Side::Right => {
            let w = rshinv(&v, args.h)?;
            let residual = xh.sub(&w.mul(&v));
            (w, TraceDoc::default(), residual)
        }
    };
    if !below(residual.degree(), k) {
        return Err(CliError::Residual(format!(
            "x^{} - v*shinv is too large",
            args.h
        )));
    }
    let mut out = PolyDocument::new(doc.ring.clone());
    out.polys
        .insert("shinv".into(), codec.encode_coeffs(w.coeffs()));
    out.verified = Some(true);
    out.trace = args.trace.then_some(trace);
    Ok(out)
}
