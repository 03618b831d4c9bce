//! Deterministic division sweep that counts base-field multiplications.
//!
//! For each `N` the instance is a divisor of degree `N` with a unit leading
//! coefficient and a dividend of degree `2N - 1`, so every method computes an
//! `N`-term quotient (`h - k = N` for the shifted inverse). Instances depend
//! only on `(seed, N, repetition)`, never on the method or on scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::poly::{classical_div, DensePoly, Orientation};
use crate::ring::{GFp, MatrixRing, Sample};
use crate::shinv::{quo_traced, Refine, ShinvConfig};

pub const CSV_HEADER: &str = "method,N,iterations,mulCount,nanos";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BenchMethod {
    Classical,
    Refine(Refine),
}

impl BenchMethod {
    pub const ALL: [BenchMethod; 4] = [
        BenchMethod::Classical,
        BenchMethod::Refine(Refine::One),
        BenchMethod::Refine(Refine::Two),
        BenchMethod::Refine(Refine::Three),
    ];
}

impl fmt::Display for BenchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchMethod::Classical => f.write_str("classical"),
            BenchMethod::Refine(r) => write!(f, "refine{}", r.index()),
        }
    }
}

impl FromStr for BenchMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(BenchMethod::Classical),
            "refine1" => Ok(BenchMethod::Refine(Refine::One)),
            "refine2" => Ok(BenchMethod::Refine(Refine::Two)),
            "refine3" => Ok(BenchMethod::Refine(Refine::Three)),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        }
    }
}

/// Coefficient ring of the sweep: `gfp:P` or `matrix:N:P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BenchRing {
    Gfp { p: u32 },
    Matrix { n: usize, p: u32 },
}

impl fmt::Display for BenchRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchRing::Gfp { p } => write!(f, "gfp:{p}"),
            BenchRing::Matrix { n, p } => write!(f, "matrix:{n}:{p}"),
        }
    }
}

impl FromStr for BenchRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad =
            || Error::InvalidArgument(format!("bad ring {s:?}, expected gfp:P or matrix:N:P"));
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["gfp", p] => Ok(BenchRing::Gfp {
                p: p.parse().map_err(|_| bad())?,
            }),
            ["matrix", n, p] => Ok(BenchRing::Matrix {
                n: n.parse().map_err(|_| bad())?,
                p: p.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub degrees: Vec<usize>,
    pub ring: BenchRing,
    pub repeat: usize,
    pub seed: u64,
    pub methods: Vec<BenchMethod>,
    /// Runs independent instances on the rayon pool when parallel.
    pub exec: Execution,
    /// When false every `nanos` is reported as 0, making the CSV reproducible.
    pub timing: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            degrees: vec![64, 128, 256, 512],
            ring: BenchRing::Gfp { p: 127 },
            repeat: 1,
            seed: 1,
            methods: BenchMethod::ALL.to_vec(),
            exec: Execution::default(),
            timing: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub method: BenchMethod,
    pub n: usize,
    pub iterations: usize,
    pub mul_count: u64,
    pub nanos: u128,
}

impl BenchRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.method, self.n, self.iterations, self.mul_count, self.nanos
        )
    }
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    out
}

/// Rows in the order degree, repetition, method.
pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    if cfg.degrees.contains(&0) {
        return Err(Error::InvalidArgument("degrees must be positive".into()));
    }
    match cfg.ring {
        BenchRing::Gfp { p } => run_with(&GFp::new(p)?, cfg),
        BenchRing::Matrix { n, p } => run_with(&MatrixRing::new(GFp::new(p)?, n)?, cfg),
    }
}

fn run_with<R: Sample>(ring: &R, cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut tasks = Vec::new();
    for &n in &cfg.degrees {
        for rep in 0..cfg.repeat {
            for &method in &cfg.methods {
                tasks.push((n, rep, method));
            }
        }
    }
    par::map(cfg.exec, &tasks, |&(n, rep, method)| {
        run_one(ring, cfg, n, rep, method)
    })
    .into_iter()
    .collect()
}

/// The instance for `(seed, n, rep)`.
pub fn instance<R: Sample>(
    ring: &R,
    seed: u64,
    n: usize,
    rep: usize,
) -> (DensePoly<R>, DensePoly<R>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 24) ^ rep as u64);
    let mut v: Vec<_> = (0..n).map(|_| ring.sample(&mut rng)).collect();
    v.push(ring.sample_unit(&mut rng));
    let mut u: Vec<_> = (0..2 * n - 1).map(|_| ring.sample(&mut rng)).collect();
    u.push(ring.sample_unit(&mut rng));
    (
        DensePoly::new(ring.clone(), u),
        DensePoly::new(ring.clone(), v),
    )
}

fn run_one<R: Sample>(
    ring: &R,
    cfg: &BenchConfig,
    n: usize,
    rep: usize,
    method: BenchMethod,
) -> Result<BenchRow> {
    let ring = ring.with_fresh_counter();
    let (u, v) = instance(&ring, cfg.seed, n, rep);
    let start = Instant::now();
    let iterations = match method {
        BenchMethod::Classical => {
            classical_div(&u, &v, Orientation::Right)?;
            n
        }
        BenchMethod::Refine(refine) => {
            let sc = ShinvConfig::for_ring(&ring).with_refine(refine);
            let (_, _, trace) = quo_traced(&u, &v, Orientation::Right, &sc)?;
            trace.iterations()
        }
    };
    let nanos = if cfg.timing {
        start.elapsed().as_nanos()
    } else {
        0
    };
    Ok(BenchRow {
        method,
        n,
        iterations,
        mul_count: ring.mul_count(),
        nanos,
    })
}
