//! Exact division of univariate polynomials whose coefficients need not commute.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`] – exact coefficient rings (prime fields, square matrices,
//!   commutative polynomial rings) behind the [`Ring`] contract.
//! * [`poly`] – dense polynomials `R[x]` with a central variable, whole shifts,
//!   Karatsuba products and classical (pseudo)division in either orientation.
//! * [`shinv`] – the whole shifted inverse `x^h quo v` computed by a
//!   Newton–Schulz style refinement, and quotients derived from it.
//! * [`skew`] – Ore polynomials `R[x; σ, δ]`, linear differential operators and
//!   right quotients from the left whole shifted inverse.
//! * [`bench`] – a deterministic operation-counting benchmark sweep.
//!
//! Data-parallel work (large Karatsuba products, batches of independent
//! instances) goes through [`par`], which uses rayon when the `parallel`
//! feature is enabled and runs sequentially otherwise.
//!
//! ```
//! use ncquo::{classical_div, quo, DensePoly, GFp, MatrixRing, Orientation, Ring, ShinvConfig};
//!
//! # fn main() -> ncquo::Result<()> {
//! let f = GFp::new(127)?;
//! let m = MatrixRing::new(f.clone(), 2)?;
//! let c = |rows: [[i64; 2]; 2]| m.from_rows(rows.map(|r| r.map(|v| f.elem(v)).to_vec()).to_vec());
//! let v = DensePoly::new(m.clone(), vec![c([[1, 2], [3, 4]])?, c([[2, 0], [1, 1]])?]);
//! let u = DensePoly::new(m.clone(), vec![c([[5, 0], [0, 5]])?, m.one(), c([[0, 1], [1, 0]])?]);
//!
//! let (q, r) = quo(&u, &v, Orientation::Right, &ShinvConfig::for_ring(&m))?;
//! assert_eq!((q, r), classical_div(&u, &v, Orientation::Right)?);
//! # Ok(())
//! # }
//! ```

pub mod bench;
mod error;
pub mod par;
pub mod poly;
pub mod ring;
pub mod shinv;
pub mod skew;

pub use error::{Error, Result};
pub use par::Execution;
pub use poly::{classical_div, pseudo_div, DensePoly, MulOptions, Orientation};
pub use ring::{Fp, GFp, Matrix, MatrixRing, OpCounter, PolyRing, Ring, Sample};
pub use shinv::{quo, shinv, IterationRecord, IterationTrace, Refine, ShinvConfig};
pub use skew::{
    lshinv, make_lodo, rquo_via_lshinv, rshinv, skew_classical_div, OrePair, Sigma, SkewPoly,
    SkewRing,
};
