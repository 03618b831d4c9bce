//! JSON polynomial documents.
//!
//! ```json
//! {
//!   "ring": { "kind": "matrix", "p": 127, "n": 3 },
//!   "polys": { "u": [ [[1,0,0],[0,1,0],[0,0,1]], ... ], "v": [ ... ] }
//! }
//! ```
//!
//! Polynomials are little-endian lists of coefficients in the main variable.
//! A coefficient is an integer (`gfp`), a row-major list of rows (`matrix`)
//! or a little-endian list of integers in the coefficient variable
//! (`polyring`, `lodo`). All integers lie in `[0, p)`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RingDescriptor {
    /// `GF(p)[x]`.
    Gfp { p: u32 },
    /// `(GF(p)^(n×n))[x]`.
    Matrix { p: u32, n: usize },
    /// `GF(p)[coeff_var][var]`.
    Polyring {
        p: u32,
        var: String,
        coeff_var: String,
    },
    /// `GF(p)[var][op; id, d/dvar]`.
    Lodo { p: u32, var: String, op: String },
}

impl RingDescriptor {
    pub fn modulus(&self) -> u32 {
        match self {
            RingDescriptor::Gfp { p }
            | RingDescriptor::Matrix { p, .. }
            | RingDescriptor::Polyring { p, .. }
            | RingDescriptor::Lodo { p, .. } => *p,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Scalar(u64),
    Poly(Vec<u64>),
    Matrix(Vec<Vec<u64>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceRecord {
    pub ell: usize,
    pub prec: usize,
    pub m: usize,
    pub s: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDoc {
    #[serde(default)]
    pub records: Vec<TraceRecord>,
    #[serde(default)]
    pub extra_steps: usize,
    /// Residual degrees of a skew left shifted inverse (`null` for zero).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub residual_degrees: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDocument {
    pub ring: RingDescriptor,
    pub polys: BTreeMap<String, Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceDoc>,
}

impl PolyDocument {
    pub fn new(ring: RingDescriptor) -> Self {
        PolyDocument {
            ring,
            polys: BTreeMap::new(),
            verified: None,
            trace: None,
        }
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let doc: PolyDocument =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn poly(&self, name: &str) -> CliResult<&[Coeff]> {
        self.polys
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| CliError::Parse(format!("missing polynomial {name:?}")))
    }

    /// Checks ranges and shapes against the ring descriptor.
    pub fn validate(&self) -> CliResult<()> {
        let p = u64::from(self.ring.modulus());
        if !(2..1 << 31).contains(&p) {
            return Err(CliError::Parse(format!("modulus {p} out of range")));
        }
        for (name, coeffs) in &self.polys {
            for (i, c) in coeffs.iter().enumerate() {
                check_coeff(&self.ring, c, p)
                    .map_err(|m| CliError::Parse(format!("{name}[{i}]: {m}")))?;
            }
        }
        Ok(())
    }
}

fn check_coeff(ring: &RingDescriptor, c: &Coeff, p: u64) -> Result<(), String> {
    let in_range = |v: &u64| {
        if *v < p {
            Ok(())
        } else {
            Err(format!("{v} not in [0, {p})"))
        }
    };
    match (ring, c) {
        (RingDescriptor::Gfp { .. }, Coeff::Scalar(v)) => in_range(v),
        (RingDescriptor::Polyring { .. } | RingDescriptor::Lodo { .. }, Coeff::Poly(vs)) => {
            vs.iter().try_for_each(in_range)
        }
        (RingDescriptor::Matrix { n, .. }, Coeff::Matrix(rows)) => {
            if *n == 0 {
                return Err("matrix dimension must be positive".into());
            }
            if rows.len() != *n || rows.iter().any(|r| r.len() != *n) {
                return Err(format!("expected a {n}x{n} matrix"));
            }
            rows.iter().flatten().try_for_each(in_range)
        }
        _ => Err("coefficient shape does not match the ring".into()),
    }
}
