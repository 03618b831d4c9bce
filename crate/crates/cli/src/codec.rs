//! Conversion between document coefficients and ring elements.

use ncquo::{DensePoly, Fp, GFp, Matrix, MatrixRing, PolyRing, Ring};

use crate::document::Coeff;
use crate::error::{CliError, CliResult};

pub trait Codec {
    type R: Ring;

    fn ring(&self) -> &Self::R;
    fn decode(&self, c: &Coeff) -> CliResult<<Self::R as Ring>::Elem>;
    fn encode(&self, e: &<Self::R as Ring>::Elem) -> Coeff;

    fn decode_coeffs(&self, cs: &[Coeff]) -> CliResult<Vec<<Self::R as Ring>::Elem>> {
        cs.iter().map(|c| self.decode(c)).collect()
    }

    fn decode_poly(&self, cs: &[Coeff]) -> CliResult<DensePoly<Self::R>> {
        Ok(DensePoly::new(self.ring().clone(), self.decode_coeffs(cs)?))
    }

    fn encode_coeffs(&self, es: &[<Self::R as Ring>::Elem]) -> Vec<Coeff> {
        es.iter().map(|e| self.encode(e)).collect()
    }
}

fn shape_error() -> CliError {
    CliError::Parse("coefficient shape does not match the ring".into())
}

fn scalar(f: &GFp, v: u64) -> CliResult<Fp> {
    f.try_elem(v)
        .map_err(|_| CliError::Parse(format!("{v} not in [0, {})", f.modulus())))
}

impl Codec for GFp {
    type R = GFp;

    fn ring(&self) -> &GFp {
        self
    }

    fn decode(&self, c: &Coeff) -> CliResult<Fp> {
        match c {
            Coeff::Scalar(v) => scalar(self, *v),
            _ => Err(shape_error()),
        }
    }

    fn encode(&self, e: &Fp) -> Coeff {
        Coeff::Scalar(u64::from(e.value()))
    }
}

impl Codec for MatrixRing<GFp> {
    type R = MatrixRing<GFp>;

    fn ring(&self) -> &Self {
        self
    }

    fn decode(&self, c: &Coeff) -> CliResult<Matrix<Fp>> {
        let Coeff::Matrix(rows) = c else {
            return Err(shape_error());
        };
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| scalar(self.base(), v)).collect())
            .collect::<CliResult<Vec<Vec<Fp>>>>()?;
        self.from_rows(rows).map_err(|_| shape_error())
    }

    fn encode(&self, e: &Matrix<Fp>) -> Coeff {
        Coeff::Matrix(
            e.rows()
                .map(|r| r.iter().map(|x| u64::from(x.value())).collect())
                .collect(),
        )
    }
}

impl Codec for PolyRing<GFp> {
    type R = PolyRing<GFp>;

    fn ring(&self) -> &Self {
        self
    }

    fn decode(&self, c: &Coeff) -> CliResult<DensePoly<GFp>> {
        let Coeff::Poly(vs) = c else {
            return Err(shape_error());
        };
        let cs = vs
            .iter()
            .map(|&v| scalar(self.base(), v))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(self.poly(cs))
    }

    fn encode(&self, e: &DensePoly<GFp>) -> Coeff {
        Coeff::Poly(e.coeffs().iter().map(|x| u64::from(x.value())).collect())
    }
}
