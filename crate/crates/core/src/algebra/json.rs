//! JSON encoding of integer polynomials and matrices.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::matrix::PolyMatrix;
use super::poly::IntPoly;
use crate::error::{Error, Result};

/// `{"min_deg": int, "coeffs": ["1", "-1", ...]}`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub min_deg: i64,
    pub coeffs: Vec<String>,
}

impl From<&IntPoly> for PolyJson {
    fn from(p: &IntPoly) -> Self {
        PolyJson {
            min_deg: p.min_degree(),
            coeffs: p.coeffs().iter().map(BigInt::to_string).collect(),
        }
    }
}

impl TryFrom<&PolyJson> for IntPoly {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::from_coeffs(j.min_deg, coeffs))
    }
}

pub fn poly_to_json(p: &IntPoly) -> serde_json::Value {
    serde_json::to_value(PolyJson::from(p)).expect("polynomial JSON is always serializable")
}

pub fn poly_from_json(v: &serde_json::Value) -> Result<IntPoly> {
    let j: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    IntPoly::try_from(&j)
}

/// Row-major nested arrays of polynomial objects.
pub fn matrix_to_json(m: &PolyMatrix) -> serde_json::Value {
    serde_json::Value::Array(
        (0..m.rows())
            .map(|i| {
                serde_json::Value::Array((0..m.cols()).map(|j| poly_to_json(m.get(i, j))).collect())
            })
            .collect(),
    )
}
