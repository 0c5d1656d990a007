//! JSON matrix literal: `{"n": 2, "re": [[..], [..]], "im": [[..], [..]]}`,
//! with `im` optional.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::hermitian::HermitianMatrix;
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixLiteral {
    pub n: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl MatrixLiteral {
    pub fn to_matrix(&self) -> Result<Matrix> {
        let check = |rows: &Vec<Vec<f64>>, part: &str| -> Result<()> {
            if rows.len() != self.n || rows.iter().any(|r| r.len() != self.n) {
                return Err(Error::Literal(format!("{part} part is not {n}x{n}", n = self.n)));
            }
            Ok(())
        };
        check(&self.re, "re")?;
        if let Some(im) = &self.im {
            check(im, "im")?;
        }
        Ok(Matrix::from_fn(self.n, self.n, |i, j| {
            let im = self.im.as_ref().map_or(0.0, |m| m[i][j]);
            Complex64::new(self.re[i][j], im)
        }))
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let n = m.rows();
        let re = (0..n).map(|i| (0..m.cols()).map(|j| m[(i, j)].re).collect()).collect();
        let has_im = m.as_slice().iter().any(|z| z.im != 0.0);
        let im = has_im.then(|| (0..n).map(|i| (0..m.cols()).map(|j| m[(i, j)].im).collect()).collect());
        Self { n, re, im }
    }

    pub fn to_hermitian(&self) -> Result<HermitianMatrix> {
        HermitianMatrix::new(self.to_matrix()?)
    }

    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Literal(e.to_string()))
    }
}

impl From<&HermitianMatrix> for MatrixLiteral {
    fn from(h: &HermitianMatrix) -> Self {
        Self::from_matrix(h.as_matrix())
    }
}
