//! JSON input document describing a Coxeter system.
//!
//! ```json
//! { "rank": 3, "cyclic": [3, 3, "inf"] }
//! { "rank": 3, "matrix": [[1, 3, 2], [3, 1, 3], [2, 3, 1]] }
//! ```

use serde::{Deserialize, Serialize};

use super::matrix::{CoxeterMatrix, Label};
use crate::error::{CoxeterError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<Label>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<Vec<Label>>,
}

impl SystemDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CoxeterError::Parse(e.to_string()))
    }

    pub fn from_matrix(matrix: &CoxeterMatrix) -> Self {
        SystemDocument {
            rank: matrix.rank(),
            matrix: Some(matrix.rows().to_vec()),
            cyclic: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialises")
    }

    pub fn to_matrix(&self) -> Result<CoxeterMatrix> {
        let matrix = match (&self.matrix, &self.cyclic) {
            (Some(rows), None) => CoxeterMatrix::new(rows.clone())?,
            (None, Some(labels)) => CoxeterMatrix::cyclic(labels)?,
            (Some(_), Some(_)) => {
                return Err(CoxeterError::Parse(
                    "give either `matrix` or `cyclic`, not both".into(),
                ))
            }
            (None, None) => {
                return Err(CoxeterError::Parse("missing `matrix` or `cyclic`".into()))
            }
        };
        if matrix.rank() != self.rank {
            return Err(CoxeterError::Parse(format!(
                "rank is {} but the system has {} generators",
                self.rank,
                matrix.rank()
            )));
        }
        Ok(matrix)
    }
}
