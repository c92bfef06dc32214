use serde::{Deserialize, Serialize};

use super::{validate_algebra, Algebra};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;

/// Interchange form of an algebra: sparse structure constants, absent products are zero.
///
/// ```json
/// {"p": 2, "dim": 2, "basis": ["1", "x"], "unit": 0, "generators": [1],
///  "table": [[0, 0, [[0, 1]]], [0, 1, [[1, 1]]], [1, 0, [[1, 1]]]]}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub p: u32,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: usize,
    pub generators: Vec<usize>,
    pub table: Vec<(usize, usize, Vec<(usize, i64)>)>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &Algebra) -> Self {
        let d = a.dim();
        let mut table = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let terms: Vec<(usize, i64)> = a
                    .product(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (k, c as i64))
                    .collect();
                if !terms.is_empty() {
                    table.push((i, j, terms));
                }
            }
        }
        AlgebraJson {
            p: a.field().p(),
            dim: d,
            basis: a.basis_names().to_vec(),
            unit: 0,
            generators: a.generators().to_vec(),
            table,
        }
    }

    pub fn validate(&self) -> Result<Algebra> {
        let field = FieldSpec::new(self.p)?;
        let d = self.dim;
        if self.basis.len() != d {
            return Err(Error::MalformedTable(format!("{} basis names for dimension {d}", self.basis.len())));
        }
        if self.unit != 0 {
            return Err(Error::NoUnit(format!("unit must be basis element 0, got {}", self.unit)));
        }
        let mut table = vec![0u32; d * d * d];
        for (i, j, terms) in &self.table {
            if *i >= d || *j >= d {
                return Err(Error::MalformedTable(format!("product index ({i}, {j}) out of range")));
            }
            for &(k, c) in terms {
                if k >= d {
                    return Err(Error::MalformedTable(format!("term index {k} out of range")));
                }
                let slot = &mut table[(i * d + j) * d + k];
                *slot = field.add(*slot, field.from_i64(c));
            }
        }
        validate_algebra(field, self.basis.clone(), self.generators.clone(), table)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
