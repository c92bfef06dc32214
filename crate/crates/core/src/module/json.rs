use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Module;
use crate::algebra::{Algebra, AlgebraJson};
use crate::error::{Error, Result};
use crate::exactla::Mat;

/// Interchange form of a module. `algebra` is a catalog name or an inline algebra.
/// `action` holds either one matrix per basis element or one per generator.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraJson),
}

impl ModuleJson {
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_module(name: Option<&str>, m: &Module) -> Self {
        let algebra = match name {
            Some(n) => AlgebraRef::Name(n.to_string()),
            None => AlgebraRef::Inline(AlgebraJson::from_algebra(m.algebra())),
        };
        let action = m
            .actions()
            .iter()
            .map(|a| a.row_vecs().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect())
            .collect();
        ModuleJson { algebra, dim: m.dim(), action }
    }

    /// Build the module over an already resolved algebra.
    pub fn into_module(&self, algebra: Arc<Algebra>) -> Result<Module> {
        let f = algebra.field();
        let mats = self
            .action
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                    return Err(Error::InvalidModule(format!("matrix {i} is not {0}x{0}", self.dim)));
                }
                Ok(if self.dim == 0 { Mat::zeros(f, 0, 0) } else { Mat::from_rows(f, rows) })
            })
            .collect::<Result<Vec<_>>>()?;
        if mats.len() == algebra.dim() {
            Module::new(algebra, mats)
        } else if mats.len() == algebra.generators().len() {
            Module::from_generator_action(algebra, mats)
        } else {
            Err(Error::InvalidModule(format!(
                "{} matrices given; expected {} (basis) or {} (generators)",
                mats.len(),
                algebra.dim(),
                algebra.generators().len()
            )))
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
