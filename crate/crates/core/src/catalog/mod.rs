//! The example algebras: dihedral and semidihedral families, `k[x,y]/(x^2,y^2)`,
//! the extraspecial group algebra of order `p^3`, and string modules.

mod extraspecial;
mod rewrite;
mod string;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use extraspecial::{extraspecial_group_algebra, HeisenbergGroup};
pub use rewrite::MonomialBasis;
pub use string::{string_module, Letter, StringWord};

use crate::algebra::{validate_algebra, Algebra};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;

/// A catalog algebra together with its distinguished elements.
#[derive(Clone, Debug)]
pub struct CatalogAlgebra {
    pub name: String,
    pub algebra: Arc<Algebra>,
    pub elements: Vec<(String, Vec<u32>)>,
}

impl CatalogAlgebra {
    /// A named element, or a basis element by its name.
    pub fn element(&self, name: &str) -> Result<Vec<u32>> {
        if let Some((_, v)) = self.elements.iter().find(|(n, _)| n == name) {
            return Ok(v.clone());
        }
        self.algebra
            .index_of(name)
            .map(|i| self.algebra.basis_element(i))
            .ok_or_else(|| Error::BadParameter(format!("unknown element {name:?} in {}", self.name)))
    }

    pub fn element_names(&self) -> Vec<&str> {
        self.elements.iter().map(|(n, _)| n.as_str()).collect()
    }
}

fn field(p: u32) -> Result<FieldSpec> {
    FieldSpec::new(p)
}

fn from_monomials(name: String, f: FieldSpec, basis: &MonomialBasis) -> Result<CatalogAlgebra> {
    let table = basis.table()?;
    let gens = vec![basis.index("x").expect("x"), basis.index("y").expect("y")];
    let algebra = Arc::new(validate_algebra(f, basis.names(), gens.clone(), table)?);
    let elements = vec![
        ("x".to_string(), algebra.basis_element(gens[0])),
        ("y".to_string(), algebra.basis_element(gens[1])),
    ];
    Ok(CatalogAlgebra { name, algebra, elements })
}

/// `k<x,y>/(x^2, y^2, (xy)^q - (yx)^q)`, dimension `4q`.
pub fn dihedral_algebra(q: usize, p: u32) -> Result<CatalogAlgebra> {
    if q < 2 {
        return Err(Error::BadParameter(format!("dihedral algebras need q >= 2, got {q}")));
    }
    let f = field(p)?;
    let basis = MonomialBasis::new(f, q, None);
    from_monomials(format!("dihedral:q={q}:p={p}"), f, &basis)
}

/// `k<x,y>/(x^2, y^2 - (xy)^(q-1) x - delta (yx)^q, (xy)^q - (yx)^q)`, dimension `4q`.
pub fn semidihedral_algebra(q: usize, delta: u32, p: u32) -> Result<CatalogAlgebra> {
    if q < 2 {
        return Err(Error::BadParameter(format!("semidihedral algebras need q >= 2, got {q}")));
    }
    let f = field(p)?;
    let basis = MonomialBasis::new(f, q, Some(delta % p));
    from_monomials(format!("semidihedral:q={q}:p={p}:delta={delta}"), f, &basis)
}

/// `k[x,y]/(x^2, y^2)` with basis `1, x, y, xy`.
pub fn klein_algebra(p: u32) -> Result<CatalogAlgebra> {
    let f = field(p)?;
    let names: Vec<String> = ["1", "x", "y", "xy"].iter().map(|s| s.to_string()).collect();
    let mut table = vec![0u32; 64];
    let mut set = |i: usize, j: usize, k: usize| table[(i * 4 + j) * 4 + k] = 1;
    for i in 0..4 {
        set(0, i, i);
        set(i, 0, i);
    }
    set(1, 2, 3);
    set(2, 1, 3);
    let algebra = Arc::new(validate_algebra(f, names, vec![1, 2], table)?);
    let elements = vec![("x".to_string(), algebra.basis_element(1)), ("y".to_string(), algebra.basis_element(2))];
    Ok(CatalogAlgebra { name: format!("klein:p={p}"), algebra, elements })
}

/// Parse a catalog name such as `dihedral:q=2:p=2` or `extraspecial:p=3`.
pub fn catalog_by_name(spec: &str) -> Result<CatalogAlgebra> {
    let mut parts = spec.split(':');
    let family = parts.next().unwrap_or_default();
    let mut params = BTreeMap::new();
    for part in parts {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value in {spec:?}, got {part:?}")))?;
        let v: u32 = v.parse().map_err(|_| Error::Parse(format!("{k} must be a nonnegative integer in {spec:?}")))?;
        params.insert(k.to_string(), v);
    }
    let get = |k: &str| params.get(k).copied().ok_or_else(|| Error::Parse(format!("{spec:?} is missing {k}=..")));
    let allowed: &[&str] = match family {
        "dihedral" => &["q", "p"],
        "semidihedral" => &["q", "p", "delta"],
        "klein" => &["p"],
        "extraspecial" => &["p"],
        _ => return Err(Error::Parse(format!("unknown algebra family {family:?}"))),
    };
    if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::Parse(format!("unexpected parameter {k} in {spec:?}")));
    }
    match family {
        "dihedral" => dihedral_algebra(get("q")? as usize, get("p")?),
        "semidihedral" => semidihedral_algebra(get("q")? as usize, params.get("delta").copied().unwrap_or(1), get("p")?),
        "klein" => klein_algebra(get("p")?),
        _ => extraspecial_group_algebra(get("p")?),
    }
}
