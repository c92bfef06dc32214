//! Finite-dimensional local algebras given by structure constants.
//!
//! Basis element 0 is the unit and elements `1..d` span the radical; tables
//! not in that shape are rejected.

mod json;
mod subalgebra;
mod symmetric;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

pub use json::AlgebraJson;
pub use subalgebra::{analyze_subalgebra, SubalgebraData};
pub use symmetric::{find_symmetric_form, SymmetricForm};

use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Mat, Subspace};

/// A certified unital, associative, local algebra with `b_0 = 1`.
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    basis_names: Vec<String>,
    generators: Vec<usize>,
    /// `table[(i*d + j)*d + k]` is the coefficient of `b_k` in `b_i b_j`.
    table: Vec<u32>,
    right_mult: Vec<Mat>,
    left_mult: Vec<Mat>,
    loewy_length: usize,
    warnings: Vec<String>,
    fingerprint: u64,
    opposite: OnceLock<Arc<Algebra>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.field.p())
            .field("dim", &self.dim)
            .field("basis", &self.basis_names)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.field == other.field
            && self.dim == other.dim
            && self.table == other.table
    }
}
impl Eq for Algebra {}

/// Validate a structure-constant table and certify the standing hypotheses.
///
/// `table` has length `d^3` with `table[(i*d + j)*d + k] = c_{ij}^k`.
pub fn validate_algebra(
    field: FieldSpec,
    basis_names: Vec<String>,
    generators: Vec<usize>,
    table: Vec<u32>,
) -> Result<Algebra> {
    let d = basis_names.len();
    if d == 0 {
        return Err(Error::MalformedTable("dimension must be at least 1".into()));
    }
    if table.len() != d * d * d {
        return Err(Error::MalformedTable(format!("expected {} coefficients, got {}", d * d * d, table.len())));
    }
    if let Some(&g) = generators.iter().find(|&&g| g >= d) {
        return Err(Error::MalformedTable(format!("generator index {g} out of range")));
    }
    if table.iter().any(|&c| c >= field.p()) {
        return Err(Error::MalformedTable("coefficient not reduced mod p".into()));
    }
    let prod = |i: usize, j: usize| &table[(i * d + j) * d..(i * d + j + 1) * d];

    for j in 0..d {
        for (side, v) in [("left", prod(0, j)), ("right", prod(j, 0))] {
            if v.iter().enumerate().any(|(k, &c)| c != u32::from(k == j)) {
                return Err(Error::NoUnit(format!("b0 is not a {side} unit on b{j}")));
            }
        }
    }

    // associativity over all triples
    let mut lhs = vec![0u32; d];
    let mut rhs = vec![0u32; d];
    for i in 0..d {
        for j in 0..d {
            let ij = prod(i, j);
            for k in 0..d {
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
                for (l, &c) in ij.iter().enumerate() {
                    if c != 0 {
                        crate::exactla::axpy(field, &mut lhs, prod(l, k), c);
                    }
                }
                for (l, &c) in prod(j, k).iter().enumerate() {
                    if c != 0 {
                        crate::exactla::axpy(field, &mut rhs, prod(i, l), c);
                    }
                }
                if lhs != rhs {
                    return Err(Error::NotAssociative(i, j, k));
                }
            }
        }
    }

    // span(b_1..) must be a two-sided ideal ...
    for i in 0..d {
        for j in 0..d {
            if (i > 0 || j > 0) && prod(i, j)[0] != 0 {
                return Err(Error::NotLocal(format!("b{i}*b{j} has a unit component")));
            }
        }
    }

    let right_mult: Vec<Mat> = (0..d).map(|j| Mat::from_fn(field, d, d, |i, k| prod(i, j)[k])).collect();
    let left_mult: Vec<Mat> = (0..d).map(|i| Mat::from_fn(field, d, d, |j, k| prod(i, j)[k])).collect();

    // ... and nilpotent: rad^L = 0 for some L <= d
    let mut layer = Subspace::from_rows(field, d, (1..d).map(|i| right_mult[0].row(i)));
    let mut loewy_length = 1;
    while layer.dim() > 0 {
        let mut next = Subspace::new(field, d);
        for v in layer.basis() {
            for r in &right_mult[1..] {
                next.insert(&r.vec_mul(v));
            }
        }
        if next.dim() == layer.dim() {
            return Err(Error::NotLocal(format!(
                "radical power stabilizes at dimension {} (Loewy layer {})",
                next.dim(),
                loewy_length
            )));
        }
        layer = next;
        loewy_length += 1;
    }

    let mut span = Subspace::new(field, d);
    let mut frontier = vec![unit_vec(d, 0)];
    span.insert(&frontier[0]);
    while let Some(v) = frontier.pop() {
        for &g in &generators {
            let w = right_mult[g].vec_mul(&v);
            if span.insert(&w) {
                frontier.push(w);
            }
        }
    }
    if span.dim() != d {
        return Err(Error::GeneratorsIncomplete { span: span.dim(), dim: d });
    }

    let mut warnings = Vec::new();
    if d == 1 {
        warnings.push("dimension 1: the algebra is the ground field (semisimple)".to_string());
    }

    let mut h = DefaultHasher::new();
    field.p().hash(&mut h);
    d.hash(&mut h);
    table.hash(&mut h);
    let fingerprint = h.finish();

    Ok(Algebra {
        field,
        dim: d,
        basis_names,
        generators,
        table,
        right_mult,
        left_mult,
        loewy_length,
        warnings,
        fingerprint,
        opposite: OnceLock::new(),
    })
}

fn unit_vec(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

impl Algebra {
    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    pub fn is_semisimple(&self) -> bool {
        self.dim == 1
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    /// Coefficients of `b_i b_j`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        let d = self.dim;
        &self.table[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Right multiplication by `b_i` on coordinate rows: `e_j * R_i = b_j b_i`.
    pub fn right_mult(&self, i: usize) -> &Mat {
        &self.right_mult[i]
    }
    /// Left multiplication by `b_i`: `e_j * L_i = b_i b_j`.
    pub fn left_mult(&self, i: usize) -> &Mat {
        &self.left_mult[i]
    }

    /// Right multiplication by an arbitrary element.
    pub fn right_mult_by(&self, a: &[u32]) -> Mat {
        self.combine(&self.right_mult, a)
    }
    pub fn left_mult_by(&self, a: &[u32]) -> Mat {
        self.combine(&self.left_mult, a)
    }

    fn combine(&self, mats: &[Mat], a: &[u32]) -> Mat {
        let mut out = Mat::zeros(self.field, self.dim, self.dim);
        for (m, &c) in mats.iter().zip(a) {
            out.add_scaled(m, c);
        }
        out
    }

    pub fn one(&self) -> Vec<u32> {
        unit_vec(self.dim, 0)
    }
    pub fn basis_element(&self, i: usize) -> Vec<u32> {
        unit_vec(self.dim, i)
    }
    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    /// Element from signed `(basis index, coefficient)` terms.
    pub fn element(&self, terms: &[(usize, i64)]) -> Vec<u32> {
        let mut v = self.zero();
        for &(i, c) in terms {
            v[i] = self.field.add(v[i], self.field.from_i64(c));
        }
        v
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = self.zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                crate::exactla::axpy(f, &mut out, self.product(i, j), f.mul(ai, bj));
            }
        }
        out
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.field.sub(x, y)).collect()
    }

    pub fn pow(&self, a: &[u32], e: usize) -> Vec<u32> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_zero(a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// `true` when the element has no unit component.
    pub fn in_radical(&self, a: &[u32]) -> bool {
        a[0] == 0
    }

    pub fn commutes(&self, a: &[u32], b: &[u32]) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Human-readable form of an element, e.g. `x + 2*xy`.
    pub fn format_element(&self, a: &[u32]) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { self.basis_names[i].clone() } else { format!("{c}*{}", self.basis_names[i]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// The opposite algebra `c'_{ij}^k = c_{ji}^k`, cached.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let d = self.dim;
                let mut t = vec![0u32; d * d * d];
                for i in 0..d {
                    for j in 0..d {
                        t[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(self.product(j, i));
                    }
                }
                Arc::new(
                    validate_algebra(self.field, self.basis_names.clone(), self.generators.clone(), t)
                        .expect("opposite of a valid algebra is valid"),
                )
            })
            .clone()
    }

    /// Radical basis layers: `dim rad^i` for `i = 0..=loewy_length`.
    pub fn radical_dims(&self) -> Vec<usize> {
        let f = self.field;
        let d = self.dim;
        let mut out = vec![d];
        let mut layer = Subspace::from_rows(f, d, (1..d).map(|i| self.right_mult[0].row(i)));
        out.push(layer.dim());
        while layer.dim() > 0 {
            let mut next = Subspace::new(f, d);
            for v in layer.basis() {
                for r in &self.right_mult[1..] {
                    next.insert(&r.vec_mul(v));
                }
            }
            layer = next;
            out.push(layer.dim());
        }
        out
    }
}

/// `opposite` as a free function.
pub fn opposite(a: &Algebra) -> Arc<Algebra> {
    a.opposite()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein(p: u32) -> Algebra {
        // 1, x, y, xy
        let f = FieldSpec::new(p).unwrap();
        let d = 4;
        let mut t = vec![0u32; d * d * d];
        let mut set = |i: usize, j: usize, k: usize| t[(i * d + j) * d + k] = 1;
        for j in 0..4 {
            set(0, j, j);
            set(j, 0, j);
        }
        set(1, 2, 3);
        set(2, 1, 3);
        validate_algebra(f, ["1", "x", "y", "xy"].map(String::from).to_vec(), vec![1, 2], t).unwrap()
    }

    #[test]
    fn field_is_an_algebra_with_warning() {
        let f = FieldSpec::new(3).unwrap();
        let a = validate_algebra(f, vec!["1".into()], vec![], vec![1]).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(!a.warnings().is_empty());
        assert_eq!(a.loewy_length(), 1);
    }

    #[test]
    fn klein_basics() {
        let a = klein(3);
        assert_eq!(a.loewy_length(), 3);
        assert_eq!(a.radical_dims(), vec![4, 3, 1, 0]);
        assert!(a.is_commutative());
        assert_eq!(*a.opposite(), a);
        let x = a.basis_element(1);
        let y = a.basis_element(2);
        assert_eq!(a.mul(&x, &y), a.basis_element(3));
        assert!(Algebra::is_zero(&a.mul(&x, &x)));
    }

    #[test]
    fn missing_unit_is_rejected() {
        let f = FieldSpec::new(2).unwrap();
        let r = validate_algebra(f, vec!["1".into(), "x".into()], vec![1], vec![0; 8]);
        assert!(matches!(r, Err(Error::NoUnit(_))));
    }

    #[test]
    fn non_nilpotent_radical_is_rejected() {
        // k x k with b1 idempotent
        let f = FieldSpec::new(5).unwrap();
        let mut t = vec![0u32; 8];
        t[0] = 1; // 1*1 = 1
        t[3] = 1; // 1*e = e
        t[5] = 1; // e*1 = e
        t[7] = 1; // e*e = e
        let r = validate_algebra(f, vec!["1".into(), "e".into()], vec![1], t);
        assert!(matches!(r, Err(Error::NotLocal(_))), "{r:?}");
    }

    #[test]
    fn incomplete_generators() {
        let f = FieldSpec::new(2).unwrap();
        let a = klein(2);
        let r = validate_algebra(f, a.basis_names().to_vec(), vec![1], a.table().to_vec());
        assert!(matches!(r, Err(Error::GeneratorsIncomplete { span: 2, dim: 4 })));
    }
}
