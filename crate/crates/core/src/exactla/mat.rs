use std::fmt;

use super::echelon::{LeftSolver, Subspace};
use super::field::FieldSpec;

/// Dense matrix over GF(p), row-major.
///
/// Vectors are rows and act on the left: `v * M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over GF({}) [", self.rows, self.cols, self.field.p())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from rows of signed integers, reducing mod p. All rows must share a length.
    pub fn from_rows<R: AsRef<[i64]>>(field: FieldSpec, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| field.from_i64(v)));
        }
        Mat { field, rows: rows.len(), cols, data }
    }

    /// Build from already-reduced residue rows.
    pub fn from_residue_rows(field: FieldSpec, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            debug_assert!(r.iter().all(|&v| v < field.p()));
            data.extend_from_slice(r);
        }
        Mat { field, rows: rows.len(), cols, data }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert!(v < field.p());
                data.push(v);
            }
        }
        Mat { field, rows, cols, data }
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.field.p());
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let f = self.field;
        Mat { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Mat, c: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        axpy(self.field, &mut self.data, &other.data, c);
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let p = f.p() as u64;
        let (n, m) = (self.rows, other.cols);
        let mut out = Mat::zeros(f, n, m);
        if m == 0 || n == 0 {
            return out;
        }
        let mut acc = vec![0u64; m];
        for i in 0..n {
            acc.iter_mut().for_each(|a| *a = 0);
            let arow = self.row(i);
            if f.small() {
                // p < 2^16: each product < 2^32, so 2^31 of them fit before reduction
                for (k, &a) in arow.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let a = a as u64;
                    for (dst, &b) in acc.iter_mut().zip(other.row(k)) {
                        *dst += a * b as u64;
                    }
                }
                for (o, a) in out.row_mut(i).iter_mut().zip(&acc) {
                    *o = (a % p) as u32;
                }
            } else {
                for (k, &a) in arow.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let a = a as u64;
                    for (dst, &b) in acc.iter_mut().zip(other.row(k)) {
                        *dst = (*dst + a * b as u64) % p;
                    }
                }
                for (o, a) in out.row_mut(i).iter_mut().zip(&acc) {
                    *o = *a as u32;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                axpy(f, &mut out, self.row(k), a);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Nilpotency check by repeated squaring: `self^dim == 0`.
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut e = 1usize;
        while e < self.rows.max(1) {
            if m.is_zero() {
                return true;
            }
            m = m.mul(&m);
            e *= 2;
        }
        m.is_zero()
    }

    pub fn hstack(field: FieldSpec, blocks: &[&Mat]) -> Mat {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                out.row_mut(i)[off..off + b.cols].copy_from_slice(b.row(i));
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(field: FieldSpec, cols: usize, blocks: &[&Mat]) -> Mat {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
        }
        Mat { field, rows, cols, data }
    }

    pub fn block_diag(field: FieldSpec, blocks: &[&Mat]) -> Mat {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for i in 0..b.rows {
            let cols = self.cols;
            self.data[(r0 + i) * cols + c0..(r0 + i) * cols + c0 + b.cols].copy_from_slice(b.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// Row space in reduced echelon form.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_rows(self.field, self.cols, (0..self.rows).map(|i| self.row(i)))
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.row_space().dim()
        } else {
            self.transpose().row_space().dim()
        }
    }

    /// Left kernel `{v : v * self = 0}` (see [`kernel_basis`]).
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        kernel_basis(self)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let solver = LeftSolver::new(self);
        if solver.rank() != self.rows {
            return None;
        }
        solver.solve_mat(&Mat::identity(self.field, self.rows))
    }

    /// Some `X` with `X * self = rhs`, if the system is consistent.
    pub fn solve_left(&self, rhs: &Mat) -> Option<Mat> {
        LeftSolver::new(self).solve_mat(rhs)
    }

    /// The matrix flattened to a single row vector.
    pub fn flatten(&self) -> &[u32] {
        &self.data
    }

    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, data: Vec<u32>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat { field, rows, cols, data }
    }
}

/// `dst += c * src`
#[inline]
pub fn axpy(f: FieldSpec, dst: &mut [u32], src: &[u32], c: u32) {
    debug_assert_eq!(dst.len(), src.len());
    if c == 0 {
        return;
    }
    let p = f.p() as u64;
    let c = c as u64;
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = ((*d as u64 + c * s as u64) % p) as u32;
        }
    }
}

#[inline]
pub fn scale_vec(f: FieldSpec, v: &mut [u32], c: u32) {
    for x in v.iter_mut() {
        *x = f.mul(*x, c);
    }
}

/// Left kernel of `m`: a basis of `{v : v * m = 0}`, vectors of length `m.rows()`.
///
/// The basis is read off the reduced echelon form of `m^T`: one vector per
/// non-pivot column, carrying a 1 there and zeros at the other free columns.
/// Its size is `rows(m) - rank(m)`.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<u32>> {
    let f = m.field();
    let n = m.rows();
    if n == 0 {
        return Vec::new();
    }
    let rref = m.transpose().row_space();
    let pivots = rref.pivots();
    let mut is_pivot = vec![false; n];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; n];
        v[free] = 1;
        for (row, &pc) in rref.basis().iter().zip(pivots) {
            v[pc] = f.neg(row[free]);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&Mat::identity(gf(2), 3)).is_empty());
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let k = kernel_basis(&Mat::zeros(gf(5), 2, 3));
        assert_eq!(k, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn rank_deficient_gf3_matches_enumeration() {
        let f = gf(3);
        let m = Mat::from_rows(f, &[[1, 2], [2, 1]]);
        assert_eq!(m.rank(), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        // brute force: every annihilated row vector is a multiple of the basis vector
        let mut annihilated = 0;
        for a in 0..3 {
            for b in 0..3 {
                if m.vec_mul(&[a, b]).iter().all(|&x| x == 0) {
                    annihilated += 1;
                }
            }
        }
        assert_eq!(annihilated, 3);
        assert!(m.vec_mul(&k[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn inverse_round_trip() {
        let f = gf(7);
        let m = Mat::from_rows(f, &[[1, 2, 3], [0, 1, 4], [5, 6, 0]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Mat::from_rows(f, &[[1, 2], [2, 4]]).inverse().is_none());
    }

    #[test]
    fn pow_and_nilpotency() {
        let f = gf(2);
        let j = Mat::from_rows(f, &[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
        assert!(j.is_nilpotent());
        assert!(!j.pow(2).is_zero());
        assert!(j.pow(3).is_zero());
        assert!(!Mat::identity(f, 2).is_nilpotent());
    }

    #[test]
    fn large_prime_products() {
        let f = gf(2_147_483_647);
        let a = Mat::from_rows(f, &[[-1, -1], [-1, -1]]);
        let b = a.mul(&a);
        assert_eq!(b.get(0, 0), 2);
    }
}
