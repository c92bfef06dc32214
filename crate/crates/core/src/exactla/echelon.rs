use super::field::FieldSpec;
use super::mat::{axpy, scale_vec, Mat};

/// A subspace of `GF(p)^n` held as a reduced row echelon basis.
///
/// Pivots are kept sorted, so the basis (and every quantity derived from it)
/// depends only on the span, not on insertion order.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<'a, I>(field: FieldSpec, ambient: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [u32]>,
    {
        let mut s = Subspace::new(field, ambient);
        for r in rows {
            s.insert(r);
            if s.dim() == ambient {
                break;
            }
        }
        s
    }

    pub fn from_vecs(field: FieldSpec, ambient: usize, rows: &[Vec<u32>]) -> Self {
        Subspace::from_rows(field, ambient, rows.iter().map(|r| r.as_slice()))
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let id = Mat::identity(field, ambient);
        Subspace::from_rows(field, ambient, (0..ambient).map(|i| id.row(i)))
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn to_mat(&self) -> Mat {
        Mat::from_residue_rows(self.field, self.ambient, &self.rows)
    }

    /// Reduce `v` in place against the basis; the result is zero iff `v` was in the span.
    pub fn reduce_in_place(&self, v: &mut [u32]) {
        debug_assert_eq!(v.len(), self.ambient);
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                axpy(f, v, row, f.neg(c));
            }
        }
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to [`basis`](Self::basis), or `None` if `v` is outside.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Insert a vector; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(w[pc]);
        scale_vec(f, &mut w, inv);
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                axpy(f, row, &w, f.neg(c));
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, w);
        true
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = a*B1 = b*B2  <=>  (a, -b) in the left kernel of [B1; B2]
        let f = self.field;
        let (d1, d2) = (self.dim(), other.dim());
        if d1 == 0 || d2 == 0 {
            return Subspace::new(f, self.ambient);
        }
        let stacked = Mat::vstack(f, self.ambient, &[&self.to_mat(), &other.to_mat()]);
        let b1 = self.to_mat();
        let vecs: Vec<Vec<u32>> = super::mat::kernel_basis(&stacked)
            .into_iter()
            .map(|k| b1.vec_mul(&k[..d1]))
            .collect();
        Subspace::from_vecs(f, self.ambient, &vecs)
    }

    /// Standard basis vectors at the non-pivot coordinates: a complement of the span.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.ambient == other.ambient && self.pivots == other.pivots && self.rows == other.rows
    }
}
impl Eq for Subspace {}

/// Solves `x * M = b` for many right-hand sides after a single elimination.
#[derive(Clone, Debug)]
pub struct LeftSolver {
    field: FieldSpec,
    n_rows: usize,
    echelon: Vec<Vec<u32>>,
    transform: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl LeftSolver {
    pub fn new(m: &Mat) -> Self {
        let f = m.field();
        let n = m.rows();
        let mut s = LeftSolver { field: f, n_rows: n, echelon: Vec::new(), transform: Vec::new(), pivots: Vec::new() };
        for k in 0..n {
            let mut v = m.row(k).to_vec();
            let mut t = vec![0u32; n];
            t[k] = 1;
            for ((row, tr), &pc) in s.echelon.iter().zip(&s.transform).zip(&s.pivots) {
                let c = v[pc];
                if c != 0 {
                    let nc = f.neg(c);
                    axpy(f, &mut v, row, nc);
                    axpy(f, &mut t, tr, nc);
                }
            }
            let Some(pc) = v.iter().position(|&x| x != 0) else { continue };
            let inv = f.inv(v[pc]);
            scale_vec(f, &mut v, inv);
            scale_vec(f, &mut t, inv);
            for (row, tr) in s.echelon.iter_mut().zip(s.transform.iter_mut()) {
                let c = row[pc];
                if c != 0 {
                    let nc = f.neg(c);
                    axpy(f, row, &v, nc);
                    axpy(f, tr, &t, nc);
                }
            }
            let at = s.pivots.partition_point(|&q| q < pc);
            s.pivots.insert(at, pc);
            s.echelon.insert(at, v);
            s.transform.insert(at, t);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let f = self.field;
        let mut r = b.to_vec();
        let mut x = vec![0u32; self.n_rows];
        for ((row, tr), &pc) in self.echelon.iter().zip(&self.transform).zip(&self.pivots) {
            let c = r[pc];
            if c != 0 {
                axpy(f, &mut r, row, f.neg(c));
                axpy(f, &mut x, tr, c);
            }
        }
        r.iter().all(|&v| v == 0).then_some(x)
    }

    pub fn solve_mat(&self, rhs: &Mat) -> Option<Mat> {
        let mut rows = Vec::with_capacity(rhs.rows());
        for i in 0..rhs.rows() {
            rows.push(self.solve(rhs.row(i))?);
        }
        Some(Mat::from_residue_rows(self.field, self.n_rows, &rows))
    }
}
