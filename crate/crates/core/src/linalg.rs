//! Dense exact linear algebra over the coefficient field.
//!
//! Everything downstream of the Groebner layer is plain Gaussian
//! elimination on small dense matrices. Subspaces are carried in reduced
//! column echelon form so equality and containment are canonical.

use crate::scalar::{FieldSpec, Scalar};

/// A dense matrix over the scalar field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Stack matrices vertically (equal column counts).
    pub fn vstack(parts: &[Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        let field = parts[0].field;
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            for i in 0..m.rows {
                for j in 0..cols {
                    out.set(r0 + i, j, m.get(i, j).clone());
                }
            }
            r0 += m.rows;
        }
        out
    }

    /// A basis of the right kernel `{v : A v = 0}`, in reduced column
    /// echelon form.
    pub fn nullspace(&self) -> Subspace {
        // row-reduce a working copy, remembering pivot columns
        let mut a = self.clone();
        let mut pivot_of_row: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            let mut pivot = None;
            for i in row..a.rows {
                if !a.get(i, col).is_zero() {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            // swap rows p and row
            if p != row {
                for j in 0..a.cols {
                    let tmp = a.get(row, j).clone();
                    a.set(row, j, a.get(p, j).clone());
                    a.set(p, j, tmp);
                }
            }
            let inv = a.get(row, col).inv();
            for j in 0..a.cols {
                let v = a.get(row, j).mul(&inv);
                a.set(row, j, v);
            }
            for i in 0..a.rows {
                if i != row && !a.get(i, col).is_zero() {
                    let f = a.get(i, col).clone();
                    for j in 0..a.cols {
                        let v = a.get(i, j).sub(&f.mul(a.get(row, j)));
                        a.set(i, j, v);
                    }
                }
            }
            pivot_of_row.push(col);
            row += 1;
            if row == a.rows {
                break;
            }
        }
        let pivot_cols: std::collections::BTreeSet<usize> = pivot_of_row.iter().copied().collect();
        let mut basis: Vec<Vec<Scalar>> = Vec::new();
        for free in 0..a.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); a.cols];
            v[free] = self.field.one();
            for (r, pc) in pivot_of_row.iter().enumerate() {
                v[*pc] = a.get(r, free).neg();
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }
}

/// A linear subspace of a fixed coordinate space, stored in reduced column
/// echelon form. The representation is canonical: two subspaces are equal
/// as sets iff their stored columns are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    /// Echelon columns; `pivots[k]` is the row of the leading 1 of column
    /// `k`, strictly increasing.
    cols: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            cols: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Subspace::from_vectors(field, ambient, (0..ambient).map(|j| id.column(j)).collect())
    }

    pub fn from_vectors(field: FieldSpec, ambient: usize, vecs: Vec<Vec<Scalar>>) -> Self {
        let mut s = Subspace::zero(field, ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.cols
    }

    /// Reduce `v` against the echelon basis; the remainder is zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        for (k, pivot) in self.pivots.iter().enumerate() {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for i in 0..self.ambient {
                    if !self.cols[k][i].is_zero() {
                        v[i] = v[i].sub(&f.mul(&self.cols[k][i]));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.cols.iter().all(|c| self.contains(c))
    }

    /// Insert a vector, keeping reduced column echelon form. Returns true
    /// if the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        // back-substitute into existing columns
        for (k, col) in self.cols.iter_mut().enumerate() {
            let f = col[pivot].clone();
            if !f.is_zero() {
                for i in 0..self.ambient {
                    if !v[i].is_zero() {
                        col[i] = col[i].sub(&f.mul(&v[i]));
                    }
                }
                debug_assert!(self.pivots[k] != pivot);
            }
        }
        let at = self.pivots.partition_point(|p| *p < pivot);
        self.pivots.insert(at, pivot);
        self.cols.insert(at, v);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut out = self.clone();
        for c in &other.cols {
            out.insert(c.clone());
        }
        out
    }

    /// Intersection via the kernel of `[A | -B]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field, self.ambient);
        }
        let mut m = Matrix::zeros(self.field, self.ambient, self.dim() + other.dim());
        for (j, c) in self.cols.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, j, c[i].clone());
            }
        }
        for (j, c) in other.cols.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, self.dim() + j, c[i].neg());
            }
        }
        let ker = m.nullspace();
        let mut vecs = Vec::new();
        for k in ker.basis() {
            let mut v = vec![self.field.zero(); self.ambient];
            for (j, c) in self.cols.iter().enumerate() {
                if !k[j].is_zero() {
                    for i in 0..self.ambient {
                        if !c[i].is_zero() {
                            v[i] = v[i].add(&k[j].mul(&c[i]));
                        }
                    }
                }
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.field, self.ambient, vecs)
    }
}
