//! Dense exact matrices over a field scalar, plus canonical subspaces.

use super::Scalar;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Columns given as vectors of length `ambient`.
    pub fn from_cols(ambient: usize, cols: &[Vec<S>]) -> Self {
        Matrix::from_fn(ambient, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn col(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for c in 0..self.cols {
                    acc = acc.add(&self.get(r, c).mul(&v[c]));
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let mut sel = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(sel, c).clone();
                    m.set(row, c, b);
                    m.set(sel, c, a);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot invertible");
            for c in 0..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, as columns.
    pub fn kernel(&self) -> Matrix<S> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut cols = Vec::new();
        for &fc in &free {
            let mut v = vec![S::zero(); self.cols];
            v[fc] = S::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(prow, fc).neg();
            }
            cols.push(v);
        }
        Matrix::from_cols(self.cols, &cols)
    }

    /// One solution of `self * x = b`, if consistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(self.rows, b.len());
        let aug = self.hstack(&Matrix::from_cols(self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the constants column
        }
        let mut x = vec![S::zero(); self.cols];
        for (prow, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(prow, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn conj(&self) -> Self {
        self.map(|s| s.conj())
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})", self.rows, self.cols)
    }
}

/// A subspace of `S^n` in canonical (reduced column echelon) form, so equality
/// of subspaces is literal equality of representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<S: Scalar> {
    ambient: usize,
    basis: Matrix<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<S>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        let m = Matrix::from_cols(ambient, vectors);
        Self::from_matrix_cols(&m)
    }

    /// Span of the columns of `m`.
    pub fn from_matrix_cols(m: &Matrix<S>) -> Self {
        // Canonicalize: reduced row echelon of the transpose, nonzero rows.
        let (r, pivots) = m.transpose().rref();
        let k = pivots.len();
        let basis = Matrix::from_fn(m.rows(), k, |row, col| r.get(col, row).clone());
        Subspace {
            ambient: m.rows(),
            basis,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<S>> {
        self.basis.columns()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains_vector(&self, v: &[S]) -> bool {
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        self.basis.solve(v).is_some()
    }

    pub fn contains(&self, other: &Self) -> bool {
        other
            .basis_vectors()
            .iter()
            .all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        Self::from_matrix_cols(&self.basis.hstack(&other.basis))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // x in both spans: A u = B w, kernel of [A | -B].
        let stacked = self.basis.hstack(&other.basis.neg());
        let ker = stacked.kernel();
        let mut vecs = Vec::new();
        for j in 0..ker.cols() {
            let u: Vec<S> = (0..self.dim()).map(|i| ker.get(i, j).clone()).collect();
            vecs.push(self.basis.mul_vec(&u));
        }
        Self::span(self.ambient, &vecs)
    }

    /// Image of the subspace under a linear map.
    pub fn apply(&self, m: &Matrix<S>) -> Self {
        assert_eq!(m.cols(), self.ambient);
        let vecs: Vec<Vec<S>> = self
            .basis_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect();
        Self::span(m.rows(), &vecs)
    }

    /// `{x : m x ∈ target}`.
    pub fn preimage(m: &Matrix<S>, target: &Subspace<S>) -> Self {
        assert_eq!(m.rows(), target.ambient);
        if target.is_full() {
            return Self::full(m.cols());
        }
        if target.is_zero() {
            return Self::from_matrix_cols(&m.kernel());
        }
        // m x = B y  =>  kernel of [m | -B], projected to x.
        let stacked = m.hstack(&target.basis.neg());
        let ker = stacked.kernel();
        let mut vecs = Vec::new();
        for j in 0..ker.cols() {
            let x: Vec<S> = (0..m.cols()).map(|i| ker.get(i, j).clone()).collect();
            vecs.push(x);
        }
        Self::span(m.cols(), &vecs)
    }

    /// Kernel of a matrix, as a subspace of its column space domain.
    pub fn kernel_of(m: &Matrix<S>) -> Self {
        Self::from_matrix_cols(&m.kernel())
    }

    /// `{w : wᵀ · form · b = 0 for every basis vector b}`.
    pub fn annihilator(&self, form: &Matrix<S>) -> Self {
        assert_eq!(form.rows(), self.ambient);
        if self.is_zero() {
            return Self::full(form.rows());
        }
        // Conditions: (form · basis)ᵀ w = 0.
        let cond = form.mul(&self.basis).transpose();
        Self::kernel_of(&cond)
    }

    /// Vectors of `bigger` extending `self` to a basis of `bigger`.
    pub fn complement_within(&self, bigger: &Subspace<S>) -> Vec<Vec<S>> {
        assert!(bigger.contains(self), "complement requires containment");
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in bigger.basis_vectors() {
            if !acc.contains_vector(&v) {
                acc = acc.sum(&Subspace::span(self.ambient, &[v.clone()]));
                out.push(v);
            }
        }
        assert_eq!(acc.dim(), bigger.dim());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Rat};
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        let x = a.solve(&[rat_int(3), rat_int(2)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn subspace_ops() {
        let e1 = vec![rat_int(1), rat_int(0), rat_int(0)];
        let e2 = vec![rat_int(0), rat_int(1), rat_int(0)];
        let e12 = Subspace::span(3, &[e1.clone(), e2.clone()]);
        let diag = Subspace::span(3, &[vec![rat_int(1), rat_int(1), rat_int(0)]]);
        assert!(e12.contains(&diag));
        assert_eq!(e12.intersect(&diag), diag);
        let e3 = Subspace::span(3, &[vec![rat_int(0), rat_int(0), rat_int(1)]]);
        assert_eq!(e12.sum(&e3).dim(), 3);
        assert_eq!(e12.intersect(&e3).dim(), 0);
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(
            2,
            &[vec![rat_int(2), rat_int(4)], vec![rat_int(1), rat_int(2)]],
        );
        let b = Subspace::span(2, &[vec![rat_int(3), rat_int(6)]]);
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn kernel_rank_theorem(entries in prop::collection::vec(-4i64..5, 12)) {
            let a = Matrix::from_fn(3, 4, |r, c| rat_int(entries[r * 4 + c]));
            let k = a.kernel();
            prop_assert!(a.mul(&k).is_zero());
            prop_assert_eq!(a.rank() + k.cols(), 4);
        }

        #[test]
        fn annihilator_dims(entries in prop::collection::vec(-3i64..4, 8)) {
            // Nondegenerate alternating form on Q^4.
            let s = m(vec![
                vec![0, 1, 0, 0],
                vec![-1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, -1, 0],
            ]);
            let v1: Vec<Rat> = entries[..4].iter().map(|&x| rat_int(x)).collect();
            let v2: Vec<Rat> = entries[4..].iter().map(|&x| rat_int(x)).collect();
            let sub = Subspace::span(4, &[v1, v2]);
            let ann = sub.annihilator(&s);
            prop_assert_eq!(ann.dim(), 4 - sub.dim());
        }
    }
}
