//! Dense row-major matrices over a [`FieldSpec`].
//!
//! A map `F^n -> F^m` is an `m x n` matrix acting on column vectors. The field
//! is passed to every arithmetic operation instead of being stored, so matrices
//! are plain data and compare by entries.

use rand::Rng;

use crate::error::{FfError, Result};
use crate::field::{Elem, FieldSpec};
use crate::gf2;
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(FfError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds from nested rows; `cols` is needed for the zero-row case.
    pub fn from_rows(rows: &[Vec<Elem>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(FfError::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn column(v: &[Elem]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn random<R: Rng + ?Sized>(f: &FieldSpec, rows: usize, cols: usize, rng: &mut R) -> Self {
        let q = f.order();
        Matrix { rows, cols, data: (0..rows * cols).map(|_| rng.gen_range(0..q)).collect() }
    }

    /// A uniformly random invertible matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(f: &FieldSpec, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Matrix::random(f, n, n, rng);
            if m.rank(f) == n {
                return m;
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Elem> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as Elem))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, f: &FieldSpec, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(FfError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    axpy(f, out.row_mut(i), other.row(k), a);
                }
            }
        }
        Ok(out)
    }

    /// Product of matrices whose shapes are known to agree.
    pub fn dot(&self, f: &FieldSpec, other: &Matrix) -> Matrix {
        self.mul(f, other).expect("matrix shapes agree")
    }

    pub fn mul_vec(&self, f: &FieldSpec, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(FfError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, f: &FieldSpec, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        })
    }

    pub fn sub(&self, f: &FieldSpec, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        })
    }

    pub fn scale(&self, f: &FieldSpec, c: Elem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    pub fn neg(&self, f: &FieldSpec) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.neg(a)).collect() }
    }

    pub fn map_entries(&self, mut g: impl FnMut(Elem) -> Elem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| g(a)).collect() }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(FfError::DimensionMismatch(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(FfError::DimensionMismatch(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Stacks blocks vertically; all must share `cols`.
    pub fn vstack_all(blocks: &[Matrix], cols: usize) -> Result<Matrix> {
        let mut out = Matrix::zeros(0, cols);
        for b in blocks {
            out = out.vstack(b)?;
        }
        Ok(out)
    }

    /// Stacks blocks horizontally; all must share `rows`.
    pub fn hstack_all(blocks: &[Matrix], rows: usize) -> Result<Matrix> {
        let mut out = Matrix::zeros(rows, 0);
        for b in blocks {
            out = out.hstack(b)?;
        }
        Ok(out)
    }

    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j));
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j))
    }

    /// Reduced row echelon form. Pivots are chosen column by column, taking
    /// the first row (top-down) with a nonzero entry; the pivot row is scaled
    /// to 1 and swapped into place.
    pub fn rref(&self, f: &FieldSpec) -> Rref {
        if f.is_gf2() {
            let (matrix, pivots) = gf2::rref(self);
            return Rref { matrix, pivots };
        }
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            m.swap_rows(r, p);
            let inv = f.inv_nonzero(m.get(r, c));
            if inv != 1 {
                scale_slice(f, &mut m.row_mut(r)[c..], inv);
            }
            let pivot_row: Vec<Elem> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let a = m.get(i, c);
                if a != 0 {
                    axpy(f, &mut m.row_mut(i)[c..], &pivot_row, f.neg(a));
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * cols);
        head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
    }

    pub fn rank(&self, f: &FieldSpec) -> usize {
        self.rref(f).pivots.len()
    }

    /// Basis of `{x : self x = 0}`, one column per free variable in increasing
    /// column order: the free variable is 1, other free variables 0.
    pub fn nullspace(&self, f: &FieldSpec) -> Matrix {
        let Rref { matrix: r, pivots } = self.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &j) in free.iter().enumerate() {
            out.set(j, k, 1);
            for (i, &p) in pivots.iter().enumerate() {
                out.set(p, k, f.neg(r.get(i, j)));
            }
        }
        out
    }

    /// Rows spanning `{y : y self = 0}`, i.e. the transposed nullspace of the transpose.
    pub fn left_nullspace(&self, f: &FieldSpec) -> Matrix {
        self.transpose().nullspace(f).transpose()
    }

    pub fn inverse(&self, f: &FieldSpec) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(FfError::DimensionMismatch(format!("inverse of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let Rref { matrix, pivots } = aug.rref(f);
        if n > 0 && pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        Ok(Some(matrix.submatrix(0, n, n, n)))
    }

    pub fn is_invertible(&self, f: &FieldSpec) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }

    /// One solution of `self x = b` with free variables set to zero, if any.
    pub fn solve(&self, f: &FieldSpec, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if b.len() != self.rows {
            return Err(FfError::DimensionMismatch(format!(
                "right-hand side of length {} for {} equations",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::column(b))?;
        let Rref { matrix, pivots } = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn pow(&self, f: &FieldSpec, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.dot(f, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.dot(f, &base);
            }
        }
        acc
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, f: &FieldSpec, p: &Poly) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for &c in p.coeffs().iter().rev() {
            acc = acc.dot(f, self);
            for i in 0..n {
                let v = acc.get(i, i);
                acc.set(i, i, f.add(v, c));
            }
        }
        acc
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// `-c_0, ..., -c_{n-1}` down the last column.
    pub fn companion(f: &FieldSpec, p: &Poly) -> Matrix {
        assert!(p.is_monic(), "companion matrix of a non-monic polynomial");
        let n = p.deg();
        let mut m = Matrix::zeros(n, n);
        for i in 1..n {
            m.set(i, i - 1, 1);
        }
        for i in 0..n {
            m.set(i, n - 1, f.neg(p.coeff(i)));
        }
        m
    }
}

/// Minimal polynomial of the block-diagonal operator with the given square blocks.
pub fn min_poly(f: &FieldSpec, blocks: &[Matrix]) -> Poly {
    let total: usize = blocks.iter().map(|b| b.rows * b.rows).sum();
    // Echelon basis of the flattened powers seen so far, with the combination
    // of powers that produced each reduced row.
    let mut basis: Vec<(usize, Vec<Elem>, Vec<Elem>)> = Vec::new();
    let mut powers: Vec<Matrix> = blocks.iter().map(|b| Matrix::identity(b.rows)).collect();
    for k in 0.. {
        let mut v: Vec<Elem> = powers.iter().flat_map(|p| p.data.iter().copied()).collect();
        let mut combo = vec![0; k + 1];
        combo[k] = 1;
        for (piv, row, rc) in &basis {
            let a = v[*piv];
            if a != 0 {
                let na = f.neg(a);
                axpy(f, &mut v, row, na);
                axpy(f, &mut combo[..rc.len()], rc, na);
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => return Poly::new(f, combo),
            Some(piv) => {
                let inv = f.inv_nonzero(v[piv]);
                scale_slice(f, &mut v, inv);
                scale_slice(f, &mut combo, inv);
                basis.push((piv, v, combo));
            }
        }
        debug_assert!(k <= total);
        powers = powers.iter().zip(blocks).map(|(p, b)| p.dot(f, b)).collect();
    }
    unreachable!()
}

/// `dst += c * src` elementwise.
#[inline]
pub fn axpy(f: &FieldSpec, dst: &mut [Elem], src: &[Elem], c: Elem) {
    if c == 0 {
        return;
    }
    if f.degree() == 1 {
        let p = f.characteristic() as u64;
        let c = c as u64;
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = ((*d as u64 + c * s as u64) % p) as Elem;
            }
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = f.add(*d, f.mul(c, s));
            }
        }
    }
}

fn scale_slice(f: &FieldSpec, v: &mut [Elem], c: Elem) {
    for x in v.iter_mut() {
        *x = f.mul(*x, c);
    }
}
