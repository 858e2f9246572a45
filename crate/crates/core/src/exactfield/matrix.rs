use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{gf2, PrimeField};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Self::scalar(field, n, 1)
    }

    pub fn scalar(field: PrimeField, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(field, n, n);
        let c = c % field.modulus();
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    /// Builds a matrix from canonical entries. Panics if the length is wrong
    /// or an entry is not reduced.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        assert!(
            data.iter().all(|&x| x < field.modulus()),
            "matrix entries must be reduced mod {}",
            field.modulus()
        );
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from signed integer rows, reducing each entry.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.modulus());
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x;
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
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
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: u32) {
        self.data[r * self.cols + c] = value % self.field.modulus();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, u32)> {
        self.data
            .iter()
            .enumerate()
            .find(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, x))
    }

    /// If `self = c * other` for a scalar `c`, returns `c`.
    pub fn scalar_ratio(&self, other: &Matrix) -> Option<u32> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let (idx, d) = other.first_nonzero()?;
        let c = self.field.div(self.data[idx], d);
        (other.scale(c) == *self).then_some(c)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.mul(x, c)).collect(),
        }
    }

    pub fn add_matrix(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub_matrix(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    /// Matrix product. Zero entries of `self` are skipped, so monomial and
    /// block-sparse factors multiply in roughly `O(rows * cols)` time.
    pub fn mul_matrix(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        assert_eq!(self.field, rhs.field, "field mismatch");
        let p = self.field.modulus() as u64;
        let n = rhs.cols;
        let mut out = vec![0u32; self.rows * n];
        if n == 0 {
            return Matrix::from_vec(self.field, self.rows, 0, out);
        }
        // Below 2^16 products fit in 32 bits, so a u64 accumulator absorbs
        // 2^32 of them before any reduction is needed.
        let lazy = p < (1 << 16);
        let mut acc = vec![0u64; n];
        let nnz = rhs.data.iter().filter(|&&x| x != 0).count();
        if nnz * 4 < rhs.data.len() {
            // Sparse right factor (permutation or monomial images): walk its
            // nonzeros only.
            let mut start = Vec::with_capacity(rhs.rows + 1);
            let mut entries = Vec::with_capacity(nnz);
            for k in 0..rhs.rows {
                start.push(entries.len());
                for (j, &b) in rhs.row(k).iter().enumerate() {
                    if b != 0 {
                        entries.push((j, b as u64));
                    }
                }
            }
            start.push(entries.len());
            for i in 0..self.rows {
                acc.iter_mut().for_each(|x| *x = 0);
                let arow = &self.data[i * self.cols..(i + 1) * self.cols];
                for (k, &a) in arow.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for &(j, b) in &entries[start[k]..start[k + 1]] {
                        acc[j] = (acc[j] + a as u64 * b) % p;
                    }
                }
                for (o, &c) in out[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                    *o = c as u32;
                }
            }
            return Matrix::from_vec(self.field, self.rows, n, out);
        }
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let arow = &self.data[i * self.cols..(i + 1) * self.cols];
            for (k, &a) in arow.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u64;
                let brow = &rhs.data[k * n..(k + 1) * n];
                if lazy {
                    for (c, &b) in acc.iter_mut().zip(brow) {
                        *c += a * b as u64;
                    }
                } else {
                    for (c, &b) in acc.iter_mut().zip(brow) {
                        *c = (*c + a * b as u64) % p;
                    }
                }
            }
            for (o, &c) in out[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                *o = (c % p) as u32;
            }
        }
        Matrix::from_vec(self.field, self.rows, n, out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for (&a, &b) in self.row(r).iter().zip(v) {
                    if a != 0 && b != 0 {
                        acc = (acc + a as u64 * b as u64) % p;
                    }
                }
                acc as u32
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_matrix(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_matrix(&base);
            }
        }
        acc
    }

    /// Kronecker product with row-major index convention: entry
    /// `((i1, i2), (j1, j2))` lives at `(i1 * rows2 + i2, j1 * cols2 + j2)`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(f, self.rows * r2, self.cols * c2);
        let oc = out.cols;
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..r2 {
                    let base = (i1 * r2 + i2) * oc + j1 * c2;
                    let orow = other.row(i2);
                    for (j2, &b) in orow.iter().enumerate() {
                        if b != 0 {
                            out.data[base + j2] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diagonal(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |r, c| {
            self.get(rows.start + r, cols.start + c)
        })
    }

    pub fn hstack(field: PrimeField, parts: &[&Matrix]) -> Matrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            out.paste(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    pub fn vstack(field: PrimeField, parts: &[&Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix::from_vec(field, rows, cols, data)
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        if self.field.modulus() == 2 {
            return gf2::rref(self);
        }
        self.rref_dense()
    }

    pub(super) fn rref_dense(&self) -> Rref {
        let f = self.field;
        let p = f.modulus() as u64;
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pr) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            if pr != rank {
                for j in c..cols {
                    m.swap(pr * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(m[rank * cols + c]) as u64;
            if inv != 1 {
                for j in c..cols {
                    let x = &mut m[rank * cols + j];
                    *x = ((*x as u64 * inv) % p) as u32;
                }
            }
            let (before, rest) = m.split_at_mut(rank * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = row[c];
                if factor != 0 {
                    let neg = p - factor as u64;
                    for j in c..cols {
                        if pivot_row[j] != 0 {
                            row[j] = ((row[j] as u64 + neg * pivot_row[j] as u64) % p) as u32;
                        }
                    }
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            rank += 1;
        }
        Rref {
            reduced: Matrix::from_vec(f, rows, cols, m),
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(reduced.get(r, free));
                }
                v
            })
            .collect()
    }

    /// Basis of `{w : w^T * self = 0}`.
    pub fn left_nullspace(&self) -> Vec<Vec<u32>> {
        self.transpose().nullspace()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        if let Some(inv) = self.monomial_inverse() {
            return Some(inv);
        }
        let n = self.rows;
        let aug = Matrix::hstack(self.field, &[self, &Matrix::identity(self.field, n)]);
        let Rref {
            reduced,
            rank,
            pivots,
        } = aug.rref();
        if rank < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(reduced.submatrix(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && (self.monomial_pattern().is_some() || self.rank() == self.rows)
    }

    /// For a square matrix with exactly one nonzero entry in each row and
    /// column, that entry's `(column, value)` per row.
    fn monomial_pattern(&self) -> Option<Vec<(usize, u32)>> {
        let n = self.rows;
        if n != self.cols {
            return None;
        }
        let mut used = vec![false; n];
        let mut pattern = Vec::with_capacity(n);
        for r in 0..n {
            let mut nonzero = self.row(r).iter().enumerate().filter(|(_, &x)| x != 0);
            let (c, &x) = nonzero.next()?;
            if nonzero.next().is_some() || std::mem::replace(&mut used[c], true) {
                return None;
            }
            pattern.push((c, x));
        }
        Some(pattern)
    }

    /// The inverse of a monomial matrix without elimination; `None` for any
    /// other matrix.
    fn monomial_inverse(&self) -> Option<Matrix> {
        let n = self.rows;
        let pattern = self.monomial_pattern()?;
        let mut inv = Matrix::zeros(self.field, n, n);
        for (r, (c, x)) in pattern.into_iter().enumerate() {
            inv.data[c * n + r] = self.field.inv(x);
        }
        Some(inv)
    }

    /// Some `X` with `self * X = rhs`, if one exists.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let n = self.cols;
        let aug = Matrix::hstack(self.field, &[self, rhs]);
        let Rref {
            reduced,
            rank,
            pivots,
        } = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, n, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate().take(rank) {
            for j in 0..rhs.cols {
                x.data[pc * rhs.cols + j] = reduced.get(r, n + j);
            }
        }
        Some(x)
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.mul_matrix(rhs)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.add_matrix(rhs)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.sub_matrix(rhs)
    }
}

/// Linear combination `sum c_i * m_i` of equally shaped matrices.
pub fn linear_combination(field: PrimeField, coeffs: &[u32], mats: &[Matrix]) -> Matrix {
    assert_eq!(coeffs.len(), mats.len());
    assert!(!mats.is_empty());
    let (r, c) = (mats[0].rows, mats[0].cols);
    let p = field.modulus() as u64;
    let mut acc = vec![0u64; r * c];
    for (&k, m) in coeffs.iter().zip(mats) {
        if k == 0 {
            continue;
        }
        for (a, &x) in acc.iter_mut().zip(&m.data) {
            *a = (*a + k as u64 * x as u64) % p;
        }
    }
    Matrix::from_vec(field, r, c, acc.into_iter().map(|x| x as u32).collect())
}

/// Incrementally maintained semi-echelon basis of a subspace of `F_p^n`.
///
/// Each stored row is normalized to 1 at its pivot and vanishes at the pivots
/// of all earlier rows, so reducing a vector in insertion order is exact.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_vectors(self) -> Vec<Vec<u32>> {
        self.rows
    }

    /// Reduces `v` in place against the basis; returns true when it ends up zero.
    pub fn reduce(&self, v: &mut [u32]) -> bool {
        let p = self.field.modulus() as u64;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let factor = v[pc];
            if factor == 0 {
                continue;
            }
            let neg = p - factor as u64;
            for (x, &r) in v.iter_mut().zip(row).skip(pc) {
                if r != 0 {
                    *x = ((*x as u64 + neg * r as u64) % p) as u32;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w)
    }

    /// Adds `v` if it is independent; returns whether the basis grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        if self.reduce(&mut w) {
            return false;
        }
        let pc = w.iter().position(|&x| x != 0).unwrap();
        let inv = self.field.inv(w[pc]);
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }
}
