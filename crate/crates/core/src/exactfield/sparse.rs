//! Row-compressed matrices, used to compare products of mostly-zero
//! factors (monomial and block-monomial images) without forming them.

use super::{Matrix, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRows {
    field: PrimeField,
    rows: usize,
    cols: usize,
    /// Row `i` occupies `entries[start[i]..start[i + 1]]`, columns ascending.
    start: Vec<usize>,
    entries: Vec<(usize, u32)>,
}

impl SparseRows {
    pub fn from_dense(m: &Matrix) -> Self {
        const CHUNK: usize = 16;
        let mut start = Vec::with_capacity(m.rows() + 1);
        let mut entries = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            start.push(entries.len());
            // Whole zero chunks are skipped with one OR-reduction, which
            // vectorizes; images are mostly zero.
            for (c, chunk) in m.row(i).chunks(CHUNK).enumerate() {
                if chunk.iter().fold(0, |acc, &x| acc | x) == 0 {
                    continue;
                }
                let base = c * CHUNK;
                entries.extend(
                    chunk
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| x != 0)
                        .map(|(j, &x)| (base + j, x)),
                );
            }
        }
        start.push(entries.len());
        SparseRows {
            field: m.field(),
            rows: m.rows(),
            cols: m.cols(),
            start,
            entries,
        }
    }

    /// Row by row: `fill(i, out)` appends the nonzero entries of row `i`
    /// in ascending column order.
    pub fn build(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut fill: impl FnMut(usize, &mut Vec<(usize, u32)>),
    ) -> Self {
        let mut start = Vec::with_capacity(rows + 1);
        let mut entries = Vec::with_capacity(rows);
        for i in 0..rows {
            start.push(entries.len());
            fill(i, &mut entries);
        }
        start.push(entries.len());
        let out = SparseRows {
            field,
            rows,
            cols,
            start,
            entries,
        };
        debug_assert!(out.is_canonical(), "rows must be ascending and nonzero");
        out
    }

    fn is_canonical(&self) -> bool {
        (0..self.rows).all(|i| {
            let row = self.row(i);
            row.iter().all(|&(j, x)| j < self.cols && x != 0 && x < self.field.modulus())
                && row.windows(2).all(|w| w[0].0 < w[1].0)
        })
    }

    pub fn to_dense(&self) -> Matrix {
        let mut data = vec![0u32; self.rows * self.cols];
        for i in 0..self.rows {
            for &(j, x) in self.row(i) {
                data[i * self.cols + j] = x;
            }
        }
        Matrix::from_vec(self.field, self.rows, self.cols, data)
    }

    /// Row-major Kronecker product, matching [`Matrix::kronecker`].
    pub fn kronecker(&self, other: &SparseRows) -> SparseRows {
        let p = self.field.modulus() as u64;
        SparseRows::build(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            |r, out| {
                let (i, k) = (r / other.rows, r % other.rows);
                for &(j, x) in self.row(i) {
                    out.extend(
                        other
                            .row(k)
                            .iter()
                            .map(|&(l, y)| (j * other.cols + l, (x as u64 * y as u64 % p) as u32)),
                    );
                }
            },
        )
    }

    /// Square blocks along the diagonal, in order.
    pub fn block_diagonal(field: PrimeField, blocks: &[&SparseRows]) -> SparseRows {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut owner = Vec::with_capacity(n);
        let mut offset = 0;
        for (b, block) in blocks.iter().enumerate() {
            owner.extend((0..block.rows).map(|r| (b, r, offset)));
            offset += block.cols;
        }
        SparseRows::build(field, n, offset, |i, out| {
            let (b, r, shift) = owner[i];
            out.extend(blocks[b].row(r).iter().map(|&(j, x)| (j + shift, x)));
        })
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseRows) -> SparseRows {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let p = self.field.modulus() as u64;
        // Allocated only if some row has several entries.
        let mut acc: Option<RowAccumulator> = None;
        SparseRows::build(self.field, self.rows, rhs.cols, |i, out| {
            if let Some((k, x)) = self.lone(i) {
                out.extend(rhs.row(k).iter().map(|&(j, y)| (j, (x as u64 * y as u64 % p) as u32)));
                return;
            }
            let acc = acc.get_or_insert_with(|| RowAccumulator::new(self.field, rhs.cols));
            acc.product_row(self, rhs, i);
            acc.drain_into(out);
        })
    }

    /// Blocks side by side, in order; all must have the same row count.
    pub fn hstack(field: PrimeField, parts: &[&SparseRows]) -> SparseRows {
        let rows = parts.first().map_or(0, |p| p.rows);
        assert!(parts.iter().all(|p| p.rows == rows), "row counts differ");
        let cols = parts.iter().map(|p| p.cols).sum();
        SparseRows::build(field, rows, cols, |i, out| {
            let mut shift = 0;
            for part in parts {
                out.extend(part.row(i).iter().map(|&(j, x)| (j + shift, x)));
                shift += part.cols;
            }
        })
    }

    /// Inverse of a monomial matrix (one nonzero per row and column);
    /// `None` for anything else.
    pub fn monomial_inverse(&self) -> Option<SparseRows> {
        if self.rows != self.cols {
            return None;
        }
        let mut inverse_row = vec![None; self.cols];
        for i in 0..self.rows {
            let (j, x) = self.lone(i)?;
            if inverse_row[j].replace((i, self.field.inv(x))).is_some() {
                return None;
            }
        }
        Some(SparseRows::build(self.field, self.rows, self.rows, |j, out| {
            out.push(inverse_row[j].expect("every column is hit once"));
        }))
    }

    /// The single entry of row `i`, if it has exactly one.
    fn lone(&self, i: usize) -> Option<(usize, u32)> {
        match self.row(i) {
            &[entry] => Some(entry),
            _ => None,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn row(&self, i: usize) -> &[(usize, u32)] {
        &self.entries[self.start[i]..self.start[i + 1]]
    }

    /// `self * rhs` for a dense right factor.
    pub fn mul_dense(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows(), "inner dimensions differ");
        let p = self.field.modulus() as u64;
        let n = rhs.cols();
        let mut out = vec![0u32; self.rows * n];
        for i in 0..self.rows {
            let row = &mut out[i * n..(i + 1) * n];
            for &(k, x) in self.row(i) {
                for (o, &y) in row.iter_mut().zip(rhs.row(k)) {
                    *o = ((*o as u64 + x as u64 * y as u64) % p) as u32;
                }
            }
        }
        Matrix::from_vec(self.field, self.rows, n, out)
    }
}

/// Exact comparison of sparse products, reusing its scratch rows across calls.
pub struct ProductChecker {
    lhs: RowAccumulator,
    rhs: RowAccumulator,
}

impl ProductChecker {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        ProductChecker {
            lhs: RowAccumulator::new(field, cols),
            rhs: RowAccumulator::new(field, cols),
        }
    }

    fn fit(&mut self, cols: usize) {
        if self.lhs.values.len() < cols {
            *self = ProductChecker::new(self.lhs.field, cols);
        }
    }

    /// `a b == target`.
    pub fn product_equals(&mut self, a: &SparseRows, b: &SparseRows, target: &SparseRows) -> bool {
        if a.cols != b.rows || target.rows != a.rows || target.cols != b.cols {
            return false;
        }
        self.fit(b.cols);
        let p = self.lhs.p;
        (0..a.rows).all(|i| {
            if let (Some((k, x)), Some(t)) = (a.lone(i), target.lone(i)) {
                if let Some((j, y)) = b.lone(k) {
                    return (j, (x as u64 * y as u64 % p) as u32) == t;
                }
            }
            self.lhs.product_row(a, b, i);
            self.rhs.copy_row(target, i);
            self.lhs.matches(&mut self.rhs)
        })
    }

    /// `a b == c d`.
    pub fn products_agree(&mut self, a: &SparseRows, b: &SparseRows, c: &SparseRows, d: &SparseRows) -> bool {
        if a.cols != b.rows || c.cols != d.rows || a.rows != c.rows || b.cols != d.cols {
            return false;
        }
        self.fit(b.cols);
        let p = self.lhs.p;
        (0..a.rows).all(|i| {
            if let (Some((k, x)), Some((l, z))) = (a.lone(i), c.lone(i)) {
                if let (Some((j, y)), Some((m, w))) = (b.lone(k), d.lone(l)) {
                    return j == m && x as u64 * y as u64 % p == z as u64 * w as u64 % p;
                }
            }
            self.lhs.product_row(a, b, i);
            self.rhs.product_row(c, d, i);
            self.lhs.matches(&mut self.rhs)
        })
    }
}

/// One dense row with a list of touched columns, so clearing costs only
/// what was written.
struct RowAccumulator {
    field: PrimeField,
    p: u64,
    values: Vec<u64>,
    seen: Vec<bool>,
    touched: Vec<usize>,
}

impl RowAccumulator {
    fn new(field: PrimeField, cols: usize) -> Self {
        RowAccumulator {
            field,
            p: field.modulus() as u64,
            values: vec![0; cols],
            seen: vec![false; cols],
            touched: Vec::new(),
        }
    }

    fn add(&mut self, j: usize, x: u64) {
        // A touched column may return to zero, so presence is tracked
        // separately from the value.
        if !self.seen[j] {
            self.seen[j] = true;
            self.touched.push(j);
        }
        // Both summands are reduced, so one subtraction suffices.
        let sum = self.values[j] + x;
        self.values[j] = if sum >= self.p { sum - self.p } else { sum };
    }

    fn product_row(&mut self, a: &SparseRows, b: &SparseRows, i: usize) {
        for &(k, x) in a.row(i) {
            for &(j, y) in b.row(k) {
                self.add(j, x as u64 * y as u64 % self.p);
            }
        }
    }

    fn copy_row(&mut self, m: &SparseRows, i: usize) {
        for &(j, x) in m.row(i) {
            self.add(j, x as u64);
        }
    }

    /// Compares and clears both rows.
    fn matches(&mut self, other: &mut RowAccumulator) -> bool {
        let mut ok = true;
        for &j in &self.touched {
            ok &= self.values[j] == other.values[j];
        }
        for &j in &other.touched {
            ok &= self.values[j] == other.values[j];
        }
        self.clear();
        other.clear();
        ok
    }

    /// Moves the nonzero entries out in column order and clears.
    fn drain_into(&mut self, out: &mut Vec<(usize, u32)>) {
        self.touched.sort_unstable();
        for &j in &self.touched {
            if self.values[j] != 0 {
                out.push((j, self.values[j] as u32));
            }
        }
        self.clear();
    }

    fn clear(&mut self) {
        for &j in &self.touched {
            self.values[j] = 0;
            self.seen[j] = false;
        }
        self.touched.clear();
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn arb_sparse_matrix(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        let entry = prop_oneof![4 => Just(0u32), 1 => 0..p as u32];
        prop::collection::vec(entry, rows * cols).prop_map(move |data| Matrix::from_vec(f(p), rows, cols, data))
    }

    fn arb_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
        (prop::sample::select(vec![2u64, 3, 7]), 1..6usize, 1..6usize, 1..6usize)
            .prop_flat_map(|(p, r, k, c)| (arb_sparse_matrix(p, r, k), arb_sparse_matrix(p, k, c)))
    }

    proptest! {
        #[test]
        fn dense_round_trip((a, _) in arb_pair()) {
            prop_assert_eq!(SparseRows::from_dense(&a).to_dense(), a);
        }

        #[test]
        fn products_match_dense((a, b) in arb_pair()) {
            let (sa, sb) = (SparseRows::from_dense(&a), SparseRows::from_dense(&b));
            let product = &a * &b;
            prop_assert_eq!(sa.mul_dense(&b), product.clone());
            let mut checker = ProductChecker::new(a.field(), 1);
            prop_assert!(checker.product_equals(&sa, &sb, &SparseRows::from_dense(&product)));
            let mut off = product.clone();
            off.set(0, 0, a.field().add(off.get(0, 0), 1));
            prop_assert!(!checker.product_equals(&sa, &sb, &SparseRows::from_dense(&off)));
        }

        #[test]
        fn sparse_product_and_stack_match_dense((a, b) in arb_pair()) {
            let (sa, sb) = (SparseRows::from_dense(&a), SparseRows::from_dense(&b));
            prop_assert_eq!(sa.mul(&sb).to_dense(), &a * &b);
            let ab = &a * &b;
            let stacked = SparseRows::hstack(a.field(), &[&sa, &SparseRows::from_dense(&ab)]);
            prop_assert_eq!(stacked.to_dense(), Matrix::hstack(a.field(), &[&a, &ab]));
        }

        #[test]
        fn kronecker_and_blocks_match_dense((a, b) in arb_pair()) {
            let (sa, sb) = (SparseRows::from_dense(&a), SparseRows::from_dense(&b));
            prop_assert_eq!(sa.kronecker(&sb).to_dense(), a.kronecker(&b));
            let (sq1, sq2) = (a.kronecker(&a.transpose()), b.transpose().kronecker(&b));
            let blocks = [&SparseRows::from_dense(&sq1), &SparseRows::from_dense(&sq2)];
            prop_assert_eq!(
                SparseRows::block_diagonal(a.field(), &blocks).to_dense(),
                Matrix::block_diagonal(a.field(), &[&sq1, &sq2])
            );
        }
    }

    #[test]
    fn monomial_inverse_round_trip() {
        let field = f(7);
        let m = SparseRows::from_dense(&Matrix::from_rows(field, &[[0, 3, 0], [0, 0, 5], [6, 0, 0]]));
        let inv = m.monomial_inverse().unwrap();
        assert!((&m.to_dense() * &inv.to_dense()).is_identity());
        let repeated = SparseRows::from_dense(&Matrix::from_rows(field, &[[0, 3], [0, 5]]));
        assert!(repeated.monomial_inverse().is_none());
        let full = SparseRows::from_dense(&Matrix::from_rows(field, &[[1, 3], [0, 5]]));
        assert!(full.monomial_inverse().is_none());
    }

    #[test]
    fn products_agree_on_monomial_rows() {
        let field = f(5);
        let t = SparseRows::from_dense(&Matrix::from_rows(field, &[[0, 2], [3, 0]]));
        let swap = SparseRows::from_dense(&Matrix::from_rows(field, &[[0, 1], [1, 0]]));
        let mut checker = ProductChecker::new(field, 2);
        // t swap == swap' t with swap' = t swap t^{-1}.
        let conj = Matrix::from_rows(field, &[[0, 1], [1, 0]]);
        let tm = t.to_dense();
        let target = SparseRows::from_dense(&(&(&tm * &conj) * &tm.inverse().unwrap()));
        assert!(checker.products_agree(&t, &swap, &target, &t));
        assert!(!checker.products_agree(&t, &swap, &swap, &swap));
    }
}
