//! Dense and sparse exact linear algebra: row reduction, kernels, solving,
//! determinants, and incremental echelon bases for spans.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(cols: &[Vec<F>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for (r, x) in v.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Matrix { rows, cols, data: vals.iter().map(|&v| F::from_i64(v)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)].add_mul_assign(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (c, x) in v.iter().enumerate() {
                    acc.add_mul_assign(&self[(r, c)], x);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn add_scaled_assign(&mut self, other: &Self, s: &F) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.add_mul_assign(b, s);
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        let mut t = F::zero();
        for i in 0..self.rows {
            t = t + self[(i, i)].clone();
        }
        t
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self[(row, col)].inv().expect("nonzero pivot");
            for c in col..self.cols {
                let v = self[(row, c)].clone() * inv.clone();
                self[(row, c)] = v;
            }
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for c in col..self.cols {
                    let pv = self[(row, c)].clone();
                    if !pv.is_zero() {
                        self.data[r * self.cols + c].sub_mul_assign(&factor, &pv);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[(i, self.cols)].clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return F::zero();
            };
            if p != col {
                for c in 0..n {
                    m.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * inv.clone();
                for c in col..n {
                    let pv = m[(col, c)].clone();
                    m.data[r * n + c].sub_mul_assign(&factor, &pv);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = F::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = aug[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        if self.rows == 0 {
            return true;
        }
        // Repeated squaring reaches exponent >= n in O(log n) products.
        let mut p = self.clone();
        let mut e = 1;
        while e < self.rows {
            p = p.mul(&p);
            e *= 2;
        }
        p.is_zero()
    }

    /// Basis of the column space.
    pub fn column_space(&self) -> Vec<Vec<F>> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }
}

/// Incrementally maintained reduced echelon basis of a subspace of `F^n`.
///
/// Rows are kept fully reduced, so coordinates of a member vector can be read
/// off its pivot entries.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    n: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(n: usize) -> Self {
        EchelonBasis { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a Vec<F>>>(n: usize, vs: I) -> Self {
        let mut b = Self::new(n);
        for v in vs {
            b.insert(v.clone());
        }
        b
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after subtracting its projection onto the span along the pivots.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    x.sub_mul_assign(&c, r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.n);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    x.sub_mul_assign(&c, r);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` in terms of the stored rows, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (row, c) in self.rows.iter().zip(&coords) {
            for (x, r) in rest.iter_mut().zip(row) {
                if !r.is_zero() {
                    x.sub_mul_assign(c, r);
                }
            }
        }
        rest.iter().all(|x| x.is_zero()).then_some(coords)
    }
}

/// Sparse vector: sorted `(index, nonzero value)` pairs.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_axpy<F: Field>(x: &SparseVec<F>, c: &F, y: &SparseVec<F>) -> SparseVec<F> {
    // x + c*y
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = c.clone() * y[j].1.clone();
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let mut v = x[i].1.clone();
            v.add_mul_assign(c, &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Sparse echelon form whose pivot is the largest index of each row.
///
/// After [`SparseEchelon::finish`], rows are fully reduced and
/// [`SparseEchelon::normal_form`] computes canonical representatives modulo the span.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon<F> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, idx: usize) -> bool {
        self.rows.contains_key(&idx)
    }

    pub fn insert(&mut self, mut v: SparseVec<F>) -> bool {
        loop {
            let Some((lead, coef)) = v.last().cloned() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(row) => {
                    v = sparse_axpy(&v, &(-coef), row);
                }
                None => {
                    let inv = coef.inv().expect("nonzero");
                    let v = v.into_iter().map(|(i, x)| (i, x * inv.clone())).collect();
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
    }

    /// Back-substitutes so every row mentions no pivot other than its own.
    pub fn finish(&mut self) {
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for k in keys {
            let mut row = self.rows.remove(&k).expect("row present");
            loop {
                let target = row
                    .iter()
                    .rev()
                    .skip(1)
                    .find(|(i, _)| self.rows.contains_key(i))
                    .map(|(i, c)| (*i, c.clone()));
                match target {
                    Some((i, c)) => {
                        let other = &self.rows[&i];
                        row = sparse_axpy(&row, &(-c), other);
                    }
                    None => break,
                }
            }
            self.rows.insert(k, row);
        }
    }

    /// Basis of `{x ∈ F^n : r·x = 0 for every inserted row r}`; call after [`SparseEchelon::finish`].
    pub fn kernel(&self, n: usize) -> Vec<Vec<F>> {
        let mut basis = Vec::new();
        let mut column_entries: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for (&p, row) in &self.rows {
            for (q, c) in row {
                if *q != p {
                    column_entries.entry(*q).or_default().push((p, c.clone()));
                }
            }
        }
        for free in (0..n).filter(|q| !self.rows.contains_key(q)) {
            let mut v = vec![F::zero(); n];
            v[free] = F::one();
            if let Some(entries) = column_entries.get(&free) {
                for (p, c) in entries {
                    v[*p] = -c.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn normal_form(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = v.clone();
        for (i, c) in v.iter().rev() {
            if let Some(row) = self.rows.get(i) {
                let c = out.iter().find(|(j, _)| j == i).map(|(_, x)| x.clone()).unwrap_or_else(|| c.clone());
                if !c.is_zero() {
                    out = sparse_axpy(&out, &(-c), row);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Q, F2};
    use proptest::prelude::*;

    fn q(vals: &[i64], r: usize, c: usize) -> Matrix<Q> {
        Matrix::from_i64(r, c, vals)
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[1, 2, 3, 2, 4, 6, 1, 0, 1], 3, 3);
        assert_eq!(m.rank(), 2);
        let ker = m.nullspace();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = q(&[2, 1, 1, 1], 2, 2);
        assert_eq!(m.determinant(), Q::from_i64(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(q(&[1, 1, 1, 1], 2, 2).inverse().is_none());
    }

    #[test]
    fn nilpotency() {
        assert!(q(&[0, 1, 0, 0, 0, 1, 0, 0, 0], 3, 3).is_nilpotent());
        assert!(!q(&[0, 1, 1, 0], 2, 2).is_nilpotent());
    }

    #[test]
    fn solve_inconsistent() {
        let m = q(&[1, 1, 1, 1], 2, 2);
        assert!(m.solve(&[Q::from_i64(1), Q::from_i64(2)]).is_none());
        assert!(m.solve(&[Q::from_i64(3), Q::from_i64(3)]).is_some());
    }

    #[test]
    fn f2_determinant() {
        let m: Matrix<F2> = Matrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn sparse_normal_form() {
        let mut e: SparseEchelon<Q> = SparseEchelon::new();
        // x2 = x0 + x1, x3 = 2 x2
        e.insert(vec![(0, Q::from_i64(-1)), (1, Q::from_i64(-1)), (2, Q::from_i64(1))]);
        e.insert(vec![(2, Q::from_i64(-2)), (3, Q::from_i64(1))]);
        e.finish();
        let nf = e.normal_form(&vec![(3, Q::from_i64(1))]);
        assert_eq!(nf, vec![(0, Q::from_i64(2)), (1, Q::from_i64(2))]);
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let m = q(&[1, 2, 0, 1, 0, 1, 1, 0, 1, 3, 1, 1], 3, 4);
        let mut e = SparseEchelon::new();
        for r in 0..3 {
            let row: SparseVec<Q> = (0..4).filter(|&c| !m[(r, c)].is_zero()).map(|c| (c, m[(r, c)].clone())).collect();
            e.insert(row);
        }
        e.finish();
        let ker = e.kernel(4);
        assert_eq!(ker.len(), m.nullspace().len());
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    proptest! {
        #[test]
        fn rank_nullity(vals in proptest::collection::vec(-3i64..4, 12)) {
            let m = q(&vals, 3, 4);
            prop_assert_eq!(m.rank() + m.nullspace().len(), 4);
        }

        #[test]
        fn echelon_coordinates(vals in proptest::collection::vec(-3i64..4, 12), a in -3i64..4, b in -3i64..4) {
            let rows: Vec<Vec<Q>> = vals.chunks(4).map(|c| c.iter().map(|&x| Q::from_i64(x)).collect()).collect();
            let basis = EchelonBasis::from_vectors(4, &rows);
            let combo: Vec<Q> = (0..4).map(|i| Q::from_i64(a) * rows[0][i].clone() + Q::from_i64(b) * rows[2][i].clone()).collect();
            prop_assert!(basis.contains(&combo));
            let coords = basis.coordinates(&combo).unwrap();
            let mut rebuilt = vec![Q::zero(); 4];
            for (c, r) in coords.iter().zip(basis.rows()) {
                for i in 0..4 { rebuilt[i].add_mul_assign(c, &r[i]); }
            }
            prop_assert_eq!(rebuilt, combo);
        }
    }
}
