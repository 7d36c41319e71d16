//! Exact dense linear algebra over a field context: echelon forms, rank,
//! kernel, solving. Sizes here are small (tens to a few thousand), so a
//! straightforward fraction-exact Gauss-Jordan is the right tool.

use crate::field::FieldCtx;

#[derive(Debug, Clone)]
pub struct Mat<F: FieldCtx> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F::Elem>,
}

impl<F: FieldCtx> Mat<F> {
    pub fn zero(f: &F, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn from_rows(f: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        let _ = f;
        Mat { rows: r, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = Mat::zero(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn transpose(&self, f: &F) -> Self {
        let mut out = Mat::zero(f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    /// Row-reduce in place; returns the pivot columns.
    pub fn rref(&mut self, f: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !f.is_zero(self.at(i, col))) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(row * self.cols + j, p * self.cols + j);
            }
            let inv = f.inv(self.at(row, col));
            for j in col..self.cols {
                let v = f.mul(self.at(row, j), &inv);
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i != row && !f.is_zero(self.at(i, col)) {
                    let factor = self.at(i, col).clone();
                    for j in col..self.cols {
                        let v = f.sub(self.at(i, j), &f.mul(&factor, self.at(row, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &F) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Solve `self * x = b` exactly; `None` when inconsistent. When the
    /// kernel is nontrivial, free variables are set to zero.
    pub fn solve(&self, f: &F, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::<F>::zero(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref(f);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }
}

/// An incremental row-echelon basis over sparse rows, used for span/rank
/// bookkeeping where rows arrive one at a time.
#[derive(Debug, Clone)]
pub struct Echelon<F: FieldCtx> {
    f: F,
    /// Rows normalised to leading coefficient 1, keyed by pivot column.
    rows: std::collections::BTreeMap<usize, Vec<(usize, F::Elem)>>,
}

impl<F: FieldCtx> Echelon<F> {
    pub fn new(f: F) -> Self {
        Echelon { f, rows: Default::default() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Reduce a sparse row against the basis; the remainder has no pivot in
    /// common with existing rows.
    pub fn reduce(&self, row: &[(usize, F::Elem)]) -> Vec<(usize, F::Elem)> {
        let f = &self.f;
        let mut cur: std::collections::BTreeMap<usize, F::Elem> = row
            .iter()
            .filter(|(_, v)| !f.is_zero(v))
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        loop {
            let Some((&lead, coeff)) = cur.iter().next() else {
                return Vec::new();
            };
            let coeff = coeff.clone();
            let Some(basis_row) = self.rows.get(&lead) else {
                return cur.into_iter().collect();
            };
            cur.remove(&lead);
            for (col, v) in basis_row.iter().skip(1) {
                let delta = f.mul(&coeff, v);
                let entry = cur.entry(*col).or_insert_with(|| f.zero());
                *entry = f.sub(entry, &delta);
                if f.is_zero(entry) {
                    cur.remove(col);
                }
            }
        }
    }

    /// Insert a row; returns true if it enlarged the span.
    pub fn insert(&mut self, row: &[(usize, F::Elem)]) -> bool {
        let reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        let f = &self.f;
        let lead = reduced[0].0;
        let inv = f.inv(&reduced[0].1);
        let normal: Vec<(usize, F::Elem)> = reduced
            .into_iter()
            .map(|(c, v)| (c, f.mul(&v, &inv)))
            .collect();
        // Back-substitute into existing rows to keep full reduction.
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for k in keys {
            let row_k = self.rows.get(&k).unwrap();
            if let Some(pos) = row_k.iter().position(|(c, _)| *c == lead) {
                let factor = row_k[pos].1.clone();
                let mut updated: std::collections::BTreeMap<usize, F::Elem> =
                    row_k.iter().cloned().collect();
                for (c, v) in &normal {
                    let delta = f.mul(&factor, v);
                    let entry = updated.entry(*c).or_insert_with(|| f.zero());
                    *entry = f.sub(entry, &delta);
                    if f.is_zero(entry) {
                        updated.remove(c);
                    }
                }
                self.rows.insert(k, updated.into_iter().collect());
            }
        }
        self.rows.insert(lead, normal);
        true
    }

    /// Whether the row lies in the span.
    pub fn contains(&self, row: &[(usize, F::Elem)]) -> bool {
        self.reduce(row).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num::BigRational;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn rref_rank_solve() {
        let f = Rationals;
        let m = Mat::from_rows(
            &f,
            vec![
                vec![q(1), q(2), q(3)],
                vec![q(2), q(4), q(6)],
                vec![q(1), q(0), q(1)],
            ],
        );
        assert_eq!(m.rank(&f), 2);
        let x = m.solve(&f, &[q(6), q(12), q(2)]).unwrap();
        // Check A x = b.
        for (i, b) in [q(6), q(12), q(2)].iter().enumerate() {
            let mut acc = q(0);
            for j in 0..3 {
                acc += m.at(i, j) * &x[j];
            }
            assert_eq!(&acc, b);
        }
        assert!(m.solve(&f, &[q(1), q(0), q(0)]).is_none());
    }

    #[test]
    fn echelon_incremental() {
        let f = PrimeField::new(3);
        let mut e = Echelon::new(f);
        assert!(e.insert(&[(0, 1), (2, 2)]));
        assert!(e.insert(&[(1, 1)]));
        assert!(!e.insert(&[(0, 2), (1, 1), (2, 1)]));
        assert_eq!(e.dim(), 2);
    }
}
