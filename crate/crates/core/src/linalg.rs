//! Exact sparse linear algebra over the rationals.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// A sparse vector: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Scalar>;

fn axpy(v: &mut SparseVec, c: &Scalar, w: &SparseVec) {
    for (i, x) in w {
        let e = v.entry(*i).or_insert_with(Scalar::zero);
        *e += c * x;
        if e.is_zero() {
            v.remove(i);
        }
    }
}

/// Incremental echelon basis of a subspace, with each basis vector remembering
/// how it was obtained from the inserted vectors.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    /// pivot index -> (vector with pivot coefficient 1, combination of inserted vectors)
    rows: BTreeMap<usize, (SparseVec, SparseVec)>,
    inserted: usize,
    track: bool,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    /// Records, for every basis vector, its expression in terms of the inserted vectors.
    pub fn tracking() -> Echelon {
        Echelon {
            track: true,
            ..Echelon::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Reduces `v` modulo the span; returns the remainder (zero at every pivot) and,
    /// when tracking, the combination of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut v = v.clone();
        let mut used = SparseVec::new();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).next().map(|(i, c)| (*i, c.clone()));
            let Some((i, c)) = next else { break };
            if let Some((row, comb)) = self.rows.get(&i) {
                axpy(&mut v, &-c.clone(), row);
                if self.track {
                    axpy(&mut used, &c, comb);
                }
            }
            cursor = i + 1;
        }
        (v, used)
    }

    /// Inserts `v`. Returns `None` if `v` was independent, otherwise the dependency:
    /// a combination of earlier inserted vectors equal to `v` (when tracking).
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let id = self.inserted;
        self.inserted += 1;
        let (rem, used) = self.reduce(v);
        match rem.iter().next() {
            None => Some(used),
            Some((&p, lead)) => {
                let inv = Scalar::one() / lead;
                let row: SparseVec = rem.iter().map(|(i, c)| (*i, c * &inv)).collect();
                let mut comb = SparseVec::new();
                if self.track {
                    comb.insert(id, Scalar::one());
                    axpy(&mut comb, &-Scalar::one(), &used);
                    for c in comb.values_mut() {
                        *c *= &inv;
                    }
                }
                self.rows.insert(p, (row, comb));
                None
            }
        }
    }

    /// Expresses `v` through the inserted vectors if it lies in their span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rem, used) = self.reduce(v);
        if rem.is_empty() {
            Some(used)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_empty()
    }

    fn rows_sorted(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter().map(|(p, (r, _))| (p, r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: SparseMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> SparseMatrix {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![SparseVec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> SparseMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::zeros(nrows, ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged matrix");
            for (j, c) in r.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    /// Builds a matrix from its columns, given as `(row, value)` lists.
    pub fn from_columns(nrows: usize, cols: &[Vec<(usize, Scalar)>]) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col {
                let cur = m.get(*i, j);
                m.set(*i, j, cur + c);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(&j).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        assert!(i < self.nrows && j < self.ncols, "index out of bounds");
        if c.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, c);
        }
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zeros(self.ncols, self.nrows);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in r {
                t.rows[*j].insert(i, c.clone());
            }
        }
        t
    }

    pub fn column(&self, j: usize) -> SparseVec {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.get(&j).map(|c| (i, c.clone())))
            .collect()
    }

    pub fn matmul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch");
        let mut out = SparseMatrix::zeros(self.nrows, other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (k, c) in r {
                axpy(&mut acc, c, &other.rows[*k]);
            }
            out.rows[i] = acc;
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ncols, "shape mismatch");
        self.rows
            .iter()
            .map(|r| r.iter().fold(Scalar::zero(), |acc, (j, c)| acc + c * &v[*j]))
            .collect()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut ech = Echelon::new();
        for r in &self.rows {
            ech.insert(r);
        }
        let pivots = ech.pivots();
        // Back-substitute so every pivot column is a unit vector.
        let mut reduced: BTreeMap<usize, SparseVec> =
            ech.rows_sorted().map(|(p, r)| (*p, r.clone())).collect();
        for &p in pivots.iter().rev() {
            let row = reduced[&p].clone();
            for (&q, other) in reduced.iter_mut() {
                if q != p {
                    if let Some(c) = other.get(&p).cloned() {
                        axpy(other, &-c, &row);
                    }
                }
            }
        }
        let mut matrix = SparseMatrix::zeros(self.nrows, self.ncols);
        for (k, p) in pivots.iter().enumerate() {
            matrix.rows[k] = reduced[p].clone();
        }
        Rref {
            rank: pivots.len(),
            matrix,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for r in &self.rows {
            ech.insert(r);
        }
        ech.rank()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        let pivot_set: HashMap<usize, usize> =
            rref.pivots.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if pivot_set.contains_key(&f) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.ncols];
            v[f] = Scalar::one();
            for (k, p) in rref.pivots.iter().enumerate() {
                if let Some(c) = rref.matrix.rows[k].get(&f) {
                    v[*p] = -c.clone();
                }
            }
            out.push(v);
        }
        out
    }

    /// The pivot columns of the original matrix.
    pub fn image_basis(&self) -> Vec<Vec<Scalar>> {
        let t = self.transpose();
        let mut ech = Echelon::new();
        let mut out = Vec::new();
        for j in 0..self.ncols {
            if ech.insert(&t.rows[j]).is_none() {
                let mut v = vec![Scalar::zero(); self.nrows];
                for (i, c) in &t.rows[j] {
                    v[*i] = c.clone();
                }
                out.push(v);
            }
        }
        out
    }

    /// Some solution of `self · x = b`, with free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.nrows, "shape mismatch");
        let t = self.transpose();
        let mut ech = Echelon::tracking();
        for j in 0..self.ncols {
            ech.insert(&t.rows[j]);
        }
        let target: SparseVec = b
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let comb = ech.solve(&target)?;
        let mut x = vec![Scalar::zero(); self.ncols];
        for (j, c) in comb {
            x[j] = c;
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<SparseMatrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::one();
            let x = self.solve(&e)?;
            cols.push(
                x.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<Vec<_>>(),
            );
        }
        Some(SparseMatrix::from_columns(n, &cols))
    }
}
