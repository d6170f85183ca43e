//! Exact integer matrices and Smith normal form.

use std::collections::BTreeMap;

use crate::scalar::ExactInt;

/// A dense matrix over an exact integer type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: ExactInt> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let converted: Vec<Vec<T>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| T::from_i64(x).expect("scalar conversion"))
                    .collect()
            })
            .collect();
        Self::from_rows(&converted)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn to_sparse(&self) -> SparseMatrix<T> {
        let mut s = SparseMatrix::new(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                if !x.is_zero() {
                    s.rows[i].insert(j, x.clone());
                    s.col_rows[j].insert(i, ());
                }
            }
        }
        s
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Invariant factors d_1 | d_2 | ... (all positive) and the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub invariant_factors: Vec<T>,
}

impl<T: ExactInt> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors larger than one: the torsion contributed by this map.
    pub fn torsion(&self) -> Vec<T> {
        self.invariant_factors
            .iter()
            .filter(|x| !x.is_one())
            .cloned()
            .collect()
    }
}

/// Row-sparse working copy used for the unit-pivot elimination pass.
struct SparseMatrix<T> {
    rows: Vec<BTreeMap<usize, T>>,
    col_rows: Vec<BTreeMap<usize, ()>>,
}

impl<T: ExactInt> SparseMatrix<T> {
    fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows: vec![BTreeMap::new(); rows],
            col_rows: vec![BTreeMap::new(); cols],
        }
    }

    /// A unit entry of column `c` in the shortest possible row.
    fn unit_in_column(&self, c: usize) -> Option<usize> {
        self.col_rows[c]
            .keys()
            .copied()
            .filter(|&i| self.rows[i][&c].is_unit())
            .min_by_key(|&i| self.rows[i].len())
    }

    /// Clears column `c` using the unit at (`r`, `c`), then drops row `r`
    /// and column `c`. Column operations against a unit pivot never touch
    /// the other rows once the column is clear, so they are skipped.
    fn eliminate(&mut self, r: usize, c: usize) {
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let p = pivot_row[&c].clone();
        let targets: Vec<usize> = self.col_rows[c]
            .keys()
            .copied()
            .filter(|&i| i != r)
            .collect();
        for i in targets {
            let factor = self.rows[i][&c].clone() * p.clone(); // p = p^{-1}
            for (&j, x) in &pivot_row {
                let entry = self.rows[i].entry(j).or_insert_with(T::zero);
                *entry = entry.clone() - factor.clone() * x.clone();
                if entry.is_zero() {
                    self.rows[i].remove(&j);
                    self.col_rows[j].remove(&i);
                } else {
                    self.col_rows[j].insert(i, ());
                }
            }
        }
        for &j in pivot_row.keys() {
            self.col_rows[j].remove(&r);
        }
    }

    fn into_dense_remainder(self) -> Matrix<T> {
        let live_rows: Vec<usize> = (0..self.rows.len())
            .filter(|&i| !self.rows[i].is_empty())
            .collect();
        let live_cols: Vec<usize> = (0..self.col_rows.len())
            .filter(|&j| !self.col_rows[j].is_empty())
            .collect();
        let col_index: BTreeMap<usize, usize> =
            live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut m = Matrix::zeros(live_rows.len(), live_cols.len());
        for (a, &i) in live_rows.iter().enumerate() {
            for (j, x) in &self.rows[i] {
                m[(a, col_index[j])] = x.clone();
            }
        }
        m
    }
}

/// Smith normal form over the integers.
///
/// A sparse pass first removes every unit pivot it can find; the remainder
/// goes through classical dense reduction with smallest-entry pivoting.
pub fn smith_normal_form<T: ExactInt>(m: &Matrix<T>) -> SmithForm<T> {
    let mut sparse = m.to_sparse();
    let mut units = 0usize;
    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..sparse.col_rows.len() {
            if let Some(r) = sparse.unit_in_column(c) {
                sparse.eliminate(r, c);
                units += 1;
                progress = true;
            }
        }
    }
    let rest = dense_smith(sparse.into_dense_remainder());
    let mut factors = vec![T::one(); units];
    factors.extend(rest);
    SmithForm {
        invariant_factors: factors,
    }
}

fn dense_smith<T: ExactInt>(mut a: Matrix<T>) -> Vec<T> {
    let (rows, cols) = (a.rows, a.cols);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut a, t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                add_row_multiple(&mut a, i, t, &q);
                if !a[(i, t)].is_zero() {
                    swap_rows(&mut a, t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                add_col_multiple(&mut a, j, t, &q);
                if !a[(t, j)].is_zero() {
                    swap_cols(&mut a, t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // enforce divisibility of the trailing block
            let p = a[(t, t)].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[(t, j)].clone() + a[(i, j)].clone();
                        a[(t, j)] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[(t, t)].abs());
    }
    diag
}

fn swap_rows<T: ExactInt>(a: &mut Matrix<T>, i: usize, k: usize) {
    if i == k {
        return;
    }
    for j in 0..a.cols {
        a.data.swap(i * a.cols + j, k * a.cols + j);
    }
}

fn swap_cols<T: ExactInt>(a: &mut Matrix<T>, j: usize, k: usize) {
    if j == k {
        return;
    }
    for i in 0..a.rows {
        a.data.swap(i * a.cols + j, i * a.cols + k);
    }
}

/// row_i -= q * row_t
fn add_row_multiple<T: ExactInt>(a: &mut Matrix<T>, i: usize, t: usize, q: &T) {
    for j in 0..a.cols {
        let v = a[(i, j)].clone() - q.clone() * a[(t, j)].clone();
        a[(i, j)] = v;
    }
}

/// col_j -= q * col_t
fn add_col_multiple<T: ExactInt>(a: &mut Matrix<T>, j: usize, t: usize, q: &T) {
    for i in 0..a.rows {
        let v = a[(i, j)].clone() - q.clone() * a[(i, t)].clone();
        a[(i, j)] = v;
    }
}

/// Rank over the rationals.
pub fn rank<T: ExactInt>(m: &Matrix<T>) -> usize {
    smith_normal_form(m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(rows: &[Vec<i64>]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows)
    }

    fn factors(m: &Matrix<BigInt>) -> Vec<i64> {
        smith_normal_form(m)
            .invariant_factors
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(factors(&Matrix::identity(3)), vec![1, 1, 1]);
        let z = Matrix::<BigInt>::zeros(3, 4);
        assert_eq!(factors(&z), Vec::<i64>::new());
        assert_eq!(rank(&z), 0);
    }

    #[test]
    fn coprime_diagonal() {
        assert_eq!(factors(&big(&[vec![2, 0], vec![0, 3]])), vec![1, 6]);
        assert_eq!(
            factors(&big(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])),
            vec![2, 6, 12]
        );
    }

    #[test]
    fn fixed_width_scalars_agree() {
        let rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let f64s = smith_normal_form(&Matrix::<i64>::from_i64_rows(&rows)).invariant_factors;
        assert_eq!(f64s, vec![2, 6, 12]);
    }

    #[test]
    fn mixed_unit_and_torsion() {
        let m = big(&[vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 0]]);
        assert_eq!(factors(&m), vec![1, 2]);
    }
}
