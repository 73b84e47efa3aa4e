//! Dense exact linear algebra over F_p: row reduction, rank, kernels and
//! incremental row spaces. Matrices are small (graded pieces), so a
//! straightforward dense Gaussian elimination is the right tool.

use crate::error::Result;
use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub field: PrimeField,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u32>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| x % field.p()));
        }
        FpMatrix { field, rows: r, cols: c, data }
    }

    /// Builds the matrix whose j-th column is `cols[j]`.
    pub fn from_cols(field: PrimeField, rows: usize, cols: Vec<Vec<u32>>) -> Self {
        let c = cols.len();
        let mut m = Self::zero(field, rows, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x % field.p());
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc += self.get(i, j) as u64 * v[j] as u64;
                    if acc >= u64::MAX / 2 {
                        acc %= p;
                    }
                }
                (acc % p) as u32
            })
            .collect()
    }

    pub fn matmul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = FpMatrix::zero(self.field, self.rows, other.cols);
        let p = self.field.p() as u64;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j) as u64;
                    out.set(i, j, ((cur + a * other.get(k, j) as u64) % p) as u32);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    let (a, b) = (self.get(r, j), self.get(pr, j));
                    self.set(r, j, b);
                    self.set(pr, j, a);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot nonzero");
            for j in 0..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let factor = self.get(i, c);
                    for j in 0..self.cols {
                        let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the null space `{ v : Mv = 0 }`; empty when injective.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (c, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    v[c] = f.neg(m.get(*row, free));
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `MX = B` columnwise; None when any column is inconsistent.
    pub fn solve_matrix(&self, rhs: &FpMatrix) -> Option<FpMatrix> {
        assert_eq!(rhs.rows, self.rows);
        let mut out = FpMatrix::zero(self.field, self.cols, rhs.cols);
        for j in 0..rhs.cols {
            let b: Vec<u32> = (0..rhs.rows).map(|i| rhs.get(i, j)).collect();
            let x = self.solve(&b)?;
            for (i, v) in x.iter().enumerate() {
                out.set(i, j, *v);
            }
        }
        Some(out)
    }

    /// One solution of `Mx = b`, or None when inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field;
        let mut aug = FpMatrix::zero(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(row, self.cols);
        }
        Some(x)
    }
}

/// Incrementally built echelonized row space of `k^n`; the backbone of the
/// degreewise cohomology computations.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: PrimeField,
    pub n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: PrimeField, n: usize) -> Self {
        RowSpace { field, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored echelon rows in place.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for j in piv..self.n {
                    v[j] = f.sub(v[j], f.mul(c, row[j]));
                }
            }
        }
    }

    /// Reduces and inserts; returns true when `v` enlarged the space.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        let f = self.field;
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[piv]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // keep fully reduced: clear this pivot from existing rows
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for j in 0..self.n {
                    row[j] = f.sub(row[j], f.mul(c, v[j]));
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > piv).unwrap_or(self.pivots.len());
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Coordinates of `v` in the stored basis, when `v` lies in the space.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let f = self.field;
        let mut w = v.to_vec();
        let mut coords = vec![0u32; self.rows.len()];
        for (idx, (row, &piv)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = w[piv];
            if c != 0 {
                coords[idx] = c;
                for j in piv..self.n {
                    w[j] = f.sub(w[j], f.mul(c, row[j]));
                }
            }
        }
        if w.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }
}

/// Checks the rank-nullity bookkeeping promised by the matrix contract.
pub fn rank_nullity_holds(m: &FpMatrix) -> Result<bool> {
    Ok(m.rank() + m.kernel().len() == m.cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = FpMatrix::identity(f(3), 2);
        assert!(m.kernel().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let m = FpMatrix::zero(f(5), 2, 3);
        let k = m.kernel();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            let mut expected = vec![0u32; 3];
            expected[i] = 1;
            assert_eq!(v, &expected);
        }
    }

    #[test]
    fn kernel_rank_one_example() {
        // [[1,1],[2,2]] over F_5 has kernel spanned by (1,4) = (1,-1)
        let m = FpMatrix::from_rows(f(5), vec![vec![1, 1], vec![2, 2]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        // brute force over all 25 vectors: solutions are scalar multiples of (1,4)
        let mut sols = Vec::new();
        for a in 0..5u32 {
            for b in 0..5u32 {
                if m.mul_vec(&[a, b]).iter().all(|&x| x == 0) && (a, b) != (0, 0) {
                    sols.push((a, b));
                }
            }
        }
        assert_eq!(sols.len(), 4);
        assert!(sols.contains(&(1, 4)));
        let v = &k[0];
        assert!(sols.contains(&(v[0], v[1])));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = FpMatrix::from_rows(f(7), vec![vec![1, 2], vec![3, 4]]);
        let x = m.solve(&[5, 6]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![5, 6]);
        let singular = FpMatrix::from_rows(f(7), vec![vec![1, 1], vec![2, 2]]);
        assert!(singular.solve(&[1, 3]).is_none());
    }

    #[test]
    fn rowspace_insert_reduce() {
        let mut rs = RowSpace::new(f(3), 3);
        assert!(rs.insert(vec![1, 2, 0]));
        assert!(rs.insert(vec![0, 1, 1]));
        assert!(!rs.insert(vec![1, 0, 1])); // (1,2,0) + (0,1,1) = (1,0,1) over F_3
        assert_eq!(rs.rank(), 2);
        assert!(rs.contains(&[1, 0, 1]));
        assert!(!rs.contains(&[2, 1, 2]));
        let coords = rs.coordinates(&[1, 2, 0]).unwrap();
        assert_eq!(coords.len(), 2);
    }
}
