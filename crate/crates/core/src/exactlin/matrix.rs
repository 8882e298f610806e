use std::fmt;

use super::Scalar;

/// Entry count from which elimination first tries a modular image.
const MODULAR_THRESHOLD: usize = 64;

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Convenience constructor for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_i64(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn column_vector(v: Vec<Scalar>) -> Self {
        let n = v.len();
        Matrix {
            rows: n,
            cols: 1,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
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
                    let idx = i * out.cols + j;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        if self.rows == 0 {
            return true;
        }
        let mut p = self.clone();
        let mut k = 1;
        while k < self.rows {
            p = p.mul(&p);
            k *= 2;
        }
        p.is_zero()
    }

    /// `[a | b | ...]`; all blocks share the row count.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.set_block(off, 0, b);
            off += b.rows;
        }
        out
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols);
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.data[i * cols + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Self::zeros(self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for i in 0..self.rows {
                out.data[i * cols.len() + j] = self.get(i, c).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form. Pivots are chosen as the first nonzero entry
    /// scanning columns left to right and rows top to bottom.
    pub fn rref(&self) -> Rref {
        if self.rows * self.cols >= MODULAR_THRESHOLD {
            if let Some(r) = super::modular::rref(self) {
                return r;
            }
        }
        let mut a = self.clone();
        let pivots = a.rref_in_place();
        let rank = pivots.len();
        Rref {
            reduced: a,
            pivots,
            rank,
        }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (m, n) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..n {
            if pr >= m {
                break;
            }
            let Some(found) = (pr..m).find(|&r| !self.data[r * n + col].is_zero()) else {
                continue;
            };
            if found != pr {
                for j in 0..n {
                    self.data.swap(found * n + j, pr * n + j);
                }
            }
            let inv = self.data[pr * n + col].inverse().expect("nonzero pivot");
            for j in col..n {
                let idx = pr * n + j;
                if !self.data[idx].is_zero() {
                    self.data[idx] = &self.data[idx] * &inv;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (col..n)
                .filter(|&j| !self.data[pr * n + j].is_zero())
                .map(|j| (j, self.data[pr * n + j].clone()))
                .collect();
            for r in 0..m {
                if r == pr {
                    continue;
                }
                let f = self.data[r * n + col].clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let idx = r * n + j;
                    self.data[idx] = &self.data[idx] - &(&f * v);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns span the right null space.
    pub fn kernel_basis(&self) -> Matrix {
        let r = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
        let mut k = Matrix::zeros(n, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, Scalar::one());
            for (row, &p) in r.pivots.iter().enumerate() {
                let v = r.reduced.get(row, f);
                if !v.is_zero() {
                    k.set(p, j, -v);
                }
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let x = self.solve_matrix(&Matrix::column_vector(b.to_vec()))?;
        Some(x.column(0))
    }

    /// Some `X` with `self * X = b`.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "incompatible right-hand side");
        let aug = Matrix::hstack(&[self, b]);
        let r = aug.rref();
        if r.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (row, &p) in r.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.reduced.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// The pivot columns of `self`: a basis of its column space.
    pub fn column_space(&self) -> Matrix {
        let r = self.rref();
        self.select_columns(&r.pivots)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_matrix(&Matrix::identity(self.rows))?;
        (self.rank() == self.rows).then_some(x)
    }

    /// Standard basis indices that complete the column space of `self` to `K^rows`.
    pub fn complement_units(&self) -> Vec<usize> {
        let r = self.transpose().rref();
        (0..self.rows).filter(|c| !r.pivots.contains(c)).collect()
    }

    /// Row-major flattening.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.data.clone()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(3).rref();
        assert_eq!((id.rank, id.pivots.clone()), (3, vec![0, 1, 2]));
        let z = Matrix::zeros(2, 2).rref();
        assert_eq!((z.rank, z.pivots.len()), (0, 0));
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.reduced, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(3).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(3, 3).kernel_basis(), Matrix::identity(3));
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::from_i64(&[&[-2], &[1]]));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = vec![Scalar::from_i64(3), Scalar::from_i64(-1)];
        assert_eq!(Matrix::identity(2).solve(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(2, 2).solve(&b), None);
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let x = m
            .solve(&[Scalar::from_i64(1), Scalar::from_i64(2)])
            .unwrap();
        assert_eq!(&x[0] + &(Scalar::from_i64(2) * &x[1]), Scalar::one());
        assert_eq!(m.solve(&[Scalar::from_i64(1), Scalar::from_i64(3)]), None);
    }

    #[test]
    fn inverse_and_nilpotent() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(Matrix::from_i64(&[&[0, 1, 5], &[0, 0, 1], &[0, 0, 0]]).is_nilpotent());
        assert!(!Matrix::identity(1).is_nilpotent());
    }

    #[test]
    fn complement_completes_basis() {
        let u = Matrix::from_i64(&[&[1], &[1], &[0]]);
        assert_eq!(u.complement_units(), vec![1, 2]);
    }
}
