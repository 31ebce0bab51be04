//! Dense matrices over F_p with exact elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::partition::Partition;

/// Row-major dense matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
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
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| field.from_i64(v)))
            .collect();
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_data(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data.into_iter().map(|v| v % field.p()).collect();
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Matrix unit `e_{ij}` (zero-based).
    pub fn unit(field: PrimeField, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m.set(i, j, 1);
        m
    }

    /// Single nilpotent Jordan block of size `n` (ones on the superdiagonal).
    pub fn jordan_block(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, 1);
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Entries as signed representatives, row by row.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| self.field.signed(v)).collect())
            .collect()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(self.field.p(), other.field.p()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("addition of differently shaped matrices".into()));
        }
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(self.field.neg(1))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * other.get(k, j) as u64) % p;
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = v as u32;
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::Shape("vector length mismatch".into()));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// `A^j`, with `A^0` the identity.
    pub fn power(&self, j: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "power of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        let mut e = j;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Kronecker product, `self` as the outer factor.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let f = self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] =
                            f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn block_diag(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and pivot columns. Pivoting takes the first
    /// nonzero entry in each column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            if piv != row {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, row * m.cols + j);
                }
            }
            let inv = f.inv(m.get(row, col));
            for j in col..m.cols {
                let v = f.mul(m.get(row, j), inv);
                m.data[row * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let factor = m.get(i, col);
                if factor == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(row, j)));
                    m.data[i * m.cols + j] = v;
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

    /// Basis of the right kernel `{v : A v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, free));
                }
                v
            })
            .collect()
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::Shape("right-hand side length mismatch".into()));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(Some(inv))
    }

    /// Columns as a matrix from vectors of equal length.
    pub fn from_columns(field: PrimeField, rows: usize, cols: &[Vec<u32>]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape("column length mismatch".into()));
            }
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Jordan type of a p-nilpotent operator from the ranks of its powers.
    pub fn nilpotent_jordan_type(&self, p: u32) -> Result<Partition> {
        let ranks = self.power_ranks(p)?;
        if ranks[p as usize] != 0 {
            return Err(Error::NotPNilpotent(p));
        }
        Partition::from_rank_sequence(&ranks)
    }

    /// `rank A^0, ..., rank A^max`.
    pub fn power_ranks(&self, max: u32) -> Result<Vec<usize>> {
        if !self.is_square() {
            return Err(Error::Shape("rank sequence of a non-square matrix".into()));
        }
        let mut ranks = Vec::with_capacity(max as usize + 1);
        let mut acc = Matrix::identity(self.field, self.rows);
        ranks.push(self.rows);
        for _ in 0..max {
            acc = acc.mul(self)?;
            ranks.push(acc.rank());
        }
        Ok(ranks)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.field.p())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn ranks() {
        let k = f(3);
        assert_eq!(Matrix::identity(k, 3).rank(), 3);
        assert_eq!(Matrix::zeros(k, 3, 3).rank(), 0);
        assert_eq!(Matrix::unit(k, 3, 0, 2).rank(), 1);
    }

    #[test]
    fn kernels() {
        let k = f(3);
        let e13 = Matrix::unit(k, 3, 0, 2);
        let ker = e13.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(e13.apply(v).unwrap().iter().all(|&x| x == 0));
        }
        // span{e1, e2}
        assert!(ker.iter().all(|v| v[2] == 0));
        assert!(Matrix::identity(k, 3).kernel_basis().is_empty());
        assert_eq!(
            Matrix::zeros(k, 2, 2).kernel_basis(),
            vec![vec![1, 0], vec![0, 1]]
        );
    }

    #[test]
    fn powers() {
        let k = f(3);
        let j3 = Matrix::jordan_block(k, 3);
        assert!(j3.power(3).unwrap().is_zero());
        assert_eq!(j3.power(0).unwrap(), Matrix::identity(k, 3));
        assert_eq!(j3.power(2).unwrap(), Matrix::unit(k, 3, 0, 2));
        assert!(Matrix::zeros(k, 2, 3).power(2).is_err());
    }

    #[test]
    fn jordan_types() {
        let k = f(3);
        let j3 = Matrix::jordan_block(k, 3);
        assert_eq!(j3.nilpotent_jordan_type(3).unwrap(), Partition::from_parts(vec![3]));
        assert_eq!(
            Matrix::zeros(k, 4, 4).nilpotent_jordan_type(3).unwrap(),
            Partition::uniform(1, 4)
        );
        let j2 = Matrix::jordan_block(k, 2);
        let m = j3.block_diag(&j2).unwrap().block_diag(&j2).unwrap();
        assert_eq!(m.power_ranks(3).unwrap(), vec![7, 4, 1, 0]);
        assert_eq!(m.nilpotent_jordan_type(3).unwrap().to_string(), "[3][2]^2");
    }

    #[test]
    fn not_p_nilpotent() {
        let k = f(2);
        let j3 = Matrix::jordan_block(k, 3);
        assert!(matches!(j3.nilpotent_jordan_type(2), Err(Error::NotPNilpotent(2))));
    }

    #[test]
    fn inverse_and_solve() {
        let k = f(5);
        let a = Matrix::from_rows(k, &[vec![1, 2], vec![3, 4]]).unwrap();
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(k, 2));
        let x = a.solve(&[1, 0]).unwrap().unwrap();
        assert_eq!(a.apply(&x).unwrap(), vec![1, 0]);
        let sing = Matrix::from_rows(k, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(sing.inverse().unwrap().is_none());
        assert!(sing.solve(&[1, 0]).unwrap().is_none());
    }

    #[test]
    fn kron_dims() {
        let k = f(3);
        let a = Matrix::jordan_block(k, 2);
        let id = Matrix::identity(k, 3);
        let t = a.kron(&id).unwrap();
        assert_eq!((t.rows(), t.cols()), (6, 6));
        assert_eq!(t.rank(), 3);
    }
}
