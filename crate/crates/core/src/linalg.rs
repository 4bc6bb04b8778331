//! Dense matrices over GF(2^r).
//!
//! Text format, one header line then one line per row:
//!
//! ```text
//! rows cols r modulus
//! e00 e01 ...
//! ```
//!
//! Entries are decimal element values.

use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use thiserror::Error;

use crate::gf::{FieldElement, FieldError, GaloisField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrices live over different fields")]
    FieldMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("malformed matrix text at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
    field: GaloisField,
}

/// Result of [`CodeMatrix::rref`].
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: CodeMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl CodeMatrix {
    pub fn zeros(field: GaloisField, rows: usize, cols: usize) -> Self {
        CodeMatrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols], field }
    }

    pub fn identity(field: GaloisField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = FieldElement::ONE;
        }
        m
    }

    /// Builds from row-major data, validating every entry.
    pub fn from_data(
        field: GaloisField,
        rows: usize,
        cols: usize,
        data: Vec<FieldElement>,
    ) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        for &e in &data {
            field.check(e)?;
        }
        Ok(CodeMatrix { rows, cols, data, field })
    }

    pub fn from_rows(field: GaloisField, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(MatrixError::Shape(format!("row of length {} in a matrix with {cols} columns", bad.len())));
        }
        Self::from_data(field, n, cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [FieldElement] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// First `n` rows.
    pub fn top_rows(&self, n: usize) -> Self {
        let n = n.min(self.rows);
        CodeMatrix { rows: n, cols: self.cols, data: self.data[..n * self.cols].to_vec(), field: self.field }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * self.cols);
        head[lo * self.cols..(lo + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }

    /// Reduced row-echelon form. The pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = f.inv(m[(row, col)]).expect("pivot is nonzero");
            for e in m.row_mut(row) {
                *e = f.mul(*e, inv);
            }
            let pivot_row = m.row(row).to_vec();
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let factor = m[(i, col)];
                if factor.is_zero() {
                    continue;
                }
                for (e, &p) in m.row_mut(i).iter_mut().zip(&pivot_row) {
                    *e = f.add(*e, f.mul(factor, p));
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, rank: row, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nonzero rows of the echelon form: a basis of the row space.
    pub fn row_basis(&self) -> Self {
        let e = self.rref();
        e.matrix.top_rows(e.rank)
    }

    /// `self * other^T`; both operands must have the same column count.
    pub fn mul_transpose(&self, other: &CodeMatrix) -> Result<Self, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(MatrixError::Shape(format!(
                "{}x{} times transpose of {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.rows);
        for i in 0..self.rows {
            let a = self.row(i);
            for j in 0..other.rows {
                let b = other.row(j);
                out[(i, j)] = a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
            }
        }
        Ok(out)
    }

    /// Ordinary product `self * other`.
    pub fn mul(&self, other: &CodeMatrix) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.mul_transpose(&other.transpose())
    }

    /// Basis of `{v : self * v^T = 0}`, one vector per row.
    pub fn kernel_basis(&self) -> Self {
        let f = self.field;
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut k = Self::zeros(f, free.len(), self.cols);
        for (r, &fc) in free.iter().enumerate() {
            k[(r, fc)] = FieldElement::ONE;
            // x_pivot = -sum(a * x_free); negation is the identity here.
            for (pr, &pc) in e.pivots.iter().enumerate() {
                k[(r, pc)] = e.matrix[(pr, fc)];
            }
        }
        k
    }

    /// Whether both matrices span the same row space.
    pub fn same_row_space(&self, other: &CodeMatrix) -> bool {
        self.field == other.field && self.cols == other.cols && self.row_basis() == other.row_basis()
    }

    /// Writes the text format.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Index<(usize, usize)> for CodeMatrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CodeMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for CodeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {} {}", self.rows, self.cols, self.field.degree(), self.field.modulus())?;
        for row in self.iter_rows() {
            let mut first = true;
            for e in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", e.value())?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for CodeMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, MatrixError> {
        let err = |line: usize, msg: &str| MatrixError::Parse { line, msg: msg.to_string() };
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(1, "header must be four integers")))
            .collect::<Result<_, _>>()?;
        let [rows, cols, r, modulus] = nums[..] else {
            return Err(err(1, "header must be `rows cols r modulus`"));
        };
        let field = GaloisField::with_modulus(r as u32, modulus as u32)?;
        let (rows, cols) = (rows as usize, cols as usize);
        let mut data = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for (idx, line) in lines {
            let before = data.len();
            for t in line.split_whitespace() {
                let v: u32 = t.parse().map_err(|_| err(idx + 1, "entry is not an integer"))?;
                data.push(field.element(v)?);
            }
            if data.len() - before != cols {
                return Err(err(idx + 1, "wrong number of entries"));
            }
            seen += 1;
        }
        if seen != rows {
            return Err(err(0, &format!("expected {rows} rows, found {seen}")));
        }
        Self::from_data(field, rows, cols, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> GaloisField {
        GaloisField::new(3).unwrap()
    }

    fn mat(f: GaloisField, rows: &[&[u32]]) -> CodeMatrix {
        let cols = rows[0].len();
        let data = rows.iter().map(|r| r.iter().map(|&v| f.element(v).unwrap()).collect()).collect();
        CodeMatrix::from_rows(f, cols, data).unwrap()
    }

    #[test]
    fn rref_trivial_cases() {
        let f = gf8();
        let i3 = CodeMatrix::identity(f, 3);
        let e = i3.rref();
        assert_eq!(e.matrix, i3);
        assert_eq!(e.rank, 3);
        assert_eq!(e.pivots, vec![0, 1, 2]);
        let z = CodeMatrix::zeros(f, 2, 4);
        let e = z.rref();
        assert_eq!(e.matrix, z);
        assert_eq!(e.rank, 0);
    }

    #[test]
    fn rref_small() {
        let f = gf8();
        // second row is 2 * first row
        let m = mat(f, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let e = m.rref();
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.matrix.rref().matrix, e.matrix);
        assert!(e.matrix.row(2).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn products() {
        let f = gf8();
        let a = mat(f, &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.mul(&CodeMatrix::identity(f, 3)).unwrap(), a);
        assert!(a.mul(&CodeMatrix::zeros(f, 3, 2)).unwrap().is_zero());
        assert!(matches!(a.mul(&a), Err(MatrixError::Shape(_))));
        let other = CodeMatrix::identity(GaloisField::new(4).unwrap(), 3);
        assert_eq!(a.mul_transpose(&other), Err(MatrixError::FieldMismatch));
        // a * a^T by hand: row0.row0 = 1 + 4*... computed through mul
        let g = a.mul_transpose(&a).unwrap();
        assert_eq!(g, g.transpose());
    }

    #[test]
    fn kernels() {
        let f = gf8();
        assert_eq!(CodeMatrix::identity(f, 4).kernel_basis().rows(), 0);
        let k = CodeMatrix::zeros(f, 1, 5).kernel_basis();
        assert_eq!(k.rows(), 5);
        assert_eq!(k.rank(), 5);
        let m = mat(f, &[&[1, 2, 3, 4], &[5, 6, 7, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 4 - m.rank());
        assert!(m.mul_transpose(&k).unwrap().is_zero());
    }

    #[test]
    fn text_round_trip() {
        let f = gf8();
        let m = mat(f, &[&[1, 2, 3], &[4, 5, 6]]);
        let text = m.to_text();
        assert_eq!(text, "2 3 3 11\n1 2 3\n4 5 6\n");
        assert_eq!(text.parse::<CodeMatrix>().unwrap(), m);
    }

    #[test]
    fn text_errors() {
        assert!("".parse::<CodeMatrix>().is_err());
        assert!("1 2 3".parse::<CodeMatrix>().is_err());
        assert!("1 2 3 9\n1 1\n".parse::<CodeMatrix>().is_err()); // reducible
        assert!("1 2 3 11\n1 8\n".parse::<CodeMatrix>().is_err()); // 8 not in GF(8)
        assert!("1 2 3 11\n1\n".parse::<CodeMatrix>().is_err());
        assert!("2 2 3 11\n1 1\n".parse::<CodeMatrix>().is_err());
    }
}
