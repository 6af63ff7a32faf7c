//! Dense bit-packed vectors and matrices over GF(2).
//!
//! Rows are stored as contiguous `u64` words with coordinate 0 in bit 0 of
//! word 0. Padding bits past `len` are always zero so that word-wise
//! comparison, hashing and popcount are exact.
//!
//! Indices are 0-based throughout this module. The text format and the CLI
//! use 1-based coordinates; conversion happens at those boundaries only.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector in GF(2)^len.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_padding();
        v
    }

    /// Builds a vector from booleans, coordinate 0 first.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if b {
                words[len / WORD_BITS] |= 1u64 << (len % WORD_BITS);
            }
            len += 1;
        }
        Self { len, words }
    }

    /// Low `len` bits of `value`, bit 0 = coordinate 0.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= WORD_BITS);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = value;
            v.clear_padding();
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "coordinate {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place addition (XOR).
    pub fn add_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and(&self, other: &Gf2Vector) -> Gf2Vector {
        assert_eq!(self.len, other.len, "vector length mismatch");
        Gf2Vector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &Gf2Vector) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Index of the lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &Gf2Vector) -> Gf2Vector {
        Gf2Vector::from_bits(self.iter().chain(other.iter()))
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

impl FromStr for Gf2Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in bit string"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Gf2Vector::from_bits)
    }
}

/// A `rows × cols` matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Gf2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].set(i, true);
        }
        m
    }

    /// Builds a matrix from rows. An empty row list gives a `0 × cols` matrix.
    pub fn from_rows(rows: Vec<Gf2Vector>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Convenience constructor from `'0'`/`'1'` strings, mainly for tests.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.parse()).collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows, cols)
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

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[Gf2Vector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<Gf2Vector> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        Gf2Vector::from_bits(self.data.iter().map(|r| r.get(j)))
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in 0..self.cols {
                if row.get(j) {
                    t.data[j].set(i, true);
                }
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        // Row i of the product is the XOR of the rows of `other` selected by row i of `self`.
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = Gf2Vector::zeros(other.cols);
                for k in 0..self.cols {
                    if row.get(k) {
                        acc.add_assign(&other.data[k]);
                    }
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `self · selfᵀ`, computed directly from row inner products.
    pub fn gram(&self) -> Gf2Matrix {
        let mut g = Gf2Matrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                if self.data[i].dot(&self.data[j]) {
                    g.data[i].set(j, true);
                    g.data[j].set(i, true);
                }
            }
        }
        g
    }

    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.add_assign(b);
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot join {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Row rank over GF(2). Works on a scratch copy.
    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Determinant over GF(2): `true` iff the matrix is nonsingular.
    pub fn det(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rank() == self.rows)
    }

    /// Reduced row echelon form in place; returns the pivot column of each
    /// nonzero row, in order. Zero rows are moved to the bottom.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.data[i].get(col)) else {
                continue;
            };
            self.data.swap(r, p);
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i != r && self.data[i].get(col) {
                    self.data[i].add_assign(&pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    /// Deletes the rows and columns listed in `removed` (0-based).
    pub fn principal_submatrix(&self, removed: &[usize]) -> Result<Gf2Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if let Some(&bad) = removed.iter().find(|&&i| i >= self.rows) {
            return Err(Error::IndexOutOfRange {
                index: bad + 1,
                bound: self.rows,
            });
        }
        let keep: Vec<usize> = (0..self.rows).filter(|i| !removed.contains(i)).collect();
        Ok(self.submatrix(&keep, &keep))
    }

    /// The submatrix with the given (0-based) rows and columns, in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Gf2Matrix {
        let data = rows
            .iter()
            .map(|&i| Gf2Vector::from_bits(cols.iter().map(|&j| self.data[i].get(j))))
            .collect();
        Gf2Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// The matrix with the given (0-based) rows deleted.
    pub fn without_rows(&self, removed: &[usize]) -> Gf2Matrix {
        let data: Vec<_> = self
            .data
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, r)| r.clone())
            .collect();
        Gf2Matrix {
            rows: data.len(),
            cols: self.cols,
            data,
        }
    }

    /// Applies a column permutation: column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Gf2Matrix {
        assert_eq!(perm.len(), self.cols);
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, perm)
    }

    /// Parses the matrix text format: one row of `0`/`1` per line, `#`
    /// comments and blank lines ignored, all rows of equal length.
    pub fn parse_text(text: &str) -> Result<Gf2Matrix> {
        let mut rows = Vec::new();
        let mut cols = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row: Gf2Vector = line
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            match cols {
                None => cols = Some(row.len()),
                Some(c) if c != row.len() => {
                    return Err(Error::Parse(format!(
                        "line {}: row has {} entries, expected {c}",
                        lineno + 1,
                        row.len()
                    )))
                }
                Some(_) => {}
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("no matrix rows found".into()));
        }
        Gf2Matrix::from_rows(rows, cols.unwrap_or(0))
    }

    /// Canonical text rendering: one row per line, each terminated by `\n`.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for row in &self.data {
            s.push_str(&row.to_string());
            s.push('\n');
        }
        s
    }

    /// Rows rendered as bit strings, for JSON payloads.
    pub fn to_bit_rows(&self) -> Vec<String> {
        self.data.iter().map(|r| r.to_string()).collect()
    }

    pub fn from_bit_rows(rows: &[String], cols: usize) -> Result<Gf2Matrix> {
        let rows = rows.iter().map(|r| r.parse()).collect::<Result<Vec<_>>>()?;
        Gf2Matrix::from_rows(rows, cols)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}
