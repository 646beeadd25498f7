//! Binary matrix form of a soft set.
//!
//! Row `i` is the `i`-th universe element and column `j` the `j`-th
//! attribute; entry `(i, j)` is 1 iff element `i` belongs to the value of
//! attribute `j`. Columns are packed into `u64` words, so column-wise
//! boolean operations and popcounts work a word at a time.

use std::fmt;

use crate::error::{Result, SoftSetError};
use crate::softset::{SoftSet, Subset, Universe};

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_col: usize,
    // column-major; bits past `rows` in the last word of each column are zero
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_col = rows.div_ceil(WORD_BITS);
        BitMatrix {
            rows,
            cols,
            words_per_col,
            words: vec![0; words_per_col * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        m.words.iter_mut().for_each(|w| *w = !0);
        m.clear_padding();
        m
    }

    /// Builds a matrix from row arrays. Every row must have `cols` entries
    /// and every entry must be 0 or 1.
    pub fn from_rows<R, T>(rows: &[R], cols: usize) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Copy + Into<i64>,
    {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(SoftSetError::RaggedMatrix {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                match v.into() {
                    0 => {}
                    1 => m.set(i, j, true),
                    value => {
                        return Err(SoftSetError::InvalidEntry {
                            row: i,
                            col: j,
                            value,
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    /// Like [`BitMatrix::from_rows`], taking the width from the first row
    /// (zero columns when there are no rows).
    pub fn from_row_vecs<T: Copy + Into<i64>>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        BitMatrix::from_rows(rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        let w = self.words[col * self.words_per_col + row / WORD_BITS];
        (w >> (row % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        let w = &mut self.words[col * self.words_per_col + row / WORD_BITS];
        let mask = 1u64 << (row % WORD_BITS);
        if bit {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn column(&self, col: usize) -> &[u64] {
        let start = col * self.words_per_col;
        &self.words[start..start + self.words_per_col]
    }

    fn column_mut(&mut self, col: usize) -> &mut [u64] {
        let start = col * self.words_per_col;
        &mut self.words[start..start + self.words_per_col]
    }

    /// Number of ones in a column.
    pub fn column_weight(&self, col: usize) -> usize {
        self.column(col)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Number of rows where columns `a` of `self` and `b` of `other` agree.
    pub fn column_agreement(&self, a: usize, other: &BitMatrix, b: usize) -> usize {
        debug_assert_eq!(self.rows, other.rows);
        let differ: usize = self
            .column(a)
            .iter()
            .zip(other.column(b))
            .map(|(x, y)| (x ^ y).count_ones() as usize)
            .sum();
        self.rows - differ
    }

    /// Rows `i` with entry 1 in column `col`.
    pub fn column_support(&self, col: usize) -> Subset {
        (0..self.rows).filter(|&i| self.get(i, col)).collect()
    }

    /// Entrywise negation.
    pub fn not(&self) -> BitMatrix {
        let mut m = self.clone();
        m.words.iter_mut().for_each(|w| *w = !*w);
        m.clear_padding();
        m
    }

    /// Combines every column of `self` with every column of `other`: result
    /// column `i * other.cols() + k` is `op` applied wordwise to column `i`
    /// of `self` and column `k` of `other`.
    pub fn column_pairs(
        &self,
        other: &BitMatrix,
        op: impl Fn(u64, u64) -> u64,
    ) -> Result<BitMatrix> {
        if self.rows != other.rows {
            return Err(SoftSetError::DimensionMismatch {
                expected_rows: self.rows,
                expected_cols: other.cols,
                found_rows: other.rows,
                found_cols: other.cols,
            });
        }
        let mut out = BitMatrix::zeros(self.rows, self.cols * other.cols);
        for i in 0..self.cols {
            for k in 0..other.cols {
                let dst = out.column_mut(i * other.cols + k);
                for ((d, x), y) in dst.iter_mut().zip(self.column(i)).zip(other.column(k)) {
                    *d = op(*x, *y);
                }
            }
        }
        out.clear_padding();
        Ok(out)
    }

    /// Copy of the matrix with its columns rearranged: column `k` of the
    /// result is column `order[k]` of `self`.
    pub fn select_columns(&self, order: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, order.len());
        for (k, &j) in order.iter().enumerate() {
            out.column_mut(k).copy_from_slice(self.column(j));
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn clear_padding(&mut self) {
        let tail = self.rows % WORD_BITS;
        if tail == 0 || self.words_per_col == 0 {
            return;
        }
        let mask = (1u64 << tail) - 1;
        for c in 0..self.cols {
            let last = c * self.words_per_col + self.words_per_col - 1;
            self.words[last] &= mask;
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix{:?}", self.to_rows())
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl SoftSet {
    /// The binary matrix: rows follow the universe order and columns the
    /// attribute order.
    pub fn to_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.universe().len(), self.len());
        for (j, value) in self.values().iter().enumerate() {
            for &i in value {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Reads a soft set back from its matrix under the given orderings.
    pub fn from_matrix<S: Into<String>>(
        universe: Universe,
        attributes: impl IntoIterator<Item = S>,
        matrix: &BitMatrix,
    ) -> Result<SoftSet> {
        let attributes: Vec<String> = attributes.into_iter().map(Into::into).collect();
        if matrix.rows() != universe.len() || matrix.cols() != attributes.len() {
            return Err(SoftSetError::DimensionMismatch {
                expected_rows: universe.len(),
                expected_cols: attributes.len(),
                found_rows: matrix.rows(),
                found_cols: matrix.cols(),
            });
        }
        let values = (0..matrix.cols())
            .map(|j| matrix.column_support(j))
            .collect();
        SoftSet::from_subsets(universe, attributes, values)
    }
}
