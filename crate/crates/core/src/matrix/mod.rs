//! Sparse binary matrices and the ones-property machinery built on them.
//!
//! Rows and columns are 0-based internally. A matrix stores each row as a
//! strictly increasing list of the columns holding a 1, so `size(M)` (rows +
//! columns + ones) is also the storage size.

mod biorder;
mod c1p;
mod cco;
mod circular;
mod config;
mod patterns;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use biorder::{
    check_cco_biorder, check_monotone_circular, classify_row_vertices, monotone_circular_biorder,
    search_cco_biorder, search_cco_biorder_with, Arc, Biorder, BiorderViolation, RowKind,
};
pub(crate) use biorder::{monotone_circular_violation, Ends};
pub use c1p::has_consecutive_ones;
pub use cco::{cco_decision, is_cco, minimal_obstruction, CcoOutcome};
pub use circular::{circular_interval, d_circular_order, has_circular_ones, is_circular_interval};
pub use config::{
    contains_configuration, find_fcco, find_mik_star, identify_obstruction, Configuration, MikStarSearch,
    DEFAULT_MIK_CAP,
};
pub use patterns::{bracelets, fcco, generate_pattern, PatternId, PatternName};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BinaryMatrix {
    rows: Vec<Vec<usize>>,
    cols: usize,
}

impl BinaryMatrix {
    /// Builds from per-row column lists, which must be strictly increasing
    /// and below `cols`.
    pub fn new(cols: usize, rows: Vec<Vec<usize>>) -> Result<BinaryMatrix> {
        for (i, r) in rows.iter().enumerate() {
            if let Some(w) = r.windows(2).find(|w| w[0] >= w[1]) {
                return Err(Error::invalid(format!(
                    "row {} is not strictly increasing at column {}",
                    i + 1,
                    w[1] + 1
                )));
            }
            if let Some(&c) = r.last().filter(|&&c| c >= cols) {
                return Err(Error::invalid(format!(
                    "row {} has column {} but the matrix has {cols} columns",
                    i + 1,
                    c + 1
                )));
            }
        }
        Ok(BinaryMatrix { rows, cols })
    }

    pub(crate) fn from_rows_unchecked(cols: usize, rows: Vec<Vec<usize>>) -> BinaryMatrix {
        debug_assert!(BinaryMatrix::new(cols, rows.clone()).is_ok());
        BinaryMatrix { rows, cols }
    }

    /// Builds from a dense 0/1 table; every row must have the same length.
    pub fn from_dense<R: AsRef<[u8]>>(table: &[R]) -> Result<BinaryMatrix> {
        let cols = table.first().map_or(0, |r| r.as_ref().len());
        let mut rows = Vec::with_capacity(table.len());
        for (i, r) in table.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::invalid(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    r.len()
                )));
            }
            if let Some(&x) = r.iter().find(|&&x| x > 1) {
                return Err(Error::invalid(format!("entry {x} in row {} is not 0 or 1", i + 1)));
            }
            rows.push((0..cols).filter(|&j| r[j] == 1).collect());
        }
        Ok(BinaryMatrix { rows, cols })
    }

    pub fn zeros(rows: usize, cols: usize) -> BinaryMatrix {
        BinaryMatrix {
            rows: vec![Vec::new(); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> BinaryMatrix {
        BinaryMatrix {
            rows: (0..n).map(|i| vec![i]).collect(),
            cols: n,
        }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows plus columns plus ones.
    pub fn size(&self) -> usize {
        self.row_count() + self.col_count() + self.ones()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&j).is_ok()
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![0u8; self.cols];
                for &j in r {
                    d[j] = 1;
                }
                d
            })
            .collect()
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for &j in r {
                t[j].push(i);
            }
        }
        BinaryMatrix {
            rows: t,
            cols: self.rows.len(),
        }
    }

    /// `a ⊙ M`: complements each row `i` with `mask[i]` set.
    pub fn row_complement(&self, mask: &[bool]) -> Result<BinaryMatrix> {
        if mask.len() != self.row_count() {
            return Err(Error::invalid(format!(
                "mask has length {}, matrix has {} rows",
                mask.len(),
                self.row_count()
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(mask)
            .map(|(r, &flip)| if flip { self.complement_row(r) } else { r.clone() })
            .collect();
        Ok(BinaryMatrix {
            rows,
            cols: self.cols,
        })
    }

    pub(crate) fn complement_row(&self, r: &[usize]) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cols - r.len());
        let mut k = 0;
        for j in 0..self.cols {
            if k < r.len() && r[k] == j {
                k += 1;
            } else {
                out.push(j);
            }
        }
        out
    }

    /// `M̄`: every entry flipped.
    pub fn complement(&self) -> BinaryMatrix {
        self.row_complement(&vec![true; self.row_count()]).unwrap()
    }

    /// `M*`: appends an all-0 column.
    pub fn add_empty_column(&self) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.rows.clone(),
            cols: self.cols + 1,
        }
    }

    /// Submatrix on the given rows and columns, in the given orders.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> BinaryMatrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let rows = rows
            .iter()
            .map(|&i| {
                let mut r: Vec<usize> = self.rows[i]
                    .iter()
                    .filter_map(|&c| (pos[c] != usize::MAX).then_some(pos[c]))
                    .collect();
                r.sort_unstable();
                r
            })
            .collect();
        BinaryMatrix {
            rows,
            cols: cols.len(),
        }
    }

    /// Reorders rows and columns: row `k` of the result is row `rows[k]`.
    pub fn permute(&self, rows: &[usize], cols: &[usize]) -> BinaryMatrix {
        self.submatrix(rows, cols)
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.rows[i].is_empty()
    }

    pub fn is_full_row(&self, i: usize) -> bool {
        self.rows[i].len() == self.cols
    }

    /// All-0 or all-1 row.
    pub fn is_trivial_row(&self, i: usize) -> bool {
        self.is_zero_row(i) || self.is_full_row(i)
    }

    pub fn has_trivial_row(&self) -> bool {
        (0..self.row_count()).any(|i| self.is_trivial_row(i))
    }

    pub fn col_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.cols];
        for r in &self.rows {
            for &j in r {
                d[j] += 1;
            }
        }
        d
    }
}
