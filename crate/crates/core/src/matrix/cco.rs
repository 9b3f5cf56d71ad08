//! The circularly compatible ones decision.
//!
//! The decision is the doubly `D`-circular test (rows and transpose), which
//! stays near-linear on sparse inputs. Negative answers come with evidence:
//! a located forbidden configuration, found by shrinking the matrix to a
//! minimal non-CCO submatrix and naming it.

use alloc::vec::Vec;

use super::circular::{d_circular_order, has_circular_ones};
use super::config::{identify_obstruction, Configuration};
use super::patterns::PatternId;
use super::BinaryMatrix;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CcoOutcome {
    pub is_cco: bool,
    /// Circular-ones for rows / for columns.
    pub circular_rows: bool,
    pub circular_cols: bool,
    /// On a negative answer: a forbidden pattern located in the matrix.
    pub evidence: Option<(PatternId, Configuration)>,
}

/// Decision only: `M` and `Mᵗ` are both `D`-circular.
pub fn cco_decision(m: &BinaryMatrix) -> bool {
    d_circular_order(m).is_some() && d_circular_order(&m.transpose()).is_some()
}

pub fn is_cco(m: &BinaryMatrix) -> CcoOutcome {
    let circular_rows = has_circular_ones(m).is_some();
    let circular_cols = has_circular_ones(&m.transpose()).is_some();
    let is_cco = circular_rows && circular_cols && cco_decision(m);
    let evidence = if is_cco { None } else { minimal_obstruction(m) };
    CcoOutcome {
        is_cco,
        circular_rows,
        circular_cols,
        evidence,
    }
}

/// Deletes rows and columns while the matrix stays non-CCO, then names the
/// remaining minimal matrix. `None` if `m` is CCO.
pub fn minimal_obstruction(m: &BinaryMatrix) -> Option<(PatternId, Configuration)> {
    let mut rows: Vec<usize> = (0..m.row_count()).collect();
    let mut cols: Vec<usize> = (0..m.col_count()).collect();
    if cco_decision(m) {
        return None;
    }
    loop {
        let before = rows.len() + cols.len();
        let c = cols.clone();
        rows = shrink(rows, |r| !cco_decision(&m.submatrix(r, &c)));
        let r = rows.clone();
        cols = shrink(cols, |c| !cco_decision(&m.submatrix(&r, c)));
        if rows.len() + cols.len() == before {
            break;
        }
    }
    let core = m.submatrix(&rows, &cols);
    let (id, local) = identify_obstruction(&core)?;
    Some((
        id,
        Configuration {
            rows: local.rows.iter().map(|&i| rows[i]).collect(),
            cols: local.cols.iter().map(|&j| cols[j]).collect(),
        },
    ))
}

/// Removes chunks of halving size while `bad` keeps holding.
fn shrink(mut items: Vec<usize>, bad: impl Fn(&[usize]) -> bool) -> Vec<usize> {
    let mut chunk = items.len().div_ceil(2).max(1);
    loop {
        let mut i = 0;
        while i < items.len() {
            let end = (i + chunk).min(items.len());
            let cand: Vec<usize> = items[..i].iter().chain(&items[end..]).copied().collect();
            if bad(&cand) {
                items = cand;
            } else {
                i = end;
            }
        }
        if chunk == 1 {
            return items;
        }
        chunk = chunk.div_ceil(2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::matrix::patterns::{generate_pattern, PatternName};

    #[test]
    fn single_one_is_cco() {
        let m = BinaryMatrix::from_dense(&[[1u8]]).unwrap();
        assert!(is_cco(&m).is_cco);
    }

    #[test]
    fn za_is_not_cco() {
        let za = generate_pattern(PatternId::fixed(PatternName::ZA)).unwrap();
        let out = is_cco(&za);
        assert!(!out.is_cco);
        let (id, conf) = out.evidence.unwrap();
        assert_eq!(za.submatrix(&conf.rows, &conf.cols), generate_pattern(id).unwrap());
    }

    #[test]
    fn permutation_matrix_is_cco() {
        assert!(is_cco(&BinaryMatrix::identity(3)).is_cco);
    }

    #[test]
    fn evidence_inside_larger_matrix() {
        let m5 = generate_pattern(PatternId::with_k(PatternName::MIkStar, 5)).unwrap();
        // pad with extra rows and columns that keep the obstruction
        let mut rows: Vec<Vec<usize>> = m5.rows().to_vec();
        rows.push(vec![0, 1, 2]);
        rows.push(vec![]);
        let big = BinaryMatrix::new(8, rows).unwrap();
        let out = is_cco(&big);
        assert!(!out.is_cco);
        let (id, conf) = out.evidence.unwrap();
        assert_eq!(big.submatrix(&conf.rows, &conf.cols), generate_pattern(id).unwrap());
    }

    #[test]
    fn transpose_invariance_on_patterns() {
        for k in 3..6 {
            let m = generate_pattern(PatternId::with_k(PatternName::MIkStar, k)).unwrap();
            assert!(!cco_decision(&m));
            assert!(!cco_decision(&m.transpose()));
            let mi = generate_pattern(PatternId::with_k(PatternName::MIk, k)).unwrap();
            assert_eq!(cco_decision(&mi), cco_decision(&mi.transpose()));
        }
    }
}
