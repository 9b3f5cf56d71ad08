//! Biorders: a row order and a column order, with the endpoint conditions of
//! circularly compatible ones and of monotone circular biorders.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::circular::{d_circular_order, first_broken_difference, positions, shape, Shape};
use super::BinaryMatrix;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Circular interval `[d, e]` of a column order, by column ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Arc {
    pub d: usize,
    pub e: usize,
}

/// `row_order[k]` is the `k`-th row under `⪯r`; likewise for columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Biorder {
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
}

/// First condition a biorder fails.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BiorderViolation {
    RowNotCircular { row: usize },
    ColumnNotCircular { col: usize },
    /// Left endpoints not (circularly) monotone; `at` is a position in the
    /// sequence of nontrivial rows.
    LeftEndpoints { at: usize },
    RightEndpoints { at: usize },
    Boundary,
    /// `s - r` is not a circular interval of `⪯c`.
    RowDifference { r: usize, s: usize },
    /// Same for two columns under `⪯r`.
    ColumnDifference { r: usize, s: usize },
}

impl fmt::Display for BiorderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RowNotCircular { row } => write!(f, "row {} is not a circular interval", row + 1),
            Self::ColumnNotCircular { col } => {
                write!(f, "column {} is not a circular interval", col + 1)
            }
            Self::LeftEndpoints { at } => write!(f, "left endpoints not monotone at row {}", at + 1),
            Self::RightEndpoints { at } => {
                write!(f, "unwrapped right endpoints not monotone at row {}", at + 1)
            }
            Self::Boundary => f.write_str("endpoint boundary condition fails"),
            Self::RowDifference { r, s } => {
                write!(f, "row {} minus row {} is not a circular interval", s + 1, r + 1)
            }
            Self::ColumnDifference { r, s } => {
                write!(f, "column {} minus column {} is not a circular interval", s + 1, r + 1)
            }
        }
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&x| x < n && !core::mem::replace(&mut seen[x], true))
}

/// Endpoint positions of one nontrivial row.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Ends {
    pub d: usize,
    pub e: usize,
}

impl Ends {
    pub fn linear(&self) -> bool {
        self.d <= self.e
    }

    /// Right endpoint in the doubled order.
    pub fn f(&self, n: usize) -> usize {
        if self.linear() {
            self.e
        } else {
            self.e + n
        }
    }
}

impl Biorder {
    pub fn identity(m: &BinaryMatrix) -> Biorder {
        Biorder {
            row_order: (0..m.row_count()).collect(),
            col_order: (0..m.col_count()).collect(),
        }
    }

    pub fn check_shape(&self, m: &BinaryMatrix) -> Result<()> {
        if !is_permutation(&self.row_order, m.row_count()) {
            return Err(Error::invalid("row order is not a permutation of the rows"));
        }
        if !is_permutation(&self.col_order, m.col_count()) {
            return Err(Error::invalid("column order is not a permutation of the columns"));
        }
        Ok(())
    }

    /// Arc of each row under `⪯c`, indexed by row; `None` for trivial rows.
    /// Fails with the first row that is not a circular interval.
    pub fn arcs(&self, m: &BinaryMatrix) -> Result<Vec<Option<Arc>>, BiorderViolation> {
        let ends = self.ends(m)?;
        Ok(ends
            .iter()
            .map(|e| {
                e.map(|e| Arc {
                    d: self.col_order[e.d],
                    e: self.col_order[e.e],
                })
            })
            .collect())
    }

    pub(crate) fn ends(&self, m: &BinaryMatrix) -> Result<Vec<Option<Ends>>, BiorderViolation> {
        let n = m.col_count();
        let pos = positions(&self.col_order);
        (0..m.row_count())
            .map(|i| match shape(m.row(i), &pos, n) {
                Shape::Arc(d, e) => Ok(Some(Ends { d, e })),
                Shape::Empty | Shape::Full => Ok(None),
                Shape::Broken => Err(BiorderViolation::RowNotCircular { row: i }),
            })
            .collect()
    }
}

fn descents(seq: &[usize], cyclic: bool) -> (usize, usize) {
    let mut count = 0;
    let mut first = 0;
    let k = seq.len();
    let steps = if cyclic { k } else { k.saturating_sub(1) };
    for i in 0..steps {
        if seq[i] > seq[(i + 1) % k] {
            if count == 0 {
                first = i + 1;
            }
            count += 1;
        }
    }
    (count, first)
}

/// Checks a circularly compatible ones biorder: rows circular under `⪯c`,
/// columns circular under `⪯r`, both endpoint sequences of the nontrivial
/// rows circularly monotone, and both orders `D`-circular (row differences
/// under `⪯c`, column differences under `⪯r`). `Ok(None)` means the biorder
/// passes.
///
/// The endpoint conditions alone are weaker than the property: `ZA` with
/// rows ordered 1, 2, 4, 3 and columns in natural order satisfies them.
pub fn check_cco_biorder(m: &BinaryMatrix, b: &Biorder) -> Result<Option<BiorderViolation>> {
    b.check_shape(m)?;
    let ends = match b.ends(m) {
        Ok(e) => e,
        Err(v) => return Ok(Some(v)),
    };
    let t = m.transpose();
    let rpos = positions(&b.row_order);
    for j in 0..t.row_count() {
        if shape(t.row(j), &rpos, m.row_count()) == Shape::Broken {
            return Ok(Some(BiorderViolation::ColumnNotCircular { col: j }));
        }
    }
    let seq: Vec<Ends> = b.row_order.iter().filter_map(|&i| ends[i]).collect();
    let d: Vec<usize> = seq.iter().map(|x| x.d).collect();
    let e: Vec<usize> = seq.iter().map(|x| x.e).collect();
    let (dc, df) = descents(&d, true);
    if dc > 1 {
        return Ok(Some(BiorderViolation::LeftEndpoints { at: df }));
    }
    let (ec, ef) = descents(&e, true);
    if ec > 1 {
        return Ok(Some(BiorderViolation::RightEndpoints { at: ef }));
    }
    if let Some((r, s)) = first_broken_difference(m, &b.col_order) {
        return Ok(Some(BiorderViolation::RowDifference { r, s }));
    }
    if let Some((r, s)) = first_broken_difference(&t, &b.row_order) {
        return Ok(Some(BiorderViolation::ColumnDifference { r, s }));
    }
    Ok(None)
}

/// Checks the monotone circular conditions on a matrix without trivial rows:
/// (i) left endpoints monotone under `⪯c`, (ii) unwrapped right endpoints
/// monotone under the doubled order `⪯c+`, (iii) either the first row wraps,
/// or it does not and the last unwrapped right endpoint is at most `e1+`.
pub fn check_monotone_circular(m: &BinaryMatrix, b: &Biorder) -> Result<Option<BiorderViolation>> {
    if let Some(i) = (0..m.row_count()).find(|&i| m.is_trivial_row(i)) {
        return Err(Error::invalid(format!("row {} is trivial", i + 1)));
    }
    b.check_shape(m)?;
    let ends = match b.ends(m) {
        Ok(e) => e,
        Err(v) => return Ok(Some(v)),
    };
    let seq: Vec<Ends> = b.row_order.iter().map(|&i| ends[i].unwrap()).collect();
    Ok(monotone_circular_violation(&seq, m.col_count()))
}

/// Conditions (i)-(iii) on the endpoint sequence of the rows in order.
pub(crate) fn monotone_circular_violation(seq: &[Ends], n: usize) -> Option<BiorderViolation> {
    let d: Vec<usize> = seq.iter().map(|x| x.d).collect();
    let f: Vec<usize> = seq.iter().map(|x| x.f(n)).collect();
    let (dc, df) = descents(&d, false);
    if dc > 0 {
        return Some(BiorderViolation::LeftEndpoints { at: df });
    }
    let (fc, ff) = descents(&f, false);
    if fc > 0 {
        return Some(BiorderViolation::RightEndpoints { at: ff });
    }
    if let (Some(first), Some(&last_f)) = (seq.first(), f.last()) {
        if first.linear() && last_f > first.e + n {
            return Some(BiorderViolation::Boundary);
        }
    }
    None
}

/// A monotone circular biorder of a matrix without trivial rows, built from
/// a `D`-circular column order by sorting rows on (left endpoint, unwrapped
/// right endpoint). `None` iff the matrix is not `D`-circular.
///
/// With `last = Some(c)` the column order is rotated to end at `c`; when `c`
/// lies in no row this makes every row a linear interval.
pub fn monotone_circular_biorder(m: &BinaryMatrix, last: Option<usize>) -> Result<Option<Biorder>> {
    if let Some(i) = (0..m.row_count()).find(|&i| m.is_trivial_row(i)) {
        return Err(Error::invalid(format!("row {} is trivial", i + 1)));
    }
    let Some(mut col_order) = d_circular_order(m) else {
        return Ok(None);
    };
    if let Some(c) = last {
        let k = col_order
            .iter()
            .position(|&x| x == c)
            .ok_or_else(|| Error::invalid(format!("column {} out of range", c + 1)))?;
        col_order.rotate_left(k + 1);
    }
    let mut b = Biorder {
        row_order: (0..m.row_count()).collect(),
        col_order,
    };
    let n = m.col_count();
    let ends = b
        .ends(m)
        .map_err(|v| Error::internal(format!("D-circular order rejected: {v}")))?;
    b.row_order.sort_by_key(|&i| {
        let e = ends[i].unwrap();
        (e.d, e.f(n), i)
    });
    if let Some(v) = check_monotone_circular(m, &b)? {
        return Err(Error::internal(format!("constructed biorder fails: {v}")));
    }
    Ok(Some(b))
}

/// Exhaustive search for a circularly compatible ones biorder.
///
/// Every condition is invariant under rotating either order, so the first
/// row and first column are fixed. Fails with a cap error if either
/// dimension exceeds `cap`.
pub fn search_cco_biorder(m: &BinaryMatrix, budget: &mut Budget) -> Result<Option<Biorder>> {
    search_cco_biorder_with(m, 7, budget)
}

pub fn search_cco_biorder_with(
    m: &BinaryMatrix,
    cap: usize,
    budget: &mut Budget,
) -> Result<Option<Biorder>> {
    let (rows, cols) = (m.row_count(), m.col_count());
    if rows.max(cols) > cap {
        return Err(Error::CapExceeded {
            what: "biorder search dimension",
            size: rows.max(cols),
            cap,
        });
    }
    if rows == 0 || cols == 0 {
        return Ok(Some(Biorder::identity(m)));
    }
    let t = m.transpose();
    let mut col_order: Vec<usize> = (0..cols).collect();
    let mut found = None;
    permute_fixed_first(&mut col_order, budget, &mut |co, budget| {
        let b = Biorder {
            row_order: Vec::new(),
            col_order: co.to_vec(),
        };
        let Ok(ends) = b.ends(m) else {
            return Ok(true);
        };
        if first_broken_difference(m, co).is_some() {
            return Ok(true);
        }
        let mut row_order: Vec<usize> = (0..rows).collect();
        let mut hit = None;
        permute_fixed_first(&mut row_order, budget, &mut |ro, _| {
            let seq: Vec<Ends> = ro.iter().filter_map(|&i| ends[i]).collect();
            let d: Vec<usize> = seq.iter().map(|x| x.d).collect();
            let e: Vec<usize> = seq.iter().map(|x| x.e).collect();
            if descents(&d, true).0 > 1 || descents(&e, true).0 > 1 {
                return Ok(true);
            }
            let rpos = positions(ro);
            if (0..cols).any(|j| shape(t.row(j), &rpos, rows) == Shape::Broken) {
                return Ok(true);
            }
            if first_broken_difference(&t, ro).is_some() {
                return Ok(true);
            }
            hit = Some(ro.to_vec());
            Ok(false)
        })?;
        if let Some(ro) = hit {
            found = Some(Biorder {
                row_order: ro,
                col_order: co.to_vec(),
            });
            return Ok(false);
        }
        Ok(true)
    })?;
    if let Some(b) = &found {
        if let Some(v) = check_cco_biorder(m, b)? {
            return Err(Error::internal(format!("biorder search returned invalid biorder: {v}")));
        }
    }
    Ok(found)
}

type Visit<'a> = dyn FnMut(&[usize], &mut Budget) -> Result<bool> + 'a;

/// Calls `f` on every permutation of `p[1..]` (keeping `p[0]`) until it
/// returns false.
fn permute_fixed_first(p: &mut [usize], budget: &mut Budget, f: &mut Visit<'_>) -> Result<bool> {
    fn go(k: usize, p: &mut [usize], budget: &mut Budget, f: &mut Visit<'_>) -> Result<bool> {
        if k >= p.len() {
            budget.tick("biorder search")?;
            return f(p, budget);
        }
        for i in k..p.len() {
            p.swap(k, i);
            let more = go(k + 1, p, budget, f)?;
            p.swap(k, i);
            if !more {
                return Ok(false);
            }
        }
        Ok(true)
    }
    go(1, p, budget, f)
}

/// Tags of row vertices under a biorder.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RowKind {
    Trivial,
    /// `d ⪯c e`: the row is a linear interval.
    Linear,
    /// `e ≺c d`: the row wraps around.
    Circular,
}

/// Tags every row and checks that, along `⪯r`, no linear row follows a
/// circular one.
pub fn classify_row_vertices(m: &BinaryMatrix, b: &Biorder) -> Result<Vec<RowKind>> {
    b.check_shape(m)?;
    let ends = b
        .ends(m)
        .map_err(|v| Error::invalid(format!("not a circular-ones order: {v}")))?;
    let kinds: Vec<RowKind> = ends
        .iter()
        .map(|e| match e {
            None => RowKind::Trivial,
            Some(e) if e.linear() => RowKind::Linear,
            Some(_) => RowKind::Circular,
        })
        .collect();
    let mut seen_circular = None;
    for &i in &b.row_order {
        match kinds[i] {
            RowKind::Circular => seen_circular = seen_circular.or(Some(i)),
            RowKind::Linear => {
                if let Some(c) = seen_circular {
                    return Err(Error::invalid(format!(
                        "linear row {} follows circular row {} in the row order",
                        i + 1,
                        c + 1
                    )));
                }
            }
            RowKind::Trivial => {}
        }
    }
    Ok(kinds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::circular::tests::{brute_d_circular, for_each_perm};

    fn m(t: &[&[u8]]) -> BinaryMatrix {
        BinaryMatrix::from_dense(t).unwrap()
    }

    /// Brute force over all biorders for the monotone circular conditions.
    fn brute_mc(m: &BinaryMatrix) -> bool {
        let mut found = false;
        for_each_perm(m.col_count(), &mut |co| {
            for_each_perm(m.row_count(), &mut |ro| {
                let b = Biorder {
                    row_order: ro.to_vec(),
                    col_order: co.to_vec(),
                };
                found = check_monotone_circular(m, &b).unwrap().is_none();
                !found
            });
            !found
        });
        found
    }

    #[test]
    fn single_row_passes() {
        let a = m(&[&[1, 1, 0]]);
        assert_eq!(check_monotone_circular(&a, &Biorder::identity(&a)).unwrap(), None);
    }

    #[test]
    fn permutation_matrix_passes() {
        let p = BinaryMatrix::identity(3);
        assert_eq!(check_monotone_circular(&p, &Biorder::identity(&p)).unwrap(), None);
        assert_eq!(check_cco_biorder(&p, &Biorder::identity(&p)).unwrap(), None);
    }

    #[test]
    fn zd_identity_fails() {
        let zd = m(&[&[1, 0, 0, 1], &[1, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 0, 0]]);
        let v = check_monotone_circular(&zd, &Biorder::identity(&zd)).unwrap();
        assert_eq!(v, Some(BiorderViolation::LeftEndpoints { at: 1 }));
    }

    #[test]
    fn trivial_rows_rejected() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert!(check_monotone_circular(&a, &Biorder::identity(&a)).is_err());
        assert!(monotone_circular_biorder(&a, None).is_err());
    }

    #[test]
    fn classify_tags() {
        let a = m(&[&[1, 1, 0], &[1, 0, 1]]);
        let kinds = classify_row_vertices(&a, &Biorder::identity(&a)).unwrap();
        assert_eq!(kinds, vec![RowKind::Linear, RowKind::Circular]);
        let swapped = Biorder {
            row_order: vec![1, 0],
            col_order: vec![0, 1, 2],
        };
        assert!(classify_row_vertices(&a, &swapped).is_err());
    }

    #[test]
    fn search_on_small_examples() {
        let mut b = Budget::default();
        let one = m(&[&[1]]);
        assert!(search_cco_biorder(&one, &mut b).unwrap().is_some());
        let p = BinaryMatrix::identity(3);
        assert!(search_cco_biorder(&p, &mut b).unwrap().is_some());
        let za = m(&[&[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 0, 0]]);
        assert_eq!(search_cco_biorder(&za, &mut b).unwrap(), None);
        let big = BinaryMatrix::zeros(8, 2);
        assert!(search_cco_biorder(&big, &mut b).unwrap_err().is_budget());
    }

    #[test]
    fn construction_matches_d_circular_and_brute_mc() {
        for rows in 1..=3usize {
            for cols in 1..=4usize {
                for code in 0u32..1 << (rows * cols) {
                    let t: Vec<Vec<u8>> = (0..rows)
                        .map(|i| (0..cols).map(|j| (code >> (cols * i + j) & 1) as u8).collect())
                        .collect();
                    let a = BinaryMatrix::from_dense(&t).unwrap();
                    if a.has_trivial_row() {
                        continue;
                    }
                    let built = monotone_circular_biorder(&a, None).unwrap();
                    assert_eq!(built.is_some(), brute_d_circular(&a), "{t:?}");
                    assert_eq!(built.is_some(), brute_mc(&a), "{t:?}");
                }
            }
        }
    }
}
