use alloc::vec;
use alloc::vec::Vec;

use super::biorder::Arc;
use super::c1p::has_consecutive_ones;
use super::BinaryMatrix;

/// Shape of a column set under a linear order read circularly.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Shape {
    Empty,
    Full,
    /// Positions of the first and last element of the arc.
    Arc(usize, usize),
    Broken,
}

/// `pos[c]` is the position of column `c`; `n` the number of columns.
pub(crate) fn shape(row: &[usize], pos: &[usize], n: usize) -> Shape {
    if row.is_empty() {
        return Shape::Empty;
    }
    if row.len() == n {
        return Shape::Full;
    }
    let mut p: Vec<usize> = row.iter().map(|&c| pos[c]).collect();
    p.sort_unstable();
    let mut gap_after = None;
    for i in 0..p.len() {
        let next = if i + 1 < p.len() { p[i + 1] } else { p[0] + n };
        if next - p[i] > 1 {
            if gap_after.is_some() {
                return Shape::Broken;
            }
            gap_after = Some(i);
        }
    }
    // a non-full row always leaves at least one gap
    let i = gap_after.expect("non-full row has a gap");
    Shape::Arc(p[(i + 1) % p.len()], p[i])
}

pub(crate) fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (k, &c) in order.iter().enumerate() {
        pos[c] = k;
    }
    pos
}

/// True iff `row` is a circular interval (possibly empty or full) of the
/// column order `order`.
pub fn is_circular_interval(row: &[usize], order: &[usize]) -> bool {
    shape(row, &positions(order), order.len()) != Shape::Broken
}

/// Endpoints of a nontrivial row that is a circular interval of `order`.
pub fn circular_interval(row: &[usize], order: &[usize]) -> Option<Arc> {
    match shape(row, &positions(order), order.len()) {
        Shape::Arc(d, e) => Some(Arc {
            d: order[d],
            e: order[e],
        }),
        _ => None,
    }
}

/// Circular-ones order for the rows, by Tucker's reduction: complementing
/// the rows through one column leaves that column empty, and then circular
/// ones coincides with consecutive ones.
///
/// The pivot is a column of minimum degree, which complements the fewest
/// rows.
pub fn has_circular_ones(m: &BinaryMatrix) -> Option<Vec<usize>> {
    let n = m.col_count();
    if n <= 2 || m.row_count() == 0 {
        return Some((0..n).collect());
    }
    let deg = m.col_degrees();
    let pivot = (0..n).min_by_key(|&c| (deg[c], c)).unwrap();
    let mask: Vec<bool> = m.rows().iter().map(|r| r.binary_search(&pivot).is_ok()).collect();
    let reduced = m.row_complement(&mask).unwrap();
    let order = has_consecutive_ones(&reduced)?;
    debug_assert!({
        let pos = positions(&order);
        m.rows().iter().all(|r| shape(r, &pos, n) != Shape::Broken)
    });
    Some(order)
}

/// A `D`-circular column order: every row and every difference of two rows
/// is a circular interval.
///
/// Once all rows are arcs, a difference `s - r` can only split when `r` sits
/// strictly inside `s`, so only properly nested pairs add constraint rows.
pub fn d_circular_order(m: &BinaryMatrix) -> Option<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = m.rows().to_vec();
    rows.sort_unstable();
    rows.dedup();
    let n = m.col_count();
    let mut by_col: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (i, r) in rows.iter().enumerate() {
        for &c in r {
            by_col[c].push(i as u32);
        }
    }
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for list in &by_col {
        for (a, &i) in list.iter().enumerate() {
            pairs.extend(list[a + 1..].iter().map(|&j| (i, j)));
        }
    }
    pairs.sort_unstable();
    let mut extra = Vec::new();
    let mut k = 0;
    while k < pairs.len() {
        let p = pairs[k];
        let mut shared = 0;
        while k < pairs.len() && pairs[k] == p {
            shared += 1;
            k += 1;
        }
        let (i, j) = (p.0 as usize, p.1 as usize);
        let (small, big) = if rows[i].len() < rows[j].len() { (i, j) } else { (j, i) };
        if shared == rows[small].len() && rows[small].len() < rows[big].len() {
            extra.push(difference(&rows[big], &rows[small]));
        }
    }
    rows.extend(extra);
    has_circular_ones(&BinaryMatrix::from_rows_unchecked(n, rows))
}

/// First pair `(r, s)` of rows whose difference `s - r` is not a circular
/// interval of `order`; rows are assumed circular already.
pub(crate) fn first_broken_difference(m: &BinaryMatrix, order: &[usize]) -> Option<(usize, usize)> {
    let pos = positions(order);
    let n = m.col_count();
    (0..m.row_count()).find_map(|r| {
        (0..m.row_count()).find_map(|s| {
            (r != s && shape(&difference(m.row(s), m.row(r)), &pos, n) == Shape::Broken).then_some((r, s))
        })
    })
}

fn difference(s: &[usize], r: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(s.len());
    let mut k = 0;
    for &c in s {
        while k < r.len() && r[k] < c {
            k += 1;
        }
        if k >= r.len() || r[k] != c {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn for_each_perm(n: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
        fn go(k: usize, p: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
            if k == p.len() {
                return f(p);
            }
            for i in k..p.len() {
                p.swap(k, i);
                if !go(k + 1, p, f) {
                    p.swap(k, i);
                    return false;
                }
                p.swap(k, i);
            }
            true
        }
        let mut p: Vec<usize> = (0..n).collect();
        go(0, &mut p, f);
    }

    pub(crate) fn brute_circular(m: &BinaryMatrix) -> bool {
        let mut found = false;
        for_each_perm(m.col_count(), &mut |o| {
            found = m.rows().iter().all(|r| is_circular_interval(r, o));
            !found
        });
        found
    }

    pub(crate) fn brute_d_circular(m: &BinaryMatrix) -> bool {
        let mut found = false;
        for_each_perm(m.col_count(), &mut |o| {
            found = m.rows().iter().all(|s| {
                is_circular_interval(s, o)
                    && m.rows().iter().all(|r| is_circular_interval(&difference(s, r), o))
            });
            !found
        });
        found
    }

    fn from_code(code: u32, rows: usize, cols: usize) -> BinaryMatrix {
        let t: Vec<Vec<u8>> = (0..rows)
            .map(|i| (0..cols).map(|j| (code >> (cols * i + j) & 1) as u8).collect())
            .collect();
        BinaryMatrix::from_dense(&t).unwrap()
    }

    #[test]
    fn shapes() {
        let pos = [0, 1, 2, 3, 4];
        assert_eq!(shape(&[3, 4, 0], &pos, 5), Shape::Arc(3, 0));
        assert_eq!(shape(&[1, 2], &pos, 5), Shape::Arc(1, 2));
        assert_eq!(shape(&[0, 2], &pos, 5), Shape::Broken);
        assert_eq!(shape(&[], &pos, 5), Shape::Empty);
        assert_eq!(shape(&[0, 1, 2, 3, 4], &pos, 5), Shape::Full);
        assert_eq!(circular_interval(&[0, 2], &[2, 1, 0]), Some(Arc { d: 0, e: 2 }));
    }

    #[test]
    fn triangle_is_circular_but_not_with_empty_column() {
        let mi3 = BinaryMatrix::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(has_circular_ones(&mi3).is_some());
        assert!(has_circular_ones(&mi3.add_empty_column()).is_none());
    }

    #[test]
    fn tucker_agrees_with_brute_force_4x4() {
        for code in 0u32..1 << 16 {
            let m = from_code(code, 4, 4);
            let got = has_circular_ones(&m);
            if let Some(o) = &got {
                assert!(m.rows().iter().all(|r| is_circular_interval(r, o)));
            }
            assert_eq!(got.is_some(), brute_circular(&m), "{:?}", m.to_dense());
        }
    }

    #[test]
    fn d_circular_agrees_with_brute_force_3x5() {
        for code in 0u32..1 << 15 {
            let m = from_code(code, 3, 5);
            assert_eq!(d_circular_order(&m).is_some(), brute_d_circular(&m), "{:?}", m.to_dense());
        }
    }
}
