//! Configuration containment: a submatrix equal to a pattern up to row and
//! column permutations.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::patterns::{fcco, generate_pattern, PatternId, PatternName};
use super::BinaryMatrix;

/// `rows[i]` / `cols[j]` are the host row / column playing pattern row `i` /
/// column `j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Configuration {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Column bound for [`find_mik_star`].
pub const DEFAULT_MIK_CAP: usize = 8;

/// First occurrence of `pattern` in `m` as a configuration: row tuples are
/// tried in lexicographic order, and each pattern column takes the least
/// unused host column with the right signature.
pub fn contains_configuration(m: &BinaryMatrix, pattern: &BinaryMatrix) -> Option<Configuration> {
    let (p, q) = (pattern.row_count(), pattern.col_count());
    if p > m.row_count() || q > m.col_count() || p > 64 {
        return None;
    }
    let pat_dense = pattern.to_dense();
    let pat_sig = signatures(&pat_dense, q);
    let host_dense: Vec<Vec<u8>> = m.to_dense();
    let mut chosen = Vec::with_capacity(p);
    let mut used = vec![false; m.row_count()];
    let rows = search_rows(&host_dense, &pat_dense, &pat_sig, &mut chosen, &mut used)?;
    let host_sig: Vec<u64> = (0..m.col_count())
        .map(|c| rows.iter().enumerate().fold(0u64, |s, (i, &r)| s | (host_dense[r][c] as u64) << i))
        .collect();
    let mut taken = vec![false; m.col_count()];
    let cols = pat_sig
        .iter()
        .map(|&s| {
            let c = (0..m.col_count()).find(|&c| !taken[c] && host_sig[c] == s).unwrap();
            taken[c] = true;
            c
        })
        .collect();
    Some(Configuration { rows, cols })
}

fn signatures(dense: &[Vec<u8>], cols: usize) -> Vec<u64> {
    (0..cols)
        .map(|c| dense.iter().enumerate().fold(0u64, |s, (i, r)| s | (r[c] as u64) << i))
        .collect()
}

fn counts(sigs: impl Iterator<Item = u64>) -> BTreeMap<u64, usize> {
    let mut map = BTreeMap::new();
    for s in sigs {
        *map.entry(s).or_insert(0) += 1;
    }
    map
}

fn search_rows(
    host: &[Vec<u8>],
    pat: &[Vec<u8>],
    pat_sig: &[u64],
    chosen: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<Vec<usize>> {
    let i = chosen.len();
    // prefix signatures must be available often enough in the host
    let mask = if i == 64 { u64::MAX } else { (1u64 << i) - 1 };
    let need = counts(pat_sig.iter().map(|&s| s & mask));
    let have = counts((0..host[0].len()).map(|c| {
        chosen.iter().enumerate().fold(0u64, |s, (k, &r)| s | (host[r][c] as u64) << k)
    }));
    if need.iter().any(|(s, &n)| have.get(s).copied().unwrap_or(0) < n) {
        return None;
    }
    if i == pat.len() {
        return Some(chosen.clone());
    }
    let ones = pat[i].iter().filter(|&&x| x == 1).count();
    let zeros = pat[i].len() - ones;
    for r in 0..host.len() {
        if used[r] {
            continue;
        }
        let h1 = host[r].iter().filter(|&&x| x == 1).count();
        if h1 < ones || host[r].len() - h1 < zeros {
            continue;
        }
        used[r] = true;
        chosen.push(r);
        if let Some(found) = search_rows(host, pat, pat_sig, chosen, used) {
            return Some(found);
        }
        chosen.pop();
        used[r] = false;
    }
    None
}

/// First member of the twelve finite forbidden matrices occurring in `m`.
pub fn find_fcco(m: &BinaryMatrix) -> Option<(PatternId, Configuration)> {
    fcco().into_iter().find_map(|id| {
        let pat = generate_pattern(id).unwrap();
        contains_configuration(m, &pat).map(|c| (id, c))
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MikStarSearch {
    Found(PatternId, Configuration),
    /// Every size that fits in the matrix was searched.
    Absent,
    /// Some sizes were beyond the cap.
    Unknown,
}

/// Searches `MIkStar(k)`, its row complement and both transposes for
/// `3 <= k` with `k + 1 <= cap`.
pub fn find_mik_star(m: &BinaryMatrix, cap: usize) -> MikStarSearch {
    let fits = |k: usize| {
        (k <= m.row_count() && k < m.col_count()) || (k <= m.col_count() && k < m.row_count())
    };
    let mut k = 3;
    while fits(k) {
        if k + 1 > cap {
            return MikStarSearch::Unknown;
        }
        for name in [PatternName::MIkStar, PatternName::CoMIkStar] {
            for transposed in [false, true] {
                let id = PatternId {
                    name,
                    k: Some(k as u32),
                    transposed,
                };
                let pat = generate_pattern(id).unwrap();
                if let Some(c) = contains_configuration(m, &pat) {
                    return MikStarSearch::Found(id, c);
                }
            }
        }
        k += 1;
    }
    MikStarSearch::Absent
}

/// Names a matrix that equals a forbidden pattern up to permutations,
/// returning the pattern and the permutation as a configuration.
pub fn identify_obstruction(m: &BinaryMatrix) -> Option<(PatternId, Configuration)> {
    let (r, c) = (m.row_count(), m.col_count());
    for id in fcco() {
        let pat = generate_pattern(id).unwrap();
        if (pat.row_count(), pat.col_count()) == (r, c) {
            if let Some(conf) = contains_configuration(m, &pat) {
                return Some((id, conf));
            }
        }
    }
    for transposed in [false, true] {
        let a = if transposed { m.transpose() } else { m.clone() };
        for complemented in [false, true] {
            let b = if complemented { a.complement() } else { a.clone() };
            if let Some((rows, cols)) = mik_star_shape(&b) {
                let name = if complemented { PatternName::CoMIkStar } else { PatternName::MIkStar };
                let id = PatternId {
                    name,
                    k: Some(rows.len() as u32),
                    transposed,
                };
                let conf = if transposed {
                    Configuration { rows: cols, cols: rows }
                } else {
                    Configuration { rows, cols }
                };
                debug_assert_eq!(m.submatrix(&conf.rows, &conf.cols), generate_pattern(id).unwrap());
                return Some((id, conf));
            }
        }
    }
    None
}

/// Recognises `MIkStar(k)` up to permutations: `k` rows of size two forming
/// a single cycle through `k` columns, plus one all-0 column.
fn mik_star_shape(m: &BinaryMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    let k = m.row_count();
    if k < 3 || m.col_count() != k + 1 || m.rows().iter().any(|r| r.len() != 2) {
        return None;
    }
    let t = m.transpose();
    let empty: Vec<usize> = (0..=k).filter(|&c| t.row(c).is_empty()).collect();
    if empty.len() != 1 || (0..=k).any(|c| !t.row(c).is_empty() && t.row(c).len() != 2) {
        return None;
    }
    // walk the cycle: columns c0, c1, ... with row i joining c_i and c_{i+1}
    let start = (0..=k).find(|&c| c != empty[0]).unwrap();
    let mut cols = vec![start];
    let mut rows = Vec::with_capacity(k);
    let mut prev_row = usize::MAX;
    let mut cur = start;
    for _ in 0..k {
        let row = *t.row(cur).iter().find(|&&r| r != prev_row)?;
        let next = *m.row(row).iter().find(|&&c| c != cur)?;
        rows.push(row);
        prev_row = row;
        cur = next;
        cols.push(next);
    }
    if cur != start {
        return None;
    }
    cols.pop();
    // pattern row k-1 is {c_0, c_{k-1}}, which is the closing edge already
    let mut seen = vec![false; k];
    if rows.iter().any(|&r| core::mem::replace(&mut seen[r], true)) {
        return None;
    }
    cols.push(empty[0]);
    Some((rows, cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(id: PatternId) -> BinaryMatrix {
        generate_pattern(id).unwrap()
    }

    #[test]
    fn pattern_contains_itself() {
        for id in fcco() {
            let p = pat(id);
            let c = contains_configuration(&p, &p).unwrap();
            assert_eq!(p.submatrix(&c.rows, &c.cols), p);
        }
    }

    #[test]
    fn dimension_pruning() {
        let zc = pat(PatternId::fixed(PatternName::ZC));
        let za = pat(PatternId::fixed(PatternName::ZA));
        assert_eq!(contains_configuration(&za, &zc), None);
    }

    #[test]
    fn found_under_permutation() {
        let za = pat(PatternId::fixed(PatternName::ZA));
        let shuffled = za.permute(&[2, 0, 3, 1], &[3, 1, 0, 2]).add_empty_column();
        let c = contains_configuration(&shuffled, &za).unwrap();
        assert_eq!(shuffled.submatrix(&c.rows, &c.cols), za);
    }

    #[test]
    fn mik_star_search() {
        let m4 = pat(PatternId::with_k(PatternName::MIkStar, 4));
        match find_mik_star(&m4, DEFAULT_MIK_CAP) {
            MikStarSearch::Found(id, _) => assert_eq!(id.k, Some(4)),
            other => panic!("{other:?}"),
        }
        let co3 = pat(PatternId::with_k(PatternName::MIkStar, 3)).complement();
        assert!(matches!(find_mik_star(&co3, DEFAULT_MIK_CAP), MikStarSearch::Found(..)));
        let za = pat(PatternId::fixed(PatternName::ZA));
        assert_eq!(find_mik_star(&za, DEFAULT_MIK_CAP), MikStarSearch::Absent);
        let big = pat(PatternId::with_k(PatternName::MIkStar, 9));
        assert_eq!(find_mik_star(&big, DEFAULT_MIK_CAP), MikStarSearch::Unknown);
    }

    #[test]
    fn identifies_shuffled_members() {
        for k in 3..=7u32 {
            for name in [PatternName::MIkStar, PatternName::CoMIkStar] {
                for transposed in [false, true] {
                    let id = PatternId { name, k: Some(k), transposed };
                    let p = pat(id);
                    let rows: Vec<usize> = (0..p.row_count()).rev().collect();
                    let cols: Vec<usize> = (0..p.col_count()).map(|j| (j * 3 + 1) % p.col_count()).collect();
                    let mut seen = cols.clone();
                    seen.sort();
                    seen.dedup();
                    if seen.len() != cols.len() {
                        continue;
                    }
                    let s = p.permute(&rows, &cols);
                    let (got, conf) = identify_obstruction(&s).unwrap();
                    assert_eq!(got, id);
                    assert_eq!(s.submatrix(&conf.rows, &conf.cols), p);
                }
            }
        }
        for id in fcco() {
            let (got, conf) = identify_obstruction(&pat(id)).unwrap();
            let p = pat(got);
            assert_eq!(pat(id).submatrix(&conf.rows, &conf.cols), p);
        }
    }
}
