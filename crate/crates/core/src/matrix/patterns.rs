//! Named forbidden matrices and binary bracelets.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::BinaryMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum PatternName {
    ZA,
    ZB,
    ZC,
    ZD,
    /// Full row complement of `ZA`.
    CoZA,
    /// Full row complement of `ZC`.
    CoZC,
    /// `k × k`: rows `{i, i+1}` for `i < k`, last row `{1, k}`.
    MIk,
    /// `MIk` plus an all-0 column.
    MIkStar,
    /// Full row complement of `MIkStar`.
    CoMIkStar,
}

impl PatternName {
    pub fn label(&self) -> &'static str {
        match self {
            PatternName::ZA => "ZA",
            PatternName::ZB => "ZB",
            PatternName::ZC => "ZC",
            PatternName::ZD => "ZD",
            PatternName::CoZA => "coZA",
            PatternName::CoZC => "coZC",
            PatternName::MIk => "MIk",
            PatternName::MIkStar => "MIkStar",
            PatternName::CoMIkStar => "coMIkStar",
        }
    }

    pub fn is_parameterized(&self) -> bool {
        matches!(self, PatternName::MIk | PatternName::MIkStar | PatternName::CoMIkStar)
    }

    pub fn parse(s: &str) -> Option<PatternName> {
        Some(match s {
            "ZA" => PatternName::ZA,
            "ZB" => PatternName::ZB,
            "ZC" => PatternName::ZC,
            "ZD" => PatternName::ZD,
            "coZA" => PatternName::CoZA,
            "coZC" => PatternName::CoZC,
            "MIk" => PatternName::MIk,
            "MIkStar" => PatternName::MIkStar,
            "coMIkStar" => PatternName::CoMIkStar,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PatternId {
    pub name: PatternName,
    /// Set exactly for the parameterized names.
    pub k: Option<u32>,
    pub transposed: bool,
}

impl PatternId {
    pub const fn fixed(name: PatternName) -> PatternId {
        PatternId {
            name,
            k: None,
            transposed: false,
        }
    }

    pub const fn with_k(name: PatternName, k: u32) -> PatternId {
        PatternId {
            name,
            k: Some(k),
            transposed: false,
        }
    }

    pub const fn transpose(self) -> PatternId {
        PatternId {
            transposed: !self.transposed,
            ..self
        }
    }

    /// Parses labels such as `ZA`, `coZC^T` or `MIkStar` (with `k` given
    /// separately).
    pub fn parse(label: &str, k: Option<u32>) -> Result<PatternId> {
        let (base, transposed) = match label.strip_suffix("^T") {
            Some(b) => (b, true),
            None => (label, false),
        };
        let name = PatternName::parse(base)
            .ok_or_else(|| Error::invalid(format!("unknown pattern {label:?}")))?;
        let k = match (name.is_parameterized(), k) {
            (true, None) => return Err(Error::invalid(format!("pattern {base} needs k"))),
            (true, k) => k,
            (false, _) => None,
        };
        Ok(PatternId { name, k, transposed })
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name.label())?;
        if self.transposed {
            f.write_str("^T")?;
        }
        if let Some(k) = self.k {
            write!(f, "(k={k})")?;
        }
        Ok(())
    }
}

fn dense(t: &[&[u8]]) -> BinaryMatrix {
    BinaryMatrix::from_dense(t).expect("static pattern")
}

fn mik(k: usize) -> BinaryMatrix {
    let mut rows: Vec<Vec<usize>> = (0..k - 1).map(|i| vec![i, i + 1]).collect();
    rows.push(vec![0, k - 1]);
    BinaryMatrix::from_rows_unchecked(k, rows)
}

pub fn generate_pattern(id: PatternId) -> Result<BinaryMatrix> {
    let base = match id.name {
        PatternName::ZA => dense(&[&[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 0, 0]]),
        PatternName::ZB => dense(&[&[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 1, 1, 0], &[1, 0, 1, 0]]),
        PatternName::ZC => dense(&[&[1, 1, 1, 0, 0], &[0, 1, 1, 1, 0], &[0, 0, 1, 0, 0]]),
        PatternName::ZD => dense(&[&[1, 0, 0, 1], &[1, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 0, 0]]),
        PatternName::CoZA => generate_pattern(PatternId::fixed(PatternName::ZA))?.complement(),
        PatternName::CoZC => generate_pattern(PatternId::fixed(PatternName::ZC))?.complement(),
        PatternName::MIk | PatternName::MIkStar | PatternName::CoMIkStar => {
            let k = id
                .k
                .ok_or_else(|| Error::invalid(format!("pattern {} needs k", id.name.label())))?;
            if k < 3 {
                return Err(Error::invalid(format!("pattern {} needs k >= 3, got {k}", id.name.label())));
            }
            let m = mik(k as usize);
            match id.name {
                PatternName::MIk => m,
                PatternName::MIkStar => m.add_empty_column(),
                _ => m.add_empty_column().complement(),
            }
        }
    };
    Ok(if id.transposed { base.transpose() } else { base })
}

/// The twelve finite forbidden matrices: the six base patterns and their
/// transposes.
pub fn fcco() -> Vec<PatternId> {
    use PatternName::*;
    let base = [ZA, ZB, ZC, ZD, CoZA, CoZC].map(PatternId::fixed);
    base.iter().copied().chain(base.iter().map(|p| p.transpose())).collect()
}

/// Binary bracelets of length `k`, as lexicographically least orbit
/// representatives under rotation and reversal, in increasing order. For
/// `k = 3` only `000` and `111` are returned.
pub fn bracelets(k: usize) -> Result<Vec<Vec<u8>>> {
    if k < 3 {
        return Err(Error::invalid(format!("bracelets need length >= 3, got {k}")));
    }
    if k == 3 {
        return Ok(vec![vec![0, 0, 0], vec![1, 1, 1]]);
    }
    if k > 24 {
        return Err(Error::CapExceeded {
            what: "bracelet length",
            size: k,
            cap: 24,
        });
    }
    let bits = |x: u32| -> Vec<u8> { (0..k).map(|i| (x >> (k - 1 - i) & 1) as u8).collect() };
    let mut out = Vec::new();
    for x in 0u32..1 << k {
        let s = bits(x);
        if orbit_min(&s) == s {
            out.push(s);
        }
    }
    Ok(out)
}

/// Least element of the dihedral orbit of `s`.
pub(crate) fn orbit_min(s: &[u8]) -> Vec<u8> {
    let k = s.len();
    let mut best = s.to_vec();
    let mut rev = s.to_vec();
    rev.reverse();
    for base in [s, &rev[..]] {
        for r in 0..k {
            let cand: Vec<u8> = (0..k).map(|i| base[(i + r) % k]).collect();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn za_entries() {
        let za = generate_pattern(PatternId::fixed(PatternName::ZA)).unwrap();
        assert_eq!(za.to_dense(), vec![vec![1, 0, 0, 0], vec![1, 1, 0, 0], vec![1, 1, 1, 0], vec![0, 1, 0, 0]]);
        let co = generate_pattern(PatternId::fixed(PatternName::CoZA)).unwrap();
        assert!((0..4).all(|i| co.get(i, 3)));
    }

    #[test]
    fn mikstar_three() {
        let m = generate_pattern(PatternId::with_k(PatternName::MIkStar, 3)).unwrap();
        assert_eq!((m.row_count(), m.col_count()), (3, 4));
        assert_eq!(m.rows(), &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let mik = generate_pattern(PatternId::with_k(PatternName::MIk, 3)).unwrap();
        assert_eq!(mik.add_empty_column(), m);
        assert!(generate_pattern(PatternId::with_k(PatternName::MIk, 2)).is_err());
    }

    #[test]
    fn dimensions() {
        use PatternName::*;
        for (name, dims) in [(ZA, (4, 4)), (ZB, (4, 4)), (ZC, (3, 5)), (ZD, (4, 4))] {
            let m = generate_pattern(PatternId::fixed(name)).unwrap();
            assert_eq!((m.row_count(), m.col_count()), dims);
            let t = generate_pattern(PatternId::fixed(name).transpose()).unwrap();
            assert_eq!(t, m.transpose());
        }
        assert_eq!(fcco().len(), 12);
    }

    #[test]
    fn bracelet_lists() {
        assert_eq!(bracelets(3).unwrap(), vec![vec![0, 0, 0], vec![1, 1, 1]]);
        let b4: Vec<Vec<u8>> = bracelets(4).unwrap();
        let expected: Vec<Vec<u8>> = ["0000", "0001", "0011", "0101", "0111", "1111"]
            .iter()
            .map(|s| s.bytes().map(|b| b - b'0').collect())
            .collect();
        assert_eq!(b4, expected);
        assert!(bracelets(2).is_err());
    }

    #[test]
    fn bracelets_partition_all_strings() {
        for k in 4..=9 {
            let reps = bracelets(k).unwrap();
            let mut covered = 0usize;
            for x in 0u32..1 << k {
                let s: Vec<u8> = (0..k).map(|i| (x >> (k - 1 - i) & 1) as u8).collect();
                let m = orbit_min(&s);
                assert!(reps.binary_search(&m).is_ok());
                covered += 1;
            }
            assert_eq!(covered, 1 << k);
            assert!(reps.iter().all(|r| orbit_min(r) == *r));
        }
        // known bracelet counts
        assert_eq!(bracelets(6).unwrap().len(), 13);
        assert_eq!(bracelets(8).unwrap().len(), 30);
    }

    #[test]
    fn parse_labels() {
        let id = PatternId::parse("coZC^T", None).unwrap();
        assert_eq!(id, PatternId::fixed(PatternName::CoZC).transpose());
        assert_eq!(format!("{id}"), "coZC^T");
        assert!(PatternId::parse("MIkStar", None).is_err());
        assert_eq!(format!("{}", PatternId::parse("MIkStar", Some(4)).unwrap()), "MIkStar(k=4)");
    }
}
