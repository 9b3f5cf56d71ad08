//! The graph/matrix bridge and the end-to-end recognition of semi-transitive
//! co-bipartite graphs, with witnesses and certificates.
//!
//! The decision is always the matrix test on `M(G)`. Witness orientations
//! come from a biorder of `M(G)`, or from a transitive orientation when `G`
//! has a universal vertex, with the brute-force oracle as a last resort.
//! Certificates are induced copies of `CG(F)` for a forbidden configuration
//! `F`, named by the graph family they are isomorphic to.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{cobipartite_partition, find_induced_with, generate_family, CoBipartition, FamilyId, Graph, Vertex};
use crate::matrix::{
    cco_decision, generate_pattern, minimal_obstruction, monotone_circular_biorder, BinaryMatrix, Biorder,
    Configuration, PatternId, PatternName,
};
use crate::orientation::{
    find_violation, orientation_from_biorder, search_semi_transitive, transitive_orientation, Orientation,
    DEFAULT_SEARCH_CAP,
};

/// Cross-edge matrix: rows follow `p.side_x`, columns follow `p.side_y`.
pub fn biadjacency(g: &Graph, p: &CoBipartition) -> Result<BinaryMatrix> {
    if !p.is_valid_for(g) {
        return Err(Error::invalid("the sides do not split the graph into two cliques"));
    }
    let mut col_index = vec![usize::MAX; g.order()];
    for (c, &v) in p.side_y.iter().enumerate() {
        col_index[g.index_of(v).unwrap()] = c;
    }
    let rows = p
        .side_x
        .iter()
        .map(|&x| {
            let mut r: Vec<usize> = g
                .neighbor_indices(g.index_of(x).unwrap())
                .iter()
                .map(|&j| col_index[j])
                .filter(|&c| c != usize::MAX)
                .collect();
            r.sort_unstable();
            r
        })
        .collect();
    BinaryMatrix::new(p.side_y.len(), rows)
}

/// `CG(M)`: rows become the clique `1..=r`, columns the clique `r+1..=r+c`.
pub fn cg(m: &BinaryMatrix) -> (Graph, CoBipartition) {
    let (r, c) = (m.row_count(), m.col_count());
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            edges.push((i as Vertex + 1, j as Vertex + 1));
        }
        for &k in m.row(i) {
            edges.push((i as Vertex + 1, (r + k) as Vertex + 1));
        }
    }
    for a in 0..c {
        for b in a + 1..c {
            edges.push(((r + a) as Vertex + 1, (r + b) as Vertex + 1));
        }
    }
    let g = Graph::new(r + c, &edges).expect("CG edges are well formed");
    let p = CoBipartition {
        side_x: (1..=r as Vertex).collect(),
        side_y: (r as Vertex + 1..=(r + c) as Vertex).collect(),
    };
    (g, p)
}

/// The minimal non-semi-transitive co-bipartite graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GsMember {
    CgZA,
    CgZB,
    CgZD,
    CgCoZA,
    CgMIkStar(u32),
    CgCoMIkStar(u32),
}

impl GsMember {
    pub fn label(&self) -> &'static str {
        match self {
            GsMember::CgZA => "CG(ZA)",
            GsMember::CgZB => "CG(ZB)",
            GsMember::CgZD => "CG(ZD)",
            GsMember::CgCoZA => "CG(coZA)",
            GsMember::CgMIkStar(_) => "CG(MIkStar)",
            GsMember::CgCoMIkStar(_) => "CG(coMIkStar)",
        }
    }

    pub fn k(&self) -> Option<u32> {
        match self {
            GsMember::CgMIkStar(k) | GsMember::CgCoMIkStar(k) => Some(*k),
            _ => None,
        }
    }

    pub fn pattern(&self) -> PatternId {
        match *self {
            GsMember::CgZA => PatternId::fixed(PatternName::ZA),
            GsMember::CgZB => PatternId::fixed(PatternName::ZB),
            GsMember::CgZD => PatternId::fixed(PatternName::ZD),
            GsMember::CgCoZA => PatternId::fixed(PatternName::CoZA),
            GsMember::CgMIkStar(k) => PatternId::with_k(PatternName::MIkStar, k),
            GsMember::CgCoMIkStar(k) => PatternId::with_k(PatternName::CoMIkStar, k),
        }
    }

    /// Accepts labels with or without the `CG(...)` wrapper.
    pub fn parse(label: &str, k: Option<u32>) -> Result<GsMember> {
        let inner = label
            .strip_prefix("CG(")
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(label);
        let need_k = || k.ok_or_else(|| Error::invalid(format!("member {label} needs k")));
        Ok(match inner {
            "ZA" => GsMember::CgZA,
            "ZB" => GsMember::CgZB,
            "ZD" => GsMember::CgZD,
            "coZA" => GsMember::CgCoZA,
            "MIkStar" => GsMember::CgMIkStar(need_k()?),
            "coMIkStar" => GsMember::CgCoMIkStar(need_k()?),
            _ => return Err(Error::invalid(format!("unknown forbidden graph {label:?}"))),
        })
    }

    /// The members with at most `max_order` vertices.
    pub fn up_to_order(max_order: usize) -> Vec<GsMember> {
        let mut out = vec![GsMember::CgZA, GsMember::CgZB, GsMember::CgZD, GsMember::CgCoZA];
        let mut k = 3;
        while 2 * (k as usize) < max_order {
            out.push(GsMember::CgMIkStar(k));
            out.push(GsMember::CgCoMIkStar(k));
            k += 1;
        }
        out
    }
}

impl fmt::Display for GsMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())?;
        if let Some(k) = self.k() {
            write!(f, "(k={k})")?;
        }
        Ok(())
    }
}

pub fn generate_gs(member: GsMember) -> Result<Graph> {
    Ok(cg(&generate_pattern(member.pattern())?).0)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CertificateFamily {
    Gs(GsMember),
    Cp(FamilyId),
}

impl CertificateFamily {
    pub fn label(&self) -> &'static str {
        match self {
            CertificateFamily::Gs(m) => m.label(),
            CertificateFamily::Cp(f) => f.label(),
        }
    }

    pub fn k(&self) -> Option<u32> {
        match self {
            CertificateFamily::Gs(m) => m.k(),
            CertificateFamily::Cp(f) => f.k(),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        match *self {
            CertificateFamily::Gs(m) => generate_gs(m),
            CertificateFamily::Cp(f) => generate_family(f),
        }
    }
}

/// An induced subgraph isomorphic to a named family member.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Certificate {
    /// Sorted.
    pub vertices: Vec<Vertex>,
    pub family: CertificateFamily,
}

impl Certificate {
    /// Checks by an isomorphism search that the certificate is what it says.
    pub fn validate(&self, g: &Graph) -> Result<bool> {
        let sub = g.induced_subgraph(&self.vertices)?;
        crate::graph::is_isomorphic(&sub, &self.family.graph()?)
    }
}

impl fmt::Display for Certificate {
    /// `CERTIFICATE family=<label> k=<k or -> vertices=<comma list>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CERTIFICATE family={} k=", self.family.label())?;
        match self.family.k() {
            Some(k) => write!(f, "{k}")?,
            None => f.write_str("-")?,
        }
        f.write_str(" vertices=")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Decision {
    SemiTransitive,
    NotSemiTransitive,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::SemiTransitive => "SEMI-TRANSITIVE",
            Decision::NotSemiTransitive => "NOT-SEMI-TRANSITIVE",
        })
    }
}

/// How a witness orientation was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum WitnessPath {
    /// Monotone circular biorder of `M`, or of `Mᵗ` when `transposed`.
    Case1 { transposed: bool },
    /// All-0 row and all-0 column: the all-0 rows as sinks after a biorder
    /// of the remaining rows with an all-0 column last.
    Case2,
    /// An all-1 line: a transitive orientation of `G - v` with the universal
    /// vertex `v` as source. Also covers mixed trivial lines.
    UniversalVertex { vertex: Vertex, mixed: bool },
    BruteForce,
}

impl fmt::Display for WitnessPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessPath::Case1 { transposed: false } => f.write_str("case-1"),
            WitnessPath::Case1 { transposed: true } => f.write_str("case-1-transposed"),
            WitnessPath::Case2 => f.write_str("case-2"),
            WitnessPath::UniversalVertex { vertex, mixed: false } => write!(f, "case-3 universal={vertex}"),
            WitnessPath::UniversalVertex { vertex, mixed: true } => {
                write!(f, "mixed-trivial universal={vertex}")
            }
            WitnessPath::BruteForce => f.write_str("brute-force"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub decision: Decision,
    pub partition: CoBipartition,
    pub witness: Option<Orientation>,
    pub path: Option<WitnessPath>,
    pub certificate: Option<Certificate>,
}

impl fmt::Display for Verdict {
    /// Decision line, then either a `WITNESS path=...` header followed by
    /// the orientation, or a certificate line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.decision)?;
        if let (Some(o), Some(path)) = (&self.witness, &self.path) {
            writeln!(f, "WITNESS path={path}")?;
            write!(f, "{o}")?;
        }
        if let Some(c) = &self.certificate {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn recognize(g: &Graph) -> Result<Verdict> {
    recognize_with(g, &mut Budget::default())
}

/// Exact decision on `M(G)` for the canonical co-bipartition. A witness or
/// certificate is attached when one is found within `budget`; either is
/// validated first.
pub fn recognize_with(g: &Graph, budget: &mut Budget) -> Result<Verdict> {
    let p = cobipartite_partition(g).map_err(|c| {
        Error::invalid(format!("graph is not co-bipartite: odd cycle {:?} in the complement", c.0))
    })?;
    let m = biadjacency(g, &p)?;
    if cco_decision(&m) {
        let (witness, path) = match witness_orientation(g, &p, budget) {
            Ok(Some((o, path))) => (Some(o), Some(path)),
            Ok(None) => (None, None),
            Err(e) if e.is_budget() => (None, None),
            Err(e) => return Err(e),
        };
        return Ok(Verdict {
            decision: Decision::SemiTransitive,
            partition: p,
            witness,
            path,
            certificate: None,
        });
    }
    let certificate = match minimal_obstruction(&m) {
        Some((id, conf)) => Some(extract_certificate(g, &p, id, &conf)?),
        None => None,
    };
    Ok(Verdict {
        decision: Decision::NotSemiTransitive,
        partition: p,
        witness: None,
        path: None,
        certificate,
    })
}

fn swapped(p: &CoBipartition) -> CoBipartition {
    CoBipartition {
        side_x: p.side_y.clone(),
        side_y: p.side_x.clone(),
    }
}

/// A validated semi-transitive orientation of `g`, assuming `M(g)` has the
/// circularly compatible ones property. `None` only when no route applies
/// and the brute-force search is out of reach.
pub fn witness_orientation(
    g: &Graph,
    p: &CoBipartition,
    budget: &mut Budget,
) -> Result<Option<(Orientation, WitnessPath)>> {
    let m = biadjacency(g, p)?;
    let t = m.transpose();
    let full_row = (0..m.row_count()).find(|&i| m.is_full_row(i));
    let full_col = (0..t.row_count()).find(|&j| t.is_full_row(j));
    let zero_row = (0..m.row_count()).any(|i| m.is_zero_row(i));
    let zero_col = (0..t.row_count()).find(|&j| t.is_zero_row(j));

    let universal = full_row.map(|i| p.side_x[i]).or(full_col.map(|j| p.side_y[j]));
    let attempt = if let Some(v) = universal {
        let mixed = !(full_row.is_some() && full_col.is_some());
        universal_vertex_orientation(g, v, budget)?.map(|o| (o, WitnessPath::UniversalVertex { vertex: v, mixed }))
    } else if !zero_row {
        monotone_circular_biorder(&m, None)?
            .map(|b| constructed(orientation_from_biorder(g, p, &b)))
            .transpose()?
            .map(|o| (o, WitnessPath::Case1 { transposed: false }))
    } else if zero_col.is_none() {
        let q = swapped(p);
        monotone_circular_biorder(&t, None)?
            .map(|b| constructed(orientation_from_biorder(g, &q, &b)))
            .transpose()?
            .map(|o| (o, WitnessPath::Case1 { transposed: true }))
    } else {
        case2_orientation(g, p, &m, zero_col.unwrap())?.map(|o| (o, WitnessPath::Case2))
    };
    if let Some((o, path)) = attempt {
        if let Some(v) = find_violation(&o) {
            return Err(Error::internal(format!("{path} witness has a {v}")));
        }
        return Ok(Some((o, path)));
    }
    if g.order() > DEFAULT_SEARCH_CAP {
        return Ok(None);
    }
    Ok(search_semi_transitive(g, budget)?.map(|o| (o, WitnessPath::BruteForce)))
}

/// A biorder built here that the construction rejects is a bug.
fn constructed(o: Result<Orientation>) -> Result<Orientation> {
    o.map_err(|e| match e {
        Error::InvalidInput(msg) => Error::internal(format!("constructed biorder rejected: {msg}")),
        other => other,
    })
}

fn universal_vertex_orientation(g: &Graph, v: Vertex, budget: &mut Budget) -> Result<Option<Orientation>> {
    let rest = g.remove_vertex(v)?;
    let Some(t) = transitive_orientation(&rest, budget)? else {
        return Ok(None);
    };
    Ok(Some(Orientation::from_rule(g, |i, j| {
        let (a, b) = (g.vertex(i), g.vertex(j));
        if a == v {
            return true;
        }
        if b == v {
            return false;
        }
        t.has_arc(a, b)
    })))
}

fn case2_orientation(g: &Graph, p: &CoBipartition, m: &BinaryMatrix, zero_col: usize) -> Result<Option<Orientation>> {
    let nonzero: Vec<usize> = (0..m.row_count()).filter(|&i| !m.is_zero_row(i)).collect();
    let zeros: Vec<usize> = (0..m.row_count()).filter(|&i| m.is_zero_row(i)).collect();
    let all_cols: Vec<usize> = (0..m.col_count()).collect();
    let sub = m.submatrix(&nonzero, &all_cols);
    let Some(b) = monotone_circular_biorder(&sub, Some(zero_col))? else {
        return Ok(None);
    };
    let mut row_order: Vec<usize> = b.row_order.iter().map(|&i| nonzero[i]).collect();
    row_order.extend(zeros);
    let full = Biorder {
        row_order,
        col_order: b.col_order,
    };
    constructed(orientation_from_biorder(g, p, &full)).map(Some)
}

/// Maps a configuration of `M(g)` back to vertices and names the induced
/// subgraph. `CG(F)` and `CG(Fᵗ)` are the same graph with the sides
/// swapped; the finite configurations outside the minimal family are named
/// by the member they are isomorphic to.
pub fn extract_certificate(g: &Graph, p: &CoBipartition, id: PatternId, conf: &Configuration) -> Result<Certificate> {
    let (rows_side, cols_side) = if id.transposed {
        (&p.side_y, &p.side_x)
    } else {
        (&p.side_x, &p.side_y)
    };
    // pattern rows/columns of the untransposed F in graph vertices
    let (f_rows, f_cols): (Vec<Vertex>, Vec<Vertex>) = if id.transposed {
        (
            conf.cols.iter().map(|&c| rows_side[c]).collect(),
            conf.rows.iter().map(|&r| cols_side[r]).collect(),
        )
    } else {
        (
            conf.rows.iter().map(|&r| rows_side[r]).collect(),
            conf.cols.iter().map(|&c| cols_side[c]).collect(),
        )
    };
    let mut vertices: Vec<Vertex> = f_rows.iter().chain(&f_cols).copied().collect();
    vertices.sort_unstable();
    let base = PatternId { transposed: false, ..id };
    let member = match base.name {
        PatternName::ZA => Some(GsMember::CgZA),
        PatternName::ZB => Some(GsMember::CgZB),
        PatternName::ZD => Some(GsMember::CgZD),
        PatternName::CoZA => Some(GsMember::CgCoZA),
        PatternName::MIkStar => Some(GsMember::CgMIkStar(base.k.unwrap())),
        PatternName::CoMIkStar => Some(GsMember::CgCoMIkStar(base.k.unwrap())),
        PatternName::ZC | PatternName::CoZC | PatternName::MIk => None,
    };
    let family = match member {
        Some(member) => {
            // explicit isomorphism: member row i -> f_rows[i], column j -> f_cols[j]
            let h = generate_gs(member)?;
            let image: Vec<Vertex> = f_rows.iter().chain(&f_cols).copied().collect();
            let ok = (0..h.order()).all(|a| {
                (a + 1..h.order()).all(|b| h.adjacent(a, b) == g.has_edge(image[a], image[b]))
            });
            if !ok {
                return Err(Error::internal(format!("configuration {id} does not induce {member}")));
            }
            member
        }
        None => {
            let sub = g.induced_subgraph(&vertices)?;
            let mut named = None;
            for cand in GsMember::up_to_order(sub.order()) {
                let h = generate_gs(cand)?;
                if h.order() == sub.order() && crate::graph::is_isomorphic(&sub, &h)? {
                    named = Some(cand);
                    break;
                }
            }
            named.ok_or_else(|| Error::internal(format!("configuration {id} matches no minimal graph")))?
        }
    };
    Ok(Certificate {
        vertices,
        family: CertificateFamily::Gs(family),
    })
}

/// Vertex cap of the certificate searches in [`is_cobipartite_permutation`].
pub const DEFAULT_CERTIFICATE_CAP: usize = 16;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PermutationAnswer {
    /// A transitive orientation of the graph (its complement is bipartite,
    /// hence always transitively orientable).
    Permutation(Orientation),
    NotPermutation(Certificate),
}

impl PermutationAnswer {
    pub fn is_permutation(&self) -> bool {
        matches!(self, PermutationAnswer::Permutation(_))
    }
}

/// Decides whether a co-bipartite graph is a permutation graph (equivalently
/// a circle graph). A positive answer carries a transitive orientation; a
/// negative one an induced `G1`, `G2`, `G3` or `C̄2k`, `k >= 3`.
pub fn is_cobipartite_permutation(g: &Graph, budget: &mut Budget) -> Result<PermutationAnswer> {
    if cobipartite_partition(g).is_err() {
        return Err(Error::invalid("graph is not co-bipartite"));
    }
    if let Some(o) = transitive_orientation(g, budget)? {
        return Ok(PermutationAnswer::Permutation(o));
    }
    if g.order() > DEFAULT_CERTIFICATE_CAP {
        return Err(Error::CapExceeded {
            what: "permutation certificate search",
            size: g.order(),
            cap: DEFAULT_CERTIFICATE_CAP,
        });
    }
    for f in [FamilyId::G1, FamilyId::G2, FamilyId::G3] {
        let h = generate_family(f)?;
        if let Some(img) = find_induced_with(g, &h, DEFAULT_CERTIFICATE_CAP, budget)? {
            let mut vertices = img;
            vertices.sort_unstable();
            return Ok(PermutationAnswer::NotPermutation(Certificate {
                vertices,
                family: CertificateFamily::Cp(f),
            }));
        }
    }
    let comp = g.complement();
    if let Some(cycle) = induced_long_cycle(&comp, budget)? {
        let k = cycle.len() as u32 / 2;
        let mut vertices: Vec<Vertex> = cycle.iter().map(|&i| g.vertex(i)).collect();
        vertices.sort_unstable();
        return Ok(PermutationAnswer::NotPermutation(Certificate {
            vertices,
            family: CertificateFamily::Cp(FamilyId::CoC2k(k)),
        }));
    }
    Err(Error::internal("not a comparability graph, yet no obstruction found"))
}

/// Shortest chordless cycle of length at least 6, by dense indices.
fn induced_long_cycle(h: &Graph, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    let n = h.order();
    for len in 6..=n {
        for s in 0..n {
            let mut path = vec![s];
            let mut on = vec![false; n];
            on[s] = true;
            if extend_cycle(h, len, &mut path, &mut on, budget)? {
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}

/// Induced paths from `path[0]` through larger vertices only.
fn extend_cycle(h: &Graph, len: usize, path: &mut Vec<usize>, on: &mut [bool], budget: &mut Budget) -> Result<bool> {
    budget.tick("induced cycle search")?;
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == len {
        return Ok(h.adjacent(last, s));
    }
    for &w in h.neighbor_indices(last) {
        if w <= s || on[w] {
            continue;
        }
        // w may touch only `last` on the path, and `s` only as closing vertex
        let chord = path[..path.len() - 1]
            .iter()
            .enumerate()
            .any(|(k, &u)| h.adjacent(u, w) && !(k == 0 && path.len() + 1 == len));
        if chord {
            continue;
        }
        path.push(w);
        on[w] = true;
        if extend_cycle(h, len, path, on, budget)? {
            return Ok(true);
        }
        on[w] = false;
        path.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn m(rows: &[&[u8]]) -> BinaryMatrix {
        BinaryMatrix::from_dense(rows).unwrap()
    }

    fn pattern(name: PatternName) -> BinaryMatrix {
        generate_pattern(PatternId::fixed(name)).unwrap()
    }

    #[test]
    fn biadjacency_of_c6bar() {
        let g = generate_family(FamilyId::CoC2k(3)).unwrap();
        let p = cobipartite_partition(&g).unwrap();
        assert_eq!(p.side_x, vec![1, 3, 5]);
        let mat = biadjacency(&g, &p).unwrap();
        // 1-4, 3-6, 5-2
        assert_eq!(mat.rows(), &[vec![1], vec![2], vec![0]]);
    }

    #[test]
    fn clique_has_empty_side() {
        let g = Graph::complete(4);
        let p = cobipartite_partition(&g).unwrap();
        let mat = biadjacency(&g, &p).unwrap();
        assert_eq!(mat.row_count() + mat.col_count(), 4);
        assert!(mat.row_count() == 0 || mat.col_count() == 0);
    }

    #[test]
    fn bad_partition_rejected() {
        let g = Graph::cycle(4).unwrap();
        let p = CoBipartition {
            side_x: vec![1, 3],
            side_y: vec![2, 4],
        };
        assert!(biadjacency(&g, &p).is_err());
    }

    #[test]
    fn round_trips() {
        let za = pattern(PatternName::ZA);
        let (g, p) = cg(&za);
        assert_eq!(g.order(), 8);
        assert_eq!(biadjacency(&g, &p).unwrap(), za);
        let (gt, _) = cg(&za.transpose());
        assert!(is_isomorphic(&g, &gt).unwrap());
        let (i2, _) = cg(&BinaryMatrix::identity(2));
        assert!(is_isomorphic(&i2, &Graph::cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn gs_members() {
        assert_eq!(generate_gs(GsMember::CgMIkStar(3)).unwrap().order(), 7);
        let co = generate_gs(GsMember::CgCoMIkStar(3)).unwrap();
        let c6bar_k1 = generate_family(FamilyId::CoC2k(3)).unwrap().with_universal_vertex(7).unwrap();
        assert!(is_isomorphic(&co, &c6bar_k1).unwrap());
        assert_eq!(generate_gs(GsMember::CgZA).unwrap().order(), 8);
        assert_eq!(GsMember::parse("CG(MIkStar)", Some(4)).unwrap(), GsMember::CgMIkStar(4));
        assert!(GsMember::parse("CG(MIkStar)", None).is_err());
    }

    #[test]
    fn cg_za_is_a_certificate_of_itself() {
        let (g, _) = cg(&pattern(PatternName::ZA));
        let v = recognize(&g).unwrap();
        assert_eq!(v.decision, Decision::NotSemiTransitive);
        let c = v.certificate.unwrap();
        assert_eq!(c.vertices, (1..=8).collect::<Vec<_>>());
        assert_eq!(c.family, CertificateFamily::Gs(GsMember::CgZA));
        assert!(c.validate(&g).unwrap());
    }

    #[test]
    fn zc_is_named_cg_zb() {
        let (g, p) = cg(&pattern(PatternName::ZC));
        let conf = Configuration {
            rows: vec![0, 1, 2],
            cols: vec![0, 1, 2, 3, 4],
        };
        let c = extract_certificate(&g, &p, PatternId::fixed(PatternName::ZC), &conf).unwrap();
        assert_eq!(c.family, CertificateFamily::Gs(GsMember::CgZB));
        assert_eq!(c.vertices.len(), 8);
    }

    #[test]
    fn mikstar_certificate() {
        let (g, _) = cg(&generate_pattern(PatternId::with_k(PatternName::MIkStar, 3)).unwrap());
        let v = recognize(&g).unwrap();
        assert_eq!(v.decision, Decision::NotSemiTransitive);
        let c = v.certificate.unwrap();
        assert_eq!(c.vertices.len(), 7);
        assert_eq!(c.family.k(), Some(3));
        assert!(c.validate(&g).unwrap());
    }

    #[test]
    fn c6bar_gets_case1_witness() {
        let g = generate_family(FamilyId::CoC2k(3)).unwrap();
        let v = recognize(&g).unwrap();
        assert_eq!(v.decision, Decision::SemiTransitive);
        assert_eq!(v.path, Some(WitnessPath::Case1 { transposed: false }));
        assert_eq!(find_violation(v.witness.as_ref().unwrap()), None);
    }

    #[test]
    fn case2_witness() {
        let (g, _) = cg(&m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]]));
        let v = recognize(&g).unwrap();
        assert_eq!(v.path, Some(WitnessPath::Case2));
        assert_eq!(find_violation(v.witness.as_ref().unwrap()), None);
    }

    #[test]
    fn case2_with_nested_rows() {
        // a row nested strictly inside another, plus all-0 lines
        let (g, _) = cg(&m(&[&[1, 1, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 0]]));
        let v = recognize(&g).unwrap();
        assert_eq!(v.decision, Decision::SemiTransitive);
        assert_eq!(v.path, Some(WitnessPath::Case2));
        assert_eq!(find_violation(v.witness.as_ref().unwrap()), None);
    }

    #[test]
    fn universal_vertex_witness() {
        let (g, p) = cg(&m(&[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]]));
        let v = recognize(&g).unwrap();
        assert_eq!(v.decision, Decision::SemiTransitive);
        let u = p.side_x[0];
        assert!(matches!(v.path, Some(WitnessPath::UniversalVertex { vertex, .. }) if vertex == u));
        let o = v.witness.unwrap();
        assert!(g.vertices().iter().filter(|&&x| x != u).all(|&x| o.has_arc(u, x)));
    }

    #[test]
    fn not_cobipartite_is_an_input_error() {
        let err = recognize(&Graph::cycle(5).unwrap()).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn permutation_examples() {
        let mut b = Budget::default();
        let c6bar = generate_family(FamilyId::CoC2k(3)).unwrap();
        match is_cobipartite_permutation(&c6bar, &mut b).unwrap() {
            PermutationAnswer::NotPermutation(c) => {
                assert_eq!(c.family, CertificateFamily::Cp(FamilyId::CoC2k(3)));
                assert_eq!(c.vertices, (1..=6).collect::<Vec<_>>());
            }
            other => panic!("{other:?}"),
        }
        let minus = c6bar.remove_vertex(6).unwrap();
        assert!(is_cobipartite_permutation(&minus, &mut b).unwrap().is_permutation());
        let g1 = generate_family(FamilyId::G1).unwrap();
        match is_cobipartite_permutation(&g1, &mut b).unwrap() {
            PermutationAnswer::NotPermutation(c) => assert_eq!(c.family, CertificateFamily::Cp(FamilyId::G1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn longer_cycle_certificate() {
        let c8bar = generate_family(FamilyId::CoC2k(4)).unwrap();
        match is_cobipartite_permutation(&c8bar, &mut Budget::default()).unwrap() {
            PermutationAnswer::NotPermutation(c) => {
                assert_eq!(c.family, CertificateFamily::Cp(FamilyId::CoC2k(4)));
                assert!(c.validate(&c8bar).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn verdict_text() {
        let (g, _) = cg(&pattern(PatternName::ZA));
        let text = format!("{}", recognize(&g).unwrap());
        assert_eq!(text, "NOT-SEMI-TRANSITIVE\nCERTIFICATE family=CG(ZA) k=- vertices=1,2,3,4,5,6,7,8\n");
    }
}
