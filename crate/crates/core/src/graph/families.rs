use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Named graphs: the co-bipartite permutation obstructions `C̄2k`, `G1`,
/// `G2`, `G3` and the circle-graph obstructions `W5`, `W7`, `Y6`.
///
/// Numbering of the unlabelled drawings (top-to-bottom, left-to-right):
///
/// * `W5`: hub 4, rim cycle 5-6-3-1-2-5.
/// * `W7`: hub 4, rim cycle 7-8-6-3-1-2-5-7.
/// * `Y6`: seven vertices, edges 1-2, 1-3, 2-4, 2-5, 3-4, 3-6, 4-7, 5-7, 6-7.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyId {
    CoC2k(u32),
    G1,
    G2,
    G3,
    W5,
    W7,
    Y6,
}

impl FamilyId {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyId::CoC2k(_) => "CoC2k",
            FamilyId::G1 => "G1",
            FamilyId::G2 => "G2",
            FamilyId::G3 => "G3",
            FamilyId::W5 => "W5",
            FamilyId::W7 => "W7",
            FamilyId::Y6 => "Y6",
        }
    }

    pub fn k(&self) -> Option<u32> {
        match self {
            FamilyId::CoC2k(k) => Some(*k),
            _ => None,
        }
    }

    /// Parses a label, with `k` required exactly for `CoC2k`.
    pub fn parse(name: &str, k: Option<u32>) -> Result<FamilyId> {
        let id = match name {
            "CoC2k" => FamilyId::CoC2k(
                k.ok_or_else(|| Error::invalid("family CoC2k needs a parameter k"))?,
            ),
            "G1" => FamilyId::G1,
            "G2" => FamilyId::G2,
            "G3" => FamilyId::G3,
            "W5" => FamilyId::W5,
            "W7" => FamilyId::W7,
            "Y6" => FamilyId::Y6,
            _ => return Err(Error::invalid(format!("unknown graph family {name:?}"))),
        };
        Ok(id)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::CoC2k(k) => write!(f, "CoC2k(k={k})"),
            other => f.write_str(other.label()),
        }
    }
}

const CLIQUE_A: [Vertex; 3] = [1, 2, 3];
const CLIQUE_B: [Vertex; 4] = [4, 5, 6, 7];

fn two_cliques_plus(cross: &[(Vertex, Vertex)]) -> Result<Graph> {
    let mut edges = Vec::new();
    for (a, &u) in CLIQUE_A.iter().enumerate() {
        edges.extend(CLIQUE_A[a + 1..].iter().map(|&v| (u, v)));
    }
    for (a, &u) in CLIQUE_B.iter().enumerate() {
        edges.extend(CLIQUE_B[a + 1..].iter().map(|&v| (u, v)));
    }
    edges.extend_from_slice(cross);
    Graph::new(7, &edges)
}

fn wheel(hub: Vertex, rim: &[Vertex]) -> Result<Graph> {
    let mut edges: Vec<_> = rim.iter().map(|&v| (hub, v)).collect();
    for i in 0..rim.len() {
        edges.push((rim[i], rim[(i + 1) % rim.len()]));
    }
    Graph::new(rim.len() + 1, &edges)
}

pub fn generate_family(id: FamilyId) -> Result<Graph> {
    match id {
        FamilyId::CoC2k(k) => {
            if k < 3 {
                return Err(Error::invalid(format!("CoC2k needs k >= 3, got {k}")));
            }
            Ok(Graph::cycle(2 * k as usize)?.complement())
        }
        FamilyId::G1 => two_cliques_plus(&[(1, 4), (2, 5), (3, 4), (3, 5), (3, 6)]),
        FamilyId::G2 => two_cliques_plus(&[(3, 4), (3, 6), (2, 5), (2, 4)]),
        FamilyId::G3 => two_cliques_plus(&[(1, 5), (1, 6), (3, 4), (3, 6), (2, 5), (2, 4)]),
        FamilyId::W5 => wheel(4, &[5, 6, 3, 1, 2]),
        FamilyId::W7 => wheel(4, &[7, 8, 6, 3, 1, 2, 5]),
        FamilyId::Y6 => Graph::new(
            7,
            &[(1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 6), (4, 7), (5, 7), (6, 7)],
        ),
    }
}
