use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, Vertex};

/// Two cliques covering the vertex set; `side_x` indexes matrix rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoBipartition {
    pub side_x: Vec<Vertex>,
    pub side_y: Vec<Vertex>,
}

impl CoBipartition {
    /// Checks that the sides partition `V(g)` into two cliques.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut all: Vec<Vertex> = self.side_x.iter().chain(&self.side_y).copied().collect();
        all.sort_unstable();
        all == g.vertices() && g.is_clique(&self.side_x) && g.is_clique(&self.side_y)
    }
}

/// An odd cycle in the complement, listed in cycle order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddCycle(pub Vec<Vertex>);

/// Canonical co-bipartition: each component of the complement is 2-coloured
/// by BFS from its least vertex, whose colour class goes to `side_x`.
pub fn cobipartite_partition(g: &Graph) -> Result<CoBipartition, OddCycle> {
    let n = g.order();
    let comp = g.complement();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(a) = queue.pop_front() {
            for &b in comp.neighbor_indices(a) {
                if color[b] == u8::MAX {
                    color[b] = 1 - color[a];
                    parent[b] = a;
                    depth[b] = depth[a] + 1;
                    queue.push_back(b);
                } else if color[b] == color[a] {
                    return Err(OddCycle(odd_cycle(g, &parent, &depth, a, b)));
                }
            }
        }
    }
    let side = |c: u8| (0..n).filter(|&i| color[i] == c).map(|i| g.vertex(i)).collect();
    Ok(CoBipartition {
        side_x: side(0),
        side_y: side(1),
    })
}

/// Closes the BFS-tree paths from `a` and `b` at their common ancestor.
fn odd_cycle(g: &Graph, parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<Vertex> {
    let (mut x, mut y) = (a, b);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[x] > depth[y] {
        left.push(x);
        x = parent[x];
    }
    while depth[y] > depth[x] {
        right.push(y);
        y = parent[y];
    }
    while x != y {
        left.push(x);
        right.push(y);
        x = parent[x];
        y = parent[y];
    }
    left.push(x);
    left.extend(right.into_iter().rev());
    left.into_iter().map(|i| g.vertex(i)).collect()
}
