//! Orientations, shortcut detection, the brute-force semi-transitivity
//! oracle, transitive orientation, and the orientation induced by a biorder.
//!
//! A shortcut is an acyclic, non-transitive oriented subgraph on a directed
//! path `v0 → v1 → ... → vk` (`k >= 3`) together with the arc `v0 → vk`. In
//! an acyclic orientation every arc inside such a path points forward, so a
//! shortcut exists exactly when some arc `u → v` spans a path
//! `u ⇝ x ⇝ y ⇝ v` through two non-adjacent vertices `x`, `y`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{CoBipartition, Graph, Vertex};
use crate::matrix::{monotone_circular_violation, BinaryMatrix, Biorder, Ends};

pub use crate::matrix::{classify_row_vertices, RowKind};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Orientation {
    graph: Graph,
    /// Sorted out-neighbour indices.
    out: Vec<Vec<usize>>,
}

impl Orientation {
    /// Orients every edge `{i, j}` (by dense index) as `i → j` iff
    /// `forward(i, j)`; `forward` is only asked with `i < j`.
    pub fn from_rule(graph: &Graph, mut forward: impl FnMut(usize, usize) -> bool) -> Orientation {
        let n = graph.order();
        let mut out = vec![Vec::new(); n];
        for i in 0..n {
            for &j in graph.neighbor_indices(i).iter().filter(|&&j| j > i) {
                if forward(i, j) {
                    out[i].push(j);
                } else {
                    out[j].push(i);
                }
            }
        }
        for l in out.iter_mut() {
            l.sort_unstable();
        }
        Orientation {
            graph: graph.clone(),
            out,
        }
    }

    /// Orients each edge from lower to higher `rank` (ranks by dense index).
    pub fn from_ranks(graph: &Graph, rank: &[usize]) -> Orientation {
        Orientation::from_rule(graph, |i, j| (rank[i], i) < (rank[j], j))
    }

    /// Builds from explicit arcs, which must cover every edge exactly once.
    pub fn from_arcs(graph: &Graph, arcs: &[(Vertex, Vertex)]) -> Result<Orientation> {
        let n = graph.order();
        let mut out = vec![Vec::new(); n];
        for &(u, v) in arcs {
            let (i, j) = (graph.require(u)?, graph.require(v)?);
            if !graph.adjacent(i, j) {
                return Err(Error::invalid(format!("arc {u} -> {v} is not an edge")));
            }
            out[i].push(j);
        }
        for l in out.iter_mut() {
            l.sort_unstable();
        }
        let o = Orientation {
            graph: graph.clone(),
            out,
        };
        for (u, v) in graph.edges() {
            let (a, b) = (o.has_arc(u, v), o.has_arc(v, u));
            if a == b {
                let what = if a { "in both directions" } else { "missing" };
                return Err(Error::invalid(format!("edge ({u}, {v}) is {what}")));
            }
        }
        if arcs.len() != graph.edge_count() {
            return Err(Error::invalid("an arc is listed more than once"));
        }
        Ok(o)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn out_indices(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        match (self.graph.index_of(u), self.graph.index_of(v)) {
            (Some(i), Some(j)) => self.out[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    fn arc(&self, i: usize, j: usize) -> bool {
        self.out[i].binary_search(&j).is_ok()
    }

    /// Arcs `(u, v)` sorted.
    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        let g = &self.graph;
        let mut a: Vec<_> = (0..g.order())
            .flat_map(|i| self.out[i].iter().map(move |&j| (g.vertex(i), g.vertex(j))))
            .collect();
        a.sort_unstable();
        a
    }

    pub fn reversed(&self) -> Orientation {
        Orientation::from_rule(&self.graph, |i, j| self.arc(j, i))
    }

    /// Restriction to the subgraph induced by `keep`.
    pub fn restrict(&self, keep: &[Vertex]) -> Result<Orientation> {
        let sub = self.graph.induced_subgraph(keep)?;
        Ok(Orientation::from_rule(&sub, |i, j| {
            self.has_arc(sub.vertex(i), sub.vertex(j))
        }))
    }

    fn in_lists(&self) -> Vec<Vec<usize>> {
        let mut inn = vec![Vec::new(); self.graph.order()];
        for (i, l) in self.out.iter().enumerate() {
            for &j in l {
                inn[j].push(i);
            }
        }
        inn
    }

    /// Topological order by dense index, smallest available first; `None`
    /// if the orientation has a directed cycle.
    fn topological(&self) -> Option<Vec<usize>> {
        let n = self.graph.order();
        let mut indeg = vec![0usize; n];
        for l in &self.out {
            for &j in l {
                indeg[j] += 1;
            }
        }
        let mut ready: alloc::collections::BinaryHeap<core::cmp::Reverse<usize>> =
            (0..n).filter(|&i| indeg[i] == 0).map(core::cmp::Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(core::cmp::Reverse(i)) = ready.pop() {
            order.push(i);
            for &j in &self.out[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.push(core::cmp::Reverse(j));
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological().is_some()
    }

    /// True iff the orientation is transitive (and hence acyclic).
    pub fn is_transitive(&self) -> bool {
        let n = self.graph.order();
        let sets = BitRows::from_lists(n, &self.out);
        (0..n).all(|a| self.out[a].iter().all(|&b| !self.arc(b, a) && sets.subset(b, a)))
            && self.is_acyclic()
    }
}

impl fmt::Display for Orientation {
    /// Graph header `n m` followed by one `u -> v` line per arc. Vertex ids
    /// other than `1..=n` are listed on a `v:` line after the header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.graph.order(), self.graph.edge_count())?;
        let ids = self.graph.vertices();
        if ids.iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
            f.write_str("v:")?;
            for v in ids {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        for (u, v) in self.arcs() {
            writeln!(f, "{u} -> {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ViolationKind {
    Cycle,
    Shortcut,
}

/// A directed cycle (listed in order), or a shortcut path `v0 ... vk` whose
/// shortcutting arc is `v0 → vk`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertices: Vec<Vertex>,
}

impl Violation {
    /// Independent re-check against `o`.
    pub fn is_valid_for(&self, o: &Orientation) -> bool {
        let v = &self.vertices;
        let mut sorted = v.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != v.len() || v.iter().any(|&x| !o.graph.contains(x)) {
            return false;
        }
        let path_ok = v.windows(2).all(|w| o.has_arc(w[0], w[1]));
        match self.kind {
            ViolationKind::Cycle => v.len() >= 3 && path_ok && o.has_arc(v[v.len() - 1], v[0]),
            ViolationKind::Shortcut => {
                if v.len() < 4 || !path_ok || !o.has_arc(v[0], v[v.len() - 1]) {
                    return false;
                }
                let Ok(sub) = o.restrict(v) else { return false };
                let non_adjacent =
                    (0..v.len()).any(|i| (i + 1..v.len()).any(|j| !o.graph.has_edge(v[i], v[j])));
                sub.is_acyclic() && non_adjacent
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::Cycle => "cycle",
            ViolationKind::Shortcut => "shortcut",
        };
        write!(f, "{kind}")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Dense bit matrix, one row per vertex.
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitRows {
            words,
            bits: vec![0; words * n],
        }
    }

    fn from_lists(n: usize, lists: &[Vec<usize>]) -> Self {
        let mut b = BitRows::new(n);
        for (i, l) in lists.iter().enumerate() {
            for &j in l {
                b.set(i, j);
            }
        }
        b
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// row[dst] |= row[src]
    fn or_into(&mut self, dst: usize, src: usize) {
        let w = self.words;
        if dst == src {
            return;
        }
        let (a, b) = if dst < src {
            let (lo, hi) = self.bits.split_at_mut(src * w);
            (&mut lo[dst * w..(dst + 1) * w], &hi[..w])
        } else {
            let (lo, hi) = self.bits.split_at_mut(dst * w);
            (&mut hi[..w], &lo[src * w..(src + 1) * w])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x |= *y;
        }
    }

    fn intersects(&self, i: usize, other: &BitRows, j: usize) -> bool {
        self.row(i).iter().zip(other.row(j)).any(|(a, b)| a & b != 0)
    }

    /// row[i] ⊆ row[j]
    fn subset(&self, i: usize, j: usize) -> bool {
        self.row(i).iter().zip(self.row(j)).all(|(a, b)| a & !b == 0)
    }
}

const SHORTEST_LIMIT: usize = 512;

/// First violation of semi-transitivity, or `None` if `o` is semi-transitive.
///
/// Cycles are reported first: the shortest one, through the least vertex
/// that lies on a shortest cycle. Otherwise the shortest shortcut is
/// reported, ties broken by the least `(v0, vk, x, y)` with `x`, `y` the
/// first non-adjacent pair used to build it, each leg being the
/// lexicographically least shortest path. Above 512 vertices a shortcut is
/// still reported but not necessarily a shortest one.
pub fn find_violation(o: &Orientation) -> Option<Violation> {
    let g = &o.graph;
    let n = g.order();
    let Some(topo) = o.topological() else {
        return Some(shortest_cycle(o));
    };
    let inn = o.in_lists();
    // desc: reflexive descendants; reach: out-neighbours of reflexive ancestors
    let mut desc = BitRows::new(n);
    for &v in topo.iter().rev() {
        desc.set(v, v);
        for &w in &o.out[v] {
            desc.or_into(v, w);
        }
    }
    let mut reach = BitRows::from_lists(n, &o.out);
    for &v in &topo {
        for &p in &inn[v] {
            reach.or_into(v, p);
        }
    }
    let mut witness = None;
    'outer: for x in 0..n {
        for y in 0..n {
            if y != x && desc.get(x, y) && !g.adjacent(x, y) && reach.intersects(x, &desc, y) {
                witness = Some((x, y));
                break 'outer;
            }
        }
    }
    let (x, y) = witness?;
    let path = if n <= SHORTEST_LIMIT {
        shortest_shortcut(o, &inn)
    } else {
        shortcut_through(o, &inn, &desc, &reach, x, y)
    };
    Some(Violation {
        kind: ViolationKind::Shortcut,
        vertices: path.into_iter().map(|i| g.vertex(i)).collect(),
    })
}

const INF: u32 = u32::MAX;

fn bfs(o: &Orientation, s: usize, forward: bool, inn: &[Vec<usize>]) -> Vec<u32> {
    let n = o.graph.order();
    let mut dist = vec![INF; n];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(a) = q.pop_front() {
        let next = if forward { &o.out[a] } else { &inn[a] };
        for &b in next {
            if dist[b] == INF {
                dist[b] = dist[a] + 1;
                q.push_back(b);
            }
        }
    }
    dist
}

/// Lexicographically least shortest path `a ⇝ b`, given distances to `b`.
fn lex_path(o: &Orientation, a: usize, b: usize, to_b: &[u32]) -> Vec<usize> {
    let mut path = vec![a];
    let mut cur = a;
    while cur != b {
        cur = *o.out[cur]
            .iter()
            .find(|&&w| to_b[w] != INF && to_b[w] + 1 == to_b[cur])
            .expect("distance labels are consistent");
        path.push(cur);
    }
    path
}

fn shortest_cycle(o: &Orientation) -> Violation {
    let n = o.graph.order();
    let inn = o.in_lists();
    let mut best: Option<(u32, usize, usize)> = None;
    for s in 0..n {
        let dist = bfs(o, s, true, &inn);
        for &u in &inn[s] {
            if dist[u] != INF && best.is_none_or(|(len, _, _)| dist[u] + 1 < len) {
                best = Some((dist[u] + 1, s, u));
            }
        }
    }
    let (_, s, u) = best.expect("cyclic orientation has a cycle");
    let to_u = bfs(o, u, false, &inn);
    let path = lex_path(o, s, u, &to_u);
    Violation {
        kind: ViolationKind::Cycle,
        vertices: path.into_iter().map(|i| o.graph.vertex(i)).collect(),
    }
}

fn shortest_shortcut(o: &Orientation, inn: &[Vec<usize>]) -> Vec<usize> {
    let g = &o.graph;
    let n = g.order();
    // dist[a][b], row per source
    let dist: Vec<Vec<u32>> = (0..n).map(|s| bfs(o, s, true, inn)).collect();
    let add = |a: u32, b: u32| if a == INF || b == INF { INF } else { a + b };
    // near[x][v] = min over in-neighbours u of v of dist(u, x)
    let mut near = vec![vec![INF; n]; n];
    for v in 0..n {
        for &u in &inn[v] {
            for x in 0..n {
                near[x][v] = near[x][v].min(dist[u][x]);
            }
        }
    }
    let mut best = INF;
    for x in 0..n {
        for y in 0..n {
            if y == x || g.adjacent(x, y) || dist[x][y] == INF {
                continue;
            }
            for v in 0..n {
                best = best.min(add(add(near[x][v], dist[x][y]), dist[y][v]));
            }
        }
    }
    debug_assert!(best != INF);
    for u in 0..n {
        for &v in &o.out[u] {
            for x in (0..n).filter(|&x| dist[u][x] != INF) {
                for y in 0..n {
                    if y == x || g.adjacent(x, y) {
                        continue;
                    }
                    if add(add(dist[u][x], dist[x][y]), dist[y][v]) == best {
                        let to = |b: usize| -> Vec<u32> { (0..n).map(|a| dist[a][b]).collect() };
                        let mut path = lex_path(o, u, x, &to(x));
                        path.extend_from_slice(&lex_path(o, x, y, &to(y))[1..]);
                        path.extend_from_slice(&lex_path(o, y, v, &to(v))[1..]);
                        return path;
                    }
                }
            }
        }
    }
    unreachable!("a shortcut of the minimal length exists")
}

fn shortcut_through(
    o: &Orientation,
    inn: &[Vec<usize>],
    desc: &BitRows,
    reach: &BitRows,
    x: usize,
    y: usize,
) -> Vec<usize> {
    let n = o.graph.order();
    let v = (0..n).find(|&v| reach.get(x, v) && desc.get(y, v)).unwrap();
    let to_x = bfs(o, x, false, inn);
    let u = *inn[v].iter().find(|&&u| to_x[u] != INF).unwrap();
    let to_y = bfs(o, y, false, inn);
    let to_v = bfs(o, v, false, inn);
    let mut path = lex_path(o, u, x, &to_x);
    path.extend_from_slice(&lex_path(o, x, y, &to_y)[1..]);
    path.extend_from_slice(&lex_path(o, y, v, &to_v)[1..]);
    path
}

/// Default vertex cap of [`search_semi_transitive`].
pub const DEFAULT_SEARCH_CAP: usize = 12;

/// Exhaustive search for a semi-transitive orientation.
///
/// Edges are decided in order of decreasing degree product. An edge whose
/// endpoints are already joined by a directed path gets the only direction
/// that avoids a cycle, the first free edge is fixed by reversal symmetry,
/// and every partial orientation is checked for shortcuts, which can only
/// persist once present.
pub fn search_semi_transitive(g: &Graph, budget: &mut Budget) -> Result<Option<Orientation>> {
    search_semi_transitive_with(g, DEFAULT_SEARCH_CAP, budget)
}

pub fn search_semi_transitive_with(
    g: &Graph,
    cap: usize,
    budget: &mut Budget,
) -> Result<Option<Orientation>> {
    let n = g.order();
    if n > cap.min(64) {
        return Err(Error::CapExceeded {
            what: "semi-transitive orientation search",
            size: n,
            cap: cap.min(64),
        });
    }
    let deg: Vec<usize> = (0..n).map(|i| g.neighbor_indices(i).len()).collect();
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| g.neighbor_indices(i).iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
        .collect();
    edges.sort_by_key(|&(i, j)| (core::cmp::Reverse(deg[i] * deg[j]), i, j));
    let adj: Vec<u64> = g.masks().expect("order at most 64");
    let mut search = StSearch {
        n,
        adj,
        edges,
        out: vec![0u64; n],
        symmetric: true,
    };
    if !search.go(0, budget)? {
        return Ok(None);
    }
    let out = &search.out;
    Ok(Some(Orientation::from_rule(g, |i, j| out[i] >> j & 1 == 1)))
}

struct StSearch {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
    out: Vec<u64>,
    symmetric: bool,
}

impl StSearch {
    /// Reflexive descendant masks, or `None` on a cycle.
    fn descendants(&self) -> Option<Vec<u64>> {
        let n = self.n;
        let mut indeg = vec![0u32; n];
        for i in 0..n {
            let mut m = self.out[i];
            while m != 0 {
                indeg[m.trailing_zeros() as usize] += 1;
                m &= m - 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(i) = stack.pop() {
            order.push(i);
            let mut m = self.out[i];
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
        if order.len() != n {
            return None;
        }
        let mut desc = vec![0u64; n];
        for &i in order.iter().rev() {
            let mut d = 1u64 << i;
            let mut m = self.out[i];
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                d |= desc[j];
            }
            desc[i] = d;
        }
        Some(desc)
    }

    fn has_shortcut(&self, desc: &[u64]) -> bool {
        let n = self.n;
        // reach[x] = out-neighbours of reflexive ancestors of x
        let mut reach = self.out.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for p in 0..n {
                let mut m = self.out[p];
                while m != 0 {
                    let c = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let r = reach[c] | reach[p];
                    if r != reach[c] {
                        reach[c] = r;
                        changed = true;
                    }
                }
            }
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for x in 0..n {
            let mut ys = desc[x] & !self.adj[x] & !(1u64 << x) & full;
            while ys != 0 {
                let y = ys.trailing_zeros() as usize;
                ys &= ys - 1;
                if reach[x] & desc[y] != 0 {
                    return true;
                }
            }
        }
        false
    }

    fn go(&mut self, k: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick("semi-transitive orientation search")?;
        let Some(desc) = self.descendants() else {
            return Ok(false);
        };
        if self.has_shortcut(&desc) {
            return Ok(false);
        }
        if k == self.edges.len() {
            return Ok(true);
        }
        let (a, b) = self.edges[k];
        let choices: &[(usize, usize)] = if desc[a] >> b & 1 == 1 {
            &[(a, b)]
        } else if desc[b] >> a & 1 == 1 {
            &[(b, a)]
        } else if self.symmetric {
            &[(a, b)]
        } else {
            &[(a, b), (b, a)]
        };
        let was_symmetric = self.symmetric;
        // once a free choice is fixed the reversal symmetry is used up
        self.symmetric = was_symmetric && (desc[a] >> b & 1 == 1 || desc[b] >> a & 1 == 1);
        for &(s, t) in choices {
            self.out[s] |= 1 << t;
            let ok = self.go(k + 1, budget)?;
            if ok {
                return Ok(true);
            }
            self.out[s] &= !(1 << t);
        }
        self.symmetric = was_symmetric;
        Ok(false)
    }
}

/// A transitive orientation, or `None` if `g` is not a comparability graph.
///
/// Implication classes are peeled off one at a time: each class is closed
/// under the forcing relation of the remaining edge set, a class meeting its
/// own reversal proves there is none, and the union of the chosen classes is
/// transitive. The result is re-checked before it is returned.
pub fn transitive_orientation(g: &Graph, budget: &mut Budget) -> Result<Option<Orientation>> {
    let n = g.order();
    let mut offset = vec![0usize; n + 1];
    for i in 0..n {
        offset[i + 1] = offset[i] + g.neighbor_indices(i).len();
    }
    // one slot per undirected edge, stored at its lower endpoint
    let slot = |i: usize, j: usize| -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        offset[a] + g.neighbor_indices(a).binary_search(&b).unwrap()
    };
    const FREE: u32 = u32::MAX;
    let mut class = vec![FREE; offset[n]];
    // forward[s] = edge oriented from its lower to its higher endpoint
    let mut forward = vec![false; offset[n]];
    let present = |class: &[u32], cur: u32, i: usize, j: usize| -> bool {
        g.adjacent(i, j) && {
            let c = class[slot(i, j)];
            c == FREE || c == cur
        }
    };
    let mut cur = 0u32;
    let mut queue = VecDeque::new();
    for i in 0..n {
        for &j in g.neighbor_indices(i).iter().filter(|&&j| j > i) {
            if class[slot(i, j)] != FREE {
                continue;
            }
            let s = slot(i, j);
            class[s] = cur;
            forward[s] = true;
            queue.push_back((i, j));
            while let Some((a, b)) = queue.pop_front() {
                budget.tick("transitive orientation")?;
                let mut forced: Vec<(usize, usize)> = Vec::new();
                for &b2 in g.neighbor_indices(a) {
                    if b2 != b && present(&class, cur, a, b2) && !present(&class, cur, b, b2) {
                        forced.push((a, b2));
                    }
                }
                for &a2 in g.neighbor_indices(b) {
                    if a2 != a && present(&class, cur, a2, b) && !present(&class, cur, a, a2) {
                        forced.push((a2, b));
                    }
                }
                for (x, y) in forced {
                    let s = slot(x, y);
                    let dir = x < y;
                    if class[s] == cur {
                        if forward[s] != dir {
                            return Ok(None);
                        }
                    } else {
                        class[s] = cur;
                        forward[s] = dir;
                        queue.push_back((x, y));
                    }
                }
            }
            cur += 1;
        }
    }
    let o = Orientation::from_rule(g, |i, j| forward[slot(i, j)]);
    if !o.is_transitive() {
        return Err(Error::internal("implication-class orientation is not transitive"));
    }
    Ok(Some(o))
}

/// The orientation induced by a biorder of `M(g)` for the partition `p`.
///
/// Rows are ordered by `⪯r`, columns by `⪯c`. A row that is a linear
/// interval points to its columns; a wrapping row `[d, e]` receives arcs
/// from its columns up to `e` and points to its columns from `d` on.
///
/// Accepted biorders: all-0 rows come last, and the other rows, with an
/// all-1 row read as the interval of all columns, satisfy the monotone
/// circular conditions; when all-0 rows are present every row must also be
/// a linear interval. The result is checked with [`find_violation`].
pub fn orientation_from_biorder(g: &Graph, p: &CoBipartition, b: &Biorder) -> Result<Orientation> {
    let m = crate::recognizer::biadjacency(g, p)?;
    validate_biorder(&m, b)?;
    let ends = b.arcs(&m).map_err(|v| Error::invalid(format!("{v}")))?;
    let mut col_pos = vec![0usize; m.col_count()];
    for (k, &c) in b.col_order.iter().enumerate() {
        col_pos[c] = k;
    }
    let mut row_pos = vec![0usize; m.row_count()];
    for (k, &r) in b.row_order.iter().enumerate() {
        row_pos[r] = k;
    }
    // side and position of each vertex by dense index
    let n = g.order();
    let mut side = vec![(false, 0usize); n];
    for (r, &v) in p.side_x.iter().enumerate() {
        side[g.index_of(v).unwrap()] = (false, r);
    }
    for (c, &v) in p.side_y.iter().enumerate() {
        side[g.index_of(v).unwrap()] = (true, c);
    }
    let row_to_col = |r: usize, c: usize| -> bool {
        match ends[r] {
            None => true,
            Some(arc) => {
                let (d, e, x) = (col_pos[arc.d], col_pos[arc.e], col_pos[c]);
                d <= e || x >= d
            }
        }
    };
    let o = Orientation::from_rule(g, |i, j| match (side[i], side[j]) {
        ((false, r), (false, s)) => row_pos[r] < row_pos[s],
        ((true, c), (true, d)) => col_pos[c] < col_pos[d],
        ((false, r), (true, c)) => row_to_col(r, c),
        ((true, c), (false, r)) => !row_to_col(r, c),
    });
    if let Some(v) = find_violation(&o) {
        return Err(Error::invalid(format!("the biorder induces a {v}")));
    }
    Ok(o)
}

fn validate_biorder(m: &BinaryMatrix, b: &Biorder) -> Result<()> {
    b.check_shape(m)?;
    let ends = b.ends(m).map_err(|v| Error::invalid(format!("{v}")))?;
    let n = m.col_count();
    let k = b.row_order.iter().take_while(|&&i| !m.is_zero_row(i)).count();
    if b.row_order[k..].iter().any(|&i| !m.is_zero_row(i)) {
        return Err(Error::invalid("all-0 rows must come last in the row order"));
    }
    // an all-1 row counts as the linear interval of all columns
    let seq: Vec<Ends> = b.row_order[..k]
        .iter()
        .map(|&i| ends[i].unwrap_or(Ends { d: 0, e: n - 1 }))
        .collect();
    if let Some(v) = monotone_circular_violation(&seq, n) {
        return Err(Error::invalid(format!("not a monotone circular biorder: {v}")));
    }
    if k < m.row_count() && seq.iter().any(|e| !e.linear()) {
        return Err(Error::invalid("with all-0 rows present every row must be a linear interval"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cobipartite_partition;

    fn brute_violation_free(o: &Orientation) -> bool {
        // all simple directed paths, checked against the definition directly
        let g = o.graph();
        let n = g.order();
        if !o.is_acyclic() {
            return false;
        }
        fn paths(o: &Orientation, path: &mut Vec<usize>, bad: &mut bool) {
            let g = o.graph();
            let k = path.len();
            if k >= 4 && o.arc(path[0], path[k - 1]) {
                let nonadj = (0..k).any(|i| (i + 1..k).any(|j| !g.adjacent(path[i], path[j])));
                if nonadj {
                    *bad = true;
                    return;
                }
            }
            let last = *path.last().unwrap();
            for &w in o.out_indices(last) {
                if !path.contains(&w) {
                    path.push(w);
                    paths(o, path, bad);
                    path.pop();
                    if *bad {
                        return;
                    }
                }
            }
        }
        let mut bad = false;
        for s in 0..n {
            paths(o, &mut vec![s], &mut bad);
        }
        !bad
    }

    fn rng(seed: &mut u64) -> u64 {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        *seed >> 33
    }

    fn random_graph(n: usize, seed: &mut u64) -> Graph {
        let mut e = Vec::new();
        for u in 1..=n as u32 {
            for v in u + 1..=n as u32 {
                if rng(seed).is_multiple_of(2) {
                    e.push((u, v));
                }
            }
        }
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn minimal_shortcut() {
        let g = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let o = Orientation::from_arcs(&g, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let v = find_violation(&o).unwrap();
        assert_eq!(v.kind, ViolationKind::Shortcut);
        assert_eq!(v.vertices, vec![1, 2, 3, 4]);
        assert!(v.is_valid_for(&o));
    }

    #[test]
    fn transitive_tournament_is_fine() {
        let g = Graph::complete(6);
        let o = Orientation::from_ranks(&g, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(find_violation(&o), None);
        assert!(o.is_transitive());
    }

    #[test]
    fn cycle_reported() {
        let g = Graph::cycle(3).unwrap();
        let o = Orientation::from_arcs(&g, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let v = find_violation(&o).unwrap();
        assert_eq!(v.kind, ViolationKind::Cycle);
        assert_eq!(v.vertices, vec![1, 2, 3]);
        assert!(v.is_valid_for(&o));
    }

    #[test]
    fn from_arcs_validation() {
        let g = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(Orientation::from_arcs(&g, &[(1, 2)]).is_err());
        assert!(Orientation::from_arcs(&g, &[(1, 2), (2, 1), (2, 3)]).is_err());
        assert!(Orientation::from_arcs(&g, &[(1, 3), (2, 3)]).is_err());
    }

    #[test]
    fn find_violation_matches_path_enumeration() {
        let mut seed = 7u64;
        for _ in 0..400 {
            let n = 3 + rng(&mut seed) as usize % 5;
            let g = random_graph(n, &mut seed);
            let o = Orientation::from_rule(&g, |_, _| rng(&mut seed).is_multiple_of(2));
            let v = find_violation(&o);
            assert_eq!(v.is_none(), brute_violation_free(&o));
            if let Some(v) = v {
                assert!(v.is_valid_for(&o), "{v}");
            }
        }
    }

    #[test]
    fn search_matches_exhaustive_orientations() {
        let mut seed = 11u64;
        let mut checked = 0;
        while checked < 120 {
            let n = 4 + rng(&mut seed) as usize % 4;
            let g = random_graph(n, &mut seed);
            let edges = g.edges();
            if edges.len() > 12 {
                continue;
            }
            checked += 1;
            let mut any = false;
            for mask in 0u32..1 << edges.len() {
                let arcs: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(u, v))| if mask >> k & 1 == 1 { (v, u) } else { (u, v) })
                    .collect();
                if find_violation(&Orientation::from_arcs(&g, &arcs).unwrap()).is_none() {
                    any = true;
                    break;
                }
            }
            let found = search_semi_transitive(&g, &mut Budget::default()).unwrap();
            assert_eq!(found.is_some(), any);
            if let Some(o) = found {
                assert_eq!(find_violation(&o), None);
            }
        }
    }

    #[test]
    fn bipartite_and_c6bar_are_semi_transitive() {
        let c6 = Graph::cycle(6).unwrap();
        let o = search_semi_transitive(&c6, &mut Budget::default()).unwrap().unwrap();
        assert_eq!(find_violation(&o), None);
        let c6bar = c6.complement();
        let o = search_semi_transitive(&c6bar, &mut Budget::default()).unwrap().unwrap();
        assert_eq!(find_violation(&o), None);
    }

    #[test]
    fn wheel_w5_is_not_semi_transitive() {
        // the 5-wheel is a standard non-word-representable graph
        let w5 = crate::graph::generate_family(crate::graph::FamilyId::W5).unwrap();
        assert_eq!(search_semi_transitive(&w5, &mut Budget::default()).unwrap(), None);
    }

    #[test]
    fn reversal_and_restriction_preserve_semi_transitivity() {
        let c6bar = Graph::cycle(6).unwrap().complement();
        let o = search_semi_transitive(&c6bar, &mut Budget::default()).unwrap().unwrap();
        assert_eq!(find_violation(&o.reversed()), None);
        assert_eq!(find_violation(&o.restrict(&[1, 2, 4, 5]).unwrap()), None);
    }

    #[test]
    fn transitive_orientation_matches_brute_force() {
        let mut seed = 5u64;
        for _ in 0..300 {
            let n = 2 + rng(&mut seed) as usize % 6;
            let g = random_graph(n, &mut seed);
            let edges = g.edges();
            let mut any = false;
            for mask in 0u32..1 << edges.len() {
                let arcs: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(u, v))| if mask >> k & 1 == 1 { (v, u) } else { (u, v) })
                    .collect();
                if Orientation::from_arcs(&g, &arcs).unwrap().is_transitive() {
                    any = true;
                    break;
                }
            }
            let got = transitive_orientation(&g, &mut Budget::default()).unwrap();
            assert_eq!(got.is_some(), any, "{:?}", g.edges());
        }
        // C5 is not a comparability graph, C6 is
        assert!(transitive_orientation(&Graph::cycle(5).unwrap(), &mut Budget::default())
            .unwrap()
            .is_none());
        assert!(transitive_orientation(&Graph::cycle(6).unwrap(), &mut Budget::default())
            .unwrap()
            .is_some());
    }

    fn two_by_two() -> (Graph, CoBipartition) {
        // rows 1,2 columns 3,4; M = [[1,1],[0,1]]
        let g = Graph::new(4, &[(1, 2), (3, 4), (1, 3), (1, 4), (2, 4)]).unwrap();
        let p = CoBipartition {
            side_x: vec![1, 2],
            side_y: vec![3, 4],
        };
        (g, p)
    }

    #[test]
    fn biorder_rules_on_small_matrix() {
        let (g, p) = two_by_two();
        let b = Biorder {
            row_order: vec![0, 1],
            col_order: vec![0, 1],
        };
        let o = orientation_from_biorder(&g, &p, &b).unwrap();
        assert_eq!(o.arcs(), vec![(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn biorder_case_with_zero_row_and_column() {
        // [[1,1,0],[0,1,0],[0,0,0]]: rows 1..3, columns 4..6
        let g = Graph::new(
            6,
            &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (1, 4), (1, 5), (2, 5)],
        )
        .unwrap();
        let p = cobipartite_partition(&g).unwrap();
        assert_eq!(p.side_x, vec![1, 2, 3]);
        let b = Biorder {
            row_order: vec![0, 1, 2],
            col_order: vec![0, 1, 2],
        };
        let o = orientation_from_biorder(&g, &p, &b).unwrap();
        // the isolated-in-M vertices are sinks of their cliques
        assert!(o.has_arc(1, 3) && o.has_arc(2, 3));
        assert!(o.has_arc(4, 6) && o.has_arc(5, 6));
        let bad = Biorder {
            row_order: vec![2, 0, 1],
            col_order: vec![0, 1, 2],
        };
        assert!(orientation_from_biorder(&g, &p, &bad).is_err());
    }

    #[test]
    fn invalid_biorder_is_rejected() {
        let (g, p) = two_by_two();
        let b = Biorder {
            row_order: vec![0, 1],
            col_order: vec![0, 1, 2],
        };
        assert!(orientation_from_biorder(&g, &p, &b).is_err());
    }
}
