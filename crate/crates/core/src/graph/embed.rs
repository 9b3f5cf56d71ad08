use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, Vertex};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Largest pattern accepted by [`find_induced`].
pub const DEFAULT_PATTERN_CAP: usize = 16;

/// Lexicographically first induced embedding of `pattern` into `host`.
///
/// Entry `i` of the result is the image of the `i`-th pattern vertex (in
/// increasing identifier order). Embeddings compare by their image sequence.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Result<Option<Vec<Vertex>>> {
    find_induced_with(host, pattern, DEFAULT_PATTERN_CAP, &mut Budget::default())
}

pub fn find_induced_with(
    host: &Graph,
    pattern: &Graph,
    cap: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<Vertex>>> {
    if pattern.order() > cap {
        return Err(Error::CapExceeded {
            what: "induced-subgraph pattern",
            size: pattern.order(),
            cap,
        });
    }
    let mut found = None;
    Embedder::new(host, pattern).run(budget, &mut |img| {
        found = Some(img.iter().map(|&i| host.vertex(i)).collect());
        false
    })?;
    Ok(found)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    Ok(find_induced_with(a, b, usize::MAX, &mut Budget::default())?.is_some())
}

/// All automorphisms, each as the image sequence of `g.vertices()`.
pub fn automorphisms(g: &Graph, budget: &mut Budget) -> Result<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    Embedder::new(g, g).run(budget, &mut |img| {
        out.push(img.iter().map(|&i| g.vertex(i)).collect());
        true
    })?;
    Ok(out)
}

struct Embedder<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    /// Pattern-side non-degree, compared with the host's to prune.
    pat_non: Vec<usize>,
}

impl<'a> Embedder<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        let p = pattern.order();
        let pat_non = (0..p)
            .map(|i| p - 1 - pattern.neighbor_indices(i).len())
            .collect();
        Embedder {
            host,
            pattern,
            pat_non,
        }
    }

    /// Calls `visit` with every embedding in lexicographic order until it
    /// returns false.
    fn run(&self, budget: &mut Budget, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<()> {
        let (n, p) = (self.host.order(), self.pattern.order());
        if p > n {
            return Ok(());
        }
        let mut img = Vec::with_capacity(p);
        let mut used = vec![false; n];
        self.extend(&mut img, &mut used, budget, visit).map(|_| ())
    }

    fn extend(
        &self,
        img: &mut Vec<usize>,
        used: &mut [bool],
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        let i = img.len();
        if i == self.pattern.order() {
            return Ok(visit(img));
        }
        budget.tick("induced-subgraph search")?;
        let n = self.host.order();
        let deg = self.pattern.neighbor_indices(i).len();
        for h in 0..n {
            if used[h] {
                continue;
            }
            let hdeg = self.host.neighbor_indices(h).len();
            if hdeg < deg || n - 1 - hdeg < self.pat_non[i] {
                continue;
            }
            let consistent = img
                .iter()
                .enumerate()
                .all(|(j, &hj)| self.pattern.adjacent(i, j) == self.host.adjacent(h, hj));
            if !consistent {
                continue;
            }
            used[h] = true;
            img.push(h);
            let more = self.extend(img, used, budget, visit)?;
            img.pop();
            used[h] = false;
            if !more {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive oracle: every injective map, checked pairwise.
    fn brute_embeds(host: &Graph, pattern: &Graph) -> bool {
        fn go(host: &Graph, pattern: &Graph, img: &mut Vec<usize>) -> bool {
            let i = img.len();
            if i == pattern.order() {
                return true;
            }
            for h in 0..host.order() {
                if img.contains(&h) {
                    continue;
                }
                if img
                    .iter()
                    .enumerate()
                    .all(|(j, &hj)| pattern.adjacent(i, j) == host.adjacent(h, hj))
                {
                    img.push(h);
                    if go(host, pattern, img) {
                        return true;
                    }
                    img.pop();
                }
            }
            false
        }
        go(host, pattern, &mut Vec::new())
    }

    #[test]
    fn first_triangle_of_c6bar() {
        let g = Graph::cycle(6).unwrap().complement();
        assert_eq!(find_induced(&g, &Graph::complete(3)).unwrap(), Some(vec![1, 3, 5]));
    }

    #[test]
    fn c4_is_triangle_free() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(find_induced(&c4, &Graph::complete(3)).unwrap(), None);
    }

    #[test]
    fn non_adjacency_is_preserved() {
        // K3 contains P3 as a subgraph but not as an induced subgraph
        let p3 = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(find_induced(&Graph::complete(3), &p3).unwrap(), None);
        assert!(brute_embeds(&Graph::cycle(5).unwrap(), &p3));
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::empty(17);
        let err = find_induced(&big, &big).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn cycle_automorphisms() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(automorphisms(&c5, &mut Budget::default()).unwrap().len(), 10);
        assert!(is_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        // deterministic pseudo-random graphs from an LCG
        let mut s: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (s >> 33) as u32
        };
        for _ in 0..300 {
            let n = 4 + next() as usize % 5;
            let p = 2 + next() as usize % 3;
            let rand_graph = |n: usize, next: &mut dyn FnMut() -> u32| {
                let mut e = Vec::new();
                for u in 1..=n as u32 {
                    for v in u + 1..=n as u32 {
                        if next().is_multiple_of(2) {
                            e.push((u, v));
                        }
                    }
                }
                Graph::new(n, &e).unwrap()
            };
            let host = rand_graph(n, &mut next);
            let pat = rand_graph(p, &mut next);
            let got = find_induced(&host, &pat).unwrap();
            assert_eq!(got.is_some(), brute_embeds(&host, &pat));
            if let Some(img) = got {
                let sub = host.induced_subgraph(&img).unwrap();
                assert!(is_isomorphic(&sub, &pat).unwrap());
            }
        }
    }
}
