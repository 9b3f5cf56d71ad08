//! Words over vertex alphabets.
//!
//! Two letters alternate in a word when, after deleting every other letter,
//! what remains is `xyxy...` or `yxyx...`. A word represents a graph when its
//! alternating pairs are exactly the edges. A word is `k`-uniform when every
//! letter occurs `k` times; 2-uniform representants are the chord diagrams
//! of circle graphs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::orientation::transitive_orientation;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Word {
    pub letters: Vec<Vertex>,
}

impl Word {
    pub fn new(letters: Vec<Vertex>) -> Word {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Distinct letters, sorted.
    pub fn alphabet(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.letters.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn occurrences(&self, x: Vertex) -> usize {
        self.letters.iter().filter(|&&l| l == x).count()
    }

    /// `Some(k)` if every letter occurs exactly `k` times.
    pub fn uniformity(&self) -> Option<usize> {
        let alpha = self.alphabet();
        let k = self.occurrences(*alpha.first()?);
        alpha.iter().all(|&x| self.occurrences(x) == k).then_some(k)
    }

    pub fn reversed(&self) -> Word {
        Word::new(self.letters.iter().rev().copied().collect())
    }

    /// The cyclic shift `vu` of `w = uv` with `|u| = r`.
    pub fn rotated(&self, r: usize) -> Word {
        let mut l = self.letters.clone();
        let len = l.len();
        if len > 0 {
            l.rotate_left(r % len);
        }
        Word::new(l)
    }

    /// Least word under rotation and reversal.
    pub fn dihedral_min(&self) -> Word {
        let rev = self.reversed();
        (0..self.len().max(1))
            .flat_map(|r| [self.rotated(r), rev.rotated(r)])
            .min()
            .unwrap_or_default()
    }
}

impl fmt::Display for Word {
    /// Whitespace-separated letters on one line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn alternates(w: &Word, x: Vertex, y: Vertex) -> Result<bool> {
    if x == y {
        return Err(Error::invalid(format!("alternation needs two distinct letters, got {x} twice")));
    }
    for l in [x, y] {
        if !w.letters.contains(&l) {
            return Err(Error::invalid(format!("letter {l} does not occur in the word")));
        }
    }
    let mut last = None;
    for &l in w.letters.iter().filter(|&&l| l == x || l == y) {
        if last == Some(l) {
            return Ok(false);
        }
        last = Some(l);
    }
    Ok(true)
}

pub fn restriction(w: &Word, keep: &[Vertex]) -> Word {
    Word::new(w.letters.iter().copied().filter(|l| keep.contains(l)).collect())
}

/// True iff the alternating pairs of `w` are exactly the edges of `g`.
pub fn represents(w: &Word, g: &Graph) -> Result<bool> {
    let alpha = w.alphabet();
    if alpha != g.vertices() {
        let missing: Vec<_> = g.vertices().iter().filter(|v| alpha.binary_search(v).is_err()).collect();
        let extra: Vec<_> = alpha.iter().filter(|v| !g.contains(**v)).collect();
        return Err(Error::invalid(format!(
            "alphabet mismatch: missing letters {missing:?}, extra letters {extra:?}"
        )));
    }
    let n = g.order();
    let idx: Vec<usize> = w.letters.iter().map(|&l| g.index_of(l).unwrap()).collect();
    // alternation of every pair from one pass: last[i][j] remembers which of
    // the two letters was seen last
    let mut last = vec![usize::MAX; n];
    let mut broken = vec![false; n * n];
    let mut clock = 0usize;
    for &a in &idx {
        clock += 1;
        if last[a] != usize::MAX {
            for y in 0..n {
                // y absent since the previous a: the restriction has "aa"
                if y != a && (last[y] == usize::MAX || last[y] < last[a]) {
                    broken[a * n + y] = true;
                    broken[y * n + a] = true;
                }
            }
        }
        last[a] = clock;
    }
    Ok((0..n).all(|i| (i + 1..n).all(|j| broken[i * n + j] != g.adjacent(i, j))))
}

/// Default vertex cap of the representant searches.
pub const DEFAULT_WORD_CAP: usize = 10;

/// Least `k`-uniform representant for the least `k <= k_max` that has one.
///
/// Every rotation of a uniform representant is again one, so the search
/// starts with the least vertex; the letters are then tried in increasing
/// order, which makes the result the lexicographically least representant
/// of that uniformity. An appended letter `a` creates the factor `aa` in the
/// restriction to `{a, y}` for every `y` not seen since the previous `a`:
/// fatal when `ay` is an edge, and otherwise recorded, since every non-edge
/// must fail to alternate by the end.
pub fn search_representant(g: &Graph, k_max: usize, budget: &mut Budget) -> Result<Option<Word>> {
    search_representant_with(g, k_max, DEFAULT_WORD_CAP, budget)
}

pub fn search_representant_with(
    g: &Graph,
    k_max: usize,
    cap: usize,
    budget: &mut Budget,
) -> Result<Option<Word>> {
    check_search_args(g, k_max, cap)?;
    for k in 1..=k_max {
        let mut found = None;
        UniformSearch::new(g, k, true).run(budget, &mut |w| {
            found = Some(w);
            false
        })?;
        if let Some(w) = found {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Every `k`-uniform representant of `g`, in lexicographic order.
pub fn enumerate_representants(g: &Graph, k: usize, budget: &mut Budget) -> Result<Vec<Word>> {
    check_search_args(g, k, 8)?;
    let mut all = Vec::new();
    UniformSearch::new(g, k, false).run(budget, &mut |w| {
        all.push(w);
        true
    })?;
    Ok(all)
}

fn check_search_args(g: &Graph, k: usize, cap: usize) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::invalid("a representant needs at least one vertex"));
    }
    if !(1..=3).contains(&k) {
        return Err(Error::invalid(format!("uniformity bound must be in 1..=3, got {k}")));
    }
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "representant search",
            size: g.order(),
            cap,
        });
    }
    Ok(())
}

/// Canonical representatives of `words` modulo rotation, reversal and the
/// given vertex maps (each a permutation listing the images of
/// `g.vertices()` in order; pass none to skip relabelling).
pub fn representant_classes(g: &Graph, words: &[Word], maps: &[Vec<Vertex>]) -> Vec<Word> {
    let canon = |w: &Word| -> Word {
        let mut best = w.dihedral_min();
        for m in maps {
            let relabel = |l: Vertex| m[g.index_of(l).unwrap()];
            let r = Word::new(w.letters.iter().map(|&l| relabel(l)).collect()).dihedral_min();
            if r < best {
                best = r;
            }
        }
        best
    };
    let set: BTreeSet<Word> = words.iter().map(canon).collect();
    set.into_iter().collect()
}

struct UniformSearch<'a> {
    g: &'a Graph,
    n: usize,
    k: usize,
    fix_first: bool,
    word: Vec<usize>,
    count: Vec<usize>,
    last: Vec<usize>,
    /// Non-edges already shown not to alternate, with undo counters.
    broken: Vec<u32>,
}

impl<'a> UniformSearch<'a> {
    fn new(g: &'a Graph, k: usize, fix_first: bool) -> Self {
        let n = g.order();
        UniformSearch {
            g,
            n,
            k,
            fix_first,
            word: Vec::with_capacity(n * k),
            count: vec![0; n],
            last: vec![usize::MAX; n],
            broken: vec![0; n * n],
        }
    }

    fn run(mut self, budget: &mut Budget, emit: &mut dyn FnMut(Word) -> bool) -> Result<()> {
        self.go(budget, emit).map(|_| ())
    }

    /// Returns false once `emit` asks to stop.
    fn go(&mut self, budget: &mut Budget, emit: &mut dyn FnMut(Word) -> bool) -> Result<bool> {
        budget.tick("representant search")?;
        let (n, k) = (self.n, self.k);
        if self.word.len() == n * k {
            let all = (0..n).all(|i| (i + 1..n).all(|j| self.g.adjacent(i, j) || self.broken[i * n + j] > 0));
            if all {
                let w = Word::new(self.word.iter().map(|&i| self.g.vertex(i)).collect());
                return Ok(emit(w));
            }
            return Ok(true);
        }
        let letters = if self.fix_first && self.word.is_empty() { 0..1 } else { 0..n };
        for a in letters {
            if self.count[a] == k {
                continue;
            }
            let pos = self.word.len();
            let mut marked: Vec<usize> = Vec::new();
            let mut ok = true;
            if self.last[a] != usize::MAX {
                for y in 0..n {
                    if y == a || (self.last[y] != usize::MAX && self.last[y] > self.last[a]) {
                        continue;
                    }
                    if self.g.adjacent(a, y) {
                        ok = false;
                        break;
                    }
                    marked.push(y);
                }
            }
            if ok {
                let prev = self.last[a];
                for &y in &marked {
                    self.broken[a * n + y] += 1;
                    self.broken[y * n + a] += 1;
                }
                self.word.push(a);
                self.count[a] += 1;
                self.last[a] = pos;
                let feasible = self.count[a] < k || self.finished_pairs_ok(a);
                if feasible && !self.go(budget, emit)? {
                    return Ok(false);
                }
                self.last[a] = prev;
                self.count[a] -= 1;
                self.word.pop();
                for &y in &marked {
                    self.broken[a * n + y] -= 1;
                    self.broken[y * n + a] -= 1;
                }
            }
        }
        Ok(true)
    }

    /// `a` has just been used up: non-edges to letters that are also used
    /// up can no longer become broken.
    fn finished_pairs_ok(&self, a: usize) -> bool {
        let n = self.n;
        (0..n).all(|y| {
            y == a || self.count[y] < self.k || self.g.adjacent(a, y) || self.broken[a * n + y] > 0
        })
    }
}

/// Decides whether some concatenation of permutations of the vertices
/// represents `g`. Such words exist exactly for comparability graphs: the
/// letters of a concatenation of permutations alternate iff they appear in
/// the same relative order in every permutation.
pub fn is_permutationally_representable(g: &Graph, budget: &mut Budget) -> Result<bool> {
    Ok(permutational_representant(g, budget)?.is_some())
}

/// A concatenation of at most `|V(g)|` permutations representing `g`, or
/// `None` if there is none.
///
/// From a transitive orientation, read as a partial order, and a fixed
/// linear extension `L`: for each vertex `x` the permutation lists the
/// vertices not above `x`, then the up-set of `x`, both in `L` order. Each
/// is a linear extension, and `x` precedes every vertex incomparable to it
/// in its own permutation.
pub fn permutational_representant(g: &Graph, budget: &mut Budget) -> Result<Option<Word>> {
    let n = g.order();
    if n == 0 {
        return Ok(Some(Word::default()));
    }
    let Some(o) = transitive_orientation(g, budget)? else {
        return Ok(None);
    };
    // linear extension: sort by number of predecessors (transitive, so this
    // respects every arc)
    let mut indeg = vec![0usize; n];
    for i in 0..n {
        for &j in o.out_indices(i) {
            indeg[j] += 1;
        }
    }
    let mut ext: Vec<usize> = (0..n).collect();
    ext.sort_by_key(|&i| (indeg[i], i));
    let mut letters = Vec::with_capacity(n * n);
    for x in 0..n {
        let above = |y: usize| y == x || o.out_indices(x).binary_search(&y).is_ok();
        letters.extend(ext.iter().filter(|&&y| !above(y)).map(|&y| g.vertex(y)));
        letters.extend(ext.iter().filter(|&&y| above(y)).map(|&y| g.vertex(y)));
    }
    let w = Word::new(letters);
    if !represents(&w, g)? {
        return Err(Error::internal("permutation concatenation does not represent the graph"));
    }
    Ok(Some(w))
}

/// Parses whitespace-separated vertex ids.
pub fn parse_word(s: &str) -> Result<Word> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<Vertex>()
                .map_err(|_| Error::invalid(format!("bad letter {t:?} in word")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Word::new)
}

impl core::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphisms, generate_family, FamilyId};

    fn w(s: &str) -> Word {
        Word::new(s.bytes().map(|b| (b - b'0') as Vertex).collect())
    }

    fn h() -> Graph {
        // C̄6[N[1]] on {1,3,4,5}
        let c6bar = generate_family(FamilyId::CoC2k(3)).unwrap();
        c6bar.induced_subgraph(&[1, 3, 4, 5]).unwrap()
    }

    /// Definition-level check, pair by pair.
    fn brute_represents(w: &Word, g: &Graph) -> bool {
        let vs = g.vertices();
        vs.iter().enumerate().all(|(i, &x)| {
            vs[i + 1..].iter().all(|&y| alternates(w, x, y).unwrap() == g.has_edge(x, y))
        })
    }

    #[test]
    fn alternation_basics() {
        assert!(alternates(&w("1212"), 1, 2).unwrap());
        assert!(!alternates(&w("112"), 1, 2).unwrap());
        assert!(alternates(&w("12"), 1, 2).unwrap());
        assert!(alternates(&w("12"), 2, 1).unwrap());
        assert!(alternates(&w("12"), 1, 3).is_err());
        assert!(alternates(&w("12"), 1, 1).is_err());
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(restriction(&w("35423214"), &[1, 2]), w("221"));
        assert_eq!(restriction(&w("3542"), &[2, 3, 4, 5]), w("3542"));
        assert_eq!(restriction(&w("3542"), &[]), Word::default());
    }

    #[test]
    fn represents_examples() {
        assert!(represents(&w("35414351"), &h()).unwrap());
        let k2 = Graph::complete(2);
        assert!(represents(&w("1212"), &k2).unwrap());
        assert!(!represents(&w("1122"), &k2).unwrap());
        let err = represents(&w("13"), &k2).unwrap_err();
        assert!(format!("{err}").contains("missing letters [2]"));
    }

    #[test]
    fn represents_matches_pairwise_definition() {
        let mut seed = 3u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            (seed >> 33) as usize
        };
        for _ in 0..300 {
            let n = 2 + next() % 4;
            let len = n + next() % 8;
            let mut letters: Vec<Vertex> = (1..=n as Vertex).collect();
            while letters.len() < len {
                letters.push(1 + (next() % n) as Vertex);
            }
            for i in (1..letters.len()).rev() {
                letters.swap(i, next() % (i + 1));
            }
            let word = Word::new(letters);
            let mut edges = Vec::new();
            for x in 1..=n as Vertex {
                for y in x + 1..=n as Vertex {
                    if next() % 2 == 0 {
                        edges.push((x, y));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            assert_eq!(represents(&word, &g).unwrap(), brute_represents(&word, &g));
        }
    }

    #[test]
    fn complete_graph_needs_one_copy() {
        let w = search_representant(&Graph::complete(3), 3, &mut Budget::default()).unwrap().unwrap();
        assert_eq!(w, Word::new(vec![1, 2, 3]));
    }

    #[test]
    fn circle_fixture_word() {
        let h = h();
        let found = search_representant(&h, 2, &mut Budget::default()).unwrap().unwrap();
        assert!(represents(&found, &h).unwrap());
        let all = enumerate_representants(&h, 2, &mut Budget::default()).unwrap();
        let classes = representant_classes(&h, &all, &[]);
        assert_eq!(classes, vec![w("35414351").dihedral_min()]);
        assert!(classes.contains(&found.dihedral_min()));
        let autos = automorphisms(&h, &mut Budget::default()).unwrap();
        assert_eq!(representant_classes(&h, &all, &autos).len(), 1);
    }

    #[test]
    fn c6bar_is_not_a_circle_graph() {
        let g = generate_family(FamilyId::CoC2k(3)).unwrap();
        assert_eq!(search_representant(&g, 2, &mut Budget::default()).unwrap(), None);
    }

    #[test]
    fn search_agrees_with_enumeration_on_small_graphs() {
        for mask in 0u32..1 << 6 {
            let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            let g = Graph::new(4, &edges).unwrap();
            for k in 1..=2 {
                let all = enumerate_representants(&g, k, &mut Budget::default()).unwrap();
                assert!(all.iter().all(|x| brute_represents(x, &g)));
                let first = search_representant_with(&g, k, 10, &mut Budget::default()).unwrap();
                let least_k = (1..=k)
                    .find_map(|j| enumerate_representants(&g, j, &mut Budget::default()).unwrap().into_iter().next());
                assert_eq!(first, least_k);
            }
        }
    }

    #[test]
    fn budget_is_not_a_negative_answer() {
        let g = generate_family(FamilyId::CoC2k(3)).unwrap();
        let err = search_representant(&g, 2, &mut Budget::new(10)).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn permutational_examples() {
        let mut b = Budget::default();
        assert!(is_permutationally_representable(&Graph::complete(3), &mut b).unwrap());
        let w = permutational_representant(&Graph::empty(3), &mut b).unwrap().unwrap();
        assert!(represents(&w, &Graph::empty(3)).unwrap());
        let c6bar = generate_family(FamilyId::CoC2k(3)).unwrap();
        assert!(!is_permutationally_representable(&c6bar, &mut b).unwrap());
    }

    /// Oracle: concatenations of permutations represent `g` iff some set of
    /// linear orders keeps every edge in a fixed relative order and puts
    /// every non-edge in both orders; try all sets of up to three orders.
    fn brute_permutational(g: &Graph) -> bool {
        let n = g.order();
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            perms = perms
                .iter()
                .flat_map(|p| (0..n).filter(|v| !p.contains(v)).map(move |v| [&p[..], &[v]].concat()))
                .collect();
        }
        let works = |set: &[&Vec<usize>]| -> bool {
            let pos: Vec<Vec<usize>> = set
                .iter()
                .map(|p| {
                    let mut q = vec![0; n];
                    for (k, &v) in p.iter().enumerate() {
                        q[v] = k;
                    }
                    q
                })
                .collect();
            (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    let before = pos.iter().filter(|q| q[i] < q[j]).count();
                    let same = before == 0 || before == pos.len();
                    same == g.adjacent(i, j)
                })
            })
        };
        for a in &perms {
            if works(&[a]) {
                return true;
            }
            for b in &perms {
                if works(&[a, b]) {
                    return true;
                }
                for c in &perms {
                    if works(&[a, b, c]) {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn permutational_matches_brute_force_on_four_vertices() {
        // four elements: every poset has dimension at most two, so up to
        // three orders is plenty
        let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        for mask in 0u32..1 << 6 {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            let g = Graph::new(4, &edges).unwrap();
            let got = permutational_representant(&g, &mut Budget::default()).unwrap();
            assert_eq!(got.is_some(), brute_permutational(&g));
            if let Some(w) = got {
                assert!(represents(&w, &g).unwrap());
                assert_eq!(w.len(), 16);
            }
        }
    }
}
