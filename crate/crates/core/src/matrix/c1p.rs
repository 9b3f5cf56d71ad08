//! Consecutive-ones testing by overlap components and partition refinement.
//!
//! Two rows overlap when they intersect and neither contains the other. Within
//! a connected component of the overlap graph the left-to-right order of the
//! membership classes of its columns is forced up to reversal, so it can be
//! grown row by row. Component unions form a laminar family, and a smaller
//! component always sits inside a single class of any larger one it meets,
//! which lets the per-component orders be nested into one column order.

use alloc::vec;
use alloc::vec::Vec;

use super::BinaryMatrix;

const NONE: usize = usize::MAX;

/// A column order under which every row is contiguous, if one exists.
pub fn has_consecutive_ones(m: &BinaryMatrix) -> Option<Vec<usize>> {
    let n = m.col_count();
    let mut rows: Vec<&[usize]> = m.rows().iter().map(Vec::as_slice).filter(|r| r.len() > 1).collect();
    rows.sort_unstable();
    rows.dedup();

    let comps = overlap_components(&rows, n);
    let mut refiner = Refiner::new(n);
    let mut laid_out = Vec::with_capacity(comps.len());
    for comp in &comps {
        laid_out.push(refiner.order_component(&rows, comp)?);
    }
    let order = nest(n, &comps, &laid_out)?;
    debug_assert!(is_c1p_order(m, &order));
    Some(order)
}

/// True iff every row is contiguous under `order`.
pub(crate) fn is_c1p_order(m: &BinaryMatrix, order: &[usize]) -> bool {
    let mut pos = vec![0usize; m.col_count()];
    for (k, &c) in order.iter().enumerate() {
        pos[c] = k;
    }
    m.rows().iter().all(|r| {
        if r.is_empty() {
            return true;
        }
        let (lo, hi) = r
            .iter()
            .fold((usize::MAX, 0), |(lo, hi), &c| (lo.min(pos[c]), hi.max(pos[c])));
        hi - lo + 1 == r.len()
    })
}

struct Component {
    /// Row indices in BFS order of the overlap graph.
    rows: Vec<usize>,
    union: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn overlap_components(rows: &[&[usize]], n: usize) -> Vec<Component> {
    let r = rows.len();
    let mut by_col: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (i, row) in rows.iter().enumerate() {
        for &c in row.iter() {
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

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); r];
    let mut parent: Vec<usize> = (0..r).collect();
    let mut k = 0;
    while k < pairs.len() {
        let p = pairs[k];
        let mut shared = 0;
        while k < pairs.len() && pairs[k] == p {
            shared += 1;
            k += 1;
        }
        let (i, j) = (p.0 as usize, p.1 as usize);
        if shared < rows[i].len().min(rows[j].len()) {
            adj[i].push(j);
            adj[j].push(i);
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a.max(b)] = a.min(b);
        }
    }

    let mut comps: Vec<Component> = Vec::new();
    let mut comp_of = vec![NONE; r];
    let mut seen = vec![false; r];
    let mut in_union = vec![false; n];
    for s in 0..r {
        if seen[s] {
            continue;
        }
        let root = find(&mut parent, s);
        debug_assert_eq!(root, s);
        let mut order = vec![s];
        seen[s] = true;
        let mut head = 0;
        while head < order.len() {
            let i = order[head];
            head += 1;
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    order.push(j);
                }
            }
        }
        let mut union = Vec::new();
        for &i in &order {
            comp_of[i] = comps.len();
            for &c in rows[i] {
                if !in_union[c] {
                    in_union[c] = true;
                    union.push(c);
                }
            }
        }
        for &c in &union {
            in_union[c] = false;
        }
        comps.push(Component { rows: order, union });
    }
    // larger unions first; on equal unions the single-row component is the
    // coarser one and must come first
    comps.sort_by(|a, b| {
        b.union
            .len()
            .cmp(&a.union.len())
            .then(a.rows.len().cmp(&b.rows.len()))
            .then(a.rows[0].cmp(&b.rows[0]))
    });
    comps
}

struct Block {
    members: Vec<usize>,
    prev: usize,
    next: usize,
}

struct Refiner {
    blocks: Vec<Block>,
    block_of: Vec<usize>,
    slot: Vec<usize>,
    count: Vec<usize>,
}

impl Refiner {
    fn new(n: usize) -> Self {
        Refiner {
            blocks: Vec::new(),
            block_of: vec![NONE; n],
            slot: vec![0; n],
            count: Vec::new(),
        }
    }

    fn new_block(&mut self) -> usize {
        self.blocks.push(Block {
            members: Vec::new(),
            prev: NONE,
            next: NONE,
        });
        self.count.push(0);
        self.blocks.len() - 1
    }

    fn add(&mut self, b: usize, c: usize) {
        self.block_of[c] = b;
        self.slot[c] = self.blocks[b].members.len();
        self.blocks[b].members.push(c);
    }

    fn remove(&mut self, c: usize) {
        let b = self.block_of[c];
        let s = self.slot[c];
        let members = &mut self.blocks[b].members;
        members.swap_remove(s);
        if s < members.len() {
            let moved = members[s];
            self.slot[moved] = s;
        }
        self.block_of[c] = NONE;
    }

    fn link_after(&mut self, a: usize, b: usize) {
        let next = self.blocks[a].next;
        self.blocks[b].prev = a;
        self.blocks[b].next = next;
        self.blocks[a].next = b;
        if next != NONE {
            self.blocks[next].prev = b;
        }
    }

    fn link_before(&mut self, a: usize, b: usize) {
        let prev = self.blocks[a].prev;
        self.blocks[b].next = a;
        self.blocks[b].prev = prev;
        self.blocks[a].prev = b;
        if prev != NONE {
            self.blocks[prev].next = b;
        }
    }

    /// Moves `cols` (all in block `b`) into a fresh block placed on the
    /// given side of `b`.
    fn split_off(&mut self, b: usize, cols: &[usize], after: bool) -> usize {
        let nb = self.new_block();
        for &c in cols {
            self.remove(c);
            self.add(nb, c);
        }
        if after {
            self.link_after(b, nb);
        } else {
            self.link_before(b, nb);
        }
        nb
    }

    /// Ordered blocks (as column lists) of one overlap component.
    fn order_component(&mut self, rows: &[&[usize]], comp: &Component) -> Option<Vec<Vec<usize>>> {
        let first = self.new_block();
        for &c in rows[comp.rows[0]] {
            self.add(first, c);
        }
        let (mut head, mut tail) = (first, first);
        for &ri in &comp.rows[1..] {
            let s = rows[ri];
            let mut touched: Vec<usize> = Vec::new();
            let mut fresh: Vec<usize> = Vec::new();
            for &c in s {
                let b = self.block_of[c];
                if b == NONE {
                    fresh.push(c);
                    continue;
                }
                if self.count[b] == 0 {
                    touched.push(b);
                }
                self.count[b] += 1;
            }
            let result = self.place_row(s, &touched, &fresh, &mut head, &mut tail);
            for &b in &touched {
                self.count[b] = 0;
            }
            result?;
        }
        let mut out = Vec::new();
        let mut b = head;
        while b != NONE {
            out.push(core::mem::take(&mut self.blocks[b].members));
            b = self.blocks[b].next;
        }
        for blk in &out {
            for &c in blk {
                self.block_of[c] = NONE;
            }
        }
        Some(out)
    }

    fn place_row(
        &mut self,
        s: &[usize],
        touched: &[usize],
        fresh: &[usize],
        head: &mut usize,
        tail: &mut usize,
    ) -> Option<()> {
        // the touched blocks must form one run
        let is_touched = |me: &Self, b: usize| b != NONE && me.count[b] > 0;
        let mut a = touched[0];
        let mut len = 1;
        while is_touched(self, self.blocks[a].prev) {
            a = self.blocks[a].prev;
            len += 1;
        }
        let mut z = touched[0];
        while is_touched(self, self.blocks[z].next) {
            z = self.blocks[z].next;
            len += 1;
        }
        if len != touched.len() {
            return None;
        }
        let full = |me: &Self, b: usize| me.count[b] == me.blocks[b].members.len();
        let mut x = a;
        while x != z {
            if x != a && !full(self, x) {
                return None;
            }
            x = self.blocks[x].next;
        }
        let inside = |me: &Self, b: usize| -> Vec<usize> {
            s.iter().copied().filter(|&c| me.block_of[c] == b).collect()
        };

        if fresh.is_empty() {
            if a == z {
                return None;
            }
            if !full(self, a) {
                let part = inside(self, a);
                self.split_off(a, &part, true);
            }
            if !full(self, z) {
                let part = inside(self, z);
                self.split_off(z, &part, false);
            }
            return Some(());
        }

        // new columns extend the order at one end
        let at_tail = z == *tail && (a == z || full(self, z));
        let at_head = a == *head && (a == z || full(self, a));
        if at_tail {
            if !full(self, a) {
                let part = inside(self, a);
                let nb = self.split_off(a, &part, true);
                if a == *tail {
                    *tail = nb;
                }
            }
            let nb = self.new_block();
            for &c in fresh {
                self.add(nb, c);
            }
            self.link_after(*tail, nb);
            *tail = nb;
        } else if at_head {
            if !full(self, z) {
                let part = inside(self, z);
                let nb = self.split_off(z, &part, false);
                if z == *head {
                    *head = nb;
                }
            }
            let nb = self.new_block();
            for &c in fresh {
                self.add(nb, c);
            }
            self.link_before(*head, nb);
            *head = nb;
        } else {
            return None;
        }
        Some(())
    }
}

/// Nests the per-component block orders into a single column order.
fn nest(n: usize, comps: &[Component], laid: &[Vec<Vec<usize>>]) -> Option<Vec<usize>> {
    // slot[c] = node holding column c; node 0 is the root, node 1 + k is the
    // k-th block over all components
    let mut node_base = Vec::with_capacity(comps.len());
    let mut total = 1;
    for blocks in laid {
        node_base.push(total);
        total += blocks.len();
    }
    let mut slot = vec![0usize; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (k, comp) in comps.iter().enumerate() {
        let parent = slot[comp.union[0]];
        if comp.union.iter().any(|&c| slot[c] != parent) {
            return None;
        }
        children[parent].push(k);
        for (b, blk) in laid[k].iter().enumerate() {
            for &c in blk {
                slot[c] = node_base[k] + b;
            }
        }
    }
    // columns owned directly by a node (not by any nested component)
    let mut own: Vec<Vec<usize>> = vec![Vec::new(); total];
    for c in 0..n {
        own[slot[c]].push(c);
    }

    let mut order = Vec::with_capacity(n);
    // explicit stack: Node(id) emits children then own columns; Comp(k)
    // emits its blocks in order
    enum Item {
        Node(usize),
        Comp(usize),
    }
    let mut stack = vec![Item::Node(0)];
    while let Some(item) = stack.pop() {
        match item {
            Item::Node(id) => {
                order.extend_from_slice(&own[id]);
                for &k in children[id].iter().rev() {
                    stack.push(Item::Comp(k));
                }
            }
            Item::Comp(k) => {
                for b in (0..laid[k].len()).rev() {
                    stack.push(Item::Node(node_base[k] + b));
                }
            }
        }
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_orders_brute(m: &BinaryMatrix) -> bool {
        fn permute(k: usize, p: &mut Vec<usize>, m: &BinaryMatrix) -> bool {
            if k == p.len() {
                return is_c1p_order(m, p);
            }
            for i in k..p.len() {
                p.swap(k, i);
                if permute(k + 1, p, m) {
                    return true;
                }
                p.swap(k, i);
            }
            false
        }
        let mut p: Vec<usize> = (0..m.col_count()).collect();
        permute(0, &mut p, m)
    }

    #[test]
    fn identity_matrix() {
        let m = BinaryMatrix::identity(4);
        let o = has_consecutive_ones(&m).unwrap();
        assert!(is_c1p_order(&m, &o));
    }

    #[test]
    fn za_identity_order_works() {
        let m = BinaryMatrix::from_dense(&[[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [0, 1, 0, 0]])
            .unwrap();
        assert!(is_c1p_order(&m, &[0, 1, 2, 3]));
        assert!(has_consecutive_ones(&m).is_some());
    }

    #[test]
    fn triangle_rows_fail() {
        let m = BinaryMatrix::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(has_consecutive_ones(&m), None);
        assert!(!all_orders_brute(&m));
    }

    #[test]
    fn nested_components() {
        // a chain component inside one class of a larger one
        let m = BinaryMatrix::new(
            7,
            vec![vec![0, 1, 2, 3, 4], vec![4, 5, 6], vec![1, 2], vec![2, 3], vec![0, 1, 2, 3]],
        )
        .unwrap();
        let o = has_consecutive_ones(&m).unwrap();
        assert!(is_c1p_order(&m, &o));
    }

    #[test]
    fn exhaustive_small_agreement() {
        // every 4x4 matrix, plus a slice of 3x5 ones
        for code in 0u32..1 << 16 {
            let table: Vec<Vec<u8>> = (0..4)
                .map(|i| (0..4).map(|j| (code >> (4 * i + j) & 1) as u8).collect())
                .collect();
            let m = BinaryMatrix::from_dense(&table).unwrap();
            let got = has_consecutive_ones(&m);
            if let Some(o) = &got {
                assert!(is_c1p_order(&m, o));
            }
            assert_eq!(got.is_some(), all_orders_brute(&m), "{table:?}");
        }
        for code in 0u32..1 << 15 {
            let table: Vec<Vec<u8>> = (0..3)
                .map(|i| (0..5).map(|j| (code >> (5 * i + j) & 1) as u8).collect())
                .collect();
            let m = BinaryMatrix::from_dense(&table).unwrap();
            assert_eq!(has_consecutive_ones(&m).is_some(), all_orders_brute(&m), "{table:?}");
        }
    }
}
