//! Exhaustive equivalence suites.
//!
//! Each suite compares a fast routine with an independent brute-force
//! answer over a small universe, and validates every orientation and
//! certificate it sees. Items run on the rayon pool; results are merged in
//! input order, so reports are deterministic.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cobip_core::graph::{automorphisms, find_induced, generate_family, is_isomorphic, FamilyId, Vertex};
use cobip_core::matrix::{
    check_cco_biorder, check_monotone_circular, d_circular_order, find_fcco, find_mik_star, has_circular_ones,
    has_consecutive_ones, is_cco, monotone_circular_biorder, search_cco_biorder, MikStarSearch, DEFAULT_MIK_CAP,
};
use cobip_core::orientation::{find_violation, search_semi_transitive};
use cobip_core::recognizer::{cg, generate_gs, is_cobipartite_permutation, recognize, PermutationAnswer};
use cobip_core::words::{enumerate_representants, represents, representant_classes, search_representant};
use cobip_core::{BinaryMatrix, Biorder, Budget, Certificate, Decision, Graph, GsMember, Orientation, Word};

/// Seed of the random 5×5 sample.
pub const SAMPLE_SEED: u64 = 0x5eed_c0b1;

/// Counts of validated orientations and certificates.
#[derive(Clone, Default, Debug)]
pub struct Tally {
    pub orientations: usize,
    pub certificates: usize,
    pub failures: Vec<String>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.orientations += other.orientations;
        self.certificates += other.certificates;
        self.failures.extend(other.failures);
    }

    fn orientation(&mut self, g: &Graph, o: &Orientation, ctx: &dyn fmt::Display) {
        self.orientations += 1;
        if o.graph() != g {
            self.failures.push(format!("{ctx}: orientation is for another graph"));
        } else if let Some(v) = find_violation(o) {
            self.failures.push(format!("{ctx}: orientation has {v}"));
        }
    }

    /// `negative` re-decides the certified subgraph and must say no.
    fn certificate(
        &mut self,
        g: &Graph,
        c: &Certificate,
        negative: impl Fn(&Graph) -> bool,
        ctx: &dyn fmt::Display,
    ) {
        self.certificates += 1;
        match c.validate(g) {
            Ok(true) => {}
            Ok(false) => return self.failures.push(format!("{ctx}: {c} is not isomorphic to its family")),
            Err(e) => return self.failures.push(format!("{ctx}: {c}: {e}")),
        }
        let sub = g.induced_subgraph(&c.vertices).expect("validated vertices");
        if !negative(&sub) {
            self.failures.push(format!("{ctx}: {c} is not re-recognized as negative"));
        }
    }
}

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    tally: Tally,
    notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub id: u32,
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub tally: Tally,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.tally.failures.is_empty()
    }

    pub fn csv_header() -> &'static str {
        "id,suite,status,checked,failures,orientations,certificates,seconds"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.3}",
            self.id,
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures.len() + self.tally.failures.len(),
            self.tally.orientations,
            self.tally.certificates,
            self.elapsed.as_secs_f64()
        )
    }
}

impl fmt::Display for SuiteReport {
    /// One summary line, then the notes and at most five failures indented.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {:>2} {:<22} checked={} failures={} orientations={} certificates={} time={:.2}s",
            self.id,
            self.name,
            self.checked,
            self.failures.len() + self.tally.failures.len(),
            self.tally.orientations,
            self.tally.certificates,
            self.elapsed.as_secs_f64()
        )?;
        for n in &self.notes {
            writeln!(f, "     {n}")?;
        }
        for x in self.failures.iter().chain(&self.tally.failures).take(5) {
            writeln!(f, "     ! {x}")?;
        }
        Ok(())
    }
}

fn run<T: Sync>(
    id: u32,
    name: &'static str,
    items: &[T],
    check: impl Fn(&T) -> Outcome + Sync + Send,
) -> SuiteReport {
    let start = Instant::now();
    let outcomes: Vec<Outcome> = items.par_iter().map(check).collect();
    let mut report = SuiteReport {
        id,
        name,
        checked: items.len(),
        failures: Vec::new(),
        notes: Vec::new(),
        tally: Tally::default(),
        elapsed: Duration::ZERO,
    };
    for o in outcomes {
        report.failures.extend(o.failures);
        report.notes.extend(o.notes);
        report.tally.merge(o.tally);
    }
    report.elapsed = start.elapsed();
    report
}

// ---------------------------------------------------------------------------
// Universes

fn from_codes(codes: &[u32], cols: usize) -> BinaryMatrix {
    let rows = codes.iter().map(|&x| (0..cols).filter(|&j| x >> j & 1 == 1).collect()).collect();
    BinaryMatrix::new(cols, rows).expect("codes fit the width")
}

fn codes_of(m: &BinaryMatrix) -> Vec<u32> {
    m.rows().iter().map(|r| r.iter().fold(0, |s, &j| s | 1 << j)).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Nondecreasing sequences of length `len` over `values`.
fn multisets(values: &[u32], len: usize) -> Vec<Vec<u32>> {
    fn rec(values: &[u32], start: usize, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for k in start..values.len() {
            cur.push(values[k]);
            rec(values, k, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(values, 0, len, &mut Vec::new(), &mut out);
    out
}

fn permute_code(x: u32, perm: &[usize]) -> u32 {
    perm.iter().enumerate().fold(0, |s, (j, &p)| s | (x >> j & 1) << p)
}

/// `r × c` matrices up to row and column permutations. Each class is
/// represented by its least sorted row-code sequence.
pub fn matrix_classes(r: usize, c: usize) -> Vec<BinaryMatrix> {
    let values: Vec<u32> = (0..1u32 << c).collect();
    let perms = permutations(c);
    multisets(&values, r)
        .into_iter()
        .filter(|codes| {
            perms.iter().all(|p| {
                let mut img: Vec<u32> = codes.iter().map(|&x| permute_code(x, p)).collect();
                img.sort_unstable();
                img >= *codes
            })
        })
        .map(|codes| from_codes(&codes, c))
        .collect()
}

/// `r × c` matrices up to row permutations, rows drawn from `values`.
fn row_multisets(values: &[u32], r: usize, c: usize) -> Vec<BinaryMatrix> {
    multisets(values, r).iter().map(|codes| from_codes(codes, c)).collect()
}

/// Every class of 4×4 matrices.
pub fn universe_4x4() -> Vec<BinaryMatrix> {
    matrix_classes(4, 4)
}

/// Uniform random 5×5 matrices from a fixed seed.
pub fn random_5x5(count: usize, seed: u64) -> Vec<BinaryMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let codes: Vec<u32> = (0..5).map(|_| rng.gen_range(0..32)).collect();
            from_codes(&codes, 5)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Brute-force references on bit masks of positions

/// A set of positions on a cycle of length `n` is an arc (empty and full
/// included).
fn is_arc(mask: u32, n: usize) -> bool {
    let full = (1u32 << n) - 1;
    if mask == 0 || mask == full {
        return true;
    }
    // count the 0 -> 1 steps around the cycle
    let rot = (mask << 1 | mask >> (n - 1)) & full;
    (mask & !rot).count_ones() == 1
}

fn is_block(mask: u32) -> bool {
    mask == 0 || {
        let s = mask >> mask.trailing_zeros();
        s & (s + 1) == 0
    }
}

/// Row codes re-expressed as position masks under `order`.
fn placed(codes: &[u32], order: &[usize]) -> Vec<u32> {
    let mut pos = vec![0; order.len()];
    for (k, &c) in order.iter().enumerate() {
        pos[c] = k;
    }
    codes.iter().map(|&x| permute_code(x, &pos)).collect()
}

fn brute_circular(codes: &[u32], cols: usize) -> bool {
    cyclic_orders(cols).iter().any(|o| placed(codes, o).iter().all(|&x| is_arc(x, cols)))
}

fn brute_consecutive(codes: &[u32], cols: usize) -> bool {
    permutations(cols).iter().any(|o| placed(codes, o).iter().all(|&x| is_block(x)))
}

fn brute_d_circular(codes: &[u32], cols: usize) -> bool {
    cyclic_orders(cols).iter().any(|o| {
        let p = placed(codes, o);
        p.iter().all(|&x| is_arc(x, cols)) && p.iter().all(|&s| p.iter().all(|&r| is_arc(s & !r, cols)))
    })
}

/// Orders with column 0 first: one per rotation class.
fn cyclic_orders(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    permutations(n - 1)
        .into_iter()
        .map(|p| std::iter::once(0).chain(p.into_iter().map(|x| x + 1)).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Suites

fn recognized_negative(g: &Graph) -> bool {
    matches!(recognize(g), Ok(v) if v.decision == Decision::NotSemiTransitive)
}

fn permutation_negative(g: &Graph) -> bool {
    matches!(
        is_cobipartite_permutation(g, &mut Budget::default()),
        Ok(PermutationAnswer::NotPermutation(_))
    )
}

/// Shared checks of a verdict: the witness or certificate must be present
/// and valid.
fn check_verdict(g: &Graph, ctx: &dyn fmt::Display, out: &mut Outcome) -> Option<Decision> {
    let v = match recognize(g) {
        Ok(v) => v,
        Err(e) => {
            out.failures.push(format!("{ctx}: recognize failed: {e}"));
            return None;
        }
    };
    match (&v.witness, &v.certificate) {
        (Some(o), None) if v.decision == Decision::SemiTransitive => out.tally.orientation(g, o, ctx),
        (None, Some(c)) if v.decision == Decision::NotSemiTransitive => {
            out.tally.certificate(g, c, recognized_negative, ctx)
        }
        _ => out.failures.push(format!("{ctx}: {} without its witness or certificate", v.decision)),
    }
    Some(v.decision)
}

struct Dense<'a>(&'a BinaryMatrix);

impl fmt::Display for Dense<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .to_dense()
            .iter()
            .map(|r| r.iter().map(|b| char::from(b'0' + b)).collect())
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Recognition of `CG(M)` against the brute-force orientation search.
pub fn oracle_equivalence(universe: &[BinaryMatrix]) -> SuiteReport {
    run(1, "oracle-equivalence", universe, |m| {
        let mut out = Outcome::default();
        let ctx = Dense(m);
        let (g, _) = cg(m);
        let Some(decision) = check_verdict(&g, &ctx, &mut out) else {
            return out;
        };
        match search_semi_transitive(&g, &mut Budget::unlimited()) {
            Ok(found) => {
                if let Some(o) = &found {
                    out.tally.orientation(&g, o, &ctx);
                }
                if found.is_some() != (decision == Decision::SemiTransitive) {
                    out.failures.push(format!("{ctx}: recognize says {decision}, oracle disagrees"));
                }
            }
            Err(e) => out.failures.push(format!("{ctx}: oracle failed: {e}")),
        }
        out
    })
}

/// The three CCO characterizations agree: the decision, an exhaustive
/// biorder search and the absence of forbidden configurations.
pub fn cco_equivalence(universe: &[BinaryMatrix]) -> SuiteReport {
    run(2, "cco-equivalence", universe, |m| {
        let mut out = Outcome::default();
        let ctx = Dense(m);
        let decided = is_cco(m);
        let searched = match search_cco_biorder(m, &mut Budget::unlimited()) {
            Ok(b) => b,
            Err(e) => {
                out.failures.push(format!("{ctx}: biorder search failed: {e}"));
                return out;
            }
        };
        if let Some(b) = &searched {
            match check_cco_biorder(m, b) {
                Ok(None) => {}
                Ok(Some(v)) => out.failures.push(format!("{ctx}: returned biorder fails: {v}")),
                Err(e) => out.failures.push(format!("{ctx}: returned biorder rejected: {e}")),
            }
        }
        let finite = find_fcco(m);
        let infinite = find_mik_star(m, DEFAULT_MIK_CAP);
        if infinite == MikStarSearch::Unknown {
            out.failures.push(format!("{ctx}: MIk* cap too small"));
        }
        let free = finite.is_none() && infinite == MikStarSearch::Absent;
        if decided.is_cco != searched.is_some() || decided.is_cco != free {
            out.failures.push(format!(
                "{ctx}: is_cco={} biorder={} configuration-free={free}",
                decided.is_cco,
                searched.is_some()
            ));
        }
        if !decided.is_cco {
            match &decided.evidence {
                Some((id, conf)) => {
                    let pat = cobip_core::matrix::generate_pattern(*id).unwrap();
                    if m.submatrix(&conf.rows, &conf.cols) != pat {
                        out.failures.push(format!("{ctx}: evidence {id} does not match"));
                    }
                }
                None => out.failures.push(format!("{ctx}: negative answer without evidence")),
            }
        }
        out
    })
}

/// Circular ones by Tucker's reduction against brute force, and the
/// reduction itself (circular ones iff consecutive ones after complementing
/// through any column), on every matrix up to 4×5.
pub fn tucker(max_rows: usize, max_cols: usize) -> SuiteReport {
    let mut items = Vec::new();
    for c in 1..=max_cols {
        let values: Vec<u32> = (0..1u32 << c).collect();
        for r in 1..=max_rows {
            items.extend(row_multisets(&values, r, c));
        }
    }
    run(3, "tucker-reduction", &items, |m| {
        let mut out = Outcome::default();
        let ctx = Dense(m);
        let (codes, c) = (codes_of(m), m.col_count());
        let circ = brute_circular(&codes, c);
        match has_circular_ones(m) {
            Some(o) if !placed(&codes, &o).iter().all(|&x| is_arc(x, c)) => {
                out.failures.push(format!("{ctx}: circular order {o:?} is wrong"))
            }
            found if found.is_some() != circ => {
                out.failures.push(format!("{ctx}: circular ones says {}, brute force {circ}", found.is_some()))
            }
            _ => {}
        }
        let cons = brute_consecutive(&codes, c);
        match has_consecutive_ones(m) {
            Some(o) if !placed(&codes, &o).iter().all(|&x| is_block(x)) => {
                out.failures.push(format!("{ctx}: consecutive order {o:?} is wrong"))
            }
            found if found.is_some() != cons => {
                out.failures.push(format!("{ctx}: consecutive ones says {}, brute force {cons}", found.is_some()))
            }
            _ => {}
        }
        for pivot in 0..c {
            let reduced: Vec<u32> =
                codes.iter().map(|&x| if x >> pivot & 1 == 1 { !x & ((1 << c) - 1) } else { x }).collect();
            if brute_consecutive(&reduced, c) != circ {
                out.failures.push(format!("{ctx}: reduction through column {} disagrees", pivot + 1));
            }
        }
        out
    })
}

/// `D`-circular (brute force) iff some biorder passes the monotone circular
/// check (brute force over both orders), for matrices without trivial rows.
pub fn monotone_circular(max_rows: usize, max_cols: usize) -> SuiteReport {
    let mut items = Vec::new();
    for c in 2..=max_cols {
        let values: Vec<u32> = (1..(1u32 << c) - 1).collect();
        for r in 1..=max_rows {
            items.extend(row_multisets(&values, r, c));
        }
    }
    run(4, "monotone-circular", &items, |m| {
        let mut out = Outcome::default();
        let ctx = Dense(m);
        let codes = codes_of(m);
        let d_circ = brute_d_circular(&codes, m.col_count());
        let col_orders = permutations(m.col_count());
        let row_orders = permutations(m.row_count());
        let mc = col_orders.iter().any(|co| {
            row_orders.iter().any(|ro| {
                let b = Biorder {
                    row_order: ro.clone(),
                    col_order: co.clone(),
                };
                matches!(check_monotone_circular(m, &b), Ok(None))
            })
        });
        if d_circ != mc {
            out.failures.push(format!("{ctx}: D-circular={d_circ} monotone-circular={mc}"));
        }
        if d_circular_order(m).is_some() != d_circ {
            out.failures.push(format!("{ctx}: fast D-circular test disagrees"));
        }
        match monotone_circular_biorder(m, None) {
            Ok(b) if b.is_some() != d_circ => out.failures.push(format!("{ctx}: biorder construction disagrees")),
            Err(e) => out.failures.push(format!("{ctx}: biorder construction failed: {e}")),
            _ => {}
        }
        out
    })
}

/// Every forbidden graph up to `max_order` vertices is negative, and every
/// one-vertex deletion is positive with a valid witness.
pub fn gs_minimality(max_order: usize) -> SuiteReport {
    let members = GsMember::up_to_order(max_order);
    run(5, "gs-minimality", &members, |&member| {
        let mut out = Outcome::default();
        let g = generate_gs(member).expect("listed member");
        if check_verdict(&g, &member, &mut out) != Some(Decision::NotSemiTransitive) {
            out.failures.push(format!("{member}: not recognized as negative"));
        }
        for &v in g.vertices() {
            let h = g.remove_vertex(v).unwrap();
            let ctx = format!("{member} - {v}");
            if check_verdict(&h, &ctx, &mut out) != Some(Decision::SemiTransitive) {
                out.failures.push(format!("{ctx}: not recognized as positive"));
            }
        }
        out
    })
}

/// The neighbourhood of vertex 1 in `C̄6`.
pub fn word_fixture_graph() -> Graph {
    let c6 = generate_family(FamilyId::CoC2k(3)).unwrap();
    let mut keep: Vec<Vertex> = c6.neighbors(1).chain([1]).collect();
    keep.sort_unstable();
    c6.induced_subgraph(&keep).unwrap()
}

pub const FIXTURE_WORD: &str = "3 5 4 1 4 3 5 1";

/// The 2-uniform representant of the fixture graph, and no 2-uniform
/// representant of `C̄6`.
pub fn word_fixture() -> SuiteReport {
    run(6, "word-fixture", &[()], |_| {
        let mut out = Outcome::default();
        let h = word_fixture_graph();
        let expected: Word = FIXTURE_WORD.parse().unwrap();
        match search_representant(&h, 2, &mut Budget::unlimited()) {
            Ok(Some(w)) => {
                if w.dihedral_min() != expected.dihedral_min() {
                    out.failures.push(format!("found {w}, not a rotation or reversal of {expected}"));
                }
                if !matches!(represents(&w, &h), Ok(true)) {
                    out.failures.push(format!("{w} does not represent the fixture"));
                }
                out.notes.push(format!("representant {w}"));
            }
            other => out.failures.push(format!("fixture search returned {other:?}")),
        }
        let budget = &mut Budget::unlimited();
        match (enumerate_representants(&h, 2, budget), automorphisms(&h, budget)) {
            (Ok(words), Ok(maps)) => {
                let plain = representant_classes(&h, &words, &[]);
                let classes = representant_classes(&h, &words, &maps);
                out.notes.push(format!(
                    "{} 2-uniform representants, {} up to rotation and reversal, {} up to automorphism",
                    words.len(),
                    plain.len(),
                    classes.len()
                ));
            }
            (Err(e), _) | (_, Err(e)) => out.failures.push(format!("class count failed: {e}")),
        }
        let c6 = generate_family(FamilyId::CoC2k(3)).unwrap();
        match search_representant(&c6, 2, &mut Budget::unlimited()) {
            Ok(None) => out.notes.push("C6-bar: no 2-uniform representant (exhaustive)".into()),
            other => out.failures.push(format!("C6-bar search returned {other:?}")),
        }
        out
    })
}

/// Local-complementation sequences that expose a circle-graph obstruction.
pub fn lc_fixtures() -> SuiteReport {
    let cases = [
        (FamilyId::G1, vec![7, 6], FamilyId::W5),
        (FamilyId::G2, vec![7, 1], FamilyId::Y6),
        (FamilyId::G3, vec![1, 2, 3], FamilyId::Y6),
    ];
    run(7, "local-complementation", &cases, |(base, seq, target)| {
        let mut out = Outcome::default();
        let ctx = format!("{base}*{}", seq.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("*"));
        let g = generate_family(*base).unwrap().local_complement_seq(seq).unwrap();
        let pattern = generate_family(*target).unwrap();
        match find_induced(&g, &pattern) {
            Ok(Some(img)) => {
                let mut vs = img.clone();
                vs.sort_unstable();
                let sub = g.induced_subgraph(&vs).unwrap();
                if !matches!(is_isomorphic(&sub, &pattern), Ok(true)) {
                    out.failures.push(format!("{ctx}: embedding {img:?} is not induced {target}"));
                }
                out.notes.push(format!("{ctx} contains {target} on {vs:?}"));
            }
            other => out.failures.push(format!("{ctx}: no induced {target} ({other:?})")),
        }
        out
    })
}

/// Co-bipartite permutation graphs are exactly the complete graphs and the
/// graphs with a 2-uniform representant.
pub fn circle_permutation(max_rows: usize, max_cols: usize) -> SuiteReport {
    let mut items = Vec::new();
    for r in 1..=max_rows {
        for c in 1..=max_cols {
            items.extend(matrix_classes(r, c));
        }
    }
    run(8, "circle-permutation", &items, |m| {
        let mut out = Outcome::default();
        let ctx = Dense(m);
        let (g, _) = cg(m);
        let answer = match is_cobipartite_permutation(&g, &mut Budget::unlimited()) {
            Ok(a) => a,
            Err(e) => {
                out.failures.push(format!("{ctx}: permutation test failed: {e}"));
                return out;
            }
        };
        match &answer {
            PermutationAnswer::Permutation(o) => {
                if o.graph() != &g || !o.is_acyclic() || !o.is_transitive() {
                    out.failures.push(format!("{ctx}: not a transitive orientation"));
                }
                out.tally.orientation(&g, o, &ctx);
            }
            PermutationAnswer::NotPermutation(c) => out.tally.certificate(&g, c, permutation_negative, &ctx),
        }
        let rhs = if g.is_complete() {
            true
        } else {
            match search_representant(&g, 2, &mut Budget::unlimited()) {
                Ok(Some(w)) => {
                    if !matches!(represents(&w, &g), Ok(true)) {
                        out.failures.push(format!("{ctx}: {w} does not represent the graph"));
                    }
                    true
                }
                Ok(None) => false,
                Err(e) => {
                    out.failures.push(format!("{ctx}: word search failed: {e}"));
                    return out;
                }
            }
        };
        if answer.is_permutation() != rhs {
            out.failures.push(format!("{ctx}: permutation={} word={rhs}", answer.is_permutation()));
        }
        out
    })
}

/// Aggregates the orientation and certificate checks of earlier suites.
pub fn witness_validity(reports: &[SuiteReport]) -> SuiteReport {
    let mut tally = Tally::default();
    for r in reports {
        tally.merge(r.tally.clone());
    }
    let elapsed = reports.iter().map(|r| r.elapsed).sum();
    SuiteReport {
        id: 9,
        name: "witness-validity",
        checked: tally.orientations + tally.certificates,
        failures: Vec::new(),
        notes: Vec::new(),
        tally,
        elapsed,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    All,
    Oracle,
    Cco,
    Tucker,
    Mco,
    Gs,
    Word,
    Lc,
    Circle,
}

/// Runs the selected suites at their acceptance sizes; `All` also appends
/// the witness-validity summary.
pub fn run_suites(suite: Suite) -> Vec<SuiteReport> {
    let want = |s: Suite| suite == Suite::All || suite == s;
    let mut reports = Vec::new();
    let universe = if want(Suite::Oracle) || want(Suite::Cco) { universe_4x4() } else { Vec::new() };
    if want(Suite::Oracle) {
        reports.push(oracle_equivalence(&universe));
    }
    if want(Suite::Cco) {
        let mut items = universe.clone();
        items.extend(random_5x5(1000, SAMPLE_SEED));
        reports.push(cco_equivalence(&items));
    }
    if want(Suite::Tucker) {
        reports.push(tucker(4, 5));
    }
    if want(Suite::Mco) {
        reports.push(monotone_circular(4, 4));
    }
    if want(Suite::Gs) {
        reports.push(gs_minimality(12));
    }
    if want(Suite::Word) {
        reports.push(word_fixture());
    }
    if want(Suite::Lc) {
        reports.push(lc_fixtures());
    }
    if want(Suite::Circle) {
        reports.push(circle_permutation(4, 4));
    }
    if suite == Suite::All {
        let summary = witness_validity(&reports);
        reports.push(summary);
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcs_on_a_cycle() {
        assert!(is_arc(0b0000, 4));
        assert!(is_arc(0b1111, 4));
        assert!(is_arc(0b1001, 4));
        assert!(is_arc(0b0110, 4));
        assert!(!is_arc(0b0101, 4));
        assert!(is_block(0b0110));
        assert!(!is_block(0b1001));
    }

    #[test]
    fn class_counts() {
        // 2×2 matrices up to permutations: 0, one 1, two 1s in a row, in a
        // column, on a diagonal, three 1s, four 1s
        assert_eq!(matrix_classes(2, 2).len(), 7);
        // 4×4 binary matrices up to row and column permutations
        assert_eq!(universe_4x4().len(), 317);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(cyclic_orders(4).len(), 6);
    }
}
