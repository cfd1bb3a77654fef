//! Exact computation of the locating chromatic number by symmetry-pruned
//! backtracking.
//!
//! Vertices are assigned in canonical level order with ascending colors and
//! a first-use cap on new colors, so the search only ever visits one palette
//! relabeling per coloring. The subtrees hanging off the same parent are
//! pairwise isomorphic; the search keeps the color sequence of adjacent
//! sibling subtrees lexicographically non-decreasing, which collapses the
//! n!-fold sibling symmetry at every internal vertex. Two sibling subtrees
//! with identical color sequences are pruned outright: the automorphism
//! swapping them preserves every color class, so the corresponding vertices
//! get equal color codes and the coloring cannot be locating. The full
//! locating check runs on complete assignments only.
//!
//! Search may fan out over a deterministic list of assignment prefixes to
//! parallel workers. The reported witness is the canonically first one
//! regardless of worker count; budget exhaustion is a first-class outcome,
//! never conflated with a completed search.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::coloring::{is_locating, twin_lower_bound, Coloring};
use crate::tree::NaryTree;

/// Resource limits for a search. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: Budget,
    pub workers: usize,
    /// Disables the sibling-subtree canonicalization (and the identical-
    /// subtree pruning that rides on it). Changes node counts, never results.
    pub sibling_symmetry: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: Budget::default(),
            workers: 1,
            sibling_symmetry: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
    /// True when the search ran to a conclusive end: either the canonical
    /// witness (everything before it exhausted) or a complete exhaustion.
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Coloring),
    /// Complete search, no locating coloring with this palette size.
    Exhausted,
    /// Budget ran out before the search was conclusive.
    BudgetExceeded,
}

/// Why the returned palette size is also a lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerEvidence {
    /// Leaves sharing a neighbor are twins, forcing `bound` colors.
    TwinBound { bound: u32 },
    /// Exhausted search proved no locating coloring with `palette` colors.
    ExhaustedSearch { palette: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub chi_l: u32,
    pub witness: Coloring,
    pub lower_evidence: LowerEvidence,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Exact(SolveResult),
    /// Budget ran out; the value lies in `lower..=upper`.
    Bracket {
        lower: u32,
        upper: u32,
        stats: SearchStats,
    },
}

/// Best published upper bound: `n+1` for stars, `n+k-1` otherwise.
pub fn known_upper_bound(n: u32, k: u32) -> u32 {
    if k == 1 {
        n + 1
    } else {
        n + k - 1
    }
}

/// Reference to one sibling-pair constraint this vertex participates in.
#[derive(Debug, Clone, Copy)]
struct PairRef {
    /// Root of the right subtree of the pair; doubles as the state slot.
    pair: usize,
    /// Corresponding vertex in the left subtree; always assigned earlier.
    mirror: usize,
    /// Whether this vertex completes the right subtree's color sequence.
    last: bool,
}

/// Immutable per-search context.
struct Ctx {
    v_count: usize,
    m: u32,
    parent: Vec<usize>,
    /// First child of each vertex, `usize::MAX` for leaves.
    child_start: Vec<usize>,
    n: usize,
    pairs: Vec<Vec<PairRef>>,
    symmetry: bool,
    /// Vertices `0..prefix_len` are enumerated up front as subproblems.
    prefix_len: usize,
}

impl Ctx {
    fn build(tree: &NaryTree, m: u32, symmetry: bool) -> Ctx {
        let v_count = tree.vertex_count();
        let n = tree.branching() as usize;
        let k = tree.depth();
        let mut parent = vec![usize::MAX; v_count];
        let mut child_start = vec![usize::MAX; v_count];
        for v in 0..v_count {
            if let Some(p) = tree.parent(v) {
                parent[v] = p;
            }
            let kids = tree.children(v);
            if !kids.is_empty() {
                child_start[v] = kids.start;
            }
        }
        let mut pairs = vec![Vec::new(); v_count];
        for j in 1..=k {
            let width = |e: u32| (n as u64).pow(e) as usize;
            for (pos, v) in tree.level_range(j).enumerate() {
                for l in 1..=j {
                    let stride = width(j - l);
                    let anc_pos = pos / stride;
                    if anc_pos % n != 0 {
                        let pair = tree.level_range(l).start + anc_pos;
                        let mirror = tree.level_range(j).start + pos - stride;
                        let last = j == k && pos == (anc_pos + 1) * width(k - l) - 1;
                        pairs[v].push(PairRef { pair, mirror, last });
                    }
                }
            }
        }
        // Splitting below level 2 gives enough subproblems to feed workers
        // without the prefix enumeration itself doing real work.
        let prefix_len = if k >= 3 { tree.level_range(2).end } else { 0 };
        Ctx {
            v_count,
            m,
            parent,
            child_start,
            n,
            pairs,
            symmetry,
            prefix_len,
        }
    }
}

struct Shared {
    nodes: AtomicU64,
    next: AtomicUsize,
    /// Smallest subproblem index that produced a witness so far.
    best: AtomicUsize,
    abort: AtomicBool,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(max_nodes: Option<u64>, deadline: Option<Instant>) -> Shared {
        Shared {
            nodes: AtomicU64::new(0),
            next: AtomicUsize::new(0),
            best: AtomicUsize::new(usize::MAX),
            abort: AtomicBool::new(false),
            max_nodes,
            deadline,
        }
    }

    /// Flushes a local node count and reports whether the budget is gone.
    fn charge(&self, local: u64) -> bool {
        let total = self.nodes.fetch_add(local, Ordering::Relaxed) + local;
        if self.abort.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(max) = self.max_nodes {
            if total > max {
                self.abort.store(true, Ordering::Relaxed);
                return true;
            }
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                self.abort.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum SubOutcome {
    Found(Vec<u32>),
    Exhausted,
    /// Budget ran out mid-subproblem.
    Aborted,
    /// Abandoned because a smaller-indexed subproblem already has a witness.
    Skipped,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Found,
    Abort,
}

enum AbortReason {
    Budget,
    Cancelled,
}

struct State<'a> {
    colors: Vec<u32>,
    pair_lt: Vec<bool>,
    flips: Vec<usize>,
    local_nodes: u64,
    shared: &'a Shared,
    my_index: usize,
    abort_reason: AbortReason,
    found: Option<Vec<u32>>,
    // reusable locating-check buffers
    dist: Vec<u32>,
    queue: Vec<usize>,
    codes: Vec<u32>,
    order: Vec<usize>,
}

impl<'a> State<'a> {
    fn new(ctx: &Ctx, shared: &'a Shared) -> State<'a> {
        State {
            colors: vec![0; ctx.v_count],
            pair_lt: vec![false; ctx.v_count],
            flips: Vec::with_capacity(ctx.v_count),
            local_nodes: 0,
            shared,
            my_index: usize::MAX,
            abort_reason: AbortReason::Budget,
            found: None,
            dist: vec![0; ctx.v_count],
            queue: Vec::with_capacity(ctx.v_count),
            codes: vec![0; ctx.v_count * ctx.m as usize],
            order: (0..ctx.v_count).collect(),
        }
    }

    fn reset(&mut self, index: usize) {
        self.colors.fill(0);
        self.pair_lt.fill(false);
        self.flips.clear();
        self.my_index = index;
        self.found = None;
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes & 63 == 0 {
            if self.shared.charge(64) {
                self.abort_reason = AbortReason::Budget;
                return true;
            }
            if self.shared.best.load(Ordering::Relaxed) < self.my_index {
                self.abort_reason = AbortReason::Cancelled;
                return true;
            }
        }
        false
    }

    fn flush(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.local_nodes & 63, Ordering::Relaxed);
        self.local_nodes = 0;
    }
}

/// Multi-source BFS per class into the reusable code table, then a sort to
/// detect duplicate codes. Complete assignments only.
fn complete_is_locating(ctx: &Ctx, st: &mut State) -> bool {
    let v_count = ctx.v_count;
    let m = ctx.m as usize;
    for class in 1..=ctx.m {
        st.dist.fill(u32::MAX);
        st.queue.clear();
        for v in 0..v_count {
            if st.colors[v] == class {
                st.dist[v] = 0;
                st.queue.push(v);
            }
        }
        let mut head = 0;
        while head < st.queue.len() {
            let u = st.queue[head];
            head += 1;
            let du = st.dist[u];
            let p = ctx.parent[u];
            if p != usize::MAX && st.dist[p] == u32::MAX {
                st.dist[p] = du + 1;
                st.queue.push(p);
            }
            let c0 = ctx.child_start[u];
            if c0 != usize::MAX {
                for c in c0..c0 + ctx.n {
                    if st.dist[c] == u32::MAX {
                        st.dist[c] = du + 1;
                        st.queue.push(c);
                    }
                }
            }
        }
        for v in 0..v_count {
            st.codes[v * m + class as usize - 1] = st.dist[v];
        }
    }
    for (v, slot) in st.order.iter_mut().enumerate() {
        *slot = v;
    }
    let codes = &st.codes;
    st.order
        .sort_unstable_by(|&a, &b| codes[a * m..(a + 1) * m].cmp(&codes[b * m..(b + 1) * m]));
    st.order
        .windows(2)
        .all(|w| codes[w[0] * m..(w[0] + 1) * m] != codes[w[1] * m..(w[1] + 1) * m])
}

/// Core backtracking over vertices `v..v_count`.
fn dfs(ctx: &Ctx, st: &mut State, v: usize, used: u32, max_used: u32) -> Flow {
    if v == ctx.v_count {
        if used == ctx.m && complete_is_locating(ctx, st) {
            st.found = Some(st.colors.clone());
            return Flow::Found;
        }
        return Flow::Continue;
    }
    if st.tick() {
        return Flow::Abort;
    }
    // Each remaining vertex can introduce at most one missing color.
    if (ctx.m - used) as usize > ctx.v_count - v {
        return Flow::Continue;
    }
    let parent_color = if v == 0 { 0 } else { st.colors[ctx.parent[v]] };
    let cap = ctx.m.min(max_used + 1);
    'colors: for c in 1..=cap {
        if c == parent_color {
            continue;
        }
        let mark = st.flips.len();
        if ctx.symmetry {
            for pr in &ctx.pairs[v] {
                if !st.pair_lt[pr.pair] {
                    let mc = st.colors[pr.mirror];
                    if c < mc || (c == mc && pr.last) {
                        for &p in &st.flips[mark..] {
                            st.pair_lt[p] = false;
                        }
                        st.flips.truncate(mark);
                        continue 'colors;
                    }
                    if c > mc {
                        st.pair_lt[pr.pair] = true;
                        st.flips.push(pr.pair);
                    }
                }
            }
        }
        st.colors[v] = c;
        let flow = dfs(
            ctx,
            st,
            v + 1,
            used + u32::from(c > max_used),
            max_used.max(c),
        );
        st.colors[v] = 0;
        for &p in &st.flips[mark..] {
            st.pair_lt[p] = false;
        }
        st.flips.truncate(mark);
        match flow {
            Flow::Continue => {}
            other => return other,
        }
    }
    Flow::Continue
}

/// Hard cap on the subproblem list; beyond it, splitting stops paying for
/// itself and the search falls back to a single subproblem.
const MAX_PREFIXES: usize = 4096;

/// Enumerates all valid assignments of the prefix vertices, in DFS order,
/// so the subproblem list is itself canonically ordered. Returns `None`
/// when the list would exceed [`MAX_PREFIXES`].
fn gen_prefixes(ctx: &Ctx, st: &mut State) -> Option<Vec<Vec<u32>>> {
    if ctx.prefix_len == 0 {
        return Some(vec![Vec::new()]);
    }
    let mut out = Vec::new();
    fn rec(
        ctx: &Ctx,
        st: &mut State,
        v: usize,
        used: u32,
        max_used: u32,
        out: &mut Vec<Vec<u32>>,
    ) -> bool {
        if v == ctx.prefix_len {
            if out.len() == MAX_PREFIXES {
                return false;
            }
            out.push(st.colors[..ctx.prefix_len].to_vec());
            return true;
        }
        if (ctx.m - used) as usize > ctx.v_count - v {
            return true;
        }
        let parent_color = if v == 0 { 0 } else { st.colors[ctx.parent[v]] };
        let cap = ctx.m.min(max_used + 1);
        'colors: for c in 1..=cap {
            if c == parent_color {
                continue;
            }
            let mark = st.flips.len();
            if ctx.symmetry {
                for pr in &ctx.pairs[v] {
                    if !st.pair_lt[pr.pair] {
                        let mc = st.colors[pr.mirror];
                        if c < mc || (c == mc && pr.last) {
                            for &p in &st.flips[mark..] {
                                st.pair_lt[p] = false;
                            }
                            st.flips.truncate(mark);
                            continue 'colors;
                        }
                        if c > mc {
                            st.pair_lt[pr.pair] = true;
                            st.flips.push(pr.pair);
                        }
                    }
                }
            }
            st.colors[v] = c;
            let fits = rec(
                ctx,
                st,
                v + 1,
                used + u32::from(c > max_used),
                max_used.max(c),
                out,
            );
            st.colors[v] = 0;
            for &p in &st.flips[mark..] {
                st.pair_lt[p] = false;
            }
            st.flips.truncate(mark);
            if !fits {
                return false;
            }
        }
        true
    }
    if rec(ctx, st, 0, 0, 0, &mut out) {
        Some(out)
    } else {
        None
    }
}

/// Replays a generated prefix, rebuilding the incremental state.
fn apply_prefix(ctx: &Ctx, st: &mut State, prefix: &[u32]) -> (u32, u32) {
    let (mut used, mut max_used) = (0u32, 0u32);
    for (v, &c) in prefix.iter().enumerate() {
        if ctx.symmetry {
            for pr in &ctx.pairs[v] {
                if !st.pair_lt[pr.pair] && c > st.colors[pr.mirror] {
                    st.pair_lt[pr.pair] = true;
                }
            }
        }
        st.colors[v] = c;
        if c > max_used {
            used += 1;
            max_used = c;
        }
    }
    (used, max_used)
}

fn worker(
    ctx: &Ctx,
    shared: &Shared,
    prefixes: &[Vec<u32>],
    results: &Mutex<Vec<Option<SubOutcome>>>,
) {
    let mut st = State::new(ctx, shared);
    loop {
        let index = shared.next.fetch_add(1, Ordering::Relaxed);
        if index >= prefixes.len() {
            st.flush();
            return;
        }
        let outcome = if shared.abort.load(Ordering::Relaxed) {
            SubOutcome::Aborted
        } else if shared.best.load(Ordering::Relaxed) < index {
            SubOutcome::Skipped
        } else {
            st.reset(index);
            let (used, max_used) = apply_prefix(ctx, &mut st, &prefixes[index]);
            match dfs(ctx, &mut st, ctx.prefix_len, used, max_used) {
                Flow::Found => {
                    shared.best.fetch_min(index, Ordering::Relaxed);
                    SubOutcome::Found(st.found.take().unwrap())
                }
                Flow::Continue => SubOutcome::Exhausted,
                Flow::Abort => match st.abort_reason {
                    AbortReason::Budget => SubOutcome::Aborted,
                    AbortReason::Cancelled => SubOutcome::Skipped,
                },
            }
        };
        results.lock().unwrap()[index] = Some(outcome);
    }
}

fn search(
    tree: &NaryTree,
    m: u32,
    config: &SolverConfig,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
) -> (SearchOutcome, SearchStats) {
    let start = Instant::now();
    let elapsed = |complete: bool, nodes: u64| SearchStats {
        nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
        complete,
    };
    if m == 0 {
        return (SearchOutcome::Exhausted, elapsed(true, 0));
    }
    let mut ctx = Ctx::build(tree, m, config.sibling_symmetry);
    let shared = Shared::new(max_nodes, deadline);
    let mut seed = State::new(&ctx, &shared);
    let prefixes = match gen_prefixes(&ctx, &mut seed) {
        Some(prefixes) => prefixes,
        None => {
            // Too many subproblems to be worth splitting.
            ctx.prefix_len = 0;
            vec![Vec::new()]
        }
    };
    let results = Mutex::new(vec![None; prefixes.len()]);
    let workers = config.workers.max(1);
    if workers == 1 {
        worker(&ctx, &shared, &prefixes, &results);
    } else {
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| worker(&ctx, &shared, &prefixes, &results));
            }
        });
    }
    let results = results.into_inner().unwrap();
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let witness_at = results
        .iter()
        .position(|r| matches!(r, Some(SubOutcome::Found(_))));
    if let Some(w) = witness_at {
        let complete = results[..w]
            .iter()
            .all(|r| matches!(r, Some(SubOutcome::Exhausted)));
        let colors = match &results[w] {
            Some(SubOutcome::Found(colors)) => colors.clone(),
            _ => unreachable!(),
        };
        let coloring = Coloring::new(m, colors).expect("search produces valid colorings");
        debug_assert!(is_locating(tree, &coloring).unwrap().is_locating());
        return (SearchOutcome::Found(coloring), elapsed(complete, nodes));
    }
    let exhausted = results
        .iter()
        .all(|r| matches!(r, Some(SubOutcome::Exhausted)));
    if exhausted {
        (SearchOutcome::Exhausted, elapsed(true, nodes))
    } else {
        (SearchOutcome::BudgetExceeded, elapsed(false, nodes))
    }
}

/// Searches for a locating `m`-coloring. `Exhausted` is returned only after
/// a complete search; running out of budget is reported as its own outcome.
pub fn exists_locating_coloring(
    tree: &NaryTree,
    m: u32,
    config: &SolverConfig,
) -> (SearchOutcome, SearchStats) {
    let deadline = config
        .budget
        .max_millis
        .map(|ms| Instant::now() + Duration::from_millis(ms));
    search(tree, m, config, config.budget.max_nodes, deadline)
}

/// Iterates the palette size upward from the twin bound; the first size
/// admitting a witness is the locating chromatic number. On budget
/// exhaustion the result is an honest bracket, never a guess.
pub fn chi_l_exact(tree: &NaryTree, config: &SolverConfig) -> SolveOutcome {
    let start = Instant::now();
    let deadline = config
        .budget
        .max_millis
        .map(|ms| start + Duration::from_millis(ms));
    let twin = twin_lower_bound(tree);
    let upper = known_upper_bound(tree.branching(), tree.depth());
    let mut total_nodes = 0u64;
    let stats = |complete: bool, nodes: u64| SearchStats {
        nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
        complete,
    };
    let mut m = twin;
    loop {
        let remaining = config
            .budget
            .max_nodes
            .map(|mx| mx.saturating_sub(total_nodes));
        let out_of_nodes = remaining == Some(0);
        let out_of_time = deadline.is_some_and(|d| Instant::now() > d);
        if out_of_nodes || out_of_time {
            return SolveOutcome::Bracket {
                lower: m,
                upper,
                stats: stats(false, total_nodes),
            };
        }
        let (outcome, search_stats) = search(tree, m, config, remaining, deadline);
        total_nodes += search_stats.nodes;
        match outcome {
            SearchOutcome::Found(witness) => {
                let lower_evidence = if m == twin {
                    LowerEvidence::TwinBound { bound: twin }
                } else {
                    LowerEvidence::ExhaustedSearch { palette: m - 1 }
                };
                return SolveOutcome::Exact(SolveResult {
                    chi_l: m,
                    witness,
                    lower_evidence,
                    stats: stats(search_stats.complete, total_nodes),
                });
            }
            SearchOutcome::Exhausted => {
                m += 1;
                assert!(
                    m as usize <= tree.vertex_count() + 1,
                    "rainbow coloring is always locating"
                );
            }
            SearchOutcome::BudgetExceeded => {
                return SolveOutcome::Bracket {
                    lower: m,
                    upper,
                    stats: stats(false, total_nodes),
                };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(n: u32, k: u32) -> u32 {
        let tree = NaryTree::new(n, k).unwrap();
        match chi_l_exact(&tree, &SolverConfig::default()) {
            SolveOutcome::Exact(r) => r.chi_l,
            SolveOutcome::Bracket { .. } => panic!("unbudgeted solve may not bracket"),
        }
    }

    #[test]
    fn star_needs_two_colors_proof() {
        let tree = NaryTree::new(2, 1).unwrap();
        let (outcome, stats) = exists_locating_coloring(&tree, 2, &SolverConfig::default());
        assert_eq!(outcome, SearchOutcome::Exhausted);
        assert!(stats.complete);
    }

    #[test]
    fn depth_two_witness() {
        let tree = NaryTree::new(2, 2).unwrap();
        let (outcome, _) = exists_locating_coloring(&tree, 3, &SolverConfig::default());
        match outcome {
            SearchOutcome::Found(c) => {
                assert!(is_locating(&tree, &c).unwrap().is_locating());
                assert_eq!(c.palette_size(), 3);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn depth_three_exhausts_three_colors() {
        let tree = NaryTree::new(2, 3).unwrap();
        let (outcome, _) = exists_locating_coloring(&tree, 3, &SolverConfig::default());
        assert_eq!(outcome, SearchOutcome::Exhausted);
    }

    #[test]
    fn small_exact_values() {
        assert_eq!(solve(2, 2), 3);
        assert_eq!(solve(3, 2), 4);
        assert_eq!(solve(2, 3), 4);
    }

    #[test]
    fn evidence_kinds() {
        let tree = NaryTree::new(2, 3).unwrap();
        match chi_l_exact(&tree, &SolverConfig::default()) {
            SolveOutcome::Exact(r) => {
                assert_eq!(r.chi_l, 4);
                assert_eq!(
                    r.lower_evidence,
                    LowerEvidence::ExhaustedSearch { palette: 3 }
                );
            }
            _ => panic!(),
        }
        let star = NaryTree::new(4, 1).unwrap();
        match chi_l_exact(&star, &SolverConfig::default()) {
            SolveOutcome::Exact(r) => {
                assert_eq!(r.chi_l, 5);
                assert_eq!(r.lower_evidence, LowerEvidence::TwinBound { bound: 5 });
            }
            _ => panic!(),
        }
    }

    #[test]
    fn tiny_budget_brackets() {
        let tree = NaryTree::new(2, 4).unwrap();
        let config = SolverConfig {
            budget: Budget {
                max_nodes: Some(100),
                max_millis: None,
            },
            ..SolverConfig::default()
        };
        match chi_l_exact(&tree, &config) {
            SolveOutcome::Bracket {
                lower,
                upper,
                stats,
            } => {
                assert_eq!(lower, 3);
                assert_eq!(upper, 5);
                assert!(!stats.complete);
            }
            SolveOutcome::Exact(_) => panic!("100 nodes cannot finish T(2,4)"),
        }
    }

    #[test]
    fn workers_agree() {
        let tree = NaryTree::new(2, 3).unwrap();
        let sequential = chi_l_exact(&tree, &SolverConfig::default());
        let parallel = chi_l_exact(
            &tree,
            &SolverConfig {
                workers: 4,
                ..SolverConfig::default()
            },
        );
        match (sequential, parallel) {
            (SolveOutcome::Exact(a), SolveOutcome::Exact(b)) => {
                assert_eq!(a.chi_l, b.chi_l);
                assert_eq!(a.witness, b.witness);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn symmetry_toggle_preserves_chi() {
        let tree = NaryTree::new(2, 2).unwrap();
        let plain = chi_l_exact(
            &tree,
            &SolverConfig {
                sibling_symmetry: false,
                ..SolverConfig::default()
            },
        );
        match plain {
            SolveOutcome::Exact(r) => assert_eq!(r.chi_l, 3),
            _ => panic!(),
        }
    }
}
