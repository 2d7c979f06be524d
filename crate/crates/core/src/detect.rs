//! Incremental detectors for forbidden cycles and induced paths, and the
//! enumerator of safe neighbor sets that drives the search loop.
//!
//! The search maintains two invariants that keep these checks cheap: the graph
//! entering a search node has no forbidden cycle, so only cycles through newly
//! added edges can appear; and the graph that survived the induced-path test
//! gains only a pendant vertex before recursing, so any new induced path must
//! pass through that vertex. The whole-graph forms are kept alongside and the
//! equivalences are property-tested against the oracle module.

use crate::graph::{bits, Graph};
use std::collections::BTreeSet;

/// The set of banned cycle lengths: every power of two (≥ 4), or an explicit
/// list such as {4, 8}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenCycleSpec {
    PowersOfTwo,
    Explicit(BTreeSet<usize>),
}

impl ForbiddenCycleSpec {
    pub fn powers_of_two() -> Self {
        ForbiddenCycleSpec::PowersOfTwo
    }

    /// Explicit set of forbidden lengths; every length must be at least 3.
    pub fn explicit<I: IntoIterator<Item = usize>>(lengths: I) -> Self {
        let set: BTreeSet<usize> = lengths.into_iter().collect();
        assert!(!set.is_empty(), "explicit forbidden set must be non-empty");
        assert!(
            set.iter().all(|&l| l >= 3),
            "cycle lengths below 3 cannot occur in simple graphs"
        );
        ForbiddenCycleSpec::Explicit(set)
    }

    #[inline(always)]
    pub fn is_forbidden(&self, len: usize) -> bool {
        match self {
            ForbiddenCycleSpec::PowersOfTwo => len >= 4 && len.is_power_of_two(),
            ForbiddenCycleSpec::Explicit(set) => set.contains(&len),
        }
    }

    /// The largest forbidden length not exceeding `n`; cycle searches never
    /// need to look deeper. `None` means no cycle of length ≤ n is forbidden.
    pub fn max_forbidden_at_most(&self, n: usize) -> Option<usize> {
        match self {
            ForbiddenCycleSpec::PowersOfTwo => {
                if n < 4 {
                    None
                } else {
                    // largest power of two ≤ n
                    Some(1usize << (usize::BITS - 1 - n.leading_zeros()))
                }
            }
            ForbiddenCycleSpec::Explicit(set) => set.range(..=n).next_back().copied(),
        }
    }
}

impl std::fmt::Display for ForbiddenCycleSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ForbiddenCycleSpec::PowersOfTwo => write!(f, "pow2"),
            ForbiddenCycleSpec::Explicit(set) => {
                let mut first = true;
                for l in set {
                    if !first {
                        write!(f, ",")?;
                    }
                    write!(f, "{l}")?;
                    first = false;
                }
                Ok(())
            }
        }
    }
}

/// A set of existing vertices that may all be joined to the newest vertex
/// without creating a forbidden cycle. Stored as a bitmask over vertex
/// indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SafeSet(u64);

impl SafeSet {
    pub fn empty() -> Self {
        SafeSet(0)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut mask = 0u64;
        for v in vs {
            mask |= 1u64 << v;
        }
        SafeSet(mask)
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 & (1u64 << v) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }
}

impl std::fmt::Debug for SafeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// True iff some cycle through `v` has forbidden length. The caller maintains
/// that no forbidden cycle avoids `v`, so a false result means the whole graph
/// is free of forbidden cycles.
pub fn creates_forbidden_cycle_through(g: &Graph, v: usize, spec: &ForbiddenCycleSpec) -> bool {
    let Some(lmax) = spec.max_forbidden_at_most(g.n()) else {
        return false;
    };
    // DFS over simple paths v, x1, ..., xm; a closure back to v at path length
    // m+1 >= 3 is a cycle through v of that length
    cycle_through_dfs(g, v, v, 1u64 << v, 1, lmax, spec)
}

fn cycle_through_dfs(
    g: &Graph,
    anchor: usize,
    cur: usize,
    visited: u64,
    len: usize,
    lmax: usize,
    spec: &ForbiddenCycleSpec,
) -> bool {
    for w in bits(g.neighbors(cur) & !visited) {
        if len >= 2 && g.has_edge(w, anchor) && spec.is_forbidden(len + 1) {
            return true;
        }
        if len + 1 < lmax
            && cycle_through_dfs(g, anchor, w, visited | (1u64 << w), len + 1, lmax, spec)
        {
            return true;
        }
    }
    false
}

/// True iff adding the edge {u, v} to `g` (which must not contain it) would
/// close a cycle of forbidden length. Any cycle created by a new edge passes
/// through that edge, so this is the exact incremental safety test used by
/// the safe-set enumerator.
pub fn edge_would_close_forbidden_cycle(
    g: &Graph,
    u: usize,
    v: usize,
    spec: &ForbiddenCycleSpec,
) -> bool {
    debug_assert!(!g.has_edge(u, v));
    let Some(lmax) = spec.max_forbidden_at_most(g.n()) else {
        return false;
    };
    // a simple path u ... v on m vertices plus the new edge is a cycle of
    // length m; search paths from u to v of forbidden vertex count
    closing_path_dfs(g, v, u, 1u64 << u, 1, lmax, spec)
}

fn closing_path_dfs(
    g: &Graph,
    target: usize,
    cur: usize,
    visited: u64,
    len: usize,
    lmax: usize,
    spec: &ForbiddenCycleSpec,
) -> bool {
    let nbrs = g.neighbors(cur) & !visited;
    if nbrs & (1u64 << target) != 0 && len + 1 >= 3 && spec.is_forbidden(len + 1) {
        return true;
    }
    if len + 1 >= lmax {
        return false;
    }
    for w in bits(nbrs & !(1u64 << target)) {
        if closing_path_dfs(g, target, w, visited | (1u64 << w), len + 1, lmax, spec) {
            return true;
        }
    }
    false
}

/// True iff `g` has an induced path on `k` vertices passing through `v`.
///
/// The path is grown as two arms out of `v`. Candidate extensions are pruned
/// with bitset masks: a vertex may extend an arm only if it is adjacent to the
/// arm's end and non-adjacent to every other path vertex. Arm splits are
/// deduplicated so each path is examined once.
pub fn has_induced_path_through(g: &Graph, v: usize, k: usize) -> bool {
    debug_assert!(v < g.n());
    if k == 0 {
        return true;
    }
    if k == 1 {
        return true;
    }
    if k == 2 {
        return g.degree(v) >= 1;
    }
    // left arm: a vertices beyond v, right arm: b = k-1-a vertices; a <= b
    grow_left(g, v, k, v, 1u64 << v, 0, 1, usize::MAX)
}

/// Extends the left arm. `end` is the arm's end, `blocked` the mask of
/// vertices unusable as the next left vertex, `cross` the union of closed
/// neighborhoods of all left-arm vertices other than v (these exclude
/// right-arm candidates), `len` the path size so far including v.
fn grow_left(
    g: &Graph,
    v: usize,
    k: usize,
    end: usize,
    blocked: u64,
    cross: u64,
    len: usize,
    first_left: usize,
) -> bool {
    let a = len - 1;
    let b = k - len;
    // try to complete with a right arm of size b (split is canonical: a <= b,
    // and for the even split only right arms starting above the left start)
    if a <= b {
        let min_right_start = if a == b { first_left } else { usize::MAX };
        let right_blocked = cross | (1u64 << v);
        if grow_right(g, v, right_blocked, b, min_right_start) {
            return true;
        }
    }
    // extend the left arm while a+1 <= k-1-(a+1)
    if 2 * (a + 1) <= k - 1 {
        let next_blocked = blocked | g.neighbors(end) | (1u64 << end);
        for w in bits(g.neighbors(end) & !blocked) {
            let fl = if len == 1 { w } else { first_left };
            if grow_left(
                g,
                v,
                k,
                w,
                next_blocked,
                cross | g.neighbors(w) | (1u64 << w),
                len + 1,
                fl,
            ) {
                return true;
            }
        }
    }
    false
}

/// Grows the right arm from `v`, needing `remaining` more vertices. `blocked`
/// masks out everything adjacent to (or part of) the path so far except the
/// current end's own neighbors. For the symmetric split, the first right
/// vertex must exceed `min_start` (usize::MAX disables the restriction).
fn grow_right(g: &Graph, end: usize, blocked: u64, remaining: usize, min_start: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    let mut cands = g.neighbors(end) & !blocked;
    if min_start != usize::MAX {
        cands &= !((1u64 << min_start) | ((1u64 << min_start) - 1));
    }
    if remaining == 1 {
        return cands != 0;
    }
    let next_blocked = blocked | g.neighbors(end) | (1u64 << end);
    for w in bits(cands) {
        if grow_right(g, w, next_blocked, remaining - 1, usize::MAX) {
            return true;
        }
    }
    false
}

/// Whole-graph form: true iff `g` has any induced path on `k` vertices. Runs
/// the anchored check from every vertex.
pub fn has_induced_path(g: &Graph, k: usize) -> bool {
    if k <= 1 {
        return g.n() >= k;
    }
    (0..g.n()).any(|v| has_induced_path_through(g, v, k))
}

/// Lazily enumerates every safe neighbor set of the newest vertex, the empty
/// set first. The iterator owns a clone of the graph and walks the subset tree
/// of the candidates in ascending vertex order, include-branch first; a
/// candidate whose inclusion would close a forbidden cycle prunes that whole
/// subtree (supersets of an unsafe set are unsafe, since edges are only ever
/// added).
///
/// Under a degree cap, candidates already at degree cap-1+1 are excluded and
/// at most cap - deg(newest) vertices are included.
pub fn enumerate_safe_sets(
    g: &Graph,
    spec: &ForbiddenCycleSpec,
    degree_cap: Option<usize>,
) -> SafeSetIter {
    let n = g.n();
    assert!(n >= 1, "safe sets are defined for the newest vertex");
    let newest = n - 1;
    let slots = degree_cap.map(|c| c.saturating_sub(g.degree(newest)));
    let mut candidates = [0u8; crate::graph::MAX_VERTICES];
    let mut n_candidates = 0;
    for v in 0..newest {
        if !g.has_edge(v, newest) && degree_cap.map_or(true, |c| g.degree(v) < c) {
            candidates[n_candidates] = v as u8;
            n_candidates += 1;
        }
    }
    SafeSetIter {
        g: g.clone(),
        spec: spec.clone(),
        newest,
        slots,
        candidates,
        n_candidates,
        included: [0u8; crate::graph::MAX_VERTICES],
        n_included: 0,
        set_mask: 0,
        cursor: 0,
        started: false,
        done: false,
    }
}

/// Single-consumer stream of safe sets. See [`enumerate_safe_sets`].
/// Fixed-size internals: one of these lives per search-tree node, so it must
/// not allocate.
pub struct SafeSetIter {
    g: Graph,
    spec: ForbiddenCycleSpec,
    newest: usize,
    slots: Option<usize>,
    candidates: [u8; crate::graph::MAX_VERTICES],
    n_candidates: usize,
    included: [u8; crate::graph::MAX_VERTICES], // positions into `candidates`
    n_included: usize,
    set_mask: u64,
    cursor: usize, // next candidate position to try at the current node
    started: bool,
    done: bool,
}

impl Iterator for SafeSetIter {
    type Item = SafeSet;

    fn next(&mut self) -> Option<SafeSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(SafeSet::empty()); // the empty set is always safe
        }
        loop {
            let may_include = self.slots.map_or(true, |s| self.n_included < s);
            if may_include {
                while self.cursor < self.n_candidates {
                    let c = self.candidates[self.cursor] as usize;
                    if !edge_would_close_forbidden_cycle(&self.g, c, self.newest, &self.spec) {
                        self.g.add_edge(c, self.newest);
                        self.included[self.n_included] = self.cursor as u8;
                        self.n_included += 1;
                        self.set_mask |= 1u64 << c;
                        self.cursor += 1;
                        return Some(SafeSet(self.set_mask));
                    }
                    self.cursor += 1;
                }
            }
            // backtrack to the previous include, resume after it
            if self.n_included == 0 {
                self.done = true;
                return None;
            }
            self.n_included -= 1;
            let pos = self.included[self.n_included] as usize;
            let c = self.candidates[pos] as usize;
            self.g.remove_edge(c, self.newest);
            self.set_mask &= !(1u64 << c);
            self.cursor = pos + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::collections::BTreeSet;

    fn cycle_graph(n: usize) -> Graph {
        let mut g = Graph::new_path(n);
        g.add_edge(0, n - 1);
        g
    }

    fn complete_graph(n: usize) -> Graph {
        let mut g = Graph::with_vertices(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
        let mut g = Graph::with_vertices(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    #[test]
    fn forbidden_spec_powers_of_two() {
        let spec = ForbiddenCycleSpec::powers_of_two();
        for l in [4usize, 8, 16, 32, 64] {
            assert!(spec.is_forbidden(l), "{l} must be forbidden");
        }
        for l in [3usize, 5, 6, 7, 9, 12, 15, 24] {
            assert!(!spec.is_forbidden(l), "{l} must be allowed");
        }
        assert_eq!(spec.max_forbidden_at_most(3), None);
        assert_eq!(spec.max_forbidden_at_most(4), Some(4));
        assert_eq!(spec.max_forbidden_at_most(15), Some(8));
        assert_eq!(spec.max_forbidden_at_most(64), Some(64));
    }

    #[test]
    fn forbidden_spec_explicit() {
        let spec = ForbiddenCycleSpec::explicit([4, 8]);
        assert!(spec.is_forbidden(4) && spec.is_forbidden(8));
        assert!(!spec.is_forbidden(16) && !spec.is_forbidden(3));
        assert_eq!(spec.max_forbidden_at_most(7), Some(4));
        assert_eq!(spec.max_forbidden_at_most(3), None);
    }

    #[test]
    #[should_panic]
    fn explicit_spec_rejects_length_2() {
        let _ = ForbiddenCycleSpec::explicit([2, 4]);
    }

    #[test]
    fn c4_has_forbidden_cycle_through_every_vertex() {
        let c4 = cycle_graph(4);
        let spec = ForbiddenCycleSpec::powers_of_two();
        for v in 0..4 {
            assert!(creates_forbidden_cycle_through(&c4, v, &spec));
        }
    }

    #[test]
    fn triangle_has_no_forbidden_cycle() {
        let tri = cycle_graph(3);
        let spec = ForbiddenCycleSpec::powers_of_two();
        for v in 0..3 {
            assert!(!creates_forbidden_cycle_through(&tri, v, &spec));
        }
    }

    #[test]
    fn forbidden_cycle_detector_matches_oracle() {
        let mut rng = StdRng::seed_from_u64(0xE6_2001);
        let specs = [
            ForbiddenCycleSpec::powers_of_two(),
            ForbiddenCycleSpec::explicit([4, 8]),
            ForbiddenCycleSpec::explicit([4]),
            ForbiddenCycleSpec::explicit([3, 5]),
        ];
        for round in 0..120 {
            let n = rng.gen_range(3..=12);
            let p = if n > 9 { 0.25 } else { 0.4 };
            let g = random_graph(&mut rng, n, p);
            let spec = &specs[round % specs.len()];
            for v in 0..n {
                let through = oracle::cycle_lengths_through(&g, v);
                let expect = through.iter().any(|&l| spec.is_forbidden(l));
                assert_eq!(
                    creates_forbidden_cycle_through(&g, v, spec),
                    expect,
                    "vertex {v} of {g:?} under {spec}"
                );
            }
        }
    }

    #[test]
    fn edge_closing_detector_matches_oracle() {
        // on a forbidden-free graph, adding one edge creates a forbidden cycle
        // iff the whole-graph oracle finds one afterwards
        let mut rng = StdRng::seed_from_u64(0xE6_2002);
        let specs = [
            ForbiddenCycleSpec::powers_of_two(),
            ForbiddenCycleSpec::explicit([4, 8]),
        ];
        let mut tested = 0;
        let mut round = 0;
        while tested < 200 {
            round += 1;
            let n = rng.gen_range(3..=10);
            let mut g = random_graph(&mut rng, n, 0.3);
            let spec = &specs[round % specs.len()];
            if oracle::all_cycle_lengths(&g).intersects(spec) {
                continue;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || g.has_edge(u, v) {
                continue;
            }
            tested += 1;
            let predicted = edge_would_close_forbidden_cycle(&g, u, v, spec);
            g.add_edge(u, v);
            let actual = oracle::all_cycle_lengths(&g).intersects(spec);
            assert_eq!(predicted, actual, "edge ({u},{v}) on {g:?} under {spec}");
        }
    }

    #[test]
    fn induced_path_through_path_endpoints() {
        for k in 2..=8 {
            let g = Graph::new_path(k);
            assert!(has_induced_path_through(&g, 0, k));
            assert!(has_induced_path_through(&g, k - 1, k));
            assert!(!has_induced_path_through(&g, 0, k + 1));
        }
    }

    #[test]
    fn induced_paths_of_c5() {
        let c5 = cycle_graph(5);
        for v in 0..5 {
            assert!(has_induced_path_through(&c5, v, 4));
            assert!(!has_induced_path_through(&c5, v, 5));
        }
        assert!(has_induced_path(&c5, 4));
        assert!(!has_induced_path(&c5, 5));
    }

    #[test]
    fn cliques_have_no_induced_p3() {
        assert!(!has_induced_path(&complete_graph(4), 3));
        assert!(has_induced_path(&complete_graph(4), 2));
    }

    #[test]
    fn induced_path_bounds_on_p10() {
        let g = Graph::new_path(10);
        assert!(has_induced_path(&g, 10));
        assert!(!has_induced_path(&g, 11));
    }

    #[test]
    fn induced_path_detector_matches_oracle() {
        let mut rng = StdRng::seed_from_u64(0xE6_2003);
        for _ in 0..150 {
            let n = rng.gen_range(3..=10);
            let p = rng.gen_range(0.15..0.6);
            let g = random_graph(&mut rng, n, p);
            let lip = oracle::longest_induced_path(&g);
            for k in 3..=n {
                assert_eq!(
                    has_induced_path(&g, k),
                    lip >= k,
                    "k={k}, lip={lip}, g={g:?}"
                );
            }
        }
    }

    #[test]
    fn anchored_check_equivalent_after_pendant_growth() {
        // for graphs with no induced P_k, adding one new vertex u with any
        // edge set keeps every induced P_k (if one appears) through u
        let mut rng = StdRng::seed_from_u64(0xE6_2004);
        let mut tested = 0;
        while tested < 80 {
            let n = rng.gen_range(3..=8);
            let p = rng.gen_range(0.2..0.7);
            let g = random_graph(&mut rng, n, p);
            let k = rng.gen_range(3..=n);
            if has_induced_path(&g, k) {
                continue;
            }
            tested += 1;
            let mut h = g.clone();
            let u = h.add_vertex();
            for v in 0..n {
                if rng.gen_bool(0.4) {
                    h.add_edge(v, u);
                }
            }
            assert_eq!(
                has_induced_path_through(&h, u, k),
                has_induced_path(&h, k),
                "pendant-anchored check diverged on {h:?} k={k}"
            );
        }
    }

    /// Brute-force reference: every subset of the newest vertex's non-neighbors,
    /// kept iff adding all its edges leaves no forbidden cycle (checked by the
    /// oracle) and iff it satisfies the degree cap.
    fn safe_sets_brute_force(
        g: &Graph,
        spec: &ForbiddenCycleSpec,
        cap: Option<usize>,
    ) -> BTreeSet<u64> {
        let newest = g.n() - 1;
        let cands: Vec<usize> = (0..newest).filter(|&v| !g.has_edge(v, newest)).collect();
        let mut out = BTreeSet::new();
        for choice in 0u64..(1u64 << cands.len()) {
            let subset: Vec<usize> = cands
                .iter()
                .enumerate()
                .filter(|(i, _)| choice & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            if let Some(c) = cap {
                if g.degree(newest) + subset.len() > c
                    || subset.iter().any(|&s| g.degree(s) + 1 > c)
                {
                    continue;
                }
            }
            let mut h = g.clone();
            for &s in &subset {
                h.add_edge(s, newest);
            }
            if !oracle::all_cycle_lengths(&h).intersects(spec) {
                out.insert(SafeSet::from_vertices(subset).mask());
            }
        }
        out
    }

    #[test]
    fn safe_sets_triangle_with_attached_vertex() {
        // triangle 0-1-2 plus vertex 3 adjacent to 0: joining 3 to either of
        // 1, 2 closes a 4-cycle through the existing edge 0-3, so the empty
        // set is the only safe set (brute-forced over all 4 subsets)
        let mut g = cycle_graph(3);
        let v = g.add_vertex();
        g.add_edge(0, v);
        let spec = ForbiddenCycleSpec::powers_of_two();

        let brute = safe_sets_brute_force(&g, &spec, None);
        assert_eq!(brute, BTreeSet::from([0u64]));

        let got: Vec<SafeSet> = enumerate_safe_sets(&g, &spec, None).collect();
        assert_eq!(got, vec![SafeSet::empty()]);
    }

    #[test]
    fn safe_sets_single_edge_with_attached_vertex() {
        // edge 0-1 plus vertex 2 adjacent to 1: {0} closes only a triangle,
        // which is allowed
        let mut g = Graph::new_path(2);
        let v = g.add_vertex();
        g.add_edge(1, v);
        let spec = ForbiddenCycleSpec::powers_of_two();

        let brute = safe_sets_brute_force(&g, &spec, None);
        let got: BTreeSet<u64> = enumerate_safe_sets(&g, &spec, None).map(|s| s.mask()).collect();
        assert_eq!(got, brute);
        assert_eq!(
            got,
            BTreeSet::from([0u64, SafeSet::from_vertices([0]).mask()])
        );
    }

    #[test]
    fn safe_sets_cap_saturated_yields_only_empty() {
        // newest vertex already has degree 3 under cap 3
        let mut g = Graph::with_vertices(5);
        let v = 4;
        g.add_edge(0, v);
        g.add_edge(1, v);
        g.add_edge(2, v);
        let spec = ForbiddenCycleSpec::powers_of_two();
        let got: Vec<SafeSet> = enumerate_safe_sets(&g, &spec, Some(3)).collect();
        assert_eq!(got, vec![SafeSet::empty()]);
    }

    #[test]
    fn safe_sets_empty_set_first_and_unique() {
        let mut rng = StdRng::seed_from_u64(0xE6_2005);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let g = random_graph(&mut rng, n, 0.3);
            let spec = ForbiddenCycleSpec::powers_of_two();
            let sets: Vec<SafeSet> = enumerate_safe_sets(&g, &spec, None).collect();
            assert_eq!(sets[0], SafeSet::empty());
            let uniq: BTreeSet<u64> = sets.iter().map(|s| s.mask()).collect();
            assert_eq!(uniq.len(), sets.len(), "duplicate safe sets emitted");
        }
    }

    #[test]
    fn safe_sets_match_brute_force() {
        let mut rng = StdRng::seed_from_u64(0xE6_2006);
        let specs = [
            ForbiddenCycleSpec::powers_of_two(),
            ForbiddenCycleSpec::explicit([4, 8]),
            ForbiddenCycleSpec::explicit([4]),
        ];
        for round in 0..60 {
            let n = rng.gen_range(2..=9);
            let g = random_graph(&mut rng, n, 0.3);
            let spec = &specs[round % specs.len()];
            // the enumerator's precondition: no forbidden cycle in g
            if oracle::all_cycle_lengths(&g).intersects(spec) {
                continue;
            }
            // run both capped and uncapped
            let cap = if round % 2 == 0 { None } else { Some(3) };
            if cap == Some(3) && g.degree(g.n() - 1) > 3 {
                continue;
            }
            let brute = safe_sets_brute_force(&g, spec, cap);
            let got: BTreeSet<u64> = enumerate_safe_sets(&g, spec, cap).map(|s| s.mask()).collect();
            assert_eq!(got, brute, "graph {g:?} spec {spec} cap {cap:?}");
        }
    }

    #[test]
    fn no_safe_set_has_an_unsafe_subset() {
        // equivalent form of monotone pruning validity: the brute-forced safe
        // family is downward closed
        let mut rng = StdRng::seed_from_u64(0xE6_2007);
        let spec = ForbiddenCycleSpec::powers_of_two();
        for _ in 0..30 {
            let n = rng.gen_range(3..=8);
            let g = random_graph(&mut rng, n, 0.3);
            if oracle::all_cycle_lengths(&g).intersects(&spec) {
                continue;
            }
            let safe = safe_sets_brute_force(&g, &spec, None);
            for &s in &safe {
                let mut sub = s;
                loop {
                    assert!(safe.contains(&sub), "subset {sub:b} of safe {s:b} is unsafe");
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & s;
                }
            }
        }
    }
}
