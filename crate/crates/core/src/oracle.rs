//! Slow, obviously-correct reference implementations: exhaustive cycle
//! enumeration, longest induced path, counterexample checking, and a small
//! isomorphism test. These are the trust anchor for the fast detectors and
//! for validating any certificate the search emits. Intended for n up to
//! roughly 26; callers bound the input size.

use crate::detect::ForbiddenCycleSpec;
use crate::graph::{bits, Graph};
use std::collections::{BTreeMap, BTreeSet};

/// The set of lengths ℓ for which the graph has a simple cycle of length
/// exactly ℓ, with one witness cycle retained per length.
#[derive(Clone, Debug)]
pub struct CycleSpectrum {
    lengths: BTreeSet<usize>,
    witnesses: BTreeMap<usize, Vec<usize>>,
}

impl CycleSpectrum {
    pub fn lengths(&self) -> &BTreeSet<usize> {
        &self.lengths
    }

    pub fn contains(&self, len: usize) -> bool {
        self.lengths.contains(&len)
    }

    /// A vertex sequence witnessing a cycle of the given length.
    pub fn witness(&self, len: usize) -> Option<&[usize]> {
        self.witnesses.get(&len).map(|w| w.as_slice())
    }

    /// True iff some forbidden length occurs in the spectrum.
    pub fn intersects(&self, spec: &ForbiddenCycleSpec) -> bool {
        self.lengths.iter().any(|&l| spec.is_forbidden(l))
    }
}

/// Exact cycle-length spectrum by canonical-rooted simple-cycle enumeration:
/// each cycle is visited exactly once, rooted at its minimum vertex with the
/// second vertex smaller than the last.
pub fn all_cycle_lengths(g: &Graph) -> CycleSpectrum {
    let mut spectrum = CycleSpectrum {
        lengths: BTreeSet::new(),
        witnesses: BTreeMap::new(),
    };
    enumerate_cycles(g, &mut |cycle| {
        let len = cycle.len();
        if spectrum.lengths.insert(len) {
            spectrum.witnesses.insert(len, cycle.to_vec());
        }
        true
    });
    spectrum
}

/// Every simple cycle, each reported once as a vertex sequence starting at its
/// minimum vertex. Exponential; oracle scale only.
pub fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    enumerate_cycles(g, &mut |cycle| {
        out.push(cycle.to_vec());
        true
    });
    out
}

/// Cycle lengths restricted to cycles passing through `v`.
pub fn cycle_lengths_through(g: &Graph, v: usize) -> BTreeSet<usize> {
    let mut lengths = BTreeSet::new();
    enumerate_cycles(g, &mut |cycle| {
        if cycle.contains(&v) {
            lengths.insert(cycle.len());
        }
        true
    });
    lengths
}

/// Calls `visit` for each simple cycle (canonical form: rooted at the minimum
/// vertex, second vertex smaller than last). `visit` returns false to stop.
fn enumerate_cycles(g: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    for root in 0..n {
        path.clear();
        path.push(root);
        // only vertices above the root may appear after it
        let above = !((1u64 << root) | ((1u64 << root) - 1));
        let allowed = g.vertex_mask() & above;
        if !cycle_dfs(g, root, allowed & g.neighbors(root), allowed, &mut path, visit) {
            return false;
        }
    }
    true
}

fn cycle_dfs(
    g: &Graph,
    root: usize,
    candidates: u64,
    unvisited: u64,
    path: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    for v in bits(candidates) {
        path.push(v);
        if path.len() >= 3 && g.has_edge(v, root) && path[1] < v {
            if !visit(path) {
                path.pop();
                return false;
            }
        }
        let remaining = unvisited & !(1u64 << v);
        if !cycle_dfs(g, root, g.neighbors(v) & remaining, remaining, path, visit) {
            path.pop();
            return false;
        }
        path.pop();
    }
    true
}

/// The maximum k such that the graph has an induced path on k vertices.
/// Exhaustive DFS over induced paths; oracle scale only.
pub fn longest_induced_path(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0usize;
    for start in 0..n {
        lip_dfs(g, start, 1u64 << start, 1, &mut best);
    }
    best
}

fn lip_dfs(g: &Graph, end: usize, banned: u64, len: usize, best: &mut usize) {
    if len > *best {
        *best = len;
    }
    // extensions must be adjacent to the end and non-adjacent to (and distinct
    // from) every earlier vertex; `banned` is the path plus the closed
    // neighborhoods of all vertices before the end
    let next_banned = banned | g.neighbors(end) | (1u64 << end);
    for w in bits(g.neighbors(end) & !banned) {
        lip_dfs(g, w, next_banned, len + 1, best);
    }
}

/// True iff `g` is counterexample-shaped for the given regime: minimum degree
/// at least 3, no induced path on k vertices, and no cycle of forbidden length.
pub fn is_counterexample(g: &Graph, k: usize, spec: &ForbiddenCycleSpec) -> bool {
    if g.min_degree().map_or(true, |d| d < 3) {
        return false;
    }
    if longest_induced_path(g) >= k {
        return false;
    }
    !all_cycle_lengths(g).intersects(spec)
}

/// Exact isomorphism test by backtracking over vertex maps, pruned by degree
/// and neighbor-degree invariants. Candidate sets here are tiny (a handful of
/// graphs around 24 vertices), so no canonical labeling is attempted.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }

    let inv_a: Vec<(usize, Vec<usize>)> = (0..n).map(|v| vertex_invariant(a, v)).collect();
    let inv_b: Vec<(usize, Vec<usize>)> = (0..n).map(|v| vertex_invariant(b, v)).collect();
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return false;
    }

    // map vertices of `a` in an order that keeps each new vertex adjacent to
    // an already-mapped one where possible, for early pruning
    let order = connected_order(a);
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    map_next(a, b, &inv_a, &inv_b, &order, 0, &mut map, &mut used)
}

/// Groups graphs into isomorphism classes, returning the index sets. An
/// exact-duplicate pass (by fingerprint) runs first so repeated labelings of
/// the same graph cost one hash lookup instead of an isomorphism test.
pub fn isomorphism_classes(graphs: &[Graph]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_fingerprint: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for (i, g) in graphs.iter().enumerate() {
        if let Some(&class) = by_fingerprint.get(&g.fingerprint()) {
            classes[class].push(i);
            continue;
        }
        let found = classes
            .iter()
            .position(|c| are_isomorphic(&graphs[c[0]], g));
        let class = match found {
            Some(c) => c,
            None => {
                classes.push(Vec::new());
                classes.len() - 1
            }
        };
        classes[class].push(i);
        by_fingerprint.insert(g.fingerprint(), class);
    }
    classes
}

fn vertex_invariant(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nbr_degs: Vec<usize> = bits(g.neighbors(v)).map(|u| g.degree(u)).collect();
    nbr_degs.sort_unstable();
    (g.degree(v), nbr_degs)
}

fn connected_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = 0u64;
    for start in 0..n {
        if seen & (1u64 << start) != 0 {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        seen |= 1u64 << start;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in bits(g.neighbors(v) & !seen) {
                seen |= 1u64 << w;
                queue.push_back(w);
            }
        }
    }
    order
}

fn map_next(
    a: &Graph,
    b: &Graph,
    inv_a: &[(usize, Vec<usize>)],
    inv_b: &[(usize, Vec<usize>)],
    order: &[usize],
    pos: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    for w in 0..b.n() {
        if *used & (1u64 << w) != 0 || inv_a[v] != inv_b[w] {
            continue;
        }
        let consistent = order[..pos]
            .iter()
            .all(|&u| a.has_edge(v, u) == b.has_edge(w, map[u]));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1u64 << w;
        if map_next(a, b, inv_a, inv_b, order, pos + 1, map, used) {
            return true;
        }
        *used &= !(1u64 << w);
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

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

    fn petersen() -> Graph {
        // outer C5 on 0..5, inner pentagram on 5..10, spokes i -- i+5
        let mut g = Graph::with_vertices(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
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
    fn spectrum_of_c6_is_6() {
        let s = all_cycle_lengths(&cycle_graph(6));
        assert_eq!(s.lengths().iter().copied().collect::<Vec<_>>(), vec![6]);
        assert_eq!(s.witness(6).unwrap().len(), 6);
    }

    #[test]
    fn spectrum_of_k4_is_3_4() {
        let s = all_cycle_lengths(&complete_graph(4));
        assert_eq!(s.lengths().iter().copied().collect::<Vec<_>>(), vec![3, 4]);
    }

    #[test]
    fn petersen_spectrum_is_5_6_8_9() {
        let s = all_cycle_lengths(&petersen());
        assert_eq!(
            s.lengths().iter().copied().collect::<Vec<_>>(),
            vec![5, 6, 8, 9]
        );
    }

    #[test]
    fn cycle_witnesses_are_valid_cycles() {
        let mut rng = StdRng::seed_from_u64(0xE6_1001);
        for _ in 0..30 {
            let n = rng.gen_range(3..10);
            let g = random_graph(&mut rng, n, 0.4);
            let s = all_cycle_lengths(&g);
            for &len in s.lengths() {
                let w = s.witness(len).unwrap();
                assert_eq!(w.len(), len);
                for i in 0..len {
                    assert!(g.has_edge(w[i], w[(i + 1) % len]));
                }
                let distinct: BTreeSet<_> = w.iter().collect();
                assert_eq!(distinct.len(), len);
            }
        }
    }

    /// Independent second method: cycles(G) = cycles(G - e) ∪ {cycles through e},
    /// where cycles through e = (u,v) are the simple u→v paths of G - e closed
    /// by e.
    fn spectrum_by_edge_deletion(g: &Graph) -> BTreeSet<usize> {
        fn paths_between(g: &Graph, from: usize, to: usize, visited: u64, len: usize, out: &mut BTreeSet<usize>) {
            for w in bits(g.neighbors(from) & !visited) {
                if w == to {
                    if len + 1 >= 3 {
                        out.insert(len + 1);
                    }
                    continue;
                }
                paths_between(g, w, to, visited | (1u64 << w), len + 1, out);
            }
        }
        let mut g = g.clone();
        let mut lengths = BTreeSet::new();
        while let Some(&(u, v)) = g.edges().first() {
            g.remove_edge(u, v);
            paths_between(&g, u, v, 1u64 << u, 1, &mut lengths);
        }
        lengths
    }

    #[test]
    fn two_methods_agree_on_random_graphs() {
        let mut rng = StdRng::seed_from_u64(0xE6_1002);
        for _ in 0..60 {
            let n = rng.gen_range(3..=10);
            let g = random_graph(&mut rng, n, 0.35);
            let a: BTreeSet<usize> = all_cycle_lengths(&g).lengths().clone();
            let b = spectrum_by_edge_deletion(&g);
            assert_eq!(a, b, "spectra disagree on {g:?}");
        }
    }

    #[test]
    fn longest_induced_path_examples() {
        assert_eq!(longest_induced_path(&Graph::new_path(9)), 9);
        assert_eq!(longest_induced_path(&cycle_graph(5)), 4);
        assert_eq!(longest_induced_path(&complete_graph(4)), 2);
    }

    #[test]
    fn k4_is_not_a_counterexample() {
        let k4 = complete_graph(4);
        assert!(!is_counterexample(&k4, 5, &ForbiddenCycleSpec::powers_of_two()));
    }

    #[test]
    fn petersen_is_not_a_counterexample() {
        // Petersen has an 8-cycle, so the powers-of-two regime rejects it for
        // every k.
        let p = petersen();
        for k in 7..=12 {
            assert!(!is_counterexample(&p, k, &ForbiddenCycleSpec::powers_of_two()));
        }
    }

    #[test]
    fn is_counterexample_is_antitone_in_k() {
        let mut rng = StdRng::seed_from_u64(0xE6_1003);
        let spec = ForbiddenCycleSpec::powers_of_two();
        for _ in 0..80 {
            let n = rng.gen_range(3..9);
            let g = random_graph(&mut rng, n, 0.5);
            let mut prev = false;
            for k in 3..=n + 1 {
                let cur = is_counterexample(&g, k, &spec);
                assert!(!prev || cur, "verdict flipped true->false as k grew");
                prev = cur;
            }
        }
    }

    #[test]
    fn isomorphic_under_random_relabeling() {
        let mut rng = StdRng::seed_from_u64(0xE6_1004);
        for _ in 0..40 {
            let n = rng.gen_range(1..12);
            let g = random_graph(&mut rng, n, 0.4);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let mut h = Graph::with_vertices(n);
            for (i, j) in g.edges() {
                h.add_edge(perm[i], perm[j]);
            }
            assert!(are_isomorphic(&g, &h));
            assert!(are_isomorphic(&h, &g));
        }
    }

    #[test]
    fn c6_vs_two_triangles() {
        // same degree sequence, different cycle spectra
        let c6 = cycle_graph(6);
        let mut tt = Graph::with_vertices(6);
        for base in [0, 3] {
            tt.add_edge(base, base + 1);
            tt.add_edge(base + 1, base + 2);
            tt.add_edge(base, base + 2);
        }
        assert!(!are_isomorphic(&c6, &tt));
    }

    #[test]
    fn isomorphism_transitivity_spot_check() {
        let mut rng = StdRng::seed_from_u64(0xE6_1005);
        for _ in 0..20 {
            let n = rng.gen_range(2..10);
            let g = random_graph(&mut rng, n, 0.45);
            let relabel = |g: &Graph, rng: &mut StdRng| {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(rng);
                let mut h = Graph::with_vertices(n);
                for (i, j) in g.edges() {
                    h.add_edge(perm[i], perm[j]);
                }
                h
            };
            let a = relabel(&g, &mut rng);
            let b = relabel(&g, &mut rng);
            assert!(are_isomorphic(&g, &a) && are_isomorphic(&a, &b) && are_isomorphic(&g, &b));
        }
    }

    #[test]
    fn non_isomorphic_same_degrees_detected() {
        let mut rng = StdRng::seed_from_u64(0xE6_1006);
        // C8 vs two disjoint C4: same degree sequence
        let c8 = cycle_graph(8);
        let mut cc = Graph::with_vertices(8);
        for base in [0, 4] {
            for i in 0..4 {
                let a = base + i;
                let b = base + (i + 1) % 4;
                if !cc.has_edge(a.min(b), a.max(b)) {
                    cc.add_edge(a.min(b), a.max(b));
                }
            }
        }
        assert!(!are_isomorphic(&c8, &cc));
        let _ = &mut rng;
    }
}
