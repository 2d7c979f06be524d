use egc_core::explore::{special_search, SearchConfig};
use egc_core::{oracle, ForbiddenCycleSpec};
fn main() {
    let budget: usize = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(20);
    let k: usize = std::env::args().nth(2).map(|s| s.parse().unwrap()).unwrap_or(18);
    let mut cfg = SearchConfig::new(k, ForbiddenCycleSpec::explicit([4, 8]));
    cfg.degree_cap = Some(3);
    cfg.max_vertices = Some(budget);
    let out = special_search(&cfg).unwrap();
    println!(
        "budget={budget} k={k} kind={:?} certs={} nodes={} sets={} max_depth={} wall={:?}",
        out.kind, out.certificates.len(), out.stats.nodes_expanded,
        out.stats.safe_sets, out.stats.max_depth, out.wall
    );
    // group by order and isomorphism
    let mut reps: Vec<&egc_core::Graph> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut distinct = Vec::new();
    for c in &out.certificates {
        if seen.insert(c.graph().fingerprint()) {
            distinct.push(c.graph());
        }
    }
    println!("exact-distinct={}", distinct.len());
    for g in distinct {
        if !reps.iter().any(|r| oracle::are_isomorphic(r, g)) {
            reps.push(g);
        }
    }
    let mut by_order = std::collections::BTreeMap::<usize, usize>::new();
    for r in &reps {
        *by_order.entry(r.n()).or_default() += 1;
    }
    println!("iso-classes by order: {by_order:?}");
    for r in &reps {
        let s = oracle::all_cycle_lengths(r);
        println!(
            "  order={} has16={} spectrum={:?}",
            r.n(), s.contains(16),
            s.lengths().iter().copied().collect::<Vec<_>>()
        );
    }
}
