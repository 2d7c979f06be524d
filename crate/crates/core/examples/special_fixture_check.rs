use egc_core::explore::{special_search, SearchConfig};
use egc_core::{io, oracle, ForbiddenCycleSpec};
fn main() {
    let mut cfg = SearchConfig::new(18, ForbiddenCycleSpec::explicit([4, 8]));
    cfg.degree_cap = Some(3);
    cfg.max_vertices = Some(24);
    let out = special_search(&cfg).unwrap();
    let mut reps: Vec<&egc_core::Graph> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for c in &out.certificates {
        if seen.insert(c.graph().fingerprint()) && !reps.iter().any(|r| oracle::are_isomorphic(r, c.graph())) {
            reps.push(c.graph());
        }
    }
    let fixture = io::markstrom_fixture();
    let matches: Vec<bool> = reps.iter().map(|r| oracle::are_isomorphic(r, &fixture)).collect();
    println!("classes={} fixture_matches={:?}", reps.len(), matches);
    println!("longest induced paths: {:?}", reps.iter().map(|r| oracle::longest_induced_path(r)).collect::<Vec<_>>());
    for r in &reps {
        println!("g6: {}", io::emit_graph6(r).unwrap());
    }
}
