use egc_core::*;
fn main() {
    let args: Vec<String> = std::env::args().collect();
    let lo: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(3);
    let hi: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(9);
    let spec = match args.get(3).map(|s| s.as_str()) {
        Some("48") => ForbiddenCycleSpec::explicit([4, 8]),
        _ => ForbiddenCycleSpec::powers_of_two(),
    };
    for k in lo..=hi {
        let cfg = SearchConfig::new(k, spec.clone());
        let out = run_verification(k, &cfg).unwrap();
        println!("k={k} kind={:?} nodes={} sets={} max_depth={} max_n={} wall={:?}",
            out.kind, out.stats.nodes_expanded, out.stats.safe_sets, out.stats.max_depth,
            k + out.stats.max_depth, out.wall);
    }
}
