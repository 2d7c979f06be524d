use egc_core::{io, oracle};
use std::time::Instant;
fn main() {
    let g = io::markstrom_fixture();
    let t = Instant::now();
    let s = oracle::all_cycle_lengths(&g);
    println!("spectrum {:?} in {:?}", s.lengths(), t.elapsed());
    let t = Instant::now();
    let lip = oracle::longest_induced_path(&g);
    println!("lip {lip} in {:?}", t.elapsed());
    let t = Instant::now();
    let cx = oracle::is_counterexample(&g, 18, &egc_core::ForbiddenCycleSpec::explicit([4, 8]));
    println!("is_counterexample {cx} in {:?}", t.elapsed());
}
