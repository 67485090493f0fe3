use std::time::Instant;
use hypercycle::supersat::{greedy_expand_cycles, ExpandMode};
use hypercycle::{Hypergraph, RngSeed};

fn main() {
    let s = 4usize;
    let mut edges = Vec::new();
    for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                for d in 0..s {
                    edges.push(vec![a, s + b, 2 * s + c, 3 * s + d]);
                }
            }
        }
    }
    // break detection so the DFS does the counting
    let h = Hypergraph::new(4, 4 * s + 1, edges).unwrap();
    let t = Instant::now();
    let out = greedy_expand_cycles(&h, 2, 2, 16, RngSeed(1), ExpandMode::Exhaustive).unwrap();
    println!("fast={} count_exact={} count={} in {:?}", out.fast_path, out.count_is_exact, out.count, t.elapsed());
}
