use std::time::Instant;
use hypercycle::supersat::{greedy_expand_cycles, ExpandMode};
use hypercycle::{Hypergraph, RngSeed};

fn complete_4partite(s: usize) -> Hypergraph {
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
    Hypergraph::new(4, 4 * s, edges).unwrap()
}

fn main() {
    // stream everything at s=4 with a huge budget: leaves = 7.96M
    let h = complete_4partite(4);
    let t = Instant::now();
    let out = greedy_expand_cycles(&h, 2, 2, 50, RngSeed(1), ExpandMode::Exhaustive).unwrap();
    println!("stream50 s=4: {} certs, count {} exact {} in {:?}", out.certificates.len(), out.count, out.count_is_exact, t.elapsed());
}
