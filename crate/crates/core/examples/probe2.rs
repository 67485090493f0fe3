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
    for s in [4usize, 5, 6] {
        let h = complete_4partite(s);
        let t = Instant::now();
        let out = greedy_expand_cycles(&h, 2, 2, 0, RngSeed(1), ExpandMode::Exhaustive).unwrap();
        println!("s={s}: closed count = {} ({:?})", out.count, t.elapsed());
    }
    let h = complete_4partite(6);
    let t = Instant::now();
    let out = greedy_expand_cycles(&h, 6, 2, 20, RngSeed(3), ExpandMode::Exhaustive).unwrap();
    println!("stream20 s=6: {} certs in {:?}", out.certificates.len(), t.elapsed());
}
