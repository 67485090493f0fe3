use std::time::Instant;
use hypercycle::supersat::{greedy_expand_cycles, ExpandMode};
use hypercycle::{Hypergraph, RngSeed};

fn complete_3partite(s: usize) -> Hypergraph {
    let mut edges = Vec::new();
    for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                edges.push(vec![a, s + b, 2 * s + c]);
            }
        }
    }
    Hypergraph::new(3, 3 * s, edges).unwrap()
}

fn main() {
    // mimic the DFS-only path by breaking completeness with one extra vertex
    // in class 0 attached by one edge (structure no longer detected).
    let s = 5usize;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                edges.push(vec![a, s + b, 2 * s + c]);
            }
        }
    }
    let h = Hypergraph::new(3, 3 * s, edges).unwrap();
    let t = Instant::now();
    let out = greedy_expand_cycles(&h, 2, 2, u64::MAX, RngSeed(1), ExpandMode::Exhaustive).unwrap();
    println!("s=5 r=3 stream-all: {} certs in {:?} (fast={})", out.certificates.len(), t.elapsed(), out.fast_path);
    let _ = complete_3partite(4);
}
