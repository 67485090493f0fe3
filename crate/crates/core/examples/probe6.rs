use std::time::Instant;
use hypercycle::counting::labeled_copy_count;
use hypercycle::constructions::linear_cycle;
use hypercycle::supersat::{greedy_expand_cycles, ExpandMode};
use hypercycle::{Hypergraph, RngSeed};

fn complete_partite(r: usize, s: usize) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = vec![vec![]];
    for c in 0..r {
        edges = edges
            .into_iter()
            .flat_map(|e| (0..s).map(move |v| { let mut e2 = e.clone(); e2.push(c * s + v); e2 }).collect::<Vec<_>>())
            .collect();
    }
    Hypergraph::new(r, r * s, edges).unwrap()
}

fn main() {
    for (r, s) in [(3usize, 4usize), (3, 5), (4, 4)] {
        let host = complete_partite(r, s);
        let closed = greedy_expand_cycles(&host, 2, 2, 0, RngSeed(1), ExpandMode::Exhaustive).unwrap();
        let t = Instant::now();
        let copies = labeled_copy_count(&linear_cycle(r, 5).unwrap(), &host).unwrap().value;
        println!("r={r} s={s}: closed={} labeled={} equal={} ({:?})", closed.count, copies, closed.count == copies, t.elapsed());
    }
}
