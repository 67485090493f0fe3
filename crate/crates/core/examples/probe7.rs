use std::time::Instant;
use hypercycle::counting::labeled_copy_count;
use hypercycle::constructions::linear_cycle;
use hypercycle::Hypergraph;

fn main() {
    let s = 4usize;
    let mut edges = Vec::new();
    for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                edges.push(vec![a, s + b, 2 * s + c]);
            }
        }
    }
    let host = Hypergraph::new(3, 3 * s, edges).unwrap();
    eprintln!("host built");
    let t = Instant::now();
    let copies = labeled_copy_count(&linear_cycle(3, 5).unwrap(), &host).unwrap().value;
    eprintln!("labeled(C35, K444) = {copies} in {:?}", t.elapsed());
}
