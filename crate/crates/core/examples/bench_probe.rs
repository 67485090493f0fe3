use std::time::Instant;

use hypercycle::constructions::{blow_up, linear_cycle, steiner_triple_9};
use hypercycle::counting::labeled_copy_count;
use hypercycle::supersat::{greedy_expand_cycles, ExpandMode};
use hypercycle::RngSeed;

fn main() {
    let f = linear_cycle(3, 3).unwrap();
    let h7 = blow_up(&steiner_triple_9(), 7).unwrap();
    let t0 = Instant::now();
    let copies = labeled_copy_count(&f, &h7).unwrap();
    println!("labeled(C33, STS9[7]) = {} in {:?}", copies.value, t0.elapsed());

    let h9 = blow_up(&steiner_triple_9(), 9).unwrap();
    let t0 = Instant::now();
    let copies = labeled_copy_count(&f, &h9).unwrap();
    println!("labeled(C33, STS9[9]) = {} in {:?}", copies.value, t0.elapsed());

    // criterion 7 shape: complete 3-partite s=26, fast-path count + stream 1000
    let s = 26usize;
    let mut edges = Vec::new();
    for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                edges.push(vec![a, s + b, 2 * s + c]);
            }
        }
    }
    let host = hypercycle::Hypergraph::new(3, 3 * s, edges).unwrap();
    let t0 = Instant::now();
    let out = greedy_expand_cycles(&host, s as u64, 2, 1000, RngSeed(5), ExpandMode::Sample).unwrap();
    println!(
        "greedy s=26: count={} exact={} fast={} certs={} in {:?}",
        out.count, out.count_is_exact, out.fast_path, out.certificates.len(), t0.elapsed()
    );
}
