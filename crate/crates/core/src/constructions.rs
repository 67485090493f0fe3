//! Builders for the hypergraph families the library manipulates: named
//! small graphs, blow-ups, tensor products, seeded random models, vertex
//! percolation, and a random-greedy high-girth generator.
//!
//! Everything is a pure function of its inputs and seed: identical seed and
//! parameters produce identical output.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::counting::berge_girth;
use crate::hypergraph::{Hypergraph, HypergraphError};

/// Seed for reproducible randomized constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub(crate) fn rng(self) -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(self.0)
    }
}

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("uniformity must be at least {min}, got {got}")]
    UniformityTooSmall { min: usize, got: usize },
    #[error("length must be at least {min}, got {got}")]
    LengthTooSmall { min: usize, got: usize },
    #[error("blow-up factor must be at least 1")]
    BlowUpFactor,
    #[error("tensor factors have different uniformities: {0} and {1}")]
    TensorMismatch(usize, usize),
    #[error("requested {m} edges but only {max} distinct edges exist")]
    TooManyEdges { m: u64, max: BigUint },
    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("girth floor must be at least 2, got {0}")]
    GirthFloor(usize),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// `K_r^r`: the r-graph consisting of a single edge.
pub fn single_edge(r: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 2 {
        return Err(ConstructionError::UniformityTooSmall { min: 2, got: r });
    }
    Ok(Hypergraph::new(r, r, vec![(0..r).collect()])?)
}

/// The linear cycle `C^r_L`: `L` edges on `(r-1)L` vertices, edge `i` being
/// `{v_{(r-1)(i-1)}, …, v_{(r-1)i}}` with indices modulo `(r-1)L`.
pub fn linear_cycle(r: usize, l: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::UniformityTooSmall { min: 3, got: r });
    }
    if l < 2 {
        return Err(ConstructionError::LengthTooSmall { min: 2, got: l });
    }
    let n = (r - 1) * l;
    let edges = (0..l)
        .map(|i| ((r - 1) * i..=(r - 1) * (i + 1)).map(|v| v % n).collect())
        .collect::<Vec<Vec<usize>>>();
    Ok(Hypergraph::new(r, n, edges)?)
}

/// The linear path with `L` edges on `(r-1)L + 1` vertices.
pub fn linear_path(r: usize, l: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 2 {
        return Err(ConstructionError::UniformityTooSmall { min: 2, got: r });
    }
    if l < 1 {
        return Err(ConstructionError::LengthTooSmall { min: 1, got: l });
    }
    let n = (r - 1) * l + 1;
    let edges = (0..l)
        .map(|i| ((r - 1) * i..=(r - 1) * (i + 1)).collect())
        .collect::<Vec<Vec<usize>>>();
    Ok(Hypergraph::new(r, n, edges)?)
}

/// The t-blow-up `H[t]` on `V(H) × [t]`: vertex `(v, c)` becomes `v·t + c`,
/// and every edge inherits across all `t^r` clone choices, enumerated
/// lexicographically. `e(H[t]) = e(H)·t^r` exactly.
pub fn blow_up(h: &Hypergraph, t: usize) -> Result<Hypergraph, ConstructionError> {
    if t < 1 {
        return Err(ConstructionError::BlowUpFactor);
    }
    let r = h.uniformity();
    let mut edges = Vec::with_capacity(h.edge_count() * t.pow(r as u32));
    let mut copies = vec![0usize; r];
    for e in h.edges() {
        loop {
            edges.push(e.iter().zip(&copies).map(|(&v, &c)| v * t + c).collect());
            // odometer over copy indices
            let mut i = r;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                copies[i] += 1;
                if copies[i] < t {
                    break;
                }
                copies[i] = 0;
            }
            if copies.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(Hypergraph::new(r, h.vertex_count() * t, edges)?)
}

/// Tensor product on `V(H1) × V(H2)`: one edge per bijection between an
/// edge of `H1` and an edge of `H2`, so `e = r!·e(H1)·e(H2)` under set
/// semantics. Vertex `(x, y)` becomes `x·v(H2) + y`.
pub fn tensor_product(h1: &Hypergraph, h2: &Hypergraph) -> Result<Hypergraph, ConstructionError> {
    let r = h1.uniformity();
    if r != h2.uniformity() {
        return Err(ConstructionError::TensorMismatch(r, h2.uniformity()));
    }
    let n2 = h2.vertex_count();
    let mut edges = Vec::new();
    for e1 in h1.edges() {
        for e2 in h2.edges() {
            let mut perm: Vec<usize> = (0..r).collect();
            permutohedron_heap(&mut perm, &mut |p| {
                edges.push(e1.iter().enumerate().map(|(i, &x)| x * n2 + e2[p[i]]).collect());
            });
        }
    }
    Ok(Hypergraph::new(r, h1.vertex_count() * n2, edges)?)
}

/// Heap's algorithm; calls `f` once per permutation of `items`.
fn permutohedron_heap(items: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let k = items.len();
    let mut c = vec![0usize; k];
    f(items);
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// Exactly `m` distinct edges drawn uniformly without replacement,
/// deterministic per seed. Small spaces are enumerated and partially
/// shuffled; large ones are rejection-sampled.
pub fn random_uniform(
    n: usize,
    r: usize,
    m: u64,
    seed: RngSeed,
) -> Result<Hypergraph, ConstructionError> {
    if r < 2 {
        return Err(ConstructionError::UniformityTooSmall { min: 2, got: r });
    }
    let total = binomial(n, r);
    if BigUint::from(m) > total {
        return Err(ConstructionError::TooManyEdges { m, max: total });
    }
    let mut rng = seed.rng();
    let m = m as usize;
    let enumerable = total <= BigUint::from(1_000_000u64);
    let edges: Vec<Vec<usize>> = if enumerable {
        let mut all: Vec<Vec<usize>> = Vec::new();
        let mut subset = Vec::with_capacity(r);
        enumerate_k_subsets(n, r, 0, &mut subset, &mut |s| all.push(s.to_vec()));
        // partial Fisher-Yates: the first m entries are a uniform sample
        for i in 0..m {
            let j = rng.random_range(i..all.len());
            all.swap(i, j);
        }
        all.truncate(m);
        all
    } else {
        let mut chosen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
        while chosen.len() < m {
            let mut edge = Vec::with_capacity(r);
            while edge.len() < r {
                let v = rng.random_range(0..n);
                if !edge.contains(&v) {
                    edge.push(v);
                }
            }
            edge.sort_unstable();
            chosen.insert(edge);
        }
        chosen.into_iter().collect()
    };
    Ok(Hypergraph::new(r, n, edges)?)
}

fn enumerate_k_subsets(
    n: usize,
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if acc.len() == k {
        f(acc);
        return;
    }
    let need = k - acc.len();
    for v in start..=(n.saturating_sub(need)) {
        acc.push(v);
        enumerate_k_subsets(n, k, v + 1, acc, f);
        acc.pop();
    }
}

/// Outcome of keeping each vertex independently with probability `p`.
#[derive(Debug, Clone)]
pub struct Percolation {
    pub graph: Hypergraph,
    /// Original labels of the surviving vertices, ascending.
    pub kept: Vec<usize>,
    pub kept_count: usize,
    pub surviving_edges: usize,
}

pub fn percolate_vertices(
    h: &Hypergraph,
    p: f64,
    seed: RngSeed,
) -> Result<Percolation, ConstructionError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(ConstructionError::BadProbability(p));
    }
    let mut rng = seed.rng();
    let keep: Vec<usize> = (0..h.vertex_count()).filter(|_| rng.random_bool(p)).collect();
    let (graph, kept) = h.induced_subgraph(&keep);
    Ok(Percolation {
        surviving_edges: graph.edge_count(),
        kept_count: kept.len(),
        kept,
        graph,
    })
}

/// Random greedy generator: candidate edges are drawn uniformly and accepted
/// iff they close no Berge cycle of length < `g_min`. The output girth is
/// re-verified before returning.
pub fn greedy_high_girth(
    n: usize,
    r: usize,
    g_min: usize,
    attempts: u64,
    seed: RngSeed,
) -> Result<Hypergraph, ConstructionError> {
    if r < 2 {
        return Err(ConstructionError::UniformityTooSmall { min: 2, got: r });
    }
    if g_min < 2 {
        return Err(ConstructionError::GirthFloor(g_min));
    }
    if n < r {
        return Ok(Hypergraph::empty(r, n)?);
    }
    let mut rng = seed.rng();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); n];
    for _ in 0..attempts {
        let mut candidate = Vec::with_capacity(r);
        while candidate.len() < r {
            let v = rng.random_range(0..n);
            if !candidate.contains(&v) {
                candidate.push(v);
            }
        }
        candidate.sort_unstable();
        if edges.contains(&candidate) {
            continue;
        }
        if creates_short_cycle(&edges, &incidence, &candidate, g_min) {
            continue;
        }
        let id = edges.len();
        for &v in &candidate {
            incidence[v].push(id);
        }
        edges.push(candidate);
    }
    let h = Hypergraph::new(r, n, edges)?;
    let girth = berge_girth(&h).girth;
    debug_assert!(girth.is_none_or(|g| g >= g_min));
    Ok(h)
}

/// Would adding `candidate` to the current edge set create a Berge cycle of
/// length < `g_min`? A new cycle must use the candidate exactly once, so it
/// suffices to look for a Berge path of length ≤ `g_min - 2` between two
/// candidate vertices that avoids the candidate itself.
fn creates_short_cycle(
    edges: &[Vec<usize>],
    incidence: &[Vec<usize>],
    candidate: &[usize],
    g_min: usize,
) -> bool {
    if g_min <= 2 {
        return false;
    }
    let max_path_edges = g_min - 2;
    for i in 0..candidate.len() {
        for j in (i + 1)..candidate.len() {
            if berge_path_exists(
                edges,
                incidence,
                candidate[i],
                candidate[j],
                max_path_edges,
                &mut vec![candidate[i]],
                &mut Vec::new(),
            ) {
                return true;
            }
        }
    }
    false
}

fn berge_path_exists(
    edges: &[Vec<usize>],
    incidence: &[Vec<usize>],
    from: usize,
    target: usize,
    budget: usize,
    path_vertices: &mut Vec<usize>,
    path_edges: &mut Vec<usize>,
) -> bool {
    if budget == 0 {
        return false;
    }
    for &id in &incidence[from] {
        if path_edges.contains(&id) {
            continue;
        }
        if edges[id].contains(&target) {
            return true;
        }
        for &next in &edges[id] {
            if next == from || path_vertices.contains(&next) {
                continue;
            }
            path_vertices.push(next);
            path_edges.push(id);
            let found = berge_path_exists(
                edges,
                incidence,
                next,
                target,
                budget - 1,
                path_vertices,
                path_edges,
            );
            path_edges.pop();
            path_vertices.pop();
            if found {
                return true;
            }
        }
    }
    false
}

/// The 12 lines of the affine plane of order 3 on 9 points (point `(a, b)`
/// is index `3a + b`): every pair of points lies in exactly one triple.
pub fn steiner_triple_9() -> Hypergraph {
    let idx = |a: usize, b: usize| 3 * a + b;
    let mut lines: Vec<Vec<usize>> = Vec::with_capacity(12);
    for m in 0..3 {
        for c in 0..3 {
            lines.push((0..3).map(|x| idx(x, (m * x + c) % 3)).collect());
        }
    }
    for c in 0..3 {
        lines.push((0..3).map(|y| idx(c, y)).collect());
    }
    Hypergraph::new(3, 9, lines).expect("affine plane lines are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{berge_girth, hom_count};

    #[test]
    fn single_edge_shapes() {
        for r in [2, 3, 4, 7] {
            let h = single_edge(r).unwrap();
            assert_eq!((h.vertex_count(), h.edge_count()), (r, 1));
        }
        assert!(single_edge(1).is_err());
    }

    #[test]
    fn linear_cycle_shapes() {
        let c33 = linear_cycle(3, 3).unwrap();
        assert_eq!((c33.vertex_count(), c33.edge_count()), (6, 3));
        // every pair of edges shares exactly one vertex
        for i in 0..3 {
            for j in (i + 1)..3 {
                let shared = c33.edge(i).iter().filter(|v| c33.edge(j).contains(v)).count();
                assert_eq!(shared, 1);
            }
        }
        let c35 = linear_cycle(3, 5).unwrap();
        assert_eq!((c35.vertex_count(), c35.edge_count()), (10, 5));
        let c43 = linear_cycle(4, 3).unwrap();
        assert_eq!((c43.vertex_count(), c43.edge_count()), (9, 3));
        assert!(linear_cycle(2, 3).is_err());
        assert!(linear_cycle(3, 1).is_err());
    }

    #[test]
    fn linear_path_shapes() {
        assert_eq!(linear_path(3, 1).unwrap(), single_edge(3).unwrap());
        let p = linear_path(3, 2).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (5, 2));
        let shared = p.edge(0).iter().filter(|v| p.edge(1).contains(v)).count();
        assert_eq!(shared, 1);
        assert_eq!(linear_path(4, 3).unwrap().vertex_count(), 10);
    }

    #[test]
    fn blow_up_counts() {
        let s = single_edge(3).unwrap();
        let b = blow_up(&s, 2).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (6, 8));

        let c = linear_cycle(3, 3).unwrap();
        assert_eq!(blow_up(&c, 1).unwrap(), c);
        let b2 = blow_up(&c, 2).unwrap();
        assert_eq!((b2.vertex_count(), b2.edge_count()), (12, 24));
        assert!(blow_up(&c, 0).is_err());
    }

    #[test]
    fn blow_up_girth_two() {
        let s = single_edge(3).unwrap();
        assert_eq!(berge_girth(&blow_up(&s, 2).unwrap()).girth, Some(2));
    }

    #[test]
    fn tensor_product_counts() {
        let s = single_edge(3).unwrap();
        let t = tensor_product(&s, &s).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (9, 6));

        let c = linear_cycle(3, 3).unwrap();
        let tc = tensor_product(&c, &c).unwrap();
        assert_eq!(tc.vertex_count(), 36);
        assert_eq!(tc.edge_count(), 6 * 3 * 3);

        let empty = Hypergraph::empty(3, 2).unwrap();
        assert_eq!(tensor_product(&c, &empty).unwrap().edge_count(), 0);
        assert!(tensor_product(&c, &single_edge(4).unwrap()).is_err());
    }

    #[test]
    fn tensor_hom_submultiplicative() {
        let f = linear_cycle(3, 3).unwrap();
        let h = steiner_triple_9();
        let hh = tensor_product(&h, &h).unwrap();
        let hom_h = hom_count(&f, &h).unwrap().value;
        let hom_hh = hom_count(&f, &hh).unwrap().value;
        assert!(hom_hh <= &hom_h * &hom_h);
    }

    #[test]
    fn random_uniform_determinism_and_saturation() {
        let all = random_uniform(5, 3, 10, RngSeed(7)).unwrap();
        assert_eq!(all.edge_count(), 10);

        let none = random_uniform(5, 3, 0, RngSeed(7)).unwrap();
        assert_eq!(none.edge_count(), 0);

        let a = random_uniform(12, 3, 30, RngSeed(99)).unwrap();
        let b = random_uniform(12, 3, 30, RngSeed(99)).unwrap();
        assert_eq!(a, b);
        let c = random_uniform(12, 3, 30, RngSeed(100)).unwrap();
        assert_ne!(a, c);

        assert!(random_uniform(5, 3, 11, RngSeed(1)).is_err());
    }

    #[test]
    fn percolation_extremes() {
        let h = steiner_triple_9();
        let all = percolate_vertices(&h, 1.0, RngSeed(3)).unwrap();
        assert_eq!(all.graph, h);
        let none = percolate_vertices(&h, 0.0, RngSeed(3)).unwrap();
        assert_eq!(none.kept_count, 0);
        assert!(percolate_vertices(&h, 1.5, RngSeed(3)).is_err());
    }

    #[test]
    fn percolation_vertex_statistics() {
        // mean kept count over many seeds within 3 sigma of n·p
        let h = Hypergraph::empty(3, 100).unwrap();
        let p = 0.5;
        let trials = 10_000u64;
        let mut total = 0u64;
        for s in 0..trials {
            total += percolate_vertices(&h, p, RngSeed(s)).unwrap().kept_count as u64;
        }
        let mean = total as f64 / trials as f64;
        let sigma = (100.0 * p * (1.0 - p) / trials as f64).sqrt();
        assert!((mean - 50.0).abs() < 3.0 * sigma, "mean {mean}, sigma {sigma}");
    }

    #[test]
    fn percolation_edge_survival_statistics() {
        // survival of a fixed edge is p^r, checked at 4 sigma
        let h = single_edge(3).unwrap();
        let p: f64 = 0.6;
        let trials = 20_000u64;
        let mut survived = 0u64;
        for s in 0..trials {
            if percolate_vertices(&h, p, RngSeed(1_000_000 + s)).unwrap().surviving_edges == 1 {
                survived += 1;
            }
        }
        let want = p.powi(3);
        let got = survived as f64 / trials as f64;
        let sigma = (want * (1.0 - want) / trials as f64).sqrt();
        assert!((got - want).abs() < 4.0 * sigma, "got {got}, want {want} ± {sigma}");
    }

    #[test]
    fn greedy_girth_two_is_unconstrained() {
        let h = greedy_high_girth(8, 3, 2, 200, RngSeed(5)).unwrap();
        assert!(h.edge_count() > 0);
    }

    #[test]
    fn greedy_girth_three_is_linear() {
        let h = greedy_high_girth(12, 3, 3, 500, RngSeed(5)).unwrap();
        assert!(h.is_linear());
        assert!(berge_girth(&h).girth.is_none_or(|g| g >= 3));
    }

    #[test]
    fn greedy_girth_verified_by_engine() {
        for (g_min, seed) in [(4, 11), (5, 12), (6, 13)] {
            let h = greedy_high_girth(20, 3, g_min, 2_000, RngSeed(seed)).unwrap();
            assert!(h.edge_count() > 0, "g_min={g_min}");
            assert!(berge_girth(&h).girth.is_none_or(|g| g >= g_min));
        }
    }

    #[test]
    fn sts9_shape_and_codegrees() {
        let h = steiner_triple_9();
        assert_eq!((h.vertex_count(), h.edge_count()), (9, 12));
        for u in 0..9 {
            for v in (u + 1)..9 {
                assert_eq!(h.pair_codegree(u, v), 1, "pair ({u},{v})");
            }
        }
        assert!(h.is_linear());
    }
}
