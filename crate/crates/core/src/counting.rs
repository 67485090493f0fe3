//! Exact enumeration engines: homomorphism and injective-copy counting by
//! backtracking with codegree-index pruning, Berge girth via per-edge BFS,
//! linear-tree enumeration, homomorphic image profiles, even-cycle
//! enumeration in 2-graphs, and automorphism counts.
//!
//! These engines share no code with the naive references in
//! [`crate::oracles`]; the oracles exist to catch bugs here.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::hypergraph::{is_subset, Graph2, Hypergraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("uniformity mismatch: pattern is {pattern}-uniform, host is {host}-uniform")]
    UniformityMismatch { pattern: usize, host: usize },
    #[error("hypergraph is not linear: edges {e1} and {e2} share {shared} vertices")]
    NotLinear { e1: usize, e2: usize, shared: usize },
}

/// An exact count along with the problem dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCount {
    pub value: BigUint,
    pub pattern_vertices: usize,
    pub host_vertices: usize,
}

/// A Berge cycle witness: `k` distinct vertices and `k` distinct edge ids
/// with `{v_i, v_{i+1}} ⊂ e_i`, indices cyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergeCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl BergeCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the defining property against `h`.
    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        let k = self.vertices.len();
        if k < 2 || self.edges.len() != k {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != k || es.len() != k || es.iter().any(|&id| id >= h.edge_count()) {
            return false;
        }
        (0..k).all(|i| {
            let e = h.edge(self.edges[i]);
            e.contains(&self.vertices[i]) && e.contains(&self.vertices[(i + 1) % k])
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthReport {
    /// `None` means Berge-acyclic (infinite girth).
    pub girth: Option<usize>,
    pub witness: Option<BergeCycle>,
}

/// Backtracking search shared by the hom/copy counters.
struct Search<'a> {
    pattern: &'a Hypergraph,
    host: &'a Hypergraph,
    /// Pattern vertices in visit order (non-isolated only).
    order: Vec<usize>,
    /// position of each pattern vertex in `order`, usize::MAX if isolated.
    position: Vec<usize>,
    /// For each order position, the pattern edges containing that vertex.
    edges_at: Vec<Vec<usize>>,
    injective: bool,
    assignment: Vec<usize>,
    used: Vec<bool>,
}

const UNPLACED: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(pattern: &'a Hypergraph, host: &'a Hypergraph, injective: bool) -> Self {
        // Connectivity-respecting order: BFS over pattern components, seeded
        // at the highest-degree vertex of each component.
        let pn = pattern.vertex_count();
        let mut order = Vec::new();
        let mut position = vec![UNPLACED; pn];
        let mut seen = vec![false; pn];
        let mut seeds: Vec<usize> = (0..pn).filter(|&v| pattern.degree(v) > 0).collect();
        seeds.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
        for seed in seeds {
            if seen[seed] {
                continue;
            }
            seen[seed] = true;
            let mut queue = std::collections::VecDeque::from([seed]);
            while let Some(v) = queue.pop_front() {
                position[v] = order.len();
                order.push(v);
                for &id in pattern.incident_edges(v) {
                    for &u in pattern.edge(id) {
                        if !seen[u] {
                            seen[u] = true;
                            queue.push_back(u);
                        }
                    }
                }
            }
        }
        let edges_at = order
            .iter()
            .map(|&v| pattern.incident_edges(v).to_vec())
            .collect();
        Search {
            pattern,
            host,
            order,
            position,
            edges_at,
            injective,
            assignment: vec![UNPLACED; pn],
            used: vec![false; host.vertex_count()],
        }
    }

    fn isolated_count(&self) -> usize {
        self.pattern.vertex_count() - self.order.len()
    }

    /// Candidates for the pattern vertex at `pos` under the current partial
    /// assignment, or `None` when unconstrained (no incident edge touched).
    /// The most-placed constraining edge generates, the rest filter.
    fn candidates(&self, pos: usize) -> Option<Vec<usize>> {
        let mut constraints: Vec<Vec<usize>> = Vec::with_capacity(self.edges_at[pos].len());
        for &eid in &self.edges_at[pos] {
            let mut placed: Vec<usize> = self.pattern.edge(eid)
                .iter()
                .filter(|&&u| self.assignment[u] != UNPLACED)
                .map(|&u| self.assignment[u])
                .collect();
            if placed.is_empty() {
                continue;
            }
            placed.sort_unstable();
            let distinct = placed.windows(2).all(|w| w[0] != w[1]);
            if !distinct {
                // No host edge repeats a vertex.
                return Some(Vec::new());
            }
            constraints.push(placed);
        }
        if constraints.is_empty() {
            return None;
        }
        constraints.sort_unstable_by_key(|c| std::cmp::Reverse(c.len()));
        let mut cand = self.extensions(&constraints[0]);
        cand.sort_unstable();
        cand.dedup();
        for placed in &constraints[1..] {
            if cand.is_empty() {
                break;
            }
            cand.retain(|&x| self.extends(placed, x));
        }
        Some(cand)
    }

    /// Candidate edge ids for edges containing all of `placed`: the pair
    /// index when two or more vertices are placed, the incidence list of
    /// the least-degree vertex otherwise.
    fn edge_pool(&self, placed: &[usize]) -> &[usize] {
        if placed.len() >= 2 {
            self.host.edges_containing_pair(placed[0], placed[1])
        } else {
            self.host.incident_edges(placed[0])
        }
    }

    /// All host vertices `x` such that `placed ∪ {x}` lies in a host edge.
    fn extensions(&self, placed: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for &id in self.edge_pool(placed) {
            let edge = self.host.edge(id);
            if is_subset(placed, edge) {
                out.extend(edge.iter().copied().filter(|v| !placed.contains(v)));
            }
        }
        out
    }

    fn extends(&self, placed: &[usize], x: usize) -> bool {
        if placed.contains(&x) {
            return false;
        }
        let mut all: Vec<usize> = placed.to_vec();
        all.push(x);
        all.sort_unstable();
        self.edge_pool(&all)
            .iter()
            .any(|&id| is_subset(&all, self.host.edge(id)))
    }

    fn count(&mut self, pos: usize) -> u128 {
        if pos == self.order.len() {
            return 1;
        }
        let u = self.order[pos];
        let mut total = 0u128;
        match self.candidates(pos) {
            Some(cands) => {
                for x in cands {
                    if self.injective && self.used[x] {
                        continue;
                    }
                    self.assignment[u] = x;
                    if self.injective {
                        self.used[x] = true;
                    }
                    total += self.count(pos + 1);
                    if self.injective {
                        self.used[x] = false;
                    }
                    self.assignment[u] = UNPLACED;
                }
            }
            None => {
                for x in 0..self.host.vertex_count() {
                    if self.injective && self.used[x] {
                        continue;
                    }
                    self.assignment[u] = x;
                    if self.injective {
                        self.used[x] = true;
                    }
                    total += self.count(pos + 1);
                    if self.injective {
                        self.used[x] = false;
                    }
                    self.assignment[u] = UNPLACED;
                }
            }
        }
        total
    }

    fn for_each(&mut self, pos: usize, f: &mut impl FnMut(&[usize])) {
        if pos == self.order.len() {
            f(&self.assignment);
            return;
        }
        let u = self.order[pos];
        let cands = self
            .candidates(pos)
            .unwrap_or_else(|| (0..self.host.vertex_count()).collect());
        for x in cands {
            if self.injective && self.used[x] {
                continue;
            }
            self.assignment[u] = x;
            if self.injective {
                self.used[x] = true;
            }
            self.for_each(pos + 1, f);
            if self.injective {
                self.used[x] = false;
            }
            self.assignment[u] = UNPLACED;
        }
    }

    fn exists(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let u = self.order[pos];
        let cands = self
            .candidates(pos)
            .unwrap_or_else(|| (0..self.host.vertex_count()).collect());
        for x in cands {
            if self.injective && self.used[x] {
                continue;
            }
            self.assignment[u] = x;
            if self.injective {
                self.used[x] = true;
            }
            let found = self.exists(pos + 1);
            if self.injective {
                self.used[x] = false;
            }
            self.assignment[u] = UNPLACED;
            if found {
                return true;
            }
        }
        false
    }
}

fn check_uniformity(pattern: &Hypergraph, host: &Hypergraph) -> Result<(), CountError> {
    if pattern.uniformity() != host.uniformity() {
        return Err(CountError::UniformityMismatch {
            pattern: pattern.uniformity(),
            host: host.uniformity(),
        });
    }
    Ok(())
}

/// Exact number of homomorphisms from `pattern` to `host`: vertex maps
/// sending every pattern edge onto a host edge.
pub fn hom_count(pattern: &Hypergraph, host: &Hypergraph) -> Result<HomCount, CountError> {
    check_uniformity(pattern, host)?;
    let mut search = Search::new(pattern, host, false);
    let connected_part = BigUint::from(search.count(0));
    // Pattern vertices in no edge map anywhere.
    let free = BigUint::from(host.vertex_count()).pow(search.isolated_count() as u32);
    Ok(HomCount {
        value: connected_part * free,
        pattern_vertices: pattern.vertex_count(),
        host_vertices: host.vertex_count(),
    })
}

/// Exact number of injective homomorphisms (labeled copies).
pub fn labeled_copy_count(pattern: &Hypergraph, host: &Hypergraph) -> Result<HomCount, CountError> {
    check_uniformity(pattern, host)?;
    if pattern.vertex_count() > host.vertex_count() {
        return Ok(HomCount {
            value: BigUint::zero(),
            pattern_vertices: pattern.vertex_count(),
            host_vertices: host.vertex_count(),
        });
    }
    let mut search = Search::new(pattern, host, true);
    let iso = search.isolated_count();
    let placed = search.order.len();
    // The search enumerates the non-isolated part; isolated pattern vertices
    // then take any of the remaining host vertices, a falling factorial that
    // is the same for every leaf.
    let mut free = BigUint::one();
    for i in 0..iso {
        free *= BigUint::from(host.vertex_count() - placed - i);
    }
    let connected_part = BigUint::from(search.count(0));
    Ok(HomCount {
        value: connected_part * free,
        pattern_vertices: pattern.vertex_count(),
        host_vertices: host.vertex_count(),
    })
}

/// Number of vertex permutations preserving the edge set. An injective
/// endomorphism of a finite hypergraph maps the edge set onto itself, so
/// this is the injective-hom count with host = pattern.
pub fn automorphism_count(pattern: &Hypergraph) -> BigUint {
    labeled_copy_count(pattern, pattern)
        .expect("same uniformity")
        .value
}

/// Whether an injective homomorphism `pattern -> host` exists.
pub fn has_injective_hom(pattern: &Hypergraph, host: &Hypergraph) -> Result<bool, CountError> {
    check_uniformity(pattern, host)?;
    if pattern.vertex_count() > host.vertex_count() {
        return Ok(false);
    }
    let mut search = Search::new(pattern, host, true);
    Ok(search.exists(0))
}

/// Visits every homomorphism; the callback sees the full assignment vector
/// indexed by pattern vertex.
pub fn for_each_hom(
    pattern: &Hypergraph,
    host: &Hypergraph,
    mut f: impl FnMut(&[usize]),
) -> Result<(), CountError> {
    check_uniformity(pattern, host)?;
    let mut search = Search::new(pattern, host, false);
    // Callback mode enumerates isolated vertices too.
    let isolated: Vec<usize> = (0..pattern.vertex_count())
        .filter(|&v| pattern.degree(v) == 0)
        .collect();
    for &v in &isolated {
        search.position[v] = search.order.len();
        search.order.push(v);
        search.edges_at.push(Vec::new());
    }
    search.for_each(0, &mut f);
    Ok(())
}

/// Berge girth: the shortest `k ≥ 2` admitting `k` distinct vertices and `k`
/// distinct edges with `{v_i, v_{i+1}} ⊂ e_i` cyclically, with a witness.
///
/// The length-2 case is a pair-codegree scan. For `k ≥ 3` the graph is then
/// linear and girth is computed as `1 + min` over edges `e0` and vertices
/// `u ∈ e0` of the BFS distance (forbidding `e0`) from `u` to another vertex
/// of `e0`; on a shortest such path the witness edges are automatically
/// distinct.
pub fn berge_girth(h: &Hypergraph) -> GirthReport {
    // k = 2: two edges sharing two vertices.
    for e1 in 0..h.edge_count() {
        let edge = h.edge(e1);
        for i in 0..edge.len() {
            for j in (i + 1)..edge.len() {
                let (u, v) = (edge[i], edge[j]);
                if h.pair_codegree(u, v) >= 2 {
                    let e2 = h
                        .incident_edges(u)
                        .iter()
                        .copied()
                        .find(|&id| id != e1 && h.edge(id).contains(&v))
                        .expect("codegree >= 2");
                    return GirthReport {
                        girth: Some(2),
                        witness: Some(BergeCycle { vertices: vec![u, v], edges: vec![e1, e2] }),
                    };
                }
            }
        }
    }

    let n = h.vertex_count();
    let mut best: Option<(usize, BergeCycle)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent: Vec<(usize, usize)> = vec![(UNPLACED, UNPLACED); n];
    for e0 in 0..h.edge_count() {
        for &start in h.edge(e0) {
            let cap = match &best {
                Some((g, _)) => g - 2, // only paths shorter than the incumbent matter
                None => usize::MAX,
            };
            dist.fill(usize::MAX);
            dist[start] = 0;
            let mut frontier = vec![start];
            let mut depth = 0;
            'bfs: while !frontier.is_empty() && depth < cap {
                let mut next = Vec::new();
                depth += 1;
                for &v in &frontier {
                    for &id in h.incident_edges(v) {
                        if id == e0 {
                            continue;
                        }
                        for &x in h.edge(id) {
                            if dist[x] == usize::MAX {
                                dist[x] = depth;
                                parent[x] = (v, id);
                                next.push(x);
                                if x != start && h.edge(e0).contains(&x) {
                                    // Cycle of length depth + 1 through e0.
                                    let mut vertices = Vec::with_capacity(depth + 1);
                                    let mut edges = Vec::with_capacity(depth + 1);
                                    let mut cur = x;
                                    while cur != start {
                                        vertices.push(cur);
                                        edges.push(parent[cur].1);
                                        cur = parent[cur].0;
                                    }
                                    vertices.push(start);
                                    vertices.reverse();
                                    edges.reverse();
                                    edges.push(e0);
                                    let cycle = BergeCycle { vertices, edges };
                                    debug_assert!(cycle.is_valid(h));
                                    best = Some((depth + 1, cycle));
                                    break 'bfs;
                                }
                            }
                        }
                    }
                }
                frontier = next;
            }
            if matches!(best, Some((3, _))) {
                // Nothing shorter exists once k = 2 has been ruled out.
                let (g, w) = best.unwrap();
                return GirthReport { girth: Some(g), witness: Some(w) };
            }
        }
    }
    match best {
        Some((g, w)) => GirthReport { girth: Some(g), witness: Some(w) },
        None => GirthReport { girth: None, witness: None },
    }
}

/// A connected Berge-acyclic linear sub-hypergraph, as a list of edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearTree {
    pub edges: Vec<usize>,
}

fn require_linear(h: &Hypergraph) -> Result<(), CountError> {
    for e1 in 0..h.edge_count() {
        let edge = h.edge(e1);
        for i in 0..edge.len() {
            for j in (i + 1)..edge.len() {
                if h.pair_codegree(edge[i], edge[j]) >= 2 {
                    let e2 = h
                        .incident_edges(edge[i])
                        .iter()
                        .copied()
                        .find(|&id| id != e1 && h.edge(id).contains(&edge[j]))
                        .unwrap();
                    return Err(CountError::NotLinear { e1, e2, shared: 2 });
                }
            }
        }
    }
    Ok(())
}

/// Enumerates connected Berge-acyclic edge subsets with between 1 and
/// `max_edges` edges, each exactly once (ESU over the edge-adjacency graph,
/// pruned to extensions sharing exactly one vertex with the current tree).
fn walk_linear_trees(
    h: &Hypergraph,
    max_edges: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if max_edges == 0 || h.edge_count() == 0 {
        return;
    }
    let neighbors: Vec<Vec<usize>> = (0..h.edge_count())
        .map(|id| {
            let mut nb: Vec<usize> = h
                .edge(id)
                .iter()
                .flat_map(|&v| h.incident_edges(v).iter().copied())
                .filter(|&other| other != id)
                .collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect();

    fn shared_vertices(h: &Hypergraph, vertex_in_tree: &[bool], edge: usize) -> usize {
        h.edge(edge).iter().filter(|&&v| vertex_in_tree[v]).count()
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        h: &Hypergraph,
        neighbors: &[Vec<usize>],
        root: usize,
        sub: &mut Vec<usize>,
        ext: &[usize],
        vertex_in_tree: &mut [bool],
        in_ext_or_sub: &mut [bool],
        max_edges: usize,
        f: &mut impl FnMut(&[usize]),
    ) {
        f(sub);
        if sub.len() == max_edges {
            return;
        }
        let mut remaining = ext.to_vec();
        while let Some(w) = remaining.pop() {
            if shared_vertices(h, vertex_in_tree, w) != 1 {
                continue; // would close a Berge cycle; supersets stay bad
            }
            let mut new_ext = remaining.clone();
            let mut added = Vec::new();
            for &u in &neighbors[w] {
                if u > root && !in_ext_or_sub[u] {
                    in_ext_or_sub[u] = true;
                    added.push(u);
                    new_ext.push(u);
                }
            }
            let fresh: Vec<usize> = h
                .edge(w)
                .iter()
                .copied()
                .filter(|&v| !vertex_in_tree[v])
                .collect();
            for &v in &fresh {
                vertex_in_tree[v] = true;
            }
            sub.push(w);
            extend(h, neighbors, root, sub, &new_ext, vertex_in_tree, in_ext_or_sub, max_edges, f);
            sub.pop();
            for &v in &fresh {
                vertex_in_tree[v] = false;
            }
            for &u in &added {
                in_ext_or_sub[u] = false;
            }
        }
    }

    let mut vertex_in_tree = vec![false; h.vertex_count()];
    let mut in_ext_or_sub = vec![false; h.edge_count()];
    for root in 0..h.edge_count() {
        let mut sub = vec![root];
        for &v in h.edge(root) {
            vertex_in_tree[v] = true;
        }
        in_ext_or_sub[root] = true;
        let mut ext = Vec::new();
        for &u in &neighbors[root] {
            if u > root {
                in_ext_or_sub[u] = true;
                ext.push(u);
            }
        }
        extend(
            h,
            &neighbors,
            root,
            &mut sub,
            &ext,
            &mut vertex_in_tree,
            &mut in_ext_or_sub,
            max_edges,
            f,
        );
        for &v in h.edge(root) {
            vertex_in_tree[v] = false;
        }
        in_ext_or_sub[root] = false;
        for &u in &ext {
            in_ext_or_sub[u] = false;
        }
    }
}

/// Counts linear trees with at most `max_edges` edges. Single vertices count
/// as the trees with zero edges, contributing `n`.
pub fn count_linear_trees(h: &Hypergraph, max_edges: usize) -> Result<BigUint, CountError> {
    require_linear(h)?;
    let mut count: u128 = h.vertex_count() as u128;
    walk_linear_trees(h, max_edges, &mut |_| count += 1);
    Ok(BigUint::from(count))
}

/// Lists the linear trees with 1..=`max_edges` edges (the zero-edge trees
/// are single vertices and are not materialized).
pub fn list_linear_trees(h: &Hypergraph, max_edges: usize) -> Result<Vec<LinearTree>, CountError> {
    require_linear(h)?;
    let mut out = Vec::new();
    walk_linear_trees(h, max_edges, &mut |edges| {
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        out.push(LinearTree { edges });
    });
    out.sort_unstable_by(|a, b| a.edges.cmp(&b.edges));
    Ok(out)
}

/// Explicit combinatorial constant for the linear-tree count bound
/// `count ≤ n · max(Δ₁, 1)^k · c(k, r)`: a tree with `j ≤ k` edges is built
/// from a root vertex by attaching edges at one of at most `j(r-1)` existing
/// vertices, so `c(k, r) = Σ_{j=0}^{k} j! (r-1)^j`.
pub fn linear_tree_bound_constant(max_edges: usize, r: usize) -> BigUint {
    let mut total = BigUint::zero();
    for j in 0..=max_edges {
        let mut term = BigUint::one();
        for i in 1..=j {
            term *= BigUint::from(i * (r - 1));
        }
        total += term;
    }
    total
}

/// Classification of one homomorphic image: whether the induced
/// sub-hypergraph is a linear tree, and how many edges it spans.
pub type ImageClass = (bool, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageProfile {
    pub histogram: BTreeMap<ImageClass, u128>,
    pub total: BigUint,
}

impl ImageProfile {
    /// True when every homomorphism lands on a linear tree with at most
    /// `max_edges` edges.
    pub fn all_linear_trees_within(&self, max_edges: usize) -> bool {
        self.histogram
            .iter()
            .all(|(&(is_tree, edges), _)| is_tree && edges <= max_edges)
    }
}

/// Classifies the sub-hypergraph induced by each homomorphic image.
pub fn homomorphic_image_profile(
    pattern: &Hypergraph,
    host: &Hypergraph,
) -> Result<ImageProfile, CountError> {
    let mut histogram: BTreeMap<ImageClass, u128> = BTreeMap::new();
    let mut total: u128 = 0;
    for_each_hom(pattern, host, |assignment| {
        let mut image: Vec<usize> = assignment.to_vec();
        image.sort_unstable();
        image.dedup();
        let class = classify_induced(host, &image);
        *histogram.entry(class).or_insert(0) += 1;
        total += 1;
    })?;
    Ok(ImageProfile { histogram, total: BigUint::from(total) })
}

/// (is_linear_tree, edge count) of the sub-hypergraph induced by `image`
/// (which must be sorted). A single vertex is the tree with zero edges.
fn classify_induced(host: &Hypergraph, image: &[usize]) -> ImageClass {
    let mut edge_ids: Vec<usize> = image
        .iter()
        .flat_map(|&v| host.incident_edges(v).iter().copied())
        .filter(|&id| is_subset(host.edge(id), image))
        .collect();
    edge_ids.sort_unstable();
    edge_ids.dedup();
    let k = edge_ids.len();
    if k == 0 {
        return (image.len() == 1, 0);
    }
    // Linear: pairwise intersections of size <= 1.
    for i in 0..k {
        for j in (i + 1)..k {
            let shared = host
                .edge(edge_ids[i])
                .iter()
                .filter(|v| host.edge(edge_ids[j]).contains(v))
                .count();
            if shared >= 2 {
                return (false, k);
            }
        }
    }
    // Covered vertices and connectivity over shared vertices.
    let mut covered: Vec<usize> = edge_ids
        .iter()
        .flat_map(|&id| host.edge(id).iter().copied())
        .collect();
    covered.sort_unstable();
    covered.dedup();
    if covered.len() != image.len() {
        return (false, k); // stray vertices outside every induced edge
    }
    let r = host.uniformity();
    if covered.len() != k * (r - 1) + 1 {
        return (false, k);
    }
    // Connectivity of the edge set via union-find on edges.
    let mut comp: Vec<usize> = (0..k).collect();
    fn find(comp: &mut Vec<usize>, i: usize) -> usize {
        if comp[i] != i {
            let root = find(comp, comp[i]);
            comp[i] = root;
        }
        comp[i]
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let touch = host
                .edge(edge_ids[i])
                .iter()
                .any(|v| host.edge(edge_ids[j]).contains(v));
            if touch {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let root = find(&mut comp, 0);
    let connected = (0..k).all(|i| find(&mut comp, i) == root);
    (connected, k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenCycles {
    /// Canonical vertex sequences: each starts at its minimum vertex and
    /// takes the lexicographically smaller direction.
    pub cycles: Vec<Vec<usize>>,
    pub truncated: bool,
}

/// Enumerates distinct (unlabeled) cycles of length `2L` in a simple
/// 2-graph, deterministically, up to `budget` cycles.
pub fn even_cycle_enumerate(g: &Graph2, l: usize, budget: usize) -> EvenCycles {
    let target = 2 * l;
    let mut cycles = Vec::new();
    let mut truncated = false;
    if l < 2 || budget == 0 {
        return EvenCycles { cycles, truncated: l >= 2 };
    }
    let n = g.vertex_count();
    let mut dist_to_start = vec![usize::MAX; n];
    let mut path: Vec<usize> = Vec::with_capacity(target);
    let mut on_path = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Graph2,
        target: usize,
        start: usize,
        dist_to_start: &[usize],
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        cycles: &mut Vec<Vec<usize>>,
        budget: usize,
        truncated: &mut bool,
    ) {
        if cycles.len() >= budget {
            *truncated = true;
            return;
        }
        let v = *path.last().unwrap();
        if path.len() == target {
            // Direction canonicalization: second vertex < last vertex.
            if path[1] < v && g.has_edge(v, start) {
                cycles.push(path.clone());
            }
            return;
        }
        let remaining = target - path.len();
        for &w in g.neighbors(v) {
            if w <= start || on_path[w] || dist_to_start[w] > remaining {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            dfs(g, target, start, dist_to_start, path, on_path, cycles, budget, truncated);
            on_path[w] = false;
            path.pop();
            if *truncated {
                return;
            }
        }
    }

    for start in 0..n {
        if g.neighbors(start).len() < 2 {
            continue;
        }
        // BFS distances to prune unreachable closings.
        dist_to_start.fill(usize::MAX);
        dist_to_start[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist_to_start[w] == usize::MAX {
                    dist_to_start[w] = dist_to_start[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        path.clear();
        path.push(start);
        on_path[start] = true;
        dfs(
            g,
            target,
            start,
            &dist_to_start,
            &mut path,
            &mut on_path,
            &mut cycles,
            budget,
            &mut truncated,
        );
        on_path[start] = false;
        if truncated {
            break;
        }
    }
    EvenCycles { cycles, truncated }
}
