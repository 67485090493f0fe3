//! Canonical r-uniform hypergraph representation.
//!
//! Edges are stored as strictly sorted vertex tuples with set semantics
//! (duplicates collapse), vertices are dense integer indices in `[0, n)`,
//! and every operation that removes vertices returns a relabeling so
//! downstream certificates remain traceable to the original input.
//!
//! Values are immutable after construction; codegree indices over pairs and
//! `(r-1)`-subsets are built lazily behind `OnceLock` and shared by
//! concurrent readers.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("edge {edge:?} has {len} vertices, expected {r}")]
    WrongEdgeSize { edge: Vec<usize>, len: usize, r: usize },
    #[error("edge {edge:?} repeats vertex {vertex}")]
    RepeatedVertex { edge: Vec<usize>, vertex: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("codegree query on {len} vertices requires fewer than r = {r}")]
    CodegreeArity { len: usize, r: usize },
    #[error("shadow arity {j} must satisfy 1 <= j < r = {r}")]
    ShadowArity { j: usize, r: usize },
    #[error("classes must partition the vertex set into {r} parts; {reason}")]
    BadPartition { r: usize, reason: String },
    #[error("edge {edge:?} is not transversal: {reason}")]
    NotTransversal { edge: Vec<usize>, reason: String },
    #[error("class index {class} out of range (r = {r})")]
    ClassOutOfRange { class: usize, r: usize },
    #[error("pair shadow requires two distinct classes, got {0}")]
    SameClass(usize),
}

/// A `k`-subset of vertices together with its exact codegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowKey {
    pub vertices: Vec<usize>,
    pub codegree: u64,
}

/// An r-uniform hypergraph on vertex set `[0, n)`.
pub struct Hypergraph {
    r: usize,
    n: usize,
    /// Each edge strictly ascending; the list itself sorted lexicographically.
    edges: Vec<Vec<usize>>,
    /// vertex -> ascending list of incident edge ids.
    incidence: Vec<Vec<usize>>,
    pair_index: OnceLock<HashMap<(usize, usize), u64>>,
    pair_edges: OnceLock<HashMap<(usize, usize), Vec<usize>>>,
    last_shadow_index: OnceLock<HashMap<Vec<usize>, u64>>,
}

impl Clone for Hypergraph {
    fn clone(&self) -> Self {
        // Caches are cheap to rebuild; don't drag them along.
        Hypergraph {
            r: self.r,
            n: self.n,
            edges: self.edges.clone(),
            incidence: self.incidence.clone(),
            pair_index: OnceLock::new(),
            pair_edges: OnceLock::new(),
            last_shadow_index: OnceLock::new(),
        }
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Hypergraph {}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hypergraph")
            .field("r", &self.r)
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Hypergraph {
    /// Validates and canonicalizes raw edges: vertex order normalized
    /// ascending, duplicate edges collapsed.
    pub fn new(
        r: usize,
        n: usize,
        raw_edges: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, HypergraphError> {
        if r < 2 {
            return Err(HypergraphError::UniformityTooSmall(r));
        }
        let mut edges: Vec<Vec<usize>> = Vec::new();
        for raw in raw_edges {
            if raw.len() != r {
                return Err(HypergraphError::WrongEdgeSize { len: raw.len(), r, edge: raw });
            }
            let mut e = raw.clone();
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(HypergraphError::RepeatedVertex { edge: raw, vertex: w[0] });
                }
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            edges.push(e);
        }
        edges.sort_unstable();
        edges.dedup();
        let mut incidence = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(id);
            }
        }
        Ok(Hypergraph {
            r,
            n,
            edges,
            incidence,
            pair_index: OnceLock::new(),
            pair_edges: OnceLock::new(),
            last_shadow_index: OnceLock::new(),
        })
    }

    /// Empty hypergraph on `n` vertices.
    pub fn empty(r: usize, n: usize) -> Result<Self, HypergraphError> {
        Self::new(r, n, std::iter::empty())
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &[usize] {
        &self.edges[id]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Membership test for a sorted or unsorted candidate edge.
    pub fn has_edge(&self, vertices: &[usize]) -> bool {
        if vertices.len() != self.r {
            return false;
        }
        let mut e = vertices.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    fn pair_index(&self) -> &HashMap<(usize, usize), u64> {
        self.pair_index.get_or_init(|| {
            let mut map = HashMap::new();
            for e in &self.edges {
                for i in 0..e.len() {
                    for j in (i + 1)..e.len() {
                        *map.entry((e[i], e[j])).or_insert(0) += 1;
                    }
                }
            }
            map
        })
    }

    fn pair_edges(&self) -> &HashMap<(usize, usize), Vec<usize>> {
        self.pair_edges.get_or_init(|| {
            let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
            for (id, e) in self.edges.iter().enumerate() {
                for i in 0..e.len() {
                    for j in (i + 1)..e.len() {
                        map.entry((e[i], e[j])).or_default().push(id);
                    }
                }
            }
            map
        })
    }

    /// Ids of the edges containing both `u` and `v`.
    pub fn edges_containing_pair(&self, u: usize, v: usize) -> &[usize] {
        let key = if u < v { (u, v) } else { (v, u) };
        self.pair_edges().get(&key).map(|v| v.as_slice()).unwrap_or(&[])
    }

    fn last_shadow_index(&self) -> &HashMap<Vec<usize>, u64> {
        self.last_shadow_index.get_or_init(|| {
            let mut map = HashMap::new();
            for e in &self.edges {
                for skip in 0..self.r {
                    let mut s = Vec::with_capacity(self.r - 1);
                    for (i, &v) in e.iter().enumerate() {
                        if i != skip {
                            s.push(v);
                        }
                    }
                    *map.entry(s).or_insert(0) += 1;
                }
            }
            map
        })
    }

    /// Exact codegree of a vertex subset `X` with `|X| < r`: the number of
    /// edges containing `X`.
    pub fn codegree(&self, subset: &[usize]) -> Result<u64, HypergraphError> {
        if subset.len() >= self.r {
            return Err(HypergraphError::CodegreeArity { len: subset.len(), r: self.r });
        }
        let mut xs = subset.to_vec();
        xs.sort_unstable();
        for w in xs.windows(2) {
            if w[0] == w[1] {
                return Err(HypergraphError::RepeatedVertex { edge: subset.to_vec(), vertex: w[0] });
            }
        }
        if let Some(&v) = xs.last() {
            if v >= self.n {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(match xs.len() {
            0 => self.edges.len() as u64,
            1 => self.incidence[xs[0]].len() as u64,
            2 => *self.pair_index().get(&(xs[0], xs[1])).unwrap_or(&0),
            len if len == self.r - 1 => *self.last_shadow_index().get(&xs).unwrap_or(&0),
            _ => {
                // Built on demand: scan the incidence list of the least-degree member.
                let pivot = *xs.iter().min_by_key(|&&v| self.incidence[v].len()).unwrap();
                self.incidence[pivot]
                    .iter()
                    .filter(|&&id| is_subset(&xs, &self.edges[id]))
                    .count() as u64
            }
        })
    }

    /// Fast path for pair codegrees (the arity hammered by cleanup and typing).
    pub fn pair_codegree(&self, u: usize, v: usize) -> u64 {
        let key = if u < v { (u, v) } else { (v, u) };
        *self.pair_index().get(&key).unwrap_or(&0)
    }

    /// All `k`-shadows (k-subsets lying in at least one edge) with exact codegrees.
    pub fn k_shadows(&self, k: usize) -> Result<Vec<ShadowKey>, HypergraphError> {
        if k == 0 || k >= self.r {
            return Err(HypergraphError::ShadowArity { j: k, r: self.r });
        }
        let mut map: HashMap<Vec<usize>, u64> = HashMap::new();
        let mut subset = Vec::with_capacity(k);
        for e in &self.edges {
            enumerate_subsets(e, k, 0, &mut subset, &mut |s| {
                *map.entry(s.to_vec()).or_insert(0) += 1;
            });
        }
        let mut out: Vec<ShadowKey> = map
            .into_iter()
            .map(|(vertices, codegree)| ShadowKey { vertices, codegree })
            .collect();
        out.sort_unstable_by(|a, b| a.vertices.cmp(&b.vertices));
        Ok(out)
    }

    /// `Δ_j(H)`: maximum codegree over j-shadows; 0 on an empty hypergraph.
    pub fn max_codegree(&self, j: usize) -> Result<u64, HypergraphError> {
        if j == 0 || j >= self.r {
            return Err(HypergraphError::ShadowArity { j, r: self.r });
        }
        if self.edges.is_empty() {
            return Ok(0);
        }
        Ok(match j {
            1 => self.incidence.iter().map(|l| l.len() as u64).max().unwrap_or(0),
            2 => self.pair_index().values().copied().max().unwrap_or(0),
            j if j == self.r - 1 => self.last_shadow_index().values().copied().max().unwrap_or(0),
            j => self.k_shadows(j)?.iter().map(|s| s.codegree).max().unwrap_or(0),
        })
    }

    /// No two edges share two or more vertices.
    pub fn is_linear(&self) -> bool {
        self.pair_index().values().all(|&c| c <= 1)
    }

    /// Keeps exactly the edges inside `keep`; vertices reindexed densely.
    /// Returns the subgraph together with `old_of_new`: the original label of
    /// each new vertex.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Hypergraph, Vec<usize>) {
        let mut old_of_new: Vec<usize> = keep.to_vec();
        old_of_new.sort_unstable();
        old_of_new.dedup();
        let mut new_of_old: HashMap<usize, usize> = HashMap::with_capacity(old_of_new.len());
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old.insert(old, new);
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| new_of_old.contains_key(v)))
            .map(|e| e.iter().map(|v| new_of_old[v]).collect())
            .collect();
        let sub = Hypergraph::new(self.r, old_of_new.len(), edges)
            .expect("induced edges inherit validity");
        (sub, old_of_new)
    }

    /// Iteratively deletes vertices of degree < `d_min` (with their edges)
    /// until every remaining degree is at least `d_min`. The result is the
    /// unique maximal sub-hypergraph of minimum degree ≥ `d_min`, possibly
    /// empty. Returns the relabeling `old_of_new`.
    pub fn peel_min_degree(&self, d_min: usize) -> (Hypergraph, Vec<usize>) {
        if d_min == 0 {
            return (self.clone(), (0..self.n).collect());
        }
        let mut alive_edge = vec![true; self.edges.len()];
        let mut alive_vertex = vec![true; self.n];
        let mut degree: Vec<usize> = self.incidence.iter().map(|l| l.len()).collect();
        let mut queue: VecDeque<usize> =
            (0..self.n).filter(|&v| degree[v] < d_min).collect();
        let mut queued = vec![false; self.n];
        for &v in &queue {
            queued[v] = true;
        }
        while let Some(v) = queue.pop_front() {
            alive_vertex[v] = false;
            for &id in &self.incidence[v] {
                if alive_edge[id] {
                    alive_edge[id] = false;
                    for &u in &self.edges[id] {
                        if alive_vertex[u] {
                            degree[u] -= 1;
                            if degree[u] < d_min && !queued[u] {
                                queued[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                }
            }
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| alive_vertex[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Layer sizes `m_1..m_depth`: the number of vertices at shortest
    /// alternating-path distance exactly `i` from `x`.
    pub fn distance_layers(&self, x: usize, depth: usize) -> Result<Vec<u64>, HypergraphError> {
        if x >= self.n {
            return Err(HypergraphError::VertexOutOfRange { vertex: x, n: self.n });
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[x] = 0;
        let mut layers = vec![0u64; depth];
        let mut frontier = vec![x];
        for d in 1..=depth {
            let mut next = Vec::new();
            for &v in &frontier {
                for &id in &self.incidence[v] {
                    for &u in &self.edges[id] {
                        if dist[u] == usize::MAX {
                            dist[u] = d;
                            next.push(u);
                        }
                    }
                }
            }
            layers[d - 1] = next.len() as u64;
            frontier = next;
        }
        Ok(layers)
    }
}

/// An r-partite hypergraph: every edge hits each class exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedHypergraph {
    base: Hypergraph,
    /// vertex -> class index in [0, r).
    classes: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl PartitionedHypergraph {
    pub fn new(base: Hypergraph, classes: Vec<usize>) -> Result<Self, HypergraphError> {
        let r = base.uniformity();
        if classes.len() != base.vertex_count() {
            return Err(HypergraphError::BadPartition {
                r,
                reason: format!(
                    "{} class labels for {} vertices",
                    classes.len(),
                    base.vertex_count()
                ),
            });
        }
        for (v, &c) in classes.iter().enumerate() {
            if c >= r {
                return Err(HypergraphError::BadPartition {
                    r,
                    reason: format!("vertex {v} assigned to class {c}"),
                });
            }
        }
        for e in base.edges() {
            let mut seen = vec![false; r];
            for &v in e {
                if seen[classes[v]] {
                    return Err(HypergraphError::NotTransversal {
                        edge: e.clone(),
                        reason: format!("class {} hit twice", classes[v]),
                    });
                }
                seen[classes[v]] = true;
            }
        }
        let mut members = vec![Vec::new(); r];
        for (v, &c) in classes.iter().enumerate() {
            members[c].push(v);
        }
        Ok(PartitionedHypergraph { base, classes, members })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn class_count(&self) -> usize {
        self.base.uniformity()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn class_members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.len()).collect()
    }

    /// The vertex of `edge` lying in class `c` (edges are transversal).
    pub fn edge_vertex_in_class(&self, edge: &[usize], c: usize) -> usize {
        *edge.iter().find(|&&v| self.classes[v] == c).expect("transversal edge")
    }

    /// Relabels classes by `perm`: new class `i` is old class `perm[i]`.
    pub fn relabel_classes(&self, perm: &[usize]) -> Result<Self, HypergraphError> {
        let r = self.class_count();
        let mut inv = vec![usize::MAX; r];
        for (new, &old) in perm.iter().enumerate() {
            if old >= r || inv[old] != usize::MAX {
                return Err(HypergraphError::BadPartition {
                    r,
                    reason: format!("{perm:?} is not a permutation of the classes"),
                });
            }
            inv[old] = new;
        }
        let classes = self.classes.iter().map(|&c| inv[c]).collect();
        PartitionedHypergraph::new(self.base.clone(), classes)
    }

    /// The bipartite 2-shadow graph `∂_{ij}` between classes `i` and `j`,
    /// on the same vertex labels as the host.
    pub fn pair_shadow_graph(&self, i: usize, j: usize) -> Result<Graph2, HypergraphError> {
        let r = self.class_count();
        if i >= r {
            return Err(HypergraphError::ClassOutOfRange { class: i, r });
        }
        if j >= r {
            return Err(HypergraphError::ClassOutOfRange { class: j, r });
        }
        if i == j {
            return Err(HypergraphError::SameClass(i));
        }
        let mut pairs: HashSet<(usize, usize)> = HashSet::new();
        for e in self.base.edges() {
            let u = self.edge_vertex_in_class(e, i);
            let v = self.edge_vertex_in_class(e, j);
            pairs.insert(if u < v { (u, v) } else { (v, u) });
        }
        let mut edges: Vec<(usize, usize)> = pairs.into_iter().collect();
        edges.sort_unstable();
        Ok(Graph2::new(self.base.vertex_count(), edges))
    }
}

/// A simple undirected 2-graph, used for pair shadows and even-cycle work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph2 {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph2 {
    /// `edges` must be in-range; duplicates and loops are dropped.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut canon: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(a, b)| a != b && a < n && b < n)
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        canon.sort_unstable();
        canon.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Graph2 { n, edges: canon, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }
}

pub(crate) fn is_subset(xs: &[usize], sorted_edge: &[usize]) -> bool {
    let mut it = sorted_edge.iter();
    'outer: for &x in xs {
        for &v in it.by_ref() {
            if v == x {
                continue 'outer;
            }
            if v > x {
                return false;
            }
        }
        return false;
    }
    true
}

pub(crate) fn enumerate_subsets(
    edge: &[usize],
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
    for i in start..=edge.len().saturating_sub(need) {
        acc.push(edge[i]);
        enumerate_subsets(edge, k, i + 1, acc, f);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(r: usize) -> Hypergraph {
        Hypergraph::new(r, r, vec![(0..r).collect()]).unwrap()
    }

    fn c33() -> Hypergraph {
        Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap()
    }

    #[test]
    fn validate_normalizes_and_dedups() {
        let h = Hypergraph::new(3, 3, vec![vec![2, 1, 0], vec![0, 1, 2]]).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edges()[0], vec![0, 1, 2]);
        assert!((0..3).all(|v| h.degree(v) == 1));
    }

    #[test]
    fn validate_rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::new(3, 2, vec![vec![0, 0, 1]]),
            Err(HypergraphError::RepeatedVertex { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 2, vec![vec![0, 1, 2]]),
            Err(HypergraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Hypergraph::new(1, 3, vec![]),
            Err(HypergraphError::UniformityTooSmall(1))
        ));
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 1]]),
            Err(HypergraphError::WrongEdgeSize { .. })
        ));
    }

    #[test]
    fn codegree_basics() {
        let h = c33();
        assert_eq!(h.codegree(&[0, 1]).unwrap(), 1);
        assert_eq!(h.codegree(&[1, 2]).unwrap(), 1);
        let s = single(3);
        assert_eq!(s.codegree(&[0]).unwrap(), 1);
        let s4 = Hypergraph::new(3, 4, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(s4.codegree(&[0, 3]).unwrap(), 0);
        assert!(s4.codegree(&[0, 1, 2]).is_err());
    }

    #[test]
    fn max_codegree_examples() {
        // Complete 3-graph on 4 vertices: each pair lies in n-2 = 2 triples.
        let k4 = Hypergraph::new(
            3,
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap();
        assert_eq!(k4.max_codegree(2).unwrap(), 2);
        assert_eq!(single(3).max_codegree(2).unwrap(), 1);
        assert_eq!(Hypergraph::empty(3, 5).unwrap().max_codegree(1).unwrap(), 0);
    }

    #[test]
    fn codegree_sums_match_edge_count() {
        // Σ over k-subsets of codegree = C(r,k)·e(H).
        let h = c33();
        for k in 1..3 {
            let total: u64 = h.k_shadows(k).unwrap().iter().map(|s| s.codegree).sum();
            let choose = [0, 3, 3][k];
            assert_eq!(total, choose * h.edge_count() as u64);
        }
    }

    #[test]
    fn induced_subgraph_identity_and_empty() {
        let h = c33();
        let (same, relab) = h.induced_subgraph(&(0..6).collect::<Vec<_>>());
        assert_eq!(same, h);
        assert_eq!(relab, (0..6).collect::<Vec<_>>());

        let (none, relab) = h.induced_subgraph(&[]);
        assert_eq!(none.edge_count(), 0);
        assert_eq!(none.vertex_count(), 0);
        assert!(relab.is_empty());

        let (one, _) = h.induced_subgraph(&[0, 1, 2]);
        assert_eq!(one.edge_count(), 1);
    }

    #[test]
    fn peel_examples() {
        let h = c33();
        let (same, _) = h.peel_min_degree(0);
        assert_eq!(same, h);

        // Degree-1 midpoints drop, then every edge dies.
        let (empty, _) = h.peel_min_degree(2);
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);

        let s = single(3);
        let (kept, _) = s.peel_min_degree(1);
        assert_eq!(kept, s);
    }

    #[test]
    fn peel_idempotent() {
        let h = Hypergraph::new(
            3,
            8,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3], vec![3, 4, 5]],
        )
        .unwrap();
        let (p1, _) = h.peel_min_degree(2);
        let (p2, _) = p1.peel_min_degree(2);
        assert_eq!(p1, p2);
        assert!(p1.edge_count() > 0);
        assert!((0..p1.vertex_count()).all(|v| p1.degree(v) >= 2));
    }

    #[test]
    fn distance_layers_examples() {
        let s = single(3);
        assert_eq!(s.distance_layers(0, 1).unwrap(), vec![2]);

        // From a hinge of C^3_3: two incident edges, two new vertices each.
        let h = c33();
        assert_eq!(h.distance_layers(0, 1).unwrap(), vec![4]);
        assert_eq!(h.distance_layers(0, 2).unwrap(), vec![4, 1]);
        // From a midpoint: one incident edge.
        assert_eq!(h.distance_layers(1, 1).unwrap(), vec![2]);

        let e = Hypergraph::empty(3, 4).unwrap();
        assert_eq!(e.distance_layers(2, 3).unwrap(), vec![0, 0, 0]);
        assert!(e.distance_layers(7, 1).is_err());
    }

    #[test]
    fn partition_validation() {
        let h = single(3);
        let p = PartitionedHypergraph::new(h.clone(), vec![0, 1, 2]).unwrap();
        assert_eq!(p.class_sizes(), vec![1, 1, 1]);
        assert!(PartitionedHypergraph::new(h.clone(), vec![0, 0, 2]).is_err());
        assert!(PartitionedHypergraph::new(h, vec![0, 1]).is_err());
    }

    #[test]
    fn pair_shadow_graph_examples() {
        let h = single(3);
        let p = PartitionedHypergraph::new(h, vec![0, 1, 2]).unwrap();
        let g = p.pair_shadow_graph(0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(p.pair_shadow_graph(1, 1).is_err());

        // Two hyperedges sharing their class-0,1 vertices: shadow dedups.
        let h2 = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let p2 = PartitionedHypergraph::new(h2, vec![0, 1, 2, 2]).unwrap();
        assert_eq!(p2.pair_shadow_graph(0, 1).unwrap().edge_count(), 1);

        // Complete 3-partite with parts of size 2: 4 pairs between any two classes.
        let mut edges = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    edges.push(vec![a, 2 + b, 4 + c]);
                }
            }
        }
        let h3 = Hypergraph::new(3, 6, edges).unwrap();
        let p3 = PartitionedHypergraph::new(h3, vec![0, 0, 1, 1, 2, 2]).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(p3.pair_shadow_graph(i, j).unwrap().edge_count(), 4);
        }
    }

    #[test]
    fn shadow_count_bounded_by_edges() {
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 4]]).unwrap();
        let p = PartitionedHypergraph::new(h, vec![0, 1, 2, 2, 1]).unwrap();
        let g = p.pair_shadow_graph(0, 1).unwrap();
        assert!(g.edge_count() <= p.base().edge_count());
    }
}
