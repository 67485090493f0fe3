//! The constructive supersaturation machinery: transversal partitioning,
//! dyadic type classification, codegree cleanup, the codegree dichotomy,
//! greedy cycle expansion, even-cycle extension, the full pipeline, and the
//! closed-form exponent algebra.
//!
//! Every stage re-verifies its own postcondition before returning, and the
//! pipeline emits one trace record per stage with exact finite-n values.
//! All logarithms in finite-n bounds are base 2.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::constructions::{binomial, RngSeed};
use crate::counting::even_cycle_enumerate;
use crate::hypergraph::{Hypergraph, HypergraphError, PartitionedHypergraph};
use crate::report::StageRecord;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Count(#[from] crate::counting::CountError),
    #[error("input hypergraph has no edges")]
    EmptyInput,
    #[error("uniformity must be at least 3, got {0}")]
    UniformityTooSmall(usize),
    #[error("threshold {a} outside the admissible interval ({lo_num}/{lo_den}, {hi}]")]
    InadmissibleThreshold { a: u64, lo_num: u128, lo_den: u128, hi: usize },
    #[error("vertices {0} and {1} lie in the same class")]
    SameClass(usize, usize),
    #[error("edge {edge:?} missing from the host graph")]
    NotASubgraph { edge: Vec<usize> },
    #[error("shadow {shadow:?} has codegree {codegree}, below the floor {floor}")]
    ShadowBelowThreshold { shadow: Vec<usize>, codegree: u64, floor: u64 },
    #[error("no regular candidate satisfied the dichotomy contract (input e={edges}, A={a})")]
    DichotomyFailed { edges: usize, a: u64 },
    #[error("stage {stage} failed verification: {detail}")]
    StageVerification { stage: String, detail: String },
    #[error("parameter out of range: {0}")]
    Domain(String),
}

// ---------------------------------------------------------------------------
// Transversal partitioning
// ---------------------------------------------------------------------------

/// `⌈r!·e / r^r⌉`, the guaranteed transversal edge count.
pub fn partition_floor(r: usize, edges: usize) -> u64 {
    let mut fact: u128 = 1;
    for i in 2..=r {
        fact *= i as u128;
    }
    let num = fact * edges as u128;
    let den = (r as u128).pow(r as u32);
    num.div_ceil(den) as u64
}

fn transversal_edges(g: &Hypergraph, classes: &[usize]) -> Vec<Vec<usize>> {
    let r = g.uniformity();
    g.edges()
        .iter()
        .filter(|e| {
            let mut seen = vec![false; r];
            e.iter().all(|&v| {
                let c = classes[v];
                !std::mem::replace(&mut seen[c], true)
            })
        })
        .cloned()
        .collect()
}

/// Random r-partition with at least `⌈r!·e(G)/r^r⌉` transversal edges; up to
/// `trials` independent uniform colorings, then the method of conditional
/// expectations, which always meets the floor.
pub fn erdos_kleitman_partition(
    g: &Hypergraph,
    trials: u32,
    seed: RngSeed,
) -> Result<PartitionedHypergraph, PipelineError> {
    if g.edge_count() == 0 {
        return Err(PipelineError::EmptyInput);
    }
    let r = g.uniformity();
    let n = g.vertex_count();
    let floor = partition_floor(r, g.edge_count());
    let mut rng = seed.rng();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for _ in 0..trials {
        let classes: Vec<usize> = (0..n).map(|_| rng.random_range(0..r)).collect();
        let count = transversal_edges(g, &classes).len();
        if best.as_ref().is_none_or(|(c, _)| count > *c) {
            best = Some((count, classes));
        }
    }
    if let Some((count, classes)) = best {
        if count as u64 >= floor {
            let edges = transversal_edges(g, &classes);
            let base = Hypergraph::new(r, n, edges)?;
            return Ok(PartitionedHypergraph::new(base, classes)?);
        }
    }

    // Conditional expectations, tracked as integer weights W_e = (r-f)!·r^f
    // where f is the number of already-assigned vertices of e (weight 0 on a
    // class clash); Σ W_e = r^r · E[transversal count | assignment].
    let mut classes = vec![usize::MAX; n];
    let falling: Vec<u128> = {
        let mut fact = vec![1u128; r + 1];
        for i in 1..=r {
            fact[i] = fact[i - 1] * i as u128;
        }
        (0..=r).map(|f| fact[r - f] * (r as u128).pow(f as u32)).collect()
    };
    let edge_weight = |e: &[usize], classes: &[usize]| -> u128 {
        let mut used = 0u32;
        let mut fixed = 0usize;
        for &v in e {
            let c = classes[v];
            if c != usize::MAX {
                if used & (1 << c) != 0 {
                    return 0;
                }
                used |= 1 << c;
                fixed += 1;
            }
        }
        falling[fixed]
    };
    for v in 0..n {
        let mut best_class = 0;
        let mut best_weight = 0u128;
        for c in 0..r {
            classes[v] = c;
            let w: u128 = g
                .incident_edges(v)
                .iter()
                .map(|&id| edge_weight(g.edge(id), &classes))
                .sum();
            if c == 0 || w > best_weight {
                best_weight = w;
                best_class = c;
            }
        }
        classes[v] = best_class;
    }
    let edges = transversal_edges(g, &classes);
    assert!(
        edges.len() as u64 >= floor,
        "conditional expectations must meet the floor: {} < {floor}",
        edges.len()
    );
    let base = Hypergraph::new(r, n, edges)?;
    Ok(PartitionedHypergraph::new(base, classes)?)
}

// ---------------------------------------------------------------------------
// Dyadic type classification
// ---------------------------------------------------------------------------

/// Dyadic type: for each unordered class pair, the exponent `y_ij ≥ 1` with
/// `2^{y_ij - 1} ≤ d_H(e ∩ (V_i ∪ V_j)) < 2^{y_ij}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeVector {
    pub y: BTreeMap<(usize, usize), u32>,
}

impl TypeVector {
    /// `Δ_ij = 2^{y_ij}`.
    pub fn delta(&self, i: usize, j: usize) -> u64 {
        let key = if i < j { (i, j) } else { (j, i) };
        1u64 << self.y[&key]
    }
}

fn dyadic_exponent(d: u64) -> u32 {
    // y with 2^{y-1} <= d < 2^y, for d >= 1
    64 - d.leading_zeros()
}

/// Classifies every edge by its pair-codegree type and returns the most
/// populous type with its sub-hypergraph.
pub fn classify_types(
    p: &PartitionedHypergraph,
) -> Result<(TypeVector, PartitionedHypergraph), PipelineError> {
    if p.base().edge_count() == 0 {
        return Err(PipelineError::EmptyInput);
    }
    let r = p.class_count();
    let pairs: Vec<(usize, usize)> = (0..r)
        .flat_map(|i| ((i + 1)..r).map(move |j| (i, j)))
        .collect();
    let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (id, e) in p.base().edges().iter().enumerate() {
        let mut ty = Vec::with_capacity(pairs.len());
        for &(i, j) in &pairs {
            let u = p.edge_vertex_in_class(e, i);
            let v = p.edge_vertex_in_class(e, j);
            let d = p.base().pair_codegree(u, v);
            debug_assert!(d >= 1);
            ty.push(dyadic_exponent(d));
        }
        groups.entry(ty).or_default().push(id);
    }
    let type_count = groups.len();
    let (best_ty, best_edges) = groups
        .into_iter()
        .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0)))
        .expect("nonempty");
    assert!(best_edges.len() * type_count >= p.base().edge_count());
    let edges: Vec<Vec<usize>> = best_edges.iter().map(|&id| p.base().edge(id).to_vec()).collect();
    let base = Hypergraph::new(r, p.base().vertex_count(), edges)?;
    let h0 = PartitionedHypergraph::new(base, p.classes().to_vec())?;
    let y = pairs.into_iter().zip(best_ty).collect();
    Ok((TypeVector { y }, h0))
}

// ---------------------------------------------------------------------------
// Codegree cleanup
// ---------------------------------------------------------------------------

/// The deletion threshold used by the cleanup stage in the pipeline:
/// `(2·log₂(n^r))^{-r²}`.
pub fn paper_cleanup_factor(n: usize, r: usize) -> f64 {
    let base = 2.0 * r as f64 * (n as f64).log2();
    base.powi(-((r * r) as i32))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanupRound {
    /// Pair in the labels of the input graph.
    pub pair: (usize, usize),
    pub removed: usize,
}

#[derive(Debug, Clone)]
pub struct CleanupOutcome {
    /// The cleaned graph, isolated vertices dropped.
    pub result: PartitionedHypergraph,
    /// Original label of each surviving vertex.
    pub old_of_new: Vec<usize>,
    pub rounds: Vec<CleanupRound>,
    pub surviving_edges: usize,
}

/// Repeatedly deletes all edges containing a live cross pair whose current
/// codegree is positive but below `threshold_factor · d_host(pair)`; on
/// termination every surviving pair satisfies the threshold. The result is
/// the unique maximal such subgraph (deletion order does not matter).
pub fn codegree_cleanup(
    h0: &PartitionedHypergraph,
    host: &Hypergraph,
    threshold_factor: f64,
) -> Result<CleanupOutcome, PipelineError> {
    if !(threshold_factor > 0.0 && threshold_factor <= 1.0) {
        return Err(PipelineError::Domain(format!(
            "threshold factor must lie in (0, 1], got {threshold_factor}"
        )));
    }
    for e in h0.base().edges() {
        if !host.has_edge(e) {
            return Err(PipelineError::NotASubgraph { edge: e.clone() });
        }
    }
    let base = h0.base();
    let mut alive = vec![true; base.edge_count()];
    let mut rounds = Vec::new();
    loop {
        // current pair codegrees over live edges
        let mut current: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (id, e) in base.edges().iter().enumerate() {
            if !alive[id] {
                continue;
            }
            for a in 0..e.len() {
                for b in (a + 1)..e.len() {
                    current.entry((e[a], e[b])).or_default().push(id);
                }
            }
        }
        let mut deleted_this_pass = false;
        for (&pair, ids) in &current {
            let d_cur = ids.iter().filter(|&&id| alive[id]).count();
            if d_cur == 0 {
                continue;
            }
            let d_host = host.pair_codegree(pair.0, pair.1) as f64;
            if (d_cur as f64) < threshold_factor * d_host {
                let mut removed = 0;
                for &id in ids {
                    if std::mem::replace(&mut alive[id], false) {
                        removed += 1;
                    }
                }
                rounds.push(CleanupRound { pair, removed });
                deleted_this_pass = true;
            }
        }
        if !deleted_this_pass {
            break;
        }
    }
    let surviving: Vec<Vec<usize>> = base
        .edges()
        .iter()
        .enumerate()
        .filter(|(id, _)| alive[*id])
        .map(|(_, e)| e.clone())
        .collect();
    let surviving_edges = surviving.len();
    // fixed-point check
    {
        let mut pair_count: HashMap<(usize, usize), u64> = HashMap::new();
        for e in &surviving {
            for a in 0..e.len() {
                for b in (a + 1)..e.len() {
                    *pair_count.entry((e[a], e[b])).or_insert(0) += 1;
                }
            }
        }
        for (&(u, v), &d) in &pair_count {
            let d_host = host.pair_codegree(u, v) as f64;
            assert!(
                d as f64 >= threshold_factor * d_host,
                "cleanup fixed point violated at pair ({u},{v})"
            );
        }
    }
    let mut covered: Vec<usize> = surviving.iter().flatten().copied().collect();
    covered.sort_unstable();
    covered.dedup();
    let (sub, old_of_new) = {
        // keep only covered vertices
        let keep = covered.clone();
        let (graph, relab) = base_with_edges(base, &surviving).induced_subgraph(&keep);
        (graph, relab)
    };
    let classes: Vec<usize> = old_of_new.iter().map(|&old| h0.class_of(old)).collect();
    let result = PartitionedHypergraph::new(sub, classes)?;
    Ok(CleanupOutcome { result, old_of_new, rounds, surviving_edges })
}

fn base_with_edges(template: &Hypergraph, edges: &[Vec<usize>]) -> Hypergraph {
    Hypergraph::new(template.uniformity(), template.vertex_count(), edges.to_vec())
        .expect("edges come from a valid graph")
}

// ---------------------------------------------------------------------------
// Third-vertex extension sets
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct ThirdVertexSets {
    pub codegree: u64,
    /// For each class other than the endpoints': the vertices x with
    /// `{u1, u2, x}` contained in some edge.
    pub per_class: Vec<(usize, Vec<usize>)>,
    /// `⌈d^{1/(r-2)}⌉`, which the largest set always meets when d > 0.
    pub pigeonhole_floor: u64,
}

/// Smallest `t` with `t^k ≥ d`.
fn ceil_root(d: u64, k: u32) -> u64 {
    if d <= 1 || k == 1 {
        return d;
    }
    let mut lo = 1u64;
    let mut hi = d;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let mut pow = 1u128;
        let mut overflow = false;
        for _ in 0..k {
            pow = pow.saturating_mul(mid as u128);
            if pow >= d as u128 {
                overflow = true;
                break;
            }
        }
        if overflow && pow >= d as u128 {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

pub fn third_vertex_sets(
    p: &PartitionedHypergraph,
    u1: usize,
    u2: usize,
) -> Result<ThirdVertexSets, PipelineError> {
    let r = p.class_count();
    if r < 3 {
        return Err(PipelineError::UniformityTooSmall(r));
    }
    let (c1, c2) = (p.class_of(u1), p.class_of(u2));
    if c1 == c2 {
        return Err(PipelineError::SameClass(u1, u2));
    }
    let mut per_class: Vec<(usize, Vec<usize>)> = (0..r)
        .filter(|&c| c != c1 && c != c2)
        .map(|c| (c, Vec::new()))
        .collect();
    let mut codegree = 0u64;
    for &id in p.base().incident_edges(u1) {
        let e = p.base().edge(id);
        if !e.contains(&u2) {
            continue;
        }
        codegree += 1;
        for &x in e {
            if x == u1 || x == u2 {
                continue;
            }
            let c = p.class_of(x);
            let slot = per_class.iter_mut().find(|(cc, _)| *cc == c).expect("other class");
            slot.1.push(x);
        }
    }
    for (_, xs) in &mut per_class {
        xs.sort_unstable();
        xs.dedup();
    }
    let pigeonhole_floor = if codegree == 0 { 0 } else { ceil_root(codegree, (r - 2) as u32) };
    if codegree > 0 {
        let max_size = per_class.iter().map(|(_, xs)| xs.len() as u64).max().unwrap_or(0);
        assert!(
            max_size >= pigeonhole_floor,
            "pigeonhole floor violated: max {max_size} < {pigeonhole_floor}"
        );
    }
    Ok(ThirdVertexSets { codegree, per_class, pigeonhole_floor })
}

// ---------------------------------------------------------------------------
// Codegree dichotomy
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum DichotomyOutcome {
    /// Every (r-1)-shadow of the subgraph has codegree at least `a`, and at
    /// least half the input edges survive.
    Dense { subgraph: Hypergraph, a: u64 },
    /// At least `e/(4r·log₂ n)` edges whose shadows on the designated side
    /// all have codegree in `[d/2, d)`, with `e/(4n^{r-1}) < d ≤ a`.
    Regular { subgraph: PartitionedHypergraph, d: u64, shadow_side: Vec<usize> },
}

fn side_shadow(edge: &[usize], classes: &[usize], side: usize) -> Vec<usize> {
    edge.iter().copied().filter(|&v| classes[v] != side).collect()
}

/// Floor for the regular branch: `e / (4r·log₂ n)`.
pub fn regular_edge_floor(edges: usize, r: usize, n: usize) -> f64 {
    edges as f64 / (4.0 * r as f64 * (n as f64).log2())
}

/// The codegree dichotomy. The dense attempt cascades away every edge with
/// any low-codegree (r-1)-shadow; if fewer than half survive, the deleted
/// edges (bucketed by side and dyadic deletion-time codegree) and the
/// original graph (bucketed by side and dyadic codegree below `a`) supply
/// regular candidates, and the largest candidate passing an exhaustive
/// re-scan is returned.
pub fn codegree_dichotomy(
    p: &PartitionedHypergraph,
    a: u64,
) -> Result<DichotomyOutcome, PipelineError> {
    let base = p.base();
    let r = p.class_count();
    let n = base.vertex_count();
    let e_input = base.edge_count();
    if e_input == 0 {
        return Err(PipelineError::EmptyInput);
    }
    // admissible: e/(4n^{r-1}) < A <= n
    let lo_num = e_input as u128;
    let lo_den = 4u128 * (n as u128).pow((r - 1) as u32);
    if a as usize > n || (a as u128) * lo_den <= lo_num {
        return Err(PipelineError::InadmissibleThreshold { a, lo_num, lo_den, hi: n });
    }

    let classes = p.classes();
    // per edge, per side: the (r-1)-shadow opposite that side
    let shadows: Vec<Vec<Vec<usize>>> = base
        .edges()
        .iter()
        .map(|e| (0..r).map(|s| side_shadow(e, classes, s)).collect())
        .collect();

    // per-side shadow states: shadow -> (live count, member edge ids)
    type ShadowState = HashMap<Vec<usize>, (u64, Vec<usize>)>;
    let mut state: Vec<ShadowState> = vec![HashMap::new(); r];
    for (id, per_side) in shadows.iter().enumerate() {
        for (s, sh) in per_side.iter().enumerate() {
            let entry = state[s].entry(sh.clone()).or_insert((0, Vec::new()));
            entry.0 += 1;
            entry.1.push(id);
        }
    }
    let original_counts: Vec<HashMap<Vec<usize>, u64>> = state
        .iter()
        .map(|m| m.iter().map(|(k, v)| (k.clone(), v.0)).collect())
        .collect();

    let mut alive = vec![true; e_input];
    let mut deletion_tag: Vec<Option<(usize, u64)>> = vec![None; e_input]; // (side, codegree at deletion)
    let mut queue: VecDeque<(usize, Vec<usize>)> = VecDeque::new();
    for (s, m) in state.iter().enumerate() {
        let mut keys: Vec<&Vec<usize>> = m.iter().filter(|(_, v)| v.0 < a).map(|(k, _)| k).collect();
        keys.sort_unstable();
        for k in keys {
            queue.push_back((s, k.clone()));
        }
    }
    while let Some((s, sh)) = queue.pop_front() {
        let (count, ids) = match state[s].get(&sh) {
            Some(v) => (v.0, v.1.clone()),
            None => continue,
        };
        if count == 0 || count >= a {
            continue;
        }
        for id in ids {
            if !std::mem::replace(&mut alive[id], false) {
                continue;
            }
            deletion_tag[id] = Some((s, count));
            for (s2, sh2) in shadows[id].iter().enumerate() {
                let entry = state[s2].get_mut(sh2).expect("indexed");
                entry.0 -= 1;
                if entry.0 > 0 && entry.0 < a {
                    queue.push_back((s2, sh2.clone()));
                }
            }
        }
    }

    let survivors: Vec<usize> = (0..e_input).filter(|&id| alive[id]).collect();
    if survivors.len() * 2 >= e_input {
        let edges: Vec<Vec<usize>> = survivors.iter().map(|&id| base.edge(id).to_vec()).collect();
        let subgraph = Hypergraph::new(base.uniformity(), n, edges)?;
        // re-verify: every (r-1)-shadow has codegree >= a
        for sk in subgraph.k_shadows(r - 1)? {
            if sk.codegree < a {
                return Err(PipelineError::StageVerification {
                    stage: "dichotomy.dense".into(),
                    detail: format!("shadow {:?} has codegree {}", sk.vertices, sk.codegree),
                });
            }
        }
        return Ok(DichotomyOutcome::Dense { subgraph, a });
    }

    // regular candidates keyed by (family, side, D): family 0 buckets the
    // deleted edges by deletion-time codegree, family 1 buckets the whole
    // input by original codegree below A
    let mut candidates: BTreeMap<(u8, usize, u64), Vec<usize>> = BTreeMap::new();
    for (id, tag) in deletion_tag.iter().enumerate() {
        if let Some((s, d)) = *tag {
            let ceiling = (1u64 << dyadic_exponent(d)).min(a);
            candidates.entry((0, s, ceiling)).or_default().push(id);
        }
    }
    for s in 0..r {
        for (id, per_side) in shadows.iter().enumerate() {
            let d0 = original_counts[s][&per_side[s]];
            if d0 < a {
                let ceiling = (1u64 << dyadic_exponent(d0)).min(a);
                candidates.entry((1, s, ceiling)).or_default().push(id);
            }
        }
    }

    let floor = regular_edge_floor(e_input, r, n);
    let mut best: Option<(usize, u64, Vec<usize>)> = None; // (side, D, ids)
    for ((_, s, d_ceiling), ids) in candidates {
        if (d_ceiling as u128) * lo_den <= lo_num {
            continue; // D too small
        }
        if (ids.len() as f64) < floor - 1e-9 {
            continue;
        }
        if !regular_sandwich_holds(base, classes, &ids, s, d_ceiling) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((_, _, cur)) => ids.len() > cur.len(),
        };
        if better {
            best = Some((s, d_ceiling, ids));
        }
    }
    let (side, d, ids) = best.ok_or(PipelineError::DichotomyFailed { edges: e_input, a })?;
    let edges: Vec<Vec<usize>> = ids.iter().map(|&id| base.edge(id).to_vec()).collect();
    let sub_base = Hypergraph::new(base.uniformity(), n, edges)?;
    let subgraph = PartitionedHypergraph::new(sub_base, classes.to_vec())?;
    let shadow_side: Vec<usize> = (0..r).filter(|&c| c != side).collect();
    Ok(DichotomyOutcome::Regular { subgraph, d, shadow_side })
}

fn regular_sandwich_holds(
    base: &Hypergraph,
    classes: &[usize],
    ids: &[usize],
    side: usize,
    d: u64,
) -> bool {
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for &id in ids {
        *counts.entry(side_shadow(base.edge(id), classes, side)).or_insert(0) += 1;
    }
    counts.values().all(|&c| 2 * c >= d && c < d)
}

// ---------------------------------------------------------------------------
// Cycle certificates
// ---------------------------------------------------------------------------

/// A labeled witness of one copy of `C^r_{2ℓ+1}`: hinge vertices
/// `w_0..w_{2ℓ}` (cyclically, `w_{2ℓ+1} = w_0`), interior vertices
/// `v_{i,j}`, and edges `e_i = {v_{i,1}, …, v_{i,r-2}, w_{i-1}, w_i}`.
/// Edge `i` (0-based) joins `hinges[i]` and `hinges[(i+1) mod (2ℓ+1)]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycleCertificate {
    pub ell: usize,
    pub hinges: Vec<usize>,
    pub interiors: Vec<Vec<usize>>,
    pub edges: Vec<Vec<usize>>,
}

impl CycleCertificate {
    /// Checks every structural invariant: shapes, pairwise-distinct named
    /// vertices, edge composition, hinge-only consecutive intersections,
    /// disjoint non-consecutive edges.
    pub fn validate(&self, r: usize) -> Result<(), String> {
        let k = 2 * self.ell + 1;
        if self.ell < 1 {
            return Err("ell must be at least 1".into());
        }
        if self.hinges.len() != k {
            return Err(format!("expected {k} hinges, got {}", self.hinges.len()));
        }
        if self.interiors.len() != k || self.interiors.iter().any(|row| row.len() != r - 2) {
            return Err("interiors must be (2ℓ+1) rows of r-2 vertices".into());
        }
        if self.edges.len() != k {
            return Err(format!("expected {k} edges, got {}", self.edges.len()));
        }
        let mut named: Vec<usize> = self.hinges.clone();
        named.extend(self.interiors.iter().flatten().copied());
        let total = named.len();
        named.sort_unstable();
        named.dedup();
        if named.len() != total {
            return Err("named vertices are not pairwise distinct".into());
        }
        for i in 0..k {
            let mut expected: Vec<usize> = self.interiors[i].clone();
            expected.push(self.hinges[i]);
            expected.push(self.hinges[(i + 1) % k]);
            expected.sort_unstable();
            let mut got = self.edges[i].clone();
            got.sort_unstable();
            if expected != got {
                return Err(format!("edge {i} does not match its hinges and interiors"));
            }
        }
        for i in 0..k {
            for j in (i + 1)..k {
                let shared: Vec<usize> = self.edges[i]
                    .iter()
                    .copied()
                    .filter(|v| self.edges[j].contains(v))
                    .collect();
                let adjacent = j == i + 1 || (i == 0 && j == k - 1);
                if adjacent {
                    let hinge = if j == i + 1 { self.hinges[(i + 1) % k] } else { self.hinges[0] };
                    if shared != vec![hinge] {
                        return Err(format!(
                            "edges {i},{j} must share exactly the hinge {hinge}, got {shared:?}"
                        ));
                    }
                } else if !shared.is_empty() {
                    return Err(format!("non-consecutive edges {i},{j} share {shared:?}"));
                }
            }
        }
        Ok(())
    }

    /// All edges present in `h`.
    pub fn edges_in(&self, h: &Hypergraph) -> bool {
        self.edges.iter().all(|e| h.has_edge(e))
    }

    /// Applies a vertex relabeling.
    pub fn relabel(&self, old_of_new: &[usize]) -> CycleCertificate {
        let map = |v: usize| old_of_new[v];
        CycleCertificate {
            ell: self.ell,
            hinges: self.hinges.iter().map(|&v| map(v)).collect(),
            interiors: self.interiors.iter().map(|row| row.iter().map(|&v| map(v)).collect()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    let mut e2: Vec<usize> = e.iter().map(|&v| map(v)).collect();
                    e2.sort_unstable();
                    e2
                })
                .collect(),
        }
    }

    pub fn to_payload(&self) -> crate::report::CertificatePayload {
        crate::report::CertificatePayload {
            ell: self.ell,
            hinges: self.hinges.clone(),
            interiors: self.interiors.clone(),
            edges: self.edges.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// Greedy cycle expansion
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpandMode {
    /// Deterministic lexicographic candidate order.
    Exhaustive,
    /// Seeded shuffle of candidate order at every choice point.
    Sample,
}

#[derive(Debug, Clone)]
pub struct ExpansionOutcome {
    pub certificates: Vec<CycleCertificate>,
    /// Number of labeled copies reachable by the schedule; exact when
    /// `count_is_exact` (either the enumeration finished under budget or the
    /// complete-multipartite closed form applied).
    pub count: BigUint,
    pub count_is_exact: bool,
    /// `e(Ĥ)·(A − (2ℓ+1)(r−1))^{2ℓ(r−1)−1}`, zero when the base is negative.
    pub floor: BigUint,
    pub fast_path: bool,
}

/// One step of the hinge/interior schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlotOp {
    /// scaffold[dst] = scaffold[src][2..r] ⊕ w_hinge
    Hinge { src: usize, dst: usize, hinge: usize },
    /// scaffold[dst] = scaffold[src]
    Alias { src: usize, dst: usize },
    /// one interior replacement round in edge slot `slot`
    Interior { slot: usize, round: usize },
}

/// The choice schedule: hinges `w_{2ℓ}, w_2, w_{2ℓ-1}, w_3, …, w_{ℓ+1}`,
/// the scaffold alias `f_{ℓ+2} = f_{ℓ+1}`, then `r-2` fresh interiors for
/// each of the 2ℓ non-seed edge slots.
fn schedule_ops(ell: usize, r: usize) -> Vec<SlotOp> {
    let mut ops = Vec::new();
    for i in 1..ell {
        ops.push(SlotOp::Hinge { src: i, dst: 2 * ell + 2 - i, hinge: 2 * ell + 1 - i });
        ops.push(SlotOp::Hinge { src: 2 * ell + 2 - i, dst: i + 1, hinge: i + 1 });
    }
    ops.push(SlotOp::Hinge { src: ell, dst: ell + 1, hinge: ell + 1 });
    ops.push(SlotOp::Alias { src: ell + 1, dst: ell + 2 });
    for slot in 2..=(2 * ell + 1) {
        for round in 1..=(r - 2) {
            ops.push(SlotOp::Interior { slot, round });
        }
    }
    ops
}

/// The extra vertex of each edge containing `shadow` (sorted), ascending.
fn shadow_completions(h: &Hypergraph, shadow: &[usize]) -> Vec<usize> {
    let pool: &[usize] = if shadow.len() >= 2 {
        h.edges_containing_pair(shadow[0], shadow[1])
    } else {
        h.incident_edges(shadow[0])
    };
    let mut out = Vec::new();
    for &id in pool {
        let e = h.edge(id);
        if crate::hypergraph::is_subset(shadow, e) {
            if let Some(&x) = e.iter().find(|v| !shadow.contains(v)) {
                out.push(x);
            }
        }
    }
    out.sort_unstable();
    out
}

struct GreedyState<'a> {
    h: &'a Hypergraph,
    a: u64,
    ell: usize,
    r: usize,
    ops: Vec<SlotOp>,
    store_budget: u64,
    count_beyond_store: bool,
    mode: ExpandMode,
    rng: rand_chacha::ChaCha12Rng,
    scaffolds: Vec<Vec<usize>>, // index 0 unused; 1..=2ℓ+1
    hinges: Vec<usize>,         // w_0..w_{2ℓ}
    interiors: Vec<Vec<usize>>, // per edge slot (0-based)
    specified: Vec<bool>,
    certificates: Vec<CycleCertificate>,
    leaves: u128,
    aborted: bool,
    error: Option<PipelineError>,
}

impl<'a> GreedyState<'a> {
    fn sorted_shadow(&self, tuple: &[usize]) -> Vec<usize> {
        let mut s: Vec<usize> = tuple[1..].to_vec();
        s.sort_unstable();
        s
    }

    fn candidates_for(&mut self, tuple: &[usize]) -> Result<Vec<usize>, PipelineError> {
        let shadow = self.sorted_shadow(tuple);
        let completions = shadow_completions(self.h, &shadow);
        if (completions.len() as u64) < self.a {
            return Err(PipelineError::ShadowBelowThreshold {
                codegree: completions.len() as u64,
                floor: self.a,
                shadow,
            });
        }
        let mut cands: Vec<usize> =
            completions.into_iter().filter(|&x| !self.specified[x]).collect();
        if self.mode == ExpandMode::Sample {
            cands.shuffle(&mut self.rng);
        }
        Ok(cands)
    }

    fn run_op(&mut self, op_idx: usize) {
        if self.aborted || self.error.is_some() {
            return;
        }
        if op_idx == self.ops.len() {
            self.leaves += 1;
            if (self.certificates.len() as u64) < self.store_budget {
                let k = 2 * self.ell + 1;
                let cert = CycleCertificate {
                    ell: self.ell,
                    hinges: self.hinges.clone(),
                    interiors: (0..k).map(|i| self.interiors[i].clone()).collect(),
                    edges: (1..=k)
                        .map(|slot| {
                            let mut e = self.scaffolds[slot].clone();
                            e.sort_unstable();
                            e
                        })
                        .collect(),
                };
                debug_assert_eq!(cert.validate(self.r), Ok(()));
                self.certificates.push(cert);
            }
            if self.certificates.len() as u64 >= self.store_budget && !self.count_beyond_store {
                self.aborted = true;
            }
            return;
        }
        match self.ops[op_idx] {
            SlotOp::Alias { src, dst } => {
                self.scaffolds[dst] = self.scaffolds[src].clone();
                self.run_op(op_idx + 1);
                self.scaffolds[dst].clear();
            }
            SlotOp::Hinge { src, dst, hinge } => {
                let tuple = self.scaffolds[src].clone();
                let cands = match self.candidates_for(&tuple) {
                    Ok(c) => c,
                    Err(e) => {
                        self.error = Some(e);
                        return;
                    }
                };
                for x in cands {
                    let mut next = tuple[1..].to_vec();
                    next.push(x);
                    self.scaffolds[dst] = next;
                    self.hinges[hinge] = x;
                    self.specified[x] = true;
                    self.run_op(op_idx + 1);
                    self.specified[x] = false;
                    if self.aborted || self.error.is_some() {
                        self.scaffolds[dst].clear();
                        return;
                    }
                }
                self.scaffolds[dst].clear();
            }
            SlotOp::Interior { slot, round } => {
                let k = 2 * self.ell + 1;
                let mut tuple = self.scaffolds[slot].clone();
                if round == 1 {
                    // reorder: the two hinges of this slot go last
                    let w_prev = self.hinges[slot - 1];
                    let w_next = self.hinges[slot % k];
                    debug_assert!(tuple.contains(&w_prev) && tuple.contains(&w_next));
                    let mut rest: Vec<usize> =
                        tuple.iter().copied().filter(|&v| v != w_prev && v != w_next).collect();
                    rest.push(w_prev);
                    rest.push(w_next);
                    tuple = rest;
                }
                let cands = match self.candidates_for(&tuple) {
                    Ok(c) => c,
                    Err(e) => {
                        self.error = Some(e);
                        return;
                    }
                };
                let saved = self.scaffolds[slot].clone();
                for x in cands {
                    let mut next = tuple[1..].to_vec();
                    next.push(x);
                    self.scaffolds[slot] = next;
                    self.interiors[slot - 1].push(x);
                    self.specified[x] = true;
                    self.run_op(op_idx + 1);
                    self.specified[x] = false;
                    self.interiors[slot - 1].pop();
                    if self.aborted || self.error.is_some() {
                        self.scaffolds[slot] = saved;
                        return;
                    }
                }
                self.scaffolds[slot] = saved;
            }
        }
    }
}

/// Detects a complete multipartite structure on the support: returns the
/// classes (over all vertices, isolated vertices in no class) when the
/// non-co-occurrence relation partitions the support and every transversal
/// r-set is an edge.
pub fn complete_multipartite_classes(h: &Hypergraph) -> Option<Vec<Vec<usize>>> {
    let support: Vec<usize> = (0..h.vertex_count()).filter(|&v| h.degree(v) > 0).collect();
    if support.is_empty() {
        return None;
    }
    let mut cooccur: HashMap<usize, Vec<bool>> = HashMap::new();
    for &v in &support {
        let mut row = vec![false; h.vertex_count()];
        for &id in h.incident_edges(v) {
            for &u in h.edge(id) {
                if u != v {
                    row[u] = true;
                }
            }
        }
        cooccur.insert(v, row);
    }
    let mut class_of: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &support {
        if class_of.contains_key(&v) {
            continue;
        }
        let row = &cooccur[&v];
        let members: Vec<usize> = support.iter().copied().filter(|&u| u == v || !row[u]).collect();
        // every member must induce the same class
        for &u in &members {
            let urow = &cooccur[&u];
            for &w in &support {
                let in_class = members.contains(&w);
                let non_co = w == u || !urow[w];
                if in_class != non_co {
                    return None;
                }
            }
            class_of.insert(u, classes.len());
        }
        classes.push(members);
    }
    if classes.len() != h.uniformity() {
        return None;
    }
    let mut product = BigUint::one();
    for c in &classes {
        product *= BigUint::from(c.len());
    }
    if product != BigUint::from(h.edge_count()) {
        return None;
    }
    Some(classes)
}

/// Closed-form schedule count on a complete multipartite host: the per-slot
/// candidate count is `size(class) − specified(class)`, identical along
/// every branch, so the total is `e(Ĥ) · Σ_π Π_slots (s_c − used_c)` over
/// the `r!` seed orientations π.
fn complete_partite_schedule_count(sizes: &[usize], ell: usize) -> BigUint {
    let r = sizes.len();
    let ops = schedule_ops(ell, r);
    #[derive(Clone)]
    struct Sym {
        class: usize,
        hinge: Option<usize>,
    }
    let mut total = BigUint::zero();
    let mut perm: Vec<usize> = (0..r).collect();
    let mut visit = |perm: &[usize]| {
        // seed: (v_{1,1}..v_{1,r-2}, w_0, w_1) assigned classes by perm
        let k = 2 * ell + 1;
        let mut scaffolds: Vec<Vec<Sym>> = vec![Vec::new(); 2 * ell + 2];
        let mut seed: Vec<Sym> = Vec::with_capacity(r);
        for (pos, &c) in perm.iter().enumerate() {
            let hinge = if pos == r - 2 {
                Some(0)
            } else if pos == r - 1 {
                Some(1)
            } else {
                None
            };
            seed.push(Sym { class: c, hinge });
        }
        scaffolds[1] = seed;
        let mut used = vec![1u64; r];
        let mut hinge_class = vec![usize::MAX; k];
        hinge_class[0] = perm[r - 2];
        hinge_class[1] = perm[r - 1];
        let mut product = BigUint::one();
        for op in &ops {
            match *op {
                SlotOp::Alias { src, dst } => {
                    scaffolds[dst] = scaffolds[src].clone();
                }
                SlotOp::Hinge { src, dst, hinge } => {
                    let c = scaffolds[src][0].class;
                    let avail = sizes[c] as u64 - used[c];
                    product *= BigUint::from(avail);
                    used[c] += 1;
                    let mut next: Vec<Sym> = scaffolds[src][1..].to_vec();
                    next.push(Sym { class: c, hinge: Some(hinge) });
                    hinge_class[hinge] = c;
                    scaffolds[dst] = next;
                }
                SlotOp::Interior { slot, round } => {
                    if round == 1 {
                        let w_prev = slot - 1;
                        let w_next = slot % k;
                        let tuple = &scaffolds[slot];
                        let mut rest: Vec<Sym> = tuple
                            .iter()
                            .filter(|s| s.hinge != Some(w_prev) && s.hinge != Some(w_next))
                            .cloned()
                            .collect();
                        let prev = tuple.iter().find(|s| s.hinge == Some(w_prev)).unwrap().clone();
                        let next = tuple.iter().find(|s| s.hinge == Some(w_next)).unwrap().clone();
                        rest.push(prev);
                        rest.push(next);
                        scaffolds[slot] = rest;
                    }
                    let c = scaffolds[slot][0].class;
                    let avail = sizes[c] as u64 - used[c];
                    product *= BigUint::from(avail);
                    used[c] += 1;
                    let mut nxt: Vec<Sym> = scaffolds[slot][1..].to_vec();
                    nxt.push(Sym { class: c, hinge: None });
                    scaffolds[slot] = nxt;
                }
            }
        }
        total += product;
    };
    // Heap's algorithm over orientations
    fn heap(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == 1 {
            visit(perm);
            return;
        }
        for i in 0..k {
            heap(perm, k - 1, visit);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    let len = perm.len();
    heap(&mut perm, len, &mut visit);
    let mut edges = BigUint::one();
    for &s in sizes {
        edges *= BigUint::from(s);
    }
    edges * total
}

/// `e(Ĥ)·(A − (2ℓ+1)(r−1))^{2ℓ(r−1)−1}`, zero when the base is negative.
pub fn greedy_count_floor(edges: usize, a: u64, ell: usize, r: usize) -> BigUint {
    let avoid = ((2 * ell + 1) * (r - 1)) as u64;
    if a <= avoid {
        return BigUint::zero();
    }
    let exponent = (2 * ell * (r - 1) - 1) as u32;
    BigUint::from(edges) * BigUint::from(a - avoid).pow(exponent)
}

/// Enumerates labeled copies of `C^r_{2ℓ+1}` by the three-step schedule:
/// seed edge with orientation, alternating hinge extension, then interior
/// rotation. Certificates stream up to `budget`; the count is exact via the
/// complete-multipartite closed form when that structure is detected, or
/// via full enumeration when it finishes under budget. A shadow with
/// codegree below `a` aborts with that shadow as witness.
pub fn greedy_expand_cycles(
    hhat: &Hypergraph,
    a: u64,
    ell: usize,
    budget: u64,
    seed: RngSeed,
    mode: ExpandMode,
) -> Result<ExpansionOutcome, PipelineError> {
    greedy_expand_cycles_impl(hhat, a, ell, budget, seed, mode, true, false)
}

#[allow(clippy::too_many_arguments)]
fn greedy_expand_cycles_impl(
    hhat: &Hypergraph,
    a: u64,
    ell: usize,
    budget: u64,
    seed: RngSeed,
    mode: ExpandMode,
    use_fast_path: bool,
    count_beyond_store: bool,
) -> Result<ExpansionOutcome, PipelineError> {
    let r = hhat.uniformity();
    if r < 3 {
        return Err(PipelineError::UniformityTooSmall(r));
    }
    if ell < 1 {
        return Err(PipelineError::Domain("ell must be at least 1".into()));
    }
    if a < 1 {
        return Err(PipelineError::Domain("threshold A must be at least 1".into()));
    }
    if hhat.edge_count() == 0 {
        return Err(PipelineError::EmptyInput);
    }

    let fast = if use_fast_path { complete_multipartite_classes(hhat) } else { None };
    if let Some(classes) = &fast {
        // uniform structure: min shadow codegree is the smallest class size
        let (idx, min_size) = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.len()))
            .min_by_key(|&(_, s)| s)
            .expect("classes nonempty");
        if (min_size as u64) < a {
            let e = hhat.edges()[0].clone();
            let witness: Vec<usize> =
                e.iter().copied().filter(|v| !classes[idx].contains(v)).collect();
            return Err(PipelineError::ShadowBelowThreshold {
                shadow: witness,
                codegree: min_size as u64,
                floor: a,
            });
        }
    }

    let k = 2 * ell + 1;
    let mut state = GreedyState {
        h: hhat,
        a,
        ell,
        r,
        ops: schedule_ops(ell, r),
        store_budget: budget,
        count_beyond_store,
        mode,
        rng: seed.rng(),
        scaffolds: vec![Vec::new(); 2 * ell + 2],
        hinges: vec![usize::MAX; k],
        interiors: vec![Vec::new(); k],
        specified: vec![false; hhat.vertex_count()],
        certificates: Vec::new(),
        leaves: 0,
        aborted: false,
        error: None,
    };

    // seed loop: every edge, every orientation
    let mut edge_order: Vec<usize> = (0..hhat.edge_count()).collect();
    if mode == ExpandMode::Sample {
        edge_order.shuffle(&mut state.rng);
    }
    'seeds: for &eid in &edge_order {
        let edge = hhat.edge(eid).to_vec();
        let mut orientation: Vec<usize> = (0..r).collect();
        let mut orientations: Vec<Vec<usize>> = Vec::new();
        permutation_visit(&mut orientation, &mut |p| {
            orientations.push(p.to_vec());
        });
        orientations.sort_unstable();
        if mode == ExpandMode::Sample {
            orientations.shuffle(&mut state.rng);
        }
        for p in orientations {
            let tuple: Vec<usize> = p.iter().map(|&i| edge[i]).collect();
            state.scaffolds[1] = tuple.clone();
            state.hinges[0] = tuple[r - 2];
            state.hinges[1] = tuple[r - 1];
            state.interiors[0] = tuple[..r - 2].to_vec();
            for &v in &edge {
                state.specified[v] = true;
            }
            state.run_op(0);
            for &v in &edge {
                state.specified[v] = false;
            }
            if let Some(err) = state.error {
                return Err(err);
            }
            if state.aborted {
                break 'seeds;
            }
        }
    }

    let floor = greedy_count_floor(hhat.edge_count(), a, ell, r);
    let (count, count_is_exact, fast_path) = match fast {
        Some(classes) if mode == ExpandMode::Exhaustive => {
            let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
            (complete_partite_schedule_count(&sizes, ell), true, true)
        }
        _ => (BigUint::from(state.leaves), !state.aborted, false),
    };
    Ok(ExpansionOutcome {
        certificates: state.certificates,
        count,
        count_is_exact,
        floor,
        fast_path,
    })
}

fn permutation_visit(items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn heap(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == 1 {
            f(items);
            return;
        }
        for i in 0..k {
            heap(items, k - 1, f);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let len = items.len();
    heap(items, len, f);
}

// ---------------------------------------------------------------------------
// Even-cycle extension
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CycleExtensionRecord {
    pub cycle: Vec<usize>,
    pub extensions_found: u64,
    pub exhausted: bool,
    pub skipped_no_closing: bool,
    /// Extension floor: the codegree-driven product evaluated with the
    /// exact max codegrees; often non-positive at desk scale.
    pub floor_product: f64,
    pub floor_product_times_plog: f64,
}

#[derive(Debug, Clone)]
pub struct ExtensionOutcome {
    pub certificates: Vec<CycleCertificate>,
    pub per_cycle: Vec<CycleExtensionRecord>,
}

/// Extends even 2ℓ-cycles of a pair shadow into odd linear (2ℓ+1)-cycles:
/// a closing vertex from a third class (sharing a single edge with both
/// closing hinges), then one hyperedge per cycle pair, every fresh vertex
/// distinct from all specified vertices.
pub fn extend_even_cycles(
    hp: &PartitionedHypergraph,
    shadow_cycles: &[Vec<usize>],
    budget: u64,
) -> Result<ExtensionOutcome, PipelineError> {
    let r = hp.class_count();
    if r < 3 {
        return Err(PipelineError::UniformityTooSmall(r));
    }
    let base = hp.base();
    let n = base.vertex_count();
    let mut certificates = Vec::new();
    let mut per_cycle = Vec::new();

    for cycle in shadow_cycles {
        if certificates.len() as u64 >= budget {
            break;
        }
        let two_l = cycle.len();
        if two_l < 4 || two_l % 2 != 0 {
            return Err(PipelineError::Domain(format!(
                "shadow cycle must have even length >= 4, got {two_l}"
            )));
        }
        let ell = two_l / 2;
        let class_a = hp.class_of(cycle[0]);
        let class_b = hp.class_of(cycle[1]);
        if class_a == class_b {
            return Err(PipelineError::SameClass(cycle[0], cycle[1]));
        }

        // closing vertices via the third-vertex sets of the closing pair
        let closing = third_vertex_sets(hp, cycle[two_l - 1], cycle[0])?;
        let closing_candidates: Vec<(usize, usize)> = closing
            .per_class
            .iter()
            .flat_map(|(c, xs)| xs.iter().map(move |&x| (*c, x)))
            .collect();

        let plog = 2.0 * (base.max_codegree(2).map(|_| 0.0).unwrap_or(0.0)
            + (2.0 * r as f64 * (n.max(2) as f64).log2()).powi((r * r) as i32));
        // paper-shaped floor: (Δ_ab/plog − 2ℓrn^{r-3})^{2ℓ-1}·(Δ_ac/plog − …)(Δ_bc/plog − …)
        let delta_between = |ci: usize, cj: usize| -> f64 {
            let mut best = 0u64;
            for e in base.edges() {
                let u = hp.edge_vertex_in_class(e, ci);
                let v = hp.edge_vertex_in_class(e, cj);
                best = best.max(base.pair_codegree(u, v));
            }
            best as f64
        };
        let avoid = 2.0 * ell as f64 * r as f64 * (n as f64).powi(r as i32 - 3);
        let closing_class = closing_candidates.first().map(|&(c, _)| c).or_else(|| {
            closing.per_class.iter().max_by_key(|(_, xs)| xs.len()).map(|(c, _)| *c)
        });
        let floor_product = match closing_class {
            Some(c) => {
                let d_ab = delta_between(class_a, class_b) / plog - avoid;
                let d_ac = delta_between(class_a, c) / plog - avoid;
                let d_bc = delta_between(class_b, c) / plog - avoid;
                d_ab.powi(2 * ell as i32 - 1) * d_ac * d_bc
            }
            None => 0.0,
        };

        if closing_candidates.is_empty() {
            per_cycle.push(CycleExtensionRecord {
                cycle: cycle.clone(),
                extensions_found: 0,
                exhausted: true,
                skipped_no_closing: true,
                floor_product,
                floor_product_times_plog: floor_product * plog,
            });
            continue;
        }

        let mut found = 0u64;
        let mut exhausted = true;
        let mut specified = vec![false; n];
        for &v in cycle {
            specified[v] = true;
        }
        for (_, x) in closing_candidates {
            if certificates.len() as u64 >= budget {
                exhausted = false;
                break;
            }
            specified[x] = true;
            let mut hinges: Vec<usize> = cycle.clone();
            hinges.push(x);
            // edge slots for pairs (hinges[i], hinges[i+1 mod k])
            let k = two_l + 1;
            let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(k);
            let completed = extend_slots(
                base,
                &hinges,
                0,
                k,
                &mut specified,
                &mut chosen,
                &mut certificates,
                &mut found,
                budget,
                ell,
                &mut exhausted,
            );
            specified[x] = false;
            if !completed {
                break;
            }
        }
        per_cycle.push(CycleExtensionRecord {
            cycle: cycle.clone(),
            extensions_found: found,
            exhausted,
            skipped_no_closing: false,
            floor_product,
            floor_product_times_plog: floor_product * plog,
        });
    }
    Ok(ExtensionOutcome { certificates, per_cycle })
}

#[allow(clippy::too_many_arguments)]
fn extend_slots(
    base: &Hypergraph,
    hinges: &[usize],
    slot: usize,
    k: usize,
    specified: &mut Vec<bool>,
    chosen: &mut Vec<Vec<usize>>,
    certificates: &mut Vec<CycleCertificate>,
    found: &mut u64,
    budget: u64,
    ell: usize,
    exhausted: &mut bool,
) -> bool {
    if certificates.len() as u64 >= budget {
        *exhausted = false;
        return false;
    }
    if slot == k {
        let interiors: Vec<Vec<usize>> = chosen
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let u = hinges[i];
                let v = hinges[(i + 1) % k];
                e.iter().copied().filter(|&x| x != u && x != v).collect()
            })
            .collect();
        let cert = CycleCertificate {
            ell,
            hinges: hinges.to_vec(),
            interiors,
            edges: chosen.clone(),
        };
        debug_assert_eq!(cert.validate(base.uniformity()), Ok(()));
        certificates.push(cert);
        *found += 1;
        return true;
    }
    let u = hinges[slot];
    let v = hinges[(slot + 1) % k];
    let edge_ids: Vec<usize> = base
        .incident_edges(u)
        .iter()
        .copied()
        .filter(|&id| base.edge(id).contains(&v))
        .collect();
    for id in edge_ids {
        let e = base.edge(id);
        let rest: Vec<usize> = e.iter().copied().filter(|&x| x != u && x != v).collect();
        if rest.iter().any(|&x| specified[x]) {
            continue;
        }
        for &x in &rest {
            specified[x] = true;
        }
        chosen.push(e.to_vec());
        let keep_going = extend_slots(
            base, hinges, slot + 1, k, specified, chosen, certificates, found, budget, ell,
            exhausted,
        );
        chosen.pop();
        for &x in &rest {
            specified[x] = false;
        }
        if !keep_going {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Exponent algebra
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct BoundValues {
    pub r: usize,
    pub ell: usize,
    pub n: usize,
    pub edges: u64,
    /// `f(r) = (4ℓ−1)/((r−1)(2ℓ+1)−3)`.
    pub f_r: BigRational,
    /// `f(r−1)`, when its denominator is positive.
    pub f_r_minus_1: Option<BigRational>,
    /// `2/(r−1)`.
    pub weaker_exponent: BigRational,
    /// `1/((r−1)ℓ−1)`.
    pub conditional_lower_gap: BigRational,
    /// Exponents of the dichotomy threshold `A = e^x · n^{−y}`.
    pub threshold_exp_e: Option<BigRational>,
    pub threshold_exp_n: Option<BigRational>,
    pub threshold_a: Option<f64>,
    /// `δ` with `e = n^{r−δ}`.
    pub delta: f64,
    /// ln of `n^{(r−1)(2ℓ+1)−slack} · (e/n^r)^{2ℓ+1+f(r)}`.
    pub main_lower_bound_log: f64,
    /// `(r−1)(2ℓ+1) − δ(2ℓ+1 + 1/((r−1)ℓ−1))`.
    pub conditional_copy_exponent: f64,
    pub slack: f64,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn f_exponent(r: usize, ell: usize) -> Option<BigRational> {
    let den = (r as i64 - 1) * (2 * ell as i64 + 1) - 3;
    if den <= 0 {
        return None;
    }
    Some(ratio(4 * ell as i64 - 1, den))
}

pub fn bound_values(
    r: usize,
    ell: usize,
    n: usize,
    edges: u64,
    slack: f64,
) -> Result<BoundValues, PipelineError> {
    if r < 3 || ell < 1 || n < 2 || edges < 1 {
        return Err(PipelineError::Domain(format!(
            "need r >= 3, ell >= 1, n >= 2, e >= 1; got r={r}, ell={ell}, n={n}, e={edges}"
        )));
    }
    if BigUint::from(edges) > binomial(n, r) {
        return Err(PipelineError::Domain(format!(
            "e = {edges} exceeds C({n},{r}) = {}",
            binomial(n, r)
        )));
    }
    let f_r = f_exponent(r, ell).expect("denominator positive for r >= 3");
    let f_rm1 = f_exponent(r - 1, ell);
    let weaker = ratio(2, r as i64 - 1);
    let lower_gap = ratio(1, (r as i64 - 1) * ell as i64 - 1);
    let (exp_e, exp_n, a_value) = match &f_rm1 {
        Some(f1) => {
            let den = ratio(2 * (ell as i64) * (r as i64 - 1) - 1, 1) + f1;
            let x = (ratio(2 * ell as i64, 1) + f1) / den.clone();
            let y = (ratio(2 * ell as i64 + 1, 1) + ratio(r as i64 - 1, 1) * f1) / den;
            let ln_e = (edges as f64).ln();
            let ln_n = (n as f64).ln();
            let a = (rat_f64(&x) * ln_e - rat_f64(&y) * ln_n).exp();
            (Some(x), Some(y), Some(a))
        }
        None => (None, None, None),
    };
    let ln_n = (n as f64).ln();
    let ln_e = (edges as f64).ln();
    let delta = r as f64 - ln_e / ln_n;
    let main_lower_bound_log = ((r as f64 - 1.0) * (2.0 * ell as f64 + 1.0) - slack) * ln_n
        + (2.0 * ell as f64 + 1.0 + rat_f64(&f_r)) * (ln_e - r as f64 * ln_n);
    let conditional_copy_exponent = (r as f64 - 1.0) * (2.0 * ell as f64 + 1.0)
        - delta * (2.0 * ell as f64 + 1.0 + rat_f64(&lower_gap));
    Ok(BoundValues {
        r,
        ell,
        n,
        edges,
        f_r,
        f_r_minus_1: f_rm1,
        weaker_exponent: weaker,
        conditional_lower_gap: lower_gap,
        threshold_exp_e: exp_e,
        threshold_exp_n: exp_n,
        threshold_a: a_value,
        delta,
        main_lower_bound_log,
        conditional_copy_exponent,
        slack,
    })
}

pub fn rat_f64(x: &BigRational) -> f64 {
    let num = x.numer().to_f64().unwrap_or(f64::MAX);
    let den = x.denom().to_f64().unwrap_or(f64::MAX);
    num / den
}

// ---------------------------------------------------------------------------
// Full pipeline
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineMode {
    Induction,
    Shadow,
}

#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub certificates: Vec<CycleCertificate>,
    pub records: Vec<StageRecord>,
    /// Certificates reachable, when a counting stage produced an exact or
    /// floor value; otherwise the number enumerated.
    pub certificate_count: BigUint,
}

const PARTITION_TRIALS: u32 = 64;

/// Runs the full supersaturation pipeline on `g`, emitting certificates of
/// `C^r_{2ℓ+1}` copies and a trace with one record per stage. `Shadow` is
/// the even-cycle-extension route; `Induction` is the dichotomy route,
/// recursing on the shadow (r−1)-graph in the regular branch and switching
/// to `Shadow` at r = 3.
pub fn supersat_pipeline(
    g: &Hypergraph,
    ell: usize,
    mode: PipelineMode,
    budget: u64,
    seed: RngSeed,
) -> Result<PipelineOutcome, PipelineError> {
    let r = g.uniformity();
    if r < 3 {
        return Err(PipelineError::UniformityTooSmall(r));
    }
    if ell < 1 {
        return Err(PipelineError::Domain("ell must be at least 1".into()));
    }
    if g.edge_count() == 0 {
        return Err(PipelineError::EmptyInput);
    }
    let mut records = Vec::new();

    // Stage: transversal partition
    let p = erdos_kleitman_partition(g, PARTITION_TRIALS, seed)?;
    let floor = partition_floor(r, g.edge_count());
    let mut rec = StageRecord::new("partition", "partition.floor");
    rec.put_int("input_edges", g.edge_count() as u128);
    rec.put_int("transversal_edges", p.base().edge_count() as u128);
    rec.put_int("floor", floor as u128);
    rec.passed(p.base().edge_count() as u64 >= floor);
    records.push(rec);
    if p.base().edge_count() == 0 {
        return Ok(PipelineOutcome {
            certificates: Vec::new(),
            records,
            certificate_count: BigUint::zero(),
        });
    }

    let effective_mode = if r == 3 { PipelineMode::Shadow } else { mode };
    if effective_mode != mode {
        let mut rec = StageRecord::new("mode", "mode.base-case");
        rec.put("requested", "induction").put("effective", "shadow");
        rec.passed(true);
        records.push(rec);
    }

    match effective_mode {
        PipelineMode::Shadow => {
            shadow_route(g, p, ell, budget, seed, &mut records)
        }
        PipelineMode::Induction => {
            induction_route(g, p, ell, budget, seed, &mut records)
        }
    }
}

fn shadow_route(
    g: &Hypergraph,
    p: PartitionedHypergraph,
    ell: usize,
    budget: u64,
    seed: RngSeed,
    records: &mut Vec<StageRecord>,
) -> Result<PipelineOutcome, PipelineError> {
    let r = g.uniformity();
    let n = g.vertex_count();

    // Stage: dyadic typing
    let (ty, h0) = classify_types(&p)?;
    let mut rec = StageRecord::new("typing", "typing.pigeonhole");
    rec.put_int("edges_in", p.base().edge_count() as u128);
    rec.put_int("edges_of_top_type", h0.base().edge_count() as u128);
    rec.put(
        "type_vector",
        format!(
            "{:?}",
            ty.y.iter().map(|((i, j), y)| format!("y({i},{j})={y}")).collect::<Vec<_>>()
        ),
    );
    rec.passed(true);
    records.push(rec);

    // Stage: codegree cleanup at the polylog threshold
    let factor = paper_cleanup_factor(n.max(2), r);
    let cleanup = codegree_cleanup(&h0, p.base(), factor)?;
    let mut rec = StageRecord::new("cleanup", "cleanup.edge-floor");
    rec.put_real("threshold_factor", factor);
    rec.put_int("edges_in", h0.base().edge_count() as u128);
    rec.put_int("edges_out", cleanup.surviving_edges as u128);
    rec.put_int("deletion_rounds", cleanup.rounds.len() as u128);
    // e(H') >= e(H0)/2
    rec.passed(2 * cleanup.surviving_edges >= h0.base().edge_count());
    records.push(rec);

    // Sandwich record: factor·d_H ≤ d_H' ≤ Δ_ij over surviving pairs
    let hp = &cleanup.result;
    let mut sandwich_ok = true;
    for e in hp.base().edges() {
        for a in 0..e.len() {
            for b in (a + 1)..e.len() {
                let (u, v) = (e[a], e[b]);
                let d_here = hp.base().pair_codegree(u, v);
                let (ou, ov) = (cleanup.old_of_new[u], cleanup.old_of_new[v]);
                let d_host = p.base().pair_codegree(ou, ov);
                let (ci, cj) = (hp.class_of(u), hp.class_of(v));
                let delta = ty.delta(ci, cj);
                if (d_here as f64) < factor * d_host as f64 || d_here > delta {
                    sandwich_ok = false;
                }
            }
        }
    }
    let mut rec = StageRecord::new("cleanup-sandwich", "cleanup.sandwich");
    rec.put_real("factor", factor);
    rec.passed(sandwich_ok);
    records.push(rec);

    if hp.base().edge_count() == 0 {
        let mut rec = StageRecord::new("extension", "extension.certificates");
        rec.put_int("certificates", 0u32);
        rec.passed(true);
        records.push(rec);
        return Ok(PipelineOutcome {
            certificates: Vec::new(),
            records: std::mem::take(records),
            certificate_count: BigUint::zero(),
        });
    }

    // Stage: class-size ordering |U_1| >= ... >= |U_r|
    let sizes = hp.class_sizes();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&c| std::cmp::Reverse(sizes[c]));
    let hp = hp.relabel_classes(&order)?;

    // Stage: side selection among ∂_{1j}
    let mut shadow_sizes = Vec::new();
    for j in 1..r {
        let shadow = hp.pair_shadow_graph(0, j)?;
        shadow_sizes.push((j, shadow.edge_count()));
    }
    let &(best_j, best_size) =
        shadow_sizes.iter().max_by_key(|&&(j, s)| (s, std::cmp::Reverse(j))).expect("r >= 2");
    let u1 = hp.class_members(0).len() as f64;
    let reference = (g.edge_count() as f64).powf(1.0 / (r as f64 - 1.0))
        * u1.powf((r as f64 - 2.0) / (r as f64 - 1.0));
    let mut rec = StageRecord::new("side-selection", "shadow.side-selection");
    for &(j, s) in &shadow_sizes {
        rec.put_int(&format!("shadow_0_{j}"), s as u128);
    }
    rec.put_int("chosen_side", best_j as u128);
    rec.put_real("reference_value", reference);
    rec.put_real("reference_times_plog", reference * paper_cleanup_factor(n.max(2), r).recip());
    rec.passed(true);
    records.push(rec);

    // Stage: even cycles in the chosen shadow
    let shadow = hp.pair_shadow_graph(0, best_j)?;
    let cycle_budget = (budget as usize).max(64);
    let cycles = even_cycle_enumerate(&shadow, ell, cycle_budget);
    let mut rec = StageRecord::new("even-cycles", "shadow.even-cycles");
    rec.put_int("shadow_edges", best_size as u128);
    rec.put_int("cycles_found", cycles.cycles.len() as u128);
    rec.put("truncated", cycles.truncated.to_string());
    rec.passed(true);
    records.push(rec);

    // Stage: extension
    let extension = extend_even_cycles(&hp, &cycles.cycles, budget)?;
    let mut rec = StageRecord::new("extension", "extension.certificates");
    rec.put_int("certificates", extension.certificates.len() as u128);
    rec.put_int(
        "cycles_extended",
        extension.per_cycle.iter().filter(|c| c.extensions_found > 0).count() as u128,
    );
    rec.put_int(
        "cycles_skipped",
        extension.per_cycle.iter().filter(|c| c.skipped_no_closing).count() as u128,
    );
    rec.passed(true);
    records.push(rec);

    // Relabel certificates back to the input graph and verify.
    let mut certificates = Vec::with_capacity(extension.certificates.len());
    for cert in extension.certificates {
        let lifted = cert.relabel(&cleanup.old_of_new);
        if let Err(detail) = lifted.validate(r) {
            return Err(PipelineError::StageVerification { stage: "extension".into(), detail });
        }
        if !lifted.edges_in(g) {
            return Err(PipelineError::StageVerification {
                stage: "extension".into(),
                detail: "certificate edge missing from the input graph".into(),
            });
        }
        certificates.push(lifted);
    }
    let _ = seed;
    let count = BigUint::from(certificates.len());
    Ok(PipelineOutcome { certificates, records: std::mem::take(records), certificate_count: count })
}

fn induction_route(
    g: &Hypergraph,
    p: PartitionedHypergraph,
    ell: usize,
    budget: u64,
    seed: RngSeed,
    records: &mut Vec<StageRecord>,
) -> Result<PipelineOutcome, PipelineError> {
    let r = g.uniformity();
    let n = g.vertex_count();
    let e_p = p.base().edge_count();

    // Stage: threshold A from the exponent algebra, clamped admissible.
    let bounds = bound_values(r, ell, n, g.edge_count() as u64, 0.0)?;
    let raw = bounds.threshold_a.unwrap_or(1.0);
    let lo = e_p as f64 / (4.0 * (n as f64).powi(r as i32 - 1));
    let a_min = lo.floor() as u64 + 1;
    let a = (raw.ceil() as u64).clamp(a_min, n as u64);
    let mut rec = StageRecord::new("threshold", "dichotomy.threshold");
    rec.put_real("raw", raw);
    rec.put_int("clamped", a as u128);
    rec.put_real("admissible_above", lo);
    rec.put_int("admissible_max", n as u128);
    rec.passed(true);
    records.push(rec);

    match codegree_dichotomy(&p, a)? {
        DichotomyOutcome::Dense { subgraph, a } => {
            let mut rec = StageRecord::new("dichotomy", "dichotomy.branch");
            rec.put("branch", "dense");
            rec.put_int("edges", subgraph.edge_count() as u128);
            rec.put_int("a", a as u128);
            rec.passed(2 * subgraph.edge_count() >= e_p);
            records.push(rec);

            let expansion =
                greedy_expand_cycles(&subgraph, a, ell, budget, seed, ExpandMode::Exhaustive)?;
            let mut rec = StageRecord::new("greedy-expansion", "greedy.count-floor");
            rec.put_big("count", &expansion.count);
            rec.put("count_is_exact", expansion.count_is_exact.to_string());
            rec.put_big("floor", &expansion.floor);
            rec.put("fast_path", expansion.fast_path.to_string());
            rec.passed(!expansion.count_is_exact || expansion.count >= expansion.floor);
            records.push(rec);

            for cert in &expansion.certificates {
                if let Err(detail) = cert.validate(r) {
                    return Err(PipelineError::StageVerification {
                        stage: "greedy-expansion".into(),
                        detail,
                    });
                }
                if !cert.edges_in(g) {
                    return Err(PipelineError::StageVerification {
                        stage: "greedy-expansion".into(),
                        detail: "certificate edge missing from the input graph".into(),
                    });
                }
            }
            Ok(PipelineOutcome {
                certificate_count: expansion.count.clone(),
                certificates: expansion.certificates,
                records: std::mem::take(records),
            })
        }
        DichotomyOutcome::Regular { subgraph, d, shadow_side } => {
            let mut rec = StageRecord::new("dichotomy", "dichotomy.branch");
            rec.put("branch", "regular");
            rec.put_int("edges", subgraph.base().edge_count() as u128);
            rec.put_int("d", d as u128);
            rec.put("shadow_side", format!("{shadow_side:?}"));
            rec.passed(true);
            records.push(rec);

            // shadow (r-1)-graph on the designated side, same labels
            let side_set: Vec<usize> = shadow_side.clone();
            let excluded: usize = (0..r).find(|c| !side_set.contains(c)).expect("one class out");
            let mut shadow_edges: Vec<Vec<usize>> = subgraph
                .base()
                .edges()
                .iter()
                .map(|e| side_shadow(e, subgraph.classes(), excluded))
                .collect();
            shadow_edges.sort_unstable();
            shadow_edges.dedup();
            let shadow_graph = Hypergraph::new(r - 1, n, shadow_edges)?;
            let mut rec = StageRecord::new("shadow-graph", "dichotomy.regular.shadow-graph");
            rec.put_int("edges", shadow_graph.edge_count() as u128);
            rec.put_real("extension_floor_per_edge", d as f64 / 2.0 - 2.0 * ell as f64);
            rec.passed(true);
            records.push(rec);

            if shadow_graph.edge_count() == 0 {
                return Ok(PipelineOutcome {
                    certificates: Vec::new(),
                    records: std::mem::take(records),
                    certificate_count: BigUint::zero(),
                });
            }

            let sub = supersat_pipeline(
                &shadow_graph,
                ell,
                PipelineMode::Induction,
                budget,
                RngSeed(seed.0.wrapping_add(0x9e3779b97f4a7c15)),
            )?;
            let mut rec = StageRecord::new("recursion", "dichotomy.regular.recursion");
            rec.put_int("sub_certificates", sub.certificates.len() as u128);
            rec.put_big("sub_count", &sub.certificate_count);
            rec.passed(true);
            records.push(rec);

            // lift: extend every (r-1)-edge back into the regular subgraph
            let mut certificates = Vec::new();
            'outer: for cert in &sub.certificates {
                let mut used: Vec<usize> = cert.hinges.clone();
                used.extend(cert.interiors.iter().flatten().copied());
                let mut extensions: Vec<Vec<usize>> = Vec::new();
                for e in &cert.edges {
                    let mut sorted = e.clone();
                    sorted.sort_unstable();
                    let completions = shadow_completions(subgraph.base(), &sorted);
                    let fresh: Vec<usize> = completions
                        .into_iter()
                        .filter(|x| !used.contains(x) && !extensions.iter().any(|ext| ext.contains(x)))
                        .collect();
                    match fresh.first() {
                        Some(&x) => {
                            extensions.push(vec![x]);
                        }
                        None => continue 'outer,
                    }
                }
                let lifted = CycleCertificate {
                    ell: cert.ell,
                    hinges: cert.hinges.clone(),
                    interiors: cert
                        .interiors
                        .iter()
                        .zip(&extensions)
                        .map(|(row, ext)| {
                            let mut out = row.clone();
                            out.extend(ext.iter().copied());
                            out
                        })
                        .collect(),
                    edges: cert
                        .edges
                        .iter()
                        .zip(&extensions)
                        .map(|(e, ext)| {
                            let mut out = e.clone();
                            out.extend(ext.iter().copied());
                            out.sort_unstable();
                            out
                        })
                        .collect(),
                };
                if let Err(detail) = lifted.validate(r) {
                    return Err(PipelineError::StageVerification { stage: "lift".into(), detail });
                }
                if !lifted.edges_in(g) {
                    return Err(PipelineError::StageVerification {
                        stage: "lift".into(),
                        detail: "lifted certificate edge missing from the input graph".into(),
                    });
                }
                certificates.push(lifted);
                if certificates.len() as u64 >= budget {
                    break;
                }
            }
            let lift_floor = (d as f64 / 2.0 - 2.0 * ell as f64).max(0.0);
            let mut rec = StageRecord::new("lift", "lift.certificates");
            rec.put_int("lifted", certificates.len() as u128);
            rec.put_real("per_edge_floor", lift_floor);
            rec.passed(true);
            records.push(rec);

            let count = BigUint::from(certificates.len());
            Ok(PipelineOutcome {
                certificates,
                records: std::mem::take(records),
                certificate_count: count,
            })
        }
    }
}
