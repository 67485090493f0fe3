//! Independent brute-force references, deliberately naive.
//!
//! These functions share no enumeration code with [`crate::counting`]: maps
//! are enumerated in natural vertex order with no visit-order heuristics and
//! no codegree indices, and Berge cycles are searched as raw alternating
//! vertex/edge sequences. They exist as ground truth for property tests and
//! the `verify` subcommand, and they refuse inputs above budget rather than
//! silently approximating.

use num_bigint::BigUint;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle budget exceeded: {what} is {got}, budget allows {max}")]
    BudgetExceeded { what: &'static str, got: usize, max: usize },
    #[error("uniformity mismatch: {0} vs {1}")]
    UniformityMismatch(usize, usize),
}

/// Hard caps: the oracles refuse anything larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_pattern_vertices: usize,
    pub max_host_vertices: usize,
    pub max_sequence_length: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_pattern_vertices: 10,
            max_host_vertices: 9,
            max_sequence_length: 8,
        }
    }
}

impl OracleBudget {
    fn admit(&self, pattern: &Hypergraph, host: &Hypergraph) -> Result<(), OracleError> {
        if pattern.uniformity() != host.uniformity() {
            return Err(OracleError::UniformityMismatch(pattern.uniformity(), host.uniformity()));
        }
        if pattern.vertex_count() > self.max_pattern_vertices {
            return Err(OracleError::BudgetExceeded {
                what: "pattern vertex count",
                got: pattern.vertex_count(),
                max: self.max_pattern_vertices,
            });
        }
        if host.vertex_count() > self.max_host_vertices {
            return Err(OracleError::BudgetExceeded {
                what: "host vertex count",
                got: host.vertex_count(),
                max: self.max_host_vertices,
            });
        }
        Ok(())
    }
}

fn image_is_edge(host: &Hypergraph, pattern_edge: &[usize], map: &[usize]) -> bool {
    let mut image: Vec<usize> = pattern_edge.iter().map(|&v| map[v]).collect();
    image.sort_unstable();
    image.dedup();
    image.len() == pattern_edge.len() && host.has_edge(&image)
}

/// All `v(H)^{v(F)}` maps, recursively in natural vertex order; an edge is
/// checked as soon as its last vertex is assigned.
pub fn brute_hom(
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: OracleBudget,
) -> Result<BigUint, OracleError> {
    budget.admit(pattern, host)?;
    let pv = pattern.vertex_count();
    // pattern edges keyed by their maximum vertex
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); pv];
    for (id, e) in pattern.edges().iter().enumerate() {
        closing[*e.last().unwrap()].push(id);
    }
    let mut map = vec![0usize; pv];
    let mut count = 0u128;
    fn recurse(
        pattern: &Hypergraph,
        host: &Hypergraph,
        closing: &[Vec<usize>],
        map: &mut Vec<usize>,
        v: usize,
        count: &mut u128,
    ) {
        if v == map.len() {
            *count += 1;
            return;
        }
        for x in 0..host.vertex_count() {
            map[v] = x;
            if closing[v]
                .iter()
                .all(|&id| image_is_edge(host, pattern.edge(id), map))
            {
                recurse(pattern, host, closing, map, v + 1, count);
            }
        }
    }
    if pv == 0 {
        return Ok(BigUint::from(1u32));
    }
    recurse(pattern, host, &closing, &mut map, 0, &mut count);
    Ok(BigUint::from(count))
}

/// All injective maps, same scheme plus a used-vertex mask.
pub fn brute_copies(
    pattern: &Hypergraph,
    host: &Hypergraph,
    budget: OracleBudget,
) -> Result<BigUint, OracleError> {
    budget.admit(pattern, host)?;
    let pv = pattern.vertex_count();
    if pv > host.vertex_count() {
        return Ok(BigUint::from(0u32));
    }
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); pv];
    for (id, e) in pattern.edges().iter().enumerate() {
        closing[*e.last().unwrap()].push(id);
    }
    let mut map = vec![0usize; pv];
    let mut used = vec![false; host.vertex_count()];
    let mut count = 0u128;
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        pattern: &Hypergraph,
        host: &Hypergraph,
        closing: &[Vec<usize>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
        count: &mut u128,
    ) {
        if v == map.len() {
            *count += 1;
            return;
        }
        for x in 0..host.vertex_count() {
            if used[x] {
                continue;
            }
            map[v] = x;
            if closing[v]
                .iter()
                .all(|&id| image_is_edge(host, pattern.edge(id), map))
            {
                used[x] = true;
                recurse(pattern, host, closing, map, used, v + 1, count);
                used[x] = false;
            }
        }
    }
    if pv == 0 {
        return Ok(BigUint::from(1u32));
    }
    recurse(pattern, host, &closing, &mut map, &mut used, 0, &mut count);
    Ok(BigUint::from(count))
}

/// Is there a Berge cycle of length exactly `k`? Raw search over alternating
/// sequences of distinct vertices and distinct edges.
fn has_cycle_of_length(h: &Hypergraph, k: usize) -> bool {
    fn extend(
        h: &Hypergraph,
        k: usize,
        vertices: &mut Vec<usize>,
        edges: &mut Vec<usize>,
    ) -> bool {
        if vertices.len() == k {
            // closing edge: contains v_k and v_1, distinct from all used
            let first = vertices[0];
            let last = *vertices.last().unwrap();
            return (0..h.edge_count()).any(|id| {
                !edges.contains(&id)
                    && h.edge(id).contains(&last)
                    && h.edge(id).contains(&first)
            });
        }
        let last = *vertices.last().unwrap();
        for id in 0..h.edge_count() {
            if edges.contains(&id) || !h.edge(id).contains(&last) {
                continue;
            }
            for &next in h.edge(id) {
                if vertices.contains(&next) {
                    continue;
                }
                vertices.push(next);
                edges.push(id);
                if extend(h, k, vertices, edges) {
                    return true;
                }
                edges.pop();
                vertices.pop();
            }
        }
        false
    }
    for start in 0..h.vertex_count() {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        if extend(h, k, &mut vertices, &mut edges) {
            return true;
        }
    }
    false
}

/// Smallest `k` in `2..=k_max` with a Berge cycle of length `k`, if any.
pub fn brute_girth_at_most(h: &Hypergraph, k_max: usize) -> Option<usize> {
    (2..=k_max).find(|&k| k <= h.edge_count() && has_cycle_of_length(h, k))
}

/// Exact Berge girth (`None` = acyclic). Refuses when exactness would
/// require sequences longer than the budget.
pub fn brute_berge_girth(
    h: &Hypergraph,
    budget: OracleBudget,
) -> Result<Option<usize>, OracleError> {
    let longest = h.vertex_count().min(h.edge_count());
    if let Some(g) = brute_girth_at_most(h, longest.min(budget.max_sequence_length)) {
        return Ok(Some(g));
    }
    if longest > budget.max_sequence_length {
        return Err(OracleError::BudgetExceeded {
            what: "cycle search length",
            got: longest,
            max: budget.max_sequence_length,
        });
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blow_up, linear_cycle, linear_path, single_edge, steiner_triple_9};

    #[test]
    fn brute_hom_single_edge() {
        let f = single_edge(3).unwrap();
        let h = linear_cycle(3, 3).unwrap();
        assert_eq!(brute_hom(&f, &h, OracleBudget::default()).unwrap(), BigUint::from(18u32));
    }

    #[test]
    fn brute_hom_empty_host() {
        let f = single_edge(3).unwrap();
        let h = Hypergraph::empty(3, 4).unwrap();
        assert_eq!(brute_hom(&f, &h, OracleBudget::default()).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn brute_copies_examples() {
        let f = single_edge(3).unwrap();
        assert_eq!(brute_copies(&f, &f, OracleBudget::default()).unwrap(), BigUint::from(6u32));
        let big = linear_cycle(3, 3).unwrap();
        assert_eq!(brute_copies(&big, &f, OracleBudget::default()).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn brute_hom_ge_copies() {
        let f = linear_path(3, 2).unwrap();
        let h = steiner_triple_9();
        let hom = brute_hom(&f, &h, OracleBudget::default()).unwrap();
        let copies = brute_copies(&f, &h, OracleBudget::default()).unwrap();
        assert!(hom >= copies);
    }

    #[test]
    fn budget_refusals() {
        let f = linear_cycle(3, 4).unwrap(); // 8 vertices
        let h = steiner_triple_9();
        let tight = OracleBudget { max_pattern_vertices: 6, ..OracleBudget::default() };
        assert!(matches!(
            brute_hom(&f, &h, tight),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn brute_girth_values() {
        assert_eq!(
            brute_berge_girth(&linear_cycle(3, 3).unwrap(), OracleBudget::default()).unwrap(),
            Some(3)
        );
        let b = blow_up(&single_edge(3).unwrap(), 2).unwrap();
        assert_eq!(brute_berge_girth(&b, OracleBudget::default()).unwrap(), Some(2));
        assert_eq!(
            brute_berge_girth(&linear_path(3, 3).unwrap(), OracleBudget::default()).unwrap(),
            None
        );
        assert_eq!(
            brute_berge_girth(&steiner_triple_9(), OracleBudget::default()).unwrap(),
            Some(3)
        );
    }

    #[test]
    fn brute_girth_budget_refusal_only_when_unresolved() {
        // 10 vertices, 5 edges: girth 5 found within any budget >= 5.
        let c = linear_cycle(3, 5).unwrap();
        let tight = OracleBudget { max_sequence_length: 5, ..OracleBudget::default() };
        assert_eq!(brute_berge_girth(&c, tight).unwrap(), Some(5));
        let too_tight = OracleBudget { max_sequence_length: 4, ..OracleBudget::default() };
        assert!(brute_berge_girth(&c, too_tight).is_err());
    }
}
