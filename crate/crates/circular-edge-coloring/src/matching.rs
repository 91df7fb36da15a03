//! Perfect matchings and complementary 2-factors of cubic graphs.
//!
//! Maximum matching uses Edmonds' blossom algorithm (the simple O(n^3)
//! contraction variant). The complement of a perfect matching in a cubic
//! graph is a 2-factor; its cycles are traced with explicit edge ids so
//! parallel edges stay distinguishable.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::MultiGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("edge set is not a perfect matching: {reason}")]
    NotPerfect { reason: String },
}

/// One cycle of a 2-factor. `edges[j]` joins `vertices[j]` and
/// `vertices[(j + 1) % len]`; a self-loop forms a cycle of length 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A perfect matching together with the cycle decomposition of the
/// complementary 2-factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    matching: Vec<usize>,
    cycles: Vec<Cycle>,
    cycle_of_vertex: Vec<(usize, usize)>,
}

impl TwoFactor {
    /// Matching edge ids, ascending.
    pub fn matching(&self) -> &[usize] {
        &self.matching
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// `(cycle index, position)` of a vertex in the 2-factor.
    pub fn cycle_of_vertex(&self, v: usize) -> (usize, usize) {
        self.cycle_of_vertex[v]
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Cycle::len).collect()
    }

    /// True when no cycle has length 3 or 5 (the hypothesis of the
    /// (7,2)-coloring construction).
    pub fn is_admissible(&self) -> bool {
        self.cycles.iter().all(|c| c.len() != 3 && c.len() != 5)
    }
}

/// Maximum matching mate array: `mate[v]` is the partner of `v`.
///
/// Parallel edges and self-loops are irrelevant to matchings and are
/// deduplicated/skipped up front.
pub fn maximum_matching(graph: &MultiGraph) -> Vec<Option<usize>> {
    let n = graph.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in graph.edges() {
        if a != b && !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }

    let inf = usize::MAX;
    let mut mate = vec![inf; n];
    let mut parent = vec![inf; n];
    let mut base: Vec<usize> = (0..n).collect();

    fn lca(
        mut v: usize,
        mut w: usize,
        parent: &[usize],
        base: &[usize],
        mate: &[usize],
    ) -> usize {
        let inf = usize::MAX;
        let mut on_path = vec![false; parent.len()];
        loop {
            v = base[v];
            on_path[v] = true;
            if mate[v] == inf {
                break;
            }
            v = parent[mate[v]];
        }
        loop {
            w = base[w];
            if on_path[w] {
                return w;
            }
            w = parent[mate[w]];
        }
    }

    fn mark_blossom(
        mut v: usize,
        b: usize,
        mut child: usize,
        parent: &mut [usize],
        base: &[usize],
        mate: &[usize],
        in_blossom: &mut [bool],
    ) {
        while base[v] != b {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    fn find_augmenting_path(
        start: usize,
        adj: &[Vec<usize>],
        mate: &[usize],
        parent: &mut [usize],
        base: &mut [usize],
    ) -> Option<usize> {
        let n = adj.len();
        let inf = usize::MAX;
        for i in 0..n {
            parent[i] = inf;
            base[i] = i;
        }
        let mut used = vec![false; n];
        used[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == start || (mate[to] != inf && parent[mate[to]] != inf) {
                    // Blossom found; contract it to the LCA base.
                    let cur = lca(v, to, parent, base, mate);
                    let mut in_blossom = vec![false; n];
                    mark_blossom(v, cur, to, parent, base, mate, &mut in_blossom);
                    mark_blossom(to, cur, v, parent, base, mate, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == inf {
                    parent[to] = v;
                    if mate[to] == inf {
                        return Some(to);
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        None
    }

    for v in 0..n {
        if mate[v] != inf {
            continue;
        }
        if let Some(finish) = find_augmenting_path(v, &adj, &mate, &mut parent, &mut base) {
            // Flip matched status along the path back to v.
            let mut cur = finish;
            while cur != inf {
                let prev = parent[cur];
                let next = if prev == inf { inf } else { mate[prev] };
                mate[cur] = prev;
                if prev != inf {
                    mate[prev] = cur;
                }
                cur = next;
            }
        }
    }

    mate.into_iter()
        .map(|x| if x == usize::MAX { None } else { Some(x) })
        .collect()
}

/// A perfect matching as a sorted list of edge ids, or `None` when the
/// maximum matching covers fewer than all vertices. The result is
/// re-validated before it is returned.
pub fn perfect_matching(graph: &MultiGraph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    if n % 2 != 0 {
        return None;
    }
    let mate = maximum_matching(graph);
    if mate.iter().any(Option::is_none) {
        return None;
    }
    let mut edges = Vec::with_capacity(n / 2);
    for v in 0..n {
        let w = mate[v].expect("all matched");
        if v < w {
            // Smallest edge id joining the pair.
            let e = graph
                .adjacency(v)
                .iter()
                .copied()
                .filter(|&e| graph.other_endpoint(e, v) == w)
                .min()
                .expect("mate implies an edge");
            edges.push(e);
        }
    }
    edges.sort_unstable();
    debug_assert!(validate_perfect_matching(graph, &edges).is_ok());
    Some(edges)
}

/// Checks that `edges` is a perfect matching of `graph`.
pub fn validate_perfect_matching(graph: &MultiGraph, edges: &[usize]) -> Result<(), MatchingError> {
    let mut covered = vec![false; graph.vertex_count()];
    for &e in edges {
        if e >= graph.edge_count() {
            return Err(MatchingError::NotPerfect {
                reason: format!("edge id {e} out of range"),
            });
        }
        let (a, b) = graph.endpoints(e);
        if a == b {
            return Err(MatchingError::NotPerfect {
                reason: format!("edge {e} is a self-loop"),
            });
        }
        for v in [a, b] {
            if covered[v] {
                return Err(MatchingError::NotPerfect {
                    reason: format!("vertex {v} covered twice"),
                });
            }
            covered[v] = true;
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return Err(MatchingError::NotPerfect {
            reason: format!("vertex {v} uncovered"),
        });
    }
    Ok(())
}

fn ensure_cubic(graph: &MultiGraph) -> Result<(), MatchingError> {
    for v in 0..graph.vertex_count() {
        if graph.degree(v) != 3 {
            return Err(MatchingError::NotCubic {
                vertex: v,
                degree: graph.degree(v),
            });
        }
    }
    Ok(())
}

/// Decomposes the complement of a perfect matching of a cubic graph into
/// its cycles.
///
/// Each cycle starts at its minimum vertex id and is traversed toward the
/// smaller-id neighbor (ties broken by edge id), so the output is
/// deterministic.
pub fn two_factor(graph: &MultiGraph, matching: &[usize]) -> Result<TwoFactor, MatchingError> {
    ensure_cubic(graph)?;
    validate_perfect_matching(graph, matching)?;
    let mut in_matching = vec![false; graph.edge_count()];
    for &e in matching {
        in_matching[e] = true;
    }
    let n = graph.vertex_count();
    // Complement slots per vertex: exactly two edge ids each (a loop fills
    // both slots of its vertex).
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        for &e in graph.adjacency(v) {
            if !in_matching[e] {
                slots[v].push(e);
            }
        }
        debug_assert_eq!(slots[v].len(), 2);
    }

    let mut cycle_of_vertex = vec![(usize::MAX, usize::MAX); n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if cycle_of_vertex[start].0 != usize::MAX {
            continue;
        }
        let idx = cycles.len();
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        if slots[start][0] == slots[start][1] {
            // A self-loop complement: cycle of length 1.
            vertices.push(start);
            edges.push(slots[start][0]);
            cycle_of_vertex[start] = (idx, 0);
            cycles.push(Cycle { vertices, edges });
            continue;
        }
        // First step: toward the smaller neighbor, edge id breaking ties.
        let mut first_candidates: Vec<(usize, usize)> = slots[start]
            .iter()
            .map(|&e| (graph.other_endpoint(e, start), e))
            .collect();
        first_candidates.sort_unstable();
        let (_, mut edge) = first_candidates[0];
        let mut v = start;
        loop {
            cycle_of_vertex[v] = (idx, vertices.len());
            vertices.push(v);
            edges.push(edge);
            let next = graph.other_endpoint(edge, v);
            if next == start {
                break;
            }
            let pair = &slots[next];
            edge = if pair[0] == edge { pair[1] } else { pair[0] };
            v = next;
        }
        cycles.push(Cycle { vertices, edges });
    }

    let tf = TwoFactor {
        matching: {
            let mut m = matching.to_vec();
            m.sort_unstable();
            m
        },
        cycles,
        cycle_of_vertex,
    };
    debug_assert_eq!(
        tf.matching.len() + tf.cycles.iter().map(|c| c.edges.len()).sum::<usize>(),
        graph.edge_count()
    );
    Ok(tf)
}

/// Enumerates perfect matchings in a fixed deterministic order, up to
/// `limit` many. Matchings are edge-id sets; parallel edges give distinct
/// matchings.
pub fn enumerate_perfect_matchings(graph: &MultiGraph, limit: usize) -> Vec<Vec<usize>> {
    let mut result = Vec::new();
    let mut covered = vec![false; graph.vertex_count()];
    let mut chosen = Vec::new();
    enumerate_rec(graph, &mut covered, &mut chosen, &mut result, limit);
    result
}

fn enumerate_rec(
    graph: &MultiGraph,
    covered: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    result: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if result.len() >= limit {
        return;
    }
    let Some(v) = covered.iter().position(|&c| !c) else {
        result.push(chosen.clone());
        return;
    };
    let mut incident: Vec<usize> = graph.adjacency(v).to_vec();
    incident.sort_unstable();
    incident.dedup();
    for e in incident {
        let w = graph.other_endpoint(e, v);
        if w == v || covered[w] {
            continue;
        }
        covered[v] = true;
        covered[w] = true;
        chosen.push(e);
        enumerate_rec(graph, covered, chosen, result, limit);
        chosen.pop();
        covered[v] = false;
        covered[w] = false;
        if result.len() >= limit {
            return;
        }
    }
}

pub const DEFAULT_MATCHING_BUDGET: usize = 1_000_000;

/// Searches for a 2-factor with no 3- or 5-cycles.
///
/// The blossom matching is tried first; if its complement contains a 3- or
/// 5-cycle, perfect matchings are enumerated exhaustively (up to `budget`
/// of them) in the fixed enumeration order. Returns `None` when the search
/// exhausts without an admissible factor.
pub fn admissible_two_factor_with_budget(
    graph: &MultiGraph,
    budget: usize,
) -> Result<Option<TwoFactor>, MatchingError> {
    ensure_cubic(graph)?;
    let Some(first) = perfect_matching(graph) else {
        return Ok(None);
    };
    let tf = two_factor(graph, &first)?;
    if tf.is_admissible() {
        return Ok(Some(tf));
    }
    for matching in enumerate_perfect_matchings(graph, budget) {
        let tf = two_factor(graph, &matching)?;
        if tf.is_admissible() {
            return Ok(Some(tf));
        }
    }
    Ok(None)
}

/// [`admissible_two_factor_with_budget`] with the default budget.
pub fn admissible_two_factor(graph: &MultiGraph) -> Result<Option<TwoFactor>, MatchingError> {
    admissible_two_factor_with_budget(graph, DEFAULT_MATCHING_BUDGET)
}
