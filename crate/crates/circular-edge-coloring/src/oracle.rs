//! Independent verification and ground truth: the (p,q)-coloring checker,
//! exact circular chromatic index by rational search, a brute-force
//! compatible-decomposition search, and small-graph canonical forms.
//!
//! Everything here is deliberately separate from the constructive pipeline
//! so the two sides can check each other.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coloring::CircularEdgeColoring;
use crate::graph::MultiGraph;
use crate::rotation::{End, RotationMap};
use crate::trails::{Decomposition, Trail, TrailStep};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("no (p,q)-coloring with p <= {p_max} exists")]
    SearchExhausted { p_max: usize },
    #[error("map has {ends} ends, over the budget of {budget}")]
    BudgetExceeded { ends: usize, budget: usize },
    #[error("search stopped after {nodes} nodes; raise the budget")]
    NodeBudgetExceeded { nodes: u64 },
    #[error("unsupported graph: {0}")]
    UnsupportedGraph(String),
}

/// Why a coloring fails to be a valid (p,q)-edge-coloring.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PqViolation {
    #[error("coloring covers {got} edges, the graph has {expected}")]
    PartialColoring { expected: usize, got: usize },
    #[error("edge {edge} has color {color}, outside 0..{p}")]
    ColorOutOfRange { edge: usize, color: usize, p: usize },
    #[error(
        "edges {edge_a} and {edge_b} share vertex {vertex} but carry colors \
         {color_a} and {color_b} at circular distance {distance} < {q}"
    )]
    AdjacentPair {
        edge_a: usize,
        edge_b: usize,
        vertex: usize,
        color_a: usize,
        color_b: usize,
        distance: usize,
        q: usize,
    },
}

/// Circular distance of two colors in `Z_p`.
pub fn circular_distance(a: usize, b: usize, p: usize) -> usize {
    let d = a.abs_diff(b) % p;
    d.min(p - d)
}

/// Checks that `colors` is a (p,q)-edge-coloring of `graph`: every pair of
/// distinct edges sharing a vertex has circular color distance at least
/// `q`. Reports the first violation in vertex, then adjacency order.
pub fn verify_pq(
    graph: &MultiGraph,
    colors: &[usize],
    p: usize,
    q: usize,
) -> Result<(), PqViolation> {
    if colors.len() != graph.edge_count() {
        return Err(PqViolation::PartialColoring {
            expected: graph.edge_count(),
            got: colors.len(),
        });
    }
    for (edge, &color) in colors.iter().enumerate() {
        if color >= p {
            return Err(PqViolation::ColorOutOfRange { edge, color, p });
        }
    }
    for v in 0..graph.vertex_count() {
        let incident = graph.adjacency(v);
        for i in 0..incident.len() {
            for j in i + 1..incident.len() {
                let (a, b) = (incident[i], incident[j]);
                if a == b {
                    continue; // the two ends of a self-loop
                }
                let distance = circular_distance(colors[a], colors[b], p);
                if distance < q {
                    return Err(PqViolation::AdjacentPair {
                        edge_a: a.min(b),
                        edge_b: a.max(b),
                        vertex: v,
                        color_a: colors[a.min(b)],
                        color_b: colors[a.max(b)],
                        distance,
                        q,
                    });
                }
            }
        }
    }
    Ok(())
}

/// A reduced fraction `num/den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    num: usize,
    den: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Fraction {
    pub fn new(num: usize, den: usize) -> Fraction {
        assert!(den >= 1, "denominator must be positive");
        let g = gcd(num, den).max(1);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numerator(&self) -> usize {
        self.num
    }

    pub fn denominator(&self) -> usize {
        self.den
    }

    pub fn ceil(&self) -> usize {
        self.num.div_ceil(self.den)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Word-backed bitset over `0..p` used as a color domain.
#[derive(Clone)]
struct Domain {
    words: Vec<u64>,
    size: usize,
}

impl Domain {
    fn full(p: usize) -> Domain {
        let mut words = vec![u64::MAX; p.div_ceil(64)];
        let excess = words.len() * 64 - p;
        if excess > 0 {
            *words.last_mut().expect("nonempty") >>= excess;
        }
        Domain { words, size: p }
    }

    fn contains(&self, c: usize) -> bool {
        self.words[c / 64] >> (c % 64) & 1 == 1
    }

    fn remove(&mut self, c: usize) -> bool {
        let was = self.contains(c);
        if was {
            self.words[c / 64] &= !(1 << (c % 64));
            self.size -= 1;
        }
        was
    }

    fn insert(&mut self, c: usize) {
        if !self.contains(c) {
            self.words[c / 64] |= 1 << (c % 64);
            self.size += 1;
        }
    }

    fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Ascending values; only bits below `p` are ever set.
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.words.len() * 64).filter(|&c| self.contains(c))
    }
}

/// Backtracking feasibility search for a (p,q)-edge-coloring.
///
/// Variable order is fixed: edges by decreasing endpoint degree sum, then
/// by id; values ascend. The first edge is pinned to color 0 (rotation
/// symmetry) and the second is restricted to the lower half of `Z_p`
/// (reflection symmetry). Forward checking prunes emptied domains.
/// `node_budget` caps the number of value assignments tried.
pub fn find_pq_coloring(
    graph: &MultiGraph,
    p: usize,
    q: usize,
    node_budget: Option<u64>,
) -> Result<Option<Vec<usize>>, OracleError> {
    let m = graph.edge_count();
    if m == 0 {
        return Ok(Some(Vec::new()));
    }
    if p == 0 {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..m).collect();
    let degree_sum = |e: usize| {
        let (a, b) = graph.endpoints(e);
        graph.degree(a) + graph.degree(b)
    };
    order.sort_by_key(|&e| (std::cmp::Reverse(degree_sum(e)), e));

    // Adjacency in order-index space.
    let mut slot_of = vec![0usize; m];
    for (slot, &e) in order.iter().enumerate() {
        slot_of[e] = slot;
    }
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); m];
    for v in 0..graph.vertex_count() {
        let incident = graph.adjacency(v);
        for i in 0..incident.len() {
            for j in i + 1..incident.len() {
                if incident[i] == incident[j] {
                    continue;
                }
                let (a, b) = (slot_of[incident[i]], slot_of[incident[j]]);
                if !adjacent[a].contains(&b) {
                    adjacent[a].push(b);
                    adjacent[b].push(a);
                }
            }
        }
    }
    for list in &mut adjacent {
        list.sort_unstable();
    }

    let mut search = PqSearch {
        p,
        q,
        adjacent,
        domains: vec![Domain::full(p); m],
        colors: vec![usize::MAX; m],
        nodes: 0,
        node_budget,
    };
    if search.solve(0)? {
        let mut colors = vec![0usize; m];
        for (slot, &e) in order.iter().enumerate() {
            colors[e] = search.colors[slot];
        }
        Ok(Some(colors))
    } else {
        Ok(None)
    }
}

struct PqSearch {
    p: usize,
    q: usize,
    adjacent: Vec<Vec<usize>>,
    domains: Vec<Domain>,
    colors: Vec<usize>,
    nodes: u64,
    node_budget: Option<u64>,
}

impl PqSearch {
    fn solve(&mut self, slot: usize) -> Result<bool, OracleError> {
        if slot == self.colors.len() {
            return Ok(true);
        }
        // Slot 0 is pinned to 0 (rotation symmetry); slot 1 is restricted
        // to the lower half of Z_p (reflection symmetry fixes color 0).
        let candidates: Vec<usize> = if slot == 0 {
            vec![0]
        } else {
            let cap = if slot == 1 { self.p / 2 } else { self.p - 1 };
            self.domains[slot].iter().filter(|&c| c <= cap).collect()
        };
        for c in candidates {
            if let Some(budget) = self.node_budget {
                if self.nodes >= budget {
                    return Err(OracleError::NodeBudgetExceeded { nodes: self.nodes });
                }
            }
            self.nodes += 1;
            if let Some(removed) = self.assign(slot, c) {
                self.colors[slot] = c;
                if self.solve(slot + 1)? {
                    return Ok(true);
                }
                self.colors[slot] = usize::MAX;
                self.restore(removed);
            }
        }
        Ok(false)
    }

    /// Narrows the domains of uncolored neighbors of `slot` around `c`;
    /// rolls back and returns `None` when a domain empties.
    fn assign(&mut self, slot: usize, c: usize) -> Option<Vec<(usize, usize)>> {
        let mut removed: Vec<(usize, usize)> = Vec::new();
        for idx in 0..self.adjacent[slot].len() {
            let other = self.adjacent[slot][idx];
            if self.colors[other] != usize::MAX {
                continue;
            }
            for delta in 0..self.q {
                let lo = (c + self.p - delta) % self.p;
                let hi = (c + delta) % self.p;
                for value in [lo, hi] {
                    if self.domains[other].remove(value) {
                        removed.push((other, value));
                    }
                }
            }
            if self.domains[other].is_empty() {
                self.restore(removed);
                return None;
            }
        }
        Some(removed)
    }

    fn restore(&mut self, removed: Vec<(usize, usize)>) {
        for (other, value) in removed {
            self.domains[other].insert(value);
        }
    }
}

/// Largest set of mutually adjacent edges forced locally: the maximum
/// number of distinct edges at one vertex. Any (p,q)-coloring needs
/// `p >= clique * q`.
fn edge_clique_lower_bound(graph: &MultiGraph) -> usize {
    (0..graph.vertex_count())
        .map(|v| {
            let mut ids: Vec<usize> = graph.adjacency(v).to_vec();
            ids.sort_unstable();
            ids.dedup();
            ids.len()
        })
        .max()
        .unwrap_or(0)
}

/// Exact circular chromatic index: the minimum ratio `p/q` over reduced
/// fractions with `p <= p_max` admitting a (p,q)-edge-coloring, found by
/// testing candidates in increasing ratio order. Returns the fraction and
/// a witness coloring.
pub fn exact_index(
    graph: &MultiGraph,
    p_max: usize,
    node_budget: Option<u64>,
) -> Result<(Fraction, CircularEdgeColoring), OracleError> {
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for q in 1..=p_max {
        for p in q..=p_max {
            if gcd(p, q) == 1 {
                candidates.push((p, q));
            }
        }
    }
    candidates.sort_by(|&(p1, q1), &(p2, q2)| {
        (p1 as u128 * q2 as u128).cmp(&(p2 as u128 * q1 as u128))
    });
    let bound = edge_clique_lower_bound(graph);
    for (p, q) in candidates {
        if p < bound * q {
            continue;
        }
        if let Some(colors) = find_pq_coloring(graph, p, q, node_budget)? {
            return Ok((
                Fraction::new(p, q),
                CircularEdgeColoring { p, q, colors },
            ));
        }
    }
    Err(OracleError::SearchExhausted { p_max })
}

/// Brute-force chromatic index: the least number of colors properly
/// edge-coloring the graph, by plain backtracking over edges in input
/// order. Independent of the circular machinery above.
pub fn chromatic_index_brute(graph: &MultiGraph) -> usize {
    let m = graph.edge_count();
    if m == 0 {
        return 0;
    }
    fn feasible(graph: &MultiGraph, k: usize, colors: &mut Vec<usize>, edge: usize) -> bool {
        if edge == graph.edge_count() {
            return true;
        }
        let (a, b) = graph.endpoints(edge);
        'colors: for c in 0..k {
            for v in [a, b] {
                for &other in graph.adjacency(v) {
                    if other != edge && colors[other] == c {
                        continue 'colors;
                    }
                }
            }
            colors[edge] = c;
            if feasible(graph, k, colors, edge + 1) {
                return true;
            }
            colors[edge] = usize::MAX;
        }
        false
    }
    for k in 1..=m {
        let mut colors = vec![usize::MAX; m];
        if feasible(graph, k, &mut colors, 0) {
            return k;
        }
    }
    m
}

pub const DEFAULT_END_BUDGET: usize = 16;

/// Exhaustive compatible-decomposition search, independent of the
/// constructive recursion.
///
/// Every decomposition into open trails corresponds to a set of disjoint
/// end-pair transitions at the vertices; dropping transitions keeps trails
/// open and anchored pairs adjacent, so it suffices to try, for each
/// choice of anchor indices at the odd-degree vertices, exactly the three
/// anchored transitions and check that the resulting end graph is acyclic.
/// Returns the first success in lexicographic anchor order, or `None`.
pub fn brute_compatible_with_budget(
    map: &RotationMap,
    end_budget: usize,
) -> Result<Option<Decomposition>, OracleError> {
    let ends: usize = map.vertex_ids().map(|v| map.degree(v)).sum();
    if ends > end_budget {
        return Err(OracleError::BudgetExceeded {
            ends,
            budget: end_budget,
        });
    }
    let odd_vertices: Vec<usize> = map.vertex_ids().filter(|&v| map.degree(v) % 2 == 1).collect();
    // Anchor candidates whose six positions are pairwise distinct.
    let mut anchor_options: Vec<Vec<usize>> = Vec::new();
    for &v in &odd_vertices {
        let d = map.degree(v);
        let valid: Vec<usize> = (0..d)
            .filter(|&i| {
                let mut positions: Vec<usize> =
                    [0usize, 5, 1, 3, 2, 4].iter().map(|&k| (i + k) % d).collect();
                positions.sort_unstable();
                positions.dedup();
                positions.len() == 6
            })
            .collect();
        if valid.is_empty() {
            return Ok(None);
        }
        anchor_options.push(valid);
    }

    let mut choice = vec![0usize; odd_vertices.len()];
    loop {
        let anchors: BTreeMap<usize, usize> = odd_vertices
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, anchor_options[k][choice[k]]))
            .collect();
        if let Some(trails) = trails_for_transitions(map, &anchors) {
            return Ok(Some(Decomposition::new(trails, anchors)));
        }
        // Next anchor combination, lexicographically.
        let mut k = odd_vertices.len();
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < anchor_options[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// [`brute_compatible_with_budget`] with the default end budget.
pub fn brute_compatible(map: &RotationMap) -> Result<Option<Decomposition>, OracleError> {
    brute_compatible_with_budget(map, DEFAULT_END_BUDGET)
}

/// Assembles the trails induced by the anchored transitions, or `None`
/// when some component closes into a cycle.
fn trails_for_transitions(
    map: &RotationMap,
    anchors: &BTreeMap<usize, usize>,
) -> Option<Vec<Trail>> {
    // Node = (edge, side) for the two ends of each edge; attached ends are
    // reachable by (vertex, position).
    let edge_list: Vec<usize> = map.edge_ids().collect();
    let index_of: BTreeMap<usize, usize> = edge_list
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let node = |e: usize, side: usize| 2 * index_of[&e] + side;
    let mut node_of_end: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut end_of_node: Vec<End> = vec![End::Free; 2 * edge_list.len()];
    for &e in &edge_list {
        let (a, b) = map.edge(e).ends();
        for (side, end) in [(0, a), (1, b)] {
            end_of_node[node(e, side)] = end;
            if let End::At { vertex, position } = end {
                node_of_end.insert((vertex, position), node(e, side));
            }
        }
    }

    // Transition partner per node, from the anchored pairs.
    let mut partner: Vec<Option<usize>> = vec![None; 2 * edge_list.len()];
    for (&v, &anchor) in anchors {
        let d = map.degree(v);
        for (a, b) in Decomposition::anchored_pairs(anchor, d) {
            let na = node_of_end[&(v, a)];
            let nb = node_of_end[&(v, b)];
            if partner[na].is_some() || partner[nb].is_some() || na == nb {
                return None; // collided transitions cannot stay open
            }
            partner[na] = Some(nb);
            partner[nb] = Some(na);
        }
    }

    // Walk path components from exposed ends.
    let mut visited = vec![false; 2 * edge_list.len()];
    let mut trails = Vec::new();
    for start in 0..visited.len() {
        if visited[start] || partner[start].is_some() {
            continue;
        }
        let mut steps = Vec::new();
        let mut at = start;
        loop {
            visited[at] = true;
            let e = edge_list[at / 2];
            let other = at ^ 1;
            visited[other] = true;
            steps.push(TrailStep {
                edge: e,
                from: end_of_node[at],
                to: end_of_node[other],
            });
            match partner[other] {
                Some(next) => at = next,
                None => break,
            }
        }
        trails.push(Trail::from_steps(steps, false));
    }
    if visited.iter().any(|&v| !v) {
        return None; // leftover nodes lie on cycles: a closed trail
    }
    Some(trails)
}

/// Canonical form of a simple graph: vertex count plus the upper-triangle
/// adjacency bits of the lexicographically smallest relabeling, packed
/// into bytes. Two simple graphs are isomorphic iff their forms agree.
pub fn canonical_form(graph: &MultiGraph) -> Result<Vec<u8>, OracleError> {
    let n = graph.vertex_count();
    if n > 12 {
        return Err(OracleError::UnsupportedGraph(format!(
            "canonical form limited to 12 vertices, got {n}"
        )));
    }
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in graph.edges() {
        if a == b {
            return Err(OracleError::UnsupportedGraph("self-loop".into()));
        }
        if adj[a][b] {
            return Err(OracleError::UnsupportedGraph("parallel edges".into()));
        }
        adj[a][b] = true;
        adj[b][a] = true;
    }

    // bits in row order: for k, the bits adj(sigma[i], sigma[k]) for i < k.
    let total_bits = n * (n - 1) / 2;
    let mut best = vec![true; total_bits];
    {
        let mut pos = 0;
        for k in 0..n {
            for i in 0..k {
                best[pos] = adj[i][k];
                pos += 1;
            }
        }
    }
    let mut sigma: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut bits = vec![false; total_bits];
    search_canonical(&adj, &mut sigma, &mut used, &mut bits, 0, false, &mut best);

    let mut packed = Vec::with_capacity(1 + total_bits.div_ceil(8));
    packed.push(n as u8);
    let mut byte = 0u8;
    for (i, &bit) in best.iter().enumerate() {
        if bit {
            byte |= 1 << (i % 8);
        }
        if i % 8 == 7 {
            packed.push(byte);
            byte = 0;
        }
    }
    if total_bits % 8 != 0 {
        packed.push(byte);
    }
    Ok(packed)
}

fn search_canonical(
    adj: &[Vec<bool>],
    sigma: &mut Vec<usize>,
    used: &mut [bool],
    bits: &mut [bool],
    bit_pos: usize,
    strictly_less: bool,
    best: &mut Vec<bool>,
) {
    let n = adj.len();
    let k = sigma.len();
    if k == n {
        if strictly_less {
            best.copy_from_slice(bits);
        }
        return;
    }
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        // Append row k: bits adj(sigma[i], cand) for i < k.
        let mut less = strictly_less;
        let mut prune = false;
        for i in 0..k {
            let pos = bit_pos + i;
            let bit = adj[sigma[i]][cand];
            bits[pos] = bit;
            if !less {
                if bit && !best[pos] {
                    prune = true;
                    break;
                }
                if !bit && best[pos] {
                    less = true;
                }
            }
        }
        if prune {
            continue;
        }
        sigma.push(cand);
        used[cand] = true;
        search_canonical(adj, sigma, used, bits, bit_pos + k, less, best);
        used[cand] = false;
        sigma.pop();
    }
}

/// Isomorphism test for small simple graphs via canonical forms.
pub fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> Result<bool, OracleError> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// All involutions of `0..d` as single-vertex pairing specs:
/// `spec[p] = Some(q)` pairs positions `p` and `q` into a loop and
/// `spec[p] = None` leaves a half-edge. These enumerate every
/// single-vertex rotation map of degree `d`.
pub fn involutions(d: usize) -> Vec<Vec<Option<usize>>> {
    // `Some(usize::MAX)` marks a decided half-edge during the recursion;
    // plain `None` is still undecided.
    fn rec(spec: &mut Vec<Option<usize>>, from: usize, out: &mut Vec<Vec<Option<usize>>>) {
        let d = spec.len();
        let Some(p) = (from..d).find(|&p| spec[p].is_none()) else {
            out.push(
                spec.iter()
                    .map(|&s| if s == Some(usize::MAX) { None } else { s })
                    .collect(),
            );
            return;
        };
        spec[p] = Some(usize::MAX);
        rec(spec, p + 1, out);
        spec[p] = None;
        for q in p + 1..d {
            if spec[q].is_none() {
                spec[p] = Some(q);
                spec[q] = Some(p);
                rec(spec, p + 1, out);
                spec[p] = None;
                spec[q] = None;
            }
        }
    }
    let mut result = Vec::new();
    rec(&mut vec![None; d], 0, &mut result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn verify_pq_triangle_examples() {
        let triangle = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(verify_pq(&triangle, &[0, 2, 4], 7, 2), Ok(()));
        let path = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let err = verify_pq(&path, &[0, 1], 7, 2).unwrap_err();
        assert!(matches!(err, PqViolation::AdjacentPair { distance: 1, .. }));
        assert!(matches!(
            verify_pq(&path, &[0], 7, 2).unwrap_err(),
            PqViolation::PartialColoring { .. }
        ));
    }

    #[test]
    fn verify_pq_is_rotation_and_reflection_invariant() {
        let g = generators::named("k4").unwrap().graph;
        let (_, coloring) = exact_index(&g, 6, None).unwrap();
        let p = coloring.p;
        for shift in 0..p {
            let rotated: Vec<usize> = coloring.colors.iter().map(|&c| (c + shift) % p).collect();
            assert_eq!(verify_pq(&g, &rotated, p, coloring.q), Ok(()));
            let reflected: Vec<usize> = rotated.iter().map(|&c| (p - c) % p).collect();
            assert_eq!(verify_pq(&g, &reflected, p, coloring.q), Ok(()));
        }
    }

    #[test]
    fn exact_index_small_cases() {
        let single = MultiGraph::new(2, vec![(0, 1)]).unwrap();
        let (f, _) = exact_index(&single, 1, None).unwrap();
        assert_eq!((f.numerator(), f.denominator()), (1, 1));

        let k4 = generators::named("k4").unwrap().graph;
        let (f, witness) = exact_index(&k4, 6, None).unwrap();
        assert_eq!((f.numerator(), f.denominator()), (3, 1));
        assert_eq!(verify_pq(&k4, &witness.colors, 3, 1), Ok(()));
    }

    #[test]
    fn exact_index_of_odd_cycles() {
        // The line graph of C_n is C_n; odd cycles have index n/((n-1)/2).
        for n in [3usize, 5, 7] {
            let g = crate::graph::MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
                .unwrap();
            let (f, _) = exact_index(&g, n, None).unwrap();
            assert_eq!((f.numerator(), f.denominator()), (n, (n - 1) / 2));
        }
    }

    #[test]
    fn search_exhausted_when_p_max_is_too_small() {
        let k4 = generators::named("k4").unwrap().graph;
        assert_eq!(
            exact_index(&k4, 2, None).unwrap_err(),
            OracleError::SearchExhausted { p_max: 2 }
        );
    }

    #[test]
    fn fraction_ordering_and_ceiling() {
        let a = Fraction::new(11, 3);
        let b = Fraction::new(7, 2);
        assert!(b < a);
        assert_eq!(a.ceil(), 4);
        assert_eq!(b.ceil(), 4);
        assert_eq!(Fraction::new(6, 2), Fraction::new(3, 1));
        assert_eq!(Fraction::new(3, 1).ceil(), 3);
        assert_eq!(format!("{}", a), "11/3");
    }

    #[test]
    fn chromatic_index_brute_basics() {
        let k4 = generators::named("k4").unwrap().graph;
        assert_eq!(chromatic_index_brute(&k4), 3);
        let petersen = generators::named("petersen").unwrap().graph;
        assert_eq!(chromatic_index_brute(&petersen), 4);
        let star = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(chromatic_index_brute(&star), 3);
    }

    #[test]
    fn involution_counts_are_the_known_ones() {
        let counts: Vec<usize> = (0..=9).map(|d| involutions(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232, 764, 2620]);
    }

    #[test]
    fn brute_compatible_on_empty_and_forbidden_maps() {
        let empty = RotationMap::from_raw_parts(
            Default::default(),
            Default::default(),
            Default::default(),
        );
        let d = brute_compatible(&empty).unwrap().unwrap();
        assert!(d.trails().is_empty());

        // Degree 5 never admits an anchor: positions i and i+5 coincide.
        for spec in involutions(5) {
            let map = RotationMap::single_vertex(&spec);
            assert_eq!(brute_compatible(&map).unwrap(), None);
        }
    }

    #[test]
    fn brute_compatible_agrees_with_lemma_on_degree_seven() {
        for spec in involutions(7) {
            let map = RotationMap::single_vertex(&spec);
            let d = brute_compatible(&map).unwrap().expect("degree 7 decomposes");
            crate::trails::check_compatibility(&map, &d).unwrap();
        }
    }

    #[test]
    fn budget_is_enforced() {
        let map = RotationMap::single_vertex(&vec![None; 17]);
        assert_eq!(
            brute_compatible(&map).unwrap_err(),
            OracleError::BudgetExceeded {
                ends: 17,
                budget: 16
            }
        );
    }

    #[test]
    fn canonical_form_distinguishes_and_identifies() {
        let p1 = generators::named("petersen").unwrap().graph;
        let p2 = generators::generalized_petersen(5, 2).unwrap();
        assert!(isomorphic(&p1, &p2).unwrap());
        let c10 = MultiGraph::new(10, (0..10).map(|i| (i, (i + 1) % 10)).collect()).unwrap();
        assert!(!isomorphic(&p1, &c10).unwrap());
        // Relabeled triangle-with-tail equals itself.
        let a = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let b = MultiGraph::new(4, vec![(3, 1), (1, 0), (0, 3), (0, 2)]).unwrap();
        assert!(isomorphic(&a, &b).unwrap());
    }
}
