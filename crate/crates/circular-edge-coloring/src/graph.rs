//! Undirected multigraphs and the structural predicates the coloring
//! pipeline gates on: degrees, girth, odd-girth, bridges, connectivity.
//!
//! Parallel edges and self-loops are permitted everywhere in this module;
//! callers that need simple graphs reject them via [`StructureReport`].

use std::collections::VecDeque;

use thiserror::Error;

/// Errors produced by graph construction and surgery.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} references vertex {vertex}, but the graph has {vertex_count} vertices")]
    InvalidEndpoint {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("no edge with id {0}")]
    NoSuchEdge(usize),
    #[error("edge {0} is not a bridge")]
    NotABridge(usize),
}

/// An undirected multigraph over dense vertex ids `0..vertex_count`.
///
/// Edges are identified by their index in the edge list. The adjacency list
/// of a vertex holds incident edge ids; a self-loop is listed twice, so
/// `degree(v) == adjacency(v).len()` counts loops twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl MultiGraph {
    /// Builds a graph from an edge list, validating endpoint ids.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::InvalidEndpoint {
                        edge: id,
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            adjacency[a].push(id);
            adjacency[b].push(id);
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (a, b) = self.edges[edge];
        a == b
    }

    /// Incident edge ids of `v`; a self-loop appears twice.
    pub fn adjacency(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// The endpoint of `edge` opposite to `v` (equal to `v` for a loop).
    pub fn other_endpoint(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.edges[edge];
        if a == v {
            b
        } else {
            a
        }
    }

    fn max_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    fn min_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }
}

/// Structural facts about a graph, recomputed rather than trusted.
///
/// `girth` is `None` for acyclic graphs and `odd_girth` is `None` when no
/// odd cycle exists (equivalently, the graph is bipartite).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub max_degree: usize,
    pub min_degree: usize,
    pub is_cubic: bool,
    pub is_subcubic: bool,
    pub girth: Option<usize>,
    pub odd_girth: Option<usize>,
    pub bridges: Vec<usize>,
    pub is_connected: bool,
    pub is_bridgeless: bool,
}

/// Computes the full structure report for `graph`.
///
/// Girth comes from a shortest-cycle search per edge, odd-girth from a
/// parity-aware BFS per vertex, and bridges from a low-link traversal.
pub fn analyze(graph: &MultiGraph) -> StructureReport {
    let bridges = find_bridges(graph);
    StructureReport {
        max_degree: graph.max_degree(),
        min_degree: graph.min_degree(),
        is_cubic: (0..graph.vertex_count()).all(|v| graph.degree(v) == 3),
        is_subcubic: graph.max_degree() <= 3,
        girth: girth(graph),
        odd_girth: odd_girth(graph),
        is_connected: is_connected(graph),
        is_bridgeless: bridges.is_empty(),
        bridges,
    }
}

/// Length of a shortest cycle, or `None` if the graph is acyclic.
///
/// For each edge `e = uv` the shortest `u`-`v` path avoiding `e` closes the
/// shortest cycle through `e`; loops close a cycle of length 1 and parallel
/// edges one of length 2, so multigraphs need no special cases.
pub fn girth(graph: &MultiGraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for e in 0..graph.edge_count() {
        let (u, v) = graph.endpoints(e);
        if u == v {
            return Some(1);
        }
        if let Some(d) = shortest_path_avoiding(graph, u, v, e) {
            let cycle = d + 1;
            if best.map_or(true, |b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    best
}

/// Cheap certificate that the girth is at least `k`, with early exit on
/// the first short cycle. Equivalent to `girth(graph) >= k` (an acyclic
/// graph passes for every `k`), but each BFS is depth-capped at `k - 2`.
pub fn girth_at_least(graph: &MultiGraph, k: usize) -> bool {
    if k <= 1 {
        return true;
    }
    let mut dist = vec![usize::MAX; graph.vertex_count()];
    let mut queue = VecDeque::new();
    for e in 0..graph.edge_count() {
        let (u, v) = graph.endpoints(e);
        if u == v {
            return false; // a loop is a 1-cycle
        }
        // A cycle of length < k through e means a u-v path of length
        // <= k - 2 avoiding e.
        dist.fill(usize::MAX);
        queue.clear();
        dist[u] = 0;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if dist[x] + 1 > k - 2 {
                continue;
            }
            for &f in graph.adjacency(x) {
                if f == e {
                    continue;
                }
                let y = graph.other_endpoint(f, x);
                if dist[y] == usize::MAX {
                    if y == v {
                        return false;
                    }
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    true
}

fn shortest_path_avoiding(
    graph: &MultiGraph,
    from: usize,
    to: usize,
    banned_edge: usize,
) -> Option<usize> {
    let mut dist = vec![usize::MAX; graph.vertex_count()];
    let mut queue = VecDeque::new();
    dist[from] = 0;
    queue.push_back(from);
    while let Some(x) = queue.pop_front() {
        if x == to {
            return Some(dist[x]);
        }
        for &e in graph.adjacency(x) {
            if e == banned_edge {
                continue;
            }
            let y = graph.other_endpoint(e, x);
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Length of a shortest odd cycle, or `None` if the graph is bipartite.
///
/// BFS over `(vertex, parity)` states: the shortest odd closed walk at a
/// vertex is an odd cycle, and the minimum over all start vertices is the
/// odd-girth. A self-loop yields odd-girth 1.
pub fn odd_girth(graph: &MultiGraph) -> Option<usize> {
    let n = graph.vertex_count();
    let mut best: Option<usize> = None;
    for start in 0..n {
        // dist[v][parity]
        let mut dist = vec![[usize::MAX; 2]; n];
        let mut queue = VecDeque::new();
        dist[start][0] = 0;
        queue.push_back((start, 0usize));
        while let Some((x, par)) = queue.pop_front() {
            let d = dist[x][par];
            if best.map_or(false, |b| d + 1 >= b) {
                continue;
            }
            for &e in graph.adjacency(x) {
                let y = graph.other_endpoint(e, x);
                let npar = 1 - par;
                if dist[y][npar] == usize::MAX {
                    dist[y][npar] = d + 1;
                    queue.push_back((y, npar));
                }
            }
        }
        let odd = dist[start][1];
        if odd != usize::MAX && best.map_or(true, |b| odd < b) {
            best = Some(odd);
        }
    }
    best
}

/// True when the graph has at most one connected component.
pub fn is_connected(graph: &MultiGraph) -> bool {
    let n = graph.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &e in graph.adjacency(x) {
            let y = graph.other_endpoint(e, x);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count == n
}

/// Bridge edge ids, sorted ascending, via an iterative low-link DFS.
///
/// Parallel edges are never bridges: the DFS forbids re-using the entry
/// edge id, not the entry vertex, so a second parallel edge provides the
/// back link. Self-loops are never bridges.
pub fn find_bridges(graph: &MultiGraph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut bridges = Vec::new();
    let mut next_order = 0;

    // Explicit stack of (vertex, entry edge, adjacency cursor).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = next_order;
        low[root] = next_order;
        next_order += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, entry, ref mut cursor)) = stack.last_mut() {
            if *cursor < graph.adjacency(v).len() {
                let e = graph.adjacency(v)[*cursor];
                *cursor += 1;
                if e == entry {
                    continue;
                }
                let w = graph.other_endpoint(e, v);
                if order[w] == usize::MAX {
                    order[w] = next_order;
                    low[w] = next_order;
                    next_order += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (parent, _, _)) = stack.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        bridges.push(entry);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// One side of a bridge split: the component's subgraph plus the bridge
/// retained as a pendant stub edge, with maps back to the source graph.
#[derive(Debug, Clone)]
pub struct BridgeSide {
    pub graph: MultiGraph,
    /// Side vertex id -> source vertex id. The stub vertex maps to the
    /// bridge endpoint on the *other* side.
    pub vertex_map: Vec<usize>,
    /// Side edge id -> source edge id; the stub edge maps to the bridge.
    pub edge_map: Vec<usize>,
    /// Side-local id of the degree-1 stub vertex.
    pub stub_vertex: usize,
    /// Side-local id of the pendant stub edge.
    pub stub_edge: usize,
}

/// Splits `graph` along `bridge` into the two components it separates.
///
/// Each side keeps the bridge as a marked pendant edge, so a coloring of a
/// side assigns the bridge a color. Vertex and edge ids are remapped with
/// the mapping recorded in each [`BridgeSide`].
pub fn split_at_bridge(
    graph: &MultiGraph,
    bridge: usize,
) -> Result<(BridgeSide, BridgeSide), GraphError> {
    if bridge >= graph.edge_count() {
        return Err(GraphError::NoSuchEdge(bridge));
    }
    let (a, b) = graph.endpoints(bridge);
    let comp_a = component_without_edge(graph, a, bridge);
    if comp_a.contains(&b) {
        return Err(GraphError::NotABridge(bridge));
    }
    let comp_b = component_without_edge(graph, b, bridge);
    let side_a = build_side(graph, &comp_a, a, b, bridge);
    let side_b = build_side(graph, &comp_b, b, a, bridge);
    Ok((side_a, side_b))
}

fn component_without_edge(graph: &MultiGraph, start: usize, banned: usize) -> Vec<usize> {
    let mut seen = vec![false; graph.vertex_count()];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        for &e in graph.adjacency(x) {
            if e == banned {
                continue;
            }
            let y = graph.other_endpoint(e, x);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    (0..graph.vertex_count()).filter(|&v| seen[v]).collect()
}

fn build_side(
    graph: &MultiGraph,
    component: &[usize],
    attach: usize,
    far_end: usize,
    bridge: usize,
) -> BridgeSide {
    let mut local = vec![usize::MAX; graph.vertex_count()];
    let mut vertex_map = Vec::with_capacity(component.len() + 1);
    for &v in component {
        local[v] = vertex_map.len();
        vertex_map.push(v);
    }
    let stub_vertex = vertex_map.len();
    vertex_map.push(far_end);

    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (id, &(u, w)) in graph.edges().iter().enumerate() {
        if id == bridge {
            continue;
        }
        if local[u] != usize::MAX && local[w] != usize::MAX {
            edges.push((local[u], local[w]));
            edge_map.push(id);
        }
    }
    let stub_edge = edges.len();
    edges.push((local[attach], stub_vertex));
    edge_map.push(bridge);

    let graph = MultiGraph::new(vertex_map.len(), edges).expect("side endpoints are remapped");
    BridgeSide {
        graph,
        vertex_map,
        edge_map,
        stub_vertex,
        stub_edge,
    }
}

/// A connected piece of a graph with maps back to the source ids.
#[derive(Debug, Clone)]
pub struct Piece {
    pub graph: MultiGraph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

/// Splits a graph into its connected components (isolated vertices form
/// edgeless pieces). Pieces are ordered by their smallest source vertex.
pub fn components(graph: &MultiGraph) -> Vec<Piece> {
    let n = graph.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let idx = pieces.len();
        let mut members = vec![start];
        comp[start] = idx;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &e in graph.adjacency(x) {
                let y = graph.other_endpoint(e, x);
                if comp[y] == usize::MAX {
                    comp[y] = idx;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        pieces.push(members);
    }
    pieces
        .into_iter()
        .map(|members| {
            let mut local = vec![usize::MAX; n];
            for (i, &v) in members.iter().enumerate() {
                local[v] = i;
            }
            let mut edges = Vec::new();
            let mut edge_map = Vec::new();
            for (id, &(u, w)) in graph.edges().iter().enumerate() {
                if local[u] != usize::MAX && local[w] != usize::MAX {
                    edges.push((local[u], local[w]));
                    edge_map.push(id);
                }
            }
            let graph = MultiGraph::new(members.len(), edges).expect("component endpoints remap");
            Piece {
                graph,
                vertex_map: members,
                edge_map,
            }
        })
        .collect()
}

/// Global edge connectivity via unit-capacity max-flow from vertex 0 to
/// every other vertex. Returns 0 for disconnected or trivial graphs.
pub fn edge_connectivity(graph: &MultiGraph) -> usize {
    let n = graph.vertex_count();
    if n < 2 {
        return 0;
    }
    if !is_connected(graph) {
        return 0;
    }
    (1..n)
        .map(|t| max_flow_unit(graph, 0, t))
        .min()
        .unwrap_or(0)
}

/// Edmonds-Karp max-flow where every edge has capacity 1 in each direction.
fn max_flow_unit(graph: &MultiGraph, s: usize, t: usize) -> usize {
    let m = graph.edge_count();
    // flow[e] in {-1, 0, 1}: +1 means used from endpoints.0 to endpoints.1.
    let mut flow = vec![0i8; m];
    let mut total = 0;
    loop {
        // BFS for an augmenting path over residual arcs.
        let mut pred: Vec<Option<(usize, i8)>> = vec![None; graph.vertex_count()];
        let mut queue = VecDeque::new();
        pred[s] = Some((usize::MAX, 0));
        queue.push_back(s);
        'bfs: while let Some(x) = queue.pop_front() {
            for &e in graph.adjacency(x) {
                let (a, _) = graph.endpoints(e);
                if graph.is_loop(e) {
                    continue;
                }
                let dir: i8 = if a == x { 1 } else { -1 };
                if flow[e] == dir {
                    continue; // saturated in this direction
                }
                let y = graph.other_endpoint(e, x);
                if pred[y].is_none() {
                    pred[y] = Some((e, dir));
                    if y == t {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if pred[t].is_none() {
            return total;
        }
        let mut v = t;
        while v != s {
            let (e, dir) = pred[v].expect("path");
            flow[e] += dir;
            let (a, b) = graph.endpoints(e);
            v = if dir == 1 { a } else { b };
        }
        total += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn cycle_graph(n: usize) -> MultiGraph {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::new(n, edges).unwrap()
    }

    fn petersen() -> MultiGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
        }
        for i in 0..5 {
            edges.push((i, i + 5));
        }
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        MultiGraph::new(10, edges).unwrap()
    }

    /// Brute-force oracle: every simple cycle by DFS, reported as its length.
    fn all_cycle_lengths(graph: &MultiGraph) -> Vec<usize> {
        let mut lengths = Vec::new();
        // Walks that start at their minimum vertex and never revisit one;
        // a cycle is recorded when the walk returns to its start.
        fn extend(
            graph: &MultiGraph,
            start: usize,
            current: usize,
            visited: &mut Vec<usize>,
            used_edges: &mut Vec<usize>,
            lengths: &mut Vec<usize>,
        ) {
            for &e in graph.adjacency(current) {
                if used_edges.contains(&e) {
                    continue;
                }
                let next = graph.other_endpoint(e, current);
                if next == start && !used_edges.is_empty() {
                    lengths.push(used_edges.len() + 1);
                    continue;
                }
                if next <= start || visited.contains(&next) {
                    continue;
                }
                visited.push(next);
                used_edges.push(e);
                extend(graph, start, next, visited, used_edges, lengths);
                visited.pop();
                used_edges.pop();
            }
        }
        for start in 0..graph.vertex_count() {
            extend(
                graph,
                start,
                start,
                &mut Vec::new(),
                &mut Vec::new(),
                &mut lengths,
            );
        }
        // Every cycle was traced twice (both directions), except loops.
        lengths
    }

    #[test]
    fn analyze_seven_cycle() {
        let report = analyze(&cycle_graph(7));
        assert_eq!(report.girth, Some(7));
        assert_eq!(report.odd_girth, Some(7));
        assert!(report.bridges.is_empty());
        assert!(report.is_connected);
        assert!(report.is_bridgeless);
        assert!(!report.is_cubic);
        assert!(report.is_subcubic);
    }

    #[test]
    fn analyze_petersen_against_cycle_enumeration() {
        let g = petersen();
        let report = analyze(&g);
        let lengths = all_cycle_lengths(&g);
        let min_len = lengths.iter().copied().min().unwrap();
        let min_odd = lengths.iter().copied().filter(|l| l % 2 == 1).min();
        assert_eq!(report.girth, Some(min_len));
        assert_eq!(report.girth, Some(5));
        assert_eq!(report.odd_girth, min_odd);
        assert_eq!(report.odd_girth, Some(5));
    }

    #[test]
    fn two_triangles_joined_by_unique_bridge() {
        // Triangles 0,1,2 and 3,4,5 joined by edge 6 = (0,3).
        let edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)];
        let g = MultiGraph::new(6, edges).unwrap();
        let report = analyze(&g);
        assert_eq!(report.bridges, vec![6]);
        assert!(!report.is_bridgeless);
        assert_eq!(report.girth, Some(3));
    }

    #[test]
    fn split_two_triangles_at_bridge() {
        let edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)];
        let g = MultiGraph::new(6, edges).unwrap();
        let (a, b) = split_at_bridge(&g, 6).unwrap();
        for side in [&a, &b] {
            assert_eq!(side.graph.vertex_count(), 4);
            assert_eq!(side.graph.edge_count(), 4);
            assert_eq!(side.graph.degree(side.stub_vertex), 1);
            assert_eq!(side.edge_map[side.stub_edge], 6);
            let report = analyze(&side.graph);
            assert_eq!(report.girth, Some(3));
        }
        assert_eq!(a.vertex_map[a.stub_vertex], 3);
        assert_eq!(b.vertex_map[b.stub_vertex], 0);
    }

    #[test]
    fn split_path_at_middle_edge() {
        let edges = vec![(0, 1), (1, 2), (2, 3)];
        let g = MultiGraph::new(4, edges).unwrap();
        let (a, b) = split_at_bridge(&g, 1).unwrap();
        for side in [a, b] {
            assert_eq!(side.graph.vertex_count(), 3);
            assert_eq!(side.graph.edge_count(), 2);
        }
    }

    #[test]
    fn split_rejects_non_bridge() {
        let g = cycle_graph(5);
        for e in 0..5 {
            assert_eq!(split_at_bridge(&g, e).unwrap_err(), GraphError::NotABridge(e));
        }
    }

    #[test]
    fn analyze_is_deterministic_and_idempotent() {
        let g = petersen();
        let first = analyze(&g);
        for _ in 0..3 {
            assert_eq!(analyze(&g), first);
        }
    }

    #[test]
    fn heawood_is_bipartite_so_odd_girth_is_none() {
        // LCF [5, -5]^7 over a 14-cycle.
        let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
        for i in (0..14).step_by(2) {
            edges.push((i, (i + 5) % 14));
        }
        let g = MultiGraph::new(14, edges).unwrap();
        // Independent check: proper 2-coloring by BFS.
        let mut color = vec![usize::MAX; 14];
        color[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &e in g.adjacency(x) {
                let y = g.other_endpoint(e, x);
                if color[y] == usize::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else {
                    assert_ne!(color[y], color[x], "Heawood must be bipartite");
                }
            }
        }
        assert_eq!(analyze(&g).odd_girth, None);
        assert_eq!(analyze(&g).girth, Some(6));
    }

    #[test]
    fn loops_and_parallels() {
        let g = MultiGraph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.degree(0), 3);
        let report = analyze(&g);
        assert_eq!(report.girth, Some(1));
        assert_eq!(report.odd_girth, Some(1));
        let g2 = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let report2 = analyze(&g2);
        assert_eq!(report2.girth, Some(2));
        assert_eq!(report2.odd_girth, None);
        assert!(report2.bridges.is_empty(), "parallel edges are not bridges");
    }

    #[test]
    fn acyclic_graph_has_no_girth() {
        let g = MultiGraph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
        let report = analyze(&g);
        assert_eq!(report.girth, None);
        assert_eq!(report.odd_girth, None);
        assert_eq!(report.bridges, vec![0, 1, 2]);
    }

    fn random_multigraph(rng: &mut ChaCha8Rng) -> MultiGraph {
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(0..=16);
        let edges = (0..m)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect();
        MultiGraph::new(n, edges).unwrap()
    }

    fn component_count(graph: &MultiGraph, skip_edge: Option<usize>) -> usize {
        let n = graph.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &e in graph.adjacency(x) {
                    if Some(e) == skip_edge {
                        continue;
                    }
                    let y = graph.other_endpoint(e, x);
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    #[test]
    fn girth_at_least_agrees_with_girth() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x61d7);
        for _ in 0..500 {
            let g = random_multigraph(&mut rng);
            let exact = girth(&g);
            for k in 1..=8 {
                assert_eq!(
                    girth_at_least(&g, k),
                    exact.map_or(true, |girth| girth >= k),
                    "k={k} girth={exact:?}"
                );
            }
        }
    }

    #[test]
    fn bridges_match_deletion_oracle_on_random_multigraphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b9);
        for _ in 0..1000 {
            let g = random_multigraph(&mut rng);
            let base = component_count(&g, None);
            let expected: Vec<usize> = (0..g.edge_count())
                .filter(|&e| component_count(&g, Some(e)) > base)
                .collect();
            assert_eq!(find_bridges(&g), expected);
        }
    }

    #[test]
    fn edge_connectivity_of_cycles_and_trees() {
        assert_eq!(edge_connectivity(&cycle_graph(5)), 2);
        let path = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_connectivity(&path), 1);
        let k4 = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&k4), 3);
    }

    #[test]
    fn components_split_and_remap() {
        let g = MultiGraph::new(5, vec![(0, 1), (3, 4), (3, 4)]).unwrap();
        let pieces = components(&g);
        assert_eq!(pieces.len(), 3);
        assert_eq!(pieces[0].vertex_map, vec![0, 1]);
        assert_eq!(pieces[1].vertex_map, vec![2]);
        assert_eq!(pieces[2].vertex_map, vec![3, 4]);
        assert_eq!(pieces[2].graph.edge_count(), 2);
        assert_eq!(pieces[2].edge_map, vec![1, 2]);
    }
}
