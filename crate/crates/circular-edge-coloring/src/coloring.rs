//! The constructive (7,2)-edge-coloring of cubic graphs whose 2-factor
//! avoids 3- and 5-cycles, and its extension to subcubic graphs of
//! odd-girth at least 7.
//!
//! Pipeline for a cubic graph: contract the 2-factor to an abstract map,
//! build a compatible trail decomposition, 2-color the matching edges by
//! alternating 0 and 1 along each trail, then color every cycle of the
//! 2-factor. Even cycles alternate 3 and 5. For an odd cycle the anchor
//! index of its map vertex yields an index `k` with `c_k != c_{k+5}`,
//! `c_{k+1} != c_{k+3}` and `c_{k+2} != c_{k+4}`; from it an index `k'`
//! with `c_{k'} = c_{k'+1} != c_{k'+2} = c_{k'+3}` is derived, and the
//! cycle is colored 2, 4, 6 on the three edges after `k'` followed by an
//! alternating 3, 5 run. When `c_{k'} = 1` the pattern is passed through
//! the distance-preserving involution `t -> 1 - t (mod 7)`, which swaps
//! the roles of the two matching colors.
//!
//! Subcubic graphs are reduced to the cubic case: isolated vertices are
//! ignored, pendant edges are stripped and later colored greedily, bridges
//! are split and the sides recombined after rotating one side's colors,
//! and each remaining bridgeless piece with degree-2 vertices is embedded
//! into a doubled graph completed by gadget copies (a 3-edge-connected
//! cubic graph of odd-girth 7 minus one edge).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{self, MultiGraph};
use crate::matching::{self, TwoFactor};
use crate::oracle;
use crate::rotation::{contract_two_factor, MapError, RotationMap};
use crate::trails::{decompose, Decomposition, TrailError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph is not subcubic: vertex {vertex} has degree {degree}")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("two-factor has a cycle of length {length}; lengths 3 and 5 are inadmissible")]
    InadmissibleTwoFactor { length: usize },
    #[error("odd-girth {odd_girth} is below 7")]
    OddGirthTooSmall { odd_girth: usize },
    #[error("anchor invalid: {0}")]
    AnchorInvalid(String),
    #[error("cycle pattern violated: {0}")]
    PatternViolated(String),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Trail(#[from] TrailError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// A total assignment of colors `0..p` to edge ids, valid when adjacent
/// edges keep circular distance at least `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularEdgeColoring {
    pub p: usize,
    pub q: usize,
    pub colors: Vec<usize>,
}

impl CircularEdgeColoring {
    /// Checks validity against a graph.
    pub fn verify(&self, graph: &MultiGraph) -> Result<(), oracle::PqViolation> {
        oracle::verify_pq(graph, &self.colors, self.p, self.q)
    }
}

/// Binary colors of the matching edges, produced by alternating 0 and 1
/// along every trail of a compatible decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingBinaryColors {
    by_map_edge: BTreeMap<usize, u8>,
    by_source_edge: BTreeMap<usize, u8>,
}

impl MatchingBinaryColors {
    pub fn map_edge(&self, e: usize) -> u8 {
        self.by_map_edge[&e]
    }

    /// Color of a source-graph matching edge (via the map's origins).
    pub fn source_edge(&self, e: usize) -> Option<u8> {
        self.by_source_edge.get(&e).copied()
    }

    /// The `c` values of one contracted cycle, indexed by cycle position.
    pub fn cycle_values(&self, map: &RotationMap, map_vertex: usize) -> Vec<u8> {
        (0..map.degree(map_vertex))
            .map(|j| self.map_edge(map.edge_at(map_vertex, j)))
            .collect()
    }
}

/// Colors each trail's edges 0 and 1 alternately, first edge 0.
pub fn alternate_trails(map: &RotationMap, d: &Decomposition) -> MatchingBinaryColors {
    let mut by_map_edge = BTreeMap::new();
    let mut by_source_edge = BTreeMap::new();
    for trail in d.trails() {
        for (k, step) in trail.steps().iter().enumerate() {
            let color = (k % 2) as u8;
            by_map_edge.insert(step.edge, color);
            if let Some(src) = map.origin(step.edge) {
                by_source_edge.insert(src, color);
            }
        }
    }
    MatchingBinaryColors {
        by_map_edge,
        by_source_edge,
    }
}

/// Returns the anchor as the index `k` of the coloring argument after
/// re-verifying the three inequalities `c_k != c_{k+5}`,
/// `c_{k+1} != c_{k+3}`, `c_{k+2} != c_{k+4}` (indices modulo the length).
/// A failure signals an upstream bug.
pub fn find_k(c: &[u8], anchor: usize) -> Result<usize, ColoringError> {
    let len = c.len();
    if len % 2 == 0 {
        return Err(ColoringError::AnchorInvalid(format!(
            "cycle length {len} is even"
        )));
    }
    if anchor >= len {
        return Err(ColoringError::AnchorInvalid(format!(
            "anchor {anchor} out of range for length {len}"
        )));
    }
    for (a, b) in [(0, 5), (1, 3), (2, 4)] {
        if c[(anchor + a) % len] == c[(anchor + b) % len] {
            return Err(ColoringError::AnchorInvalid(format!(
                "c[{}] == c[{}] despite the anchor",
                (anchor + a) % len,
                (anchor + b) % len
            )));
        }
    }
    Ok(anchor)
}

/// Derives `k'` with `c_{k'} = c_{k'+1} != c_{k'+2} = c_{k'+3}` from an
/// index `k` satisfying the three anchor inequalities: `k+1` when
/// `c_{k+1} = c_{k+2}`, else `k` when `c_k = c_{k+1}`, else `k+2`.
pub fn find_k_prime(c: &[u8], k: usize) -> usize {
    let len = c.len();
    let at = |i: usize| c[(k + i) % len];
    let k_prime = if at(1) == at(2) {
        k + 1
    } else if at(0) == at(1) {
        k
    } else {
        k + 2
    };
    k_prime % len
}

/// How to color one cycle of the 2-factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclePattern {
    /// Alternate 3 and 5 from the cycle's stored starting vertex.
    Even,
    /// The odd-cycle pattern rotated to `k_prime`.
    Odd { k_prime: usize },
}

/// Colors the edges of one cycle; entry `j` colors the edge from cycle
/// position `j` to `j + 1`.
///
/// Odd cycles place 2, 4, 6 on the three edges following `k'` and an
/// alternating 3, 5 run on the remaining `len - 3` edges; when
/// `c_{k'} = 1` every color is mapped through `t -> 1 - t (mod 7)`.
pub fn color_cycle(c: &[u8], pattern: CyclePattern) -> Result<Vec<usize>, ColoringError> {
    let len = c.len();
    match pattern {
        CyclePattern::Even => {
            if len % 2 != 0 {
                return Err(ColoringError::PatternViolated(format!(
                    "even pattern on a cycle of odd length {len}"
                )));
            }
            Ok((0..len).map(|j| if j % 2 == 0 { 3 } else { 5 }).collect())
        }
        CyclePattern::Odd { k_prime } => {
            if len % 2 == 0 || len < 7 {
                return Err(ColoringError::PatternViolated(format!(
                    "odd pattern on a cycle of length {len}"
                )));
            }
            let at = |i: usize| c[(k_prime + i) % len];
            if !(at(0) == at(1) && at(1) != at(2) && at(2) == at(3)) {
                return Err(ColoringError::PatternViolated(format!(
                    "c values around k' = {k_prime} do not pair up"
                )));
            }
            let mut colors = vec![0usize; len];
            for r in 0..len {
                let base = match r {
                    0 => 2,
                    1 => 4,
                    2 => 6,
                    _ => {
                        if (r - 3) % 2 == 0 {
                            3
                        } else {
                            5
                        }
                    }
                };
                // The involution swaps the binary colors 0 and 1, so it
                // reduces the c_{k'} = 1 case to the c_{k'} = 0 one.
                let color = if at(0) == 1 { (8 - base) % 7 } else { base };
                colors[(k_prime + r) % len] = color;
            }
            Ok(colors)
        }
    }
}

fn ensure_cubic(graph: &MultiGraph) -> Result<(), ColoringError> {
    for v in 0..graph.vertex_count() {
        if graph.degree(v) != 3 {
            return Err(ColoringError::NotCubic {
                vertex: v,
                degree: graph.degree(v),
            });
        }
    }
    Ok(())
}

/// Colors a cubic graph with a given admissible 2-factor: matching edges
/// get their binary trail color, cycles get the even or odd pattern. The
/// result is checked against the (7,2) verifier before it is returned.
pub fn color_cubic(
    graph: &MultiGraph,
    tf: &TwoFactor,
) -> Result<CircularEdgeColoring, ColoringError> {
    ensure_cubic(graph)?;
    for cycle in tf.cycles() {
        if matches!(cycle.len(), 3 | 5) {
            return Err(ColoringError::InadmissibleTwoFactor { length: cycle.len() });
        }
    }
    let (map, _record) = contract_two_factor(graph, tf)?;
    let decomposition = decompose(&map)?;
    let binary = alternate_trails(&map, &decomposition);

    let mut colors = vec![usize::MAX; graph.edge_count()];
    for &e in tf.matching() {
        let c = binary
            .source_edge(e)
            .ok_or_else(|| ColoringError::Internal(format!("matching edge {e} uncolored")))?;
        colors[e] = c as usize;
    }
    for (ci, cycle) in tf.cycles().iter().enumerate() {
        let c = binary.cycle_values(&map, ci);
        let pattern = if cycle.len() % 2 == 0 {
            CyclePattern::Even
        } else {
            let anchor = decomposition.anchor(ci).ok_or_else(|| {
                ColoringError::AnchorInvalid(format!("odd cycle {ci} has no anchor"))
            })?;
            let k = find_k(&c, anchor)?;
            CyclePattern::Odd {
                k_prime: find_k_prime(&c, k),
            }
        };
        let cycle_colors = color_cycle(&c, pattern)?;
        for (j, &e) in cycle.edges.iter().enumerate() {
            colors[e] = cycle_colors[j];
        }
    }

    let coloring = CircularEdgeColoring { p: 7, q: 2, colors };
    coloring
        .verify(graph)
        .map_err(|v| ColoringError::Internal(format!("self-check failed: {v}")))?;
    Ok(coloring)
}

/// The gadget of the subcubic reduction: the McGee graph (cubic, girth 7,
/// 3-edge-connected) minus one fixed edge, with the two resulting
/// degree-2 vertices marked as attachment points.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: MultiGraph,
    pub attachments: (usize, usize),
}

/// Builds and certifies the gadget. The certification recomputes the
/// McGee properties rather than trusting them.
pub fn gadget() -> Gadget {
    let mcgee = crate::generators::named("mcgee").expect("catalog graph").graph;
    let report = graph::analyze(&mcgee);
    assert!(report.is_cubic, "gadget base must be cubic");
    assert_eq!(report.girth, Some(7), "gadget base must have girth 7");
    assert_eq!(
        graph::edge_connectivity(&mcgee),
        3,
        "gadget base must be 3-edge-connected"
    );
    let (a, b) = mcgee.endpoints(0);
    let edges: Vec<(usize, usize)> = mcgee.edges()[1..].to_vec();
    let graph = MultiGraph::new(mcgee.vertex_count(), edges).expect("same vertex ids");
    debug_assert_eq!(
        (0..graph.vertex_count()).filter(|&v| graph.degree(v) == 2).count(),
        2
    );
    Gadget {
        graph,
        attachments: (a, b),
    }
}

/// Colors a subcubic graph of odd-girth at least 7 (or with no odd cycle
/// at all). Isolated vertices are ignored; every component runs through
/// the pendant/bridge/doubling reduction.
pub fn color_subcubic(graph: &MultiGraph) -> Result<CircularEdgeColoring, ColoringError> {
    for v in 0..graph.vertex_count() {
        if graph.degree(v) > 3 {
            return Err(ColoringError::NotSubcubic {
                vertex: v,
                degree: graph.degree(v),
            });
        }
    }
    if let Some(odd_girth) = graph::odd_girth(graph) {
        if odd_girth < 7 {
            return Err(ColoringError::OddGirthTooSmall { odd_girth });
        }
    }
    let mut colors = vec![usize::MAX; graph.edge_count()];
    for piece in graph::components(graph) {
        if piece.graph.edge_count() == 0 {
            continue;
        }
        let piece_colors = color_connected(&piece.graph)?;
        for (local, &global) in piece.edge_map.iter().enumerate() {
            colors[global] = piece_colors[local];
        }
    }
    let coloring = CircularEdgeColoring { p: 7, q: 2, colors };
    coloring
        .verify(graph)
        .map_err(|v| ColoringError::Internal(format!("self-check failed: {v}")))?;
    Ok(coloring)
}

/// Pendant edges in strip order (smallest edge id first at every round)
/// plus the surviving core edge set.
fn strip_pendants(g: &MultiGraph) -> (Vec<usize>, Vec<bool>) {
    let mut alive = vec![true; g.edge_count()];
    let mut degree: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut order = Vec::new();
    loop {
        let next = (0..g.edge_count())
            .filter(|&e| alive[e] && !g.is_loop(e))
            .find(|&e| {
                let (a, b) = g.endpoints(e);
                degree[a] == 1 || degree[b] == 1
            });
        let Some(e) = next else { break };
        alive[e] = false;
        let (a, b) = g.endpoints(e);
        degree[a] -= 1;
        degree[b] -= 1;
        order.push(e);
    }
    (order, alive)
}

/// Greedily colors a stripped pendant edge: at its strip time it had at
/// most two live neighbors, which forbid at most six of the seven classes.
fn color_pendant(g: &MultiGraph, colors: &mut [usize], e: usize) -> Result<(), ColoringError> {
    let (a, b) = g.endpoints(e);
    let mut forbidden = [false; 7];
    for v in [a, b] {
        for &other in g.adjacency(v) {
            if other == e || colors[other] == usize::MAX {
                continue;
            }
            let c = colors[other];
            forbidden[c] = true;
            forbidden[(c + 1) % 7] = true;
            forbidden[(c + 6) % 7] = true;
        }
    }
    let color = (0..7).find(|&c| !forbidden[c]).ok_or_else(|| {
        ColoringError::Internal(format!("no free class for pendant edge {e}"))
    })?;
    colors[e] = color;
    Ok(())
}

/// Colors one connected subcubic piece of odd-girth at least 7.
fn color_connected(g: &MultiGraph) -> Result<Vec<usize>, ColoringError> {
    if g.edge_count() == 0 {
        return Ok(Vec::new());
    }
    let (strip_order, core_alive) = strip_pendants(g);
    let mut colors = vec![usize::MAX; g.edge_count()];

    if core_alive.iter().any(|&a| a) {
        if strip_order.is_empty() {
            color_two_connected_core(g, &mut colors)?;
        } else {
            // Color the core subgraph, then lift.
            let core_edges: Vec<usize> =
                (0..g.edge_count()).filter(|&e| core_alive[e]).collect();
            let piece = subgraph_of_edges(g, &core_edges);
            let core_colors = color_connected(&piece.graph)?;
            for (local, &global) in piece.edge_map.iter().enumerate() {
                colors[global] = core_colors[local];
            }
        }
    }
    // Reverse strip order: each pendant sees at most two colored neighbors.
    for &e in strip_order.iter().rev() {
        color_pendant(g, &mut colors, e)?;
    }
    Ok(colors)
}

/// Core case: connected, minimum degree 2. Splits at bridges first, then
/// dispatches to the cubic pipeline or the doubled-gadget construction.
fn color_two_connected_core(g: &MultiGraph, colors: &mut [usize]) -> Result<(), ColoringError> {
    let bridges = graph::find_bridges(g);
    if let Some(&bridge) = bridges.first() {
        let (side_a, side_b) =
            graph::split_at_bridge(g, bridge).map_err(|e| ColoringError::Internal(e.to_string()))?;
        let colors_a = color_connected(&side_a.graph)?;
        let colors_b = color_connected(&side_b.graph)?;
        // Rotate side B so both sides agree on the bridge color.
        let ca = colors_a[side_a.stub_edge];
        let cb = colors_b[side_b.stub_edge];
        let shift = (ca + 7 - cb) % 7;
        for (local, &global) in side_a.edge_map.iter().enumerate() {
            colors[global] = colors_a[local];
        }
        for (local, &global) in side_b.edge_map.iter().enumerate() {
            colors[global] = (colors_b[local] + shift) % 7;
        }
        return Ok(());
    }
    if (0..g.vertex_count()).all(|v| g.degree(v) == 3) {
        let tf = matching::admissible_two_factor(g)
            .map_err(|e| ColoringError::Internal(e.to_string()))?
            .ok_or_else(|| {
                ColoringError::Internal(
                    "no admissible 2-factor in a cubic piece of odd-girth >= 7".into(),
                )
            })?;
        let coloring = color_cubic(g, &tf)?;
        colors.copy_from_slice(&coloring.colors);
        return Ok(());
    }
    double_and_color(g, colors)
}

/// Completes a bridgeless piece with degree-2 vertices to a cubic graph:
/// two copies of the piece, and for every degree-2 vertex one gadget copy
/// joined to the vertex's two copies. The coloring of the doubled graph
/// restricted to the first copy colors the piece.
fn double_and_color(g: &MultiGraph, colors: &mut [usize]) -> Result<(), ColoringError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let degree_two: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    debug_assert!(!degree_two.is_empty());
    let gadget = gadget();
    let gadget_n = gadget.graph.vertex_count();

    let mut edges: Vec<(usize, usize)> = Vec::new();
    edges.extend(g.edges().iter().copied());
    edges.extend(g.edges().iter().map(|&(a, b)| (a + n, b + n)));
    for (idx, &v) in degree_two.iter().enumerate() {
        let base = 2 * n + idx * gadget_n;
        edges.extend(
            gadget
                .graph
                .edges()
                .iter()
                .map(|&(a, b)| (a + base, b + base)),
        );
        edges.push((v, base + gadget.attachments.0));
        edges.push((v + n, base + gadget.attachments.1));
    }
    let doubled = MultiGraph::new(2 * n + degree_two.len() * gadget_n, edges)
        .map_err(|e| ColoringError::Internal(e.to_string()))?;

    let report = graph::analyze(&doubled);
    if !report.is_cubic {
        return Err(ColoringError::Internal("doubled graph is not cubic".into()));
    }
    if let Some(og) = report.odd_girth {
        if og < 7 {
            return Err(ColoringError::Internal(format!(
                "doubled graph has odd-girth {og}"
            )));
        }
    }
    let tf = matching::admissible_two_factor(&doubled)
        .map_err(|e| ColoringError::Internal(e.to_string()))?
        .ok_or_else(|| {
            ColoringError::Internal("doubled graph has no admissible 2-factor".into())
        })?;
    let coloring = color_cubic(&doubled, &tf)?;
    colors.copy_from_slice(&coloring.colors[..m]);
    Ok(())
}

fn subgraph_of_edges(g: &MultiGraph, edge_ids: &[usize]) -> graph::Piece {
    let mut local = vec![usize::MAX; g.vertex_count()];
    let mut vertex_map = Vec::new();
    let mut edges = Vec::new();
    for &e in edge_ids {
        let (a, b) = g.endpoints(e);
        for v in [a, b] {
            if local[v] == usize::MAX {
                local[v] = vertex_map.len();
                vertex_map.push(v);
            }
        }
        edges.push((local[a], local[b]));
    }
    let graph = MultiGraph::new(vertex_map.len(), edges).expect("remapped endpoints");
    graph::Piece {
        graph,
        vertex_map,
        edge_map: edge_ids.to_vec(),
    }
}
