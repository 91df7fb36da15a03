//! Abstract maps: multigraphs with loops and half-edges plus a fixed
//! cyclic ordering of the edge-ends around each vertex.
//!
//! An edge has two ends. Both ends of a loop sit on one vertex, the ends
//! of a link on two distinct vertices, and a half-edge has exactly one end
//! incident with a vertex (the other end is free). The degree of a vertex
//! is the number of incident ends, so loops count twice. Positions are
//! 0-based and all position arithmetic is modulo the degree.
//!
//! Deleting a vertex removes it together with its loops and half-edges;
//! links with exactly one end there become half-edges at their other end,
//! keeping their original position index. Contracting the 2-factor of a
//! cubic graph yields a map with one vertex per cycle whose rotation is
//! the cycle order of the matching ends.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::MultiGraph;
use crate::matching::TwoFactor;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("no vertex {0} in the map")]
    NoSuchVertex(usize),
    #[error("invalid two-factor: {0}")]
    InvalidTwoFactor(String),
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("builder: position {position} of vertex {vertex} is {problem}")]
    BadPosition {
        vertex: usize,
        position: usize,
        problem: &'static str,
    },
    #[error("builder: no vertex {0}")]
    BuilderNoSuchVertex(usize),
}

/// One end of a map edge: either incident with a vertex at a rotation
/// position, or the free end of a half-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum End {
    At { vertex: usize, position: usize },
    Free,
}

impl End {
    pub fn vertex(&self) -> Option<usize> {
        match self {
            End::At { vertex, .. } => Some(*vertex),
            End::Free => None,
        }
    }

    pub fn position(&self) -> Option<usize> {
        match self {
            End::At { position, .. } => Some(*position),
            End::Free => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapEdge {
    /// Both ends on `vertex`, at the two given positions.
    Loop { vertex: usize, positions: (usize, usize) },
    /// Ends on two distinct vertices.
    Link { ends: [(usize, usize); 2] },
    /// One end at `(vertex, position)`, the other end free.
    HalfEdge { vertex: usize, position: usize },
}

impl MapEdge {
    pub fn ends(&self) -> (End, End) {
        match *self {
            MapEdge::Loop { vertex, positions } => (
                End::At {
                    vertex,
                    position: positions.0,
                },
                End::At {
                    vertex,
                    position: positions.1,
                },
            ),
            MapEdge::Link { ends } => (
                End::At {
                    vertex: ends[0].0,
                    position: ends[0].1,
                },
                End::At {
                    vertex: ends[1].0,
                    position: ends[1].1,
                },
            ),
            MapEdge::HalfEdge { vertex, position } => (End::At { vertex, position }, End::Free),
        }
    }

    pub fn is_loop(&self) -> bool {
        matches!(self, MapEdge::Loop { .. })
    }

    pub fn is_half_edge(&self) -> bool {
        matches!(self, MapEdge::HalfEdge { .. })
    }

    fn attached_ends(&self) -> Vec<(usize, usize)> {
        match *self {
            MapEdge::Loop { vertex, positions } => {
                vec![(vertex, positions.0), (vertex, positions.1)]
            }
            MapEdge::Link { ends } => ends.to_vec(),
            MapEdge::HalfEdge { vertex, position } => vec![(vertex, position)],
        }
    }
}

/// A violation reported by [`RotationMap::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapViolation(pub String);

impl std::fmt::Display for MapViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// An abstract map. Immutable after construction; deletion returns a new
/// map sharing no mutable state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationMap {
    /// vertex -> position -> edge id (a loop appears twice).
    rotations: BTreeMap<usize, Vec<usize>>,
    edges: BTreeMap<usize, MapEdge>,
    /// map edge -> edge id in a source graph, when known.
    origins: BTreeMap<usize, usize>,
}

impl RotationMap {
    /// Assembles a map from raw parts without validation; use
    /// [`RotationMap::validate`] to check consistency.
    pub fn from_raw_parts(
        rotations: BTreeMap<usize, Vec<usize>>,
        edges: BTreeMap<usize, MapEdge>,
        origins: BTreeMap<usize, usize>,
    ) -> Self {
        Self {
            rotations,
            edges,
            origins,
        }
    }

    /// A single-vertex map (vertex id 0) from a position pairing:
    /// `pairing[p] = Some(q)` makes positions `p` and `q` a loop and
    /// `pairing[p] = None` a half-edge. The pairing must be an involution
    /// without fixed pairs `p == q`.
    pub fn single_vertex(pairing: &[Option<usize>]) -> Self {
        let d = pairing.len();
        let mut builder = MapBuilder::new();
        let v = builder.add_vertex(d);
        for p in 0..d {
            match pairing[p] {
                Some(q) => {
                    assert!(q < d && q != p && pairing[q] == Some(p), "not an involution");
                    if p < q {
                        builder.add_loop(v, p, q).expect("involution positions");
                    }
                }
                None => {
                    builder.add_half_edge(v, p).expect("free position");
                }
            }
        }
        builder.finish().expect("pairing covers all positions")
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.rotations.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.rotations.contains_key(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations.get(&v).map_or(0, Vec::len)
    }

    /// The rotation of `v`: position -> edge id.
    pub fn rotation(&self, v: usize) -> &[usize] {
        self.rotations
            .get(&v)
            .map(Vec::as_slice)
            .unwrap_or_default()
    }

    /// Edge at `(v, position)`, position taken modulo the degree.
    pub fn edge_at(&self, v: usize, position: usize) -> usize {
        let rot = &self.rotations[&v];
        rot[position % rot.len()]
    }

    pub fn edge(&self, e: usize) -> &MapEdge {
        &self.edges[&e]
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.contains_key(&e)
    }

    /// Source-graph edge recorded for a map edge, if any.
    pub fn origin(&self, e: usize) -> Option<usize> {
        self.origins.get(&e).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }

    /// Checks the structural invariants, returning all violations.
    pub fn validate(&self) -> Vec<MapViolation> {
        let mut violations = Vec::new();
        let mut claimed: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (&e, kind) in &self.edges {
            match kind {
                MapEdge::Loop { vertex, positions } => {
                    if positions.0 == positions.1 {
                        violations.push(MapViolation(format!(
                            "loop {e} has a single end (position {} twice)",
                            positions.0
                        )));
                    }
                    if !self.rotations.contains_key(vertex) {
                        violations.push(MapViolation(format!("loop {e} at missing vertex {vertex}")));
                    }
                }
                MapEdge::Link { ends } => {
                    if ends[0].0 == ends[1].0 {
                        violations.push(MapViolation(format!(
                            "link {e} has both ends on vertex {}",
                            ends[0].0
                        )));
                    }
                }
                MapEdge::HalfEdge { .. } => {}
            }
            for (v, p) in kind.attached_ends() {
                let Some(rot) = self.rotations.get(&v) else {
                    violations.push(MapViolation(format!("edge {e} references missing vertex {v}")));
                    continue;
                };
                if p >= rot.len() {
                    violations.push(MapViolation(format!(
                        "edge {e} claims position {p} of vertex {v}, degree is {}",
                        rot.len()
                    )));
                    continue;
                }
                if rot[p] != e {
                    violations.push(MapViolation(format!(
                        "edge {e} claims position {p} of vertex {v}, rotation holds edge {}",
                        rot[p]
                    )));
                }
                if let Some(prev) = claimed.insert((v, p), e) {
                    violations.push(MapViolation(format!(
                        "position {p} of vertex {v} claimed by edges {prev} and {e}"
                    )));
                }
            }
        }
        for (&v, rot) in &self.rotations {
            for (p, &e) in rot.iter().enumerate() {
                if !self.edges.contains_key(&e) {
                    violations.push(MapViolation(format!(
                        "position {p} of vertex {v} holds missing edge {e}"
                    )));
                } else if claimed.get(&(v, p)) != Some(&e) {
                    violations.push(MapViolation(format!(
                        "position {p} of vertex {v} holds edge {e}, which has no end there"
                    )));
                }
            }
        }
        violations
    }

    /// Removes `v`, its loops, and its half-edges; links with one end at
    /// `v` become half-edges at their other end, keeping their position.
    pub fn delete_vertex(&self, v: usize) -> Result<RotationMap, MapError> {
        if !self.rotations.contains_key(&v) {
            return Err(MapError::NoSuchVertex(v));
        }
        let mut rotations = self.rotations.clone();
        rotations.remove(&v);
        let mut edges = BTreeMap::new();
        let mut origins = BTreeMap::new();
        for (&e, kind) in &self.edges {
            let new_kind = match *kind {
                MapEdge::Loop { vertex, .. } if vertex == v => None,
                MapEdge::HalfEdge { vertex, .. } if vertex == v => None,
                MapEdge::Link { ends } if ends[0].0 == v || ends[1].0 == v => {
                    let (ov, op) = if ends[0].0 == v { ends[1] } else { ends[0] };
                    Some(MapEdge::HalfEdge {
                        vertex: ov,
                        position: op,
                    })
                }
                other => Some(other),
            };
            if let Some(kind) = new_kind {
                edges.insert(e, kind);
                if let Some(&src) = self.origins.get(&e) {
                    origins.insert(e, src);
                }
            }
        }
        Ok(RotationMap {
            rotations,
            edges,
            origins,
        })
    }
}

/// Incremental construction of a [`RotationMap`] with explicit positions.
#[derive(Debug, Default)]
pub struct MapBuilder {
    rotations: BTreeMap<usize, Vec<Option<usize>>>,
    edges: BTreeMap<usize, MapEdge>,
    origins: BTreeMap<usize, usize>,
    next_vertex: usize,
    next_edge: usize,
}

impl MapBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex with `degree` empty rotation slots; ids are dense.
    pub fn add_vertex(&mut self, degree: usize) -> usize {
        let id = self.next_vertex;
        self.next_vertex += 1;
        self.rotations.insert(id, vec![None; degree]);
        id
    }

    fn claim(&mut self, v: usize, p: usize, e: usize) -> Result<(), MapError> {
        let rot = self
            .rotations
            .get_mut(&v)
            .ok_or(MapError::BuilderNoSuchVertex(v))?;
        if p >= rot.len() {
            return Err(MapError::BadPosition {
                vertex: v,
                position: p,
                problem: "out of range",
            });
        }
        if rot[p].is_some() {
            return Err(MapError::BadPosition {
                vertex: v,
                position: p,
                problem: "already occupied",
            });
        }
        rot[p] = Some(e);
        Ok(())
    }

    pub fn add_loop(&mut self, v: usize, p: usize, q: usize) -> Result<usize, MapError> {
        if p == q {
            return Err(MapError::BadPosition {
                vertex: v,
                position: p,
                problem: "loop needs two distinct positions",
            });
        }
        let e = self.next_edge;
        self.claim(v, p, e)?;
        self.claim(v, q, e)?;
        self.next_edge += 1;
        self.edges.insert(
            e,
            MapEdge::Loop {
                vertex: v,
                positions: (p.min(q), p.max(q)),
            },
        );
        Ok(e)
    }

    pub fn add_link(
        &mut self,
        v1: usize,
        p1: usize,
        v2: usize,
        p2: usize,
    ) -> Result<usize, MapError> {
        if v1 == v2 {
            return Err(MapError::BadPosition {
                vertex: v1,
                position: p1,
                problem: "link ends must be on distinct vertices",
            });
        }
        let e = self.next_edge;
        self.claim(v1, p1, e)?;
        self.claim(v2, p2, e)?;
        self.next_edge += 1;
        self.edges.insert(
            e,
            MapEdge::Link {
                ends: [(v1, p1), (v2, p2)],
            },
        );
        Ok(e)
    }

    pub fn add_half_edge(&mut self, v: usize, p: usize) -> Result<usize, MapError> {
        let e = self.next_edge;
        self.claim(v, p, e)?;
        self.next_edge += 1;
        self.edges.insert(e, MapEdge::HalfEdge { vertex: v, position: p });
        Ok(e)
    }

    pub fn set_origin(&mut self, edge: usize, source_edge: usize) {
        self.origins.insert(edge, source_edge);
    }

    /// Finishes the map, requiring every rotation slot to be filled.
    pub fn finish(self) -> Result<RotationMap, MapError> {
        let mut rotations = BTreeMap::new();
        for (v, slots) in self.rotations {
            let mut filled = Vec::with_capacity(slots.len());
            for (p, slot) in slots.into_iter().enumerate() {
                match slot {
                    Some(e) => filled.push(e),
                    None => {
                        return Err(MapError::BadPosition {
                            vertex: v,
                            position: p,
                            problem: "left unfilled",
                        })
                    }
                }
            }
            rotations.insert(v, filled);
        }
        let map = RotationMap {
            rotations,
            edges: self.edges,
            origins: self.origins,
        };
        debug_assert!(map.validate().is_empty());
        Ok(map)
    }
}

/// Positions of the contracted map resolved back to the source graph:
/// for map vertex `c` (a 2-factor cycle) and position `j`, the cycle
/// vertex sitting there and the matching edge whose end occupies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionRecord {
    cycle_vertices: Vec<Vec<usize>>,
    matching_edges: Vec<Vec<usize>>,
}

impl ContractionRecord {
    pub fn cycle_vertex(&self, map_vertex: usize, position: usize) -> usize {
        self.cycle_vertices[map_vertex][position]
    }

    pub fn matching_edge(&self, map_vertex: usize, position: usize) -> usize {
        self.matching_edges[map_vertex][position]
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_vertices.len()
    }
}

fn check_two_factor(graph: &MultiGraph, tf: &TwoFactor) -> Result<(), MapError> {
    crate::matching::validate_perfect_matching(graph, tf.matching())
        .map_err(|e| MapError::InvalidTwoFactor(e.to_string()))?;
    let mut seen = vec![false; graph.vertex_count()];
    for (ci, cycle) in tf.cycles().iter().enumerate() {
        if cycle.vertices.len() != cycle.edges.len() {
            return Err(MapError::InvalidTwoFactor(format!(
                "cycle {ci} has {} vertices but {} edges",
                cycle.vertices.len(),
                cycle.edges.len()
            )));
        }
        let len = cycle.len();
        for j in 0..len {
            let v = cycle.vertices[j];
            let w = cycle.vertices[(j + 1) % len];
            let e = cycle.edges[j];
            let (a, b) = graph.endpoints(e);
            if (a, b) != (v, w) && (b, a) != (v, w) {
                return Err(MapError::InvalidTwoFactor(format!(
                    "cycle {ci} edge {e} does not join {v} and {w}"
                )));
            }
            if tf.matching().contains(&e) {
                return Err(MapError::InvalidTwoFactor(format!(
                    "cycle {ci} uses matching edge {e}"
                )));
            }
            if seen[v] {
                return Err(MapError::InvalidTwoFactor(format!(
                    "vertex {v} on more than one cycle"
                )));
            }
            seen[v] = true;
            if tf.cycle_of_vertex(v) != (ci, j) {
                return Err(MapError::InvalidTwoFactor(format!(
                    "cycle_of_vertex inconsistent at {v}"
                )));
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(MapError::InvalidTwoFactor(format!(
            "vertex {v} on no cycle"
        )));
    }
    Ok(())
}

/// Contracts every cycle of the 2-factor to a single map vertex.
///
/// Map vertex `c` has degree equal to the cycle length; position `j`
/// carries the matching end at the cycle's `j`-th vertex. Matching edges
/// with both ends on one cycle become loops (chords), cross-cycle edges
/// become links. The map has no half-edges.
pub fn contract_two_factor(
    graph: &MultiGraph,
    tf: &TwoFactor,
) -> Result<(RotationMap, ContractionRecord), MapError> {
    for v in 0..graph.vertex_count() {
        if graph.degree(v) != 3 {
            return Err(MapError::NotCubic {
                vertex: v,
                degree: graph.degree(v),
            });
        }
    }
    check_two_factor(graph, tf)?;

    // Matching end at each vertex.
    let mut matching_at = vec![usize::MAX; graph.vertex_count()];
    for &e in tf.matching() {
        let (a, b) = graph.endpoints(e);
        matching_at[a] = e;
        matching_at[b] = e;
    }

    // Both map positions of each matching edge, in scan order.
    let mut spans: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    let mut cycle_vertices = Vec::new();
    let mut matching_edges = Vec::new();
    for (ci, cycle) in tf.cycles().iter().enumerate() {
        let mut row = Vec::with_capacity(cycle.len());
        for (j, &v) in cycle.vertices.iter().enumerate() {
            let m = matching_at[v];
            spans.entry(m).or_default().push((ci, j));
            row.push(m);
        }
        cycle_vertices.push(cycle.vertices.clone());
        matching_edges.push(row);
    }

    // Map edge ids in order of first encounter.
    let mut ordered: Vec<(usize, &Vec<(usize, usize)>)> =
        spans.iter().map(|(&m, ends)| (m, ends)).collect();
    ordered.sort_by_key(|(_, ends)| ends[0]);

    let mut rotations: BTreeMap<usize, Vec<usize>> = tf
        .cycles()
        .iter()
        .enumerate()
        .map(|(ci, c)| (ci, vec![usize::MAX; c.len()]))
        .collect();
    let mut edges = BTreeMap::new();
    let mut origins = BTreeMap::new();
    for (id, (m, ends)) in ordered.into_iter().enumerate() {
        debug_assert_eq!(ends.len(), 2, "a matching edge has two ends");
        let (c1, p1) = ends[0];
        let (c2, p2) = ends[1];
        let kind = if c1 == c2 {
            MapEdge::Loop {
                vertex: c1,
                positions: (p1.min(p2), p1.max(p2)),
            }
        } else {
            MapEdge::Link {
                ends: [(c1, p1), (c2, p2)],
            }
        };
        rotations.get_mut(&c1).expect("cycle vertex")[p1] = id;
        rotations.get_mut(&c2).expect("cycle vertex")[p2] = id;
        edges.insert(id, kind);
        origins.insert(id, m);
    }

    let map = RotationMap {
        rotations,
        edges,
        origins,
    };
    debug_assert!(map.validate().is_empty());
    Ok((map, ContractionRecord {
        cycle_vertices,
        matching_edges,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matching::{two_factor, TwoFactor};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k33_hamilton_factor() -> (MultiGraph, TwoFactor) {
        let g = generators::named("k33").unwrap().graph;
        let tf = two_factor(&g, &[1, 5, 6]).unwrap();
        (g, tf)
    }

    #[test]
    fn k33_contracts_to_three_loops() {
        let (g, tf) = k33_hamilton_factor();
        let (map, record) = contract_two_factor(&g, &tf).unwrap();
        assert_eq!(map.vertex_count(), 1);
        assert_eq!(map.degree(0), 6);
        assert_eq!(map.edge_count(), 3);
        let mut pairs: Vec<(usize, usize)> = map
            .edge_ids()
            .map(|e| match *map.edge(e) {
                MapEdge::Loop { positions, .. } => positions,
                _ => panic!("expected only loops"),
            })
            .collect();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![(0, 3), (1, 4), (2, 5)]);
        for j in 0..6 {
            assert_eq!(record.cycle_vertex(0, j), tf.cycles()[0].vertices[j]);
        }
    }

    #[test]
    fn petersen_spokes_contract_to_pentagram_links() {
        let g = generators::named("petersen").unwrap().graph;
        let tf = two_factor(&g, &[5, 6, 7, 8, 9]).unwrap();
        let (map, record) = contract_two_factor(&g, &tf).unwrap();
        assert_eq!(map.vertex_count(), 2);
        assert_eq!(map.degree(0), 5);
        assert_eq!(map.degree(1), 5);
        assert_eq!(map.edge_count(), 5);
        assert!(map.edge_ids().all(|e| matches!(map.edge(e), MapEdge::Link { .. })));
        // Outer cycle is 0,1,2,3,4; inner cycle is 5,7,9,6,8. The spoke at
        // outer position j attaches at inner position of its far vertex:
        // the pentagram order 0,3,1,4,2.
        let inner_pos: Vec<usize> = (0..5)
            .map(|j| {
                let spoke = map.edge_at(0, j);
                match *map.edge(spoke) {
                    MapEdge::Link { ends } => {
                        let (_, p) = ends.iter().copied().find(|&(v, _)| v == 1).unwrap();
                        p
                    }
                    _ => unreachable!(),
                }
            })
            .collect();
        assert_eq!(inner_pos, vec![0, 3, 1, 4, 2]);
        // Round-trip: origins are exactly the spokes.
        let mut origins: Vec<usize> = map.edge_ids().map(|e| map.origin(e).unwrap()).collect();
        origins.sort_unstable();
        assert_eq!(origins, vec![5, 6, 7, 8, 9]);
        assert_eq!(record.cycle_count(), 2);
        for j in 0..5 {
            let m = record.matching_edge(0, j);
            assert!(tf.matching().contains(&m));
        }
    }

    #[test]
    fn heawood_hamilton_contracts_to_seven_loops() {
        let g = generators::named("heawood").unwrap().graph;
        // The generator lays down the Hamilton cycle first (edges 0..14),
        // then the 7 chords (ids 14..21); the chords are a perfect matching.
        let chords: Vec<usize> = (14..21).collect();
        let tf = two_factor(&g, &chords).unwrap();
        assert_eq!(tf.cycle_lengths(), vec![14]);
        let (map, _) = contract_two_factor(&g, &tf).unwrap();
        assert_eq!(map.vertex_count(), 1);
        assert_eq!(map.degree(0), 14);
        assert_eq!(map.edge_count(), 7);
        assert!(map.edge_ids().all(|e| map.edge(e).is_loop()));
    }

    fn dipole(links: usize) -> RotationMap {
        let mut b = MapBuilder::new();
        let v0 = b.add_vertex(links);
        let v1 = b.add_vertex(links);
        for i in 0..links {
            b.add_link(v0, i, v1, i).unwrap();
        }
        b.finish().unwrap()
    }

    #[test]
    fn deleting_one_dipole_vertex_leaves_half_edges() {
        let map = dipole(7);
        let rest = map.delete_vertex(0).unwrap();
        assert_eq!(rest.vertex_count(), 1);
        assert_eq!(rest.degree(1), 7);
        assert_eq!(rest.edge_count(), 7);
        for e in rest.edge_ids() {
            match *rest.edge(e) {
                MapEdge::HalfEdge { vertex, position } => {
                    assert_eq!(vertex, 1);
                    assert_eq!(rest.edge_at(1, position), e);
                }
                _ => panic!("expected half-edges"),
            }
        }
        assert!(rest.validate().is_empty());
    }

    #[test]
    fn deleting_the_last_vertex_empties_the_map() {
        let map = RotationMap::single_vertex(&[Some(1), Some(0), None]);
        let rest = map.delete_vertex(0).unwrap();
        assert!(rest.is_empty());
        assert_eq!(rest.edge_count(), 0);
        assert_eq!(map.delete_vertex(7).unwrap_err(), MapError::NoSuchVertex(7));
    }

    #[test]
    fn deleting_a_petersen_cycle_leaves_five_half_edges() {
        let g = generators::named("petersen").unwrap().graph;
        let tf = two_factor(&g, &[5, 6, 7, 8, 9]).unwrap();
        let (map, _) = contract_two_factor(&g, &tf).unwrap();
        let rest = map.delete_vertex(0).unwrap();
        assert_eq!(rest.vertex_count(), 1);
        assert_eq!(rest.degree(1), 5);
        assert_eq!(
            rest.edge_ids()
                .filter(|&e| rest.edge(e).is_half_edge())
                .count(),
            5
        );
    }

    #[test]
    fn validate_flags_hand_built_inconsistencies() {
        // A loop given one end: positions (1, 1).
        let mut rotations = BTreeMap::new();
        rotations.insert(0usize, vec![0usize, 0]);
        let mut edges = BTreeMap::new();
        edges.insert(
            0usize,
            MapEdge::Loop {
                vertex: 0,
                positions: (1, 1),
            },
        );
        let bad_loop = RotationMap::from_raw_parts(rotations, edges, BTreeMap::new());
        assert!(!bad_loop.validate().is_empty());

        // A rotation slot pointing at an edge with no end there.
        let mut rotations = BTreeMap::new();
        rotations.insert(0usize, vec![0usize, 0]);
        let mut edges = BTreeMap::new();
        edges.insert(
            0usize,
            MapEdge::HalfEdge {
                vertex: 0,
                position: 0,
            },
        );
        let bad_table = RotationMap::from_raw_parts(rotations, edges, BTreeMap::new());
        assert_eq!(bad_table.validate().len(), 1);

        // Builder output is always clean.
        let good = dipole(3);
        assert!(good.validate().is_empty());
    }

    #[test]
    fn contraction_degree_sum_is_twice_matching() {
        for name in ["petersen", "heawood", "desargues", "pappus"] {
            let g = generators::named(name).unwrap().graph;
            let m = crate::matching::perfect_matching(&g).unwrap();
            let tf = two_factor(&g, &m).unwrap();
            let (map, _) = contract_two_factor(&g, &tf).unwrap();
            let degree_sum: usize = map.vertex_ids().map(|v| map.degree(v)).sum();
            assert_eq!(degree_sum, 2 * m.len());
            assert_eq!(map.edge_count(), m.len());
            // Origins are a bijection onto the matching.
            let mut origins: Vec<usize> =
                map.edge_ids().map(|e| map.origin(e).unwrap()).collect();
            origins.sort_unstable();
            assert_eq!(origins, tf.matching());
        }
    }

    fn random_map(rng: &mut ChaCha8Rng) -> RotationMap {
        let nv = rng.gen_range(2..=4);
        let degrees: Vec<usize> = (0..nv).map(|_| 2 * rng.gen_range(1..=3)).collect();
        let mut b = MapBuilder::new();
        for &d in &degrees {
            b.add_vertex(d);
        }
        let mut free: Vec<(usize, usize)> = degrees
            .iter()
            .enumerate()
            .flat_map(|(v, &d)| (0..d).map(move |p| (v, p)))
            .collect();
        while free.len() >= 2 {
            let i = rng.gen_range(0..free.len());
            let (v1, p1) = free.swap_remove(i);
            if rng.gen_bool(0.25) {
                b.add_half_edge(v1, p1).unwrap();
                continue;
            }
            let j = rng.gen_range(0..free.len());
            let (v2, p2) = free.swap_remove(j);
            if v1 == v2 {
                b.add_loop(v1, p1, p2).unwrap();
            } else {
                b.add_link(v1, p1, v2, p2).unwrap();
            }
        }
        for (v, p) in free {
            b.add_half_edge(v, p).unwrap();
        }
        b.finish().unwrap()
    }

    #[test]
    fn vertex_deletion_commutes() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let map = random_map(&mut rng);
            let ids: Vec<usize> = map.vertex_ids().collect();
            let u = ids[0];
            let v = ids[1];
            let a = map.delete_vertex(u).unwrap().delete_vertex(v).unwrap();
            let b = map.delete_vertex(v).unwrap().delete_vertex(u).unwrap();
            assert_eq!(a, b);
            assert!(a.validate().is_empty());
        }
    }
}
