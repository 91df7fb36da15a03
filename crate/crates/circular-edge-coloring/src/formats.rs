//! Text formats: graph6 and plain edge lists for graphs, plus the
//! diff-friendly documents the CLI emits (colorings, rotation maps, trail
//! decompositions).
//!
//! Edge list: a header line `n m`, then `m` lines `u v` (0-based vertex
//! ids); parallel edges and self-loops are allowed.
//!
//! Coloring document: lines `p <p>`, `q <q>`, `edges <m>`, then one
//! `<edge-index> <color>` line per edge in input edge order.
//!
//! Rotation map document: a header `map <k>`, then one line per vertex,
//! `<vertex>: <edge> <edge> ...` listing the rotation position by
//! position; a loop's edge id appears twice at its vertex, a link's id
//! once at each of its two vertices, and a half-edge's id once in total.
//!
//! Decomposition document: `trails <k>`, one `trail <edge> <edge> ...`
//! line per trail, then `anchors <k>` and one `anchor <vertex> <index>`
//! line per odd-degree vertex.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coloring::CircularEdgeColoring;
use crate::graph::MultiGraph;
use crate::rotation::{MapEdge, RotationMap};
use crate::trails::{Decomposition, Trail, TrailStep};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph6 cannot encode this graph: {0}")]
    Graph6Unsupported(String),
}

fn parse_usize(token: &str, what: &str) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::Parse(format!("{what}: expected an integer, got {token:?}")))
}

// ---------------------------------------------------------------------
// Edge list

pub fn parse_edge_list(text: &str) -> Result<MultiGraph, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| FormatError::Parse("empty edge list".into()))?;
    let mut tokens = header.split_whitespace();
    let n = parse_usize(
        tokens
            .next()
            .ok_or_else(|| FormatError::Parse("missing vertex count".into()))?,
        "vertex count",
    )?;
    let m = parse_usize(
        tokens
            .next()
            .ok_or_else(|| FormatError::Parse("missing edge count".into()))?,
        "edge count",
    )?;
    if tokens.next().is_some() {
        return Err(FormatError::Parse("trailing tokens after header".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| FormatError::Parse(format!("expected {m} edge lines")))?;
        let mut tokens = line.split_whitespace();
        let u = parse_usize(
            tokens
                .next()
                .ok_or_else(|| FormatError::Parse("missing endpoint".into()))?,
            "endpoint",
        )?;
        let v = parse_usize(
            tokens
                .next()
                .ok_or_else(|| FormatError::Parse("missing endpoint".into()))?,
            "endpoint",
        )?;
        if tokens.next().is_some() {
            return Err(FormatError::Parse(format!("trailing tokens in {line:?}")));
        }
        edges.push((u, v));
    }
    if lines.next().is_some() {
        return Err(FormatError::Parse("trailing lines after edges".into()));
    }
    MultiGraph::new(n, edges).map_err(|e| FormatError::Parse(e.to_string()))
}

pub fn write_edge_list(graph: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------
// graph6 (simple graphs; n up to 2^18 - 1)

fn graph6_size(bytes: &[u8]) -> Result<(usize, usize), FormatError> {
    match bytes.first() {
        None => Err(FormatError::Parse("empty graph6 string".into())),
        Some(&126) => {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(FormatError::Parse(
                    "graph6 sizes above 2^18 - 1 are not supported".into(),
                ));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(63..=126).contains(&b) {
                    return Err(FormatError::Parse("invalid graph6 size byte".into()));
                }
                n = (n << 6) | (b as usize - 63);
            }
            Ok((n, 4))
        }
        Some(&b) if (63..=125).contains(&b) => Ok((b as usize - 63, 1)),
        Some(&b) => Err(FormatError::Parse(format!("invalid graph6 byte {b}"))),
    }
}

pub fn parse_graph6(text: &str) -> Result<MultiGraph, FormatError> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| FormatError::Parse("empty graph6 input".into()))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, offset) = graph6_size(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let data = &bytes[offset..];
    if data.len() != bit_count.div_ceil(6) {
        return Err(FormatError::Parse(format!(
            "graph6 on {n} vertices needs {} data bytes, got {}",
            bit_count.div_ceil(6),
            data.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(FormatError::Parse(format!("invalid graph6 byte {byte}")));
            }
            let value = byte - 63;
            if value >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    MultiGraph::new(n, edges).map_err(|e| FormatError::Parse(e.to_string()))
}

pub fn write_graph6(graph: &MultiGraph) -> Result<String, FormatError> {
    let n = graph.vertex_count();
    if n >= 1 << 18 {
        return Err(FormatError::Graph6Unsupported(format!("{n} vertices")));
    }
    let mut adjacent = vec![false; n * n];
    for &(u, v) in graph.edges() {
        if u == v {
            return Err(FormatError::Graph6Unsupported("self-loop".into()));
        }
        if adjacent[u * n + v] {
            return Err(FormatError::Graph6Unsupported("parallel edges".into()));
        }
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut current = 0u8;
    let mut filled = 0usize;
    for j in 1..n {
        for i in 0..j {
            current <<= 1;
            if adjacent[i * n + j] {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable bytes"))
}

// ---------------------------------------------------------------------
// Coloring documents

pub fn write_coloring(coloring: &CircularEdgeColoring) -> String {
    let mut out = format!(
        "p {}\nq {}\nedges {}\n",
        coloring.p,
        coloring.q,
        coloring.colors.len()
    );
    for (edge, &color) in coloring.colors.iter().enumerate() {
        out.push_str(&format!("{edge} {color}\n"));
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<CircularEdgeColoring, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let mut field = |name: &str| -> Result<usize, FormatError> {
        let line = lines
            .next()
            .ok_or_else(|| FormatError::Parse(format!("missing {name:?} line")))?;
        let rest = line
            .strip_prefix(name)
            .ok_or_else(|| FormatError::Parse(format!("expected {name:?} line, got {line:?}")))?;
        parse_usize(rest.trim(), name)
    };
    let p = field("p")?;
    let q = field("q")?;
    let m = field("edges")?;
    let mut colors = Vec::with_capacity(m);
    for expected in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| FormatError::Parse(format!("expected {m} color lines")))?;
        let mut tokens = line.split_whitespace();
        let edge = parse_usize(
            tokens
                .next()
                .ok_or_else(|| FormatError::Parse("missing edge index".into()))?,
            "edge index",
        )?;
        let color = parse_usize(
            tokens
                .next()
                .ok_or_else(|| FormatError::Parse("missing color".into()))?,
            "color",
        )?;
        if tokens.next().is_some() {
            return Err(FormatError::Parse(format!("trailing tokens in {line:?}")));
        }
        if edge != expected {
            return Err(FormatError::Parse(format!(
                "edge lines must be in order: expected {expected}, got {edge}"
            )));
        }
        colors.push(color);
    }
    if lines.next().is_some() {
        return Err(FormatError::Parse("trailing lines after colors".into()));
    }
    Ok(CircularEdgeColoring { p, q, colors })
}

// ---------------------------------------------------------------------
// Rotation map documents

pub fn write_rotation_map(map: &RotationMap) -> String {
    let mut out = format!("map {}\n", map.vertex_count());
    for v in map.vertex_ids() {
        let rotation: Vec<String> = map.rotation(v).iter().map(usize::to_string).collect();
        out.push_str(&format!("{v}: {}\n", rotation.join(" ")));
    }
    out
}

pub fn parse_rotation_map(text: &str) -> Result<RotationMap, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| FormatError::Parse("empty map document".into()))?;
    let k = parse_usize(
        header
            .strip_prefix("map")
            .ok_or_else(|| FormatError::Parse(format!("expected 'map <k>', got {header:?}")))?
            .trim(),
        "vertex count",
    )?;
    let mut rotations: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for _ in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| FormatError::Parse(format!("expected {k} vertex lines")))?;
        let (vertex, rest) = line
            .split_once(':')
            .ok_or_else(|| FormatError::Parse(format!("expected '<v>: ...', got {line:?}")))?;
        let vertex = parse_usize(vertex.trim(), "vertex id")?;
        let rotation = rest
            .split_whitespace()
            .map(|t| parse_usize(t, "edge id"))
            .collect::<Result<Vec<usize>, _>>()?;
        if rotations.insert(vertex, rotation).is_some() {
            return Err(FormatError::Parse(format!("vertex {vertex} listed twice")));
        }
    }
    if lines.next().is_some() {
        return Err(FormatError::Parse("trailing lines after vertices".into()));
    }

    // Reconstruct edge kinds from the number and placement of ends.
    let mut ends: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (&v, rotation) in &rotations {
        for (position, &e) in rotation.iter().enumerate() {
            ends.entry(e).or_default().push((v, position));
        }
    }
    let mut edges = BTreeMap::new();
    for (e, ends) in ends {
        let kind = match ends.as_slice() {
            [(v, p)] => MapEdge::HalfEdge {
                vertex: *v,
                position: *p,
            },
            [(v1, p1), (v2, p2)] if v1 == v2 => MapEdge::Loop {
                vertex: *v1,
                positions: (*p1.min(p2), *p1.max(p2)),
            },
            [(v1, p1), (v2, p2)] => MapEdge::Link {
                ends: [(*v1, *p1), (*v2, *p2)],
            },
            more => {
                return Err(FormatError::Parse(format!(
                    "edge {e} has {} ends; at most two are possible",
                    more.len()
                )))
            }
        };
        edges.insert(e, kind);
    }
    let map = RotationMap::from_raw_parts(rotations, edges, BTreeMap::new());
    let violations = map.validate();
    if let Some(first) = violations.first() {
        return Err(FormatError::Parse(format!("inconsistent map: {first}")));
    }
    Ok(map)
}

// ---------------------------------------------------------------------
// Decomposition documents

pub fn write_decomposition(d: &Decomposition) -> String {
    let mut out = format!("trails {}\n", d.trails().len());
    for trail in d.trails() {
        let edges: Vec<String> = trail.edges().map(|e| e.to_string()).collect();
        out.push_str(&format!("trail {}\n", edges.join(" ")));
    }
    out.push_str(&format!("anchors {}\n", d.anchors().len()));
    for (&vertex, &anchor) in d.anchors() {
        out.push_str(&format!("anchor {vertex} {anchor}\n"));
    }
    out
}

/// Parses a decomposition against its map, re-deriving trail orientations
/// from the edge sequences.
pub fn parse_decomposition(text: &str, map: &RotationMap) -> Result<Decomposition, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| FormatError::Parse("empty decomposition document".into()))?;
    let trail_count = parse_usize(
        header
            .strip_prefix("trails")
            .ok_or_else(|| FormatError::Parse(format!("expected 'trails <k>', got {header:?}")))?
            .trim(),
        "trail count",
    )?;
    let mut trails = Vec::with_capacity(trail_count);
    for _ in 0..trail_count {
        let line = lines
            .next()
            .ok_or_else(|| FormatError::Parse(format!("expected {trail_count} trail lines")))?;
        let rest = line
            .strip_prefix("trail")
            .ok_or_else(|| FormatError::Parse(format!("expected 'trail ...', got {line:?}")))?;
        let edges = rest
            .split_whitespace()
            .map(|t| parse_usize(t, "edge id"))
            .collect::<Result<Vec<usize>, _>>()?;
        trails.push(orient_trail(map, &edges)?);
    }
    let header = lines
        .next()
        .ok_or_else(|| FormatError::Parse("missing anchors header".into()))?;
    let anchor_count = parse_usize(
        header
            .strip_prefix("anchors")
            .ok_or_else(|| FormatError::Parse(format!("expected 'anchors <k>', got {header:?}")))?
            .trim(),
        "anchor count",
    )?;
    let mut anchors = BTreeMap::new();
    for _ in 0..anchor_count {
        let line = lines
            .next()
            .ok_or_else(|| FormatError::Parse(format!("expected {anchor_count} anchor lines")))?;
        let rest = line
            .strip_prefix("anchor")
            .ok_or_else(|| FormatError::Parse(format!("expected 'anchor ...', got {line:?}")))?;
        let mut tokens = rest.split_whitespace();
        let vertex = parse_usize(
            tokens
                .next()
                .ok_or_else(|| FormatError::Parse("missing anchor vertex".into()))?,
            "anchor vertex",
        )?;
        let index = parse_usize(
            tokens
                .next()
                .ok_or_else(|| FormatError::Parse("missing anchor index".into()))?,
            "anchor index",
        )?;
        if tokens.next().is_some() {
            return Err(FormatError::Parse(format!("trailing tokens in {line:?}")));
        }
        anchors.insert(vertex, index);
    }
    if lines.next().is_some() {
        return Err(FormatError::Parse("trailing lines after anchors".into()));
    }
    Ok(Decomposition::new(trails, anchors))
}

/// Rebuilds oriented steps from an edge id sequence: consecutive edges
/// must share an end vertex. Both orientations of the first edge are
/// tried; junction choices propagate deterministically.
fn orient_trail(map: &RotationMap, edges: &[usize]) -> Result<Trail, FormatError> {
    if edges.is_empty() {
        return Err(FormatError::Parse("empty trail".into()));
    }
    for &e in edges {
        if !map.contains_edge(e) {
            return Err(FormatError::Parse(format!("trail uses missing edge {e}")));
        }
    }
    let first_ends = map.edge(edges[0]).ends();
    'orientation: for (from, to) in [first_ends, (first_ends.1, first_ends.0)] {
        let mut steps = vec![TrailStep {
            edge: edges[0],
            from,
            to,
        }];
        for &e in &edges[1..] {
            let at = steps.last().expect("nonempty").to;
            let Some(vertex) = at.vertex() else {
                continue 'orientation;
            };
            let (a, b) = map.edge(e).ends();
            let (from, to) = if a.vertex() == Some(vertex) {
                (a, b)
            } else if b.vertex() == Some(vertex) {
                (b, a)
            } else {
                continue 'orientation;
            };
            steps.push(TrailStep { edge: e, from, to });
        }
        return Ok(Trail::from_steps(steps, false));
    }
    Err(FormatError::Parse(format!(
        "edge sequence {edges:?} is not a trail of the map"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::trails;

    #[test]
    fn edge_list_round_trip() {
        let g = generators::named("petersen").unwrap().graph;
        let text = write_edge_list(&g);
        let parsed = parse_edge_list(&text).unwrap();
        assert_eq!(parsed, g);
        assert!(text.starts_with("10 15\n"));
    }

    #[test]
    fn edge_list_rejects_malformed_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3").is_err());
        assert!(parse_edge_list("2 1\n0 5").is_err(), "endpoint out of range");
        assert!(parse_edge_list("2 2\n0 1").is_err(), "missing edge line");
        assert!(parse_edge_list("2 1\n0 x").is_err());
    }

    #[test]
    fn graph6_known_vectors() {
        // K4 is "C~": n=4, all six upper-triangle bits set.
        let k4 = generators::named("k4").unwrap().graph;
        assert_eq!(write_graph6(&k4).unwrap(), "C~");
        let parsed = parse_graph6("C~").unwrap();
        assert_eq!(parsed.edge_count(), 6);
        // The path 0-1-2 is "Bg".
        let path = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(write_graph6(&path).unwrap(), "Bg");
    }

    #[test]
    fn graph6_round_trip_with_header() {
        let g = generators::named("heawood").unwrap().graph;
        let text = write_graph6(&g).unwrap();
        let parsed = parse_graph6(&format!(">>graph6<<{text}\n")).unwrap();
        // Edge sets coincide up to ordering.
        let mut a: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        let mut b: Vec<(usize, usize)> = parsed.edges().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn graph6_rejects_multigraphs() {
        let loops = MultiGraph::new(1, vec![(0, 0)]).unwrap();
        assert!(write_graph6(&loops).is_err());
        let parallel = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(write_graph6(&parallel).is_err());
    }

    #[test]
    fn coloring_document_round_trip() {
        let coloring = CircularEdgeColoring {
            p: 7,
            q: 2,
            colors: vec![0, 3, 5, 1],
        };
        let text = write_coloring(&coloring);
        assert_eq!(parse_coloring(&text).unwrap(), coloring);
        assert!(parse_coloring("p 7\nq 2\nedges 2\n1 0\n0 1\n").is_err());
    }

    #[test]
    fn rotation_map_document_round_trip() {
        let g = generators::named("petersen").unwrap().graph;
        let tf = crate::matching::two_factor(&g, &[5, 6, 7, 8, 9]).unwrap();
        let (map, _) = crate::rotation::contract_two_factor(&g, &tf).unwrap();
        let text = write_rotation_map(&map);
        let parsed = parse_rotation_map(&text).unwrap();
        assert_eq!(parsed.vertex_count(), map.vertex_count());
        for v in map.vertex_ids() {
            assert_eq!(parsed.rotation(v), map.rotation(v));
        }
        for e in map.edge_ids() {
            assert_eq!(parsed.edge(e), map.edge(e));
        }
    }

    #[test]
    fn rotation_map_document_with_half_edges_and_loops() {
        let map = RotationMap::single_vertex(&[Some(4), None, None, None, Some(0), None, None]);
        let parsed = parse_rotation_map(&write_rotation_map(&map)).unwrap();
        assert_eq!(parsed.degree(0), 7);
        assert_eq!(parsed.edge(0), map.edge(0));
        assert!(parse_rotation_map("map 1\n0: 0 0 0\n").is_err(), "three ends");
    }

    #[test]
    fn decomposition_document_round_trip() {
        let map = RotationMap::single_vertex(&[Some(4), None, None, None, Some(0), None, None]);
        let d = trails::decompose(&map).unwrap();
        let text = write_decomposition(&d);
        let parsed = parse_decomposition(&text, &map).unwrap();
        trails::check_compatibility(&map, &parsed).unwrap();
        assert_eq!(parsed.anchors(), d.anchors());
        let edges_of = |d: &Decomposition| -> Vec<Vec<usize>> {
            d.trails().iter().map(|t| t.edges().collect()).collect()
        };
        assert_eq!(edges_of(&parsed), edges_of(&d));
    }
}
