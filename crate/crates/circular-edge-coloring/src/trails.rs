//! Compatible trail decompositions of abstract maps.
//!
//! A trail is a sequence of mutually distinct edges in which consecutive
//! edges share an end-vertex; it is traversed, entering each edge by one
//! end and leaving by the other. Linking identifies the end of one trail
//! with the beginning of another at a common vertex; linking a trail with
//! itself closes it, making the edge order cyclic.
//!
//! A decomposition of a map into open trails is *compatible* when every
//! edge lies in exactly one trail and every odd-degree vertex `v` admits
//! an anchor index `i` such that the edge pairs at positions
//! `(i, i+5)`, `(i+1, i+3)` and `(i+2, i+4)` are consecutive inside some
//! trail. Such decompositions exist for every map without vertices of
//! degree 1, 3 or 5; the construction below realizes that existence proof:
//! a candidate-set scan for single-vertex maps and vertex-deletion
//! recursion through an auxiliary single-vertex map in general.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::rotation::{End, MapBuilder, MapEdge, RotationMap};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TrailError {
    #[error("trail ends do not meet at vertex {vertex}")]
    EndsMismatch { vertex: usize },
    #[error("map does not have exactly one vertex")]
    NotSingleVertex,
    #[error("vertex {vertex} has forbidden degree {degree}")]
    ForbiddenDegree { vertex: usize, degree: usize },
    #[error("no anchor index works at vertex {vertex}; this contradicts the decomposition lemmas")]
    AnchorSearchFailed { vertex: usize },
}

/// One traversed edge of a trail: entered at `from`, left at `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrailStep {
    pub edge: usize,
    pub from: End,
    pub to: End,
}

/// A trail over map edges. `closed` is set only by self-linking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    steps: Vec<TrailStep>,
    closed: bool,
}

impl Trail {
    /// A single-edge trail in its stored end order.
    pub fn singleton(map: &RotationMap, edge: usize) -> Trail {
        let (from, to) = map.edge(edge).ends();
        Trail {
            steps: vec![TrailStep { edge, from, to }],
            closed: false,
        }
    }

    /// Assembles a trail from explicit steps; callers are responsible for
    /// step validity (used by the brute-force oracle).
    pub(crate) fn from_steps(steps: Vec<TrailStep>, closed: bool) -> Trail {
        Trail { steps, closed }
    }

    pub fn steps(&self) -> &[TrailStep] {
        &self.steps
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps.iter().map(|s| s.edge)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// The end at which the trail begins.
    pub fn start(&self) -> End {
        self.steps.first().expect("trails are nonempty").from
    }

    /// The end at which the trail finishes.
    pub fn finish(&self) -> End {
        self.steps.last().expect("trails are nonempty").to
    }

    /// Same trail walked backwards.
    pub fn reversed(self) -> Trail {
        let steps = self
            .steps
            .into_iter()
            .rev()
            .map(|s| TrailStep {
                edge: s.edge,
                from: s.to,
                to: s.from,
            })
            .collect();
        Trail {
            steps,
            closed: self.closed,
        }
    }

    /// Recomputes step ends against `map`; used when a trail built in a
    /// vertex-deleted map is viewed in the original one, where former
    /// half-edges are links again.
    fn view_in(mut self, map: &RotationMap) -> Trail {
        for step in &mut self.steps {
            let (ea, eb) = map.edge(step.edge).ends();
            let (from, to) = match (step.from, step.to) {
                (f, t) if f == ea && t == eb => (ea, eb),
                (f, t) if f == eb && t == ea => (eb, ea),
                (End::Free, t) if t == ea => (eb, ea),
                (End::Free, t) if t == eb => (ea, eb),
                (f, End::Free) if f == ea => (ea, eb),
                (f, End::Free) if f == eb => (eb, ea),
                _ => unreachable!("step ends must match the edge in some orientation"),
            };
            step.from = from;
            step.to = to;
        }
        self
    }
}

/// Links `first` (ending at `at`) with `second` (starting at `at`).
pub fn link(first: Trail, second: Trail, at: usize) -> Result<Trail, TrailError> {
    if first.is_closed()
        || second.is_closed()
        || first.finish().vertex() != Some(at)
        || second.start().vertex() != Some(at)
    {
        return Err(TrailError::EndsMismatch { vertex: at });
    }
    let mut steps = first.steps;
    steps.extend(second.steps);
    Ok(Trail {
        steps,
        closed: false,
    })
}

/// Links a trail that starts and ends at `at` with itself, closing it.
pub fn self_link(trail: Trail, at: usize) -> Result<Trail, TrailError> {
    if trail.is_closed()
        || trail.start().vertex() != Some(at)
        || trail.finish().vertex() != Some(at)
    {
        return Err(TrailError::EndsMismatch { vertex: at });
    }
    Ok(Trail {
        steps: trail.steps,
        closed: true,
    })
}

/// A set of trails with the anchor index chosen at each odd-degree vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    trails: Vec<Trail>,
    anchors: BTreeMap<usize, usize>,
}

impl Decomposition {
    pub fn new(trails: Vec<Trail>, anchors: BTreeMap<usize, usize>) -> Self {
        Self { trails, anchors }
    }

    pub fn trails(&self) -> &[Trail] {
        &self.trails
    }

    pub fn anchors(&self) -> &BTreeMap<usize, usize> {
        &self.anchors
    }

    pub fn anchor(&self, vertex: usize) -> Option<usize> {
        self.anchors.get(&vertex).copied()
    }

    /// The three position pairs consumed at an anchored vertex.
    pub fn anchored_pairs(anchor: usize, degree: usize) -> [(usize, usize); 3] {
        let p = |k: usize| (anchor + k) % degree;
        [(p(0), p(5)), (p(1), p(3)), (p(2), p(4))]
    }
}

/// First violated clause of the compatibility definition, if any.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatibilityViolation {
    #[error("trail {trail} is not a valid trail: {reason}")]
    InvalidTrail { trail: usize, reason: String },
    #[error("trail {trail} is closed")]
    ClosedTrail { trail: usize },
    #[error("edge {edge} appears in {count} trails instead of exactly one")]
    NotAPartition { edge: usize, count: usize },
    #[error("odd-degree vertex {vertex} has no anchor")]
    MissingAnchor { vertex: usize },
    #[error("vertex {vertex} has an anchor but even degree")]
    UnexpectedAnchor { vertex: usize },
    #[error("anchor {anchor} at vertex {vertex} is not a position (degree {degree})")]
    AnchorOutOfRange {
        vertex: usize,
        anchor: usize,
        degree: usize,
    },
    #[error("anchored positions ({}, {}) at vertex {vertex} {reason}", positions.0, positions.1)]
    AnchorPairViolated {
        vertex: usize,
        positions: (usize, usize),
        reason: &'static str,
    },
}

/// Checks that `d` is a compatible decomposition of `map`.
pub fn check_compatibility(
    map: &RotationMap,
    d: &Decomposition,
) -> Result<(), CompatibilityViolation> {
    // Clause 1: every trail is a valid trail of the map.
    for (t, trail) in d.trails().iter().enumerate() {
        validate_trail(map, trail)
            .map_err(|reason| CompatibilityViolation::InvalidTrail { trail: t, reason })?;
    }
    // Clause 2: all trails are open.
    for (t, trail) in d.trails().iter().enumerate() {
        if trail.is_closed() {
            return Err(CompatibilityViolation::ClosedTrail { trail: t });
        }
    }
    // Clause 3: the trails partition the edge set.
    let mut counts: BTreeMap<usize, usize> = map.edge_ids().map(|e| (e, 0)).collect();
    for trail in d.trails() {
        for e in trail.edges() {
            *counts.entry(e).or_insert(0) += 1;
        }
    }
    for (&edge, &count) in &counts {
        if count != 1 {
            return Err(CompatibilityViolation::NotAPartition { edge, count });
        }
    }
    // Clause 4: anchors exist exactly at odd vertices and their pairs are
    // consecutive (hence distinct edges) in some trail.
    let mut consecutive: BTreeSet<(usize, usize)> = BTreeSet::new();
    for trail in d.trails() {
        for pair in trail.steps().windows(2) {
            let (a, b) = (pair[0].edge, pair[1].edge);
            consecutive.insert((a.min(b), a.max(b)));
        }
    }
    for v in map.vertex_ids() {
        let degree = map.degree(v);
        match (degree % 2 == 1, d.anchor(v)) {
            (true, None) => return Err(CompatibilityViolation::MissingAnchor { vertex: v }),
            (false, Some(_)) => {
                return Err(CompatibilityViolation::UnexpectedAnchor { vertex: v })
            }
            (false, None) => {}
            (true, Some(anchor)) => {
                if anchor >= degree {
                    return Err(CompatibilityViolation::AnchorOutOfRange {
                        vertex: v,
                        anchor,
                        degree,
                    });
                }
                for positions in Decomposition::anchored_pairs(anchor, degree) {
                    if positions.0 == positions.1 {
                        return Err(CompatibilityViolation::AnchorPairViolated {
                            vertex: v,
                            positions,
                            reason: "collapse to a single end",
                        });
                    }
                    let e1 = map.edge_at(v, positions.0);
                    let e2 = map.edge_at(v, positions.1);
                    if e1 == e2 {
                        return Err(CompatibilityViolation::AnchorPairViolated {
                            vertex: v,
                            positions,
                            reason: "carry the same edge",
                        });
                    }
                    if !consecutive.contains(&(e1.min(e2), e1.max(e2))) {
                        return Err(CompatibilityViolation::AnchorPairViolated {
                            vertex: v,
                            positions,
                            reason: "are not consecutive in any trail",
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Boolean form of [`check_compatibility`].
pub fn is_compatible(map: &RotationMap, d: &Decomposition) -> bool {
    check_compatibility(map, d).is_ok()
}

fn validate_trail(map: &RotationMap, trail: &Trail) -> Result<(), String> {
    if trail.is_empty() {
        return Err("empty trail".into());
    }
    let mut seen = BTreeSet::new();
    for (k, step) in trail.steps().iter().enumerate() {
        if !map.contains_edge(step.edge) {
            return Err(format!("edge {} not in the map", step.edge));
        }
        if !seen.insert(step.edge) {
            return Err(format!("edge {} repeated", step.edge));
        }
        let (ea, eb) = map.edge(step.edge).ends();
        let forward = step.from == ea && step.to == eb;
        let backward = step.from == eb && step.to == ea;
        if !forward && !backward {
            return Err(format!("step {k} does not traverse edge {}", step.edge));
        }
        let interior_from = k > 0;
        let interior_to = k + 1 < trail.len() || trail.is_closed();
        if interior_from && step.from == End::Free {
            return Err(format!("free end inside the trail at step {k}"));
        }
        if interior_to && step.to == End::Free {
            return Err(format!("free end inside the trail at step {k}"));
        }
    }
    for k in 0..trail.len() {
        let next = (k + 1) % trail.len();
        if next == 0 && !trail.is_closed() {
            break;
        }
        let here = trail.steps()[k].to.vertex();
        let there = trail.steps()[next].from.vertex();
        if here.is_none() || here != there {
            return Err(format!("steps {k} and {next} do not meet at a vertex"));
        }
    }
    Ok(())
}

/// The candidate trail set `W_i` of a single-vertex map: every edge starts
/// as its own trail, then the end pairs at positions `(i, i+5)`,
/// `(i+1, i+3)`, `(i+2, i+4)` are linked in that order. The result may
/// contain closed trails.
pub fn candidate_w(map: &RotationMap, i: usize) -> Result<Vec<Trail>, TrailError> {
    let mut vertices = map.vertex_ids();
    let (Some(v), None) = (vertices.next(), vertices.next()) else {
        return Err(TrailError::NotSingleVertex);
    };
    let degree = map.degree(v);
    if degree < 6 {
        // Fewer than six distinct positions: the three pairs collide.
        return Err(TrailError::ForbiddenDegree { vertex: v, degree });
    }
    let mut slots: Vec<Option<Trail>> = map
        .edge_ids()
        .map(|e| Some(Trail::singleton(map, e)))
        .collect();
    for (a, b) in [(0, 5), (1, 3), (2, 4)] {
        let p = (i + a) % degree;
        let q = (i + b) % degree;
        link_ends(&mut slots, v, p, q)?;
    }
    Ok(slots.into_iter().flatten().collect())
}

/// Links the trails exposing the ends at positions `p` and `q` of `v`.
fn link_ends(
    slots: &mut [Option<Trail>],
    v: usize,
    p: usize,
    q: usize,
) -> Result<(), TrailError> {
    let end_p = End::At {
        vertex: v,
        position: p,
    };
    let end_q = End::At {
        vertex: v,
        position: q,
    };
    let find = |slots: &[Option<Trail>], end: End| -> Option<usize> {
        slots.iter().position(|t| {
            t.as_ref()
                .is_some_and(|t| !t.is_closed() && (t.start() == end || t.finish() == end))
        })
    };
    let ti = find(slots, end_p).ok_or(TrailError::EndsMismatch { vertex: v })?;
    let tj = find(slots, end_q).ok_or(TrailError::EndsMismatch { vertex: v })?;
    if ti == tj {
        let trail = slots[ti].take().expect("slot occupied");
        // Its two exposed ends are exactly p and q; close it.
        let trail = if trail.finish() == end_p { trail } else { trail.reversed() };
        slots[ti] = Some(self_link(trail, v)?);
    } else {
        let a = slots[ti].take().expect("slot occupied");
        let b = slots[tj].take().expect("slot occupied");
        let a = if a.finish() == end_p { a } else { a.reversed() };
        let b = if b.start() == end_q { b } else { b.reversed() };
        let keep = ti.min(tj);
        slots[keep] = Some(link(a, b, v)?);
    }
    Ok(())
}

/// Decomposes a single-vertex map.
///
/// Even degree: every edge is its own trail and no anchor is needed. Odd
/// degree (7 or at least 9): the anchor indices are scanned in order and
/// the first candidate set consisting of open trails only is returned;
/// the smallest working index wins.
pub fn decompose_single_vertex(map: &RotationMap) -> Result<Decomposition, TrailError> {
    let mut vertices = map.vertex_ids();
    let (Some(v), None) = (vertices.next(), vertices.next()) else {
        return Err(TrailError::NotSingleVertex);
    };
    let degree = map.degree(v);
    if matches!(degree, 1 | 3 | 5) {
        return Err(TrailError::ForbiddenDegree { vertex: v, degree });
    }
    if degree % 2 == 0 {
        let trails = map.edge_ids().map(|e| Trail::singleton(map, e)).collect();
        return Ok(Decomposition::new(trails, BTreeMap::new()));
    }
    for i in 0..degree {
        let trails = candidate_w(map, i)?;
        if trails.iter().all(|t| !t.is_closed()) {
            let mut anchors = BTreeMap::new();
            anchors.insert(v, i);
            return Ok(Decomposition::new(trails, anchors));
        }
    }
    Err(TrailError::AnchorSearchFailed { vertex: v })
}

/// Where a trail of the working set touches the recursion vertex.
#[derive(Debug, Clone, Copy)]
enum Attachment {
    /// Trail starts and finishes at the vertex, at these positions.
    Both { start: usize, finish: usize },
    /// Exactly one extremity at the vertex; `at_start` tells which.
    One { position: usize, at_start: bool },
    None,
}

fn attachment(trail: &Trail, v: usize) -> Attachment {
    let start = trail.start();
    let finish = trail.finish();
    let sp = (start.vertex() == Some(v)).then(|| start.position().expect("attached end"));
    let fp = (finish.vertex() == Some(v)).then(|| finish.position().expect("attached end"));
    match (sp, fp) {
        (Some(s), Some(f)) => Attachment::Both { start: s, finish: f },
        (Some(s), None) => Attachment::One {
            position: s,
            at_start: true,
        },
        (None, Some(f)) => Attachment::One {
            position: f,
            at_start: false,
        },
        (None, None) => Attachment::None,
    }
}

/// Decomposes an arbitrary map with no vertex of degree 1, 3 or 5 into a
/// compatible set of open trails, by induction on the vertex count.
///
/// The highest-degree vertex `v` is deleted first (ties to the smallest
/// id); the rest is decomposed recursively. The recursive trails plus the
/// loops and half-edges at `v` form the working set `W`; an auxiliary
/// single-vertex map `H` on the positions of `v` gets a loop for every
/// trail of `W` with both extremities at `v`, a half-edge for every trail
/// touching `v` once, and nothing for the others. Decomposing `H` and
/// replacing each of its edges by the corresponding trail of `W` yields
/// the decomposition.
pub fn decompose(map: &RotationMap) -> Result<Decomposition, TrailError> {
    for v in map.vertex_ids() {
        let degree = map.degree(v);
        if matches!(degree, 1 | 3 | 5) {
            return Err(TrailError::ForbiddenDegree { vertex: v, degree });
        }
    }
    decompose_checked(map)
}

fn decompose_checked(map: &RotationMap) -> Result<Decomposition, TrailError> {
    if map.vertex_count() == 0 {
        return Ok(Decomposition::new(Vec::new(), BTreeMap::new()));
    }
    if map.vertex_count() == 1 {
        return decompose_single_vertex(map);
    }
    let v = map
        .vertex_ids()
        .max_by_key(|&v| (map.degree(v), std::cmp::Reverse(v)))
        .expect("nonempty map");
    let degree = map.degree(v);
    let rest = map.delete_vertex(v).expect("vertex is present");
    let sub = decompose_checked(&rest)?;

    // Working set: recursive trails viewed in this map, then the loops and
    // half-edges at v as singleton trails, in edge id order.
    let Decomposition {
        trails: sub_trails,
        mut anchors,
    } = sub;
    let mut working: Vec<Trail> = sub_trails.into_iter().map(|t| t.view_in(map)).collect();
    for e in map.edge_ids() {
        match *map.edge(e) {
            MapEdge::Loop { vertex, .. } if vertex == v => working.push(Trail::singleton(map, e)),
            MapEdge::HalfEdge { vertex, .. } if vertex == v => {
                working.push(Trail::singleton(map, e))
            }
            _ => {}
        }
    }

    if degree % 2 == 0 {
        // No constraint at an even vertex: the working set already works.
        return Ok(Decomposition::new(working, anchors));
    }

    // Auxiliary single-vertex map on the positions of v.
    let mut builder = MapBuilder::new();
    let w = builder.add_vertex(degree);
    let mut h_edges: Vec<(usize, Attachment)> = Vec::new();
    let mut touching = vec![false; working.len()];
    for (t, trail) in working.iter().enumerate() {
        let att = attachment(trail, v);
        match att {
            Attachment::Both { start, finish } => {
                builder
                    .add_loop(w, start, finish)
                    .expect("positions are distinct ends of one trail");
                h_edges.push((t, att));
                touching[t] = true;
            }
            Attachment::One { position, .. } => {
                builder.add_half_edge(w, position).expect("free position");
                h_edges.push((t, att));
                touching[t] = true;
            }
            Attachment::None => {}
        }
    }
    let auxiliary = builder.finish().expect("every position of v is an extremity");
    let aux_decomposition = decompose_single_vertex(&auxiliary)?;

    // Substitute each auxiliary edge by its working trail, oriented so the
    // junctions at v line up.
    let mut result = Vec::new();
    let mut used = vec![false; working.len()];
    for aux_trail in aux_decomposition.trails() {
        debug_assert!(!aux_trail.is_closed());
        let mut steps = Vec::new();
        for step in aux_trail.steps() {
            let (t, att) = h_edges[step.edge];
            debug_assert!(!used[t], "each working trail substitutes once");
            used[t] = true;
            let trail = working[t].clone();
            let oriented = match (att, step.from) {
                (Attachment::Both { start, .. }, End::At { position, .. }) => {
                    if start == position {
                        trail
                    } else {
                        trail.reversed()
                    }
                }
                (Attachment::One { at_start, .. }, End::At { .. }) => {
                    // Trail must begin at its v extremity.
                    if at_start {
                        trail
                    } else {
                        trail.reversed()
                    }
                }
                (Attachment::One { at_start, .. }, End::Free) => {
                    // Trail must finish at its v extremity.
                    if at_start {
                        trail.reversed()
                    } else {
                        trail
                    }
                }
                (Attachment::Both { .. }, End::Free) | (Attachment::None, _) => {
                    unreachable!("auxiliary ends mirror the attachments")
                }
            };
            steps.extend(oriented.steps);
        }
        result.push(Trail {
            steps,
            closed: false,
        });
    }
    for (t, trail) in working.into_iter().enumerate() {
        if !touching[t] {
            result.push(trail);
        } else {
            debug_assert!(used[t]);
        }
    }

    let anchor = aux_decomposition.anchor(w).expect("odd auxiliary degree");
    anchors.insert(v, anchor);
    Ok(Decomposition::new(result, anchors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::MapBuilder;

    fn half_edge_fan(d: usize) -> RotationMap {
        RotationMap::single_vertex(&vec![None; d])
    }

    /// Pairing from explicit loop position pairs, the rest half-edges.
    fn pairing(d: usize, loops: &[(usize, usize)]) -> RotationMap {
        let mut spec = vec![None; d];
        for &(p, q) in loops {
            spec[p] = Some(q);
            spec[q] = Some(p);
        }
        RotationMap::single_vertex(&spec)
    }

    #[test]
    fn linking_two_singletons() {
        let map = pairing(7, &[]);
        let a = Trail::singleton(&map, 0);
        let b = Trail::singleton(&map, 1);
        // Half-edge singletons start at the vertex; flip `a` so it ends there.
        let a = a.reversed();
        let t = link(a, b, 0).unwrap();
        assert_eq!(t.edges().collect::<Vec<_>>(), vec![0, 1]);
        assert!(!t.is_closed());
    }

    #[test]
    fn self_linking_closes() {
        let map = pairing(7, &[(0, 1)]);
        let t = Trail::singleton(&map, 0);
        let closed = self_link(t, 0).unwrap();
        assert!(closed.is_closed());
        assert_eq!(closed.len(), 1);
    }

    #[test]
    fn linking_at_wrong_vertex_fails() {
        let mut b = MapBuilder::new();
        let v0 = b.add_vertex(2);
        let v1 = b.add_vertex(2);
        b.add_link(v0, 0, v1, 0).unwrap();
        b.add_link(v0, 1, v1, 1).unwrap();
        let map = b.finish().unwrap();
        let a = Trail::singleton(&map, 0); // runs v0 -> v1
        let c = Trail::singleton(&map, 1); // runs v0 -> v1
        assert_eq!(
            link(a, c, 1).unwrap_err(),
            TrailError::EndsMismatch { vertex: 1 }
        );
    }

    #[test]
    fn candidate_set_on_seven_half_edges() {
        let map = half_edge_fan(7);
        let trails = candidate_w(&map, 0).unwrap();
        let edge_lists: Vec<Vec<usize>> = trails.iter().map(|t| t.edges().collect()).collect();
        assert_eq!(edge_lists, vec![vec![0, 5], vec![1, 3], vec![2, 4], vec![6]]);
        assert!(trails.iter().all(|t| !t.is_closed()));
    }

    #[test]
    fn candidate_set_closure_cases() {
        // Loops on positions {2,4} and {0,6}, half-edges at 1, 3, 5.
        let map = pairing(7, &[(2, 4), (0, 6)]);
        // Anchor 2 links (2,0), (3,5), (4,6): the two loops join into one
        // trail whose remaining exposed ends are then self-linked.
        let w3 = candidate_w(&map, 2).unwrap();
        assert!(w3.iter().any(Trail::is_closed));
        // Anchor 3 links (3,1), (4,6), (5,0): everything stays open.
        let w4 = candidate_w(&map, 3).unwrap();
        assert!(w4.iter().all(|t| !t.is_closed()));
    }

    #[test]
    fn candidate_set_closes_on_anchored_loop() {
        // A loop spanning the anchored pair (i, i+5) closes immediately.
        let map = pairing(7, &[(0, 5)]);
        let w = candidate_w(&map, 0).unwrap();
        let closed: Vec<&Trail> = w.iter().filter(|t| t.is_closed()).collect();
        assert_eq!(closed.len(), 1);
        assert_eq!(closed[0].len(), 1);
    }

    #[test]
    fn single_loop_decomposes_trivially() {
        let map = pairing(2, &[(0, 1)]);
        let d = decompose_single_vertex(&map).unwrap();
        assert_eq!(d.trails().len(), 1);
        assert!(d.anchors().is_empty());
        check_compatibility(&map, &d).unwrap();
    }

    #[test]
    fn forbidden_degrees_are_rejected() {
        for d in [1usize, 3, 5] {
            let map = half_edge_fan(d);
            assert_eq!(
                decompose_single_vertex(&map).unwrap_err(),
                TrailError::ForbiddenDegree { vertex: 0, degree: d }
            );
            assert_eq!(
                decompose(&map).unwrap_err(),
                TrailError::ForbiddenDegree { vertex: 0, degree: d }
            );
        }
    }

    use crate::oracle::involutions;

    #[test]
    fn every_degree_seven_pairing_decomposes() {
        for spec in involutions(7) {
            let map = RotationMap::single_vertex(&spec);
            let d = decompose_single_vertex(&map).unwrap();
            check_compatibility(&map, &d).unwrap();
        }
    }

    #[test]
    fn seven_dipole_decomposes() {
        let mut b = MapBuilder::new();
        let v0 = b.add_vertex(7);
        let v1 = b.add_vertex(7);
        for i in 0..7 {
            b.add_link(v0, i, v1, i).unwrap();
        }
        let map = b.finish().unwrap();
        let d = decompose(&map).unwrap();
        check_compatibility(&map, &d).unwrap();
        assert_eq!(d.anchors().len(), 2);
    }

    #[test]
    fn petersen_contraction_is_forbidden() {
        let g = crate::generators::named("petersen").unwrap().graph;
        let tf = crate::matching::two_factor(&g, &[5, 6, 7, 8, 9]).unwrap();
        let (map, _) = crate::rotation::contract_two_factor(&g, &tf).unwrap();
        assert!(matches!(
            decompose(&map),
            Err(TrailError::ForbiddenDegree { degree: 5, .. })
        ));
    }

    #[test]
    fn heawood_contraction_is_trivial() {
        let g = crate::generators::named("heawood").unwrap().graph;
        let chords: Vec<usize> = (14..21).collect();
        let tf = crate::matching::two_factor(&g, &chords).unwrap();
        let (map, _) = crate::rotation::contract_two_factor(&g, &tf).unwrap();
        let d = decompose(&map).unwrap();
        check_compatibility(&map, &d).unwrap();
        assert!(d.anchors().is_empty());
        assert_eq!(d.trails().len(), 7);
    }

    #[test]
    fn compatibility_rejects_closed_and_partial() {
        let map = pairing(2, &[(0, 1)]);
        let closed = self_link(Trail::singleton(&map, 0), 0).unwrap();
        let d = Decomposition::new(vec![closed], BTreeMap::new());
        assert_eq!(
            check_compatibility(&map, &d),
            Err(CompatibilityViolation::ClosedTrail { trail: 0 })
        );

        let map2 = half_edge_fan(8);
        let trails: Vec<Trail> = (0..7).map(|e| Trail::singleton(&map2, e)).collect();
        let d2 = Decomposition::new(trails, BTreeMap::new());
        assert_eq!(
            check_compatibility(&map2, &d2),
            Err(CompatibilityViolation::NotAPartition { edge: 7, count: 0 })
        );
    }

    #[test]
    fn candidate_trail_count_accounting() {
        // Trail count = edges - successful (non-self) links.
        for spec in involutions(7) {
            let map = RotationMap::single_vertex(&spec);
            for i in 0..7 {
                let trails = candidate_w(&map, i).unwrap();
                let merges: usize = trails.iter().map(|t| t.len() - 1).sum();
                let closures = trails.iter().filter(|t| t.is_closed()).count();
                // Each of the 3 linkings either merged two trails or closed one.
                assert_eq!(merges + closures, 3);
                assert_eq!(trails.len(), map.edge_count() - merges);
            }
        }
    }
}
