//! Test-graph supply: a catalog of named graphs and parametric families.
//! Every emitted graph is re-certified by `analyze`; no generator trusts
//! its own construction.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{analyze, MultiGraph, StructureReport};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// A catalog graph with its recomputed structure report.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: &'static str,
    pub graph: MultiGraph,
    pub report: StructureReport,
}

pub const NAMED_GRAPHS: &[&str] = &[
    "petersen", "heawood", "mcgee", "pappus", "k4", "k33", "prism", "desargues",
];

/// Looks up a catalog graph by name and certifies it with `analyze`.
pub fn named(name: &str) -> Result<NamedGraph, GeneratorError> {
    let (name, graph) = match name {
        "petersen" => ("petersen", generalized_petersen(5, 2)?),
        "heawood" => ("heawood", lcf(14, &[5, -5])?),
        "mcgee" => ("mcgee", lcf(24, &[12, 7, -7])?),
        "pappus" => ("pappus", lcf(18, &[5, 7, -7, 7, -7, -5])?),
        "desargues" => ("desargues", generalized_petersen(10, 3)?),
        "k4" => ("k4", complete(4)),
        "k33" => ("k33", complete_bipartite(3, 3)),
        "prism" => ("prism", generalized_petersen(3, 1)?),
        other => return Err(GeneratorError::UnknownName(other.to_string())),
    };
    let report = analyze(&graph);
    Ok(NamedGraph { name, graph, report })
}

fn complete(n: usize) -> MultiGraph {
    let edges = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    MultiGraph::new(n, edges).expect("dense ids")
}

fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let edges = (0..a)
        .flat_map(|x| (0..b).map(move |y| (x, a + y)))
        .collect();
    MultiGraph::new(a + b, edges).expect("dense ids")
}

/// Cubic graph from an LCF code: a Hamilton cycle `0..n` (edges first)
/// plus the chord `i -> i + jumps[i mod jumps.len()]` for every vertex.
/// The jumps must pair up into a perfect matching of chords.
pub fn lcf(n: usize, jumps: &[i64]) -> Result<MultiGraph, GeneratorError> {
    if n == 0 || n % jumps.len() != 0 {
        return Err(GeneratorError::BadParameters(format!(
            "lcf: {n} vertices not a multiple of {} jumps",
            jumps.len()
        )));
    }
    let target = |i: usize| -> usize {
        let jump = jumps[i % jumps.len()];
        (i as i64 + jump).rem_euclid(n as i64) as usize
    };
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = target(i);
        if target(j) != i {
            return Err(GeneratorError::BadParameters(format!(
                "lcf: chord of {i} is not reciprocated by {j}"
            )));
        }
        if i < j {
            edges.push((i, j));
        }
    }
    MultiGraph::new(n, edges).map_err(|e| GeneratorError::BadParameters(e.to_string()))
}

/// The generalized Petersen graph GP(n, k): outer n-cycle on `0..n`,
/// spokes, and the inner (n, k) star polygon on `n..2n`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<MultiGraph, GeneratorError> {
    if n < 3 || k < 1 || 2 * k >= n {
        return Err(GeneratorError::BadParameters(format!(
            "generalized Petersen needs n >= 3 and 1 <= k < n/2, got ({n}, {k})"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n + i)));
    edges.extend((0..n).map(|i| (n + i, n + (i + k) % n)));
    MultiGraph::new(2 * n, edges).map_err(|e| GeneratorError::BadParameters(e.to_string()))
}

pub const DEFAULT_GENERATION_ATTEMPTS: usize = 50_000;

/// Random cubic bridgeless graph of girth at least `min_girth`, by
/// rejection sampling over unions of three random perfect matchings on
/// `0..n`. Deterministic per seed; `None` when the attempt budget runs
/// out or `n` is odd or below 4.
pub fn random_cubic_bridgeless(n: usize, min_girth: usize, seed: u64) -> Option<MultiGraph> {
    random_cubic_bridgeless_with_budget(n, min_girth, seed, DEFAULT_GENERATION_ATTEMPTS)
}

pub fn random_cubic_bridgeless_with_budget(
    n: usize,
    min_girth: usize,
    seed: u64,
    attempts: usize,
) -> Option<MultiGraph> {
    if n < 4 || n % 2 != 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..attempts {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * n / 2);
        for _ in 0..3 {
            order.shuffle(&mut rng);
            for pair in order.chunks_exact(2) {
                edges.push((pair[0].min(pair[1]), pair[0].max(pair[1])));
            }
        }
        // Cheap rejection first: repeated pairs are 2-cycles.
        if min_girth >= 3 {
            let mut sorted = edges.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
        }
        let graph = MultiGraph::new(n, edges).expect("dense ids");
        if !crate::graph::girth_at_least(&graph, min_girth) {
            continue;
        }
        // Full certification of the surviving candidate.
        let report = analyze(&graph);
        let girth_ok = match report.girth {
            Some(g) => g >= min_girth,
            None => true,
        };
        if report.is_cubic && report.is_connected && report.is_bridgeless && girth_ok {
            return Some(graph);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::isomorphic;

    #[test]
    fn catalog_certificates() {
        let heawood = named("heawood").unwrap();
        assert_eq!(heawood.graph.vertex_count(), 14);
        assert!(heawood.report.is_cubic);
        assert_eq!(heawood.report.girth, Some(6));
        assert_eq!(heawood.report.odd_girth, None, "Heawood is bipartite");

        let mcgee = named("mcgee").unwrap();
        assert_eq!(mcgee.graph.vertex_count(), 24);
        assert!(mcgee.report.is_cubic);
        assert_eq!(mcgee.report.girth, Some(7));

        let petersen = named("petersen").unwrap();
        assert_eq!(petersen.report.girth, Some(5));

        let pappus = named("pappus").unwrap();
        assert_eq!(pappus.graph.vertex_count(), 18);
        assert!(pappus.report.is_cubic);
        assert_eq!(pappus.report.girth, Some(6));
        assert_eq!(pappus.report.odd_girth, None);

        let desargues = named("desargues").unwrap();
        assert_eq!(desargues.graph.vertex_count(), 20);
        assert!(desargues.report.is_cubic);
        assert_eq!(desargues.report.girth, Some(6));
        assert_eq!(desargues.report.odd_girth, None);

        for name in NAMED_GRAPHS {
            let g = named(name).unwrap();
            assert!(g.report.is_connected);
            assert!(g.report.is_bridgeless);
        }
        assert!(matches!(
            named("petersen2"),
            Err(GeneratorError::UnknownName(_))
        ));
    }

    #[test]
    fn gp_5_2_is_the_petersen_graph() {
        let gp = generalized_petersen(5, 2).unwrap();
        let petersen = named("petersen").unwrap().graph;
        assert!(isomorphic(&gp, &petersen).unwrap());
        assert_eq!(analyze(&gp).girth, Some(5));
    }

    #[test]
    fn gp_4_1_is_the_cube() {
        let cube = generalized_petersen(4, 1).unwrap();
        let report = analyze(&cube);
        assert_eq!(cube.vertex_count(), 8);
        assert!(report.is_cubic);
        assert_eq!(report.girth, Some(4));
    }

    #[test]
    fn gp_3_1_is_the_triangular_prism() {
        let prism = generalized_petersen(3, 1).unwrap();
        let report = analyze(&prism);
        assert!(report.is_cubic);
        assert_eq!(report.girth, Some(3));
    }

    #[test]
    fn gp_rejects_bad_parameters() {
        assert!(generalized_petersen(2, 1).is_err());
        assert!(generalized_petersen(5, 0).is_err());
        assert!(generalized_petersen(6, 3).is_err());
    }

    #[test]
    fn random_generator_certifies_and_is_deterministic() {
        let a = random_cubic_bridgeless(14, 6, 7).expect("girth-6 graph on 14 vertices");
        let b = random_cubic_bridgeless(14, 6, 7).unwrap();
        assert_eq!(a, b, "same seed gives the identical graph");
        let report = analyze(&a);
        assert!(report.is_cubic && report.is_bridgeless && report.is_connected);
        assert!(report.girth.unwrap() >= 6);
    }

    #[test]
    fn no_cubic_girth_six_graph_on_four_vertices() {
        // K4 is the only cubic graph on 4 vertices; its girth is 3.
        assert_eq!(
            random_cubic_bridgeless_with_budget(4, 6, 1, 2_000),
            None
        );
        assert_eq!(random_cubic_bridgeless(5, 3, 1), None, "odd n");
    }
}
