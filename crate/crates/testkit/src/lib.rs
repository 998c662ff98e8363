//! Test support: the shipped fixture corpus, definition-level brute-force
//! oracles, and a deterministic random-graph generator.
//!
//! The oracles here deliberately avoid the library's component-based
//! checking: NAC-ness is decided by enumerating every cycle of the graph
//! (edge subsets that form a single closed walk) and applying the
//! definition to each, so the fast implementation can be cross-checked
//! against an independent route.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use symflex_core::colouring::{Colour, EdgeColouring};
use symflex_core::json::{ColouringDoc, GraphDoc};
use symflex_core::SymmetricGraph;

pub mod corpus;

/// Workspace-level fixtures directory.
pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

pub fn load_graph_doc(name: &str) -> GraphDoc {
    let path = fixture_path(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read fixture {}: {e}", path.display()));
    serde_json::from_str(&text)
        .unwrap_or_else(|e| panic!("fixture {} is not a graph document: {e}", path.display()))
}

pub fn load_graph(name: &str) -> SymmetricGraph {
    SymmetricGraph::from_doc(&load_graph_doc(name))
        .unwrap_or_else(|report| panic!("fixture {name} failed validation: {report:?}"))
}

pub fn load_colouring(g: &SymmetricGraph, name: &str) -> EdgeColouring {
    let path = fixture_path(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read fixture {}: {e}", path.display()));
    let doc: ColouringDoc = serde_json::from_str(&text)
        .unwrap_or_else(|e| panic!("fixture {} is not a colouring document: {e}", path.display()));
    EdgeColouring::from_doc(g, &doc)
        .unwrap_or_else(|e| panic!("fixture {name} does not colour the graph: {e}"))
}

/// Every cycle of `g`, as a sorted edge-id list. A subset of edges is a
/// cycle iff every touched vertex has degree 2 in it and the subset is
/// connected; enumeration is over all 2^|E| subsets, so this is for small
/// graphs only.
pub fn all_cycles(g: &SymmetricGraph) -> Vec<Vec<usize>> {
    let m = g.edge_count();
    assert!(m <= 20, "cycle enumeration is exponential; got {m} edges");
    let mut cycles = Vec::new();
    'subset: for mask in 1u32..(1 << m) {
        let mut degree = vec![0usize; g.vertex_count()];
        let mut members = Vec::new();
        for e in 0..m {
            if mask & (1 << e) != 0 {
                let (u, v) = g.edges()[e];
                degree[u] += 1;
                degree[v] += 1;
                members.push(e);
            }
        }
        for &d in &degree {
            if d != 0 && d != 2 {
                continue 'subset;
            }
        }
        // connectivity over the touched vertices
        let start = g.edges()[members[0]].0;
        let mut stack = vec![start];
        let mut seen = vec![false; g.vertex_count()];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &e in &members {
                let (a, b) = g.edges()[e];
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if degree.iter().enumerate().all(|(v, &d)| d == 0 || seen[v]) {
            cycles.push(members);
        }
    }
    cycles
}

/// Definition-level NAC check: surjective, and every cycle either
/// monochromatic or with at least two edges of each colour.
pub fn is_nac_by_cycles(c: &EdgeColouring, cycles: &[Vec<usize>]) -> bool {
    if !c.is_surjective() {
        return false;
    }
    for cycle in cycles {
        let red = cycle.iter().filter(|&&e| c.colour(e) == Colour::Red).count();
        let blue = cycle.len() - red;
        if !(red == 0 || blue == 0 || (red >= 2 && blue >= 2)) {
            return false;
        }
    }
    true
}

/// All total colourings of `g`'s edges, in red-mask order.
pub fn all_colourings(g: &SymmetricGraph) -> Vec<EdgeColouring> {
    let m = g.edge_count();
    assert!(m <= 20, "exhaustive colouring space is exponential; got {m} edges");
    (0u32..(1 << m))
        .map(|mask| {
            EdgeColouring::new(
                (0..m)
                    .map(|e| if mask & (1 << (m - 1 - e)) != 0 { Colour::Red } else { Colour::Blue })
                    .collect(),
            )
        })
        .collect()
}

/// Brute-force NAC enumeration straight from the definition.
pub fn brute_force_nac(g: &SymmetricGraph) -> Vec<EdgeColouring> {
    let cycles = all_cycles(g);
    all_colourings(g)
        .into_iter()
        .filter(|c| is_nac_by_cycles(c, &cycles))
        .collect()
}

/// Deterministic pseudo-random stream (splitmix64).
pub struct Rng(pub u64);

impl Rng {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// A deterministic corpus of small C2-symmetric graphs: `pairs` free orbit
/// pairs, random edges added together with their omega images until
/// `max_edges` would be exceeded. Every graph validates and has at most
/// `max_edges` edges.
pub fn random_symmetric_corpus(count: usize, max_edges: usize, seed: u64) -> Vec<SymmetricGraph> {
    let mut rng = Rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let pairs = 2 + rng.below(3); // 4..=6 vertices
        let vertex_count = 2 * pairs;
        let names: Vec<String> = (0..vertex_count).map(|i| format!("v{i}")).collect();
        let omega: Vec<usize> =
            (0..vertex_count).map(|i| if i % 2 == 0 { i + 1 } else { i - 1 }).collect();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let target = 3 + rng.below(max_edges.saturating_sub(2));
        for _ in 0..3 * target {
            if edges.len() >= max_edges {
                break;
            }
            let a = rng.below(vertex_count);
            let b = rng.below(vertex_count);
            if a == b {
                continue;
            }
            let e = (a.min(b), a.max(b));
            let im = (omega[a].min(omega[b]), omega[a].max(omega[b]));
            if edges.contains(&e) {
                continue;
            }
            let additions = if im == e { 1 } else { 2 };
            if edges.len() + additions > max_edges || edges.len() + additions > target {
                continue;
            }
            edges.push(e);
            if im != e {
                edges.push(im);
            }
        }
        if edges.is_empty() {
            continue;
        }
        let doc = GraphDoc {
            n: 2,
            vertices: names.clone(),
            edges: edges
                .iter()
                .map(|&(u, v)| (names[u].clone(), names[v].clone()))
                .collect(),
            omega: (0..vertex_count)
                .map(|i| (names[i].clone(), names[omega[i]].clone()))
                .collect::<BTreeMap<_, _>>(),
        };
        let g = SymmetricGraph::from_doc(&doc).expect("generated graphs are C2-symmetric");
        out.push(g);
    }
    out
}
