//! Red/blue edge colourings, the NAC property, and exhaustive enumeration.
//!
//! A NAC-colouring ("no almost cycles") is a surjective two-colouring of
//! the edges in which every cycle is monochromatic or carries at least two
//! edges of each colour. The check used everywhere is the component
//! characterisation: an almost cycle exists iff some edge joins two
//! vertices lying in one component of the opposite colour's subgraph. The
//! definition-level cycle enumeration lives in the test suite as an
//! independent oracle.

use std::collections::VecDeque;

use thiserror::Error;

use crate::dsu::UnionFind;
use crate::graph::SymmetricGraph;
use crate::json::ColouringDoc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        }
    }
}

/// Total red/blue assignment on the edges of one graph, indexed by the
/// graph's canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    colours: Vec<Colour>,
}

impl EdgeColouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        EdgeColouring { colours }
    }

    pub fn uniform(len: usize, colour: Colour) -> Self {
        EdgeColouring { colours: vec![colour; len] }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colour(&self, edge: usize) -> Colour {
        self.colours[edge]
    }

    pub fn set(&mut self, edge: usize, colour: Colour) {
        self.colours[edge] = colour;
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    /// Every edge's colour flipped; an involution.
    pub fn conjugate(&self) -> EdgeColouring {
        EdgeColouring { colours: self.colours.iter().map(|c| c.other()).collect() }
    }

    pub fn is_surjective(&self) -> bool {
        self.colours.contains(&Colour::Red) && self.colours.contains(&Colour::Blue)
    }

    /// Key for the canonical output order: the red-edge bitmask read along
    /// the edge order, compared lexicographically.
    pub fn red_mask(&self) -> Vec<bool> {
        self.colours.iter().map(|&c| c == Colour::Red).collect()
    }

    pub fn edges_of(&self, colour: Colour) -> impl Iterator<Item = usize> + '_ {
        self.colours
            .iter()
            .enumerate()
            .filter(move |&(_, &c)| c == colour)
            .map(|(e, _)| e)
    }

    pub fn to_doc(&self, g: &SymmetricGraph) -> ColouringDoc {
        let mut red = Vec::new();
        let mut blue = Vec::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let pair = (g.name(u).to_string(), g.name(v).to_string());
            match self.colours[e] {
                Colour::Red => red.push(pair),
                Colour::Blue => blue.push(pair),
            }
        }
        ColouringDoc { red, blue }
    }

    /// Parse a colouring against `g`; the two lists must partition E(G).
    pub fn from_doc(g: &SymmetricGraph, doc: &ColouringDoc) -> Result<Self, ColouringError> {
        let mut colours: Vec<Option<Colour>> = vec![None; g.edge_count()];
        for (colour, list) in [(Colour::Red, &doc.red), (Colour::Blue, &doc.blue)] {
            for (a, b) in list {
                let u = g
                    .vertex_index(a)
                    .ok_or_else(|| ColouringError::UnknownVertex { name: a.clone() })?;
                let v = g
                    .vertex_index(b)
                    .ok_or_else(|| ColouringError::UnknownVertex { name: b.clone() })?;
                let e = g.edge_id(u, v).ok_or_else(|| ColouringError::UnknownEdge {
                    edge: (a.clone(), b.clone()),
                })?;
                if colours[e].is_some() {
                    return Err(ColouringError::EdgeListedTwice { edge: (a.clone(), b.clone()) });
                }
                colours[e] = Some(colour);
            }
        }
        let colours = colours
            .into_iter()
            .enumerate()
            .map(|(e, c)| {
                c.ok_or_else(|| {
                    let (u, v) = g.edges()[e];
                    ColouringError::EdgeNotColoured {
                        edge: (g.name(u).to_string(), g.name(v).to_string()),
                    }
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EdgeColouring { colours })
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ColouringError {
    #[error("colouring references unknown vertex {name:?}")]
    UnknownVertex { name: String },
    #[error("colouring references non-edge ({}, {})", edge.0, edge.1)]
    UnknownEdge { edge: (String, String) },
    #[error("edge ({}, {}) coloured twice", edge.0, edge.1)]
    EdgeListedTwice { edge: (String, String) },
    #[error("edge ({}, {}) missing from the colouring", edge.0, edge.1)]
    EdgeNotColoured { edge: (String, String) },
}

/// Connected components of the one-colour subgraph; isolated vertices are
/// singleton components, so the classes partition V(G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonochromaticComponents {
    pub colour: Colour,
    /// Sorted by smallest member; members sorted.
    pub classes: Vec<Vec<usize>>,
    /// `component_of[v]` indexes into `classes`.
    pub component_of: Vec<usize>,
}

pub fn monochromatic_components(
    g: &SymmetricGraph,
    c: &EdgeColouring,
    colour: Colour,
) -> MonochromaticComponents {
    assert_eq!(c.len(), g.edge_count(), "colouring is total on E(G)");
    let mut uf = UnionFind::new(g.vertex_count());
    for e in c.edges_of(colour) {
        let (u, v) = g.edges()[e];
        uf.union(u, v);
    }
    let ids = uf.component_ids();
    let count = ids.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); count];
    for (v, &id) in ids.iter().enumerate() {
        classes[id].push(v);
    }
    // ids are assigned by first appearance, so classes are already ordered
    // by smallest member and each class is sorted.
    MonochromaticComponents { colour, classes, component_of: ids }
}

/// Why a colouring is not a NAC-colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NacFailure {
    NotSurjective { missing: Colour },
    /// `edge` (coloured `colour`) closes the opposite-coloured `path`,
    /// giving a cycle with exactly one `colour` edge.
    AlmostCycle { colour: Colour, edge: (usize, usize), path: Vec<usize> },
}

/// Component-characterisation NAC check with a witness on failure.
pub fn check_nac(g: &SymmetricGraph, c: &EdgeColouring) -> Result<(), NacFailure> {
    assert_eq!(c.len(), g.edge_count(), "colouring is total on E(G)");
    for colour in [Colour::Red, Colour::Blue] {
        if !c.colours().contains(&colour) {
            return Err(NacFailure::NotSurjective { missing: colour });
        }
    }
    let comp = [
        monochromatic_components(g, c, Colour::Red),
        monochromatic_components(g, c, Colour::Blue),
    ];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let colour = c.colour(e);
        let opposite = &comp[match colour {
            Colour::Red => 1,
            Colour::Blue => 0,
        }];
        if opposite.component_of[u] == opposite.component_of[v] {
            let path = monochromatic_path(g, c, colour.other(), u, v)
                .expect("endpoints share an opposite-coloured component");
            return Err(NacFailure::AlmostCycle { colour, edge: (u, v), path });
        }
    }
    Ok(())
}

pub fn is_nac(g: &SymmetricGraph, c: &EdgeColouring) -> bool {
    check_nac(g, c).is_ok()
}

/// BFS path from `from` to `to` using only edges of `colour`.
fn monochromatic_path(
    g: &SymmetricGraph,
    c: &EdgeColouring,
    colour: Colour,
    from: usize,
    to: usize,
) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    prev[from] = from;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut w = to;
            while w != from {
                w = prev[w];
                path.push(w);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(v) {
            let e = g.edge_id(v, w).expect("neighbor");
            if c.colour(e) == colour && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Enumeration limits; exceeding one is a hard refusal, never silent
/// truncation.
#[derive(Clone, Copy, Debug)]
pub struct SearchBounds {
    pub max_edges: usize,
    pub max_orbits: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_edges: 30, max_orbits: 30 }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("graph has {edges} edges, above the enumeration bound {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("graph has {orbits} edge orbits, above the enumeration bound {limit}")]
    TooManyOrbits { orbits: usize, limit: usize },
}

/// All NAC-colourings of `g`, in lexicographic red-mask order. With
/// `up_to_conjugation`, only the lexicographically smaller member of each
/// conjugate pair is kept.
pub fn enumerate_nac(
    g: &SymmetricGraph,
    up_to_conjugation: bool,
    bounds: &SearchBounds,
) -> Result<Vec<EdgeColouring>, EnumerationError> {
    if g.edge_count() > bounds.max_edges {
        return Err(EnumerationError::TooManyEdges {
            edges: g.edge_count(),
            limit: bounds.max_edges,
        });
    }
    let decisions: Vec<Vec<usize>> = spanning_tree_first_order(g).iter().map(|&e| vec![e]).collect();
    let mut out = search_colourings(g, &decisions, |_| true);
    finalise(&mut out, up_to_conjugation);
    Ok(out)
}

/// Edge ids ordered so that a spanning forest (BFS from the smallest vertex
/// of each component) comes first; assigning tree edges never closes a
/// cycle, so pruning starts exactly at the non-tree edges.
pub(crate) fn spanning_tree_first_order(g: &SymmetricGraph) -> Vec<usize> {
    let mut in_tree = vec![false; g.edge_count()];
    let mut visited = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for root in 0..g.vertex_count() {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    let e = g.edge_id(v, w).expect("neighbor");
                    in_tree[e] = true;
                    order.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    for e in 0..g.edge_count() {
        if !in_tree[e] {
            order.push(e);
        }
    }
    order
}

/// Shared branch-and-prune search over groups of edges coloured together.
///
/// A partial assignment is pruned as soon as some assigned edge joins two
/// vertices already connected in the opposite colour (a closed almost
/// cycle). Complete surjective assignments that also pass `accept` are
/// collected. Prefixes of the decision sequence are explored in parallel
/// when the `parallel` feature is enabled.
pub(crate) fn search_colourings<F>(
    g: &SymmetricGraph,
    decisions: &[Vec<usize>],
    accept: F,
) -> Vec<EdgeColouring>
where
    F: Fn(&EdgeColouring) -> bool + Sync,
{
    if decisions.is_empty() {
        return Vec::new();
    }
    // Split depth: enough prefixes to feed the pool, small enough that
    // replaying them is free.
    let split = decisions.len().min(8);
    let mut prefixes = Vec::new();
    let mut state = SearchState::new(g);
    collect_prefixes(g, decisions, split, &mut state, &mut Vec::new(), &mut prefixes);

    let results = crate::par::map_vec(&prefixes, |prefix| {
        let mut state = SearchState::new(g);
        for (d, &colour) in prefix.iter().enumerate() {
            let ok = state.apply(g, &decisions[d], colour);
            debug_assert!(ok, "collected prefixes are viable");
        }
        let mut found = Vec::new();
        dfs(g, decisions, prefix.len(), &mut state, &accept, &mut found);
        found
    });
    results.into_iter().flatten().collect()
}

fn collect_prefixes(
    g: &SymmetricGraph,
    decisions: &[Vec<usize>],
    split: usize,
    state: &mut SearchState,
    current: &mut Vec<Colour>,
    out: &mut Vec<Vec<Colour>>,
) {
    if current.len() == split {
        out.push(current.clone());
        return;
    }
    let d = current.len();
    for colour in [Colour::Blue, Colour::Red] {
        let mark = state.mark();
        if state.apply(g, &decisions[d], colour) {
            current.push(colour);
            collect_prefixes(g, decisions, split, state, current, out);
            current.pop();
        }
        state.rollback(mark);
    }
}

fn dfs<F>(
    g: &SymmetricGraph,
    decisions: &[Vec<usize>],
    depth: usize,
    state: &mut SearchState,
    accept: &F,
    out: &mut Vec<EdgeColouring>,
) where
    F: Fn(&EdgeColouring) -> bool + Sync,
{
    if depth == decisions.len() {
        if state.assigned[0].is_empty() || state.assigned[1].is_empty() {
            return;
        }
        let colouring = EdgeColouring::new(
            state.colours.iter().map(|c| c.expect("assignment is total")).collect(),
        );
        if accept(&colouring) {
            out.push(colouring);
        }
        return;
    }
    for colour in [Colour::Blue, Colour::Red] {
        let mark = state.mark();
        if state.apply(g, &decisions[depth], colour) {
            dfs(g, decisions, depth + 1, state, accept, out);
        }
        state.rollback(mark);
    }
}

struct SearchState {
    colours: Vec<Option<Colour>>,
    dsu: [UnionFind; 2],
    assigned: [Vec<usize>; 2],
}

fn slot(colour: Colour) -> usize {
    match colour {
        Colour::Red => 0,
        Colour::Blue => 1,
    }
}

impl SearchState {
    fn new(g: &SymmetricGraph) -> Self {
        SearchState {
            colours: vec![None; g.edge_count()],
            dsu: [UnionFind::new(g.vertex_count()), UnionFind::new(g.vertex_count())],
            assigned: [Vec::new(), Vec::new()],
        }
    }

    fn mark(&self) -> (usize, usize, usize, usize) {
        (
            self.dsu[0].mark(),
            self.dsu[1].mark(),
            self.assigned[0].len(),
            self.assigned[1].len(),
        )
    }

    fn rollback(&mut self, mark: (usize, usize, usize, usize)) {
        self.dsu[0].rollback(mark.0);
        self.dsu[1].rollback(mark.1);
        for side in [0, 1] {
            let keep = if side == 0 { mark.2 } else { mark.3 };
            while self.assigned[side].len() > keep {
                let e = self.assigned[side].pop().expect("assigned non-empty");
                self.colours[e] = None;
            }
        }
    }

    /// Colour every edge of `group`; false (state only partially advanced,
    /// caller must roll back) when a closed almost cycle appears.
    fn apply(&mut self, g: &SymmetricGraph, group: &[usize], colour: Colour) -> bool {
        let s = slot(colour);
        let o = slot(colour.other());
        for &e in group {
            let (u, v) = g.edges()[e];
            // the new edge itself closing an opposite-coloured path
            if self.dsu[o].same(u, v) {
                return false;
            }
            self.colours[e] = Some(colour);
            self.assigned[s].push(e);
            self.dsu[s].union(u, v);
        }
        // opposite-coloured edges whose endpoints the new unions connected
        for &f in &self.assigned[o] {
            let (u, v) = g.edges()[f];
            if self.dsu[s].same(u, v) {
                return false;
            }
        }
        true
    }
}

/// Canonical order plus optional conjugation dedup.
pub(crate) fn finalise(out: &mut Vec<EdgeColouring>, up_to_conjugation: bool) {
    if up_to_conjugation {
        out.retain(|c| c.red_mask() < c.conjugate().red_mask());
    }
    out.sort_by(|a, b| a.red_mask().cmp(&b.red_mask()));
}
