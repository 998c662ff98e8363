//! Graphs with a cyclic symmetry: representation, validation and orbit
//! machinery.
//!
//! A graph is Cn-symmetric when a generator permutation `omega` of order
//! exactly `n` acts on it by automorphisms such that every vertex fixed by
//! some non-identity power is fixed by all of them, and the fixed vertices
//! form an independent set.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::json::{GraphDoc, IssueDoc, ValidationDoc};

/// A validated Cn-symmetric graph.
///
/// Vertices are referred to by dense indices into the sorted name list;
/// edges by indices into the canonical (smaller endpoint first, sorted)
/// edge list. Immutable after construction, so it can be shared freely
/// between worker threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricGraph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    n: usize,
    omega: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    edge_lookup: HashMap<(usize, usize), usize>,
}

/// Orbit partition of vertices or edges under the cyclic action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Orbit classes; each starts at its smallest member and follows the
    /// action, so `classes[c][i]` is the i-th image of the representative.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[x]` is the index into `classes` containing x.
    pub class_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }
}

/// A structural problem: the input is not even a well-formed simple graph
/// with a candidate permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuralIssue {
    SymmetryOrderTooSmall { n: usize },
    DuplicateVertex { name: String },
    UnknownEndpoint { edge: (String, String), endpoint: String },
    Loop { vertex: String },
    DuplicateEdge { edge: (String, String) },
    OmegaMissing { vertex: String },
    OmegaUnknownVertex { name: String },
    OmegaUnknownImage { vertex: String, image: String },
    OmegaNotInjective { image: String },
}

/// A violated symmetry invariant of an otherwise well-formed input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetryIssue {
    /// The permutation's order differs from the declared n.
    OrderMismatch { expected: usize, actual: usize },
    /// An edge whose image under omega is not an edge.
    EdgeNotPreserved { edge: (String, String), image: (String, String) },
    /// A vertex fixed by some proper power of omega but not by omega itself.
    PartiallyInvariantNotInvariant { vertex: String, period: usize },
    /// Two invariant vertices joined by an edge.
    AdjacentInvariantVertices { edge: (String, String) },
}

impl fmt::Display for StructuralIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructuralIssue::SymmetryOrderTooSmall { n } => {
                write!(f, "symmetry order n must be at least 2, got {n}")
            }
            StructuralIssue::DuplicateVertex { name } => {
                write!(f, "vertex {name:?} declared more than once")
            }
            StructuralIssue::UnknownEndpoint { edge, endpoint } => {
                write!(f, "edge ({}, {}) references undeclared vertex {endpoint:?}", edge.0, edge.1)
            }
            StructuralIssue::Loop { vertex } => write!(f, "loop at vertex {vertex:?}"),
            StructuralIssue::DuplicateEdge { edge } => {
                write!(f, "edge ({}, {}) listed more than once", edge.0, edge.1)
            }
            StructuralIssue::OmegaMissing { vertex } => {
                write!(f, "omega gives no image for vertex {vertex:?}")
            }
            StructuralIssue::OmegaUnknownVertex { name } => {
                write!(f, "omega maps undeclared vertex {name:?}")
            }
            StructuralIssue::OmegaUnknownImage { vertex, image } => {
                write!(f, "omega maps {vertex:?} to undeclared vertex {image:?}")
            }
            StructuralIssue::OmegaNotInjective { image } => {
                write!(f, "omega maps two vertices to {image:?}")
            }
        }
    }
}

impl fmt::Display for SymmetryIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryIssue::OrderMismatch { expected, actual } => {
                write!(f, "order of omega is {actual}, not {expected}")
            }
            SymmetryIssue::EdgeNotPreserved { edge, image } => write!(
                f,
                "omega is not an automorphism: image ({}, {}) of edge ({}, {}) is not an edge",
                image.0, image.1, edge.0, edge.1
            ),
            SymmetryIssue::PartiallyInvariantNotInvariant { vertex, period } => write!(
                f,
                "vertex {vertex:?} is fixed by omega^{period} but not by omega"
            ),
            SymmetryIssue::AdjacentInvariantVertices { edge } => write!(
                f,
                "invariant vertices {} and {} are adjacent",
                edge.0, edge.1
            ),
        }
    }
}

/// Full diagnostics of [`validate_graph_doc`]; empty lists mean the input
/// is a valid Cn-symmetric graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub structural: Vec<StructuralIssue>,
    pub symmetry: Vec<SymmetryIssue>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid Cn-symmetric graph");
        }
        let mut first = true;
        for issue in &self.structural {
            if !std::mem::take(&mut first) {
                writeln!(f)?;
            }
            write!(f, "structural: {issue}")?;
        }
        for issue in &self.symmetry {
            if !std::mem::take(&mut first) {
                writeln!(f)?;
            }
            write!(f, "violation: {issue}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.structural.is_empty() && self.symmetry.is_empty()
    }

    pub fn to_doc(&self) -> ValidationDoc {
        ValidationDoc {
            ok: self.is_valid(),
            structural_errors: self
                .structural
                .iter()
                .map(|i| IssueDoc { kind: issue_kind_structural(i).to_string(), detail: i.to_string() })
                .collect(),
            violations: self
                .symmetry
                .iter()
                .map(|i| IssueDoc { kind: issue_kind_symmetry(i).to_string(), detail: i.to_string() })
                .collect(),
        }
    }
}

fn issue_kind_structural(i: &StructuralIssue) -> &'static str {
    match i {
        StructuralIssue::SymmetryOrderTooSmall { .. } => "symmetry_order_too_small",
        StructuralIssue::DuplicateVertex { .. } => "duplicate_vertex",
        StructuralIssue::UnknownEndpoint { .. } => "unknown_endpoint",
        StructuralIssue::Loop { .. } => "loop",
        StructuralIssue::DuplicateEdge { .. } => "duplicate_edge",
        StructuralIssue::OmegaMissing { .. } => "omega_missing",
        StructuralIssue::OmegaUnknownVertex { .. } => "omega_unknown_vertex",
        StructuralIssue::OmegaUnknownImage { .. } => "omega_unknown_image",
        StructuralIssue::OmegaNotInjective { .. } => "omega_not_injective",
    }
}

fn issue_kind_symmetry(i: &SymmetryIssue) -> &'static str {
    match i {
        SymmetryIssue::OrderMismatch { .. } => "order_mismatch",
        SymmetryIssue::EdgeNotPreserved { .. } => "edge_not_preserved",
        SymmetryIssue::PartiallyInvariantNotInvariant { .. } => "partially_invariant_not_invariant",
        SymmetryIssue::AdjacentInvariantVertices { .. } => "adjacent_invariant_vertices",
    }
}

fn normalise(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Check every invariant of a Cn-symmetric graph and report all failures,
/// not just the first. Symmetry checks run only when the input is
/// structurally sound enough for them to be well defined.
pub fn validate_graph_doc(doc: &GraphDoc) -> ValidationReport {
    let mut report = ValidationReport::default();

    if doc.n < 2 {
        report.structural.push(StructuralIssue::SymmetryOrderTooSmall { n: doc.n });
    }

    let mut names: Vec<String> = doc.vertices.clone();
    names.sort();
    for pair in names.windows(2) {
        if pair[0] == pair[1] {
            report
                .structural
                .push(StructuralIssue::DuplicateVertex { name: pair[0].clone() });
        }
    }
    names.dedup();
    let index: HashMap<&str, usize> =
        names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = HashSet::new();
    for (a, b) in &doc.edges {
        let norm = normalise(a, b);
        let mut ok = true;
        for endpoint in [a, b] {
            if !index.contains_key(endpoint.as_str()) {
                report.structural.push(StructuralIssue::UnknownEndpoint {
                    edge: norm.clone(),
                    endpoint: endpoint.clone(),
                });
                ok = false;
            }
        }
        if a == b {
            report.structural.push(StructuralIssue::Loop { vertex: a.clone() });
            ok = false;
        }
        if !seen.insert(norm.clone()) {
            report.structural.push(StructuralIssue::DuplicateEdge { edge: norm.clone() });
            ok = false;
        }
        if ok {
            let (i, j) = (index[a.as_str()], index[b.as_str()]);
            edges.push((i.min(j), i.max(j)));
        }
    }

    let mut omega = vec![usize::MAX; names.len()];
    let mut omega_ok = true;
    let mut hit = vec![false; names.len()];
    for (v, w) in &doc.omega {
        let Some(&vi) = index.get(v.as_str()) else {
            report.structural.push(StructuralIssue::OmegaUnknownVertex { name: v.clone() });
            omega_ok = false;
            continue;
        };
        let Some(&wi) = index.get(w.as_str()) else {
            report.structural.push(StructuralIssue::OmegaUnknownImage {
                vertex: v.clone(),
                image: w.clone(),
            });
            omega_ok = false;
            continue;
        };
        if hit[wi] {
            report.structural.push(StructuralIssue::OmegaNotInjective { image: w.clone() });
            omega_ok = false;
        }
        hit[wi] = true;
        omega[vi] = wi;
    }
    for (vi, &img) in omega.iter().enumerate() {
        if img == usize::MAX {
            report
                .structural
                .push(StructuralIssue::OmegaMissing { vertex: names[vi].clone() });
            omega_ok = false;
        }
    }

    if !report.structural.is_empty() || !omega_ok {
        return report;
    }

    // Symmetry invariants on the now well-formed (names, edges, omega).
    let name_of = |v: usize| names[v].clone();
    let edge_names = |&(u, v): &(usize, usize)| normalise(&names[u], &names[v]);

    // Order of omega = lcm of its cycle lengths.
    let mut period = vec![0usize; names.len()];
    for v in 0..names.len() {
        let mut w = omega[v];
        let mut len = 1;
        while w != v {
            w = omega[w];
            len += 1;
        }
        period[v] = len;
    }
    let order = period.iter().copied().fold(1usize, lcm);
    if order != doc.n {
        report
            .symmetry
            .push(SymmetryIssue::OrderMismatch { expected: doc.n, actual: order });
    }

    let edge_set: HashSet<(usize, usize)> = edges.iter().copied().collect();
    for &(u, v) in &edges {
        let (iu, iv) = (omega[u], omega[v]);
        let image = (iu.min(iv), iu.max(iv));
        if !edge_set.contains(&image) {
            report.symmetry.push(SymmetryIssue::EdgeNotPreserved {
                edge: edge_names(&(u, v)),
                image: (name_of(image.0), name_of(image.1)),
            });
        }
    }

    for v in 0..names.len() {
        if period[v] > 1 && period[v] < doc.n {
            report.symmetry.push(SymmetryIssue::PartiallyInvariantNotInvariant {
                vertex: names[v].clone(),
                period: period[v],
            });
        }
    }

    for &(u, v) in &edges {
        if omega[u] == u && omega[v] == v {
            report
                .symmetry
                .push(SymmetryIssue::AdjacentInvariantVertices { edge: edge_names(&(u, v)) });
        }
    }

    report
}

impl SymmetricGraph {
    /// Validate `doc` and build the graph; a non-empty report is returned
    /// as the error.
    pub fn from_doc(doc: &GraphDoc) -> Result<Self, ValidationReport> {
        let report = validate_graph_doc(doc);
        if !report.is_valid() {
            return Err(report);
        }
        let mut names = doc.vertices.clone();
        names.sort();
        let index: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut edges: Vec<(usize, usize)> = doc
            .edges
            .iter()
            .map(|(a, b)| {
                let (i, j) = (index[a.as_str()], index[b.as_str()]);
                (i.min(j), i.max(j))
            })
            .collect();
        edges.sort_unstable();
        let mut omega = vec![0usize; names.len()];
        for (v, w) in &doc.omega {
            omega[index[v.as_str()]] = index[w.as_str()];
        }
        Ok(Self::from_indexed(names, edges, doc.n, omega))
    }

    /// Convenience constructor from string parts; validates.
    pub fn build(
        n: usize,
        vertices: &[&str],
        edges: &[(&str, &str)],
        omega: &[(&str, &str)],
    ) -> Result<Self, ValidationReport> {
        let doc = GraphDoc {
            n,
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            omega: omega
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect::<BTreeMap<_, _>>(),
        };
        Self::from_doc(&doc)
    }

    fn from_indexed(
        names: Vec<String>,
        edges: Vec<(usize, usize)>,
        n: usize,
        omega: Vec<usize>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); names.len()];
        let mut edge_lookup = HashMap::new();
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_lookup.insert((u, v), id);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        SymmetricGraph { names, edges, n, omega, adjacency, edge_lookup }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|x| x.as_str().cmp(name)).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn omega(&self, v: usize) -> usize {
        self.omega[v]
    }

    /// Apply omega^k.
    pub fn omega_pow(&self, k: usize, v: usize) -> usize {
        let mut w = v;
        for _ in 0..(k % self.n) {
            w = self.omega[w];
        }
        w
    }

    pub fn is_invariant(&self, v: usize) -> bool {
        self.omega[v] == v
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Image of an edge under omega, as an edge id.
    pub fn omega_edge(&self, edge: usize) -> usize {
        let (u, v) = self.edges[edge];
        self.edge_id(self.omega[u], self.omega[v])
            .expect("omega is an automorphism of a validated graph")
    }

    pub fn is_complete(&self) -> bool {
        let v = self.vertex_count();
        self.edge_count() == v * (v.saturating_sub(1)) / 2
    }

    /// All non-adjacent unordered pairs of distinct vertices.
    pub fn non_adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in (u + 1)..self.vertex_count() {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with `pairs` (and their whole omega-orbits) added as edges.
    /// The caller guarantees the additions keep the graph Cn-symmetric;
    /// this is re-checked in debug builds.
    pub fn with_added_edges(&self, pairs: &[(usize, usize)]) -> SymmetricGraph {
        let mut edges = self.edges.clone();
        let mut have: HashSet<(usize, usize)> = edges.iter().copied().collect();
        for &(u, v) in pairs {
            let (mut a, mut b) = (u, v);
            for _ in 0..self.n {
                let key = (a.min(b), a.max(b));
                if have.insert(key) {
                    edges.push(key);
                }
                a = self.omega[a];
                b = self.omega[b];
            }
        }
        edges.sort_unstable();
        let g = SymmetricGraph::from_indexed(self.names.clone(), edges, self.n, self.omega.clone());
        debug_assert!(validate_graph_doc(&g.to_doc()).is_valid());
        g
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            n: self.n,
            vertices: self.names.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| (self.names[u].clone(), self.names[v].clone()))
                .collect(),
            omega: (0..self.vertex_count())
                .map(|v| (self.names[v].clone(), self.names[self.omega[v]].clone()))
                .collect(),
        }
    }

    /// Orbit partition of the vertex set under omega.
    pub fn vertex_orbits(&self) -> OrbitPartition {
        let mut class_of = vec![usize::MAX; self.vertex_count()];
        let mut classes = Vec::new();
        for v in 0..self.vertex_count() {
            if class_of[v] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            let mut w = v;
            loop {
                class_of[w] = id;
                class.push(w);
                w = self.omega[w];
                if w == v {
                    break;
                }
            }
            classes.push(class);
        }
        OrbitPartition { classes, class_of }
    }

    /// Orbit partition of the edge set under e -> omega(e).
    pub fn edge_orbits(&self) -> OrbitPartition {
        let mut class_of = vec![usize::MAX; self.edge_count()];
        let mut classes = Vec::new();
        for e in 0..self.edge_count() {
            if class_of[e] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            let mut f = e;
            loop {
                class_of[f] = id;
                class.push(f);
                f = self.omega_edge(f);
                if f == e {
                    break;
                }
            }
            classes.push(class);
        }
        OrbitPartition { classes, class_of }
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
