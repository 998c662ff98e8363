//! Programmatic constructors for the shipped fixture corpus. The files
//! under `fixtures/` are generated from these (see the `write_fixtures`
//! example) and tests cross-check the files against them.

use symflex_core::json::{ColouringDoc, GraphDoc};
use symflex_core::SymmetricGraph;

fn graph(n: usize, vertices: &[&str], edges: &[(&str, &str)], omega: &[(&str, &str)]) -> GraphDoc {
    SymmetricGraph::build(n, vertices, edges, omega)
        .unwrap_or_else(|report| panic!("corpus graph invalid: {report:?}"))
        .to_doc()
}

/// Triangle with the 3-fold rotation.
pub fn k3_c3() -> GraphDoc {
    graph(
        3,
        &["1", "2", "3"],
        &[("1", "2"), ("2", "3"), ("1", "3")],
        &[("1", "2"), ("2", "3"), ("3", "1")],
    )
}

/// m-cycle with the full rotation (n = m).
pub fn cycle(m: usize) -> GraphDoc {
    let names: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = (0..m).map(|i| (refs[i], refs[(i + 1) % m])).collect();
    graph(m, &refs, &edges, &edges)
}

/// Hexagon 1..6 with both inscribed triangles 1-3-5 and 2-4-6, 6-fold
/// rotation. (As a graph this is the octahedron.)
pub fn hexagon_triangles_c6() -> GraphDoc {
    graph(
        6,
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("4", "5"),
            ("5", "6"),
            ("6", "1"),
            ("1", "3"),
            ("3", "5"),
            ("5", "1"),
            ("2", "4"),
            ("4", "6"),
            ("6", "2"),
        ],
        &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("6", "1")],
    )
}

const TRIANGLE_RING_BLUE: [(usize, usize); 12] = [
    (1, 9),
    (1, 10),
    (2, 4),
    (2, 5),
    (3, 8),
    (3, 12),
    (4, 5),
    (6, 7),
    (6, 11),
    (7, 11),
    (8, 12),
    (9, 10),
];

const TRIANGLE_RING_RED: [(usize, usize); 12] = [
    (1, 11),
    (1, 12),
    (2, 3),
    (2, 6),
    (3, 6),
    (4, 8),
    (4, 9),
    (5, 7),
    (5, 10),
    (7, 10),
    (8, 9),
    (11, 12),
];

const TRIANGLE_RING_OMEGA: [(usize, usize); 12] = [
    (1, 4),
    (4, 7),
    (7, 3),
    (3, 1),
    (2, 11),
    (11, 8),
    (8, 10),
    (10, 2),
    (5, 6),
    (6, 12),
    (12, 9),
    (9, 5),
];

/// Twelve vertices in four red and four blue triangles, 4-fold rotation;
/// the flexing showcase graph.
pub fn triangle_ring12_c4() -> GraphDoc {
    let names: Vec<String> = (1..=12).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = TRIANGLE_RING_BLUE
        .iter()
        .chain(&TRIANGLE_RING_RED)
        .map(|&(a, b)| (refs[a - 1], refs[b - 1]))
        .collect();
    let omega: Vec<(&str, &str)> =
        TRIANGLE_RING_OMEGA.iter().map(|&(a, b)| (refs[a - 1], refs[b - 1])).collect();
    graph(4, &refs, &edges, &omega)
}

/// The C4-symmetric NAC-colouring of [`triangle_ring12_c4`]: the four
/// linking triangles red, the four seat triangles blue.
pub fn triangle_ring12_c4_colouring() -> ColouringDoc {
    let pair = |&(a, b): &(usize, usize)| {
        let (x, y) = (a.to_string(), b.to_string());
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    };
    let mut red: Vec<(String, String)> = TRIANGLE_RING_RED.iter().map(pair).collect();
    let mut blue: Vec<(String, String)> = TRIANGLE_RING_BLUE.iter().map(pair).collect();
    red.sort();
    blue.sort();
    ColouringDoc { red, blue }
}

fn k44_edges(part_a: [&'static str; 4], part_b: [&'static str; 4]) -> Vec<(&'static str, &'static str)> {
    let mut edges = Vec::new();
    for a in part_a {
        for b in part_b {
            edges.push((a, b));
        }
    }
    edges
}

/// K4,4 with the half-turn of the collinear flexible placement (one part
/// on each of two orthogonal lines through the centre).
pub fn k44_collinear_c2() -> GraphDoc {
    graph(
        2,
        &["1", "2", "3", "4", "5", "6", "7", "8"],
        &k44_edges(["2", "3", "5", "7"], ["1", "4", "6", "8"]),
        &[
            ("1", "8"),
            ("8", "1"),
            ("2", "3"),
            ("3", "2"),
            ("4", "6"),
            ("6", "4"),
            ("5", "7"),
            ("7", "5"),
        ],
    )
}

/// K4,4 with the half-turn of the two-rectangles flexible placement (each
/// part on a rectangle, shared centre).
pub fn k44_rectangles_c2() -> GraphDoc {
    graph(
        2,
        &["1", "2", "3", "4", "5", "6", "7", "8"],
        &k44_edges(["1", "4", "5", "6"], ["2", "3", "7", "8"]),
        &[
            ("1", "5"),
            ("5", "1"),
            ("2", "8"),
            ("8", "2"),
            ("3", "7"),
            ("7", "3"),
            ("4", "6"),
            ("6", "4"),
        ],
    )
}

/// K2,4 with both degree-4 hubs invariant and the leaves in two free
/// orbits. Its symmetric NAC-colouring puts each hub star in one colour,
/// which pins both hubs to the origin in every symmetric placement.
pub fn k24_c2() -> GraphDoc {
    graph(
        2,
        &["a1", "a2", "b1", "b2", "h1", "h2"],
        &[
            ("h1", "a1"),
            ("h1", "a2"),
            ("h1", "b1"),
            ("h1", "b2"),
            ("h2", "a1"),
            ("h2", "a2"),
            ("h2", "b1"),
            ("h2", "b2"),
        ],
        &[
            ("a1", "a2"),
            ("a2", "a1"),
            ("b1", "b2"),
            ("b2", "b1"),
            ("h1", "h1"),
            ("h2", "h2"),
        ],
    )
}

/// The 4-cycle through two invariant hubs: no symmetric NAC-colouring
/// exists and the closure immediately demands the degenerate hub-hub edge.
pub fn k22_hubs_c2() -> GraphDoc {
    graph(
        2,
        &["h1", "h2", "x", "y"],
        &[("h1", "x"), ("h1", "y"), ("h2", "x"), ("h2", "y")],
        &[("h1", "h1"), ("h2", "h2"), ("x", "y"), ("y", "x")],
    )
}

/// An 8-cycle under the half-turn with an invariant hub tethered to the
/// antipodal orbit {1, 5}. The pair {1, 5} is joined through the hub by a
/// one-orbit path, so it is monochromatic in every symmetric
/// NAC-colouring and the closure adds exactly that chord.
pub fn ring8_hub_c2() -> GraphDoc {
    let names = ["1", "2", "3", "4", "5", "6", "7", "8", "h"];
    let mut edges: Vec<(&str, &str)> = (0..8)
        .map(|i| (names[i], names[(i + 1) % 8]))
        .collect();
    edges.push(("h", "1"));
    edges.push(("h", "5"));
    let mut omega: Vec<(&str, &str)> = (0..8).map(|i| (names[i], names[(i + 4) % 8])).collect();
    omega.push(("h", "h"));
    graph(2, &names, &edges, &omega)
}

/// Fixture file names of every graph in the corpus.
pub fn graph_fixture_names() -> Vec<&'static str> {
    vec![
        "k3_c3.json",
        "cycle_c4.json",
        "cycle_c5.json",
        "cycle_c6.json",
        "cycle_c7.json",
        "cycle_c8.json",
        "hexagon_triangles_c6.json",
        "triangle_ring12_c4.json",
        "k44_collinear_c2.json",
        "k44_rectangles_c2.json",
        "k24_c2.json",
        "k22_hubs_c2.json",
        "ring8_hub_c2.json",
    ]
}

/// All fixtures as (file name, document) pairs, the source of truth for
/// the generator and the canonical-form test.
pub fn graph_fixtures() -> Vec<(&'static str, GraphDoc)> {
    vec![
        ("k3_c3.json", k3_c3()),
        ("cycle_c4.json", cycle(4)),
        ("cycle_c5.json", cycle(5)),
        ("cycle_c6.json", cycle(6)),
        ("cycle_c7.json", cycle(7)),
        ("cycle_c8.json", cycle(8)),
        ("hexagon_triangles_c6.json", hexagon_triangles_c6()),
        ("triangle_ring12_c4.json", triangle_ring12_c4()),
        ("k44_collinear_c2.json", k44_collinear_c2()),
        ("k44_rectangles_c2.json", k44_rectangles_c2()),
        ("k24_c2.json", k24_c2()),
        ("k22_hubs_c2.json", k22_hubs_c2()),
        ("ring8_hub_c2.json", ring8_hub_c2()),
    ]
}
