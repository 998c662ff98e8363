//! Fixture-corpus integration tests: validation, orbits, symmetric
//! colourings, motion construction/verification end to end, and closure
//! behaviour, with expected values frozen from independent computation.

use std::collections::BTreeSet;

use symflex_core::closure::{constant_distance_closure, proper_flex_verdict, u_pairs, Verdict};
use symflex_core::colouring::{enumerate_nac, Colour, EdgeColouring, SearchBounds};
use symflex_core::graph::{validate_graph_doc, SymmetryIssue};
use symflex_core::json::to_canonical_string;
use symflex_core::motion::{
    check_proper_conditions, construct_motion, sample_motion, uniform_ts, verify_motion,
    ProperViolation, VerifyTolerances,
};
use symflex_core::symnac::{
    check_cn_symmetric_nac, component_symmetry_flags, enumerate_cn_symmetric_nac,
    is_cn_symmetric_nac,
};
use symflex_testkit::{corpus, fixture_path, load_colouring, load_graph, load_graph_doc};

fn bounds() -> SearchBounds {
    SearchBounds::default()
}

#[test]
fn every_fixture_file_is_valid_and_canonical() {
    for (name, doc) in corpus::graph_fixtures() {
        let raw = std::fs::read_to_string(fixture_path(name)).expect("fixture file exists");
        let parsed = load_graph_doc(name);
        assert_eq!(parsed, doc, "{name} matches its constructor");
        assert_eq!(to_canonical_string(&parsed), raw, "{name} is stored canonically");
        assert!(validate_graph_doc(&parsed).is_valid(), "{name} validates");
    }
}

#[test]
fn mutated_fixtures_are_rejected_with_the_right_diagnosis() {
    // wrong symmetry order
    let mut doc = load_graph_doc("cycle_c4.json");
    doc.n = 2;
    let report = validate_graph_doc(&doc);
    assert_eq!(report.symmetry, vec![SymmetryIssue::OrderMismatch { expected: 2, actual: 4 }]);

    // one edge removed from an orbit: omega is no longer an automorphism
    let mut doc = load_graph_doc("k24_c2.json");
    doc.edges.retain(|e| e != &("b2".to_string(), "h2".to_string()));
    let report = validate_graph_doc(&doc);
    assert_eq!(report.symmetry.len(), 1);
    assert!(matches!(report.symmetry[0], SymmetryIssue::EdgeNotPreserved { .. }));

    // an edge joining the two invariant hubs
    let mut doc = load_graph_doc("k22_hubs_c2.json");
    doc.edges.push(("h1".to_string(), "h2".to_string()));
    let report = validate_graph_doc(&doc);
    assert_eq!(
        report.symmetry,
        vec![SymmetryIssue::AdjacentInvariantVertices { edge: ("h1".into(), "h2".into()) }]
    );

    // a proper power fixing vertices that omega moves
    let mut doc = load_graph_doc("triangle_ring12_c4.json");
    doc.omega.insert("5".into(), "6".into());
    doc.omega.insert("6".into(), "5".into());
    doc.omega.insert("12".into(), "9".into());
    doc.omega.insert("9".into(), "12".into());
    let report = validate_graph_doc(&doc);
    assert!(report
        .symmetry
        .iter()
        .any(|v| matches!(v, SymmetryIssue::PartiallyInvariantNotInvariant { .. })));

    // structural mutations are reported separately
    let mut doc = load_graph_doc("k3_c3.json");
    doc.edges.push(("1".into(), "ghost".into()));
    doc.edges.push(("2".into(), "2".into()));
    doc.edges.push(("1".into(), "2".into()));
    let report = validate_graph_doc(&doc);
    assert_eq!(report.structural.len(), 3);
    assert!(report.symmetry.is_empty());
}

#[test]
fn orbit_structure_of_the_showcase_fixtures() {
    let ring = load_graph("triangle_ring12_c4.json");
    let vo = ring.vertex_orbits();
    assert_eq!(vo.classes.len(), 3);
    assert!(vo.classes.iter().all(|c| c.len() == 4));
    let eo = ring.edge_orbits();
    assert_eq!(eo.classes.len(), 6);
    assert!(eo.classes.iter().all(|c| c.len() == 4));

    let hexagon = load_graph("cycle_c6.json");
    assert_eq!(hexagon.vertex_orbits().classes.len(), 1);
    assert_eq!(hexagon.edge_orbits().classes.len(), 1);

    // hexagon edges and triangle edges form the two orbits
    let octa = load_graph("hexagon_triangles_c6.json");
    let eo = octa.edge_orbits();
    assert_eq!(eo.classes.len(), 2);
    assert!(eo.classes.iter().all(|c| c.len() == 6));
}

#[test]
fn component_flags_on_the_invariance_showcase() {
    let g = load_graph("hexagon_triangles_c6.json");
    let mut triangle_red = EdgeColouring::uniform(g.edge_count(), Colour::Blue);
    for (a, b) in [("1", "3"), ("3", "5"), ("1", "5")] {
        let e = g
            .edge_id(g.vertex_index(a).unwrap(), g.vertex_index(b).unwrap())
            .unwrap();
        triangle_red.set(e, Colour::Red);
    }
    let flagged = component_symmetry_flags(&g, &triangle_red, Colour::Red);
    let comp = flagged.components.component_of[g.vertex_index("1").unwrap()];
    let class: Vec<&str> =
        flagged.components.classes[comp].iter().map(|&v| g.name(v)).collect();
    assert_eq!(class, vec!["1", "3", "5"]);
    assert!(flagged.flags[comp].partially_invariant);
    assert!(!flagged.flags[comp].invariant);
    assert_eq!(flagged.flags[comp].stabilizer_exponents, vec![0, 2, 4]);

    let mut hexagon_red = EdgeColouring::uniform(g.edge_count(), Colour::Blue);
    for (a, b) in [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6")] {
        let e = g
            .edge_id(g.vertex_index(a).unwrap(), g.vertex_index(b).unwrap())
            .unwrap();
        hexagon_red.set(e, Colour::Red);
    }
    let flagged = component_symmetry_flags(&g, &hexagon_red, Colour::Red);
    let comp = flagged.components.component_of[0];
    assert_eq!(flagged.components.classes[comp].len(), 6);
    assert!(flagged.flags[comp].invariant);
    assert!(flagged.flags[comp].partially_invariant);
}

/// Symmetric NAC-colouring counts, frozen from enumeration cross-checked
/// against filtering the plain enumeration (see
/// `symmetric_enumeration_consistency`).
fn expected_symmetric_counts() -> Vec<(&'static str, usize)> {
    vec![
        ("k3_c3.json", 0),
        ("cycle_c4.json", 0),
        ("cycle_c5.json", 0),
        ("cycle_c6.json", 0),
        ("cycle_c7.json", 0),
        ("cycle_c8.json", 0),
        ("hexagon_triangles_c6.json", 0),
        ("triangle_ring12_c4.json", 2),
        ("k44_collinear_c2.json", 12),
        ("k44_rectangles_c2.json", 12),
        ("k24_c2.json", 2),
        ("k22_hubs_c2.json", 0),
        ("ring8_hub_c2.json", 20),
    ]
}

#[test]
fn symmetric_nac_counts_are_stable() {
    for (name, expected) in expected_symmetric_counts() {
        let g = load_graph(name);
        let found = enumerate_cn_symmetric_nac(&g, false, &bounds()).unwrap();
        assert_eq!(found.len(), expected, "{name}");
        for c in &found {
            assert!(is_cn_symmetric_nac(&g, c), "{name}: enumerated colouring passes the check");
            assert!(found.contains(&c.conjugate()), "{name}: closed under conjugation");
        }
    }
}

#[test]
fn shipped_colouring_is_a_symmetric_nac_of_the_ring() {
    let g = load_graph("triangle_ring12_c4.json");
    let c = load_colouring(&g, "triangle_ring12_c4_colouring.json");
    assert!(check_cn_symmetric_nac(&g, &c).is_ok());
    let found = enumerate_cn_symmetric_nac(&g, false, &bounds()).unwrap();
    assert_eq!(found.len(), 2);
    assert!(found.contains(&c));
    assert!(found.contains(&c.conjugate()));
}

#[test]
fn symmetric_enumeration_consistency_on_small_fixtures() {
    for (name, _) in corpus::graph_fixtures() {
        let g = load_graph(name);
        if g.edge_count() > 12 {
            continue;
        }
        let filtered: Vec<EdgeColouring> = enumerate_nac(&g, false, &bounds())
            .unwrap()
            .into_iter()
            .filter(|c| is_cn_symmetric_nac(&g, c))
            .collect();
        let direct = enumerate_cn_symmetric_nac(&g, false, &bounds()).unwrap();
        assert_eq!(direct, filtered, "{name}");
    }
}

#[test]
fn every_symmetric_colouring_yields_a_verified_motion() {
    let tol = VerifyTolerances::default();
    for (name, _) in corpus::graph_fixtures() {
        let g = load_graph(name);
        for c in enumerate_cn_symmetric_nac(&g, false, &bounds()).unwrap() {
            let motion = construct_motion(&g, &c, None, None)
                .unwrap_or_else(|e| panic!("{name}: construction failed: {e}"));
            let frames = sample_motion(&motion, &uniform_ts(360));
            let report = verify_motion(&g, &frames, tol).unwrap();
            assert!(report.edge_lengths_ok(), "{name}: edge residual {}", report.edge_length_residual);
            assert!(report.symmetry_ok(), "{name}: symmetry residual {}", report.symmetry_residual);
            assert!(report.non_trivial(), "{name}: margin {}", report.non_triviality_margin);

            // grid values agree exactly along edges of their own colour
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                match c.colour(e) {
                    Colour::Red => assert_eq!(motion.abar[u], motion.abar[v]),
                    Colour::Blue => assert_eq!(motion.bbar[u], motion.bbar[v]),
                }
            }

            // initial coincidences happen only off edges
            let p0 = &frames[0];
            for u in 0..g.vertex_count() {
                for v in (u + 1)..g.vertex_count() {
                    if p0.positions[u].dist(p0.positions[v]) < 1e-12 {
                        assert!(!g.has_edge(u, v), "{name}: adjacent vertices coincide");
                    }
                }
            }

            // the motion is 2*pi periodic
            for t in [0.0, 0.7, 3.1] {
                let a = motion.placement_at(t);
                let b = motion.placement_at(t + 2.0 * std::f64::consts::PI);
                for (p, q) in a.positions.iter().zip(&b.positions) {
                    assert!(p.dist(*q) < 1e-9);
                }
            }

            // invariant vertices stay at the origin
            for v in 0..g.vertex_count() {
                if g.is_invariant(v) {
                    for frame in &frames {
                        assert!(frame.positions[v].norm() < 1e-12, "{name}: invariant vertex moved");
                    }
                }
            }
        }
    }
}

#[test]
fn single_orbit_pair_traces_circles() {
    // the ring fixture has one red and one blue component orbit, so every
    // vertex orbits the fixed blue contribution at the red radius
    let g = load_graph("triangle_ring12_c4.json");
    let c = load_colouring(&g, "triangle_ring12_c4_colouring.json");
    let motion = construct_motion(&g, &c, None, None).unwrap();
    assert_eq!(motion.base_points.red.len(), 1);
    assert_eq!(motion.base_points.blue.len(), 1);
    let radius = motion.base_points.red[0].norm();
    for t in uniform_ts(17) {
        let frame = motion.placement_at(t);
        for v in 0..g.vertex_count() {
            let d = frame.positions[v].dist(motion.bbar[v]);
            assert!((d - radius).abs() < 1e-9);
        }
    }
}

#[test]
fn fixed_parameter_evaluations_follow_the_rotation() {
    let g = load_graph("ring8_hub_c2.json");
    let c = enumerate_cn_symmetric_nac(&g, true, &bounds()).unwrap().remove(0);
    let motion = construct_motion(&g, &c, None, None).unwrap();
    let p0 = motion.placement_at(0.0);
    let ppi = motion.placement_at(std::f64::consts::PI);
    for v in 0..g.vertex_count() {
        let expect0 = motion.abar[v].add(motion.bbar[v]);
        assert!(p0.positions[v].dist(expect0) < 1e-12);
        // R(pi) = -identity
        let expect_pi = motion.bbar[v].sub(motion.abar[v]);
        assert!(ppi.positions[v].dist(expect_pi) < 1e-9);
    }
}

/// Closure verdicts frozen from independent analysis of each fixture.
fn expected_verdicts() -> Vec<(&'static str, Verdict, bool)> {
    // (fixture, verdict, closure complete)
    vec![
        ("k3_c3.json", Verdict::NoProperPlacement, true),
        ("cycle_c4.json", Verdict::NoProperPlacement, true),
        ("cycle_c5.json", Verdict::NoProperPlacement, true),
        ("cycle_c6.json", Verdict::NoProperPlacement, true),
        ("cycle_c7.json", Verdict::NoProperPlacement, true),
        ("cycle_c8.json", Verdict::NoProperPlacement, true),
        ("hexagon_triangles_c6.json", Verdict::NoProperPlacement, true),
        ("triangle_ring12_c4.json", Verdict::ProperPlacementExists, false),
        ("k44_collinear_c2.json", Verdict::Undecided, false),
        ("k44_rectangles_c2.json", Verdict::Undecided, false),
        ("k24_c2.json", Verdict::NoProperPlacement, false),
        ("k22_hubs_c2.json", Verdict::NoProperPlacement, false),
        ("ring8_hub_c2.json", Verdict::ProperPlacementExists, false),
    ]
}

#[test]
fn closure_verdicts_match_the_frozen_corpus() {
    for (name, verdict, complete) in expected_verdicts() {
        let g = load_graph(name);
        let report = proper_flex_verdict(&g, &bounds()).unwrap();
        assert_eq!(report.verdict, verdict, "{name}");
        assert_eq!(report.closure.complete, complete, "{name}");
        if verdict == Verdict::ProperPlacementExists {
            let witness = report.witness.expect("witness colouring");
            assert!(check_proper_conditions(&report.closure.closure, &witness).unwrap().ok());
        }
    }
}

#[test]
fn hexagon_closure_is_complete_after_one_vacuous_round() {
    let g = load_graph("cycle_c6.json");
    let pairs = u_pairs(&g, &bounds()).unwrap();
    assert_eq!(pairs.len(), 9);
    let result = constant_distance_closure(&g, &bounds()).unwrap();
    assert_eq!(result.rounds.len(), 1);
    assert!(result.complete);
    assert_eq!(result.closure.edge_count(), 15);
}

#[test]
fn closure_is_monotone_idempotent_equivariant_and_bounded() {
    for (name, _) in corpus::graph_fixtures() {
        let g = load_graph(name);
        let result = constant_distance_closure(&g, &bounds()).unwrap();
        // monotone: all original edges survive
        for &(u, v) in g.edges() {
            assert!(result.closure.has_edge(u, v), "{name}");
        }
        // terminates well under |V|^2 rounds
        assert!(result.rounds.len() <= g.vertex_count() * g.vertex_count(), "{name}");
        // idempotent unless a degenerate pair stopped it
        if result.degenerate_pairs.is_empty() {
            let again = constant_distance_closure(&result.closure, &bounds()).unwrap();
            assert!(again.rounds.is_empty(), "{name}");
            assert_eq!(again.closure, result.closure, "{name}");
        }
        // equivariance of each round's additions
        for round in &result.rounds {
            let added: BTreeSet<(usize, usize)> = round.added_pairs().collect();
            for &(u, v) in &added {
                let (a, b) = (g.omega(u), g.omega(v));
                assert!(added.contains(&(a.min(b), a.max(b))), "{name}");
            }
        }
    }
}

#[test]
fn ring_with_hub_adds_exactly_the_tethered_chord() {
    let g = load_graph("ring8_hub_c2.json");
    let pairs = u_pairs(&g, &bounds()).unwrap();
    let named: Vec<(&str, &str)> =
        pairs.iter().map(|&(u, v)| (g.name(u), g.name(v))).collect();
    assert_eq!(named, vec![("1", "5")]);
    let result = constant_distance_closure(&g, &bounds()).unwrap();
    assert_eq!(result.rounds.len(), 1);
    assert_eq!(result.closure.edge_count(), g.edge_count() + 1);
    assert!(result.degenerate_pairs.is_empty());
}

#[test]
fn degenerate_closures_on_the_hub_fixtures() {
    for name in ["k22_hubs_c2.json", "k24_c2.json"] {
        let g = load_graph(name);
        let result = constant_distance_closure(&g, &bounds()).unwrap();
        let named: Vec<(&str, &str)> = result
            .degenerate_pairs
            .iter()
            .map(|&(u, v)| (g.name(u), g.name(v)))
            .collect();
        assert_eq!(named, vec![("h1", "h2")], "{name}");
        assert!(result.rounds.is_empty(), "{name}: aborted before any additions");
        assert_eq!(result.closure, g, "{name}");
    }
}

#[test]
fn colourings_extend_across_one_closure_round() {
    // For each small fixture: every symmetric NAC-colouring extends to the
    // graph of round one by colouring each added pair with the colour of
    // its monochromatic path, and stays a symmetric NAC-colouring. The
    // ring-with-hub fixture makes this non-vacuous.
    let mut nonvacuous = 0usize;
    for (name, _) in corpus::graph_fixtures() {
        let g = load_graph(name);
        if g.edge_count() > 12 {
            continue;
        }
        let colourings = enumerate_cn_symmetric_nac(&g, false, &bounds()).unwrap();
        if colourings.is_empty() {
            continue;
        }
        let pairs = u_pairs(&g, &bounds()).unwrap();
        if pairs.is_empty() || !constant_distance_closure(&g, &bounds()).unwrap().degenerate_pairs.is_empty() {
            continue;
        }
        let extended_graph = g.with_added_edges(&pairs);
        for c in &colourings {
            nonvacuous += 1;
            let red = symflex_core::monochromatic_components(&g, c, Colour::Red);
            let blue = symflex_core::monochromatic_components(&g, c, Colour::Blue);
            let mut colours = vec![None; extended_graph.edge_count()];
            for (e, &(u, v)) in extended_graph.edges().iter().enumerate() {
                colours[e] = Some(match g.edge_id(u, v) {
                    Some(old) => c.colour(old),
                    None => {
                        let same_red = red.component_of[u] == red.component_of[v];
                        let same_blue = blue.component_of[u] == blue.component_of[v];
                        assert!(same_red ^ same_blue, "{name}: extension colour must be unique");
                        if same_red {
                            Colour::Red
                        } else {
                            Colour::Blue
                        }
                    }
                });
            }
            let extended =
                EdgeColouring::new(colours.into_iter().map(Option::unwrap).collect());
            assert!(
                is_cn_symmetric_nac(&extended_graph, &extended),
                "{name}: extension stays a symmetric NAC-colouring"
            );
        }
    }
    assert!(nonvacuous >= 20, "the corpus exercises real extensions");
}

#[test]
fn proper_condition_violations_on_the_double_hub() {
    let g = load_graph("k24_c2.json");
    let colourings = enumerate_cn_symmetric_nac(&g, false, &bounds()).unwrap();
    assert_eq!(colourings.len(), 2);
    for c in &colourings {
        let report = check_proper_conditions(&g, c).unwrap();
        assert!(!report.ok());
        let mut shared = false;
        let mut doubly = false;
        for violation in &report.violations {
            match violation {
                ProperViolation::SharedVertices { shared: s, .. } => {
                    shared = true;
                    let names: Vec<&str> = s.iter().map(|&v| g.name(v)).collect();
                    assert_eq!(names, vec!["h1", "h2"]);
                }
                ProperViolation::MultipleDoublyInvariant { vertices } => {
                    doubly = true;
                    assert_eq!(vertices.len(), 2);
                }
                ProperViolation::LinkedByPath { .. } => {}
            }
        }
        assert!(shared && doubly);
    }
}

#[test]
fn proper_passing_colourings_give_almost_always_injective_motions() {
    let tol = VerifyTolerances::default();
    for (name, _) in corpus::graph_fixtures() {
        let g = load_graph(name);
        for c in enumerate_cn_symmetric_nac(&g, false, &bounds()).unwrap() {
            if !check_proper_conditions(&g, &c).unwrap().ok() {
                continue;
            }
            let motion = construct_motion(&g, &c, None, None).unwrap();
            let frames = sample_motion(&motion, &uniform_ts(360));
            let report = verify_motion(&g, &frames, tol).unwrap();
            let bad = report.non_injective_frames();
            assert!(bad.len() <= 4, "{name}: {} non-injective frames", bad.len());
            // a perturbed re-sample dodges the finitely many singular values
            let ts: Vec<f64> = uniform_ts(360).iter().map(|t| t + 1.37e-4).collect();
            let frames = sample_motion(&motion, &ts);
            let report = verify_motion(&g, &frames, tol).unwrap();
            assert!(report.non_injective_frames().is_empty(), "{name}");
        }
    }
}

#[test]
fn congruent_frames_have_zero_margin() {
    // a rigid rotation of one placement preserves every distance, so the
    // non-triviality margin is exactly zero
    let g = load_graph("triangle_ring12_c4.json");
    let c = load_colouring(&g, "triangle_ring12_c4_colouring.json");
    let motion = construct_motion(&g, &c, None, None).unwrap();
    let base = motion.placement_at(0.3);
    let frames: Vec<symflex_core::Placement> = uniform_ts(12)
        .iter()
        .map(|&angle| symflex_core::Placement {
            positions: base.positions.iter().map(|p| p.rotate(angle)).collect(),
        })
        .collect();
    let report = verify_motion(&g, &frames, VerifyTolerances::default()).unwrap();
    assert!(report.edge_lengths_ok());
    // whole-placement rotations commute with the symmetry, so only the
    // margin exposes the flex as trivial
    assert!(report.symmetry_ok());
    assert!(report.non_triviality_margin < 1e-12);
    assert!(!report.non_trivial());
}

#[test]
fn construction_rejects_bad_inputs() {
    use symflex_core::motion::{BasePoints, MotionError, Vec2};

    // not a symmetric NAC-colouring: rejection names the failed clause
    let g = load_graph("k3_c3.json");
    let mut c = EdgeColouring::uniform(3, Colour::Red);
    c.set(0, Colour::Blue);
    match construct_motion(&g, &c, None, None) {
        Err(MotionError::NotCnSymmetricNac(_)) => {}
        other => panic!("expected rejection, got {other:?}"),
    }

    let ring = load_graph("triangle_ring12_c4.json");
    let col = load_colouring(&ring, "triangle_ring12_c4_colouring.json");

    // wrong base point count for the component orbits
    let too_many = BasePoints {
        red: vec![Vec2::new(1.0, 0.2), Vec2::new(2.0, 0.4)],
        blue: vec![Vec2::new(3.0, 0.6)],
        n: 4,
    };
    assert!(matches!(
        construct_motion(&ring, &col, Some(too_many), None),
        Err(MotionError::BasePointCountMismatch { .. })
    ));

    // degenerate base points (parallel red/blue pair)
    let parallel = BasePoints {
        red: vec![Vec2::new(1.0, 0.0)],
        blue: vec![Vec2::new(2.0, 0.0)],
        n: 4,
    };
    assert!(matches!(
        construct_motion(&ring, &col, Some(parallel), None),
        Err(MotionError::DegenerateBasePoints)
    ));

    // explicit generic base points are accepted and used
    let custom = BasePoints {
        red: vec![Vec2::new(1.0, 0.3)],
        blue: vec![Vec2::new(0.4, 2.1)],
        n: 4,
    };
    let motion = construct_motion(&ring, &col, Some(custom.clone()), None).unwrap();
    assert_eq!(motion.base_points, custom);
    let frames = sample_motion(&motion, &uniform_ts(60));
    assert!(verify_motion(&ring, &frames, VerifyTolerances::default()).unwrap().ok());
}

#[test]
fn frame_documents_are_checked_against_the_graph() {
    use symflex_core::motion::{frames_from_doc, motion_to_doc, MotionError};

    let g = load_graph("k24_c2.json");
    let c = enumerate_cn_symmetric_nac(&g, true, &bounds()).unwrap().remove(0);
    let motion = construct_motion(&g, &c, None, None).unwrap();
    let doc = motion_to_doc(&g, &motion, &uniform_ts(3));
    assert_eq!(frames_from_doc(&g, &doc).unwrap().len(), 3);

    let mut missing = doc.clone();
    missing.frames[1].positions.remove("b2");
    assert!(matches!(
        frames_from_doc(&g, &missing),
        Err(MotionError::MissingPosition { frame: 1, .. })
    ));

    let mut extra = doc;
    extra.frames[0].positions.insert("ghost".into(), (0.0, 0.0));
    assert!(matches!(
        frames_from_doc(&g, &extra),
        Err(MotionError::UnknownVertex { frame: 0, .. })
    ));

    // fewer than two frames cannot witness a flex
    let one = motion_to_doc(&g, &motion, &[0.0]);
    let placements = frames_from_doc(&g, &one).unwrap();
    assert!(matches!(
        verify_motion(&g, &placements, VerifyTolerances::default()),
        Err(MotionError::NotEnoughFrames(1))
    ));
}

#[test]
fn verdict_is_never_no_proper_for_graphs_with_known_flexes() {
    // Both complete bipartite fixtures admit proper symmetric flexible
    // placements, so the one-sided certificate must not claim otherwise.
    for name in ["k44_collinear_c2.json", "k44_rectangles_c2.json", "triangle_ring12_c4.json"] {
        let g = load_graph(name);
        let verdict = proper_flex_verdict(&g, &bounds()).unwrap().verdict;
        assert_ne!(verdict, Verdict::NoProperPlacement, "{name}");
    }
}
