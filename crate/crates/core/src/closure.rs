//! Constant distance closure under the cyclic symmetry, and the resulting
//! certificates about proper (injective) symmetric flexes.
//!
//! A non-adjacent pair joined by a path that is monochromatic in every
//! Cn-symmetric NAC-colouring keeps its distance along any symmetric
//! motion, so the pair (and its whole orbit) can be added as edges without
//! changing the motions. Iterating to a fixpoint yields the closure; a
//! complete closure certifies that no proper symmetric flex exists.

use thiserror::Error;

use crate::colouring::{monochromatic_components, Colour, EdgeColouring, EnumerationError, SearchBounds};
use crate::graph::SymmetricGraph;
use crate::json::{ClosureDoc, ClosureRoundDoc, ProperDoc};
use crate::motion::check_proper_conditions;
use crate::symnac::enumerate_cn_symmetric_nac;

/// All pairs {u,v} with uv not an edge such that u and v share a red or a
/// blue component in every Cn-symmetric NAC-colouring of `g`. With no such
/// colouring the condition is vacuous and every non-adjacent pair is
/// returned.
pub fn u_pairs(g: &SymmetricGraph, bounds: &SearchBounds) -> Result<Vec<(usize, usize)>, EnumerationError> {
    // Conjugate colourings induce the same same-component relation, so one
    // representative per pair is enough.
    let colourings = enumerate_cn_symmetric_nac(g, true, bounds)?;
    let candidates = g.non_adjacent_pairs();
    if colourings.is_empty() {
        return Ok(candidates);
    }
    let relations = crate::par::map_vec(&colourings, |c| {
        let red = monochromatic_components(g, c, Colour::Red);
        let blue = monochromatic_components(g, c, Colour::Blue);
        candidates
            .iter()
            .map(|&(u, v)| {
                red.component_of[u] == red.component_of[v]
                    || blue.component_of[u] == blue.component_of[v]
            })
            .collect::<Vec<bool>>()
    });
    let mut keep = vec![true; candidates.len()];
    for relation in &relations {
        for (slot, &related) in keep.iter_mut().zip(relation) {
            *slot = *slot && related;
        }
    }
    Ok(candidates
        .into_iter()
        .zip(keep)
        .filter(|&(_, k)| k)
        .map(|(pair, _)| pair)
        .collect())
}

/// One closure round: the added pairs, grouped by omega-orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureRound {
    pub orbits: Vec<Vec<(usize, usize)>>,
}

impl ClosureRound {
    pub fn added_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.orbits.iter().flatten().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    /// The fixpoint graph (or the last valid graph when a degenerate pair
    /// stopped the construction).
    pub closure: SymmetricGraph,
    pub rounds: Vec<ClosureRound>,
    /// Whether the closure is the complete graph on V(G).
    pub complete: bool,
    /// Pairs of invariant vertices demanded by the closure. Such an edge
    /// would join two vertices pinned to the origin, so instead of building
    /// a graph that is no longer Cn-symmetric the construction stops and
    /// the verdict is decided directly.
    pub degenerate_pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ClosureError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

/// Iterate u-pair rounds to the fixpoint, adding each round's pairs
/// orbit-wholesale.
pub fn constant_distance_closure(
    g: &SymmetricGraph,
    bounds: &SearchBounds,
) -> Result<ClosureResult, ClosureError> {
    let mut current = g.clone();
    let mut rounds = Vec::new();
    let round_cap = g.vertex_count() * g.vertex_count() + 1;
    loop {
        assert!(rounds.len() < round_cap, "closure must reach a fixpoint within |V|^2 rounds");
        let pairs = u_pairs(&current, bounds)?;
        if pairs.is_empty() {
            return Ok(ClosureResult {
                complete: current.is_complete(),
                closure: current,
                rounds,
                degenerate_pairs: Vec::new(),
            });
        }
        let degenerate: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|&(u, v)| current.is_invariant(u) && current.is_invariant(v))
            .collect();
        if !degenerate.is_empty() {
            return Ok(ClosureResult {
                complete: current.is_complete(),
                closure: current,
                rounds,
                degenerate_pairs: degenerate,
            });
        }
        let orbits = group_pair_orbits(&current, &pairs);
        current = current.with_added_edges(&pairs);
        rounds.push(ClosureRound { orbits });
    }
}

/// Group pairs into orbits under (u,v) -> (omega u, omega v). The u-pair
/// set is closed under the action, which is re-checked in debug builds.
fn group_pair_orbits(g: &SymmetricGraph, pairs: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let normalise = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    let in_set: std::collections::HashSet<(usize, usize)> = pairs.iter().copied().collect();
    let mut seen = std::collections::HashSet::new();
    let mut orbits = Vec::new();
    for &start in pairs {
        if seen.contains(&start) {
            continue;
        }
        let mut orbit = Vec::new();
        let mut pair = start;
        loop {
            seen.insert(pair);
            orbit.push(pair);
            pair = normalise((g.omega(pair.0), g.omega(pair.1)));
            debug_assert!(in_set.contains(&pair), "u-pairs are closed under the action");
            if pair == start {
                break;
            }
        }
        orbits.push(orbit);
    }
    orbits
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NoProperPlacement,
    ProperPlacementExists,
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NoProperPlacement => "NO_PROPER_PLACEMENT",
            Verdict::ProperPlacementExists => "PROPER_PLACEMENT_EXISTS",
            Verdict::Undecided => "UNDECIDED",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerdictReport {
    pub verdict: Verdict,
    pub closure: ClosureResult,
    /// A Cn-symmetric NAC-colouring of the closure graph passing the
    /// proper-placement conditions, when one certifies the verdict.
    pub witness: Option<EdgeColouring>,
}

/// Decide what the closure certifies: a complete closure (or a degenerate
/// invariant pair) rules proper symmetric flexes out; a colouring of the
/// closure meeting the proper-placement conditions rules one in; otherwise
/// the question stays open and is reported as such.
pub fn proper_flex_verdict(
    g: &SymmetricGraph,
    bounds: &SearchBounds,
) -> Result<VerdictReport, ClosureError> {
    let closure = constant_distance_closure(g, bounds)?;
    if closure.complete || !closure.degenerate_pairs.is_empty() {
        return Ok(VerdictReport { verdict: Verdict::NoProperPlacement, closure, witness: None });
    }
    // Conditions are symmetric under conjugation, so representatives
    // suffice.
    let colourings = enumerate_cn_symmetric_nac(&closure.closure, true, bounds)?;
    let witness = colourings.into_iter().find(|c| {
        check_proper_conditions(&closure.closure, c)
            .map(|report| report.ok())
            .unwrap_or(false)
    });
    Ok(match witness {
        Some(c) => VerdictReport {
            verdict: Verdict::ProperPlacementExists,
            closure,
            witness: Some(c),
        },
        None => VerdictReport { verdict: Verdict::Undecided, closure, witness: None },
    })
}

fn name_pairs(g: &SymmetricGraph, pairs: &[(usize, usize)]) -> Vec<(String, String)> {
    let mut named: Vec<(String, String)> = pairs
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.name(u).to_string(), g.name(v).to_string());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    named.sort();
    named
}

impl VerdictReport {
    pub fn to_closure_doc(&self, g: &SymmetricGraph) -> ClosureDoc {
        ClosureDoc {
            complete: self.closure.complete,
            rounds: self
                .closure
                .rounds
                .iter()
                .map(|round| ClosureRoundDoc {
                    added: name_pairs(g, &round.added_pairs().collect::<Vec<_>>()),
                })
                .collect(),
            degenerate_pairs: name_pairs(g, &self.closure.degenerate_pairs),
            verdict: self.verdict.as_str().to_string(),
        }
    }

    pub fn to_proper_doc(&self, g: &SymmetricGraph) -> ProperDoc {
        ProperDoc {
            verdict: self.verdict.as_str().to_string(),
            degenerate_pairs: name_pairs(g, &self.closure.degenerate_pairs),
            witness_colouring: self.witness.as_ref().map(|c| c.to_doc(&self.closure.closure)),
        }
    }
}
