//! Cn-symmetric NAC-colourings: orbit-constant colourings whose partially
//! invariant monochromatic components are never joined by an edge.

use thiserror::Error;

use crate::colouring::{
    check_nac, monochromatic_components, Colour, EdgeColouring, EnumerationError,
    MonochromaticComponents, NacFailure, SearchBounds,
};
use crate::graph::SymmetricGraph;

/// Symmetry flags of one monochromatic component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentFlag {
    /// Exponents k with omega^k(H) = H; always contains 0 and forms a
    /// subgroup of Z_n.
    pub stabilizer_exponents: Vec<usize>,
    /// Stabilised by some non-identity power.
    pub partially_invariant: bool,
    /// Stabilised by every power.
    pub invariant: bool,
}

/// Monochromatic components of one colour together with their symmetry
/// flags, aligned index by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentFlags {
    pub components: MonochromaticComponents,
    pub flags: Vec<ComponentFlag>,
}

/// Flags are well defined for any total colouring; orbit-constancy is not
/// required here.
pub fn component_symmetry_flags(
    g: &SymmetricGraph,
    c: &EdgeColouring,
    colour: Colour,
) -> ComponentFlags {
    let components = monochromatic_components(g, c, colour);
    let n = g.n();
    let count = components.classes.len();
    let mut stays = vec![vec![true; n]; count];
    let mut image: Vec<usize> = (0..g.vertex_count()).collect();
    for k in 1..n {
        for v in 0..g.vertex_count() {
            image[v] = g.omega(image[v]);
        }
        for v in 0..g.vertex_count() {
            if components.component_of[image[v]] != components.component_of[v] {
                stays[components.component_of[v]][k] = false;
            }
        }
    }
    let flags = stays
        .into_iter()
        .map(|row| {
            let stabilizer_exponents: Vec<usize> =
                row.iter().enumerate().filter(|&(_, &s)| s).map(|(k, _)| k).collect();
            let partially_invariant = stabilizer_exponents.len() > 1;
            let invariant = stabilizer_exponents.len() == n;
            ComponentFlag { stabilizer_exponents, partially_invariant, invariant }
        })
        .collect();
    ComponentFlags { components, flags }
}

/// Why a colouring is not a Cn-symmetric NAC-colouring; clauses are
/// reported in definition order.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SymNacFailure {
    #[error("not a NAC-colouring")]
    NotNac(NacFailure),
    #[error("colouring is not constant on edge orbits")]
    NotOrbitConstant { edge: (usize, usize), image: (usize, usize) },
    #[error("two distinct partially invariant {} components are joined by an edge", colour.as_str())]
    LinkedPartiallyInvariant {
        colour: Colour,
        edge: (usize, usize),
        component_a: Vec<usize>,
        component_b: Vec<usize>,
    },
}

/// Definition check: NAC, constant on every edge orbit, and for each
/// colour no edge joins two distinct partially invariant components of
/// that colour (such an edge is necessarily of the opposite colour).
pub fn check_cn_symmetric_nac(
    g: &SymmetricGraph,
    c: &EdgeColouring,
) -> Result<(), SymNacFailure> {
    check_nac(g, c).map_err(SymNacFailure::NotNac)?;

    let orbits = g.edge_orbits();
    for class in &orbits.classes {
        for (idx, &e) in class.iter().enumerate() {
            let f = class[(idx + 1) % class.len()];
            if c.colour(e) != c.colour(f) {
                return Err(SymNacFailure::NotOrbitConstant {
                    edge: g.edges()[e],
                    image: g.edges()[f],
                });
            }
        }
    }

    linked_partially_invariant(g, c)
}

fn linked_partially_invariant(
    g: &SymmetricGraph,
    c: &EdgeColouring,
) -> Result<(), SymNacFailure> {
    for colour in [Colour::Red, Colour::Blue] {
        let flagged = component_symmetry_flags(g, c, colour);
        let comp_of = &flagged.components.component_of;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if c.colour(e) == colour {
                continue;
            }
            let (a, b) = (comp_of[u], comp_of[v]);
            if a != b && flagged.flags[a].partially_invariant && flagged.flags[b].partially_invariant
            {
                return Err(SymNacFailure::LinkedPartiallyInvariant {
                    colour,
                    edge: (u, v),
                    component_a: flagged.components.classes[a].clone(),
                    component_b: flagged.components.classes[b].clone(),
                });
            }
        }
    }
    Ok(())
}

pub fn is_cn_symmetric_nac(g: &SymmetricGraph, c: &EdgeColouring) -> bool {
    check_cn_symmetric_nac(g, c).is_ok()
}

/// All Cn-symmetric NAC-colourings. The search assigns whole edge orbits,
/// so it runs over 2^(#orbits) instead of 2^|E|.
pub fn enumerate_cn_symmetric_nac(
    g: &SymmetricGraph,
    up_to_conjugation: bool,
    bounds: &SearchBounds,
) -> Result<Vec<EdgeColouring>, EnumerationError> {
    let orbits = g.edge_orbits();
    if orbits.classes.len() > bounds.max_orbits {
        return Err(EnumerationError::TooManyOrbits {
            orbits: orbits.classes.len(),
            limit: bounds.max_orbits,
        });
    }
    // Orbit decisions in spanning-tree-first order of their earliest edge.
    let order = crate::colouring::spanning_tree_first_order(g);
    let mut position = vec![usize::MAX; g.edge_count()];
    for (pos, &e) in order.iter().enumerate() {
        position[e] = pos;
    }
    let mut decisions: Vec<Vec<usize>> = orbits.classes.clone();
    decisions.sort_by_key(|class| class.iter().map(|&e| position[e]).min());

    let mut out = crate::colouring::search_colourings(g, &decisions, |c| {
        linked_partially_invariant(g, c).is_ok()
    });
    crate::colouring::finalise(&mut out, up_to_conjugation);
    Ok(out)
}
