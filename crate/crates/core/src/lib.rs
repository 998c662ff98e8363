//! Deciding n-fold rotationally symmetric flexibility of plane frameworks.
//!
//! The pipeline: validate a graph with a cyclic symmetry ([`graph`]),
//! enumerate its NAC-colourings ([`colouring`]) and the symmetric ones
//! among them ([`symnac`]), build and verify a symmetry-preserving motion
//! from such a colouring ([`motion`]), and certify non-existence of proper
//! symmetric flexes through the constant distance closure ([`closure`]).
//!
//! All operations are pure; enumeration and frame verification fan out
//! over worker threads when the default `parallel` feature is enabled and
//! degrade to sequential loops without it. Outputs are canonically ordered
//! either way.

pub mod closure;
pub mod colouring;
pub mod dsu;
pub mod graph;
pub mod json;
pub mod motion;
pub mod par;
pub mod symnac;

pub use closure::{constant_distance_closure, proper_flex_verdict, u_pairs, ClosureResult, Verdict};
pub use colouring::{
    check_nac, enumerate_nac, is_nac, monochromatic_components, Colour, EdgeColouring,
    EnumerationError, NacFailure, SearchBounds,
};
pub use graph::{validate_graph_doc, OrbitPartition, SymmetricGraph, ValidationReport};
pub use motion::{
    check_proper_conditions, choose_base_points, construct_motion, sample_motion, uniform_ts,
    verify_motion, BasePoints, MotionError, ParametricMotion, Placement, VerificationReport,
    VerifyTolerances,
};
pub use symnac::{
    check_cn_symmetric_nac, component_symmetry_flags, enumerate_cn_symmetric_nac,
    is_cn_symmetric_nac, ComponentFlags, SymNacFailure,
};
