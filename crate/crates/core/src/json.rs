//! Canonical JSON document types shared by the library and the CLI.
//!
//! Canonical form: vertices sorted, edges listed smaller-endpoint-first and
//! sorted, maps emitted in key order, floats rounded to 12 significant
//! digits. Serialising a parsed canonical file reproduces it byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Graph file: `{ "n": 4, "vertices": [...], "edges": [["u","v"],...], "omega": {...} }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub omega: BTreeMap<String, String>,
}

/// Colouring file: `{ "red": [["u","v"],...], "blue": [...] }`.
/// The union of both lists must equal the graph's edge set exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringDoc {
    pub red: Vec<(String, String)>,
    pub blue: Vec<(String, String)>,
}

/// One sampled placement of the motion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameDoc {
    pub t: f64,
    pub positions: BTreeMap<String, (f64, f64)>,
}

/// Motion file: `{ "n": 4, "frames": [ { "t": 0.0, "positions": {...} }, ... ] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MotionDoc {
    pub n: usize,
    pub frames: Vec<FrameDoc>,
}

/// A reported problem, both for structural errors and invariant violations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IssueDoc {
    pub kind: String,
    pub detail: String,
}

/// Output of `validate`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationDoc {
    pub ok: bool,
    pub structural_errors: Vec<IssueDoc>,
    pub violations: Vec<IssueDoc>,
}

/// Output of the `check` subcommands: `{ "ok": bool, "reason": ..., "witness": ... }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub ok: bool,
    pub reason: Option<String>,
    pub witness: Option<WitnessDoc>,
}

/// Machine-readable witness attached to a failed check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessDoc {
    /// Only one colour is used.
    NotSurjective { missing: String },
    /// `edge` closes a path of the opposite colour, giving a cycle with a
    /// single `colour` edge.
    AlmostCycle {
        colour: String,
        edge: (String, String),
        path: Vec<String>,
    },
    /// The colouring differs on two edges of one orbit.
    OrbitMismatch {
        edge: (String, String),
        image: (String, String),
    },
    /// An edge joins two distinct partially invariant components of one colour.
    LinkedInvariantComponents {
        colour: String,
        edge: (String, String),
        component_a: Vec<String>,
        component_b: Vec<String>,
    },
}

/// Result list of the `list` subcommands; `colourings` omitted with `--count-only`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringListDoc {
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colourings: Option<Vec<ColouringDoc>>,
}

/// One closure round; pairs are flattened out of their orbit grouping and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureRoundDoc {
    pub added: Vec<(String, String)>,
}

/// Output of `closure`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureDoc {
    pub complete: bool,
    pub rounds: Vec<ClosureRoundDoc>,
    pub degenerate_pairs: Vec<(String, String)>,
    pub verdict: String,
}

/// Output of `proper`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProperDoc {
    pub verdict: String,
    pub degenerate_pairs: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_colouring: Option<ColouringDoc>,
}

/// Output of `motion verify`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub ok: bool,
    pub edge_length_residual: f64,
    pub symmetry_residual: f64,
    pub non_triviality_margin: f64,
    pub max_edge_length: f64,
    pub min_pairwise_distance: f64,
    pub non_injective_frames: Vec<usize>,
    pub edge_lengths_ok: bool,
    pub symmetry_ok: bool,
    pub non_trivial: bool,
}

/// Round to 12 significant digits and normalise negative zero.
///
/// Every float written to a document goes through this, so outputs are
/// reproducible and a serialise/parse round trip is the identity from the
/// first serialisation on.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0; // normalises -0.0
    }
    format!("{x:.11e}").parse().expect("formatted float reparses")
}

/// Canonical serialisation: pretty JSON with a trailing newline.
pub fn to_canonical_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("doc types serialise");
    s.push('\n');
    s
}

impl MotionDoc {
    /// Apply [`round12`] to every float in the document.
    pub fn rounded(mut self) -> Self {
        for frame in &mut self.frames {
            frame.t = round12(frame.t);
            for pos in frame.positions.values_mut() {
                *pos = (round12(pos.0), round12(pos.1));
            }
        }
        self
    }
}

impl VerifyDoc {
    pub fn rounded(mut self) -> Self {
        self.edge_length_residual = round12(self.edge_length_residual);
        self.symmetry_residual = round12(self.symmetry_residual);
        self.non_triviality_margin = round12(self.non_triviality_margin);
        self.max_edge_length = round12(self.max_edge_length);
        self.min_pairwise_distance = round12(self.min_pairwise_distance);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round12_truncates_and_fixes_negative_zero() {
        assert_eq!(round12(-0.0).to_bits(), 0.0_f64.to_bits());
        assert_eq!(round12(0.782), 0.782);
        let third = round12(1.0 / 3.0);
        assert_eq!(format!("{third}"), "0.333333333333");
        // idempotent
        assert_eq!(round12(third), third);
    }

    #[test]
    fn canonical_graph_round_trip_is_bit_exact() {
        let doc = GraphDoc {
            n: 2,
            vertices: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![("a".into(), "b".into()), ("a".into(), "c".into())],
            omega: [("a", "a"), ("b", "c"), ("c", "b")]
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        };
        let text = to_canonical_string(&doc);
        let parsed: GraphDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(to_canonical_string(&parsed), text);
    }
}
