//! Command line surface for deciding rotationally symmetric flexibility:
//! graph validation, (symmetric) NAC-colouring enumeration and checking,
//! motion construction/sampling/verification, the constant distance
//! closure with its verdict, and SVG rendering of sampled frames.

mod errors;
mod io;
mod svg;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use symflex_core::closure::proper_flex_verdict;
use symflex_core::colouring::{check_nac, enumerate_nac, NacFailure, SearchBounds};
use symflex_core::json::{CheckDoc, ColouringListDoc, VerifyDoc, WitnessDoc};
use symflex_core::motion::{
    construct_motion, frames_from_doc, motion_to_doc, uniform_ts, verify_motion, VerifyTolerances,
};
use symflex_core::symnac::{check_cn_symmetric_nac, enumerate_cn_symmetric_nac, SymNacFailure};
use symflex_core::{validate_graph_doc, SymmetricGraph};

use errors::{CliError, EXIT_OPERATION};

#[derive(Parser)]
#[command(
    name = "symflex",
    about = "Rotationally symmetric flexibility of plane frameworks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ListArgs {
    /// Graph file (JSON).
    graph: PathBuf,
    /// Keep one representative per conjugate pair.
    #[arg(long)]
    up_to_conjugation: bool,
    /// Emit only the number of colourings.
    #[arg(long)]
    count_only: bool,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Graph file (JSON).
    graph: PathBuf,
    /// Colouring file (JSON).
    colouring: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum NacCommand {
    /// Enumerate all NAC-colourings.
    List {
        #[command(flatten)]
        args: ListArgs,
        /// Refuse graphs with more edges than this.
        #[arg(long, default_value_t = SearchBounds::default().max_edges)]
        max_edges: usize,
    },
    /// Check one colouring against the NAC conditions.
    Check {
        #[command(flatten)]
        args: CheckArgs,
    },
}

#[derive(Subcommand)]
enum SymnacCommand {
    /// Enumerate all Cn-symmetric NAC-colourings.
    List {
        #[command(flatten)]
        args: ListArgs,
        /// Refuse graphs with more edge orbits than this.
        #[arg(long, default_value_t = SearchBounds::default().max_orbits)]
        max_orbits: usize,
    },
    /// Check one colouring against the Cn-symmetric NAC conditions.
    Check {
        #[command(flatten)]
        args: CheckArgs,
    },
}

#[derive(Subcommand)]
enum MotionCommand {
    /// Construct the motion for a symmetric NAC-colouring and sample
    /// uniformly spaced frames.
    Build {
        graph: PathBuf,
        colouring: PathBuf,
        /// Number of uniformly spaced parameters on [0, 2*pi).
        #[arg(long, default_value_t = 360)]
        frames: usize,
        /// Draw base points from a seeded sampler instead of the
        /// deterministic scheme.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the motion at explicit parameter values.
    Sample {
        graph: PathBuf,
        colouring: PathBuf,
        /// Comma-separated parameter values in radians.
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify sampled frames: constant edge lengths, n-fold symmetry,
    /// injectivity and non-triviality.
    Verify {
        /// Frames file produced by `motion build` or `motion sample`.
        frames: PathBuf,
        /// Graph the frames belong to.
        #[arg(long)]
        graph: PathBuf,
        /// Residual tolerance for edge lengths and symmetry.
        #[arg(long, default_value_t = VerifyTolerances::default().equality)]
        tolerance: f64,
        /// Non-triviality threshold relative to the longest edge.
        #[arg(long, default_value_t = VerifyTolerances::default().non_triviality_rel)]
        non_triviality: f64,
        /// Distance under which two vertices count as coincident.
        #[arg(long, default_value_t = VerifyTolerances::default().injectivity)]
        injectivity: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Cn-symmetric graph file and report every violation.
    Validate {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// NAC-colouring operations.
    #[command(subcommand)]
    Nac(NacCommand),
    /// Cn-symmetric NAC-colouring operations.
    #[command(subcommand)]
    Symnac(SymnacCommand),
    /// Motion construction, sampling and verification.
    #[command(subcommand)]
    Motion(MotionCommand),
    /// Compute the Cn-symmetric constant distance closure with its trace
    /// and verdict.
    Closure {
        graph: PathBuf,
        #[arg(long, default_value_t = SearchBounds::default().max_orbits)]
        max_orbits: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report whether a proper symmetric flexible placement exists.
    Proper {
        graph: PathBuf,
        #[arg(long, default_value_t = SearchBounds::default().max_orbits)]
        max_orbits: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render sampled frames as SVG files, one per frame.
    Render {
        /// Frames file produced by `motion build` or `motion sample`.
        frames: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        /// Colour-code edges with this colouring.
        #[arg(long)]
        colouring: Option<PathBuf>,
        /// Output directory for the SVG files.
        #[arg(long)]
        out_dir: PathBuf,
        /// File name prefix.
        #[arg(long, default_value = "frame")]
        prefix: String,
    },
}

fn main() {
    symflex_core::par::apply_thread_cap_from_env();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}

fn named_edge(g: &SymmetricGraph, (u, v): (usize, usize)) -> (String, String) {
    let (a, b) = (g.name(u).to_string(), g.name(v).to_string());
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn nac_witness(g: &SymmetricGraph, failure: &NacFailure) -> (String, WitnessDoc) {
    match failure {
        NacFailure::NotSurjective { missing } => (
            format!("not surjective: no {} edge", missing.as_str()),
            WitnessDoc::NotSurjective { missing: missing.as_str().to_string() },
        ),
        NacFailure::AlmostCycle { colour, edge, path } => (
            format!(
                "almost cycle: {} edge {}-{} closes a {} path",
                colour.as_str(),
                g.name(edge.0),
                g.name(edge.1),
                colour.other().as_str()
            ),
            WitnessDoc::AlmostCycle {
                colour: colour.as_str().to_string(),
                edge: named_edge(g, *edge),
                path: path.iter().map(|&v| g.name(v).to_string()).collect(),
            },
        ),
    }
}

fn symnac_witness(g: &SymmetricGraph, failure: &SymNacFailure) -> (String, WitnessDoc) {
    match failure {
        SymNacFailure::NotNac(inner) => {
            let (reason, witness) = nac_witness(g, inner);
            (format!("not a NAC-colouring: {reason}"), witness)
        }
        SymNacFailure::NotOrbitConstant { edge, image } => (
            format!(
                "not constant on edge orbits: {}-{} and its image {}-{} differ",
                g.name(edge.0),
                g.name(edge.1),
                g.name(image.0),
                g.name(image.1)
            ),
            WitnessDoc::OrbitMismatch { edge: named_edge(g, *edge), image: named_edge(g, *image) },
        ),
        SymNacFailure::LinkedPartiallyInvariant { colour, edge, component_a, component_b } => (
            format!(
                "two distinct partially invariant {} components are joined by edge {}-{}",
                colour.as_str(),
                g.name(edge.0),
                g.name(edge.1)
            ),
            WitnessDoc::LinkedInvariantComponents {
                colour: colour.as_str().to_string(),
                edge: named_edge(g, *edge),
                component_a: component_a.iter().map(|&v| g.name(v).to_string()).collect(),
                component_b: component_b.iter().map(|&v| g.name(v).to_string()).collect(),
            },
        ),
    }
}

fn list_output(
    g: &SymmetricGraph,
    colourings: Vec<symflex_core::EdgeColouring>,
    count_only: bool,
) -> ColouringListDoc {
    ColouringListDoc {
        count: colourings.len(),
        colourings: if count_only {
            None
        } else {
            Some(colourings.iter().map(|c| c.to_doc(g)).collect())
        },
    }
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Validate { graph, out } => {
            let doc = io::read_json(&graph)?;
            let report = validate_graph_doc(&doc);
            io::emit_doc(out.as_ref(), &report.to_doc())?;
            Ok(if report.is_valid() { 0 } else { EXIT_OPERATION })
        }

        Command::Nac(NacCommand::List { args, max_edges }) => {
            let g = io::load_graph(&args.graph)?;
            let bounds = SearchBounds { max_edges, ..SearchBounds::default() };
            let found = enumerate_nac(&g, args.up_to_conjugation, &bounds)?;
            io::emit_doc(args.out.as_ref(), &list_output(&g, found, args.count_only))?;
            Ok(0)
        }

        Command::Nac(NacCommand::Check { args }) => {
            let g = io::load_graph(&args.graph)?;
            let c = io::load_colouring(&g, &args.colouring)?;
            let doc = match check_nac(&g, &c) {
                Ok(()) => CheckDoc { ok: true, reason: None, witness: None },
                Err(failure) => {
                    let (reason, witness) = nac_witness(&g, &failure);
                    CheckDoc { ok: false, reason: Some(reason), witness: Some(witness) }
                }
            };
            io::emit_doc(args.out.as_ref(), &doc)?;
            Ok(if doc.ok { 0 } else { EXIT_OPERATION })
        }

        Command::Symnac(SymnacCommand::List { args, max_orbits }) => {
            let g = io::load_graph(&args.graph)?;
            let bounds = SearchBounds { max_orbits, ..SearchBounds::default() };
            let found = enumerate_cn_symmetric_nac(&g, args.up_to_conjugation, &bounds)?;
            io::emit_doc(args.out.as_ref(), &list_output(&g, found, args.count_only))?;
            Ok(0)
        }

        Command::Symnac(SymnacCommand::Check { args }) => {
            let g = io::load_graph(&args.graph)?;
            let c = io::load_colouring(&g, &args.colouring)?;
            let doc = match check_cn_symmetric_nac(&g, &c) {
                Ok(()) => CheckDoc { ok: true, reason: None, witness: None },
                Err(failure) => {
                    let (reason, witness) = symnac_witness(&g, &failure);
                    CheckDoc { ok: false, reason: Some(reason), witness: Some(witness) }
                }
            };
            io::emit_doc(args.out.as_ref(), &doc)?;
            Ok(if doc.ok { 0 } else { EXIT_OPERATION })
        }

        Command::Motion(MotionCommand::Build { graph, colouring, frames, seed, out }) => {
            let g = io::load_graph(&graph)?;
            let c = io::load_colouring(&g, &colouring)?;
            let motion = construct_motion(&g, &c, None, seed)?;
            let doc = motion_to_doc(&g, &motion, &uniform_ts(frames));
            io::emit_doc(out.as_ref(), &doc)?;
            Ok(0)
        }

        Command::Motion(MotionCommand::Sample { graph, colouring, t, seed, out }) => {
            let g = io::load_graph(&graph)?;
            let c = io::load_colouring(&g, &colouring)?;
            let motion = construct_motion(&g, &c, None, seed)?;
            let doc = motion_to_doc(&g, &motion, &t);
            io::emit_doc(out.as_ref(), &doc)?;
            Ok(0)
        }

        Command::Motion(MotionCommand::Verify {
            frames,
            graph,
            tolerance,
            non_triviality,
            injectivity,
            out,
        }) => {
            let g = io::load_graph(&graph)?;
            let doc = io::load_motion(&frames)?;
            let placements = frames_from_doc(&g, &doc)?;
            let tolerances = VerifyTolerances {
                equality: tolerance,
                non_triviality_rel: non_triviality,
                injectivity,
            };
            let report = verify_motion(&g, &placements, tolerances)?;
            let out_doc = VerifyDoc {
                ok: report.ok(),
                edge_length_residual: report.edge_length_residual,
                symmetry_residual: report.symmetry_residual,
                non_triviality_margin: report.non_triviality_margin,
                max_edge_length: report.max_edge_length,
                min_pairwise_distance: report.min_pairwise_distance(),
                non_injective_frames: report.non_injective_frames(),
                edge_lengths_ok: report.edge_lengths_ok(),
                symmetry_ok: report.symmetry_ok(),
                non_trivial: report.non_trivial(),
            }
            .rounded();
            io::emit_doc(out.as_ref(), &out_doc)?;
            Ok(if out_doc.ok { 0 } else { EXIT_OPERATION })
        }

        Command::Closure { graph, max_orbits, out } => {
            let g = io::load_graph(&graph)?;
            let bounds = SearchBounds { max_orbits, ..SearchBounds::default() };
            let report = proper_flex_verdict(&g, &bounds)?;
            io::emit_doc(out.as_ref(), &report.to_closure_doc(&g))?;
            Ok(0)
        }

        Command::Proper { graph, max_orbits, out } => {
            let g = io::load_graph(&graph)?;
            let bounds = SearchBounds { max_orbits, ..SearchBounds::default() };
            let report = proper_flex_verdict(&g, &bounds)?;
            io::emit_doc(out.as_ref(), &report.to_proper_doc(&g))?;
            Ok(0)
        }

        Command::Render { frames, graph, colouring, out_dir, prefix } => {
            let g = io::load_graph(&graph)?;
            let doc = io::load_motion(&frames)?;
            let placements = frames_from_doc(&g, &doc)?;
            let colouring = match colouring {
                Some(path) => Some(io::load_colouring(&g, &path)?),
                None => None,
            };
            let view = svg::view_box(&placements);
            for (idx, frame) in placements.iter().enumerate() {
                let body = svg::render_frame(&g, frame, colouring.as_ref(), view);
                let path = out_dir.join(format!("{prefix}_{idx:04}.svg"));
                io::write_atomic(&path, &body)?;
            }
            eprintln!("wrote {} frames to {}", placements.len(), out_dir.display());
            Ok(0)
        }
    }
}
