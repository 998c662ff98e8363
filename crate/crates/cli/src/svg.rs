//! SVG rendering of sampled motion frames: one file per frame with a
//! shared viewBox (bounding box over all frames plus a 10% margin) so the
//! animation does not jitter. Edges are colour-coded when a colouring is
//! given.

use symflex_core::colouring::{Colour, EdgeColouring};
use symflex_core::json::round12;
use symflex_core::motion::Placement;
use symflex_core::SymmetricGraph;

const RED: &str = "#cc3344";
const BLUE: &str = "#3366cc";
const PLAIN: &str = "#444444";

fn num(x: f64) -> String {
    format!("{}", round12(x))
}

/// Shared viewBox over all frames. The y axis is flipped at emission time
/// so the drawing matches mathematical orientation.
pub fn view_box(frames: &[Placement]) -> (f64, f64, f64, f64) {
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for frame in frames {
        for p in &frame.positions {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(-p.y);
            max_y = max_y.max(-p.y);
        }
    }
    if !min_x.is_finite() {
        return (0.0, 0.0, 1.0, 1.0);
    }
    let width = (max_x - min_x).max(1e-6);
    let height = (max_y - min_y).max(1e-6);
    let margin_x = 0.1 * width;
    let margin_y = 0.1 * height;
    (min_x - margin_x, min_y - margin_y, width + 2.0 * margin_x, height + 2.0 * margin_y)
}

pub fn render_frame(
    g: &SymmetricGraph,
    frame: &Placement,
    colouring: Option<&EdgeColouring>,
    view: (f64, f64, f64, f64),
) -> String {
    let (x0, y0, w, h) = view;
    let stroke_width = 0.01 * w.max(h);
    let radius = 1.5 * stroke_width;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"480\" height=\"480\">\n",
        num(x0),
        num(y0),
        num(w),
        num(h)
    ));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let colour = match colouring.map(|c| c.colour(e)) {
            Some(Colour::Red) => RED,
            Some(Colour::Blue) => BLUE,
            None => PLAIN,
        };
        let (p, q) = (frame.positions[u], frame.positions[v]);
        out.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\"/>\n",
            num(p.x),
            num(-p.y),
            num(q.x),
            num(-q.y),
            colour,
            num(stroke_width)
        ));
    }
    for p in &frame.positions {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#111111\"/>\n",
            num(p.x),
            num(-p.y),
            num(radius)
        ));
    }
    out.push_str("</svg>\n");
    out
}
