//! DOT and SVG emitters for graphs, replay transcripts and tilings.
//!
//! Output is schematic and deterministic: fixed palettes, fixed float
//! precision, no timestamps.

use thiserror::Error;

use crate::graphs::GeometricGraph;
use crate::replay::ReplayReport;
use crate::solver::SetColoring;
use crate::tiling::{Cell, HexTiling};

#[derive(Debug, Error, PartialEq)]
pub enum RenderError {
    #[error("graph has no coordinates; only DOT output is available")]
    NoCoordinates,
    #[error("coloring covers {got} vertices, graph has {want}")]
    ColoringMismatch { got: usize, want: usize },
}

/// Fill colors for color indices 0..6 (and palette colors 1..3 of the
/// deduction strip, shifted by one).
pub const PALETTE: [&str; 7] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#ffe119",
];

fn color_fill(color: u32) -> &'static str {
    PALETTE[(color as usize) % PALETTE.len()]
}

/// DOT document: topology plus the demand as a vertex attribute.
pub fn graph_to_dot(g: &GeometricGraph) -> String {
    let mut out = String::from("graph g {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let label = g
            .labels()
            .map(|ls| ls[v].to_string())
            .unwrap_or_else(|| (v + 1).to_string());
        out.push_str(&format!(
            "  v{v} [label=\"{label}\", demand={}];\n",
            g.demands()[v]
        ));
    }
    for &(i, j) in g.edges() {
        out.push_str(&format!("  v{i} -- v{j};\n"));
    }
    out.push_str("}\n");
    out
}

/// SVG rendering of an embedded graph, optionally colored by a set
/// coloring; a vertex with several colors is drawn as pie sectors.
pub fn graph_to_svg(
    g: &GeometricGraph,
    coloring: Option<&SetColoring>,
) -> Result<String, RenderError> {
    let points = g.points().ok_or(RenderError::NoCoordinates)?;
    if let Some(c) = coloring {
        if c.vertex_count() != g.vertex_count() {
            return Err(RenderError::ColoringMismatch {
                got: c.vertex_count(),
                want: g.vertex_count(),
            });
        }
    }
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in points {
        min_x = min_x.min(p.x());
        min_y = min_y.min(p.y());
        max_x = max_x.max(p.x());
        max_y = max_y.max(p.y());
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let size = 600.0;
    let pad = 40.0;
    let scale = (size - 2.0 * pad) / span;
    // svg y grows downward
    let tx = |x: f64| pad + (x - min_x) * scale;
    let ty = |y: f64| size - pad - (y - min_y) * scale;

    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    );
    for &(i, j) in g.edges() {
        out.push_str(&format!(
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#888\" stroke-width=\"1\"/>\n",
            tx(points[i].x()),
            ty(points[i].y()),
            tx(points[j].x()),
            ty(points[j].y())
        ));
    }
    let r = 12.0;
    for v in 0..g.vertex_count() {
        let (cx, cy) = (tx(points[v].x()), ty(points[v].y()));
        match coloring.map(|c| c.colors_of(v)) {
            Some(colors) if colors.len() == 1 => {
                out.push_str(&format!(
                    "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{r}\" fill=\"{}\" stroke=\"black\"/>\n",
                    color_fill(colors[0])
                ));
            }
            Some(colors) if colors.len() > 1 => {
                let n = colors.len() as f64;
                for (slice, &color) in colors.iter().enumerate() {
                    let a0 = 2.0 * std::f64::consts::PI * slice as f64 / n;
                    let a1 = 2.0 * std::f64::consts::PI * (slice as f64 + 1.0) / n;
                    let (x0, y0) = (cx + r * a0.cos(), cy + r * a0.sin());
                    let (x1, y1) = (cx + r * a1.cos(), cy + r * a1.sin());
                    out.push_str(&format!(
                        "  <path d=\"M {cx:.2} {cy:.2} L {x0:.2} {y0:.2} A {r} {r} 0 0 1 {x1:.2} {y1:.2} Z\" fill=\"{}\" stroke=\"black\"/>\n",
                        color_fill(color)
                    ));
                }
            }
            _ => {
                out.push_str(&format!(
                    "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{r}\" fill=\"white\" stroke=\"black\"/>\n"
                ));
            }
        }
        let label = g
            .labels()
            .map(|ls| ls[v].to_string())
            .unwrap_or_else(|| (v + 1).to_string());
        out.push_str(&format!(
            "  <text x=\"{cx:.2}\" y=\"{:.2}\" font-size=\"10\" text-anchor=\"middle\">{label}</text>\n",
            cy + 3.5
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Strip diagram of a replay: vertex numbers at the top, one row per
/// step, determined colors filled, bi-chromatic cells split, the
/// conflicting pair shaded last.
pub fn replay_to_svg(report: &ReplayReport) -> String {
    let cols = crate::replay::RIM_N;
    let cell = 30.0;
    let header = 24.0;
    let rows = report.trace.len();
    let label_w = 260.0;
    let width = label_w + cols as f64 * cell + 20.0;
    let height = header + rows as f64 * cell + 20.0;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\" font-family=\"monospace\">\n"
    );
    for v in 0..cols {
        out.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"16\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
            label_w + (v as f64 + 0.5) * cell,
            v + 1
        ));
    }
    // the strip draws palette colors 1..3 with fills 0..2
    for (row, entry) in report.trace.iter().enumerate() {
        let y = header + row as f64 * cell;
        out.push_str(&format!(
            "  <text x=\"6\" y=\"{:.1}\" font-size=\"10\">{}</text>\n",
            y + cell * 0.6,
            xml_escape(&entry.text)
        ));
        let cells: Vec<&str> = entry.state_row.split(' ').collect();
        for (v, token) in cells.iter().enumerate() {
            let x = label_w + v as f64 * cell;
            match *token {
                "." => out.push_str(&format!(
                    "  <rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{cell}\" height=\"{cell}\" fill=\"white\" stroke=\"#bbb\"/>\n"
                )),
                "*" => {
                    out.push_str(&format!(
                        "  <rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{:.1}\" height=\"{cell}\" fill=\"{}\" stroke=\"#bbb\"/>\n",
                        cell / 2.0,
                        color_fill(0)
                    ));
                    out.push_str(&format!(
                        "  <rect x=\"{:.1}\" y=\"{y:.1}\" width=\"{:.1}\" height=\"{cell}\" fill=\"{}\" stroke=\"#bbb\"/>\n",
                        x + cell / 2.0,
                        cell / 2.0,
                        color_fill(1)
                    ));
                }
                digit => {
                    let color: u32 = digit.parse().unwrap_or(1);
                    out.push_str(&format!(
                        "  <rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{cell}\" height=\"{cell}\" fill=\"{}\" stroke=\"#bbb\"/>\n",
                        color_fill(color - 1)
                    ));
                    out.push_str(&format!(
                        "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" text-anchor=\"middle\">{digit}</text>\n",
                        x + cell / 2.0,
                        y + cell * 0.65
                    ));
                }
            }
        }
    }
    if let Some((u, v)) = report.contradiction {
        let y = header + rows as f64 * cell;
        out.push_str(&format!(
            "  <text x=\"6\" y=\"{:.1}\" font-size=\"11\">conflict: edge ({u}, {v})</text>\n",
            y + 14.0
        ));
        for label in [u, v] {
            let x = label_w + (label - 1) as f64 * cell;
            let row_y = header + (rows - 1) as f64 * cell;
            out.push_str(&format!(
                "  <rect x=\"{x:.1}\" y=\"{row_y:.1}\" width=\"{cell}\" height=\"{cell}\" fill=\"#55555580\" stroke=\"black\" stroke-width=\"2\"/>\n"
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}

/// A colored patch of the hexagonal 7-coloring, `rings` cells out from
/// the origin.
pub fn tiling_to_svg(tiling: &HexTiling, rings: u32) -> String {
    let r = rings as i32;
    let scale = 40.0 / tiling.side();
    let span = 3f64.sqrt() * tiling.side() * (rings as f64 + 1.0) * scale;
    let size = 2.0 * span + 20.0;
    let center = size / 2.0;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size:.0}\" height=\"{size:.0}\" viewBox=\"0 0 {size:.0} {size:.0}\">\n"
    );
    let mut cells: Vec<Cell> = Vec::new();
    for q in -r..=r {
        for row in -r..=r {
            let cell = Cell::new(q, row);
            if cell.ring() <= rings {
                cells.push(cell);
            }
        }
    }
    cells.sort();
    for cell in cells {
        let polygon = tiling.polygon(cell);
        let pts: Vec<String> = polygon
            .vertices()
            .iter()
            .map(|p| {
                format!(
                    "{:.2},{:.2}",
                    center + p.x() * scale,
                    center - p.y() * scale
                )
            })
            .collect();
        let color = tiling.color(cell);
        out.push_str(&format!(
            "  <polygon points=\"{}\" fill=\"{}\" stroke=\"black\" stroke-width=\"0.5\"/>\n",
            pts.join(" "),
            color_fill(color as u32)
        ));
        let c = tiling.center(cell);
        out.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\" text-anchor=\"middle\">{color}</text>\n",
            center + c.x() * scale,
            center - c.y() * scale + 3.0
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
