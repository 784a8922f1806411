//! Graph and coloring interchange documents.
//!
//! A graph is a single JSON document with fields `version`, optional
//! `points` (array of `[x, y]`), `edges` (array of `[i, j]`, 0-based),
//! `demands`, optional `labels` and optional `interval` (`{"d": ...}`).
//! Colorings travel in a companion document `{"colorings": [...]}` where
//! each coloring lists the color set of every vertex in order.
//!
//! Loading re-validates everything, including re-classifying every point
//! pair against the interval when an embedding is present, so a
//! hand-written file with a wrong or boundary-straddling edge set is
//! rejected with a diagnostic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{GeometryError, IntervalSpec, Point2, ToleranceConfig};
use crate::graphs::{GeometricGraph, GraphError};
use crate::solver::SetColoring;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum InterchangeError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported document version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("validation error: {0}")]
    Validation(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
struct IntervalDoc {
    d: f64,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    points: Option<Vec<[f64; 2]>>,
    edges: Vec<[usize; 2]>,
    demands: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    interval: Option<IntervalDoc>,
}

#[derive(Serialize, Deserialize)]
struct ColoringDoc {
    colorings: Vec<Vec<Vec<u32>>>,
}

/// Serializes a graph to the interchange document.
pub fn graph_to_json(g: &GeometricGraph) -> String {
    let doc = GraphDoc {
        version: FORMAT_VERSION,
        points: g
            .points()
            .map(|pts| pts.iter().map(|p| [p.x(), p.y()]).collect()),
        edges: g.edges().iter().map(|&(i, j)| [i, j]).collect(),
        demands: g.demands().to_vec(),
        labels: g.labels().map(|ls| ls.to_vec()),
        interval: g.interval().map(|spec| IntervalDoc { d: spec.d() }),
    };
    serde_json::to_string_pretty(&doc).expect("graph document serializes")
}

/// Parses and fully re-validates a graph document.
pub fn graph_from_json(text: &str) -> Result<GeometricGraph, InterchangeError> {
    graph_from_json_with(text, &ToleranceConfig::default())
}

pub fn graph_from_json_with(
    text: &str,
    tolcfg: &ToleranceConfig,
) -> Result<GeometricGraph, InterchangeError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    if doc.version != FORMAT_VERSION {
        return Err(InterchangeError::Version(doc.version));
    }
    let points = doc
        .points
        .map(|pts| {
            pts.into_iter()
                .map(|[x, y]| Point2::new(x, y))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    let interval = doc.interval.map(|i| IntervalSpec::from_d(i.d)).transpose()?;
    let edges = doc.edges.into_iter().map(|[i, j]| (i, j)).collect();
    let g = GeometricGraph::new(points, edges, doc.demands, doc.labels, interval)?;
    g.validate_embedding(tolcfg)?;
    Ok(g)
}

/// Serializes colorings to the companion document.
pub fn colorings_to_json(colorings: &[SetColoring]) -> String {
    let doc = ColoringDoc {
        colorings: colorings.iter().map(|c| c.as_lists()).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("coloring document serializes")
}

pub fn colorings_from_json(text: &str) -> Result<Vec<SetColoring>, InterchangeError> {
    let doc: ColoringDoc = serde_json::from_str(text)?;
    Ok(doc
        .colorings
        .iter()
        .map(|lists| SetColoring::from_lists(lists))
        .collect())
}
