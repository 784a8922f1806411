//! Construction of the geometric graphs under verification.
//!
//! A [`GeometricGraph`] couples an optional planar embedding with an edge
//! set, per-vertex color demands (1 = ordinary, 2 = bi-chromatic,
//! 3 = tri-chromatic) and optional 1-based display labels matching the
//! figure numbering. When both an embedding and an interval are present,
//! the edge set is exactly the set of point pairs whose distance falls in
//! the forbidden interval, and construction refuses any pair whose
//! classification is ambiguous.

use std::f64::consts::PI;

use thiserror::Error;

use crate::geometry::{
    chord_length, classify_distance, DistanceClass, GeometryError, IntervalSpec, Point2,
    ToleranceConfig,
};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("pair ({i}, {j}) at distance {dist} classifies as ambiguous against [1, {d}]")]
    AmbiguousPair { i: usize, j: usize, dist: f64, d: f64 },
    #[error("edge ({i}, {j}) out of range for {n} vertices")]
    EdgeOutOfRange { i: usize, j: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("demand must be at least 1 (vertex {0})")]
    ZeroDemand(usize),
    #[error("{0}")]
    Domain(String),
    #[error("edge ({i}, {j}) at distance {dist} does not classify as an edge")]
    EdgeNotInInterval { i: usize, j: usize, dist: f64 },
    #[error("non-edge ({i}, {j}) at distance {dist} classifies as an edge")]
    MissingEdge { i: usize, j: usize, dist: f64 },
}

/// Number of rim vertices of the 19-vertex instance.
pub const RIM_N: usize = 18;
/// Circulant offsets of the rim graph.
pub const RIM_OFFSETS: [usize; 2] = [3, 4];

/// Lower end of the theorem's interval for `d`: the step-4 chord of the
/// unit-circle 18-gon, `2 sin(2 pi / 9)`.
pub fn theorem_d_min() -> f64 {
    chord_length(18, 4, 1.0).expect("static chord")
}

/// Upper end of the theorem's interval for `d`: `sqrt(7) / 2`.
pub fn theorem_d_max() -> f64 {
    7f64.sqrt() / 2.0
}

/// A graph, optionally embedded in the plane, with per-vertex color demands.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricGraph {
    points: Option<Vec<Point2>>,
    edges: Vec<(usize, usize)>,
    demands: Vec<u8>,
    labels: Option<Vec<u32>>,
    interval: Option<IntervalSpec>,
}

impl GeometricGraph {
    /// Assembles a graph from parts, checking structural invariants.
    /// Does not re-derive edges from geometry; see [`build_interval_graph`]
    /// for that, and [`GeometricGraph::validate_embedding`] for checking a
    /// claimed edge set against an embedding.
    pub fn new(
        points: Option<Vec<Point2>>,
        edges: Vec<(usize, usize)>,
        demands: Vec<u8>,
        labels: Option<Vec<u32>>,
        interval: Option<IntervalSpec>,
    ) -> Result<Self, GraphError> {
        let n = demands.len();
        if let Some(ref pts) = points {
            if pts.len() != n {
                return Err(GraphError::Domain(format!(
                    "{} points but {} demands",
                    pts.len(),
                    n
                )));
            }
        }
        if let Some(ref ls) = labels {
            if ls.len() != n {
                return Err(GraphError::Domain(format!(
                    "{} labels but {} vertices",
                    ls.len(),
                    n
                )));
            }
        }
        for (v, &dem) in demands.iter().enumerate() {
            if dem == 0 {
                return Err(GraphError::ZeroDemand(v));
            }
        }
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(i, j)| if i <= j { (i, j) } else { (j, i) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        for &(i, j) in &edges {
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            if j >= n {
                return Err(GraphError::EdgeOutOfRange { i, j, n });
            }
        }
        let g = GeometricGraph {
            points,
            edges,
            demands,
            labels,
            interval,
        };
        if g.points.is_some() && g.interval.is_some() {
            g.validate_embedding(&ToleranceConfig::default())?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.demands.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs `(i, j)` with `i < j`, lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn points(&self) -> Option<&[Point2]> {
        self.points.as_deref()
    }

    pub fn demands(&self) -> &[u8] {
        &self.demands
    }

    pub fn labels(&self) -> Option<&[u32]> {
        self.labels.as_deref()
    }

    pub fn interval(&self) -> Option<&IntervalSpec> {
        self.interval.as_ref()
    }

    pub fn total_demand(&self) -> u32 {
        self.demands.iter().map(|&d| d as u32).sum()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Neighbor lists, index per vertex.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    /// Vertex index carrying the given display label.
    pub fn index_of_label(&self, label: u32) -> Option<usize> {
        match &self.labels {
            Some(ls) => ls.iter().position(|&l| l == label),
            None => {
                let idx = label.checked_sub(1)? as usize;
                (idx < self.vertex_count()).then_some(idx)
            }
        }
    }

    /// Checks that the claimed edge set matches interval classification of
    /// the embedding exactly, with no pair in the ambiguous shell.
    pub fn validate_embedding(&self, tolcfg: &ToleranceConfig) -> Result<(), GraphError> {
        let (points, interval) = match (&self.points, &self.interval) {
            (Some(p), Some(s)) => (p, s),
            _ => return Ok(()),
        };
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let dist = points[i].distance(&points[j]);
                let class = classify_distance(dist, interval, tolcfg);
                let has = self.has_edge(i, j);
                match class {
                    DistanceClass::Ambiguous => {
                        return Err(GraphError::AmbiguousPair {
                            i,
                            j,
                            dist,
                            d: interval.d(),
                        })
                    }
                    DistanceClass::Edge if !has => {
                        return Err(GraphError::MissingEdge { i, j, dist })
                    }
                    DistanceClass::Below | DistanceClass::Above if has => {
                        return Err(GraphError::EdgeNotInInterval { i, j, dist })
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Same graph with the listed vertices removed and indices compacted.
    /// Labels and demands follow the surviving vertices.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<GeometricGraph, GraphError> {
        let n = self.vertex_count();
        let mut keep = vec![true; n];
        for &v in removed {
            if v >= n {
                return Err(GraphError::Domain(format!("vertex {v} out of range")));
            }
            keep[v] = false;
        }
        let mut remap = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if keep[v] {
                remap[v] = next;
                next += 1;
            }
        }
        let points = self.points.as_ref().map(|pts| {
            pts.iter()
                .enumerate()
                .filter(|(v, _)| keep[*v])
                .map(|(_, &p)| p)
                .collect()
        });
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| keep[i] && keep[j])
            .map(|&(i, j)| (remap[i], remap[j]))
            .collect();
        let demands = self
            .demands
            .iter()
            .enumerate()
            .filter(|(v, _)| keep[*v])
            .map(|(_, &d)| d)
            .collect();
        let labels = self.labels.as_ref().map(|ls| {
            ls.iter()
                .enumerate()
                .filter(|(v, _)| keep[*v])
                .map(|(_, &l)| l)
                .collect()
        });
        GeometricGraph::new(points, edges, demands, labels, self.interval)
    }

    /// Copy with a different demand at one vertex.
    pub fn with_demand(&self, v: usize, demand: u8) -> Result<GeometricGraph, GraphError> {
        if v >= self.vertex_count() {
            return Err(GraphError::Domain(format!("vertex {v} out of range")));
        }
        let mut demands = self.demands.clone();
        demands[v] = demand;
        GeometricGraph::new(
            self.points.clone(),
            self.edges.clone(),
            demands,
            self.labels.clone(),
            self.interval,
        )
    }
}

/// `n` points on a circle of the given radius, counterclockwise from
/// `phase`, centered at the origin.
pub fn circle_layout(n: usize, radius: f64, phase: f64) -> Vec<Point2> {
    (0..n)
        .map(|k| {
            let a = phase + 2.0 * PI * k as f64 / n as f64;
            Point2::new(radius * a.cos(), radius * a.sin()).expect("finite circle point")
        })
        .collect()
}

/// Points on two concentric circles: `n1` at radius `r1` from phase 0,
/// then `n2` at radius `r2` from `phase2`.
pub fn two_ring_layout(n1: usize, n2: usize, r1: f64, r2: f64, phase2: f64) -> Vec<Point2> {
    let mut pts = circle_layout(n1, r1, 0.0);
    pts.extend(circle_layout(n2, r2, phase2));
    pts
}

/// Builds the interval-distance graph on the given points: edges are
/// exactly the pairs whose distance classifies inside `[1, d]`.
pub fn build_interval_graph(
    points: Vec<Point2>,
    spec: IntervalSpec,
    tolcfg: &ToleranceConfig,
    demands: Vec<u8>,
) -> Result<GeometricGraph, GraphError> {
    if points.is_empty() {
        return Err(GraphError::Domain("no points given".into()));
    }
    if points.len() != demands.len() {
        return Err(GraphError::Domain(format!(
            "{} points but {} demands",
            points.len(),
            demands.len()
        )));
    }
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let dist = points[i].distance(&points[j]);
            match classify_distance(dist, &spec, tolcfg) {
                DistanceClass::Edge => edges.push((i, j)),
                DistanceClass::Ambiguous => {
                    return Err(GraphError::AmbiguousPair {
                        i,
                        j,
                        dist,
                        d: spec.d(),
                    })
                }
                _ => {}
            }
        }
    }
    GeometricGraph::new(Some(points), edges, demands, None, Some(spec))
}

/// Rim layout: 18 points on the unit circle numbered clockwise from the
/// top, matching the figure convention (label k at angle `pi/2 - 2pi(k-1)/18`).
fn rim_layout() -> Vec<Point2> {
    (0..RIM_N)
        .map(|k| {
            let a = PI / 2.0 - 2.0 * PI * k as f64 / RIM_N as f64;
            Point2::new(a.cos(), a.sin()).expect("finite rim point")
        })
        .collect()
}

/// The 18-vertex rim: circulant C18(3,4) with unit-circle coordinates,
/// labels 1..18 clockwise, all demands 1.
pub fn build_rim18() -> GeometricGraph {
    let edges = circulant_edges(RIM_N, &RIM_OFFSETS);
    GeometricGraph::new(
        Some(rim_layout()),
        edges,
        vec![1; RIM_N],
        Some((1..=RIM_N as u32).collect()),
        None,
    )
    .expect("static rim graph")
}

/// The 19-vertex instance: the rim plus a tri-chromatic center adjacent to
/// every rim vertex, with the rim vertex labeled 1 bi-chromatic.
///
/// `d` must lie inside the theorem interval `(2 sin(2pi/9), sqrt(7)/2]`; the
/// step-4 rim chords have length exactly `2 sin(2pi/9)`, so `d` should clear
/// that bound by at least the classification margin.
pub fn build_paper19(d: f64) -> Result<GeometricGraph, GraphError> {
    if !(d > theorem_d_min() && d <= theorem_d_max()) {
        return Err(GraphError::Domain(format!(
            "d = {d} outside the theorem interval ({}, {}]",
            theorem_d_min(),
            theorem_d_max()
        )));
    }
    let mut points = rim_layout();
    points.push(Point2::new(0.0, 0.0).expect("origin"));
    let mut demands = vec![1u8; RIM_N];
    demands.push(3);
    demands[0] = 2;
    let mut labels: Vec<u32> = (1..=RIM_N as u32).collect();
    labels.push(19);
    let spec = IntervalSpec::from_d(d)?;
    let mut edges = circulant_edges(RIM_N, &RIM_OFFSETS);
    for v in 0..RIM_N {
        edges.push((v, RIM_N));
    }
    GeometricGraph::new(Some(points), edges, demands, Some(labels), Some(spec))
}

/// A circulant graph `C_n(S)`: abstract, no coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    n: usize,
    offsets: Vec<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, offsets: Vec<usize>) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Domain(format!("circulant needs n >= 3, got {n}")));
        }
        if offsets.is_empty() {
            return Err(GraphError::Domain("circulant needs at least one offset".into()));
        }
        let mut offsets = offsets;
        offsets.sort_unstable();
        offsets.dedup();
        for &o in &offsets {
            if o < 1 || 2 * o > n {
                return Err(GraphError::Domain(format!(
                    "offset {o} out of range [1, {}/2]",
                    n
                )));
            }
        }
        Ok(CirculantSpec { n, offsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }
}

fn circulant_edges(n: usize, offsets: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for v in 0..n {
        for &o in offsets {
            edges.push((v, (v + o) % n));
        }
    }
    edges
}

/// Abstract circulant graph with all demands 1 and labels 1..n.
pub fn circulant(spec: &CirculantSpec) -> GeometricGraph {
    GeometricGraph::new(
        None,
        circulant_edges(spec.n(), spec.offsets()),
        vec![1; spec.n()],
        Some((1..=spec.n() as u32).collect()),
        None,
    )
    .expect("circulant edges are structurally valid")
}

/// Complete graph on `n + 1` vertices with demands `n+1, n, ..., 1`, the
/// unit-simplex lower-bound instance. Coordinates are supplied for
/// `n <= 2` (point, unit segment, unit triangle) and omitted above that.
pub fn simplex_instance(n: usize) -> Result<GeometricGraph, GraphError> {
    if n > 8 {
        return Err(GraphError::Domain(format!(
            "simplex dimension {n} too large (max 8)"
        )));
    }
    let count = n + 1;
    let mut edges = Vec::new();
    for i in 0..count {
        for j in (i + 1)..count {
            edges.push((i, j));
        }
    }
    let demands: Vec<u8> = (1..=count as u8).rev().collect();
    let points = match n {
        0 => Some(vec![Point2::new(0.0, 0.0).unwrap()]),
        1 => Some(vec![
            Point2::new(0.0, 0.0).unwrap(),
            Point2::new(1.0, 0.0).unwrap(),
        ]),
        2 => Some(vec![
            Point2::new(0.0, 0.0).unwrap(),
            Point2::new(1.0, 0.0).unwrap(),
            Point2::new(0.5, 3f64.sqrt() / 2.0).unwrap(),
        ]),
        _ => None,
    };
    GeometricGraph::new(
        points,
        edges,
        demands,
        Some((1..=count as u32).collect()),
        None,
    )
}
