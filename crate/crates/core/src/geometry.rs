//! Planar geometry with an explicit tolerance policy.
//!
//! Everything here is plain `f64`; the constructions we verify keep all
//! distance comparisons at least `margin` away from the interval
//! boundaries, so no exact arithmetic is needed. Classification makes the
//! policy explicit: a distance inside the boundary shell `(tol, margin)`
//! is `Ambiguous` and graph construction refuses it.

use std::f64::consts::PI;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("coordinate is not finite: ({0}, {1})")]
    NonFinite(f64, f64),
    #[error("eps must lie in [0, 1), got {0}")]
    EpsOutOfRange(f64),
    #[error("d must be >= 1 and finite, got {0}")]
    DOutOfRange(f64),
    #[error("chord step k={k} out of range for n={n}")]
    ChordStep { n: u32, k: u32 },
    #[error("polygon radius/size parameter must be positive, got {0}")]
    NonPositive(f64),
    #[error("tolerance config invalid: tol={tol}, margin={margin}")]
    BadTolerance { tol: f64, margin: f64 },
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
}

/// A point of the plane. Coordinates are finite by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    x: f64,
    y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if x.is_finite() && y.is_finite() {
            Ok(Point2 { x, y })
        } else {
            Err(GeometryError::NonFinite(x, y))
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn distance(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// The forbidden-distance interval in both of its interchangeable forms:
/// asymmetric `[1, d]` and symmetric `[1 - eps, 1 + eps]` after rescaling,
/// with `d = (1 + eps) / (1 - eps)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalSpec {
    d: f64,
    eps: f64,
}

impl IntervalSpec {
    /// Builds the interval from its symmetric half-width `eps in [0, 1)`.
    pub fn from_eps(eps: f64) -> Result<Self, GeometryError> {
        if !eps.is_finite() || !(0.0..1.0).contains(&eps) {
            return Err(GeometryError::EpsOutOfRange(eps));
        }
        Ok(IntervalSpec {
            d: (1.0 + eps) / (1.0 - eps),
            eps,
        })
    }

    /// Builds the interval from its upper end `d >= 1`.
    pub fn from_d(d: f64) -> Result<Self, GeometryError> {
        if !d.is_finite() || d < 1.0 {
            return Err(GeometryError::DOutOfRange(d));
        }
        Ok(IntervalSpec {
            d,
            eps: (d - 1.0) / (d + 1.0),
        })
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }
}

/// Comparison tolerances for distance classification.
///
/// `tol` absorbs floating-point noise on values meant to sit exactly on a
/// boundary; `margin` is the minimum clearance a distance must keep from a
/// boundary to classify unambiguously. Anything in between is `Ambiguous`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    tol: f64,
    margin: f64,
}

impl ToleranceConfig {
    pub const DEFAULT_TOL: f64 = 1e-9;
    pub const DEFAULT_MARGIN: f64 = 1e-6;

    pub fn new(tol: f64, margin: f64) -> Result<Self, GeometryError> {
        if tol > 0.0 && margin >= tol && tol.is_finite() && margin.is_finite() {
            Ok(ToleranceConfig { tol, margin })
        } else {
            Err(GeometryError::BadTolerance { tol, margin })
        }
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn margin(&self) -> f64 {
        self.margin
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            tol: Self::DEFAULT_TOL,
            margin: Self::DEFAULT_MARGIN,
        }
    }
}

/// Where a distance falls relative to the forbidden interval `[1, d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceClass {
    Below,
    Edge,
    Above,
    /// Inside a boundary shell: farther than `tol` from the boundary but
    /// closer than `margin`. Graph construction treats this as an error.
    Ambiguous,
}

/// Length of the step-`k` chord of a regular `n`-gon of the given
/// circumradius: `2 r sin(k pi / n)`.
pub fn chord_length(n: u32, k: u32, radius: f64) -> Result<f64, GeometryError> {
    if n < 3 || k < 1 || 2 * k > n {
        return Err(GeometryError::ChordStep { n, k });
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(GeometryError::NonPositive(radius));
    }
    Ok(2.0 * radius * (k as f64 * PI / n as f64).sin())
}

/// Classifies a distance against `[1, spec.d]` with inclusive boundaries.
///
/// A distance within `tol` of a boundary counts as sitting on it (Edge);
/// clear of both boundaries by at least `margin` it classifies by side;
/// otherwise it is `Ambiguous`.
pub fn classify_distance(dist: f64, spec: &IntervalSpec, tolcfg: &ToleranceConfig) -> DistanceClass {
    let (lo, hi) = (1.0, spec.d());
    let (tol, margin) = (tolcfg.tol(), tolcfg.margin());
    if (dist - lo).abs() <= tol || (dist - hi).abs() <= tol {
        return DistanceClass::Edge;
    }
    if dist < lo {
        if lo - dist >= margin {
            DistanceClass::Below
        } else {
            DistanceClass::Ambiguous
        }
    } else if dist > hi {
        if dist - hi >= margin {
            DistanceClass::Above
        } else {
            DistanceClass::Ambiguous
        }
    } else if dist - lo >= margin && hi - dist >= margin {
        DistanceClass::Edge
    } else {
        DistanceClass::Ambiguous
    }
}

/// A strictly convex polygon, vertices in counterclockwise order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Validates strict convexity and counterclockwise orientation.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeometryError::InvalidPolygon(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if vertices[i] == vertices[j] {
                    return Err(GeometryError::InvalidPolygon(format!(
                        "repeated vertex at positions {i} and {j}"
                    )));
                }
            }
        }
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if cross(a, b, c) <= 0.0 {
                return Err(GeometryError::InvalidPolygon(format!(
                    "not strictly convex/counterclockwise at vertex {}",
                    (i + 1) % n
                )));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    /// Regular polygon with `n` vertices, given circumradius and center,
    /// first vertex at angle `phase`.
    pub fn regular(
        n: usize,
        circumradius: f64,
        center: Point2,
        phase: f64,
    ) -> Result<Self, GeometryError> {
        if !(circumradius > 0.0) || !circumradius.is_finite() {
            return Err(GeometryError::NonPositive(circumradius));
        }
        let vertices = (0..n)
            .map(|i| {
                let a = phase + 2.0 * PI * i as f64 / n as f64;
                Point2::new(center.x() + circumradius * a.cos(), center.y() + circumradius * a.sin())
            })
            .collect::<Result<Vec<_>, _>>()?;
        ConvexPolygon::new(vertices)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// True if the point lies in the closed region bounded by the polygon.
    pub fn contains(&self, p: Point2) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p) >= 0.0)
    }
}

fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x())
}

/// Diameter of a convex polygon: the maximum pairwise vertex distance.
pub fn polygon_diameter(p: &ConvexPolygon) -> f64 {
    let vs = p.vertices();
    let mut best = 0.0f64;
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            best = best.max(vs[i].distance(&vs[j]));
        }
    }
    best
}

fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let (dx, dy) = (b.x() - a.x(), b.y() - a.y());
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.distance(&a);
    }
    let t = ((p.x() - a.x()) * dx + (p.y() - a.y()) * dy) / len2;
    let t = t.clamp(0.0, 1.0);
    let foot = Point2 {
        x: a.x() + t * dx,
        y: a.y() + t * dy,
    };
    p.distance(&foot)
}

fn segments_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    // Collinear / endpoint touches are caught by zero segment distance below;
    // report only proper crossings here.
    false
}

fn segment_segment_distance(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> f64 {
    if segments_intersect(p1, p2, q1, q2) {
        return 0.0;
    }
    point_segment_distance(p1, q1, q2)
        .min(point_segment_distance(p2, q1, q2))
        .min(point_segment_distance(q1, p1, p2))
        .min(point_segment_distance(q2, p1, p2))
}

/// Minimum Euclidean distance between two closed convex polygonal regions.
///
/// Zero when the regions intersect or one contains the other. Computed
/// from vertex/edge primitives only.
pub fn polygon_min_distance(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    if p.vertices().iter().any(|&v| q.contains(v)) || q.vertices().iter().any(|&v| p.contains(v)) {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for (a, b) in p.edges() {
        for (c, d) in q.edges() {
            best = best.min(segment_segment_distance(a, b, c, d));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(x: f64, y: f64) -> Point2 {
        Point2::new(x, y).unwrap()
    }

    fn unit_square_at(cx: f64, cy: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            pt(cx - 0.5, cy - 0.5),
            pt(cx + 0.5, cy - 0.5),
            pt(cx + 0.5, cy + 0.5),
            pt(cx - 0.5, cy + 0.5),
        ])
        .unwrap()
    }

    #[test]
    fn point_rejects_non_finite() {
        assert!(Point2::new(f64::NAN, 0.0).is_err());
        assert!(Point2::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn chord_examples() {
        assert!((chord_length(18, 3, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((chord_length(18, 4, 1.0).unwrap() - 1.285575).abs() < 1e-6);
        assert!((chord_length(18, 5, 1.0).unwrap() - 1.532089).abs() < 1e-6);
    }

    #[test]
    fn chord_rejects_bad_step() {
        assert!(chord_length(18, 0, 1.0).is_err());
        assert!(chord_length(18, 10, 1.0).is_err());
        assert!(chord_length(2, 1, 1.0).is_err());
        assert!(chord_length(18, 3, 0.0).is_err());
    }

    #[test]
    fn interval_from_eps_examples() {
        assert_eq!(IntervalSpec::from_eps(0.0).unwrap().d(), 1.0);
        assert_eq!(IntervalSpec::from_eps(0.5).unwrap().d(), 3.0);
        let spec = IntervalSpec::from_d(7f64.sqrt() / 2.0).unwrap();
        assert!((spec.eps() - 0.138998).abs() < 1e-6);
        assert!(IntervalSpec::from_eps(1.0).is_err());
        assert!(IntervalSpec::from_eps(-0.1).is_err());
    }

    #[test]
    fn interval_from_d_examples() {
        assert_eq!(IntervalSpec::from_d(1.0).unwrap().eps(), 0.0);
        assert_eq!(IntervalSpec::from_d(3.0).unwrap().eps(), 0.5);
        let d = chord_length(18, 4, 1.0).unwrap();
        assert!((IntervalSpec::from_d(d).unwrap().eps() - 0.1249468).abs() < 1e-6);
        assert!(IntervalSpec::from_d(0.99).is_err());
    }

    #[test]
    fn classify_examples() {
        let spec = IntervalSpec::from_d(1.29).unwrap();
        let cfg = ToleranceConfig::default();
        assert_eq!(classify_distance(1.0, &spec, &cfg), DistanceClass::Edge);
        let below = chord_length(18, 2, 1.0).unwrap();
        assert_eq!(classify_distance(below, &spec, &cfg), DistanceClass::Below);
        let spec7 = IntervalSpec::from_d(7f64.sqrt() / 2.0).unwrap();
        let above = chord_length(18, 5, 1.0).unwrap();
        assert_eq!(classify_distance(above, &spec7, &cfg), DistanceClass::Above);
    }

    #[test]
    fn classify_boundary_shells() {
        let spec = IntervalSpec::from_d(1.3).unwrap();
        let cfg = ToleranceConfig::default();
        assert_eq!(
            classify_distance(1.0 + 1e-7, &spec, &cfg),
            DistanceClass::Ambiguous
        );
        assert_eq!(
            classify_distance(1.3 - 1e-7, &spec, &cfg),
            DistanceClass::Ambiguous
        );
        assert_eq!(
            classify_distance(1.3 + 1e-10, &spec, &cfg),
            DistanceClass::Edge
        );
    }

    #[test]
    fn polygon_diameter_examples() {
        let hexagon =
            ConvexPolygon::regular(6, 0.5, pt(0.0, 0.0), 0.0).unwrap();
        assert!((polygon_diameter(&hexagon) - 1.0).abs() < 1e-12);
        let square = unit_square_at(0.0, 0.0);
        assert!((polygon_diameter(&square) - 2f64.sqrt()).abs() < 1e-12);
        let small = ConvexPolygon::regular(6, 0.49, pt(0.0, 0.0), 0.0).unwrap();
        assert!((polygon_diameter(&small) - 0.98).abs() < 1e-12);
    }

    #[test]
    fn polygon_rejects_degenerate() {
        assert!(ConvexPolygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0)]).is_err());
        // clockwise square
        assert!(ConvexPolygon::new(vec![
            pt(0.0, 0.0),
            pt(0.0, 1.0),
            pt(1.0, 1.0),
            pt(1.0, 0.0),
        ])
        .is_err());
        // repeated vertex
        assert!(ConvexPolygon::new(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 0.0)]).is_err());
        // collinear point
        assert!(ConvexPolygon::new(vec![
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(2.0, 0.0),
            pt(0.0, 1.0),
        ])
        .is_err());
    }

    #[test]
    fn min_distance_squares() {
        let a = unit_square_at(0.0, 0.0);
        let b = unit_square_at(3.0, 0.0);
        assert!((polygon_min_distance(&a, &b) - 2.0).abs() < 1e-12);
        assert_eq!(polygon_min_distance(&a, &a), 0.0);
    }

    #[test]
    fn min_distance_containment_and_overlap() {
        let outer = unit_square_at(0.0, 0.0);
        let inner = ConvexPolygon::regular(6, 0.2, pt(0.0, 0.0), 0.1).unwrap();
        assert_eq!(polygon_min_distance(&outer, &inner), 0.0);
        let shifted = unit_square_at(0.5, 0.5);
        assert_eq!(polygon_min_distance(&outer, &shifted), 0.0);
    }

    proptest! {
        #[test]
        fn interval_round_trip(eps in 0.0..0.9f64) {
            let spec = IntervalSpec::from_eps(eps).unwrap();
            let back = IntervalSpec::from_d(spec.d()).unwrap();
            prop_assert!((back.eps() - eps).abs() <= 1e-12);
        }

        #[test]
        fn chord_monotone_in_k(n in 6u32..60, r in 0.1..10.0f64) {
            let mut prev = 0.0;
            for k in 1..=(n / 2) {
                let c = chord_length(n, k, r).unwrap();
                prop_assert!(c > prev);
                prev = c;
            }
        }

        #[test]
        fn classify_is_monotone(d in 1.05..2.0f64, steps in 2usize..60) {
            let spec = IntervalSpec::from_d(d).unwrap();
            let cfg = ToleranceConfig::default();
            // rank Below < Edge < Above; Ambiguous may only appear between
            // neighbouring ranks, so ranks must be nondecreasing when sampled
            // on a grid clear of the shells.
            let mut prev_rank = 0;
            for i in 0..steps {
                let dist = 0.5 + (d + 1.0) * i as f64 / steps as f64;
                let rank = match classify_distance(dist, &spec, &cfg) {
                    DistanceClass::Below => 0,
                    DistanceClass::Ambiguous => continue,
                    DistanceClass::Edge => 1,
                    DistanceClass::Above => 2,
                };
                prop_assert!(rank >= prev_rank);
                prev_rank = rank;
            }
        }

        #[test]
        fn polygon_distance_symmetric_and_bounded(
            seed_a in proptest::collection::vec(0.0..(2.0 * PI), 3..8),
            seed_b in proptest::collection::vec(0.0..(2.0 * PI), 3..8),
            shift in 0.0..6.0f64,
        ) {
            let mk = |angles: &[f64], cx: f64| {
                let mut sorted: Vec<f64> = angles.to_vec();
                sorted.sort_by(f64::total_cmp);
                sorted.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
                if sorted.len() < 3 {
                    return None;
                }
                let vs = sorted
                    .iter()
                    .map(|&a| pt(cx + a.cos(), a.sin()))
                    .collect::<Vec<_>>();
                ConvexPolygon::new(vs).ok()
            };
            if let (Some(p), Some(q)) = (mk(&seed_a, 0.0), mk(&seed_b, shift)) {
                let pq = polygon_min_distance(&p, &q);
                let qp = polygon_min_distance(&q, &p);
                prop_assert!((pq - qp).abs() < 1e-12);
                // never larger than any vertex pair distance
                for a in p.vertices() {
                    for b in q.vertices() {
                        prop_assert!(pq <= a.distance(b) + 1e-12);
                    }
                }
            }
        }
    }
}
