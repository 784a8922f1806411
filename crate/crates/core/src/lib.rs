//! chiplane — exact verification of interval-distance colorings of the plane.
//!
//! The toolkit builds the small geometric graphs that pin the chromatic
//! number of the plane at 7 when every distance in an interval `[1, d]` is
//! forbidden, solves their set-coloring problems exactly, replays the
//! human case analysis as a machine-checked deduction script, and certifies
//! the hexagonal 7-coloring upper bound by exact polygon geometry.
//!
//! Modules:
//! - [`geometry`]: chord lengths, interval conversion, tolerance-aware
//!   distance classification, convex polygon primitives.
//! - [`graphs`]: circle layouts, interval-distance graphs, the 19-vertex
//!   instance and its 18-vertex rim, circulants, simplex instances.
//! - [`interchange`]: JSON graph/coloring documents.
//! - [`render`]: DOT and SVG emitters.
//! - [`solver`]: exact set-coloring search, enumeration, symmetry classes.
//! - [`replay`]: the deduction engine and the four scripted proof cases.
//! - [`tiling`]: hexagonal 7-coloring and its separation certificate.
//! - [`constants`]: the named distance constants and their quoted decimals.

pub mod constants;
pub mod geometry;
pub mod graphs;
pub mod interchange;
pub mod render;
pub mod replay;
pub mod solver;
pub mod tiling;

pub use geometry::{ConvexPolygon, IntervalSpec, Point2, ToleranceConfig};
pub use graphs::{CirculantSpec, GeometricGraph};
pub use solver::SetColoring;
