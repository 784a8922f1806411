//! The hexagonal 7-coloring and its separation certificate.
//!
//! Cells live on an axial lattice `(q, r)`; the cell center sits at
//! `(sqrt(3) s (q + r/2), 1.5 s r)` for side (circumradius) `s`, so
//! adjacent centers are `sqrt(3) s` apart and the pointy-top hexagons of
//! circumradius `s` mesh edge to edge. Colors are constant on the cosets
//! of the index-7 sublattice `{(q, r) : q + 3r = 0 (mod 7)}`, whose
//! shortest vectors have length `sqrt(21) s` — the densest way to repeat
//! a color. The certificate measures, by exact polygon geometry, the
//! largest distance inside a tile and the smallest distance between two
//! same-colored tiles; their ratio is the whole upper-bound argument.

use std::f64::consts::PI;

use thiserror::Error;

use crate::geometry::{
    polygon_diameter, polygon_min_distance, ConvexPolygon, GeometryError, IntervalSpec, Point2,
};

#[derive(Debug, Error, PartialEq)]
pub enum TilingError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("side must be positive and finite, got {0}")]
    BadSide(f64),
    #[error(
        "search radius {radius} cells cannot certify the sweep: cells beyond it \
         could still approach within {bound} while the minimum found is {found}"
    )]
    InsufficientRadius { radius: u32, bound: f64, found: f64 },
}

/// Axial cell coordinates on the hexagonal lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub q: i32,
    pub r: i32,
}

impl Cell {
    pub fn new(q: i32, r: i32) -> Self {
        Cell { q, r }
    }

    /// Hex distance from the origin cell.
    pub fn ring(&self) -> u32 {
        let s = -self.q - self.r;
        (self.q.unsigned_abs() + self.r.unsigned_abs() + s.unsigned_abs()) / 2
    }

    /// The six neighboring cells.
    pub fn neighbors(&self) -> [Cell; 6] {
        [
            Cell::new(self.q + 1, self.r),
            Cell::new(self.q, self.r + 1),
            Cell::new(self.q - 1, self.r + 1),
            Cell::new(self.q - 1, self.r),
            Cell::new(self.q, self.r - 1),
            Cell::new(self.q + 1, self.r - 1),
        ]
    }
}

/// Color of a cell in the 7-coloring: `(q + 3r) mod 7`.
///
/// The pattern is self-certified by the tests: the origin and its six
/// neighbors receive seven distinct colors, which pins the same-color
/// classes to an index-7 sublattice.
pub fn seven_coloring(cell: Cell) -> u8 {
    (cell.q + 3 * cell.r).rem_euclid(7) as u8
}

/// The hexagonal tiling with a given side (= circumradius).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HexTiling {
    side: f64,
}

impl HexTiling {
    pub fn new(side: f64) -> Result<Self, TilingError> {
        if side > 0.0 && side.is_finite() {
            Ok(HexTiling { side })
        } else {
            Err(TilingError::BadSide(side))
        }
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn center(&self, cell: Cell) -> Point2 {
        let x = 3f64.sqrt() * self.side * (cell.q as f64 + cell.r as f64 / 2.0);
        let y = 1.5 * self.side * cell.r as f64;
        Point2::new(x, y).expect("finite hex center")
    }

    /// The cell's tile: a regular pointy-top hexagon of circumradius
    /// `side` centered on the cell.
    pub fn polygon(&self, cell: Cell) -> ConvexPolygon {
        ConvexPolygon::regular(6, self.side, self.center(cell), PI / 6.0)
            .expect("regular hexagon is convex")
    }

    pub fn color(&self, cell: Cell) -> u8 {
        seven_coloring(cell)
    }
}

/// Regular hexagon tile of a cell, standalone form.
pub fn hexagon_polygon(cell: Cell, side: f64) -> Result<ConvexPolygon, TilingError> {
    Ok(HexTiling::new(side)?.polygon(cell))
}

/// Exact separation certificate for the 7-colored tiling at one scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TilingCertificate {
    pub side: f64,
    /// Largest distance within one tile (the tile diameter, `2 side`).
    pub max_intra_tile: f64,
    /// Smallest polygon-to-polygon distance between same-colored tiles.
    pub min_same_color: f64,
    /// `min_same_color / max_intra_tile`.
    pub admissible_ratio: f64,
}

/// Smallest polygon distance from `base`'s tile to any same-colored tile
/// within `radius` rings of it.
fn min_same_color_from(
    tiling: &HexTiling,
    base: Cell,
    radius: u32,
) -> Result<f64, TilingError> {
    let base_polygon = tiling.polygon(base);
    let base_color = tiling.color(base);
    let r = radius as i32;
    let mut best = f64::INFINITY;
    for dq in -r..=r {
        for dr in -r..=r {
            let offset = Cell::new(dq, dr);
            if offset.ring() == 0 || offset.ring() > radius {
                continue;
            }
            let cell = Cell::new(base.q + dq, base.r + dr);
            if tiling.color(cell) != base_color {
                continue;
            }
            let dist = polygon_min_distance(&base_polygon, &tiling.polygon(cell));
            best = best.min(dist);
        }
    }
    // Cells beyond `radius` rings have center distance at least
    // 1.5 * radius * side, hence polygon distance at least that minus one
    // diameter. The sweep is conclusive only if such cells cannot beat
    // the minimum found inside.
    let bound = 1.5 * radius as f64 * tiling.side() - 2.0 * tiling.side();
    if !(bound > best) {
        return Err(TilingError::InsufficientRadius {
            radius,
            bound,
            found: best,
        });
    }
    Ok(best)
}

/// Sweeps all same-colored cell pairs with one tile fixed at the origin
/// and certifies the intra-tile diameter and same-color separation.
pub fn certify(side: f64, search_radius: u32) -> Result<TilingCertificate, TilingError> {
    let tiling = HexTiling::new(side)?;
    let max_intra = polygon_diameter(&tiling.polygon(Cell::new(0, 0)));
    let min_same = min_same_color_from(&tiling, Cell::new(0, 0), search_radius)?;
    Ok(TilingCertificate {
        side,
        max_intra_tile: max_intra,
        min_same_color: min_same,
        admissible_ratio: min_same / max_intra,
    })
}

/// Default ring radius for [`certify`]; ample for the index-7 pattern.
pub const DEFAULT_SEARCH_RADIUS: u32 = 6;

/// Whether the tiling at this scale properly colors the plane for the
/// whole forbidden interval `[1, d]`: every intra-tile distance stays
/// below 1 and every same-color inter-tile distance stays above `d`,
/// strictly. Tile boundaries are half-open, which the strict inequalities
/// make immaterial.
pub fn proper_for(
    spec: &IntervalSpec,
    side: f64,
) -> Result<(bool, TilingCertificate), TilingError> {
    let cert = certify(side, DEFAULT_SEARCH_RADIUS)?;
    let ok = cert.max_intra_tile < 1.0 && cert.min_same_color > spec.d();
    Ok((ok, cert))
}
