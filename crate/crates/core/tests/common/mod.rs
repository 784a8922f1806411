//! Independent test oracles. Nothing here calls into the solver or
//! tiling implementation paths it is used to check.

use chiplane::geometry::ConvexPolygon;

/// Exhaustive DFS enumeration of proper k-colorings of a plain graph
/// (one color per vertex) with unit propagation on candidate sets.
/// Returns sorted color vectors.
pub fn brute_force_colorings(n: usize, edges: &[(usize, usize)], k: u8) -> Vec<Vec<u8>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let full: u32 = if k >= 32 { u32::MAX } else { (1 << k) - 1 };
    let mut out = Vec::new();
    let mut candidates = vec![full; n];
    dfs(&adj, &mut candidates, &mut out);
    out.sort();
    out
}

fn dfs(adj: &[Vec<usize>], candidates: &mut [u32], out: &mut Vec<Vec<u8>>) {
    // unit propagation: a singleton candidate set removes its color from
    // every neighbor, to a fixed point
    let n = adj.len();
    let mut cands = candidates.to_vec();
    let mut queue: Vec<usize> = (0..n).filter(|&v| cands[v].count_ones() == 1).collect();
    let mut seen = vec![false; n];
    for &v in &queue {
        seen[v] = true;
    }
    while let Some(v) = queue.pop() {
        let mask = cands[v];
        for &u in &adj[v] {
            if cands[u] & mask != 0 {
                // drop the forced color from the neighbor unless the
                // neighbor is itself already pinned to it
                if cands[u] == mask {
                    return; // adjacent forced to the same color
                }
                cands[u] &= !mask;
                if cands[u] == 0 {
                    return;
                }
                if cands[u].count_ones() == 1 && !seen[u] {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
    }
    match (0..n).find(|&v| cands[v].count_ones() > 1) {
        None => {
            let coloring: Vec<u8> = cands.iter().map(|m| m.trailing_zeros() as u8).collect();
            out.push(coloring);
        }
        Some(v) => {
            let options = cands[v];
            for c in 0..32 {
                if options & (1 << c) != 0 {
                    let mut next = cands.clone();
                    next[v] = 1 << c;
                    dfs(adj, &mut next, out);
                }
            }
        }
    }
}

/// Dense boundary sampling lower-fidelity estimate of the distance
/// between two convex polygons. Samples include the vertices, so a
/// vertex-attained minimum is measured exactly.
pub fn sampled_polygon_distance(
    p: &ConvexPolygon,
    q: &ConvexPolygon,
    samples_per_edge: usize,
) -> f64 {
    let sample = |poly: &ConvexPolygon| -> Vec<(f64, f64)> {
        let vs = poly.vertices();
        let mut pts = Vec::new();
        for i in 0..vs.len() {
            let a = vs[i];
            let b = vs[(i + 1) % vs.len()];
            for s in 0..samples_per_edge {
                let t = s as f64 / samples_per_edge as f64;
                pts.push((a.x() + t * (b.x() - a.x()), a.y() + t * (b.y() - a.y())));
            }
        }
        pts
    };
    let ps = sample(p);
    let qs = sample(q);
    let mut best = f64::INFINITY;
    for &(px, py) in &ps {
        for &(qx, qy) in &qs {
            best = best.min((px - qx).hypot(py - qy));
        }
    }
    best
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..5usize {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    edges
}
