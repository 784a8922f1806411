//! Independent validation of set colorings.
//!
//! Deliberately shares no code with the search: validation walks the
//! definitions directly, and the cross-check reduction re-encodes set
//! coloring as plain vertex coloring by splitting each vertex into a
//! clique of clones. Tests use both routes against each other.

use crate::graphs::GeometricGraph;
use crate::solver::SetColoring;

/// Checks the set-coloring invariants from first principles: every vertex
/// carries exactly its demanded number of colors and adjacent sets are
/// disjoint.
pub fn validate_set_coloring(g: &GeometricGraph, coloring: &SetColoring) -> Result<(), String> {
    if coloring.vertex_count() != g.vertex_count() {
        return Err(format!(
            "coloring covers {} vertices, graph has {}",
            coloring.vertex_count(),
            g.vertex_count()
        ));
    }
    for v in 0..g.vertex_count() {
        let size = coloring.colors_of(v).len();
        let demand = g.demands()[v] as usize;
        if size != demand {
            return Err(format!(
                "vertex {v} carries {size} colors but demands {demand}"
            ));
        }
    }
    for &(u, v) in g.edges() {
        let shared: Vec<u32> = coloring
            .colors_of(u)
            .into_iter()
            .filter(|c| coloring.colors_of(v).contains(c))
            .collect();
        if !shared.is_empty() {
            return Err(format!(
                "edge ({u}, {v}) shares colors {shared:?}"
            ));
        }
    }
    Ok(())
}

/// Expands a demand graph into a plain graph: vertex `v` becomes
/// `demand(v)` clones forming a clique, and every edge becomes a complete
/// bipartite join between the clone groups. A proper 1-coloring of the
/// expansion is exactly a proper set coloring of the original.
pub fn split_expansion(g: &GeometricGraph) -> (usize, Vec<(usize, usize)>) {
    let mut offset = vec![0usize; g.vertex_count() + 1];
    for v in 0..g.vertex_count() {
        offset[v + 1] = offset[v] + g.demands()[v] as usize;
    }
    let n = offset[g.vertex_count()];
    let mut edges = Vec::new();
    for v in 0..g.vertex_count() {
        for a in offset[v]..offset[v + 1] {
            for b in (a + 1)..offset[v + 1] {
                edges.push((a, b));
            }
        }
    }
    for &(u, v) in g.edges() {
        for a in offset[u]..offset[u + 1] {
            for b in offset[v]..offset[v + 1] {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    (n, edges)
}

fn colorable(adj: &[Vec<bool>], colors: &mut [usize], v: usize, k: usize, max_used: usize) -> bool {
    let n = adj.len();
    if v == n {
        return true;
    }
    // a fresh color beyond max_used + 1 is interchangeable with max_used + 1
    for c in 0..k.min(max_used + 2) {
        let clash = (0..v).any(|u| adj[v][u] && colors[u] == c);
        if clash {
            continue;
        }
        colors[v] = c;
        if colorable(adj, colors, v + 1, k, max_used.max(c)) {
            return true;
        }
    }
    false
}

/// Textbook sequential backtracking chromatic number of a plain graph,
/// used as the reference implementation in cross-checks.
pub fn reference_chromatic(n: usize, edges: &[(usize, usize)], kmax: usize) -> Option<usize> {
    if n == 0 {
        return Some(0);
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    for k in 1..=kmax {
        let mut colors = vec![usize::MAX; n];
        colors[0] = 0;
        if colorable(&adj, &mut colors, 1, k, 0) {
            return Some(k);
        }
    }
    None
}

/// Reference chromatic number of a demand graph via the split expansion.
pub fn reference_set_chromatic(g: &GeometricGraph, kmax: usize) -> Option<usize> {
    let (n, edges) = split_expansion(g);
    reference_chromatic(n, &edges, kmax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_rim18, circulant, simplex_instance, CirculantSpec};

    fn petersen() -> GeometricGraph {
        let mut edges = Vec::new();
        for i in 0..5usize {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        GeometricGraph::new(None, edges, vec![1; 10], None, None).unwrap()
    }

    #[test]
    fn reference_matches_known_chromatic_numbers() {
        let k5 = simplex_instance(4).unwrap();
        // all-demand-1 variant of K5
        let k5_plain =
            GeometricGraph::new(None, k5.edges().to_vec(), vec![1; 5], None, None).unwrap();
        assert_eq!(reference_set_chromatic(&k5_plain, 8), Some(5));

        let c5 = circulant(&CirculantSpec::new(5, vec![1]).unwrap());
        assert_eq!(reference_set_chromatic(&c5, 8), Some(3));

        assert_eq!(reference_set_chromatic(&petersen(), 8), Some(3));

        assert_eq!(reference_set_chromatic(&build_rim18(), 8), Some(3));
    }

    #[test]
    fn split_expansion_counts() {
        let k3 = simplex_instance(2).unwrap(); // demands 3, 2, 1
        let (n, edges) = split_expansion(&k3);
        assert_eq!(n, 6);
        // expansion of K3 with demands 3,2,1 is K6
        let mut dedup = edges.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), 15);
    }

    #[test]
    fn validate_rejects_wrong_size_and_clash() {
        let p2 = GeometricGraph::new(None, vec![(0, 1)], vec![2, 1], None, None).unwrap();
        let ok = SetColoring::from_lists(&[vec![0, 1], vec![2]]);
        assert!(validate_set_coloring(&p2, &ok).is_ok());
        let short = SetColoring::from_lists(&[vec![0], vec![2]]);
        assert!(validate_set_coloring(&p2, &short).is_err());
        let clash = SetColoring::from_lists(&[vec![0, 1], vec![1]]);
        assert!(validate_set_coloring(&p2, &clash).is_err());
    }
}
