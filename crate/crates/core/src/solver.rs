//! Exact set-coloring: feasibility, chromatic number, exhaustive
//! enumeration and symmetry classification.
//!
//! A set coloring assigns each vertex a set of colors of exactly its
//! demanded size such that adjacent sets are disjoint. The search is a
//! complete branch-and-bound over vertices in saturation order; the only
//! symmetry exploited during search is color-label symmetry (a fresh
//! color is always the least unused one), which keeps the completeness
//! argument elementary. Enumeration performs no symmetry breaking at all
//! and emits raw colorings in lexicographic order; orbit classification
//! is a separate pass.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graphs::{build_paper19, GeometricGraph, GraphError};

pub mod check;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("palette of {0} colors exceeds the 32-color limit")]
    TooManyColors(u32),
    #[error("enumeration space k^total_demand = {k}^{total} exceeds the 2^40 guard")]
    SearchSpaceExceeded { k: u32, total: u32 },
    #[error("no feasible coloring with at most {kmax} colors (bounded search exhausted)")]
    SearchExhausted { kmax: u32 },
    #[error("input coloring is not a proper coloring: {0}")]
    ImproperColoring(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Bitmask over colors `0..32`.
pub type ColorMask = u32;

/// A set coloring: one color set per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetColoring {
    sets: Vec<ColorMask>,
}

impl SetColoring {
    pub fn from_masks(sets: Vec<ColorMask>) -> Self {
        SetColoring { sets }
    }

    pub fn from_lists(lists: &[Vec<u32>]) -> Self {
        let sets = lists
            .iter()
            .map(|l| l.iter().fold(0u32, |m, &c| m | (1 << c)))
            .collect();
        SetColoring { sets }
    }

    pub fn vertex_count(&self) -> usize {
        self.sets.len()
    }

    pub fn mask(&self, v: usize) -> ColorMask {
        self.sets[v]
    }

    /// Colors of a vertex in ascending order.
    pub fn colors_of(&self, v: usize) -> Vec<u32> {
        mask_colors(self.sets[v])
    }

    pub fn as_lists(&self) -> Vec<Vec<u32>> {
        (0..self.sets.len()).map(|v| self.colors_of(v)).collect()
    }

    /// Union of all colors used anywhere.
    pub fn used_palette(&self) -> ColorMask {
        self.sets.iter().fold(0, |m, &s| m | s)
    }

    /// Lexicographic key: the concatenated per-vertex sorted color lists.
    fn lex_key(&self) -> Vec<u32> {
        let mut key = Vec::new();
        for v in 0..self.sets.len() {
            let colors = self.colors_of(v);
            key.push(colors.len() as u32);
            key.extend(colors);
        }
        key
    }
}

impl PartialOrd for SetColoring {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SetColoring {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lex_key().cmp(&other.lex_key())
    }
}

pub fn mask_colors(mask: ColorMask) -> Vec<u32> {
    (0..32).filter(|c| mask & (1 << c) != 0).collect()
}

fn full_mask(k: u32) -> ColorMask {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

/// The `t` lowest set bits of `mask`.
fn lowest_bits(mask: ColorMask, t: u32) -> ColorMask {
    let mut out = 0;
    let mut rest = mask;
    for _ in 0..t {
        if rest == 0 {
            break;
        }
        let low = rest & rest.wrapping_neg();
        out |= low;
        rest ^= low;
    }
    out
}

/// All `m`-element subsets of the set bits of `avail`, in lexicographic
/// order of their ascending color lists.
fn subsets_lex(avail: ColorMask, m: usize, out: &mut Vec<ColorMask>) {
    out.clear();
    let colors = mask_colors(avail);
    if colors.len() < m {
        return;
    }
    let mut stack = vec![0u32; m];
    fn rec(colors: &[u32], m: usize, start: usize, depth: usize, cur: &mut [u32], out: &mut Vec<ColorMask>) {
        if depth == m {
            out.push(cur.iter().fold(0, |acc, &c| acc | (1 << c)));
            return;
        }
        for i in start..colors.len() {
            if colors.len() - i < m - depth {
                break;
            }
            cur[depth] = colors[i];
            rec(colors, m, i + 1, depth + 1, cur, out);
        }
    }
    rec(&colors, m, 0, 0, &mut stack, out);
}

struct Search<'a> {
    adj: Vec<Vec<usize>>,
    demands: &'a [u8],
    full: ColorMask,
    assigned: Vec<ColorMask>,
    forbidden: Vec<ColorMask>,
    unassigned: Vec<bool>,
    symmetry_break: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a GeometricGraph, k: u32, symmetry_break: bool) -> Self {
        let n = g.vertex_count();
        Search {
            adj: g.adjacency(),
            demands: g.demands(),
            full: full_mask(k),
            assigned: vec![0; n],
            forbidden: vec![0; n],
            unassigned: vec![true; n],
            symmetry_break: symmetry_break && k > 0,
        }
    }

    /// Next vertex by saturation (distinct colors forbidden by neighbors),
    /// then demand, then degree; ties fall to the lowest index because the
    /// scan is ascending.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, u8, usize, usize)> = None;
        for v in 0..self.assigned.len() {
            if !self.unassigned[v] {
                continue;
            }
            let sat = (self.forbidden[v] & self.full).count_ones();
            let key = (sat, self.demands[v], self.adj[v].len());
            if best.map_or(true, |(bs, bd, bdeg, _)| key > (bs, bd, bdeg)) {
                best = Some((key.0, key.1, key.2, v));
            }
        }
        best.map(|(_, _, _, v)| v)
    }

    fn find_one(&mut self, used: ColorMask) -> bool {
        let v = match self.pick() {
            Some(v) => v,
            None => return true,
        };
        let avail = self.full & !self.forbidden[v];
        let demand = self.demands[v] as usize;
        if (avail.count_ones() as usize) < demand {
            return false;
        }
        let mut subsets = Vec::new();
        subsets_lex(avail, demand, &mut subsets);
        for &set in &subsets {
            if self.symmetry_break {
                let fresh = set & !used;
                if fresh != lowest_bits(self.full & !used, fresh.count_ones()) {
                    continue;
                }
            }
            if !self.apply(v, set) {
                self.undo(v, set);
                continue;
            }
            if self.find_one(used | set) {
                return true;
            }
            self.undo(v, set);
        }
        false
    }

    /// Assigns `set` to `v` and updates neighbor masks; returns false if a
    /// neighbor can no longer meet its demand (forward check).
    fn apply(&mut self, v: usize, set: ColorMask) -> bool {
        self.assigned[v] = set;
        self.unassigned[v] = false;
        let mut ok = true;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            self.forbidden[u] |= set;
            if self.unassigned[u] {
                let avail = (self.full & !self.forbidden[u]).count_ones() as usize;
                if avail < self.demands[u] as usize {
                    ok = false;
                }
            }
        }
        ok
    }

    fn undo(&mut self, v: usize, set: ColorMask) {
        self.assigned[v] = 0;
        self.unassigned[v] = true;
        let neighbors = self.adj[v].clone();
        for u in neighbors {
            // recompute the neighbor's forbidden mask from scratch
            let mut mask = 0;
            for &w in &self.adj[u] {
                mask |= self.assigned[w];
            }
            self.forbidden[u] = mask;
        }
        let _ = set;
    }
}

/// Complete search for a proper set coloring with colors `{0..k-1}`.
/// Returns a witness, or `None` if no such coloring exists.
pub fn feasible(g: &GeometricGraph, k: u32) -> Result<Option<SetColoring>, SolverError> {
    if k > 32 {
        return Err(SolverError::TooManyColors(k));
    }
    if g.demands().iter().any(|&d| d as u32 > k) {
        return Ok(None);
    }
    let mut search = Search::new(g, k, true);
    if search.find_one(0) {
        Ok(Some(SetColoring {
            sets: search.assigned,
        }))
    } else {
        Ok(None)
    }
}

/// Least `k <= kmax` admitting a proper set coloring.
pub fn chromatic_number(g: &GeometricGraph, kmax: u32) -> Result<u32, SolverError> {
    if kmax > 32 {
        return Err(SolverError::TooManyColors(kmax));
    }
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    // clique bound on single vertices and edges
    let mut lower = g.demands().iter().map(|&d| d as u32).max().unwrap_or(0);
    for &(u, v) in g.edges() {
        lower = lower.max(g.demands()[u] as u32 + g.demands()[v] as u32);
    }
    for k in lower..=kmax {
        if feasible(g, k)?.is_some() {
            return Ok(k);
        }
    }
    Err(SolverError::SearchExhausted { kmax })
}

fn enumeration_guard(g: &GeometricGraph, k: u32) -> Result<(), SolverError> {
    let total = g.total_demand();
    if k > 1 && total as f64 * (k as f64).log2() > 40.0 {
        return Err(SolverError::SearchSpaceExceeded { k, total });
    }
    Ok(())
}

/// Every proper set coloring with colors drawn from `{0..k-1}`, in
/// lexicographic order. No symmetry reduction is applied.
pub fn enumerate_colorings(g: &GeometricGraph, k: u32) -> Result<Vec<SetColoring>, SolverError> {
    enumerate_within(g, k, None)
}

/// Enumeration restricted to per-vertex color domains (used to count
/// completions of partial states). `domains[v]` is a mask of colors the
/// vertex is allowed to use; every color of the assigned set must lie in
/// the domain.
pub fn enumerate_within(
    g: &GeometricGraph,
    k: u32,
    domains: Option<&[ColorMask]>,
) -> Result<Vec<SetColoring>, SolverError> {
    if k > 32 {
        return Err(SolverError::TooManyColors(k));
    }
    enumeration_guard(g, k)?;
    if let Some(doms) = domains {
        if doms.len() != g.vertex_count() {
            return Err(SolverError::Domain(format!(
                "{} domains for {} vertices",
                doms.len(),
                g.vertex_count()
            )));
        }
    }
    let n = g.vertex_count();
    let adj = g.adjacency();
    let full = full_mask(k);
    let mut out = Vec::new();
    let mut assigned = vec![0u32; n];
    let mut forbidden = vec![0u32; n];
    let mut subsets_buf: Vec<Vec<ColorMask>> = vec![Vec::new(); n];

    fn rec(
        v: usize,
        n: usize,
        adj: &[Vec<usize>],
        demands: &[u8],
        domains: Option<&[ColorMask]>,
        full: ColorMask,
        assigned: &mut [ColorMask],
        forbidden: &mut [ColorMask],
        subsets_buf: &mut [Vec<ColorMask>],
        out: &mut Vec<SetColoring>,
    ) {
        if v == n {
            out.push(SetColoring {
                sets: assigned.to_vec(),
            });
            return;
        }
        let mut avail = full & !forbidden[v];
        if let Some(doms) = domains {
            avail &= doms[v];
        }
        let demand = demands[v] as usize;
        let mut subsets = std::mem::take(&mut subsets_buf[v]);
        subsets_lex(avail, demand, &mut subsets);
        for idx in 0..subsets.len() {
            let set = subsets[idx];
            assigned[v] = set;
            let mut blocked = false;
            for &u in &adj[v] {
                if u > v {
                    forbidden[u] |= set;
                    let rest = (full & !forbidden[u]).count_ones() as usize;
                    if rest < demands[u] as usize {
                        blocked = true;
                    }
                }
            }
            if !blocked {
                rec(
                    v + 1,
                    n,
                    adj,
                    demands,
                    domains,
                    full,
                    assigned,
                    forbidden,
                    subsets_buf,
                    out,
                );
            }
            assigned[v] = 0;
            for &u in &adj[v] {
                if u > v {
                    // recompute from assigned-so-far neighbors
                    let mut mask = 0;
                    for &w in &adj[u] {
                        mask |= assigned[w];
                    }
                    forbidden[u] = mask;
                }
            }
        }
        subsets_buf[v] = subsets;
    }

    rec(
        0,
        n,
        &adj,
        g.demands(),
        domains,
        full,
        &mut assigned,
        &mut forbidden,
        &mut subsets_buf,
        &mut out,
    );
    Ok(out)
}

/// Which symmetries to quotient by during classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryGroup {
    pub rotation: bool,
    pub reflection: bool,
    pub color_permutation: bool,
}

impl SymmetryGroup {
    pub fn full() -> Self {
        SymmetryGroup {
            rotation: true,
            reflection: true,
            color_permutation: true,
        }
    }

    pub fn colors_only() -> Self {
        SymmetryGroup {
            rotation: false,
            reflection: false,
            color_permutation: true,
        }
    }
}

/// An orbit of colorings under the chosen symmetry group.
#[derive(Debug, Clone)]
pub struct ColoringClass {
    /// Lexicographically minimal coloring in the orbit.
    pub representative: SetColoring,
    /// Number of distinct colorings in the orbit.
    pub orbit_size: usize,
    /// Sorted lengths of monochromatic runs around the cycle (demand-1
    /// colorings of circulants only; empty otherwise).
    pub run_profile: Vec<usize>,
}

impl ColoringClass {
    /// Human name of the run profile ("six triples", "nine pairs", ...).
    pub fn profile_name(&self) -> String {
        let profile = &self.run_profile;
        if !profile.is_empty() && profile.iter().all(|&r| r == profile[0]) {
            let count = profile.len();
            let len = profile[0];
            let count_word = number_word(count);
            let len_word = match len {
                2 => "pairs".to_string(),
                3 => "triples".to_string(),
                l => format!("runs of {l}"),
            };
            return format!("{count_word} {len_word}");
        }
        format!("runs {:?}", profile)
    }
}

fn number_word(n: usize) -> String {
    match n {
        1 => "one".into(),
        2 => "two".into(),
        3 => "three".into(),
        4 => "four".into(),
        5 => "five".into(),
        6 => "six".into(),
        7 => "seven".into(),
        8 => "eight".into(),
        9 => "nine".into(),
        _ => n.to_string(),
    }
}

fn is_automorphism(g: &GeometricGraph, map: &dyn Fn(usize) -> usize) -> bool {
    let n = g.vertex_count();
    (0..n).all(|v| g.demands()[map(v)] == g.demands()[v])
        && g.edges().iter().all(|&(u, v)| g.has_edge(map(u), map(v)))
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for tail in permutations(&rest) {
            let mut perm = vec![head];
            perm.extend(tail);
            out.push(perm);
        }
    }
    out
}

fn apply_transform(
    c: &SetColoring,
    n: usize,
    rot: usize,
    reflect: bool,
    palette: &[u32],
    perm: &[u32],
) -> SetColoring {
    let map_color = |col: u32| -> u32 {
        match palette.iter().position(|&p| p == col) {
            Some(i) => perm[i],
            None => col,
        }
    };
    let mut sets = vec![0u32; n];
    for v in 0..n {
        // vertex v goes to position reflect(rotate(v))
        let mut w = (v + rot) % n;
        if reflect {
            w = (n - w) % n;
        }
        let mut mask = 0;
        for col in mask_colors(c.mask(v)) {
            mask |= 1 << map_color(col);
        }
        sets[w] = mask;
    }
    SetColoring { sets }
}

fn run_profile(c: &SetColoring, n: usize) -> Vec<usize> {
    if c.sets.iter().any(|s| s.count_ones() != 1) || n == 0 {
        return Vec::new();
    }
    // find a cyclic position where the color changes; constant colorings
    // are a single run of length n
    let colors: Vec<u32> = (0..n).map(|v| c.mask(v)).collect();
    let mut start = None;
    for v in 0..n {
        if colors[v] != colors[(v + n - 1) % n] {
            start = Some(v);
            break;
        }
    }
    let start = match start {
        Some(s) => s,
        None => return vec![n],
    };
    let mut runs = Vec::new();
    let mut len = 1;
    for i in 1..=n {
        let cur = colors[(start + i) % n];
        let prev = colors[(start + i - 1) % n];
        if cur == prev {
            len += 1;
        } else {
            runs.push(len);
            len = 1;
        }
    }
    // the loop closes the final run at i = n since colors[start] differs
    // from its predecessor
    runs.sort_unstable();
    runs
}

/// Partitions colorings into orbits under the chosen symmetry group.
///
/// Rotation maps vertex `v` to `v + 1 (mod n)` and reflection to `-v
/// (mod n)`; both are verified to be automorphisms of the graph before
/// use. Color permutations act on the union of colors used by the input.
pub fn classify_colorings(
    g: &GeometricGraph,
    colorings: &[SetColoring],
    group: SymmetryGroup,
) -> Result<Vec<ColoringClass>, SolverError> {
    let n = g.vertex_count();
    if group.rotation && !is_automorphism(g, &|v| (v + 1) % n) {
        return Err(SolverError::Domain(
            "rotation requested but the cyclic shift is not an automorphism".into(),
        ));
    }
    if group.reflection && !is_automorphism(g, &|v| (n - v) % n) {
        return Err(SolverError::Domain(
            "reflection requested but the mirror map is not an automorphism".into(),
        ));
    }
    let palette: Vec<u32> = mask_colors(
        colorings
            .iter()
            .fold(0, |m, c| m | c.used_palette()),
    );
    if palette.len() > 8 {
        return Err(SolverError::Domain(format!(
            "palette of {} colors is too large for orbit enumeration",
            palette.len()
        )));
    }
    let perms: Vec<Vec<u32>> = if group.color_permutation {
        permutations(&palette)
    } else {
        vec![palette.clone()]
    };
    let rotations: Vec<usize> = if group.rotation {
        (0..n).collect()
    } else {
        vec![0]
    };
    let reflections: &[bool] = if group.reflection {
        &[false, true]
    } else {
        &[false]
    };

    let mut remaining: BTreeSet<Vec<u32>> = colorings.iter().map(|c| c.lex_key()).collect();
    let mut classes = Vec::new();
    for c in colorings {
        if !remaining.contains(&c.lex_key()) {
            continue;
        }
        let mut orbit: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut representative = c.clone();
        for &rot in &rotations {
            for &refl in reflections {
                for perm in &perms {
                    let t = apply_transform(c, n, rot, refl, &palette, perm);
                    if t < representative {
                        representative = t.clone();
                    }
                    orbit.insert(t.lex_key());
                }
            }
        }
        for key in &orbit {
            remaining.remove(key);
        }
        let profile = run_profile(&representative, n);
        classes.push(ColoringClass {
            representative,
            orbit_size: orbit.len(),
            run_profile: profile,
        });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

/// True iff some second color from the coloring's used palette can be
/// added to `v` while keeping adjacent sets disjoint. The input must be a
/// proper coloring of a graph with all demands 1.
pub fn bichromatic_extension_check(
    g: &GeometricGraph,
    coloring: &SetColoring,
    v: usize,
) -> Result<bool, SolverError> {
    if g.demands().iter().any(|&d| d != 1) {
        return Err(SolverError::Domain(
            "bichromatic extension check requires all demands 1".into(),
        ));
    }
    check::validate_set_coloring(g, coloring).map_err(SolverError::ImproperColoring)?;
    if v >= g.vertex_count() {
        return Err(SolverError::Domain(format!("vertex {v} out of range")));
    }
    let palette = coloring.used_palette();
    let mut neighbor_colors = 0u32;
    for &u in &g.adjacency()[v] {
        neighbor_colors |= coloring.mask(u);
    }
    let candidates = palette & !coloring.mask(v) & !neighbor_colors;
    Ok(candidates != 0)
}

/// Checks whether the 19-vertex instance minus the given rim labels is
/// still 7-chromatic. The rim vertex labeled 1 and the center are not
/// removable.
pub fn verify_reduction(removed_labels: &[u32]) -> Result<bool, SolverError> {
    let g = build_paper19(1.30)?;
    let mut indices = Vec::new();
    for &label in removed_labels {
        if label == 1 || label == 19 {
            return Err(SolverError::Domain(format!(
                "vertex {label} is not removable"
            )));
        }
        let idx = g
            .index_of_label(label)
            .ok_or_else(|| SolverError::Domain(format!("no rim vertex labeled {label}")))?;
        indices.push(idx);
    }
    indices.sort_unstable();
    indices.dedup();
    if indices.len() != removed_labels.len() {
        return Err(SolverError::Domain("duplicate labels in removal set".into()));
    }
    let reduced = g.remove_vertices(&indices)?;
    let chi = chromatic_number(&reduced, 7)?;
    Ok(chi == 7)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_rim18, circulant, simplex_instance, CirculantSpec};
    use proptest::prelude::*;

    fn c5() -> GeometricGraph {
        circulant(&CirculantSpec::new(5, vec![1]).unwrap())
    }

    #[test]
    fn rim18_three_colorable() {
        let g = build_rim18();
        let witness = feasible(&g, 3).unwrap().expect("rim is 3-colorable");
        check::validate_set_coloring(&g, &witness).unwrap();
        assert!(feasible(&g, 2).unwrap().is_none());
    }

    #[test]
    fn odd_cycle_needs_three() {
        let g = c5();
        assert!(feasible(&g, 2).unwrap().is_none());
        assert_eq!(chromatic_number(&g, 5).unwrap(), 3);
    }

    #[test]
    fn chromatic_rim_variants() {
        let g = build_rim18();
        assert_eq!(chromatic_number(&g, 8).unwrap(), 3);
        let bi = g.with_demand(0, 2).unwrap();
        assert_eq!(chromatic_number(&bi, 8).unwrap(), 4);
    }

    #[test]
    fn simplex_chromatic_small() {
        for (n, expected) in [(0usize, 1u32), (1, 3), (2, 6), (3, 10)] {
            let g = simplex_instance(n).unwrap();
            assert_eq!(chromatic_number(&g, 16).unwrap(), expected);
        }
    }

    #[test]
    fn search_exhausted_error() {
        let g = c5();
        assert!(matches!(
            chromatic_number(&g, 2),
            Err(SolverError::SearchExhausted { kmax: 2 })
        ));
    }

    #[test]
    fn enumerate_empty_on_odd_cycle_two_colors() {
        let g = c5();
        assert!(enumerate_colorings(&g, 2).unwrap().is_empty());
    }

    #[test]
    fn enumerate_is_sorted_and_valid() {
        let g = build_rim18();
        let all = enumerate_colorings(&g, 3).unwrap();
        assert!(!all.is_empty());
        for c in &all {
            check::validate_set_coloring(&g, c).unwrap();
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        assert_eq!(sorted, all);
    }

    #[test]
    fn enumeration_guard_trips() {
        let g = simplex_instance(8).unwrap(); // total demand 45
        assert!(matches!(
            enumerate_colorings(&g, 9),
            Err(SolverError::SearchSpaceExceeded { .. })
        ));
    }

    #[test]
    fn classify_rim_two_classes() {
        let g = build_rim18();
        let all = enumerate_colorings(&g, 3).unwrap();
        let classes = classify_colorings(&g, &all, SymmetryGroup::full()).unwrap();
        assert_eq!(classes.len(), 2);
        let mut profiles: Vec<Vec<usize>> =
            classes.iter().map(|c| c.run_profile.clone()).collect();
        profiles.sort();
        assert_eq!(profiles, vec![vec![2; 9], vec![3; 6]]);
        let names: BTreeSet<String> = classes.iter().map(|c| c.profile_name()).collect();
        assert!(names.contains("nine pairs"));
        assert!(names.contains("six triples"));
        assert_eq!(
            classes.iter().map(|c| c.orbit_size).sum::<usize>(),
            all.len()
        );
    }

    #[test]
    fn classify_color_permutation_only() {
        let g = build_rim18();
        let all = enumerate_colorings(&g, 3).unwrap();
        let classes = classify_colorings(&g, &all, SymmetryGroup::colors_only()).unwrap();
        assert_eq!(classes.len(), all.len() / 6);
    }

    #[test]
    fn classify_rejects_rotation_on_non_circulant() {
        let g = simplex_instance(2).unwrap(); // demands 3,2,1 break rotation
        let colorings = vec![SetColoring::from_lists(&[
            vec![0, 1, 2],
            vec![3, 4],
            vec![5],
        ])];
        assert!(classify_colorings(&g, &colorings, SymmetryGroup::full()).is_err());
        assert!(classify_colorings(&g, &colorings, SymmetryGroup::colors_only()).is_ok());
    }

    #[test]
    fn classify_empty_input() {
        let g = build_rim18();
        let classes = classify_colorings(&g, &[], SymmetryGroup::full()).unwrap();
        assert!(classes.is_empty());
    }

    #[test]
    fn bichromatic_check_trivial_cases() {
        // two isolated vertices, palette {0,1}
        let g = GeometricGraph::new(None, vec![], vec![1, 1], None, None).unwrap();
        let c = SetColoring::from_lists(&[vec![0], vec![1]]);
        assert!(bichromatic_extension_check(&g, &c, 0).unwrap());

        // path of 2 vertices: no second color available to either
        let p2 = GeometricGraph::new(None, vec![(0, 1)], vec![1, 1], None, None).unwrap();
        let c = SetColoring::from_lists(&[vec![0], vec![1]]);
        assert!(!bichromatic_extension_check(&p2, &c, 0).unwrap());
        assert!(!bichromatic_extension_check(&p2, &c, 1).unwrap());
    }

    #[test]
    fn bichromatic_check_rejects_improper() {
        let p2 = GeometricGraph::new(None, vec![(0, 1)], vec![1, 1], None, None).unwrap();
        let bad = SetColoring::from_lists(&[vec![0], vec![0]]);
        assert!(bichromatic_extension_check(&p2, &bad, 0).is_err());
    }

    #[test]
    fn verify_reduction_rejects_protected_vertices() {
        assert!(verify_reduction(&[1, 2]).is_err());
        assert!(verify_reduction(&[19]).is_err());
        assert!(verify_reduction(&[2, 2]).is_err());
        assert!(verify_reduction(&[99]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// feasible(k) nonempty implies feasible(k+1) nonempty, and
        /// feasibility agrees with exhaustive enumeration.
        #[test]
        fn monotone_and_oracle_agreement(
            n in 2usize..7,
            edge_bits in proptest::collection::vec(proptest::bool::ANY, 21),
            k in 1u32..5,
        ) {
            let mut edges = Vec::new();
            let mut idx = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if edge_bits[idx % edge_bits.len()] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            let g = GeometricGraph::new(None, edges, vec![1; n], None, None).unwrap();
            let found = feasible(&g, k).unwrap();
            let all = enumerate_colorings(&g, k).unwrap();
            prop_assert_eq!(found.is_some(), !all.is_empty());
            if let Some(w) = &found {
                prop_assert!(check::validate_set_coloring(&g, w).is_ok());
                prop_assert!(feasible(&g, k + 1).unwrap().is_some());
            }
        }
    }
}
