//! Machine checking of the rim-coloring case analysis.
//!
//! The engine works over the fixed 18-vertex rim (circulant C18(3,4),
//! labels 1..18) with the 3-color palette {1,2,3}. A vertex carries a
//! color set of size 1 (determined), size 2 (a designated bi-chromatic
//! vertex) or is unknown. One sound primitive drives everything:
//! candidate elimination — a vertex adjacent to assigned vertices jointly
//! carrying two distinct colors receives the third. The pair-extension
//! rule (a determined differing pair propagates outward) is gated behind
//! the singleton-run refutation, which is the order the argument needs.
//!
//! [`script`] replays the four shipped proof cases step by step,
//! rejecting any step the current state does not justify; [`refute`]
//! closes short color words by exhaustive branch-and-propagate.

use thiserror::Error;

use crate::solver::SolverError;

pub mod refute;
pub mod script;

pub use refute::{derive_all_3colorings, refute_pattern, EngineConfig, ProofTree, Refutation};
pub use script::{replay_case, script_for, Case, ProofScript, ProofStep, ReplayReport};

/// Number of rim vertices.
pub const RIM_N: usize = 18;
/// Bitmask of the full palette {1, 2, 3} (color c is bit c-1).
pub const PALETTE: u8 = 0b111;
/// Canonical placement start for refutations, matching the figures.
pub const CANONICAL_START: usize = 7;

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("pair extension requires the singleton-run refutation first")]
    LemmaGate,
    #[error("bad pattern {0:?}: need 1..=9 characters over {{1,2,3}}")]
    BadPattern(String),
    #[error("script for case {case} invalid at step {step}: {reason}")]
    ScriptValidation {
        case: char,
        step: usize,
        reason: String,
    },
    #[error("deduction engine disagrees with the solver oracle: {0}")]
    OracleMismatch(String),
    #[error("search budget exhausted")]
    SearchBudget,
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// A palette color, 1..=3.
pub type Color = u8;
/// Bitmask over the palette; bit c-1 stands for color c.
pub type ColorSet = u8;

pub fn color_mask(c: Color) -> ColorSet {
    1 << (c - 1)
}

pub fn set_colors(mask: ColorSet) -> Vec<Color> {
    (1..=3).filter(|&c| mask & color_mask(c) != 0).collect()
}

/// Labels are 1-based and cyclic; adjacency is at steps 3 and 4.
pub fn rim_adjacent(a: usize, b: usize) -> bool {
    let d = (a + RIM_N - b) % RIM_N;
    matches!(d, 3 | 4 | 14 | 15)
}

/// The four rim neighbors of a label.
pub fn rim_neighbors(label: usize) -> [usize; 4] {
    let shift = |delta: usize| (label + RIM_N - 1 + delta) % RIM_N + 1;
    [shift(3), shift(4), shift(RIM_N - 3), shift(RIM_N - 4)]
}

fn next_label(label: usize) -> usize {
    label % RIM_N + 1
}

fn prev_label(label: usize) -> usize {
    (label + RIM_N - 2) % RIM_N + 1
}

/// Why a state is inconsistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conflict {
    /// Two adjacent vertices carry intersecting color sets.
    Edge { u: usize, v: usize },
    /// A vertex has no remaining candidate color.
    Empty { vertex: usize },
    /// A rule wanted to assign a color over a different determined one.
    Assignment {
        vertex: usize,
        wanted: Color,
        existing: ColorSet,
    },
}

impl std::fmt::Display for Conflict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Conflict::Edge { u, v } => write!(f, "edge ({u}, {v}) joins equal colors"),
            Conflict::Empty { vertex } => write!(f, "vertex {vertex} has no candidate color"),
            Conflict::Assignment {
                vertex,
                wanted,
                existing,
            } => write!(
                f,
                "vertex {vertex} would need color {wanted} over {:?}",
                set_colors(*existing)
            ),
        }
    }
}

/// Partial coloring of the rim plus the singleton-run lemma flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeductionState {
    assigned: [ColorSet; RIM_N],
    no_singleton_proved: bool,
    conflict: Option<Conflict>,
}

impl Default for DeductionState {
    fn default() -> Self {
        Self::new()
    }
}

impl DeductionState {
    pub fn new() -> Self {
        DeductionState {
            assigned: [0; RIM_N],
            no_singleton_proved: false,
            conflict: None,
        }
    }

    pub fn assigned(&self, label: usize) -> ColorSet {
        self.assigned[label - 1]
    }

    pub fn is_assigned(&self, label: usize) -> bool {
        self.assigned(label) != 0
    }

    /// Determined means exactly one color.
    pub fn determined(&self, label: usize) -> Option<Color> {
        let mask = self.assigned(label);
        if mask.count_ones() == 1 {
            Some(mask.trailing_zeros() as Color + 1)
        } else {
            None
        }
    }

    pub fn conflict(&self) -> Option<Conflict> {
        self.conflict
    }

    pub fn is_consistent(&self) -> bool {
        self.conflict.is_none()
    }

    pub fn no_singleton_proved(&self) -> bool {
        self.no_singleton_proved
    }

    pub fn with_no_singleton_lemma(mut self) -> Self {
        self.no_singleton_proved = true;
        self
    }

    /// Colors still possible for an unassigned vertex: the palette minus
    /// everything carried by assigned neighbors. For an assigned vertex
    /// this is its own set.
    pub fn candidates(&self, label: usize) -> ColorSet {
        let own = self.assigned(label);
        if own != 0 {
            return own;
        }
        let mut excluded = 0;
        for nb in rim_neighbors(label) {
            excluded |= self.assigned(nb);
        }
        PALETTE & !excluded
    }

    /// Raw assignment; records an edge conflict instead of failing when
    /// the new set clashes with a neighbor.
    pub fn assign(&mut self, label: usize, mask: ColorSet) {
        self.assigned[label - 1] = mask;
        if self.conflict.is_none() {
            for nb in rim_neighbors(label) {
                if self.assigned(nb) & mask != 0 {
                    let (u, v) = if nb < label { (nb, label) } else { (label, nb) };
                    self.conflict = Some(Conflict::Edge { u, v });
                    break;
                }
            }
        }
    }

    pub fn assigned_count(&self) -> usize {
        self.assigned.iter().filter(|&&m| m != 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.assigned.iter().all(|&m| m != 0)
    }

    /// Determined colors in label order, when every vertex is determined.
    pub fn full_coloring(&self) -> Option<[Color; RIM_N]> {
        let mut out = [0; RIM_N];
        for label in 1..=RIM_N {
            out[label - 1] = self.determined(label)?;
        }
        Some(out)
    }

    fn scan_edge_conflict(&self) -> Option<Conflict> {
        for u in 1..=RIM_N {
            for v in (u + 1)..=RIM_N {
                if rim_adjacent(u, v) && self.assigned(u) & self.assigned(v) != 0 {
                    return Some(Conflict::Edge { u, v });
                }
            }
        }
        None
    }

    /// Compact display: determined colors, `*` for bi-chromatic, `.` for
    /// unknown.
    pub fn render_row(&self) -> String {
        (1..=RIM_N)
            .map(|label| {
                let mask = self.assigned(label);
                match mask.count_ones() {
                    0 => ".".to_string(),
                    1 => (mask.trailing_zeros() + 1).to_string(),
                    _ => "*".to_string(),
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Candidate elimination to a least fixed point.
///
/// Each round assigns, simultaneously, every unassigned vertex whose
/// candidate set became a singleton, then rescans for edge conflicts.
/// Inconsistency is a result, not an error.
pub fn propagate(state: &DeductionState) -> DeductionState {
    let mut state = state.clone();
    if state.conflict.is_some() {
        return state;
    }
    if let Some(conflict) = state.scan_edge_conflict() {
        state.conflict = Some(conflict);
        return state;
    }
    loop {
        let mut forced: Vec<(usize, ColorSet)> = Vec::new();
        for label in 1..=RIM_N {
            if state.is_assigned(label) {
                continue;
            }
            let cand = state.candidates(label);
            if cand == 0 {
                state.conflict = Some(Conflict::Empty { vertex: label });
                return state;
            }
            if cand.count_ones() == 1 {
                forced.push((label, cand));
            }
        }
        if forced.is_empty() {
            return state;
        }
        for (label, mask) in forced {
            state.assigned[label - 1] = mask;
        }
        if let Some(conflict) = state.scan_edge_conflict() {
            state.conflict = Some(conflict);
            return state;
        }
    }
}

/// Pair extension jointly with propagation, to a fixed point.
///
/// For every determined pair (i, i+1) of different colors, vertex i-1
/// receives the color of i and vertex i+2 the color of i+1. Sound only
/// once singleton runs are refuted, hence the lemma gate.
pub fn run_extend(state: &DeductionState) -> Result<DeductionState, ReplayError> {
    if !state.no_singleton_proved {
        return Err(ReplayError::LemmaGate);
    }
    let mut state = state.clone();
    loop {
        state = propagate(&state);
        if state.conflict.is_some() {
            return Ok(state);
        }
        let mut changed = false;
        for i in 1..=RIM_N {
            let j = next_label(i);
            let (ci, cj) = match (state.determined(i), state.determined(j)) {
                (Some(a), Some(b)) if a != b => (a, b),
                _ => continue,
            };
            for (target, wanted) in [(prev_label(i), ci), (next_label(j), cj)] {
                match state.assigned(target) {
                    0 => {
                        state.assign(target, color_mask(wanted));
                        changed = true;
                        if state.conflict.is_some() {
                            return Ok(state);
                        }
                    }
                    existing if existing.count_ones() == 1 => {
                        if existing != color_mask(wanted) {
                            state.conflict = Some(Conflict::Assignment {
                                vertex: target,
                                wanted,
                                existing,
                            });
                            return Ok(state);
                        }
                    }
                    // a bi-chromatic target is outside the run discipline;
                    // the rule forces nothing there
                    _ => {}
                }
            }
        }
        if !changed {
            return Ok(state);
        }
    }
}

/// A breach of the run discipline (rule 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunViolation {
    /// A monochromatic run of length >= 4 (the ends are adjacent).
    TooLong { start: usize, len: usize },
    /// A completed run whose two boundary vertices share a color.
    BoundaryClash {
        start: usize,
        len: usize,
        boundary_color: Color,
    },
}

/// Flags runs of length >= 4 and completed runs bounded by a repeated
/// color. Works on partial states: only determined vertices form runs.
pub fn check_run_bounds(state: &DeductionState) -> Vec<RunViolation> {
    let colors: Vec<Option<Color>> = (1..=RIM_N).map(|l| state.determined(l)).collect();
    let mut violations = Vec::new();
    if colors.iter().all(|c| c.is_some()) && colors.iter().all(|c| *c == colors[0]) {
        violations.push(RunViolation::TooLong {
            start: 1,
            len: RIM_N,
        });
        return violations;
    }
    for start in 1..=RIM_N {
        let color = match colors[start - 1] {
            Some(c) => c,
            None => continue,
        };
        // maximal run starting here: predecessor must not continue it
        if colors[prev_label(start) - 1] == Some(color) {
            continue;
        }
        let mut len = 1;
        while colors[(start - 1 + len) % RIM_N] == Some(color) {
            len += 1;
        }
        if len >= 4 {
            violations.push(RunViolation::TooLong { start, len });
        }
        let left = prev_label(start);
        let right = (start - 1 + len) % RIM_N + 1;
        if let (Some(lc), Some(rc)) = (colors[left - 1], colors[right - 1]) {
            if lc == rc && len < RIM_N {
                violations.push(RunViolation::BoundaryClash {
                    start,
                    len,
                    boundary_color: lc,
                });
            }
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assign_all(pairs: &[(usize, Color)]) -> DeductionState {
        let mut state = DeductionState::new();
        for &(label, color) in pairs {
            state.assign(label, color_mask(color));
        }
        state
    }

    #[test]
    fn adjacency_matches_circulant() {
        let rim = crate::graphs::build_rim18();
        for u in 1..=RIM_N {
            for v in (u + 1)..=RIM_N {
                assert_eq!(rim.has_edge(u - 1, v - 1), rim_adjacent(u, v), "{u},{v}");
            }
        }
        assert_eq!(rim_neighbors(1), [4, 5, 16, 15]);
    }

    #[test]
    fn propagate_reaches_case_a_conflict() {
        let state = assign_all(&[(7, 1), (8, 2), (9, 3)]);
        let result = propagate(&state);
        assert_eq!(result.determined(4), Some(3));
        assert_eq!(result.determined(11), Some(3));
        assert_eq!(result.determined(5), Some(1));
        assert_eq!(result.determined(12), Some(1));
        assert_eq!(result.determined(1), Some(2));
        assert_eq!(result.determined(15), Some(2));
        assert_eq!(result.conflict(), Some(Conflict::Edge { u: 1, v: 15 }));
    }

    #[test]
    fn propagate_from_bichromatic_vertex() {
        let mut state = DeductionState::new();
        state.assign(1, color_mask(1) | color_mask(2));
        let result = propagate(&state);
        for label in [4, 5, 15, 16] {
            assert_eq!(result.determined(label), Some(3), "vertex {label}");
        }
        assert!(result.is_consistent());
        // the six vertices the text singles out can no longer be color 3
        for label in [7, 8, 9, 11, 12, 13] {
            assert_eq!(result.candidates(label) & color_mask(3), 0);
        }
    }

    #[test]
    fn propagate_on_empty_state_is_identity() {
        let state = DeductionState::new();
        assert_eq!(propagate(&state), state);
    }

    #[test]
    fn run_extend_requires_lemma() {
        let state = assign_all(&[(7, 1), (8, 2)]);
        assert!(matches!(run_extend(&state), Err(ReplayError::LemmaGate)));
    }

    #[test]
    fn run_extend_extends_differing_pair() {
        let state = assign_all(&[(7, 1), (8, 2)]).with_no_singleton_lemma();
        let result = run_extend(&state).unwrap();
        assert_eq!(result.determined(6), Some(1));
        assert_eq!(result.determined(9), Some(2));
    }

    #[test]
    fn run_extend_flags_occupied_target() {
        // 6 already color 3; the pair (7,8) = (1,2) wants 6 <- 1
        let state = assign_all(&[(6, 3), (7, 1), (8, 2)]).with_no_singleton_lemma();
        let result = run_extend(&state).unwrap();
        assert!(!result.is_consistent());
    }

    #[test]
    fn run_extend_without_differing_pair_is_fixed_point() {
        let state = assign_all(&[(7, 1), (11, 2)]).with_no_singleton_lemma();
        let result = run_extend(&state).unwrap();
        // propagation alone finds nothing either: state unchanged
        assert_eq!(result.assigned_count(), 2);
        assert!(result.is_consistent());
    }

    #[test]
    fn run_bounds_flag_long_runs_and_clashes() {
        let long_run = assign_all(&[(5, 2), (6, 2), (7, 2), (8, 2)]);
        assert!(check_run_bounds(&long_run)
            .iter()
            .any(|v| matches!(v, RunViolation::TooLong { start: 5, len: 4 })));

        // pair (7,8) of color 1 bounded by color 3 on both sides
        let clash = assign_all(&[(6, 3), (7, 1), (8, 1), (9, 3)]);
        assert!(check_run_bounds(&clash)
            .iter()
            .any(|v| matches!(v, RunViolation::BoundaryClash { start: 7, len: 2, .. })));
    }

    #[test]
    fn run_bounds_accept_six_triples() {
        let mut state = DeductionState::new();
        for label in 1..=RIM_N {
            let color = (((label - 1) / 3) % 3 + 1) as Color;
            state.assign(label, color_mask(color));
        }
        assert!(state.is_consistent());
        assert!(check_run_bounds(&state).is_empty());
    }

    #[test]
    fn assign_detects_edge_conflict() {
        let mut state = DeductionState::new();
        state.assign(1, color_mask(2));
        state.assign(15, color_mask(2));
        assert_eq!(state.conflict(), Some(Conflict::Edge { u: 1, v: 15 }));
    }
}
