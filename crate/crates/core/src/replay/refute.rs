//! Exhaustive refutation of short color words on the rim.
//!
//! A pattern is placed at the canonical start (vertex 7, as in the
//! figures; rotational symmetry of the rim makes the position
//! immaterial), then the engine alternates propagation with branching on
//! the first undetermined vertex in cyclic order from the start. A node
//! closes on a conflict or when its state embeds an already-refuted
//! pattern (matched up to rotation, color bijection and reversal — the
//! last justified by the rim's mirror automorphism). A complete
//! conflict-free assignment is a satisfying completion and disproves the
//! refutation instead.

use super::{
    color_mask, propagate, run_extend, set_colors, Color, DeductionState, ReplayError,
    CANONICAL_START, RIM_N,
};

/// Search configuration for [`refute_pattern`].
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Enable the pair-extension rule (requires the lemma flag).
    pub use_run_extend: bool,
    /// Whether singleton runs have been refuted already.
    pub no_singleton_proved: bool,
    /// Patterns already refuted, citable to close a node.
    pub citable: Vec<String>,
    /// Node budget for the whole tree.
    pub max_nodes: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            use_run_extend: false,
            no_singleton_proved: false,
            citable: Vec::new(),
            max_nodes: 1 << 20,
        }
    }
}

impl EngineConfig {
    pub fn plain() -> Self {
        EngineConfig::default()
    }

    pub fn with_citable(mut self, patterns: &[&str]) -> Self {
        self.citable = patterns.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_run_extend(mut self) -> Self {
        self.use_run_extend = true;
        self.no_singleton_proved = true;
        self
    }
}

/// One node of the refutation tree.
#[derive(Debug, Clone)]
pub enum ProofTree {
    /// Closed by an inconsistency found after propagation.
    Closed { conflict: super::Conflict },
    /// Closed by citing an already-refuted embedded pattern.
    Cited { pattern: String, at: usize },
    /// Case split on every candidate color of a vertex.
    Branch {
        vertex: usize,
        children: Vec<(Color, ProofTree)>,
    },
    /// A satisfying completion: the pattern is not refutable.
    Completed { coloring: [Color; RIM_N] },
}

impl ProofTree {
    pub fn is_closed(&self) -> bool {
        match self {
            ProofTree::Closed { .. } | ProofTree::Cited { .. } => true,
            ProofTree::Branch { children, .. } => {
                children.iter().all(|(_, child)| child.is_closed())
            }
            ProofTree::Completed { .. } => false,
        }
    }

    pub fn completion(&self) -> Option<[Color; RIM_N]> {
        match self {
            ProofTree::Completed { coloring } => Some(*coloring),
            ProofTree::Branch { children, .. } => {
                children.iter().find_map(|(_, child)| child.completion())
            }
            _ => None,
        }
    }

    /// Vertices branched on anywhere in the tree, in discovery order.
    pub fn branch_vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_branches(&mut out);
        out
    }

    fn collect_branches(&self, out: &mut Vec<usize>) {
        if let ProofTree::Branch { vertex, children } = self {
            out.push(*vertex);
            for (_, child) in children {
                child.collect_branches(out);
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            ProofTree::Branch { children, .. } => {
                1 + children.iter().map(|(_, c)| c.node_count()).sum::<usize>()
            }
            _ => 1,
        }
    }
}

/// Result of refuting one pattern.
#[derive(Debug, Clone)]
pub struct Refutation {
    pub pattern: String,
    pub start: usize,
    pub tree: ProofTree,
}

impl Refutation {
    pub fn is_closed(&self) -> bool {
        self.tree.is_closed()
    }

    pub fn completion(&self) -> Option<[Color; RIM_N]> {
        self.tree.completion()
    }
}

fn parse_pattern(pattern: &str) -> Result<Vec<Color>, ReplayError> {
    let colors: Option<Vec<Color>> = pattern
        .chars()
        .map(|ch| match ch {
            '1' => Some(1),
            '2' => Some(2),
            '3' => Some(3),
            _ => None,
        })
        .collect();
    match colors {
        Some(cs) if !cs.is_empty() && cs.len() <= 9 => Ok(cs),
        _ => Err(ReplayError::BadPattern(pattern.to_string())),
    }
}

/// Does the state carry `word` (up to a color bijection) on the `len`
/// consecutive vertices starting at `start`?
fn matches_at(state: &DeductionState, word: &[Color], start: usize, reversed: bool) -> bool {
    let mut forward = [0u8; 4];
    let mut backward = [0u8; 4];
    for (offset, &pat) in word.iter().enumerate() {
        let idx = if reversed { word.len() - 1 - offset } else { offset };
        let label = (start - 1 + idx) % RIM_N + 1;
        let color = match state.determined(label) {
            Some(c) => c,
            None => return false,
        };
        if forward[pat as usize] == 0 && backward[color as usize] == 0 {
            forward[pat as usize] = color;
            backward[color as usize] = pat;
        } else if forward[pat as usize] != color || backward[color as usize] != pat {
            return false;
        }
    }
    true
}

/// First citable pattern embedded anywhere in the state.
fn find_citation(state: &DeductionState, citable: &[Vec<Color>], names: &[String]) -> Option<(String, usize)> {
    for (word, name) in citable.iter().zip(names) {
        for start in 1..=RIM_N {
            if matches_at(state, word, start, false) || matches_at(state, word, start, true) {
                return Some((name.clone(), start));
            }
        }
    }
    None
}

struct RefuteSearch {
    citable_words: Vec<Vec<Color>>,
    citable_names: Vec<String>,
    use_run_extend: bool,
    nodes_left: usize,
    start: usize,
}

impl RefuteSearch {
    fn close(&mut self, state: &DeductionState) -> Result<ProofTree, ReplayError> {
        if self.nodes_left == 0 {
            return Err(ReplayError::SearchBudget);
        }
        self.nodes_left -= 1;

        if let Some((pattern, at)) = find_citation(state, &self.citable_words, &self.citable_names)
        {
            return Ok(ProofTree::Cited { pattern, at });
        }
        let state = if self.use_run_extend {
            run_extend(state)?
        } else {
            propagate(state)
        };
        if let Some(conflict) = state.conflict() {
            return Ok(ProofTree::Closed { conflict });
        }
        if let Some((pattern, at)) = find_citation(&state, &self.citable_words, &self.citable_names)
        {
            return Ok(ProofTree::Cited { pattern, at });
        }
        if state.is_complete() {
            let coloring = state
                .full_coloring()
                .expect("complete consistent state is determined");
            return Ok(ProofTree::Completed { coloring });
        }
        // branch on the first undetermined vertex in cyclic order from the
        // placement start
        let vertex = (0..RIM_N)
            .map(|i| (self.start - 1 + i) % RIM_N + 1)
            .find(|&label| !state.is_assigned(label))
            .expect("incomplete state has an unassigned vertex");
        // after a consistent propagation pass every unassigned vertex has
        // at least one candidate
        let mut children = Vec::new();
        for color in set_colors(state.candidates(vertex)) {
            let mut child = state.clone();
            child.assign(vertex, color_mask(color));
            children.push((color, self.close(&child)?));
        }
        debug_assert!(!children.is_empty());
        Ok(ProofTree::Branch { vertex, children })
    }
}

/// Places `pattern` at the canonical start and searches for a closed
/// proof tree; a satisfying completion means the pattern is allowed.
pub fn refute_pattern(pattern: &str, config: &EngineConfig) -> Result<Refutation, ReplayError> {
    let word = parse_pattern(pattern)?;
    if config.use_run_extend && !config.no_singleton_proved {
        return Err(ReplayError::LemmaGate);
    }
    let mut state = DeductionState::new();
    if config.no_singleton_proved {
        state = state.with_no_singleton_lemma();
    }
    for (offset, &color) in word.iter().enumerate() {
        let label = (CANONICAL_START - 1 + offset) % RIM_N + 1;
        state.assign(label, color_mask(color));
    }
    let mut citable_words = Vec::new();
    let mut citable_names = Vec::new();
    for name in &config.citable {
        if name == pattern {
            continue; // a pattern cannot cite itself
        }
        citable_words.push(parse_pattern(name)?);
        citable_names.push(name.clone());
    }
    let mut search = RefuteSearch {
        citable_words,
        citable_names,
        use_run_extend: config.use_run_extend,
        nodes_left: config.max_nodes,
        start: CANONICAL_START,
    };
    let tree = search.close(&state)?;
    Ok(Refutation {
        pattern: pattern.to_string(),
        start: CANONICAL_START,
        tree,
    })
}

/// The standard refutation ladder: singleton runs (123, 121), then mixed
/// pairs and triples (331122233) with pair extension available.
pub fn standard_refutations() -> Result<Vec<Refutation>, ReplayError> {
    let r123 = refute_pattern("123", &EngineConfig::plain())?;
    let r121 = refute_pattern("121", &EngineConfig::plain().with_citable(&["123"]))?;
    if !r123.is_closed() || !r121.is_closed() {
        return Err(ReplayError::OracleMismatch(
            "singleton-run patterns did not close".into(),
        ));
    }
    let mixed = refute_pattern(
        "331122233",
        &EngineConfig::plain()
            .with_citable(&["123", "121"])
            .with_run_extend(),
    )?;
    if !mixed.is_closed() {
        return Err(ReplayError::OracleMismatch(
            "mixed pair/triple pattern did not close".into(),
        ));
    }
    Ok(vec![r123, r121, mixed])
}

/// Enumerates every proper 3-coloring of the rim by branch-and-propagate,
/// using the refutation ladder for pruning, and cross-checks the result
/// against the solver's independent enumeration.
pub fn derive_all_3colorings() -> Result<Vec<DeductionState>, ReplayError> {
    let ladder = standard_refutations()?;
    let citable: Vec<String> = ladder.iter().map(|r| r.pattern.clone()).collect();

    let mut completions: Vec<[Color; RIM_N]> = Vec::new();
    let mut stack = vec![DeductionState::new().with_no_singleton_lemma()];
    let citable_words: Vec<Vec<Color>> = citable
        .iter()
        .map(|p| parse_pattern(p))
        .collect::<Result<_, _>>()?;
    let mut budget = 1usize << 20;
    while let Some(state) = stack.pop() {
        if budget == 0 {
            return Err(ReplayError::SearchBudget);
        }
        budget -= 1;
        if find_citation(&state, &citable_words, &citable).is_some() {
            continue;
        }
        let state = run_extend(&state)?;
        if state.conflict().is_some() {
            continue;
        }
        if find_citation(&state, &citable_words, &citable).is_some() {
            continue;
        }
        if state.is_complete() {
            completions.push(state.full_coloring().expect("complete state"));
            continue;
        }
        let vertex = (1..=RIM_N)
            .find(|&label| !state.is_assigned(label))
            .expect("incomplete state");
        // push in reverse color order so lower colors explore first
        for color in set_colors(state.candidates(vertex)).into_iter().rev() {
            let mut child = state.clone();
            child.assign(vertex, color_mask(color));
            stack.push(child);
        }
    }
    completions.sort_unstable();
    completions.dedup();

    // cross-check against the solver's enumeration of the same space
    let rim = crate::graphs::build_rim18();
    let solver_colorings = crate::solver::enumerate_colorings(&rim, 3)?;
    let mut solver_keys: Vec<[Color; RIM_N]> = solver_colorings
        .iter()
        .map(|c| {
            let mut arr = [0 as Color; RIM_N];
            for (v, slot) in arr.iter_mut().enumerate() {
                let colors = c.colors_of(v);
                *slot = colors[0] as Color + 1;
            }
            arr
        })
        .collect();
    solver_keys.sort_unstable();
    if solver_keys != completions {
        return Err(ReplayError::OracleMismatch(format!(
            "deduction found {} colorings, solver found {}",
            completions.len(),
            solver_keys.len()
        )));
    }

    Ok(completions
        .into_iter()
        .map(|coloring| {
            let mut state = DeductionState::new().with_no_singleton_lemma();
            for (i, &color) in coloring.iter().enumerate() {
                state.assign(i + 1, color_mask(color));
            }
            state
        })
        .collect())
}
