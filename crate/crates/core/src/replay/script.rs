//! The four shipped proof scripts and their validating replay.
//!
//! Every step must be justified by the pre-step state or the replay
//! rejects it: a propagation arrow needs its cited sources to pin exactly
//! two colors and every target to neighbor all sources; a case split must
//! cover every candidate color; a symmetry discharge must actually be an
//! automorphism of the current state. A contradiction step names the
//! offending edge and its color.

use super::refute::{refute_pattern, EngineConfig};
use super::{
    color_mask, rim_adjacent, set_colors, Color, ColorSet, DeductionState, ReplayError, PALETTE,
};

/// The four cases of the argument: the three forbidden rim words and the
/// bi-chromatic-first variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    A,
    B,
    C,
    D,
}

impl Case {
    pub fn id(&self) -> char {
        match self {
            Case::A => 'a',
            Case::B => 'b',
            Case::C => 'c',
            Case::D => 'd',
        }
    }

    pub fn from_id(id: char) -> Option<Case> {
        match id.to_ascii_lowercase() {
            'a' => Some(Case::A),
            'b' => Some(Case::B),
            'c' => Some(Case::C),
            'd' => Some(Case::D),
            _ => None,
        }
    }

    pub fn all() -> [Case; 4] {
        [Case::A, Case::B, Case::C, Case::D]
    }
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// One step of a proof script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofStep {
    /// Initial (bordered) assignment of a color set to a vertex.
    Assign { vertex: usize, colors: ColorSet },
    /// Cited sources jointly pin two colors; every target, adjacent to
    /// all sources, receives the third.
    Propagate {
        sources: Vec<usize>,
        targets: Vec<usize>,
    },
    /// Complete case split over the candidates of a vertex; every branch
    /// must close.
    BranchCases {
        vertex: usize,
        cases: Vec<(Color, Vec<ProofStep>)>,
    },
    /// Pick one color of a two-candidate vertex; the sibling case is
    /// discharged by a color swap that fixes the current state.
    BranchWlog {
        vertex: usize,
        taken: Color,
        swap: (Color, Color),
    },
    /// The determined word at `start` matches an already-refuted pattern.
    CitePattern {
        start: usize,
        len: usize,
        pattern: &'static str,
    },
    /// Two adjacent vertices are determined to the same color.
    Contradiction { u: usize, v: usize },
}

/// A case identifier with its ordered steps.
#[derive(Debug, Clone)]
pub struct ProofScript {
    pub case: Case,
    pub steps: Vec<ProofStep>,
}

/// The shipped script of a case, with the paper's arrows verbatim.
pub fn script_for(case: Case) -> ProofScript {
    use ProofStep::*;
    let steps = match case {
        Case::A => vec![
            Assign { vertex: 7, colors: color_mask(1) },
            Assign { vertex: 8, colors: color_mask(2) },
            Assign { vertex: 9, colors: color_mask(3) },
            Propagate { sources: vec![7, 8], targets: vec![4, 11] },
            Propagate { sources: vec![8, 9], targets: vec![5, 12] },
            Propagate { sources: vec![4, 5], targets: vec![1] },
            Propagate { sources: vec![11, 12], targets: vec![15] },
            Contradiction { u: 1, v: 15 },
        ],
        Case::B => vec![
            Assign { vertex: 7, colors: color_mask(1) },
            Assign { vertex: 8, colors: color_mask(2) },
            Assign { vertex: 9, colors: color_mask(1) },
            Propagate { sources: vec![7, 8], targets: vec![11] },
            BranchCases {
                vertex: 10,
                cases: vec![
                    (2, vec![CitePattern { start: 9, len: 3, pattern: "123" }]),
                    (3, vec![CitePattern { start: 8, len: 3, pattern: "123" }]),
                ],
            },
        ],
        Case::C => vec![
            Assign { vertex: 5, colors: color_mask(3) },
            Assign { vertex: 6, colors: color_mask(3) },
            Assign { vertex: 7, colors: color_mask(1) },
            Assign { vertex: 8, colors: color_mask(1) },
            Assign { vertex: 9, colors: color_mask(2) },
            Assign { vertex: 10, colors: color_mask(2) },
            Assign { vertex: 11, colors: color_mask(2) },
            Assign { vertex: 12, colors: color_mask(3) },
            Assign { vertex: 13, colors: color_mask(3) },
            Propagate { sources: vec![6, 7], targets: vec![3] },
            Propagate { sources: vec![11, 12], targets: vec![15] },
            Propagate { sources: vec![3, 15], targets: vec![18] },
            Propagate { sources: vec![7, 18], targets: vec![4] },
            Propagate { sources: vec![4, 5], targets: vec![1] },
            Contradiction { u: 1, v: 15 },
        ],
        Case::D => vec![
            Assign { vertex: 1, colors: color_mask(1) | color_mask(2) },
            Propagate { sources: vec![1], targets: vec![4, 5, 15, 16] },
            BranchWlog { vertex: 7, taken: 1, swap: (1, 2) },
            Propagate { sources: vec![7, 15], targets: vec![11] },
            Propagate { sources: vec![5, 11], targets: vec![8] },
            Propagate { sources: vec![8, 15], targets: vec![12] },
            Propagate { sources: vec![5, 12], targets: vec![9] },
            Propagate { sources: vec![9, 16], targets: vec![13] },
            Propagate { sources: vec![7, 13], targets: vec![10] },
            Propagate { sources: vec![9, 10], targets: vec![6] },
            Propagate { sources: vec![10, 11], targets: vec![14] },
            Propagate { sources: vec![6, 7], targets: vec![3] },
            Propagate { sources: vec![13, 14], targets: vec![17] },
            Contradiction { u: 3, v: 17 },
        ],
    };
    ProofScript { case, steps }
}

/// One transcript line with the state after the step.
#[derive(Debug, Clone)]
pub struct TraceEntry {
    pub depth: usize,
    pub text: String,
    pub state_row: String,
}

/// Outcome of a validated replay.
#[derive(Debug, Clone)]
pub struct ReplayReport {
    pub case: Case,
    /// The conflicting edge, when the case ends in a direct contradiction.
    pub contradiction: Option<(usize, usize)>,
    /// The case this one reduces to, when it closes by citation instead.
    pub reduces_to: Option<Case>,
    pub trace: Vec<TraceEntry>,
    pub final_state: DeductionState,
}

impl ReplayReport {
    /// Structured text transcript: step number, rule, cited vertices,
    /// resulting assignment.
    pub fn transcript(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("case {}\n", self.case));
        out.push_str("vertices:      ");
        out.push_str(
            &(1..=super::RIM_N)
                .map(|l| format!("{l:2}"))
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push('\n');
        for (i, entry) in self.trace.iter().enumerate() {
            let indent = "  ".repeat(entry.depth);
            out.push_str(&format!(
                "step {:2}: {indent}{:<42} | {}\n",
                i + 1,
                entry.text,
                entry.state_row
            ));
        }
        match (self.contradiction, self.reduces_to) {
            (Some((u, v)), _) => {
                out.push_str(&format!("result: contradiction on edge ({u}, {v})\n"))
            }
            (None, Some(case)) => out.push_str(&format!("result: reduces to case {case}\n")),
            _ => out.push_str("result: open\n"),
        }
        out
    }
}

/// How a (sub)script ended.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Closure {
    Open,
    Contradicted(usize, usize),
    Cited(&'static str),
    /// A complete case split whose branches all closed, not all by the
    /// same citation.
    Split,
}

struct Replayer {
    case: Case,
    step_no: usize,
    trace: Vec<TraceEntry>,
}

impl Replayer {
    fn fail(&self, reason: impl Into<String>) -> ReplayError {
        ReplayError::ScriptValidation {
            case: self.case.id(),
            step: self.step_no,
            reason: reason.into(),
        }
    }

    fn record(&mut self, depth: usize, text: String, state: &DeductionState) {
        self.trace.push(TraceEntry {
            depth,
            text,
            state_row: state.render_row(),
        });
    }

    fn run(
        &mut self,
        state: &mut DeductionState,
        steps: &[ProofStep],
        depth: usize,
    ) -> Result<Closure, ReplayError> {
        let mut closure = Closure::Open;
        for step in steps {
            self.step_no += 1;
            if closure != Closure::Open {
                return Err(self.fail("step after the script already closed"));
            }
            closure = self.run_step(state, step, depth)?;
        }
        Ok(closure)
    }

    fn run_step(
        &mut self,
        state: &mut DeductionState,
        step: &ProofStep,
        depth: usize,
    ) -> Result<Closure, ReplayError> {
        match step {
            ProofStep::Assign { vertex, colors } => {
                let (vertex, colors) = (*vertex, *colors);
                if !(1..=super::RIM_N).contains(&vertex) {
                    return Err(self.fail(format!("vertex {vertex} out of range")));
                }
                if state.is_assigned(vertex) {
                    return Err(self.fail(format!("vertex {vertex} already assigned")));
                }
                if colors == 0 || colors & !PALETTE != 0 || colors.count_ones() > 2 {
                    return Err(self.fail(format!("bad color set {colors:#b}")));
                }
                for nb in super::rim_neighbors(vertex) {
                    if state.assigned(nb) & colors != 0 {
                        return Err(self.fail(format!(
                            "assignment clashes with neighbor {nb}"
                        )));
                    }
                }
                state.assign(vertex, colors);
                self.record(
                    depth,
                    format!("assign {vertex} <- {:?}", set_colors(colors)),
                    state,
                );
                Ok(Closure::Open)
            }
            ProofStep::Propagate { sources, targets } => {
                if sources.is_empty() || targets.is_empty() {
                    return Err(self.fail("propagation needs sources and targets"));
                }
                let mut pinned: ColorSet = 0;
                for &s in sources {
                    let mask = state.assigned(s);
                    if mask == 0 {
                        return Err(self.fail(format!("source {s} is unassigned")));
                    }
                    pinned |= mask;
                }
                if pinned.count_ones() != 2 {
                    return Err(self.fail(format!(
                        "sources {sources:?} pin {:?}, not two colors",
                        set_colors(pinned)
                    )));
                }
                let third_mask = PALETTE & !pinned;
                let third = third_mask.trailing_zeros() as Color + 1;
                for &t in targets {
                    if state.is_assigned(t) {
                        return Err(self.fail(format!("target {t} already assigned")));
                    }
                    for &s in sources {
                        if !rim_adjacent(t, s) {
                            return Err(self.fail(format!(
                                "target {t} is not adjacent to source {s}"
                            )));
                        }
                    }
                    state.assign(t, third_mask);
                }
                self.record(
                    depth,
                    format!("{{{}}} => {{{}}} : color {third}", join(sources), join(targets)),
                    state,
                );
                Ok(Closure::Open)
            }
            ProofStep::BranchCases { vertex, cases } => {
                let vertex = *vertex;
                if state.is_assigned(vertex) {
                    return Err(self.fail(format!("branch vertex {vertex} already assigned")));
                }
                let mut case_colors: Vec<Color> = cases.iter().map(|(c, _)| *c).collect();
                case_colors.sort_unstable();
                case_colors.dedup();
                if case_colors.len() != cases.len() {
                    return Err(self.fail("duplicate branch colors"));
                }
                let candidates = set_colors(state.candidates(vertex));
                if case_colors != candidates {
                    return Err(self.fail(format!(
                        "branch on {vertex} covers {case_colors:?} but candidates are {candidates:?}"
                    )));
                }
                self.record(
                    depth,
                    format!("branch on vertex {vertex} over {candidates:?}"),
                    state,
                );
                let mut citations = Vec::new();
                for (color, substeps) in cases {
                    let mut branch_state = state.clone();
                    branch_state.assign(vertex, color_mask(*color));
                    self.record(
                        depth + 1,
                        format!("case {vertex} <- {color}"),
                        &branch_state,
                    );
                    match self.run(&mut branch_state, substeps, depth + 1)? {
                        Closure::Open => {
                            return Err(self.fail(format!(
                                "branch {vertex} <- {color} does not close"
                            )))
                        }
                        Closure::Cited(p) => citations.push(p),
                        Closure::Contradicted(_, _) | Closure::Split => {}
                    }
                }
                if citations.len() == cases.len() && citations.windows(2).all(|w| w[0] == w[1]) {
                    Ok(Closure::Cited(citations[0]))
                } else {
                    Ok(Closure::Split)
                }
            }
            ProofStep::BranchWlog { vertex, taken, swap } => {
                let (vertex, taken) = (*vertex, *taken);
                let (a, b) = *swap;
                if state.is_assigned(vertex) {
                    return Err(self.fail(format!("branch vertex {vertex} already assigned")));
                }
                let sibling = if taken == a {
                    b
                } else if taken == b {
                    a
                } else {
                    return Err(self.fail("taken color is not part of the swap"));
                };
                let candidates = state.candidates(vertex);
                if candidates & color_mask(taken) == 0 {
                    return Err(self.fail(format!("color {taken} not a candidate of {vertex}")));
                }
                if candidates & !(color_mask(taken) | color_mask(sibling)) != 0 {
                    return Err(self.fail(format!(
                        "candidates {:?} of {vertex} exceed the swap orbit {{{taken}, {sibling}}}",
                        set_colors(candidates)
                    )));
                }
                // the swap must fix the current state pointwise
                for label in 1..=super::RIM_N {
                    let mask = state.assigned(label);
                    if swap_mask(mask, a, b) != mask {
                        return Err(self.fail(format!(
                            "swap {a}<->{b} is not an automorphism: vertex {label} carries {:?}",
                            set_colors(mask)
                        )));
                    }
                }
                state.assign(vertex, color_mask(taken));
                self.record(
                    depth,
                    format!(
                        "wlog {vertex} <- {taken} (case {sibling} by swapping colors {a}<->{b})"
                    ),
                    state,
                );
                Ok(Closure::Open)
            }
            ProofStep::CitePattern { start, len, pattern } => {
                let (start, len) = (*start, *len);
                let mut word = Vec::with_capacity(len);
                for offset in 0..len {
                    let label = (start - 1 + offset) % super::RIM_N + 1;
                    match state.determined(label) {
                        Some(c) => word.push(c),
                        None => {
                            return Err(self.fail(format!(
                                "cited vertex {label} is not determined"
                            )))
                        }
                    }
                }
                let expected: Vec<Color> = pattern
                    .chars()
                    .map(|ch| ch.to_digit(10).unwrap() as Color)
                    .collect();
                if !words_equivalent(&word, &expected) {
                    return Err(self.fail(format!(
                        "word {word:?} at {start} does not match pattern {pattern}"
                    )));
                }
                let refutation = refute_pattern(pattern, &EngineConfig::plain())?;
                if !refutation.is_closed() {
                    return Err(self.fail(format!("cited pattern {pattern} is not refuted")));
                }
                self.record(
                    depth,
                    format!("vertices {start}..{} carry refuted pattern {pattern}", {
                        (start - 1 + len - 1) % super::RIM_N + 1
                    }),
                    state,
                );
                Ok(Closure::Cited(pattern))
            }
            ProofStep::Contradiction { u, v } => {
                let (u, v) = (*u, *v);
                if !rim_adjacent(u, v) {
                    return Err(self.fail(format!("({u}, {v}) is not an edge")));
                }
                match (state.determined(u), state.determined(v)) {
                    (Some(cu), Some(cv)) if cu == cv => {
                        self.record(
                            depth,
                            format!("contradiction: edge ({u}, {v}) both color {cu}"),
                            state,
                        );
                        Ok(Closure::Contradicted(u, v))
                    }
                    (cu, cv) => Err(self.fail(format!(
                        "no contradiction on ({u}, {v}): colors {cu:?} vs {cv:?}"
                    ))),
                }
            }
        }
    }
}

fn join(labels: &[usize]) -> String {
    labels
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn swap_mask(mask: ColorSet, a: Color, b: Color) -> ColorSet {
    let (ma, mb) = (color_mask(a), color_mask(b));
    let mut out = mask & !(ma | mb);
    if mask & ma != 0 {
        out |= mb;
    }
    if mask & mb != 0 {
        out |= ma;
    }
    out
}

/// Two words are the same up to a color bijection.
fn words_equivalent(word: &[Color], pattern: &[Color]) -> bool {
    if word.len() != pattern.len() {
        return false;
    }
    let mut forward = [0u8; 4];
    let mut backward = [0u8; 4];
    for (&w, &p) in word.iter().zip(pattern) {
        if forward[p as usize] == 0 && backward[w as usize] == 0 {
            forward[p as usize] = w;
            backward[w as usize] = p;
        } else if forward[p as usize] != w || backward[w as usize] != p {
            return false;
        }
    }
    true
}

/// Replays the shipped script of a case, validating every step.
pub fn replay_case(case: Case) -> Result<ReplayReport, ReplayError> {
    let script = script_for(case);
    let mut replayer = Replayer {
        case,
        step_no: 0,
        trace: Vec::new(),
    };
    let mut state = DeductionState::new();
    let closure = replayer.run(&mut state, &script.steps, 0)?;
    let (contradiction, reduces_to) = match closure {
        Closure::Contradicted(u, v) => (Some((u, v)), None),
        Closure::Cited("123") => (None, Some(Case::A)),
        Closure::Cited("121") => (None, Some(Case::B)),
        Closure::Cited(_) | Closure::Split => (None, None),
        Closure::Open => {
            return Err(ReplayError::ScriptValidation {
                case: case.id(),
                step: replayer.step_no,
                reason: "script ends without closing".into(),
            })
        }
    };
    Ok(ReplayReport {
        case,
        contradiction,
        reduces_to,
        trace: replayer.trace,
        final_state: state,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_a_contradicts_on_1_15() {
        let report = replay_case(Case::A).unwrap();
        assert_eq!(report.contradiction, Some((1, 15)));
        assert_eq!(report.final_state.determined(1), Some(2));
        assert_eq!(report.final_state.determined(15), Some(2));
    }

    #[test]
    fn case_b_reduces_to_case_a() {
        let report = replay_case(Case::B).unwrap();
        assert_eq!(report.contradiction, None);
        assert_eq!(report.reduces_to, Some(Case::A));
    }

    #[test]
    fn case_c_contradicts_on_1_15() {
        let report = replay_case(Case::C).unwrap();
        assert_eq!(report.contradiction, Some((1, 15)));
    }

    #[test]
    fn case_d_contradicts_on_3_17() {
        let report = replay_case(Case::D).unwrap();
        assert_eq!(report.contradiction, Some((3, 17)));
        assert_eq!(report.final_state.determined(3), Some(3));
        assert_eq!(report.final_state.determined(17), Some(3));
    }

    #[test]
    fn script_arrows_match_the_stated_sequences() {
        let arrows = |case: Case| -> Vec<(Vec<usize>, Vec<usize>)> {
            script_for(case)
                .steps
                .iter()
                .filter_map(|s| match s {
                    ProofStep::Propagate { sources, targets } => {
                        Some((sources.clone(), targets.clone()))
                    }
                    _ => None,
                })
                .collect()
        };
        assert_eq!(
            arrows(Case::A),
            vec![
                (vec![7, 8], vec![4, 11]),
                (vec![8, 9], vec![5, 12]),
                (vec![4, 5], vec![1]),
                (vec![11, 12], vec![15]),
            ]
        );
        assert_eq!(
            arrows(Case::C),
            vec![
                (vec![6, 7], vec![3]),
                (vec![11, 12], vec![15]),
                (vec![3, 15], vec![18]),
                (vec![7, 18], vec![4]),
                (vec![4, 5], vec![1]),
            ]
        );
        assert_eq!(
            arrows(Case::D),
            vec![
                (vec![1], vec![4, 5, 15, 16]),
                (vec![7, 15], vec![11]),
                (vec![5, 11], vec![8]),
                (vec![8, 15], vec![12]),
                (vec![5, 12], vec![9]),
                (vec![9, 16], vec![13]),
                (vec![7, 13], vec![10]),
                (vec![9, 10], vec![6]),
                (vec![10, 11], vec![14]),
                (vec![6, 7], vec![3]),
                (vec![13, 14], vec![17]),
            ]
        );
    }

    #[test]
    fn replay_rejects_unjustified_propagation() {
        // sources pin only one color
        let script = vec![
            ProofStep::Assign { vertex: 7, colors: color_mask(1) },
            ProofStep::Propagate { sources: vec![7], targets: vec![4] },
        ];
        let mut replayer = Replayer { case: Case::A, step_no: 0, trace: Vec::new() };
        let mut state = DeductionState::new();
        let err = replayer.run(&mut state, &script, 0).unwrap_err();
        assert!(matches!(err, ReplayError::ScriptValidation { step: 2, .. }));
    }

    #[test]
    fn replay_rejects_non_adjacent_target() {
        let script = vec![
            ProofStep::Assign { vertex: 7, colors: color_mask(1) },
            ProofStep::Assign { vertex: 8, colors: color_mask(2) },
            // vertex 5 is adjacent to 8 but not to 7
            ProofStep::Propagate { sources: vec![7, 8], targets: vec![5] },
        ];
        let mut replayer = Replayer { case: Case::A, step_no: 0, trace: Vec::new() };
        let mut state = DeductionState::new();
        let err = replayer.run(&mut state, &script, 0).unwrap_err();
        assert!(matches!(
            err,
            ReplayError::ScriptValidation { step: 3, .. }
        ));
    }

    #[test]
    fn replay_rejects_incomplete_branch() {
        // vertex 10 has candidates {2,3} after the prefix of case b, so a
        // single-branch split must be rejected
        let script = vec![
            ProofStep::Assign { vertex: 7, colors: color_mask(1) },
            ProofStep::Assign { vertex: 8, colors: color_mask(2) },
            ProofStep::Assign { vertex: 9, colors: color_mask(1) },
            ProofStep::Propagate { sources: vec![7, 8], targets: vec![11] },
            ProofStep::BranchCases {
                vertex: 10,
                cases: vec![(2, vec![ProofStep::CitePattern { start: 9, len: 3, pattern: "123" }])],
            },
        ];
        let mut replayer = Replayer { case: Case::B, step_no: 0, trace: Vec::new() };
        let mut state = DeductionState::new();
        assert!(replayer.run(&mut state, &script, 0).is_err());
    }

    #[test]
    fn replay_rejects_false_contradiction() {
        let script = vec![
            ProofStep::Assign { vertex: 7, colors: color_mask(1) },
            ProofStep::Assign { vertex: 10, colors: color_mask(1) },
            ProofStep::Contradiction { u: 7, v: 10 },
        ];
        let mut replayer = Replayer { case: Case::A, step_no: 0, trace: Vec::new() };
        let mut state = DeductionState::new();
        // 7 and 10 are adjacent and equal: this IS a contradiction, but the
        // assign step itself must already have flagged the clash
        let err = replayer.run(&mut state, &script, 0).unwrap_err();
        assert!(matches!(err, ReplayError::ScriptValidation { step: 2, .. }));
    }

    #[test]
    fn wlog_swap_must_fix_state() {
        // vertex 1 determined to a single color breaks the 1<->2 swap
        let script = vec![
            ProofStep::Assign { vertex: 1, colors: color_mask(1) },
            ProofStep::BranchWlog { vertex: 7, taken: 1, swap: (1, 2) },
        ];
        let mut replayer = Replayer { case: Case::D, step_no: 0, trace: Vec::new() };
        let mut state = DeductionState::new();
        let err = replayer.run(&mut state, &script, 0).unwrap_err();
        assert!(matches!(err, ReplayError::ScriptValidation { step: 2, .. }));
    }

    #[test]
    fn transcripts_mention_the_conflict() {
        let report = replay_case(Case::D).unwrap();
        let text = report.transcript();
        assert!(text.contains("contradiction on edge (3, 17)"));
        assert!(text.contains("wlog 7 <- 1"));
        let b = replay_case(Case::B).unwrap().transcript();
        assert!(b.contains("reduces to case a"));
    }
}
