//! The named distance constants and the decimals quoted for them.
//!
//! Each entry pairs a closed-form evaluation (when one exists) with the
//! decimal quoted in the literature, so a registry check can flag any
//! transcription drift.

use std::f64::consts::PI;

/// Upper bound of the admissible interval: `sqrt(7)/2`, the same-color
/// separation to tile diameter ratio of the hexagonal 7-coloring.
pub fn isbell_ratio() -> f64 {
    7f64.sqrt() / 2.0
}

/// `sqrt(43/25)`, the interval top of the 203-vertex construction.
pub fn exoo_d() -> f64 {
    (43f64 / 25.0).sqrt()
}

/// `2 sin(2 pi / 9)`, the interval bottom reached by the 19-vertex graph.
pub fn rim_d() -> f64 {
    2.0 * (2.0 * PI / 9.0).sin()
}

/// `2 sin(5 pi / 22)`, the interval top of the 29-vertex two-ring graph.
pub fn two_ring_d() -> f64 {
    2.0 * (5.0 * PI / 22.0).sin()
}

/// One registry entry: a named constant, its closed-form value when the
/// source states one, and the quoted decimal.
#[derive(Debug, Clone)]
pub struct ConstantEntry {
    pub name: &'static str,
    pub formula: &'static str,
    pub computed: Option<f64>,
    pub quoted: f64,
}

impl ConstantEntry {
    /// Difference between closed form and quoted decimal, when computable.
    pub fn deviation(&self) -> Option<f64> {
        self.computed.map(|c| (c - self.quoted).abs())
    }

    /// True when a closed form exists and disagrees with the quoted
    /// decimal by more than the given tolerance.
    pub fn mismatch(&self, tol: f64) -> bool {
        self.deviation().map_or(false, |d| d > tol)
    }
}

/// All registry entries in decreasing order of the constant.
pub fn registry() -> Vec<ConstantEntry> {
    vec![
        ConstantEntry {
            name: "isbell_ratio",
            formula: "sqrt(7)/2",
            computed: Some(isbell_ratio()),
            quoted: 1.322876,
        },
        ConstantEntry {
            name: "exoo_d",
            formula: "sqrt(43/25)",
            computed: Some(exoo_d()),
            quoted: 1.311488,
        },
        ConstantEntry {
            name: "two_ring_d",
            formula: "2 sin(5 pi / 22)",
            computed: Some(two_ring_d()),
            quoted: 1.309721,
        },
        ConstantEntry {
            name: "annulus_d",
            formula: "(no closed form quoted)",
            computed: None,
            quoted: 1.285987,
        },
        ConstantEntry {
            name: "rim_d",
            formula: "2 sin(2 pi / 9)",
            computed: Some(rim_d()),
            quoted: 1.285575,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_quoted_decimals() {
        for entry in registry() {
            assert!(
                !entry.mismatch(1e-6),
                "{} deviates: computed {:?}, quoted {}",
                entry.name,
                entry.computed,
                entry.quoted
            );
        }
    }

    #[test]
    fn ordering_of_bounds() {
        assert!(rim_d() < exoo_d());
        assert!(exoo_d() < isbell_ratio());
        assert!(rim_d() < two_ring_d());
        assert!(two_ring_d() < isbell_ratio());
    }

    #[test]
    fn rim_d_equals_step4_chord() {
        let chord = crate::geometry::chord_length(18, 4, 1.0).unwrap();
        assert!((rim_d() - chord).abs() < 1e-15);
    }
}
