//! Known complexity of raising the diameter from `d` to `d + k` with a
//! bounded number of deletions (the exact-diameter, budgeted variant),
//! restricted to inputs of diameter `d`.

use std::fmt::{self, Write as _};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Complexity {
    Polynomial,
    NpComplete,
    Open,
}

impl Complexity {
    pub fn symbol(self) -> &'static str {
        match self {
            Complexity::Polynomial => "P",
            Complexity::NpComplete => "NP-c",
            Complexity::Open => "?",
        }
    }
}

/// Result that settles a cell, when one does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Complete inputs: everything follows from the maximum edge count of
    /// a diameter-`d` graph.
    CompleteGraphs,
    /// Relevant-path algorithm for exact diameter three.
    ExactDiameterThree,
    /// Vertex Cover gadget of diameter three, target five.
    VertexCoverDiameterThree,
    /// Vertex Cover gadget of diameter four, target five.
    VertexCoverDiameterFour,
    /// Path extensions and triangle chains on top of the gadgets.
    Composition,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::CompleteGraphs => "complete graphs",
            Source::ExactDiameterThree => "exact diameter 3",
            Source::VertexCoverDiameterThree => "VC gadget, diam 3",
            Source::VertexCoverDiameterFour => "VC gadget, diam 4",
            Source::Composition => "composition",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub complexity: Complexity,
    pub source: Option<Source>,
}

/// Classification of target `d + k` on inputs of diameter `d`
/// (`d >= 1`, `k >= 1`).
pub fn classify(d: usize, k: usize) -> Cell {
    use Complexity::*;
    let (complexity, source) = match (d, k) {
        (0, _) | (_, 0) => (Open, None),
        (1, _) => (Polynomial, Some(Source::CompleteGraphs)),
        (2, 1) => (Polynomial, Some(Source::ExactDiameterThree)),
        (3, 2) => (NpComplete, Some(Source::VertexCoverDiameterThree)),
        (4, 1) => (NpComplete, Some(Source::VertexCoverDiameterFour)),
        (d, k) if d >= 5 && k < d => (NpComplete, Some(Source::Composition)),
        _ => (Open, None),
    };
    Cell { complexity, source }
}

/// Plain-text grid for `d` in `1..=max_d` (rows) and `k` in `1..=max_k`.
pub fn render_table(max_d: usize, max_k: usize) -> String {
    let width = 6;
    let mut out = String::new();
    let _ = write!(out, "{:<5}", "d\\k");
    for k in 1..=max_k {
        let _ = write!(out, "{k:>width$}");
    }
    out.push('\n');
    for d in 1..=max_d {
        let _ = write!(out, "{d:<5}");
        for k in 1..=max_k {
            let _ = write!(out, "{:>width$}", classify(d, k).complexity.symbol());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Complexity::*;

    #[test]
    fn reference_cells() {
        assert_eq!(classify(2, 1).complexity, Polynomial);
        assert_eq!(classify(3, 2).complexity, NpComplete);
        assert_eq!(classify(3, 1).complexity, Open);
        assert_eq!(classify(1, 7).complexity, Polynomial);
        assert_eq!(classify(5, 4).complexity, NpComplete);
        assert_eq!(classify(5, 5).complexity, Open);
        assert_eq!(classify(8, 7).complexity, NpComplete);
        assert_eq!(classify(4, 2).complexity, Open);
    }

    #[test]
    fn grid_rows() {
        let expected = [
            "P P P P P P P",
            "P ? ? ? ? ? ?",
            "? NP-c ? ? ? ? ?",
            "NP-c ? ? ? ? ? ?",
            "NP-c NP-c NP-c NP-c ? ? ?",
            "NP-c NP-c NP-c NP-c NP-c ? ?",
            "NP-c NP-c NP-c NP-c NP-c NP-c ?",
            "NP-c NP-c NP-c NP-c NP-c NP-c NP-c",
        ];
        for (d, row) in (1..=8).zip(expected) {
            let got: Vec<&str> = (1..=7).map(|k| classify(d, k).complexity.symbol()).collect();
            assert_eq!(got.join(" "), row, "row d={d}");
        }
        let text = render_table(8, 7);
        assert_eq!(text.lines().count(), 9);
    }
}
