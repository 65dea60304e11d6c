//! Exact decision of strong (induced) arrowing and of classical Ramsey arrowing.
//!
//! The search colors host edges one at a time and backtracks as soon as the
//! edge just colored completes a monochromatic copy of the forbidden pattern in
//! its color. A leaf is a coloring avoiding both patterns, i.e. a witness that
//! the host does not arrow the pair.
//!
//! Two reductions keep the tree small without changing the verdict:
//! an edge lying in no host copy of the red pattern is fixed red, and an edge
//! lying in no host copy of the blue pattern is fixed blue. Recoloring such an
//! edge that way can never create a forbidden copy, so a witness exists iff one
//! exists with those edges fixed.
//!
//! The first [`SPLIT_DEPTH`] free edges split the tree into independent branches
//! which may run concurrently. Branches are ranked by the colors they give those
//! edges (red before blue), and the lowest-ranked branch holding a witness
//! supplies it, so results do not depend on scheduling.

use crate::coloring::{verify_witness, verify_witness_subgraph, Color, EdgeColoring};
use crate::embed::{embedding_through_edge, Containment};
use crate::graph::{complete, Graph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicUsize, Ordering};
use thiserror::Error;

/// Number of leading edges whose colorings define the top-level branches.
pub const SPLIT_DEPTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Arrows,
    NotArrows,
}

/// Work counters. Each top-level branch counts its own nodes, including the
/// prefix it shares with its siblings; only branches up to the one that
/// produced the witness contribute.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Partial colorings visited (one per edge-color assignment).
    pub colorings_explored: u64,
    /// Assignments rejected because they completed a forbidden copy.
    pub prunes: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, rhs: Self) {
        self.colorings_explored += rhs.colorings_explored;
        self.prunes += rhs.prunes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowingResult {
    pub verdict: Verdict,
    /// Present iff the verdict is [`Verdict::NotArrows`].
    pub witness: Option<EdgeColoring>,
    pub stats: SearchStats,
}

impl ArrowingResult {
    pub fn arrows(&self) -> bool {
        self.verdict == Verdict::Arrows
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrowingError {
    #[error("the {0} pattern has no edges; arrowing is only decided for patterns with at least one edge")]
    EdgelessPattern(&'static str),
    #[error("the complete host must have at least one vertex")]
    EmptyHost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Explore top-level branches on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { parallel: true }
    }
}

struct Problem<'a> {
    host: &'a Graph,
    red_pattern: &'a Graph,
    blue_pattern: &'a Graph,
    mode: Containment,
    /// Edges with a real choice, in search order.
    free: Vec<(usize, usize)>,
    /// Coloring of the edges decided up front.
    fixed: EdgeColoring,
}

enum Outcome {
    Witness(EdgeColoring),
    Exhausted,
    Cancelled,
}

const CANCEL_POLL: u64 = 1 << 10;

impl<'a> Problem<'a> {
    fn new(host: &'a Graph, g: &'a Graph, h: &'a Graph, mode: Containment) -> Self {
        let all = host.adjacency();
        let mut fixed = EdgeColoring::uncolored(host.order());
        let mut free = Vec::new();
        for e @ (u, v) in host.edges() {
            if !embedding_through_edge(host, g, mode, all, e) {
                fixed.set(u, v, Color::Red);
            } else if !embedding_through_edge(host, h, mode, all, e) {
                fixed.set(u, v, Color::Blue);
            } else {
                free.push(e);
            }
        }
        // Fixed red edges lie in no copy of g and fixed blue edges in no copy of h,
        // so the fixed part is forbidden-copy free on its own.
        free.sort_by_key(|&(u, v)| (std::cmp::Reverse(host.degree(u) + host.degree(v)), u, v));
        Problem { host, red_pattern: g, blue_pattern: h, mode, free, fixed }
    }

    fn pattern(&self, color: Color) -> &Graph {
        match color {
            Color::Red => self.red_pattern,
            Color::Blue => self.blue_pattern,
        }
    }

    fn completes_copy(&self, state: &EdgeColoring, edge: (usize, usize), color: Color) -> bool {
        embedding_through_edge(self.host, self.pattern(color), self.mode, state.class(color), edge)
    }

    fn split_depth(&self) -> usize {
        self.free.len().min(SPLIT_DEPTH)
    }

    fn branch_color(depth: usize, branch: usize, j: usize) -> Color {
        if branch >> (depth - 1 - j) & 1 == 0 {
            Color::Red
        } else {
            Color::Blue
        }
    }

    fn run_branch(&self, branch: usize, best: &AtomicUsize) -> (Outcome, SearchStats) {
        let depth = self.split_depth();
        let mut stats = SearchStats::default();
        let mut state = self.fixed.clone();
        for j in 0..depth {
            let (u, v) = self.free[j];
            let color = Self::branch_color(depth, branch, j);
            state.set(u, v, color);
            stats.colorings_explored += 1;
            if self.completes_copy(&state, (u, v), color) {
                stats.prunes += 1;
                return (Outcome::Exhausted, stats);
            }
        }
        let outcome = self.dfs(depth, &mut state, &mut stats, &|| best.load(Ordering::Relaxed) < branch);
        (outcome, stats)
    }

    fn dfs(&self, idx: usize, state: &mut EdgeColoring, stats: &mut SearchStats, cancelled: &dyn Fn() -> bool) -> Outcome {
        let Some(&(u, v)) = self.free.get(idx) else {
            return Outcome::Witness(state.clone());
        };
        for color in [Color::Red, Color::Blue] {
            state.set(u, v, color);
            stats.colorings_explored += 1;
            if stats.colorings_explored.is_multiple_of(CANCEL_POLL) && cancelled() {
                return Outcome::Cancelled;
            }
            if self.completes_copy(state, (u, v), color) {
                stats.prunes += 1;
                continue;
            }
            match self.dfs(idx + 1, state, stats, cancelled) {
                Outcome::Exhausted => {}
                found => return found,
            }
        }
        state.clear(u, v);
        Outcome::Exhausted
    }

    fn solve(&self, options: SearchOptions) -> ArrowingResult {
        let branches = 1usize << self.split_depth();
        let best = AtomicUsize::new(usize::MAX);
        let run = |b: usize| {
            let (outcome, stats) = self.run_branch(b, &best);
            if matches!(outcome, Outcome::Witness(_)) {
                best.fetch_min(b, Ordering::Relaxed);
            }
            (outcome, stats)
        };
        let outcomes: Vec<(Outcome, SearchStats)> = if options.parallel {
            (0..branches).into_par_iter().map(run).collect()
        } else {
            let mut out = Vec::new();
            for b in 0..branches {
                let r = run(b);
                let done = matches!(r.0, Outcome::Witness(_));
                out.push(r);
                if done {
                    break;
                }
            }
            out
        };
        let mut stats = SearchStats::default();
        for (outcome, branch_stats) in outcomes {
            stats += branch_stats;
            match outcome {
                Outcome::Witness(witness) => {
                    self.assert_witness(&witness);
                    return ArrowingResult { verdict: Verdict::NotArrows, witness: Some(witness), stats };
                }
                Outcome::Exhausted => {}
                Outcome::Cancelled => unreachable!("only branches after a witness are cancelled"),
            }
        }
        ArrowingResult { verdict: Verdict::Arrows, witness: None, stats }
    }

    fn assert_witness(&self, witness: &EdgeColoring) {
        let check = match self.mode {
            Containment::Induced => verify_witness(self.host, witness, self.red_pattern, self.blue_pattern),
            Containment::Subgraph => verify_witness_subgraph(self.host, witness, self.red_pattern, self.blue_pattern),
        };
        assert!(
            check.as_ref().is_ok_and(|c| c.is_valid()),
            "search produced an invalid witness: {check:?}"
        );
    }
}

fn check_patterns(g: &Graph, h: &Graph) -> Result<(), ArrowingError> {
    if g.size() == 0 {
        return Err(ArrowingError::EdgelessPattern("red"));
    }
    if h.size() == 0 {
        return Err(ArrowingError::EdgelessPattern("blue"));
    }
    Ok(())
}

/// Decides `f ⇒ (g, h)`: every red/blue coloring of `f`'s edges has a red
/// induced `g` or a blue induced `h`.
pub fn strongly_arrows(f: &Graph, g: &Graph, h: &Graph) -> Result<ArrowingResult, ArrowingError> {
    strongly_arrows_with(f, g, h, SearchOptions::default())
}

pub fn strongly_arrows_with(
    f: &Graph,
    g: &Graph,
    h: &Graph,
    options: SearchOptions,
) -> Result<ArrowingResult, ArrowingError> {
    check_patterns(g, h)?;
    Ok(Problem::new(f, g, h, Containment::Induced).solve(options))
}

/// Classical arrowing `K_n → (g, h)` with plain subgraph containment.
pub fn arrows_complete_noninduced(n: usize, g: &Graph, h: &Graph) -> Result<ArrowingResult, ArrowingError> {
    arrows_complete_noninduced_with(n, g, h, SearchOptions::default())
}

pub fn arrows_complete_noninduced_with(
    n: usize,
    g: &Graph,
    h: &Graph,
    options: SearchOptions,
) -> Result<ArrowingResult, ArrowingError> {
    if n == 0 {
        return Err(ArrowingError::EmptyHost);
    }
    check_patterns(g, h)?;
    let host = complete(n);
    Ok(Problem::new(&host, g, h, Containment::Subgraph).solve(options))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "n")]
pub enum RamseyOutcome {
    Exact(usize),
    /// No `K_n` with `n <= n_max` arrows the pair, so `R(g, h) > n_max`.
    NotFoundBelow(usize),
}

/// The least `n <= n_max` with `K_n → (g, h)`.
pub fn ramsey_number_exact(g: &Graph, h: &Graph, n_max: usize) -> Result<RamseyOutcome, ArrowingError> {
    ramsey_number_exact_with(g, h, n_max, SearchOptions::default())
}

pub fn ramsey_number_exact_with(
    g: &Graph,
    h: &Graph,
    n_max: usize,
    options: SearchOptions,
) -> Result<RamseyOutcome, ArrowingError> {
    check_patterns(g, h)?;
    for n in 1..=n_max {
        if arrows_complete_noninduced_with(n, g, h, options)?.arrows() {
            return Ok(RamseyOutcome::Exact(n));
        }
    }
    Ok(RamseyOutcome::NotFoundBelow(n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::find_mono_induced;
    use crate::graph::{cycle, matching, path};

    #[test]
    fn matching_arrows_itself_against_an_edge() {
        let r = strongly_arrows(&matching(2), &matching(2), &complete(2)).unwrap();
        assert!(r.arrows());
        assert!(r.witness.is_none());
    }

    #[test]
    fn k5_does_not_arrow_triangles() {
        let r = strongly_arrows(&complete(5), &complete(3), &complete(3)).unwrap();
        assert_eq!(r.verdict, Verdict::NotArrows);
        let w = r.witness.unwrap();
        // the only triangle-free 2-colorings of K_5 are two complementary pentagons
        let red = w.class_graph(Color::Red);
        assert_eq!(red.size(), 5);
        assert!((0..5).all(|v| red.degree(v) == 2) && red.is_connected());
        assert!(find_mono_induced(&complete(5), &w, &complete(3), Color::Red).unwrap().is_none());
    }

    #[test]
    fn k6_arrows_triangles() {
        assert!(strongly_arrows(&complete(6), &complete(3), &complete(3)).unwrap().arrows());
    }

    #[test]
    fn classical_examples() {
        assert!(arrows_complete_noninduced(6, &complete(3), &complete(3)).unwrap().arrows());
        assert!(arrows_complete_noninduced(3, &path(3), &path(3)).unwrap().arrows());
        assert!(!arrows_complete_noninduced(2, &path(3), &path(3)).unwrap().arrows());
        assert_eq!(arrows_complete_noninduced(0, &path(3), &path(3)), Err(ArrowingError::EmptyHost));
    }

    #[test]
    fn ramsey_examples() {
        assert_eq!(ramsey_number_exact(&complete(3), &complete(3), 8), Ok(RamseyOutcome::Exact(6)));
        assert_eq!(ramsey_number_exact(&path(3), &path(3), 5), Ok(RamseyOutcome::Exact(3)));
        assert_eq!(ramsey_number_exact(&complete(2), &complete(2), 5), Ok(RamseyOutcome::Exact(2)));
        assert_eq!(ramsey_number_exact(&complete(3), &complete(3), 5), Ok(RamseyOutcome::NotFoundBelow(5)));
    }

    #[test]
    fn edgeless_patterns_are_rejected() {
        let e = strongly_arrows(&complete(4), &Graph::empty(2), &complete(2));
        assert_eq!(e, Err(ArrowingError::EdgelessPattern("red")));
        let e = strongly_arrows(&complete(4), &complete(2), &Graph::empty(0));
        assert_eq!(e, Err(ArrowingError::EdgelessPattern("blue")));
    }

    #[test]
    fn hosts_without_edges_never_arrow() {
        let r = strongly_arrows(&Graph::empty(4), &complete(2), &complete(2)).unwrap();
        assert_eq!(r.witness, Some(EdgeColoring::uncolored(4)));
    }

    #[test]
    fn parallel_and_sequential_agree_exactly() {
        for (f, g, h) in [
            (complete(5), complete(3), complete(3)),
            (cycle(6), path(3), complete(2)),
            (complete(6), path(3), complete(3)),
        ] {
            let a = strongly_arrows_with(&f, &g, &h, SearchOptions { parallel: true }).unwrap();
            let b = strongly_arrows_with(&f, &g, &h, SearchOptions { parallel: false }).unwrap();
            assert_eq!(a, b);
        }
    }
}
