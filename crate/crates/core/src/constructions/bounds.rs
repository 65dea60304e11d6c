//! Closed-form lower bounds on `IR(G, H)` and the per-pair report combining them.

use super::chvatal_harary;
use super::ConstructionError;
use crate::arrowing::{ramsey_number_exact_with, RamseyOutcome, SearchOptions};
use crate::graph::Graph;
use crate::invariants::{clique_number, independence_number};
use serde::{Deserialize, Serialize};

fn check(alpha: usize, omega: usize) -> Result<(), ConstructionError> {
    super::require_params(alpha, omega)
}

/// `(α-1)·ω(ω-1)/2 + ω`, valid for connected `G` with `α(G) = α >= 2` and `ω(H) = ω >= 2`.
pub fn lower_bound_connected(alpha: usize, omega: usize) -> Result<usize, ConstructionError> {
    check(alpha, omega)?;
    Ok((alpha - 1) * omega * (omega - 1) / 2 + omega)
}

/// `α·ω`, stated for isolate-free `G` with `α(G) = α >= 2` and `ω(H) = ω >= 2`.
pub fn lower_bound_isolatefree(alpha: usize, omega: usize) -> Result<usize, ConstructionError> {
    check(alpha, omega)?;
    Ok(alpha * omega)
}

/// `(|V(G)|-1)(χ(H)-1) + 1`, a lower bound on `R(G, H)` for connected `G`.
pub fn chvatal_harary_bound(g: &Graph, h: &Graph) -> Result<usize, ConstructionError> {
    chvatal_harary::bound(g, h)
}

/// `(⌈t/2⌉-1)·n(n-1)/2 + n` for the path `P_t` against `K_n`.
pub fn path_clique_bound(t: usize, n: usize) -> usize {
    (t.div_ceil(2) - 1) * n * (n - 1) / 2 + n
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    /// Short label shared with the construction method codes: `CH`, `T1`, `T3`, `PATH` or `R`.
    pub code: String,
    pub value: Option<usize>,
    pub applicable: bool,
    pub reason: String,
}

/// Every lower bound on `IR(G, H)` the crate knows, with applicability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    /// graph6 lines of `G` and `H`.
    pub pair: (String, String),
    pub bounds: Vec<BoundEntry>,
    /// Maximum over the applicable values.
    pub best: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundConfig {
    /// Largest complete host tried when computing `R(G, H)` exactly.
    pub ramsey_n_max: usize,
    pub search: SearchOptions,
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig { ramsey_n_max: 7, search: SearchOptions::default() }
    }
}

fn is_path(g: &Graph) -> bool {
    g.order() >= 2 && g.is_connected() && g.size() == g.order() - 1 && (0..g.order()).all(|v| g.degree(v) <= 2)
}

fn is_complete(g: &Graph) -> bool {
    g.size() == g.order() * g.order().saturating_sub(1) / 2
}

pub fn bound_report(g: &Graph, h: &Graph) -> BoundReport {
    bound_report_with(g, h, BoundConfig::default())
}

/// Assembles the report. Both patterns must have at least one edge.
///
/// # Panics
/// If `g` or `h` is edgeless.
pub fn bound_report_with(g: &Graph, h: &Graph, config: BoundConfig) -> BoundReport {
    assert!(g.size() > 0 && h.size() > 0, "bound reports need patterns with at least one edge");
    let alpha = independence_number(g);
    let omega = clique_number(h);
    let connected = g.is_connected();
    let isolate_free = !g.has_isolated_vertex();
    let mut bounds = Vec::new();

    let entry = |name: &str, value: Option<usize>, reason: String| BoundEntry {
        name: name.into(),
        code: match name {
            "chvatal-harary" => "CH",
            "connected-quadratic" => "T1",
            "isolatefree-linear" => "T3",
            "path-clique" => "PATH",
            _ => "R",
        }
        .into(),
        applicable: value.is_some(),
        value,
        reason,
    };

    bounds.push(match chvatal_harary_bound(g, h) {
        Ok(v) => entry("chvatal-harary", Some(v), "G connected: (|V(G)|-1)(chi(H)-1)+1 <= R(G,H) <= IR(G,H)".into()),
        Err(e) => entry("chvatal-harary", None, e.to_string()),
    });

    bounds.push(if !connected {
        entry("connected-quadratic", None, "G is not connected".into())
    } else if alpha < 2 {
        entry("connected-quadratic", None, format!("alpha(G) = {alpha} < 2"))
    } else {
        let v = lower_bound_connected(alpha, omega).expect("alpha, omega >= 2");
        entry("connected-quadratic", Some(v), format!("G connected, alpha={alpha}, omega={omega}: (alpha-1)omega(omega-1)/2+omega"))
    });

    bounds.push(if !isolate_free {
        entry("isolatefree-linear", None, "G has an isolated vertex".into())
    } else if alpha < 2 {
        entry("isolatefree-linear", None, format!("alpha(G) = {alpha} < 2"))
    } else if omega < 3 {
        // IR(G, K_2) = |V(G)| < 2·alpha(G) for e.g. stars and P_3
        entry("isolatefree-linear", None, "omega(H) = 2: alpha*omega fails for this case (IR(P_3,K_2) = 3)".into())
    } else {
        let v = lower_bound_isolatefree(alpha, omega).expect("alpha, omega >= 2");
        entry("isolatefree-linear", Some(v), format!("G isolate-free, alpha={alpha}, omega={omega}: alpha*omega"))
    });

    bounds.push(if is_path(g) && is_complete(h) {
        let (t, n) = (g.order(), h.order());
        entry("path-clique", Some(path_clique_bound(t, n)), format!("G = P_{t}, H = K_{n}: (ceil(t/2)-1)n(n-1)/2+n"))
    } else {
        entry("path-clique", None, "G is not a path or H is not complete".into())
    });

    let n_max = config.ramsey_n_max;
    bounds.push(match ramsey_number_exact_with(g, h, n_max, config.search).expect("patterns have edges") {
        RamseyOutcome::Exact(r) => entry("ramsey", Some(r), format!("R(G,H) = {r} <= IR(G,H)")),
        RamseyOutcome::NotFoundBelow(m) => {
            entry("ramsey", Some(m + 1), format!("no K_n with n <= {m} arrows (G,H) classically, so R(G,H) > {m}"))
        }
    });

    let best = bounds.iter().filter_map(|b| b.value).max().unwrap_or(0);
    BoundReport { pair: (g.to_graph6(), h.to_graph6()), bounds, best }
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }
}
