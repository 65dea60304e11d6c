//! Lower-bound formulas for induced Ramsey numbers and the colorings that prove them.
//!
//! Each coloring routine returns a [`Construction`]: the coloring, a
//! [`ConstructionTrace`] recording which cliques it picked, and a [`Certificate`]
//! listing the predicates it was checked against before being handed out.
//!
//! | method | bound on `IR(G, H)` | hypothesis on `G` |
//! |--------|---------------------|-------------------|
//! | [`chvatal_harary_coloring`] | `(|V(G)|-1)(χ(H)-1)+1` (bounds `R`) | connected |
//! | [`connected_coloring`] | `(α-1)ω(ω-1)/2 + ω` | connected, `α >= 2` |
//! | [`alpha_two_coloring`] | `2ω` | isolate-free, `α = 2` |
//! | [`isolatefree_coloring`] | `αω` | isolate-free, `α >= 2` |

mod alpha_two;
mod bounds;
mod chvatal_harary;
mod connected;
mod isolatefree;
mod packing;

pub use alpha_two::alpha_two_coloring;
pub use bounds::{
    bound_report, bound_report_with, chvatal_harary_bound, lower_bound_connected, lower_bound_isolatefree,
    path_clique_bound, BoundConfig, BoundEntry, BoundReport,
};
pub use chvatal_harary::chvatal_harary_coloring;
pub use connected::connected_coloring;
pub use isolatefree::isolatefree_coloring;
pub use packing::{clique_packing_sizes, required_subgraph_check};

use crate::coloring::EdgeColoring;
use crate::graph::{bits, Graph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which construction produced a coloring. Serialized with the short codes
/// `CH`, `T1`, `L2`, `T3` and `Fallback`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    /// Red cliques of order `|V(G)|-1`, blue between them.
    #[serde(rename = "CH")]
    ChromaticPartition,
    /// Layered red clique blocks, one layer per clique size.
    #[serde(rename = "T1")]
    ConnectedLayers,
    /// Case analysis on two overlapping maximum cliques (independence two).
    #[serde(rename = "L2")]
    AlphaTwo,
    /// Peel red `K_ω`'s, recursing on independence.
    #[serde(rename = "T3")]
    IsolateFreePeeling,
    /// Constrained exhaustive search used when a case analysis does not certify.
    Fallback,
}

/// One recorded decision: a clique or vertex set with its role.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub role: String,
    pub vertices: Vec<usize>,
}

impl TraceStep {
    fn new(role: impl Into<String>, mask: u64) -> Self {
        TraceStep { role: role.into(), vertices: bits(mask).collect() }
    }

    fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Roles starting with `K` name cliques of the host.
    pub fn is_clique(&self) -> bool {
        self.role.starts_with('K')
    }

    /// Cliques tagged with their recursion level (`omega=` / `alpha=`) are
    /// extracted one after another from shrinking vertex sets and must be disjoint.
    pub fn is_disjoint_clique(&self) -> bool {
        self.is_clique() && self.role.contains('=')
    }
}

/// Audit log of a construction, serialized as
/// `{"method": str, "steps": [{"role": str, "vertices": [int]}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub method: Method,
    pub steps: Vec<TraceStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceDefect {
    #[error("step {0} ({1}) is not a clique of the host")]
    NotAClique(usize, String),
    #[error("steps {0} and {1} should be vertex-disjoint")]
    Overlap(usize, usize),
    #[error("step {0} names a vertex outside the host")]
    OutOfRange(usize),
}

impl ConstructionTrace {
    fn new(method: Method) -> Self {
        ConstructionTrace { method, steps: Vec::new() }
    }

    fn push(&mut self, role: impl Into<String>, mask: u64) {
        self.steps.push(TraceStep::new(role, mask));
    }

    /// Every clique step is a clique of `f` and the level-tagged cliques are
    /// pairwise disjoint.
    pub fn validate(&self, f: &Graph) -> Result<(), TraceDefect> {
        for (i, step) in self.steps.iter().enumerate() {
            if step.vertices.iter().any(|&v| v >= f.order()) {
                return Err(TraceDefect::OutOfRange(i));
            }
            if step.is_clique() && !f.is_clique(step.mask()) {
                return Err(TraceDefect::NotAClique(i, step.role.clone()));
            }
        }
        let disjoint: Vec<_> = self.steps.iter().enumerate().filter(|(_, s)| s.is_disjoint_clique()).collect();
        for (a, (i, s)) in disjoint.iter().enumerate() {
            for (j, t) in &disjoint[a + 1..] {
                if s.mask() & t.mask() != 0 {
                    return Err(TraceDefect::Overlap(*i, *j));
                }
            }
        }
        Ok(())
    }

    /// For the layered construction: every layer found all of its cliques, down to
    /// and including the final edge layer. The extracted cliques then form the
    /// packing tested by [`required_subgraph_check`].
    pub fn extraction_complete(&self) -> bool {
        self.method == Method::ConnectedLayers
            && !self.steps.iter().any(|s| s.role.starts_with("stall") || s.role.starts_with("clique-free"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

/// The predicates a construction was checked against. `None` means not checked.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Red components have host-induced independence below `alpha`.
    pub red_components: Option<bool>,
    /// No blue `K_ω`.
    pub blue_clique_free: Option<bool>,
    /// Exhaustive check against every red induced isolate-free set with
    /// independence number exactly `alpha`.
    pub red_isolatefree: Option<bool>,
    /// Used instead of the exhaustive check on large hosts: no red induced copy
    /// of any isolate-free graph on at most five vertices with independence `alpha`.
    pub red_small_patterns: Option<bool>,
    /// Plain (non-induced) witness check against the concrete pair.
    pub noninduced_witness: Option<bool>,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        let checks = [
            self.red_components,
            self.blue_clique_free,
            self.red_isolatefree,
            self.red_small_patterns,
            self.noninduced_witness,
        ];
        checks.iter().any(Option::is_some) && checks.iter().flatten().all(|&ok| ok)
    }
}

/// A coloring together with how it was built and what it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub coloring: EdgeColoring,
    pub trace: ConstructionTrace,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0}")]
    Inapplicable(String),
    #[error("host has {order} vertices but the construction handles at most {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("the constructed coloring failed certification ({})", .0.trace.method_code())]
    NotCertified(Box<Construction>),
}

impl ConstructionTrace {
    pub fn method_code(&self) -> &'static str {
        match self.method {
            Method::ChromaticPartition => "CH",
            Method::ConnectedLayers => "T1",
            Method::AlphaTwo => "L2",
            Method::IsolateFreePeeling => "T3",
            Method::Fallback => "Fallback",
        }
    }
}

fn require_params(alpha: usize, omega: usize) -> Result<(), ConstructionError> {
    if alpha < 2 || omega < 2 {
        return Err(ConstructionError::Inapplicable(format!(
            "needs alpha >= 2 and omega >= 2, got alpha={alpha}, omega={omega}"
        )));
    }
    Ok(())
}

fn finish(construction: Construction) -> Result<Construction, ConstructionError> {
    if construction.certificate.certified() {
        Ok(construction)
    } else {
        Err(ConstructionError::NotCertified(Box::new(construction)))
    }
}

/// Colors every uncolored host edge with both ends in `within`.
fn fill(f: &Graph, c: &mut EdgeColoring, within: u64, color: crate::coloring::Color) {
    for u in bits(within) {
        for v in bits(f.neighbors(u) & within) {
            if u < v && c.color_of(u, v).is_none() {
                c.set(u, v, color);
            }
        }
    }
}
