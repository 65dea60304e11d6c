//! Strong arrowing and induced Ramsey numbers for small graphs.
//!
//! A graph `F` *strongly arrows* `(G, H)` when every red/blue coloring of its
//! edges contains an induced copy of `G` whose edges are all red, or an induced
//! copy of `H` whose edges are all blue. The induced Ramsey number `IR(G, H)`
//! is the least order of such an `F`.
//!
//! The crate provides
//! - dense bitmask graphs ([`Graph`]) with graph6 I/O and the invariants
//!   `α`, `ω`, `χ`,
//! - an exact arrowing decider ([`strongly_arrows`]) returning a verified
//!   witness coloring on a negative answer,
//! - explicit colorings that certify lower bounds ([`constructions`]),
//! - exact `IR` by sweeping isomorph-free catalogs ([`search`]).
//!
//! ```
//! use arrowhead::{complete, cycle, strongly_arrows};
//!
//! // The pentagon coloring shows K_5 does not arrow (K_3, K_3).
//! let r = strongly_arrows(&complete(5), &complete(3), &complete(3)).unwrap();
//! assert!(!r.arrows());
//! let red = r.witness.unwrap().class_graph(arrowhead::Color::Red);
//! assert_eq!(arrowhead::independence_number(&red), 2);
//! # let _ = cycle(5);
//! ```

pub mod arrowing;
pub mod coloring;
pub mod constructions;
pub mod embed;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod search;

pub use arrowing::{
    arrows_complete_noninduced, ramsey_number_exact, ramsey_number_exact_with, strongly_arrows, strongly_arrows_with, ArrowingError,
    ArrowingResult, RamseyOutcome, SearchOptions, SearchStats, Verdict,
};
pub use coloring::{verify_witness, Color, ColoringError, ColoringFile, EdgeColoring, Violation, WitnessCheck};
pub use embed::{find_induced_embedding, find_subgraph_embedding, validate_embedding, Embedding};
pub use graph::{complete, cycle, disjoint_copies, disjoint_union, matching, path, petersen, star, Graph, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use invariants::{chromatic_number, clique_number, independence_number, GraphParameters};
pub use search::{ir_exact, ir_verify_value, Catalog, IrOutcome, IrResult, IrSearch, ResultCache};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/graphs.md")]
    struct Graphs;
    #[doc = include_str!("../../../book/src/colorings.md")]
    struct Colorings;
    #[doc = include_str!("../../../book/src/arrowing.md")]
    struct Arrowing;
    #[doc = include_str!("../../../book/src/constructions.md")]
    struct Constructions;
    #[doc = include_str!("../../../book/src/ir-search.md")]
    struct IrSearch;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
