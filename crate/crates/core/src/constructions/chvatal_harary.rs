//! The classical partition coloring behind `R(G, H) >= (|V(G)|-1)(χ(H)-1) + 1`
//! for connected `G`: `χ(H) - 1` red cliques on `|V(G)| - 1` vertices each,
//! blue between them. Red components are too small to hold `G`, and a blue `H`
//! would be properly colored by the blocks with `χ(H) - 1` colors.
//!
//! This bounds the classical number, so certification uses plain subgraph
//! containment on the complete host.

use super::{finish, Certificate, Construction, ConstructionError, ConstructionTrace, Method};
use crate::coloring::{verify_witness_subgraph, Color, EdgeColoring};
use crate::graph::{complete, Graph};
use crate::invariants::chromatic_number;

fn check_hypotheses(g: &Graph, h: &Graph) -> Result<(), ConstructionError> {
    if g.size() == 0 || !g.is_connected() {
        return Err(ConstructionError::Inapplicable("the red pattern must be connected with at least one edge".into()));
    }
    if h.size() == 0 {
        return Err(ConstructionError::Inapplicable("the blue pattern must have at least one edge".into()));
    }
    Ok(())
}

pub(super) fn bound(g: &Graph, h: &Graph) -> Result<usize, ConstructionError> {
    check_hypotheses(g, h)?;
    Ok((g.order() - 1) * (chromatic_number(h) - 1) + 1)
}

/// Returns the complete host `K_N`, `N = (|V(G)|-1)(χ(H)-1)`, and its certified coloring.
pub fn chvatal_harary_coloring(g: &Graph, h: &Graph) -> Result<(Graph, Construction), ConstructionError> {
    check_hypotheses(g, h)?;
    let block = g.order() - 1;
    let blocks = chromatic_number(h) - 1;
    let n = block * blocks;
    if n > crate::graph::MAX_ORDER {
        return Err(ConstructionError::TooLarge { order: n, limit: crate::graph::MAX_ORDER });
    }
    let host = complete(n);
    let mut c = EdgeColoring::uncolored(n);
    let mut trace = ConstructionTrace::new(Method::ChromaticPartition);
    for (u, v) in host.edges() {
        c.set(u, v, if u / block == v / block { Color::Red } else { Color::Blue });
    }
    for b in 0..blocks {
        let mask = ((1u64 << block) - 1) << (b * block);
        trace.push(format!("K^{b} red block"), mask);
    }
    trace.push("non-induced semantics", 0);
    let valid = verify_witness_subgraph(&host, &c, g, h).expect("coloring is total").is_valid();
    let certificate = Certificate { noninduced_witness: Some(valid), ..Default::default() };
    finish(Construction { coloring: c, trace, certificate }).map(|built| (host, built))
}
