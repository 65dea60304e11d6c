//! Peeling coloring for isolate-free red patterns: on a host with fewer than
//! `alpha·omega` vertices, color a `K_ω` red, handle the remaining vertices with
//! `alpha - 1`, and finally color every edge still uncolored red. Independence
//! two is handed to [`alpha_two_coloring`](super::alpha_two_coloring)'s case
//! analysis; a host without `K_ω` is colored blue.
//!
//! Certified against the exhaustive red-side oracle when the host is small
//! enough, else against every isolate-free graph on at most five vertices with
//! independence number `alpha`.

use super::alpha_two;
use super::{finish, fill, lower_bound_isolatefree, require_params, Certificate, Construction, ConstructionError};
use super::{ConstructionTrace, Method, TraceStep};
use crate::coloring::{blue_clique_free, find_mono_induced, red_isolatefree_independence_ok, Color, EdgeColoring};
use crate::graph::{bits, Graph};
use crate::invariants::{first_clique_of_size, independence_number};

pub fn isolatefree_coloring(f: &Graph, alpha: usize, omega: usize) -> Result<Construction, ConstructionError> {
    require_params(alpha, omega)?;
    let limit = lower_bound_isolatefree(alpha, omega)? - 1;
    if f.order() > limit {
        return Err(ConstructionError::TooLarge { order: f.order(), limit });
    }
    let mut c = EdgeColoring::uncolored(f.order());
    let mut trace = ConstructionTrace::new(Method::IsolateFreePeeling);
    peel(f, f.vertex_mask(), alpha, omega, &mut c, &mut trace);

    let certificate = match red_isolatefree_independence_ok(f, &c, alpha) {
        Ok(ok) => Certificate {
            blue_clique_free: Some(blue_clique_free(f, &c, omega)),
            red_isolatefree: Some(ok),
            ..Default::default()
        },
        Err(_) => Certificate {
            blue_clique_free: Some(blue_clique_free(f, &c, omega)),
            red_small_patterns: Some(small_isolatefree_patterns(alpha).iter().all(|g| {
                find_mono_induced(f, &c, g, Color::Red).expect("coloring is total").is_none()
            })),
            ..Default::default()
        },
    };
    debug_assert!(c.validate_for(f).is_ok());
    finish(Construction { coloring: c, trace, certificate })
}

fn peel(f: &Graph, within: u64, alpha: usize, omega: usize, c: &mut EdgeColoring, trace: &mut ConstructionTrace) {
    if alpha == 2 {
        let (sub, map) = f.induced_subgraph(within);
        let (sub_coloring, sub_trace) = alpha_two::attempt(&sub, omega);
        for (u, v) in sub.edges() {
            let color = sub_coloring.color_of(u, v).expect("sub-coloring is total");
            c.set(map[u], map[v], color);
        }
        trace.push(format!("alpha-two {}", sub_trace.method_code()), within);
        trace.steps.extend(sub_trace.steps.into_iter().map(|s| TraceStep {
            role: s.role,
            vertices: s.vertices.into_iter().map(|v| map[v]).collect(),
        }));
        return;
    }
    let Some(k) = first_clique_of_size(f, omega, within) else {
        trace.push(format!("clique-free alpha={alpha}"), within);
        fill(f, c, within, Color::Blue);
        return;
    };
    trace.push(format!("K_omega alpha={alpha}"), k);
    fill(f, c, k, Color::Red);
    let rest = within & !k;
    trace.push(format!("recurse alpha={} omega={omega}", alpha - 1), rest);
    peel(f, rest, alpha - 1, omega, c, trace);
    fill(f, c, within, Color::Red);
}

/// Isolate-free graphs on at most five vertices with independence number
/// `alpha`, one per labeled graph on `0..n` (duplicates up to isomorphism kept).
fn small_isolatefree_patterns(alpha: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for bitsel in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> = bits(bitsel).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(n, &edges);
            if !g.has_isolated_vertex() && independence_number(&g) == alpha {
                out.push(g);
            }
        }
    }
    out
}
