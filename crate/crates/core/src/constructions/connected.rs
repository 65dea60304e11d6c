//! Layered coloring defeating every connected red `G` with `α(G) = alpha` and
//! every blue `H` with `ω(H) = omega` on hosts with fewer than
//! `(alpha-1)·omega(omega-1)/2 + omega` vertices.
//!
//! Layer `w` (from `omega` down to 3) takes the first `K_w` and then up to
//! `alpha - 2` further disjoint `K_{w-1}`'s. The block they span is colored red,
//! every edge leaving it blue, and the next layer works on what is left with
//! `w - 1`. A red block is a union of `alpha - 1` cliques, so its independence
//! is below `alpha`; a blue clique meets each block at most once.
//!
//! Early exits: a layer without any `K_w` colors what is left blue; a layer that
//! runs out of `K_{w-1}`'s colors its partial block red and the rest blue. The
//! last layer (`w = 2`) has at most `alpha` vertices left and is colored red.

use super::{finish, fill, lower_bound_connected, require_params, Certificate, Construction, ConstructionError};
use super::{ConstructionTrace, Method};
use crate::coloring::{blue_clique_free, red_component_independence_ok, Color, EdgeColoring};
use crate::graph::{bits, Graph};
use crate::invariants::first_clique_of_size;

pub fn connected_coloring(f: &Graph, alpha: usize, omega: usize) -> Result<Construction, ConstructionError> {
    require_params(alpha, omega)?;
    let limit = lower_bound_connected(alpha, omega)? - 1;
    if f.order() > limit {
        return Err(ConstructionError::TooLarge { order: f.order(), limit });
    }

    let mut c = EdgeColoring::uncolored(f.order());
    let mut trace = ConstructionTrace::new(Method::ConnectedLayers);
    let mut remaining = f.vertex_mask();

    for w in (2..=omega).rev() {
        let Some(first) = first_clique_of_size(f, w, remaining) else {
            if w == 2 {
                trace.push("stall omega=2", remaining);
                fill(f, &mut c, remaining, Color::Red);
            } else {
                trace.push(format!("clique-free omega={w}"), remaining);
                fill(f, &mut c, remaining, Color::Blue);
            }
            break;
        };
        trace.push(format!("K^0 omega={w}"), first);
        let mut block = first;
        let mut stalled = false;
        for i in 1..=alpha - 2 {
            match first_clique_of_size(f, w - 1, remaining & !block) {
                Some(k) => {
                    trace.push(format!("K^{i} omega={w}"), k);
                    block |= k;
                }
                None => {
                    stalled = true;
                    break;
                }
            }
        }
        if w == 2 {
            if stalled {
                trace.push("stall omega=2", remaining & !block);
            }
            trace.push("base", remaining);
            fill(f, &mut c, remaining, Color::Red);
            break;
        }
        trace.push(format!("red-block omega={w}"), block);
        fill(f, &mut c, block, Color::Red);
        if stalled {
            trace.push(format!("stall omega={w}"), remaining & !block);
            fill(f, &mut c, remaining, Color::Blue);
            break;
        }
        for u in bits(block) {
            for v in bits(f.neighbors(u) & remaining & !block) {
                c.set(u, v, Color::Blue);
            }
        }
        remaining &= !block;
        trace.push(format!("recurse alpha={alpha} omega={}", w - 1), remaining);
    }

    let certificate = Certificate {
        red_components: Some(red_component_independence_ok(f, &c, alpha)),
        blue_clique_free: Some(blue_clique_free(f, &c, omega)),
        ..Default::default()
    };
    debug_assert!(c.validate_for(f).is_ok());
    finish(Construction { coloring: c, trace, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn k5_splits_into_red_triangle_and_red_edge() {
        let built = connected_coloring(&complete(5), 2, 3).unwrap();
        assert_eq!(built.coloring.edges_of(Color::Red), vec![(0, 1), (0, 2), (1, 2), (3, 4)]);
        assert_eq!(built.coloring.edges_of(Color::Blue).len(), 6);
        assert!(built.trace.extraction_complete());
        assert!(built.trace.validate(&complete(5)).is_ok());
    }

    #[test]
    fn triangle_free_host_is_all_blue() {
        let built = connected_coloring(&cycle(5), 2, 3).unwrap();
        assert!(built.coloring.edges_of(Color::Red).is_empty());
        assert!(!built.trace.extraction_complete());
    }

    #[test]
    fn base_case_is_all_red() {
        let built = connected_coloring(&complete(2), 2, 2).unwrap();
        assert_eq!(built.coloring.edges_of(Color::Red), vec![(0, 1)]);
    }

    #[test]
    fn too_large_is_refused() {
        assert_eq!(
            connected_coloring(&complete(9), 2, 3),
            Err(ConstructionError::TooLarge { order: 9, limit: 5 })
        );
        assert!(matches!(connected_coloring(&complete(3), 1, 3), Err(ConstructionError::Inapplicable(_))));
    }

    #[test]
    fn deeper_recursion() {
        // alpha = 3, omega = 3: limit 8
        let built = connected_coloring(&complete(8), 3, 3).unwrap();
        let roles: Vec<_> = built.trace.steps.iter().map(|s| s.role.as_str()).collect();
        assert_eq!(
            roles,
            [
                "K^0 omega=3",
                "K^1 omega=3",
                "red-block omega=3",
                "recurse alpha=3 omega=2",
                "K^0 omega=2",
                "K^1 omega=2",
                "base"
            ]
        );
        assert!(built.trace.extraction_complete());
    }
}
