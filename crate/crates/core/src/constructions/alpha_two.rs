//! Coloring of hosts on at most `2ω - 1` vertices with no blue `K_ω` and no red
//! induced isolate-free graph of independence number two.
//!
//! The case analysis, for `f` with clique number `t`:
//!
//! * `t > ω`: a maximum clique red, everything else blue.
//! * `t < ω`: everything blue.
//! * otherwise `K^1` is the first `K_ω` and the other (at most `ω - 1`)
//!   vertices must form a clique `K^2`, else `K^1` red and the rest blue works.
//!   Pick `A ⊆ K^1`, `C ⊆ K^2` with `A ∪ C` a `K_ω` and `s = |A|` maximal
//!   (if there is none, `K^1` red and the rest blue). With `B = K^1 \ A` and
//!   `D = K^2 \ C`:
//!   * `s = 1`, `A = {a}`: red `ab` and `c₁c₂` for `b ∈ B`, `c₁, c₂ ∈ C`.
//!   * `s ≥ 2`: red `aa₁`, `ab`, `cd` with `a₁ ∈ A`, `b ∈ B`, `d ∈ D`, where `a`
//!     (resp. `c`) is the vertex of `A` (resp. `C`) completing `B ∪ D` to a `K_ω`
//!     if there is one.
//!
//!   Everything else is blue. Two independent red edges `xu`, `yv` always have a
//!   blue host edge among `uv`, `xv`, `yu`, which keeps them from inducing a red
//!   `2K_2`.
//!
//! The result is re-certified. When the case analysis does not certify (for
//! `ω = 2` the `s = 1` case has no `c₁c₂`), a backtracking search over colorings
//! satisfying the same predicates takes over and the trace is marked `Fallback`.

use super::{finish, fill, Certificate, Construction, ConstructionError, ConstructionTrace, Method};
use crate::coloring::{
    blue_clique_free, red_component_independence_ok, red_isolatefree_independence_ok, Color, EdgeColoring,
    ORACLE_MAX_ORDER,
};
use crate::graph::{bits, components_of, Graph};
use crate::invariants::{clique_number, first_clique_of_size, first_maximum_clique};

pub fn alpha_two_coloring(f: &Graph, omega: usize) -> Result<Construction, ConstructionError> {
    if omega < 2 {
        return Err(ConstructionError::Inapplicable(format!("needs omega >= 2, got {omega}")));
    }
    let limit = 2 * omega - 1;
    if f.order() > limit {
        return Err(ConstructionError::TooLarge { order: f.order(), limit });
    }
    let (coloring, trace) = attempt(f, omega);
    let certificate = certify(f, &coloring, omega);
    finish(Construction { coloring, trace, certificate })
}

pub(super) fn certify(f: &Graph, c: &EdgeColoring, omega: usize) -> Certificate {
    Certificate {
        red_components: Some(red_component_independence_ok(f, c, 2)),
        blue_clique_free: Some(blue_clique_free(f, c, omega)),
        red_isolatefree: red_isolatefree_independence_ok(f, c, 2).ok(),
        ..Default::default()
    }
}

/// Case analysis, then the fallback search if needed. When the search finds
/// nothing the case-analysis coloring is returned with a `fallback-exhausted` step.
pub(super) fn attempt(f: &Graph, omega: usize) -> (EdgeColoring, ConstructionTrace) {
    let (c, mut trace) = case_analysis(f, omega);
    if certify(f, &c, omega).certified() {
        return (c, trace);
    }
    match fallback_search(f, omega) {
        Some(found) => {
            trace.method = Method::Fallback;
            trace.push("fallback", f.vertex_mask());
            (found, trace)
        }
        None => {
            trace.push("fallback-exhausted", f.vertex_mask());
            (c, trace)
        }
    }
}

/// `s`-element subsets of `mask` in lexicographic order of their sorted vertices.
fn subsets_of_size(mask: u64, s: usize) -> Vec<u64> {
    fn go(verts: &[usize], s: usize, acc: u64, out: &mut Vec<u64>) {
        if s == 0 {
            out.push(acc);
            return;
        }
        for i in 0..verts.len() {
            if verts.len() - i < s {
                break;
            }
            go(&verts[i + 1..], s - 1, acc | 1 << verts[i], out);
        }
    }
    let verts: Vec<usize> = bits(mask).collect();
    let mut out = Vec::new();
    go(&verts, s, 0, &mut out);
    out
}

fn lowest(mask: u64) -> usize {
    debug_assert_ne!(mask, 0);
    mask.trailing_zeros() as usize
}

fn case_analysis(f: &Graph, omega: usize) -> (EdgeColoring, ConstructionTrace) {
    let all = f.vertex_mask();
    let mut c = EdgeColoring::uncolored(f.order());
    let mut trace = ConstructionTrace::new(Method::AlphaTwo);
    let t = clique_number(f);

    if t > omega {
        let k = first_maximum_clique(f, all);
        trace.push(format!("K^max size={t}"), k);
        fill(f, &mut c, k, Color::Red);
        fill(f, &mut c, all, Color::Blue);
        return (c, trace);
    }
    if t < omega {
        trace.push("clique-free", all);
        fill(f, &mut c, all, Color::Blue);
        return (c, trace);
    }

    let k1 = first_clique_of_size(f, omega, all).expect("clique number is omega");
    trace.push("K^1", k1);
    let rest = all & !k1;
    let red_k1_only = |c: &mut EdgeColoring| {
        fill(f, c, k1, Color::Red);
        fill(f, c, all, Color::Blue);
    };
    if rest.count_ones() as usize != omega - 1 || !f.is_clique(rest) {
        trace.push("no-K^2", rest);
        red_k1_only(&mut c);
        return (c, trace);
    }
    let k2 = rest;
    trace.push("K^2", k2);

    let found = (1..omega).rev().find_map(|s| {
        subsets_of_size(k1, s).into_iter().find_map(|a| {
            subsets_of_size(k2, omega - s).into_iter().find(|&cc| f.is_clique(a | cc)).map(|cc| (a, cc))
        })
    });
    let Some((a_set, c_set)) = found else {
        trace.push("no-K^3", 0);
        red_k1_only(&mut c);
        return (c, trace);
    };
    let s = a_set.count_ones() as usize;
    let b_set = k1 & !a_set;
    let d_set = k2 & !c_set;
    trace.push("K^3", a_set | c_set);
    trace.push(format!("A s={s}"), a_set);
    trace.push("B", b_set);
    trace.push("C", c_set);
    trace.push("D", d_set);

    let mut red_edges = Vec::new();
    if s == 1 {
        let a = lowest(a_set);
        if c_set.count_ones() >= 2 {
            let c1 = lowest(c_set);
            let c2 = lowest(c_set & !(1 << c1));
            red_edges.extend([(a, lowest(b_set)), (c1, c2)]);
        } else {
            trace.push("s=1 without two C vertices", c_set);
            red_edges.push((a, lowest(b_set)));
        }
    } else {
        let bd = b_set | d_set;
        let completes = |v: usize| f.is_clique(bd | 1 << v);
        let a = bits(a_set).find(|&v| completes(v)).unwrap_or(lowest(a_set));
        let a1 = lowest(a_set & !(1 << a));
        let cv = bits(c_set).find(|&v| completes(v)).unwrap_or(lowest(c_set));
        red_edges.extend([(a, a1), (a, lowest(b_set)), (cv, lowest(d_set))]);
    }
    for &(u, v) in &red_edges {
        c.set(u, v, Color::Red);
        trace.push("red-edge", 1 << u | 1 << v);
    }
    fill(f, &mut c, all, Color::Blue);
    (c, trace)
}

/// Backtracking over edge colorings, pruning any partial coloring with a red
/// component that is not a host clique, a blue `K_ω`, or (on small hosts) a red
/// induced isolate-free set with two independent vertices.
fn fallback_search(f: &Graph, omega: usize) -> Option<EdgeColoring> {
    let edges: Vec<(usize, usize)> = f.edges().collect();
    let mut c = EdgeColoring::uncolored(f.order());
    let use_oracle = f.order() <= ORACLE_MAX_ORDER;

    fn ok_after(f: &Graph, c: &EdgeColoring, (u, v): (usize, usize), color: Color, omega: usize, oracle: bool) -> bool {
        match color {
            Color::Red => {
                let comp = components_of(c.class(Color::Red), f.vertex_mask())
                    .into_iter()
                    .find(|m| m >> u & 1 == 1)
                    .expect("u lies in some component");
                f.is_clique(comp) && (!oracle || red_isolatefree_independence_ok(f, c, 2).unwrap_or(true))
            }
            Color::Blue => {
                let blue = c.class_graph(Color::Blue);
                let common = blue.neighbors(u) & blue.neighbors(v);
                first_clique_of_size(&blue, omega - 2, common).is_none()
            }
        }
    }

    fn go(f: &Graph, edges: &[(usize, usize)], idx: usize, c: &mut EdgeColoring, omega: usize, oracle: bool) -> bool {
        let Some(&(u, v)) = edges.get(idx) else {
            return true;
        };
        for color in [Color::Red, Color::Blue] {
            c.set(u, v, color);
            if ok_after(f, c, (u, v), color, omega, oracle) && go(f, edges, idx + 1, c, omega, oracle) {
                return true;
            }
        }
        c.clear(u, v);
        false
    }

    go(f, &edges, 0, &mut c, omega, use_oracle).then_some(c)
}
