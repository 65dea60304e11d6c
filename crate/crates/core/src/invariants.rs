//! Exact independence, clique and chromatic numbers.
//!
//! Cliques are found by branch and bound over bitsets with a greedy-coloring
//! bound; independence is the clique number of the complement; the chromatic
//! number is found by testing k-colorability upward from the clique number.

use crate::graph::{bits, Graph};
use serde::{Deserialize, Serialize};

/// Order the vertices of `cand` into greedy color classes. Returns the vertices
/// and, for each, the number of colors used up to and including it.
fn color_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !(1 << v);
            uncolored &= !(1 << v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn expand(adj: &[u64], clique: u64, mut cand: u64, best: &mut u64) {
    let (order, bounds) = color_sort(adj, cand);
    for idx in (0..order.len()).rev() {
        if clique.count_ones() + bounds[idx] <= best.count_ones() {
            return;
        }
        let v = order[idx];
        let grown = clique | 1 << v;
        let next = cand & adj[v];
        if next == 0 {
            if grown.count_ones() > best.count_ones() {
                *best = grown;
            }
        } else {
            expand(adj, grown, next, best);
        }
        cand &= !(1 << v);
    }
}

/// Some maximum clique among the vertices in `within`, as a mask.
pub fn maximum_clique_within(g: &Graph, within: u64) -> u64 {
    let mut best = 0;
    let cand = within & g.vertex_mask();
    if cand != 0 {
        expand(g.adjacency(), 0, cand, &mut best);
    }
    best
}

/// The clique number ω(g). Zero for the empty graph.
pub fn clique_number(g: &Graph) -> usize {
    maximum_clique_within(g, g.vertex_mask()).count_ones() as usize
}

/// The independence number α(g). Zero for the empty graph.
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// The lexicographically least `k`-clique (as a sorted vertex set) inside `within`.
pub fn first_clique_of_size(g: &Graph, k: usize, within: u64) -> Option<u64> {
    fn dfs(adj: &[u64], k: usize, clique: u64, size: usize, cand: u64) -> Option<u64> {
        if size == k {
            return Some(clique);
        }
        for v in bits(cand) {
            let rest = cand & !((1u64 << v) - 1);
            if size + (rest.count_ones() as usize) < k {
                return None;
            }
            let higher = if v == 63 { 0 } else { !((2u64 << v) - 1) };
            if let Some(found) = dfs(adj, k, clique | 1 << v, size + 1, cand & adj[v] & higher) {
                return Some(found);
            }
        }
        None
    }
    dfs(g.adjacency(), k, 0, 0, within & g.vertex_mask())
}

/// The lexicographically least maximum clique inside `within`.
pub fn first_maximum_clique(g: &Graph, within: u64) -> u64 {
    let size = maximum_clique_within(g, within).count_ones() as usize;
    first_clique_of_size(g, size, within).expect("a clique of the maximum size exists")
}

/// Calls `visit` on every `k`-clique inside `within` in lexicographic order until
/// it returns `false`.
pub fn for_each_clique_of_size(g: &Graph, k: usize, within: u64, mut visit: impl FnMut(u64) -> bool) {
    fn dfs(
        adj: &[u64],
        k: usize,
        clique: u64,
        size: usize,
        cand: u64,
        visit: &mut dyn FnMut(u64) -> bool,
    ) -> bool {
        if size == k {
            return visit(clique);
        }
        for v in bits(cand) {
            let rest = cand & !((1u64 << v) - 1);
            if size + (rest.count_ones() as usize) < k {
                break;
            }
            let higher = if v == 63 { 0 } else { !((2u64 << v) - 1) };
            if !dfs(adj, k, clique | 1 << v, size + 1, cand & adj[v] & higher, visit) {
                return false;
            }
        }
        true
    }
    dfs(g.adjacency(), k, 0, 0, within & g.vertex_mask(), &mut visit);
}

fn colorable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // class[c] is the mask of vertices already given color c
    let mut class = vec![0u64; k];

    fn go(g: &Graph, order: &[usize], idx: usize, used: usize, class: &mut [u64]) -> bool {
        let Some(&v) = order.get(idx) else {
            return true;
        };
        // a fresh color is interchangeable with any other fresh color
        let limit = (used + 1).min(class.len());
        for c in 0..limit {
            if class[c] & g.neighbors(v) == 0 {
                class[c] |= 1 << v;
                if go(g, order, idx + 1, used.max(c + 1), class) {
                    return true;
                }
                class[c] &= !(1 << v);
            }
        }
        false
    }
    go(g, &order, 0, 0, &mut class)
}

/// The chromatic number χ(g). Zero for the empty graph.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    (clique_number(g)..=g.order())
        .find(|&k| colorable(g, k))
        .expect("n colors always suffice")
}

/// The invariants the lower-bound theorems are stated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphParameters {
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub connected: bool,
    pub has_isolates: bool,
}

impl GraphParameters {
    pub fn of(g: &Graph) -> Self {
        GraphParameters {
            alpha: independence_number(g),
            omega: clique_number(g),
            chi: chromatic_number(g),
            connected: g.is_connected(),
            has_isolates: g.has_isolated_vertex(),
        }
    }
}
