//! Vertex-disjoint clique packings forced inside every strongly arrowing graph.

use crate::graph::{bits, Graph};
use crate::invariants::for_each_clique_of_size;

/// Clique sizes of `⋃_{j=0}^{ω-2} (K_{ω-j} ∪ (α-2) K_{ω-j-1})`, largest first.
pub fn clique_packing_sizes(alpha: usize, omega: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    for j in 0..=omega.saturating_sub(2) {
        sizes.push(omega - j);
        sizes.extend(std::iter::repeat_n(omega - j - 1, alpha.saturating_sub(2)));
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Whether `f` contains the packing of [`clique_packing_sizes`] as a (not
/// necessarily induced) subgraph.
pub fn required_subgraph_check(f: &Graph, alpha: usize, omega: usize) -> bool {
    assert!(alpha >= 2 && omega >= 2, "needs alpha >= 2 and omega >= 2");
    let sizes = clique_packing_sizes(alpha, omega);
    let singles = sizes.iter().filter(|&&s| s == 1).count();
    let big: Vec<usize> = sizes.into_iter().filter(|&s| s >= 2).collect();
    if big.iter().sum::<usize>() + singles > f.order() {
        return false;
    }

    // Equal-sized cliques are placed with increasing smallest vertex.
    fn place(f: &Graph, big: &[usize], idx: usize, free: u64, min_first: usize, singles: usize) -> bool {
        let Some(&size) = big.get(idx) else {
            return free.count_ones() as usize >= singles;
        };
        let mut found = false;
        let floor = if idx > 0 && big[idx - 1] == size { min_first } else { 0 };
        let allowed = free & !((1u64 << floor) - 1);
        for_each_clique_of_size(f, size, allowed, |k| {
            let first = bits(k).next().expect("nonempty clique");
            if place(f, big, idx + 1, free & !k, first + 1, singles) {
                found = true;
            }
            !found
        });
        found
    }
    place(f, &big, 0, f.vertex_mask(), 0, singles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union};

    #[test]
    fn sizes() {
        assert_eq!(clique_packing_sizes(2, 3), vec![3, 2]);
        assert_eq!(clique_packing_sizes(3, 3), vec![3, 2, 2, 1]);
        assert_eq!(clique_packing_sizes(3, 2), vec![2, 1]);
    }

    #[test]
    fn examples() {
        assert!(required_subgraph_check(&complete(5), 2, 3));
        assert!(!required_subgraph_check(&cycle(5), 2, 3));
        assert!(required_subgraph_check(&complete(8), 3, 3));
        assert!(!required_subgraph_check(&complete(7), 3, 3));
        // two triangles sharing nothing plus an edge
        let f = disjoint_union(&[complete(3), complete(2), complete(2), Graph::empty(1)]);
        assert!(required_subgraph_check(&f, 3, 3));
        let f = disjoint_union(&[complete(3), complete(2), Graph::empty(3)]);
        assert!(!required_subgraph_check(&f, 3, 3));
    }
}
