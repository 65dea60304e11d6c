//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use arrowhead::{complete, matching, path, Catalog, Graph};
use std::path::PathBuf;

pub fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalogs")
}

pub fn catalog() -> Catalog {
    Catalog::new(catalog_dir())
}

pub fn graphs_of_order(n: usize) -> Vec<Graph> {
    catalog().load_order(n).expect("shipped catalog").into_iter().map(|e| e.graph).collect()
}

/// Every catalog graph on 1..=n vertices.
pub fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(graphs_of_order).collect()
}

/// The small patterns used by the oracle comparisons, with display names.
pub fn small_patterns() -> Vec<(&'static str, Graph)> {
    vec![("K2", complete(2)), ("P3", path(3)), ("K3", complete(3)), ("2K2", matching(2)), ("P4", path(4))]
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Edge masks (over `f.edges()` indices) of every vertex set inducing a copy
/// of `pattern`, found by trying all subsets and all bijections.
pub fn induced_copies(f: &Graph, pattern: &Graph) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = f.edges().collect();
    let k = pattern.order();
    let perms = permutations(k);
    let mut out = Vec::new();
    for s in 0u64..(1 << f.order()) {
        if s.count_ones() as usize != k {
            continue;
        }
        let verts: Vec<usize> = (0..f.order()).filter(|&v| s >> v & 1 == 1).collect();
        let iso = perms.iter().any(|p| {
            (0..k).all(|i| (i + 1..k).all(|j| pattern.has_edge(i, j) == f.has_edge(verts[p[i]], verts[p[j]])))
        });
        if iso {
            let mask = edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| s >> u & 1 == 1 && s >> v & 1 == 1)
                .fold(0u64, |m, (i, _)| m | 1 << i);
            out.push(mask);
        }
    }
    out
}

/// Strong arrowing by enumerating all `2^E` colorings; bit `i` of a coloring is
/// set when edge `i` of `f.edges()` is red.
pub fn naive_strongly_arrows(f: &Graph, g: &Graph, h: &Graph) -> bool {
    let e = f.size();
    assert!(e < 32, "naive enumeration is for tiny hosts");
    let red_copies = induced_copies(f, g);
    let blue_copies = induced_copies(f, h);
    (0u64..(1 << e)).all(|red| {
        red_copies.iter().any(|&m| m & !red == 0) || blue_copies.iter().any(|&m| m & red == 0)
    })
}
