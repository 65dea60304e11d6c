//! Dense simple graphs on vertices `0..n` backed by per-vertex neighbor bitmasks.

use std::fmt;

/// Largest order supported anywhere in the crate (the graph6 short form limit).
pub const MAX_ORDER: usize = 62;

/// Bitmask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Simple undirected graph with labeled vertices `0..n`.
///
/// Equality is labeled equality: same order and identical adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds the supported maximum {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list. Loops and duplicate edges are rejected.
    ///
    /// # Panics
    /// If an endpoint is out of range, an edge is a loop, or `n > MAX_ORDER`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_ORDER);
        debug_assert!((0..n).all(|v| adj[v] >> v & 1 == 0 && adj[v] & !low_bits(n) == 0));
        debug_assert!((0..n).all(|u| bits(adj[u]).all(|v| adj[v] >> u & 1 == 1)));
        Graph { n, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for order {}", self.n);
        assert_ne!(u, v, "loops are not allowed");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitmask of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// Whether the vertices in `mask` are pairwise adjacent.
    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| mask & !(1 << v) & !self.adj[v] == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `mask`, relabeled consecutively in ascending order.
    /// Returns the graph and the map from new labels to old ones.
    pub fn induced_subgraph(&self, mask: u64) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, verts)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Graph with one isolated vertex appended.
    pub fn with_isolated_vertex(&self) -> Graph {
        disjoint_union(&[self.clone(), Graph::empty(1)])
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        components_of(&self.adj, self.vertex_mask())
    }

    /// Connectivity. The 0- and 1-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Whether some vertex has degree 0. The 0-vertex graph has no isolated vertex.
    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }
}

/// Components of the graph given by `adj`, restricted to the vertices in `within`.
pub(crate) fn components_of(adj: &[u64], within: u64) -> Vec<u64> {
    let mut left = within;
    let mut out = Vec::new();
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        write!(f, "Graph(n={}, edges={:?})", self.n, edges)
    }
}

/// Disjoint union, relabeling the parts consecutively in the given order.
pub fn disjoint_union(gs: &[Graph]) -> Graph {
    let total = gs.iter().map(Graph::order).sum();
    let mut out = Graph::empty(total);
    let mut offset = 0;
    for g in gs {
        for (u, v) in g.edges() {
            out.add_edge(u + offset, v + offset);
        }
        offset += g.order();
    }
    out
}

/// `copies` disjoint copies of `g`.
pub fn disjoint_copies(g: &Graph, copies: usize) -> Graph {
    disjoint_union(&vec![g.clone(); copies])
}

/// Path P_n on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle C_n. For `n < 3` this degenerates to the path on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(0, n - 1);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// Star S_k with `k` rays: center 0 joined to leaves `1..=k`.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edges(k + 1, &edges)
}

/// Matching kK_2.
pub fn matching(k: usize) -> Graph {
    disjoint_copies(&complete(2), k)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges)
}
