//! Injective pattern-to-host vertex maps, induced or not, with an optional mask
//! of admissible host edges.
//!
//! The matcher assigns pattern vertices in index order and tries host vertices in
//! ascending order, so the first embedding found is the lexicographically
//! smallest host-vertex sequence.

use crate::graph::{bits, Graph};
use serde::{Deserialize, Serialize};

/// Injective map from pattern vertices to host vertices: `map[p]` is the image of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn pattern_order(&self) -> usize {
        self.map.len()
    }

    /// Host vertices hit by the map, as a mask.
    pub fn image(&self) -> u64 {
        self.map.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// How a pattern must sit inside the host.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    /// Pattern edges map to host edges and pattern non-edges to host non-edges.
    Induced,
    /// Pattern edges map to host edges; non-edges are unconstrained.
    Subgraph,
}

/// Spanning subgraph of the host marking which host edges may carry pattern edges.
/// `None` admits every host edge.
pub type Admissible<'a> = Option<&'a [u64]>;

struct Matcher<'a> {
    host: &'a [u64],
    allowed: &'a [u64],
    pattern: &'a Graph,
    mode: Containment,
    order: Vec<usize>,
    map: Vec<usize>,
    host_mask: u64,
}

impl Matcher<'_> {
    fn candidates(&self, depth: usize, used: u64) -> u64 {
        let pv = self.order[depth];
        let mut cand = self.host_mask & !used;
        for &pw in &self.order[..depth] {
            let hw = self.map[pw];
            if self.pattern.has_edge(pv, pw) {
                cand &= self.allowed[hw];
            } else if self.mode == Containment::Induced {
                cand &= !self.host[hw];
            }
        }
        cand
    }

    fn extend(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let pv = self.order[depth];
        let need = self.pattern.degree(pv) as u32;
        for h in bits(self.candidates(depth, used)) {
            if self.allowed[h].count_ones() < need {
                continue;
            }
            self.map[pv] = h;
            if self.extend(depth + 1, used | 1 << h) {
                return true;
            }
        }
        false
    }
}

/// Finds the lexicographically first embedding of `pattern` into `host` under
/// `mode`, using only admissible host edges for pattern edges. Anchors fix
/// `(pattern vertex, host vertex)` pairs up front.
pub(crate) fn find_embedding_anchored(
    host: &Graph,
    pattern: &Graph,
    mode: Containment,
    admissible: Admissible<'_>,
    anchors: &[(usize, usize)],
) -> Option<Embedding> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    let allowed_owned;
    let allowed = match admissible {
        Some(mask) => {
            debug_assert_eq!(mask.len(), host.order());
            allowed_owned = mask.iter().zip(host.adjacency()).map(|(a, h)| a & h).collect::<Vec<_>>();
            &allowed_owned[..]
        }
        None => host.adjacency(),
    };
    let mut order: Vec<usize> = anchors.iter().map(|&(p, _)| p).collect();
    order.extend((0..k).filter(|p| !anchors.iter().any(|&(q, _)| q == *p)));
    let mut m = Matcher {
        host: host.adjacency(),
        allowed,
        pattern,
        mode,
        order,
        map: vec![usize::MAX; k],
        host_mask: host.vertex_mask(),
    };
    let mut used = 0u64;
    for (depth, &(p, h)) in anchors.iter().enumerate() {
        if m.candidates(depth, used) >> h & 1 == 0 {
            return None;
        }
        m.map[p] = h;
        used |= 1 << h;
    }
    m.extend(anchors.len(), used).then_some(Embedding { map: m.map })
}

/// Finds the lexicographically first induced embedding of `pattern` into `host`
/// whose interior host edges all lie in `admissible` (when given).
pub fn find_induced_embedding(host: &Graph, pattern: &Graph, admissible: Option<&Graph>) -> Option<Embedding> {
    let mask = admissible.map(|a| {
        assert_eq!(a.order(), host.order(), "admissible-edge graph must span the host");
        a.adjacency()
    });
    find_embedding_anchored(host, pattern, Containment::Induced, mask, &[])
}

/// Same as [`find_induced_embedding`] with the admissible edges given by a predicate.
pub fn find_induced_embedding_where(
    host: &Graph,
    pattern: &Graph,
    admit: impl Fn(usize, usize) -> bool,
) -> Option<Embedding> {
    let mut mask = Graph::empty(host.order());
    for (u, v) in host.edges().filter(|&(u, v)| admit(u, v)) {
        mask.add_edge(u, v);
    }
    find_induced_embedding(host, pattern, Some(&mask))
}

/// Finds the first (not necessarily induced) subgraph embedding of `pattern`.
pub fn find_subgraph_embedding(host: &Graph, pattern: &Graph, admissible: Option<&Graph>) -> Option<Embedding> {
    let mask = admissible.map(|a| a.adjacency());
    find_embedding_anchored(host, pattern, Containment::Subgraph, mask, &[])
}

/// Whether some embedding maps a pattern edge onto the host edge `(u, v)`.
pub(crate) fn embedding_through_edge(
    host: &Graph,
    pattern: &Graph,
    mode: Containment,
    admissible: &[u64],
    (u, v): (usize, usize),
) -> bool {
    pattern.edges().any(|(a, b)| {
        find_embedding_anchored(host, pattern, mode, Some(admissible), &[(a, u), (b, v)]).is_some()
            || find_embedding_anchored(host, pattern, mode, Some(admissible), &[(a, v), (b, u)]).is_some()
    })
}

/// Why an [`Embedding`] fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingDefect {
    WrongLength { expected: usize, found: usize },
    OutOfRange(usize),
    NotInjective(usize),
    /// Pattern pair whose adjacency differs from that of its image.
    NotInduced(usize, usize),
    /// Pattern edge whose image is not a host edge.
    MissingEdge(usize, usize),
}

/// Standalone check of injectivity and of the induced (or subgraph) condition.
pub fn validate_embedding(
    host: &Graph,
    pattern: &Graph,
    emb: &Embedding,
    mode: Containment,
) -> Result<(), EmbeddingDefect> {
    if emb.map.len() != pattern.order() {
        return Err(EmbeddingDefect::WrongLength { expected: pattern.order(), found: emb.map.len() });
    }
    for (i, &x) in emb.map.iter().enumerate() {
        if x >= host.order() {
            return Err(EmbeddingDefect::OutOfRange(x));
        }
        if emb.map[..i].contains(&x) {
            return Err(EmbeddingDefect::NotInjective(x));
        }
    }
    for a in 0..pattern.order() {
        for b in a + 1..pattern.order() {
            let pe = pattern.has_edge(a, b);
            let he = host.has_edge(emb.map[a], emb.map[b]);
            match mode {
                Containment::Induced if pe != he => return Err(EmbeddingDefect::NotInduced(a, b)),
                Containment::Subgraph if pe && !he => return Err(EmbeddingDefect::MissingEdge(a, b)),
                _ => {}
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn path_in_cycle() {
        let e = find_induced_embedding(&cycle(5), &path(3), None).unwrap();
        assert_eq!(e.map, vec![0, 1, 2]);
        assert!(validate_embedding(&cycle(5), &path(3), &e, Containment::Induced).is_ok());
    }

    #[test]
    fn no_induced_path_in_complete() {
        assert!(find_induced_embedding(&complete(4), &path(3), None).is_none());
        assert!(find_subgraph_embedding(&complete(4), &path(3), None).is_some());
    }

    #[test]
    fn admissible_c4_in_k5_is_not_induced() {
        let marked = cycle(4).with_isolated_vertex();
        assert!(find_induced_embedding(&complete(5), &cycle(4), Some(&marked)).is_none());
        // as a plain subgraph the marked C_4 is fine
        assert!(find_subgraph_embedding(&complete(5), &cycle(4), Some(&marked)).is_some());
    }

    #[test]
    fn pattern_larger_than_host() {
        assert!(find_induced_embedding(&complete(3), &path(4), None).is_none());
    }

    #[test]
    fn predicate_form() {
        let e = find_induced_embedding_where(&cycle(5), &path(3), |u, v| u.min(v) >= 1 && u.max(v) <= 3);
        assert_eq!(e.unwrap().map, vec![1, 2, 3]);
    }

    #[test]
    fn anchored_search_through_edge() {
        let host = cycle(5);
        let all = host.adjacency().to_vec();
        assert!(embedding_through_edge(&host, &path(3), Containment::Induced, &all, (0, 1)));
        assert!(!embedding_through_edge(&host, &complete(3), Containment::Induced, &all, (0, 1)));
    }

    #[test]
    fn validator_catches_defects() {
        let host = complete(3);
        let p = path(3);
        let bad = Embedding { map: vec![0, 1, 2] };
        assert_eq!(validate_embedding(&host, &p, &bad, Containment::Induced), Err(EmbeddingDefect::NotInduced(0, 2)));
        assert!(validate_embedding(&host, &p, &bad, Containment::Subgraph).is_ok());
        let dup = Embedding { map: vec![0, 0, 2] };
        assert_eq!(validate_embedding(&host, &p, &dup, Containment::Subgraph), Err(EmbeddingDefect::NotInjective(0)));
    }
}
