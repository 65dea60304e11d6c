//! Red/blue edge colorings of a host graph and monochromatic containment.
//!
//! "A red `G` induced in `F`" always means: a vertex set `S` with `F[S] ≅ G` and
//! every `F`-edge inside `S` red. Edges of `F` leaving `S` are irrelevant.

use crate::embed::{find_embedding_anchored, validate_embedding, Containment, Embedding};
use crate::graph::{bits, components_of, Graph};
use crate::invariants::{first_clique_of_size, independence_number};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring is for {coloring} vertices but the host has {host}")]
    OrderMismatch { coloring: usize, host: usize },
    #[error("pair ({0},{1}) is colored but is not an edge of the host")]
    NotAnEdge(usize, usize),
    #[error("host edge ({0},{1}) is not colored")]
    Uncolored(usize, usize),
    #[error("pair ({0},{1}) is listed more than once")]
    Duplicate(usize, usize),
    #[error("pair ({0},{1}) is not a valid vertex pair with u < v < n")]
    BadPair(usize, usize),
    #[error("malformed coloring JSON: {0}")]
    Json(String),
}

/// Assignment of red or blue to edges of a host graph on `n` vertices.
///
/// Stored as two adjacency bitmask arrays. A coloring under construction may
/// leave edges uncolored; [`EdgeColoring::validate_for`] checks totality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    red: Vec<u64>,
    blue: Vec<u64>,
}

impl EdgeColoring {
    /// Coloring with no colored edges yet.
    pub fn uncolored(n: usize) -> Self {
        EdgeColoring { n, red: vec![0; n], blue: vec![0; n] }
    }

    /// Every edge of `host` gets `color`.
    pub fn monochromatic(host: &Graph, color: Color) -> Self {
        let mut c = EdgeColoring::uncolored(host.order());
        *c.class_mut(color) = host.adjacency().to_vec();
        c
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Colors `(u, v)`, replacing any previous color.
    pub fn set(&mut self, u: usize, v: usize, color: Color) {
        let other = color.other();
        for (a, b) in [(u, v), (v, u)] {
            self.class_mut(color)[a] |= 1 << b;
            self.class_mut(other)[a] &= !(1 << b);
        }
    }

    pub fn clear(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            self.red[a] &= !(1 << b);
            self.blue[a] &= !(1 << b);
        }
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        if self.red[u] >> v & 1 == 1 {
            Some(Color::Red)
        } else if self.blue[u] >> v & 1 == 1 {
            Some(Color::Blue)
        } else {
            None
        }
    }

    /// Adjacency masks of one color class.
    pub fn class(&self, color: Color) -> &[u64] {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    fn class_mut(&mut self, color: Color) -> &mut Vec<u64> {
        match color {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        }
    }

    /// The spanning subgraph formed by one color class.
    pub fn class_graph(&self, color: Color) -> Graph {
        Graph::from_adjacency(self.class(color).to_vec())
    }

    /// Edges `(u, v)`, `u < v`, of one color in ascending order.
    pub fn edges_of(&self, color: Color) -> Vec<(usize, usize)> {
        self.class_graph(color).edges().collect()
    }

    /// Every red edge becomes blue and vice versa.
    pub fn swapped(&self) -> EdgeColoring {
        EdgeColoring { n: self.n, red: self.blue.clone(), blue: self.red.clone() }
    }

    /// Checks that this is a total coloring of exactly the edges of `host`.
    pub fn validate_for(&self, host: &Graph) -> Result<(), ColoringError> {
        if self.n != host.order() {
            return Err(ColoringError::OrderMismatch { coloring: self.n, host: host.order() });
        }
        for u in 0..self.n {
            debug_assert_eq!(self.red[u] & self.blue[u], 0);
            let colored = self.red[u] | self.blue[u];
            if let Some(v) = bits(colored & !host.neighbors(u)).next() {
                return Err(ColoringError::NotAnEdge(u.min(v), u.max(v)));
            }
            if let Some(v) = bits(host.neighbors(u) & !colored).next() {
                return Err(ColoringError::Uncolored(u.min(v), u.max(v)));
            }
        }
        Ok(())
    }

    pub fn to_file(&self) -> ColoringFile {
        ColoringFile {
            n: self.n,
            red: self.edges_of(Color::Red).into_iter().map(|(u, v)| [u, v]).collect(),
            blue: self.edges_of(Color::Blue).into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ColoringError> {
        let file: ColoringFile = serde_json::from_str(text).map_err(|e| ColoringError::Json(e.to_string()))?;
        EdgeColoring::try_from(file)
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeColoring")
            .field("n", &self.n)
            .field("red", &self.edges_of(Color::Red))
            .field("blue", &self.edges_of(Color::Blue))
            .finish()
    }
}

/// On-disk coloring: `{"n": int, "red": [[u,v],...], "blue": [[u,v],...]}`, `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    pub n: usize,
    pub red: Vec<[usize; 2]>,
    pub blue: Vec<[usize; 2]>,
}

impl TryFrom<ColoringFile> for EdgeColoring {
    type Error = ColoringError;

    fn try_from(file: ColoringFile) -> Result<Self, ColoringError> {
        if file.n > crate::graph::MAX_ORDER {
            return Err(ColoringError::Json(format!("order {} is too large", file.n)));
        }
        let mut c = EdgeColoring::uncolored(file.n);
        for (color, pairs) in [(Color::Red, &file.red), (Color::Blue, &file.blue)] {
            for &[u, v] in pairs {
                if u >= v || v >= file.n {
                    return Err(ColoringError::BadPair(u, v));
                }
                if c.color_of(u, v).is_some() {
                    return Err(ColoringError::Duplicate(u, v));
                }
                c.set(u, v, color);
            }
        }
        Ok(c)
    }
}

/// A monochromatic induced (or, for classical checks, plain) copy of a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub color: Color,
    pub embedding: Embedding,
}

/// Outcome of checking a candidate witness coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessCheck {
    Valid,
    Violated(Violation),
}

impl WitnessCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, WitnessCheck::Valid)
    }
}

fn find_mono(
    host: &Graph,
    c: &EdgeColoring,
    pattern: &Graph,
    color: Color,
    mode: Containment,
) -> Result<Option<Violation>, ColoringError> {
    c.validate_for(host)?;
    Ok(find_embedding_anchored(host, pattern, mode, Some(c.class(color)), &[])
        .map(|embedding| Violation { color, embedding }))
}

/// A vertex set inducing `pattern` in `host` whose interior edges all have `color`.
/// Reports the lexicographically first such embedding.
pub fn find_mono_induced(
    host: &Graph,
    c: &EdgeColoring,
    pattern: &Graph,
    color: Color,
) -> Result<Option<Violation>, ColoringError> {
    find_mono(host, c, pattern, color, Containment::Induced)
}

/// A (not necessarily induced) copy of `pattern` using only edges of `color`.
pub fn find_mono_subgraph(
    host: &Graph,
    c: &EdgeColoring,
    pattern: &Graph,
    color: Color,
) -> Result<Option<Violation>, ColoringError> {
    find_mono(host, c, pattern, color, Containment::Subgraph)
}

fn verify(host: &Graph, c: &EdgeColoring, g: &Graph, h: &Graph, mode: Containment) -> Result<WitnessCheck, ColoringError> {
    if let Some(v) = find_mono(host, c, g, Color::Red, mode)? {
        return Ok(WitnessCheck::Violated(v));
    }
    Ok(match find_mono(host, c, h, Color::Blue, mode)? {
        Some(v) => WitnessCheck::Violated(v),
        None => WitnessCheck::Valid,
    })
}

/// Valid iff `c` has no red induced `g` and no blue induced `h`; otherwise the
/// first violation found (red is checked first).
pub fn verify_witness(host: &Graph, c: &EdgeColoring, g: &Graph, h: &Graph) -> Result<WitnessCheck, ColoringError> {
    verify(host, c, g, h, Containment::Induced)
}

/// Classical (non-induced) variant of [`verify_witness`].
pub fn verify_witness_subgraph(
    host: &Graph,
    c: &EdgeColoring,
    g: &Graph,
    h: &Graph,
) -> Result<WitnessCheck, ColoringError> {
    verify(host, c, g, h, Containment::Subgraph)
}

/// Independent recheck of a violation: the image induces (or contains) the
/// pattern and every host edge inside the image has the violation's color.
pub fn violation_is_sound(host: &Graph, c: &EdgeColoring, pattern: &Graph, v: &Violation, mode: Containment) -> bool {
    if validate_embedding(host, pattern, &v.embedding, mode).is_err() {
        return false;
    }
    let m = &v.embedding.map;
    pattern.edges().all(|(a, b)| c.color_of(m[a], m[b]) == Some(v.color))
        && match mode {
            Containment::Induced => (0..m.len())
                .flat_map(|a| (a + 1..m.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| host.has_edge(m[a], m[b]))
                .all(|(a, b)| c.color_of(m[a], m[b]) == Some(v.color)),
            Containment::Subgraph => true,
        }
}

/// Every connected component of the red spanning subgraph spans a vertex set
/// whose host-induced independence number is at most `alpha - 1`.
///
/// A red induced connected graph lies inside one red component, and independence
/// only drops on passing to induced subgraphs, so this rules out every red
/// induced connected graph with independence number `alpha`.
pub fn red_component_independence_ok(host: &Graph, c: &EdgeColoring, alpha: usize) -> bool {
    components_of(c.class(Color::Red), host.vertex_mask())
        .into_iter()
        .filter(|comp| comp.count_ones() >= 2)
        .all(|comp| independence_number(&host.induced_subgraph(comp).0) < alpha)
}

/// No `omega` vertices are pairwise joined by blue edges.
pub fn blue_clique_free(host: &Graph, c: &EdgeColoring, omega: usize) -> bool {
    let blue = Graph::from_adjacency(c.class(Color::Blue).iter().zip(host.adjacency()).map(|(b, h)| b & h).collect());
    first_clique_of_size(&blue, omega, blue.vertex_mask()).is_none()
}

/// Largest host order the exhaustive red-side oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("host order {0} exceeds the oracle limit {ORACLE_MAX_ORDER}")]
pub struct OracleLimit(pub usize);

/// Exhaustive oracle: no vertex set `S` has all host edges inside it red, no
/// isolated vertex in `host[S]`, and `α(host[S]) = alpha`. Such a coloring has
/// no red induced copy of any isolate-free graph with independence number `alpha`.
pub fn red_isolatefree_independence_ok(host: &Graph, c: &EdgeColoring, alpha: usize) -> Result<bool, OracleLimit> {
    red_isolatefree_witness(host, c, alpha).map(|s| s.is_none())
}

/// The first offending set for [`red_isolatefree_independence_ok`], if any.
pub fn red_isolatefree_witness(host: &Graph, c: &EdgeColoring, alpha: usize) -> Result<Option<u64>, OracleLimit> {
    let n = host.order();
    if n > ORACLE_MAX_ORDER {
        return Err(OracleLimit(n));
    }
    let red = c.class(Color::Red);
    for s in 1u64..(1 << n) {
        if (s.count_ones() as usize) < alpha.max(2) {
            continue;
        }
        let closed = bits(s).all(|v| {
            let inside = host.neighbors(v) & s;
            inside != 0 && inside & !red[v] == 0
        });
        if closed && independence_number(&host.induced_subgraph(s).0) == alpha {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, matching, path};

    /// K_5 whose red class is the 5-cycle 0-1-2-3-4-0.
    fn pentagon_witness() -> (Graph, EdgeColoring) {
        let host = complete(5);
        let mut c = EdgeColoring::monochromatic(&host, Color::Blue);
        for (u, v) in cycle(5).edges() {
            c.set(u, v, Color::Red);
        }
        (host, c)
    }

    #[test]
    fn all_red_triangle() {
        let host = complete(3);
        let c = EdgeColoring::monochromatic(&host, Color::Red);
        assert!(find_mono_induced(&host, &c, &complete(3), Color::Red).unwrap().is_some());
        assert!(find_mono_induced(&host, &c, &complete(3), Color::Blue).unwrap().is_none());
    }

    #[test]
    fn pentagon_has_no_monochromatic_triangle() {
        let (host, c) = pentagon_witness();
        assert!(find_mono_induced(&host, &c, &complete(3), Color::Red).unwrap().is_none());
        assert!(find_mono_induced(&host, &c, &complete(3), Color::Blue).unwrap().is_none());
        assert!(verify_witness(&host, &c, &complete(3), &complete(3)).unwrap().is_valid());
        assert!(blue_clique_free(&host, &c, 3));
    }

    #[test]
    fn red_matching_violation() {
        let host = matching(2);
        let c = EdgeColoring::monochromatic(&host, Color::Red);
        let WitnessCheck::Violated(v) = verify_witness(&host, &c, &matching(2), &complete(2)).unwrap() else {
            panic!("expected a violation");
        };
        assert_eq!(v.color, Color::Red);
        assert!(violation_is_sound(&host, &c, &matching(2), &v, Containment::Induced));
    }

    #[test]
    fn mismatched_coloring_is_an_error() {
        let host = complete(3);
        let c = EdgeColoring::monochromatic(&path(3), Color::Red);
        assert_eq!(
            find_mono_induced(&host, &c, &complete(2), Color::Red),
            Err(ColoringError::Uncolored(0, 2))
        );
        let c = EdgeColoring::monochromatic(&complete(4), Color::Red);
        assert!(matches!(c.validate_for(&host), Err(ColoringError::OrderMismatch { .. })));
        let c = EdgeColoring::monochromatic(&complete(3), Color::Red);
        assert_eq!(c.validate_for(&path(3)), Err(ColoringError::NotAnEdge(0, 2)));
    }

    #[test]
    fn component_predicate() {
        let k3 = complete(3);
        assert!(red_component_independence_ok(&k3, &EdgeColoring::monochromatic(&k3, Color::Red), 2));
        let p3 = path(3);
        assert!(!red_component_independence_ok(&p3, &EdgeColoring::monochromatic(&p3, Color::Red), 2));
        let host = complete(5);
        let mut c = EdgeColoring::monochromatic(&host, Color::Blue);
        for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4)] {
            c.set(u, v, Color::Red);
        }
        assert!(red_component_independence_ok(&host, &c, 2));
    }

    #[test]
    fn blue_clique_predicate() {
        let k4 = complete(4);
        assert!(blue_clique_free(&k4, &EdgeColoring::monochromatic(&k4, Color::Red), 2));
        assert!(!blue_clique_free(&k4, &EdgeColoring::monochromatic(&k4, Color::Blue), 4));
    }

    #[test]
    fn isolatefree_oracle() {
        let k4 = complete(4);
        let mut c = EdgeColoring::monochromatic(&k4, Color::Red);
        assert!(red_isolatefree_independence_ok(&k4, &c, 2).unwrap());
        c.set(0, 1, Color::Blue);
        assert!(red_isolatefree_independence_ok(&k4, &c, 2).unwrap());

        // red 2K_2 inside K_5 is not induced: the cross edges are blue
        let host = complete(5);
        let mut c = EdgeColoring::monochromatic(&host, Color::Blue);
        c.set(0, 1, Color::Red);
        c.set(2, 3, Color::Red);
        assert!(red_isolatefree_independence_ok(&host, &c, 2).unwrap());
        // as a host of its own the red 2K_2 is induced
        let host = disjoint_union(&[matching(2), Graph::empty(1)]);
        let c = EdgeColoring::monochromatic(&host, Color::Red);
        assert_eq!(red_isolatefree_witness(&host, &c, 2).unwrap(), Some(0b1111));

        let host = cycle(5);
        let c = EdgeColoring::monochromatic(&host, Color::Blue);
        assert!(red_isolatefree_independence_ok(&host, &c, 1).unwrap());
        assert_eq!(red_isolatefree_independence_ok(&complete(17), &c, 2), Err(OracleLimit(17)));
    }

    #[test]
    fn json_shape() {
        let (_, c) = pentagon_witness();
        let text = c.to_json();
        assert!(text.starts_with(r#"{"n":5,"red":[[0,1],[0,4],[1,2],[2,3],[3,4]],"blue":[[0,2]"#), "{text}");
        assert_eq!(EdgeColoring::from_json(&text).unwrap(), c);
        assert_eq!(EdgeColoring::from_json(r#"{"n":3,"red":[[1,0]],"blue":[]}"#), Err(ColoringError::BadPair(1, 0)));
        assert_eq!(
            EdgeColoring::from_json(r#"{"n":3,"red":[[0,1]],"blue":[[0,1]]}"#),
            Err(ColoringError::Duplicate(0, 1))
        );
        assert!(matches!(EdgeColoring::from_json("{"), Err(ColoringError::Json(_))));
    }

    #[test]
    fn swap_exchanges_classes() {
        let (_, c) = pentagon_witness();
        assert_eq!(c.swapped().edges_of(Color::Blue), c.edges_of(Color::Red));
        assert_eq!(c.swapped().swapped(), c);
    }
}
