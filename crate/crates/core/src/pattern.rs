//! Forbidden-subgraph detection and the reducible configuration library.
//!
//! Configurations are matched on the abstract graph: a [`Match`] is an
//! injective map from pattern vertices to host vertices that carries every
//! pattern edge and satisfies every host-degree constraint. Matches are not
//! required to be induced; extra host edges are left to the reducibility
//! verifier, which always works on the induced subgraph.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::graph::{is_connected, Graph, SimpleGraph};

/// The two graph classes: hopper-free and house-free planar graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    /// No two triangles meeting in exactly one vertex.
    H1,
    /// No triangle sharing exactly one edge with a 4-cycle.
    H2,
}

impl Class {
    pub fn as_str(self) -> &'static str {
        match self {
            Class::H1 => "H1",
            Class::H2 => "H2",
        }
    }

    /// Configuration library used for this class, in matching priority order.
    pub fn library(self) -> &'static [ConfigId] {
        use ConfigId::*;
        match self {
            Class::H1 => &[Z0, B1a, B1b, B2a, B2b, B2c, B3, B4i, B4ii, B5, B6],
            Class::H2 => &[Z0, D1, D2],
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown name `{0}`")]
pub struct UnknownName(pub alloc::string::String);

impl FromStr for Class {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "H1" | "h1" | "hopper" | "hopper-free" => Ok(Class::H1),
            "H2" | "h2" | "house" | "house-free" => Ok(Class::H2),
            _ => Err(UnknownName(s.into())),
        }
    }
}

/// Stable identifiers of the reducible configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigId {
    Z0,
    B1a,
    B1b,
    B2a,
    B2b,
    B2c,
    B3,
    B4i,
    B4ii,
    B5,
    B6,
    D1,
    D2,
}

impl ConfigId {
    pub const ALL: [ConfigId; 13] = [
        ConfigId::Z0,
        ConfigId::B1a,
        ConfigId::B1b,
        ConfigId::B2a,
        ConfigId::B2b,
        ConfigId::B2c,
        ConfigId::B3,
        ConfigId::B4i,
        ConfigId::B4ii,
        ConfigId::B5,
        ConfigId::B6,
        ConfigId::D1,
        ConfigId::D2,
    ];

    pub fn as_str(self) -> &'static str {
        use ConfigId::*;
        match self {
            Z0 => "Z0",
            B1a => "B1a",
            B1b => "B1b",
            B2a => "B2a",
            B2b => "B2b",
            B2c => "B2c",
            B3 => "B3",
            B4i => "B4i",
            B4ii => "B4ii",
            B5 => "B5",
            B6 => "B6",
            D1 => "D1",
            D2 => "D2",
        }
    }

    /// The class whose reducibility lemma this configuration belongs to.
    /// `Z0` belongs to both; `H1` is returned for it.
    pub fn class(self) -> Class {
        match self {
            ConfigId::D1 | ConfigId::D2 => Class::H2,
            _ => Class::H1,
        }
    }

    pub fn pattern(self) -> Pattern {
        use DegreeConstraint::{AtMost, Exact};
        let e = Exact;
        // 4-cycle v1 v2 v3 v4 with chord v1 v3, shared by B3..B6
        let diamond = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
        let (labels, edges, degrees, closed): (&[&str], Vec<(usize, usize)>, Vec<_>, _) =
            match self {
                ConfigId::Z0 => (&["v"], vec![], vec![AtMost(3)], None),
                ConfigId::B1a => (
                    &["v", "v1", "v2", "v3", "v4"],
                    vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)],
                    vec![e(4), e(4), e(5), e(4), e(4)],
                    Some(0),
                ),
                ConfigId::B1b => (
                    &["v", "v1", "v2", "v3", "v4", "v5"],
                    vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)],
                    vec![e(5), e(4), e(5), e(4), e(4), e(4)],
                    Some(0),
                ),
                ConfigId::B2a => (
                    &["v", "v1", "v2", "v3"],
                    vec![(0, 1), (0, 2), (0, 3), (1, 2)],
                    vec![e(4), e(4), e(4), e(4)],
                    None,
                ),
                ConfigId::B2b => (
                    &["v", "v1", "v2", "v3", "v4"],
                    vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)],
                    vec![e(5), e(4), e(4), e(4), e(4)],
                    None,
                ),
                ConfigId::B2c => (
                    &["v", "v1", "v2", "v3", "v4", "v5"],
                    vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)],
                    vec![e(6), e(4), e(4), e(4), e(4), e(4)],
                    None,
                ),
                ConfigId::B3 => (
                    &["v1", "v2", "v3", "v4"],
                    diamond.to_vec(),
                    vec![e(5), e(4), e(4), e(5)],
                    None,
                ),
                ConfigId::B4i => (
                    &["v1", "v2", "v3", "v4", "v5"],
                    [&diamond[..], &[(0, 4)]].concat(),
                    vec![e(5), e(4), e(5), e(4), e(4)],
                    None,
                ),
                ConfigId::B4ii => (
                    &["v1", "v2", "v3", "v4", "v5"],
                    [&diamond[..], &[(0, 4)]].concat(),
                    vec![e(6), e(4), e(4), e(4), e(4)],
                    None,
                ),
                ConfigId::B5 => (
                    &["v1", "v2", "v3", "v4", "v5"],
                    [&diamond[..], &[(3, 4)]].concat(),
                    vec![AtMost(5), AtMost(5), e(4), e(5), e(4)],
                    None,
                ),
                ConfigId::B6 => (
                    &["v1", "v2", "v3", "v4", "v5", "v6"],
                    [&diamond[..], &[(0, 4), (0, 5)]].concat(),
                    vec![e(5), e(4), e(5), e(5), e(4), e(4)],
                    Some(0),
                ),
                ConfigId::D1 => (
                    &["v", "v1", "v2", "v3"],
                    vec![(0, 1), (1, 2), (2, 3), (3, 0)],
                    vec![AtMost(5), e(4), e(4), e(4)],
                    None,
                ),
                ConfigId::D2 => (
                    &["v", "v1", "v2", "v3", "v4"],
                    vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
                    vec![AtMost(5), e(4), e(4), e(4), e(4)],
                    None,
                ),
            };
        Pattern::new(labels.to_vec(), edges, degrees, closed).expect("library patterns are valid")
    }
}

impl fmt::Display for ConfigId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConfigId {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConfigId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownName(s.into()))
    }
}

/// Constraint on the host degree of a matched vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeConstraint {
    Any,
    Exact(usize),
    AtMost(usize),
    AtLeast(usize),
    OneOf(Vec<usize>),
}

impl DegreeConstraint {
    pub fn allows(&self, d: usize) -> bool {
        match self {
            DegreeConstraint::Any => true,
            DegreeConstraint::Exact(x) => d == *x,
            DegreeConstraint::AtMost(x) => d <= *x,
            DegreeConstraint::AtLeast(x) => d >= *x,
            DegreeConstraint::OneOf(xs) => xs.contains(&d),
        }
    }

    /// Largest admissible degree, or `None` when unbounded.
    pub fn max_degree(&self) -> Option<usize> {
        match self {
            DegreeConstraint::Exact(x) | DegreeConstraint::AtMost(x) => Some(*x),
            DegreeConstraint::OneOf(xs) => xs.iter().copied().max(),
            DegreeConstraint::Any | DegreeConstraint::AtLeast(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern edges do not form a connected graph")]
    Disconnected,
    #[error("invalid pattern edge {0}-{1}")]
    BadEdge(usize, usize),
    #[error("pattern vertex {0} cannot satisfy its degree constraint")]
    UnsatisfiableDegree(usize),
    #[error("expected {expected} degree constraints, got {got}")]
    Arity { expected: usize, got: usize },
}

/// A degree-annotated connected pattern graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    labels: Vec<&'static str>,
    graph: SimpleGraph,
    host_degree: Vec<DegreeConstraint>,
    closed_neighborhood_of: Option<usize>,
    /// BFS order from vertex 0 with, for each later vertex, an earlier neighbor.
    order: Vec<(usize, Option<usize>)>,
}

impl Pattern {
    pub fn new(
        labels: Vec<&'static str>,
        edges: Vec<(usize, usize)>,
        host_degree: Vec<DegreeConstraint>,
        closed_neighborhood_of: Option<usize>,
    ) -> Result<Self, PatternError> {
        let n = labels.len();
        if host_degree.len() != n {
            return Err(PatternError::Arity { expected: n, got: host_degree.len() });
        }
        let graph = SimpleGraph::from_edges(n, &edges).map_err(|_| {
            let (u, v) = edges
                .iter()
                .copied()
                .find(|&(u, v)| u >= n || v >= n || u == v)
                .unwrap_or(edges[0]);
            PatternError::BadEdge(u, v)
        })?;
        if !is_connected(&graph) {
            return Err(PatternError::Disconnected);
        }
        for (i, c) in host_degree.iter().enumerate() {
            let inner = graph.degree(i);
            let ok = match c {
                DegreeConstraint::Any | DegreeConstraint::AtLeast(_) => true,
                DegreeConstraint::Exact(x) | DegreeConstraint::AtMost(x) => *x >= inner,
                DegreeConstraint::OneOf(xs) => xs.iter().any(|&x| x >= inner),
            };
            if !ok {
                return Err(PatternError::UnsatisfiableDegree(i));
            }
        }
        let mut order = vec![(0, None)];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let (p, _) = order[head];
            head += 1;
            for &q in graph.neighbors(p) {
                if !seen[q] {
                    seen[q] = true;
                    order.push((q, Some(p)));
                }
            }
        }
        Ok(Self { labels, graph, host_degree, closed_neighborhood_of, order })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[&'static str] {
        &self.labels
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    pub fn host_degree(&self) -> &[DegreeConstraint] {
        &self.host_degree
    }

    pub fn closed_neighborhood_of(&self) -> Option<usize> {
        self.closed_neighborhood_of
    }

    /// Host degrees realising the worst case of every constraint: the
    /// largest admissible value, or the pattern degree when unbounded.
    pub fn canonical_degrees(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .map(|i| self.host_degree[i].max_degree().unwrap_or(self.graph.degree(i)))
            .collect()
    }

    /// Host consisting of the pattern itself plus pendant leaves that raise
    /// each pattern vertex to `degrees[i]`. Pattern vertex `i` is host vertex
    /// `i`. Pendant trees add no cycles, so they cannot create hoppers or
    /// houses.
    pub fn witness_host(&self, degrees: &[usize]) -> SimpleGraph {
        let mut g = self.graph.clone();
        for (i, &d) in degrees.iter().enumerate() {
            assert!(d >= self.graph.degree(i), "degree below pattern degree");
            for _ in self.graph.degree(i)..d {
                let leaf = g.add_vertex();
                g.add_edge(i, leaf).expect("fresh leaf");
            }
        }
        g
    }

    /// All matches of this pattern in `g`, one per matched vertex set (the
    /// lexicographically smallest map is kept), sorted by map.
    pub fn find_in<G: Graph + ?Sized>(&self, g: &G) -> Vec<Vec<usize>> {
        let mut raw = Vec::new();
        let mut map = vec![usize::MAX; self.vertex_count()];
        let mut used = vec![false; g.vertex_count()];
        self.extend(g, 0, &mut map, &mut used, &mut raw);
        raw.sort_unstable();
        let mut seen = BTreeSet::new();
        raw.retain(|m| {
            let mut set = m.clone();
            set.sort_unstable();
            seen.insert(set)
        });
        raw
    }

    fn extend<G: Graph + ?Sized>(
        &self,
        g: &G,
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == self.order.len() {
            if let Some(c) = self.closed_neighborhood_of {
                if !g.neighbors(map[c]).iter().all(|u| map.contains(u)) {
                    return;
                }
            }
            out.push(map.to_vec());
            return;
        }
        let (p, anchor) = self.order[depth];
        let candidates: Vec<usize> = match anchor {
            None => (0..g.vertex_count()).collect(),
            Some(a) => g.neighbors(map[a]).to_vec(),
        };
        for x in candidates {
            if used[x] || !self.host_degree[p].allows(g.degree(x)) {
                continue;
            }
            let edges_ok = self
                .graph
                .neighbors(p)
                .iter()
                .all(|&q| map[q] == usize::MAX || g.has_edge(map[q], x));
            if !edges_ok {
                continue;
            }
            map[p] = x;
            used[x] = true;
            self.extend(g, depth + 1, map, used, out);
            used[x] = false;
            map[p] = usize::MAX;
        }
    }

    /// Re-validates a map against `g`: injective, edges present, degrees ok.
    pub fn is_valid_match<G: Graph + ?Sized>(&self, g: &G, map: &[usize]) -> bool {
        if map.len() != self.vertex_count() || map.iter().any(|&x| x >= g.vertex_count()) {
            return false;
        }
        let distinct: BTreeSet<_> = map.iter().collect();
        if distinct.len() != map.len() {
            return false;
        }
        let degrees_ok =
            map.iter().enumerate().all(|(i, &x)| self.host_degree[i].allows(g.degree(x)));
        let edges_ok = self.graph.edges().into_iter().all(|(a, b)| g.has_edge(map[a], map[b]));
        let closed_ok = self
            .closed_neighborhood_of
            .is_none_or(|c| g.neighbors(map[c]).iter().all(|u| map.contains(u)));
        degrees_ok && edges_ok && closed_ok
    }
}

/// What a [`Match`] is an occurrence of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatchKind {
    /// Map `[center, a1, b1, a2, b2]`: triangles `center a1 b1`, `center a2 b2`.
    Hopper,
    /// Map `[x, y, z, p, q]`: triangle `x y z` and 4-cycle `x y p q`.
    House,
    Config(ConfigId),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Match {
    pub kind: MatchKind,
    /// Pattern vertex `i` maps to host vertex `map[i]`.
    pub map: Vec<usize>,
}

impl Match {
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut s = self.map.clone();
        s.sort_unstable();
        s
    }

    /// Host edges forming the occurrence: the two triangles of a hopper, the
    /// triangle and 4-cycle of a house, the required edges of a configuration.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let m = &self.map;
        let pattern_edges: Vec<(usize, usize)> = match self.kind {
            MatchKind::Hopper => vec![(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)],
            MatchKind::House => vec![(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (0, 4)],
            MatchKind::Config(c) => c.pattern().edges(),
        };
        pattern_edges.into_iter().map(|(a, b)| (m[a].min(m[b]), m[a].max(m[b]))).collect()
    }

    pub fn config(&self) -> Option<ConfigId> {
        match self.kind {
            MatchKind::Config(c) => Some(c),
            _ => None,
        }
    }
}

/// Triangles `(a, b, c)` with `a < b < c`, sorted.
pub fn triangles<G: Graph + ?Sized>(g: &G) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.vertex_count() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn hoppers_impl<G: Graph + ?Sized>(g: &G, first_only: bool) -> Vec<Match> {
    let tris = triangles(g);
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, t) in tris.iter().enumerate() {
        for &v in t {
            at[v].push(i);
        }
    }
    let mut out = Vec::new();
    for (center, ts) in at.iter().enumerate() {
        for (x, &i) in ts.iter().enumerate() {
            for &j in &ts[x + 1..] {
                let shared = tris[i].iter().filter(|v| tris[j].contains(v)).count();
                if shared != 1 {
                    continue;
                }
                let rest = |t: &[usize; 3]| {
                    let r: Vec<usize> = t.iter().copied().filter(|&v| v != center).collect();
                    (r[0], r[1])
                };
                let (a1, b1) = rest(&tris[i]);
                let (a2, b2) = rest(&tris[j]);
                out.push(Match { kind: MatchKind::Hopper, map: vec![center, a1, b1, a2, b2] });
                if first_only {
                    return out;
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Every pair of triangles meeting in exactly one vertex, once per pair.
pub fn find_hopper<G: Graph + ?Sized>(g: &G) -> Vec<Match> {
    hoppers_impl(g, false)
}

pub fn has_hopper<G: Graph + ?Sized>(g: &G) -> bool {
    !hoppers_impl(g, true).is_empty()
}

fn houses_impl<G: Graph + ?Sized>(g: &G, first_only: bool) -> Vec<Match> {
    let mut out = Vec::new();
    for [a, b, c] in triangles(g) {
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            for &p in g.neighbors(y) {
                if p == x || p == z {
                    continue;
                }
                for &q in g.neighbors(x) {
                    if q == y || q == z || q == p || !g.has_edge(p, q) {
                        continue;
                    }
                    out.push(Match { kind: MatchKind::House, map: vec![x, y, z, p, q] });
                    if first_only {
                        return out;
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Every (triangle, 4-cycle) pair sharing exactly one edge on five distinct
/// vertices.
pub fn find_house<G: Graph + ?Sized>(g: &G) -> Vec<Match> {
    houses_impl(g, false)
}

pub fn has_house<G: Graph + ?Sized>(g: &G) -> bool {
    !houses_impl(g, true).is_empty()
}

/// Forbidden subgraphs of `class` present in `g`.
pub fn find_forbidden<G: Graph + ?Sized>(g: &G, class: Class) -> Vec<Match> {
    match class {
        Class::H1 => find_hopper(g),
        Class::H2 => find_house(g),
    }
}

/// Some forbidden subgraph of `class`, found without listing them all.
pub fn first_forbidden<G: Graph + ?Sized>(g: &G, class: Class) -> Option<Match> {
    match class {
        Class::H1 => hoppers_impl(g, true).pop(),
        Class::H2 => houses_impl(g, true).pop(),
    }
}

pub fn is_class_member<G: Graph + ?Sized>(g: &G, class: Class) -> bool {
    match class {
        Class::H1 => !has_hopper(g),
        Class::H2 => !has_house(g),
    }
}

/// All library matches for `class`, in library order then by map.
pub fn find_configurations<G: Graph + ?Sized>(g: &G, class: Class) -> Vec<Match> {
    class.library().iter().flat_map(|&id| find_config(g, id)).collect()
}

/// Matches of a single configuration, sorted by map.
pub fn find_config<G: Graph + ?Sized>(g: &G, id: ConfigId) -> Vec<Match> {
    id.pattern()
        .find_in(g)
        .into_iter()
        .map(|map| Match { kind: MatchKind::Config(id), map })
        .collect()
}

/// Whether adding one apex vertex adjacent exactly to `set` keeps `g` free of
/// the forbidden subgraph of `class`.
pub fn is_forbidding<G: Graph + ?Sized>(g: &G, set: &[usize], class: Class) -> bool {
    let mut h = SimpleGraph::from_graph(g);
    let apex = h.add_vertex();
    for &s in set {
        if h.add_edge(apex, s).is_err() {
            // repeated or out-of-range members do not describe a vertex set
            return false;
        }
    }
    is_class_member(&h, class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn hopper_examples() {
        assert_eq!(find_hopper(&catalog::hopper()).len(), 1);
        assert!(find_hopper(&catalog::cycle(5)).is_empty());
        assert!(!find_hopper(&catalog::octahedron()).is_empty());
        assert!(find_hopper(&catalog::k4()).is_empty());
        assert!(find_hopper(&catalog::diamond()).is_empty());
    }

    #[test]
    fn house_examples() {
        assert_eq!(find_house(&catalog::house()).len(), 1);
        assert!(find_house(&catalog::k4()).is_empty());
        assert!(!find_house(&catalog::prism()).is_empty());
    }

    #[test]
    fn class_membership_examples() {
        let dodeca = catalog::dodecahedron();
        assert!(is_class_member(&dodeca, Class::H1));
        assert!(is_class_member(&dodeca, Class::H2));
        assert!(!is_class_member(&catalog::octahedron(), Class::H1));
        assert!(!is_class_member(&catalog::prism(), Class::H2));
        assert!(is_class_member(&catalog::prism(), Class::H1));
    }

    #[test]
    fn z0_on_low_degree_vertices() {
        let m = find_configurations(&catalog::dodecahedron(), Class::H1);
        assert_eq!(m.len(), 20);
        assert!(m.iter().all(|x| x.config() == Some(ConfigId::Z0)));
        let m = find_configurations(&catalog::dodecahedron(), Class::H2);
        assert!(m.iter().all(|x| x.config() == Some(ConfigId::Z0)));
    }

    #[test]
    fn witness_hosts_match_exactly_their_configuration() {
        for id in ConfigId::ALL {
            let p = id.pattern();
            let host = p.witness_host(&p.canonical_degrees());
            let found: Vec<_> = find_configurations(&host, id.class())
                .into_iter()
                .filter(|m| m.config() != Some(ConfigId::Z0))
                .collect();
            let expected: Vec<usize> = (0..p.vertex_count()).collect();
            if id == ConfigId::Z0 {
                continue;
            }
            assert!(
                found.iter().any(|m| m.config() == Some(id) && m.vertex_set() == expected),
                "{id} not found in its witness host"
            );
            for m in &found {
                assert!(m.config().unwrap().pattern().is_valid_match(&host, &m.map));
            }
        }
    }

    #[test]
    fn b3_witness_matches_only_b3() {
        let p = ConfigId::B3.pattern();
        let host = p.witness_host(&p.canonical_degrees());
        let found: Vec<_> = find_configurations(&host, Class::H1)
            .into_iter()
            .filter(|m| m.config() != Some(ConfigId::Z0))
            .collect();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].config(), Some(ConfigId::B3));
        assert_eq!(found[0].vertex_set(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn forbidding_examples() {
        let triangle = catalog::cycle(3);
        assert!(is_forbidding(&triangle, &[], Class::H1));
        assert!(is_forbidding(&triangle, &[0, 1], Class::H1));
        // triangle 0 1 2 with pendant 3 on vertex 2
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(!is_forbidding(&g, &[3, 2], Class::H1));
        // apex over two opposite corners of a 4-cycle with a roof makes a house
        let house_free = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_forbidding(&house_free, &[0, 1], Class::H2));
        assert!(is_forbidding(&house_free, &[0, 2], Class::H2));
    }

    #[test]
    fn config_ids_round_trip_through_strings() {
        for id in ConfigId::ALL {
            assert_eq!(id.as_str().parse::<ConfigId>().unwrap(), id);
        }
        assert!("B7".parse::<ConfigId>().is_err());
        assert_eq!("hopper".parse::<Class>().unwrap(), Class::H1);
    }
}
