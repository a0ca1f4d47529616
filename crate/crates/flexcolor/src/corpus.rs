//! Reproducible corpora of connected plane graphs.
//!
//! `RandomTriangulation` grows a triangulation by inserting vertices into
//! random faces, mixes it with random edge flips, deletes random non-bridge
//! edges and, when a class is requested, keeps deleting edges of forbidden
//! subgraphs until none is left. `ExhaustiveSmall` lists every connected
//! planar graph on the requested vertex range, one embedding each.

use std::fmt;
use std::str::FromStr;

use flexcolor_core::graph::{is_connected, Graph, SimpleGraph};
use flexcolor_core::pattern::{first_forbidden, is_class_member, UnknownName};
use flexcolor_core::small::connected_graphs;
use flexcolor_core::{Class, PlaneGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest vertex count the exhaustive generator accepts.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    ExhaustiveSmall,
    RandomTriangulation,
}

impl Generator {
    pub fn as_str(self) -> &'static str {
        match self {
            Generator::ExhaustiveSmall => "exhaustive-small",
            Generator::RandomTriangulation => "random-triangulation-thinned",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Generator {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive-small" | "exhaustive" => Ok(Generator::ExhaustiveSmall),
            "random-triangulation-thinned" | "random" => Ok(Generator::RandomTriangulation),
            _ => Err(UnknownName(s.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub generator: Generator,
    pub count: usize,
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub class: Option<Class>,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn random(count: usize, min_vertices: usize, max_vertices: usize, class: Option<Class>, seed: u64) -> Self {
        Self { generator: Generator::RandomTriangulation, count, min_vertices, max_vertices, class, seed }
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "generator {} count {} vertices {}..={} class {} seed {}",
            self.generator,
            self.count,
            self.min_vertices,
            self.max_vertices,
            self.class.map_or("none", Class::as_str),
            self.seed
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error("empty vertex range {0}..={1}")]
    EmptyRange(usize, usize),
    #[error("exhaustive generation supports at most {EXHAUSTIVE_MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// Generates the corpus described by `spec`. The same spec always yields the
/// same graphs in the same order.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<PlaneGraph>, CorpusError> {
    let (lo, hi) = (spec.min_vertices.max(1), spec.max_vertices);
    if lo > hi {
        return Err(CorpusError::EmptyRange(spec.min_vertices, spec.max_vertices));
    }
    let keep = |g: &PlaneGraph| spec.class.is_none_or(|c| is_class_member(g, c));
    match spec.generator {
        Generator::ExhaustiveSmall => {
            if hi > EXHAUSTIVE_MAX_VERTICES {
                return Err(CorpusError::TooLarge(hi));
            }
            let mut out = Vec::new();
            for n in lo..=hi {
                for g in connected_graphs(n) {
                    if out.len() == spec.count {
                        return Ok(out);
                    }
                    if let Some(rot) = embed(&g) {
                        let pg = PlaneGraph::build(rot).expect("embedding is valid");
                        if keep(&pg) {
                            out.push(pg);
                        }
                    }
                }
            }
            Ok(out)
        }
        Generator::RandomTriangulation => Ok((0..spec.count)
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
                rng.set_stream(i as u64);
                // repair guarantees membership, so one draw per index suffices
                let g = random_plane_graph(&mut rng, lo, hi, spec.class);
                debug_assert!(keep(&g));
                g
            })
            .collect()),
    }
}

/// One graph of the random generator.
pub fn random_plane_graph<R: Rng + ?Sized>(
    rng: &mut R,
    min_vertices: usize,
    max_vertices: usize,
    class: Option<Class>,
) -> PlaneGraph {
    let (lo, hi) = (min_vertices.max(1), max_vertices.max(min_vertices).max(1));
    if let Some(class) = class {
        if rng.gen_bool(0.5) {
            if let Some(g) = dense_member(rng, lo, hi, class) {
                return g;
            }
        }
    }
    let n = rng.gen_range(lo..=hi);
    let mut rot = random_triangulation(rng, n);
    let edges = edge_list(&rot);
    if n >= 4 {
        for _ in 0..rng.gen_range(0..=2 * edges.len()) {
            let (a, b) = edges[rng.gen_range(0..edges.len())];
            // flipping may have removed this pair; only flip live edges
            if rot[a].contains(&b) {
                flip(&mut rot, a, b);
            }
        }
    }
    // thinning: a third of the graphs keep every edge
    let m = edge_list(&rot).len();
    let deletions = if rng.gen_bool(1.0 / 3.0) { 0 } else { rng.gen_range(0..=m / 3) };
    for _ in 0..deletions {
        let mut es = edge_list(&rot);
        es.shuffle(rng);
        if let Some(&(a, b)) = es.iter().find(|&&(a, b)| !is_bridge(&rot, a, b)) {
            remove_edge(&mut rot, a, b);
        }
    }
    if let Some(class) = class {
        loop {
            let g = SimpleGraph::from_graph(&RotationGraph(&rot));
            let Some(m) = first_forbidden(&g, class) else { break };
            let es = m.edges();
            let (a, b) = es[rng.gen_range(0..es.len())];
            // edges of a forbidden subgraph lie on a cycle, so never bridges
            remove_edge(&mut rot, a, b);
        }
        if rng.gen_bool(0.5) {
            saturate(rng, &mut rot, class);
        }
    }
    PlaneGraph::build(rot).expect("generator keeps a connected plane embedding")
}

/// A class member of minimum degree at least 4, when the vertex range allows:
/// the expansion (H1) or the medial graph (H2) of a random triangulation,
/// followed by a random number of class-preserving chords.
fn dense_member<R: Rng + ?Sized>(rng: &mut R, lo: usize, hi: usize, class: Class) -> Option<PlaneGraph> {
    // expansion of an n-vertex triangulation has 6n - 12 vertices, the medial graph 3n - 6
    let (per, off, min_degree, smallest) = match class {
        Class::H1 => (6, 12, 4, 6),
        Class::H2 => (3, 6, 5, 12),
    };
    let n_lo = ((lo + off).div_ceil(per)).max(smallest);
    let n_hi = (hi + off) / per;
    if n_lo > n_hi {
        return None;
    }
    let n = rng.gen_range(n_lo..=n_hi);
    let mut rot = random_triangulation(rng, n);
    if !raise_min_degree(rng, &mut rot, min_degree) {
        return None;
    }
    let mut derived = match class {
        Class::H1 => expansion(&rot),
        Class::H2 => medial(&rot),
    };
    if first_forbidden(&RotationGraph(&derived), class).is_some() {
        return None;
    }
    let chords = rng.gen_range(0..=derived.len() / 4);
    saturate_up_to(rng, &mut derived, class, chords);
    PlaneGraph::build(derived).ok()
}

/// Flips edges of a triangulation until every degree is at least `target`;
/// false if that does not happen within a bounded number of attempts.
fn raise_min_degree<R: Rng + ?Sized>(rng: &mut R, rot: &mut [Vec<usize>], target: usize) -> bool {
    for _ in 0..200 * rot.len() {
        let low: Vec<usize> = (0..rot.len()).filter(|&v| rot[v].len() < target).collect();
        if low.is_empty() {
            return true;
        }
        let x = low[rng.gen_range(0..low.len())];
        // the edge opposite x in a face x -> a -> b; flipping it gives x a new neighbor
        let i = rng.gen_range(0..rot[x].len());
        let a = rot[x][i];
        let b = successor(&rot[a], x);
        if rot[a].len() > target && rot[b].len() > target {
            flip(rot, a, b);
        } else if rng.gen_bool(0.2) {
            // random moves keep the walk from getting stuck
            let es = edge_list(rot);
            let (p, q) = es[rng.gen_range(0..es.len())];
            flip(rot, p, q);
        }
    }
    false
}

/// Positions of `x` in each rotation, for the derived-graph builders.
fn position(cycle: &[usize], x: usize) -> usize {
    cycle.iter().position(|&w| w == x).expect("neighbor present")
}

/// The expansion: one vertex per corner `(v, i)` (between the `i`-th and the
/// next neighbor of `v`), adjacent to its two neighbors around `v` and its two
/// neighbors along the face.
fn expansion(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut offset = vec![0; rot.len() + 1];
    for v in 0..rot.len() {
        offset[v + 1] = offset[v] + rot[v].len();
    }
    let id = |v: usize, i: usize| offset[v] + i % rot[v].len();
    let mut out = Vec::with_capacity(offset[rot.len()]);
    for v in 0..rot.len() {
        let d = rot[v].len();
        for i in 0..d {
            let (u, w) = (rot[v][i], rot[v][(i + 1) % d]);
            let along_u = id(u, position(&rot[u], v) + rot[u].len() - 1);
            let along_w = id(w, position(&rot[w], v));
            out.push(vec![id(v, i + d - 1), along_u, along_w, id(v, i + 1)]);
        }
    }
    orient(out)
}

/// The medial graph: one vertex per edge, adjacent to the edges next to it in
/// the rotations at both ends.
fn medial(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut edges = edge_list(rot);
    edges.sort_unstable();
    let id = |a: usize, b: usize| edges.binary_search(&(a.min(b), a.max(b))).expect("edge present");
    let around = |v: usize, w: usize| {
        let d = rot[v].len();
        let i = position(&rot[v], w);
        (rot[v][(i + 1) % d], rot[v][(i + d - 1) % d])
    };
    let out = edges
        .iter()
        .map(|&(v, w)| {
            let (v_succ, v_pred) = around(v, w);
            let (w_succ, w_pred) = around(w, v);
            vec![id(v, v_succ), id(w, w_pred), id(w, w_succ), id(v, v_pred)]
        })
        .collect();
    orient(out)
}

/// Returns the rotation system or its mirror, whichever traces as planar.
fn orient(rot: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    if PlaneGraph::build(rot.clone()).is_ok() {
        return rot;
    }
    rot.into_iter()
        .map(|mut ns| {
            ns.reverse();
            ns
        })
        .collect()
}

/// Adds random face chords while the graph stays in `class`, until no chord
/// can be added.
fn saturate<R: Rng + ?Sized>(rng: &mut R, rot: &mut [Vec<usize>], class: Class) {
    saturate_up_to(rng, rot, class, usize::MAX);
}

/// Like [`saturate`], but stops after `limit` chords.
fn saturate_up_to<R: Rng + ?Sized>(rng: &mut R, rot: &mut [Vec<usize>], class: Class, limit: usize) {
    let mut rejected = std::collections::HashSet::new();
    let mut added = 0;
    while added < limit {
        let mut chords = Vec::new();
        for walk in trace(rot) {
            let len = walk.len();
            for i in 0..len {
                for j in i + 1..len {
                    let (u, v) = (walk[i].0, walk[j].0);
                    let key = (u.min(v), u.max(v));
                    if u != v && !rot[u].contains(&v) && !rejected.contains(&key) {
                        // corners: arrive at u by walk[i-1], at v by walk[j-1]
                        let w = walk[(i + len - 1) % len].0;
                        let y = walk[(j + len - 1) % len].0;
                        chords.push((u, w, v, y));
                    }
                }
            }
        }
        if chords.is_empty() {
            return;
        }
        let (u, w, v, y) = chords[rng.gen_range(0..chords.len())];
        insert_after(&mut rot[u], w, v);
        insert_after(&mut rot[v], y, u);
        if first_forbidden(&RotationGraph(rot), class).is_some() {
            remove_edge(rot, u, v);
            rejected.insert((u.min(v), u.max(v)));
        } else {
            added += 1;
        }
    }
}

/// Rotation system of a random triangulation on `n` vertices (a path or a
/// single vertex when `n < 3`).
fn random_triangulation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Vec<usize>> {
    match n {
        0 | 1 => return vec![Vec::new(); n],
        2 => return vec![vec![1], vec![0]],
        _ => {}
    }
    let mut rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // faces as walks (a, b, c): darts a->b, b->c, c->a
    let mut faces = vec![[0, 1, 2], [0, 2, 1]];
    for x in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        insert_after(&mut rot[a], c, x);
        insert_after(&mut rot[b], a, x);
        insert_after(&mut rot[c], b, x);
        rot.push(vec![a, c, b]);
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
    }
    rot
}

/// Adjacency view of a rotation system under construction.
struct RotationGraph<'a>(&'a [Vec<usize>]);

impl Graph for RotationGraph<'_> {
    fn vertex_count(&self) -> usize {
        self.0.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.0[v]
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.0[u].contains(&v)
    }
}

fn edge_list(rot: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut es = Vec::new();
    for (v, ns) in rot.iter().enumerate() {
        es.extend(ns.iter().filter(|&&u| u > v).map(|&u| (v, u)));
    }
    es
}

fn insert_after(cycle: &mut Vec<usize>, after: usize, x: usize) {
    let i = cycle.iter().position(|&w| w == after).expect("neighbor present");
    cycle.insert(i + 1, x);
}

fn successor(cycle: &[usize], of: usize) -> usize {
    let i = cycle.iter().position(|&w| w == of).expect("neighbor present");
    cycle[(i + 1) % cycle.len()]
}

fn remove_edge(rot: &mut [Vec<usize>], a: usize, b: usize) {
    rot[a].retain(|&w| w != b);
    rot[b].retain(|&w| w != a);
}

fn is_bridge(rot: &[Vec<usize>], a: usize, b: usize) -> bool {
    let mut copy = rot.to_vec();
    remove_edge(&mut copy, a, b);
    !is_connected(&RotationGraph(&copy))
}

/// Replaces edge `ab` by the other diagonal of the two faces beside it, when
/// both are triangles and the flip keeps the graph simple with degrees ≥ 3.
fn flip(rot: &mut [Vec<usize>], a: usize, b: usize) {
    let c = successor(&rot[b], a);
    let d = successor(&rot[a], b);
    let triangles = successor(&rot[c], b) == a && successor(&rot[d], a) == b;
    if c == d || !triangles || rot[c].contains(&d) || rot[a].len() < 4 || rot[b].len() < 4 {
        return;
    }
    remove_edge(rot, a, b);
    insert_after(&mut rot[c], b, d);
    insert_after(&mut rot[d], a, c);
}

/// Face walks of a (partial, connected) rotation system, as darts.
fn trace(rot: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let mut seen: Vec<Vec<bool>> = rot.iter().map(|ns| vec![false; ns.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..rot.len() {
        for i in 0..rot[v].len() {
            if seen[v][i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut t, mut j) = (v, i);
            while !seen[t][j] {
                seen[t][j] = true;
                let h = rot[t][j];
                walk.push((t, h));
                let back = rot[h].iter().position(|&w| w == t).expect("symmetric");
                (t, j) = (h, (back + 1) % rot[h].len());
            }
            faces.push(walk);
        }
    }
    faces
}

/// Some planar rotation system of `g`, or `None` when `g` is disconnected or
/// not planar. Exponential search; meant for graphs of a handful of vertices.
pub fn embed<G: Graph + ?Sized>(g: &G) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 || !is_connected(g) {
        return None;
    }
    let m: usize = (0..n).map(|v| g.degree(v)).sum::<usize>() / 2;
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    // BFS order so that every edge after the first touches a placed vertex
    let mut order = vec![usize::MAX; n];
    let mut queue = vec![0];
    order[0] = 0;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &u in g.neighbors(v) {
            if order[u] == usize::MAX {
                order[u] = queue.len();
                queue.push(u);
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| g.neighbors(v).iter().filter(move |&&u| u > v).map(move |&u| (v, u)))
        .map(|(a, b)| if order[a] < order[b] { (a, b) } else { (b, a) })
        .collect();
    edges.sort_by_key(|&(a, b)| (order[b], order[a]));
    let mut rot = vec![Vec::new(); n];
    place(&mut rot, &edges).then_some(rot)
}

fn place(rot: &mut Vec<Vec<usize>>, edges: &[(usize, usize)]) -> bool {
    let Some((&(u, v), rest)) = edges.split_first() else {
        return true;
    };
    if rot[v].is_empty() {
        // v is new: try every corner of u
        for i in 0..rot[u].len().max(1) {
            rot[u].insert(i, v);
            rot[v].push(u);
            if place(rot, rest) {
                return true;
            }
            rot[v].clear();
            rot[u].remove(i);
        }
        return false;
    }
    for walk in trace(rot) {
        let len = walk.len();
        // corner at position p: arrive by walk[p-1], leave by walk[p]
        let corners = |x: usize| -> Vec<usize> {
            (0..len).filter(|&p| walk[p].0 == x).map(|p| walk[(p + len - 1) % len].0).collect()
        };
        let (cu, cv) = (corners(u), corners(v));
        for &w in &cu {
            for &y in &cv {
                insert_after(&mut rot[u], w, v);
                insert_after(&mut rot[v], y, u);
                if place(rot, rest) {
                    return true;
                }
                remove_edge(rot, u, v);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use flexcolor_core::catalog;

    #[test]
    fn triangulations_are_plane_and_maximal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..30 {
            let g = PlaneGraph::build(random_triangulation(&mut rng, n)).unwrap();
            assert_eq!(g.edge_count(), 3 * n - 6);
            assert!((0..g.face_count()).all(|f| g.face_degree(f) == 3));
        }
    }

    #[test]
    fn flips_keep_a_triangulation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut rot = random_triangulation(&mut rng, 20);
        for _ in 0..200 {
            let es = edge_list(&rot);
            let (a, b) = es[rng.gen_range(0..es.len())];
            flip(&mut rot, a, b);
        }
        let g = PlaneGraph::build(rot).unwrap();
        assert_eq!(g.edge_count(), 54);
        assert!((0..g.face_count()).all(|f| g.face_degree(f) == 3));
    }

    #[test]
    fn same_seed_same_corpus() {
        let spec = CorpusSpec::random(10, 4, 25, Some(Class::H1), 99);
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let other = CorpusSpec { seed: 100, ..spec.clone() };
        assert_ne!(generate(&spec).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn class_filter_holds() {
        for class in [Class::H1, Class::H2] {
            for g in generate(&CorpusSpec::random(20, 5, 30, Some(class), 1)).unwrap() {
                assert!(is_class_member(&g, class));
            }
        }
    }

    #[test]
    fn derived_graphs() {
        let oct = SimpleGraph::from_graph(&catalog::octahedron());
        let oct = embed(&oct).unwrap();
        let cubocta = PlaneGraph::build(medial(&oct)).unwrap();
        assert_eq!((cubocta.vertex_count(), cubocta.face_count()), (12, 14));
        let rhombi = PlaneGraph::build(expansion(&oct)).unwrap();
        assert_eq!((rhombi.vertex_count(), rhombi.edge_count(), rhombi.face_count()), (24, 48, 26));
        assert_eq!(rhombi.min_degree(), Some(4));
        assert!(is_class_member(&rhombi, Class::H1));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut ico = random_triangulation(&mut rng, 12);
        assert!(raise_min_degree(&mut rng, &mut ico, 5));
        let icosidodeca = PlaneGraph::build(medial(&ico)).unwrap();
        assert_eq!(icosidodeca.vertex_count(), 30);
        assert!(is_class_member(&icosidodeca, Class::H2));
    }

    #[test]
    fn dense_members_appear() {
        for class in [Class::H1, Class::H2] {
            let corpus = generate(&CorpusSpec::random(40, 4, 60, Some(class), 11)).unwrap();
            assert!(corpus.iter().any(|g| g.min_degree() >= Some(4)), "{class}");
        }
    }

    #[test]
    fn embeds_planar_graphs_only() {
        let k5 = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(embed(&k5).is_none());
        let k33 = SimpleGraph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert!(embed(&k33).is_none());
        for g in [catalog::octahedron(), catalog::cube(), catalog::prism()] {
            let rot = embed(&SimpleGraph::from_graph(&g)).unwrap();
            assert_eq!(PlaneGraph::build(rot).unwrap().face_count(), g.face_count());
        }
    }

    #[test]
    fn exhaustive_counts() {
        // connected planar graphs on 1..=5 vertices: 1, 1, 2, 6, 20
        let spec = CorpusSpec {
            generator: Generator::ExhaustiveSmall,
            count: usize::MAX,
            min_vertices: 1,
            max_vertices: 5,
            class: None,
            seed: 0,
        };
        assert_eq!(generate(&spec).unwrap().len(), 30);
    }
}
