//! Combinatorial plane graphs.
//!
//! A [`PlaneGraph`] is given by its rotation system: for every vertex the
//! clockwise cyclic order of its neighbors. Faces are never part of the input;
//! they are traced from darts with the rule
//! `next(u -> v) = v -> (successor of u in the rotation at v)`, so every dart
//! lies on exactly one face walk and a bridge contributes two darts to the same
//! face.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::graph::{components, Graph, SimpleGraph};

/// Directed copy of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

/// A face, stored as its closed boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    boundary: Vec<Dart>,
}

impl Face {
    pub fn boundary(&self) -> &[Dart] {
        &self.boundary
    }

    /// Length of the boundary walk; bridges count twice.
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    /// Vertices in walk order, with repetitions for cut vertices.
    pub fn walk_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|d| d.tail)
    }

    /// Distinct boundary vertices, sorted.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.walk_vertices().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("a plane graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    VertexOutOfRange { vertex: usize, neighbor: usize },
    #[error("not simple: loop at vertex {0}")]
    SelfLoop(usize),
    #[error("not simple: vertex {vertex} lists neighbor {neighbor} twice")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("inconsistent rotation: {0} lists {1} but {1} does not list {0}")]
    InconsistentRotation(usize, usize),
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("rotation system is not planar: traced {faces} faces, Euler requires {expected}")]
    NotPlanar { faces: usize, expected: usize },
}

/// Connected simple graph with a planar rotation system and traced faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    sorted: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    dart_tail: Vec<usize>,
    /// Position of the tail inside the head's rotation, per dart.
    reverse_pos: Vec<usize>,
    dart_face: Vec<usize>,
    faces: Vec<Face>,
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise neighbor cycles and traces its faces.
    pub fn build(rotation: Vec<Vec<usize>>) -> Result<Self, PlaneError> {
        let n = rotation.len();
        if n == 0 {
            return Err(PlaneError::Empty);
        }
        let mut sorted = Vec::with_capacity(n);
        for (v, ns) in rotation.iter().enumerate() {
            let mut s = ns.clone();
            s.sort_unstable();
            for (i, &u) in s.iter().enumerate() {
                if u >= n {
                    return Err(PlaneError::VertexOutOfRange { vertex: v, neighbor: u });
                }
                if u == v {
                    return Err(PlaneError::SelfLoop(v));
                }
                if i > 0 && s[i - 1] == u {
                    return Err(PlaneError::RepeatedNeighbor { vertex: v, neighbor: u });
                }
            }
            sorted.push(s);
        }
        for (v, ns) in rotation.iter().enumerate() {
            for &u in ns {
                if sorted[u].binary_search(&v).is_err() {
                    return Err(PlaneError::InconsistentRotation(v, u));
                }
            }
        }
        let comps = components(&SimpleGraph::from_graph(&RotationView(&rotation)));
        if comps.len() > 1 {
            return Err(PlaneError::Disconnected(comps.len()));
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for ns in &rotation {
            offsets.push(total);
            total += ns.len();
        }
        offsets.push(total);

        let mut dart_tail = Vec::with_capacity(total);
        for (v, ns) in rotation.iter().enumerate() {
            dart_tail.extend(core::iter::repeat_n(v, ns.len()));
        }
        let mut reverse_pos = vec![0; total];
        for (v, ns) in rotation.iter().enumerate() {
            for (i, &u) in ns.iter().enumerate() {
                let j = rotation[u].iter().position(|&w| w == v).expect("checked symmetric");
                reverse_pos[offsets[v] + i] = j;
            }
        }

        let mut g = PlaneGraph {
            rotation,
            sorted,
            offsets,
            dart_tail,
            reverse_pos,
            dart_face: vec![usize::MAX; total],
            faces: Vec::new(),
        };
        g.trace_faces();

        let edges = total / 2;
        let expected = 2 + edges - n;
        if g.faces.len() != expected {
            return Err(PlaneError::NotPlanar { faces: g.faces.len(), expected });
        }
        Ok(g)
    }

    /// Builds the embedding of a straight-line drawing with integer
    /// coordinates; neighbors are ordered clockwise by angle.
    pub fn from_straight_line(
        coords: &[(i64, i64)],
        edges: &[(usize, usize)],
    ) -> Result<Self, PlaneError> {
        let n = coords.len();
        let mut rotation = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(PlaneError::VertexOutOfRange { vertex: u.min(v), neighbor: u.max(v) });
            }
            rotation[u].push(v);
            rotation[v].push(u);
        }
        for (v, ns) in rotation.iter_mut().enumerate() {
            let origin = coords[v];
            ns.sort_by(|&a, &b| {
                let da = (coords[a].0 - origin.0, coords[a].1 - origin.1);
                let db = (coords[b].0 - origin.0, coords[b].1 - origin.1);
                // descending angle = clockwise
                angle_cmp(db, da)
            });
        }
        Self::build(rotation)
    }

    fn trace_faces(&mut self) {
        let total = self.dart_face.len();
        if total == 0 {
            self.faces.push(Face { boundary: Vec::new() });
            return;
        }
        for start in 0..total {
            if self.dart_face[start] != usize::MAX {
                continue;
            }
            let id = self.faces.len();
            let mut boundary = Vec::new();
            let mut d = start;
            loop {
                self.dart_face[d] = id;
                boundary.push(self.dart(d));
                d = self.next_dart_id(d);
                if d == start {
                    break;
                }
            }
            self.faces.push(Face { boundary });
        }
    }

    fn dart(&self, id: usize) -> Dart {
        let tail = self.dart_tail[id];
        Dart { tail, head: self.rotation[tail][id - self.offsets[tail]] }
    }

    fn dart_id(&self, d: Dart) -> usize {
        let i = self.rotation[d.tail]
            .iter()
            .position(|&u| u == d.head)
            .expect("dart must be an edge");
        self.offsets[d.tail] + i
    }

    fn next_dart_id(&self, id: usize) -> usize {
        let Dart { head, .. } = self.dart(id);
        let deg = self.rotation[head].len();
        let j = (self.reverse_pos[id] + 1) % deg;
        self.offsets[head] + j
    }

    /// The dart following `d` on its face walk.
    pub fn next_dart(&self, d: Dart) -> Dart {
        self.dart(self.next_dart_id(self.dart_id(d)))
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.faces[f].degree()
    }

    /// Face containing dart `d`.
    pub fn face_of(&self, d: Dart) -> usize {
        self.dart_face[self.dart_id(d)]
    }

    /// Faces at the corners of `v`, one per outgoing dart in rotation order.
    /// A face meeting `v` in several corners appears several times.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        (self.offsets[v]..self.offsets[v + 1]).map(|d| self.dart_face[d]).collect()
    }

    /// Distinct faces incident with `v`, sorted.
    pub fn incident_faces(&self, v: usize) -> Vec<usize> {
        let mut fs = self.faces_at(v);
        if fs.is_empty() {
            // isolated vertex of a one-vertex graph sits in the single face
            fs.push(0);
        }
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    /// Number of faces of degree `k` incident with `v`.
    pub fn f_k(&self, v: usize, k: usize) -> usize {
        self.incident_faces(v).into_iter().filter(|&f| self.face_degree(f) == k).count()
    }

    /// Number of 3-faces incident with `v`.
    pub fn f3(&self, v: usize) -> usize {
        self.f_k(v, 3)
    }

    /// Number of `k`-vertices on the boundary walk of `f`, with multiplicity.
    pub fn n_k(&self, f: usize, k: usize) -> usize {
        self.faces[f].walk_vertices().filter(|&v| self.degree(v) == k).count()
    }

    /// Euler characteristic `|V| - |E| + |F|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// Removes `removed` and returns the connected components of what is left,
    /// each with inherited rotations and re-traced faces.
    pub fn delete_vertices(&self, removed: &[usize]) -> Vec<PlaneComponent> {
        let n = self.vertex_count();
        let mut keep = vec![true; n];
        for &x in removed {
            keep[x] = false;
        }
        let kept: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        let sub = SimpleGraph::induced(self, &kept);
        components(&sub)
            .into_iter()
            .map(|comp| {
                let original: Vec<usize> = comp.iter().map(|&i| kept[i]).collect();
                let mut local = vec![usize::MAX; n];
                for (i, &v) in original.iter().enumerate() {
                    local[v] = i;
                }
                let rotation = original
                    .iter()
                    .map(|&v| {
                        self.rotation[v]
                            .iter()
                            .filter(|&&u| local[u] != usize::MAX)
                            .map(|&u| local[u])
                            .collect()
                    })
                    .collect();
                let graph = PlaneGraph::build(rotation)
                    .expect("subgraph of a plane graph inherits a planar embedding");
                PlaneComponent { graph, original }
            })
            .collect()
    }
}

/// A connected piece of a plane graph together with its original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneComponent {
    pub graph: PlaneGraph,
    /// `original[i]` is the id in the parent graph of local vertex `i`.
    pub original: Vec<usize>,
}

impl Graph for PlaneGraph {
    fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sorted[u].binary_search(&v).is_ok()
    }
}

struct RotationView<'a>(&'a [Vec<usize>]);

impl Graph for RotationView<'_> {
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

/// Counter-clockwise angle order of direction vectors, starting at the
/// positive x axis.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |p: (i64, i64)| if p.1 > 0 || (p.1 == 0 && p.0 > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.cmp(&cross)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn k4_has_four_triangles() {
        let g = catalog::k4();
        assert_eq!(g.face_count(), 4);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
        for v in 0..4 {
            assert_eq!(g.faces_at(v).len(), 3);
            assert_eq!(g.f3(v), 3);
        }
        assert_eq!(g.n_k(0, 3), 3);
    }

    #[test]
    fn dodecahedron_has_twelve_pentagons() {
        let g = catalog::dodecahedron();
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(g.face_count(), 12);
        assert!((0..12).all(|f| g.face_degree(f) == 5));
    }

    #[test]
    fn single_edge_face_counts_bridge_twice() {
        let g = catalog::path(2);
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face_degree(0), 2);
        assert_eq!(g.n_k(0, 1), 2);
    }

    #[test]
    fn octahedron_queries() {
        let g = catalog::octahedron();
        assert_eq!(g.face_count(), 8);
        for v in 0..6 {
            assert_eq!(g.degree(v), 4);
            assert_eq!(g.f3(v), 4);
        }
        assert!((0..8).all(|f| g.n_k(f, 4) == 3));
    }

    #[test]
    fn cycle_has_no_triangles() {
        let g = catalog::cycle(5);
        assert_eq!(g.face_count(), 2);
        assert!((0..5).all(|v| g.f3(v) == 0));
    }

    #[test]
    fn single_vertex_has_one_face() {
        let g = PlaneGraph::build(vec![vec![]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.euler_characteristic(), 2);
        assert_eq!(g.incident_faces(0), vec![0]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(PlaneGraph::build(vec![]), Err(PlaneError::Empty));
        assert_eq!(PlaneGraph::build(vec![vec![0]]), Err(PlaneError::SelfLoop(0)));
        assert_eq!(
            PlaneGraph::build(vec![vec![1, 1], vec![0]]),
            Err(PlaneError::RepeatedNeighbor { vertex: 0, neighbor: 1 })
        );
        assert_eq!(
            PlaneGraph::build(vec![vec![1], vec![]]),
            Err(PlaneError::InconsistentRotation(0, 1))
        );
        assert_eq!(
            PlaneGraph::build(vec![vec![1], vec![0], vec![]]),
            Err(PlaneError::Disconnected(2))
        );
        assert_eq!(
            PlaneGraph::build(vec![vec![3], vec![0]]),
            Err(PlaneError::VertexOutOfRange { vertex: 0, neighbor: 3 })
        );
    }

    #[test]
    fn non_planar_rotation_is_rejected() {
        // K4 with one rotation reversed traces a torus embedding.
        let g = catalog::k4();
        let mut rot = g.rotations().to_vec();
        rot[0].reverse();
        rot[1].reverse();
        assert!(matches!(PlaneGraph::build(rot), Err(PlaneError::NotPlanar { .. })));
    }

    #[test]
    fn delete_vertices_examples() {
        let k3 = catalog::k4().delete_vertices(&[3]);
        assert_eq!(k3.len(), 1);
        assert_eq!(k3[0].graph.edge_count(), 3);
        assert_eq!(k3[0].graph.face_count(), 2);

        let p4 = catalog::cycle(5).delete_vertices(&[0]);
        assert_eq!(p4.len(), 1);
        assert_eq!(p4[0].original, vec![1, 2, 3, 4]);
        assert_eq!(p4[0].graph.edge_count(), 3);

        let leaves = catalog::star(3).delete_vertices(&[0]);
        assert_eq!(leaves.len(), 3);
        assert!(leaves.iter().all(|c| c.graph.vertex_count() == 1));
    }

    #[test]
    fn next_dart_walks_the_face() {
        let g = catalog::cycle(4);
        let d = Dart { tail: 0, head: 1 };
        let mut x = d;
        for _ in 0..4 {
            x = g.next_dart(x);
        }
        assert_eq!(x, d);
        assert_eq!(g.face_of(d), g.face_of(g.next_dart(d)));
    }
}
