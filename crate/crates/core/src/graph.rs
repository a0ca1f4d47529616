//! Abstract simple graphs and the traversal helpers shared by every module.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

/// Read-only access to a simple undirected graph on vertices `0..vertex_count()`.
pub trait Graph {
    fn vertex_count(&self) -> usize;

    /// Neighbors of `v`. Order is implementation defined (rotation order for
    /// plane graphs, ascending for [`SimpleGraph`]).
    fn neighbors(&self, v: usize) -> &[usize];

    fn has_edge(&self, u: usize, v: usize) -> bool;

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    fn min_degree(&self) -> Option<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).min()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} given twice")]
    DuplicateEdge(usize, usize),
}

/// Adjacency-list graph with sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Copies any graph into sorted adjacency form.
    pub fn from_graph<G: Graph + ?Sized>(g: &G) -> Self {
        let adj = (0..g.vertex_count())
            .map(|v| {
                let mut ns = g.neighbors(v).to_vec();
                ns.sort_unstable();
                ns
            })
            .collect();
        Self { adj }
    }

    /// Subgraph of `g` induced by `vertices`; local vertex `i` is `vertices[i]`.
    pub fn induced<G: Graph + ?Sized>(g: &G, vertices: &[usize]) -> Self {
        let mut local = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .map(|&u| local[u])
                    .filter(|&u| u != usize::MAX)
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Self { adj }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u, v)),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }
}

impl Graph for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components<G: Graph + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected<G: Graph + ?Sized>(g: &G) -> bool {
    g.vertex_count() > 0 && components(g).len() == 1
}

/// Vertex sets of the blocks (maximal 2-connected subgraphs, bridges and
/// isolated vertices) of `g`. Each set is sorted.
pub fn blocks<G: Graph + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            out.push(vec![root]);
            continue;
        }
        frames.push((root, UNSEEN, 0));
        while let Some(top) = frames.last_mut() {
            let (v, parent, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[i];
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}
