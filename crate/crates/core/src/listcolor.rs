//! Exact list coloring.
//!
//! The solver compresses the colors that occur in the lists to dense indices
//! and runs a depth-first search with forward checking and a
//! most-constrained-vertex rule (ties: smallest vertex id; colors are tried
//! in ascending order). Domains live in a [`ColorSet`]; `u64` covers every
//! instance with at most 64 distinct colors and [`WideSet`] the rest.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{blocks, is_connected, Graph, SimpleGraph};
use crate::Rational;

/// Opaque color label.
pub type Color = u32;

/// A coloring assigns `coloring[v]` to vertex `v`.
pub type Coloring = Vec<Color>;

/// Per-vertex color lists, kept sorted and free of repeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<Color>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        Self { lists }
    }

    /// The same list at each of `n` vertices.
    pub fn uniform(n: usize, list: &[Color]) -> Self {
        Self::new(vec![list.to_vec(); n])
    }

    /// Lists from per-vertex bit masks (bit `c` set means color `c`).
    pub fn from_masks(masks: &[u64]) -> Self {
        let lists = masks
            .iter()
            .map(|&m| (0..64).filter(|c| m >> c & 1 == 1).collect())
            .collect();
        Self { lists }
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// Sorted union of all lists.
    pub fn palette(&self) -> Vec<Color> {
        let mut all: Vec<Color> = self.lists.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Lists restricted to `vertices` (local vertex `i` is `vertices[i]`).
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        Self { lists: vertices.iter().map(|&v| self.lists[v].clone()).collect() }
    }
}

/// Whether `coloring` is proper on `g` and draws every color from `l`.
pub fn is_l_coloring<G: Graph + ?Sized>(g: &G, l: &ListAssignment, coloring: &[Color]) -> bool {
    let n = g.vertex_count();
    coloring.len() == n
        && l.vertex_count() == n
        && (0..n).all(|v| l.contains(v, coloring[v]))
        && is_proper(g, coloring)
}

pub fn is_proper<G: Graph + ?Sized>(g: &G, coloring: &[Color]) -> bool {
    (0..g.vertex_count()).all(|v| g.neighbors(v).iter().all(|&u| coloring[u] != coloring[v]))
}

/// Set of dense color indices.
pub trait ColorSet: Clone {
    fn empty(universe: usize) -> Self;
    fn insert(&mut self, c: usize);
    fn remove(&mut self, c: usize);
    fn contains(&self, c: usize) -> bool;
    fn count(&self) -> u32;
    /// Smallest member that is `>= from`.
    fn next_from(&self, from: usize) -> Option<usize>;

    fn is_empty(&self) -> bool {
        self.count() == 0
    }
}

impl ColorSet for u64 {
    fn empty(universe: usize) -> Self {
        debug_assert!(universe <= 64);
        0
    }

    #[inline]
    fn insert(&mut self, c: usize) {
        *self |= 1 << c;
    }

    #[inline]
    fn remove(&mut self, c: usize) {
        *self &= !(1 << c);
    }

    #[inline]
    fn contains(&self, c: usize) -> bool {
        *self >> c & 1 == 1
    }

    #[inline]
    fn count(&self) -> u32 {
        self.count_ones()
    }

    #[inline]
    fn next_from(&self, from: usize) -> Option<usize> {
        if from >= 64 {
            return None;
        }
        let rest = *self >> from << from;
        (rest != 0).then(|| rest.trailing_zeros() as usize)
    }

    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
}

/// Color set of unbounded size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WideSet {
    words: Vec<u64>,
    count: u32,
}

impl ColorSet for WideSet {
    fn empty(universe: usize) -> Self {
        Self { words: vec![0; universe.div_ceil(64)], count: 0 }
    }

    fn insert(&mut self, c: usize) {
        if !self.contains(c) {
            self.words[c / 64] |= 1 << (c % 64);
            self.count += 1;
        }
    }

    fn remove(&mut self, c: usize) {
        if self.contains(c) {
            self.words[c / 64] &= !(1 << (c % 64));
            self.count -= 1;
        }
    }

    fn contains(&self, c: usize) -> bool {
        self.words.get(c / 64).is_some_and(|w| w >> (c % 64) & 1 == 1)
    }

    fn count(&self) -> u32 {
        self.count
    }

    fn next_from(&self, from: usize) -> Option<usize> {
        let mut i = from / 64;
        let mut w = *self.words.get(i)? >> (from % 64) << (from % 64);
        loop {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
            i += 1;
            w = *self.words.get(i)?;
        }
    }
}

/// Reusable exact solver for one graph. Domains are dense color indices.
///
/// Keeping the solver around avoids reallocating its level buffers, which
/// matters when millions of list systems are checked on the same graph.
#[derive(Debug, Clone)]
pub struct Solver<S: ColorSet = u64> {
    adj: Vec<Vec<usize>>,
    levels: Vec<S>,
    color: Vec<usize>,
    nodes: u64,
}

const UNCOLORED: usize = usize::MAX;

impl<S: ColorSet> Solver<S> {
    pub fn new<G: Graph + ?Sized>(g: &G) -> Self {
        let n = g.vertex_count();
        Self {
            adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
            levels: Vec::with_capacity((n + 1) * n),
            color: vec![UNCOLORED; n],
            nodes: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Search nodes visited since construction.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Finds a coloring with `color[v] ∈ domains[v]`, returned as dense
    /// indices in `self.coloring()`.
    pub fn solve(&mut self, domains: &[S]) -> bool {
        let n = self.adj.len();
        assert_eq!(domains.len(), n, "one domain per vertex");
        if n == 0 {
            return true;
        }
        self.levels.clear();
        self.levels.extend_from_slice(domains);
        self.levels.resize((n + 1) * n, domains[0].clone());
        self.color.iter_mut().for_each(|c| *c = UNCOLORED);
        if domains.iter().any(ColorSet::is_empty) {
            return false;
        }
        self.search(0, n)
    }

    /// Dense coloring found by the last successful [`Solver::solve`].
    pub fn coloring(&self) -> &[usize] {
        &self.color
    }

    fn search(&mut self, depth: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        self.nodes += 1;
        let n = self.adj.len();
        let base = depth * n;
        let mut v = UNCOLORED;
        let mut best = u32::MAX;
        for u in 0..n {
            if self.color[u] == UNCOLORED {
                let k = self.levels[base + u].count();
                if k < best {
                    best = k;
                    v = u;
                    if k <= 1 {
                        break;
                    }
                }
            }
        }
        if best == 0 {
            return false;
        }
        let mut next = 0;
        while let Some(c) = self.levels[base + v].next_from(next) {
            next = c + 1;
            let (cur, below) = self.levels.split_at_mut(base + n);
            let child = &mut below[..n];
            for (dst, src) in child.iter_mut().zip(&cur[base..base + n]) {
                dst.clone_from(src);
            }
            let mut dead = false;
            for &u in &self.adj[v] {
                if self.color[u] == UNCOLORED {
                    child[u].remove(c);
                    if child[u].is_empty() {
                        dead = true;
                        break;
                    }
                }
            }
            if dead {
                continue;
            }
            self.color[v] = c;
            if self.search(depth + 1, remaining - 1) {
                return true;
            }
            self.color[v] = UNCOLORED;
        }
        false
    }
}

/// Largest graph handled by [`SmallSolver`].
pub const SMALL_MAX_VERTICES: usize = 16;

/// Exact solver for graphs with at most [`SMALL_MAX_VERTICES`] vertices and
/// colors `0..64`.
///
/// Besides forward checking it defers every vertex whose domain is larger
/// than its number of uncolored neighbors: such a vertex can always be
/// colored after the rest, so it leaves the search. Deferred vertices are
/// colored in reverse order of deferral once the search succeeds.
///
/// After a success the coloring is kept as a warm start: the next call first
/// tries to repair it by recoloring only the vertices whose color left their
/// domain, which settles most of a stream of similar instances at once.
#[derive(Debug, Clone)]
pub struct SmallSolver {
    n: usize,
    warm: bool,
    adj: [u32; SMALL_MAX_VERTICES],
    color: [u8; SMALL_MAX_VERTICES],
    deferred: [(u8, u64); SMALL_MAX_VERTICES],
    deferred_len: usize,
}

impl SmallSolver {
    pub fn new<G: Graph + ?Sized>(g: &G) -> Self {
        let n = g.vertex_count();
        assert!(n <= SMALL_MAX_VERTICES, "graph too large for SmallSolver");
        let mut adj = [0u32; SMALL_MAX_VERTICES];
        for (v, row) in adj.iter_mut().enumerate().take(n) {
            *row = g.neighbors(v).iter().fold(0, |acc, &u| acc | 1 << u);
        }
        Self {
            n,
            warm: false,
            adj,
            color: [0; SMALL_MAX_VERTICES],
            deferred: [(0, 0); SMALL_MAX_VERTICES],
            deferred_len: 0,
        }
    }

    /// Whether some coloring has `color[v] ∈ domains[v]` (bit masks).
    pub fn solve(&mut self, domains: &[u64]) -> bool {
        assert_eq!(domains.len(), self.n, "one domain per vertex");
        if self.warm && self.repair(domains) {
            return true;
        }
        let mut dom = [0u64; SMALL_MAX_VERTICES];
        dom[..self.n].copy_from_slice(domains);
        self.deferred_len = 0;
        let active = (1u32 << self.n) - 1;
        self.warm = false;
        if !self.search(dom, active) {
            return false;
        }
        self.warm = true;
        let mut colored = active;
        for &(v, _) in &self.deferred[..self.deferred_len] {
            colored &= !(1 << v);
        }
        for i in (0..self.deferred_len).rev() {
            let (v, saved) = self.deferred[i];
            let v = v as usize;
            let mut free = saved;
            let mut nbrs = self.adj[v] & colored;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                free &= !(1u64 << self.color[u]);
            }
            debug_assert!(free != 0, "deferred vertex has a free color");
            self.color[v] = free.trailing_zeros() as u8;
            colored |= 1 << v;
        }
        true
    }

    /// Recolors, one at a time, the vertices whose previous color is no longer
    /// allowed; gives up as soon as one of them has no free color.
    fn repair(&mut self, domains: &[u64]) -> bool {
        let mut stale = 0u32;
        for (v, &d) in domains.iter().enumerate() {
            if d >> self.color[v] & 1 == 0 {
                stale |= 1 << v;
            }
        }
        while stale != 0 {
            let v = stale.trailing_zeros() as usize;
            stale &= stale - 1;
            let mut free = domains[v];
            let mut nbrs = self.adj[v] & !stale;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                free &= !(1u64 << self.color[u]);
            }
            if free == 0 {
                self.warm = false;
                return false;
            }
            self.color[v] = free.trailing_zeros() as u8;
        }
        true
    }

    /// Coloring (as color bit indices) found by the last successful solve.
    pub fn coloring(&self) -> &[u8] {
        &self.color[..self.n]
    }

    fn search(&mut self, dom: [u64; SMALL_MAX_VERTICES], mut active: u32) -> bool {
        let mark = self.deferred_len;
        loop {
            let mut changed = false;
            let mut rest = active;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if dom[v].count_ones() > (self.adj[v] & active).count_ones() {
                    active &= !(1 << v);
                    self.deferred[self.deferred_len] = (v as u8, dom[v]);
                    self.deferred_len += 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if active == 0 {
            return true;
        }
        let mut v = 0;
        let mut best = u32::MAX;
        let mut rest = active;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let k = dom[u].count_ones();
            if k < best {
                best = k;
                v = u;
            }
        }
        if best == 0 {
            self.deferred_len = mark;
            return false;
        }
        let remaining = active & !(1 << v);
        let mut choices = dom[v];
        while choices != 0 {
            let c = choices.trailing_zeros();
            choices &= choices - 1;
            let bit = 1u64 << c;
            let mut child = dom;
            let mut nbrs = self.adj[v] & remaining;
            let mut dead = false;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                child[u] &= !bit;
                if child[u] == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            self.color[v] = c as u8;
            if self.search(child, remaining) {
                return true;
            }
        }
        self.deferred_len = mark;
        false
    }
}

/// Lists re-expressed over dense indices into the sorted palette.
struct Dense {
    palette: Vec<Color>,
    lists: Vec<Vec<usize>>,
}

impl Dense {
    fn new(l: &ListAssignment) -> Self {
        let palette = l.palette();
        let lists = l
            .lists()
            .iter()
            .map(|list| {
                list.iter().map(|c| palette.binary_search(c).expect("palette member")).collect()
            })
            .collect();
        Self { palette, lists }
    }

    fn domains<S: ColorSet>(&self) -> Vec<S> {
        self.lists
            .iter()
            .map(|list| {
                let mut s = S::empty(self.palette.len());
                for &c in list {
                    s.insert(c);
                }
                s
            })
            .collect()
    }
}

fn solve_dense<S: ColorSet, G: Graph + ?Sized>(g: &G, dense: &Dense) -> Option<Coloring> {
    let mut solver = Solver::<S>::new(g);
    solver
        .solve(&dense.domains::<S>())
        .then(|| solver.coloring().iter().map(|&c| dense.palette[c]).collect())
}

/// An `L`-coloring of `g`, or `None` when none exists.
pub fn find_l_coloring<G: Graph + ?Sized>(g: &G, l: &ListAssignment) -> Option<Coloring> {
    assert_eq!(l.vertex_count(), g.vertex_count(), "one list per vertex");
    let dense = Dense::new(l);
    if dense.palette.len() <= 64 && g.vertex_count() <= SMALL_MAX_VERTICES {
        let mut solver = SmallSolver::new(g);
        return solver
            .solve(&dense.domains::<u64>())
            .then(|| solver.coloring().iter().map(|&c| dense.palette[c as usize]).collect());
    }
    if dense.palette.len() <= 64 {
        solve_dense::<u64, G>(g, &dense)
    } else {
        solve_dense::<WideSet, G>(g, &dense)
    }
}

/// Sufficient condition for `L`-colorability of a connected graph: every
/// list is at least as long as the degree, and either some list is longer
/// or some block is neither complete nor an odd cycle.
pub fn degree_colorable_guarantee<G: Graph + ?Sized>(g: &G, l: &ListAssignment) -> bool {
    let sizes = l.sizes();
    degree_colorable_guarantee_sizes(g, &sizes)
}

/// [`degree_colorable_guarantee`] on list sizes alone.
pub fn degree_colorable_guarantee_sizes<G: Graph + ?Sized>(g: &G, sizes: &[usize]) -> bool {
    let n = g.vertex_count();
    if !is_connected(g) || (0..n).any(|v| sizes[v] < g.degree(v)) {
        return false;
    }
    (0..n).any(|v| sizes[v] > g.degree(v)) || has_non_gallai_block(g)
}

/// Whether some block is neither complete nor an odd cycle.
pub fn has_non_gallai_block<G: Graph + ?Sized>(g: &G) -> bool {
    blocks(g).iter().any(|b| !is_complete_or_odd_cycle(g, b))
}

fn is_complete_or_odd_cycle<G: Graph + ?Sized>(g: &G, block: &[usize]) -> bool {
    let k = block.len();
    let h = SimpleGraph::induced(g, block);
    let m = h.edge_count();
    let complete = m == k * (k - 1) / 2;
    let odd_cycle = k >= 3 && k % 2 == 1 && m == k && (0..k).all(|v| h.degree(v) == 2);
    complete || odd_cycle
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("order is not a permutation of the vertices")]
    InvalidOrder,
    #[error("fixed binding ({vertex}, {color}) conflicts with the lists or another binding")]
    FixedConflict { vertex: usize, color: Color },
}

/// Colors vertices in `order` with the smallest available color; vertices in
/// `fixed` keep their bound color. `Ok(None)` when some vertex gets stuck.
pub fn greedy_color_in_order<G: Graph + ?Sized>(
    g: &G,
    l: &ListAssignment,
    order: &[usize],
    fixed: &[(usize, Color)],
) -> Result<Option<Coloring>, GreedyError> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(GreedyError::InvalidOrder);
    }
    for &v in order {
        if v >= n || seen[v] {
            return Err(GreedyError::InvalidOrder);
        }
        seen[v] = true;
    }
    let mut bound: Vec<Option<Color>> = vec![None; n];
    for &(v, c) in fixed {
        let conflict = v >= n
            || !l.contains(v, c)
            || bound[v].is_some_and(|b| b != c)
            || g.neighbors(v).iter().any(|&u| bound[u] == Some(c));
        if conflict {
            return Err(GreedyError::FixedConflict { vertex: v, color: c });
        }
        bound[v] = Some(c);
    }
    let mut coloring: Vec<Option<Color>> = bound.clone();
    for &v in order {
        if bound[v].is_some() {
            continue;
        }
        let pick = l
            .list(v)
            .iter()
            .copied()
            .find(|&c| g.neighbors(v).iter().all(|&u| coloring[u] != Some(c)));
        match pick {
            Some(c) => coloring[v] = Some(c),
            None => return Ok(None),
        }
    }
    Ok(Some(coloring.into_iter().map(|c| c.expect("all colored")).collect()))
}

/// An `L`-coloring maximising `Σ weight(v, φ(v))`, with its value. Among
/// optimal colorings the lexicographically smallest (by vertex id, then
/// color) is returned. `None` when `g` has no `L`-coloring.
pub fn max_weight_coloring<G, W>(g: &G, l: &ListAssignment, weight: W) -> Option<(Coloring, Rational)>
where
    G: Graph + ?Sized,
    W: Fn(usize, Color) -> Rational,
{
    let n = g.vertex_count();
    assert_eq!(l.vertex_count(), n, "one list per vertex");
    let dense = Dense::new(l);
    let table: Vec<Vec<Rational>> = (0..n)
        .map(|v| dense.palette.iter().map(|&c| weight(v, c)).collect())
        .collect();
    let mut search = WeightSearch {
        adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
        table,
        color: vec![UNCOLORED; n],
        best: None,
        ceiling: Rational::from_integer(0),
    };
    if dense.palette.len() <= 64 {
        search.run::<u64>(&dense)
    } else {
        search.run::<WideSet>(&dense)
    }
    .map(|(c, w)| (c.iter().map(|&i| dense.palette[i]).collect(), w))
}

struct WeightSearch {
    adj: Vec<Vec<usize>>,
    table: Vec<Vec<Rational>>,
    color: Vec<usize>,
    best: Option<(Vec<usize>, Rational)>,
    ceiling: Rational,
}

impl WeightSearch {
    fn run<S: ColorSet>(&mut self, dense: &Dense) -> Option<(Vec<usize>, Rational)> {
        let domains = dense.domains::<S>();
        if domains.iter().any(ColorSet::is_empty) {
            return None;
        }
        self.ceiling = self.upper(&domains, 0);
        self.go(0, &domains, Rational::from_integer(0));
        self.best.take()
    }

    fn max_in<S: ColorSet>(&self, v: usize, dom: &S) -> Rational {
        let mut best: Option<Rational> = None;
        let mut next = 0;
        while let Some(c) = dom.next_from(next) {
            next = c + 1;
            let w = self.table[v][c];
            if best.is_none_or(|b| w > b) {
                best = Some(w);
            }
        }
        best.unwrap_or_default()
    }

    fn upper<S: ColorSet>(&self, domains: &[S], from: usize) -> Rational {
        (from..domains.len()).map(|v| self.max_in(v, &domains[v])).sum()
    }

    /// Returns true once the global ceiling is reached.
    fn go<S: ColorSet>(&mut self, v: usize, domains: &[S], acc: Rational) -> bool {
        let n = domains.len();
        if v == n {
            if self.best.as_ref().is_none_or(|(_, b)| acc > *b) {
                self.best = Some((self.color.clone(), acc));
            }
            return acc == self.ceiling;
        }
        if let Some((_, b)) = &self.best {
            if acc + self.upper(domains, v) <= *b {
                return false;
            }
        }
        let mut next = 0;
        while let Some(c) = domains[v].next_from(next) {
            next = c + 1;
            let mut child = domains.to_vec();
            let mut dead = false;
            for &u in &self.adj[v] {
                if u > v {
                    child[u].remove(c);
                    dead |= child[u].is_empty();
                }
            }
            if dead {
                continue;
            }
            self.color[v] = c;
            let w = self.table[v][c];
            if self.go(v + 1, &child, acc + w) {
                return true;
            }
        }
        self.color[v] = UNCOLORED;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> SimpleGraph {
        SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    /// Exhaustive reference: tries every tuple of list entries.
    fn brute_colorable(g: &SimpleGraph, l: &ListAssignment) -> bool {
        let n = g.vertex_count();
        let mut idx = vec![0usize; n];
        if l.lists().iter().any(|x| x.is_empty()) {
            return false;
        }
        loop {
            let col: Vec<Color> = (0..n).map(|v| l.list(v)[idx[v]]).collect();
            if is_proper(g, &col) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                idx[i] += 1;
                if idx[i] < l.list(i).len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn k3_examples() {
        let l = ListAssignment::new(vec![vec![1, 2], vec![2, 3], vec![1, 3]]);
        let c = find_l_coloring(&k3(), &l).unwrap();
        assert!(is_l_coloring(&k3(), &l, &c));
        assert_eq!(find_l_coloring(&k3(), &ListAssignment::uniform(3, &[1, 2])), None);
    }

    #[test]
    fn wide_palettes_use_the_wide_path() {
        let g = cycle(5);
        let lists: Vec<Vec<Color>> = (0..5).map(|v| vec![100 * v as Color, 1000]).collect();
        let mut lists = lists;
        lists.push((0..70).collect());
        let mut g2 = g.clone();
        let extra = g2.add_vertex();
        g2.add_edge(0, extra).unwrap();
        let l = ListAssignment::new(lists);
        let c = find_l_coloring(&g2, &l).unwrap();
        assert!(is_l_coloring(&g2, &l, &c));
    }

    #[test]
    fn wide_set_operations() {
        let mut s = WideSet::empty(200);
        for c in [3, 64, 130, 199] {
            s.insert(c);
        }
        s.insert(64);
        assert_eq!(s.count(), 4);
        assert_eq!(s.next_from(4), Some(64));
        assert_eq!(s.next_from(131), Some(199));
        s.remove(199);
        assert_eq!(s.next_from(131), None);
        assert!(s.contains(130) && !s.contains(131));
    }

    #[test]
    fn solver_agrees_with_brute_force() {
        // all lists of size <= 2 from {0,1,2} on C4, C5, K3+pendant
        let graphs = [
            cycle(4),
            cycle(5),
            SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
        ];
        let subsets: Vec<Vec<Color>> =
            vec![vec![0], vec![1], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]];
        for g in &graphs {
            let n = g.vertex_count();
            let mut reused = SmallSolver::new(g);
            let total = subsets.len().pow(n as u32);
            for mut code in 0..total {
                let lists: Vec<_> = (0..n)
                    .map(|_| {
                        let s = subsets[code % subsets.len()].clone();
                        code /= subsets.len();
                        s
                    })
                    .collect();
                let l = ListAssignment::new(lists);
                let masks: Vec<u64> =
                    l.lists().iter().map(|x| x.iter().fold(0, |a, &c| a | 1 << c)).collect();
                let mut generic = Solver::<u64>::new(g);
                assert_eq!(generic.solve(&masks), brute_colorable(g, &l));
                if reused.solve(&masks) {
                    let col: Vec<Color> = reused.coloring().iter().map(|&c| c as Color).collect();
                    assert!(is_l_coloring(g, &l, &col));
                } else {
                    assert!(!brute_colorable(g, &l));
                }
                let found = find_l_coloring(g, &l);
                assert_eq!(found.is_some(), brute_colorable(g, &l));
                if let Some(c) = found {
                    assert!(is_l_coloring(g, &l, &c));
                }
            }
        }
    }

    #[test]
    fn guarantee_examples() {
        assert!(degree_colorable_guarantee(&cycle(4), &ListAssignment::uniform(4, &[0, 1])));
        assert!(!degree_colorable_guarantee(&k3(), &ListAssignment::uniform(3, &[0, 1])));
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let l = ListAssignment::new(vec![vec![0], vec![0, 1], vec![1]]);
        assert!(!degree_colorable_guarantee(&p3, &l));
        // slack at one vertex suffices
        let l = ListAssignment::new(vec![vec![0, 1, 2], vec![0, 1], vec![0, 1]]);
        assert!(degree_colorable_guarantee(&k3(), &l));
        // disconnected graphs never qualify
        let two = SimpleGraph::empty(2);
        assert!(!degree_colorable_guarantee(&two, &ListAssignment::uniform(2, &[0])));
    }

    #[test]
    fn greedy_examples() {
        let l = ListAssignment::new(vec![vec![1], vec![1, 2], vec![1, 2, 3]]);
        assert_eq!(greedy_color_in_order(&k3(), &l, &[0, 1, 2], &[]).unwrap(), Some(vec![1, 2, 3]));
        let l = ListAssignment::uniform(3, &[1, 2]);
        assert_eq!(greedy_color_in_order(&k3(), &l, &[2, 0, 1], &[]).unwrap(), None);
        let tree = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let l = ListAssignment::uniform(4, &[1, 2]);
        assert!(greedy_color_in_order(&tree, &l, &[1, 0, 2, 3], &[]).unwrap().is_some());
        assert_eq!(
            greedy_color_in_order(&k3(), &l, &[0, 1], &[]),
            Err(GreedyError::InvalidOrder)
        );
        assert_eq!(
            greedy_color_in_order(&k3(), &l, &[0, 1, 2], &[(0, 1), (1, 1)]),
            Err(GreedyError::FixedConflict { vertex: 1, color: 1 })
        );
        let fixed = greedy_color_in_order(&tree, &l, &[0, 1, 2, 3], &[(1, 1)]).unwrap().unwrap();
        assert_eq!(fixed, vec![2, 1, 2, 2]);
    }

    #[test]
    fn max_weight_on_triangle() {
        let l = ListAssignment::uniform(3, &[0, 1, 2]);
        let (c, w) = max_weight_coloring(&k3(), &l, |_, c| {
            Rational::from_integer(i64::from(c == 0))
        })
        .unwrap();
        assert_eq!(w, Rational::from_integer(1));
        assert_eq!(c, vec![0, 1, 2]);
        assert!(max_weight_coloring(&k3(), &ListAssignment::uniform(3, &[0, 1]), |_, _| {
            Rational::from_integer(1)
        })
        .is_none());
    }

    #[test]
    fn max_weight_prefers_heavier_pairs() {
        let edge = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        let l = ListAssignment::uniform(2, &[0, 1]);
        let (c, w) = max_weight_coloring(&edge, &l, |v, c| match (v, c) {
            (0, 0) => Rational::new(1, 3),
            (1, 0) => Rational::new(1, 2),
            _ => Rational::from_integer(0),
        })
        .unwrap();
        assert_eq!(c, vec![1, 0]);
        assert_eq!(w, Rational::new(1, 2));
    }
}
