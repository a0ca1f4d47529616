//! Small connected graphs up to isomorphism.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use core::ops::ControlFlow;

use crate::graph::{is_connected, Graph, SimpleGraph};
use crate::listcolor::{degree_colorable_guarantee_sizes, ListAssignment, SmallSolver};
use crate::reducible::{for_each_canonical_system, ReducibleError};

/// Adjacency bit rows (row `v` has bit `u` set for every edge `uv`).
fn rows<G: Graph + ?Sized>(g: &G) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0, |acc, &u| acc | 1 << u))
        .collect()
}

/// Canonical form of a graph on at most 16 vertices: the lexicographically
/// smallest upper-triangle bit string over all relabelings that list vertices
/// by non-increasing degree. Two graphs are isomorphic iff their forms agree.
pub fn canonical_form<G: Graph + ?Sized>(g: &G) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n <= 16, "canonical form supports at most 16 vertices");
    let adj = rows(g);
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    // position i may hold vertices whose degree equals the i-th largest
    let mut sorted = degree.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut best: Option<Vec<u64>> = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(&adj, &degree, &sorted, &mut perm, &mut used, &mut best);
    let mut out = best.unwrap_or_default();
    out.insert(0, n as u64);
    out
}

fn encode(adj: &[u32], perm: &[usize]) -> Vec<u64> {
    let n = perm.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = 0u64;
        for j in 0..i {
            row = row << 1 | u64::from(adj[perm[i]] >> perm[j] & 1);
        }
        out.push(row);
    }
    out
}

fn search(
    adj: &[u32],
    degree: &[usize],
    sorted: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut Option<Vec<u64>>,
) {
    let i = perm.len();
    if let Some(b) = best.as_ref() {
        // prune on the prefix of rows already fixed
        let prefix = encode(adj, perm);
        if prefix.as_slice() > &b[..i] {
            return;
        }
    }
    if i == adj.len() {
        let code = encode(adj, perm);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    for v in 0..adj.len() {
        if !used[v] && degree[v] == sorted[i] {
            used[v] = true;
            perm.push(v);
            search(adj, degree, sorted, perm, used, best);
            perm.pop();
            used[v] = false;
        }
    }
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in order of canonical form.
pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=7).contains(&n), "supported for 1..=7 vertices");
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        let edges: Vec<_> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = SimpleGraph::from_edges(n, &edges).expect("distinct pairs");
        if !is_connected(&g) {
            continue;
        }
        if seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    out.sort_by_cached_key(canonical_form);
    out
}

/// Connected graphs on `1..=max_n` vertices, grouped by vertex count.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<SimpleGraph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// Outcome of checking the degree-colorability guarantee on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuaranteeCheck {
    /// Whether the guarantee applies to lists with `|L(u)| = deg(u)`.
    pub guaranteed: bool,
    /// Canonical systems solved (zero when the guarantee does not apply).
    pub systems: u64,
    /// A system the guarantee covers but the solver cannot color.
    pub counterexample: Option<ListAssignment>,
}

/// Solves every canonical list system with `|L(u)| = deg(u)` on `g` when the
/// degree-colorability guarantee covers it, looking for one without a coloring.
pub fn check_degree_guarantee(g: &SimpleGraph) -> Result<GuaranteeCheck, ReducibleError> {
    let sizes: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    if !degree_colorable_guarantee_sizes(g, &sizes) {
        return Ok(GuaranteeCheck { guaranteed: false, systems: 0, counterexample: None });
    }
    let mut solver = SmallSolver::new(g);
    let mut systems = 0;
    let mut counterexample = None;
    for_each_canonical_system(&sizes, |masks| {
        systems += 1;
        if solver.solve(masks) {
            ControlFlow::Continue(())
        } else {
            counterexample = Some(ListAssignment::from_masks(masks));
            ControlFlow::Break(())
        }
    })?;
    Ok(GuaranteeCheck { guaranteed: true, systems, counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn guarantee_holds_on_four_vertices() {
        for g in connected_graphs_up_to(4) {
            let check = check_degree_guarantee(&g).unwrap();
            assert_eq!(check.counterexample, None);
        }
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let check = check_degree_guarantee(&c4).unwrap();
        assert!(check.guaranteed);
        assert_eq!(check.systems, crate::reducible::count_canonical_systems(&[2, 2, 2, 2]).unwrap());
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let a = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = SimpleGraph::from_edges(4, &[(3, 0), (0, 2), (2, 1)]).unwrap();
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&star));
    }
}
