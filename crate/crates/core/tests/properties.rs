use flexcolor_core::graph::SimpleGraph;
use flexcolor_core::listcolor::{
    degree_colorable_guarantee, find_l_coloring, is_l_coloring, max_weight_coloring, Color, ListAssignment,
};
use flexcolor_core::pattern::{find_configurations, Class};
use flexcolor_core::{catalog, Graph, PlaneGraph, Rational};
use proptest::prelude::*;

/// A graph on `n` vertices from an edge bit mask over all pairs.
fn graph_from_mask(n: usize, mask: u32) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

fn colorable_by_brute_force(g: &SimpleGraph, l: &ListAssignment) -> bool {
    fn go(g: &SimpleGraph, l: &ListAssignment, v: usize, phi: &mut Vec<Color>) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        for &c in l.list(v) {
            if g.neighbors(v).iter().all(|&u| u >= v || phi[u] != c) {
                phi.push(c);
                if go(g, l, v + 1, phi) {
                    return true;
                }
                phi.pop();
            }
        }
        false
    }
    go(g, l, 0, &mut Vec::new())
}

fn lists_strategy(n: usize) -> impl Strategy<Value = ListAssignment> {
    prop::collection::vec(prop::collection::vec(0u32..5, 0..4), n).prop_map(ListAssignment::new)
}

fn catalog_graphs() -> Vec<PlaneGraph> {
    vec![
        catalog::k4(),
        catalog::octahedron(),
        catalog::prism(),
        catalog::cube(),
        catalog::dodecahedron(),
        catalog::star(4),
        catalog::cycle(6),
        catalog::diamond(),
        catalog::house(),
        catalog::hopper(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solver_agrees_with_brute_force(
        (n, mask, l) in (1usize..=6).prop_flat_map(|n| (Just(n), any::<u32>(), lists_strategy(n)))
    ) {
        let g = graph_from_mask(n, mask);
        let found = find_l_coloring(&g, &l);
        if let Some(phi) = &found {
            prop_assert!(is_l_coloring(&g, &l, phi));
        }
        prop_assert_eq!(found.is_some(), colorable_by_brute_force(&g, &l));
    }

    #[test]
    fn guarantee_implies_colorable(
        (n, mask, seed) in (1usize..=6).prop_flat_map(|n| (Just(n), any::<u32>(), any::<u64>()))
    ) {
        let g = graph_from_mask(n, mask);
        // lists of size exactly deg(v) drawn from a small palette
        let mut state = seed;
        let lists: Vec<Vec<Color>> = (0..n)
            .map(|v| {
                let mut list: Vec<Color> = (0..6).collect();
                for i in (1..list.len()).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    list.swap(i, (state >> 33) as usize % (i + 1));
                }
                list.truncate(g.degree(v));
                list
            })
            .collect();
        let l = ListAssignment::new(lists);
        if degree_colorable_guarantee(&g, &l) {
            prop_assert!(find_l_coloring(&g, &l).is_some());
        }
    }

    #[test]
    fn max_weight_is_optimal(
        (n, mask, l, w) in (1usize..=5).prop_flat_map(|n| (
            Just(n),
            any::<u32>(),
            lists_strategy(n),
            prop::collection::vec(0i64..4, n * 5),
        ))
    ) {
        let g = graph_from_mask(n, mask);
        let weight = |v: usize, c: Color| Rational::from_integer(w[v * 5 + c as usize]);
        match max_weight_coloring(&g, &l, weight) {
            None => prop_assert!(!colorable_by_brute_force(&g, &l)),
            Some((phi, best)) => {
                prop_assert!(is_l_coloring(&g, &l, &phi));
                let total: Rational = phi.iter().enumerate().map(|(v, &c)| weight(v, c)).sum();
                prop_assert_eq!(total, best);
                // no single recoloring improves it
                for v in 0..n {
                    for &c in l.list(v) {
                        let mut other = phi.clone();
                        other[v] = c;
                        if is_l_coloring(&g, &l, &other) {
                            let t: Rational = other.iter().enumerate().map(|(u, &c)| weight(u, c)).sum();
                            prop_assert!(t <= best);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn deleting_vertices_keeps_plane_components(idx in 0usize..10, removed_mask in any::<u32>()) {
        let g = &catalog_graphs()[idx];
        let removed: Vec<usize> = (0..g.vertex_count()).filter(|v| removed_mask >> v & 1 == 1).collect();
        let comps = g.delete_vertices(&removed);
        let kept: usize = comps.iter().map(|c| c.graph.vertex_count()).sum();
        prop_assert_eq!(kept, g.vertex_count() - removed.len());
        for c in &comps {
            let h = &c.graph;
            prop_assert_eq!(h.euler_characteristic(), 2);
            let face_sum: usize = (0..h.face_count()).map(|f| h.face_degree(f)).sum();
            prop_assert_eq!(face_sum, 2 * h.edge_count());
            for (i, &x) in c.original.iter().enumerate() {
                for &y in h.neighbors(i) {
                    prop_assert!(g.has_edge(x, c.original[y]));
                }
            }
        }
    }
}

#[test]
fn catalog_matches_are_valid() {
    for g in catalog_graphs() {
        for class in [Class::H1, Class::H2] {
            for m in find_configurations(&g, class) {
                let id = m.config().unwrap();
                assert!(id.pattern().is_valid_match(&g, &m.map), "{id} {:?}", m.map);
            }
        }
    }
}
