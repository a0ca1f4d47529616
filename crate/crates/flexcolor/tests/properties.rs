use flexcolor::corpus::{generate, random_plane_graph, CorpusSpec};
use flexcolor::format::{parse_plane_graph, write_plane_graph};
use flexcolor_core::discharge::{apply_rules, classify, Mode};
use flexcolor_core::listcolor::{is_l_coloring, ListAssignment};
use flexcolor_core::pattern::{find_configurations, is_class_member};
use flexcolor_core::resolve::{extend_coloring, find_resolution, validate_resolution, Policy, DEFAULT_B, DEFAULT_K};
use flexcolor_core::{Class, Graph, PlaneGraph, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn class_strategy() -> impl Strategy<Value = Option<Class>> {
    prop_oneof![Just(None), Just(Some(Class::H1)), Just(Some(Class::H2))]
}

fn graph(seed: u64, hi: usize, class: Option<Class>) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_plane_graph(&mut rng, 1, hi, class)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn plane_invariants(seed in any::<u64>(), class in class_strategy()) {
        let g = graph(seed, 50, class);
        let m = g.edge_count();
        prop_assert_eq!((0..g.vertex_count()).map(|v| g.degree(v)).sum::<usize>(), 2 * m);
        prop_assert_eq!((0..g.face_count()).map(|f| g.face_degree(f)).sum::<usize>(), 2 * m);
        prop_assert_eq!(g.euler_characteristic(), 2);
        let hopper_free = class == Some(Class::H1) || is_class_member(&g, Class::H1);
        for v in 0..g.vertex_count() {
            let d = g.degree(v);
            prop_assert!(g.f3(v) <= d);
            if hopper_free && d >= 4 {
                prop_assert!(g.f3(v) <= 2);
            }
        }
        if let Some(class) = class {
            prop_assert!(is_class_member(&g, class));
        }
    }

    #[test]
    fn format_round_trip(seed in any::<u64>(), class in class_strategy()) {
        let g = graph(seed, 40, class);
        prop_assert_eq!(parse_plane_graph(&write_plane_graph(&g)).unwrap(), g);
    }

    #[test]
    fn discharging_invariants(seed in any::<u64>(), hopper in any::<bool>()) {
        let (class, mode) = if hopper { (Class::H1, Mode::Hopper) } else { (Class::H2, Mode::House) };
        let g = graph(seed, 60, Some(class));
        let ledger = apply_rules(&g, mode).unwrap();
        prop_assert_eq!(ledger.initial_total(), mode.expected_total());
        prop_assert_eq!(ledger.final_total(), ledger.initial_total());
        prop_assert_eq!(&apply_rules(&g, mode).unwrap(), &ledger);
        if mode == Mode::Hopper {
            let c = classify(&g, mode).unwrap();
            for v in (0..g.vertex_count()).filter(|&v| c.bad_vertex[v]) {
                prop_assert_eq!(ledger.final_vertex[v], Rational::from_integer(0));
            }
            for v in 0..g.vertex_count() {
                for nb in [c.n_b_star[v], c.n_b[v]].into_iter().flatten() {
                    prop_assert!(nb <= g.degree(v));
                }
            }
        }
    }

    #[test]
    fn matches_are_valid(seed in any::<u64>(), hopper in any::<bool>()) {
        let class = if hopper { Class::H1 } else { Class::H2 };
        let g = graph(seed, 40, Some(class));
        for m in find_configurations(&g, class) {
            prop_assert!(m.config().unwrap().pattern().is_valid_match(&g, &m.map));
        }
    }

    #[test]
    fn resolutions_validate_and_color(seed in any::<u64>(), hopper in any::<bool>()) {
        let class = if hopper { Class::H1 } else { Class::H2 };
        let g = graph(seed, 30, Some(class));
        let res = find_resolution(&g, class, DEFAULT_K, DEFAULT_B).unwrap();
        let reports = validate_resolution(&g, &res, DEFAULT_B).unwrap();
        prop_assert!(reports.iter().all(|r| r.is_reducible()));
        let l = ListAssignment::uniform(g.vertex_count(), &[0, 1, 2, 3, 4]);
        let phi = extend_coloring(&g, &l, &res, &Policy::Plain).unwrap();
        prop_assert!(is_l_coloring(&g, &l, &phi));
    }
}

#[test]
fn exhaustive_corpus_is_planar_and_filtered() {
    for class in [Class::H1, Class::H2] {
        let spec = CorpusSpec {
            generator: flexcolor::corpus::Generator::ExhaustiveSmall,
            count: usize::MAX,
            min_vertices: 1,
            max_vertices: 6,
            class: Some(class),
            seed: 0,
        };
        let graphs = generate(&spec).unwrap();
        assert!(!graphs.is_empty());
        for g in graphs {
            assert_eq!(g.euler_characteristic(), 2);
            assert!(is_class_member(&g, class));
        }
    }
}
