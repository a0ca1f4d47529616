//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use flexcolor::corpus::{generate, CorpusSpec};
use flexcolor_core::discharge::{apply_rules, audit, initial_charges, Mode, Verdict};
use flexcolor_core::graph::SimpleGraph;
use flexcolor_core::listcolor::{find_l_coloring, is_l_coloring, Color, ListAssignment};
use flexcolor_core::pattern::{find_config, is_class_member};
use flexcolor_core::reducible::{
    check_boundary_reducible, check_fix, degree_variants, residual_sizes, verify_config_with, Witness,
};
use flexcolor_core::resolve::{
    empirical_epsilon, extend_coloring, find_resolution, oracle_max_satisfaction, Policy, Request,
    WeightedRequest, DEFAULT_B, DEFAULT_K,
};
use flexcolor_core::small::{check_degree_guarantee, connected_graphs_up_to};
use flexcolor_core::{catalog, Class, ConfigId, Graph, PlaneGraph, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

/// Every listed configuration, in every degree variant, is boundary-reducible
/// in `class` with k = 5.
fn library_reducible(ids: &[ConfigId], class: Class) -> Outcome {
    let mut checks = 0;
    let mut systems = 0;
    for &id in ids {
        for degrees in degree_variants(id) {
            let r = verify_config_with(id, &degrees, class, DEFAULT_K).map_err(|e| format!("{id}: {e}"))?;
            ensure(r.is_reducible(), || {
                format!("{id} degrees {degrees:?}: FIX {} FORB {}", r.fix_ok, r.forb_ok)
            })?;
            checks += 1;
            systems += r.systems_checked;
        }
    }
    Ok(format!("{} configurations, {checks} degree variants, {systems} list systems", ids.len()))
}

fn criterion_1() -> Outcome {
    use ConfigId::*;
    library_reducible(&[B1a, B1b, B2a, B2b, B2c, B3, B4i, B4ii, B5, B6], Class::H1)
}

fn criterion_2() -> Outcome {
    let d = library_reducible(&[ConfigId::D1, ConfigId::D2], Class::H2)?;
    for class in [Class::H1, Class::H2] {
        for deg in 0..=3 {
            let r = verify_config_with(ConfigId::Z0, &[deg], class, DEFAULT_K).map_err(|e| e.to_string())?;
            ensure(r.is_reducible(), || format!("Z0 at degree {deg} in {class}"))?;
        }
    }
    Ok(format!("{d}; Z0 at degrees 0..=3 in both classes"))
}

fn criterion_3() -> Outcome {
    // a triangle whose vertices each carry three pendant leaves
    let mut g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    for v in 0..3 {
        for _ in 0..3 {
            let leaf = g.add_vertex();
            g.add_edge(v, leaf).unwrap();
        }
    }
    let h = [0, 1, 2];
    let sizes = residual_sizes(&g, &h, &[], DEFAULT_K).map_err(|e| e.to_string())?;
    ensure(sizes.sizes() == [2, 2, 2], || format!("residual sizes {sizes}"))?;
    let r = check_fix(&g, &h, &[], DEFAULT_K).map_err(|e| e.to_string())?;
    ensure(!r.fix_ok, || "FIX unexpectedly holds".into())?;
    let Some(Witness::Fix { vertex, lists }) = &r.witness else {
        return Err("no FIX witness".into());
    };
    ensure(lists.list(*vertex).len() == 1, || "witness does not fix a vertex".into())?;
    ensure(find_l_coloring(&r.domain_graph(&g), lists).is_none(), || "witness list system is colorable".into())?;
    let both = check_boundary_reducible(&g, &h, &[], DEFAULT_K, Class::H1).map_err(|e| e.to_string())?;
    ensure(!both.is_reducible(), || "gadget reported reducible".into())?;
    Ok(format!("FIX fails at vertex {vertex}; witness {:?} is uncolorable", lists.lists()))
}

fn criterion_4() -> Outcome {
    // (configuration, host degrees, available colors per pattern vertex)
    let cases: &[(ConfigId, &[usize], &[usize])] = &[
        (ConfigId::B1a, &[4, 4, 5, 4, 4], &[5, 3, 2, 2, 2]),
        (ConfigId::B2b, &[5, 4, 4, 4, 4], &[4, 3, 3, 2, 2]),
        (ConfigId::B3, &[5, 4, 4, 5], &[3, 3, 4, 2]),
        (ConfigId::B4i, &[5, 4, 5, 4, 4], &[4, 3, 3, 3, 2]),
        (ConfigId::B5, &[5, 5, 4, 5, 4], &[3, 2, 4, 3, 2]),
        (ConfigId::B6, &[5, 4, 5, 5, 4, 4], &[5, 3, 3, 2, 2, 2]),
        (ConfigId::D1, &[5, 4, 4, 4], &[2, 3, 3, 3]),
        (ConfigId::D2, &[5, 4, 4, 4, 4], &[2, 3, 3, 3, 3]),
    ];
    let mut values = 0;
    for &(id, degrees, expected) in cases {
        let p = id.pattern();
        let host = p.witness_host(degrees);
        let h: Vec<usize> = (0..p.vertex_count()).collect();
        let s = residual_sizes(&host, &h, &[], DEFAULT_K).map_err(|e| e.to_string())?;
        ensure(s.sizes() == expected, || format!("{id}: got {s}, expected {expected:?}"))?;
        values += expected.len();
    }
    // the lowered system in the B5 argument: S = {v1, v3, v5}
    let p = ConfigId::B5.pattern();
    let host = p.witness_host(&[5, 5, 4, 5, 4]);
    let s = residual_sizes(&host, &[0, 1, 2, 3, 4], &[], DEFAULT_K)
        .and_then(|s| s.subtract_indicator(&[0, 2, 4]))
        .map_err(|e| e.to_string())?;
    ensure(s.sizes() == [2, 2, 3, 3, 1], || format!("B5 minus S: got {s}"))?;
    values += 5;
    Ok(format!("{values} per-vertex values over {} configurations", cases.len()))
}

fn corpus(count: usize, lo: usize, hi: usize, class: Option<Class>, seed: u64) -> Vec<PlaneGraph> {
    generate(&CorpusSpec::random(count, lo, hi, class, seed)).expect("valid corpus spec")
}

fn criterion_5() -> Outcome {
    let graphs = corpus(200, 1, 60, None, 5);
    for (i, g) in graphs.iter().enumerate() {
        for mode in [Mode::Hopper, Mode::House] {
            let l = initial_charges(g, mode);
            ensure(l.initial_total() == mode.expected_total(), || {
                format!("graph {i}, {mode} mode: total {}", l.initial_total())
            })?;
        }
    }
    Ok(format!("{} graphs, both modes", graphs.len()))
}

fn criterion_6() -> Outcome {
    let mut runs = 0;
    let mut transfers = 0;
    let sets = [
        (corpus(200, 4, 60, Some(Class::H1), 61), Mode::Hopper),
        (corpus(200, 4, 60, Some(Class::H2), 62), Mode::House),
        (corpus(200, 1, 40, None, 63), Mode::Hopper),
        (corpus(200, 1, 40, None, 64), Mode::House),
    ];
    for (graphs, mode) in &sets {
        for g in graphs {
            // mode violations are the rules refusing to run, not a run
            if let Ok(l) = apply_rules(g, *mode) {
                ensure(l.final_total() == l.initial_total(), || {
                    format!("{mode} mode: {} -> {}", l.initial_total(), l.final_total())
                })?;
                runs += 1;
                transfers += l.transfers.len();
            }
        }
    }
    ensure(runs >= 400, || format!("only {runs} runs"))?;
    Ok(format!("{runs} runs, {transfers} transfers"))
}

fn criterion_7() -> Outcome {
    let mut detail = Vec::new();
    for (class, seed) in [(Class::H1, 71), (Class::H2, 72)] {
        let graphs = corpus(250, 4, 60, Some(class), seed);
        let mut dense = 0;
        for (i, g) in graphs.iter().enumerate() {
            ensure(is_class_member(g, class), || format!("{class} graph {i} not in class"))?;
            let r = audit(g, class).map_err(|e| format!("{class} graph {i}: {e}"))?;
            ensure(r.verdict != Verdict::TheoremContradiction, || format!("{class} graph {i}: contradiction"))?;
            ensure(r.conserved, || format!("{class} graph {i}: not conserved"))?;
            if g.min_degree() >= Some(4) {
                dense += 1;
                ensure(r.verdict == Verdict::ConfigurationsFound, || {
                    format!("{class} graph {i}: verdict {}", r.verdict)
                })?;
            } else {
                ensure(!find_config(g, ConfigId::Z0).is_empty(), || format!("{class} graph {i}: no Z0"))?;
            }
        }
        detail.push(format!("{class}: {} graphs, {dense} with min degree 4+", graphs.len()));
    }
    Ok(detail.join("; "))
}

fn criterion_8() -> Outcome {
    let graphs = connected_graphs_up_to(6);
    let (mut covered, mut systems) = (0, 0u64);
    for g in &graphs {
        let check = check_degree_guarantee(g).map_err(|e| e.to_string())?;
        if let Some(l) = &check.counterexample {
            return Err(format!("counterexample on {:?}: {:?}", g.edges(), l.lists()));
        }
        covered += usize::from(check.guaranteed);
        systems += check.systems;
    }
    Ok(format!("{} graphs, {covered} covered by the guarantee, {systems} list systems solved", graphs.len()))
}

fn random_lists<R: Rng>(rng: &mut R, n: usize, size: usize, palette: Color) -> ListAssignment {
    let colors: Vec<Color> = (0..palette).collect();
    ListAssignment::new((0..n).map(|_| colors.choose_multiple(rng, size).copied().collect()).collect())
}

fn criterion_9() -> Outcome {
    let mut pairs = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (class, seed) in [(Class::H1, 91), (Class::H2, 92)] {
        for (i, g) in corpus(50, 4, 40, Some(class), seed).iter().enumerate() {
            let res = find_resolution(g, class, DEFAULT_K, DEFAULT_B).map_err(|e| format!("{class} graph {i}: {e}"))?;
            let l = random_lists(&mut rng, g.vertex_count(), DEFAULT_K, 8);
            for v in 0..g.vertex_count() {
                for &c in l.list(v) {
                    let phi = extend_coloring(g, &l, &res, &Policy::Fixed(v, c))
                        .map_err(|e| format!("{class} graph {i}, fix ({v}, {c}): {e}"))?;
                    ensure(phi[v] == c && is_l_coloring(g, &l, &phi), || {
                        format!("{class} graph {i}, fix ({v}, {c}): bad coloring")
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("100 graphs, {pairs} fixed (vertex, color) pairs"))
}

fn criterion_10() -> Outcome {
    let k3 = catalog::cycle(3);
    let l = ListAssignment::uniform(3, &[0, 1, 2]);
    let unanimous = Request::new(&l, (0..3).map(|v| (v, 0))).unwrap();
    let best = oracle_max_satisfaction(&k3, &l, &unanimous.to_weighted()).map_err(|e| e.to_string())?;
    ensure(best.ratio() == Rational::new(1, 3), || format!("K3 ratio {}", best.ratio()))?;

    let edge = catalog::path(2);
    let l = ListAssignment::uniform(2, &[0, 1, 2, 3, 4]);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let eps = empirical_epsilon(&edge, &l, None, 0, &mut rng).map_err(|e| e.to_string())?;
    ensure(eps.exhaustive && eps.min_ratio == Rational::new(1, 2), || format!("edge epsilon {}", eps.min_ratio))?;

    let mut instances = 0;
    for (class, seed) in [(Class::H1, 101), (Class::H2, 102)] {
        for g in corpus(100, 1, 12, Some(class), seed) {
            let n = g.vertex_count();
            let res = find_resolution(&g, class, DEFAULT_K, DEFAULT_B).map_err(|e| e.to_string())?;
            let l = random_lists(&mut rng, n, DEFAULT_K, 7);
            let mut entries = Vec::new();
            for v in 0..n {
                if rng.gen_bool(0.6) {
                    let c = l.list(v)[rng.gen_range(0..DEFAULT_K)];
                    entries.push(((v, c), Rational::new(rng.gen_range(0..=4), rng.gen_range(1..=3))));
                }
            }
            let w = WeightedRequest::new(&l, entries).unwrap();
            if w.total() == int(0) {
                continue;
            }
            let phi = extend_coloring(&g, &l, &res, &Policy::RequestGreedy(w.clone())).map_err(|e| e.to_string())?;
            let best = oracle_max_satisfaction(&g, &l, &w).map_err(|e| e.to_string())?;
            ensure(is_l_coloring(&g, &l, &phi), || "greedy coloring improper".into())?;
            ensure(w.honored(&phi) <= best.honored, || {
                format!("greedy {} beats oracle {}", w.honored(&phi), best.honored)
            })?;
            instances += 1;
        }
    }
    Ok(format!("K3 1/3, edge 1/2 over {} requests, greedy <= oracle on {instances} instances", eps.requests_evaluated))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("hopper-free library is reducible", criterion_1),
        ("house-free library and Z0 are reducible", criterion_2),
        ("K3 gadget fails FIX with an uncolorable witness", criterion_3),
        ("residual sizes match the available-color counts", criterion_4),
        ("initial charge totals are -8 and -12", criterion_5),
        ("discharging conserves charge", criterion_6),
        ("no corpus graph contradicts the theorem", criterion_7),
        ("degree-colorability guarantee holds on graphs up to 6 vertices", criterion_8),
        ("resolutions replay with every fixed vertex color", criterion_9),
        ("request oracle sanity", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
