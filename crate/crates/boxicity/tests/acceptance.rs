//! The acceptance gate: eleven criteria checked with exact integer
//! equality, each reported as a single PASS or FAIL line (visible under
//! `--nocapture`; the per-test harness lines carry the same verdicts).

mod common;

use boxicity::acyclic::{acyclic_chromatic_number, acyclic_coloring_to_boxes};
use boxicity::boxes::{
    boxes_to_cover, cover_to_boxes, intersection_graph_of_boxes, local_cover_to_boxes,
    union_cover_to_boxes,
};
use boxicity::certificate::{Certificate, Parameter};
use boxicity::cover::{verify_cover, CoCover, CoverClass};
use boxicity::families;
use boxicity::folded::{folded_search_bounded, local_cover_to_folded, verify_folded_cover};
use boxicity::graph::{Graph, VertexSet};
use boxicity::graph6::write_graph6;
use boxicity::interval::{is_co_interval, is_interval};
use boxicity::solver::{self, Solution};
use common::{
    chi_a_oracle, g, globality_oracle, interval_oracle, is_forest, iso_classes, locality_oracle,
    sample_graphs, SAMPLE_SEED,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::AssertUnwindSafe;
use std::sync::OnceLock;

fn criterion(number: usize, description: &str, body: impl FnOnce()) {
    match std::panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("PASS criterion {number}: {description}"),
        Err(cause) => {
            println!("FAIL criterion {number}: {description}");
            std::panic::resume_unwind(cause);
        }
    }
}

fn sample() -> &'static Vec<Graph> {
    static SAMPLE: OnceLock<Vec<Graph>> = OnceLock::new();
    SAMPLE.get_or_init(|| sample_graphs(SAMPLE_SEED, 100, &[5, 6, 7]))
}

fn small_iso_classes() -> &'static Vec<Graph> {
    static CLASSES: OnceLock<Vec<Graph>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let mut all = Vec::new();
        for n in 1..=5 {
            let classes = iso_classes(n);
            if n == 4 {
                assert_eq!(classes.len(), 11, "isomorphism classes on 4 vertices");
            }
            if n == 5 {
                assert_eq!(classes.len(), 34, "isomorphism classes on 5 vertices");
            }
            all.extend(classes);
        }
        all
    })
}

fn four_vertex_classes() -> Vec<Graph> {
    small_iso_classes()
        .iter()
        .filter(|h| h.n() == 4)
        .cloned()
        .collect()
}

fn assert_certified(parameter: Parameter, h: &Graph, sol: &Solution) {
    let cert = Certificate::from_solution(parameter, h, sol).expect("certificate builds");
    assert_eq!(cert.verify().expect("certificate verifies"), sol.stats);
}

#[test]
fn criterion_01_octahedron_parameters_and_figure_reproduction() {
    criterion(
        1,
        "octahedron: box 3, union 1, local 1, 1-local 3-dimensional boxes",
        || {
            let oct = families::octahedron();
            let boxed = solver::boxicity(&oct);
            let unioned = solver::union_boxicity(&oct);
            let local = solver::local_boxicity(&oct);
            assert_eq!(boxed.value, 3);
            assert_eq!(unioned.value, 1);
            assert_eq!(local.value, 1);
            assert_certified(Parameter::Box, &oct, &boxed);
            assert_certified(Parameter::UnionBox, &oct, &unioned);
            assert_certified(Parameter::LocalBox, &oct, &local);
            let rep = union_cover_to_boxes(&unioned.witness).expect("union witness converts");
            assert_eq!(rep.d, 3);
            assert_eq!(rep.locality(), 1);
            assert_eq!(intersection_graph_of_boxes(&rep).unwrap(), oct);
        },
    );
}

#[test]
fn criterion_02_matching_complements_separate_box_from_union_box() {
    criterion(
        2,
        "matching complements: box k, union 1, local 1 for k = 1..4",
        || {
            for k in 1..=4 {
                let h = families::matching(k).unwrap().complement();
                assert_eq!(solver::boxicity(&h).value, k, "box for k = {k}");
                assert_eq!(solver::union_boxicity(&h).value, 1, "union for k = {k}");
                assert_eq!(solver::local_boxicity(&h).value, 1, "local for k = {k}");
            }
        },
    );
}

#[test]
fn criterion_03_four_cycle_values() {
    criterion(3, "C4: box 2, union 1, local 1", || {
        let c4 = families::cycle(4).unwrap();
        assert_eq!(solver::boxicity(&c4).value, 2);
        assert_eq!(solver::union_boxicity(&c4).value, 1);
        assert_eq!(solver::local_boxicity(&c4).value, 1);
    });
}

#[test]
fn criterion_04_line_graph_of_k5_and_the_petersen_local_value() {
    criterion(
        4,
        "L(K5): star cover t 5 s 2; local boxicity of its complement is 2",
        || {
            let lk5 = families::line_of_complete(5).unwrap();
            let cover = families::star_clique_cover(5).unwrap();
            assert_eq!(cover.host, lk5);
            let stats = verify_cover(&cover).expect("star-clique cover verifies");
            assert_eq!(stats.globality, 5);
            assert_eq!(stats.locality, 2);
            let petersen = families::petersen();
            assert_eq!(lk5.complement(), petersen);
            assert_eq!(solver::local_boxicity(&petersen).value, 2);
            assert!(
                !is_co_interval(&lk5),
                "lower bound: L(K5) is not co-interval"
            );
            assert!(
                !lk5.has_induced_two_matching(),
                "the induced-matching obstruction does not apply to L(K5)"
            );
        },
    );
}

#[test]
fn criterion_05_chain_inequality_with_verified_certificates() {
    criterion(
        5,
        "local <= union <= box over 11 four-vertex classes and 100 sampled graphs",
        || {
            let mut instances = four_vertex_classes();
            instances.extend(sample().iter().cloned());
            assert_eq!(instances.len(), 111);
            for h in &instances {
                let local = solver::local_boxicity(h);
                let union = solver::union_boxicity(h);
                let global = solver::boxicity(h);
                let name = write_graph6(h).unwrap();
                assert!(local.value <= union.value, "chain breaks on {name}");
                assert!(union.value <= global.value, "chain breaks on {name}");
                assert_certified(Parameter::LocalBox, h, &local);
                assert_certified(Parameter::UnionBox, h, &union);
                assert_certified(Parameter::Box, h, &global);
            }
        },
    );
}

#[test]
fn criterion_06_solver_values_match_oracles_and_recognition_matches_orderings() {
    criterion(
        6,
        "oracle equivalence on n <= 5; interval recognition vs orderings on n <= 6",
        || {
            for h in small_iso_classes() {
                let host = h.complement();
                let name = write_graph6(h).unwrap();
                assert_eq!(
                    solver::boxicity(h).value,
                    globality_oracle(&host, CoverClass::CoInterval),
                    "box on {name}"
                );
                assert_eq!(
                    solver::union_boxicity(h).value,
                    globality_oracle(&host, CoverClass::UnionCoInterval),
                    "union box on {name}"
                );
                assert_eq!(
                    solver::local_boxicity(h).value,
                    locality_oracle(&host, CoverClass::CoInterval),
                    "local box on {name}"
                );
                assert_eq!(
                    solver::local_boxicity_union_class(h).value,
                    locality_oracle(&host, CoverClass::UnionCoInterval),
                    "union-class local box on {name}"
                );
            }
            for n in 1..=6 {
                for graph in iso_classes(n) {
                    assert_eq!(
                        is_interval(&graph),
                        interval_oracle(&graph),
                        "interval recognition on {}",
                        write_graph6(&graph).unwrap()
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_07_local_variants_coincide_and_fold_exactly() {
    criterion(
        7,
        "local equals union-class local; folded covers realize the same locality",
        || {
            let mut instances = four_vertex_classes();
            instances.extend(sample().iter().filter(|h| h.n() <= 6).cloned());
            for h in &instances {
                let plain = solver::local_boxicity(h);
                let union = solver::local_boxicity_union_class(h);
                let name = write_graph6(h).unwrap();
                assert_eq!(plain.value, union.value, "class-independence on {name}");
                let folded = local_cover_to_folded(&plain.witness).expect("transform succeeds");
                let fiber =
                    verify_folded_cover(&plain.witness.host, &folded, CoverClass::UnionCoInterval)
                        .expect("folded cover verifies");
                assert_eq!(fiber, plain.value.max(1), "fiber locality on {name}");
            }
            for host in small_iso_classes() {
                let expected = solver::local_boxicity_union_class(&host.complement())
                    .value
                    .max(1);
                let found = folded_search_bounded(host, 3, 12, CoverClass::UnionCoInterval)
                    .expect("within size bounds")
                    .map(|(s, _)| s);
                assert_eq!(
                    found,
                    Some(expected),
                    "folded search on host {}",
                    write_graph6(host).unwrap()
                );
            }
        },
    );
}

#[test]
fn criterion_08_folded_dichotomy() {
    criterion(
        8,
        "box_f is 1 exactly on co-interval complements; plain folds otherwise absent",
        || {
            for n in 1..=6 {
                for h in iso_classes(n) {
                    let expected = if is_co_interval(&h.complement()) {
                        Some(1)
                    } else {
                        None
                    };
                    assert_eq!(
                        solver::box_f(&h),
                        expected,
                        "box_f on {}",
                        write_graph6(&h).unwrap()
                    );
                }
            }
            for host in small_iso_classes() {
                let found = folded_search_bounded(host, 3, 12, CoverClass::CoInterval)
                    .expect("within size bounds")
                    .map(|(s, _)| s);
                let expected = if is_co_interval(host) { Some(1) } else { None };
                assert_eq!(
                    found,
                    expected,
                    "plain folded search on host {}",
                    write_graph6(host).unwrap()
                );
            }
        },
    );
}

fn assert_geometric_round_trip(h: &Graph, sol: &Solution) {
    let name = write_graph6(h).unwrap();
    let rep = cover_to_boxes(&sol.witness).expect("witness converts to boxes");
    assert_eq!(
        intersection_graph_of_boxes(&rep).unwrap(),
        *h,
        "round trip on {name}"
    );
    assert_eq!(
        rep.locality(),
        sol.stats.locality,
        "locality accounting on {name}"
    );
    if sol.witness.class == CoverClass::CoInterval {
        let direct = local_cover_to_boxes(&sol.witness, h).expect("plain conversion");
        assert_eq!(direct, rep, "plain and general conversions agree on {name}");
    }
    let back = boxes_to_cover(&rep).expect("projection succeeds");
    assert_eq!(back.host, sol.witness.host, "projection host on {name}");
    let stats = verify_cover(&back).expect("projected cover verifies");
    assert!(
        stats.locality <= rep.locality(),
        "projection locality on {name}"
    );
}

#[test]
fn criterion_09_geometric_round_trips_and_the_mixed_locality_pattern() {
    criterion(
        9,
        "witness covers round-trip through boxes; mixed localities on 6 vertices",
        || {
            let mut named = vec![families::octahedron(), families::cycle(4).unwrap()];
            for k in 1..=4 {
                named.push(families::matching(k).unwrap().complement());
            }
            for h in &named {
                assert_geometric_round_trip(h, &solver::boxicity(h));
                assert_geometric_round_trip(h, &solver::union_boxicity(h));
                assert_geometric_round_trip(h, &solver::local_boxicity(h));
            }
            let mut instances = four_vertex_classes();
            instances.extend(sample().iter().cloned());
            for h in &instances {
                assert_geometric_round_trip(h, &solver::boxicity(h));
                assert_geometric_round_trip(h, &solver::union_boxicity(h));
                assert_geometric_round_trip(h, &solver::local_boxicity(h));
            }

            let petersen = families::petersen();
            let star = families::star_clique_cover(5).unwrap();
            let rep = local_cover_to_boxes(&star, &petersen).expect("star cover converts");
            assert_eq!(intersection_graph_of_boxes(&rep).unwrap(), petersen);
            assert_eq!(rep.locality(), 2);

            let path_host = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
            let mixed = CoCover {
                host: path_host.clone(),
                bags: vec![vec![(0, 1), (1, 2)], vec![(2, 3)], vec![(3, 4), (4, 5)]],
                class: CoverClass::CoInterval,
            };
            let rep = local_cover_to_boxes(&mixed, &path_host.complement()).unwrap();
            let localities: Vec<usize> = (0..6).map(|v| rep.vertex_locality(v)).collect();
            assert_eq!(localities, vec![1, 1, 2, 2, 1, 1]);
            assert!(localities.contains(&1) && localities.contains(&2));
        },
    );
}

#[test]
fn criterion_10_acyclic_coloring_bound_and_construction() {
    criterion(
        10,
        "local boxicity <= 2(chi_a - 1) on the sample; construction round-trips",
        || {
            assert_eq!(chi_a_oracle(&families::cycle(4).unwrap()), 3);
            let (k_c4, _) = acyclic_chromatic_number(&families::cycle(4).unwrap()).unwrap();
            assert_eq!(k_c4, 3);
            for h in sample() {
                assert!(h.edge_count() > 0, "sampled graphs all carry edges");
                let (k, coloring) = acyclic_chromatic_number(h).expect("within the coloring limit");
                let name = write_graph6(h).unwrap();
                if !h.is_complete() {
                    let local = solver::local_boxicity(h).value;
                    assert!(
                        local <= 2 * (k - 1),
                        "coloring bound fails on {name}: local {local}, chi_a {k}"
                    );
                }
                let rep = acyclic_coloring_to_boxes(h, &coloring).expect("construction succeeds");
                assert!(
                    rep.locality() <= 2 * (k - 1),
                    "construction locality on {name}"
                );
                assert_eq!(
                    intersection_graph_of_boxes(&rep).unwrap(),
                    *h,
                    "construction round trip on {name}"
                );
            }
        },
    );
}

/// Builds the subgraph spanned by the edges selected in `mask`, induced on
/// the vertices those edges touch.
fn spanned_on_support(edges: &[(usize, usize)], mask: u64) -> Graph {
    let picked: Vec<(usize, usize)> = (0..edges.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| edges[i])
        .collect();
    let support = VertexSet::from_iter(picked.iter().flat_map(|&(u, v)| [u, v]));
    let verts: Vec<usize> = support.iter().collect();
    let index = |v: usize| verts.binary_search(&v).unwrap();
    Graph::new(
        verts.len(),
        picked.iter().map(|&(u, v)| (index(u), index(v))),
    )
    .unwrap()
}

fn forest_claim_holds(edges: &[(usize, usize)], mask: u64) -> bool {
    let spanned = spanned_on_support(edges, mask);
    if spanned.has_induced_two_matching() || !is_co_interval(&spanned) {
        return true;
    }
    is_forest(spanned.n(), &spanned.edges())
}

#[test]
fn criterion_11_co_interval_subgraphs_of_the_incidence_graph_are_forests() {
    criterion(
        11,
        "projective incidence order 3: co-interval subgraphs are forests",
        || {
            let f3 = families::projective_incidence(3).unwrap();
            assert_eq!(f3.n(), 26);
            for v in 0..f3.n() {
                assert_eq!(f3.degree(v), 4);
            }
            assert_eq!(f3.girth(), Some(6));
            let edges = f3.edges();
            let m = edges.len();
            assert_eq!(m, 52);

            // Every subset of at most four edges, disconnected ones included.
            let mut checked = 0u64;
            for a in 0..m {
                let ma = 1u64 << a;
                assert!(forest_claim_holds(&edges, ma));
                for b in a + 1..m {
                    let mb = ma | 1 << b;
                    assert!(forest_claim_holds(&edges, mb));
                    for c in b + 1..m {
                        let mc = mb | 1 << c;
                        assert!(forest_claim_holds(&edges, mc));
                        for d in c + 1..m {
                            assert!(forest_claim_holds(&edges, mc | 1 << d));
                            checked += 1;
                        }
                    }
                }
            }
            assert_eq!(checked, 270_725, "C(52, 4) four-edge subsets");

            // Larger subsets: a spanned subgraph with two edge-bearing pieces
            // contains an induced two-matching and is never co-interval, so
            // growing connected subsets edge by edge reaches every candidate.
            let mut adjacent = vec![0u64; m];
            for i in 0..m {
                for j in 0..m {
                    let (a, b) = edges[i];
                    let (c, d) = edges[j];
                    if i != j && (a == c || a == d || b == c || b == d) {
                        adjacent[i] |= 1 << j;
                    }
                }
            }
            let mut level: Vec<u64> = (0..m).map(|i| 1u64 << i).collect();
            for size in 2..=7 {
                let mut next: Vec<u64> = Vec::new();
                for &mask in &level {
                    let mut boundary = 0u64;
                    for i in (0..m).filter(|i| mask >> i & 1 == 1) {
                        boundary |= adjacent[i];
                    }
                    let mut candidates = boundary & !mask;
                    while candidates != 0 {
                        let i = candidates.trailing_zeros();
                        candidates &= candidates - 1;
                        next.push(mask | 1 << i);
                    }
                }
                next.sort_unstable();
                next.dedup();
                if size >= 5 {
                    for &mask in &next {
                        assert!(
                            forest_claim_holds(&edges, mask),
                            "connected {size}-edge subset {mask:b}"
                        );
                    }
                }
                level = next;
            }

            // Seeded random larger subsets.
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 11);
            for _ in 0..10_000 {
                let size = rng.gen_range(8..=20);
                let mut mask = 0u64;
                while mask.count_ones() < size {
                    mask |= 1 << rng.gen_range(0..m);
                }
                assert!(forest_claim_holds(&edges, mask));
            }
        },
    );
}
