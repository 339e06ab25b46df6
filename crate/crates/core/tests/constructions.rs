mod common;

use centerkit::constructions::*;
use centerkit::iso::{are_isomorphic, center_matches};
use centerkit::verify::{verify_prescription, verify_single_center};
use centerkit::{metric_profile, Graph};
use common::{h_corpus, oracle_profile, self_centered_corpus};

fn iso(a: &Graph, b: &Graph) -> bool {
    are_isomorphic(a, b).unwrap().is_some()
}

#[test]
fn templates_meet_their_contract() {
    for r in 2..=6 {
        for d in r + 1..=2 * r {
            let x = single_center_template(r, d).unwrap();
            let h = x.designated_center().unwrap();
            assert!(
                verify_single_center(&x.graph, r, d, h).unwrap().pass,
                "r={r} d={d}"
            );
            assert_eq!(oracle_profile(&x.graph), (r, d, vec![h]));
            let ConstructionRecipe::SingleCenterTemplate { n, .. } = x.recipe else {
                panic!()
            };
            assert_eq!(n, d - r - 1);
        }
    }
}

#[test]
fn theorem4_sweep_over_corpus() {
    for r in 2..=6 {
        for d in r + 1..=2 * r {
            for (name, h) in h_corpus() {
                let p = Prescription::new(r, d, h.clone()).unwrap();
                let g = theorem4_build(&p).unwrap();
                let report = verify_prescription(&g.graph, &p, Some(&g.center_image)).unwrap();
                assert!(report.pass, "r={r} d={d} H={name}: {report:?}");
                assert!(center_matches(&g.graph, &h).unwrap().is_some());
            }
        }
    }
}

#[test]
fn theorem4_named_examples() {
    let p = Prescription::new(3, 5, Graph::path(4)).unwrap();
    assert!(
        verify_prescription(&theorem4_build(&p).unwrap().graph, &p, None)
            .unwrap()
            .pass
    );

    let p = Prescription::new(5, 6, Graph::petersen()).unwrap();
    assert!(
        verify_prescription(&theorem4_build(&p).unwrap().graph, &p, None)
            .unwrap()
            .pass
    );

    // Same metrics as the two-hub construction, different graph.
    let p = Prescription::new(2, 4, Graph::complete(3)).unwrap();
    let a = theorem4_build(&p).unwrap();
    let b = hedetniemi(&Graph::complete(3), 2).unwrap();
    let (pa, pb) = (
        metric_profile(&a.graph).unwrap(),
        metric_profile(&b.graph).unwrap(),
    );
    assert_eq!(
        (pa.radius, pa.diameter, pa.center_vertices.len()),
        (pb.radius, pb.diameter, 3)
    );
}

#[test]
fn hedetniemi_sweep() {
    for r in 2..=5 {
        for (name, h) in h_corpus() {
            let g = hedetniemi(&h, r).unwrap();
            let p = Prescription::new(r, 2 * r, h.clone()).unwrap();
            assert!(
                verify_prescription(&g.graph, &p, Some(&g.center_image))
                    .unwrap()
                    .pass,
                "{name} r={r}"
            );
            assert_eq!(g.graph.order(), 2 * r as usize + h.order());
        }
    }
    let h = Graph::disjoint_union(&Graph::complete(3), &Graph::complete(2)).unwrap();
    let g = hedetniemi(&h, 2).unwrap();
    assert!(center_matches(&g.graph, &h).unwrap().is_some());
    assert_eq!(
        oracle_profile(&hedetniemi(&Graph::complete(1), 3).unwrap().graph).0,
        3
    );
}

#[test]
fn hedetniemi_is_substitution_into_a_path() {
    for r in 2..=4 {
        let path = hedetniemi(&Graph::complete(1), r).unwrap();
        assert!(iso(&path.graph, &Graph::path(2 * r as usize + 1)));
        for (name, h) in h_corpus() {
            let sub = substitute_center(&path.graph, &h).unwrap();
            assert!(
                iso(&sub.graph, &hedetniemi(&h, r).unwrap().graph),
                "{name} r={r}"
            );
        }
    }
}

#[test]
fn gadgets_for_r_two_through_six() {
    for r in 2..=6u32 {
        let f2 = fig2_gadget(r).unwrap();
        assert_eq!(f2.graph.order(), 7 + 6 * (r as usize - 2));
        assert_eq!(oracle_profile(&f2.graph), (r, 2 * r - 1, vec![6]));
        let f3 = fig3_gadget(r).unwrap();
        assert_eq!(oracle_profile(&f3.graph), (r, 2 * r, vec![6]));
    }
}

#[test]
fn fig3_differs_from_the_two_hub_construction() {
    for r in 2..=5 {
        let f3 = fig3_gadget(r).unwrap();
        let hub = hedetniemi(&Graph::complete(1), r).unwrap();
        assert!(!iso(&f3.graph, &hub.graph), "r={r}");
    }
}

#[test]
fn substitution_into_gadgets() {
    let x = fig2_gadget(3).unwrap();
    let g = substitute_center(&x.graph, &Graph::cycle(5)).unwrap();
    let (r, d, c) = oracle_profile(&g.graph);
    assert_eq!((r, d, c.clone()), (3, 5, g.center_image.clone()));
    assert!(center_matches(&g.graph, &Graph::cycle(5))
        .unwrap()
        .is_some());

    let x2 = fig2_gadget(2).unwrap();
    assert!(iso(
        &substitute_center(&x2.graph, &Graph::complete(1))
            .unwrap()
            .graph,
        &x2.graph
    ));
}

#[test]
fn substituting_k1_is_the_identity_up_to_isomorphism() {
    let mut singles = vec![];
    for r in 2..=5 {
        singles.push(fig2_gadget(r).unwrap());
        singles.push(fig3_gadget(r).unwrap());
        singles.push(hedetniemi(&Graph::complete(1), r).unwrap());
        for d in r + 1..=2 * r {
            singles.push(single_center_template(r, d).unwrap());
        }
    }
    for x in singles {
        let sub = substitute_center(&x.graph, &Graph::complete(1)).unwrap();
        assert!(iso(&sub.graph, &x.graph), "{:?}", x.recipe);
    }
}

#[test]
fn substitution_keeps_h_edges_exactly() {
    let x = single_center_template(3, 5).unwrap();
    for (_, h) in h_corpus() {
        let g = substitute_center(&x.graph, &h).unwrap();
        let (inside, _) = g.graph.induced_subgraph(&g.center_image).unwrap();
        assert_eq!(inside, h);
    }
}

#[test]
fn attach_paths_formulas() {
    for (name, h) in self_centered_corpus() {
        let z = metric_profile(&h).unwrap().radius;
        for t in 1..=4u32 {
            let g = attach_paths_uniform(&h, t).unwrap();
            let (r, d, center) = oracle_profile(&g.graph);
            assert_eq!((r, d), (z + t - 1, 2 * (t - 1) + z), "{name} t={t}");
            assert_eq!(center, g.center_image);
            assert!(center_matches(&g.graph, &h).unwrap().is_some());
        }
        for r in z..=z + 3 {
            let g = attach_paths_for_radius(&h, r).unwrap();
            let (found_r, found_d, _) = oracle_profile(&g.graph);
            assert_eq!((found_r, found_d), (r, 2 * r - z), "{name} r={r}");
        }
    }
    // K_3 with t = 3 reaches radius 3 and diameter 5.
    let g = attach_paths_uniform(&Graph::complete(3), 3).unwrap();
    let (r, d, _) = oracle_profile(&g.graph);
    assert_eq!((r, d), (3, 5));
}

#[test]
fn join_solutions() {
    for (t, y) in [
        (2, Graph::empty(2).unwrap()),
        (3, Graph::cycle(4)),
        (1, Graph::cycle(5)),
    ] {
        let g = join_solution(t, &y).unwrap();
        let (r, d, c) = oracle_profile(&g.graph);
        assert_eq!((r, d), (1, 2));
        assert_eq!(c, g.center_image);
        assert!(center_matches(&g.graph, &Graph::complete(t as usize))
            .unwrap()
            .is_some());
    }
    // K_4 minus one edge.
    let k4_minus = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    assert!(iso(
        &join_solution(2, &Graph::empty(2).unwrap()).unwrap().graph,
        &k4_minus
    ));
}
