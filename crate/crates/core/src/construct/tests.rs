use super::*;
use crate::graph::VertexLabel;

fn checked(c: &VerifiedColoring) {
    assert!(c.report.is_b_coloring());
    assert_eq!(c.coloring.len(), c.graph.order());
}

#[test]
fn skeleton_path_five() {
    let sk = skeleton_coloring(5, 5, false);
    assert_eq!(sk.base, vec![1, 2, 3, 4, 0]);
    assert_eq!(sk.path_inserted, vec![0, 1, 2, 3]);
    assert_eq!(sk.closure, None);
}

#[test]
fn skeleton_cycle_closure() {
    assert_eq!(skeleton_coloring(7, 7, true).closure, Some(6));
    // 9 ≡ 2 (mod 7)
    assert_eq!(skeleton_coloring(9, 7, true).closure, Some(0));
}

#[test]
#[should_panic]
fn skeleton_modulus_one_panics() {
    skeleton_coloring(4, 1, false);
}

#[test]
fn family_colorings_are_optimal_b_colorings() {
    for kind in FamilyKind::ALL {
        for size in kind.min_size().max(1)..=9 {
            let spec = FamilySpec::new(kind, size);
            let g = build_family(spec).unwrap();
            let c = optimal_family_coloring(spec);
            assert_eq!(c.k(), family_phi(spec), "{spec:?}");
            assert!(verify_b_coloring(&g, &c).unwrap().is_b_coloring(), "{spec:?}");
        }
    }
}

#[test]
fn generic_path() {
    let p3 = build_family(FamilySpec::path(3)).unwrap();
    let c = color_generic_path_corona(10, &p3).unwrap();
    checked(&c);
    assert_eq!(c.k(), 9);
    assert!(c.stated_rainbow_holds);
    for j in 0..9 {
        let s = c.graph.vertex(VertexLabel::inserted(j, j + 1)).unwrap();
        assert!(c.report.is_b_vertex(s), "s_{j},{}", j + 1);
    }

    let k1 = build_family(FamilySpec::complete(1)).unwrap();
    assert_eq!(color_generic_path_corona(12, &k1).unwrap().k(), 5);

    assert!(matches!(color_generic_path_corona(9, &p3), Err(ClosedFormError::PreconditionViolated(_))));
}

#[test]
fn generic_cycle() {
    let p3 = build_family(FamilySpec::path(3)).unwrap();
    for n in [10, 11] {
        let c = color_generic_cycle_corona(n, &p3).unwrap();
        checked(&c);
        assert_eq!(c.k(), 9);
    }
    assert!(matches!(color_generic_cycle_corona(8, &p3), Err(ClosedFormError::PreconditionViolated(_))));
}

#[test]
fn generic_star() {
    let p3 = build_family(FamilySpec::path(3)).unwrap();
    let c = color_generic_star_corona(4, &p3, &optimal_family_coloring(FamilySpec::path(3))).unwrap();
    checked(&c);
    assert_eq!(c.k(), 6);

    let p5 = build_family(FamilySpec::path(5)).unwrap();
    let c = color_generic_star_corona(3, &p5, &optimal_family_coloring(FamilySpec::path(5))).unwrap();
    checked(&c);
    assert_eq!(c.k(), 6);

    for t in 1..=4 {
        let kt = build_family(FamilySpec::complete(t)).unwrap();
        for n in 3..=7 {
            let c = color_generic_star_corona(n, &kt, &optimal_family_coloring(FamilySpec::complete(t))).unwrap();
            assert_eq!(c.k(), n.min(t + 2) + t, "S_{n} K_{t}");
        }
    }
}

#[test]
fn generic_star_rejects_bad_inputs() {
    // Δ(S_6)+1 = 7 is not below min{3, 9} + 2
    let s6 = build_family(FamilySpec::star(6)).unwrap();
    let c = optimal_family_coloring(FamilySpec::star(6));
    assert!(matches!(color_generic_star_corona(3, &s6, &c), Err(ClosedFormError::HypothesisViolated(_))));

    let p3 = build_family(FamilySpec::path(3)).unwrap();
    let not_b = Coloring::new(3, vec![0, 1, 2]).unwrap();
    assert!(matches!(color_generic_star_corona(4, &p3, &not_b), Err(ClosedFormError::PreconditionViolated(_))));
}

#[test]
fn k2_corona_adds_one_color() {
    for (spec, k) in [(FamilySpec::path(3), 3), (FamilySpec::complete(4), 5), (FamilySpec::cycle(4), 3)] {
        let h = build_family(spec).unwrap();
        let c = color_k2_corona(&h, &optimal_family_coloring(spec)).unwrap();
        checked(&c);
        assert_eq!(c.k(), k, "{spec:?}");
        assert_eq!(c.origin, Origin::Formula);
    }
}

#[test]
fn constructed_examples() {
    let cases = [
        (FamilySpec::path(4), FamilySpec::path(4), 5),
        (FamilySpec::cycle(5), FamilySpec::complete(4), 6),
        (FamilySpec::path(9), FamilySpec::star(4), 8),
        (FamilySpec::complete(2), FamilySpec::path(4), 4),
    ];
    for (left, right, k) in cases {
        let c = construct_coloring(left, right).unwrap();
        checked(&c);
        assert_eq!(c.k(), k, "{left:?} {right:?}");
    }
}

#[test]
fn clean_tables_keep_their_rainbow() {
    let c = construct_coloring(FamilySpec::path(10), FamilySpec::path(3)).unwrap();
    assert_eq!(c.origin, Origin::Formula);
    assert!(!c.repaired);
    assert!(!c.stated_rainbow.is_empty());
    assert!(c.stated_rainbow_holds);
}

#[test]
fn unsupported_pairs_are_refused() {
    let err = construct_coloring(FamilySpec::complete(5), FamilySpec::path(3)).unwrap_err();
    assert!(matches!(err, ClosedFormError::Unsupported { .. }));
}

#[test]
fn stored_witness_for_k6_k2() {
    let c = construct_coloring(FamilySpec::complete(6), FamilySpec::complete(2)).unwrap();
    checked(&c);
    assert_eq!(c.k(), 7);
    assert_eq!(c.origin, Origin::Stored);
    assert!(c.repaired);
}

#[test]
fn star_from_p3_carries_neighbourhoods() {
    let c = construct_coloring(FamilySpec::complete(10), FamilySpec::star(3)).unwrap();
    checked(&c);
    assert_eq!(c.k(), 11);
    let center = |i| c.coloring.color(c.graph.vertex(VertexLabel::Copy(i, 0)).unwrap());
    let base = |i| c.coloring.color(c.graph.vertex(VertexLabel::Base(i)).unwrap());
    // the middle of P_3 repeats c(u_i) in the table, and so does the center
    let agree = (0..10).filter(|&i| center(i) == base(i)).count();
    assert!(agree > 0);
}

#[test]
fn drafts_expose_reductions() {
    // the S_n ⊡ S_t table writes values past k - 1 for the larger copies
    let (_, d) = draft(FamilySpec::star(3), FamilySpec::star(9)).unwrap();
    assert!(d.reduced);
    let (_, d) = draft(FamilySpec::path(10), FamilySpec::path(3)).unwrap();
    assert!(!d.reduced);
}

#[test]
fn plan_params_match_tables() {
    let p = plan_params(FamilySpec::path(4), FamilySpec::star(4)).unwrap().unwrap();
    // m(P_4 ⊡ S_4) = 6: three inserted vertices of degree 12 and the four
    // star centers of degree 5 or 6
    assert_eq!(p.alpha, Some(3));
    assert_eq!(p.skeleton_modulus, 4);
    assert_eq!(p.cycle_closure, None);

    let p = plan_params(FamilySpec::cycle(5), FamilySpec::star(4)).unwrap().unwrap();
    let g = construct_coloring(FamilySpec::cycle(5), FamilySpec::star(4)).unwrap().graph;
    assert_eq!(p.alpha, Some(m_degree(&g) - 5));
    assert_eq!(p.cycle_closure, Some(4));

    let p = plan_params(FamilySpec::cycle(10), FamilySpec::path(3)).unwrap().unwrap();
    assert_eq!((p.alpha, p.skeleton_modulus, p.cycle_closure), (None, 9, Some(0)));

    assert_eq!(plan_params(FamilySpec::star(3), FamilySpec::path(3)).unwrap(), None);
}

#[test]
fn tables_run_outside_their_range() {
    // K_8 ⊡ P_4 is drawn with ten colors, below the n ≥ 2t+1 hypothesis
    assert!(construct_coloring(FamilySpec::complete(8), FamilySpec::path(4)).is_err());
    let c = construct_with_colors(FamilySpec::complete(8), FamilySpec::path(4), 10).unwrap();
    checked(&c);
    assert_eq!(c.k(), 10);
    assert_eq!(c.branch, None);
    assert!(construct_with_colors(FamilySpec::path(4), FamilySpec::path(4), 40).is_err());
}
