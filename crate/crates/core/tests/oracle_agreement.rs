use svn_corona::closed_form::family_phi;
use svn_corona::oracle::exact_b_chromatic_with_witness;
use svn_corona::{
    build_family, construct_coloring, exact_b_chromatic, exact_chromatic, m_degree, phi_closed_form, subdivision,
    svn_corona, verify_b_coloring, FamilyKind, FamilySpec, Graph, SearchBudget,
};

fn corona(left: FamilySpec, right: FamilySpec) -> Graph {
    svn_corona(&build_family(left).unwrap(), &build_family(right).unwrap()).unwrap()
}

fn sandwich(g: &Graph, k: usize) {
    let chi = exact_chromatic(g, &SearchBudget::default().with_max_vertices(64)).unwrap();
    let upper = m_degree(g).min(g.max_degree() + 1);
    assert!(chi <= k && k <= upper, "χ={chi} k={k} upper={upper}");
}

#[test]
fn small_coronas_match_known_values() {
    let cases = [
        (FamilySpec::path(3), FamilySpec::path(3), 4),
        (FamilySpec::path(3), FamilySpec::cycle(4), 4),
        (FamilySpec::cycle(3), FamilySpec::path(3), 5),
        (FamilySpec::complete(2), FamilySpec::path(3), 3),
        (FamilySpec::complete(2), FamilySpec::path(4), 4),
        (FamilySpec::complete(2), FamilySpec::cycle(4), 3),
        (FamilySpec::complete(4), FamilySpec::complete(1), 4),
    ];
    for (left, right, phi) in cases {
        let g = corona(left, right);
        let r = exact_b_chromatic_with_witness(&g, &SearchBudget::default()).unwrap();
        assert_eq!(r.phi, phi, "{left:?} {right:?}");
        assert!(verify_b_coloring(&g, &r.coloring).unwrap().is_b_coloring());
        assert!(r.chromatic <= r.phi && r.phi <= r.upper_bound);
    }
}

#[test]
fn every_small_supported_pair_agrees_with_the_oracle() {
    let mut checked = 0;
    for left_kind in FamilyKind::ALL {
        for right_kind in FamilyKind::ALL {
            for n in left_kind.min_size()..=8 {
                for t in right_kind.min_size()..=8 {
                    let (left, right) = (FamilySpec::new(left_kind, n), FamilySpec::new(right_kind, t));
                    let Ok(r) = phi_closed_form(left, right) else { continue };
                    let Some(value) = r.value else { continue };
                    let g = corona(left, right);
                    if g.order() > 20 {
                        continue;
                    }
                    let phi = exact_b_chromatic(&g, &SearchBudget::default()).unwrap();
                    assert_eq!(phi, value, "{left:?} {right:?} ({})", r.branch.unwrap_or("-"));
                    sandwich(&g, phi);
                    checked += 1;
                }
            }
        }
    }
    eprintln!("oracle pairs checked: {checked}");
    assert!(checked >= 10, "only {checked} pairs fit the oracle");
}

#[test]
fn base_families() {
    let cases = [
        (FamilySpec::path(3), 2),
        (FamilySpec::path(4), 2),
        (FamilySpec::path(5), 3),
        (FamilySpec::path(6), 3),
        (FamilySpec::cycle(3), 3),
        (FamilySpec::cycle(4), 2),
        (FamilySpec::cycle(5), 3),
        (FamilySpec::cycle(6), 3),
        (FamilySpec::star(3), 2),
        (FamilySpec::star(4), 2),
        (FamilySpec::star(5), 2),
    ];
    for (spec, phi) in cases {
        let g = build_family(spec).unwrap();
        assert_eq!(exact_b_chromatic(&g, &SearchBudget::default()).unwrap(), phi, "{spec:?}");
        assert_eq!(family_phi(spec), phi, "{spec:?}");
    }
    for n in 2..=6 {
        let g = build_family(FamilySpec::complete(n)).unwrap();
        assert_eq!(exact_b_chromatic(&g, &SearchBudget::default()).unwrap(), n);
    }
}

#[test]
fn base_families_up_to_order_eight() {
    for kind in FamilyKind::ALL {
        for size in kind.min_size().max(1)..=8 {
            let spec = FamilySpec::new(kind, size);
            if spec.order() > 8 {
                continue;
            }
            let g = build_family(spec).unwrap();
            assert_eq!(exact_b_chromatic(&g, &SearchBudget::default()).unwrap(), family_phi(spec), "{spec:?}");
        }
    }
}

#[test]
fn subdivided_k5_has_five_colors() {
    let s = subdivision(&build_family(FamilySpec::complete(5)).unwrap());
    assert_eq!(s.order(), 15);
    assert_eq!(exact_b_chromatic(&s, &SearchBudget::default()).unwrap(), 5);

    // S(K_5) sits inside K_5 ⊡ K_1 as its base and inserted vertices
    let c = construct_coloring(FamilySpec::complete(5), FamilySpec::complete(1)).unwrap();
    assert_eq!(c.k(), 5);
    let restricted = c.coloring.prefix(15);
    let report = verify_b_coloring(&c.graph.prefix(15), &restricted).unwrap();
    assert!(report.is_b_coloring());
}

#[test]
fn star_coronas_gain_one_color() {
    let budget = SearchBudget::default().with_max_vertices(40);
    for n in 3..=4 {
        for right in [FamilySpec::path(3), FamilySpec::cycle(3), FamilySpec::cycle(4), FamilySpec::complete(2)] {
            let h = build_family(right).unwrap();
            let g = corona(FamilySpec::star(n), right);
            assert_eq!(
                exact_chromatic(&g, &budget).unwrap(),
                exact_chromatic(&h, &budget).unwrap() + 1,
                "S_{n} {right:?}"
            );
        }
    }
}

#[test]
fn oracle_examples() {
    let budget = SearchBudget::default();
    assert_eq!(exact_chromatic(&build_family(FamilySpec::cycle(5)).unwrap(), &budget).unwrap(), 3);
    assert_eq!(exact_chromatic(&build_family(FamilySpec::complete(6)).unwrap(), &budget).unwrap(), 6);
    let s3p3 = corona(FamilySpec::star(3), FamilySpec::path(3));
    assert_eq!(exact_chromatic(&s3p3, &budget).unwrap(), 3);

    let p5 = build_family(FamilySpec::path(5)).unwrap();
    assert!(svn_corona::exists_b_coloring(&p5, 3, &budget).unwrap().is_some());
    let c4 = build_family(FamilySpec::cycle(4)).unwrap();
    assert!(svn_corona::exists_b_coloring(&c4, 3, &budget).unwrap().is_none());
    let p3c4 = corona(FamilySpec::path(3), FamilySpec::cycle(4));
    assert!(svn_corona::exists_b_coloring(&p3c4, 5, &budget).unwrap().is_none());
}
