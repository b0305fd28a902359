mod common;

use common::*;
use finrel::ambient::Element;
use finrel::effectivity::{effectivity_over, effectivity_test, CocycleData, Effectivity};
use finrel::eqrel::{relation_from_group_action, verify_relation, Axiom, Mode};
use finrel::groebner::subalgebra_member;
use finrel::invariants::{invariant_basis, GroupAction};
use finrel::pinch::{subalgebra_intersection_trunc, subalgebra_trunc, verify_pushout, PushoutDiagram};
use finrel::poly::ring;
use finrel::quotient::{coequalizer_kernel_basis, minimal_generators, present_subalgebra, default_names, QuotientSource};
use finrel::{Field, Ideal, Polynomial};

#[test]
fn collapsed_axes_at_degree_three() {
    let (a, src) = collapsed_axes_pair(Field::Rationals);
    let table = minimal_generators(&coequalizer_kernel_basis(&src, 3).unwrap()).unwrap();
    assert_eq!(table.generators.len(), 12);
    assert_eq!(table.new_per_degree, vec![0, 4, 4, 4]);
    for s in ["y1*x1^2", "z1*x1^2", "y1", "z1*x1"] {
        assert!(table.generators.contains(&in_component(&a, 0, s)), "{s}");
    }

    let (a, src) = collapsed_axes_pair(Field::Prime(2));
    let table = minimal_generators(&coequalizer_kernel_basis(&src, 3).unwrap()).unwrap();
    assert_eq!(table.generators.len(), 10);
    assert!(table.generators.contains(&in_component(&a, 1, "x2^2")));
    assert!(!table.generators.contains(&in_component(&a, 1, "y2*x2^2")));
}

#[test]
fn collapsed_axes_kernel_rechecks() {
    let (_, src) = collapsed_axes_pair(Field::Prime(3));
    let t = coequalizer_kernel_basis(&src, 4).unwrap();
    for f in t.basis() {
        assert!(src.is_member(&f).unwrap(), "{f}");
    }
}

#[test]
fn plane_intersection_is_symmetric_and_contained() {
    for field in fields() {
        let (a, g1, g2) = plane_subalgebras(field);
        let meet = subalgebra_intersection_trunc(&a, &g1, &g2, 5).unwrap();
        let swapped = subalgebra_intersection_trunc(&a, &g2, &g1, 5).unwrap();
        assert_eq!(meet.echelon().rows(), swapped.echelon().rows());
        let s1 = subalgebra_trunc(&a, &g1, 5).unwrap();
        let s2 = subalgebra_trunc(&a, &g2, 5).unwrap();
        for f in meet.basis() {
            assert!(s1.contains(&f) && s2.contains(&f), "{f}");
        }
    }
    let (a0, h1, h2) = plane_subalgebras(Field::Rationals);
    let char0 = subalgebra_intersection_trunc(&a0, &h1, &h2, 4).unwrap();
    for p in [2, 3] {
        let (a, g1, g2) = plane_subalgebras(Field::Prime(p));
        let meet = subalgebra_intersection_trunc(&a, &g1, &g2, 4).unwrap();
        assert!(meet.dimension() > char0.dimension());
        assert!(meet.contains(&el(&a, &format!("u^{p}"))));
    }
}

#[test]
fn crossing_square_memberships() {
    let r = ring(Field::Rationals, &["x", "y"]);
    let f = poly(&r, "2/3*x^3 + 1/2*x^2");
    assert!(subalgebra_member(&f, &polys(&r, &["x", "y^2", "y^3"]), &[]).unwrap().is_some());
    assert!(subalgebra_member(&f, &polys(&r, &["x + y", "x + x^2", "y^2", "y^3"]), &[]).unwrap().is_some());
    assert!(subalgebra_member(&f, &polys(&r, &["x + x^2", "x*y^2", "x*y^3", "y^2", "y^3"]), &[]).unwrap().is_none());
    let report = verify_pushout(&crossing_square(), 3).unwrap();
    let failing: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    assert_eq!(failing, vec!["intersection-in-claimed"]);
}

#[test]
fn glued_lines_presentations() {
    for n in 2..=4 {
        let input = glued_lines(n);
        let res = finrel::pinch::pinch_generators(&input, 3).unwrap();
        let pres = res.presentation(&input.ambient).unwrap();
        let z = pres.ring().clone();
        let mut want = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                want.push(poly(&z, &format!("z{i}*z{j}")));
            }
        }
        assert!(finrel::groebner::ideal_equal(&pres, &Ideal::new(&z, want)).unwrap(), "n = {n}");
        assert!(verify_pushout(&PushoutDiagram::Pinch(input, res), 3).unwrap().passed());
    }
}

#[test]
fn cusp_presentation() {
    let t = ring(Field::Rationals, &["t"]);
    let a = finrel::ambient::AmbientRing::polynomial(&t);
    let i = present_subalgebra(&a, &els(&a, &["t^2", "t^3"]), &default_names(2)).unwrap();
    let z = i.ring().clone();
    assert!(finrel::groebner::ideal_equal(&i, &Ideal::new(&z, polys(&z, &["z1^3 - z2^2"]))).unwrap());
}

#[test]
fn kernel_of_group_relation_matches_invariants() {
    let r = ring(Field::Rationals, &["x", "y"]);
    let actions = [
        GroupAction::generated_by(&r, &[polys(&r, &["-x", "-y"])]).unwrap(),
        GroupAction::generated_by(&r, &[polys(&r, &["y", "x"])]).unwrap(),
    ];
    for g in actions {
        let a = g.ambient();
        let t = coequalizer_kernel_basis(&QuotientSource::Relation(relation_from_group_action(&g).unwrap()), 4).unwrap();
        let inv = invariant_basis(&g, 4).unwrap();
        for (e, graded) in t.graded_basis().iter().enumerate() {
            assert_eq!(graded.len(), inv[e].len(), "degree {e}");
            for f in &inv[e] {
                assert!(t.contains(&a.from_poly(f).unwrap()), "{f}");
            }
        }
    }
}

#[test]
fn group_relations_satisfy_the_asserted_axioms() {
    let r = ring(Field::Rationals, &["x", "y"]);
    let actions = [
        polys(&r, &["-x", "-y"]),
        polys(&r, &["y", "x"]),
        polys(&r, &["-y", "x"]),
    ];
    for gen in actions {
        let g = GroupAction::generated_by(&r, &[gen]).unwrap();
        let rel = relation_from_group_action(&g).unwrap();
        let scheme = verify_relation(&rel, Mode::Scheme).unwrap();
        for axiom in [Axiom::Reflexivity, Axiom::Symmetry, Axiom::Finiteness] {
            assert!(scheme.passed(axiom), "{}", axiom.name());
        }
        assert!(verify_relation(&rel, Mode::Set).unwrap().passed(Axiom::Transitivity));
    }
}

#[test]
fn cocycle_class_survives_base_change_and_coordinate_change() {
    let c = binary_form_cocycle(Field::Rationals);
    let reports = effectivity_over(&c, &[Field::Prime(2), Field::Prime(3), Field::Prime(5)]).unwrap();
    assert!(reports.iter().all(|r| r.verdict == Effectivity::Noneffective && r.dim_quotient() == 1));

    // x1 -> x1 + x2 applied to every copy at once
    let base = c.base_ring().clone();
    let pair = c.copies().pair_ring(0, 0).unwrap();
    let shift = polys(&base, &["x1 + x2", "x2"]);
    let pair_shift = polys(&pair, &["x1 + x2", "x2", "y1 + y2", "y2"]);
    let maps: Vec<Polynomial> = c.maps().iter().map(|f| f.substitute(&shift, &base).unwrap()).collect();
    let f = c.cocycle().substitute(&pair_shift, &pair).unwrap();
    let moved = CocycleData::new(c.copies().clone(), maps, f).unwrap();
    let rep = effectivity_test(&moved).unwrap();
    assert_eq!(rep.verdict, Effectivity::Noneffective);
    assert_eq!(rep.dim_quotient(), 1);
}

#[test]
fn coboundary_in_the_quintic_degree_is_effective() {
    let c = binary_form_cocycle(Field::Rationals);
    let pair = c.copies().pair_ring(0, 0).unwrap();
    // a coboundary of the same degree as the quintic
    let g = poly(&pair, "x1^5 - y1^5");
    let cob = CocycleData::new(c.copies().clone(), c.maps().to_vec(), g).unwrap();
    assert_eq!(effectivity_test(&cob).unwrap().verdict, Effectivity::Effective);
}

#[test]
fn dual_number_kernel_in_small_degree() {
    let (a, src) = dual_number_pair(Field::Rationals);
    let t = coequalizer_kernel_basis(&src, 3).unwrap();
    let want: Vec<Element> = els(&a, &["1", "e", "e*x", "e*x^2"]);
    assert_eq!(t.dimension(), want.len());
    let (a, src) = dual_number_pair(Field::Prime(2));
    let t = coequalizer_kernel_basis(&src, 3).unwrap();
    assert!(t.contains(&el(&a, "x^2")));
    assert!(!t.contains(&el(&a, "x")));
}
