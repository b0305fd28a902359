//! Fixtures shared by the integration, property and acceptance targets.
#![allow(dead_code)]

pub mod criteria;
pub mod props;

use finrel::ambient::{AmbientRef, AmbientRing, Component, Element, MapBlock, RingMap};
use finrel::effectivity::CocycleData;
use finrel::eqrel::{relation_from_group_action, Copies, RelationPresentation};
use finrel::invariants::GroupAction;
use finrel::pinch::{PinchInput, PushoutDiagram};
use finrel::poly::ring;
use finrel::quotient::QuotientSource;
use finrel::syntax::parse_polynomial;
use finrel::{Field, Polynomial, RingRef};

pub fn poly(r: &RingRef, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn polys(r: &RingRef, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|s| poly(r, s)).collect()
}

/// Parses into a single-component ambient.
pub fn el(a: &AmbientRef, s: &str) -> Element {
    let r = a.single().unwrap().ring().clone();
    a.from_poly(&poly(&r, s)).unwrap()
}

pub fn els(a: &AmbientRef, gens: &[&str]) -> Vec<Element> {
    gens.iter().map(|s| el(a, s)).collect()
}

pub fn fields() -> [Field; 3] {
    [Field::Rationals, Field::Prime(2), Field::Prime(3)]
}

/// The plane with the sign action `(x, y) -> (-x, -y)`.
pub fn sign_action() -> GroupAction {
    let r = ring(Field::Rationals, &["x", "y"]);
    GroupAction::generated_by(&r, &[polys(&r, &["-x", "-y"])]).unwrap()
}

pub fn sign_relation() -> RelationPresentation {
    relation_from_group_action(&sign_action()).unwrap()
}

/// The relation cut out by the degree-two invariants of the sign action.
pub fn invariant_relation() -> RelationPresentation {
    let a = sign_action().ambient();
    let d = Copies::suffixed(&a).pair_ring(0, 0).unwrap();
    RelationPresentation::from_ideal(&a, polys(&d, &["x1^2 - x2^2", "y1^2 - y2^2", "x1*y1 - x2*y2"])).unwrap()
}

/// `k[x, e]/(e^2)` with the identity and the map `a + e*b -> a + e*(b + a')`.
pub fn dual_number_pair(field: Field) -> (AmbientRef, QuotientSource) {
    let r = ring(field, &["x", "e"]);
    let d = AmbientRing::quotient(&r, vec![poly(&r, "e^2")]).unwrap();
    let g1 = RingMap::identity(&d);
    let g2 = RingMap::single(&d, &d, polys(&r, &["x + e", "e"])).unwrap();
    (d.clone(), QuotientSource::map_pair(g1, g2).unwrap())
}

/// Two copies of affine 3-space whose x-axes are each collapsed to a point
/// (by differentiating along them) and whose origins are identified.
pub fn collapsed_axes_pair(field: Field) -> (AmbientRef, QuotientSource) {
    let y1 = ring(field, &["x1", "y1", "z1"]);
    let y2 = ring(field, &["x2", "y2", "z2"]);
    let source = AmbientRing::new(vec![Component::free(&y1), Component::free(&y2)]).unwrap();
    let t = ring(field, &["x", "e"]);
    let dual = Component::new(&t, vec![poly(&t, "e^2")]).unwrap();
    let pt_ring = ring(field, &["w"]);
    let pt = Component::new(&pt_ring, vec![poly(&pt_ring, "w")]).unwrap();
    let target = AmbientRing::new(vec![dual.clone(), dual, pt]).unwrap();
    let block = |c: usize, r: &RingRef, x: &str| MapBlock {
        source_component: c,
        images: polys(r, &[x, "0", "0"]),
    };
    let g1 = RingMap::new(&source, &target, vec![block(0, &t, "x"), block(1, &t, "x"), block(0, &pt_ring, "0")]).unwrap();
    let g2 = RingMap::new(&source, &target, vec![block(0, &t, "x + e"), block(1, &t, "x + e"), block(1, &pt_ring, "0")]).unwrap();
    (source, QuotientSource::map_pair(g1, g2).unwrap())
}

/// Two embeddings of the plane's coordinate ring that differ along `v = 0`.
pub fn plane_subalgebras(field: Field) -> (AmbientRef, Vec<Element>, Vec<Element>) {
    let a = AmbientRing::polynomial(&ring(field, &["u", "v"]));
    let g1 = els(&a, &["u", "v^2", "v^3"]);
    let g2 = els(&a, &["u + v", "v^2", "v^3"]);
    (a, g1, g2)
}

/// A commuting square of homeomorphisms that is not a push-out.
pub fn crossing_square() -> PushoutDiagram {
    let a = AmbientRing::polynomial(&ring(Field::Rationals, &["x", "y"]));
    PushoutDiagram::Span {
        first: els(&a, &["x", "y^2", "y^3"]),
        second: els(&a, &["x + y", "x + x^2", "y^2", "y^3"]),
        claimed: els(&a, &["x + x^2", "x*y^2", "x*y^3", "y^2", "y^3"]),
        ambient: a,
    }
}

/// Binary forms of degree 2 and 3 with a quintic cocycle.
pub fn binary_form_cocycle(field: Field) -> CocycleData {
    let base = ring(field, &["x1", "x2"]);
    let a = AmbientRing::polynomial(&base);
    let copies = Copies::with_stems(&a, ["x", "y", "z"]).unwrap();
    let d = copies.pair_ring(0, 0).unwrap();
    let maps = polys(&base, &["x1^2", "x1*x2 - x2^2", "x2^3"]);
    CocycleData::new(copies, maps, poly(&d, "(x1*y2 - x2*y1)*y2^3")).unwrap()
}

/// `n` disjoint lines whose origins are glued to one point.
pub fn glued_lines(n: usize) -> PinchInput {
    let lines: Vec<RingRef> = (1..=n).map(|i| ring(Field::Rationals, &[format!("t{i}").as_str()])).collect();
    let a = AmbientRing::new(lines.iter().map(Component::free).collect()).unwrap();
    let ideal = (0..n).map(|i| a.in_component(i, &Polynomial::var(&lines[i], 0)).unwrap()).collect();
    let module_gens = (0..n - 1).map(|i| a.in_component(i, &Polynomial::one(&lines[i])).unwrap()).collect();
    PinchInput {
        ambient: a,
        ideal,
        lifts: vec![],
        module_gens,
    }
}

/// Elements of a product ambient, one monomial string per component entry.
pub fn in_component(a: &AmbientRef, i: usize, s: &str) -> Element {
    let r = a.component(i).ring().clone();
    a.in_component(i, &poly(&r, s)).unwrap()
}
