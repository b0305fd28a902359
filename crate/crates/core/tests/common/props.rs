//! Seeded randomized suites. Each returns the number of cases run.

use std::collections::HashMap;

use finrel::ambient::{AmbientRing, Element};
use finrel::effectivity::{check_cocycle, effectivity_test, CocycleData, Effectivity};
use finrel::eqrel::{relation_from_map, verify_relation, Copies, Mode};
use finrel::groebner::normal_form;
use finrel::linalg::Echelon;
use finrel::poly::ring;
use finrel::quotient::{algebra_span, coequalizer_kernel_basis, minimal_generators, QuotientSource};
use finrel::{Field, Ideal, Monomial, Polynomial, RingRef};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

const SEED: [u8; 32] = *b"finite-relations-property-seed!!";

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<u32, String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map(|()| cases).map_err(|e| e.to_string())
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what()))
    }
}

fn ok<T>(r: finrel::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn field_of(tag: u8) -> Field {
    match tag % 3 {
        0 => Field::Rationals,
        1 => Field::Prime(7),
        _ => Field::Prime(3),
    }
}

/// Terms as `(exponents, coefficient)`; coefficients are reduced in the field.
type Terms = Vec<(Vec<u32>, i64)>;

fn build(r: &RingRef, terms: &Terms) -> Polynomial {
    let field = r.field();
    Polynomial::from_terms(
        r,
        terms.iter().map(|(e, c)| (Monomial::from_exponents(e.clone()), field.from_int(*c))),
    )
}

fn terms(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    let mono = prop::collection::vec(0..=max_deg, nvars).prop_filter("degree", move |e| e.iter().sum::<u32>() <= max_deg);
    prop::collection::vec((mono, -3i64..=3), 0..=max_terms)
}

/// Membership in the span of `m * g` for monomials `m` of degree at most
/// `bound`: plain linear algebra, no Gröbner bases.
pub fn bounded_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let r = f.ring();
    let field = r.field();
    let gdeg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let top = (bound + gdeg).max(f.degree().unwrap());
    let cols = r.monomial_basis(top, false);
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let vector = |p: &Polynomial| {
        let mut v = vec![field.zero(); cols.len()];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let mut span = Echelon::new(field, cols.len());
    for g in gens {
        for m in r.monomial_basis(bound, false) {
            span.insert(vector(&g.mul_monomial(&m, &field.one())));
        }
    }
    span.contains(&vector(f))
}

/// Gröbner membership, normal forms and reduced bases against the
/// bounded-cofactor oracle on ideals in two variables.
pub fn groebner_oracle(cases: u32) -> Result<u32, String> {
    let strategy = (
        any::<u8>(),
        prop::collection::vec(terms(2, 2, 3), 1..=3),
        prop::collection::vec(terms(2, 1, 2), 3),
        terms(2, 3, 4),
    );
    run(cases, strategy, |(tag, gens, cofactors, f)| {
        let r = ring(field_of(tag), &["x", "y"]);
        let gens: Vec<Polynomial> = gens.iter().map(|t| build(&r, t)).collect();
        let ideal = Ideal::new(&r, gens.clone());
        let member = gens
            .iter()
            .zip(&cofactors)
            .fold(Polynomial::zero(&r), |acc, (g, h)| &acc + &(g * &build(&r, h)));
        check(ok(ideal.contains(&member))?, || format!("combination {member} not recognised"))?;
        check(bounded_member(&member, &gens, 1), || "oracle misses a combination".into())?;

        let f = build(&r, &f);
        let by_basis = ok(ideal.contains(&f))?;
        let by_oracle = bounded_member(&f, &gens, 5);
        check(by_basis == by_oracle, || format!("{f}: basis says {by_basis}, oracle says {by_oracle}"))?;

        let gb = ok(ideal.groebner())?;
        let nf = ok(normal_form(&f, &gb))?;
        check(bounded_member(&(&f - &nf), &gens, 5), || format!("{f} - NF not in ideal"))?;
        check(ok(normal_form(&(&f + &member), &gb))? == nf, || "normal form not canonical".into())?;

        let shuffled: Vec<Polynomial> = gens.iter().rev().map(|g| g.scale(&r.field().from_int(2))).collect();
        let gb2 = ok(Ideal::new(&r, shuffled).groebner())?;
        check(gb.polys() == gb2.polys(), || "reduced basis depends on generator order".into())
    })
}

/// Maps `k[x]` or `k[x, y]` finite over the image: the top-degree forms of
/// the first generators are pure powers of distinct variables.
fn finite_map() -> impl Strategy<Value = (u8, bool, Vec<u32>, Vec<Terms>, Terms)> {
    (any::<u8>(), any::<bool>(), prop::collection::vec(1u32..=2, 2), prop::collection::vec(terms(2, 1, 2), 2), terms(2, 2, 2))
}

fn map_polys((tag, plane, powers, lower, extra): &(u8, bool, Vec<u32>, Vec<Terms>, Terms)) -> (RingRef, Vec<Polynomial>) {
    let names: &[&str] = if *plane { &["x", "y"] } else { &["x"] };
    let r = ring(field_of(*tag), names);
    let n = names.len();
    let restrict = |t: &Terms, cap: u32| -> Terms {
        t.iter()
            .filter(|(e, _)| e[n..].iter().all(|&k| k == 0) && e.iter().sum::<u32>() < cap)
            .map(|(e, c)| (e[..n].to_vec(), *c))
            .collect()
    };
    let mut maps: Vec<Polynomial> = (0..n)
        .map(|i| {
            let lead = Polynomial::var(&r, i).pow(powers[i]);
            &lead + &build(&r, &restrict(&lower[i], powers[i]))
        })
        .collect();
    let extra = build(&r, &restrict(extra, 3));
    if !extra.is_zero() {
        maps.push(extra);
    }
    (r, maps)
}

/// Relations defined by finite maps satisfy every scheme axiom.
pub fn relations_from_maps(cases: u32) -> Result<u32, String> {
    run(cases, finite_map(), |input| {
        let (r, maps) = map_polys(&input);
        let a = AmbientRing::polynomial(&r);
        let elems: Vec<Element> = maps.iter().map(|f| a.from_poly(f).unwrap()).collect();
        let rel = ok(relation_from_map(&a, &elems))?;
        let report = ok(verify_relation(&rel, Mode::Scheme))?;
        check(report.all_passed(), || format!("{maps:?}: {report:?}"))?;
        let twice = ok(ok(rel.swap())?.swap())?;
        check(ok(finrel::groebner::ideal_equal(twice.block(0, 0), rel.block(0, 0)))?, || "swap is not an involution".into())
    })
}

/// Kernel bases of map relations: membership recheck, constants, product
/// closure and generator minimality.
pub fn kernel_closure(cases: u32) -> Result<u32, String> {
    run(cases, finite_map(), |input| {
        let (r, maps) = map_polys(&input);
        let a = AmbientRing::polynomial(&r);
        let elems: Vec<Element> = maps.iter().map(|f| a.from_poly(f).unwrap()).collect();
        let d = if r.nvars() == 1 { 5 } else { 3 };
        let source = QuotientSource::Relation(ok(relation_from_map(&a, &elems))?);
        let t = ok(coequalizer_kernel_basis(&source, d))?;
        check(t.contains(&a.one()), || "constants missing".into())?;
        let basis = t.basis();
        for f in &basis {
            check(ok(source.is_member(f))?, || format!("{f} fails the recheck"))?;
        }
        for (i, f) in basis.iter().enumerate() {
            for g in &basis[i..] {
                if f.degree().unwrap_or(0) + g.degree().unwrap_or(0) <= d {
                    let fg = ok(a.mul(f, g))?;
                    check(t.contains(&fg), || format!("{f} * {g} escapes the span"))?;
                }
            }
        }
        let table = ok(minimal_generators(&t))?;
        for (k, g) in table.generators.iter().enumerate() {
            let others: Vec<Element> = table.generators.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, h)| h.clone()).collect();
            let span = ok(algebra_span(&a, &others, g.degree().unwrap_or(0)))?;
            check(!span.contains(g), || format!("generator {g} is redundant"))?;
        }
        Ok(())
    })
}

/// Coboundaries `g(x) - g(y)` are cocycles with trivial class.
pub fn coboundaries_are_cocycles(cases: u32) -> Result<u32, String> {
    let strategy = (any::<u8>(), 1u32..=2, 1u32..=2, 2u32..=4, prop::collection::vec(-3i64..=3, 5), prop::collection::vec(-3i64..=3, 4));
    run(cases, strategy, |(tag, a, b, d, gc, mc)| {
        let base = ring(field_of(tag), &["x1", "x2"]);
        let amb = AmbientRing::polynomial(&base);
        let copies = Copies::with_stems(&amb, ["x", "y", "z"]).unwrap();
        let pair = copies.pair_ring(0, 0).unwrap();
        let field = base.field();
        let form = |deg: u32, coeffs: &[i64]| {
            Polynomial::from_terms(
                &base,
                (0..=deg).map(|i| (Monomial::from_exponents(vec![deg - i, i]), field.from_int(coeffs[i as usize % coeffs.len()]))),
            )
        };
        let mut maps = vec![Polynomial::var(&base, 0).pow(a), Polynomial::var(&base, 1).pow(b)];
        let mixed = form(3, &mc);
        if !mixed.is_zero() {
            maps.push(mixed);
        }
        let g = form(d, &gc);
        let x_copy = g.map_vars(&pair, &[0, 1]);
        let y_copy = g.map_vars(&pair, &[2, 3]);
        let cob = &x_copy - &y_copy;
        if cob.is_zero() {
            return Ok(());
        }
        let data = ok(CocycleData::new(copies, maps, cob))?;
        check(ok(check_cocycle(&data))?, || format!("{g}: coboundary is not a cocycle"))?;
        let report = ok(effectivity_test(&data))?;
        check(report.verdict == Effectivity::Effective, || format!("{g}: coboundary has a nonzero class"))?;
        check(report.dim_v <= report.dim_w, || "dim V exceeds dim W".into())
    })
}
