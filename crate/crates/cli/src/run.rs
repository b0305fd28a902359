//! Statement execution.
//!
//! Declarations build library objects; commands call exactly one library
//! operation each and turn its result into a [`CommandResult`]. Execution
//! stops at the first error, which is reported against its statement.

use std::collections::HashMap;

use finrel::ambient::{AmbientMembership, AmbientRef, AmbientRing, Component, Element, MapBlock, RingMap};
use finrel::effectivity::{effectivity_over, CocycleData, Effectivity};
use finrel::eqrel::{relation_from_group_action, relation_from_map_with, verify_relation, Copies, Mode, RelationPresentation};
use finrel::frobenius::{frobenius_exponent, frobenius_twist};
use finrel::groebner::{ideal_equal, ideal_intersect, radical_member};
use finrel::invariants::{invariant_basis, GroupAction};
use finrel::pinch::{pinch_generators, subalgebra_intersection_trunc, verify_pushout, PinchInput, PushoutDiagram, PushoutReport};
use finrel::quotient::{coequalizer_kernel_basis, default_names, minimal_generators, noetherian_probe, present_subalgebra, QuotientSource, TruncatedSubalgebra};
use finrel::syntax::Expr;
use finrel::{Budget, Error, Field, Ideal, PolyRing, Polynomial, Result, RingRef};

use crate::ast::*;
use crate::report::{CommandResult, Report, Table, Verdict};

/// Defaults for options a command leaves unset.
#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub max_degree: u32,
    pub primes: Vec<u64>,
    pub mode: Mode,
    /// S-pair cap for every ring without its own `budget=`.
    pub budget: Option<usize>,
    pub rmax: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_degree: 10,
            primes: vec![2, 3, 5],
            mode: Mode::Scheme,
            budget: None,
            rmax: 4,
        }
    }
}

pub fn run_script(script: &Script, settings: &Settings) -> Report {
    let mut env = Env {
        settings: settings.clone(),
        current: None,
        rings: HashMap::new(),
        polys: HashMap::new(),
        ideals: HashMap::new(),
        maps: HashMap::new(),
        groups: HashMap::new(),
        relations: HashMap::new(),
        decls: HashMap::new(),
    };
    let mut results = Vec::new();
    for s in &script.statements {
        let outcome = match &s.kind {
            StatementKind::Command(c) => env.command(s, c).map(Some),
            kind => env.declare(kind).map(|()| None),
        };
        match outcome {
            Ok(Some(r)) => results.push(r),
            Ok(None) => {}
            Err(e) => {
                let verdict = match e {
                    Error::BudgetExceeded { .. } => Verdict::BudgetExceeded,
                    _ => Verdict::Error,
                };
                let mut r = CommandResult::new(s.line, s.kind.to_string(), verdict);
                r.inputs = env.provenance(&references(&s.kind, &env));
                r.witnesses.push(e.to_string());
                results.push(r);
                break;
            }
        }
    }
    Report::new(results)
}

struct RelationEntry {
    relation: RelationPresentation,
    cocycle: Option<CocycleData>,
}

struct Decl {
    text: String,
    deps: Vec<String>,
}

struct Env {
    settings: Settings,
    current: Option<String>,
    rings: HashMap<String, AmbientRef>,
    /// Polys with the ring they were declared in.
    polys: HashMap<String, (String, Element)>,
    ideals: HashMap<String, (String, Ideal)>,
    maps: HashMap<String, RingMap>,
    groups: HashMap<String, GroupAction>,
    relations: HashMap<String, RelationEntry>,
    decls: HashMap<String, Decl>,
}

fn unsupported<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Unsupported(msg.into()))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn expr_names(e: &Expr, out: &mut Vec<String>) {
    e.vars(out);
}

fn element_names(e: &ElementExpr, out: &mut Vec<String>) {
    match e {
        ElementExpr::Single(x) => expr_names(x, out),
        ElementExpr::Tuple(parts) => parts.iter().for_each(|x| expr_names(x, out)),
    }
}

/// Declared names a statement mentions, including the ring that is current
/// when it runs.
fn references(kind: &StatementKind, env: &Env) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut idents: Vec<String> = Vec::new();
    let mut uses_current = false;
    let els = |v: &[ElementExpr], idents: &mut Vec<String>| v.iter().for_each(|e| element_names(e, idents));
    match kind {
        StatementKind::Ring { def: RingDef::Union(parts), .. } => out.extend(parts.iter().cloned()),
        StatementKind::Ring { .. } => {}
        StatementKind::Use(r) => out.push(r.clone()),
        StatementKind::Poly { value, .. } => {
            uses_current = true;
            element_names(value, &mut idents);
        }
        StatementKind::Ideal { def, .. } => {
            uses_current = true;
            match def {
                IdealDef::Gens(g) => g.iter().for_each(|e| expr_names(e, &mut idents)),
                IdealDef::Cap(a, b) => out.extend([a.clone(), b.clone()]),
            }
        }
        StatementKind::Map { source, target, body, .. } => {
            out.extend([source.clone(), target.clone()]);
            match body {
                MapBody::Images(i) => i.iter().for_each(|e| expr_names(e, &mut idents)),
                MapBody::Blocks(b) => b.iter().flat_map(|(_, i)| i).for_each(|e| expr_names(e, &mut idents)),
            }
        }
        StatementKind::Group { ring, elements, .. } => {
            out.push(ring.clone());
            elements.iter().flatten().for_each(|e| expr_names(e, &mut idents));
        }
        StatementKind::Relation { ring, body, .. } => {
            out.push(ring.clone());
            match body {
                RelationBody::Ideal(_) => {}
                RelationBody::Map { images, .. } => els(images, &mut idents),
                RelationBody::Group(g) => out.push(g.clone()),
            }
        }
        StatementKind::Command(c) => match &c.kind {
            CommandKind::Member { ideal, expr, .. } => {
                out.push(ideal.clone());
                expr_names(expr, &mut idents);
            }
            CommandKind::Equal(a, b) => out.extend([a.clone(), b.clone()]),
            CommandKind::Groebner(n) | CommandKind::VerifyRelation(n) | CommandKind::Invariants(n) | CommandKind::Effectivity(n) => {
                out.push(n.clone())
            }
            CommandKind::KernelBasis(s) | CommandKind::Generators(s) | CommandKind::Probe(s) => match s {
                Source::Relation(r) => out.push(r.clone()),
                Source::Maps(a, b) => out.extend([a.clone(), b.clone()]),
            },
            CommandKind::Present(g) => {
                uses_current = true;
                els(g, &mut idents);
            }
            CommandKind::SubalgebraMember { expr, gens } => {
                uses_current = true;
                element_names(expr, &mut idents);
                els(gens, &mut idents);
            }
            CommandKind::Intersect(a, b) | CommandKind::Frobenius { gens: a, sub: b } => {
                uses_current = true;
                els(a, &mut idents);
                els(b, &mut idents);
            }
            CommandKind::Pushout { first, second, claimed } => {
                uses_current = true;
                [first, second, claimed].into_iter().for_each(|g| els(g, &mut idents));
            }
            CommandKind::Pinch { ideal, lifts, module } => {
                uses_current = true;
                [ideal, lifts, module].into_iter().for_each(|g| els(g, &mut idents));
            }
            CommandKind::Twist(e) => {
                uses_current = true;
                expr_names(e, &mut idents);
            }
        },
    }
    if uses_current {
        if let Some(r) = &env.current {
            out.insert(0, r.clone());
        }
    }
    out.extend(idents.into_iter().filter(|n| env.polys.contains_key(n)));
    out
}

impl Env {
    fn ring(&self, name: &str) -> Result<&AmbientRef> {
        self.rings.get(name).ok_or_else(|| Error::Unsupported(format!("declared ring `{name}`")))
    }

    fn current(&self) -> Result<(String, AmbientRef)> {
        let name = self.current.clone().ok_or_else(|| Error::Unsupported("a current ring".into()))?;
        let a = self.ring(&name)?.clone();
        Ok((name, a))
    }

    fn budget(&self, own: Option<usize>) -> Budget {
        match own.or(self.settings.budget) {
            Some(max_pairs) => Budget {
                max_pairs,
                ..Budget::default()
            },
            None => Budget::default(),
        }
    }

    /// Rendered declarations behind `names`, dependencies first.
    fn provenance(&self, names: &[String]) -> Vec<String> {
        fn visit(env: &Env, name: &str, seen: &mut Vec<String>, out: &mut Vec<String>) {
            if seen.iter().any(|s| s == name) {
                return;
            }
            seen.push(name.to_string());
            if let Some(d) = env.decls.get(name) {
                for dep in &d.deps {
                    visit(env, dep, seen, out);
                }
                out.push(d.text.clone());
            }
        }
        let (mut seen, mut out) = (Vec::new(), Vec::new());
        for n in names {
            visit(self, n, &mut seen, &mut out);
        }
        out
    }

    fn eval_in(&self, ring: &RingRef, ring_name: Option<&str>, component: usize, e: &Expr) -> Result<Polynomial> {
        let lookup = |n: &str| match (self.polys.get(n), ring_name) {
            (Some((r, el)), Some(want)) if r == want => Some(el.part(component).clone()),
            _ => None,
        };
        e.eval(ring, &lookup)
    }

    fn element(&self, ring_name: &str, e: &ElementExpr) -> Result<Element> {
        let a = self.ring(ring_name)?;
        if let ElementExpr::Single(Expr::Var(n)) = e {
            if let Some((r, el)) = self.polys.get(n) {
                if r == ring_name {
                    return Ok(el.clone());
                }
            }
        }
        let parts: Vec<&Expr> = match e {
            ElementExpr::Single(x) => vec![x],
            ElementExpr::Tuple(parts) => parts.iter().collect(),
        };
        if parts.len() != a.ncomponents() {
            return Err(Error::ComponentMismatch {
                expected: a.ncomponents(),
                found: parts.len(),
            });
        }
        let polys = parts
            .iter()
            .enumerate()
            .map(|(i, x)| self.eval_in(a.component(i).ring(), Some(ring_name), i, x))
            .collect::<Result<Vec<_>>>()?;
        a.element(polys)
    }

    fn elements(&self, ring_name: &str, es: &[ElementExpr]) -> Result<Vec<Element>> {
        es.iter().map(|e| self.element(ring_name, e)).collect()
    }

    fn single_ring(&self, name: &str) -> Result<RingRef> {
        Ok(self.ring(name)?.single()?.ring().clone())
    }

    fn copies(&self, ring: &str, stems: &Option<[String; 3]>) -> Result<Copies> {
        let a = self.ring(ring)?;
        match stems {
            None => Ok(Copies::suffixed(a)),
            Some([x, y, z]) => Copies::with_stems(a, [x, y, z]),
        }
    }

    fn declare(&mut self, kind: &StatementKind) -> Result<()> {
        let deps = references(kind, self);
        let name = match kind {
            StatementKind::Ring { name, def, budget } => {
                let budget = self.budget(*budget);
                let ambient = match def {
                    RingDef::Polynomial { field, vars, modulus } => {
                        let r = PolyRing::new(*field, vars)?.with_budget(budget);
                        let m = modulus.iter().map(|e| self.eval_in(&r, None, 0, e)).collect::<Result<Vec<_>>>()?;
                        AmbientRing::new(vec![Component::new(&r, m)?])?
                    }
                    RingDef::Union(parts) => {
                        let mut comps = Vec::new();
                        for p in parts {
                            comps.extend(self.ring(p)?.components().iter().cloned());
                        }
                        AmbientRing::new(comps)?
                    }
                };
                self.rings.insert(name.clone(), ambient);
                self.current = Some(name.clone());
                name
            }
            StatementKind::Use(r) => {
                self.ring(r)?;
                self.current = Some(r.clone());
                return Ok(());
            }
            StatementKind::Poly { name, value } => {
                let (ring, _) = self.current()?;
                let e = self.element(&ring, value)?;
                self.polys.insert(name.clone(), (ring, e));
                name
            }
            StatementKind::Ideal { name, def } => {
                let (ring_name, a) = self.current()?;
                let comp = a.single()?;
                let r = comp.ring().clone();
                let ideal = match def {
                    IdealDef::Gens(g) => {
                        let mut gens = g.iter().map(|e| self.eval_in(&r, Some(&ring_name), 0, e)).collect::<Result<Vec<_>>>()?;
                        gens.extend(comp.modulus().gens().iter().cloned());
                        Ideal::new(&r, gens)
                    }
                    IdealDef::Cap(x, y) => ideal_intersect(&self.ideals[x].1, &self.ideals[y].1)?,
                };
                self.ideals.insert(name.clone(), (ring_name, ideal));
                name
            }
            StatementKind::Map { name, source, target, body } => {
                let (s, t) = (self.ring(source)?.clone(), self.ring(target)?.clone());
                let m = match body {
                    MapBody::Images(images) => {
                        let r = t.single()?.ring().clone();
                        let images = images.iter().map(|e| self.eval_in(&r, Some(target), 0, e)).collect::<Result<Vec<_>>>()?;
                        RingMap::single(&s, &t, images)?
                    }
                    MapBody::Blocks(blocks) => {
                        let mut out = Vec::new();
                        for (j, (c, images)) in blocks.iter().enumerate() {
                            let r = t.component(j).ring().clone();
                            let images = images.iter().map(|e| self.eval_in(&r, Some(target), j, e)).collect::<Result<Vec<_>>>()?;
                            out.push(MapBlock {
                                source_component: c - 1,
                                images,
                            });
                        }
                        RingMap::new(&s, &t, out)?
                    }
                };
                self.maps.insert(name.clone(), m);
                name
            }
            StatementKind::Group { name, ring, elements } => {
                let a = self.ring(ring)?;
                if !a.single()?.modulus().is_zero() {
                    return unsupported("a polynomial ring without modulus for a group action");
                }
                let r = a.single()?.ring().clone();
                let gens = elements
                    .iter()
                    .map(|g| g.iter().map(|e| self.eval_in(&r, Some(ring), 0, e)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                self.groups.insert(name.clone(), GroupAction::generated_by(&r, &gens)?);
                name
            }
            StatementKind::Relation { name, ring, stems, body } => {
                let entry = match body {
                    RelationBody::Ideal(gens) => {
                        let copies = self.copies(ring, stems)?;
                        let pair = copies.pair_ring(0, 0)?;
                        let gens = gens.iter().map(|e| self.eval_in(&pair, None, 0, e)).collect::<Result<Vec<_>>>()?;
                        RelationEntry {
                            relation: RelationPresentation::from_blocks(copies, vec![vec![gens]])?,
                            cocycle: None,
                        }
                    }
                    RelationBody::Map { images, cocycle } => {
                        let copies = self.copies(ring, stems)?;
                        let maps = self.elements(ring, images)?;
                        let cocycle = match cocycle {
                            None => None,
                            Some(f) => {
                                let pair = copies.pair_ring(0, 0)?;
                                let f = self.eval_in(&pair, None, 0, f)?;
                                let polys = maps.iter().map(|m| m.as_poly().clone()).collect();
                                Some(CocycleData::new(copies.clone(), polys, f)?)
                            }
                        };
                        RelationEntry {
                            relation: relation_from_map_with(copies, &maps)?,
                            cocycle,
                        }
                    }
                    RelationBody::Group(g) => RelationEntry {
                        relation: relation_from_group_action(&self.groups[g])?,
                        cocycle: None,
                    },
                };
                self.relations.insert(name.clone(), entry);
                name
            }
            StatementKind::Command(_) => unreachable!("commands are not declarations"),
        };
        self.decls.insert(name.clone(), Decl { text: kind.to_string(), deps });
        Ok(())
    }

    fn source(&self, s: &Source) -> Result<QuotientSource> {
        match s {
            Source::Relation(r) => Ok(QuotientSource::Relation(self.relations[r].relation.clone())),
            Source::Maps(a, b) => QuotientSource::map_pair(self.maps[a].clone(), self.maps[b].clone()),
        }
    }

    fn command(&self, s: &Statement, c: &Command) -> Result<CommandResult> {
        let mut r = CommandResult::new(s.line, s.kind.to_string(), Verdict::Info);
        r.inputs = self.provenance(&references(&s.kind, self));
        let o = &c.options;
        let degree = o.degree.unwrap_or(self.settings.max_degree);
        match &c.kind {
            CommandKind::Member { ideal, expr, radical } => {
                let (ring, i) = &self.ideals[ideal];
                let f = self.eval_in(i.ring(), Some(ring), 0, expr)?;
                let member = if *radical { radical_member(&f, i)? } else { i.contains(&f)? };
                r.verdict = pass(member);
                if !member && !*radical {
                    r.witnesses.push(format!("normal form {}", i.groebner()?.normal_form(&f)?));
                }
            }
            CommandKind::Equal(a, b) => {
                let (ia, ib) = (&self.ideals[a].1, &self.ideals[b].1);
                let equal = ideal_equal(ia, ib)?;
                r.verdict = pass(equal);
                if !equal {
                    for (x, y, nx, ny) in [(ia, ib, a, b), (ib, ia, b, a)] {
                        if let Some(g) = first_outside(x, y)? {
                            r.witnesses.push(format!("{g} lies in {nx} but not in {ny}"));
                            break;
                        }
                    }
                }
            }
            CommandKind::Groebner(i) => {
                let gb = self.ideals[i].1.groebner()?;
                let mut t = Table::new("reduced Groebner basis", &["generator"]);
                gb.polys().iter().for_each(|g| t.row(vec![g.to_string()]));
                r.tables.push(t);
            }
            CommandKind::VerifyRelation(name) => {
                let mode = o.mode.unwrap_or(self.settings.mode);
                let report = verify_relation(&self.relations[name].relation, mode)?;
                let mut t = Table::new(format!("axioms ({mode} mode)"), &["axiom", "result", "witness", "components"]);
                for v in &report.verdicts {
                    let witness = v.witness.as_ref().map_or("-".to_string(), |w| w.to_string());
                    let blocks = if v.blocks.is_empty() {
                        "-".to_string()
                    } else {
                        join(&v.blocks.iter().map(|b| b + 1).collect::<Vec<_>>())
                    };
                    t.row(vec![v.axiom.name().into(), pass(v.passed).as_str().into(), witness.clone(), blocks]);
                    if !v.passed {
                        r.witnesses.push(format!("{}: {witness}", v.axiom.name()));
                    }
                }
                r.verdict = pass(report.all_passed());
                r.tables.push(t);
            }
            CommandKind::KernelBasis(src) => {
                let t = coequalizer_kernel_basis(&self.source(src)?, degree)?;
                r.notes.push(format!("dimension {} through degree {degree}", t.dimension()));
                r.tables.push(graded_table("kernel basis", &t));
            }
            CommandKind::Generators(src) => {
                let table = minimal_generators(&coequalizer_kernel_basis(&self.source(src)?, degree)?)?;
                r.notes.push(format!("{} generators through degree {degree}", table.generators.len()));
                let mut t = Table::new("minimal generators", &["degree", "basis dim", "new", "generators"]);
                for (e, (&dim, &new)) in table.basis_dims.iter().zip(&table.new_per_degree).enumerate() {
                    let gens: Vec<&Element> = table.in_degree(e as u32).collect();
                    t.row(vec![e.to_string(), dim.to_string(), new.to_string(), join(&gens)]);
                }
                r.tables.push(t);
            }
            CommandKind::Probe(src) => {
                let g = noetherian_probe(&self.source(src)?, degree)?;
                let mut t = Table::new("generator growth", &["degree", "basis dim", "new generators"]);
                for row in &g.rows {
                    t.row(vec![row.degree.to_string(), row.basis_dim.to_string(), row.new_generators.to_string()]);
                }
                r.tables.push(t);
                r.notes.push(if g.unstabilized {
                    format!("new generators still appear in degree {degree}; heuristic evidence only")
                } else {
                    format!("no new generators in degree {degree}; heuristic evidence only")
                });
            }
            CommandKind::Present(gens) => {
                let (ring, a) = self.current()?;
                let gens = self.elements(&ring, gens)?;
                let names = default_names(gens.len());
                let ideal = present_subalgebra(&a, &gens, &names)?;
                let mut t = Table::new(format!("relations among {}", names.join(", ")), &["relation"]);
                ideal.groebner()?.polys().iter().for_each(|g| t.row(vec![g.to_string()]));
                r.tables.push(t);
            }
            CommandKind::SubalgebraMember { expr, gens } => {
                let (ring, a) = self.current()?;
                let f = self.element(&ring, expr)?;
                let oracle = AmbientMembership::new(&a, &self.elements(&ring, gens)?)?;
                match oracle.certificate(&f)? {
                    Some(cert) => {
                        r.verdict = Verdict::Pass;
                        let names = oracle.certificate_ring().names().join(", ");
                        r.witnesses.push(format!("certificate in {names}: {cert}"));
                    }
                    None => {
                        r.verdict = Verdict::Fail;
                        r.witnesses.push(format!("obstruction {}", oracle.obstruction(&f)?));
                    }
                }
            }
            CommandKind::Intersect(g1, g2) => {
                let (ring, a) = self.current()?;
                let t = subalgebra_intersection_trunc(&a, &self.elements(&ring, g1)?, &self.elements(&ring, g2)?, degree)?;
                r.notes.push(format!("dimension {} through degree {degree}", t.dimension()));
                r.tables.push(graded_table("intersection basis", &t));
            }
            CommandKind::Pushout { first, second, claimed } => {
                let (ring, a) = self.current()?;
                let diagram = PushoutDiagram::Span {
                    ambient: a,
                    first: self.elements(&ring, first)?,
                    second: self.elements(&ring, second)?,
                    claimed: self.elements(&ring, claimed)?,
                };
                pushout_checks(&mut r, &verify_pushout(&diagram, degree)?);
            }
            CommandKind::Pinch { ideal, lifts, module } => {
                let (ring, a) = self.current()?;
                let input = PinchInput {
                    ambient: a.clone(),
                    ideal: self.elements(&ring, ideal)?,
                    lifts: self.elements(&ring, lifts)?,
                    module_gens: self.elements(&ring, module)?,
                };
                let res = pinch_generators(&input, degree)?;
                let names = default_names(res.generators.len());
                let mut t = Table::new("generators", &["name", "origin", "generator"]);
                for ((n, g), origin) in names.iter().zip(&res.generators).zip(&res.origins) {
                    t.row(vec![n.clone(), origin.to_string(), g.to_string()]);
                }
                r.tables.push(t);
                let mut p = Table::new(format!("relations among {}", names.join(", ")), &["relation"]);
                res.presentation(&a)?.groebner()?.polys().iter().for_each(|g| p.row(vec![g.to_string()]));
                r.tables.push(p);
                pushout_checks(&mut r, &verify_pushout(&PushoutDiagram::Pinch(input, res), degree)?);
            }
            CommandKind::Invariants(g) => {
                let basis = invariant_basis(&self.groups[g], degree)?;
                let mut t = Table::new("invariant basis", &["degree", "dim", "basis"]);
                for (e, b) in basis.iter().enumerate() {
                    t.row(vec![e.to_string(), b.len().to_string(), join(b)]);
                }
                r.tables.push(t);
            }
            CommandKind::Effectivity(name) => {
                let data = self.relations[name].cocycle.as_ref().expect("checked at parse time");
                let mut fields = vec![data.field()];
                if data.field() == Field::Rationals {
                    for &p in o.primes.as_ref().unwrap_or(&self.settings.primes) {
                        fields.push(Field::prime(p)?);
                    }
                }
                let reports = effectivity_over(data, &fields)?;
                let mut t = Table::new("effectivity", &["field", "degree", "dim V", "dim W", "dim W/V", "verdict", "class"]);
                for rep in &reports {
                    t.row(vec![
                        rep.field.to_string(),
                        rep.degree.to_string(),
                        rep.dim_v.to_string(),
                        rep.dim_w.to_string(),
                        rep.dim_quotient().to_string(),
                        rep.verdict.to_string(),
                        format!("[{}]", join(&rep.class_coordinates)),
                    ]);
                }
                r.tables.push(t);
                let all = |v: Effectivity| reports.iter().all(|rep| rep.verdict == v);
                r.verdict = if all(Effectivity::Noneffective) {
                    Verdict::Noneffective
                } else if all(Effectivity::Effective) {
                    Verdict::Effective
                } else {
                    Verdict::Info
                };
            }
            CommandKind::Frobenius { gens, sub } => {
                let (ring, a) = self.current()?;
                let rmax = o.rmax.unwrap_or(self.settings.rmax);
                let found = frobenius_exponent(&a, &self.elements(&ring, sub)?, &self.elements(&ring, gens)?, rmax)?;
                match found {
                    Some(w) => {
                        r.verdict = Verdict::Pass;
                        r.witnesses.push(format!("r = {}, q = {}", w.r, w.q));
                        let names = w.certificate_ring.names().join(", ");
                        let mut t = Table::new(format!("certificates in {names}"), &["generator", "certificate"]);
                        for (g, cert) in gens.iter().zip(&w.certificates) {
                            t.row(vec![format!("({g})^{}", w.q), cert.to_string()]);
                        }
                        r.tables.push(t);
                    }
                    None => {
                        r.verdict = Verdict::Fail;
                        r.notes.push(format!("no Frobenius power up to r = {rmax} lands in the subalgebra"));
                    }
                }
            }
            CommandKind::Twist(e) => {
                let (ring, _) = self.current()?;
                let f = self.eval_in(&self.single_ring(&ring)?, Some(&ring), 0, e)?;
                let q = o.q.expect("checked at parse time");
                let mut t = Table::new(format!("coefficients raised to the power {q}"), &["result"]);
                t.row(vec![frobenius_twist(&f, q)?.to_string()]);
                r.tables.push(t);
            }
        }
        Ok(r)
    }
}

fn pass(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn first_outside(a: &Ideal, b: &Ideal) -> Result<Option<Polynomial>> {
    for g in a.gens() {
        if !b.contains(g)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

fn graded_table(title: &str, t: &TruncatedSubalgebra) -> Table {
    let mut table = Table::new(title, &["degree", "dim", "basis"]);
    for (e, b) in t.graded_basis().iter().enumerate() {
        table.row(vec![e.to_string(), b.len().to_string(), join(b)]);
    }
    table
}

fn pushout_checks(r: &mut CommandResult, report: &PushoutReport) {
    let mut t = Table::new(format!("push-out checks through degree {}", report.degree), &["check", "result", "witness"]);
    for c in &report.checks {
        let w = c.witness.as_ref().map_or("-".to_string(), |w| w.to_string());
        if !c.passed {
            r.witnesses.push(format!("{}: {w}", c.name));
        }
        t.row(vec![c.name.to_string(), pass(c.passed).as_str().into(), w]);
    }
    r.tables.push(t);
    r.verdict = pass(report.passed());
}
