//! Script syntax tree and its canonical rendering.
//!
//! Rendering produces one statement per line; reparsing the rendering
//! yields an equal tree (positions are not part of equality).

use std::fmt;

use finrel::eqrel::Mode;
use finrel::syntax::Expr;
use finrel::Field;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub line: usize,
    pub column: usize,
    pub kind: StatementKind,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum StatementKind {
    Ring { name: String, def: RingDef, budget: Option<usize> },
    Use(String),
    Poly { name: String, value: ElementExpr },
    Ideal { name: String, def: IdealDef },
    Map { name: String, source: String, target: String, body: MapBody },
    Group { name: String, ring: String, elements: Vec<Vec<Expr>> },
    Relation { name: String, ring: String, stems: Option<[String; 3]>, body: RelationBody },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq)]
pub enum RingDef {
    Polynomial { field: Field, vars: Vec<String>, modulus: Vec<Expr> },
    /// Disjoint union of previously declared rings.
    Union(Vec<String>),
}

/// A single expression, or one expression per component of a product.
#[derive(Clone, Debug, PartialEq)]
pub enum ElementExpr {
    Single(Expr),
    Tuple(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum IdealDef {
    Gens(Vec<Expr>),
    Cap(String, String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum MapBody {
    Images(Vec<Expr>),
    /// Per target component: the 1-based source component and its images.
    Blocks(Vec<(usize, Vec<Expr>)>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum RelationBody {
    /// Generators in the doubled ring.
    Ideal(Vec<Expr>),
    Map { images: Vec<ElementExpr>, cocycle: Option<Expr> },
    Group(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Command {
    pub kind: CommandKind,
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Relation(String),
    Maps(String, String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum CommandKind {
    Member { ideal: String, expr: Expr, radical: bool },
    Equal(String, String),
    Groebner(String),
    VerifyRelation(String),
    KernelBasis(Source),
    Generators(Source),
    Probe(Source),
    Present(Vec<ElementExpr>),
    SubalgebraMember { expr: ElementExpr, gens: Vec<ElementExpr> },
    Intersect(Vec<ElementExpr>, Vec<ElementExpr>),
    Pushout { first: Vec<ElementExpr>, second: Vec<ElementExpr>, claimed: Vec<ElementExpr> },
    Pinch { ideal: Vec<ElementExpr>, lifts: Vec<ElementExpr>, module: Vec<ElementExpr> },
    Invariants(String),
    Effectivity(String),
    Frobenius { gens: Vec<ElementExpr>, sub: Vec<ElementExpr> },
    Twist(Expr),
}

impl CommandKind {
    pub fn keyword(&self) -> &'static str {
        match self {
            CommandKind::Member { .. } | CommandKind::Equal(..) => "check",
            CommandKind::Groebner(_) => "groebner",
            CommandKind::VerifyRelation(_) => "verify-relation",
            CommandKind::KernelBasis(_) => "kernel-basis",
            CommandKind::Generators(_) => "generators",
            CommandKind::Probe(_) => "probe",
            CommandKind::Present(_) => "present",
            CommandKind::SubalgebraMember { .. } => "subalgebra-member",
            CommandKind::Intersect(..) => "intersect",
            CommandKind::Pushout { .. } => "pushout",
            CommandKind::Pinch { .. } => "pinch",
            CommandKind::Invariants(_) => "invariants",
            CommandKind::Effectivity(_) => "effectivity",
            CommandKind::Frobenius { .. } => "frobenius",
            CommandKind::Twist(_) => "twist",
        }
    }

    /// Option keys the command accepts.
    pub fn accepted_options(&self) -> &'static [&'static str] {
        match self {
            CommandKind::VerifyRelation(_) => &["mode"],
            CommandKind::KernelBasis(_)
            | CommandKind::Generators(_)
            | CommandKind::Probe(_)
            | CommandKind::Intersect(..)
            | CommandKind::Pushout { .. }
            | CommandKind::Pinch { .. }
            | CommandKind::Invariants(_) => &["degree"],
            CommandKind::Effectivity(_) => &["primes"],
            CommandKind::Frobenius { .. } => &["rmax"],
            CommandKind::Twist(_) => &["q"],
            _ => &[],
        }
    }
}

/// Per-command settings; absent values fall back to command-line defaults.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Options {
    pub degree: Option<u32>,
    pub mode: Option<Mode>,
    pub primes: Option<Vec<u64>>,
    pub rmax: Option<u32>,
    pub q: Option<u64>,
}

impl Options {
    pub fn keys(&self) -> Vec<&'static str> {
        let mut k = Vec::new();
        if self.degree.is_some() {
            k.push("degree");
        }
        if self.mode.is_some() {
            k.push("mode");
        }
        if self.primes.is_some() {
            k.push("primes");
        }
        if self.rmax.is_some() {
            k.push("rmax");
        }
        if self.q.is_some() {
            k.push("q");
        }
        k
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn field_name(f: &Field) -> String {
    match f {
        Field::Rationals => "QQ".into(),
        Field::Prime(p) => format!("FF({p})"),
    }
}

impl fmt::Display for ElementExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementExpr::Single(e) => write!(f, "{e}"),
            ElementExpr::Tuple(parts) => write!(f, "{{{}}}", join(parts, " | ")),
        }
    }
}

fn list(items: &[ElementExpr]) -> String {
    format!("({})", join(items, ", "))
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Relation(r) => write!(f, "{r}"),
            Source::Maps(a, b) => write!(f, "{a} {b}"),
        }
    }
}

impl fmt::Display for Options {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(d) = self.degree {
            write!(f, " degree={d}")?;
        }
        if let Some(m) = self.mode {
            write!(f, " mode={m}")?;
        }
        if let Some(p) = &self.primes {
            write!(f, " primes={}", join(p, ","))?;
        }
        if let Some(r) = self.rmax {
            write!(f, " rmax={r}")?;
        }
        if let Some(q) = self.q {
            write!(f, " q={q}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kw = self.kind.keyword();
        match &self.kind {
            CommandKind::Member { ideal, expr, radical } => {
                write!(f, "{kw} {ideal} {} {expr}", if *radical { "radical-member" } else { "member" })?
            }
            CommandKind::Equal(a, b) => write!(f, "{kw} {a} equal {b}")?,
            CommandKind::Groebner(n) | CommandKind::VerifyRelation(n) | CommandKind::Invariants(n) | CommandKind::Effectivity(n) => {
                write!(f, "{kw} {n}")?
            }
            CommandKind::KernelBasis(s) | CommandKind::Generators(s) | CommandKind::Probe(s) => write!(f, "{kw} {s}")?,
            CommandKind::Present(g) => write!(f, "{kw} {}", list(g))?,
            CommandKind::SubalgebraMember { expr, gens } => write!(f, "{kw} {expr} in {}", list(gens))?,
            CommandKind::Intersect(a, b) => write!(f, "{kw} {} {}", list(a), list(b))?,
            CommandKind::Pushout { first, second, claimed } => {
                write!(f, "{kw} {} {} claimed {}", list(first), list(second), list(claimed))?
            }
            CommandKind::Pinch { ideal, lifts, module } => {
                write!(f, "{kw} ideal {}", list(ideal))?;
                if !lifts.is_empty() {
                    write!(f, " lifts {}", list(lifts))?;
                }
                if !module.is_empty() {
                    write!(f, " module {}", list(module))?;
                }
            }
            CommandKind::Frobenius { gens, sub } => write!(f, "{kw} {} in {}", list(gens), list(sub))?,
            CommandKind::Twist(e) => write!(f, "{kw} {e}")?,
        }
        write!(f, "{}", self.options)
    }
}

impl fmt::Display for StatementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatementKind::Ring { name, def, budget } => {
                write!(f, "ring {name} = ")?;
                match def {
                    RingDef::Polynomial { field, vars, modulus } => {
                        write!(f, "{}[{}]", field_name(field), vars.join(", "))?;
                        if !modulus.is_empty() {
                            write!(f, " / ({})", join(modulus, ", "))?;
                        }
                    }
                    RingDef::Union(parts) => write!(f, "{}", parts.join(" + "))?,
                }
                if let Some(b) = budget {
                    write!(f, " budget={b}")?;
                }
                Ok(())
            }
            StatementKind::Use(r) => write!(f, "use {r}"),
            StatementKind::Poly { name, value } => write!(f, "poly {name} = {value}"),
            StatementKind::Ideal { name, def } => match def {
                IdealDef::Gens(g) => write!(f, "ideal {name} = ({})", join(g, ", ")),
                IdealDef::Cap(a, b) => write!(f, "ideal {name} = {a} cap {b}"),
            },
            StatementKind::Map { name, source, target, body } => {
                write!(f, "map {name} : {source} -> {target} = ")?;
                match body {
                    MapBody::Images(i) => write!(f, "({})", join(i, ", ")),
                    MapBody::Blocks(blocks) => {
                        let parts: Vec<String> = blocks.iter().map(|(c, i)| format!("{c}: ({})", join(i, ", "))).collect();
                        write!(f, "{{{}}}", parts.join(" | "))
                    }
                }
            }
            StatementKind::Group { name, ring, elements } => {
                let parts: Vec<String> = elements.iter().map(|e| format!("({})", join(e, ", "))).collect();
                write!(f, "group {name} on {ring} = {{{}}}", parts.join(", "))
            }
            StatementKind::Relation { name, ring, stems, body } => {
                write!(f, "relation {name} on {ring}")?;
                if let Some([a, b, c]) = stems {
                    write!(f, " copies ({a}, {b}, {c})")?;
                }
                write!(f, " = ")?;
                match body {
                    RelationBody::Ideal(g) => write!(f, "({})", join(g, ", ")),
                    RelationBody::Map { images, cocycle } => {
                        write!(f, "map {}", list(images))?;
                        if let Some(c) = cocycle {
                            write!(f, " cocycle {c}")?;
                        }
                        Ok(())
                    }
                    RelationBody::Group(g) => write!(f, "group {g}"),
                }
            }
            StatementKind::Command(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{};", s.kind)?;
        }
        Ok(())
    }
}
