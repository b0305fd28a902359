//! Script parser and declaration checker.
//!
//! Parsing is two passes: syntax into [`Script`], then a walk that resolves
//! every name against earlier declarations. Both report `line:column`.

use std::collections::HashMap;

use finrel::ambient::AmbientRing;
use finrel::eqrel::{Copies, Mode};
use finrel::syntax::{tokenize, Expr, TokenKind, TokenStream};
use finrel::{Error, Field, PolyRing, Result};

use crate::ast::*;

/// Words that cannot name declared objects.
const RESERVED: &[&str] = &[
    "QQ", "FF", "ring", "use", "poly", "ideal", "map", "group", "relation", "on", "copies", "cocycle", "cap", "in",
    "claimed", "lifts", "module", "member", "radical-member", "equal", "check", "budget",
];

pub fn parse_script(text: &str) -> Result<Script> {
    let tokens = tokenize(text)?;
    let mut ts = TokenStream::new(&tokens);
    let mut statements = Vec::new();
    while !ts.at_eof() {
        let start = ts.peek();
        let (line, column) = (start.line, start.column);
        let kind = statement(&mut ts)?;
        ts.expect_sym(";")?;
        statements.push(Statement { line, column, kind });
    }
    let script = Script { statements };
    check_names(&script)?;
    Ok(script)
}

fn statement(ts: &mut TokenStream) -> Result<StatementKind> {
    let TokenKind::Ident(word) = &ts.peek().kind else {
        return ts.error("expected a statement");
    };
    match word.as_str() {
        "ring" => {
            ts.next();
            let name = ts.expect_ident()?;
            ts.expect_sym("=")?;
            let def = ring_def(ts)?;
            let budget = if ts.is_ident("budget") {
                ts.next();
                ts.expect_sym("=")?;
                Some(small_int(ts)? as usize)
            } else {
                None
            };
            Ok(StatementKind::Ring { name, def, budget })
        }
        "use" => {
            ts.next();
            Ok(StatementKind::Use(ts.expect_ident()?))
        }
        "poly" => {
            ts.next();
            let name = ts.expect_ident()?;
            ts.expect_sym("=")?;
            Ok(StatementKind::Poly { name, value: element(ts)? })
        }
        "ideal" => {
            ts.next();
            let name = ts.expect_ident()?;
            ts.expect_sym("=")?;
            let def = if ts.is_sym("(") {
                IdealDef::Gens(expr_tuple(ts)?)
            } else {
                let a = ts.expect_ident()?;
                ts.expect_keyword("cap")?;
                IdealDef::Cap(a, ts.expect_ident()?)
            };
            Ok(StatementKind::Ideal { name, def })
        }
        "map" => {
            ts.next();
            let name = ts.expect_ident()?;
            ts.expect_sym(":")?;
            let source = ts.expect_ident()?;
            ts.expect_sym("->")?;
            let target = ts.expect_ident()?;
            ts.expect_sym("=")?;
            let body = if ts.eat_sym("{") {
                let mut blocks = Vec::new();
                loop {
                    let c = small_int(ts)? as usize;
                    ts.expect_sym(":")?;
                    blocks.push((c, expr_tuple(ts)?));
                    if !ts.eat_sym("|") {
                        break;
                    }
                }
                ts.expect_sym("}")?;
                MapBody::Blocks(blocks)
            } else {
                MapBody::Images(expr_tuple(ts)?)
            };
            Ok(StatementKind::Map { name, source, target, body })
        }
        "group" => {
            ts.next();
            let name = ts.expect_ident()?;
            ts.expect_keyword("on")?;
            let ring = ts.expect_ident()?;
            ts.expect_sym("=")?;
            ts.expect_sym("{")?;
            let mut elements = vec![expr_tuple(ts)?];
            while ts.eat_sym(",") {
                elements.push(expr_tuple(ts)?);
            }
            ts.expect_sym("}")?;
            Ok(StatementKind::Group { name, ring, elements })
        }
        "relation" => {
            ts.next();
            let name = ts.expect_ident()?;
            ts.expect_keyword("on")?;
            let ring = ts.expect_ident()?;
            let stems = if ts.is_ident("copies") {
                ts.next();
                ts.expect_sym("(")?;
                let a = ts.expect_ident()?;
                ts.expect_sym(",")?;
                let b = ts.expect_ident()?;
                ts.expect_sym(",")?;
                let c = ts.expect_ident()?;
                ts.expect_sym(")")?;
                Some([a, b, c])
            } else {
                None
            };
            ts.expect_sym("=")?;
            let body = if ts.is_ident("map") {
                ts.next();
                let images = element_tuple(ts)?;
                let cocycle = if ts.is_ident("cocycle") {
                    ts.next();
                    Some(ts.parse_expr()?)
                } else {
                    None
                };
                RelationBody::Map { images, cocycle }
            } else if ts.is_ident("group") {
                ts.next();
                RelationBody::Group(ts.expect_ident()?)
            } else {
                RelationBody::Ideal(expr_tuple(ts)?)
            };
            Ok(StatementKind::Relation { name, ring, stems, body })
        }
        _ => Ok(StatementKind::Command(command(ts)?)),
    }
}

fn ring_def(ts: &mut TokenStream) -> Result<RingDef> {
    let field = if ts.is_ident("QQ") {
        ts.next();
        Some(Field::Rationals)
    } else if ts.is_ident("FF") {
        ts.next();
        ts.expect_sym("(")?;
        let p = small_int(ts)?;
        let field = Field::prime(p).or_else(|e| ts.error(e.to_string()))?;
        ts.expect_sym(")")?;
        Some(field)
    } else {
        None
    };
    let Some(field) = field else {
        let mut parts = vec![ts.expect_ident()?];
        while ts.eat_sym("+") {
            parts.push(ts.expect_ident()?);
        }
        return Ok(RingDef::Union(parts));
    };
    ts.expect_sym("[")?;
    let mut vars = vec![ts.expect_ident()?];
    while ts.eat_sym(",") {
        vars.push(ts.expect_ident()?);
    }
    ts.expect_sym("]")?;
    let modulus = if ts.eat_sym("/") { expr_tuple(ts)? } else { Vec::new() };
    Ok(RingDef::Polynomial { field, vars, modulus })
}

fn small_int(ts: &mut TokenStream) -> Result<u64> {
    let n = ts.expect_int()?;
    u64::try_from(n).or_else(|_| ts.error("integer out of range"))
}

fn small_u32(ts: &mut TokenStream) -> Result<u32> {
    let n = small_int(ts)?;
    u32::try_from(n).or_else(|_| ts.error("integer out of range"))
}

fn expr_tuple(ts: &mut TokenStream) -> Result<Vec<Expr>> {
    ts.expect_sym("(")?;
    let mut out = vec![ts.parse_expr()?];
    while ts.eat_sym(",") {
        out.push(ts.parse_expr()?);
    }
    ts.expect_sym(")")?;
    Ok(out)
}

fn element(ts: &mut TokenStream) -> Result<ElementExpr> {
    if ts.eat_sym("{") {
        let mut parts = vec![ts.parse_expr()?];
        while ts.eat_sym("|") {
            parts.push(ts.parse_expr()?);
        }
        ts.expect_sym("}")?;
        Ok(ElementExpr::Tuple(parts))
    } else {
        Ok(ElementExpr::Single(ts.parse_expr()?))
    }
}

fn element_tuple(ts: &mut TokenStream) -> Result<Vec<ElementExpr>> {
    ts.expect_sym("(")?;
    let mut out = vec![element(ts)?];
    while ts.eat_sym(",") {
        out.push(element(ts)?);
    }
    ts.expect_sym(")")?;
    Ok(out)
}

fn source(ts: &mut TokenStream) -> Result<Source> {
    let a = ts.expect_ident()?;
    let second_map = matches!(ts.peek().kind, TokenKind::Ident(_)) && !matches!(ts.peek_at(1).kind, TokenKind::Sym("="));
    if second_map {
        Ok(Source::Maps(a, ts.expect_ident()?))
    } else {
        Ok(Source::Relation(a))
    }
}

/// An identifier, joined with directly adjacent `-word` pieces so that
/// keywords like `verify-relation` read as one word. Spaced-out `a - b`
/// stays a subtraction.
fn word(ts: &mut TokenStream) -> Result<String> {
    let first = ts.peek();
    let mut s = ts.expect_ident()?;
    let mut end = first.column + s.chars().count();
    loop {
        let (dash, next) = (ts.peek(), ts.peek_at(1));
        let joined = matches!(dash.kind, TokenKind::Sym("-")) && dash.line == first.line && dash.column == end;
        match &next.kind {
            TokenKind::Ident(n) if joined && next.line == first.line && next.column == end + 1 => {
                s.push('-');
                s.push_str(n);
                end = next.column + n.chars().count();
                ts.next();
                ts.next();
            }
            _ => return Ok(s),
        }
    }
}

fn command(ts: &mut TokenStream) -> Result<Command> {
    let start = ts.peek();
    let keyword = word(ts)?;
    let kind = match keyword.as_str() {
        "check" => {
            let a = ts.expect_ident()?;
            let relation_at = ts.peek();
            match word(ts)?.as_str() {
                "equal" => CommandKind::Equal(a, ts.expect_ident()?),
                r @ ("member" | "radical-member") => {
                    let radical = r == "radical-member";
                    CommandKind::Member { ideal: a, expr: ts.parse_expr()?, radical }
                }
                other => {
                    return Err(Error::Syntax {
                        line: relation_at.line,
                        column: relation_at.column,
                        message: format!("expected `member`, `radical-member` or `equal`, found `{other}`"),
                    })
                }
            }
        }
        "groebner" => CommandKind::Groebner(ts.expect_ident()?),
        "verify-relation" => CommandKind::VerifyRelation(ts.expect_ident()?),
        "kernel-basis" => CommandKind::KernelBasis(source(ts)?),
        "generators" => CommandKind::Generators(source(ts)?),
        "probe" => CommandKind::Probe(source(ts)?),
        "present" => CommandKind::Present(element_tuple(ts)?),
        "subalgebra-member" => {
            let expr = element(ts)?;
            ts.expect_keyword("in")?;
            CommandKind::SubalgebraMember { expr, gens: element_tuple(ts)? }
        }
        "intersect" => {
            let a = element_tuple(ts)?;
            CommandKind::Intersect(a, element_tuple(ts)?)
        }
        "pushout" => {
            let first = element_tuple(ts)?;
            let second = element_tuple(ts)?;
            ts.expect_keyword("claimed")?;
            CommandKind::Pushout { first, second, claimed: element_tuple(ts)? }
        }
        "pinch" => {
            ts.expect_keyword("ideal")?;
            let ideal = element_tuple(ts)?;
            let lifts = if ts.is_ident("lifts") {
                ts.next();
                element_tuple(ts)?
            } else {
                Vec::new()
            };
            let module = if ts.is_ident("module") {
                ts.next();
                element_tuple(ts)?
            } else {
                Vec::new()
            };
            CommandKind::Pinch { ideal, lifts, module }
        }
        "invariants" => CommandKind::Invariants(ts.expect_ident()?),
        "effectivity" => CommandKind::Effectivity(ts.expect_ident()?),
        "frobenius" => {
            let gens = element_tuple(ts)?;
            ts.expect_keyword("in")?;
            CommandKind::Frobenius { gens, sub: element_tuple(ts)? }
        }
        "twist" => CommandKind::Twist(ts.parse_expr()?),
        other => {
            return Err(Error::Syntax {
                line: start.line,
                column: start.column,
                message: format!("unknown statement `{other}`"),
            })
        }
    };
    let options = options(ts, &kind)?;
    Ok(Command { kind, options })
}

fn options(ts: &mut TokenStream, kind: &CommandKind) -> Result<Options> {
    let mut o = Options::default();
    while matches!(ts.peek().kind, TokenKind::Ident(_)) && matches!(ts.peek_at(1).kind, TokenKind::Sym("=")) {
        let key = ts.expect_ident()?;
        if !kind.accepted_options().contains(&key.as_str()) {
            return ts.error(format!("option `{key}` does not apply to `{}`", kind.keyword()));
        }
        if o.keys().contains(&key.as_str()) {
            return ts.error(format!("option `{key}` given twice"));
        }
        ts.expect_sym("=")?;
        match key.as_str() {
            "degree" => o.degree = Some(small_u32(ts)?),
            "rmax" => o.rmax = Some(small_u32(ts)?),
            "q" => o.q = Some(small_int(ts)?),
            "mode" => {
                let m = ts.expect_ident()?;
                o.mode = Some(m.parse::<Mode>().or_else(|_| ts.error(format!("unknown mode `{m}`")))?);
            }
            "primes" => {
                let mut ps = vec![small_int(ts)?];
                while ts.eat_sym(",") {
                    ps.push(small_int(ts)?);
                }
                for &p in &ps {
                    Field::prime(p).or_else(|e| ts.error(e.to_string()))?;
                }
                o.primes = Some(ps);
            }
            _ => unreachable!("accepted_options lists only known keys"),
        }
    }
    Ok(o)
}

// ---- name resolution -------------------------------------------------------

#[derive(Clone, Debug)]
enum Symbol {
    /// Variable names per component.
    Ring { field: Field, vars: Vec<Vec<String>> },
    Poly { ring: String },
    Ideal { ring: String },
    Map { source: String, target: String },
    Group { ring: String },
    Relation { cocycle: bool },
}

impl Symbol {
    fn kind(&self) -> &'static str {
        match self {
            Symbol::Ring { .. } => "ring",
            Symbol::Poly { .. } => "poly",
            Symbol::Ideal { .. } => "ideal",
            Symbol::Map { .. } => "map",
            Symbol::Group { .. } => "group",
            Symbol::Relation { .. } => "relation",
        }
    }
}

struct Checker {
    symbols: HashMap<String, Symbol>,
    current: Option<String>,
    line: usize,
    column: usize,
}

impl Checker {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        })
    }

    fn declare(&mut self, name: &str, sym: Symbol) -> Result<()> {
        if RESERVED.contains(&name) {
            return self.fail(format!("`{name}` is a reserved word"));
        }
        if let Some(old) = self.symbols.get(name) {
            return self.fail(format!("`{name}` is already declared as a {}", old.kind()));
        }
        self.symbols.insert(name.to_string(), sym);
        Ok(())
    }

    fn lookup(&self, name: &str, kind: &str) -> Result<&Symbol> {
        match self.symbols.get(name) {
            None => self.fail(format!("undeclared name `{name}`")),
            Some(s) if s.kind() != kind => self.fail(format!("`{name}` is a {}, expected a {kind}", s.kind())),
            Some(s) => Ok(s),
        }
    }

    fn ring(&self, name: &str) -> Result<(Field, Vec<Vec<String>>)> {
        match self.lookup(name, "ring")? {
            Symbol::Ring { field, vars } => Ok((*field, vars.clone())),
            _ => unreachable!(),
        }
    }

    fn current(&self) -> Result<String> {
        match &self.current {
            Some(r) => Ok(r.clone()),
            None => self.fail("no ring declared yet"),
        }
    }

    /// Identifiers must be variables of the evaluation ring or polys
    /// declared in `ring`.
    fn expr(&self, e: &Expr, vars: &[String], ring: Option<&str>) -> Result<()> {
        let mut names = Vec::new();
        e.vars(&mut names);
        for n in names {
            if vars.contains(&n) {
                continue;
            }
            match (self.symbols.get(&n), ring) {
                (Some(Symbol::Poly { ring: r }), Some(want)) if r == want => {}
                (Some(Symbol::Poly { ring: r }), _) => {
                    return self.fail(format!("poly `{n}` belongs to ring `{r}`, not the ring of this expression"))
                }
                _ => return self.fail(format!("unknown variable or poly `{n}`")),
            }
        }
        Ok(())
    }

    fn element(&self, e: &ElementExpr, ring: &str) -> Result<()> {
        let (_, vars) = self.ring(ring)?;
        if let ElementExpr::Single(Expr::Var(n)) = e {
            if matches!(self.symbols.get(n), Some(Symbol::Poly { ring: r }) if r == ring) {
                return Ok(());
            }
        }
        match e {
            ElementExpr::Single(x) if vars.len() == 1 => self.expr(x, &vars[0], Some(ring)),
            ElementExpr::Single(_) => self.fail(format!("ring `{ring}` has {} components; write `{{a | b | ...}}`", vars.len())),
            ElementExpr::Tuple(parts) if parts.len() == vars.len() => {
                parts.iter().zip(&vars).try_for_each(|(x, v)| self.expr(x, v, Some(ring)))
            }
            ElementExpr::Tuple(parts) => {
                self.fail(format!("ring `{ring}` has {} components, the element has {}", vars.len(), parts.len()))
            }
        }
    }

    fn elements(&self, es: &[ElementExpr], ring: &str) -> Result<()> {
        es.iter().try_for_each(|e| self.element(e, ring))
    }

    fn single(&self, ring: &str) -> Result<Vec<String>> {
        let (_, mut vars) = self.ring(ring)?;
        if vars.len() != 1 {
            return self.fail(format!("ring `{ring}` must have a single component here"));
        }
        Ok(vars.remove(0))
    }

    /// Names of the doubled ring used for relation generators and cocycles.
    fn doubled(&self, ring: &str, stems: &Option<[String; 3]>) -> Result<Vec<String>> {
        let (field, vars) = self.ring(ring)?;
        if vars.len() != 1 {
            return self.fail(format!("ring `{ring}` must have a single component here"));
        }
        let base = PolyRing::new(field, &vars[0]).or_else(|e| self.fail(e.to_string()))?;
        let a = AmbientRing::polynomial(&base);
        let copies = match stems {
            None => Copies::suffixed(&a),
            Some([x, y, z]) => Copies::with_stems(&a, [x, y, z]).or_else(|e| self.fail(e.to_string()))?,
        };
        let mut names = copies.names(0, 1).to_vec();
        names.extend_from_slice(copies.names(0, 2));
        Ok(names)
    }

    fn statement(&mut self, kind: &StatementKind) -> Result<()> {
        match kind {
            StatementKind::Ring { name, def, .. } => {
                let (field, vars) = match def {
                    RingDef::Polynomial { field, vars, modulus } => {
                        for (i, v) in vars.iter().enumerate() {
                            if vars[..i].contains(v) {
                                return self.fail(format!("duplicate variable `{v}`"));
                            }
                        }
                        for m in modulus {
                            self.expr(m, vars, None)?;
                        }
                        (*field, vec![vars.clone()])
                    }
                    RingDef::Union(parts) => {
                        let mut field = None;
                        let mut all = Vec::new();
                        for p in parts {
                            let (f, v) = self.ring(p)?;
                            if field.is_some_and(|g| g != f) {
                                return self.fail("components of a union must share a field");
                            }
                            field = Some(f);
                            all.extend(v);
                        }
                        (field.expect("at least one part"), all)
                    }
                };
                self.declare(name, Symbol::Ring { field, vars })?;
                self.current = Some(name.clone());
            }
            StatementKind::Use(r) => {
                self.ring(r)?;
                self.current = Some(r.clone());
            }
            StatementKind::Poly { name, value } => {
                let ring = self.current()?;
                self.element(value, &ring)?;
                self.declare(name, Symbol::Poly { ring })?;
            }
            StatementKind::Ideal { name, def } => {
                let ring = self.current()?;
                let vars = self.single(&ring)?;
                match def {
                    IdealDef::Gens(g) => g.iter().try_for_each(|e| self.expr(e, &vars, Some(&ring)))?,
                    IdealDef::Cap(a, b) => {
                        for i in [a, b] {
                            let Symbol::Ideal { ring: r } = self.lookup(i, "ideal")? else { unreachable!() };
                            if *r != ring {
                                return self.fail(format!("ideal `{i}` lives in `{r}`, not the current ring `{ring}`"));
                            }
                        }
                    }
                }
                self.declare(name, Symbol::Ideal { ring })?;
            }
            StatementKind::Map { name, source, target, body } => {
                let (_, svars) = self.ring(source)?;
                let (_, tvars) = self.ring(target)?;
                match body {
                    MapBody::Images(images) => {
                        if svars.len() != 1 || tvars.len() != 1 {
                            return self.fail("maps between products need `{c: (...) | ...}` blocks");
                        }
                        images.iter().try_for_each(|e| self.expr(e, &tvars[0], Some(target)))?;
                    }
                    MapBody::Blocks(blocks) => {
                        if blocks.len() != tvars.len() {
                            return self.fail(format!("`{target}` has {} components, the map gives {} blocks", tvars.len(), blocks.len()));
                        }
                        for ((c, images), tv) in blocks.iter().zip(&tvars) {
                            if *c == 0 || *c > svars.len() {
                                return self.fail(format!("source component {c} is out of range 1..={}", svars.len()));
                            }
                            images.iter().try_for_each(|e| self.expr(e, tv, Some(target)))?;
                        }
                    }
                }
                self.declare(name, Symbol::Map { source: source.clone(), target: target.clone() })?;
            }
            StatementKind::Group { name, ring, elements } => {
                let vars = self.single(ring)?;
                for e in elements.iter().flatten() {
                    self.expr(e, &vars, Some(ring))?;
                }
                self.declare(name, Symbol::Group { ring: ring.clone() })?;
            }
            StatementKind::Relation { name, ring, stems, body } => {
                let mut cocycle = false;
                match body {
                    RelationBody::Ideal(gens) => {
                        let d = self.doubled(ring, stems)?;
                        gens.iter().try_for_each(|e| self.expr(e, &d, None))?;
                    }
                    RelationBody::Map { images, cocycle: c } => {
                        self.elements(images, ring)?;
                        if let Some(c) = c {
                            let d = self.doubled(ring, stems)?;
                            self.expr(c, &d, None)?;
                            cocycle = true;
                        } else if stems.is_some() {
                            self.ring(ring)?;
                        }
                    }
                    RelationBody::Group(g) => {
                        let Symbol::Group { ring: r } = self.lookup(g, "group")? else { unreachable!() };
                        if r != ring {
                            return self.fail(format!("group `{g}` acts on `{r}`, not `{ring}`"));
                        }
                        if stems.is_some() {
                            return self.fail("`copies` is not available for group relations");
                        }
                    }
                }
                self.declare(name, Symbol::Relation { cocycle })?;
            }
            StatementKind::Command(c) => self.command(c)?,
        }
        Ok(())
    }

    fn source(&self, s: &Source) -> Result<()> {
        match s {
            Source::Relation(r) => self.lookup(r, "relation").map(|_| ()),
            Source::Maps(a, b) => {
                let Symbol::Map { source: s1, target: t1 } = self.lookup(a, "map")?.clone() else { unreachable!() };
                let Symbol::Map { source: s2, target: t2 } = self.lookup(b, "map")?.clone() else { unreachable!() };
                if s1 != s2 || t1 != t2 {
                    return self.fail(format!("maps `{a}` and `{b}` must share source and target"));
                }
                Ok(())
            }
        }
    }

    fn command(&self, c: &Command) -> Result<()> {
        match &c.kind {
            CommandKind::Member { ideal, expr, .. } => {
                let Symbol::Ideal { ring } = self.lookup(ideal, "ideal")? else { unreachable!() };
                let vars = self.single(ring)?;
                self.expr(expr, &vars, Some(ring))
            }
            CommandKind::Equal(a, b) => {
                let Symbol::Ideal { ring: ra } = self.lookup(a, "ideal")? else { unreachable!() };
                let Symbol::Ideal { ring: rb } = self.lookup(b, "ideal")? else { unreachable!() };
                if ra != rb {
                    return self.fail(format!("ideals `{a}` and `{b}` live in different rings"));
                }
                Ok(())
            }
            CommandKind::Groebner(i) => self.lookup(i, "ideal").map(|_| ()),
            CommandKind::VerifyRelation(r) => self.lookup(r, "relation").map(|_| ()),
            CommandKind::KernelBasis(s) | CommandKind::Generators(s) | CommandKind::Probe(s) => self.source(s),
            CommandKind::Invariants(g) => self.lookup(g, "group").map(|_| ()),
            CommandKind::Effectivity(r) => match self.lookup(r, "relation")? {
                Symbol::Relation { cocycle: true, .. } => Ok(()),
                _ => self.fail(format!("relation `{r}` has no cocycle; declare it with `map (...) cocycle f`")),
            },
            CommandKind::Present(g) => self.elements(g, &self.current()?),
            CommandKind::SubalgebraMember { expr, gens } => {
                let ring = self.current()?;
                self.element(expr, &ring)?;
                self.elements(gens, &ring)
            }
            CommandKind::Intersect(a, b) => {
                let ring = self.current()?;
                self.elements(a, &ring)?;
                self.elements(b, &ring)
            }
            CommandKind::Pushout { first, second, claimed } => {
                let ring = self.current()?;
                [first, second, claimed].into_iter().try_for_each(|g| self.elements(g, &ring))
            }
            CommandKind::Pinch { ideal, lifts, module } => {
                let ring = self.current()?;
                [ideal, lifts, module].into_iter().try_for_each(|g| self.elements(g, &ring))
            }
            CommandKind::Frobenius { gens, sub } => {
                let ring = self.current()?;
                self.elements(gens, &ring)?;
                self.elements(sub, &ring)
            }
            CommandKind::Twist(e) => {
                if c.options.q.is_none() {
                    return self.fail("`twist` needs `q=`");
                }
                let ring = self.current()?;
                let vars = self.single(&ring)?;
                self.expr(e, &vars, Some(&ring))
            }
        }
    }
}

fn check_names(script: &Script) -> Result<()> {
    let mut ck = Checker {
        symbols: HashMap::new(),
        current: None,
        line: 0,
        column: 0,
    };
    for s in &script.statements {
        ck.line = s.line;
        ck.column = s.column;
        ck.statement(&s.kind)?;
    }
    Ok(())
}
