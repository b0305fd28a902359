//! Rendering a parsed script and reparsing it gives the same tree.

use finrel::eqrel::Mode;
use finrel::syntax::Expr;
use finrel::Field;
use finrel_cli::ast::*;
use finrel_cli::parse_script;
use num_bigint::BigInt;
use proptest::prelude::*;

fn expr(vars: &'static [&'static str]) -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..20).prop_map(|n| Expr::Num(BigInt::from(n))),
        prop::sample::select(vars).prop_map(|v| Expr::Var(v.to_string())),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), 1u32..5).prop_map(|(a, n)| Expr::Div(Box::new(a), Box::new(Expr::Num(BigInt::from(n))))),
            (inner, 0u32..4).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
        ]
    })
}

const BASE: &[&str] = &["x", "y", "z", "p"];
const DOUBLED: &[&str] = &["x1", "y1", "z1", "x2", "y2", "z2"];
const PRODUCT: &[&str] = &["s"];
const STEMMED: &[&str] = &["x1", "x2", "y1", "y2"];

fn exprs(vars: &'static [&'static str], n: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Expr>> {
    prop::collection::vec(expr(vars), n)
}

fn singles(n: std::ops::Range<usize>) -> impl Strategy<Value = Vec<ElementExpr>> {
    prop::collection::vec(expr(BASE).prop_map(ElementExpr::Single), n)
}

fn degree() -> impl Strategy<Value = Options> {
    prop::option::of(0u32..12).prop_map(|degree| Options { degree, ..Options::default() })
}

fn command() -> impl Strategy<Value = Command> {
    let plain = |kind: CommandKind| Command {
        kind,
        options: Options::default(),
    };
    prop_oneof![
        (expr(BASE), any::<bool>()).prop_map(move |(e, radical)| plain(CommandKind::Member { ideal: "I".into(), expr: e, radical })),
        Just(plain(CommandKind::Equal("I".into(), "J".into()))),
        Just(plain(CommandKind::Groebner("J".into()))),
        prop::option::of(prop_oneof![Just(Mode::Scheme), Just(Mode::Set)]).prop_map(|mode| Command {
            kind: CommandKind::VerifyRelation("Rm".into()),
            options: Options { mode, ..Options::default() },
        }),
        (degree(), 0..3usize).prop_map(|(options, k)| {
            let src = if k == 0 { Source::Relation("Ri".into()) } else { Source::Maps("g".into(), "h".into()) };
            let kind = [CommandKind::KernelBasis(src.clone()), CommandKind::Generators(src.clone()), CommandKind::Probe(src)][k].clone();
            Command { kind, options }
        }),
        singles(1..4).prop_map(move |g| plain(CommandKind::Present(g))),
        (expr(BASE), singles(1..4)).prop_map(move |(e, gens)| plain(CommandKind::SubalgebraMember { expr: ElementExpr::Single(e), gens })),
        (singles(1..3), singles(1..3), degree()).prop_map(|(a, b, options)| Command { kind: CommandKind::Intersect(a, b), options }),
        (singles(1..3), singles(1..3), singles(1..3), degree()).prop_map(|(first, second, claimed, options)| Command {
            kind: CommandKind::Pushout { first, second, claimed },
            options,
        }),
        (singles(1..3), singles(0..2), singles(0..2), degree()).prop_map(|(ideal, lifts, module, options)| Command {
            kind: CommandKind::Pinch { ideal, lifts, module },
            options,
        }),
        degree().prop_map(|options| Command { kind: CommandKind::Invariants("G".into()), options }),
        prop::option::of(prop::sample::subsequence(vec![2u64, 3, 5, 7], 1..4)).prop_map(|primes| Command {
            kind: CommandKind::Effectivity("Rm".into()),
            options: Options { primes, ..Options::default() },
        }),
        (singles(1..3), singles(1..3), prop::option::of(0u32..5)).prop_map(|(gens, sub, rmax)| Command {
            kind: CommandKind::Frobenius { gens, sub },
            options: Options { rmax, ..Options::default() },
        }),
        (expr(BASE), 1u64..30).prop_map(|(e, q)| Command {
            kind: CommandKind::Twist(e),
            options: Options { q: Some(q), ..Options::default() },
        }),
    ]
}

fn statement(kind: StatementKind) -> Statement {
    Statement { line: 0, column: 0, kind }
}

/// A script exercising every declaration form, followed by random commands.
fn script() -> impl Strategy<Value = Script> {
    (
        prop_oneof![Just(Field::Rationals), Just(Field::Prime(2)), Just(Field::Prime(101))],
        exprs(BASE, 0..2),
        prop::option::of(1usize..1000),
        expr(BASE),
        exprs(BASE, 1..3),
        exprs(BASE, 4..5),
        exprs(BASE, 4..5),
        exprs(DOUBLED, 1..3),
        (singles(1..3), expr(DOUBLED), expr(STEMMED)),
        (exprs(PRODUCT, 2..3), prop::collection::vec(command(), 0..6)),
    )
        .prop_map(|(field, modulus, budget, f, ideal, g_images, h_images, rel, (maps, cocycle, stemmed), (pair, commands))| {
            let s = |x: &str| x.to_string();
            let mut out = vec![
                StatementKind::Ring { name: s("R"), def: RingDef::Polynomial { field, vars: BASE.iter().map(|v| s(v)).collect(), modulus }, budget },
                StatementKind::Poly { name: s("f"), value: ElementExpr::Single(f) },
                StatementKind::Ideal { name: s("I"), def: IdealDef::Gens(ideal) },
                StatementKind::Ideal { name: s("I2"), def: IdealDef::Gens(vec![Expr::Var(s("f"))]) },
                StatementKind::Ideal { name: s("J"), def: IdealDef::Cap(s("I"), s("I2")) },
                StatementKind::Map { name: s("g"), source: s("R"), target: s("R"), body: MapBody::Images(g_images) },
                StatementKind::Map { name: s("h"), source: s("R"), target: s("R"), body: MapBody::Images(h_images) },
                StatementKind::Group {
                    name: s("G"),
                    ring: s("R"),
                    elements: vec![vec![Expr::Var(s("y")), Expr::Var(s("x")), Expr::Var(s("z")), Expr::Var(s("p"))]],
                },
                StatementKind::Relation { name: s("Ri"), ring: s("R"), stems: None, body: RelationBody::Ideal(rel) },
                StatementKind::Relation { name: s("Rg"), ring: s("R"), stems: None, body: RelationBody::Group(s("G")) },
                StatementKind::Relation { name: s("Rm"), ring: s("R"), stems: None, body: RelationBody::Map { images: maps, cocycle: Some(cocycle) } },
                StatementKind::Ring { name: s("B"), def: RingDef::Polynomial { field, vars: vec![s("x1"), s("x2")], modulus: vec![] }, budget: None },
                StatementKind::Relation {
                    name: s("Rb"),
                    ring: s("B"),
                    stems: Some([s("x"), s("y"), s("z")]),
                    body: RelationBody::Map {
                        images: vec![ElementExpr::Single(Expr::Var(s("x1"))), ElementExpr::Single(Expr::Var(s("x2")))],
                        cocycle: Some(stemmed),
                    },
                },
                StatementKind::Ring { name: s("A"), def: RingDef::Polynomial { field, vars: vec![s("s")], modulus: vec![] }, budget: None },
                StatementKind::Ring { name: s("Y"), def: RingDef::Union(vec![s("A"), s("A")]), budget: None },
                StatementKind::Map {
                    name: s("k"),
                    source: s("A"),
                    target: s("Y"),
                    body: MapBody::Blocks(vec![(1, vec![pair[0].clone()]), (1, vec![pair[1].clone()])]),
                },
                StatementKind::Poly { name: s("u"), value: ElementExpr::Tuple(pair) },
                StatementKind::Command(Command { kind: CommandKind::Present(vec![ElementExpr::Single(Expr::Var(s("u")))]), options: Options::default() }),
                StatementKind::Use(s("R")),
            ];
            out.extend(commands.into_iter().map(StatementKind::Command));
            Script { statements: out.into_iter().map(statement).collect() }
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn parse_of_render_is_identity(s in script()) {
        let text = s.to_string();
        let parsed = parse_script(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&parsed, &s);
        prop_assert_eq!(parsed.to_string(), text);
    }
}

#[test]
fn example_scripts_round_trip() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("scripts");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let s = parse_script(&text).unwrap();
        let again = parse_script(&s.to_string()).unwrap();
        assert_eq!(again, s, "{}", path.display());
        assert!(s.statements.iter().all(|st| st.line > 0));
    }
}
