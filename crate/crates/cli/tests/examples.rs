//! Scripts for the worked examples, run in-process.

use finrel::poly::ring;
use finrel::syntax::parse_polynomial;
use finrel::Field;
use finrel_cli::{parse_script, run_script, Report, Settings, Verdict};

fn run(text: &str) -> Report {
    run_script(&parse_script(text).unwrap(), &Settings::default())
}

const ORBIT: &str = "
ring X = QQ[x, y];
group G on X = {(-x, -y)};
relation R on X = group G;
verify-relation R mode=scheme;
";

#[test]
fn orbit_relation_fails_transitivity_with_the_expected_witness() {
    let report = run(ORBIT);
    assert_eq!(report.exit_code, 1);
    let r = &report.results[0];
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.witnesses.len(), 1, "only transitivity fails: {:?}", r.witnesses);
    let w = r.witnesses[0].strip_prefix("transitivity: ").expect("transitivity witness");
    let triple = ring(Field::Rationals, &["x1", "y1", "x2", "y2", "x3", "y3"]);
    let got = parse_polynomial(&triple, w).unwrap();
    let want = parse_polynomial(&triple, "x1*y3 - x3*y1").unwrap();
    assert!(got.is_associate(&want), "{got}");
    assert!(r.inputs.iter().any(|i| i == "group G on X = {(-x, -y)}"));
}

#[test]
fn invariant_relation_passes_every_axiom() {
    let report = run("
ring X = QQ[x, y];
relation Rstar on X = (x1^2 - x2^2, y1^2 - y2^2, x1*y1 - x2*y2);
verify-relation Rstar mode=scheme;
");
    assert_eq!(report.exit_code, 0);
    let r = &report.results[0];
    assert_eq!(r.verdict, Verdict::Pass);
    let rows: Vec<(&str, &str)> = r.tables[0].rows.iter().map(|row| (row[0].as_str(), row[1].as_str())).collect();
    assert_eq!(
        rows,
        [("reflexivity", "pass"), ("symmetry", "pass"), ("transitivity", "pass"), ("finiteness", "pass")]
    );
}

#[test]
fn quintic_cocycle_is_noneffective_over_three_fields() {
    let report = run("
ring B = QQ[x1, x2];
relation R on B copies (x, y, z) = map (x1^2, x1*x2 - x2^2, x2^3) cocycle (x1*y2 - x2*y1)*y2^3;
effectivity R primes=2,5;
");
    assert_eq!(report.exit_code, 0);
    let r = &report.results[0];
    assert_eq!(r.verdict, Verdict::Noneffective);
    let t = &r.tables[0];
    let col = |name: &str| t.columns.iter().position(|c| c == name).unwrap();
    let fields: Vec<&str> = t.rows.iter().map(|row| row[col("field")].as_str()).collect();
    assert_eq!(fields, ["QQ", "FF(2)", "FF(5)"]);
    for row in &t.rows {
        assert_eq!(row[col("verdict")], "noneffective");
        assert_eq!(row[col("dim W/V")], "1");
    }
}

#[test]
fn default_primes_come_from_settings() {
    let text = "
ring B = QQ[x1, x2];
relation R on B copies (x, y, z) = map (x1^2, x1*x2 - x2^2, x2^3) cocycle (x1*y2 - x2*y1)*y2^3;
effectivity R;
";
    let s = Settings {
        primes: vec![7],
        ..Settings::default()
    };
    let report = run_script(&parse_script(text).unwrap(), &s);
    assert_eq!(report.results[0].tables[0].rows.len(), 2);
    assert_eq!(report.results[0].tables[0].rows[1][0], "FF(7)");
}

#[test]
fn kernel_basis_follows_the_degree_bound() {
    let text = "
ring D = QQ[x, e] / (e^2);
map a : D -> D = (x, e);
map b : D -> D = (x + e, e);
kernel-basis a b;
kernel-basis a b degree=2;
";
    let s = Settings {
        max_degree: 5,
        ..Settings::default()
    };
    let report = run_script(&parse_script(text).unwrap(), &s);
    assert_eq!(report.results[0].tables[0].rows.len(), 6);
    assert_eq!(report.results[1].tables[0].rows.len(), 3);
    assert_eq!(report.results[1].tables[0].rows[2], ["2", "1", "x*e"]);
}

#[test]
fn product_polys_and_bare_names() {
    let report = run("
ring A = QQ[s];
ring B = QQ[t];
ring Y = A + B;
poly f = {s | t^2};
poly g = {s^2 | 0};
present (f, g);
");
    let r = &report.results[0];
    assert_eq!(r.inputs, ["ring A = QQ[s]", "ring B = QQ[t]", "ring Y = A + B", "poly f = {s | t^2}", "poly g = {s^2 | 0}"]);
    assert_eq!(r.tables[0].rows, [["z1^2*z2 - z2^2"]]);
}
