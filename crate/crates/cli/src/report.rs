//! Command results and their text and JSON renderings.
//!
//! The JSON schema (version 1) is
//!
//! ```text
//! { "version": 1,
//!   "exit_code": 0 | 1 | 3,
//!   "results": [ { "line": int, "command": str, "verdict": str,
//!                  "inputs": [str], "witnesses": [str], "notes": [str],
//!                  "tables": [ { "title": str, "columns": [str], "rows": [[str]] } ] } ] }
//! ```
//!
//! `verdict` is one of `pass`, `fail`, `info`, `effective`, `noneffective`,
//! `error` or `budget-exceeded`.

use std::fmt::Write;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
    Effective,
    Noneffective,
    Error,
    BudgetExceeded,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Info => "info",
            Verdict::Effective => "effective",
            Verdict::Noneffective => "noneffective",
            Verdict::Error => "error",
            Verdict::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Table {
        Table {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommandResult {
    pub line: usize,
    pub command: String,
    pub verdict: Verdict,
    /// Declarations this result depends on, dependencies first.
    pub inputs: Vec<String>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    pub tables: Vec<Table>,
}

impl CommandResult {
    pub fn new(line: usize, command: String, verdict: Verdict) -> CommandResult {
        CommandResult {
            line,
            command,
            verdict,
            inputs: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            tables: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub exit_code: i32,
    pub results: Vec<CommandResult>,
}

impl Report {
    pub fn new(results: Vec<CommandResult>) -> Report {
        let verdicts = || results.iter().map(|r| r.verdict);
        let exit_code = if verdicts().any(|v| v == Verdict::BudgetExceeded) {
            3
        } else if verdicts().any(|v| matches!(v, Verdict::Fail | Verdict::Error)) {
            1
        } else {
            0
        };
        Report {
            version: 1,
            exit_code,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            writeln!(out, "[line {}] {}", r.line, r.command).unwrap();
            for i in &r.inputs {
                writeln!(out, "  input: {i}").unwrap();
            }
            writeln!(out, "  verdict: {}", r.verdict.as_str()).unwrap();
            for w in &r.witnesses {
                writeln!(out, "  witness: {w}").unwrap();
            }
            for n in &r.notes {
                writeln!(out, "  note: {n}").unwrap();
            }
            for t in &r.tables {
                render_table(&mut out, t);
            }
            out.push('\n');
        }
        let count = |v: Verdict| self.results.iter().filter(|r| r.verdict == v).count();
        writeln!(
            out,
            "summary: {} results, {} pass, {} fail, {} error; exit code {}",
            self.results.len(),
            count(Verdict::Pass),
            count(Verdict::Fail),
            count(Verdict::Error) + count(Verdict::BudgetExceeded),
            self.exit_code
        )
        .unwrap();
        out
    }
}

fn render_table(out: &mut String, t: &Table) {
    writeln!(out, "  {}:", t.title).unwrap();
    let mut widths: Vec<usize> = t.columns.iter().map(|c| c.chars().count()).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let last = cells.len() - 1;
        let mut s = String::from("   ");
        for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            s.push(' ');
            s.push_str(cell);
            if k < last {
                s.push_str(&" ".repeat(w - cell.chars().count() + 1));
            }
        }
        s.trim_end().to_string()
    };
    writeln!(out, "{}", line(&t.columns)).unwrap();
    for row in &t.rows {
        writeln!(out, "{}", line(row)).unwrap();
    }
}
