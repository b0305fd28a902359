//! Script front end for the `finrel` library.
//!
//! A script is a sequence of `;`-terminated statements. Declarations name
//! rings, polys, ideals, maps, group actions and relations; commands run
//! one library operation each and append a result to the [`Report`].
//! The grammar is documented in the crate README.

pub mod args;
pub mod ast;
pub mod parser;
pub mod report;
pub mod run;

pub use ast::Script;
pub use parser::parse_script;
pub use report::{CommandResult, Report, Table, Verdict};
pub use run::{run_script, Settings};
