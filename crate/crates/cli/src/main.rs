use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use finrel::Field;
use finrel_cli::args::{Args, Format};
use finrel_cli::{parse_script, run_script};

fn read_script(path: &Option<PathBuf>) -> std::io::Result<(String, String)> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok((std::fs::read_to_string(p)?, p.display().to_string())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok((s, "<stdin>".into()))
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(p) = args.primes.iter().find(|&&p| Field::prime(p).is_err()) {
        eprintln!("error: --primes: {p} is not a prime");
        return ExitCode::from(2);
    }
    let (text, origin) = match read_script(&args.script) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: cannot read script: {e}");
            return ExitCode::from(2);
        }
    };
    let script = match parse_script(&text) {
        Ok(s) => s,
        Err(finrel::Error::Syntax { line, column, message }) => {
            eprintln!("error: {origin}:{line}:{column}: {message}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {origin}: {e}");
            return ExitCode::from(2);
        }
    };
    let report = run_script(&script, &args.settings());
    let out = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    print!("{out}");
    ExitCode::from(report.exit_code as u8)
}
