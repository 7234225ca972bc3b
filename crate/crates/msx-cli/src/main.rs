//! `msx` — command-line surface for the matrix-syntax engine.
//!
//! Exit codes: 0 success, 1 domain-level rejection (ungrammatical derivation
//! or invalid chain), 2 usage or parse errors.

mod commands;
mod report;
mod script;

use std::process::ExitCode;

use commands::{ChainArgs, CliError};
use report::Format;

const USAGE: &str = "\
msx — exact engine for the matrix-syntax calculus

Usage:
  msx derive <file> [--format json|csv|text]
  msx tables <which> [--format json|csv|text]
        which: scalar-g8 | scalar-gcp | units-set1 | units-set2 | units-set3
             | cayley-g8 | equivalences
  msx group <name> [--check iso|gens|abelian] [--format json|csv|text]
        name: g4 | g8 | pauli | gcp
  msx units [--set 1|2|3] [--g8-only] [--format json|csv|text]
  msx chain --spec \"<alpha>; <K>, <L>\" [--sub] [--samples N --seed S]
            [--format json|csv|text]
  msx basis --from <basis> --to <basis> --coords a,b[,c,d]
            [--format json|csv|text]
        basis: pauli2 | chomsky2 | pauli4 | chomsky4

Matrix tokens: I X Y Z C1 C2 S1 S2, optionally prefixed with -, i or -i.
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            eprintln!("run `msx --help` for usage");
            ExitCode::from(2)
        }
        Err(CliError::Domain(message)) => {
            eprintln!("rejected: {message}");
            ExitCode::from(1)
        }
    }
}

/// Flag parser over the arguments after the subcommand. Flags may appear in
/// any order; every flag is either boolean or takes one value.
struct Flags {
    positional: Vec<String>,
    pairs: Vec<(String, String)>,
    switches: Vec<String>,
}

impl Flags {
    fn parse(
        args: &[String],
        value_flags: &[&str],
        switch_flags: &[&str],
    ) -> Result<Flags, CliError> {
        let mut positional = Vec::new();
        let mut pairs = Vec::new();
        let mut switches = Vec::new();
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            if let Some(name) = arg.strip_prefix("--") {
                if switch_flags.contains(&name) {
                    switches.push(name.to_string());
                } else if value_flags.contains(&name) {
                    let value = it
                        .next()
                        .ok_or_else(|| CliError::Usage(format!("--{name} needs a value")))?;
                    pairs.push((name.to_string(), value.clone()));
                } else {
                    return Err(CliError::Usage(format!("unknown flag --{name}")));
                }
            } else {
                positional.push(arg.clone());
            }
        }
        Ok(Flags {
            positional,
            pairs,
            switches,
        })
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.pairs
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    fn switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    fn format(&self) -> Result<Format, CliError> {
        match self.value("format") {
            None => Ok(Format::Text),
            Some(f) => {
                Format::parse(f).ok_or_else(|| CliError::Usage(format!("unknown format {f:?}")))
            }
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, CliError> {
    let Some(command) = args.first() else {
        eprint!("{USAGE}");
        return Ok(ExitCode::from(2));
    };
    match command.as_str() {
        "--help" | "-h" | "help" => {
            print!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        "derive" => cmd_derive(&args[1..]),
        "tables" => {
            let flags = Flags::parse(&args[1..], &["format"], &[])?;
            let [which] = flags.positional.as_slice() else {
                return Err(CliError::Usage(
                    "tables needs exactly one table name".into(),
                ));
            };
            let report = commands::emit_table(which)?;
            print!("{}", report.render(flags.format()?));
            Ok(ExitCode::SUCCESS)
        }
        "group" => {
            let flags = Flags::parse(&args[1..], &["format", "check"], &[])?;
            let [name] = flags.positional.as_slice() else {
                return Err(CliError::Usage("group needs exactly one group name".into()));
            };
            let report = commands::cmd_group(name, flags.value("check"))?;
            print!("{}", report.render(flags.format()?));
            Ok(ExitCode::SUCCESS)
        }
        "units" => {
            let flags = Flags::parse(&args[1..], &["format", "set"], &["g8-only"])?;
            if !flags.positional.is_empty() {
                return Err(CliError::Usage(
                    "units takes no positional arguments".into(),
                ));
            }
            let set =
                match flags.value("set") {
                    None => None,
                    Some(v) => Some(v.parse::<u8>().map_err(|_| {
                        CliError::Usage(format!("--set expects 1, 2 or 3, got {v:?}"))
                    })?),
                };
            let report = commands::cmd_units(set, flags.switch("g8-only"))?;
            print!("{}", report.render(flags.format()?));
            Ok(ExitCode::SUCCESS)
        }
        "chain" => {
            let flags = Flags::parse(&args[1..], &["format", "spec", "samples", "seed"], &["sub"])?;
            if !flags.positional.is_empty() {
                return Err(CliError::Usage(
                    "chain takes no positional arguments".into(),
                ));
            }
            let spec = flags.value("spec").ok_or_else(|| {
                CliError::Usage("chain needs --spec \"<alpha>; <K>, <L>\"".into())
            })?;
            let parse_u64 = |name: &str| -> Result<Option<u64>, CliError> {
                match flags.value(name) {
                    None => Ok(None),
                    Some(v) => v
                        .parse::<u64>()
                        .map(Some)
                        .map_err(|_| CliError::Usage(format!("--{name} expects an integer"))),
                }
            };
            let chain_args = ChainArgs {
                spec: spec.to_string(),
                subtractive: flags.switch("sub"),
                samples: parse_u64("samples")?,
                seed: parse_u64("seed")?,
            };
            let out = commands::cmd_chain(&chain_args)?;
            print!("{}", out.report.render(flags.format()?));
            match out.rejected {
                Some(_) => Ok(ExitCode::from(1)),
                None => Ok(ExitCode::SUCCESS),
            }
        }
        "basis" => {
            let flags = Flags::parse(&args[1..], &["format", "from", "to", "coords"], &[])?;
            if !flags.positional.is_empty() {
                return Err(CliError::Usage(
                    "basis takes no positional arguments".into(),
                ));
            }
            let need = |name: &str| -> Result<&str, CliError> {
                flags
                    .value(name)
                    .ok_or_else(|| CliError::Usage(format!("basis needs --{name}")))
            };
            let report = commands::cmd_basis(need("from")?, need("to")?, need("coords")?)?;
            print!("{}", report.render(flags.format()?));
            Ok(ExitCode::SUCCESS)
        }
        other => Err(CliError::Usage(format!("unknown command {other:?}"))),
    }
}

fn cmd_derive(args: &[String]) -> Result<ExitCode, CliError> {
    let flags = Flags::parse(args, &["format"], &[])?;
    let [path] = flags.positional.as_slice() else {
        return Err(CliError::Usage(
            "derive needs exactly one script file".into(),
        ));
    };
    let format = flags.format()?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {path:?}: {e}")))?;
    let parsed = script::parse_script(&text).map_err(|e| CliError::Usage(format!("{e}")))?;
    let (report, run_error) = script::run_script(&parsed);
    print!("{}", report.render(format));
    match run_error {
        Some(err) => {
            eprintln!(
                "rejected at line {} ({}): {}",
                err.line, err.statement, err.message
            );
            Ok(ExitCode::from(1))
        }
        None => Ok(ExitCode::SUCCESS),
    }
}
