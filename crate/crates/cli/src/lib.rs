//! Command-line driver: verification suites over parameter ranges, report
//! generation, Weyl round-trips and the PBW certificate, all emitting
//! machine-readable JSON (an aligned-text rendering is derived from it).
//!
//! Exit codes: 0 all pass, 1 invariant violated (counterexample included),
//! 2 usage or guard error.

mod reports;
mod suites;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minuscule::poset::LSequence;
use minuscule::weyl::{ell_of, word_of_ell, Permutation};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "minuscule",
    about = "Exact verification suites and reports for sequence posets, their polytopes, \
             Gelfand-Tsetlin faces, crystals and PBW-graded bases",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite over a parameter range.
    Verify(VerifyArgs),
    /// Emit a report document for one parameter set.
    Report(ReportArgs),
    /// Round-trip helpers for the Weyl dictionary.
    Weyl(WeylArgs),
    /// PBW oracle commands.
    Pbw(PbwArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args)]
pub struct CommonOut {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name.
    #[arg(value_enum)]
    suite: suites::SuiteName,
    /// Inclusive bound on the rank parameter n.
    #[arg(long)]
    n_max: Option<usize>,
    /// Inclusive bound on the dilation m.
    #[arg(long)]
    m_max: Option<i64>,
    /// Restrict to one rank.
    #[arg(long)]
    n: Option<usize>,
    /// Restrict to one i.
    #[arg(long)]
    i: Option<usize>,
    /// Restrict to one sequence (comma-separated).
    #[arg(long, value_delimiter = ',')]
    ell: Option<Vec<usize>>,
    /// Restrict to one dilation.
    #[arg(long)]
    m: Option<i64>,
    /// Single case in the form "i=4,n=6,ell=4,5,6,6[,m=1]".
    #[arg(long)]
    case: Option<String>,
    /// Worker threads for case-level parallelism.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct ReportArgs {
    /// Report kind.
    #[arg(value_enum)]
    kind: reports::ReportKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    i: usize,
    #[arg(long, value_delimiter = ',')]
    ell: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    m: i64,
    #[command(flatten)]
    out: CommonOut,
}

#[derive(Args)]
struct WeylArgs {
    #[command(subcommand)]
    command: WeylCommand,
}

#[derive(Subcommand)]
enum WeylCommand {
    /// Window notation to its ascending sequence.
    ToEll {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// Window, e.g. 2,4,1,3.
        #[arg(long, value_delimiter = ',')]
        w: Vec<usize>,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Sequence to the window of its minimal representative.
    FromEll {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, value_delimiter = ',')]
        ell: Vec<usize>,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Sequence to the favored reduced word.
    Word {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, value_delimiter = ',')]
        ell: Vec<usize>,
        #[command(flatten)]
        out: CommonOut,
    },
}

#[derive(Args)]
struct PbwArgs {
    #[command(subcommand)]
    command: PbwCommand,
}

#[derive(Subcommand)]
enum PbwCommand {
    /// Emit the monomial-basis certificate for one w (or all of W^i).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        m: i64,
        /// Sequence selecting w; all of W^i when omitted.
        #[arg(long, value_delimiter = ',')]
        ell: Option<Vec<usize>>,
        #[command(flatten)]
        out: CommonOut,
    },
}

/// Emit a JSON document in the requested format; text rendering is a plain
/// walk of the same JSON.
fn emit(doc: &serde_json::Value, out: &CommonOut) -> i32 {
    let rendered = match out.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_text(doc, 0, &mut s);
            s
        }
    };
    match &out.out {
        None => {
            print!("{rendered}");
            EXIT_PASS
        }
        Some(path) => {
            match std::fs::File::create(path).and_then(|mut f| f.write_all(rendered.as_bytes())) {
                Ok(()) => EXIT_PASS,
                Err(e) => {
                    eprintln!("cannot write {}: {e}", path.display());
                    EXIT_USAGE
                }
            }
        }
    }
}

fn render_text(v: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        serde_json::Value::Object(map) => {
            for (k, val) in map {
                if val.is_object()
                    || (val.is_array() && val.as_array().unwrap().iter().any(|x| x.is_object()))
                {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(val, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", compact(val)));
                }
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                if item.is_object() {
                    render_text(item, indent, out);
                    out.push_str(&format!("{pad}-\n"));
                } else {
                    out.push_str(&format!("{pad}{}\n", compact(item)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", compact(other))),
    }
}

fn compact(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Parse "i=4,n=6,ell=4,5,6,6[,m=2]". Bare tokens after `ell=` extend the
/// sequence until the next `key=` token.
pub fn parse_case(s: &str) -> Result<(usize, usize, Vec<usize>, Option<i64>), String> {
    let mut n = None;
    let mut i = None;
    let mut m = None;
    let mut ell: Option<Vec<usize>> = None;
    let mut in_ell = false;
    for tok in s.split(',') {
        if let Some(eq) = tok.find('=') {
            let (key, val) = (&tok[..eq], &tok[eq + 1..]);
            in_ell = false;
            match key {
                "n" => n = Some(val.parse::<usize>().map_err(|_| format!("bad n '{val}'"))?),
                "i" => i = Some(val.parse::<usize>().map_err(|_| format!("bad i '{val}'"))?),
                "m" => m = Some(val.parse::<i64>().map_err(|_| format!("bad m '{val}'"))?),
                "ell" => {
                    in_ell = true;
                    let mut v = Vec::new();
                    if !val.is_empty() {
                        v.push(
                            val.parse::<usize>()
                                .map_err(|_| format!("bad ell entry '{val}'"))?,
                        );
                    }
                    ell = Some(v);
                }
                other => return Err(format!("unknown case key '{other}'")),
            }
        } else if in_ell {
            ell.as_mut().expect("in_ell implies ell present").push(
                tok.parse::<usize>()
                    .map_err(|_| format!("bad ell entry '{tok}'"))?,
            );
        } else {
            return Err(format!("unexpected token '{tok}' in case string"));
        }
    }
    match (n, i, ell) {
        (Some(n), Some(i), Some(ell)) => Ok((n, i, ell, m)),
        _ => Err("case needs n=, i= and ell=".into()),
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Report(args) => run_report(args),
        Command::Weyl(args) => run_weyl(args),
        Command::Pbw(args) => run_pbw(args),
    }
}

fn run_verify(args: VerifyArgs) -> i32 {
    let mut scope = suites::Scope {
        n_max: args.n_max,
        m_max: args.m_max,
        n: args.n,
        i: args.i,
        ell: args.ell.clone(),
        m: args.m,
    };
    if let Some(case) = &args.case {
        match parse_case(case) {
            Ok((n, i, ell, m)) => {
                scope.n = Some(n);
                scope.i = Some(i);
                scope.ell = Some(ell);
                if m.is_some() {
                    scope.m = m;
                }
            }
            Err(e) => {
                eprintln!("bad --case: {e}");
                return EXIT_USAGE;
            }
        }
    }
    if args.jobs == 0 {
        eprintln!("--jobs must be at least 1");
        return EXIT_USAGE;
    }
    match suites::run_suite(args.suite, &scope, args.jobs) {
        Ok(report) => {
            let failed = report.failures > 0;
            let doc = serde_json::to_value(&report).expect("serializable");
            let code = emit(&doc, &args.out);
            if code != EXIT_PASS {
                return code;
            }
            if failed {
                EXIT_FAIL
            } else {
                EXIT_PASS
            }
        }
        Err(e) => {
            eprintln!("{e}");
            EXIT_USAGE
        }
    }
}

fn run_report(args: ReportArgs) -> i32 {
    match reports::build_report(args.kind, args.n, args.i, &args.ell, args.m) {
        Ok(doc) => emit(&doc, &args.out),
        Err(e) => {
            eprintln!("{e}");
            EXIT_USAGE
        }
    }
}

fn run_weyl(args: WeylArgs) -> i32 {
    match args.command {
        WeylCommand::ToEll { n, i, w, out } => {
            if w.len() != n + 1 {
                eprintln!("window must have n+1 = {} entries", n + 1);
                return EXIT_USAGE;
            }
            let perm = match Permutation::from_window(w) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_USAGE;
                }
            };
            match ell_of(&perm, i) {
                Ok(ell) => emit(
                    &json!({"n": n, "i": i, "window": perm.window(), "ell": ell.entries()}),
                    &out,
                ),
                Err(e) => {
                    eprintln!("{e}");
                    EXIT_USAGE
                }
            }
        }
        WeylCommand::FromEll { n, i, ell, out } => match LSequence::new(i, n, ell) {
            Ok(ell) => {
                let (word, w) = word_of_ell(&ell);
                emit(
                    &json!({
                        "n": n, "i": i, "ell": ell.entries(),
                        "window": w.window(), "word": word.letters,
                        "length": word.len(),
                    }),
                    &out,
                )
            }
            Err(e) => {
                eprintln!("{e}");
                EXIT_USAGE
            }
        },
        WeylCommand::Word { n, i, ell, out } => match LSequence::new(i, n, ell) {
            Ok(ell) => {
                let (word, _) = word_of_ell(&ell);
                emit(
                    &json!({"n": n, "i": i, "ell": ell.entries(), "word": word.letters}),
                    &out,
                )
            }
            Err(e) => {
                eprintln!("{e}");
                EXIT_USAGE
            }
        },
    }
}

fn run_pbw(args: PbwArgs) -> i32 {
    match args.command {
        PbwCommand::Verify { n, i, m, ell, out } => {
            let ells = match ell {
                Some(e) => match LSequence::new(i, n, e) {
                    Ok(ell) => vec![ell],
                    Err(err) => {
                        eprintln!("{err}");
                        return EXIT_USAGE;
                    }
                },
                None => LSequence::enumerate_for_i(i, n),
            };
            let mut docs = Vec::new();
            let mut all_independent = true;
            for ell in &ells {
                let w = word_of_ell(ell).1;
                match minuscule::pbw::DemazureOracle::new(&w, i, m) {
                    Ok(oracle) => {
                        let (ok, certs) = oracle.monomial_independence();
                        all_independent &= ok;
                        docs.push(json!({
                            "ell": ell.entries(),
                            "window": w.window(),
                            "graded_dims": oracle.graded().dims,
                            "lattice_count": oracle.chain_points().len(),
                            "independent": ok,
                            "degrees": certs,
                        }));
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        return EXIT_USAGE;
                    }
                }
            }
            let doc = json!({"n": n, "i": i, "m": m, "certificates": docs});
            let code = emit(&doc, &out);
            if code != EXIT_PASS {
                return code;
            }
            if all_independent {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::parse_case;

    #[test]
    fn case_strings_parse() {
        let (n, i, ell, m) = parse_case("i=4,n=6,ell=4,5,6,6").unwrap();
        assert_eq!((n, i, m), (6, 4, None));
        assert_eq!(ell, vec![4, 5, 6, 6]);

        let (n, i, ell, m) = parse_case("ell=2,3,n=3,i=2,m=2").unwrap();
        assert_eq!((n, i, m), (3, 2, Some(2)));
        assert_eq!(ell, vec![2, 3]);

        assert!(parse_case("i=2,n=3").is_err());
        assert!(parse_case("i=2,n=3,ell=2,x").is_err());
        assert!(parse_case("bogus").is_err());
    }
}
