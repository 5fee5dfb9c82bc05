//! `imll` — command-line front door for the IMLL proof-net library.
//!
//! Exit codes: 0 success, 1 negative verdict (`check` fail, `eq` unequal),
//! 2 parse failure, 3 precondition violation, 4 internal assertion failure.
//! All machine output is line-oriented `key=value`; `--pretty` switches the
//! main verdicts to prose.  The env var `IMLL_ENUM_BOUND` overrides the
//! enumeration size guard.

use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use imll::analysis::{dump_paths, equal};
use imll::context::Context;
use imll::formula::{parse_imp, FormulaError, ImpFormula};
use imll::lambda::{
    alt_type_probe, boolean_net, boolean_type, classification_closed_forms, classify_exhaustive,
    enumerate_normal_bounded, enumerate_terms_bounded, eval_boolean, truth_table, TermError,
    DEFAULT_ENUM_BOUND,
};
use imll::net::{NetError, ProofNet, ProofStructure};
use imll::rewrite::{normalize, normalize_traced};
use imll::separate::{instantiate_net, separate, SepError};

#[derive(Parser)]
#[command(name = "imll", version, about = "IMLL proof nets: check, normalize, compare, separate")]
struct Cli {
    /// Human-readable verdicts instead of key=value lines.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceFormat {
    Plain,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Terms,
    Nets,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Danos-Regnier check a net file (exit 0 pass, 1 fail).
    Check {
        file: PathBuf,
        /// Also print the main paths of a normal net.
        #[arg(long)]
        dump_paths: bool,
    },
    /// Cut-eliminate and η-expand a net file to its normal form.
    Normalize {
        file: PathBuf,
        /// Write the normal form here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Print one line per rewrite step to stderr.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "plain")]
        trace_format: TraceFormat,
    },
    /// Compare two normal nets (exit 0 equal, 1 unequal).
    Eq { file1: PathBuf, file2: PathBuf },
    /// Enumerate the closed normal nets of an IIMLL type.
    Enumerate {
        /// Type expression; `B` and `B'` are built-in abbreviations.
        r#type: String,
        /// Print the bare count only.
        #[arg(long)]
        count: bool,
        /// Dump the enumeration as terms, nets, or truth tables.
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// The classification report for the nets of `B^n -o B`.
    Classify {
        n: u64,
        /// Verify the closed forms by exhaustive enumeration (n <= 3).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Evaluate a net of type `B^n -o B` on boolean arguments.
    Eval {
        file: PathBuf,
        /// The arguments, each `0` or `1`.
        args: Vec<String>,
    },
    /// Synthesize a context separating two distinct nets into 0 and 1.
    Separate {
        file1: PathBuf,
        file2: PathBuf,
        /// Write the context net here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The alternative-boolean-type report (definable functions over B').
    Probe {
        /// Enumeration size guard.
        #[arg(long)]
        bound: Option<usize>,
    },
}

/// An error carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<NetError> for Failure {
    fn from(e: NetError) -> Failure {
        let code = match e {
            NetError::Format { .. } => 2,
            _ => 3,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Failure {
        let code = match e {
            FormulaError::Parse { .. } => 2,
            _ => 3,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<TermError> for Failure {
    fn from(e: TermError) -> Failure {
        Failure::new(3, e.to_string())
    }
}

impl From<SepError> for Failure {
    fn from(e: SepError) -> Failure {
        let code = match &e {
            SepError::Internal(_) => 4,
            SepError::Formula(FormulaError::Parse { .. }) => 2,
            _ => 3,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::new(3, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Expands the built-in `B` / `B'` abbreviations in a type expression.
fn expand_builtins(text: &str) -> String {
    text.replace("B'", "(p-o p-o(p-o p-o p)-o p)")
        .replace('B', "(p-o(p-o p)-o(p-o p)-o p)")
}

fn parse_type(text: &str) -> Result<ImpFormula, Failure> {
    Ok(parse_imp(&expand_builtins(text))?.0)
}

fn enum_bound() -> usize {
    std::env::var("IMLL_ENUM_BOUND")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_BOUND)
}

fn read_structure(path: &PathBuf) -> Result<ProofStructure, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("{}: {}", path.display(), e)))?;
    Ok(ProofStructure::from_text(&text)?)
}

fn read_net(path: &PathBuf) -> Result<ProofNet, Failure> {
    Ok(ProofNet::new(read_structure(path)?)?)
}

/// The arity `n` of a `B^n -o B` conclusion; peeled by hand because the
/// maximal uncurrying would descend into `B` itself.
fn boolean_arity(concl: &ImpFormula) -> Result<usize, Failure> {
    let b = boolean_type();
    let mut n = 0;
    let mut cur = concl;
    while *cur != b {
        match cur {
            ImpFormula::Lolli(l, r) if **l == b => {
                n += 1;
                cur = r.as_ref();
            }
            _ => {
                return Err(Failure::new(
                    3,
                    format!("conclusion {} is not of the shape B^n -o B", concl),
                ))
            }
        }
    }
    Ok(n)
}

fn emit(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{}", text),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Check { file, dump_paths: dump } => {
            let s = read_structure(file)?;
            let pass = s.dr_check();
            if cli.pretty {
                println!(
                    "{} nodes, {} links: the structure {} the Danos-Regnier criterion",
                    s.node_count(),
                    s.link_count(),
                    if pass { "satisfies" } else { "fails" }
                );
            } else {
                println!("nodes={}", s.node_count());
                println!("links={}", s.link_count());
                println!("dr={}", if pass { "pass" } else { "fail" });
            }
            if pass && *dump {
                let net = ProofNet::trusted(s);
                for line in dump_paths(&net).map_err(|e| Failure::new(3, e.to_string()))? {
                    println!("path={}", line);
                }
            }
            Ok(if pass { 0 } else { 1 })
        }
        Command::Normalize {
            file,
            out,
            trace,
            trace_format,
        } => {
            let net = read_net(file)?;
            let (normal, entries) = normalize_traced(&net);
            if *trace {
                for e in &entries {
                    match trace_format {
                        TraceFormat::Plain => eprintln!("{}", e),
                        TraceFormat::Tsv => eprintln!("{}\t{}\t{}", e.step, e.rule, e.sn_size),
                    }
                }
            }
            emit(out, &normal.structure().to_text())?;
            if out.is_some() {
                if cli.pretty {
                    println!("normalized in {} steps", entries.len());
                } else {
                    println!("steps={}", entries.len());
                }
            }
            Ok(0)
        }
        Command::Eq { file1, file2 } => {
            let a = read_net(file1)?;
            let b = read_net(file2)?;
            let same = equal(&a, &b).map_err(|e| Failure::new(3, e.to_string()))?;
            if cli.pretty {
                println!("the nets are {}", if same { "equal" } else { "unequal" });
            } else {
                println!("equal={}", same);
            }
            Ok(if same { 0 } else { 1 })
        }
        Command::Enumerate {
            r#type,
            count,
            emit: emit_mode,
        } => {
            let ty = parse_type(r#type)?;
            let bound = enum_bound();
            if *count {
                // term count == net count (the assignment is a bijection);
                // skip the net compilation
                println!("{}", enumerate_terms_bounded(&ty, bound)?.len());
                return Ok(0);
            }
            let nets = enumerate_normal_bounded(&ty, bound)?;
            if cli.pretty {
                println!("{} closed normal nets of {}", nets.len(), ty);
            } else {
                println!("count={}", nets.len());
            }
            match emit_mode {
                None => {}
                Some(Emit::Terms) => {
                    for t in enumerate_terms_bounded(&ty, bound)? {
                        println!("term={}", t);
                    }
                }
                Some(Emit::Nets) => {
                    for (i, n) in nets.iter().enumerate() {
                        println!("# net {}", i);
                        print!("{}", n.structure().to_text());
                    }
                }
                Some(Emit::Table) => {
                    let n = boolean_arity(&ty)?;
                    for (i, net) in nets.iter().enumerate() {
                        println!("net={}", i);
                        let table = truth_table(net, n)?;
                        for (k, v) in table.iter().enumerate() {
                            let row: Vec<String> = (0..n)
                                .map(|j| {
                                    let bit = (k >> (n - 1 - j)) & 1;
                                    bit.to_string()
                                })
                                .collect();
                            println!("{} -> {}", row.join(" "), u8::from(*v));
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Classify { n, exhaustive } => {
            if *n < 1 {
                return Err(Failure::new(3, "classification needs n >= 1"));
            }
            let c = if *exhaustive {
                if *n > 3 {
                    return Err(Failure::new(
                        3,
                        "exhaustive classification supports n <= 3 only",
                    ));
                }
                classify_exhaustive(*n as usize, enum_bound())?
            } else {
                classification_closed_forms(*n)
            };
            if cli.pretty {
                println!(
                    "n={}: cases (a)-(d) = {:?}, total {}, distinct functions {:?}, nonconstant nets {:?}",
                    c.n, c.cases, c.total, c.distinct_functions, c.nonconstant_nets
                );
            } else {
                println!("n={}", c.n);
                println!("case_a={}", c.cases[0]);
                println!("case_b={}", c.cases[1]);
                println!("case_c={}", c.cases[2]);
                println!("case_d={}", c.cases[3]);
                println!("total={}", c.total);
                if let Some(d) = c.distinct_functions {
                    println!("distinct_functions={}", d);
                }
                if let Some(nc) = c.nonconstant_nets {
                    println!("nonconstant_nets={}", nc);
                }
            }
            Ok(0)
        }
        Command::Eval { file, args } => {
            let net = read_net(file)?;
            let concl = net
                .structure()
                .positive_conclusion()
                .map(|c| net.node(c).formula.clone())
                .ok_or_else(|| Failure::new(3, "net has no positive conclusion"))?;
            let n = boolean_arity(&concl)?;
            if args.len() != n {
                return Err(Failure::new(
                    3,
                    format!("the net takes {} arguments, got {}", n, args.len()),
                ));
            }
            let mut bits = Vec::new();
            for a in args {
                bits.push(match a.as_str() {
                    "0" => false,
                    "1" => true,
                    other => {
                        return Err(Failure::new(2, format!("bad boolean argument {}", other)))
                    }
                });
            }
            let v = eval_boolean(&net, &bits)?;
            if cli.pretty {
                println!("the net evaluates to {}", u8::from(v));
            } else {
                println!("value={}", u8::from(v));
            }
            Ok(0)
        }
        Command::Separate { file1, file2, out } => {
            let a = read_net(file1)?;
            let b = read_net(file2)?;
            let ctx = separate(&a, &b)?;
            let transcript = verify_separation(&ctx, &a, &b)?;
            if cli.pretty {
                println!(
                    "separating context with hole {} found; plugging maps the inputs to 0 and 1",
                    ctx.hole_type()
                );
            } else {
                print!("{}", transcript);
            }
            emit(out, &ctx.structure().to_text())?;
            Ok(0)
        }
        Command::Probe { bound } => {
            let report = alt_type_probe(bound.unwrap_or_else(enum_bound))?;
            if cli.pretty {
                println!(
                    "B' has {} closed normal nets; unary self-maps are identity and swap: {}; \
                     constants definable: {}; all definable functions parity-class: {}",
                    report.count,
                    report.unary_is_id_and_swap,
                    !report.no_constants,
                    report.all_parity
                );
            } else {
                println!("count={}", report.count);
                for t in &report.unary_tables {
                    let cells: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                    println!("unary_table={}", cells.join(","));
                }
                println!("unary_is_id_and_swap={}", report.unary_is_id_and_swap);
                println!("no_constants={}", report.no_constants);
                println!("all_parity={}", report.all_parity);
            }
            Ok(0)
        }
    }
}

/// Re-verifies a separating context against its two inputs and renders the
/// transcript (`separate` already verified; this prints the evidence).
fn verify_separation(ctx: &Context, a: &ProofNet, b: &ProofNet) -> Result<String, Failure> {
    let bt = boolean_type();
    let mut out = String::new();
    writeln!(out, "hole={}", ctx.hole_type()).unwrap();
    let mut check = |label: &str, net: &ProofNet, expect: bool| -> Result<(), Failure> {
        let inst = instantiate_net(net, &bt)?;
        let plugged = normalize(
            &ctx.plug(&inst)
                .map_err(|e| Failure::new(4, e.to_string()))?,
        );
        let ok = equal(&plugged, &boolean_net(expect)).map_err(|e| Failure::new(4, e.to_string()))?;
        if !ok {
            return Err(Failure::new(
                4,
                format!("verification failed: {} did not normalize to {}", label, u8::from(expect)),
            ));
        }
        writeln!(out, "{}={}", label, u8::from(expect)).unwrap();
        Ok(())
    };
    check("plug_left", a, false)?;
    check("plug_right", b, true)?;
    writeln!(out, "verified=true").unwrap();
    Ok(out)
}
