use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chroma_core::complex::{build_complex_with, complexes_isomorphic_with, ColoringComplex};
use chroma_core::cuts::{w_polynomial_with, CutRule};
use chroma_core::graph::{chromatic_polynomial, parse_graph};
use chroma_core::ideal::{count_degree_monomials_with, decode_monomial, encode_coloring, ColoringIdeal, Monomial};
use chroma_core::json::bigint_value;
use chroma_core::verify::{run_verification, VerifyOptions};
use chroma_core::{Coloring, Config, Execution, Graph};

#[derive(Parser, Debug)]
#[command(name = "chroma", version, about = "Coloring ideals and coloring complexes of small graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    output: Format,

    /// Largest vertex count for sweeps over all permutations.
    #[arg(long, global = true)]
    max_d: Option<usize>,

    /// Largest number of permutations a single sweep may visit.
    #[arg(long, env = "CHROMA_MAX_PERMS", global = true)]
    max_perms: Option<u64>,

    /// Largest monomial degree for face-ring enumeration.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic polynomial, coefficients in ascending degree.
    Chromatic {
        #[arg(long)]
        graph: PathBuf,
        /// Evaluate at this many colors instead.
        #[arg(long)]
        n: Option<u64>,
    },
    /// W-polynomial (cut-count distribution over all permutations).
    Wpoly {
        #[arg(long)]
        graph: PathBuf,
    },
    /// The coloring complex.
    Complex(ComplexArgs),
    /// The coloring ideal.
    Ideal(IdealArgs),
    /// Translate between monomials of the coloring ideal and colorings.
    Monomial {
        #[command(subcommand)]
        action: MonomialCommand,
    },
    /// Decide whether two graphs have isomorphic coloring complexes.
    Iso {
        #[arg(long)]
        graph1: PathBuf,
        #[arg(long)]
        graph2: PathBuf,
    },
    /// Replay every identity on exhaustive and sampled graph families.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(ArgGroup::new("view").multiple(false)))]
struct ComplexArgs {
    /// Graph file: edge list or graph6.
    #[arg(long)]
    graph: PathBuf,
    /// Only the f-vector.
    #[arg(long, group = "view")]
    fvector: bool,
    /// Only the h-vector.
    #[arg(long, group = "view")]
    hvector: bool,
    #[arg(long, group = "view")]
    euler: bool,
    /// One facet per line.
    #[arg(long, group = "view")]
    facets: bool,
    /// Facets, vectors and the edge-to-facet map as JSON.
    #[arg(long, group = "view")]
    json: bool,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Graph file: edge list or graph6.
    #[arg(long)]
    graph: PathBuf,
    /// Minimal generators (the default view).
    #[arg(long, conflicts_with_all = ["stats", "hilbert"])]
    generators: bool,
    /// Degree histogram and indeterminate multiplicities of the generators.
    #[arg(long, conflicts_with = "hilbert")]
    stats: bool,
    /// Number of monomials of each degree 0..=N.
    #[arg(long, value_name = "N")]
    hilbert: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum MonomialCommand {
    /// Monomial to coloring.
    Decode {
        #[arg(long)]
        graph: PathBuf,
        /// Product of factors such as `x{2,5}^3`; `{}` is the empty set and
        /// `{*}` the full vertex set.
        #[arg(long = "m", value_name = "EXPR")]
        expr: String,
    },
    /// Coloring to monomial.
    Encode {
        #[arg(long)]
        graph: PathBuf,
        /// `vertex:color` pairs, comma separated.
        #[arg(long)]
        coloring: String,
        /// Number of available colors; at least the largest color used.
        #[arg(long)]
        palette: u32,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check every labeled graph on this many vertices.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=6))]
    exhaustive_d: u64,
    /// Vertex counts for random samples (repeatable).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=8))]
    sample_d: Vec<u64>,
    /// Random graphs per sampled vertex count.
    #[arg(long, default_value_t = 200)]
    count: usize,
    /// Seed for the sampled families.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Replace the cut rule with a broken one.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<chroma_core::Error> for Failure {
    fn from(e: chroma_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn config(cli: &Cli) -> Config {
    let mut cfg = Config::default();
    if let Some(d) = cli.max_d {
        cfg.limits.max_d = d;
    }
    if let Some(p) = cli.max_perms {
        cfg.limits.max_perms = p;
    }
    if let Some(n) = cli.max_n {
        cfg.limits.max_monomial_n = n;
    }
    if cli.sequential {
        cfg.exec = Execution::Sequential;
    }
    cfg
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let cfg = config(cli);
    let json_out = cli.output == Format::Json;
    let emit = |text: String, value: Value| -> String {
        if json_out {
            format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
        } else {
            text
        }
    };
    match &cli.command {
        Command::Chromatic { graph, n } => {
            let g = load(graph)?;
            let chi = chromatic_polynomial(&g);
            let coeffs: Vec<Value> = chi.coeffs().iter().map(bigint_value).collect();
            Ok(match n {
                Some(n) => {
                    let v = chi.eval(&(*n).into());
                    emit(format!("{v}\n"), json!({"coefficients": coeffs, "n": n, "value": bigint_value(&v)}))
                }
                None => emit(format!("{}\n", join(chi.coeffs())), json!({"coefficients": coeffs})),
            })
        }
        Command::Wpoly { graph } => {
            let g = load(graph)?;
            let w = w_polynomial_with(&g, CutRule::Standard, &cfg)?;
            let coeffs = w.coeffs();
            let values: Vec<Value> = coeffs.iter().map(bigint_value).collect();
            Ok(emit(format!("{}\n", join(&coeffs)), json!({"d": g.d(), "coefficients": values})))
        }
        Command::Complex(args) => complex(args, &cfg, json_out),
        Command::Ideal(args) => ideal(args, &cfg, &emit),
        Command::Monomial { action } => monomial(action, &emit),
        Command::Iso { graph1, graph2 } => {
            let a = build_complex_with(&load(graph1)?, &cfg)?;
            let b = build_complex_with(&load(graph2)?, &cfg)?;
            let r = complexes_isomorphic_with(a.complex(), b.complex(), &cfg)?;
            let mut text = String::from(if r.isomorphic { "isomorphic\n" } else { "not isomorphic\n" });
            let mut pairs = Vec::new();
            for (x, y) in r.witness.iter().flatten() {
                writeln!(text, "{x} -> {y}").expect("string write");
                pairs.push(json!([x, y]));
            }
            let witness = if r.isomorphic { Value::from(pairs) } else { Value::Null };
            Ok(emit(text, json!({"isomorphic": r.isomorphic, "witness": witness})))
        }
        Command::Verify(args) => {
            let opts = VerifyOptions {
                exhaustive_d: args.exhaustive_d as usize,
                sample_d: if args.sample_d.is_empty() {
                    vec![5, 6]
                } else {
                    args.sample_d.iter().map(|&d| d as usize).collect()
                },
                count: args.count,
                seed: args.seed,
                rule: if args.inject_fault {
                    CutRule::DropLetterTieBreak
                } else {
                    CutRule::Standard
                },
            };
            let report = run_verification(&opts, &cfg);
            let out = emit(format!("{report}\n"), serde_json::to_value(&report).expect("serializable"));
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn void_or(text: String) -> String {
    if text.is_empty() {
        "void".into()
    } else {
        text
    }
}

fn complex(args: &ComplexArgs, cfg: &Config, json_out: bool) -> Result<String, Failure> {
    let g = load(&args.graph)?;
    let c: ColoringComplex = build_complex_with(&g, cfg)?;
    if args.json || json_out {
        let body = serde_json::to_string_pretty(&c.to_json()).expect("serializable");
        return Ok(format!("{body}\n"));
    }
    let f = void_or(c.f_vector().to_string());
    let h = void_or(c.h_vector().to_string());
    let e = c.euler_characteristics();
    let mut out = String::new();
    if args.fvector {
        writeln!(out, "{f}")
    } else if args.hvector {
        writeln!(out, "{h}")
    } else if args.euler {
        writeln!(out, "euler {} reduced {}", e.euler, e.reduced)
    } else if args.facets {
        c.facets().iter().try_for_each(|ch| writeln!(out, "{ch}"))
    } else {
        writeln!(
            out,
            "d {}\nfacets {}\nf {f}\nh {h}\neuler {}\nreduced {}",
            c.d(),
            c.facets().len(),
            e.euler,
            e.reduced
        )
    }
    .expect("string write");
    Ok(out)
}

fn ideal(args: &IdealArgs, cfg: &Config, emit: &dyn Fn(String, Value) -> String) -> Result<String, Failure> {
    let g = load(&args.graph)?;
    if let Some(top) = args.hilbert {
        let mut text = String::new();
        let mut values = Vec::new();
        for n in 0..=top {
            let c = count_degree_monomials_with(&g, n, cfg)?;
            writeln!(text, "{n} {c}").expect("string write");
            values.push(bigint_value(&c));
        }
        return Ok(emit(text, json!({"hilbert": values})));
    }
    let id = ColoringIdeal::with_config(&g, cfg)?;
    if args.stats {
        let s = id.generator_stats();
        let degrees: Vec<String> = s.degree_histogram.iter().map(|(d, k)| format!("{d}:{k}")).collect();
        let text = format!(
            "degrees {}\nmultiplicities {}\n",
            degrees.join(" "),
            join(&s.indeterminate_multiplicities)
        );
        return Ok(emit(text, serde_json::to_value(&s).expect("serializable")));
    }
    let gens = id.minimal_generators();
    let text: String = gens.iter().map(|m| format!("{m}\n")).collect();
    Ok(emit(text, json!({"generators": gens})))
}

fn monomial(action: &MonomialCommand, emit: &dyn Fn(String, Value) -> String) -> Result<String, Failure> {
    match action {
        MonomialCommand::Decode { graph, expr } => {
            let g = load(graph)?;
            let m = Monomial::parse(expr, g.d())?;
            let c = decode_monomial(&g, &m)?;
            let text = format!("{}\n", describe_decoded(&m, &c));
            Ok(emit(
                text,
                json!({"palette": c.palette(), "colors": c.colors(), "coloring": c.to_string()}),
            ))
        }
        MonomialCommand::Encode {
            graph,
            coloring,
            palette,
        } => {
            let g = load(graph)?;
            let c = Coloring::parse(coloring, *palette, g.d())?;
            let m = encode_coloring(&g, &c)?;
            Ok(emit(format!("{m}\n"), json!({"monomial": m, "degree": m.degree()})))
        }
    }
}

/// Lists vertices block by block in factor order, then the rest as `others`.
fn describe_decoded(m: &Monomial, c: &Coloring) -> String {
    let mut parts = Vec::new();
    let mut prev = chroma_core::VertexSet::EMPTY;
    for &(s, _) in m.factors() {
        for v in s.minus(prev).iter() {
            parts.push(format!("{v}↦{}", c.color(v)));
        }
        prev = s;
    }
    if prev != chroma_core::VertexSet::full(m.d()) {
        parts.push(format!("others↦{}", c.palette()));
    }
    format!("{}, palette {}", parts.join(" "), c.palette())
}
