//! The `mmsym` command line. Every command prints one JSON document on
//! stdout (tagged `"schema": "mmsym/1"`) and a short human summary on
//! stderr. Exit codes: 0 pass, 1 fail, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::io::{matrix_from_value, matrix_to_value};
use crate::algebra::{
    algorithm_to_value, brent_check, builtin, fine_factorization, laderman, parse_algorithm,
    tensor_sum_check, triple_type, BilinearAlgorithm, TripleType,
};
use crate::engine::{multiply_once, multiply_recursive, VerifiedAlgorithm};
use crate::error::Error;
use crate::exact::Matrix;
use crate::groupid::{fingerprint, identify};
use crate::symmetry::{
    element_to_value, group_closure, orbits, parse_element, parse_elements, search_automorphisms,
    IsotropyElement, SearchLimits, SearchPool, DEFAULT_CLOSURE_CAP,
};

pub const SCHEMA: &str = "mmsym/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "mmsym",
    version,
    about = "Verify, run and find the symmetries of bilinear matrix multiplication algorithms"
)]
struct Cli {
    /// Output format of the stdout document.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
}

#[derive(Args, Debug)]
struct Source {
    /// strassen, laderman, hopcroft or naive:MxNxP
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,

    /// Algorithm JSON document.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Brent equations and the tensor sum.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Algorithm file (same as --file).
        path: Option<PathBuf>,
    },
    /// Apply a group element to an algorithm.
    Act {
        #[command(flatten)]
        source: Source,
        /// Group element JSON document.
        element: PathBuf,
    },
    /// Automorphism group: order, identification and orbits.
    Autgroup {
        #[command(flatten)]
        source: Source,
        /// Search for automorphisms with entries from --pool-entries.
        #[arg(long, conflicts_with = "generators")]
        search: bool,
        /// JSON list of generators.
        #[arg(long)]
        generators: Option<PathBuf>,
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        pool_entries: String,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Multiply two matrices with the algorithm and count operations.
    Multiply {
        #[command(flatten)]
        source: Source,
        /// Left factor, a JSON array of rows.
        x: PathBuf,
        /// Right factor, a JSON array of rows.
        y: PathBuf,
        /// Apply the algorithm recursively to square N x N inputs.
        #[arg(long)]
        recursive: bool,
        /// Block size at or below which recursion switches to the schoolbook product.
        #[arg(long, default_value_t = 1)]
        cutoff: usize,
    },
    /// Six-vector factorization of the type-(1,1,1) Laderman triples.
    Table1,
}

/// Why a command stopped early: bad input (exit 2) or a failed computation
/// (exit 1).
enum Failure {
    Input(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::UnknownName(_)
            | Error::Shape(_)
            | Error::Admissibility { .. } => Failure::Input(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

struct Outcome {
    passed: bool,
    document: Value,
    summary: String,
}

fn document(command: &str, fields: Value) -> Value {
    let mut obj = Map::new();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    if let Value::Object(rest) = fields {
        obj.extend(rest);
    }
    Value::Object(obj)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_algorithm(
    source: &Source,
    positional: Option<&PathBuf>,
) -> Result<BilinearAlgorithm, Failure> {
    match (&source.builtin, &source.file, positional) {
        (Some(name), None, None) => Ok(builtin(name)?),
        (None, Some(path), None) | (None, None, Some(path)) => Ok(parse_algorithm(&read(path)?)?),
        (None, None, None) => Err(Failure::Input("give --builtin NAME or --file PATH".into())),
        _ => Err(Failure::Input("give exactly one algorithm source".into())),
    }
}

fn load_matrix(path: &Path) -> Result<Matrix, Failure> {
    let text = read(path)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(matrix_from_value(&v, &path.display().to_string())?)
}

fn describe(alg: &BilinearAlgorithm) -> Value {
    let f = alg.format();
    json!({
        "name": alg.name().unwrap_or(""),
        "format": [f.m, f.n, f.p],
        "rank": alg.rank(),
    })
}

fn label(alg: &BilinearAlgorithm) -> String {
    alg.name().unwrap_or("algorithm").to_string()
}

fn cmd_verify(source: &Source, path: Option<&PathBuf>) -> Result<Outcome, Failure> {
    let alg = load_algorithm(source, path)?;
    let brent = brent_check(&alg);
    let sum = tensor_sum_check(&alg);
    let passed = brent.passed && sum.passed;
    let summary = format!(
        "{}: {} of {} Brent equations violated, tensor sum {}",
        label(&alg),
        brent.violations,
        brent.equations,
        if sum.passed { "matches" } else { "differs" }
    );
    let doc = document(
        "verify",
        json!({
            "algorithm": describe(&alg),
            "passed": passed,
            "brent": brent,
            "tensor_sum": sum,
        }),
    );
    Ok(Outcome {
        passed,
        document: doc,
        summary,
    })
}

fn cmd_act(source: &Source, element: &Path) -> Result<Outcome, Failure> {
    let alg = load_algorithm(source, None)?;
    let g = parse_element(&read(element)?)?;
    if g.format() != alg.format() {
        return Err(Failure::Input(format!(
            "element of format {} cannot act on an algorithm of format {}",
            g.format(),
            alg.format()
        )));
    }
    let image = g.act_on_algorithm(&alg)?;
    let automorphism = image.same_multiset(&alg);
    let summary = format!(
        "{}: element is {}an automorphism",
        label(&alg),
        if automorphism { "" } else { "not " }
    );
    let doc = document(
        "act",
        json!({
            "algorithm": describe(&alg),
            "element": element_to_value(&g),
            "automorphism": automorphism,
            "image": algorithm_to_value(&image),
        }),
    );
    Ok(Outcome {
        passed: automorphism,
        document: doc,
        summary,
    })
}

fn cmd_autgroup(
    source: &Source,
    search: bool,
    generators: Option<&PathBuf>,
    pool_entries: &str,
    budget: u64,
) -> Result<Outcome, Failure> {
    let alg = load_algorithm(source, None)?;
    let mut fields = Map::new();
    fields.insert("algorithm".into(), describe(&alg));
    let (gens, complete) = match (search, generators) {
        (true, None) => {
            let pool: SearchPool = pool_entries.parse()?;
            let report = search_automorphisms(&alg, &pool, SearchLimits { budget })?;
            let pool_text: Vec<String> = pool.entries().iter().map(|x| x.to_string()).collect();
            fields.insert("source".into(), json!("search"));
            fields.insert(
                "search".into(),
                json!({
                    "pool_entries": pool_text,
                    "budget": budget,
                    "candidates": report.candidates,
                    "complete": report.complete,
                    "per_sigma": report.per_sigma,
                    "found": report.found.len(),
                }),
            );
            (report.found, report.complete)
        }
        (false, Some(path)) => {
            let gens = parse_elements(&read(path)?)?;
            if let Some(bad) = gens.iter().position(|g| g.format() != alg.format()) {
                return Err(Failure::Input(format!(
                    "generator {bad} has format {}, the algorithm has {}",
                    gens[bad].format(),
                    alg.format()
                )));
            }
            let mut rejected = Vec::new();
            for (i, g) in gens.iter().enumerate() {
                if !g.is_automorphism(&alg)? {
                    rejected.push(i);
                }
            }
            fields.insert("source".into(), json!("generators"));
            fields.insert("generators".into(), json!(gens.len()));
            if !rejected.is_empty() {
                fields.insert("passed".into(), json!(false));
                fields.insert("not_automorphisms".into(), json!(rejected));
                return Ok(Outcome {
                    passed: false,
                    document: document("autgroup", Value::Object(fields)),
                    summary: format!(
                        "{}: generators {rejected:?} are not automorphisms",
                        label(&alg)
                    ),
                });
            }
            (gens, true)
        }
        _ => {
            return Err(Failure::Input(
                "give exactly one of --search or --generators PATH".into(),
            ))
        }
    };
    let group = group_closure(alg.format(), &gens, DEFAULT_CLOSURE_CAP)?;
    let fp = fingerprint(&group)?;
    let name = identify(&fp);
    let partition = orbits(&gens, &alg)?;
    let summary = format!(
        "{}: group of order {} ({name}), {} orbits{}",
        label(&alg),
        group.len(),
        partition.len(),
        if complete { "" } else { ", search incomplete" }
    );
    fields.insert("passed".into(), json!(complete));
    fields.insert("order".into(), json!(group.len()));
    fields.insert("group".into(), json!(name));
    fields.insert(
        "fingerprint".into(),
        serde_json::to_value(&fp).expect("serializable"),
    );
    fields.insert(
        "orbits".into(),
        serde_json::to_value(&partition).expect("serializable"),
    );
    let gens_json: Vec<Value> = gens.iter().map(element_to_value).collect();
    fields.insert("generator_elements".into(), Value::Array(gens_json));
    Ok(Outcome {
        passed: complete,
        document: document("autgroup", Value::Object(fields)),
        summary,
    })
}

fn cmd_multiply(
    source: &Source,
    x: &Path,
    y: &Path,
    recursive: bool,
    cutoff: usize,
) -> Result<Outcome, Failure> {
    let alg = load_algorithm(source, None)?;
    let verified = VerifiedAlgorithm::new(alg.clone())?;
    let (xm, ym) = (load_matrix(x)?, load_matrix(y)?);
    let (z, ops) = if recursive {
        multiply_recursive(&verified, &xm, &ym, cutoff)?
    } else {
        multiply_once(&verified, &xm, &ym)?
    };
    let matches = xm.mul(&ym).map(|n| n == z).unwrap_or(false);
    let mut fields = json!({
        "algorithm": describe(&alg),
        "mode": if recursive { "recursive" } else { "once" },
    });
    if recursive {
        fields["cutoff"] = json!(cutoff);
    }
    fields["passed"] = json!(matches);
    fields["product"] = matrix_to_value(&z);
    fields["ops"] = serde_json::to_value(ops).expect("serializable");
    let summary = format!(
        "{}: {} non-scalar multiplications, {} additions, {} scalar multiplications",
        label(&alg),
        ops.nonscalar_mults,
        ops.additions,
        ops.scalar_mults
    );
    Ok(Outcome {
        passed: matches,
        document: document("multiply", fields),
        summary,
    })
}

fn cmd_table1() -> Result<Outcome, Failure> {
    let alg = laderman();
    let mut rows = Vec::new();
    for (l, t) in alg.triples().iter().enumerate() {
        if triple_type(t) != TripleType(1, 1, 1) {
            continue;
        }
        let f = fine_factorization(t)?;
        let vectors: Vec<String> = f
            .vectors()
            .iter()
            .map(|v| crate::algebra::vector_label(v))
            .collect();
        rows.push(json!({ "index": l + 1, "vectors": vectors, "pattern": f.pattern() }));
    }
    let summary = format!("laderman: {} type-(1,1,1) triples", rows.len());
    let doc = document(
        "table1",
        json!({
            "algorithm": describe(&alg),
            "columns": ["d", "e'", "e", "f'", "f", "d'"],
            "count": rows.len(),
            "rows": rows,
        }),
    );
    Ok(Outcome {
        passed: true,
        document: doc,
        summary,
    })
}

/// Runs the command line `args` (including the program name) and returns
/// what should be printed and the exit code.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let OutputFormat::Json = cli.format;
    let (name, outcome) = match &cli.command {
        Command::Verify { source, path } => ("verify", cmd_verify(source, path.as_ref())),
        Command::Act { source, element } => ("act", cmd_act(source, element)),
        Command::Autgroup {
            source,
            search,
            generators,
            pool_entries,
            budget,
        } => (
            "autgroup",
            cmd_autgroup(source, *search, generators.as_ref(), pool_entries, *budget),
        ),
        Command::Multiply {
            source,
            x,
            y,
            recursive,
            cutoff,
        } => ("multiply", cmd_multiply(source, x, y, *recursive, *cutoff)),
        Command::Table1 => ("table1", cmd_table1()),
    };
    match outcome {
        Ok(o) => CommandResult {
            exit_code: if o.passed { 0 } else { 1 },
            stdout: render(&o.document),
            stderr: format!("{}\n", o.summary),
        },
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Input(m) => (2, m),
                Failure::Compute(m) => (1, m),
            };
            CommandResult {
                exit_code: code,
                stdout: render(&document(
                    name,
                    json!({ "passed": false, "error": message }),
                )),
                stderr: format!("mmsym {name}: {message}\n"),
            }
        }
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Generators with their names, as a JSON array usable with
/// `autgroup --generators`.
pub fn generators_document(generators: &[(String, IsotropyElement)]) -> String {
    let list: Vec<Value> = generators
        .iter()
        .map(|(_, g)| element_to_value(g))
        .collect();
    render(&Value::Array(list))
}
