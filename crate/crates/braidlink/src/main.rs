//! Command-line front end: linking numbers of two-component closed braids,
//! generalized Lefschetz numbers, sub-braid and closure-component queries,
//! the L-R forcing order, the verification harness, and SVG diagrams.
//!
//! Exit codes: 0 success, 1 computation or verification failure, 2 usage
//! error. With `--json` every command prints a single machine-readable JSON
//! object on stdout.

use std::path::PathBuf;
use std::process::ExitCode;

use braidlink::catalog_file::{load_catalog, LoadOutcome};
use braidlink::render::{render_svg, RenderOptions};
use braidlink::verify::{run_checks, Check};
use braidlink_core::braid::{BraidWord, StrandSet};
use braidlink_core::catalog::builtin_records;
use braidlink_core::forcing::{forced_set, forces, LRWord};
use braidlink_core::fox::lefschetz;
use braidlink_core::linking::{
    lk_combinatorial, lk_guaschi, linking_number, LinkingError, TwoComponentSplit,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "braidlink",
    version,
    about = "Exact linking data of closed braids",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a machine-readable JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Linking number of a two-component closed braid.
    Lk {
        /// Braid word as signed integers, e.g. "1 -2 -3 -3 -4".
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Strand count.
        #[arg(long)]
        n: usize,
        /// Strands of the base component, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        base: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Generalized Lefschetz number of a braid word.
    Lefschetz {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// Sub-braid obtained by keeping a union of closure components.
    Subbraid {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: usize,
        /// Strands to keep, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
    },
    /// Closure components of a braid word.
    Components {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// Underlying permutation of a braid word.
    Perm {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// Does the first pseudo-Anosov L-R word force the second?
    Forces { w: String, v: String },
    /// All pseudo-Anosov L-R words forced by a word.
    ForcedSet { w: String },
    /// Run every verification check; exit 0 only if all pass.
    Verify {
        /// Catalog JSON file (defaults to the built-in records).
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Render a braid diagram to an SVG file.
    Render {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: usize,
        /// Strands drawn in the highlighted stroke, comma separated.
        #[arg(long, value_delimiter = ',')]
        base: Option<Vec<usize>>,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
        /// Label each crossing with its sign.
        #[arg(long)]
        labels: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Both,
    Diagram,
    Guaschi,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Both => "both",
            Method::Diagram => "diagram",
            Method::Guaschi => "guaschi",
        }
    }
}

struct Output {
    json: Value,
    text: String,
    exit: ExitCode,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, exit: ExitCode::SUCCESS }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_name = command_name(&cli.command);
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                let mut value = out.json;
                if let Value::Object(map) = &mut value {
                    map.insert("command".into(), json!(command_name));
                    if !map.contains_key("status") {
                        map.insert("status".into(), json!("ok"));
                    }
                }
                println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
            } else {
                print!("{}", out.text);
            }
            out.exit
        }
        Err(message) => {
            if cli.json {
                let value = json!({
                    "command": command_name,
                    "status": "error",
                    "error": message,
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(1)
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Lk { .. } => "lk",
        Command::Lefschetz { .. } => "lefschetz",
        Command::Subbraid { .. } => "subbraid",
        Command::Components { .. } => "components",
        Command::Perm { .. } => "perm",
        Command::Forces { .. } => "forces",
        Command::ForcedSet { .. } => "forced-set",
        Command::Verify { .. } => "verify",
        Command::Render { .. } => "render",
    }
}

fn run(command: Command) -> Result<Output, String> {
    match command {
        Command::Lk { word, n, base, method } => cmd_lk(&word, n, &base, method),
        Command::Lefschetz { word, n } => cmd_lefschetz(&word, n),
        Command::Subbraid { word, n, keep } => cmd_subbraid(&word, n, &keep),
        Command::Components { word, n } => cmd_components(&word, n),
        Command::Perm { word, n } => cmd_perm(&word, n),
        Command::Forces { w, v } => cmd_forces(&w, &v),
        Command::ForcedSet { w } => cmd_forced_set(&w),
        Command::Verify { catalog } => cmd_verify(catalog.as_deref()),
        Command::Render { word, n, base, out, labels } => {
            cmd_render(&word, n, base.as_deref(), &out, labels)
        }
    }
}

fn parse_word(word: &str, n: usize) -> Result<BraidWord, String> {
    BraidWord::parse(word, n).map_err(|e| e.to_string())
}

fn cmd_lk(word: &str, n: usize, base: &[usize], method: Method) -> Result<Output, String> {
    let braid = parse_word(word, n)?;
    let base_set: StrandSet = base.iter().copied().collect();
    let split = TwoComponentSplit::new(braid, base_set).map_err(|e| e.to_string())?;

    let mut json = json!({
        "word": word,
        "n": n,
        "base": split.base().to_vec(),
        "method": method.as_str(),
    });
    let map = json.as_object_mut().expect("object");
    let mut text = String::new();

    let lk = match method {
        Method::Diagram => lk_combinatorial(&split).map_err(|e| e.to_string())?,
        Method::Guaschi => lk_guaschi(&split).map_err(|e| e.to_string())?.lk,
        Method::Both => linking_number(&split).map_err(|e| e.to_string())?,
    };
    if method != Method::Diagram {
        match lk_guaschi(&split) {
            Ok(data) => {
                map.insert("det_extension".into(), json!(data.det_extension.to_string()));
                map.insert("det_base".into(), json!(data.det_base.to_string()));
                text.push_str(&format!("det(r(extension)-I)|t2=1 = {}\n", data.det_extension));
                text.push_str(&format!("det(r(base)-I) = {}\n", data.det_base));
            }
            Err(LinkingError::Indeterminate) => {
                map.insert("note".into(), json!("determinant method indeterminate"));
                text.push_str("determinant method indeterminate, using crossing signs\n");
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    let verdict = if lk != 0 { "linked" } else { "inconclusive" };
    map.insert("lk".into(), json!(lk));
    map.insert("verdict".into(), json!(verdict));
    text.push_str(&format!("lk = {lk}\nverdict: {verdict}\n"));
    Ok(Output::ok(json, text))
}

fn cmd_lefschetz(word: &str, n: usize) -> Result<Output, String> {
    let braid = parse_word(word, n)?;
    let l = lefschetz(&braid).map_err(|e| e.to_string())?;
    let text = format!("{l}\n");
    Ok(Output::ok(json!({ "word": word, "n": n, "lefschetz": l.to_string() }), text))
}

fn cmd_subbraid(word: &str, n: usize, keep: &[usize]) -> Result<Output, String> {
    let braid = parse_word(word, n)?;
    let keep_set: StrandSet = keep.iter().copied().collect();
    let sub = braid.delete_strands(&keep_set).map_err(|e| e.to_string())?;
    let text = format!("subbraid: {sub}\nstrands: {}\n", sub.n());
    Ok(Output::ok(
        json!({
            "word": word,
            "n": n,
            "keep": keep_set.to_vec(),
            "subbraid": sub.to_string(),
            "strands": sub.n(),
        }),
        text,
    ))
}

fn cmd_components(word: &str, n: usize) -> Result<Output, String> {
    let braid = parse_word(word, n)?;
    let components: Vec<Vec<usize>> =
        braid.closure_components().iter().map(|c| c.to_vec()).collect();
    let text = format!("{}\n", serde_json::to_string(&components).expect("json"));
    Ok(Output::ok(json!({ "word": word, "n": n, "components": components }), text))
}

fn cmd_perm(word: &str, n: usize) -> Result<Output, String> {
    let braid = parse_word(word, n)?;
    let perm = braid.permutation();
    let cycles = perm.cycles();
    let cycle_text = cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            format!("({})", inner.join(" "))
        })
        .collect::<Vec<_>>()
        .join("");
    let text = format!("image: {perm}\ncycles: {cycle_text}\n");
    Ok(Output::ok(
        json!({ "word": word, "n": n, "image": perm.image(), "cycles": cycles }),
        text,
    ))
}

fn cmd_forces(w: &str, v: &str) -> Result<Output, String> {
    let w_word = LRWord::parse(w).map_err(|e| e.to_string())?;
    let v_word = LRWord::parse(v).map_err(|e| e.to_string())?;
    let result = forces(&w_word, &v_word).map_err(|e| e.to_string())?;
    Ok(Output::ok(
        json!({
            "w": w_word.to_string(),
            "v": v_word.to_string(),
            "forces": result,
        }),
        format!("{result}\n"),
    ))
}

fn cmd_forced_set(w: &str) -> Result<Output, String> {
    let w_word = LRWord::parse(w).map_err(|e| e.to_string())?;
    let set = forced_set(&w_word).map_err(|e| e.to_string())?;
    let mut words: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    words.sort_by_key(|s| (s.len(), s.clone()));
    let text = format!("{}\n", words.join(" "));
    Ok(Output::ok(json!({ "w": w_word.to_string(), "forced_set": words }), text))
}

fn cmd_verify(catalog: Option<&std::path::Path>) -> Result<Output, String> {
    let mut checks: Vec<Check> = Vec::new();
    let records = match catalog {
        Some(path) => {
            let LoadOutcome { valid, rejected } =
                load_catalog(path).map_err(|e| e.to_string())?;
            for (name, error) in rejected {
                checks.push(Check {
                    name: format!("catalog {name} valid"),
                    expected: "valid record".into(),
                    computed: format!("error: {error}"),
                    passed: false,
                });
            }
            valid
        }
        None => builtin_records(),
    };
    checks.extend(run_checks(&records));

    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;
    let mut text = String::new();
    for c in &checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "[{tag}] {}: expected {}, computed {}\n",
            c.name, c.expected, c.computed
        ));
    }
    text.push_str(&format!("{passed} passed, {failed} failed\n"));

    let json_checks: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "expected": c.expected,
                "computed": c.computed,
                "passed": c.passed,
            })
        })
        .collect();
    Ok(Output {
        json: json!({
            "status": if failed == 0 { "ok" } else { "failed" },
            "checks": json_checks,
            "passed": passed,
            "failed": failed,
        }),
        text,
        exit: if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) },
    })
}

fn cmd_render(
    word: &str,
    n: usize,
    base: Option<&[usize]>,
    out: &std::path::Path,
    labels: bool,
) -> Result<Output, String> {
    let braid = parse_word(word, n)?;
    let opts = RenderOptions {
        base: base.map(|b| b.iter().copied().collect()),
        labels,
    };
    let svg = render_svg(&braid, &opts);
    std::fs::write(out, &svg).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    Ok(Output::ok(
        json!({ "word": word, "n": n, "out": out.display().to_string() }),
        format!("wrote {}\n", out.display()),
    ))
}
