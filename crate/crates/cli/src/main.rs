//! `subshift`: command-line front end for the workbench.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use subshift::action;
use subshift::clopen::ClopenSet;
use subshift::error::{Error, Result};
use subshift::identities;
use subshift::ring::Ring;
use subshift::shift::Shift;
use subshift::simplicity::{self, oracle};
use subshift::syntax;

#[derive(Parser, Debug)]
#[command(name = "subshift", version, about = "Exact computations with shifts of finite type and their algebras")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summarize a shift.
    Info { spec: String },
    /// List the words of length N in the language.
    Language {
        spec: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Evaluate a set expression to its canonical cylinder union.
    Clopen { spec: String, expr: String },
    /// Evaluate an algebra expression to canonical form.
    Eval {
        spec: String,
        expr: String,
        #[arg(long, default_value = "Q")]
        ring: String,
    },
    /// Verify the algebra relations and partial-representation identities.
    Check {
        spec: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value = "Q")]
        ring: String,
    },
    /// Cost of reaching the follower set of B from a point.
    Cost {
        spec: String,
        #[arg(long = "B", value_delimiter = ',', required = true)]
        b: Vec<String>,
        #[arg(long)]
        point: String,
    },
    /// Points of the orbit of a point under the partial action.
    Orbit {
        spec: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        depth: usize,
    },
    /// Decide simplicity of the algebra over a field.
    Simplicity {
        spec: String,
        #[arg(long)]
        ring: String,
        /// Also run the brute-force oracles with this bound and replay the
        /// witness.
        #[arg(long)]
        oracle_bound: Option<usize>,
    },
}

/// A computed result: JSON payload, text rendering, and whether the checked
/// property held.
struct Outcome {
    inputs: Value,
    result: Value,
    text: String,
    holds: bool,
}

impl Outcome {
    fn ok(inputs: Value, result: Value, text: String) -> Self {
        Outcome { inputs, result, text, holds: true }
    }
}

fn load(path: &str) -> Result<Shift> {
    Ok(Shift::build(syntax::load_spec(path)?))
}

fn verb(command: &Command) -> &'static str {
    match command {
        Command::Info { .. } => "info",
        Command::Language { .. } => "language",
        Command::Clopen { .. } => "clopen",
        Command::Eval { .. } => "eval",
        Command::Check { .. } => "check",
        Command::Cost { .. } => "cost",
        Command::Orbit { .. } => "orbit",
        Command::Simplicity { .. } => "simplicity",
    }
}

fn set_json(set: &ClopenSet) -> Value {
    let shift = set.shift();
    let words: Vec<String> = set.words().iter().map(|w| shift.format_word(w)).collect();
    json!({ "expr": set.to_expr(), "display": set.to_string(), "level": set.level(), "words": words })
}

fn info(spec: &str) -> Result<Outcome> {
    let shift = load(spec)?;
    let inputs = json!({ "spec": spec });
    let mut result = json!({
        "spec": syntax::spec_to_json(shift.spec()),
        "memory": shift.memory(),
        "empty": shift.is_empty(),
        "states": shift.states().len(),
    });
    let mut text = format!(
        "alphabet: {}\nforbidden: {}\nmemory: {}\n",
        shift.alphabet().names().join(" "),
        shift.spec().forbidden().iter().map(|w| shift.format_word(w)).collect::<Vec<_>>().join(" "),
        shift.memory()
    );
    if shift.is_empty() {
        text.push_str("the shift is empty\n");
        return Ok(Outcome::ok(inputs, result, text));
    }
    let counts: Vec<usize> = (0..=6).map(|n| shift.language(n).map(|l| l.len())).collect::<Result<_>>()?;
    let classes = simplicity::realizable_follower_classes(&shift)?;
    let class_json: Vec<Value> = classes
        .iter()
        .map(|c| json!({ "suffixes": c.label(), "follower": set_json(c.follower()) }))
        .collect();
    text.push_str(&format!("states: {}\nlanguage sizes (n = 0..6): {:?}\nfollower classes:\n", shift.states().len(), counts));
    for c in &classes {
        text.push_str(&format!("  F{{{}}} = {}\n", c.label().join(","), c.follower()));
    }
    result["language_sizes"] = json!(counts);
    result["follower_classes"] = json!(class_json);
    Ok(Outcome::ok(inputs, result, text))
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Info { spec } => info(spec),
        Command::Language { spec, n } => {
            let shift = load(spec)?;
            let words: Vec<String> = shift.language(*n)?.iter().map(|w| shift.format_word(w)).collect();
            let text = format!("{} words of length {n}\n{}\n", words.len(), words.join("\n"));
            Ok(Outcome::ok(json!({ "spec": spec, "n": n }), json!({ "count": words.len(), "words": words }), text))
        }
        Command::Clopen { spec, expr } => {
            let shift = load(spec)?;
            let set = syntax::eval_set_expr(&shift, expr)?;
            let mut result = set_json(&set);
            let single = set.is_singleton()?;
            result["singleton"] = json!(single.as_ref().map(|p| p.to_literal(shift.alphabet())));
            let mut text = format!("{set}\n");
            if let Some(p) = single {
                text.push_str(&format!("singleton: {}\n", p.display(shift.alphabet())));
            }
            Ok(Outcome::ok(json!({ "spec": spec, "expr": expr }), result, text))
        }
        Command::Eval { spec, expr, ring } => {
            let shift = load(spec)?;
            let ring = Ring::parse(ring)?;
            let x = syntax::eval_algebra_expr(&shift, ring, expr)?;
            let mut result = x.to_json();
            result["display"] = json!(x.to_string());
            result["expr"] = json!(x.to_expr());
            let text = format!("{x}\n");
            Ok(Outcome::ok(json!({ "spec": spec, "expr": expr, "ring": ring.to_literal() }), result, text))
        }
        Command::Check { spec, max_len, seed, samples, ring } => {
            let shift = load(spec)?;
            let ring = Ring::parse(ring)?;
            let report = identities::check_all(&shift, ring, *max_len, *samples, *seed)?;
            let mut text = String::new();
            for c in &report.checks {
                let status = if c.passed() { "ok" } else { "FAIL" };
                text.push_str(&format!("{status:4} {:28} {:6} instances  {}\n", c.name, c.checked, c.statement));
                if let Some(cx) = &c.first_counterexample {
                    text.push_str(&format!("     first counterexample: {cx}\n"));
                }
            }
            Ok(Outcome {
                inputs: json!({ "spec": spec, "max_len": max_len, "seed": seed, "samples": samples, "ring": ring.to_literal() }),
                result: json!({ "passed": report.passed(), "checks": report.to_json()["checks"] }),
                text,
                holds: report.passed(),
            })
        }
        Command::Cost { spec, b, point } => {
            let shift = load(spec)?;
            let words = b.iter().map(|w| shift.parse_word(w)).collect::<Result<Vec<_>>>()?;
            let x = syntax::parse_point(shift.alphabet(), point)?;
            let c = simplicity::cost(&shift, &words, &x)?;
            let text = match c {
                Some(c) => format!("{c}\n"),
                None => "∞\n".into(),
            };
            Ok(Outcome::ok(
                json!({ "spec": spec, "B": b, "point": point }),
                json!({ "cost": c, "infinite": c.is_none() }),
                text,
            ))
        }
        Command::Orbit { spec, point, depth } => {
            let shift = load(spec)?;
            let x = syntax::parse_point(shift.alphabet(), point)?;
            let orbit = action::orbit(&shift, &x, *depth)?;
            let points: Vec<String> = orbit.iter().map(|p| p.to_literal(shift.alphabet())).collect();
            let shown: Vec<String> = orbit.iter().map(|p| p.display(shift.alphabet()).to_string()).collect();
            let text = format!("{} points\n{}\n", points.len(), shown.join("\n"));
            Ok(Outcome::ok(
                json!({ "spec": spec, "point": point, "depth": depth }),
                json!({ "count": points.len(), "points": points }),
                text,
            ))
        }
        Command::Simplicity { spec, ring, oracle_bound } => {
            let shift = load(spec)?;
            let ring = Ring::parse(ring)?;
            let verdict = simplicity::simplicity_verdict(&shift, ring)?;
            let mut result = verdict.to_json();
            let mut text = format!("{}\n", if verdict.holds { "simple" } else { "not simple" });
            if let Some(simplicity::Witness::Failed { details, .. }) = &verdict.witness {
                for d in details {
                    text.push_str(&format!("  {} fails: {}\n", d.property, serde_json::to_string(&d.witness).expect("json")));
                }
            }
            for n in &verdict.notes {
                text.push_str(&format!("  note: {n}\n"));
            }
            if let Some(k) = oracle_bound {
                let bounds = oracle::OracleBounds::new(*k);
                let l = oracle::oracle_condition_l(&shift, bounds)?;
                let c = oracle::oracle_cofinal(&shift, bounds)?;
                let replayed = if verdict.holds { None } else { Some(oracle::replay(&shift, &verdict, bounds)?) };
                text.push_str(&format!(
                    "  oracle (bound {k}): condition_L {}, cofinal {}\n",
                    if l.holds { "passes" } else { "fails" },
                    if c.holds { "passes" } else { "fails" }
                ));
                if let Some(r) = replayed {
                    text.push_str(&format!("  witness replay: {}\n", if r { "reproduced" } else { "not reproduced" }));
                }
                result["oracle"] = json!({ "condition_L": l.to_json(), "cofinal": c.to_json(), "witness_replayed": replayed });
            }
            Ok(Outcome {
                inputs: json!({ "spec": spec, "ring": ring.to_literal(), "oracle_bound": oracle_bound }),
                result,
                text,
                holds: verdict.holds,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli.command);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let verb = verb(&cli.command);
    let version = env!("CARGO_PKG_VERSION");
    match outcome {
        Ok(o) => {
            if cli.json {
                let report = json!({
                    "verb": verb,
                    "inputs": o.inputs,
                    "result": o.result,
                    "holds": o.holds,
                    "timing_ms": elapsed,
                    "version": version,
                });
                println!("{}", serde_json::to_string_pretty(&report).expect("json"));
            } else {
                print!("{}", o.text);
            }
            if o.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => report_error(cli.json, verb, version, elapsed, &e),
    }
}

fn report_error(json_mode: bool, verb: &str, version: &str, elapsed: f64, e: &Error) -> ExitCode {
    if json_mode {
        let report = json!({
            "verb": verb,
            "error": { "code": e.code(), "message": e.to_string() },
            "timing_ms": elapsed,
            "version": version,
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    } else {
        eprintln!("error[{}]: {e}", e.code());
    }
    ExitCode::from(2)
}
