//! Command-line front end: every analysis of the `recog` library behind one
//! binary, with reproducible JSON (and DOT/text) output.
//!
//! All results go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 negative analysis outcome (an unseparated pair), 2 usage or parse
//! errors, 3 automaton/monoid resource limits, 4 enumeration resource
//! limits.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use recog::algebra::{transition_monoid_bounded, DEFAULT_MONOID_LIMIT};
use recog::alphabet::{Alphabet, Word};
use recog::automata::{compile_bounded, Dfa, DEFAULT_STATE_LIMIT};
use recog::error::Error;
use recog::oracles::MembershipOracle;
use recog::phitypes::{
    rank_report_with, separation_certificate, theta_classes, two_type_bound_check, witness_tree,
    LanguageHandle, RankOptions,
};
use recog::regex::parse_regex;

#[derive(Parser)]
#[command(
    name = "recog",
    version,
    about = "Minimal automata, syntactic monoids, star-freeness and right-congruence analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `dot` applies to automaton-valued commands only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized workloads. Accepted for reproducibility of
    /// scripted runs; the current commands are fully deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Bound on intermediate automaton sizes during compilation.
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_LIMIT)]
    state_limit: usize,

    /// Bound on syntactic monoid sizes.
    #[arg(long, global = true, default_value_t = DEFAULT_MONOID_LIMIT)]
    monoid_limit: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

/// Language input: exactly one of a regex (with its alphabet), a DFA JSON
/// file, or a built-in oracle name.
#[derive(Args)]
struct InputArgs {
    /// Alphabet, one character per symbol (e.g. `--alphabet 012`).
    #[arg(long)]
    alphabet: Option<String>,

    /// Regular expression; requires --alphabet.
    #[arg(long)]
    regex: Option<String>,

    /// Path to a DFA in JSON form.
    #[arg(long)]
    dfa: Option<PathBuf>,

    /// Built-in oracle: balanced01, triple or dcfl_seq.
    #[arg(long)]
    oracle: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a regex to its minimal complete DFA.
    Compile {
        /// Alphabet, one character per symbol.
        #[arg(long)]
        alphabet: String,
        regex: String,
    },
    /// Minimize a DFA (file input, or a regex via --regex/--alphabet).
    Minimize {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide language equivalence of two DFA files or two regexes.
    Equivalent {
        /// Alphabet for regex operands.
        #[arg(long)]
        alphabet: Option<String>,
        /// DFA JSON files; pass twice to compare two automata.
        #[arg(long = "dfa")]
        dfas: Vec<PathBuf>,
        /// Regex operands when no files are given.
        regexes: Vec<String>,
    },
    /// Run a word (ε is written `_`) against a language.
    Run {
        #[command(flatten)]
        input: InputArgs,
        word: String,
    },
    /// Recognizability report: class counts or a separation certificate.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Probe length bound for oracle-backed languages.
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Star-freeness verdict for a regex.
    Starfree {
        #[arg(long)]
        alphabet: String,
        regex: String,
    },
    /// Syntactic monoid of a regex.
    Monoid {
        #[arg(long)]
        alphabet: String,
        regex: String,
    },
    /// Right-congruence classes of a language.
    ThetaClasses {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Pairwise separation certificate for the given words.
    Certificate {
        #[command(flatten)]
        input: InputArgs,
        /// Suffix length bound for the separator search.
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        /// Member words (ε is written `_`).
        #[arg(required = true)]
        members: Vec<String>,
    },
    /// Verified rank witness tree over the dcfl_seq language.
    WitnessTree {
        #[arg(long)]
        depth: usize,
        #[arg(long = "branch")]
        branching: usize,
    },
    /// Check the two-class bound for parameters of the triple language.
    TwoTypeCheck {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::StateLimit { .. } | Error::MonoidLimit { .. } => 3,
            Error::WordCountOverflow { .. } | Error::ProbeLimit { .. } => 4,
            Error::UnseparatedPair { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Compile { alphabet, regex } => {
            let dfa = compile_regex(regex, alphabet, cli.state_limit)?;
            render_dfa(&dfa, cli.format)
        }
        Command::Minimize { input } => {
            let dfa = match resolve(input, cli.state_limit)? {
                Resolved::Dfa(d) => d.minimize(),
                Resolved::Oracle(_) => {
                    return Err(Failure::usage("minimize needs a DFA or regex input"))
                }
            };
            render_dfa(&dfa, cli.format)
        }
        Command::Equivalent {
            alphabet,
            dfas,
            regexes,
        } => {
            let (left, right) = match (dfas.len(), regexes.len()) {
                (2, 0) => (load_dfa(&dfas[0])?, load_dfa(&dfas[1])?),
                (0, 2) => {
                    let alphabet = alphabet
                        .as_deref()
                        .ok_or_else(|| Failure::usage("regex operands need --alphabet"))?;
                    (
                        compile_regex(&regexes[0], alphabet, cli.state_limit)?,
                        compile_regex(&regexes[1], alphabet, cli.state_limit)?,
                    )
                }
                _ => {
                    return Err(Failure::usage(
                        "pass exactly two inputs: --dfa twice, or two regexes",
                    ))
                }
            };
            let verdict = left.equivalent(&right).map_err(Failure::from)?;
            let doc = match &verdict {
                None => serde_json::json!({"equivalent": true}),
                Some(w) => serde_json::json!({
                    "counterexample": w.to_string(),
                    "equivalent": false,
                }),
            };
            match cli.format {
                Format::Text => Ok(match verdict {
                    None => "equivalent".to_string(),
                    Some(w) => format!("not equivalent; distinguished by {w}"),
                }),
                _ => render_json(doc, cli.format),
            }
        }
        Command::Run { input, word } => {
            let handle = resolve(input, cli.state_limit)?.into_handle();
            let w = Word::parse(word, handle.alphabet()).map_err(Failure::from)?;
            let accepted = handle.contains(&w).map_err(Failure::from)?;
            match cli.format {
                Format::Text => Ok(format!("{w}: {}", if accepted { "accepted" } else { "rejected" })),
                _ => render_json(
                    serde_json::json!({"accepted": accepted, "word": w.to_string()}),
                    cli.format,
                ),
            }
        }
        Command::Analyze { input, max_len } => {
            let handle = resolve(input, cli.state_limit)?.into_handle();
            let options = RankOptions {
                monoid_limit: cli.monoid_limit,
                ..RankOptions::default()
            };
            let report = rank_report_with(&handle, *max_len, &options).map_err(Failure::from)?;
            match cli.format {
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "rank_zero: {}", report.rank_zero);
                    let _ = writeln!(out, "empirical: {}", report.empirical);
                    if let Some(m) = report.mult_phi {
                        let _ = writeln!(out, "mult_phi (state complexity): {m}");
                    }
                    if let Some(m) = report.mult_phi_prime {
                        let _ = writeln!(out, "mult_phi_prime (syntactic monoid size): {m}");
                    }
                    let _ = write!(out, "classes: {}", report.index.class_count());
                    if let Some(w) = &report.witness {
                        let _ = write!(out, "\nwitness: {} pairwise separated members", w.k());
                    }
                    Ok(out)
                }
                Format::Json => Ok(report.to_json()),
                Format::Dot => Err(Failure::usage("analyze has no DOT form")),
            }
        }
        Command::Starfree { alphabet, regex } => {
            let dfa = compile_regex(regex, alphabet, cli.state_limit)?;
            let monoid = transition_monoid_bounded(&dfa, cli.monoid_limit).map_err(Failure::from)?;
            let doc = match monoid.monoid().aperiodicity_witness() {
                None => serde_json::json!({"star_free": true}),
                Some(elem) => serde_json::json!({
                    "star_free": false,
                    "witness": format!("{}-action", monoid.representatives()[elem]),
                }),
            };
            match cli.format {
                Format::Text => Ok(doc["star_free"]
                    .as_bool()
                    .map(|b| if b { "star-free".to_string() } else {
                        format!("not star-free (witness {})", doc["witness"].as_str().unwrap())
                    })
                    .unwrap()),
                _ => render_json(doc, cli.format),
            }
        }
        Command::Monoid { alphabet, regex } => {
            let dfa = compile_regex(regex, alphabet, cli.state_limit)?;
            let monoid = transition_monoid_bounded(&dfa, cli.monoid_limit).map_err(Failure::from)?;
            match cli.format {
                Format::Text => {
                    let reps: Vec<String> = monoid
                        .representatives()
                        .iter()
                        .map(|w| w.to_string())
                        .collect();
                    Ok(format!(
                        "size: {}\naperiodic: {}\nrepresentatives: {}",
                        monoid.size(),
                        monoid.monoid().is_aperiodic(),
                        reps.join(" ")
                    ))
                }
                Format::Json => Ok(monoid.to_json()),
                Format::Dot => Err(Failure::usage("monoid has no DOT form")),
            }
        }
        Command::ThetaClasses { input, max_len } => {
            let handle = resolve(input, cli.state_limit)?.into_handle();
            let index = theta_classes(&handle, *max_len).map_err(Failure::from)?;
            match cli.format {
                Format::Text => {
                    let mut out = format!(
                        "classes: {} ({})",
                        index.class_count(),
                        if index.complete { "complete" } else { "lower bound" }
                    );
                    for class in &index.classes {
                        let _ = write!(out, "\n  {}: {}", class.id, class.sample);
                    }
                    Ok(out)
                }
                Format::Json => Ok(index.to_json()),
                Format::Dot => Err(Failure::usage("theta-classes has no DOT form")),
            }
        }
        Command::Certificate {
            input,
            max_len,
            members,
        } => {
            let handle = resolve(input, cli.state_limit)?.into_handle();
            let alphabet = handle.alphabet().clone();
            let members: Vec<Word> = members
                .iter()
                .map(|m| Word::parse(m, &alphabet))
                .collect::<Result<_, _>>()
                .map_err(Failure::from)?;
            let cert = separation_certificate(&handle, &members, *max_len).map_err(Failure::from)?;
            match cli.format {
                Format::Text => Ok(format!("{} members, all pairs separated", cert.k())),
                Format::Json => Ok(cert.to_json()),
                Format::Dot => Err(Failure::usage("certificate has no DOT form")),
            }
        }
        Command::WitnessTree { depth, branching } => {
            if *depth > 5 || *branching > 5 {
                return Err(Failure::usage("witness-tree guard: depth <= 5 and branch <= 5"));
            }
            let tree = witness_tree(*depth, *branching).map_err(Failure::from)?;
            match cli.format {
                Format::Text => Ok(format!(
                    "depth {} branching {}: {} nodes, verified: {}",
                    tree.depth,
                    tree.branching,
                    tree.node_count,
                    tree.verify()
                )),
                Format::Json => Ok(tree.to_json()),
                Format::Dot => Err(Failure::usage("witness-tree has no DOT form")),
            }
        }
        Command::TwoTypeCheck { max_len } => {
            let verdict = two_type_bound_check(*max_len).map_err(Failure::from)?;
            let doc = match &verdict {
                None => serde_json::json!({"holds": true, "max_len": max_len}),
                Some(c) => serde_json::json!({
                    "holds": false,
                    "max_len": max_len,
                    "violating": c.to_string(),
                }),
            };
            match cli.format {
                Format::Text => Ok(match verdict {
                    None => "bound holds".to_string(),
                    Some(c) => format!("violated by parameter {c}"),
                }),
                _ => render_json(doc, cli.format),
            }
        }
    }
}

enum Resolved {
    Dfa(Dfa),
    Oracle(MembershipOracle),
}

impl Resolved {
    fn into_handle(self) -> LanguageHandle {
        match self {
            Resolved::Dfa(d) => LanguageHandle::from_dfa(d),
            Resolved::Oracle(o) => LanguageHandle::from_oracle(o),
        }
    }
}

fn resolve(input: &InputArgs, state_limit: usize) -> Result<Resolved, Failure> {
    let sources =
        usize::from(input.regex.is_some()) + usize::from(input.dfa.is_some()) + usize::from(input.oracle.is_some());
    if sources != 1 {
        return Err(Failure::usage(
            "pass exactly one input: --regex (with --alphabet), --dfa, or --oracle",
        ));
    }
    if let Some(regex) = &input.regex {
        let alphabet = input
            .alphabet
            .as_deref()
            .ok_or_else(|| Failure::usage("--regex needs --alphabet"))?;
        return Ok(Resolved::Dfa(compile_regex(regex, alphabet, state_limit)?));
    }
    if let Some(path) = &input.dfa {
        return Ok(Resolved::Dfa(load_dfa(path)?));
    }
    let name = input.oracle.as_deref().expect("one source is set");
    let oracle = MembershipOracle::by_name(name).ok_or_else(|| {
        Failure::usage(format!(
            "unknown oracle {name:?}; built-ins: {}",
            MembershipOracle::builtin_names().join(", ")
        ))
    })?;
    if let Some(spec) = &input.alphabet {
        let given = Alphabet::parse(spec).map_err(Failure::from)?;
        if &given != oracle.alphabet() {
            return Err(Failure::usage(format!(
                "oracle {name} is fixed to alphabet {}",
                oracle.alphabet()
            )));
        }
    }
    Ok(Resolved::Oracle(oracle))
}

fn compile_regex(regex: &str, alphabet: &str, state_limit: usize) -> Result<Dfa, Failure> {
    let alphabet = Alphabet::parse(alphabet).map_err(Failure::from)?;
    let expr = parse_regex(regex, &alphabet).map_err(Failure::from)?;
    compile_bounded(&expr, &alphabet, state_limit).map_err(Failure::from)
}

fn load_dfa(path: &PathBuf) -> Result<Dfa, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    Dfa::from_json(&text).map_err(Failure::from)
}

fn render_dfa(dfa: &Dfa, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => dfa.to_json(),
        Format::Dot => dfa.to_dot().trim_end().to_string(),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "alphabet: {}", dfa.alphabet());
            let _ = writeln!(out, "states: {}", dfa.state_count());
            let _ = writeln!(out, "start: {}", dfa.start());
            let accept: Vec<String> = dfa.accept_states().iter().map(|q| q.to_string()).collect();
            let _ = writeln!(out, "accept: {}", accept.join(" "));
            for q in 0..dfa.state_count() {
                let row: Vec<String> = (0..dfa.alphabet().len())
                    .map(|a| format!("{}->{}", dfa.alphabet().symbol(a), dfa.next(q, a as u8)))
                    .collect();
                let _ = writeln!(out, "  q{q}: {}", row.join(" "));
            }
            out.trim_end().to_string()
        }
    })
}

fn render_json(value: serde_json::Value, format: Format) -> Result<String, Failure> {
    match format {
        Format::Dot => Err(Failure::usage("this command has no DOT form")),
        _ => Ok(serde_json::to_string_pretty(&value).expect("JSON rendering cannot fail")),
    }
}
