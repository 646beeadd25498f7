//! The `softset` command-line tool.
//!
//! Every command reads soft set JSON documents (`-` reads standard input)
//! and prints either aligned text (`--pretty`, the default) or JSON
//! (`--json`). Commands that produce a soft set print a document in
//! `--json` mode that any other command accepts as input.
//!
//! Exit status is 0 on success, 1 when the inputs are unreadable or the
//! operation rejects them, and 2 on usage errors.

use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use softset_core::algebra;
use softset_core::analysis::{self, Rational};
use softset_core::relations::{self, Relation};
use softset_core::{
    Axes, BitMatrix, RelationKind, SoftSet, SoftSetDocument, SoftSetError, TauFamily, Universe,
    Verdict,
};

mod format;

use format::{matrix_table, soft_set_text};

#[derive(Debug, Parser)]
#[command(
    name = "softset",
    version,
    about = "Soft set operations, relations and similarity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON.
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Emit aligned text (the default).
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a soft set.
    Show { file: String },
    /// Print the family of distinct values.
    Tau { file: String },
    /// Print the binary matrix (rows follow the universe, columns the attributes).
    Matrix { file: String },
    /// Rebuild a soft set from a matrix and a document giving the universe and attribute orderings.
    FromMatrix { matrix: String, axes: String },
    /// Complement every value.
    Complement {
        file: String,
        #[arg(long)]
        with_matrix: bool,
    },
    /// Union over all attribute pairs.
    Union {
        left: String,
        right: String,
        #[arg(long)]
        with_matrix: bool,
    },
    /// Intersection over all attribute pairs.
    Intersect {
        left: String,
        right: String,
        #[arg(long)]
        with_matrix: bool,
    },
    /// Product over all attribute pairs; the universe becomes X × X.
    Product {
        left: String,
        right: String,
        #[arg(long)]
        with_matrix: bool,
    },
    /// Reorder attributes so the matrix columns are sorted.
    Canonicalize { file: String },
    /// Evaluate a relation between two soft sets.
    Relate {
        left: String,
        right: String,
        /// equal, equivalent, internal, external, strict-internal,
        /// strict-external, internal-equiv, external-equiv or weak-equiv.
        #[arg(long, value_parser = parse_relation)]
        kind: RelationKind,
    },
    /// Matrix similarity.
    Sim { left: String, right: String },
    /// Largest similarity over attribute orderings.
    SimMax { left: String, right: String },
    /// Number of elements in each value.
    Gravity { file: String },
    /// Inclusion-minimal nonempty values.
    MinFamily { file: String },
    /// Inclusion-maximal proper values.
    MaxFamily { file: String },
    /// Check whether a relation survives equivalence-preserving rewrites.
    CheckCorrectness {
        left: String,
        right: String,
        #[arg(long, alias = "relation", value_parser = parse_relation)]
        kind: RelationKind,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Look for equivalent rewrites that change the similarity.
    ProbeConjecture {
        left: String,
        right: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_relation(s: &str) -> Result<RelationKind, String> {
    s.parse().map_err(|e: SoftSetError| e.to_string())
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Input { path: String, source: SoftSetError },
    #[error("{0}")]
    Domain(#[from] SoftSetError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn text(&mut self, path: &str) -> Result<String, CliError> {
        if path == "-" {
            if std::mem::replace(&mut self.stdin_used, true) {
                return Err(CliError::Usage(
                    "standard input can only be read once".into(),
                ));
            }
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.into(),
                source,
            })
        }
    }

    fn parse<T: serde::de::DeserializeOwned>(&mut self, path: &str) -> Result<T, CliError> {
        let text = self.text(path)?;
        serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: path.into(),
            source,
        })
    }

    fn soft_set(&mut self, path: &str) -> Result<SoftSet, CliError> {
        let doc: SoftSetDocument = self.parse(path)?;
        doc.to_soft_set().map_err(|source| CliError::Input {
            path: path.into(),
            source,
        })
    }

    fn pair(&mut self, left: &str, right: &str) -> Result<(SoftSet, SoftSet), CliError> {
        Ok((self.soft_set(left)?, self.soft_set(right)?))
    }
}

/// Runs the tool with `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut inputs = Inputs {
        stdin,
        stdin_used: false,
    };
    match execute(&cli, &mut inputs) {
        Ok(output) => match stdout.write_all(output.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(stderr, "softset: {e}");
                1
            }
        },
        Err(e) => {
            let first_line = e.to_string().lines().next().unwrap_or_default().to_string();
            let _ = writeln!(stderr, "softset: {first_line}");
            e.exit_code()
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output is serializable");
    s.push('\n');
    s
}

fn family_names(family: &TauFamily) -> Vec<Vec<String>> {
    family.to_sorted_names()
}

fn rational_json(r: Rational) -> serde_json::Value {
    json!({ "similarity": r, "decimal": r.to_f64() })
}

fn rational_text(r: Rational) -> String {
    format!("{r} ({})", r.to_decimal(6))
}

fn execute(cli: &Cli, inputs: &mut Inputs<'_>) -> Result<String, CliError> {
    let json_mode = cli.json;
    let soft_set_out = |s: &SoftSet, with_matrix: bool| -> String {
        if json_mode {
            to_json(&s.to_document())
        } else if with_matrix {
            format!("{}\n{}", soft_set_text(s), matrix_table(s))
        } else {
            soft_set_text(s)
        }
    };
    let family_out = |family: &TauFamily| -> String {
        if json_mode {
            to_json(&family_names(family))
        } else {
            format!("{family}\n")
        }
    };

    Ok(match &cli.command {
        Command::Show { file } => soft_set_out(&inputs.soft_set(file)?, false),
        Command::Tau { file } => family_out(&inputs.soft_set(file)?.tau()),
        Command::Matrix { file } => {
            let s = inputs.soft_set(file)?;
            if json_mode {
                to_json(&s.to_matrix().to_rows())
            } else {
                matrix_table(&s)
            }
        }
        Command::FromMatrix { matrix, axes } => {
            let rows: Vec<Vec<i64>> = inputs.parse(matrix)?;
            let axes: Axes = inputs.parse(axes)?;
            let input_err = |source| CliError::Input {
                path: matrix.clone(),
                source,
            };
            let m = BitMatrix::from_rows(&rows, axes.attributes.len()).map_err(input_err)?;
            let universe = Universe::new(axes.universe).map_err(input_err)?;
            let s = SoftSet::from_matrix(universe, axes.attributes, &m).map_err(input_err)?;
            soft_set_out(&s, false)
        }
        Command::Complement { file, with_matrix } => {
            soft_set_out(&algebra::complement(&inputs.soft_set(file)?), *with_matrix)
        }
        Command::Union {
            left,
            right,
            with_matrix,
        } => {
            let (s, f) = inputs.pair(left, right)?;
            soft_set_out(&algebra::union(&s, &f)?, *with_matrix)
        }
        Command::Intersect {
            left,
            right,
            with_matrix,
        } => {
            let (s, f) = inputs.pair(left, right)?;
            soft_set_out(&algebra::intersection(&s, &f)?, *with_matrix)
        }
        Command::Product {
            left,
            right,
            with_matrix,
        } => {
            let (s, f) = inputs.pair(left, right)?;
            soft_set_out(&algebra::product(&s, &f)?, *with_matrix)
        }
        Command::Canonicalize { file } => {
            soft_set_out(&inputs.soft_set(file)?.canonicalize(), false)
        }
        Command::Relate { left, right, kind } => {
            let (s, f) = inputs.pair(left, right)?;
            let holds = kind.holds(&s, &f)?;
            if json_mode {
                to_json(&json!({ "relation": kind.as_str(), "holds": holds }))
            } else {
                format!("{holds}\n")
            }
        }
        Command::Sim { left, right } => {
            let (s, f) = inputs.pair(left, right)?;
            let v = analysis::similarity(&s, &f)?;
            if json_mode {
                to_json(&rational_json(v))
            } else {
                format!("{}\n", rational_text(v))
            }
        }
        Command::SimMax { left, right } => {
            let (s, f) = inputs.pair(left, right)?;
            let a = analysis::best_alignment(&s, &f)?;
            let names = |t: &SoftSet, order: &[usize]| -> Vec<String> {
                order.iter().map(|&i| t.attributes()[i].clone()).collect()
            };
            let (lo, ro) = (names(&s, &a.left_order), names(&f, &a.right_order));
            if json_mode {
                let mut v = rational_json(a.similarity);
                v["left_order"] = json!(lo);
                v["right_order"] = json!(ro);
                to_json(&v)
            } else {
                format!(
                    "{}\nleft order: {}\nright order: {}\n",
                    rational_text(a.similarity),
                    lo.join(" "),
                    ro.join(" ")
                )
            }
        }
        Command::Gravity { file } => {
            let s = inputs.soft_set(file)?;
            let g = analysis::gravity(&s);
            if json_mode {
                let entries: Vec<_> = g
                    .iter()
                    .map(|(a, n)| json!({ "attribute": a, "gravity": n }))
                    .collect();
                to_json(&entries)
            } else {
                let width = g.iter().map(|(a, _)| a.chars().count()).max().unwrap_or(0);
                g.iter()
                    .map(|(a, n)| format!("{a:<width$}  {n}\n"))
                    .collect()
            }
        }
        Command::MinFamily { file } => family_out(&relations::min_family(&inputs.soft_set(file)?)),
        Command::MaxFamily { file } => family_out(&relations::max_family(&inputs.soft_set(file)?)),
        Command::CheckCorrectness {
            left,
            right,
            kind,
            trials,
            seed,
        } => {
            let (s, f) = inputs.pair(left, right)?;
            let report = relations::check_relation_correctness(kind, &s, &f, *trials, *seed)?;
            let verdict = match report.verdict {
                Verdict::Invariant => "invariant",
                Verdict::ViolationFound => "violation-found",
            };
            if json_mode {
                let violations: Vec<_> = report
                    .violations
                    .iter()
                    .map(|v| {
                        json!({
                            "original_result": v.original_result,
                            "rewritten_result": v.rewritten_result,
                            "left": v.rewritten.0.to_document(),
                            "right": v.rewritten.1.to_document(),
                        })
                    })
                    .collect();
                to_json(&json!({
                    "relation": report.relation_name,
                    "trials": report.trials,
                    "verdict": verdict,
                    "violations": violations,
                }))
            } else {
                let mut out = format!(
                    "relation: {}\ntrials: {}\nviolations: {}\nverdict: {verdict}\n",
                    report.relation_name,
                    report.trials,
                    report.violations.len()
                );
                if let Some(v) = report.violations.first() {
                    out.push_str(&format!(
                        "first violation: {} -> {}\n  left:  {}\n  right: {}\n",
                        v.original_result, v.rewritten_result, v.rewritten.0, v.rewritten.1
                    ));
                }
                out
            }
        }
        Command::ProbeConjecture {
            left,
            right,
            trials,
            seed,
        } => {
            let (s, f) = inputs.pair(left, right)?;
            let probes = analysis::probe_conjecture(&s, &f, *trials, *seed)?;
            let differing = probes.iter().filter(|p| p.differs).count();
            let base = analysis::similarity(&s, &f)?;
            if json_mode {
                let list: Vec<_> = probes
                    .iter()
                    .map(|p| {
                        json!({
                            "sim_rewritten": p.sim_rewritten,
                            "differs": p.differs,
                            "left": p.rewritten.0.to_document(),
                            "right": p.rewritten.1.to_document(),
                        })
                    })
                    .collect();
                to_json(&json!({
                    "trials": trials,
                    "differing": differing,
                    "base_similarity": base,
                    "probes": list,
                }))
            } else {
                let mut out = format!(
                    "trials: {trials}\ndiffering: {differing}\nbase similarity: {}\n",
                    rational_text(base)
                );
                if let Some(p) = probes.iter().find(|p| p.differs) {
                    out.push_str(&format!(
                        "first witness: {}\n  left:  {}\n  right: {}\n",
                        rational_text(p.sim_rewritten),
                        p.rewritten.0,
                        p.rewritten.1
                    ));
                }
                out
            }
        }
    })
}
