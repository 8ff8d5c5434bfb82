//! The `varchenko` command line.
//!
//! Exit codes: 0 success or PASS, 1 FAIL, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use varchenko_core::closedform::{formula, zagier};
use varchenko_core::families::{build_family, multiplicity_combinatorial, relevant_edges_combinatorial};
use varchenko_core::varchenko::{det_bruteforce, varchenko_matrix_eval};
use varchenko_core::{ChamberComplex, FamilyKind, Guards, PrimeField, VariableId};

use crate::error::{HarnessError, Result};
use crate::io::{assignment_digest, format_arrangement, parse_arrangement_file, parse_assignment_json, read_file};
use crate::json::factored_to_json;
use crate::verify::{random_assignment, verify_identity, Source, Subject, VerifyConfig, DEFAULT_PRIME};

#[derive(Debug, Parser)]
#[command(name = "varchenko", version, about = "Varchenko determinants of weighted hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Factored,
    Bruteforce,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Family selector: A:n, B:n, D:n or I2:m.
    #[arg(long)]
    kind: Option<FamilyKind>,
    /// Arrangement text file.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Target {
    fn subject(&self) -> Result<Subject> {
        match (&self.kind, &self.file) {
            (Some(k), _) => Ok(Subject::Family(k.validated()?)),
            (None, Some(path)) => Ok(Subject::File {
                label: path.display().to_string(),
                arrangement: parse_arrangement_file(&read_file(path)?)?,
            }),
            (None, None) => Err(HarnessError::Usage("one of --kind or --file is required".into())),
        }
    }
}

#[derive(Debug, Args)]
struct GuardArgs {
    /// Refuse arrangements with more chambers than this.
    #[arg(long, default_value_t = Guards::default().max_chambers)]
    max_chambers: usize,
    /// Refuse arrangements with more hyperplanes than this.
    #[arg(long, default_value_t = Guards::default().max_hyperplanes)]
    max_hyperplanes: usize,
}

impl GuardArgs {
    fn guards(&self) -> Guards {
        Guards { max_hyperplanes: self.max_hyperplanes, max_chambers: self.max_chambers }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Describe a family arrangement.
    Family {
        #[arg(long)]
        kind: FamilyKind,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// List chambers with their sign vectors and witness points.
    Chambers {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
        #[command(flatten)]
        guards: GuardArgs,
    },
    /// Relevant edges with weights and multiplicities.
    Edges {
        #[command(flatten)]
        target: Target,
        /// Use the face scan (default).
        #[arg(long, conflicts_with = "combinatorial")]
        geometric: bool,
        /// Use the family's combinatorial description and stated multiplicities.
        #[arg(long)]
        combinatorial: bool,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
        #[command(flatten)]
        guards: GuardArgs,
    },
    /// The determinant, factored or evaluated at one point.
    Det {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "factored")]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON object from variable names to integers; random when absent.
        #[arg(long)]
        assign: Option<PathBuf>,
        #[command(flatten)]
        guards: GuardArgs,
    },
    /// Closed-form factorization of a family.
    Formula {
        #[arg(long)]
        kind: FamilyKind,
        /// Replace every variable by this one.
        #[arg(long)]
        specialize: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// The single-variable product for the braid arrangement in dimension n.
    Zagier {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Compare two determinant sources at random points.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "geometric", value_parser = parse_source)]
        lhs: Source,
        #[arg(long, default_value = "bruteforce", value_parser = parse_source)]
        rhs: Source,
        #[arg(long, default_value_t = crate::verify::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = crate::verify::DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        guards: GuardArgs,
    },
}

fn parse_source(s: &str) -> std::result::Result<Source, String> {
    s.parse().map_err(|e: HarnessError| e.to_string())
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable")).map_err(stdout_error)
}

fn stdout_error(e: std::io::Error) -> HarnessError {
    HarnessError::Io { path: PathBuf::from("<stdout>"), source: e }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Family { kind, emit } => {
            let kind = kind.validated()?;
            let arr = build_family(kind)?;
            match emit {
                Emit::Text => {
                    writeln!(out, "# {kind}: {} hyperplanes, {} chambers", arr.len(), kind.chamber_count())
                        .map_err(stdout_error)?;
                    write!(out, "{}", format_arrangement(&arr)).map_err(stdout_error)?;
                }
                Emit::Json => {
                    let hs: Vec<Value> = arr
                        .hyperplanes()
                        .iter()
                        .map(|h| {
                            json!({
                                "normal": h.normal.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                                "offset": h.offset.to_string(),
                                "weight": h.weight.to_string(),
                            })
                        })
                        .collect();
                    emit_json(
                        out,
                        &json!({
                            "kind": kind.to_string(),
                            "dim": arr.dim(),
                            "chamber_count": serde_json::Number::from_string_unchecked(kind.chamber_count().to_string()),
                            "hyperplanes": hs,
                        }),
                    )?;
                }
            }
            Ok(0)
        }
        Command::Chambers { target, emit, guards } => {
            let subject = target.subject()?;
            let arr = subject.arrangement()?;
            let cx = ChamberComplex::new(&arr, &guards.guards())?;
            let weights: Vec<String> = arr.weights().map(|w| w.to_string()).collect();
            match emit {
                Emit::Text => {
                    writeln!(out, "# {}: {} chambers; sign order {}", subject.label(), cx.len(), weights.join(" "))
                        .map_err(stdout_error)?;
                    for (i, c) in cx.chambers().iter().enumerate() {
                        let signs: String = c.signs.iter().map(|s| s.as_char()).collect();
                        let w: Vec<String> = c.witness.iter().map(|x| x.to_string()).collect();
                        writeln!(out, "{i}\t{signs}\t({})", w.join(", ")).map_err(stdout_error)?;
                    }
                }
                Emit::Json => {
                    let chambers: Vec<Value> = cx
                        .chambers()
                        .iter()
                        .map(|c| {
                            json!({
                                "signs": c.signs.iter().map(|s| s.as_char()).collect::<String>(),
                                "witness": c.witness.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    emit_json(out, &json!({"subject": subject.label(), "weights": weights, "chambers": chambers}))?;
                }
            }
            Ok(0)
        }
        Command::Edges { target, geometric: _, combinatorial, emit, guards } => {
            let subject = target.subject()?;
            let rows: Vec<(String, String, String, String)> = if combinatorial {
                let Subject::Family(kind) = subject else {
                    return Err(HarnessError::Usage("--combinatorial needs --kind".into()));
                };
                relevant_edges_combinatorial(kind)?
                    .into_iter()
                    .map(|(d, m)| {
                        let l = multiplicity_combinatorial(kind, &d)?;
                        let dim = match &d {
                            varchenko_core::families::FamilyEdgeDescriptor::Equal(i) => kind.dim() - i.len() + 1,
                            varchenko_core::families::FamilyEdgeDescriptor::SignedEqual(j) => kind.dim() - j.len() + 1,
                            varchenko_core::families::FamilyEdgeDescriptor::Zero(i) => kind.dim() - i.len(),
                        };
                        Ok((d.to_string(), m.to_string(), dim.to_string(), l.to_string()))
                    })
                    .collect::<Result<_>>()?
            } else {
                let arr = subject.arrangement()?;
                let scan = ChamberComplex::new(&arr, &guards.guards())?.scan()?;
                scan.relevant_edges()?
                    .into_iter()
                    .map(|e| {
                        let hs: Vec<String> =
                            e.containing.iter().map(|&i| arr.hyperplanes()[i].weight.to_string()).collect();
                        (
                            format!("{{{}}}", hs.join(",")),
                            e.weight_monomial.to_string(),
                            e.dim.to_string(),
                            e.multiplicity.to_string(),
                        )
                    })
                    .collect()
            };
            match emit {
                Emit::Text => {
                    writeln!(
                        out,
                        "# {}: {} relevant edges\n# edge\tweight\tdim\tmultiplicity",
                        subject.label(),
                        rows.len()
                    )
                    .map_err(stdout_error)?;
                    for (e, w, d, l) in &rows {
                        writeln!(out, "{e}\t{w}\t{d}\t{l}").map_err(stdout_error)?;
                    }
                }
                Emit::Json => {
                    let edges: Vec<Value> = rows
                        .iter()
                        .map(|(e, w, d, l)| {
                            json!({
                                "edge": e,
                                "weight": w,
                                "dim": d.parse::<usize>().expect("formatted from usize"),
                                "multiplicity": serde_json::Number::from_string_unchecked(l.clone()),
                            })
                        })
                        .collect();
                    emit_json(out, &json!({"subject": subject.label(), "edges": edges}))?;
                }
            }
            Ok(0)
        }
        Command::Det { target, mode, prime, seed, assign, guards } => {
            let subject = target.subject()?;
            let arr = subject.arrangement()?;
            let cx = ChamberComplex::new(&arr, &guards.guards())?;
            match mode {
                Mode::Factored => emit_json(out, &factored_to_json(&cx.scan()?.factored_determinant()?))?,
                Mode::Bruteforce => {
                    let field = PrimeField::new(prime)?;
                    let a = match &assign {
                        Some(path) => parse_assignment_json(&read_file(path)?, &arr, &field)?,
                        None => random_assignment(&arr, &field, seed, 0),
                    };
                    let m = varchenko_matrix_eval(&arr, cx.chambers(), &a, &field)?;
                    let mut report = json!({
                        "subject": subject.label(),
                        "mode": "bruteforce",
                        "prime": prime,
                    });
                    if assign.is_none() {
                        report["seed"] = json!(seed);
                    }
                    report["chambers"] = json!(cx.len());
                    report["assignment_digest"] = json!(assignment_digest(&a));
                    report["value"] = json!(det_bruteforce(&m));
                    emit_json(out, &report)?;
                }
            }
            Ok(0)
        }
        Command::Formula { kind, specialize, emit } => {
            let mut f = formula(kind.validated()?)?;
            if let Some(name) = specialize {
                let v: VariableId = name.parse()?;
                f = f.specialize_all(&v);
            }
            emit_factored(out, &f, emit)?;
            Ok(0)
        }
        Command::Zagier { n, emit } => {
            emit_factored(out, &zagier(n)?, emit)?;
            Ok(0)
        }
        Command::Verify { target, lhs, rhs, trials, prime, seed, guards } => {
            let subject = target.subject()?;
            let config = VerifyConfig { trials, prime, seed, guards: guards.guards() };
            let report = verify_identity(&subject, lhs, rhs, &config)?;
            writeln!(out, "{}", report.to_json()).map_err(stdout_error)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn emit_factored(out: &mut dyn Write, f: &varchenko_core::FactoredProduct, emit: Emit) -> Result<()> {
    match emit {
        Emit::Json => emit_json(out, &factored_to_json(f)),
        Emit::Text => writeln!(out, "{f}").map_err(stdout_error),
    }
}
