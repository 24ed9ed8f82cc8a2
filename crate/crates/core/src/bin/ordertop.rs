use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ordertop::cord::{self, CQuasiOrder, CoreSpaceProfile};
use ordertop::finstruct::{OrderedSpace, Qoset, Record, Topology};
use ordertop::labcli::enumerate::{self, Kind};
use ordertop::labcli::fixtures;
use ordertop::labcli::hunt::{self, HuntOutcome, HypothesisSpec};
use ordertop::labcli::registry::{self, Facts};
use ordertop::labcli::suites::{self, SampleSpec, SuiteId, SuiteSpec};
use ordertop::morphcat::{self, RepKind, Representation};
use ordertop::topoderive::{self, Coselection};

#[derive(Parser)]
#[command(name = "ordertop", version, about = "Finite order-topology toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate registered predicates on a space.
    Check {
        /// Predicate tags, comma separated; all predicates when omitted.
        #[arg(long, value_delimiter = ',')]
        class: Vec<String>,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Compute a derived structure.
    Derive {
        #[arg(long)]
        op: DeriveOp,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print every structure of a kind on n points, one record per line.
    Enumerate {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
    /// Run a theorem suite and print its report.
    Verify {
        #[arg(long)]
        suite: SuiteId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// Print one verdict line per instance before the report.
        #[arg(long)]
        verbose: bool,
        /// Sweep every order-topology pair even at n = 5.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, requires = "sample_size")]
        sample_seed: Option<u64>,
        #[arg(long, requires = "sample_seed")]
        sample_size: Option<usize>,
        /// Replace the predicate by a seeded broken variant.
        #[arg(long)]
        fault_seed: Option<u64>,
    },
    /// Search for a space satisfying every assumed predicate and violating another.
    Hunt {
        #[arg(long, value_delimiter = ',')]
        assume: Vec<String>,
        #[arg(long)]
        refute: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "ordered-space")]
        kind: Kind,
    },
    /// Cofinality, weights and density of a space.
    Invariants {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Translate between the six descriptions of a C-ordered set.
    Convert {
        /// Kind of a bare input record; optional when the input already names its kind.
        #[arg(long)]
        from: Option<RepKind>,
        #[arg(long)]
        to: RepKind,
        /// Basis points of a bare input record, comma separated; defaults to every point.
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<usize>>,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print named fixtures, or one of them.
    Fixtures { name: Option<String> },
    /// List suites, predicates, kinds or derivations.
    List { what: ListWhat },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListWhat {
    Suites,
    Predicates,
    Kinds,
    Conversions,
}

#[derive(Clone, Copy, Debug)]
enum DeriveOp {
    Scott,
    Lawson,
    Patch(Coselection),
    Upper,
    Lower,
    Cocompact,
    InteriorRelation,
    Completion,
    QuasiUniformity,
    Specialization,
    Alexandroff,
}

impl std::str::FromStr for DeriveOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "scott" => DeriveOp::Scott,
            "lawson" => DeriveOp::Lawson,
            "upper" => DeriveOp::Upper,
            "lower" => DeriveOp::Lower,
            "cocompact" => DeriveOp::Cocompact,
            "interior-relation" => DeriveOp::InteriorRelation,
            "completion" => DeriveOp::Completion,
            "quasi-uniformity" => DeriveOp::QuasiUniformity,
            "specialization" => DeriveOp::Specialization,
            "alexandroff" => DeriveOp::Alexandroff,
            other => match other.strip_prefix("patch:") {
                Some(z) => DeriveOp::Patch(z.parse()?),
                None => return Err(format!("unknown derivation `{other}`")),
            },
        })
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn read_record(path: &Path) -> Result<Record> {
    Ok(Record::decode(&read_input(path)?)?)
}

fn topology_of(record: &Record) -> Result<Topology> {
    match record {
        Record::Topology(t) => Ok(t.clone()),
        Record::OrderedSpace(s) => Ok(s.topology().clone()),
        other => bail!("expected a topology or ordered space, got {}", other.kind()),
    }
}

fn order_of(record: &Record) -> Result<Qoset> {
    match record {
        Record::Qoset(q) => Ok(q.clone()),
        Record::Lattice(l) => Ok(l.to_qoset()?),
        Record::OrderedSpace(s) => Ok(s.qoset().clone()),
        Record::Topology(t) => Ok(topoderive::specialization(t)),
        other => bail!("expected an order, got {}", other.kind()),
    }
}

fn ordered_space_of(record: &Record) -> Result<OrderedSpace> {
    match record {
        Record::OrderedSpace(s) => Ok(s.clone()),
        other => bail!("expected an ordered space, got {}", other.kind()),
    }
}

fn relation_of(record: &Record) -> Result<CQuasiOrder> {
    match record {
        Record::Relation(r) => Ok(CQuasiOrder::new(r.clone())?),
        Record::Qoset(q) => Ok(CQuasiOrder::from(q)),
        other => Ok(CQuasiOrder::new(topoderive::interior_relation(&topology_of(other)?))?),
    }
}

fn derive(op: DeriveOp, record: &Record) -> Result<Value> {
    let rec = |r: Record| r.to_value();
    Ok(match op {
        DeriveOp::Scott => rec(topoderive::scott(&order_of(record)?).into()),
        DeriveOp::Lawson => rec(topoderive::lawson(&order_of(record)?).into()),
        DeriveOp::Alexandroff => rec(topoderive::alexandroff(&order_of(record)?).into()),
        DeriveOp::Specialization => rec(topoderive::specialization(&topology_of(record)?).into()),
        DeriveOp::Patch(z) => rec(topoderive::patch(&topology_of(record)?, z).into()),
        DeriveOp::Upper => rec(topoderive::upper_space(&ordered_space_of(record)?).into()),
        DeriveOp::Lower => rec(topoderive::lower_space(&ordered_space_of(record)?).into()),
        DeriveOp::Cocompact => rec(topoderive::cocompact(&topology_of(record)?).into()),
        DeriveOp::InteriorRelation => rec(topoderive::interior_relation(&topology_of(record)?).into()),
        DeriveOp::Completion => {
            let c = cord::rounded_ideal_completion(&relation_of(record)?)?;
            json!({
                "kind": "completion",
                "ideals": c.ideals.iter().map(|i| i.to_vec()).collect::<Vec<_>>(),
                "order": rec(c.order.into()),
                "basis": c.basis,
            })
        }
        DeriveOp::QuasiUniformity => {
            let t = topology_of(record)?;
            let q = topoderive::quasi_uniformity(&t)?;
            json!({
                "kind": "quasi_uniformity",
                "n": t.size(),
                "base": q.members().iter().map(|r| rec(r.clone().into())).collect::<Vec<_>>(),
            })
        }
    })
}

fn print_line(out: &mut impl Write, v: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v)?)?;
    Ok(())
}

fn check(classes: &[String], path: &Path) -> Result<ExitCode> {
    let record = read_record(path)?;
    let space = hunt::lift(&record).ok_or_else(|| anyhow!("cannot check a {}", record.kind()))?;
    let predicates = if classes.is_empty() {
        registry::PREDICATES.iter().collect()
    } else {
        classes
            .iter()
            .map(|c| registry::lookup(c))
            .collect::<Result<Vec<_>, _>>()?
    };
    let facts = Facts::new(&space);
    let results: serde_json::Map<String, Value> =
        predicates.iter().map(|p| (p.tag.to_string(), Value::Bool(p.eval(&facts)))).collect();
    let all = results.values().all(|v| v == &Value::Bool(true));
    print_line(&mut io::stdout(), &json!({"record": "check", "holds": all, "classes": results}))?;
    Ok(if classes.is_empty() || all { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn invariants(path: &Path) -> Result<Value> {
    let record = read_record(path)?;
    let t = match &record {
        Record::Qoset(q) => topoderive::alexandroff(q),
        other => topology_of(other)?,
    };
    let b = cord::cardinal_invariants(&t)?;
    let sets = |v: &[ordertop::finstruct::PointSet]| v.iter().map(|s| s.to_vec()).collect::<Vec<_>>();
    let core: CoreSpaceProfile = cord::core_space_profile(&t)?;
    Ok(json!({
        "record": "invariants",
        "specialization_classes": topoderive::specialization(&t).class_count(),
        "cofinality": {"value": b.c, "witness": b.c_witness.to_vec()},
        "weight": {"value": b.w_open, "witness": sets(&b.w_open_witness)},
        "closed_lattice_weight": {"value": b.w_closed, "witness": sets(&b.w_closed_witness)},
        "patch_weight": {"value": b.w_patch, "witness": sets(&b.w_patch_witness)},
        "patch_density": {"value": b.d_patch, "witness": b.d_patch_witness.to_vec()},
        "all_equal": b.all_equal(),
        "core_space": CoreSpaceProfile::LABELS
            .iter()
            .zip(core.flags())
            .map(|(l, f)| (l.to_string(), Value::Bool(f)))
            .collect::<serde_json::Map<_, _>>(),
    }))
}

fn convert(from: Option<RepKind>, to: RepKind, basis: Option<Vec<usize>>, path: &Path) -> Result<Value> {
    let mut value: Value = serde_json::from_str(&read_input(path)?).context("input is not JSON")?;
    if value.get("payload").is_none() {
        let from = from.ok_or_else(|| anyhow!("a bare record needs --from"))?;
        let n = Record::from_value(&value)?.to_value()["n"].as_u64().unwrap_or(0) as usize;
        value = json!({"kind": from.tag(), "payload": value, "basis": basis.unwrap_or_else(|| (0..n).collect())});
    } else if let Some(from) = from {
        if value["kind"].as_str() != Some(from.tag()) {
            bail!("input names kind {} but --from is {from}", value["kind"]);
        }
    }
    let rep = Representation::from_value(&value)?;
    morphcat::validate_representation(&rep)?;
    Ok(morphcat::convert(&rep, to)?.to_value())
}

fn verify(spec: SuiteSpec) -> Result<ExitCode> {
    let run = suites::run_suite(&spec)?;
    let mut out = io::stdout().lock();
    for line in &run.verdicts {
        print_line(&mut out, line)?;
    }
    print_line(&mut out, &run.report)?;
    Ok(if run.report.passed_all() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check { class, input } => check(&class, &input),
        Command::Derive { op, input, out } => {
            let record = read_record(&input)?;
            let text = serde_json::to_string(&derive(op, &record)?)?;
            match out {
                Some(p) => fs::write(&p, text + "\n").with_context(|| format!("cannot write {}", p.display()))?,
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { kind, n } => {
            let stream = enumerate::enumerate(kind, n)?;
            let mut out = io::BufWriter::new(io::stdout().lock());
            for r in stream {
                writeln!(out, "{}", r.encode())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n, workers, verbose, exhaustive, sample_seed, sample_size, fault_seed } => {
            let sample = sample_seed.zip(sample_size).map(|(seed, size)| SampleSpec { seed, size });
            verify(SuiteSpec { suite, n, sample, exhaustive, workers, verbose, fault: fault_seed })
        }
        Command::Hunt { assume, refute, n, kind } => {
            let assume = assume.into_iter().filter(|a| !a.is_empty()).collect();
            let outcome = hunt::hunt(&HypothesisSpec { assume, refute, kind, n })?;
            print_line(&mut io::stdout(), &outcome)?;
            Ok(match outcome {
                HuntOutcome::Counterexample { .. } => ExitCode::from(1),
                HuntOutcome::Exhausted { .. } => ExitCode::SUCCESS,
            })
        }
        Command::Invariants { input } => {
            print_line(&mut io::stdout(), &invariants(&input)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { from, to, basis, input } => {
            print_line(&mut io::stdout(), &convert(from, to, basis, &input)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { name } => {
            let list = match name {
                Some(n) => vec![fixtures::fixture(&n).ok_or_else(|| anyhow!("unknown fixture `{n}`"))?],
                None => fixtures::fixtures(),
            };
            let mut out = io::stdout().lock();
            for f in list {
                let mut v = json!({"record": "fixture", "name": f.name, "note": f.note, "structure": f.record.to_value()});
                if let Some(b) = f.banner() {
                    v["banner"] = Value::from(b);
                }
                print_line(&mut out, &v)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::List { what } => {
            let rows: Vec<(String, String)> = match what {
                ListWhat::Suites => SuiteId::ALL
                    .iter()
                    .map(|s| (s.tag().into(), format!("{} (n <= {})", s.description(), s.cap())))
                    .collect(),
                ListWhat::Predicates => {
                    registry::PREDICATES.iter().map(|p| (p.tag.into(), p.description.into())).collect()
                }
                ListWhat::Kinds => Kind::ALL.iter().map(|k| (k.tag().into(), format!("n <= {}", k.cap()))).collect(),
                ListWhat::Conversions => RepKind::ALL.iter().map(|k| (k.tag().into(), String::new())).collect(),
            };
            for (tag, desc) in rows {
                println!("{tag:<28} {desc}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
