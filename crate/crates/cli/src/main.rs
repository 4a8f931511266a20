//! `burn`: exact and constructive graph burning from the command line.
//!
//! Exit status is 0 on success (burnable, schedule found, claim verified),
//! 1 on a negative answer (unburnable, exceptional, no schedule, claim
//! failed) and 2 on usage, input or search-cap errors.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use burning_core::bounds::{i_pf, i_sp, witness_forest, witness_spider, Family};
use burning_core::constructive::{Strategy, StrategyOutcome};
use burning_core::harness::{
    default_max_order, stretch_conjecture_sweep, verify_constructive_agreement, verify_first_main,
    verify_second_main, Subject, SweepConfig, VerificationReport,
};
use burning_core::{
    burnable_exact, burning_number_exact, simulate, BurningSchedule, Instance, PathForest,
    SearchConfig, Spider, Tree,
};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "burn",
    version,
    about = "Graph burning on trees, spiders and path forests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Largest order the exact tree search accepts.
    #[arg(long, default_value_t = SearchConfig::default().cap, global = true)]
    cap: usize,

    /// Worker threads for `verify` (0 picks one per core).
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Spider,
    Forest,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Spider => Family::Spider,
            FamilyArg::Forest => Family::Forest,
        }
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InstanceArgs {
    /// Tree file: the order on the first line, then one `u v` edge per line.
    /// `-` reads standard input.
    #[arg(long, value_name = "FILE")]
    tree: Option<PathBuf>,

    /// Spider arm lengths, e.g. `7,6,3`.
    #[arg(long, value_name = "LIST")]
    spider: Option<String>,

    /// Path orders of a path forest, e.g. `7,2`.
    #[arg(long, value_name = "LIST")]
    forest: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact burning number.
    Bn {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Whether the instance burns within `m` rounds, with a witness schedule.
    Burnable {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        m: u32,
    },
    /// Runs a named constructive strategy.
    Strategy {
        /// One of: forest-small-with-one, spider-short-arms, forest-linear,
        /// spider-nplus1, spider-main-a, spider-main-b, spider-m-le-n,
        /// forest-two, forest-3n-minus-2, forest-main.
        #[arg(long)]
        name: Strategy,
        #[command(flatten)]
        instance: InstanceArgs,
        /// Rounds; spider-nplus1 defaults to one more than the arm count.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Largest order at which every instance of the family is `m`-burnable.
    Bound {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Smallest instance of the family that is not `m`-burnable.
    Witness {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Runs an exhaustive verification sweep.
    Verify(VerifyArgs),
    /// Checks a schedule (JSON) against an instance.
    Simulate {
        #[command(flatten)]
        instance: InstanceArgs,
        /// A schedule `{"m": .., "sources": [..]}`, or the JSON output of
        /// `burnable` or `strategy`. `-` reads standard input.
        #[arg(long, value_name = "FILE")]
        schedule: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(
    ArgGroup::new("claim")
        .required(true)
        .args(["first_main", "second_main", "agreement", "conjecture"])
))]
struct VerifyArgs {
    /// Spiders: every n-spider up to the bound burns in m rounds.
    #[arg(long)]
    first_main: bool,
    /// Path forests: every n-path forest up to the bound burns in m rounds.
    #[arg(long)]
    second_main: bool,
    /// Every constructive strategy agrees with the exact oracle.
    #[arg(long, requires = "family")]
    agreement: bool,
    /// Trees with a given number of leaves up to `m^2 + leaves - 2`.
    #[arg(long, requires = "leaves")]
    conjecture: bool,

    /// Family for `--agreement`.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Leaf count for `--conjecture`.
    #[arg(long)]
    leaves: Option<u32>,
    /// Arms of the spiders or paths of the forests.
    #[arg(long, required_unless_present = "conjecture")]
    n: Option<u32>,
    /// Rounds.
    #[arg(long)]
    m: u32,
    /// Largest order swept by `--agreement` and `--conjecture`.
    #[arg(long)]
    max_order: Option<u64>,
    /// Sweep every order up to the bound, not only the critical ones.
    #[arg(long)]
    full_range: bool,
    /// Also write the report as JSON to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// What a command prints and how it exits.
struct Output {
    json: Value,
    table: String,
    success: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
                Format::Table => print!("{}", out.table),
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let search = SearchConfig { cap: cli.cap };
    match &cli.command {
        Command::Bn { instance } => {
            let inst = load_instance(instance)?;
            let b = burning_number_exact(&inst, &search)?;
            Ok(Output {
                json: json!({
                    "command": "bn",
                    "instance": Subject::from(&inst),
                    "order": inst.order(),
                    "burning_number": b,
                }),
                table: format!("{}\nburning number: {b}\n", describe(&inst)),
                success: true,
            })
        }
        Command::Burnable { instance, m } => {
            let inst = load_instance(instance)?;
            let v = burnable_exact(&inst, *m, &search)?;
            let mut table = format!(
                "{}\n{}-burnable: {}\n",
                describe(&inst),
                m,
                if v.burnable { "yes" } else { "no" }
            );
            if let Some(w) = &v.witness {
                table.push_str(&format!("witness: {}\n", sources(w)));
            }
            Ok(Output {
                json: json!({
                    "command": "burnable",
                    "instance": Subject::from(&inst),
                    "m": m,
                    "burnable": v.burnable,
                    "witness": v.witness,
                    "nodes_explored": v.nodes_explored,
                }),
                table,
                success: v.burnable,
            })
        }
        Command::Strategy { name, instance, m } => {
            let inst = load_instance(instance)?;
            let m = match (m, &inst) {
                (Some(m), _) => *m,
                (None, Instance::Spider(s)) if *name == Strategy::SpiderNPlus1 => {
                    s.arm_count() as u32 + 1
                }
                (None, _) => bail!("--m is required for {name}"),
            };
            let out = name.run(&inst, m);
            let table = format!(
                "{}\n{name} with {m} rounds: {}\n",
                describe(&inst),
                outcome_line(&out)
            );
            Ok(Output {
                json: json!({
                    "command": "strategy",
                    "strategy": name.name(),
                    "instance": Subject::from(&inst),
                    "m": m,
                    "result": out,
                }),
                table,
                success: out.is_schedule(),
            })
        }
        Command::Bound { family, n, m } => {
            let bound = match family {
                FamilyArg::Spider => i_sp(*n, *m)?,
                FamilyArg::Forest => i_pf(*n, *m)?,
            };
            Ok(Output {
                json: json!({
                    "command": "bound",
                    "family": Family::from(*family),
                    "n": n,
                    "m": m,
                    "bound": bound,
                }),
                table: format!("{bound}\n"),
                success: true,
            })
        }
        Command::Witness { family, n, m } => {
            let inst = match family {
                FamilyArg::Spider => Instance::Spider(witness_spider(*n, *m)?),
                FamilyArg::Forest => Instance::Forest(witness_forest(*n, *m)?),
            };
            Ok(Output {
                json: json!({
                    "command": "witness",
                    "family": Family::from(*family),
                    "n": n,
                    "m": m,
                    "instance": Subject::from(&inst),
                    "order": inst.order(),
                }),
                table: format!("{}\n", describe(&inst)),
                success: true,
            })
        }
        Command::Verify(args) => {
            let cfg = SweepConfig {
                workers: cli.workers,
                search,
                full_range: args.full_range,
            };
            let report = verify(args, &cfg)?;
            if let Some(path) = &args.out {
                let text = serde_json::to_string_pretty(&report)?;
                fs::write(path, text + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(Output {
                table: report_table(&report),
                success: report.passed(),
                json: json!({ "command": "verify", "report": report }),
            })
        }
        Command::Simulate { instance, schedule } => {
            let inst = load_instance(instance)?;
            let text = read_input(schedule)?;
            let value: Value = serde_json::from_str(&text).context("schedule is not JSON")?;
            let sched = extract_schedule(value)?;
            let g = inst.graph();
            let rec = simulate(&g, &sched)?;
            let unburned: Vec<_> = (0..g.order())
                .filter(|&v| rec.burned_at[v].is_none())
                .map(|v| g.coord_of(v))
                .collect();
            let mut table = format!(
                "{}\nschedule: {}\nvalid: {}\n",
                describe(&inst),
                sources(&sched),
                if rec.valid { "yes" } else { "no" }
            );
            if let Some(r) = rec.completed_round {
                table.push_str(&format!("completed in round {r}\n"));
            }
            if !rec.illegal_rounds.is_empty() {
                table.push_str(&format!("illegal rounds: {:?}\n", rec.illegal_rounds));
            }
            if !unburned.is_empty() {
                table.push_str(&format!("{} vertices never burn\n", unburned.len()));
            }
            Ok(Output {
                json: json!({
                    "command": "simulate",
                    "instance": Subject::from(&inst),
                    "m": sched.m(),
                    "valid": rec.valid,
                    "completed_round": rec.completed_round,
                    "illegal_rounds": rec.illegal_rounds,
                    "unburned": unburned,
                }),
                table,
                success: rec.valid,
            })
        }
    }
}

fn verify(args: &VerifyArgs, cfg: &SweepConfig) -> Result<VerificationReport> {
    let m = args.m;
    if args.conjecture {
        let leaves = args.leaves.context("--conjecture needs --leaves")?;
        let top = args
            .max_order
            .unwrap_or(u64::from(m) * u64::from(m) + u64::from(leaves) - 2);
        return Ok(stretch_conjecture_sweep(leaves, m, top, cfg)?);
    }
    let n = args.n.context("--n is required")?;
    Ok(if args.first_main {
        verify_first_main(n, m, cfg)?
    } else if args.second_main {
        verify_second_main(n, m, cfg)?
    } else {
        let family = Family::from(args.family.context("--agreement needs --family")?);
        let top = args
            .max_order
            .unwrap_or_else(|| default_max_order(family, n, m));
        verify_constructive_agreement(family, n, m, top, cfg)?
    })
}

fn load_instance(args: &InstanceArgs) -> Result<Instance> {
    if let Some(path) = &args.tree {
        let text = read_input(path)?;
        let tree = Tree::parse(&text).with_context(|| format!("reading {}", path.display()))?;
        return Ok(Instance::Tree(tree));
    }
    if let Some(list) = &args.spider {
        return Ok(Instance::Spider(Spider::new(parse_list(
            list, "--spider",
        )?)?));
    }
    if let Some(list) = &args.forest {
        return Ok(Instance::Forest(PathForest::new(parse_list(
            list, "--forest",
        )?)?));
    }
    bail!("one of --tree, --spider or --forest is required")
}

/// Parses `a,b,c`; lists that are not non-increasing are sorted with a
/// warning.
fn parse_list(text: &str, flag: &str) -> Result<Vec<u32>> {
    let mut out = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .with_context(|| format!("{flag}: bad entry {s:?}"))
        })
        .collect::<Result<Vec<u32>>>()?;
    if out.windows(2).any(|w| w[0] < w[1]) {
        out.sort_unstable_by(|a, b| b.cmp(a));
        let sorted: Vec<String> = out.iter().map(u32::to_string).collect();
        eprintln!("warning: {flag} sorted to {}", sorted.join(","));
    }
    Ok(out)
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Accepts a bare schedule or the JSON printed by `burnable` and `strategy`.
fn extract_schedule(value: Value) -> Result<BurningSchedule> {
    let found = if value.get("sources").is_some() {
        value
    } else if let Some(s) = value.pointer("/result/schedule") {
        s.clone()
    } else if let Some(w) = value.get("witness").filter(|w| !w.is_null()) {
        w.clone()
    } else {
        bail!("no schedule found in the input")
    };
    serde_json::from_value(found).context("malformed schedule")
}

fn describe(inst: &Instance) -> String {
    let list = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    match inst {
        Instance::Spider(s) => format!("spider {} (order {})", list(s.arms()), s.order()),
        Instance::Forest(f) => format!("path forest {} (order {})", list(f.paths()), f.order()),
        Instance::Tree(t) => format!("tree of order {}", t.order()),
    }
}

fn sources(s: &BurningSchedule) -> String {
    s.sources()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn outcome_line(out: &StrategyOutcome) -> String {
    match out {
        StrategyOutcome::Schedule {
            schedule,
            head_burn_round,
            completed_round,
        } => {
            let mut line = format!("{} (done in round {completed_round}", sources(schedule));
            if let Some(h) = head_burn_round {
                line.push_str(&format!(", head burns in round {h}"));
            }
            line + ")"
        }
        StrategyOutcome::Exceptional { family } => format!("exceptional instance ({family})"),
        StrategyOutcome::HypothesisUnmet { reason } => format!("hypothesis unmet: {reason}"),
        StrategyOutcome::ProofCaseUnreachable { trace } => {
            format!("no schedule, unexpected case: {trace}")
        }
    }
}

fn report_table(r: &VerificationReport) -> String {
    let mut out = format!(
        "{} {} n={} m={}\norders: {}\ninstances checked: {}\nfailures: {}\n",
        r.family,
        r.claim,
        r.n,
        r.m,
        match (r.orders.first(), r.orders.last()) {
            (Some(a), Some(b)) if r.orders.len() == (b - a + 1) as usize => format!("{a}..={b}"),
            _ => format!("{:?}", r.orders),
        },
        r.instances_checked,
        r.failures.len()
    );
    for f in &r.failures {
        out.push_str(&format!(
            "  {} (order {}): {} expected {}, got {}\n",
            subject(&f.instance),
            f.order,
            f.check,
            f.expected,
            f.got
        ));
    }
    out.push_str(&format!("exceptional hits: {}\n", r.exceptional_hits.len()));
    for h in &r.exceptional_hits {
        out.push_str(&format!(
            "  {} (order {}): {}\n",
            subject(&h.instance),
            h.order,
            h.tags.join(", ")
        ));
    }
    for n in &r.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out.push_str(&format!(
        "{} in {} ms\n",
        if r.passed() { "VERIFIED" } else { "FAILED" },
        r.wall_time_ms
    ));
    out
}

fn subject(s: &Subject) -> String {
    let list = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    match s {
        Subject::Spider(a) => format!("spider {}", list(a)),
        Subject::Forest(p) => format!("forest {}", list(p)),
        Subject::Tree { edges, .. } => format!("tree {edges:?}"),
    }
}
