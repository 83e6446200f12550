use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kpham::conditions::{chvatal_bipartite_condition, check_domcycle_lemma, is_strongly_dominating};
use kpham::constructions::{recognize, FamilySpec};
use kpham::graph::{decode, encode, export_dot, maximum_independent_set, min_vertex_cut, vertex_connectivity};
use kpham::harness::{
    characterization_check, exhaustive_verify, facts_report, sample_verify, tightness_scan, RunOptions, Shard,
    VerificationReport,
};
use kpham::solver::{find_hamiltonian_cycle, longest_cycle, non_hamiltonicity_witness};
use kpham::{CycleCertificate, Error, KPartiteGraph, ThresholdProfile};

#[derive(Parser)]
#[command(name = "kpham", version)]
#[command(about = "Hamiltonian cycles in balanced k-partite graphs: thresholds, constructions and verification runs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the degree threshold and related bounds for (n, k)
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Print JSON instead of lines
        #[arg(long)]
        json: bool,
    },
    /// Build a member of one of the extremal families
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Part sizes for F, e.g. 3,2
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        /// Extra family fields as a JSON object, e.g. '{"y_prime": 7}'
        #[arg(long)]
        options: Option<String>,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run predicates on a graph file ("-" reads standard input)
    Check(CheckArgs),
    /// Exhaustive or sampled verification of the degree threshold
    Verify(VerifyArgs),
    /// Classify every non-Hamiltonian graph just below the threshold
    Characterize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        shard: ShardArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Scan the arithmetic facts behind the threshold
    Facts {
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        m_max: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check that the default F member sits one below the threshold
    Tightness {
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        m_max: usize,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "F")]
    F,
    #[value(name = "F1")]
    F1,
    #[value(name = "F2")]
    F2,
    #[value(name = "F3")]
    F3,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Dot,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Hamiltonian cycle or a certificate that none exists
    #[arg(long)]
    ham: bool,
    /// Independence number with a maximum independent set
    #[arg(long)]
    alpha: bool,
    /// Vertex connectivity with a minimum cut
    #[arg(long)]
    kappa: bool,
    /// Bipartite degree condition on the graph between two sides
    #[arg(long)]
    chvatal: bool,
    /// The two sides, e.g. "0,1,2,3;4,5,6,7" (default: the two parts)
    #[arg(long, requires = "chvatal")]
    sides: Option<String>,
    /// Whether --cycle is strongly dominating
    #[arg(long, requires = "cycle")]
    dominating: bool,
    /// A cycle as a comma-separated vertex list
    #[arg(long, value_delimiter = ',')]
    cycle: Option<Vec<usize>>,
    /// A longest cycle
    #[arg(long)]
    longest: bool,
    /// Whether every longest cycle is strongly dominating
    #[arg(long)]
    lemma: bool,
    /// Membership in the exceptional families
    #[arg(long)]
    recognize: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Minimum degree floor (default: the required degree)
    #[arg(long)]
    floor: Option<usize>,
    /// Enumerate every graph (the default mode)
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    /// Number of random trials
    #[arg(long, requires = "seed")]
    sample: Option<u64>,
    #[arg(long, requires = "sample")]
    seed: Option<u64>,
    #[command(flatten)]
    shard: ShardArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct ShardArgs {
    /// Number of shards (a power of two)
    #[arg(long, requires = "shard")]
    shards: Option<u64>,
    /// Index of this shard
    #[arg(long, requires = "shards")]
    shard: Option<u64>,
}

#[derive(Args)]
struct RunArgs {
    /// Write the JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Record wall time in the report
    #[arg(long)]
    timing: bool,
    /// Keep one listed graph per isomorphism class
    #[arg(long)]
    dedup: bool,
    /// Allow exhaustive runs up to n = 12
    #[arg(long)]
    long_run: bool,
    /// Most exceptional graphs listed in the report
    #[arg(long, default_value_t = 100_000)]
    record_limit: usize,
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            jobs: self.jobs as usize,
            timing: self.timing,
            record_limit: self.record_limit,
            dedup: self.dedup,
            long_run: self.long_run,
        }
    }
}

impl ShardArgs {
    fn shard(&self) -> Option<Shard> {
        Some(Shard { index: self.shard?, count: self.shards? })
    }
}

enum Failure {
    Input(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Threshold { n, k, json } => threshold(n, k, json),
        Command::Construct { family, k, m, sizes, options, format, out } => {
            construct(family, k, m, sizes, options.as_deref(), format, out.as_deref())
        }
        Command::Check(args) => check(&args),
        Command::Verify(args) => verify(&args),
        Command::Characterize { n, k, shard, run } => {
            let rep = characterization_check(n, k, shard.shard(), &run.options())?;
            finish(&rep, run.out.as_deref())
        }
        Command::Facts { k_max, m_max, run } => {
            let rep = facts_report(k_max, m_max, &run.options())?;
            if let Some(f) = &rep.facts {
                for s in &f.checks {
                    println!("{}: {} evaluated, {} violations", s.fact, s.evaluated, s.violations);
                }
                let fails: Vec<String> = f.domcycle_threshold_failures.iter().map(|(n, k)| format!("({n},{k})")).collect();
                println!("domcycle threshold fails at: {}", if fails.is_empty() { "none".into() } else { fails.join(" ") });
            }
            finish(&rep, run.out.as_deref())
        }
        Command::Tightness { k_max, m_max, run } => {
            let rep = tightness_scan(k_max, m_max, &run.options())?;
            finish(&rep, run.out.as_deref())
        }
    }
}

fn threshold(n: usize, k: usize, as_json: bool) -> Outcome {
    let p = ThresholdProfile::new(n, k)?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&p).expect("profile serializes"));
        return Ok(true);
    }
    println!("n = {}, k = {}, m = {}", p.n, p.k, p.m);
    println!("D = {}", p.theorem_threshold);
    println!("cfgjl = {}", p.cfgjl_bound);
    println!("rounding = {:?}", p.rounding);
    println!("exception = {}", p.is_exception);
    println!("required = {}", p.required_degree);
    Ok(true)
}

fn construct(
    family: Family,
    k: Option<usize>,
    m: Option<usize>,
    sizes: Option<Vec<usize>>,
    options: Option<&str>,
    format: Format,
    out: Option<&Path>,
) -> Outcome {
    let mut spec = match family {
        Family::F => json!({ "family": "F", "k": need(k, "--k")?, "m": need(m, "--m")?, "sizes": sizes }),
        Family::F1 => json!({ "family": "F1", "k": need(k, "--k")? }),
        Family::F2 => json!({ "family": "F2" }),
        Family::F3 => json!({ "family": "F3", "k": need(k, "--k")? }),
    };
    if sizes.is_some() && !matches!(family, Family::F) {
        return Err(Failure::Input("--sizes only applies to family F".into()));
    }
    if let Some(text) = options {
        let extra: Value =
            serde_json::from_str(text).map_err(|e| Failure::Input(format!("--options is not JSON: {e}")))?;
        let Value::Object(extra) = extra else {
            return Err(Failure::Input("--options must be a JSON object".into()));
        };
        let obj = spec.as_object_mut().expect("spec is an object");
        for (key, v) in extra {
            if key == "family" {
                return Err(Failure::Input("--options cannot change the family".into()));
            }
            obj.insert(key, v);
        }
    }
    let spec: FamilySpec =
        serde_json::from_value(spec).map_err(|e| Failure::Input(format!("invalid family parameters: {e}")))?;
    let g = spec.build()?;
    let text = match format {
        Format::G6 => encode(&g) + "\n",
        Format::Dot => export_dot(&g),
    };
    match out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Input(format!("{flag} is required for this family")))
}

fn read_graph(path: &Path) -> Result<KPartiteGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))?
    };
    Ok(decode(&text)?)
}

fn parse_sides(text: &str) -> Result<(Vec<usize>, Vec<usize>), Failure> {
    let bad = || Failure::Input(format!("--sides must look like \"0,1;2,3\", got {text:?}"));
    let (a, b) = text.split_once(';').ok_or_else(bad)?;
    let list = |s: &str| -> Result<Vec<usize>, Failure> {
        s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse().map_err(|_| bad())).collect()
    };
    Ok((list(a)?, list(b)?))
}

fn vertices(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn check(args: &CheckArgs) -> Outcome {
    let g = read_graph(&args.input)?;
    // Validate everything that depends on the graph before running anything.
    let sides = match (&args.sides, args.chvatal) {
        (Some(text), _) => Some(parse_sides(text)?),
        (None, true) if g.k() == 2 => Some((g.parts()[0].clone(), g.parts()[1].clone())),
        (None, true) => return Err(Failure::Input("--chvatal needs --sides unless the graph has two parts".into())),
        (None, false) => None,
    };
    let bipartite = match &sides {
        Some((a, b)) => Some(g.induced_bipartite(&g.vertex_set(a.iter().copied()), &g.vertex_set(b.iter().copied()))?),
        None => None,
    };
    let cycle = args.cycle.clone().map(CycleCertificate::new);
    if let Some(c) = &cycle {
        if !kpham::solver::verify_cycle(&g, c) {
            return Err(Failure::Input("--cycle is not a cycle of the graph".into()));
        }
    }

    println!("n = {}, k = {}, edges = {}, min degree = {}", g.n(), g.k(), g.edge_count(), g.min_degree());
    if args.ham {
        match find_hamiltonian_cycle(&g)? {
            Some(c) => println!("Hamiltonian: {}", vertices(&c.vertices)),
            None => {
                println!("non-Hamiltonian");
                if let Some(w) = non_hamiltonicity_witness(&g) {
                    println!("witness: {}", serde_json::to_string(&w).expect("witness serializes"));
                }
            }
        }
    }
    if args.alpha {
        let s = maximum_independent_set(&g, 64)?;
        println!("alpha = {}: {}", s.len(), vertices(&s.to_vec()));
    }
    if args.kappa {
        let kappa = vertex_connectivity(&g);
        match min_vertex_cut(&g) {
            Some(cut) => println!("kappa = {kappa}: {}", vertices(&cut.to_vec())),
            None => println!("kappa = {kappa}"),
        }
    }
    if let Some(h) = &bipartite {
        for (side, name) in [(1, "second"), (0, "first")] {
            let holds = chvatal_bipartite_condition(h, side)?;
            println!("chvatal (V = {name} side): {}", if holds { "holds" } else { "fails" });
        }
    }
    if let (true, Some(c)) = (args.dominating, &cycle) {
        let sd = is_strongly_dominating(&g, c)?;
        println!("strongly dominating: {}", if sd { "yes" } else { "no" });
    }
    if args.longest {
        match longest_cycle(&g) {
            Ok(c) => println!("longest cycle ({}): {}", c.len(), vertices(&c.vertices)),
            Err(Error::Acyclic) => println!("longest cycle: none"),
            Err(e) => return Err(e.into()),
        }
    }
    if args.lemma {
        println!("lemma: {}", serde_json::to_string(&check_domcycle_lemma(&g)?).expect("outcome serializes"));
    }
    if args.recognize {
        println!("family: {:?}", recognize(&g)?);
    }
    Ok(true)
}

fn verify(args: &VerifyArgs) -> Outcome {
    let opts = args.run.options();
    let rep = match args.sample {
        Some(trials) => {
            if args.shard.shards.is_some() {
                return Err(Failure::Input("--shards applies to exhaustive runs only".into()));
            }
            let seed = args.seed.expect("clap requires --seed with --sample");
            sample_verify(args.n, args.k, trials, seed, args.floor, &opts)?
        }
        None => exhaustive_verify(args.n, args.k, args.floor, args.shard.shard(), &opts)?,
    };
    finish(&rep, args.run.out.as_deref())
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))
}

fn finish(rep: &VerificationReport, out: Option<&Path>) -> Outcome {
    if let Some(path) = out {
        write_file(path, &(rep.to_json() + "\n"))?;
    }
    println!("{}", rep.summary_line());
    for note in &rep.notes {
        println!("note: {note}");
    }
    Ok(rep.passed())
}
