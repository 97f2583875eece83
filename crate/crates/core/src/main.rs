use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use nielsen::braid::{
    orbit_decomposition, orbit_of, BraidConfig, BraidError, ClassSpec, Conjugation, EntryClasses, GroupFilter,
    DEFAULT_MEMORY_CAP,
};
use nielsen::construct::{
    build_family, dt_genus0, dta_genus1, exceptional_genus3, linear_group, search_dt_seed, tau_genus2, tc_genus0,
    ExceptionalCase, FamilyKind, LinearGroupName,
};
use nielsen::nielsen::{moduli_necessary, read_records, NielsenTuple, TupleRecord};
use nielsen::perm::{classify_group, parse_perm, GroupKind, Perm};
use nielsen::spin::lifting_invariant;
use nielsen::verify::{self, exit_code, Params, VerifyOptions};

#[derive(Parser)]
#[command(name = "nielsen", version, about = "Nielsen classes, braid orbits and lifting invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a tuple (or a linear group) and print it as JSON lines.
    Construct(ConstructArgs),
    /// Genus, length, shape and moduli check of each input tuple.
    Genus(Input),
    /// Generated group of each input tuple.
    Classify(Input),
    /// Braid orbits of a class, or of each tuple in --seed-file.
    Orbit(OrbitArgs),
    /// Lifting invariant of each input 3-cycle tuple.
    Invariant(Input),
    /// Run one registered claim, or all of them.
    Verify(VerifyArgs),
    /// List registered claims.
    ListClaims,
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum Family {
    Dt0,
    Tc0,
    Dta1,
    Family,
    Tau,
    Exceptional,
    #[value(alias = "linear-group")]
    Linear,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Dt,
    Tc,
    Transpositions,
}

#[derive(Args)]
struct Output {
    /// Also write the output to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    g: Option<u32>,
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// gl32 or agl32 for `exceptional`; gl32, agl32 or agl42 for `linear`.
    #[arg(long)]
    case: Option<String>,
    /// Rerun the search behind the frozen dt0 seed (n = 5 or 6).
    #[arg(long)]
    search: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Input {
    /// JSON-lines tuple file; standard input when absent.
    #[arg(long)]
    seed_file: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Engine {
    /// Memory cap in MiB.
    #[arg(long)]
    cap_memory: Option<u64>,
    #[arg(long)]
    workers: Option<usize>,
}

impl Engine {
    fn config(&self) -> BraidConfig {
        BraidConfig {
            workers: self.workers,
            memory_cap: self.cap_memory.map(|m| m << 20).unwrap_or(DEFAULT_MEMORY_CAP),
            ..BraidConfig::default()
        }
    }
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    g: Option<u32>,
    #[arg(long)]
    r: Option<usize>,
    /// Prescribed product in cycle notation.
    #[arg(long)]
    product: Option<String>,
    /// transitive, alternating, symmetric, gl32, agl32 or agl42.
    #[arg(long)]
    group_filter: Option<String>,
    /// Conjugate only by the generated group instead of all of S_n.
    #[arg(long)]
    inner: bool,
    #[arg(long)]
    seed_file: Option<PathBuf>,
    #[command(flatten)]
    engine: Engine,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    claim: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    g: Option<u32>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    product: Option<String>,
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Include long-running claims.
    #[arg(long)]
    long: bool,
    /// Add wall-clock time to each report.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    engine: Engine,
    #[command(flatten)]
    output: Output,
}

impl VerifyArgs {
    fn params(&self) -> Params {
        Params {
            n: self.n,
            g: self.g,
            r: self.r,
            product: self.product.clone(),
            case: self.case.clone(),
            seed: self.seed,
        }
    }
}

type Fallible<T> = Result<T, Box<dyn std::error::Error>>;

/// Collects output lines for stdout and the optional --out file.
struct Sink {
    lines: Vec<String>,
}

impl Sink {
    fn new() -> Sink {
        Sink { lines: Vec::new() }
    }

    fn json<T: Serialize>(&mut self, value: &T) -> Fallible<()> {
        self.lines.push(serde_json::to_string(value)?);
        Ok(())
    }

    fn tuple(&mut self, t: &NielsenTuple) -> Fallible<()> {
        self.lines.push(TupleRecord::from_perms(t.degree(), t.entries()).to_line()?);
        Ok(())
    }

    fn finish(self, out: &Output) -> Fallible<()> {
        let mut stdout = io::stdout().lock();
        for l in &self.lines {
            writeln!(stdout, "{l}")?;
        }
        if let Some(path) = &out.out {
            let mut f = File::create(path)?;
            for l in &self.lines {
                writeln!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

fn read_input(path: &Option<PathBuf>) -> Fallible<Vec<TupleRecord>> {
    Ok(match path {
        Some(p) => read_records(BufReader::new(File::open(p)?))?,
        None => read_records(io::stdin().lock())?,
    })
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Fallible<T> {
    v.ok_or_else(|| format!("--{flag} is required").into())
}

fn family_kind(kind: Option<Kind>) -> Fallible<FamilyKind> {
    match kind {
        Some(Kind::Dt) => Ok(FamilyKind::Dt),
        Some(Kind::Tc) => Ok(FamilyKind::Tc),
        _ => Err("--kind must be dt or tc".into()),
    }
}

fn construct(a: &ConstructArgs) -> Fallible<()> {
    let mut sink = Sink::new();
    let t = match a.family {
        Family::Dt0 if a.search => {
            search_dt_seed(need(a.n, "n")?)?.ok_or("the search found no tuple")?
        }
        Family::Dt0 => dt_genus0(need(a.n, "n")?)?,
        Family::Tc0 => tc_genus0(need(a.n, "n")?)?,
        Family::Dta1 => dta_genus1(need(a.n, "n")?)?,
        Family::Family => build_family(need(a.n, "n")?, need(a.g, "g")?, family_kind(a.kind)?)?,
        Family::Tau => tau_genus2()?,
        Family::Exceptional => match a.case.as_deref() {
            Some("gl32") => exceptional_genus3(ExceptionalCase::GL32)?,
            Some("agl32") => exceptional_genus3(ExceptionalCase::AGL32)?,
            _ => return Err("--case must be gl32 or agl32".into()),
        },
        Family::Linear => {
            let name = match a.case.as_deref() {
                Some("gl32") => LinearGroupName::GL32,
                Some("agl32") => LinearGroupName::AGL32,
                Some("agl42") => LinearGroupName::AGL42,
                _ => return Err("--case must be gl32, agl32 or agl42".into()),
            };
            let g = linear_group(name);
            let strings = |v: &[Perm]| v.iter().map(Perm::to_cycle_string).collect::<Vec<_>>();
            sink.json(&json!({
                "name": format!("{:?}", g.name),
                "n": g.degree,
                "order": g.order.to_string(),
                "generators": strings(&g.generators),
                "transvections": strings(&g.transvections),
            }))?;
            return sink.finish(&a.output);
        }
    };
    sink.tuple(&t)?;
    sink.finish(&a.output)
}

fn genus(a: &Input) -> Fallible<()> {
    let mut sink = Sink::new();
    for rec in read_input(&a.seed_file)? {
        let t = rec.to_tuple()?;
        sink.json(&json!({
            "n": t.degree(),
            "r": t.len(),
            "g": t.genus(),
            "shape": format!("{:?}", t.shape()),
            "moduli": moduli_necessary(&t),
        }))?;
    }
    sink.finish(&a.output)
}

fn classify(a: &Input) -> Fallible<()> {
    let mut sink = Sink::new();
    for rec in read_input(&a.seed_file)? {
        sink.json(&classify_group(&rec.to_perms()?)?)?;
    }
    sink.finish(&a.output)
}

fn invariant(a: &Input) -> Fallible<()> {
    let mut sink = Sink::new();
    for rec in read_input(&a.seed_file)? {
        sink.json(&json!({ "lifting_invariant": lifting_invariant(&rec.to_tuple()?)? }))?;
    }
    sink.finish(&a.output)
}

fn parse_filter(name: &str) -> Fallible<GroupFilter> {
    if name == "transitive" {
        return Ok(GroupFilter::Transitive);
    }
    let kinds = [
        GroupKind::Symmetric,
        GroupKind::Alternating,
        GroupKind::GL32,
        GroupKind::AGL32,
        GroupKind::AGL42,
    ];
    kinds
        .into_iter()
        .find(|k| k.name() == name)
        .map(GroupFilter::Kind)
        .ok_or_else(|| format!("unknown group filter '{name}'").into())
}

fn class_spec(a: &OrbitArgs) -> Fallible<ClassSpec> {
    let kind = a.kind.ok_or("--kind or --seed-file is required")?;
    let n = need(a.n, "n")?;
    let r = match (a.r, a.g) {
        (Some(r), _) => r,
        (None, Some(g)) => match kind {
            Kind::Transpositions => 2 * (n + g as usize - 1),
            _ => n + g as usize - 1,
        },
        (None, None) => return Err("--r or --g is required".into()),
    };
    let classes = match kind {
        Kind::Dt => EntryClasses::Uniform(vec![2, 2]),
        Kind::Tc => EntryClasses::Uniform(vec![3]),
        Kind::Transpositions => EntryClasses::Uniform(vec![2]),
    };
    let mut spec = ClassSpec::new(n, r, classes);
    if let Some(p) = &a.product {
        spec = spec.with_product(parse_perm(p, n)?);
    }
    if let Some(f) = &a.group_filter {
        spec = spec.with_filter(parse_filter(f)?);
    }
    if spec.group_filter == GroupFilter::Kind(GroupKind::GL32) && n == 7 {
        // small enough for the table engine
        spec = spec.with_ambient("gl32", linear_group(LinearGroupName::GL32).generators);
    }
    if a.inner {
        spec = spec.with_conjugation(Conjugation::Inner);
    }
    Ok(spec)
}

fn orbit(a: &OrbitArgs) -> Fallible<()> {
    let config = a.engine.config();
    let mut sink = Sink::new();
    let conjugation = if a.inner { Conjugation::Inner } else { Conjugation::Full };
    if a.seed_file.is_some() {
        for rec in read_input(&a.seed_file)? {
            sink.json(&orbit_of(&rec.to_tuple()?, conjugation, &config)?)?;
        }
    } else {
        sink.json(&orbit_decomposition(&class_spec(a)?, &config)?)?;
    }
    sink.finish(&a.output)
}

fn run_verify(a: &VerifyArgs) -> Fallible<i32> {
    let opts = VerifyOptions { config: a.engine.config(), long: a.long, timing: a.timing };
    let reports = match &a.claim {
        Some(id) => {
            let params = a.params();
            if params == Params::default() {
                let info = verify::find_claim(id)?;
                let mut out = Vec::new();
                for p in info.default_params() {
                    out.push(verify::run_verification(id, &p, &opts)?);
                }
                out
            } else {
                vec![verify::run_verification(id, &params, &opts)?]
            }
        }
        None => verify::run_suite(&opts)?,
    };
    let mut sink = Sink::new();
    for r in &reports {
        sink.json(r)?;
    }
    sink.finish(&a.output)?;
    Ok(exit_code(&reports))
}

fn list_claims() -> Fallible<()> {
    let mut sink = Sink::new();
    for c in verify::claims() {
        sink.json(&json!({ "claim_id": c.id, "claim": c.claim, "long": c.long }))?;
    }
    sink.finish(&Output { out: None })
}

fn is_cap(e: &(dyn std::error::Error + 'static)) -> bool {
    matches!(
        e.downcast_ref::<BraidError>(),
        Some(BraidError::MemoryCap { .. } | BraidError::CandidateCap { .. })
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => construct(a).map(|_| 0),
        Command::Genus(a) => genus(a).map(|_| 0),
        Command::Classify(a) => classify(a).map(|_| 0),
        Command::Orbit(a) => orbit(a).map(|_| 0),
        Command::Invariant(a) => invariant(a).map(|_| 0),
        Command::Verify(a) => run_verify(a),
        Command::ListClaims => list_claims().map(|_| 0),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            // a cap is not a verdict either way
            ExitCode::from(if is_cap(e.as_ref()) { 2 } else { 1 })
        }
    }
}
