//! Command-line frontend: single counts, nu/fe tables, solution listings,
//! and oracle-vs-formula verification sweeps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
//! error (not prime / group mismatch / incompatible spec / resource
//! limit), 4 output I/O error.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use fecount::formulas::{fe_dispatch, Provenance, StateQuery};
use fecount::monoid::{FiniteAbelianGroup, ModuleClass, PicardSpec, RingSpec};
use fecount::nu::{nu_table_limited, max_distinct_sizes};
use fecount::oracle::{
    enumerate_dedekind_solutions_limited, enumerate_product_solutions_limited,
    oracle_count_dedekind, DEFAULT_DEDEKIND_CEILING, DEFAULT_PRODUCT_CEILING,
};
use fecount::partition::{count_partitions_limited, partitions, DEFAULT_CEILING};
use fecount::{count_partitions, nu, nu_p, nu_prime_complement, BigCount, Error};

#[derive(Parser)]
#[command(name = "fecount", version, about = "Exact counting of feedback-equivalence classes via partitions in monoids")]
struct Cli {
    /// Override the default resource ceilings.
    #[arg(long, global = true)]
    ceiling: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single count.
    Count {
        #[command(subcommand)]
        what: CountCmd,
    },
    /// Emit a nu(n,k) triangle or an fe table as CSV or JSON.
    Table {
        #[command(subcommand)]
        what: TableCmd,
    },
    /// List partitions or solution tuples in canonical order.
    List {
        #[command(subcommand)]
        what: ListCmd,
    },
    /// Run identity and oracle-vs-formula verification sweeps.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum CountCmd {
    /// p(n), the number of partitions of n.
    Partitions { n: u64 },
    /// nu(n,k): partitions of n with exactly k distinct part sizes.
    Nu { n: u64, k: u64 },
    /// nu(n,k,p): as nu(n,k) with every part size divisible by the prime p.
    NuP { n: u64, k: u64, p: u64 },
    /// nu'(n,k,p) = nu(n,k) - nu(n,k,p).
    NuComp { n: u64, k: u64, p: u64 },
    /// Feedback classes for a ring spec and state space.
    Fe(FeArgs),
}

#[derive(Subcommand)]
enum TableCmd {
    /// The nu(n,k) triangle for 1 <= n <= max-n.
    Nu(NuTableArgs),
    /// fe counts for 0 <= n <= max-n over one ring spec.
    Fe(FeTableArgs),
}

#[derive(Subcommand)]
enum ListCmd {
    /// All partitions of n.
    Partitions {
        n: u64,
        /// Keep only partitions with this many distinct part sizes.
        #[arg(long)]
        distinct_sizes: Option<u64>,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// All solution tuples of the direct-sum equation.
    Solutions(SolutionArgs),
}

#[derive(Args)]
struct RingArgs {
    /// Ring kind: trivial | product | dedekind.
    #[arg(long, default_value = "trivial")]
    ring: String,

    /// Number of projectively trivial factors (ring = product).
    #[arg(long)]
    factors: Option<u64>,

    /// Cyclic Picard group Z/m (ring = dedekind).
    #[arg(long)]
    pic_cyclic: Option<u64>,

    /// Product Picard group, e.g. 2x2 or 4x3 (ring = dedekind).
    #[arg(long)]
    pic_group: Option<String>,

    /// Infinite Picard group (ring = dedekind).
    #[arg(long)]
    pic_infinite: bool,
}

impl RingArgs {
    fn to_spec(&self) -> Result<RingSpec, Error> {
        match self.ring.as_str() {
            "trivial" => Ok(RingSpec::ProjectivelyTrivial),
            "product" => {
                let t = self.factors.ok_or_else(|| {
                    Error::IncompatibleSpec("--ring product needs --factors".into())
                })?;
                if t == 0 {
                    return Err(Error::IncompatibleSpec("--factors must be >= 1".into()));
                }
                Ok(RingSpec::Product(vec![RingSpec::ProjectivelyTrivial; t as usize]))
            }
            "dedekind" => {
                let pic = if self.pic_infinite {
                    PicardSpec::Infinite
                } else if let Some(m) = self.pic_cyclic {
                    PicardSpec::Finite(FiniteAbelianGroup::cyclic(m)?)
                } else if let Some(ref s) = self.pic_group {
                    PicardSpec::Finite(s.parse()?)
                } else {
                    return Err(Error::IncompatibleSpec(
                        "--ring dedekind needs --pic-cyclic, --pic-group or --pic-infinite".into(),
                    ));
                };
                Ok(RingSpec::Dedekind(pic))
            }
            other => Err(Error::IncompatibleSpec(format!("unknown ring kind `{other}`"))),
        }
    }

    fn group(&self) -> Result<FiniteAbelianGroup, Error> {
        match self.to_spec()? {
            RingSpec::Dedekind(PicardSpec::Finite(g)) => Ok(g),
            _ => Err(Error::IncompatibleSpec(
                "this operation needs a Dedekind ring with a finite Picard group".into(),
            )),
        }
    }

    fn describe(&self) -> String {
        let mut s = format!("ring={}", self.ring);
        if let Some(t) = self.factors {
            let _ = write!(s, " factors={t}");
        }
        if let Some(m) = self.pic_cyclic {
            let _ = write!(s, " pic=Z/{m}");
        }
        if let Some(ref g) = self.pic_group {
            let _ = write!(s, " pic={g}");
        }
        if self.pic_infinite {
            s.push_str(" pic=infinite");
        }
        s
    }
}

#[derive(Args)]
struct FeArgs {
    #[command(flatten)]
    ring: RingArgs,

    /// Rank of the state space.
    #[arg(long)]
    rank: u64,

    /// Count over the free state space R^n.
    #[arg(long)]
    free: bool,

    /// Count over the class with this determinant (comma-separated
    /// residues in the Picard group).
    #[arg(long)]
    det: Option<String>,
}

impl FeArgs {
    fn query(&self) -> Result<StateQuery, Error> {
        if let Some(ref det) = self.det {
            let group = self.ring.group()?;
            let residues = parse_residues(det)?;
            let target = group.element(&residues)?;
            return Ok(StateQuery::Module(if self.rank == 0 {
                ModuleClass::Zero
            } else {
                ModuleClass::new(self.rank, target)?
            }));
        }
        if self.free {
            return Ok(StateQuery::FreeRank(self.rank));
        }
        // Without --free/--det a Dedekind query means all classes of the
        // given rank; for other rings every class of rank n is free.
        match self.ring.to_spec()? {
            RingSpec::Dedekind(_) => Ok(StateQuery::RankClasses(self.rank)),
            _ => Ok(StateQuery::FreeRank(self.rank)),
        }
    }

    fn describe(&self) -> String {
        let mut s = format!("fe {} rank={}", self.ring.describe(), self.rank);
        if self.free {
            s.push_str(" free");
        }
        if let Some(ref d) = self.det {
            let _ = write!(s, " det={d}");
        }
        s
    }
}

#[derive(Args)]
struct NuTableArgs {
    #[arg(long)]
    max_n: u64,
    /// csv | json
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FeTableArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    max_n: u64,
    #[arg(long)]
    free: bool,
    #[arg(long)]
    det: Option<String>,
    /// csv | json
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolutionArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[arg(long)]
    rank: u64,
    /// Determinant target, comma-separated residues; identity if omitted.
    #[arg(long)]
    det: Option<String>,
    #[arg(long)]
    limit: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (comma-separated): rowsum, divisor, triangle,
    /// picard-sum, scaling, oracle, or all.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,

    #[arg(long, default_value_t = 30)]
    max_n: u64,

    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    primes: Vec<u64>,

    /// Cyclic Picard-group orders for the oracle suite.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,6")]
    groups: Vec<u64>,
}

#[derive(Serialize)]
struct OutputRecord {
    query: String,
    result: String,
    provenance: String,
}

impl OutputRecord {
    fn new(query: String, result: &BigCount, provenance: Provenance) -> Self {
        OutputRecord {
            query,
            result: result.to_string(),
            provenance: provenance.to_string(),
        }
    }
}

fn parse_residues(s: &str) -> Result<Vec<u64>, Error> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Error::IncompatibleSpec(format!("bad residue `{tok}`")))
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ceiling = cli.ceiling;
    match run(cli.command, ceiling) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                AppError::Domain(_) => ExitCode::from(3),
                AppError::Io(_) => ExitCode::from(4),
            }
        }
    }
}

enum AppError {
    Domain(Error),
    Io(io::Error),
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Domain(e) => write!(f, "{e}"),
            AppError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Domain(e)
    }
}

impl From<io::Error> for AppError {
    fn from(e: io::Error) -> Self {
        AppError::Io(e)
    }
}

fn run(command: Command, ceiling: Option<u64>) -> Result<ExitCode, AppError> {
    match command {
        Command::Count { what } => {
            let record = run_count(what, ceiling)?;
            println!("{}", serde_json::to_string(&record).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { what } => {
            run_table(what, ceiling)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::List { what } => {
            run_list(what, ceiling)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => run_verify(args, ceiling),
    }
}

fn run_count(cmd: CountCmd, ceiling: Option<u64>) -> Result<OutputRecord, AppError> {
    let record = match cmd {
        CountCmd::Partitions { n } => {
            let c = count_partitions_limited(n, ceiling.unwrap_or(DEFAULT_CEILING))?;
            OutputRecord::new(format!("partitions n={n}"), &c, Provenance::PaperFormula)
        }
        CountCmd::Nu { n, k } => {
            let c = nu(n, k)?;
            OutputRecord::new(format!("nu n={n} k={k}"), &c, Provenance::PaperFormula)
        }
        CountCmd::NuP { n, k, p } => {
            let c = nu_p(n, k, p)?;
            OutputRecord::new(format!("nu_p n={n} k={k} p={p}"), &c, Provenance::PaperFormula)
        }
        CountCmd::NuComp { n, k, p } => {
            let c = nu_prime_complement(n, k, p)?;
            OutputRecord::new(
                format!("nu_comp n={n} k={k} p={p}"),
                &c,
                Provenance::PaperFormula,
            )
        }
        CountCmd::Fe(args) => {
            let ring = args.ring.to_spec()?;
            let query = args.query()?;
            let (c, provenance) = fe_dispatch(&ring, &query)?;
            OutputRecord::new(args.describe(), &c, provenance)
        }
    };
    Ok(record)
}

fn open_sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, AppError> {
    match path {
        Some(p) => Ok(Box::new(File::create(p)?)),
        None => Ok(Box::new(io::stdout())),
    }
}

fn run_table(cmd: TableCmd, ceiling: Option<u64>) -> Result<(), AppError> {
    match cmd {
        TableCmd::Nu(args) => {
            let table = nu_table_limited(args.max_n, ceiling.unwrap_or(DEFAULT_CEILING))?;
            let mut out = open_sink(&args.output)?;
            match args.format.as_str() {
                "csv" => {
                    writeln!(out, "n,k,nu")?;
                    for n in 1..=args.max_n {
                        for k in 1..=n {
                            writeln!(out, "{n},{k},{}", table.get(n, k))?;
                        }
                    }
                }
                "json" => {
                    let records: Vec<OutputRecord> = (1..=args.max_n)
                        .flat_map(|n| {
                            (1..=n).map(move |k| (n, k))
                        })
                        .map(|(n, k)| OutputRecord {
                            query: format!("nu n={n} k={k}"),
                            result: table.get(n, k).to_string(),
                            provenance: Provenance::PaperFormula.to_string(),
                        })
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&records).expect("serializable"))?;
                }
                other => {
                    return Err(Error::IncompatibleSpec(format!("unknown format `{other}`")).into())
                }
            }
            Ok(())
        }
        TableCmd::Fe(args) => {
            let ring = args.ring.to_spec()?;
            let mut records = Vec::new();
            for n in 0..=args.max_n {
                let fe_args = FeArgs {
                    ring: RingArgs {
                        ring: args.ring.ring.clone(),
                        factors: args.ring.factors,
                        pic_cyclic: args.ring.pic_cyclic,
                        pic_group: args.ring.pic_group.clone(),
                        pic_infinite: args.ring.pic_infinite,
                    },
                    rank: n,
                    free: args.free,
                    det: args.det.clone(),
                };
                let (c, provenance) = fe_dispatch(&ring, &fe_args.query()?)?;
                records.push((n, c, provenance));
            }
            let mut out = open_sink(&args.output)?;
            match args.format.as_str() {
                "csv" => {
                    writeln!(out, "n,fe,provenance")?;
                    for (n, c, provenance) in &records {
                        writeln!(out, "{n},{c},{provenance}")?;
                    }
                }
                "json" => {
                    let records: Vec<OutputRecord> = records
                        .iter()
                        .map(|(n, c, provenance)| OutputRecord {
                            query: format!("{} rank={n}", args.ring.describe()),
                            result: c.to_string(),
                            provenance: provenance.to_string(),
                        })
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&records).expect("serializable"))?;
                }
                other => {
                    return Err(Error::IncompatibleSpec(format!("unknown format `{other}`")).into())
                }
            }
            Ok(())
        }
    }
}

fn run_list(cmd: ListCmd, ceiling: Option<u64>) -> Result<(), AppError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cmd {
        ListCmd::Partitions {
            n,
            distinct_sizes,
            limit,
        } => {
            if n > ceiling.unwrap_or(DEFAULT_CEILING) {
                return Err(Error::ResourceLimit {
                    what: "partition total n",
                    requested: n,
                    ceiling: ceiling.unwrap_or(DEFAULT_CEILING),
                }
                .into());
            }
            let stream = partitions(n)
                .filter(|p| distinct_sizes.map_or(true, |k| p.distinct_sizes() == k));
            for p in limited(stream, limit) {
                writeln!(out, "{p}")?;
            }
            Ok(())
        }
        ListCmd::Solutions(args) => {
            match args.ring.to_spec()? {
                RingSpec::ProjectivelyTrivial => {
                    let stream = partitions(args.rank).map(|p| p.multiplicities().to_vec());
                    for mult in limited(stream, args.limit) {
                        writeln!(out, "{}", format_vector(&mult))?;
                    }
                }
                RingSpec::Product(factors) => {
                    let t = factors.len() as u64;
                    let stream = enumerate_product_solutions_limited(
                        args.rank,
                        t,
                        ceiling.unwrap_or(DEFAULT_PRODUCT_CEILING),
                    )?;
                    for tuple in limited(stream, args.limit) {
                        let entries: Vec<String> =
                            tuple.iter().map(|v| format_vector(v)).collect();
                        writeln!(out, "[{}]", entries.join(", "))?;
                    }
                }
                RingSpec::Dedekind(PicardSpec::Infinite) => {
                    return Err(Error::IncompatibleSpec(
                        "cannot enumerate solutions over an infinite Picard group".into(),
                    )
                    .into());
                }
                RingSpec::Dedekind(PicardSpec::Finite(group)) => {
                    let target = match args.det {
                        Some(ref s) => group.element(&parse_residues(s)?)?,
                        None => group.identity(),
                    };
                    let x = if args.rank == 0 {
                        return Err(Error::IncompatibleSpec(
                            "solution listing needs rank >= 1".into(),
                        )
                        .into());
                    } else {
                        ModuleClass::new(args.rank, target)?
                    };
                    let stream = enumerate_dedekind_solutions_limited(
                        &x,
                        &group,
                        ceiling.unwrap_or(DEFAULT_DEDEKIND_CEILING),
                    )?;
                    for tuple in limited(stream, args.limit) {
                        let entries: Vec<String> = tuple.iter().map(|z| z.to_string()).collect();
                        writeln!(out, "[{}]", entries.join(", "))?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn limited<I: Iterator>(iter: I, limit: Option<u64>) -> impl Iterator<Item = I::Item> {
    iter.take(limit.map_or(usize::MAX, |l| l as usize))
}

fn format_vector(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(|z| z.to_string()).collect();
    format!("({})", parts.join(","))
}

fn run_verify(args: VerifyArgs, ceiling: Option<u64>) -> Result<ExitCode, AppError> {
    let all = args.suite.iter().any(|s| s == "all");
    let wants = |name: &str| all || args.suite.iter().any(|s| s == name);
    let mut any_known = false;
    let mut all_pass = true;

    let mut report = |name: &str, outcome: Result<(), String>| {
        match outcome {
            Ok(()) => println!("suite {name}: PASS"),
            Err(counterexample) => {
                all_pass = false;
                println!("suite {name}: FAIL ({counterexample})");
            }
        }
    };

    if wants("rowsum") {
        any_known = true;
        report("rowsum", suite_rowsum(args.max_n));
    }
    if wants("divisor") {
        any_known = true;
        report("divisor", suite_divisor(args.max_n));
    }
    if wants("triangle") {
        any_known = true;
        report("triangle", suite_triangle(args.max_n));
    }
    if wants("picard-sum") {
        any_known = true;
        report("picard-sum", suite_picard_sum(args.max_n, &args.primes));
    }
    if wants("scaling") {
        any_known = true;
        report("scaling", suite_scaling(args.max_n, &args.primes));
    }
    if wants("oracle") {
        any_known = true;
        report(
            "oracle",
            suite_oracle(
                args.max_n,
                &args.groups,
                ceiling.unwrap_or(DEFAULT_DEDEKIND_CEILING),
            ),
        );
    }
    drop(report);

    if !any_known {
        return Err(Error::IncompatibleSpec(format!(
            "no known suite in {:?}; expected rowsum, divisor, triangle, picard-sum, scaling, oracle or all",
            args.suite
        ))
        .into());
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn suite_rowsum(max_n: u64) -> Result<(), String> {
    let table = nu_table_limited(max_n, u64::MAX).map_err(|e| e.to_string())?;
    for n in 1..=max_n {
        let sum: num_bigint::BigUint = table.row(n).iter().sum();
        let expected = count_partitions(n).map_err(|e| e.to_string())?;
        if BigCount::Finite(sum.clone()) != expected {
            return Err(format!("n={n}: row sum {sum} != p(n) {expected}"));
        }
    }
    Ok(())
}

fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).count() as u64
}

fn suite_divisor(max_n: u64) -> Result<(), String> {
    for n in 1..=max_n {
        let got = nu(n, 1).map_err(|e| e.to_string())?;
        let want = BigCount::from(divisor_count(n));
        if got != want {
            return Err(format!("n={n}: nu(n,1) {got} != div(n) {want}"));
        }
    }
    Ok(())
}

fn suite_triangle(max_n: u64) -> Result<(), String> {
    let table = nu_table_limited(max_n, u64::MAX).map_err(|e| e.to_string())?;
    for n in 1..=max_n {
        for k in 1..=n {
            if n < k * (k + 1) / 2 && !num_traits::Zero::is_zero(table.get(n, k)) {
                return Err(format!("n={n} k={k}: nu(n,k) != 0 below the triangle bound"));
            }
        }
    }
    Ok(())
}

fn suite_picard_sum(max_n: u64, primes: &[u64]) -> Result<(), String> {
    use fecount::formulas::{fe_dedekind_free, fe_dedekind_nonfree, fe_dedekind_rank};
    for &p in primes {
        for n in 1..=max_n {
            let free = fe_dedekind_free(n, p).map_err(|e| e.to_string())?;
            let nonfree = fe_dedekind_nonfree(n, p).map_err(|e| e.to_string())?;
            let rank = fe_dedekind_rank(
                n,
                &PicardSpec::Finite(FiniteAbelianGroup::cyclic(p).map_err(|e| e.to_string())?),
            )
            .map_err(|e| e.to_string())?;
            let lhs = free + BigCount::from(p - 1) * nonfree;
            if lhs != rank {
                return Err(format!("n={n} p={p}: {lhs} != {rank}"));
            }
        }
    }
    Ok(())
}

fn suite_scaling(max_n: u64, primes: &[u64]) -> Result<(), String> {
    for &p in primes {
        for n in 1..=max_n {
            for k in 1..=max_distinct_sizes(n).max(1) {
                let formula = nu_p(n, k, p).map_err(|e| e.to_string())?;
                let brute = partitions(n)
                    .filter(|part| {
                        part.distinct_sizes() == k
                            && part.distinct_size_set().iter().all(|s| s % p == 0)
                    })
                    .count() as u64;
                if formula != BigCount::from(brute) {
                    return Err(format!("n={n} k={k} p={p}: formula {formula} != brute {brute}"));
                }
            }
        }
    }
    Ok(())
}

fn suite_oracle(max_n: u64, group_orders: &[u64], ceiling: u64) -> Result<(), String> {
    use fecount::formulas::{fe_dedekind_module, fe_dedekind_rank};
    let max_n = max_n.min(ceiling);
    for &d in group_orders {
        let group = FiniteAbelianGroup::cyclic(d).map_err(|e| e.to_string())?;
        for n in 1..=max_n {
            let mut total = BigCount::zero();
            for target in group.elements() {
                let formula = fe_dedekind_module(n, &group, &target).map_err(|e| e.to_string())?;
                let x = ModuleClass::new(n, target.clone()).map_err(|e| e.to_string())?;
                let brute = oracle_count_dedekind(&x, &group).map_err(|e| e.to_string())?;
                if formula != brute {
                    return Err(format!(
                        "n={n} d={d} target={target}: formula {formula} != oracle {brute}"
                    ));
                }
                total += formula;
            }
            let rank = fe_dedekind_rank(n, &PicardSpec::Finite(group.clone()))
                .map_err(|e| e.to_string())?;
            if total != rank {
                return Err(format!("n={n} d={d}: target sum {total} != rank count {rank}"));
            }
        }
    }
    Ok(())
}
