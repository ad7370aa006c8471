//! Command-line interface: `gen`, `solve`, `verify`, and `oracle`
//! subcommands over DIMACS `.col` files.
//!
//! Exit codes: 0 success/pass, 1 property violated or claim mismatch,
//! 2 usage or parse error, 3 timeout with an inconclusive result.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cert::{certificate_to_string, check_certificate, read_certificate, Certificate};
use crate::construct::{
    build_block, mycielskian, mycielski_tower, sidecar_path, ClassSlice, ClassSpec,
    ProviderClaims, ProviderConfig,
};
use crate::dimacs;
use crate::solve::{
    brute_force_chi, brute_force_omega, chi_restricted, chromatic_number, clique_number,
    k_colorable, KColorOutcome, SolveOptions, DEFAULT_BUDGET,
};
use crate::verify::{
    check_block_observation, check_goodness, check_mycielski_lemma, check_pollyanna,
    find_nonpoly_witness, pollyanna_bound, render_table, verify_all, BoundingTable,
    CheckOptions, CheckReport, Polynomial, SampleStrategy, Summary, ValueRecord,
};
use crate::{Error, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Environment variable overriding the default per-solve budget (seconds).
pub const BUDGET_ENV: &str = "CHIBOUND_BUDGET";

#[derive(Parser)]
#[command(
    name = "chibound",
    version,
    about = "Mycielski towers, tagged blocks, exact chi/omega solvers and structural checks"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GlobalOpts {
    /// Per-solve time budget in seconds (default 120, or $CHIBOUND_BUDGET)
    #[arg(long, global = true)]
    budget: Option<f64>,
    /// Single-threaded solving with lexicographically least certificates
    #[arg(long, global = true)]
    deterministic: bool,
    /// Worker threads for independent solves (default: available cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for random subset sampling
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Format::Json => write!(f, "json"),
            Format::Table => write!(f, "table"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Random,
}

impl std::fmt::Display for StrategyArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StrategyArg::Exhaustive => write!(f, "exhaustive"),
            StrategyArg::Random => write!(f, "random"),
        }
    }
}

impl From<StrategyArg> for SampleStrategy {
    fn from(s: StrategyArg) -> SampleStrategy {
        match s {
            StrategyArg::Exhaustive => SampleStrategy::Exhaustive,
            StrategyArg::Random => SampleStrategy::Random,
        }
    }
}

/// Inclusive block-index range: "3" or "1-4".
#[derive(Clone, Debug)]
struct MRange(Vec<usize>);

fn parse_m_range(s: &str) -> std::result::Result<MRange, String> {
    let one = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad block index `{t}`"))
    };
    let ms = if let Some((a, b)) = s.split_once('-') {
        let (a, b) = (one(a)?, one(b)?);
        if b < a {
            return Err(format!("empty range `{s}`"));
        }
        (a..=b).collect()
    } else {
        vec![one(s)?]
    };
    if ms.contains(&0) {
        return Err("block indices start at 1".into());
    }
    Ok(MRange(ms))
}

/// Core file binding for r >= 3 providers: "m=path/to/core.col".
fn parse_core_spec(s: &str) -> std::result::Result<(usize, PathBuf), String> {
    let (m, path) = s
        .split_once('=')
        .ok_or_else(|| format!("expected m=PATH, got `{s}`"))?;
    let m = m
        .trim()
        .parse::<usize>()
        .map_err(|_| format!("bad block index `{m}`"))?;
    Ok((m, PathBuf::from(path)))
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate graphs (DIMACS .col plus a .claims sidecar where apt)
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Exact solves, certificates on stdout
    Solve {
        #[command(subcommand)]
        what: SolveCmd,
    },
    /// Machine-check structural claims; emits a report
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Brute-force oracles (graphs up to 12 vertices)
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Mycielskian of the input graph
    Mycielski {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Tower T_r (triangle-free, connected, chromatic number r)
    Tower {
        #[arg(long)]
        r: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Block X_{r,m}: core with clique number r plus a tower tag
    Block {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        /// Core graph file, required for r >= 3
        #[arg(long)]
        core: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum SolveCmd {
    /// Exact chromatic number
    Chi { file: PathBuf },
    /// Exact clique number
    Omega { file: PathBuf },
    /// Restricted invariant chi^(n)
    ChiN {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Search for a proper coloring with at most k colors
    KColor {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Chromatic number by exhaustive enumeration
    Chi { file: PathBuf },
    /// Clique number by full subset scan
    Omega { file: PathBuf },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Triangle-freeness and chi increment of the Mycielskian of the input
    MycielskiLemma { file: PathBuf },
    /// Clique/chromatic/partition facts of one block
    Block {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        core: Option<PathBuf>,
    },
    /// chi^(r-1) <= W_r over sampled induced subgraphs of blocks
    Goodness {
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = parse_m_range)]
        m: MRange,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
        /// Random-sample count when not exhaustive
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        /// Core files for r >= 3, one m=PATH per block
        #[arg(long, value_parser = parse_core_spec)]
        core: Vec<(usize, PathBuf)>,
    },
    /// Witness block beating a polynomial bound: m = p(r) + 1
    Nonpoly {
        #[arg(long)]
        r: usize,
        /// Comma-separated coefficients, constant first (x^3 is 0,0,0,1)
        #[arg(long)]
        poly: String,
        #[arg(long, value_parser = parse_core_spec)]
        core: Vec<(usize, PathBuf)>,
    },
    /// Constants (R, M) of a bounding table, optionally checked on blocks
    Pollyanna {
        /// Comma-separated table phi(1),phi(2),...
        #[arg(long)]
        phi: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_parser = parse_m_range)]
        m: Option<MRange>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long, value_parser = parse_core_spec)]
        core: Vec<(usize, PathBuf)>,
    },
    /// The whole battery on a finite slice
    All {
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = parse_m_range)]
        m: MRange,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long, value_parser = parse_core_spec)]
        core: Vec<(usize, PathBuf)>,
    },
    /// Check a chi/omega certificate file against a graph
    Cert {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
}

/// Parse and dispatch; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };

    let jobs = if cli.global.deterministic {
        Some(1)
    } else {
        cli.global.jobs
    };
    if let Some(j) = jobs {
        // a pool may already exist when run() is called twice in-process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }

    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ClaimMismatch(_) => EXIT_VIOLATED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn budget(global: &GlobalOpts) -> Result<Duration> {
    let secs = match global.budget {
        Some(s) => s,
        None => match std::env::var(BUDGET_ENV) {
            Ok(text) => text.parse::<f64>().map_err(|_| {
                Error::InvalidParameter(format!("${BUDGET_ENV} is not a number: `{text}`"))
            })?,
            Err(_) => return Ok(DEFAULT_BUDGET),
        },
    };
    if !secs.is_finite() || secs <= 0.0 || secs > 1e9 {
        return Err(Error::InvalidParameter(format!(
            "budget must be a positive number of seconds (at most 1e9), got {secs}"
        )));
    }
    Ok(Duration::from_secs_f64(secs))
}

fn solve_options(global: &GlobalOpts) -> Result<SolveOptions> {
    Ok(SolveOptions {
        budget: Some(budget(global)?),
        deterministic: global.deterministic,
    })
}

fn check_options(global: &GlobalOpts) -> Result<CheckOptions> {
    Ok(CheckOptions::with_solve(solve_options(global)?))
}

fn provider_for(r: usize, cores: &[(usize, PathBuf)]) -> Result<ProviderConfig> {
    if r == 2 {
        if !cores.is_empty() {
            return Err(Error::InvalidParameter(
                "r = 2 uses the built-in tower provider; --core is for r >= 3".into(),
            ));
        }
        return Ok(ProviderConfig::Tower);
    }
    if cores.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "r = {r} needs --core m=PATH bindings (no construction is built in)"
        )));
    }
    let map: BTreeMap<usize, PathBuf> = cores.iter().cloned().collect();
    Ok(ProviderConfig::Files(map))
}

fn emit(summary: &Summary, format: Format) -> i32 {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(summary).expect("reports serialize")
        ),
        Format::Table => print!("{}", render_table(summary)),
    }
    summary.exit_code()
}

fn write_claims(col_path: &Path, claims: &ProviderClaims) -> Result<()> {
    let path = sidecar_path(col_path);
    let text = serde_json::to_string_pretty(claims).expect("claims serialize");
    std::fs::write(&path, text + "\n")?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let global = &cli.global;
    match &cli.cmd {
        Cmd::Gen { what } => dispatch_gen(what, global),
        Cmd::Solve { what } => dispatch_solve(what, global),
        Cmd::Oracle { what } => dispatch_oracle(what),
        Cmd::Verify { what } => dispatch_verify(what, global),
    }
}

fn dispatch_gen(cmd: &GenCmd, global: &GlobalOpts) -> Result<i32> {
    match cmd {
        GenCmd::Mycielski { input, output } => {
            let g = dimacs::read_col_path(input)?;
            let (m, layout) = mycielskian(&g);
            dimacs::write_col_path(output, &m)?;
            eprintln!(
                "wrote {} ({} vertices, apex index {})",
                output.display(),
                m.order(),
                layout.apex()
            );
            Ok(EXIT_PASS)
        }
        GenCmd::Tower { r, output } => {
            let tower = mycielski_tower(*r)?;
            dimacs::write_col_path(output, &tower.graph)?;
            eprintln!(
                "wrote {} ({} vertices, {} edges)",
                output.display(),
                tower.graph.order(),
                tower.graph.edge_count()
            );
            write_claims(
                output,
                &ProviderClaims {
                    r: 2,
                    m: tower.level,
                    claimed_omega: 2,
                    claimed_chi_lb: tower.level,
                    source: format!("mycielski tower, level {}", tower.level),
                },
            )?;
            Ok(EXIT_PASS)
        }
        GenCmd::Block { r, m, core, output } => {
            let provider = match core {
                Some(path) => provider_for(*r, &[(*m, path.clone())])?,
                None => provider_for(*r, &[])?,
            };
            let block = build_block(*r, *m, &provider, &solve_options(global)?)?;
            dimacs::write_col_path(output, &block.graph)?;
            eprintln!(
                "wrote {} ({} core + {} tag vertices)",
                output.display(),
                block.core.len(),
                block.tag.len()
            );
            write_claims(
                output,
                &ProviderClaims {
                    r: *r,
                    m: *m,
                    claimed_omega: block.spec.claimed_omega,
                    claimed_chi_lb: block.spec.claimed_chi_lb.max(*r),
                    source: format!("block (core: {})", block.spec.provider),
                },
            )?;
            Ok(EXIT_PASS)
        }
    }
}

fn dispatch_solve(cmd: &SolveCmd, global: &GlobalOpts) -> Result<i32> {
    let opts = solve_options(global)?;
    match cmd {
        SolveCmd::Chi { file } => {
            let g = dimacs::read_col_path(file)?;
            let res = chromatic_number(&g, &opts);
            print!(
                "{}",
                certificate_to_string(&Certificate::Chi(res.coloring.clone()))
            );
            if res.is_exact() {
                eprintln!(
                    "chi = {} (exact; {} nodes, {:.3}s)",
                    res.value,
                    res.stats.nodes,
                    res.stats.elapsed.as_secs_f64()
                );
                Ok(EXIT_PASS)
            } else {
                eprintln!(
                    "budget exhausted: {} <= chi <= {} ({} nodes)",
                    res.lower_bound, res.value, res.stats.nodes
                );
                Ok(EXIT_INCONCLUSIVE)
            }
        }
        SolveCmd::Omega { file } => {
            let g = dimacs::read_col_path(file)?;
            let res = clique_number(&g, &opts);
            print!(
                "{}",
                certificate_to_string(&Certificate::Omega(res.clique.clone()))
            );
            if res.is_exact() {
                eprintln!(
                    "omega = {} (exact; {} nodes, {:.3}s)",
                    res.value,
                    res.stats.nodes,
                    res.stats.elapsed.as_secs_f64()
                );
                Ok(EXIT_PASS)
            } else {
                eprintln!("budget exhausted: omega >= {}", res.value);
                Ok(EXIT_INCONCLUSIVE)
            }
        }
        SolveCmd::ChiN { file, n } => {
            let g = dimacs::read_col_path(file)?;
            let res = chi_restricted(&g, *n, &opts)?;
            println!("chi-n {} {}", res.n, res.value);
            for v in res.witness.iter() {
                println!("member {v}");
            }
            if res.is_exact() {
                eprintln!(
                    "chi^({}) = {} (exact; witness of {} vertices)",
                    res.n,
                    res.value,
                    res.witness.len()
                );
                Ok(EXIT_PASS)
            } else {
                eprintln!("budget exhausted: chi^({}) >= {}", res.n, res.value);
                Ok(EXIT_INCONCLUSIVE)
            }
        }
        SolveCmd::KColor { file, k } => {
            let g = dimacs::read_col_path(file)?;
            let (outcome, stats) = k_colorable(&g, *k, &opts);
            match outcome {
                KColorOutcome::Colorable(c) => {
                    print!("{}", certificate_to_string(&Certificate::Chi(c)));
                    eprintln!("colorable with {k} colors ({} nodes)", stats.nodes);
                    Ok(EXIT_PASS)
                }
                KColorOutcome::Uncolorable => {
                    println!("uncolorable {k}");
                    eprintln!("no {k}-coloring exists ({} nodes)", stats.nodes);
                    Ok(EXIT_PASS)
                }
                KColorOutcome::Inconclusive => {
                    println!("unknown {k}");
                    eprintln!("budget exhausted before the search finished");
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
    }
}

fn dispatch_oracle(cmd: &OracleCmd) -> Result<i32> {
    match cmd {
        OracleCmd::Chi { file } => {
            let g = dimacs::read_col_path(file)?;
            println!("chi {}", brute_force_chi(&g)?);
            Ok(EXIT_PASS)
        }
        OracleCmd::Omega { file } => {
            let g = dimacs::read_col_path(file)?;
            println!("omega {}", brute_force_omega(&g)?);
            Ok(EXIT_PASS)
        }
    }
}

fn dispatch_verify(cmd: &VerifyCmd, global: &GlobalOpts) -> Result<i32> {
    let opts = check_options(global)?;
    let seed = global.seed;
    match cmd {
        VerifyCmd::MycielskiLemma { file } => {
            let g = dimacs::read_col_path(file)?;
            let report = check_mycielski_lemma(&g, &opts)?;
            let summary = Summary::from_checks(vec![report], seed);
            Ok(emit(&summary, global.format))
        }
        VerifyCmd::Block { r, m, core } => {
            let provider = match core {
                Some(path) => provider_for(*r, &[(*m, path.clone())])?,
                None => provider_for(*r, &[])?,
            };
            let block = build_block(*r, *m, &provider, &opts.solve)?;
            let report = check_block_observation(&block, &opts);
            let summary = Summary::from_checks(vec![report], seed);
            Ok(emit(&summary, global.format))
        }
        VerifyCmd::Goodness {
            r,
            m,
            strategy,
            limit,
            core,
        } => {
            let provider = provider_for(*r, core)?;
            let report = check_goodness(*r, &m.0, &provider, (*strategy).into(), *limit, seed, &opts)?;
            let summary = Summary::from_checks(vec![report.to_check_report()], seed);
            Ok(emit(&summary, global.format))
        }
        VerifyCmd::Nonpoly { r, poly, core } => {
            let provider = provider_for(*r, core)?;
            let p = Polynomial::parse(poly)?;
            let (_, report) = find_nonpoly_witness(*r, &p, &provider, &opts)?;
            let summary = Summary::from_checks(vec![report.to_check_report()], seed);
            Ok(emit(&summary, global.format))
        }
        VerifyCmd::Pollyanna {
            phi,
            r,
            m,
            strategy,
            limit,
            core,
        } => {
            let table = BoundingTable::parse(phi)?;
            let summary = match (r, m) {
                (Some(r), Some(m)) => {
                    let provider = provider_for(*r, core)?;
                    let mut blocks = Vec::new();
                    for &mi in &m.0 {
                        blocks.push(build_block(*r, mi, &provider, &opts.solve)?);
                    }
                    let report = check_pollyanna(
                        &table,
                        &blocks,
                        (*strategy).into(),
                        *limit,
                        seed,
                        &opts,
                    )?;
                    Summary::from_checks(vec![report.to_check_report()], seed)
                }
                _ => {
                    let constants = pollyanna_bound(&table)?;
                    let mut report = CheckReport::new(
                        "pollyanna-constants",
                        "the table pivot R = max(2, phi(2)) and cap M = max{phi(s) : s <= R}",
                        serde_json::json!({ "phi": table.values() }),
                    );
                    report.values.push(ValueRecord::exact("r_f", constants.r_f));
                    report.values.push(ValueRecord::exact("m_f", constants.m_f));
                    Summary::from_checks(vec![report], seed)
                }
            };
            Ok(emit(&summary, global.format))
        }
        VerifyCmd::All {
            r,
            m,
            poly,
            strategy,
            limit,
            core,
        } => {
            let provider = provider_for(*r, core)?;
            let p = poly.as_deref().map(Polynomial::parse).transpose()?;
            let slice = ClassSpec {
                slices: vec![ClassSlice {
                    r: *r,
                    ms: m.0.clone(),
                    provider,
                }],
            };
            let summary = verify_all(&slice, p.as_ref(), (*strategy).into(), *limit, seed, &opts);
            Ok(emit(&summary, global.format))
        }
        VerifyCmd::Cert { graph, cert } => {
            let g = dimacs::read_col_path(graph)?;
            let parsed = read_certificate(std::io::BufReader::new(std::fs::File::open(cert)?))?;
            match check_certificate(&g, &parsed) {
                Ok(value) => {
                    let kind = match parsed {
                        Certificate::Chi(_) => "chi",
                        Certificate::Omega(_) => "omega",
                    };
                    println!("valid {kind} {value}");
                    Ok(EXIT_PASS)
                }
                Err(e) => {
                    eprintln!("invalid certificate: {e}");
                    Ok(EXIT_VIOLATED)
                }
            }
        }
    }
}
