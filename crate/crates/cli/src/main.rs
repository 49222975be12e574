use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use ddmop_core::exact::{brute_force_gamma_x2, exact_gamma_x2, SolverReport};
use ddmop_core::generators::{GenSpec, InnerTriangulation};
use ddmop_core::graphfile::{read_graph, write_graph_with_comment};
use ddmop_core::peel::peel_double_domination;
use ddmop_core::rainbow::{degree_set_double_domination, dispatch_bound, rainbow_double_domination};
use ddmop_core::recognition::{internal_triangles, recognize_mop, recognize_two_tree};
use ddmop_core::report::{ReportRow, CSV_HEADER, DEFAULT_EXACT_CUTOFF};
use ddmop_core::{DominationResult, Error, Graph};

const EXIT_INVALID_INPUT: u8 = 1;
const EXIT_INVARIANT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "ddmop", version, about = "Double domination bounds for maximal outerplanar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    U,
    A,
    Fan,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Inner {
    Fan,
    Random,
}

impl From<Inner> for InnerTriangulation {
    fn from(i: Inner) -> Self {
        match i {
            Inner::Fan => InnerTriangulation::Fan,
            Inner::Random => InnerTriangulation::RandomBinary,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundMethod {
    Peel,
    Rainbow,
    Degree,
    Dispatch,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen {
        #[arg(long, value_enum, required_unless_present = "fan", conflicts_with = "fan")]
        family: Option<Family>,
        /// Shorthand for `--family fan --n N`.
        #[arg(long, value_name = "N")]
        fan: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Triangulation of H for family U.
        #[arg(long, value_enum, default_value = "fan")]
        inner: Inner,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recognize a graph file as MOP, 2-tree, or neither.
    Check { input: PathBuf },
    /// Compute a double dominating set with one of the bounded constructions.
    Bound {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "dispatch")]
        method: BoundMethod,
    },
    /// Compute the exact double domination number.
    Exact {
        input: PathBuf,
        /// Use subset enumeration instead of branch-and-bound.
        #[arg(long)]
        brute: bool,
        /// Branch-and-bound node limit.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Sweep a family and write one CSV row per instance.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        /// Range such as `2..6`, list `3,5,7`, or single value.
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        n: Option<String>,
        /// Number of seeds per size for random instances.
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        /// First seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "fan")]
        inner: Inner,
        /// Largest n for which the exact column is computed.
        #[arg(long, default_value_t = DEFAULT_EXACT_CUTOFF)]
        exact_cutoff: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> anyhow::Result<Vec<usize>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().with_context(|| format!("bad range start in {s:?}"))?;
        let hi: usize = hi.trim().trim_start_matches('=').parse().with_context(|| format!("bad range end in {s:?}"))?;
        if lo > hi {
            bail!("empty range {s:?}");
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|x| x.trim().parse().with_context(|| format!("bad value {x:?} in {s:?}")))
        .collect()
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> anyhow::Result<T> {
    v.with_context(|| format!("family {family} requires --{flag}"))
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(read_graph(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn summary(g: &Graph) -> anyhow::Result<String> {
    let emb = recognize_mop(g)?;
    let internal = internal_triangles(&emb, g)?.len();
    Ok(format!(
        "n={} m={} t={} striped={}",
        g.n(),
        g.edge_count(),
        g.degree_two_vertices().len(),
        internal == 0
    ))
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    family: Option<Family>,
    fan: Option<usize>,
    k: Option<usize>,
    q: Option<usize>,
    n: Option<usize>,
    seed: Option<u64>,
    inner: Inner,
    out: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let spec = match (fan, family) {
        (Some(n), _) => GenSpec::Fan { n },
        (None, Some(Family::Fan)) => GenSpec::Fan { n: need(n, "n", "fan")? },
        (None, Some(Family::U)) => GenSpec::FamilyU { k: need(k, "k", "u")?, inner: inner.into(), seed },
        (None, Some(Family::A)) => GenSpec::FamilyA { q: need(q, "q", "a")? },
        (None, Some(Family::Random)) => GenSpec::RandomMop { n: need(n, "n", "random")?, seed: seed.unwrap_or(0) },
        (None, None) => bail!("one of --family or --fan is required"),
    };
    let g = spec.generate()?;
    emit(out, &write_graph_with_comment(&g, Some(&spec.id())))?;
    let line = summary(&g)?;
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(input: &Path) -> anyhow::Result<ExitCode> {
    let g = load(input)?;
    match recognize_mop(&g) {
        Ok(emb) => {
            let internal = internal_triangles(&emb, &g)?.len();
            let striped = if internal == 0 { "striped" } else { "not striped" };
            println!(
                "MOP, {striped}, t={}, internal_triangles={internal}",
                g.degree_two_vertices().len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(reason) => {
            println!("{reason}");
            match recognize_two_tree(&g) {
                Ok(_) => println!("2-tree, t={}", g.degree_two_vertices().len()),
                Err(e) => println!("neither: {e}"),
            }
            Ok(ExitCode::from(EXIT_INVALID_INPUT))
        }
    }
}

fn cmd_bound(input: &Path, method: BoundMethod) -> anyhow::Result<ExitCode> {
    let g = load(input)?;
    let result: DominationResult = match method {
        BoundMethod::Peel => peel_double_domination(&g)?,
        BoundMethod::Rainbow => rainbow_double_domination(&g, &recognize_mop(&g)?)?,
        BoundMethod::Degree => degree_set_double_domination(&g)?,
        BoundMethod::Dispatch => dispatch_bound(&g)?,
    };
    let valid = g.is_double_dominating(&result.set)?;
    println!("method={} size={} bound={}", result.method, result.size(), result.claimed_bound.map_or("-".into(), |b| b.to_string()));
    println!("set={}", result.set);
    println!("valid={valid}");
    Ok(if valid { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INVARIANT) })
}

fn print_report(r: &SolverReport) {
    println!("optimum={}", r.optimum);
    println!("witness={}", r.witness);
    println!("nodes={}", r.nodes_explored);
    println!("time={:.3}ms", r.elapsed.as_secs_f64() * 1e3);
}

fn cmd_exact(input: &Path, brute: bool, budget: Option<u64>) -> anyhow::Result<ExitCode> {
    let g = load(input)?;
    let outcome = if brute { brute_force_gamma_x2(&g) } else { exact_gamma_x2(&g, budget) };
    match outcome {
        Ok(r) => {
            print_report(&r);
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::BudgetExceeded { budget, best, nodes }) => {
            println!("NON-OPTIMAL best={} size={} nodes={nodes} budget={budget}", best, best.len());
            Ok(ExitCode::from(EXIT_BUDGET))
        }
        Err(e) => Err(e.into()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    family: Family,
    k: Option<&str>,
    q: Option<&str>,
    n: Option<&str>,
    seeds: u64,
    seed: u64,
    inner: Inner,
    exact_cutoff: usize,
    budget: Option<u64>,
    out: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let specs: Vec<GenSpec> = match family {
        Family::U => parse_range(need(k, "k", "u")?)?
            .into_iter()
            .flat_map(|k| {
                (seed..seed + seeds.max(1)).map(move |s| GenSpec::FamilyU { k, inner: inner.into(), seed: Some(s) })
            })
            .collect(),
        Family::A => parse_range(need(q, "q", "a")?)?.into_iter().map(|q| GenSpec::FamilyA { q }).collect(),
        Family::Fan => parse_range(need(n, "n", "fan")?)?.into_iter().map(|n| GenSpec::Fan { n }).collect(),
        Family::Random => parse_range(need(n, "n", "random")?)?
            .into_iter()
            .flat_map(|n| (seed..seed + seeds).map(move |s| GenSpec::RandomMop { n, seed: s }))
            .collect(),
    };
    // Fan-triangulated family U does not depend on the seed.
    let mut specs = specs;
    specs.dedup_by_key(|s| s.id());

    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for spec in &specs {
        let g = spec.generate()?;
        let row = ReportRow::compute(spec.id(), &g, exact_cutoff, budget)?;
        csv.push_str(&row.to_string());
        csv.push('\n');
    }
    emit(out, &csv)?;
    if out.is_some() {
        println!("{} rows", specs.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen { family, fan, k, q, n, seed, inner, out } => {
            cmd_generate(family, fan, k, q, n, seed, inner, out.as_deref())
        }
        Command::Check { input } => cmd_check(&input),
        Command::Bound { input, method } => cmd_bound(&input, method),
        Command::Exact { input, brute, budget } => cmd_exact(&input, brute, budget),
        Command::Bench { family, k, q, n, seeds, seed, inner, exact_cutoff, budget, out } => cmd_bench(
            family,
            k.as_deref(),
            q.as_deref(),
            n.as_deref(),
            seeds,
            seed,
            inner,
            exact_cutoff,
            budget,
            out.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<Error>() {
                Some(Error::InvariantViolation(_)) => ExitCode::from(EXIT_INVARIANT),
                Some(Error::BudgetExceeded { .. }) => ExitCode::from(EXIT_BUDGET),
                _ => ExitCode::from(EXIT_INVALID_INPUT),
            }
        }
    }
}
