use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use super::generators::{
    generate_bounded_degeneracy, generate_double_subdivision, generate_subdivision, gnp,
    vertices_for_edges,
};
use super::report::{millis, RunReport};
use crate::counting::{
    brute_force_hom, brute_force_sub, count_homomorphisms, count_homomorphisms_with_stats,
    count_subgraphs, count_subgraphs_with_stats, CountOptions,
};
use crate::error::{Error, Result};
use crate::fraternal::{enumerate_pattern_extensions, DEFAULT_EXTENSION_CAP};
use crate::graph::{load_edge_list, write_edge_list, UndirectedGraph};
use crate::hub::{find_width1_decomposition, hubset, unique_reachability_graph};
use crate::pattern::{licl, min_extension_depth, spasm, LICL_LIMIT};
use crate::product::label_pattern;

#[derive(Debug, Parser)]
#[command(name = "sparsecount", version, about = "Homomorphism and subgraph counting on sparse graphs")]
struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Worker threads for the per-extension counts (0 = all cores).
    #[arg(long, env = "SPARSECOUNT_THREADS", default_value_t = 1)]
    threads: usize,
    /// Use brute force when an extension has no width-1 decomposition.
    #[arg(long)]
    exact_fallback: bool,
    /// Upper bound on the number of pattern extensions.
    #[arg(long, default_value_t = DEFAULT_EXTENSION_CAP)]
    extension_cap: usize,
}

impl RunArgs {
    fn options(&self, depth: Option<u32>) -> CountOptions {
        CountOptions {
            depth,
            threads: self.threads,
            exact_fallback: self.exact_fallback,
            extension_cap: self.extension_cap,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count homomorphisms from PATTERN into HOST.
    CountHom {
        host: PathBuf,
        pattern: PathBuf,
        /// Extension depth (defaults to the pattern's minimum).
        #[arg(long)]
        t: Option<u32>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Count copies of PATTERN in HOST.
    CountSub {
        host: PathBuf,
        pattern: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Longest induced cycle, spasm, extensions and their hub trees.
    Analyze {
        pattern: PathBuf,
        #[arg(long)]
        t: Option<u32>,
        /// Only print the extension count, not each extension's witness.
        #[arg(long)]
        summary: bool,
    },
    /// Generate an instance as an edge list.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Compare the pipeline against brute force on one instance.
    Verify {
        host: PathBuf,
        pattern: PathBuf,
        /// Check subgraph counts instead of homomorphism counts.
        #[arg(long)]
        sub: bool,
        #[arg(long)]
        t: Option<u32>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Time homomorphism counting on bounded-degeneracy hosts of growing size.
    Bench {
        pattern: PathBuf,
        /// Host edge counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Degeneracy bound of the generated hosts.
        #[arg(long, default_value_t = 3, value_parser = positive)]
        c: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long)]
        t: Option<u32>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Replace every edge by a path with T internal vertices.
    Subdiv {
        input: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replace every edge by two paths with T and T+1 internal vertices.
    Subdiv2 {
        input: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random graph of degeneracy at most C.
    Degen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = positive)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Erdős–Rényi G(n, p).
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = probability)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn probability(s: &str) -> std::result::Result<f64, String> {
    let p: f64 = s.parse().map_err(|e: std::num::ParseFloatError| e.to_string())?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is not in [0, 1]"))
    }
}

/// Runs the command line and returns the process exit code: 0 on success, 1
/// when `verify` finds a mismatch, 2 on usage or input errors, 3 when an
/// extension has no width-1 decomposition.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::NoWidth1Decomposition { extension, .. } => {
                    eprintln!("offending extension:\n{extension}");
                    3
                }
                Error::NonIntegralCount(_) => 1,
                _ => 2,
            }
        }
    }
}

fn load(path: &Path) -> Result<UndirectedGraph> {
    Ok(load_edge_list(path)?.graph)
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::CountHom {
            host,
            pattern,
            t,
            run,
        } => {
            let (g, h) = (load(host)?, load(pattern)?);
            let clock = Instant::now();
            let (count, stats) = count_homomorphisms_with_stats(&g, &h, &run.options(*t))?;
            emit(cli.json, &RunReport::new(&count, &stats, &g, clock.elapsed()));
        }
        Command::CountSub { host, pattern, run } => {
            let (g, h) = (load(host)?, load(pattern)?);
            let clock = Instant::now();
            let (count, size, stats) = count_subgraphs_with_stats(&g, &h, &run.options(None))?;
            let mut report = RunReport::new(&count, &stats, &g, clock.elapsed());
            report.spasm_size = Some(size);
            emit(cli.json, &report);
        }
        Command::Analyze { pattern, t, summary } => analyze(&load(pattern)?, *t, *summary, cli.json)?,
        Command::Gen(g) => generate(g)?,
        Command::Verify {
            host,
            pattern,
            sub,
            t,
            run,
        } => return verify(&load(host)?, &load(pattern)?, *sub, &run.options(*t), cli.json),
        Command::Bench {
            pattern,
            sizes,
            c,
            seed,
            repeats,
            t,
            run,
        } => bench(&load(pattern)?, sizes, *c, *seed, (*repeats).max(1), &run.options(*t), cli.json)?,
    }
    Ok(0)
}

fn emit(json: bool, report: &RunReport) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

fn edge_string(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn analyze(h: &UndirectedGraph, t: Option<u32>, summary: bool, json: bool) -> Result<()> {
    if h.n() > LICL_LIMIT {
        return Err(Error::PatternTooLarge {
            n: h.n(),
            limit: LICL_LIMIT,
        });
    }
    let l = licl(h);
    let t_min = min_extension_depth(l);
    let depth = t.unwrap_or(t_min);
    let entries = spasm(h)?;
    let spasm_licl = entries.iter().map(|e| licl(&e.quotient)).max().unwrap_or(0);
    let members = enumerate_pattern_extensions(&label_pattern(h), depth, DEFAULT_EXTENSION_CAP)?;

    let spasm_json: Vec<Value> = entries
        .iter()
        .map(|e| {
            json!({
                "coefficient": e.coefficient.to_string(),
                "n": e.quotient.n(),
                "m": e.quotient.m(),
                "edges": e.quotient.edge_list(),
            })
        })
        .collect();
    let mut failures = 0;
    let mut ext_json = Vec::new();
    for m in &members {
        let hubs = hubset(&m.graph);
        let tree = find_width1_decomposition(&m.graph);
        failures += usize::from(tree.is_none());
        if summary {
            continue;
        }
        let ur = unique_reachability_graph(&m.graph, &hubs);
        let arcs: Vec<(usize, usize, u32)> =
            m.graph.arcs().map(|a| (a.tail, a.head, a.weight)).collect();
        ext_json.push(json!({
            "arcs": arcs,
            "hubs": hubs,
            "ur_edges": ur.edges,
            "hub_tree": tree.as_ref().map(|t| json!({
                "root": t.bags[t.root],
                "edges": t.edges(),
            })),
        }));
    }

    if json {
        let out = json!({
            "n": h.n(),
            "m": h.m(),
            "licl": l,
            "t_min": t_min,
            "t": depth,
            "spasm_licl": spasm_licl,
            "spasm": spasm_json,
            "n_extensions": members.len(),
            "width1_failures": failures,
            "extensions": if summary { Value::Null } else { Value::Array(ext_json) },
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        return Ok(());
    }
    println!("pattern: n={} m={}", h.n(), h.m());
    println!("licl: {l}");
    println!("t_min: {t_min}");
    println!("spasm_licl: {spasm_licl}");
    println!("spasm: {} quotients", entries.len());
    for e in &entries {
        println!(
            "  {:>8}  n={} m={}  {}",
            e.coefficient.to_string(),
            e.quotient.n(),
            e.quotient.m(),
            edge_string(&e.quotient.edge_list())
        );
    }
    println!("extensions(t={depth}): {}", members.len());
    println!("width1_failures: {failures}");
    for (i, x) in ext_json.iter().enumerate() {
        let arcs: Vec<String> = x["arcs"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|a| format!("{}>{}:{}", a[0], a[1], a[2]))
            .collect();
        println!("extension {i}: {}", arcs.join(" "));
        println!("  hubs: {}", x["hubs"]);
        println!("  ur_edges: {}", x["ur_edges"]);
        match x["hub_tree"].as_object() {
            Some(t) => println!("  hub_tree: root {} edges {}", t["root"], t["edges"]),
            None => println!("  hub_tree: none"),
        }
    }
    Ok(())
}

fn generate(cmd: &GenCommand) -> Result<()> {
    let (g, output) = match cmd {
        GenCommand::Subdiv { input, t, output } => (generate_subdivision(&load(input)?, *t)?, output),
        GenCommand::Subdiv2 { input, t, output } => {
            (generate_double_subdivision(&load(input)?, *t)?, output)
        }
        GenCommand::Degen { n, c, seed, output } => (generate_bounded_degeneracy(*n, *c, *seed), output),
        GenCommand::Gnp { n, p, seed, output } => (gnp(*n, *p, *seed), output),
    };
    match output {
        Some(path) => write_edge_list(&g, BufWriter::new(File::create(path)?)),
        None => write_edge_list(&g, BufWriter::new(io::stdout().lock())),
    }
}

fn verify(g: &UndirectedGraph, h: &UndirectedGraph, sub: bool, opts: &CountOptions, json: bool) -> Result<i32> {
    let (fast, slow) = if sub {
        (count_subgraphs(g, h, opts)?, brute_force_sub(g, h)?)
    } else {
        (count_homomorphisms(g, h, opts)?, brute_force_hom(g, h)?)
    };
    let ok = fast == slow;
    if json {
        let out = json!({
            "kind": if sub { "sub" } else { "hom" },
            "pipeline": fast.to_string(),
            "brute_force": slow.to_string(),
            "match": ok,
        });
        println!("{out}");
    } else {
        println!(
            "{}: pipeline={fast} brute_force={slow} {}",
            if sub { "sub" } else { "hom" },
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    Ok(if ok { 0 } else { 1 })
}

fn bench(
    h: &UndirectedGraph,
    sizes: &[usize],
    c: usize,
    seed: u64,
    repeats: usize,
    opts: &CountOptions,
    json: bool,
) -> Result<()> {
    let mut rows = Vec::new();
    let mut prev: Option<(usize, Duration)> = None;
    for &m in sizes {
        let g = generate_bounded_degeneracy(vertices_for_edges(m, c), c, seed);
        let mut best = Duration::MAX;
        let mut count = None;
        for _ in 0..repeats {
            let clock = Instant::now();
            let x = count_homomorphisms(&g, h, opts)?;
            best = best.min(clock.elapsed());
            count = Some(x);
        }
        let ratio = prev.map(|(pm, pt)| (best.as_secs_f64() / pt.as_secs_f64(), g.m() as f64 / pm as f64));
        if !json {
            let r = ratio
                .map(|(tr, mr)| format!("  time x{tr:.2} for m x{mr:.2}"))
                .unwrap_or_default();
            println!("m={} n={} time_ms={:.1} count={}{r}", g.m(), g.n(), millis(best), count.as_ref().unwrap());
        }
        rows.push(json!({
            "m": g.m(),
            "n": g.n(),
            "time_ms": millis(best),
            "count": count.unwrap().to_string(),
            "time_ratio": ratio.map(|r| r.0),
            "size_ratio": ratio.map(|r| r.1),
        }));
        prev = Some((g.m(), best));
    }
    if json {
        let out = json!({ "c": c, "seed": seed, "repeats": repeats, "runs": rows });
        println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    }
    io::stdout().flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
