use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qnbc_core::census::{self, CensusSpec};
use qnbc_core::constructions;
use qnbc_core::families;
use qnbc_core::products::{self, JoinMode, LexMode, ProductKind};
use qnbc_core::solver::{self, SolveOptions, VariantMode, Verdict};
use qnbc_core::theorems::{self, Mutation, VerifyConfig};
use qnbc_core::{checker, Coloring, Graph};

const EXIT_OK: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

/// Quasi neighborhood balanced colorings: check, search, build, transform.
#[derive(Parser)]
#[command(name = "qnbc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Kv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Kmn,
    Path,
    Gp,
    Bistar,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    FlipSign,
    BreakPath,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family graph and its certified coloring.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated parameters, e.g. `8` or `5,2`.
        #[arg(long)]
        params: String,
        /// Output prefix; writes <prefix>.graph and <prefix>.coloring.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a coloring.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        /// Also write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide whether a coloring of the requested variant exists.
    Solve {
        graph: PathBuf,
        #[arg(long, default_value = "any")]
        variant: String,
        /// Enumerate up to this many colorings instead of one witness.
        #[arg(long)]
        all: Option<usize>,
        /// Give up after this many search nodes (exit 3).
        #[arg(long)]
        budget: Option<u64>,
        /// Write the witness coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Build a product graph and optionally lift colorings onto it.
    Product {
        #[arg(long)]
        kind: String,
        /// lex: i|ii; join: a|b|c|positive|negative|uniform; others: auto.
        #[arg(long)]
        lift: Option<String>,
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        g_col: Option<PathBuf>,
        #[arg(long)]
        h_col: Option<PathBuf>,
        #[arg(long, default_value = "product")]
        out: PathBuf,
    },
    /// Embed a graph as an induced subgraph of a QNBC graph.
    Embed {
        graph: PathBuf,
        #[arg(long, default_value = "embed")]
        out: PathBuf,
    },
    /// Turn an NBC coloring into a QNBC instance with one extra vertex.
    Reduce {
        graph: PathBuf,
        coloring: PathBuf,
        /// Red-blue edge `u,v` (1-indexed); defaults to the least one.
        #[arg(long)]
        edge: Option<String>,
        #[arg(long, default_value = "reduce")]
        out: PathBuf,
    },
    /// Satisfiability table over labeled graphs.
    Census {
        /// Exhaustive sweep of every labeled graph with n <= max-n (max 6).
        #[arg(long, conflicts_with = "sample")]
        max_n: Option<usize>,
        /// Random sample `n,count,p`; requires --seed.
        #[arg(long, requires = "seed")]
        sample: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated variants.
        #[arg(long, default_value = "nbc,any,positive,negative,uniform")]
        modes: String,
        /// Print per-n satisfiable counts instead of every row.
        #[arg(long)]
        summary: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Run every theorem check and report pass/fail.
    Verify {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        mutation: Option<MutationArg>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_coloring(path: &Path) -> Result<Coloring> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Coloring::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn parse_numbers(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .with_context(|| format!("invalid number `{p}`"))
        })
        .collect()
}

fn workers() -> usize {
    std::env::var("QNBC_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1)
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Gen {
            family,
            params,
            out,
        } => gen(family, &params, out),
        Command::Check {
            graph,
            coloring,
            format,
            dot,
        } => check(&graph, &coloring, format, dot.as_deref()),
        Command::Solve {
            graph,
            variant,
            all,
            budget,
            out,
            format,
        } => solve(&graph, &variant, all, budget, out.as_deref(), format),
        Command::Product {
            kind,
            lift,
            g,
            h,
            g_col,
            h_col,
            out,
        } => product(
            &kind,
            lift.as_deref(),
            &g,
            &h,
            g_col.as_deref(),
            h_col.as_deref(),
            &out,
        ),
        Command::Embed { graph, out } => embed(&graph, &out),
        Command::Reduce {
            graph,
            coloring,
            edge,
            out,
        } => reduce(&graph, &coloring, edge.as_deref(), &out),
        Command::Census {
            max_n,
            sample,
            seed,
            modes,
            summary,
            format,
        } => run_census(max_n, sample.as_deref(), seed, &modes, summary, format),
        Command::Verify {
            seed,
            mutation,
            format,
        } => verify(seed, mutation, format),
    }
}

fn gen(family: Family, params: &str, out: Option<PathBuf>) -> Result<u8> {
    let p = parse_numbers(params)?;
    let arity = match family {
        Family::Complete | Family::Path => 1,
        Family::Kmn | Family::Gp | Family::Bistar => 2,
    };
    if p.len() != arity {
        bail!("this family takes {arity} parameter(s), got {}", p.len());
    }
    let (fr, name) = match family {
        Family::Complete => (families::complete(p[0])?, "complete"),
        Family::Kmn => (families::complete_bipartite(p[0], p[1])?, "kmn"),
        Family::Path => (families::path(p[0])?, "path"),
        Family::Gp => (families::generalized_petersen(p[0], p[1])?, "gp"),
        Family::Bistar => (families::bistar(p[0], p[1])?, "bistar"),
    };
    let prefix = out.unwrap_or_else(|| {
        let joined: Vec<String> = p.iter().map(ToString::to_string).collect();
        PathBuf::from(format!("{name}_{}", joined.join("_")))
    });
    let graph_path = with_ext(&prefix, "graph");
    write(&graph_path, &fr.graph.serialize())?;
    println!("graph={}", graph_path.display());
    if let Some(c) = &fr.coloring {
        let col_path = with_ext(&prefix, "coloring");
        write(&col_path, &c.serialize())?;
        println!("coloring={}", col_path.display());
    }
    println!("claim={}", fr.claim);
    Ok(EXIT_OK)
}

fn check(graph: &Path, coloring: &Path, format: Format, dot: Option<&Path>) -> Result<u8> {
    let g = read_graph(graph)?;
    let c = read_coloring(coloring)?;
    let class = checker::classify(&g, &c)?;
    let imb = checker::imbalances(&g, &c)?;
    if let Some(path) = dot {
        write(path, &g.to_dot(Some(&c)))?;
    }
    let counting = class
        .is_qnbc()
        .then(|| checker::counting_summary(&g, &c))
        .transpose()?;
    let congruence = class
        .is_qnbc()
        .then(|| checker::check_congruence(&g, &c))
        .transpose()?;
    match format {
        Format::Json => {
            let doc = json!({
                "kind": class.kind.to_string(),
                "positive": class.positive,
                "negative": class.negative,
                "uniform_dominant": class.uniform_dominant.map(|d| d.to_string()),
                "imbalances": imb,
                "counting": counting.map(|s| json!({
                    "r": s.r, "s": s.s, "cross_edges": s.cross_edges, "k": s.k,
                    "edges": s.edge_count, "twice_edges_mod4": s.twice_edges_mod4,
                    "identity_holds": s.identity_holds(),
                    "flipped_identity_holds": s.flipped_identity_holds(),
                })),
                "congruence": congruence,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Kv | Format::Human => {
            let mut out = String::new();
            let kv = matches!(format, Format::Kv);
            let _ = writeln!(out, "kind={}", class.kind);
            if class.is_qnbc() {
                let _ = writeln!(out, "positive={}", class.positive);
                let _ = writeln!(out, "negative={}", class.negative);
                let _ = writeln!(
                    out,
                    "uniform={}",
                    class
                        .uniform_dominant
                        .map_or("none".to_string(), |d| d.to_string())
                );
            }
            if kv {
                let list: Vec<String> = imb.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "imbalances={}", list.join(","));
            } else {
                let _ = writeln!(out, "vertex color imbalance");
                for v in g.vertices() {
                    let _ = writeln!(out, "{:>6} {:>5} {:>9}", v + 1, c[v].as_char(), imb[v]);
                }
            }
            if let Some(s) = counting {
                let _ = writeln!(
                    out,
                    "r={}\ns={}\ncross_edges={}\nk={}",
                    s.r, s.s, s.cross_edges, s.k
                );
                let _ = writeln!(out, "twice_edges_mod4={}", s.twice_edges_mod4);
                let _ = writeln!(
                    out,
                    "identity_4cross_eq_2E_plus_r_minus_s={} predicted_cross={}",
                    s.identity_holds(),
                    s.predicted_cross_edges()
                );
                let _ = writeln!(
                    out,
                    "flipped_sign_2E_minus_r_plus_s={} predicted_cross={}",
                    s.flipped_identity_holds(),
                    s.flipped_predicted_cross_edges()
                );
            }
            if let Some(r) = congruence {
                let _ = writeln!(out, "k_mod4={}\nneg_k_mod4={}", r.k_mod4, r.neg_k_mod4);
                let show = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
                let _ = writeln!(out, "congruence_positive={}", show(r.positive_holds));
                let _ = writeln!(out, "congruence_negative={}", show(r.negative_holds));
                if !kv {
                    let _ = writeln!(out, "note: {}", checker::CongruenceReport::NOTE);
                }
            }
            print!("{out}");
        }
    }
    Ok(if class.kind == checker::Kind::Invalid {
        EXIT_NO
    } else {
        EXIT_OK
    })
}

fn solve(
    graph: &Path,
    variant: &str,
    all: Option<usize>,
    budget: Option<u64>,
    out: Option<&Path>,
    format: Format,
) -> Result<u8> {
    let g = read_graph(graph)?;
    let mode: VariantMode = variant.parse()?;
    if let Some(limit) = all {
        if limit == 0 {
            bail!("--all needs a positive limit");
        }
        let list = solver::enumerate(&g, mode, limit);
        match format {
            Format::Json => {
                let strs: Vec<String> = list.iter().map(ToString::to_string).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "colorings": strs }))?
                );
            }
            _ => {
                println!("count={}", list.len());
                for c in &list {
                    println!("{c}");
                }
            }
        }
        return Ok(if list.is_empty() { EXIT_NO } else { EXIT_OK });
    }
    let outcome = solver::solve_with(&g, mode, &SolveOptions { budget });
    if let (Some(path), Some(w)) = (out, &outcome.witness) {
        write(path, &w.serialize())?;
    }
    let verdict = match outcome.verdict {
        Verdict::Satisfiable => "satisfiable",
        Verdict::Unsatisfiable => "unsatisfiable",
        Verdict::Unknown => "unknown",
    };
    match format {
        Format::Json => {
            let doc = json!({
                "variant": mode.name(),
                "verdict": verdict,
                "witness": outcome.witness.as_ref().map(ToString::to_string),
                "nodes_explored": outcome.nodes_explored,
                "reason": outcome.prefilter.map(|p| p.to_string()),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        _ => {
            println!("variant={mode}");
            println!("verdict={verdict}");
            println!("nodes={}", outcome.nodes_explored);
            if let Some(p) = outcome.prefilter {
                println!("reason={p}");
            }
            if let Some(w) = &outcome.witness {
                println!("witness={w}");
            }
        }
    }
    Ok(match outcome.verdict {
        Verdict::Satisfiable => EXIT_OK,
        Verdict::Unsatisfiable => EXIT_NO,
        Verdict::Unknown => EXIT_UNKNOWN,
    })
}

fn product(
    kind: &str,
    lift: Option<&str>,
    g_path: &Path,
    h_path: &Path,
    g_col: Option<&Path>,
    h_col: Option<&Path>,
    out: &Path,
) -> Result<u8> {
    let kind: ProductKind = kind.parse()?;
    let g = read_graph(g_path)?;
    let h = read_graph(h_path)?;
    let Some(lift) = lift else {
        let pg = products::product_graph(kind, &g, &h)?;
        let path = with_ext(out, "graph");
        write(&path, &pg.serialize())?;
        println!("graph={}", path.display());
        return Ok(EXIT_OK);
    };
    let g_col = g_col.map(read_coloring).transpose()?;
    let h_col = h_col
        .map(read_coloring)
        .transpose()?
        .context("--h-col is required for a lift")?;
    let need_g = || g_col.as_ref().context("--g-col is required for this lift");
    let lifted = match kind {
        ProductKind::Lexicographic => {
            let mode: LexMode = lift.parse()?;
            products::lift_lexicographic(&g, g_col.as_ref(), &h, &h_col, mode)?
        }
        ProductKind::Join => {
            let mode: JoinMode = lift.parse()?;
            products::lift_join(&g, need_g()?, &h, &h_col, mode)?
        }
        other => {
            if lift != "auto" {
                bail!("{other} lifts take `--lift auto`");
            }
            match other {
                ProductKind::Direct => products::lift_direct(&g, need_g()?, &h, &h_col)?,
                ProductKind::Cartesian => products::lift_cartesian(&g, need_g()?, &h, &h_col)?,
                _ => products::lift_strong(&g, need_g()?, &h, &h_col)?,
            }
        }
    };
    let graph_path = with_ext(out, "graph");
    let col_path = with_ext(out, "coloring");
    write(&graph_path, &lifted.graph.serialize())?;
    write(&col_path, &lifted.coloring.serialize())?;
    let class = checker::classify(&lifted.graph, &lifted.coloring)?;
    println!("graph={}", graph_path.display());
    println!("coloring={}", col_path.display());
    println!("promise={}", lifted.promise);
    println!("classified={class}");
    println!("promise_holds={}", lifted.promise.holds(&class));
    Ok(if lifted.promise.holds(&class) {
        EXIT_OK
    } else {
        EXIT_NO
    })
}

fn embed(graph: &Path, out: &Path) -> Result<u8> {
    let g = read_graph(graph)?;
    let e = constructions::heredity_embed(&g)?;
    let induced = constructions::verify_induced(&g, &e.host, &e.embedding)?;
    let class = checker::classify(&e.host, &e.host_coloring)?;
    write(&with_ext(out, "graph"), &e.host.serialize())?;
    write(&with_ext(out, "coloring"), &e.host_coloring.serialize())?;
    write(&with_ext(out, "map"), &e.embedding.to_table())?;
    println!("host={}", with_ext(out, "graph").display());
    println!("classified={class}");
    println!("induced={induced}");
    print!("{}", e.embedding.to_table());
    Ok(EXIT_OK)
}

fn reduce(graph: &Path, coloring: &Path, edge: Option<&str>, out: &Path) -> Result<u8> {
    let g = read_graph(graph)?;
    let c = read_coloring(coloring)?;
    let edge = edge
        .map(|s| -> Result<(usize, usize)> {
            let p = parse_numbers(s)?;
            match p[..] {
                [u, v] if u >= 1 && v >= 1 => Ok((u - 1, v - 1)),
                _ => bail!("--edge takes two 1-indexed vertices `u,v`"),
            }
        })
        .transpose()?;
    let gr = constructions::nbc_to_qnbc_gadget(&g, &c, edge)?;
    write(&with_ext(out, "graph"), &gr.gprime.serialize())?;
    write(&with_ext(out, "coloring"), &gr.gprime_coloring.serialize())?;
    let class = checker::classify(&gr.gprime, &gr.gprime_coloring)?;
    println!("graph={}", with_ext(out, "graph").display());
    println!("coloring={}", with_ext(out, "coloring").display());
    println!("added_vertex={}", gr.added_vertex + 1);
    println!(
        "anchor_edge={},{}",
        gr.anchor_edge.0 + 1,
        gr.anchor_edge.1 + 1
    );
    println!("classified={class}");
    Ok(EXIT_OK)
}

fn run_census(
    max_n: Option<usize>,
    sample: Option<&str>,
    seed: Option<u64>,
    modes: &str,
    summary: bool,
    format: Format,
) -> Result<u8> {
    let modes: Vec<VariantMode> = modes
        .split(',')
        .map(|m| m.trim().parse())
        .collect::<Result<_, _>>()?;
    let spec = match (max_n, sample) {
        (Some(max_n), None) => CensusSpec::Exhaustive { max_n },
        (None, Some(s)) => {
            let parts: Vec<&str> = s.split(',').collect();
            let [n, count, p] = parts[..] else {
                bail!("--sample takes `n,count,p`");
            };
            CensusSpec::Sample {
                n: n.trim().parse().context("sample n")?,
                count: count.trim().parse().context("sample count")?,
                p: p.trim().parse().context("sample p")?,
                seed: seed.context("--sample requires --seed")?,
            }
        }
        _ => bail!("give exactly one of --max-n or --sample"),
    };
    let rows = census::census(&spec, &modes, workers())?;
    let consistent = rows.iter().all(census::CensusRow::consistent);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
        _ if summary => print!("{}", census::summarize(&rows, &modes)),
        _ => print!("{}", census::render_tsv(&rows, &modes)),
    }
    if !consistent {
        eprintln!("warning: inconsistent verdicts in census rows");
        return Ok(EXIT_NO);
    }
    Ok(EXIT_OK)
}

fn verify(seed: Option<u64>, mutation: Option<MutationArg>, format: Format) -> Result<u8> {
    let cfg = VerifyConfig {
        seed: seed.unwrap_or(theorems::DEFAULT_SEED),
        mutation: mutation.map(|m| match m {
            MutationArg::FlipSign => Mutation::FlipCountingSign,
            MutationArg::BreakPath => Mutation::BreakPathCase2,
        }),
    };
    let report = theorems::verify(&cfg);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        _ => print!("{}", report.render()),
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_NO })
}
