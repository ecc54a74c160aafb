//! Command-line front end; all real work lives in the library.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use matchcov::classify::{self, Check};
use matchcov::cuts;
use matchcov::dependence;
use matchcov::families::{self, MultipliedBase};
use matchcov::graph::MultiGraph;
use matchcov::io;
use matchcov::matching;
use matchcov::rgraph::{self, RGraphVerdict};

#[derive(Parser)]
#[command(
    name = "matchcov",
    version,
    about = "Perfect-matching structure toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matchings, equivalence classes, poset and solitary pattern of a graph.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// r-graph certificate or refusal witness.
    Rgraph {
        path: PathBuf,
        /// Also emit an r-edge-coloring when one exists.
        #[arg(long)]
        coloring: bool,
    },
    /// Recursive even-2-cut decomposition tree (JSON).
    Decompose {
        path: PathBuf,
        /// Write each leaf piece as an edge-list file into this directory.
        #[arg(long)]
        pieces_dir: Option<PathBuf>,
    },
    /// Emit a generated family member.
    Generate {
        #[command(subcommand)]
        family: GenerateCommand,
    },
    /// Full classification report.
    Classify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification check over a corpus; exits nonzero on violations.
    Verify {
        /// Check name (see --list) or one of its short codes.
        check: Option<String>,
        /// Directory of graph files forming the corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Exhaustive corpus: all connected R-regular multigraphs up to
        /// order N, written as "N R".
        #[arg(long, num_args = 2, value_names = ["N", "R"])]
        exhaustive: Option<Vec<usize>>,
        /// Shuffled re-runs for choice-independence checks.
        #[arg(long, default_value_t = 5)]
        shuffles: usize,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// One of the built-in named graphs.
    Named {
        name: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Base graph with its coloring classes multiplied.
    Multiplied {
        /// theta, k4, c6bar or c4.
        #[arg(long)]
        base: String,
        /// Comma-separated multipliers, one per color class.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        /// Maximum number of multipliers allowed to exceed one.
        #[arg(long, default_value_t = 3)]
        cap: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Staircase of a given even order and thickness.
    Staircase1 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// 3-staircase over ladders of orders a and b.
    Staircase3 {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Member of the sporadic pattern-(1,1,1) family (index 1..=5).
    FamilyS {
        #[arg(long)]
        index: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Member of the recursive cubic pattern-(2) family.
    FamilyD {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// First splice vertex; omit to take the smallest eligible one.
        #[arg(long)]
        v0: Option<usize>,
        /// Further splice vertices, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "")]
        steps: Vec<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Member of the half-order-class gluing family: a chain of bases glued
    /// left to right.
    FamilyL {
        /// Bases, comma separated: cN (two vertices, N parallel edges) or
        /// k4:K1:K2:K3 (uniform pair multiplicities).
        #[arg(long, value_delimiter = ',')]
        bases: Vec<String>,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct OutArg {
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    // Die quietly when a pipe reader stops early instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<MultiGraph, String> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    io::parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(g: &MultiGraph, out: &OutArg) -> Result<(), String> {
    let text = io::write_edgelist(g);
    match &out.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { path, json } => cmd_analyze(&path, json),
        Command::Rgraph { path, coloring } => cmd_rgraph(&path, coloring),
        Command::Decompose { path, pieces_dir } => cmd_decompose(&path, pieces_dir.as_deref()),
        Command::Generate { family } => cmd_generate(family),
        Command::Classify { path, json } => cmd_classify(&path, json),
        Command::Verify {
            check,
            corpus,
            exhaustive,
            shuffles,
            list,
            json,
        } => cmd_verify(check, corpus, exhaustive, shuffles, list, json),
    }
}

fn cmd_analyze(path: &Path, as_json: bool) -> Result<ExitCode, String> {
    let g = read_graph(path)?;
    let ms = matching::enumerate_pms(&g).map_err(|e| e.to_string())?;
    let analysis = dependence::analyze(&g).map_err(|e| e.to_string())?;
    if as_json {
        let value = json!({
            "order": g.order(),
            "size": g.size(),
            "pm_count": ms.pm_count(),
            "solitary_edges": analysis.solitary_edges(),
            "classes": analysis.classes,
            "minimal_classes": analysis.minimal,
            "removable_classes": analysis.removable,
            "solitary_classes": analysis.solitary,
            "hasse": analysis.hasse,
            "pattern": analysis.pattern.sizes(),
            "epsilon": analysis.epsilon,
            "epsilon_witness": analysis.epsilon_witness,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("order {}, size {}", g.order(), g.size());
        println!("perfect matchings: {}", ms.pm_count());
        println!("solitary edges: {:?}", analysis.solitary_edges());
        println!("equivalence classes ({}):", analysis.classes.len());
        for (i, c) in analysis.classes.iter().enumerate() {
            let edges: Vec<String> = c
                .iter()
                .map(|&e| {
                    let (u, v) = g.endpoints(e);
                    format!("{e}:{u}-{v}")
                })
                .collect();
            println!("  [{i}] {{{}}}", edges.join(", "));
        }
        println!("minimal classes: {:?}", analysis.minimal);
        println!("removable classes: {:?}", analysis.removable);
        println!("solitary classes: {:?}", analysis.solitary);
        // An arrow i -> j reads: class i depends on class j.
        println!("poset (Hasse arrows): {:?}", analysis.hasse);
        println!("solitary pattern: {}", analysis.pattern);
        println!(
            "epsilon: {} (class {})",
            analysis.epsilon, analysis.epsilon_witness
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rgraph(path: &Path, coloring: bool) -> Result<ExitCode, String> {
    let g = read_graph(path)?;
    match rgraph::certify_rgraph(&g) {
        RGraphVerdict::Certified(cert) => {
            println!(
                "certified: r = {}, min odd cut = {}, 3-edge-connected: {}",
                cert.r, cert.min_odd_cut, cert.is_3ec
            );
            if coloring {
                match rgraph::r_edge_coloring(&g, cert.r).map_err(|e| e.to_string())? {
                    Some(c) => {
                        for (i, class) in c.classes().iter().enumerate() {
                            println!("color {i}: {class:?}");
                        }
                    }
                    None => println!("no proper {}-edge-coloring exists", cert.r),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        RGraphVerdict::Refused(refusal) => {
            println!("refused: {refusal:?}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_decompose(path: &Path, pieces_dir: Option<&Path>) -> Result<ExitCode, String> {
    let g = read_graph(path)?;
    let tree = cuts::decompose_2cuts(&g).map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string_pretty(&tree.to_json()).unwrap());
    if let Some(dir) = pieces_dir {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        for (i, leaf) in tree.leaves().iter().enumerate() {
            let file = dir.join(format!("piece-{i:03}.txt"));
            std::fs::write(&file, io::write_edgelist(leaf))
                .map_err(|e| format!("{}: {e}", file.display()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(family: GenerateCommand) -> Result<ExitCode, String> {
    match family {
        GenerateCommand::Named { name, out } => {
            let g = families::named_fixtures()
                .into_iter()
                .find(|(n, _)| *n == name)
                .map(|(_, g)| g)
                .ok_or_else(|| {
                    let names: Vec<&str> =
                        families::named_fixtures().iter().map(|(n, _)| *n).collect();
                    format!("unknown name {name:?}; available: {}", names.join(", "))
                })?;
            emit(&g, &out)?;
        }
        GenerateCommand::Multiplied { base, k, cap, out } => {
            let base = match base.as_str() {
                "theta" => MultipliedBase::Theta,
                "k4" => MultipliedBase::K4,
                "c6bar" => MultipliedBase::C6bar,
                "c4" => MultipliedBase::C4,
                other => return Err(format!("unknown base {other:?}")),
            };
            let g = families::gen_multiplied(base, &k, cap).map_err(|e| e.to_string())?;
            emit(&g, &out)?;
        }
        GenerateCommand::Staircase1 { n, t, out } => {
            let g = families::gen_staircase1(n, t).map_err(|e| e.to_string())?;
            emit(&g, &out)?;
        }
        GenerateCommand::Staircase3 { a, b, t, out } => {
            let g = families::gen_staircase3(a, b, t).map_err(|e| e.to_string())?;
            emit(&g, &out)?;
        }
        GenerateCommand::FamilyS { index, out } => {
            let g = families::gen_family_s(index).map_err(|e| e.to_string())?;
            emit(&g, &out)?;
        }
        GenerateCommand::FamilyD {
            a,
            b,
            v0,
            steps,
            out,
        } => {
            let base = families::gen_staircase3(a, b, 1).map_err(|e| e.to_string())?;
            let v0 = match v0 {
                Some(v) => v,
                None => *families::family_d_base_vertices(&base)
                    .map_err(|e| e.to_string())?
                    .first()
                    .ok_or("no eligible splice vertex")?,
            };
            let trace = families::DTrace {
                ladder_a: a,
                ladder_b: b,
                base_vertex: v0,
                steps,
            };
            let g = families::gen_family_d(&trace).map_err(|e| e.to_string())?;
            emit(&g, &out)?;
        }
        GenerateCommand::FamilyL { bases, out } => {
            let mut traces = Vec::new();
            for spec in &bases {
                if let Some(n) = spec.strip_prefix('c') {
                    let multiplicity: usize =
                        n.parse().map_err(|_| format!("bad base {spec:?}"))?;
                    traces.push(families::LTrace::C2 { multiplicity });
                } else if let Some(rest) = spec.strip_prefix("k4:") {
                    let ks: Vec<usize> = rest
                        .split(':')
                        .map(|p| p.parse().map_err(|_| format!("bad base {spec:?}")))
                        .collect::<Result<_, _>>()?;
                    if ks.len() != 3 {
                        return Err(format!("bad base {spec:?}: need three multipliers"));
                    }
                    traces.push(families::LTrace::K4 {
                        pair_mults: [[ks[0], ks[0]], [ks[1], ks[1]], [ks[2], ks[2]]],
                    });
                } else {
                    return Err(format!("bad base {spec:?}"));
                }
            }
            let mut iter = traces.into_iter();
            let mut trace = iter.next().ok_or("need at least one base")?;
            for right in iter {
                // Chain gluing, always at the first half-class edge found.
                let left_graph = families::gen_family_l(&trace).map_err(|e| e.to_string())?;
                let right_graph = families::gen_family_l(&right).map_err(|e| e.to_string())?;
                let pick = |g: &MultiGraph| -> Result<usize, String> {
                    let a = dependence::analyze(g).map_err(|e| e.to_string())?;
                    for e in 0..g.size() {
                        if a.classes[a.class_of[e]].len() == g.order() / 2 {
                            return Ok(e);
                        }
                    }
                    Err("no half-order class edge".into())
                };
                trace = families::LTrace::Glue {
                    left_edge: pick(&left_graph)?,
                    right_edge: pick(&right_graph)?,
                    left: Box::new(trace),
                    right: Box::new(right),
                };
            }
            let g = families::gen_family_l(&trace).map_err(|e| e.to_string())?;
            emit(&g, &out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(path: &Path, as_json: bool) -> Result<ExitCode, String> {
    let g = read_graph(path)?;
    let report = classify::classify(&g);
    if as_json {
        let value = json!({
            "order": report.order,
            "size": report.size,
            "rgraph": format!("{:?}", report.rgraph),
            "three_edge_connected": report.three_ec,
            "matching_covered": report.matching_covered,
            "pattern": report.analysis.as_ref().map(|a| a.pattern.sizes().to_vec()),
            "family_matches": report.family_matches.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "table_row": report.table_row,
            "decomposition": report.decomposition.as_ref().map(|d| json!({
                "tree": d.tree.to_json(),
                "derived_solitary": d.derived_solitary,
            })),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("order {}, size {}", report.order, report.size);
        match &report.rgraph {
            RGraphVerdict::Certified(c) => println!("r-graph: r = {}", c.r),
            RGraphVerdict::Refused(r) => println!("not an r-graph: {r:?}"),
        }
        println!("3-edge-connected: {}", report.three_ec);
        println!("matching covered: {}", report.matching_covered);
        if let Some(a) = &report.analysis {
            println!("solitary pattern: {}", a.pattern);
        }
        match report.table_row {
            Some(row) => println!("characterization row: {row}"),
            None => println!("characterization row: none"),
        }
        if !report.family_matches.is_empty() {
            let names: Vec<String> = report
                .family_matches
                .iter()
                .map(|s| s.to_string())
                .collect();
            println!("family matches: {}", names.join(", "));
        }
        if let Some(d) = &report.decomposition {
            println!(
                "2-cut decomposition: {} pieces; derived solitary edges: {:?}",
                d.tree.leaves().len(),
                d.derived_solitary
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    check: Option<String>,
    corpus_dir: Option<PathBuf>,
    exhaustive: Option<Vec<usize>>,
    shuffles: usize,
    list: bool,
    as_json: bool,
) -> Result<ExitCode, String> {
    if list {
        for c in Check::all() {
            println!("{} (codes: {})", c.name(), c.aliases().join(", "));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let check = check.ok_or("missing check name; try --list")?;
    let check = Check::parse(&check).ok_or_else(|| format!("unknown check {check:?}"))?;
    let mut corpus = Vec::new();
    if let Some(dir) = &corpus_dir {
        let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(|e| format!("{}: {e}", dir.display()))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        paths.sort();
        for p in paths {
            corpus.push(read_graph(&p)?);
        }
    }
    if let Some(args) = exhaustive {
        let (n, r) = (args[0], args[1]);
        corpus.extend(classify::exhaustive_small_corpus(n, r).map_err(|e| e.to_string())?);
    }
    if corpus.is_empty() && check != Check::StaircaseCount {
        corpus = classify::default_family_corpus();
    }
    let report = classify::verify(check, &corpus, shuffles);
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).unwrap()
        );
    } else {
        print!("{report}");
    }
    // Violations are implementation-bug alarms: keep the offending graphs.
    for (i, v) in report.violations.iter().enumerate() {
        let path = format!("{}-witness-{i:03}.txt", check.name());
        std::fs::write(&path, &v.graph).map_err(|e| format!("{path}: {e}"))?;
        eprintln!("witness graph written to {path}");
    }
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
