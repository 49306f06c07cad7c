//! Command-line front end. [`run`] parses arguments and returns the exit
//! status with everything destined for stdout and stderr, so it can be
//! driven in-process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::clique::{max_clique_cactus, max_clique_helly, HellyClique};
use crate::constructions::{
    build_blocker, build_gstar, build_membership_instance, complement_2subdiv_representation, find_diamond_witness,
    realize_diamond_representation, t3_gadget, wheel, wheel4_partition,
};
use crate::domination::{max_independent_set_hgraph, min_domset_hgraph, min_domset_star, min_independent_domset_hgraph};
use crate::error::{Error, Result};
use crate::graph::{verify_representation, Graph, Representation};
use crate::oracle;
use crate::order::{interval_dimension_height1, Poset};
use crate::separators::{minimal_separators, separator_candidates};
use crate::star::{recognize_star, star_branches};
use crate::tree::{double_star, recognize_tree};
use crate::treewidth::{
    exact_treewidth, decomposition_from_order, k_clique_fpt, list_k_coloring_fpt, tree_decomposition, width_bound,
    KCliqueAnswer, ListColoringAnswer, TwAnswer,
};

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "hgraph", version, about = "Algorithms and gadget builders for H-graphs")]
struct Cli {
    /// Seed for the generators and randomized fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for enumeration-heavy commands; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Output format for graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dimacs,
}

#[derive(Args, Debug)]
struct PatternArg {
    /// Pattern graph file (JSON or DIMACS).
    #[arg(long)]
    host: Option<PathBuf>,
    /// Named pattern: k2, path:N, cycle:N, star:D, complete:N, diamond,
    /// double-star, wheel4, t3.
    #[arg(long)]
    pattern: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide membership in the S_d-graphs.
    RecognizeStar {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Decide membership in the T-graphs for a tree T.
    RecognizeTree {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tree: PathBuf,
    },
    /// Minimum (independent) dominating set or maximum independent set
    /// from a representation.
    Domset {
        #[arg(long)]
        rep: PathBuf,
        /// Graph to check the representation against; defaults to its
        /// intersection graph.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Variant::Mds)]
        variant: Variant,
    },
    /// Maximum clique of a Helly H-graph or a cactus-graph.
    Clique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: CliqueMode,
        #[command(flatten)]
        pattern: PatternArg,
    },
    /// Tree decomposition: exact treewidth, or width at most a target.
    Tw {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        target: Option<usize>,
    },
    /// k-clique on a graph with treewidth bounded by (tw(H)+1)·ω − 1.
    Kclique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        pattern: PatternArg,
    },
    /// List colouring with colours 1..=k.
    Listcolor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// JSON list of colour lists, one per vertex.
        #[arg(long)]
        lists: PathBuf,
        #[command(flatten)]
        pattern: PatternArg,
    },
    /// Minimal separators, or the candidates a representation predicts.
    Separators {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long)]
        candidates: bool,
        #[arg(long)]
        cactus: bool,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Hardness constructions.
    Reduce {
        #[command(subcommand)]
        which: Reduce,
    },
    /// Seeded instance generators.
    Gen {
        #[command(subcommand)]
        which: Gen,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
    /// Check a representation against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Variant {
    Mds,
    Mis,
    Ids,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CliqueMode {
    Helly,
    Cactus,
}

#[derive(Subcommand, Debug)]
enum Reduce {
    /// Height-1 poset to a diamond membership instance, with a
    /// representation when a realizer with three interval orders exists.
    #[command(name = "intdim")]
    IntDim {
        #[arg(long)]
        poset: PathBuf,
    },
    /// The blocker graph for a pattern with a diamond, and the instance G*.
    Blocker {
        #[arg(long)]
        poset: PathBuf,
        #[command(flatten)]
        pattern: PatternArg,
    },
    /// Complement of the 2-subdivision of a graph with its representation
    /// on the 4-wheel.
    Cosubdiv {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// Random connected node sets on the canonical subdivision of a pattern.
    Subtree {
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long)]
        n: usize,
    },
    /// Random height-1 poset.
    Poset {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// Random cactus pattern.
    Cactus {
        #[arg(long)]
        blocks: usize,
    },
    /// A batch of subtree instances with answer digests.
    Corpus {
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    Membership {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long, default_value_t = 64)]
        sub_cap: usize,
    },
    Domset {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Mds)]
        variant: Variant,
    },
    Clique {
        #[arg(long)]
        graph: PathBuf,
    },
    Treewidth {
        #[arg(long)]
        graph: PathBuf,
    },
    Separators {
        #[arg(long)]
        graph: PathBuf,
    },
    Listcolor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
    },
    Intdim {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        Graph::from_json(&text)
    } else {
        Graph::from_dimacs(&text)
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Pattern graphs by name.
pub fn named_pattern(name: &str) -> Result<Graph> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a.parse::<usize>().map_err(|_| Error::Argument(format!("bad size in pattern {name:?}")))?)),
        None => (name, None),
    };
    Ok(match (head, arg) {
        ("k2", None) => Graph::path(2),
        ("path", Some(n)) if n >= 1 => Graph::path(n),
        ("cycle", Some(n)) if n >= 3 => Graph::cycle(n),
        ("star", Some(d)) if d >= 1 => Graph::star(d),
        ("complete", Some(n)) if n >= 1 => Graph::complete(n),
        ("diamond", None) => Graph::diamond(),
        ("double-star", None) => double_star(),
        ("wheel4", None) => wheel(4),
        ("t3", None) => t3_gadget(),
        _ => return Err(Error::Argument(format!("unknown pattern {name:?}"))),
    })
}

fn pattern_of(p: &PatternArg) -> Result<Option<Graph>> {
    match (&p.host, &p.pattern) {
        (Some(_), Some(_)) => Err(Error::Argument("give --host or --pattern, not both".into())),
        (Some(f), None) => read_graph(f).map(Some),
        (None, Some(name)) => named_pattern(name).map(Some),
        (None, None) => Ok(None),
    }
}

fn need_pattern(p: &PatternArg) -> Result<Graph> {
    pattern_of(p)?.ok_or_else(|| Error::Argument("a pattern is required (--host FILE or --pattern NAME)".into()))
}

fn load_rep(path: &Path, graph: Option<&PathBuf>) -> Result<(Graph, Representation)> {
    let rep: Representation = read_json(path)?;
    let g = match graph {
        Some(f) => read_graph(f)?,
        None => rep.intersection_graph(),
    };
    let report = verify_representation(&g, &rep)?;
    if !report.valid {
        return Err(Error::Structural(format!("representation does not verify: {:?}", report.violations)));
    }
    Ok((g, rep))
}

fn emit<T: Serialize>(code: i32, value: &T) -> Result<(i32, String)> {
    Ok((code, serde_json::to_string(value).expect("output serializes") + "\n"))
}

/// Width function from an optional pattern; without one no promise is
/// made and the target is `n`, so every instance decomposes.
fn width_fn(p: &PatternArg, n: usize) -> Result<Box<dyn Fn(usize) -> usize>> {
    Ok(match pattern_of(p)? {
        Some(h) => Box::new(width_bound(exact_treewidth(&h)?.0)),
        None => Box::new(move |_| n),
    })
}

fn dominators(g: &Graph, set: &[usize]) -> Vec<Option<usize>> {
    (0..g.n())
        .map(|v| if set.contains(&v) { Some(v) } else { g.neighbors(v).iter().copied().find(|u| set.contains(u)) })
        .collect()
}

fn digest(s: &str) -> String {
    Sha256::digest(s.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn dispatch(cli: Cli) -> Result<(i32, String)> {
    let seed = cli.seed;
    match cli.command {
        Command::RecognizeStar { graph, d } => {
            let g = read_graph(&graph)?;
            let r = recognize_star(&g, d)?;
            emit(if r.is_accepted() { EXIT_DECIDED } else { EXIT_NEGATIVE }, &r)
        }
        Command::RecognizeTree { graph, tree } => {
            let g = read_graph(&graph)?;
            let t = read_graph(&tree)?;
            let r = recognize_tree(&g, &t)?;
            emit(if r.is_accepted() { EXIT_DECIDED } else { EXIT_NEGATIVE }, &r)
        }
        Command::Domset { rep, graph, variant } => {
            let (g, rep) = load_rep(&rep, graph.as_ref())?;
            let (set, state) = match variant {
                Variant::Mds if star_branches(&rep.host).is_ok() => (min_domset_star(&g, &rep)?, None),
                Variant::Mds => {
                    let s = min_domset_hgraph(&g, &rep)?;
                    (s.set, Some(s.state))
                }
                Variant::Ids => {
                    let s = min_independent_domset_hgraph(&g, &rep)?;
                    (s.set, Some(s.state))
                }
                Variant::Mis => (max_independent_set_hgraph(&g, &rep)?, None),
            };
            let variant = format!("{variant:?}").to_lowercase();
            emit(EXIT_DECIDED, &json!({
                "variant": variant,
                "size": set.len(),
                "dominators": dominators(&g, &set),
                "set": set,
                "state": state,
            }))
        }
        Command::Clique { graph, mode, pattern } => {
            let g = read_graph(&graph)?;
            match mode {
                CliqueMode::Helly => {
                    let h = need_pattern(&pattern)?;
                    let r = max_clique_helly(&g, &h);
                    emit(if matches!(r, HellyClique::Clique { .. }) { EXIT_DECIDED } else { EXIT_NEGATIVE }, &r)
                }
                CliqueMode::Cactus => {
                    if let Some(h) = pattern_of(&pattern)? {
                        if !crate::separators::is_cactus(&h) {
                            return Err(Error::Argument("cactus mode needs a cactus pattern".into()));
                        }
                    }
                    let c = max_clique_cactus(&g)?;
                    emit(EXIT_DECIDED, &json!({ "result": "clique", "clique": c }))
                }
            }
        }
        Command::Tw { graph, target } => {
            let g = read_graph(&graph)?;
            match target {
                None => {
                    let (tw, order) = exact_treewidth(&g)?;
                    emit(EXIT_DECIDED, &json!({ "treewidth": tw, "decomposition": decomposition_from_order(&g, &order) }))
                }
                Some(t) => {
                    let r = tree_decomposition(&g, t)?;
                    emit(if matches!(r, TwAnswer::Decomposition { .. }) { EXIT_DECIDED } else { EXIT_NEGATIVE }, &r)
                }
            }
        }
        Command::Kclique { graph, k, pattern } => {
            let g = read_graph(&graph)?;
            let f = width_fn(&pattern, g.n())?;
            let r = k_clique_fpt(&g, k, &f)?;
            let code = match r {
                KCliqueAnswer::Found { .. } => EXIT_DECIDED,
                KCliqueAnswer::Absent { .. } => EXIT_NEGATIVE,
                KCliqueAnswer::PromiseViolated { .. } => EXIT_ERROR,
            };
            emit(code, &r)
        }
        Command::Listcolor { graph, k, lists, pattern } => {
            let g = read_graph(&graph)?;
            let lists: Vec<Vec<usize>> = read_json(&lists)?;
            let f = width_fn(&pattern, g.n())?;
            let r = list_k_coloring_fpt(&g, &lists, k, &f)?;
            let code = match r {
                ListColoringAnswer::Coloring { .. } => EXIT_DECIDED,
                ListColoringAnswer::CliqueObstruction { .. } | ListColoringAnswer::Infeasible { .. } => EXIT_NEGATIVE,
                ListColoringAnswer::PromiseViolated { .. } => EXIT_ERROR,
            };
            emit(code, &r)
        }
        Command::Separators { graph, rep, candidates, cactus, cap } => {
            if candidates || cactus {
                let rep = rep.ok_or_else(|| Error::Argument("--candidates needs --rep".into()))?;
                let (g, rep) = load_rep(&rep, graph.as_ref())?;
                let c = separator_candidates(&g, &rep, cactus)?;
                emit(EXIT_DECIDED, &c)
            } else {
                let g = match (&graph, &rep) {
                    (Some(f), _) => read_graph(f)?,
                    (None, Some(r)) => load_rep(r, None)?.0,
                    (None, None) => return Err(Error::Argument("--graph or --rep is required".into())),
                };
                match minimal_separators(&g, cap)? {
                    crate::separators::SeparatorList::Separators { separators } => emit(EXIT_DECIDED, &separators),
                    crate::separators::SeparatorList::Overflow { found } => {
                        Err(Error::Cap(format!("more than {cap} minimal separators ({found} found)")))
                    }
                }
            }
        }
        Command::Reduce { which } => match which {
            Reduce::IntDim { poset } => {
                let p: Poset = read_json(&poset)?;
                let inst = build_membership_instance(&p)?;
                let realizer = interval_dimension_height1(&p, 3)?;
                let rep = match &realizer {
                    Some(r) => Some(realize_diamond_representation(&p, r)?),
                    None => None,
                };
                emit(if rep.is_some() { EXIT_DECIDED } else { EXIT_NEGATIVE }, &json!({
                    "graph": inst.graph,
                    "minima": inst.minima,
                    "maxima": inst.maxima,
                    "t_min": inst.t_min,
                    "t_max": inst.t_max,
                    "interval_dimension_at_most_3": realizer.is_some(),
                    "realizer": realizer,
                    "representation": rep,
                }))
            }
            Reduce::Blocker { poset, pattern } => {
                let p: Poset = read_json(&poset)?;
                let h = need_pattern(&pattern)?;
                let w = find_diamond_witness(&h).ok_or_else(|| Error::Argument("pattern has no diamond to build on".into()))?;
                let spec = build_blocker(&h, &w)?;
                let gstar = build_gstar(&p, &spec)?;
                emit(EXIT_DECIDED, &json!({
                    "blocker": spec.blocker,
                    "blocker_representation": spec.representation,
                    "gstar": gstar,
                }))
            }
            Reduce::Cosubdiv { graph } => {
                let g = read_graph(&graph)?;
                let c = complement_2subdiv_representation(&g, &wheel(4), &wheel4_partition())?;
                emit(EXIT_DECIDED, &json!({ "graph": c.graph, "representation": c.representation }))
            }
        },
        Command::Gen { which } => match which {
            Gen::Subtree { pattern, n } => {
                let h = need_pattern(&pattern)?;
                let (g, rep) = oracle::random_subtree_rep(&h, n, seed);
                if cli.format == Format::Dimacs {
                    return Ok((EXIT_DECIDED, g.to_dimacs()));
                }
                emit(EXIT_DECIDED, &json!({ "graph": g, "representation": rep }))
            }
            Gen::Poset { min, max, density } => {
                if min > max {
                    return Err(Error::Argument("--min exceeds --max".into()));
                }
                emit(EXIT_DECIDED, &oracle::random_height1_poset(min, max, density, seed))
            }
            Gen::Cactus { blocks } => {
                let mut rng = oracle::Rng::new(seed);
                let c = oracle::random_cactus(blocks, &mut rng);
                if cli.format == Format::Dimacs {
                    return Ok((EXIT_DECIDED, c.to_dimacs()));
                }
                emit(EXIT_DECIDED, &c)
            }
            Gen::Corpus { pattern, n, count } => {
                let h = need_pattern(&pattern)?;
                let instances: Vec<Value> = (0..count as u64)
                    .map(|i| {
                        let s = seed.wrapping_add(i);
                        let (g, rep) = oracle::random_subtree_rep(&h, n, s);
                        let omega = crate::clique::max_clique_exact(&g).len();
                        json!({
                            "seed": s,
                            "graph_digest": digest(&g.to_json()),
                            "representation_digest": digest(&rep.to_json()),
                            "edges": g.m(),
                            "omega": omega,
                        })
                    })
                    .collect();
                emit(EXIT_DECIDED, &json!({ "seed": seed, "host": h, "n": n, "instances": instances }))
            }
        },
        Command::Oracle { which } => match which {
            OracleCmd::Membership { graph, pattern, sub_cap } => {
                let g = read_graph(&graph)?;
                let h = need_pattern(&pattern)?;
                let yes = oracle::brute_membership(&g, &h, sub_cap)?;
                emit(if yes { EXIT_DECIDED } else { EXIT_NEGATIVE }, &json!({ "member": yes }))
            }
            OracleCmd::Domset { graph, variant } => {
                let g = read_graph(&graph)?;
                let set = match variant {
                    Variant::Mds => oracle::brute_min_domset(&g)?,
                    Variant::Mis => oracle::brute_mis(&g)?,
                    Variant::Ids => oracle::brute_ids(&g)?,
                };
                emit(EXIT_DECIDED, &json!({ "size": set.len(), "set": set }))
            }
            OracleCmd::Clique { graph } => {
                let c = oracle::brute_max_clique(&read_graph(&graph)?)?;
                emit(EXIT_DECIDED, &json!({ "size": c.len(), "clique": c }))
            }
            OracleCmd::Treewidth { graph } => {
                emit(EXIT_DECIDED, &json!({ "treewidth": oracle::brute_treewidth(&read_graph(&graph)?)? }))
            }
            OracleCmd::Separators { graph } => emit(EXIT_DECIDED, &oracle::brute_minimal_separators(&read_graph(&graph)?)?),
            OracleCmd::Listcolor { graph, lists } => {
                let g = read_graph(&graph)?;
                let lists: Vec<Vec<usize>> = read_json(&lists)?;
                if lists.len() != g.n() {
                    return Err(Error::Argument(format!("{} lists for {} vertices", lists.len(), g.n())));
                }
                let c = oracle::brute_list_coloring(&g, &lists)?;
                emit(if c.is_some() { EXIT_DECIDED } else { EXIT_NEGATIVE }, &json!({ "coloring": c }))
            }
            OracleCmd::Intdim { poset, k } => {
                let p: Poset = read_json(&poset)?;
                let r = oracle::brute_interval_dimension(&p, k, true)?;
                emit(if r.is_some() { EXIT_DECIDED } else { EXIT_NEGATIVE }, &json!({ "at_most_k": r.is_some(), "realizer": r }))
            }
        },
        Command::Verify { graph, rep } => {
            let g = read_graph(&graph)?;
            let rep: Representation = read_json(&rep)?;
            let report = verify_representation(&g, &rep)?;
            emit(if report.valid { EXIT_DECIDED } else { EXIT_NEGATIVE }, &report)
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_DECIDED, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: text },
            };
        }
    };
    if cli.jobs == 0 {
        return Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: "--jobs must be at least 1\n".into() };
    }
    match dispatch(cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => {
            let code = if matches!(e, Error::Cap(_)) { EXIT_CAP } else { EXIT_ERROR };
            let stdout = serde_json::to_string(&json!({ "error": e.to_string() })).unwrap() + "\n";
            Outcome { code, stdout, stderr: format!("{e}\n") }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_patterns() {
        assert_eq!(named_pattern("star:3").unwrap(), Graph::star(3));
        assert_eq!(named_pattern("cycle:4").unwrap().m(), 4);
        assert!(named_pattern("cycle:2").is_err());
        assert!(named_pattern("nope").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["hgraph", "frobnicate"]).code, EXIT_ERROR);
        assert_eq!(run(["hgraph", "tw"]).code, EXIT_ERROR);
        assert_eq!(run(["hgraph", "--help"]).code, EXIT_DECIDED);
    }

    #[test]
    fn generators_are_seeded() {
        let a = run(["hgraph", "--seed", "5", "gen", "subtree", "--pattern", "star:3", "--n", "6"]);
        let b = run(["hgraph", "--seed", "5", "gen", "subtree", "--pattern", "star:3", "--n", "6"]);
        let c = run(["hgraph", "--seed", "6", "gen", "subtree", "--pattern", "star:3", "--n", "6"]);
        assert_eq!(a.code, 0);
        assert_eq!(a, b);
        assert_ne!(a.stdout, c.stdout);
        let d = run(["hgraph", "--format", "dimacs", "gen", "cactus", "--blocks", "2"]);
        assert!(d.stdout.starts_with("p edge"));
    }
}
