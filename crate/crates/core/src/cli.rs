//! The `semitrans` command line.
//!
//! Exit codes: 0 verified, satisfiable or closed; 1 refuted, unsatisfiable
//! or not semi-transitive; 2 input or usage error; 3 resource limit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::format;
use crate::graph::{Girth, Graph};
use crate::orientation::Orientation;
use crate::proofscript;
use crate::solver::{self, BranchHeuristic, SolveResult, SolverConfig, NODE_LIMIT_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "semitrans", version, about = "Semi-transitive orientations of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Family spec such as `circulant:13:1,5` or `grotzsch`.
    #[arg(long)]
    family: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Heuristic {
    Static,
    Dynamic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Builtin {
    Chvatal,
    Grotzsch,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph as an edge list.
    Gen {
        #[arg(long, conflicts_with = "random_3col", required_unless_present = "random_3col")]
        family: Option<String>,
        /// Random connected 3-colorable graph on this many vertices.
        #[arg(long, requires = "seed")]
        random_3col: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print basic invariants as `key=value` lines.
    Props {
        #[command(flatten)]
        source: GraphSource,
        /// Also compute the chromatic number.
        #[arg(long)]
        chromatic: bool,
    },
    /// Check an orientation and print its certificate.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        orientation: PathBuf,
    },
    /// Search for a semi-transitive orientation.
    Solve {
        #[command(flatten)]
        source: GraphSource,
        /// Remove this edge first, written `u,v`.
        #[arg(long, value_parser = parse_pair)]
        delete_edge: Option<(usize, usize)>,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(4..=7))]
        catalog_len: u8,
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(long, value_enum, default_value = "dynamic")]
        heuristic: Heuristic,
        /// Peel the candidate before the final shortcut check.
        #[arg(long)]
        peel: bool,
        /// Explore both directions of the first branching edge.
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long)]
        orientation_out: Option<PathBuf>,
    },
    /// Emit one of the explicit constructions: `fig4`, `lemma8:<n>`,
    /// `toft:<n>` or `coloring:<family>:<k>`.
    Construct {
        name: String,
        /// Write the certificate here instead of a trailing comment line.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Replay a proof script.
    Prove {
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        script: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// Print the structured report instead of the trace.
        #[arg(long)]
        json: bool,
    },
    /// Write a graph, optionally oriented, in DOT.
    Export {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        orientation: Option<PathBuf>,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `u,v`")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

/// Runs the command line with process stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut stdout = String::new();
    let code = match dispatch(cli.command, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TooLarge { .. } | Error::BoundExceeded { .. } => EXIT_LIMIT,
                _ => EXIT_USAGE,
            }
        }
    };
    let _ = out.write_all(stdout.as_bytes());
    let _ = out.flush();
    code
}

fn load(source: &GraphSource) -> Result<(Graph, Option<FamilySpec>)> {
    match (&source.family, &source.graph) {
        (Some(spec), _) => {
            let spec: FamilySpec = spec.parse()?;
            Ok((spec.build()?, Some(spec)))
        }
        (None, Some(path)) => Ok((format::read_edge_list(&std::fs::read_to_string(path)?)?, None)),
        (None, None) => Err(Error::BadParameters("need --family or --graph".into())),
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(Error::from)
}

fn dispatch(command: Command, out: &mut String) -> Result<i32> {
    match command {
        Command::Gen {
            family,
            random_3col,
            seed,
            out: path,
        } => {
            let g = match (family, random_3col) {
                (Some(spec), _) => spec.parse::<FamilySpec>()?.build()?,
                (None, Some(n)) => random_three_colorable(n, 0.5, seed.unwrap_or(0)),
                (None, None) => unreachable!("clap requires one source"),
            };
            let text = format::write_edge_list(&g);
            match path {
                Some(p) => write_file(&p, &text)?,
                None => out.push_str(&text),
            }
            Ok(EXIT_OK)
        }
        Command::Props { source, chromatic } => {
            let (g, _) = load(&source)?;
            out.push_str(&props(&g, chromatic)?);
            Ok(EXIT_OK)
        }
        Command::Verify { source, orientation } => {
            let (g, _) = load(&source)?;
            let o = format::read_orientation(&g, &std::fs::read_to_string(orientation)?)?;
            let verdict = o.check_semi_transitive();
            let _ = writeln!(out, "{}", verdict.to_json());
            Ok(if verdict.status() == "semi-transitive" { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Solve {
            source,
            delete_edge,
            catalog_len,
            node_limit,
            heuristic,
            peel,
            no_symmetry,
            orientation_out,
        } => {
            let (mut g, _) = load(&source)?;
            if let Some((u, v)) = delete_edge {
                g = g.delete_edge(u, v)?;
            }
            let env_limit = std::env::var(NODE_LIMIT_ENV).ok().and_then(|v| v.parse().ok());
            let cfg = SolverConfig {
                catalog_max_len: catalog_len as usize,
                use_peel: peel,
                node_limit: node_limit.or(env_limit),
                branch_heuristic: match heuristic {
                    Heuristic::Static => BranchHeuristic::StaticDegree,
                    Heuristic::Dynamic => BranchHeuristic::DynamicMostConstrained,
                },
                root_symmetry: !no_symmetry,
                ..SolverConfig::default()
            };
            cfg.validate()?;
            let result = solver::solve(&g, &cfg);
            let doc = result.stats_document(&cfg);
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("stats serialize"));
            match result {
                SolveResult::Sat(o, _) => {
                    if let Some(path) = orientation_out {
                        write_file(&path, &format::write_orientation(&o))?;
                    }
                    Ok(EXIT_OK)
                }
                SolveResult::Unsat(_) => Ok(EXIT_REFUTED),
                SolveResult::Unknown(_) => Ok(EXIT_LIMIT),
            }
        }
        Command::Construct { name, cert } => {
            let o = match construct(&name)? {
                Some(o) => o,
                None => {
                    let _ = writeln!(out, "# no proper coloring with that many colors");
                    return Ok(EXIT_REFUTED);
                }
            };
            let verdict = o.check_semi_transitive();
            out.push_str(&format::write_orientation(&o));
            match cert {
                Some(path) => write_file(&path, &format!("{}\n", verdict.to_json()))?,
                None => {
                    let _ = writeln!(out, "# certificate {}", verdict.to_json());
                }
            }
            Ok(if verdict.status() == "semi-transitive" { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Prove { script, builtin, json } => {
            let text = match (script, builtin) {
                (Some(path), _) => std::fs::read_to_string(path)?,
                (None, Some(Builtin::Chvatal)) => proofscript::CHVATAL_SCRIPT.to_string(),
                (None, Some(Builtin::Grotzsch)) => proofscript::GROTZSCH_SCRIPT.to_string(),
                (None, None) => unreachable!("clap requires one source"),
            };
            let script = proofscript::parse(&text)?;
            match proofscript::replay(&script) {
                Ok(report) => {
                    if json {
                        let _ = writeln!(out, "{}", report.to_json());
                    } else {
                        out.push_str(&report.human_trace());
                    }
                    Ok(if report.all_closed { EXIT_OK } else { EXIT_REFUTED })
                }
                Err(e @ Error::StepRejected { .. }) => {
                    let _ = writeln!(out, "rejected: {e}");
                    Ok(EXIT_REFUTED)
                }
                Err(e) => Err(e),
            }
        }
        Command::Export { source, orientation } => {
            let (g, _) = load(&source)?;
            let o = match orientation {
                Some(path) => Some(format::read_orientation(&g, &std::fs::read_to_string(path)?)?),
                None => None,
            };
            out.push_str(&export_dot(&g, o.as_ref()));
            Ok(EXIT_OK)
        }
    }
}

fn props(g: &Graph, chromatic: bool) -> Result<String> {
    let mut s = String::new();
    let profile = g.degree_profile();
    let _ = writeln!(s, "n={}", g.vertex_count());
    let _ = writeln!(s, "m={}", g.edge_count());
    let _ = writeln!(
        s,
        "girth={}",
        match g.girth() {
            Girth::Finite(k) => k.to_string(),
            Girth::Infinite => "inf".into(),
        }
    );
    if profile.is_regular {
        let _ = writeln!(s, "regular={}", profile.max);
    } else {
        let _ = writeln!(s, "regular=no");
    }
    let _ = writeln!(s, "min_degree={}", profile.min);
    let _ = writeln!(s, "max_degree={}", profile.max);
    let _ = writeln!(s, "connected={}", g.is_connected());
    let _ = writeln!(s, "triangle_free={}", g.is_triangle_free());
    if chromatic {
        let _ = writeln!(s, "chi={}", g.chromatic_number()?);
    }
    Ok(s)
}

/// Builds a named construction; `Ok(None)` when a requested coloring does not exist.
pub fn construct(name: &str) -> Result<Option<Orientation>> {
    let bad = || Error::BadParameters(format!("unknown construction `{name}`"));
    if name == "fig4" {
        return Ok(Some(constructions::fig4_orientation()));
    }
    if let Some(rest) = name.strip_prefix("coloring:") {
        let (spec, k) = rest.rsplit_once(':').ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        let g = spec.parse::<FamilySpec>()?.build()?;
        return match g.proper_coloring(k) {
            Some(c) => solver::orient_by_coloring(&g, &c).map(Some),
            None => Ok(None),
        };
    }
    let (kind, n) = name.split_once(':').ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    match kind {
        "lemma8" => constructions::lemma8_orientation(n).map(Some),
        "toft" => constructions::toft_orientation(n).map(Some),
        _ => Err(bad()),
    }
}

/// DOT text: an undirected `graph` without an orientation, a `digraph`
/// with one. Vertices and edges appear in index order.
pub fn export_dot(g: &Graph, o: Option<&Orientation>) -> String {
    let (kind, link) = if o.is_some() { ("digraph", "->") } else { ("graph", "--") };
    let mut s = format!("{kind} G {{\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(s, "  {v};");
    }
    let pairs = match o {
        Some(o) => o.arcs(),
        None => g.edges().to_vec(),
    };
    for (u, v) in pairs {
        let _ = writeln!(s, "  {u} {link} {v};");
    }
    s.push_str("}\n");
    s
}

/// A connected graph on `n` vertices with a hidden proper 3-coloring.
///
/// A random spanning tree joins differently colored vertices, then every
/// other bichromatic pair is added with probability `p`. Deterministic in `seed`.
pub fn random_three_colorable(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut color = vec![0usize; n];
    let mut edges = Vec::new();
    if n > 0 {
        color[0] = rng.gen_range(0..3);
    }
    for i in 1..n {
        let j = rng.gen_range(0..i);
        color[i] = (color[j] + rng.gen_range(1..3)) % 3;
        edges.push((j, i));
    }
    for u in 0..n {
        for v in u + 1..n {
            if color[u] != color[v] && !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("distinct bichromatic pairs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("semitrans").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dot_examples() {
        let dot = export_dot(&families::grotzsch(), None);
        assert_eq!(dot.matches(" -- ").count(), 20);
        assert_eq!(dot.lines().filter(|l| l.ends_with(';') && !l.contains(' ')).count(), 0);
        let fig4 = constructions::fig4_orientation();
        assert_eq!(export_dot(fig4.graph(), Some(&fig4)).matches(" -> ").count(), 26);
        assert_eq!(export_dot(&Graph::empty(0), None), "graph G {\n}\n");
    }

    #[test]
    fn props_and_exit_codes() {
        let (code, out, _) = run_capture(&["props", "--family", "chvatal", "--chromatic"]);
        assert_eq!(code, 0);
        for line in ["n=12", "m=24", "girth=4", "regular=4", "chi=4"] {
            assert!(out.lines().any(|l| l == line), "{line} in {out}");
        }
        assert_eq!(run_capture(&["solve", "--family", "grotzsch"]).0, 1);
        assert_eq!(run_capture(&["solve", "--family", "nonsense"]).0, 2);
        assert_eq!(run_capture(&["solve", "--family", "grotzsch", "--node-limit", "1"]).0, 3);
        assert_eq!(run_capture(&["solve", "--family", "grotzsch", "--catalog-len", "9"]).0, 2);
        assert_eq!(run_capture(&["props", "--family", "kneser:9:2", "--chromatic"]).0, 3);
    }

    #[test]
    fn random_graphs_are_three_colorable_and_connected() {
        for seed in 0..20 {
            let g = random_three_colorable(9, 0.5, seed);
            assert!(g.is_connected());
            assert!(g.proper_coloring(3).is_some());
            assert_eq!(g, random_three_colorable(9, 0.5, seed));
        }
    }

    #[test]
    fn constructions_by_name() {
        assert!(construct("fig4").unwrap().unwrap().is_semi_transitive());
        assert!(construct("lemma8:7").unwrap().unwrap().is_semi_transitive());
        assert!(construct("toft:5").unwrap().unwrap().is_semi_transitive());
        assert!(construct("coloring:cycle:5:3").unwrap().unwrap().is_semi_transitive());
        assert!(construct("coloring:cycle:5:2").unwrap().is_none());
        assert!(construct("bogus").is_err());
    }
}
