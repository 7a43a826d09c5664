//! Command-line front end.
//!
//! Exit codes: `0` success, `1` internal failure, `2` usage or parse error,
//! `3` negative finding (mates found, not cospectral, audit violation),
//! `4` resource limit.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::canon::isomorphic;
use crate::census::{lemma4_audit, Census, CensusQuery, DsVerdict};
use crate::constructions::{
    corollary_triple, pineapple_charpoly, prop2_mate, prop3_mate, prop3_params,
};
use crate::error::Error;
use crate::graph::{pineapple, Graph};
use crate::graph6::{decode_graph6, encode_graph6};
use crate::spectra::{char_poly, cospectral};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "pineapple",
    version,
    about = "Exact spectra of pineapple graphs and their cospectral mates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Target {
    /// Graph in graph6 format.
    #[arg(long, value_name = "CODE")]
    graph6: Option<String>,
    /// The pineapple graph with a P-clique and Q pendants.
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pineapple: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a pineapple graph (edge list by default).
    Pineapple {
        /// Clique size.
        p: usize,
        /// Number of pendant vertices at the apex.
        q: usize,
        /// Print the graph6 code instead.
        #[arg(long, conflicts_with = "dot")]
        graph6: bool,
        /// Print Graphviz DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Print a characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        target: Target,
        /// Closed-form factorization (pineapple graphs only).
        #[arg(long)]
        factored: bool,
    },
    /// Build cospectral mates of pineapple graphs.
    Mate {
        #[command(subcommand)]
        kind: MateKind,
    },
    /// Search every graph of the same order for cospectral mates.
    VerifyDs {
        #[command(flatten)]
        target: Target,
        /// Largest order the census may enumerate.
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// Write the certificate here instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
        /// Worker threads (default: all cores).
        #[arg(long, value_name = "W")]
        workers: Option<usize>,
    },
    /// Stream one graph6 line per isomorphism class.
    Census {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Keep only graphs with this many edges.
        #[arg(long)]
        edges: Option<usize>,
        /// Keep only graphs with this many triangles.
        #[arg(long)]
        triangles: Option<usize>,
        /// Keep only connected graphs.
        #[arg(long)]
        connected: bool,
        /// Worker threads (default: all cores).
        #[arg(long, value_name = "W")]
        workers: Option<usize>,
    },
    /// Classify connected graphs with least eigenvalue above -2 by discriminant.
    Lemma4Audit {
        /// Largest order examined, at most 8.
        #[arg(long)]
        max_n: usize,
    },
    /// Compare the spectra of two graph6 graphs.
    Cospectral {
        /// First graph in graph6 format.
        code1: String,
        /// Second graph in graph6 format.
        code2: String,
    },
}

#[derive(Subcommand, Debug)]
enum MateKind {
    /// Order-3k mate of pineapple(2k, k^2).
    Prop2 {
        /// Size of each of the three cells.
        k: usize,
    },
    /// Complete-multipartite mate of pineapple(p, r(p-k)).
    Prop3 {
        /// Clique size of the detached `K_k`.
        k: usize,
        /// Clique size of the pineapple graph.
        p: usize,
    },
    /// Three mutually cospectral graphs with the spectrum of pineapple(p, (p/2)^2).
    Corollary {
        /// Even clique size, at least 4.
        p: usize,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::Parse { .. } | Error::NotDivisible { .. } => EXIT_USAGE,
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::NotEquitable { .. } | Error::RefinementLimit => EXIT_FAILURE,
    }
}

fn target_graph(t: &Target) -> Result<(Graph, Option<(usize, usize)>), Error> {
    match (&t.graph6, &t.pineapple) {
        (Some(code), _) => Ok((decode_graph6(code)?, None)),
        (None, Some(pq)) => Ok((pineapple(pq[0], pq[1])?, Some((pq[0], pq[1])))),
        (None, None) => Err(Error::InvalidArgument("no target graph given".into())),
    }
}

fn dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.order() {
        s.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push('}');
    s
}

fn edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("\n{u} {v}"));
    }
    s
}

fn check_line(target: &Graph, mates: &[&Graph]) -> (String, bool) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (i, m) in mates.iter().enumerate() {
        let c = cospectral(target, m);
        let iso = isomorphic(target, m);
        ok &= c && !iso;
        parts.push(format!("mate {}: cospectral={c} isomorphic={iso}", i + 1));
    }
    for i in 0..mates.len() {
        for j in i + 1..mates.len() {
            let iso = isomorphic(mates[i], mates[j]);
            ok &= !iso;
            parts.push(format!("mates {} and {}: isomorphic={iso}", i + 1, j + 1));
        }
    }
    (format!("check: {}", parts.join("; ")), ok)
}

fn run_mate(kind: &MateKind, out: &mut dyn Write) -> Result<i32, Error> {
    let (label, target, mates) = match kind {
        MateKind::Prop2 { k } => {
            let k = *k;
            let mate = prop2_mate(k)?;
            (
                format!("pineapple({}, {})", 2 * k, k * k),
                pineapple(2 * k, k * k)?,
                vec![mate],
            )
        }
        MateKind::Prop3 { k, p } => {
            let params = prop3_params(*k, *p)?;
            let mate = prop3_mate(&params)?;
            (
                format!("pineapple({}, {})", params.p, params.q),
                pineapple(params.p, params.q)?,
                vec![mate],
            )
        }
        MateKind::Corollary { p } => {
            let [a, b, c] = corollary_triple(*p)?;
            (
                format!("pineapple({}, {})", p, (p / 2) * (p / 2)),
                a,
                vec![b, c],
            )
        }
    };
    writeln!(out, "target {label}: {}", encode_graph6(&target)?).ok();
    for (i, m) in mates.iter().enumerate() {
        writeln!(out, "mate {}: {}", i + 1, encode_graph6(m)?).ok();
    }
    let refs: Vec<&Graph> = mates.iter().collect();
    let (line, ok) = check_line(&target, &refs);
    writeln!(out, "{line}").ok();
    Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match cli.command {
        Command::Pineapple {
            p,
            q,
            graph6,
            dot: as_dot,
        } => {
            let g = pineapple(p, q)?;
            let text = if graph6 {
                encode_graph6(&g)?
            } else if as_dot {
                dot(&g)
            } else {
                edge_list(&g)
            };
            writeln!(out, "{text}").ok();
            Ok(EXIT_OK)
        }
        Command::Charpoly { target, factored } => {
            let (g, pq) = target_graph(&target)?;
            if factored {
                let Some((p, q)) = pq else {
                    return Err(Error::InvalidArgument(
                        "--factored needs a closed form; use --pineapple P Q".into(),
                    ));
                };
                writeln!(out, "{}", pineapple_charpoly(p, q)?).ok();
            } else {
                writeln!(out, "{}", char_poly(&g)).ok();
            }
            Ok(EXIT_OK)
        }
        Command::Mate { kind } => run_mate(&kind, out),
        Command::VerifyDs {
            target,
            max_n,
            out: path,
            workers,
        } => {
            let (g, _) = target_graph(&target)?;
            let mut census = Census::new();
            if let Some(m) = max_n {
                census = census.with_ceiling(m);
            }
            if let Some(w) = workers {
                census = census.with_workers(w);
            }
            let cert = census.verify_ds(&g)?;
            let json = cert.to_json()?;
            match path {
                Some(path) => {
                    fs::write(&path, format!("{json}\n"))
                        .map_err(|e| Error::InvalidArgument(format!("cannot write {path}: {e}")))?;
                }
                None => {
                    writeln!(out, "{json}").ok();
                }
            }
            let verdict = cert.verdict();
            writeln!(err, "{verdict:?} ({} graphs scanned)", cert.graphs_scanned).ok();
            Ok(match verdict {
                DsVerdict::DeterminedBySpectrum => EXIT_OK,
                _ => EXIT_NEGATIVE,
            })
        }
        Command::Census {
            n,
            edges,
            triangles,
            connected,
            workers,
        } => {
            let mut q = CensusQuery::all(n);
            q.filters.edges = edges;
            q.filters.triangles = triangles;
            q.filters.connected = connected;
            let mut census = Census::new();
            if let Some(w) = workers {
                census = census.with_workers(w);
            }
            let mut count = 0u64;
            census.stream(
                &q,
                |g| Some(encode_graph6(g).expect("census graphs fit graph6")),
                |code| {
                    count += 1;
                    writeln!(out, "{code}").ok();
                },
            )?;
            writeln!(err, "{count}").ok();
            Ok(EXIT_OK)
        }
        Command::Lemma4Audit { max_n } => {
            let report = lemma4_audit(max_n)?;
            writeln!(out, "{report}").ok();
            Ok(if report.violations().is_empty() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Cospectral { code1, code2 } => {
            let g = decode_graph6(&code1)?;
            let h = decode_graph6(&code2)?;
            if cospectral(&g, &h) {
                writeln!(out, "cospectral").ok();
                Ok(EXIT_OK)
            } else {
                writeln!(out, "not cospectral").ok();
                Ok(EXIT_NEGATIVE)
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").ok();
            } else {
                write!(out, "{text}").ok();
            }
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            exit_code(&e)
        }
    }
}
