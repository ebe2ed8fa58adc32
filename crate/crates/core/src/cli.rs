//! Command-line front end. Every subcommand reads a graph stream (a path,
//! or standard input for `-`) and writes one JSON line per graph, except
//! `gen`, which writes graph6.
//!
//! Exit codes: 0 clean, 1 when a violation inside the class or a colouring
//! needing more than three colours was found, 2 on usage or parse errors.

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::audit::{self, AuditConfig, StreamSummary};
use crate::coloring::{
    brute_force_chromatic, color3_with, find_coloring, verify_coloring, Chromatic, ColorConfig, Coloring, DEFAULT_BRUTE_LIMIT,
};
use crate::cycles::{enumerate_holes, is_member};
use crate::generators;
use crate::graph::Graph;
use crate::io::{emit_record_line, emit_report, write_graph6, ColoringSummary, Format, GraphRecord, GraphStream, HoleJumps, Report, StreamItem, ThetaRecord};
use crate::jumps::{enumerate_jumps_with, JumpOptions};
use crate::theta::{check_theta_ear_lemma, find_theta_subgraphs};

#[derive(Debug, Parser)]
#[command(name = "h4graph", version, about = "Structure, colouring and audits for graphs of girth 2l without long even holes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Auto,
    G6,
    Edges,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Auto => Format::Auto,
            FormatArg::G6 => Format::Graph6,
            FormatArg::Edges => Format::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Input file, `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
    /// Half-girth: the class has girth 2l.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..))]
    pub l: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<String>,
    /// Emit one pretty-printed report at the end instead of JSON lines.
    #[arg(long)]
    pub pretty: bool,
    /// Worker threads, 0 for one per core.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class membership with a witness for non-members.
    Member {
        #[command(flatten)]
        common: Common,
    },
    /// 3-colouring by decomposition.
    Color {
        #[command(flatten)]
        common: Common,
        /// Pieces up to this size are coloured by search.
        #[arg(long, default_value_t = 8)]
        base: usize,
        /// Include the decomposition trace.
        #[arg(long)]
        trace: bool,
        /// Also compute the exact chromatic number of small graphs.
        #[arg(long)]
        exact: bool,
        /// Record whether each split piece is still a member.
        #[arg(long)]
        check_pieces: bool,
    },
    /// Holes (induced cycles of length at least 4).
    Holes {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Classified jumps over every even hole.
    Jumps {
        #[command(flatten)]
        common: Common,
        /// Maximum interior vertices per jump.
        #[arg(long)]
        cap: Option<usize>,
        /// Maximum jump records per hole.
        #[arg(long)]
        record_cap: Option<usize>,
    },
    /// Theta subgraphs with the ear-length check for members.
    Thetas {
        #[command(flatten)]
        common: Common,
        /// Include thetas that are not induced.
        #[arg(long)]
        all: bool,
    },
    /// Run every structural audit.
    Audit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = 20_000)]
        record_cap: usize,
        #[arg(long, default_value_t = 2000)]
        hole_cap: usize,
        /// Skip thetas with an ear of length 1.
        #[arg(long)]
        skip_short_ear_thetas: bool,
    },
    /// Look for members with minimum degree 3 and no K1- or K2-cut.
    Search {
        #[command(flatten)]
        common: Common,
    },
    /// Write generated graphs as graph6.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Theta {
        a: usize,
        b: usize,
        c: usize,
    },
    Petersen,
    Heawood,
    TutteCoxeter,
    /// Every theta with ears at most `max` that is a member.
    ThetaMembers {
        #[arg(long, default_value_t = 12)]
        max: usize,
        #[arg(long, default_value_t = 4)]
        l: usize,
    },
    /// K4 subdivisions with edge lengths at most `max` that are members.
    K4Members {
        #[arg(long, default_value_t = 5)]
        max: usize,
        #[arg(long, default_value_t = 4)]
        l: usize,
    },
    /// Members glued from thetas and K4 subdivisions along vertices and edges.
    RandomMembers {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        parts: usize,
        #[arg(long, default_value_t = 4)]
        l: usize,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

type Work = Box<dyn Fn(&StreamItem) -> GraphRecord + Sync>;

fn execute(cmd: Command, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, String> {
    let (common, work): (Common, Work) = match cmd {
        Command::Gen { family } => return generate(family, stdout),
        Command::Member { common } => {
            let l = common.l as usize;
            (
                common,
                Box::new(move |it| {
                    let mut r = GraphRecord::new(&it.id, &it.graph);
                    r.membership = Some(is_member(&it.graph, l));
                    r
                }),
            )
        }
        Command::Color {
            common,
            base,
            trace,
            exact,
            check_pieces,
        } => {
            let cfg = ColorConfig {
                base_threshold: base,
                brute_limit: DEFAULT_BRUTE_LIMIT,
                piece_membership: check_pieces.then_some(common.l as usize),
            };
            (common, Box::new(move |it| color_record(it, &cfg, trace, exact)))
        }
        Command::Holes { common, max_len } => (
            common,
            Box::new(move |it| {
                let mut r = GraphRecord::new(&it.id, &it.graph);
                r.holes = Some(enumerate_holes(&it.graph, 4, max_len.unwrap_or(it.graph.n())));
                r
            }),
        ),
        Command::Jumps { common, cap, record_cap } => {
            let opts = JumpOptions {
                interior_cap: cap,
                record_cap,
            };
            (
                common,
                Box::new(move |it| {
                    let mut r = GraphRecord::new(&it.id, &it.graph);
                    let holes = enumerate_holes(&it.graph, 4, it.graph.n());
                    let jumps = holes
                        .iter()
                        .filter(|h| h.is_even())
                        .map(|h| {
                            let e = enumerate_jumps_with(&it.graph, h, &opts).expect("hole");
                            HoleJumps {
                                hole: e.hole,
                                jumps: e.records,
                                truncated: e.truncated,
                            }
                        })
                        .collect();
                    r.jumps = Some(jumps);
                    r
                }),
            )
        }
        Command::Thetas { common, all } => {
            let l = common.l as usize;
            (
                common,
                Box::new(move |it| {
                    let mut r = GraphRecord::new(&it.id, &it.graph);
                    let m = is_member(&it.graph, l);
                    let thetas = find_theta_subgraphs(&it.graph, !all)
                        .into_iter()
                        .map(|t| ThetaRecord {
                            ear_lemma: (m.is_member && t.induced).then(|| check_theta_ear_lemma(&t, l).expect("induced")),
                            theta: t,
                        })
                        .collect();
                    r.membership = Some(m);
                    r.thetas = Some(thetas);
                    r
                }),
            )
        }
        Command::Audit {
            common,
            cap,
            record_cap,
            hole_cap,
            skip_short_ear_thetas,
        } => {
            let cfg = AuditConfig {
                l: common.l as usize,
                include_short_ear_thetas: !skip_short_ear_thetas,
                hole_cap: Some(hole_cap),
                jump_interior_cap: cap,
                jump_record_cap: Some(record_cap),
            };
            (common, Box::new(move |it| audit::audit_graph(&it.graph, &it.id, &cfg)))
        }
        Command::Search { common } => {
            let cfg = AuditConfig {
                l: common.l as usize,
                ..AuditConfig::default()
            };
            (common, Box::new(move |it| audit::search_graph(&it.graph, &it.id, &cfg)))
        }
    };
    stream_command(&common, work, stdin, stdout, stderr)
}

fn color_record(it: &StreamItem, cfg: &ColorConfig, with_trace: bool, exact: bool) -> GraphRecord {
    let g = &it.graph;
    let mut r = GraphRecord::new(&it.id, g);
    let chromatic = |g: &Graph| match brute_force_chromatic(g, g.n(), DEFAULT_BRUTE_LIMIT) {
        Ok(Chromatic::Exact(k)) => Some(k),
        _ => None,
    };
    r.coloring = Some(match color3_with(g, cfg) {
        Ok(c) => {
            let v = verify_coloring(g, &c.coloring).expect("complete colouring");
            ColoringSummary {
                colors_used: c.coloring.colors_used(),
                proper: v.proper,
                excess: false,
                chromatic: if exact { chromatic(g) } else { None },
                stuck_without_cut: c.trace.stuck_without_cut(),
                pieces_left_class: c.trace.pieces_left_class(),
                coloring: Some(c.coloring),
                trace: with_trace.then_some(c.trace),
            }
        }
        Err(f) => {
            // fall back to an optimal colouring when the brute force settled it
            let fallback = f.chromatic.and_then(|k| find_coloring(g, k)).map(|c| Coloring::from_slice(&c));
            ColoringSummary {
                colors_used: fallback.as_ref().map_or(0, Coloring::colors_used),
                proper: fallback.is_some(),
                excess: true,
                chromatic: f.chromatic,
                stuck_without_cut: f.stuck_without_cut,
                pieces_left_class: false,
                coloring: fallback,
                trace: None,
            }
        }
    });
    r
}

fn stream_command(
    common: &Common,
    work: Box<dyn Fn(&StreamItem) -> GraphRecord + Sync>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    let mut file_out;
    let out: &mut dyn Write = match &common.out {
        Some(p) => {
            file_out = std::io::BufWriter::new(std::fs::File::create(p).map_err(|e| format!("{p}: {e}"))?);
            &mut file_out
        }
        None => stdout,
    };
    let mut report = Report::default();
    let mut write_err = None;
    let mut emit = |r: &GraphRecord| {
        if common.pretty {
            report.graphs.push(r.clone());
        } else if let Err(e) = writeln!(out, "{}", emit_record_line(r)) {
            write_err.get_or_insert(e);
        }
    };
    let mut excess = false;
    let mut emit_and_check = |r: &GraphRecord| {
        excess |= r.coloring.as_ref().is_some_and(|c| c.excess);
        emit(r);
    };
    let summary = if common.input == "-" {
        let stream = GraphStream::new("stdin", &mut *stdin, common.format.into());
        audit::process_stream(stream, common.workers, &*work, &mut emit_and_check)
    } else {
        let file = std::fs::File::open(&common.input).map_err(|e| format!("{}: {e}", common.input))?;
        let stream = GraphStream::new(common.input.clone(), std::io::BufReader::new(file), common.format.into());
        audit::process_stream(stream, common.workers, &*work, &mut emit_and_check)
    };
    if common.pretty {
        writeln!(out, "{}", emit_report(&report, true)).map_err(|e| e.to_string())?;
    }
    if let Some(e) = write_err {
        return Err(e.to_string());
    }
    out.flush().map_err(|e| e.to_string())?;
    report_summary(&summary, stderr);
    Ok(if summary.violations > 0 || excess {
        1
    } else if summary.parse_errors > 0 {
        2
    } else {
        0
    })
}

fn report_summary(s: &StreamSummary, stderr: &mut dyn Write) {
    let _ = writeln!(
        stderr,
        "{} graphs, {} members, {} parse errors; findings: {} pass, {} violation, {} informational violation, {} vacuous, {} truncated",
        s.graphs, s.members, s.parse_errors, s.pass, s.violations, s.informational_violations, s.vacuous, s.truncated
    );
}

fn generate(family: Family, out: &mut dyn Write) -> Result<i32, String> {
    let graphs: Vec<Graph> = match family {
        Family::Cycle { n } if n >= 3 => vec![generators::cycle(n)],
        Family::Cycle { n } => return Err(format!("a cycle needs at least 3 vertices, got {n}")),
        Family::Path { n } => vec![generators::path(n)],
        Family::Complete { n } => vec![generators::complete(n)],
        Family::Theta { a, b, c } => vec![generators::theta(a, b, c).map_err(|e| e.to_string())?],
        Family::Petersen => vec![generators::petersen()],
        Family::Heawood => vec![generators::heawood()],
        Family::TutteCoxeter => vec![generators::tutte_coxeter()],
        Family::ThetaMembers { max, l } => theta_members(max, l),
        Family::K4Members { max, l } => generators::k4_subdivision_members(l, max),
        Family::RandomMembers { count, seed, parts, l } => {
            let pool = member_pool(l);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| generators::random_glued_member(&mut rng, &pool, parts))
                .collect()
        }
    };
    for g in graphs {
        writeln!(out, "{}", write_graph6(&g)).map_err(|e| e.to_string())?;
    }
    Ok(0)
}

/// Thetas with ears at most `max` in the class.
pub fn theta_members(max: usize, l: usize) -> Vec<Graph> {
    generators::theta_triples(max)
        .into_iter()
        .map(|(a, b, c)| generators::theta(a, b, c).unwrap())
        .filter(|g| is_member(g, l).is_member)
        .collect()
}

/// Seed pool for random members: small member thetas and K4 subdivisions.
pub fn member_pool(l: usize) -> Vec<Graph> {
    let mut pool = theta_members(2 * l, l);
    pool.push(generators::cycle(2 * l));
    pool.extend(generators::k4_subdivision_members(l, l + 1));
    pool
}
