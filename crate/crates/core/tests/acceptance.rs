//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any failed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use h4graph::audit::{audit_theorem1, audit_theta_ears, search_graph, Analysis, AuditConfig, Status};
use h4graph::cli;
use h4graph::coloring::{brute_force_chromatic, color3, verify_coloring, Chromatic};
use h4graph::cycles::{enumerate_holes, is_member, Hole, MembershipWitness};
use h4graph::generators::{complete, cycle, petersen, random_glued_member, theta, theta_triples, tutte_coxeter};
use h4graph::io::{parse_graph6, write_graph6, Format, GraphStream};
use h4graph::jumps::{classify_jump, enumerate_jumps_with, ArcSide, JumpKind, JumpOptions, ShortType};
use h4graph::Graph;

type Check = fn() -> Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main() {
    let criteria: [(&str, Duration, Check); 8] = [
        ("1 membership golden set", Duration::from_secs(1), membership_golden),
        ("2 theta ear lemma over ears <= 12", Duration::from_secs(30), theta_ears_sweep),
        ("3 3-colouring of members", Duration::from_secs(120), coloring_members),
        ("4 reduction theorem and cage", Duration::from_secs(60), reduction_and_cage),
        ("5 jump taxonomy", Duration::from_secs(10), jump_taxonomy),
        ("6 cut oracles", Duration::from_secs(10), cut_oracles),
        ("7 graph6 round trip", Duration::from_secs(10), graph6_round_trip),
        ("8 deterministic audit output", Duration::from_secs(60), deterministic_audit),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > limit => Err(format!("{detail}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({took:.2?}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name} ({took:.2?}): {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

fn named_graph(name: &str) -> Graph {
    match name {
        "theta-4-4-4" => theta(4, 4, 4).unwrap(),
        "theta-1-7-7" => theta(1, 7, 7).unwrap(),
        "cycle-10" => cycle(10),
        "complete-4" => complete(4),
        "petersen" => petersen(),
        other => panic!("unknown fixture graph {other}"),
    }
}

fn is_cycle_in(g: &Graph, c: &[usize]) -> bool {
    let k = c.len();
    k >= 3 && c.iter().collect::<BTreeSet<_>>().len() == k && (0..k).all(|i| g.has_edge(c[i], c[(i + 1) % k]))
}

fn is_chordless(g: &Graph, c: &[usize]) -> bool {
    let k = c.len();
    (0..k).all(|i| (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.has_edge(c[i], c[j])))
}

fn membership_golden() -> Result<String, String> {
    let text = read_fixture("membership_l4.txt");
    let mut n = 0;
    for line in content_lines(&text) {
        let f: Vec<&str> = line.split_whitespace().collect();
        let (name, member, girth, kind, wlen) = (f[0], f[1] == "true", f[2].parse::<usize>().unwrap(), f[3], f[4].parse::<usize>().unwrap());
        let g = named_graph(name);
        let v = is_member(&g, 4);
        ensure(v.is_member == member && v.girth == Some(girth), || format!("{name}: got {v:?}"))?;
        match (&v.witness, kind) {
            (None, "none") => {}
            (Some(MembershipWitness::Girth { cycle: Some(c), .. }), "girth") => {
                ensure(c.len() == wlen && is_cycle_in(&g, c), || format!("{name}: bad cycle {c:?}"))?
            }
            (Some(MembershipWitness::EvenHole { hole }), "hole") => ensure(
                hole.len() == wlen && is_cycle_in(&g, hole.vertices()) && is_chordless(&g, hole.vertices()),
                || format!("{name}: bad hole {hole:?}"),
            )?,
            (w, k) => return Err(format!("{name}: expected {k} witness, got {w:?}")),
        }
        n += 1;
    }
    Ok(format!("{n} graphs match"))
}

fn golden_theta_members() -> BTreeMap<(usize, usize, usize), String> {
    content_lines(&read_fixture("theta_members_l4.txt"))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            let p = |i: usize| f[i].parse::<usize>().unwrap();
            ((p(0), p(1), p(2)), f[3].to_string())
        })
        .collect()
}

fn theta_member_graphs() -> Vec<Graph> {
    theta_triples(12)
        .into_iter()
        .map(|(a, b, c)| theta(a, b, c).unwrap())
        .filter(|g| is_member(g, 4).is_member)
        .collect()
}

fn theta_ears_sweep() -> Result<String, String> {
    let golden = golden_theta_members();
    let cfg = AuditConfig::default();
    let mut found = BTreeMap::new();
    let triples = theta_triples(12);
    for &(a, b, c) in &triples {
        let g = theta(a, b, c).unwrap();
        if !is_member(&g, 4).is_member {
            continue;
        }
        let findings = audit_theta_ears(&Analysis::new(&g, "t", &cfg));
        let whole: Vec<_> = findings
            .iter()
            .filter(|f| f.witness.as_ref().and_then(|w| w.theta.as_ref()).is_some_and(|t| t.vertex_set().len() == g.n()))
            .collect();
        ensure(whole.len() == 1, || format!("theta({a},{b},{c}): {} whole-graph thetas", whole.len()))?;
        ensure(findings.iter().all(|f| f.status == Status::Pass), || format!("theta({a},{b},{c}): {findings:?}"))?;
        let case = if whole[0].note.starts_with("AllEven") { "all_even" } else { "some_odd" };
        found.insert((a, b, c), case.to_string());
    }
    ensure(found == golden, || format!("member list differs: got {found:?}"))?;
    Ok(format!("{} triples scanned, {} members, all PASS with golden case", triples.len(), found.len()))
}

fn random_members(count: usize, seed: u64) -> Vec<Graph> {
    let pool = cli::member_pool(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_glued_member(&mut rng, &pool, 3)).collect()
}

fn coloring_members() -> Result<String, String> {
    let mut corpus = theta_member_graphs();
    corpus.extend(random_members(200, 7));
    let mut max_n = 0;
    for (i, g) in corpus.iter().enumerate() {
        ensure(is_member(g, 4).is_member, || format!("graph {i} is not a member"))?;
        let out = color3(g).map_err(|f| format!("graph {i}: colouring failed {f:?}"))?;
        let v = verify_coloring(g, &out.coloring).map_err(|e| e.to_string())?;
        ensure(v.proper && out.coloring.palette_size() <= 3, || format!("graph {i}: {v:?}"))?;
        match brute_force_chromatic(g, 3, 256) {
            Ok(Chromatic::Exact(k)) if k <= 3 => {}
            other => return Err(format!("graph {i}: chromatic {other:?}")),
        }
        max_n = max_n.max(g.n());
    }
    Ok(format!("{} members coloured and verified, up to {max_n} vertices", corpus.len()))
}

fn components_after(g: &Graph, removed: &[usize]) -> usize {
    let mut seen = vec![false; g.n()];
    for &r in removed {
        seen[r] = true;
    }
    let mut count = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    count
}

fn reduction_and_cage() -> Result<String, String> {
    let cfg = AuditConfig::default();
    let mut corpus = theta_member_graphs();
    corpus.extend(random_members(200, 7));
    for (i, g) in corpus.iter().enumerate() {
        let f = audit_theorem1(&Analysis::new(g, "m", &cfg));
        ensure(f.status == Status::Pass, || format!("member {i}: {f:?}"))?;
    }
    let text = read_fixture("cages_girth8.g6");
    let mut cages = 0;
    for item in GraphStream::new("cages", text.as_bytes(), Format::Graph6) {
        let item = item.map_err(|e| e.to_string())?;
        let g = &item.graph;
        ensure((0..g.n()).all(|v| g.degree(v) == 3), || "cage is not cubic".into())?;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                ensure(components_after(g, &[u, v]) == 1, || format!("cage split by {{{u}, {v}}}"))?;
            }
        }
        let rec = search_graph(g, &item.id, &cfg);
        let m = rec.membership.unwrap();
        ensure(m.girth == Some(8) && !m.is_member, || format!("cage verdict {m:?}"))?;
        let Some(MembershipWitness::EvenHole { hole }) = m.witness else {
            return Err("cage witness is not an even hole".into());
        };
        let h = hole.vertices();
        ensure(h.len() >= 10 && h.len() % 2 == 0 && is_cycle_in(g, h) && is_chordless(g, h), || format!("bad cage witness {h:?}"))?;
        ensure(rec.findings.iter().all(|f| f.status == Status::Vacuous), || "cage findings not vacuous".into())?;
        cages += 1;
    }
    ensure(cages >= 1, || "no cage in fixture".into())?;
    Ok(format!("{} members PASS, {cages} cubic girth-8 graph(s) are non-members with long even holes", corpus.len()))
}

/// Jump kind from raw adjacency, written from the definitions.
fn oracle_kind(g: &Graph, hole: &[usize], path: &[usize]) -> &'static str {
    let k = hole.len();
    let (s, t) = (path[0], path[path.len() - 1]);
    let inner: BTreeSet<usize> = path[1..path.len() - 1].iter().copied().collect();
    let sees = |v: usize| g.neighbors(v).iter().any(|w| inner.contains(w));
    let ps = hole.iter().position(|&v| v == s).unwrap();
    let walk = |dir: usize| {
        let mut arc = vec![s];
        let mut i = ps;
        loop {
            i = (i + dir) % k;
            arc.push(hole[i]);
            if hole[i] == t {
                return arc;
            }
        }
    };
    let (a, b) = (walk(1), walk(k - 1));
    if g.has_edge(s, t) {
        return if hole.iter().any(|&v| v != s && v != t && sees(v)) { "general" } else { "edge" };
    }
    let seen_a = a[1..a.len() - 1].iter().any(|&v| sees(v));
    let seen_b = b[1..b.len() - 1].iter().any(|&v| sees(v));
    let (arc, other) = match (seen_a, seen_b) {
        (false, false) => return "short",
        (true, true) => return "general",
        (true, false) => (&a, &b),
        (false, true) => (&b, &a),
    };
    if arc.len() == 3 {
        "one"
    } else if other.len() != 3 && (sees(arc[1]) || sees(arc[arc.len() - 2])) {
        "sct"
    } else {
        "arc"
    }
}

fn kind_name(k: &JumpKind) -> &'static str {
    match k {
        JumpKind::Short => "short",
        JumpKind::LocalAcrossArc { .. } => "arc",
        JumpKind::LocalAcrossOneVertex { .. } => "one",
        JumpKind::EdgeLink => "edge",
        JumpKind::SctLink { .. } => "sct",
        JumpKind::General => "general",
    }
}

fn side(s: &str) -> ArcSide {
    if s == "q1" {
        ArcSide::Q1
    } else {
        ArcSide::Q2
    }
}

fn jump_taxonomy() -> Result<String, String> {
    let text = read_fixture("jump_fixtures.txt");
    let mut kinds = BTreeSet::new();
    let mut fixtures = 0;
    for line in content_lines(&text) {
        let f: Vec<&str> = line.split('|').map(str::trim).collect();
        let k: usize = f[0].parse().unwrap();
        let path: Vec<usize> = f[1].split_whitespace().map(|x| x.parse().unwrap()).collect();
        let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        if f[2] != "-" {
            for e in f[2].split_whitespace() {
                let (u, v) = e.split_once('-').unwrap();
                edges.push((u.parse().unwrap(), v.parse().unwrap()));
            }
        }
        let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
        let g = Graph::from_edges(n, &edges).unwrap();
        let hole = Hole::new(&g, &(0..k).collect::<Vec<_>>()).map_err(|e| format!("{line}: {e}"))?;
        let r = classify_jump(&g, &hole, &path).map_err(|e| format!("{line}: {e}"))?;
        let want: Vec<&str> = f[3].split_whitespace().collect();
        let ok = match (want[0], &r.kind) {
            ("short", JumpKind::Short) => {
                let ty = if want[1] == "o" { ShortType::O } else { ShortType::E };
                r.short_type == Some(ty)
            }
            ("one", JumpKind::LocalAcrossOneVertex { c }) => want[1].parse::<usize>().unwrap() == *c,
            ("arc", JumpKind::LocalAcrossArc { arc }) => side(want[1]) == *arc,
            ("sct", JumpKind::SctLink { c, anchor, arc }) => {
                want[1].parse::<usize>().unwrap() == *c && want[2].parse::<usize>().unwrap() == *anchor && side(want[3]) == *arc
            }
            ("edge", JumpKind::EdgeLink) | ("general", JumpKind::General) => true,
            _ => false,
        };
        ensure(ok, || format!("{line}: classified as {:?} {:?}", r.kind, r.short_type))?;
        kinds.insert(want[0].to_string() + if want[0] == "short" { want[1] } else { "" });
        fixtures += 1;
    }
    ensure(fixtures >= 50 && kinds.len() == 7, || format!("{fixtures} fixtures covering {kinds:?}"))?;

    // exclusivity and parity on every enumerated jump of a mixed corpus
    let mut corpus = theta_member_graphs();
    corpus.extend(random_members(40, 11));
    corpus.extend([petersen(), cycle(8), tutte_coxeter()]);
    let opts = JumpOptions {
        interior_cap: None,
        record_cap: Some(20_000),
    };
    let mut records = 0;
    for g in &corpus {
        for hole in enumerate_holes(g, 4, g.n()).iter().filter(|h| h.is_even()) {
            let e = enumerate_jumps_with(g, hole, &opts).map_err(|e| e.to_string())?;
            for r in &e.records {
                records += 1;
                let want = oracle_kind(g, hole.vertices(), &r.path);
                ensure(kind_name(&r.kind) == want, || format!("{:?} over {hole:?}: {:?} vs oracle {want}", r.path, r.kind))?;
                if r.is_short() {
                    let (p, q1, q2) = (r.len(), r.q1.len() - 1, r.q2.len() - 1);
                    ensure((p + q1) % 2 == (p + q2) % 2, || format!("parity identity fails for {:?}", r.path))?;
                    let ty = if (p + q1) % 2 == 1 { ShortType::O } else { ShortType::E };
                    ensure(r.short_type == Some(ty), || format!("type of {:?}", r.path))?;
                }
            }
        }
    }
    Ok(format!("{fixtures} fixtures over 7 kinds; {records} enumerated jumps agree with the oracle and parity"))
}

fn cut_oracles() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut graphs = 0;
    let mut mismatches = Vec::new();
    while graphs < 200 {
        let n = rng.gen_range(3..=8);
        let p: f64 = rng.gen_range(0.25..0.8);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if components_after(&g, &[]) != 1 {
            ensure(g.k1_cuts().is_err(), || "disconnected graph accepted".into())?;
            continue;
        }
        graphs += 1;
        let k1: Vec<usize> = (0..n).filter(|&v| components_after(&g, &[v]) > 1).collect();
        let k2: Vec<(usize, usize)> = edges.iter().copied().filter(|&(u, v)| components_after(&g, &[u, v]) > 1).collect();
        if g.k1_cuts().unwrap() != k1 || g.k2_cuts().unwrap() != k2 {
            mismatches.push(write_graph6(&g));
        }
    }
    ensure(mismatches.is_empty(), || format!("mismatches on {mismatches:?}"))?;
    Ok(format!("{graphs} connected graphs, zero mismatches"))
}

fn graph6_round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for i in 0..1000 {
        let n = rng.gen_range(1..=20);
        let p: f64 = rng.gen();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let s = write_graph6(&g);
        let back = parse_graph6(&s).map_err(|e| format!("graph {i}: {e}"))?;
        ensure(back == g && write_graph6(&back) == s, || format!("graph {i}: {s} does not round-trip"))?;
    }
    let mut fixture_lines = 0;
    for name in ["cages_girth8.g6"] {
        for line in content_lines(&read_fixture(name)) {
            let g = parse_graph6(line).map_err(|e| e.to_string())?;
            ensure(write_graph6(&g) == line, || format!("{name}: {line} not reproduced"))?;
            fixture_lines += 1;
        }
    }
    Ok(format!("1000 random graphs and {fixture_lines} fixture line(s) byte-exact"))
}

fn deterministic_audit() -> Result<String, String> {
    let mut corpus: Vec<Graph> = theta_member_graphs();
    corpus.extend(random_members(20, 3));
    corpus.extend([petersen(), cycle(8), complete(4), tutte_coxeter()]);
    let input: String = corpus.iter().map(|g| write_graph6(g) + "\n").collect();
    let run = |workers: &str| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(["h4graph", "audit", "--workers", workers], &mut input.as_bytes(), &mut out, &mut err);
        (code, out)
    };
    let (c1, a) = run("1");
    let (c2, b) = run("4");
    ensure(c1 == 0 && c2 == 0, || format!("exit codes {c1}, {c2}"))?;
    ensure(a == b, || "reports differ".into())?;
    let lines = a.iter().filter(|&&c| c == b'\n').count();
    ensure(lines == corpus.len(), || format!("{lines} lines for {} graphs", corpus.len()))?;
    Ok(format!("{} graphs, {} bytes identical across runs with 1 and 4 workers", corpus.len(), a.len()))
}
