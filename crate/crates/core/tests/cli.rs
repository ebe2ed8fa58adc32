use h4graph::cli;
use h4graph::io::{parse_record_line, parse_report};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], input: &str) -> Out {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("h4graph").chain(args.iter().copied());
    let code = cli::run(argv, &mut input.as_bytes(), &mut stdout, &mut stderr);
    Out {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

#[test]
fn gen_then_member() {
    let g = run(&["gen", "theta", "4", "4", "4"], "");
    assert_eq!(g.code, 0);
    let m = run(&["member"], &g.stdout);
    assert_eq!(m.code, 0, "{}", m.stderr);
    let rec = parse_record_line(m.stdout.trim()).unwrap();
    assert!(rec.membership.unwrap().is_member);
}

#[test]
fn non_member_is_not_an_error() {
    let m = run(&["member"], "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(m.code, 0);
    let rec = parse_record_line(m.stdout.trim()).unwrap();
    assert!(!rec.membership.unwrap().is_member);
}

#[test]
fn k4_needs_four_colours() {
    let k4 = run(&["gen", "complete", "4"], "").stdout;
    let c = run(&["color"], &k4);
    assert_eq!(c.code, 1);
    let rec = parse_record_line(c.stdout.trim()).unwrap();
    assert_eq!(rec.coloring.unwrap().colors_used, 4);
}

#[test]
fn theta_colours_with_three() {
    let g = run(&["gen", "theta", "9", "4", "4"], "").stdout;
    let c = run(&["color", "--trace"], &g);
    assert_eq!(c.code, 0, "{}", c.stderr);
    let summary = parse_record_line(c.stdout.trim()).unwrap().coloring.unwrap();
    assert!(summary.proper && summary.colors_used <= 3);
    assert!(summary.trace.is_some());
}

#[test]
fn bad_flag_and_parse_errors() {
    assert_eq!(run(&["member", "--no-such-flag"], "").code, 2);
    let bad = run(&["member", "--format", "g6"], "C~\n!!\n");
    assert_eq!(bad.code, 2);
    assert_eq!(bad.stdout.lines().count(), 2);
    assert!(parse_record_line(bad.stdout.lines().nth(1).unwrap()).unwrap().error.is_some());
}

#[test]
fn empty_input_gives_empty_output() {
    let e = run(&["audit"], "");
    assert_eq!(e.code, 0);
    assert!(e.stdout.is_empty());
}

#[test]
fn pretty_report_lists_every_graph() {
    let input = run(&["gen", "theta-members"], "").stdout;
    let r = run(&["holes", "--pretty"], &input);
    assert_eq!(r.code, 0);
    let report = parse_report(&r.stdout).unwrap();
    assert_eq!(report.graphs.len(), input.lines().count());
    assert!(report.graphs.iter().all(|g| !g.holes.as_ref().unwrap().is_empty()));
}

#[test]
fn search_reports_even_hole_in_cage() {
    let g = run(&["gen", "tutte-coxeter"], "").stdout;
    let s = run(&["search"], &g);
    assert_eq!(s.code, 0);
    let rec = parse_record_line(s.stdout.trim()).unwrap();
    let m = rec.membership.unwrap();
    assert!(!m.is_member);
    assert_eq!(m.girth, Some(8));
}

#[test]
fn random_members_are_reproducible() {
    let a = run(&["gen", "random-members", "--count", "5", "--seed", "3"], "").stdout;
    let b = run(&["gen", "random-members", "--count", "5", "--seed", "3"], "").stdout;
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 5);
    let m = run(&["member"], &a);
    for line in m.stdout.lines() {
        assert!(parse_record_line(line).unwrap().membership.unwrap().is_member);
    }
}
