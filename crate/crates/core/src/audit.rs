//! Structural audits: each check evaluates one statement about holes,
//! jumps and thetas on a concrete graph and reports PASS, VIOLATION,
//! VACUOUS (a hypothesis fails) or TRUNCATED (a search cap was hit before
//! the check could be settled).
//!
//! Most statements assume the graph is in the class and has no degree-2
//! vertex and no K1- or K2-cut. When the graph has a reduction the check is
//! VACUOUS. When the graph has none but is outside the class, the check is
//! still evaluated, with the finding marked informational.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cycles::{for_each_induced_cycle, is_member, Hole, MembershipVerdict, MembershipWitness};
use crate::graph::{CutCertificate, CutKind, Graph};
use crate::io::{GraphRecord, HoleJumps, StreamError, StreamItem};
use crate::jumps::{enumerate_jumps_with, ends_relation, JumpEnumeration, JumpKind, JumpOptions, JumpPairRelation, JumpRecord, ShortType};
use crate::theta::{check_theta_ear_lemma, find_theta_subgraphs, ThetaSubgraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// Members have a degree-2 vertex, a K1-cut or a K2-cut.
    Theorem1,
    ThetaEars,
    ThreeVertexPath,
    TypeEEnds,
    ShortJumpLengths,
    ParallelCrossing,
    LocalJump,
    FivePath,
    AnticompleteJumps,
    ClaimEndSetNonempty,
    ClaimEndSetNotTwo,
    ClaimEndSetNotThree,
    ClaimNoDistanceTwo,
    ClaimNoDistanceThree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Violation,
    Vacuous,
    Truncated,
}

/// Vertices, holes and paths that back a finding. Every part can be
/// re-checked against the raw adjacency with [`recheck_witness`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hole: Option<Vec<usize>>,
    /// A cycle that need not be induced (shortest cycle of the wrong length).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    /// Consecutive vertices of the hole.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subpath: Option<Vec<usize>>,
    /// Jump paths over the hole, end to end.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub jumps: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut: Option<CutCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<ThetaSubgraph>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub lemma: Lemma,
    pub graph_id: String,
    pub status: Status,
    /// Evaluated on a graph outside the class; carries no weight.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub note: String,
}

impl AuditFinding {
    /// A violation that counts: inside the class.
    pub fn is_hard_violation(&self) -> bool {
        self.status == Status::Violation && !self.informational
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub l: usize,
    /// Audit thetas that have an ear of length 1.
    pub include_short_ear_thetas: bool,
    /// Holes examined per graph.
    pub hole_cap: Option<usize>,
    pub jump_interior_cap: Option<usize>,
    /// Jump records per hole.
    pub jump_record_cap: Option<usize>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            l: 4,
            include_short_ear_thetas: true,
            hole_cap: Some(2000),
            jump_interior_cap: None,
            jump_record_cap: Some(20_000),
        }
    }
}

/// Shared per-graph state: membership, a reduction if any, and holes and
/// jumps computed on first use.
pub struct Analysis<'g> {
    g: &'g Graph,
    id: String,
    cfg: AuditConfig,
    membership: MembershipVerdict,
    reduction: Option<CutCertificate>,
    holes: OnceCell<(Vec<Hole>, bool)>,
    jumps: OnceCell<Vec<OnceCell<JumpEnumeration>>>,
}

impl<'g> Analysis<'g> {
    pub fn new(g: &'g Graph, id: impl Into<String>, cfg: &AuditConfig) -> Analysis<'g> {
        Analysis {
            g,
            id: id.into(),
            cfg: cfg.clone(),
            membership: is_member(g, cfg.l),
            reduction: g.find_cut_certificate(),
            holes: OnceCell::new(),
            jumps: OnceCell::new(),
        }
    }

    pub fn membership(&self) -> &MembershipVerdict {
        &self.membership
    }

    pub fn reduction(&self) -> Option<&CutCertificate> {
        self.reduction.as_ref()
    }

    fn member(&self) -> bool {
        self.membership.is_member
    }

    /// All holes up to the cap, and whether the cap was hit.
    pub fn holes(&self) -> (&[Hole], bool) {
        let (h, t) = self.holes.get_or_init(|| {
            let mut out = Vec::new();
            let mut truncated = false;
            let cap = self.cfg.hole_cap.unwrap_or(usize::MAX);
            let _ = for_each_induced_cycle(self.g, 4, self.g.n(), |c| {
                if out.len() == cap {
                    truncated = true;
                    return ControlFlow::Break(());
                }
                out.push(Hole::from_cycle(c));
                ControlFlow::Continue(())
            });
            out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            (out, truncated)
        });
        (h, *t)
    }

    pub fn jumps(&self, i: usize) -> &JumpEnumeration {
        let cells = self
            .jumps
            .get_or_init(|| (0..self.holes().0.len()).map(|_| OnceCell::new()).collect());
        cells[i].get_or_init(|| {
            let opts = JumpOptions {
                interior_cap: self.cfg.jump_interior_cap,
                record_cap: self.cfg.jump_record_cap,
            };
            enumerate_jumps_with(self.g, &self.holes().0[i], &opts).expect("enumerated holes are holes")
        })
    }

    fn even_holes(&self) -> impl Iterator<Item = usize> + '_ {
        let holes = self.holes().0;
        (0..holes.len()).filter(move |&i| holes[i].is_even())
    }

    fn finding(&self, lemma: Lemma, status: Status, witness: Option<Witness>, note: impl Into<String>) -> AuditFinding {
        AuditFinding {
            lemma,
            graph_id: self.id.clone(),
            status,
            informational: !self.member() && status != Status::Vacuous,
            witness,
            note: note.into(),
        }
    }

    fn membership_witness(&self) -> Witness {
        match &self.membership.witness {
            Some(MembershipWitness::EvenHole { hole }) => Witness {
                hole: Some(hole.vertices().to_vec()),
                ..Witness::default()
            },
            Some(MembershipWitness::Girth { cycle, .. }) => Witness {
                cycle: cycle.clone(),
                ..Witness::default()
            },
            None => Witness::default(),
        }
    }

    fn vacuous_non_member(&self, lemma: Lemma) -> AuditFinding {
        let note = match self.membership.girth {
            Some(g) if g != 2 * self.cfg.l => format!("not a member: girth {g}"),
            None => "not a member: acyclic".to_string(),
            _ => "not a member: long even hole".to_string(),
        };
        self.finding(lemma, Status::Vacuous, Some(self.membership_witness()), note)
    }

    /// VACUOUS when the no-reduction hypothesis fails.
    fn reduction_gate(&self, lemma: Lemma) -> Option<AuditFinding> {
        let cut = self.reduction.clone()?;
        let note = format!("hypothesis fails: {}", describe_cut(&cut));
        Some(self.finding(
            lemma,
            Status::Vacuous,
            Some(Witness {
                cut: Some(cut),
                ..Witness::default()
            }),
            note,
        ))
    }

    fn hole_truncation_note(&self) -> &'static str {
        if self.holes().1 {
            "; hole list truncated"
        } else {
            ""
        }
    }
}

fn describe_cut(c: &CutCertificate) -> String {
    match c.kind {
        CutKind::Degree2Vertex => format!("vertex {} has degree at most 2", c.vertices[0]),
        CutKind::K1Cut => format!("K1-cut at {}", c.vertices[0]),
        CutKind::K2Cut => format!("K2-cut at {:?}", c.vertices),
    }
}

fn hole_witness(h: &Hole) -> Witness {
    Witness {
        hole: Some(h.vertices().to_vec()),
        ..Witness::default()
    }
}

fn jump_witness(h: &Hole, jumps: &[&JumpRecord]) -> Witness {
    Witness {
        jumps: jumps.iter().map(|r| r.path.clone()).collect(),
        ..hole_witness(h)
    }
}

/// Outcome of scanning many configurations for one statement.
struct Scan {
    checked: usize,
    violation: Option<(Witness, String)>,
    truncated: bool,
}

impl Scan {
    fn new() -> Scan {
        Scan {
            checked: 0,
            violation: None,
            truncated: false,
        }
    }

    fn fail(&mut self, w: Witness, note: String) {
        if self.violation.is_none() {
            self.violation = Some((w, note));
        }
    }

    /// `existential`: the statement asserts that some jump exists, so a
    /// missing jump in a truncated search proves nothing.
    fn finish(self, a: &Analysis, lemma: Lemma, what: &str, existential: bool) -> AuditFinding {
        let truncated = self.truncated || a.holes().1;
        match self.violation {
            Some((w, note)) if !(existential && truncated) => a.finding(lemma, Status::Violation, Some(w), note),
            _ if truncated => a.finding(
                lemma,
                Status::Truncated,
                None,
                format!("{} {what} checked before a search cap was hit", self.checked),
            ),
            Some(_) => unreachable!(),
            None if self.checked == 0 => a.finding(lemma, Status::Pass, None, format!("no {what} present")),
            None => a.finding(lemma, Status::Pass, None, format!("{} {what} checked", self.checked)),
        }
    }
}

pub fn audit_theorem1(a: &Analysis) -> AuditFinding {
    if !a.member() {
        return a.vacuous_non_member(Lemma::Theorem1);
    }
    match &a.reduction {
        Some(cut) => a.finding(
            Lemma::Theorem1,
            Status::Pass,
            Some(Witness {
                cut: Some(cut.clone()),
                ..Witness::default()
            }),
            describe_cut(cut),
        ),
        None => a.finding(
            Lemma::Theorem1,
            Status::Violation,
            Some(Witness::default()),
            "member with minimum degree 3 and no K1- or K2-cut",
        ),
    }
}

/// One finding per induced theta of a member.
pub fn audit_theta_ears(a: &Analysis) -> Vec<AuditFinding> {
    if !a.member() {
        return vec![a.vacuous_non_member(Lemma::ThetaEars)];
    }
    let mut out = Vec::new();
    for t in find_theta_subgraphs(a.g, true) {
        if !a.cfg.include_short_ear_thetas && t.ear_lengths()[0] == 1 {
            continue;
        }
        let check = check_theta_ear_lemma(&t, a.cfg.l).expect("induced");
        let status = if check.pass { Status::Pass } else { Status::Violation };
        let note = match check.reason {
            Some(r) => format!("ears {:?}, {:?}", check.ears, r),
            None => format!("ears {:?}, cycles {:?}", check.ears, check.cycle_lengths),
        };
        let case = format!("{:?}", check.case);
        out.push(a.finding(
            Lemma::ThetaEars,
            status,
            Some(Witness {
                theta: Some(t),
                ..Witness::default()
            }),
            format!("{case}: {note}"),
        ));
    }
    if out.is_empty() {
        out.push(a.finding(Lemma::ThetaEars, Status::Pass, None, "no induced theta"));
    }
    out
}

/// No vertex off the hole has two neighbours on it.
fn hole_is_isolated(g: &Graph, h: &Hole) -> bool {
    (0..g.n())
        .filter(|&v| !h.contains(v))
        .all(|v| g.neighbors(v).iter().filter(|&&w| h.contains(w)).count() < 2)
}

/// One finding per qualifying hole.
pub fn audit_three_vertex_path(a: &Analysis) -> Vec<AuditFinding> {
    if let Some(f) = a.reduction_gate(Lemma::ThreeVertexPath) {
        return vec![f];
    }
    let holes = a.holes().0;
    let mut out = Vec::new();
    for (i, h) in holes.iter().enumerate() {
        if !hole_is_isolated(a.g, h) {
            continue;
        }
        let e = a.jumps(i);
        let short_end = |v| e.short_jumps().any(|r| r.has_end(v));
        let mut scan = Scan::new();
        scan.truncated = e.truncated;
        for p in h.subpaths(3) {
            let (x, y, z) = (p[0], p[1], p[2]);
            scan.checked += 1;
            let c1 = short_end(x) || short_end(z);
            let c2 = e.records.iter().any(|r| {
                r.ends == (x.min(z), x.max(z)) && r.kind == JumpKind::LocalAcrossOneVertex { c: y }
            });
            let c3 = short_end(y)
                || e.records
                    .iter()
                    .any(|r| r.has_end(y) && matches!(r.kind, JumpKind::LocalAcrossOneVertex { .. }));
            if !(c1 || c2 || c3) {
                let mut w = hole_witness(h);
                w.subpath = Some(p.clone());
                scan.fail(w, format!("no outcome holds for path {x}-{y}-{z}"));
            }
        }
        let mut f = scan.finish(a, Lemma::ThreeVertexPath, "paths", true);
        if f.witness.is_none() {
            f.witness = Some(hole_witness(h));
        }
        out.push(f);
    }
    if out.is_empty() {
        let note = format!("no hole avoids a vertex with two neighbours on it{}", a.hole_truncation_note());
        out.push(a.finding(Lemma::ThreeVertexPath, Status::Vacuous, None, note));
    }
    out
}

pub fn audit_type_e_ends(a: &Analysis) -> AuditFinding {
    if !a.member() {
        return a.vacuous_non_member(Lemma::TypeEEnds);
    }
    if a.cfg.l < 3 {
        return a.finding(Lemma::TypeEEnds, Status::Vacuous, None, "needs half-girth at least 3");
    }
    let mut scan = Scan::new();
    for i in a.even_holes().collect::<Vec<_>>() {
        let h = &a.holes().0[i];
        let e = a.jumps(i);
        scan.checked += 1;
        scan.truncated |= e.truncated;
        let type_e: Vec<&JumpRecord> = e.short_jumps().filter(|r| r.is_short_of(ShortType::E)).collect();
        if let Some(other) = type_e.iter().find(|r| r.ends != type_e[0].ends) {
            scan.fail(
                jump_witness(h, &[type_e[0], other]),
                format!("type-e jumps with ends {:?} and {:?}", type_e[0].ends, other.ends),
            );
        }
    }
    scan.finish(a, Lemma::TypeEEnds, "even holes", false)
}

/// Type-e short jumps over `2l`-holes have `|P| = |Q1| = |Q2| = l`; type-o
/// short jumps have `|P| > l`.
pub fn audit_short_jump_lengths(a: &Analysis) -> AuditFinding {
    if !a.member() {
        return a.vacuous_non_member(Lemma::ShortJumpLengths);
    }
    let l = a.cfg.l;
    let mut scan = Scan::new();
    for i in a.even_holes().collect::<Vec<_>>() {
        let h = &a.holes().0[i];
        let e = a.jumps(i);
        scan.truncated |= e.truncated;
        for r in e.short_jumps() {
            scan.checked += 1;
            let (p, q1, q2) = (r.len(), r.q1.len() - 1, r.q2.len() - 1);
            let ok = match r.short_type {
                Some(ShortType::E) if h.len() == 2 * l => p == l && q1 == l && q2 == l,
                Some(ShortType::O) => p > l,
                _ => true,
            };
            if !ok {
                scan.fail(
                    jump_witness(h, &[r]),
                    format!("{:?} short jump with |P|={p}, |Q1|={q1}, |Q2|={q2}", r.short_type.unwrap()),
                );
            }
        }
    }
    scan.finish(a, Lemma::ShortJumpLengths, "short jumps", false)
}

fn on_hole_adjacent(h: &Hole, x: usize, y: usize) -> bool {
    h.distance(x, y).is_ok_and(|d| d == 1)
}

/// Conclusion for two short jumps: a shared end forces the other ends to be
/// adjacent; four distinct ends need `u1u2, v1v2` edges or a hole path
/// `u_i u_{3-i} v_i`, under some naming of the ends.
fn parallel_crossing_holds(g: &Graph, h: &Hole, e1: (usize, usize), e2: (usize, usize)) -> bool {
    let names = |(a, b): (usize, usize)| [(a, b), (b, a)];
    for (u1, v1) in names(e1) {
        for (u2, v2) in names(e2) {
            if u1 == u2 {
                if g.has_edge(v1, v2) {
                    return true;
                }
                continue;
            }
            let distinct: BTreeSet<_> = [u1, v1, u2, v2].into_iter().collect();
            if distinct.len() != 4 {
                continue;
            }
            if g.has_edge(u1, u2) && g.has_edge(v1, v2) {
                return true;
            }
            let path = |x, y, z| on_hole_adjacent(h, x, y) && on_hole_adjacent(h, y, z);
            if path(u1, u2, v1) || path(u2, u1, v2) {
                return true;
            }
        }
    }
    false
}

pub fn audit_parallel_crossing(a: &Analysis) -> AuditFinding {
    if let Some(f) = a.reduction_gate(Lemma::ParallelCrossing) {
        return f;
    }
    let mut scan = Scan::new();
    for i in a.even_holes().collect::<Vec<_>>() {
        let h = &a.holes().0[i];
        let e = a.jumps(i);
        scan.truncated |= e.truncated;
        let short: Vec<&JumpRecord> = e.short_jumps().collect();
        for (x, p1) in short.iter().enumerate() {
            for p2 in &short[x + 1..] {
                let rel = ends_relation(h, p1.ends, p2.ends);
                if rel == JumpPairRelation::Parallel
                    && !(p1.is_short_of(ShortType::O) && p2.is_short_of(ShortType::O))
                {
                    continue;
                }
                scan.checked += 1;
                if !parallel_crossing_holds(a.g, h, p1.ends, p2.ends) {
                    scan.fail(
                        jump_witness(h, &[p1, p2]),
                        format!("{rel:?} short jumps with ends {:?} and {:?}", p1.ends, p2.ends),
                    );
                }
            }
        }
    }
    scan.finish(a, Lemma::ParallelCrossing, "jump pairs", false)
}

fn is_local(r: &JumpRecord) -> bool {
    matches!(
        r.kind,
        JumpKind::LocalAcrossArc { .. } | JumpKind::LocalAcrossOneVertex { .. } | JumpKind::SctLink { .. }
    )
}

pub fn audit_local_jump_lemma(a: &Analysis) -> AuditFinding {
    if let Some(f) = a.reduction_gate(Lemma::LocalJump) {
        return f;
    }
    let mut scan = Scan::new();
    let mut existential_failure = false;
    for i in a.even_holes().collect::<Vec<_>>() {
        let h = &a.holes().0[i];
        let e = a.jumps(i);
        scan.truncated |= e.truncated;
        let short_between = |x: usize, y: usize| e.short_jumps().any(|r| r.ends == (x.min(y), x.max(y)));
        for p1 in &e.records {
            let Some(s1) = p1.across_vertex() else { continue };
            for p2 in &e.records {
                if std::ptr::eq(p1, p2) || !(p2.is_short() || is_local(p2)) {
                    continue;
                }
                if ends_relation(h, p1.ends, p2.ends) != JumpPairRelation::Parallel {
                    continue;
                }
                let shared = p1.has_end(p2.ends.0) || p1.has_end(p2.ends.1);
                if let Some(s2) = p2.across_vertex() {
                    if shared {
                        continue;
                    }
                    scan.checked += 1;
                    let w2 = [p2.ends.0, p2.ends.1, s2];
                    let w1 = [p1.ends.0, p1.ends.1, s1];
                    let ok = w2.iter().any(|&w| short_between(s1, w)) || w1.iter().any(|&w| short_between(s2, w));
                    if !ok {
                        existential_failure = true;
                        scan.fail(
                            jump_witness(h, &[p1, p2]),
                            format!("no short jump from {s1} or {s2} to the other local jump"),
                        );
                    }
                } else if p2.is_short_of(ShortType::O) {
                    scan.checked += 1;
                    if !shared {
                        scan.fail(
                            jump_witness(h, &[p1, p2]),
                            format!("local jump {:?} and type-o short jump {:?} share no end", p1.ends, p2.ends),
                        );
                    }
                }
            }
        }
    }
    scan.finish(a, Lemma::LocalJump, "jump pairs", existential_failure)
}

pub fn audit_five_path(a: &Analysis) -> AuditFinding {
    if let Some(f) = a.reduction_gate(Lemma::FivePath) {
        return f;
    }
    let mut scan = Scan::new();
    let mut holes_with_type_o = 0;
    for i in a.even_holes().collect::<Vec<_>>() {
        let h = &a.holes().0[i];
        let e = a.jumps(i);
        if !e.short_jumps().any(|r| r.is_short_of(ShortType::O)) {
            scan.truncated |= e.truncated;
            continue;
        }
        holes_with_type_o += 1;
        scan.truncated |= e.truncated;
        let ends = e.end_set();
        for q in h.subpaths(5) {
            scan.checked += 1;
            if !q[1..4].iter().any(|&v| ends.contains(v)) {
                let mut w = hole_witness(h);
                w.subpath = Some(q.clone());
                scan.fail(w, format!("interior of {q:?} misses the end set {:?}", ends.vertices));
            }
        }
    }
    if holes_with_type_o == 0 && !scan.truncated && !a.holes().1 {
        return a.finding(Lemma::FivePath, Status::Vacuous, None, "no even hole carries a type-o short jump");
    }
    scan.finish(a, Lemma::FivePath, "five-vertex paths", true)
}

/// On an 8-hole `v1..v8`, a `(v1, v3)`-short jump and a `(v2, v6)`-short
/// jump have anticomplete interiors.
pub fn audit_anticomplete_jumps(a: &Analysis) -> AuditFinding {
    let mut scan = Scan::new();
    let holes = a.holes().0;
    for i in (0..holes.len()).filter(|&i| holes[i].len() == 8) {
        let h = &holes[i];
        let e = a.jumps(i);
        scan.truncated |= e.truncated;
        let short: Vec<&JumpRecord> = e.short_jumps().collect();
        for p in &short {
            let (x, y) = p.ends;
            if h.distance(x, y).ok() != Some(2) {
                continue;
            }
            // middle vertex of the short arc and its antipode
            let mid = if p.q1.len() == 3 { p.q1[1] } else { p.q2[1] };
            let far = h.step(mid, 4).unwrap();
            for q in short.iter().filter(|q| q.ends == (mid.min(far), mid.max(far))) {
                scan.checked += 1;
                let overlap = p.interior().iter().find(|v| q.interior().contains(v));
                let edge = p
                    .interior()
                    .iter()
                    .flat_map(|&u| q.interior().iter().map(move |&v| (u, v)))
                    .find(|&(u, v)| a.g.has_edge(u, v))
                    .map(|(u, v)| (u.min(v), u.max(v)));
                if let Some(&v) = overlap {
                    scan.fail(jump_witness(h, &[p, q]), format!("interiors share vertex {v}"));
                } else if let Some(edge) = edge {
                    let mut w = jump_witness(h, &[p, q]);
                    w.edge = Some(edge);
                    scan.fail(w, format!("edge {edge:?} joins the interiors"));
                }
            }
        }
    }
    scan.finish(a, Lemma::AnticompleteJumps, "jump pairs", false)
}

/// Statements about the end set of short jumps over an 8-hole of a member
/// with no reduction. Such a member would contradict the structure
/// theorem, so these only run inside that gate and diagnose the
/// counterexample.
pub fn audit_end_set_claims(a: &Analysis) -> Vec<AuditFinding> {
    let lemmas = [
        Lemma::ClaimEndSetNonempty,
        Lemma::ClaimEndSetNotTwo,
        Lemma::ClaimEndSetNotThree,
        Lemma::ClaimNoDistanceTwo,
        Lemma::ClaimNoDistanceThree,
    ];
    if !a.member() {
        return lemmas.iter().map(|&l| a.vacuous_non_member(l)).collect();
    }
    if a.reduction.is_some() {
        return lemmas.iter().map(|&l| a.reduction_gate(l).unwrap()).collect();
    }
    let mut scans: Vec<Scan> = lemmas.iter().map(|_| Scan::new()).collect();
    let holes = a.holes().0;
    for i in (0..holes.len()).filter(|&i| holes[i].len() == 2 * a.cfg.l) {
        let h = &holes[i];
        let e = a.jumps(i);
        let s = e.end_set();
        for scan in scans.iter_mut() {
            scan.checked += 1;
            scan.truncated |= e.truncated;
        }
        let bad_size = [s.is_empty(), s.len() == 2, s.len() == 3];
        for (k, bad) in bad_size.into_iter().enumerate() {
            if bad {
                scans[k].fail(hole_witness(h), format!("end set {:?}", s.vertices));
            }
        }
        for r in e.short_jumps() {
            let d = h.distance(r.ends.0, r.ends.1).unwrap();
            if d == 2 || d == 3 {
                scans[d + 1].fail(jump_witness(h, &[r]), format!("short jump {:?} at hole distance {d}", r.ends));
            }
        }
    }
    let existential = [true, true, true, false, false];
    scans
        .into_iter()
        .zip(lemmas)
        .zip(existential)
        .map(|((s, l), ex)| s.finish(a, l, "holes", ex))
        .collect()
}

/// Every audit on one graph, in a fixed order.
pub fn audit_all(a: &Analysis) -> Vec<AuditFinding> {
    let mut out = vec![audit_theorem1(a)];
    out.extend(audit_theta_ears(a));
    out.extend(audit_three_vertex_path(a));
    out.push(audit_type_e_ends(a));
    out.push(audit_short_jump_lengths(a));
    out.push(audit_parallel_crossing(a));
    out.push(audit_local_jump_lemma(a));
    out.push(audit_five_path(a));
    out.push(audit_anticomplete_jumps(a));
    out.extend(audit_end_set_claims(a));
    out
}

/// Full audit record for one graph.
pub fn audit_graph(g: &Graph, id: &str, cfg: &AuditConfig) -> GraphRecord {
    let a = Analysis::new(g, id, cfg);
    let mut rec = GraphRecord::new(id, g);
    rec.membership = Some(a.membership.clone());
    rec.cut = a.reduction.clone();
    rec.findings = audit_all(&a);
    rec
}

/// Counterexample search on one graph: membership, the reduction check, and
/// for a member without a reduction the end-set claims plus every hole and
/// jump.
pub fn search_graph(g: &Graph, id: &str, cfg: &AuditConfig) -> GraphRecord {
    let a = Analysis::new(g, id, cfg);
    let mut rec = GraphRecord::new(id, g);
    rec.membership = Some(a.membership.clone());
    rec.cut = a.reduction.clone();
    let t1 = audit_theorem1(&a);
    let counterexample = t1.status == Status::Violation;
    rec.findings.push(t1);
    if counterexample {
        rec.findings.extend(audit_end_set_claims(&a));
        rec.findings.extend(audit_all(&a).into_iter().skip(1));
        let holes = a.holes().0;
        rec.holes = Some(holes.to_vec());
        rec.jumps = Some(
            (0..holes.len())
                .map(|i| {
                    let e = a.jumps(i);
                    HoleJumps {
                        hole: e.hole.clone(),
                        jumps: e.records.clone(),
                        truncated: e.truncated,
                    }
                })
                .collect(),
        );
    }
    rec
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamSummary {
    pub graphs: usize,
    pub members: usize,
    pub parse_errors: usize,
    pub pass: usize,
    pub violations: usize,
    pub informational_violations: usize,
    pub vacuous: usize,
    pub truncated: usize,
}

impl StreamSummary {
    fn add(&mut self, rec: &GraphRecord) {
        if rec.error.is_some() {
            self.parse_errors += 1;
            return;
        }
        self.graphs += 1;
        if rec.membership.as_ref().is_some_and(|m| m.is_member) {
            self.members += 1;
        }
        for f in &rec.findings {
            match (f.status, f.informational) {
                (Status::Pass, _) => self.pass += 1,
                (Status::Violation, false) => self.violations += 1,
                (Status::Violation, true) => self.informational_violations += 1,
                (Status::Vacuous, _) => self.vacuous += 1,
                (Status::Truncated, _) => self.truncated += 1,
            }
        }
    }
}

const CHUNK: usize = 64;

/// Applies `work` to every streamed graph on `workers` threads (0 = all
/// cores) and hands the records to `emit` in input order. Parse failures
/// become records with `error` set.
pub fn process_stream<I, W, E>(items: I, workers: usize, work: W, mut emit: E) -> StreamSummary
where
    I: Iterator<Item = Result<StreamItem, StreamError>>,
    W: Fn(&StreamItem) -> GraphRecord + Sync,
    E: FnMut(&GraphRecord),
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let mut summary = StreamSummary::default();
    let mut items = items.peekable();
    while items.peek().is_some() {
        let chunk: Vec<_> = items.by_ref().take(CHUNK).collect();
        let records: Vec<GraphRecord> = pool.install(|| {
            chunk
                .par_iter()
                .map(|item| match item {
                    Ok(it) => {
                        let mut r = work(it);
                        r.duplicate_edges = it.duplicate_edges;
                        r
                    }
                    Err(e) => GraphRecord::parse_failure(e),
                })
                .collect()
        });
        for r in &records {
            summary.add(r);
            emit(r);
        }
    }
    summary
}

pub fn search_counterexamples<I, E>(items: I, cfg: &AuditConfig, workers: usize, emit: E) -> StreamSummary
where
    I: Iterator<Item = Result<StreamItem, StreamError>>,
    E: FnMut(&GraphRecord),
{
    process_stream(items, workers, |it| search_graph(&it.graph, &it.id, cfg), emit)
}

pub fn audit_stream<I, E>(items: I, cfg: &AuditConfig, workers: usize, emit: E) -> StreamSummary
where
    I: Iterator<Item = Result<StreamItem, StreamError>>,
    E: FnMut(&GraphRecord),
{
    process_stream(items, workers, |it| audit_graph(&it.graph, &it.id, cfg), emit)
}

/// Re-validates the structural parts of a witness from raw adjacency: the
/// hole is an induced cycle, subpaths run along it, jump paths are induced
/// paths with ends on the hole and interiors off it, the edge exists, the
/// cut certificate is valid, and a theta's ears are internally disjoint
/// paths between its hubs.
pub fn recheck_witness(g: &Graph, w: &Witness) -> Result<(), String> {
    let in_range = |v: usize| if v < g.n() { Ok(()) } else { Err(format!("vertex {v} out of range")) };
    let hole = match &w.hole {
        Some(h) => {
            h.iter().try_for_each(|&v| in_range(v))?;
            let k = h.len();
            let distinct: BTreeSet<_> = h.iter().collect();
            if k < 4 || distinct.len() != k {
                return Err("hole is not a simple cycle of length at least 4".into());
            }
            for i in 0..k {
                for j in i + 1..k {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    if g.has_edge(h[i], h[j]) != consecutive {
                        return Err(format!("hole pair ({}, {}) breaks inducedness", h[i], h[j]));
                    }
                }
            }
            Some(h)
        }
        None => None,
    };
    if let Some(c) = &w.cycle {
        c.iter().try_for_each(|&v| in_range(v))?;
        if (0..c.len()).any(|i| !g.has_edge(c[i], c[(i + 1) % c.len()])) {
            return Err("cycle uses a non-edge".into());
        }
    }
    if let Some(p) = &w.subpath {
        let h = hole.ok_or("subpath without hole")?;
        if p.windows(2).any(|x| !g.has_edge(x[0], x[1])) || p.iter().any(|v| !h.contains(v)) {
            return Err("subpath does not run along the hole".into());
        }
    }
    for p in &w.jumps {
        let h = hole.ok_or("jump without hole")?;
        p.iter().try_for_each(|&v| in_range(v))?;
        let (s, t) = (p[0], p[p.len() - 1]);
        if p.len() < 3 || !h.contains(&s) || !h.contains(&t) || p[1..p.len() - 1].iter().any(|v| h.contains(v)) {
            return Err(format!("{p:?} is not a jump over the hole"));
        }
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                let want = j == i + 1 || (i == 0 && j == p.len() - 1 && g.has_edge(s, t));
                if g.has_edge(p[i], p[j]) != want {
                    return Err(format!("{p:?} is not an induced path"));
                }
            }
        }
    }
    if let Some((u, v)) = w.edge {
        if !g.has_edge(u, v) {
            return Err(format!("({u}, {v}) is not an edge"));
        }
    }
    if let Some(c) = &w.cut {
        if !c.is_valid_for(g) {
            return Err("cut certificate is invalid".into());
        }
    }
    if let Some(t) = &w.theta {
        let (a, b) = t.hubs;
        let mut seen = BTreeSet::new();
        for ear in &t.ears {
            if ear.first() != Some(&a) || ear.last() != Some(&b) || ear.windows(2).any(|x| !g.has_edge(x[0], x[1])) {
                return Err("theta ear is not a hub-to-hub path".into());
            }
            for &v in &ear[1..ear.len() - 1] {
                if !seen.insert(v) {
                    return Err("theta ears are not internally disjoint".into());
                }
            }
        }
    }
    Ok(())
}
