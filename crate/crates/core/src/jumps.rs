//! Induced paths attached to a hole and their classification.
//!
//! A jump over a hole `C` is an induced `(s, t)`-path `P` with `s, t` on `C`
//! and every interior vertex off `C`. The two `(s, t)`-arcs of `C` are `Q1`
//! and `Q2`; which interior vertices of those arcs see the interior of `P`
//! decides the kind:
//!
//! | condition                                         | kind                    |
//! |---------------------------------------------------|-------------------------|
//! | `s t` adjacent, `C - {s, t}` anticomplete to `P*` | [`JumpKind::EdgeLink`]  |
//! | neither arc interior sees `P*`                    | [`JumpKind::Short`]     |
//! | one arc interior sees `P*`, and it is one vertex  | [`JumpKind::LocalAcrossOneVertex`] |
//! | one arc sees `P*`, the arc neighbour of an end does, both arcs have at least two interior vertices | [`JumpKind::SctLink`] |
//! | one arc sees `P*`, otherwise                      | [`JumpKind::LocalAcrossArc`] |
//! | anything else                                     | [`JumpKind::General`]   |
//!
//! When `s` and `t` are adjacent the edge `st` is the only edge allowed
//! between non-consecutive vertices of `P`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{is_induced_cycle, Hole};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JumpError {
    #[error("cycle is not a hole of the graph")]
    NotAHole,
    #[error("path end {0} is not on the hole")]
    EndOffHole(usize),
    #[error("interior vertex {0} lies on the hole")]
    InteriorOnHole(usize),
    #[error("path needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex sequence is not an induced path")]
    NotInducedPath,
    #[error("jumps are over different holes")]
    DifferentHoles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ArcSide {
    Q1,
    Q2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JumpKind {
    Short,
    /// Local jump across an arc whose interior has several vertices.
    LocalAcrossArc { arc: ArcSide },
    LocalAcrossOneVertex { c: usize },
    EdgeLink,
    /// `s-c-t` link: `c` is the arc neighbour of `anchor`, sees the path
    /// interior, and the opposite arc interior does not.
    SctLink { c: usize, anchor: usize, arc: ArcSide },
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ShortType {
    /// `|P| + |Q1|` odd.
    #[serde(rename = "type-o")]
    O,
    /// `|P| + |Q1|` even.
    #[serde(rename = "type-e")]
    E,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpRecord {
    #[serde(skip)]
    hole: Hole,
    /// Ends with `s < t`.
    pub ends: (usize, usize),
    /// The path from `s` to `t`.
    pub path: Vec<usize>,
    pub kind: JumpKind,
    pub short_type: Option<ShortType>,
    /// Arc holding the smallest arc-interior vertex, from `s` to `t`.
    pub q1: Vec<usize>,
    pub q2: Vec<usize>,
}

impl JumpRecord {
    pub fn hole(&self) -> &Hole {
        &self.hole
    }

    /// Length of the path in edges.
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn interior(&self) -> &[usize] {
        &self.path[1..self.path.len() - 1]
    }

    pub fn is_short(&self) -> bool {
        self.kind == JumpKind::Short
    }

    pub fn is_short_of(&self, ty: ShortType) -> bool {
        self.short_type == Some(ty)
    }

    /// Crossing vertex of a local jump across one vertex.
    pub fn across_vertex(&self) -> Option<usize> {
        match self.kind {
            JumpKind::LocalAcrossOneVertex { c } => Some(c),
            _ => None,
        }
    }

    pub fn has_end(&self, v: usize) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }

    pub fn other_end(&self, v: usize) -> Option<usize> {
        match self.ends {
            (a, b) if a == v => Some(b),
            (a, b) if b == v => Some(a),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JumpPairRelation {
    Crossing,
    Parallel,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JumpOptions {
    /// Maximum number of interior vertices per path; `None` means
    /// `n - |C|`, which never truncates.
    pub interior_cap: Option<usize>,
    /// Stop after this many records.
    pub record_cap: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpEnumeration {
    pub hole: Hole,
    pub records: Vec<JumpRecord>,
    /// Set when a cap cut the search short; absence of a record is then not
    /// proof that none exists.
    pub truncated: bool,
}

impl JumpEnumeration {
    pub fn short_jumps(&self) -> impl Iterator<Item = &JumpRecord> {
        self.records.iter().filter(|r| r.is_short())
    }

    pub fn end_set(&self) -> EndSet {
        EndSet::from_records(&self.hole, &self.records, self.truncated)
    }
}

/// The ends of all short jumps over a hole.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndSet {
    pub hole: Hole,
    pub vertices: BTreeSet<usize>,
    pub truncated: bool,
}

impl EndSet {
    pub fn from_records(hole: &Hole, records: &[JumpRecord], truncated: bool) -> EndSet {
        let vertices = records
            .iter()
            .filter(|r| r.is_short())
            .flat_map(|r| [r.ends.0, r.ends.1])
            .collect();
        EndSet {
            hole: hole.clone(),
            vertices,
            truncated,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn check_hole(g: &Graph, hole: &Hole) -> Result<(), JumpError> {
    if is_induced_cycle(g, hole.vertices()) {
        Ok(())
    } else {
        Err(JumpError::NotAHole)
    }
}

/// Classifies `path` as a jump over `hole`. The path may be given in either
/// direction; the record is oriented from the smaller end.
pub fn classify_jump(g: &Graph, hole: &Hole, path: &[usize]) -> Result<JumpRecord, JumpError> {
    check_hole(g, hole)?;
    if path.len() < 3 {
        return Err(JumpError::TooShort(path.len()));
    }
    let (s, t) = (path[0], path[path.len() - 1]);
    for end in [s, t] {
        if !hole.contains(end) {
            return Err(JumpError::EndOffHole(end));
        }
    }
    if let Some(&v) = path[1..path.len() - 1].iter().find(|&&v| hole.contains(v)) {
        return Err(JumpError::InteriorOnHole(v));
    }
    if !is_jump_path(g, path) {
        return Err(JumpError::NotInducedPath);
    }
    Ok(classify_unchecked(g, hole, path))
}

/// Distinct vertices, consecutive ones adjacent, and no other edges except
/// possibly between the two ends.
fn is_jump_path(g: &Graph, path: &[usize]) -> bool {
    let k = path.len();
    if path.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let distinct: BTreeSet<_> = path.iter().collect();
    if distinct.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let expected = j == i + 1;
            let ends = i == 0 && j == k - 1;
            if !ends && g.has_edge(path[i], path[j]) != expected {
                return false;
            }
        }
    }
    true
}

fn classify_unchecked(g: &Graph, hole: &Hole, path: &[usize]) -> JumpRecord {
    let mut path = path.to_vec();
    if path[0] > path[path.len() - 1] {
        path.reverse();
    }
    let (s, t) = (path[0], path[path.len() - 1]);
    let interior = &path[1..path.len() - 1];
    let sees = |v: usize| interior.iter().any(|&p| g.has_edge(v, p));

    let (fwd, bwd) = hole.arcs(s, t).expect("ends are on the hole");
    let min_inner = |arc: &[usize]| arc[1..arc.len() - 1].iter().copied().min();
    let (q1, q2) = match (min_inner(&fwd), min_inner(&bwd)) {
        (Some(a), Some(b)) if b < a => (bwd, fwd),
        (None, Some(_)) => (bwd, fwd),
        _ => (fwd, bwd),
    };
    let inner = |arc: &[usize]| arc[1..arc.len() - 1].to_vec();
    let (in1, in2) = (inner(&q1), inner(&q2));
    let seen1 = in1.iter().any(|&v| sees(v));
    let seen2 = in2.iter().any(|&v| sees(v));

    let kind = if g.has_edge(s, t) {
        if seen1 || seen2 {
            JumpKind::General
        } else {
            JumpKind::EdgeLink
        }
    } else {
        match (seen1, seen2) {
            (false, false) => JumpKind::Short,
            (true, true) => JumpKind::General,
            (one, _) => {
                let (side, arc, touched, other) = if one {
                    (ArcSide::Q1, &q1, &in1, &in2)
                } else {
                    (ArcSide::Q2, &q2, &in2, &in1)
                };
                if touched.len() == 1 {
                    JumpKind::LocalAcrossOneVertex { c: touched[0] }
                } else if other.len() != 1 && sees(arc[1]) {
                    JumpKind::SctLink {
                        c: arc[1],
                        anchor: s,
                        arc: side,
                    }
                } else if other.len() != 1 && sees(arc[arc.len() - 2]) {
                    JumpKind::SctLink {
                        c: arc[arc.len() - 2],
                        anchor: t,
                        arc: side,
                    }
                } else {
                    JumpKind::LocalAcrossArc { arc: side }
                }
            }
        }
    };
    let short_type = (kind == JumpKind::Short && hole.is_even()).then(|| {
        if (path.len() - 1 + q1.len() - 1) % 2 == 1 {
            ShortType::O
        } else {
            ShortType::E
        }
    });
    JumpRecord {
        hole: hole.clone(),
        ends: (s, t),
        path,
        kind,
        short_type,
        q1,
        q2,
    }
}

/// Every jump over `hole`, classified, sorted by ends then path.
pub fn enumerate_jumps(g: &Graph, hole: &Hole) -> Result<Vec<JumpRecord>, JumpError> {
    Ok(enumerate_jumps_with(g, hole, &JumpOptions::default())?.records)
}

pub fn enumerate_jumps_with(g: &Graph, hole: &Hole, opts: &JumpOptions) -> Result<JumpEnumeration, JumpError> {
    check_hole(g, hole)?;
    Ok(enumerate_over_cycle(g, hole, opts))
}

/// Enumeration without the hole check, so that triangles can be used as
/// the base cycle when collecting theta subgraphs.
pub(crate) fn enumerate_over_cycle(g: &Graph, hole: &Hole, opts: &JumpOptions) -> JumpEnumeration {
    let n = g.n();
    let mut on_hole = vec![false; n];
    for &v in hole.vertices() {
        on_hole[v] = true;
    }
    let mut search = JumpSearch {
        g,
        hole,
        on_hole,
        on_path: vec![false; n],
        touch: vec![0; n],
        path: Vec::new(),
        cap: opts.interior_cap.unwrap_or(n - hole.len()),
        record_cap: opts.record_cap.unwrap_or(usize::MAX),
        records: Vec::new(),
        truncated: false,
    };
    let mut starts = hole.vertices().to_vec();
    starts.sort_unstable();
    'outer: for s in starts {
        search.path.clear();
        search.path.push(s);
        search.on_path[s] = true;
        for &p1 in g.neighbors(s) {
            if search.on_hole[p1] {
                continue;
            }
            if search.cap == 0 {
                search.truncated = true;
                break;
            }
            search.push(p1);
            let stop = search.extend();
            search.pop();
            if stop {
                search.on_path[s] = false;
                break 'outer;
            }
        }
        search.on_path[s] = false;
    }
    let mut records = search.records;
    let truncated = search.truncated;
    records.sort_by(|a, b| a.ends.cmp(&b.ends).then_with(|| a.path.cmp(&b.path)));
    JumpEnumeration {
        hole: hole.clone(),
        records,
        truncated,
    }
}

struct JumpSearch<'a> {
    g: &'a Graph,
    hole: &'a Hole,
    on_hole: Vec<bool>,
    on_path: Vec<bool>,
    /// Number of interior path vertices adjacent to each vertex.
    touch: Vec<usize>,
    path: Vec<usize>,
    cap: usize,
    record_cap: usize,
    records: Vec<JumpRecord>,
    truncated: bool,
}

impl JumpSearch<'_> {
    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.on_path[v] = true;
        for &w in self.g.neighbors(v) {
            self.touch[w] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().unwrap();
        self.on_path[v] = false;
        for &w in self.g.neighbors(v) {
            self.touch[w] -= 1;
        }
    }

    /// Returns true when the record cap was hit.
    fn extend(&mut self) -> bool {
        let g = self.g;
        let s = self.path[0];
        let last = *self.path.last().unwrap();
        for &t in g.neighbors(last) {
            if self.on_hole[t] && t > s && self.touch[t] == 1 {
                if self.records.len() >= self.record_cap {
                    self.truncated = true;
                    return true;
                }
                self.path.push(t);
                let rec = classify_unchecked(g, self.hole, &self.path);
                self.path.pop();
                self.records.push(rec);
            }
        }
        let interior = self.path.len() - 1;
        for &w in g.neighbors(last) {
            if self.on_hole[w] || self.on_path[w] || self.touch[w] != 1 || g.has_edge(w, s) {
                continue;
            }
            if interior >= self.cap {
                self.truncated = true;
                continue;
            }
            self.push(w);
            let stop = self.extend();
            self.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Crossing when the four ends are distinct and alternate around the hole;
/// parallel otherwise.
pub fn relation(hole: &Hole, a: &JumpRecord, b: &JumpRecord) -> Result<JumpPairRelation, JumpError> {
    if a.hole != *hole || b.hole != *hole {
        return Err(JumpError::DifferentHoles);
    }
    Ok(ends_relation(hole, a.ends, b.ends))
}

/// The crossing test on bare end pairs.
pub fn ends_relation(hole: &Hole, (u1, v1): (usize, usize), (u2, v2): (usize, usize)) -> JumpPairRelation {
    let distinct: BTreeSet<_> = [u1, v1, u2, v2].into_iter().collect();
    if distinct.len() < 4 {
        return JumpPairRelation::Parallel;
    }
    let n = hole.len();
    let pos = |v| hole.position(v).expect("end on hole");
    let (p1, q1) = (pos(u1), pos(v1));
    let inside = |x: usize| {
        let off = (pos(x) + n - p1) % n;
        off > 0 && off < (q1 + n - p1) % n
    };
    if inside(u2) != inside(v2) {
        JumpPairRelation::Crossing
    } else {
        JumpPairRelation::Parallel
    }
}

/// Ends of all short jumps over `hole`.
pub fn end_set(g: &Graph, hole: &Hole) -> Result<EndSet, JumpError> {
    Ok(enumerate_jumps_with(g, hole, &JumpOptions::default())?.end_set())
}
