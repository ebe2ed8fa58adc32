//! 3-colouring by decomposition.
//!
//! The colourer strips vertices of degree at most two, splits at K1- and
//! K2-cuts, colours the pieces recursively and glues the colourings back
//! together by permuting palettes on the shared vertices. Small or
//! irreducible pieces are coloured by exhaustive search, so the procedure
//! is total: it either returns a proper colouring with at most three
//! colours or a piece that needs more.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::is_member;
use crate::graph::{CutCertificate, CutKind, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {0} is not coloured")]
    Uncolored(usize),
    #[error("graph has {n} vertices, above the exhaustive-search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("shared vertices {0} and {1} have the same colour in one piece")]
    SharedPairSameColor(usize, usize),
    #[error("colourings disagree on the shared vertices in a way no permutation fixes")]
    Incompatible,
    #[error("trace does not match the graph: {0}")]
    BadTrace(String),
}

/// Map from vertex to colour `0..k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    colors: BTreeMap<usize, usize>,
}

impl Coloring {
    pub fn new() -> Coloring {
        Coloring::default()
    }

    /// Colouring of `0..colors.len()`.
    pub fn from_slice(colors: &[usize]) -> Coloring {
        Coloring {
            colors: colors.iter().copied().enumerate().collect(),
        }
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors.get(&v).copied()
    }

    pub fn set(&mut self, v: usize, color: usize) {
        self.colors.insert(v, color);
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    /// One more than the largest colour used.
    pub fn palette_size(&self) -> usize {
        self.colors.values().max().map_or(0, |m| m + 1)
    }

    pub fn colors_used(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    pub fn restrict(&self, vertices: &[usize]) -> Coloring {
        Coloring {
            colors: vertices
                .iter()
                .filter_map(|&v| self.get(v).map(|c| (v, c)))
                .collect(),
        }
    }

    pub fn to_vec(&self, n: usize) -> Result<Vec<usize>, ColoringError> {
        (0..n)
            .map(|v| self.get(v).ok_or(ColoringError::Uncolored(v)))
            .collect()
    }

    fn relabel(&self, map: &[usize]) -> Coloring {
        Coloring {
            colors: self.colors.iter().map(|(&v, &c)| (map[v], c)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub proper: bool,
    pub violation: Option<(usize, usize)>,
}

/// Scans the edges in lexicographic order and reports the first one whose
/// ends share a colour.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<Verification, ColoringError> {
    for v in 0..g.n() {
        if c.get(v).is_none() {
            return Err(ColoringError::Uncolored(v));
        }
    }
    let violation = g.edges().find(|&(u, v)| c.get(u) == c.get(v));
    Ok(Verification {
        proper: violation.is_none(),
        violation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chromatic {
    Exact(usize),
    /// More colours than the cap are needed.
    AboveCap(usize),
}

pub const DEFAULT_BRUTE_LIMIT: usize = 24;

/// Exact chromatic number up to `cap` by backtracking. The vertex order is
/// breadth-first and a vertex may open at most one new colour, so the first
/// vertex of each search is fixed to colour 0.
pub fn brute_force_chromatic(g: &Graph, cap: usize, limit: usize) -> Result<Chromatic, ColoringError> {
    if g.n() > limit {
        return Err(ColoringError::TooLarge { n: g.n(), limit });
    }
    if g.n() == 0 {
        return Ok(Chromatic::Exact(0));
    }
    for k in 1..=cap {
        if find_coloring(g, k).is_some() {
            return Ok(Chromatic::Exact(k));
        }
    }
    Ok(Chromatic::AboveCap(cap))
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let order = bfs_order(g);
    let mut colors = vec![usize::MAX; n];
    fn go(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                if go(g, order, i + 1, k, used.max(c + 1), colors) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }
    if go(g, &order, 0, k, 0, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut roots: Vec<usize> = (0..g.n()).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn two_coloring(g: &Graph) -> Option<Vec<usize>> {
    let mut colors = vec![usize::MAX; g.n()];
    for r in 0..g.n() {
        if colors[r] != usize::MAX {
            continue;
        }
        colors[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if colors[w] == usize::MAX {
                    colors[w] = 1 - colors[v];
                    queue.push_back(w);
                } else if colors[w] == colors[v] {
                    return None;
                }
            }
        }
    }
    Some(colors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseMethod {
    Trivial,
    Bipartite,
    Brute,
}

/// Colours a leaf with at most three colours. Deterministic.
fn color_base(g: &Graph) -> Result<(Vec<usize>, BaseMethod), ()> {
    if g.m() == 0 {
        return Ok((vec![0; g.n()], BaseMethod::Trivial));
    }
    if let Some(c) = two_coloring(g) {
        return Ok((c, BaseMethod::Bipartite));
    }
    find_coloring(g, 3).map(|c| (c, BaseMethod::Brute)).ok_or(())
}

/// One step of the decomposition, over original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceNode {
    /// Vertices of degree at most two removed in this order.
    Strip { vertices: Vec<usize>, rest: Box<TraceNode> },
    /// Split into pieces sharing exactly the cut vertices; no cut means the
    /// graph was disconnected.
    Split {
        cut: Option<CutCertificate>,
        pieces: Vec<TracePiece>,
    },
    Base {
        vertices: Vec<usize>,
        method: BaseMethod,
        /// Minimum degree at least three and no cut: the fallback search
        /// ran on a piece the structure theorem says cannot be a member.
        stuck_without_cut: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TracePiece {
    pub vertices: Vec<usize>,
    /// Membership of the piece, when piece checking is enabled.
    pub in_class: Option<bool>,
    pub node: TraceNode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTrace {
    pub root: TraceNode,
}

impl DecompositionTrace {
    /// Every vertex the trace accounts for: stripped vertices plus leaf
    /// sets, with shared cut vertices counted once.
    pub fn covered_vertices(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        collect_vertices(&self.root, &mut out);
        out
    }

    pub fn stuck_without_cut(&self) -> bool {
        any_stuck(&self.root)
    }

    /// Cut certificates used, in pre-order.
    pub fn cuts(&self) -> Vec<CutCertificate> {
        let mut out = Vec::new();
        collect_cuts(&self.root, &mut out);
        out
    }

    /// True when some split piece was found to be outside the class.
    pub fn pieces_left_class(&self) -> bool {
        fn go(n: &TraceNode) -> bool {
            match n {
                TraceNode::Strip { rest, .. } => go(rest),
                TraceNode::Split { pieces, .. } => pieces
                    .iter()
                    .any(|p| p.in_class == Some(false) || go(&p.node)),
                TraceNode::Base { .. } => false,
            }
        }
        go(&self.root)
    }
}

fn collect_vertices(node: &TraceNode, out: &mut BTreeSet<usize>) {
    match node {
        TraceNode::Strip { vertices, rest } => {
            out.extend(vertices);
            collect_vertices(rest, out);
        }
        TraceNode::Split { pieces, .. } => pieces.iter().for_each(|p| collect_vertices(&p.node, out)),
        TraceNode::Base { vertices, .. } => out.extend(vertices),
    }
}

fn any_stuck(node: &TraceNode) -> bool {
    match node {
        TraceNode::Strip { rest, .. } => any_stuck(rest),
        TraceNode::Split { pieces, .. } => pieces.iter().any(|p| any_stuck(&p.node)),
        TraceNode::Base {
            stuck_without_cut, ..
        } => *stuck_without_cut,
    }
}

fn collect_cuts(node: &TraceNode, out: &mut Vec<CutCertificate>) {
    match node {
        TraceNode::Strip { rest, .. } => collect_cuts(rest, out),
        TraceNode::Split { cut, pieces } => {
            out.extend(cut.clone());
            pieces.iter().for_each(|p| collect_cuts(&p.node, out));
        }
        TraceNode::Base { .. } => {}
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorConfig {
    /// Pieces with at most this many vertices go straight to search.
    pub base_threshold: usize,
    /// Size limit for the exact chromatic number of a failing leaf.
    pub brute_limit: usize,
    /// When set, record whether each split piece is a member for this
    /// half-girth.
    pub piece_membership: Option<usize>,
}

impl Default for ColorConfig {
    fn default() -> Self {
        ColorConfig {
            base_threshold: 8,
            brute_limit: DEFAULT_BRUTE_LIMIT,
            piece_membership: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colored {
    pub coloring: Coloring,
    pub trace: DecompositionTrace,
}

/// A leaf that has no 3-colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureReport {
    pub vertices: Vec<usize>,
    /// Exact chromatic number of the leaf when it is small enough.
    pub chromatic: Option<usize>,
    pub stuck_without_cut: bool,
}

pub fn color3(g: &Graph) -> Result<Colored, FailureReport> {
    color3_with(g, &ColorConfig::default())
}

pub fn color3_with(g: &Graph, cfg: &ColorConfig) -> Result<Colored, FailureReport> {
    let map: Vec<usize> = (0..g.n()).collect();
    let (coloring, root) = solve(g, &map, cfg)?;
    Ok(Colored {
        coloring,
        trace: DecompositionTrace { root },
    })
}

fn solve(g: &Graph, map: &[usize], cfg: &ColorConfig) -> Result<(Coloring, TraceNode), FailureReport> {
    // strip
    let mut cur = g.clone();
    let mut cur_map = map.to_vec();
    let mut stripped = Vec::new();
    while cur.n() > cfg.base_threshold {
        let Some(v) = (0..cur.n()).find(|&v| cur.degree(v) <= 2) else {
            break;
        };
        stripped.push(cur_map[v]);
        let (next, sub) = cur.without(&[v]);
        cur_map = sub.iter().map(|&i| cur_map[i]).collect();
        cur = next;
    }
    if !stripped.is_empty() {
        let (mut coloring, rest) = solve(&cur, &cur_map, cfg)?;
        extend_stripped(g, map, &stripped, &mut coloring);
        let node = TraceNode::Strip {
            vertices: stripped,
            rest: Box::new(rest),
        };
        return Ok((coloring, node));
    }

    if g.n() <= cfg.base_threshold {
        return base(g, map, cfg, false);
    }

    // min degree >= 3 from here on
    let comps = g.connected_components();
    let (cut, pieces): (Option<CutCertificate>, Vec<Vec<usize>>) = if comps.len() > 1 {
        (None, comps)
    } else if let Some(&v) = g.k1_cuts().expect("connected").first() {
        let pieces = g
            .components_without(&[v])
            .into_iter()
            .map(|mut c| {
                c.push(v);
                c.sort_unstable();
                c
            })
            .collect();
        let cert = CutCertificate {
            kind: CutKind::K1Cut,
            vertices: vec![map[v]],
        };
        (Some(cert), pieces)
    } else if let Some(&(u, v)) = g.k2_cuts().expect("connected").first() {
        let pieces = g
            .components_without(&[u, v])
            .into_iter()
            .map(|mut c| {
                c.extend([u, v]);
                c.sort_unstable();
                c
            })
            .collect();
        let cert = CutCertificate {
            kind: CutKind::K2Cut,
            vertices: vec![map[u], map[v]],
        };
        (Some(cert), pieces)
    } else {
        return base(g, map, cfg, true);
    };

    let shared: Vec<usize> = cut.as_ref().map(|c| c.vertices.clone()).unwrap_or_default();
    let mut merged: Option<Coloring> = None;
    let mut trace_pieces = Vec::new();
    for piece in pieces {
        let (h, sub) = g.induced_subgraph(&piece);
        let h_map: Vec<usize> = sub.iter().map(|&i| map[i]).collect();
        let in_class = cfg.piece_membership.map(|l| is_member(&h, l).is_member);
        let (c, node) = solve(&h, &h_map, cfg)?;
        merged = Some(match merged {
            None => c,
            Some(acc) => merge_colorings(&acc, &c, &shared).expect("pieces agree on a proper cut"),
        });
        trace_pieces.push(TracePiece {
            vertices: h_map,
            in_class,
            node,
        });
    }
    let node = TraceNode::Split {
        cut,
        pieces: trace_pieces,
    };
    Ok((merged.unwrap_or_default(), node))
}

fn base(g: &Graph, map: &[usize], cfg: &ColorConfig, stuck: bool) -> Result<(Coloring, TraceNode), FailureReport> {
    match color_base(g) {
        Ok((colors, method)) => {
            let coloring = Coloring::from_slice(&colors).relabel(map);
            let node = TraceNode::Base {
                vertices: map.to_vec(),
                method,
                stuck_without_cut: stuck,
            };
            Ok((coloring, node))
        }
        Err(()) => {
            let chromatic = match brute_force_chromatic(g, g.n(), cfg.brute_limit) {
                Ok(Chromatic::Exact(k)) => Some(k),
                _ => None,
            };
            Err(FailureReport {
                vertices: map.to_vec(),
                chromatic,
                stuck_without_cut: stuck,
            })
        }
    }
}

/// Colours stripped vertices in reverse order with the smallest colour not
/// used by an already coloured neighbour.
fn extend_stripped(g: &Graph, map: &[usize], stripped: &[usize], coloring: &mut Coloring) {
    let mut local = BTreeMap::new();
    for (i, &v) in map.iter().enumerate() {
        local.insert(v, i);
    }
    for &v in stripped.iter().rev() {
        let lv = local[&v];
        let taken: BTreeSet<usize> = g
            .neighbors(lv)
            .iter()
            .filter_map(|&w| coloring.get(map[w]))
            .collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        coloring.set(v, c);
    }
}

/// The palette permutation that makes `c2` agree with `c1` on `shared`:
/// forced pairs first, then untouched colours stay fixed, then the rest are
/// paired in ascending order. `result[x]` is the new name of colour `x`.
pub fn merge_permutation(c1: &Coloring, c2: &Coloring, shared: &[usize]) -> Result<Vec<usize>, ColoringError> {
    let k = c1.palette_size().max(c2.palette_size()).max(3);
    let mut perm = vec![usize::MAX; k];
    let mut target_used = vec![false; k];
    for &v in shared {
        let a = c1.get(v).ok_or(ColoringError::Uncolored(v))?;
        let b = c2.get(v).ok_or(ColoringError::Uncolored(v))?;
        if perm[b] == usize::MAX && !target_used[a] {
            perm[b] = a;
            target_used[a] = true;
        } else if perm[b] != a {
            return Err(ColoringError::Incompatible);
        }
    }
    for x in 0..k {
        if perm[x] == usize::MAX && !target_used[x] {
            perm[x] = x;
            target_used[x] = true;
        }
    }
    let mut free = (0..k).filter(|&y| !target_used[y]);
    for slot in perm.iter_mut() {
        if *slot == usize::MAX {
            *slot = free.next().unwrap();
        }
    }
    Ok(perm)
}

/// Renames the colours of `c2` so that it agrees with `c1` on `shared`
/// (one vertex, or the two ends of an edge) and returns the union.
pub fn merge_colorings(c1: &Coloring, c2: &Coloring, shared: &[usize]) -> Result<Coloring, ColoringError> {
    if let &[u, v] = shared {
        for c in [c1, c2] {
            if c.get(u).is_some() && c.get(u) == c.get(v) {
                return Err(ColoringError::SharedPairSameColor(u, v));
            }
        }
    }
    let perm = merge_permutation(c1, c2, shared)?;
    let mut out = c1.clone();
    for (v, c) in c2.iter() {
        out.set(v, perm[c]);
    }
    Ok(out)
}

/// Recomputes the colouring a trace describes, using only the trace and
/// the graph.
pub fn replay_trace(g: &Graph, trace: &DecompositionTrace) -> Result<Coloring, ColoringError> {
    replay(g, &trace.root)
}

fn replay(g: &Graph, node: &TraceNode) -> Result<Coloring, ColoringError> {
    match node {
        TraceNode::Base { vertices, .. } => {
            let (h, sub) = g.induced_subgraph(vertices);
            let (colors, _) = color_base(&h).map_err(|_| ColoringError::BadTrace("leaf is not 3-colourable".into()))?;
            Ok(Coloring::from_slice(&colors).relabel(&sub))
        }
        TraceNode::Strip { vertices, rest } => {
            let mut c = replay(g, rest)?;
            for &v in vertices.iter().rev() {
                if v >= g.n() {
                    return Err(ColoringError::BadTrace(format!("vertex {v} out of range")));
                }
                let taken: BTreeSet<usize> = g.neighbors(v).iter().filter_map(|&w| c.get(w)).collect();
                if taken.len() > 2 {
                    return Err(ColoringError::BadTrace(format!("stripped vertex {v} sees {} colours", taken.len())));
                }
                c.set(v, (0..).find(|x| !taken.contains(x)).unwrap());
            }
            Ok(c)
        }
        TraceNode::Split { cut, pieces } => {
            let shared = cut.as_ref().map(|c| c.vertices.clone()).unwrap_or_default();
            let mut acc: Option<Coloring> = None;
            for p in pieces {
                let c = replay(g, &p.node)?;
                acc = Some(match acc {
                    None => c,
                    Some(a) => merge_colorings(&a, &c, &shared)?,
                });
            }
            Ok(acc.unwrap_or_default())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, glue_at_edge, glue_at_vertex, petersen, theta};

    fn check_colored(g: &Graph) -> Colored {
        let out = color3(g).expect("3-colourable");
        let v = verify_coloring(g, &out.coloring).unwrap();
        assert!(v.proper, "{:?}", v.violation);
        assert!(out.coloring.palette_size() <= 3);
        assert_eq!(out.trace.covered_vertices(), (0..g.n()).collect());
        assert_eq!(replay_trace(g, &out.trace).unwrap(), out.coloring);
        out
    }

    #[test]
    fn theta_444_strips_to_base() {
        let g = theta(4, 4, 4).unwrap();
        let out = check_colored(&g);
        match &out.trace.root {
            TraceNode::Strip { rest, .. } => assert!(matches!(**rest, TraceNode::Base { .. })),
            other => panic!("unexpected trace {other:?}"),
        }
        assert!(out.trace.cuts().is_empty());
    }

    #[test]
    fn theta_944_needs_three() {
        let g = theta(9, 4, 4).unwrap();
        let out = check_colored(&g);
        assert_eq!(out.coloring.colors_used(), 3);
        assert_eq!(brute_force_chromatic(&g, 4, 24).unwrap(), Chromatic::Exact(3));
    }

    #[test]
    fn k4_fails_with_witness() {
        let f = color3(&complete(4)).unwrap_err();
        assert_eq!(f.chromatic, Some(4));
        assert_eq!(f.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn cuts_are_used_on_min_degree_three_graphs() {
        let p = petersen();
        let g = glue_at_edge(&p, (0, 1), &p, (0, 1));
        let out = check_colored(&g);
        assert_eq!(out.trace.cuts()[0].kind, CutKind::K2Cut);
        let g = glue_at_vertex(&p, 0, &p, 3);
        let out = check_colored(&g);
        assert_eq!(out.trace.cuts()[0].kind, CutKind::K1Cut);
        assert!(out.trace.stuck_without_cut(), "petersen pieces have no cut");
        let out = check_colored(&p);
        assert!(out.trace.stuck_without_cut());
    }

    #[test]
    fn merge_examples() {
        let c1 = Coloring::from_slice(&[0]);
        let c2 = Coloring::from_slice(&[2]);
        assert_eq!(merge_permutation(&c1, &c2, &[0]).unwrap(), vec![2, 1, 0]);
        let c1 = Coloring::from_slice(&[0, 1]);
        let c2 = Coloring::from_slice(&[1, 2]);
        assert_eq!(merge_permutation(&c1, &c2, &[0, 1]).unwrap(), vec![2, 0, 1]);
        let c1 = Coloring::from_slice(&[1, 2]);
        assert_eq!(merge_permutation(&c1, &c1, &[0, 1]).unwrap(), vec![0, 1, 2]);
        let bad = Coloring::from_slice(&[1, 1]);
        assert_eq!(
            merge_colorings(&c1, &bad, &[0, 1]),
            Err(ColoringError::SharedPairSameColor(0, 1))
        );
    }

    #[test]
    fn verify_examples() {
        let c8 = cycle(8);
        let alt = Coloring::from_slice(&(0..8).map(|i| i % 2).collect::<Vec<_>>());
        assert!(verify_coloring(&c8, &alt).unwrap().proper);
        let mono = Coloring::from_slice(&[0; 8]);
        assert_eq!(verify_coloring(&c8, &mono).unwrap().violation, Some((0, 1)));
        assert_eq!(
            verify_coloring(&c8, &Coloring::from_slice(&[0; 7])),
            Err(ColoringError::Uncolored(7))
        );
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(brute_force_chromatic(&cycle(8), 5, 24).unwrap(), Chromatic::Exact(2));
        assert_eq!(brute_force_chromatic(&cycle(9), 5, 24).unwrap(), Chromatic::Exact(3));
        assert_eq!(brute_force_chromatic(&petersen(), 5, 24).unwrap(), Chromatic::Exact(3));
        assert_eq!(brute_force_chromatic(&complete(5), 3, 24).unwrap(), Chromatic::AboveCap(3));
        assert_eq!(
            brute_force_chromatic(&cycle(30), 3, 24),
            Err(ColoringError::TooLarge { n: 30, limit: 24 })
        );
    }

    #[test]
    fn trace_serialises_and_replays() {
        let p = petersen();
        let g = glue_at_edge(&glue_at_vertex(&p, 0, &p, 5), (1, 2), &theta(4, 4, 4).unwrap(), (0, 2));
        let out = check_colored(&g);
        let json = serde_json::to_string(&out.trace).unwrap();
        let back: DecompositionTrace = serde_json::from_str(&json).unwrap();
        assert_eq!(replay_trace(&g, &back).unwrap(), out.coloring);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn merged_pieces_are_permutations(a in proptest::collection::vec(0usize..3, 4), b in proptest::collection::vec(0usize..3, 4)) {
                // shared vertices 0 and 1 must differ in both pieces
                prop_assume!(a[0] != a[1] && b[0] != b[1]);
                let c1 = Coloring::from_slice(&a);
                let c2: Coloring = {
                    let mut c = Coloring::new();
                    c.set(0, b[0]);
                    c.set(1, b[1]);
                    c.set(10, b[2]);
                    c.set(11, b[3]);
                    c
                };
                let m = merge_colorings(&c1, &c2, &[0, 1]).unwrap();
                prop_assert_eq!(m.restrict(&[0, 1, 2, 3]), c1.clone());
                // same colour pattern on the second piece
                let verts = [0, 1, 10, 11];
                for &x in &verts {
                    for &y in &verts {
                        prop_assert_eq!(c2.get(x) == c2.get(y), m.get(x) == m.get(y));
                    }
                }
            }
        }
    }
}
