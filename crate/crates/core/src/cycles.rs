//! Girth, induced-cycle enumeration and class membership.
//!
//! A hole is an induced cycle of length at least four. The class for
//! half-girth `l` consists of the graphs of girth exactly `2l` with no even
//! hole longer than `2l`.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(len: usize) -> Parity {
        if len % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A cycle in canonical rotation: the smallest vertex first, then the
/// direction whose second vertex is smaller.
///
/// [`Hole::new`] checks that the cycle is a hole of a given graph;
/// [`Hole::from_cycle`] only canonicalises.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hole {
    vertices: Vec<usize>,
}

impl Hole {
    pub fn new(g: &Graph, cycle: &[usize]) -> Result<Hole, HoleError> {
        if cycle.len() < 4 {
            return Err(HoleError::TooShort(cycle.len()));
        }
        if !is_induced_cycle(g, cycle) {
            return Err(HoleError::NotInduced);
        }
        Ok(Hole::from_cycle(cycle))
    }

    pub fn from_cycle(cycle: &[usize]) -> Hole {
        Hole {
            vertices: canonical_cycle(cycle),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.len())
    }

    pub fn is_even(&self) -> bool {
        self.len() % 2 == 0
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertex `steps` positions after `v` along the canonical direction.
    pub fn step(&self, v: usize, steps: isize) -> Option<usize> {
        let n = self.len() as isize;
        let p = self.position(v)? as isize;
        Some(self.vertices[(p + steps).rem_euclid(n) as usize])
    }

    pub fn distance(&self, s: usize, t: usize) -> Result<usize, GraphError> {
        let ps = self.position(s).ok_or(GraphError::NotOnCycle(s))?;
        let pt = self.position(t).ok_or(GraphError::NotOnCycle(t))?;
        let d = ps.abs_diff(pt);
        Ok(d.min(self.len() - d))
    }

    /// The two `(s, t)`-paths along the cycle, both running from `s` to
    /// `t`: first the forward one in canonical direction, then the backward
    /// one.
    pub fn arcs(&self, s: usize, t: usize) -> Result<(Vec<usize>, Vec<usize>), GraphError> {
        let n = self.len();
        let ps = self.position(s).ok_or(GraphError::NotOnCycle(s))?;
        let pt = self.position(t).ok_or(GraphError::NotOnCycle(t))?;
        let fwd_len = (pt + n - ps) % n;
        let forward = (0..=fwd_len).map(|i| self.vertices[(ps + i) % n]).collect();
        let backward = (0..=n - fwd_len)
            .map(|i| self.vertices[(ps + n - i) % n])
            .collect();
        Ok((forward, backward))
    }

    /// All paths on the cycle with `k` vertices, one per starting position,
    /// in canonical direction.
    pub fn subpaths(&self, k: usize) -> Vec<Vec<usize>> {
        let n = self.len();
        if k > n {
            return Vec::new();
        }
        (0..n)
            .map(|i| (0..k).map(|j| self.vertices[(i + j) % n]).collect())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HoleError {
    #[error("a hole needs at least 4 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex sequence is not an induced cycle")]
    NotInduced,
}

pub(crate) fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let (p, _) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).unwrap();
    let fwd: Vec<usize> = (0..n).map(|i| cycle[(p + i) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|i| cycle[(p + n - i) % n]).collect();
    fwd.min(bwd)
}

/// True when consecutive vertices (cyclically) are adjacent, all vertices
/// are distinct, and there are no other edges among them.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = cycle.len();
    if n < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let consecutive = j == i + 1 || (i == 0 && j == n - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// A shortest cycle in canonical form, found by breadth-first search from
/// every vertex.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| 2 * dist[u] + 1 >= b.len()) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_none_or(|b| len < b.len()) {
                        best = Some(tree_cycle(&parent, u, w));
                    }
                }
            }
        }
    }
    best.map(|c| canonical_cycle(&c))
}

/// Cycle closed by the non-tree edge `u-w` in a BFS tree given by `parent`.
fn tree_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = to_root(u);
    let pw = to_root(w);
    let (mut i, mut j) = (pu.len(), pw.len());
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

/// Walks every induced cycle whose length lies in `min_len..=max_len`
/// (triangles included when `min_len <= 3`). Each cycle is visited once,
/// in canonical form. The visitor may stop the walk early.
pub fn for_each_induced_cycle<F>(g: &Graph, min_len: usize, max_len: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    let min_len = min_len.max(3);
    let max_len = max_len.min(n);
    if min_len > max_len {
        return ControlFlow::Continue(());
    }
    let mut walker = Walker {
        g,
        min_len,
        max_len,
        dist: vec![usize::MAX; n],
        touch: vec![0; n],
        on_path: vec![false; n],
        path: Vec::with_capacity(n),
    };
    for root in 0..n {
        walker.root_distances(root);
        walker.path.clear();
        walker.path.push(root);
        walker.on_path[root] = true;
        for &p1 in g.neighbors(root) {
            if p1 < root {
                continue;
            }
            walker.push(p1);
            let flow = walker.extend(&mut visit);
            walker.pop();
            flow?;
        }
        walker.on_path[root] = false;
    }
    ControlFlow::Continue(())
}

struct Walker<'a> {
    g: &'a Graph,
    min_len: usize,
    max_len: usize,
    dist: Vec<usize>,
    /// For each vertex, how many non-root path vertices it is adjacent to.
    touch: Vec<usize>,
    on_path: Vec<bool>,
    path: Vec<usize>,
}

impl Walker<'_> {
    fn root_distances(&mut self, root: usize) {
        self.dist.iter_mut().for_each(|d| *d = usize::MAX);
        self.dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in self.g.neighbors(u) {
                if w > root && self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

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

    fn extend<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let root = self.path[0];
        let last = *self.path.last().unwrap();
        let k = self.path.len() - 1;
        for idx in 0..self.g.neighbors(last).len() {
            let w = self.g.neighbors(last)[idx];
            if w < root || self.on_path[w] || self.touch[w] != 1 {
                continue;
            }
            if self.g.has_edge(w, root) {
                let len = k + 2;
                if len >= self.min_len && len <= self.max_len && self.path[1] < w {
                    self.path.push(w);
                    let flow = visit(&self.path);
                    self.path.pop();
                    flow?;
                }
                continue;
            }
            let d = self.dist[w];
            if d == usize::MAX || k + 2 + d - 1 > self.max_len {
                continue;
            }
            self.push(w);
            let flow = self.extend(visit);
            self.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Every hole with length in `min_len..=max_len`, canonical, sorted by
/// length then vertex sequence.
pub fn enumerate_holes(g: &Graph, min_len: usize, max_len: usize) -> Vec<Hole> {
    let mut out = Vec::new();
    let _ = for_each_induced_cycle(g, min_len.max(4), max_len, |c| {
        out.push(Hole::from_cycle(c));
        ControlFlow::Continue(())
    });
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
    out
}

/// All holes of any length.
pub fn all_holes(g: &Graph) -> Vec<Hole> {
    enumerate_holes(g, 4, g.n())
}

/// First hole of exactly `len` vertices in walk order, if any.
pub fn find_hole_of_length(g: &Graph, len: usize) -> Option<Hole> {
    let mut found = None;
    let _ = for_each_induced_cycle(g, len, len, |c| {
        found = Some(Hole::from_cycle(c));
        ControlFlow::Break(())
    });
    found
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MembershipWitness {
    /// The girth differs from `2l`; `cycle` is a shortest cycle if any.
    Girth {
        girth: Option<usize>,
        cycle: Option<Vec<usize>>,
    },
    /// A shortest even hole longer than `2l`.
    EvenHole { hole: Hole },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub l: usize,
    pub girth: Option<usize>,
    #[serde(rename = "member")]
    pub is_member: bool,
    pub witness: Option<MembershipWitness>,
}

/// Decides membership in the class with half-girth `l`. Non-members carry
/// a witness: a shortest cycle when the girth is wrong, otherwise a
/// shortest even hole longer than `2l`.
pub fn is_member(g: &Graph, l: usize) -> MembershipVerdict {
    assert!(l >= 2, "half-girth must be at least 2");
    let cycle = shortest_cycle(g);
    let girth = cycle.as_ref().map(Vec::len);
    if girth != Some(2 * l) {
        return MembershipVerdict {
            l,
            girth,
            is_member: false,
            witness: Some(MembershipWitness::Girth { girth, cycle }),
        };
    }
    let mut len = 2 * l + 2;
    while len <= g.n() {
        if let Some(hole) = find_hole_of_length(g, len) {
            return MembershipVerdict {
                l,
                girth,
                is_member: false,
                witness: Some(MembershipWitness::EvenHole { hole }),
            };
        }
        len += 2;
    }
    MembershipVerdict {
        l,
        girth,
        is_member: true,
        witness: None,
    }
}
