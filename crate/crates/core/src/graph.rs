//! Immutable simple undirected graphs and the cut primitives used by the
//! structure theorem: degree-2 vertices, articulation vertices (K1-cuts) and
//! adjacent separating pairs (K2-cuts).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::Hole;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected; split it into components first")]
    Disconnected,
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric. Every vertex carries a label,
/// which defaults to its index and survives [`Graph::induced_subgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
}

/// Result of [`Graph::build`]: the graph plus how many input edges were
/// collapsed as duplicates.
#[derive(Debug, Clone)]
pub struct Built {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CutKind {
    Degree2Vertex,
    K1Cut,
    K2Cut,
}

/// Witness that a graph has one of the three reducible configurations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub kind: CutKind,
    pub vertices: Vec<usize>,
}

impl CutCertificate {
    /// Re-checks the certificate against `g` from raw adjacency.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        match (self.kind, self.vertices.as_slice()) {
            (CutKind::Degree2Vertex, &[v]) => g.degree(v) <= 2,
            (CutKind::K1Cut, &[v]) => g.components_without(&[v]).len() >= 2,
            (CutKind::K2Cut, &[u, v]) => {
                g.has_edge(u, v) && g.components_without(&[u, v]).len() >= 2
            }
            _ => false,
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops and out-of-range endpoints and
    /// collapsing repeated edges.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Built, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut total = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        let duplicate_edges = edges.len() - total / 2;
        let labels = (0..n).map(|v| v.to_string()).collect();
        Ok(Built {
            graph: Graph { adj, labels },
            duplicate_edges,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Self::build(n, edges).map(|b| b.graph)
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            labels: (0..n).map(|v| v.to_string()).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// True when every label equals the vertex index.
    pub fn has_default_labels(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, l)| *l == i.to_string())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// True iff no edge joins `a` to `b`. The sets must be disjoint.
    pub fn is_anticomplete(&self, a: &[usize], b: &[usize]) -> Result<bool, GraphError> {
        let mut in_b = vec![false; self.n()];
        for &v in b {
            if v >= self.n() {
                return Err(GraphError::NoSuchVertex(v));
            }
            in_b[v] = true;
        }
        for &v in a {
            if v >= self.n() {
                return Err(GraphError::NoSuchVertex(v));
            }
            if in_b[v] {
                return Err(GraphError::Overlap(v));
            }
        }
        Ok(a.iter().all(|&u| self.adj[u].iter().all(|&w| !in_b[w])))
    }

    /// Vertices of degree exactly two, ascending.
    pub fn degree2_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 2).collect()
    }

    /// Components sorted by their minimum vertex; each component is sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Components of the graph with `removed` deleted.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Articulation vertices, ascending, by the lowpoint DFS.
    pub fn k1_cuts(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n();
        if n == 0 {
            return Ok(Vec::new());
        }
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        let root = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < self.adj[v].len() {
                let w = self.adj[v][*idx];
                *idx += 1;
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        is_cut[root] = root_children >= 2;
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    /// Edges `(u, v)`, `u < v`, whose two ends together separate the graph.
    pub fn k2_cuts(&self) -> Result<Vec<(usize, usize)>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self
            .edges()
            .filter(|&(u, v)| self.components_without(&[u, v]).len() >= 2)
            .collect())
    }

    /// First reducible configuration in the fixed order: lowest vertex of
    /// degree at most two, then lowest articulation vertex, then the
    /// lexicographically first K2-cut. Disconnected graphs are searched
    /// component by component.
    pub fn find_cut_certificate(&self) -> Option<CutCertificate> {
        if let Some(v) = (0..self.n()).find(|&v| self.degree(v) <= 2) {
            return Some(CutCertificate {
                kind: CutKind::Degree2Vertex,
                vertices: vec![v],
            });
        }
        let comps = self.connected_components();
        let parts: Vec<(Graph, Vec<usize>)> = if comps.len() <= 1 {
            vec![(self.clone(), (0..self.n()).collect())]
        } else {
            comps.iter().map(|c| self.induced_subgraph(c)).collect()
        };
        let k1 = parts.iter().find_map(|(g, map)| {
            g.k1_cuts().ok()?.first().map(|&v| CutCertificate {
                kind: CutKind::K1Cut,
                vertices: vec![map[v]],
            })
        });
        if k1.is_some() {
            return k1;
        }
        parts.iter().find_map(|(g, map)| {
            g.k2_cuts().ok()?.first().map(|&(u, v)| CutCertificate {
                kind: CutKind::K2Cut,
                vertices: vec![map[u], map[v]],
            })
        })
    }

    /// Subgraph induced by `subset`. Returns the graph and the map from new
    /// indices to old ones; new indices follow ascending old order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> (Graph, Vec<usize>) {
        let keep: BTreeSet<usize> = subset.iter().copied().collect();
        let old_of_new: Vec<usize> = keep.into_iter().collect();
        let mut new_of_old = vec![usize::MAX; self.n()];
        for (i, &v) in old_of_new.iter().enumerate() {
            new_of_old[v] = i;
        }
        let adj = old_of_new
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| new_of_old[w] != usize::MAX)
                    .map(|&w| new_of_old[w])
                    .collect()
            })
            .collect();
        let labels = old_of_new.iter().map(|&v| self.labels[v].clone()).collect();
        (Graph { adj, labels }, old_of_new)
    }

    /// Graph with `removed` deleted, plus the new-to-old index map.
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let gone: BTreeSet<usize> = removed.iter().copied().collect();
        let rest: Vec<usize> = (0..self.n()).filter(|v| !gone.contains(v)).collect();
        self.induced_subgraph(&rest)
    }
}

/// Shorter of the two arc lengths between `s` and `t` along `hole`.
pub fn cycle_distance(hole: &Hole, s: usize, t: usize) -> Result<usize, GraphError> {
    hole.distance(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, theta};

    fn brute_k1(g: &Graph) -> Vec<usize> {
        (0..g.n())
            .filter(|&v| g.components_without(&[v]).len() >= 2)
            .collect()
    }

    #[test]
    fn build_rejects_malformed_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::OutOfRange(0, 3, 3))
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn duplicates_are_counted() {
        let b = Graph::build(3, &[(0, 1), (1, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(b.duplicate_edges, 2);
        assert_eq!(b.graph.m(), 2);
    }

    #[test]
    fn small_constructions() {
        let c8 = cycle(8);
        assert!((0..8).all(|v| c8.degree(v) == 2));
        let one = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((one.n(), one.m()), (1, 0));
        let t = theta(4, 4, 4).unwrap();
        assert_eq!(t.n(), 11);
        let hubs = (0..11).filter(|&v| t.degree(v) == 3).count();
        assert_eq!(hubs, 2);
        assert_eq!(t.degree2_vertices().len(), 9);
    }

    #[test]
    fn anticomplete_examples() {
        let c8 = cycle(8);
        assert!(c8.is_anticomplete(&[0], &[4]).unwrap());
        assert!(!c8.is_anticomplete(&[0], &[1]).unwrap());
        assert_eq!(c8.is_anticomplete(&[0, 1], &[1]), Err(GraphError::Overlap(1)));
        // theta(4,4,4): hubs 0 and 1, ear interiors 2..=4, 5..=7, 8..=10
        let t = theta(4, 4, 4).unwrap();
        assert!(t.is_anticomplete(&[2, 3, 4], &[5, 6, 7]).unwrap());
    }

    #[test]
    fn degree2_examples() {
        assert_eq!(cycle(8).degree2_vertices(), (0..8).collect::<Vec<_>>());
        assert!(complete(4).degree2_vertices().is_empty());
    }

    #[test]
    fn k1_examples() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(bowtie.k1_cuts().unwrap(), vec![2]);
        assert!(cycle(8).k1_cuts().unwrap().is_empty());
        assert_eq!(path(4).k1_cuts().unwrap(), vec![1, 2]);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.k1_cuts(), Err(GraphError::Disconnected));
    }

    #[test]
    fn k2_examples() {
        // two 5-cycles sharing the edge 0-1
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5), (5, 6), (6, 7), (7, 0)],
        )
        .unwrap();
        assert_eq!(g.k2_cuts().unwrap(), vec![(0, 1)]);
        assert!(cycle(8).k2_cuts().unwrap().is_empty());
        assert!(theta(4, 4, 4).unwrap().k2_cuts().unwrap().is_empty());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c8 = cycle(8);
        let (p, map) = c8.induced_subgraph(&[0, 1, 2]);
        assert_eq!(p.m(), 2);
        assert_eq!(map, vec![0, 1, 2]);
        let (same, id) = c8.induced_subgraph(&(0..8).collect::<Vec<_>>());
        assert_eq!(same, c8);
        assert_eq!(id, (0..8).collect::<Vec<_>>());
        let t = theta(4, 4, 4).unwrap();
        let (h, _) = t.induced_subgraph(&[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(h.m(), 8);
        assert!((0..8).all(|v| h.degree(v) == 2));
        assert!(h.is_connected());
    }

    #[test]
    fn labels_survive_extraction() {
        let g = cycle(5)
            .with_labels(["a", "b", "c", "d", "e"].map(String::from).to_vec())
            .unwrap();
        let (sub, _) = g.induced_subgraph(&[1, 3, 4]);
        assert_eq!(sub.labels(), &["b", "d", "e"]);
    }

    #[test]
    fn components_examples() {
        assert_eq!(cycle(8).connected_components().len(), 1);
        let two = Graph::from_edges(
            16,
            &(0..8)
                .flat_map(|o| [(o % 8, (o + 1) % 8), (8 + o % 8, 8 + (o + 1) % 8)])
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(two.connected_components().len(), 2);
        assert_eq!(Graph::empty(3).connected_components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn cycle_distance_examples() {
        let hole = Hole::from_cycle(&(0..8).collect::<Vec<_>>());
        assert_eq!(cycle_distance(&hole, 0, 2).unwrap(), 2);
        assert_eq!(cycle_distance(&hole, 0, 4).unwrap(), 4);
        // v2 and v8 in 1-based naming
        assert_eq!(cycle_distance(&hole, 1, 7).unwrap(), 2);
        assert_eq!(cycle_distance(&hole, 1, 9), Err(GraphError::NotOnCycle(9)));
    }

    #[test]
    fn certificate_order() {
        let c = cycle(8).find_cut_certificate().unwrap();
        assert_eq!(c.kind, CutKind::Degree2Vertex);
        assert_eq!(c.vertices, vec![0]);
        assert!(complete(4).find_cut_certificate().is_none());
        let bowtie4 = {
            // two K4 sharing vertex 0
            let mut e = vec![];
            for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
                e.push((a, b));
                e.push((if a == 0 { 0 } else { a + 3 }, b + 3));
            }
            Graph::from_edges(7, &e).unwrap()
        };
        let c = bowtie4.find_cut_certificate().unwrap();
        assert_eq!(c.kind, CutKind::K1Cut);
        assert!(c.is_valid_for(&bowtie4));
        assert_eq!(brute_k1(&bowtie4), vec![0]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let len = pairs.len();
                proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                    let e: Vec<_> = pairs
                        .iter()
                        .zip(&mask)
                        .filter(|(_, &keep)| keep)
                        .map(|(&p, _)| p)
                        .collect();
                    Graph::from_edges(n, &e).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn adjacency_is_symmetric(g in arb_graph(12)) {
                for u in 0..g.n() {
                    for &v in g.neighbors(u) {
                        prop_assert!(g.has_edge(v, u));
                    }
                }
            }

            #[test]
            fn cuts_match_deletion_oracle(g in arb_graph(10)) {
                for comp in g.connected_components() {
                    let (h, _) = g.induced_subgraph(&comp);
                    prop_assert_eq!(h.k1_cuts().unwrap(), brute_k1(&h));
                    let brute_k2: Vec<_> = h
                        .edges()
                        .filter(|&(u, v)| h.components_without(&[u, v]).len() >= 2)
                        .collect();
                    prop_assert_eq!(h.k2_cuts().unwrap(), brute_k2);
                }
            }

            #[test]
            fn induced_subgraph_is_monotone(g in arb_graph(10), mask in proptest::collection::vec(any::<bool>(), 10)) {
                let subset: Vec<usize> = (0..g.n()).filter(|&v| mask[v]).collect();
                let (h, map) = g.induced_subgraph(&subset);
                for (u, v) in h.edges() {
                    prop_assert!(g.has_edge(map[u], map[v]));
                }
                for (i, &u) in map.iter().enumerate() {
                    for (j, &v) in map.iter().enumerate() {
                        prop_assert_eq!(g.has_edge(u, v), h.has_edge(i, j));
                    }
                }
            }
        }
    }
}
