//! Graph families used as corpora: cycles, thetas, subdivisions, a few named
//! graphs, and random members of the class built by gluing members along
//! vertices and edges.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::cycles::is_member;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("ear lengths must be at least 1")]
    ZeroEar,
    #[error("a theta may have at most one ear of length 1")]
    ParallelEars,
    #[error("subdivision length for edge ({0}, {1}) must be at least 1")]
    ZeroSubdivision(usize, usize),
    #[error("expected {expected} subdivision lengths, got {got}")]
    CountMismatch { expected: usize, got: usize },
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle needs n >= 3")
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Two hubs `0` and `1` joined by ears of the given lengths (in edges). Ear
/// interiors are numbered consecutively from 2 in argument order.
pub fn theta(a: usize, b: usize, c: usize) -> Result<Graph, GenError> {
    let ears = [a, b, c];
    if ears.contains(&0) {
        return Err(GenError::ZeroEar);
    }
    if ears.iter().filter(|&&e| e == 1).count() > 1 {
        return Err(GenError::ParallelEars);
    }
    let n = 2 + ears.iter().map(|e| e - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for len in ears {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(Graph::from_edges(n, &edges).unwrap())
}

/// Replaces every edge of `base` (in [`Graph::edges`] order) by a path of the
/// given length. A length of 1 keeps the edge.
pub fn subdivision(base: &Graph, lengths: &[usize]) -> Result<Graph, GenError> {
    let base_edges: Vec<_> = base.edges().collect();
    if lengths.len() != base_edges.len() {
        return Err(GenError::CountMismatch {
            expected: base_edges.len(),
            got: lengths.len(),
        });
    }
    let mut next = base.n();
    let mut edges = Vec::new();
    for (&(u, v), &len) in base_edges.iter().zip(lengths) {
        if len == 0 {
            return Err(GenError::ZeroSubdivision(u, v));
        }
        let mut prev = u;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Ok(Graph::from_edges(next, &edges).unwrap())
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Cubic graph from LCF notation: a Hamiltonian cycle plus chords
/// `i -> i + shifts[i mod len]`.
pub fn lcf(n: usize, shifts: &[isize]) -> Graph {
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        edges.push((i.min(j), i.max(j)));
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// The Tutte–Coxeter graph (Tutte 8-cage): 30 vertices, cubic, girth 8.
pub fn tutte_coxeter() -> Graph {
    lcf(30, &[-13, -9, 7, -7, 9, 13])
}

/// The Heawood graph (6-cage).
pub fn heawood() -> Graph {
    lcf(14, &[5, -5])
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.n();
    let edges: Vec<_> = a
        .edges()
        .chain(b.edges().map(|(u, v)| (u + off, v + off)))
        .collect();
    Graph::from_edges(a.n() + b.n(), &edges).unwrap()
}

/// Identifies vertex `x` of `a` with vertex `y` of `b`.
pub fn glue_at_vertex(a: &Graph, x: usize, b: &Graph, y: usize) -> Graph {
    glue(a, b, &[(x, y)])
}

/// Identifies edge `(x1, x2)` of `a` with edge `(y1, y2)` of `b`,
/// `x1 ~ y1` and `x2 ~ y2`.
pub fn glue_at_edge(a: &Graph, (x1, x2): (usize, usize), b: &Graph, (y1, y2): (usize, usize)) -> Graph {
    glue(a, b, &[(x1, y1), (x2, y2)])
}

fn glue(a: &Graph, b: &Graph, pairs: &[(usize, usize)]) -> Graph {
    let mut map = vec![usize::MAX; b.n()];
    for &(x, y) in pairs {
        map[y] = x;
    }
    let mut next = a.n();
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let edges: Vec<_> = a
        .edges()
        .chain(b.edges().map(|(u, v)| (map[u], map[v])))
        .collect();
    Graph::from_edges(next, &edges).unwrap()
}

/// Every ear triple `a <= b <= c <= max_ear` with at most one ear of
/// length 1.
pub fn theta_triples(max_ear: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=max_ear {
        for b in a..=max_ear {
            for c in b..=max_ear {
                if a == 1 && b == 1 {
                    continue;
                }
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Subdivisions of K4 with edge lengths in `1..=max_len` that belong to
/// the class for the given half-girth.
pub fn k4_subdivision_members(l: usize, max_len: usize) -> Vec<Graph> {
    let k4 = complete(4);
    let mut out = Vec::new();
    let mut lengths = vec![1usize; 6];
    loop {
        // triangles have length at least 2l, so no tiny cases
        let g = subdivision(&k4, &lengths).unwrap();
        if is_member(&g, l).is_member {
            out.push(g);
        }
        let mut i = 0;
        while i < 6 {
            lengths[i] += 1;
            if lengths[i] <= max_len {
                break;
            }
            lengths[i] = 1;
            i += 1;
        }
        if i == 6 {
            return out;
        }
    }
}

/// Random member built from a seed pool by repeated vertex and edge
/// gluings followed by optional relabelling. Gluing two members at a
/// vertex or along an edge keeps the girth and creates no new holes, so the
/// result stays in the class whenever the pool does.
pub fn random_glued_member<R: Rng>(rng: &mut R, pool: &[Graph], max_parts: usize) -> Graph {
    let parts = rng.gen_range(1..=max_parts.max(1));
    let mut g = pool.choose(rng).expect("non-empty pool").clone();
    for _ in 1..parts {
        let h = pool.choose(rng).unwrap();
        if rng.gen_bool(0.5) {
            let x = rng.gen_range(0..g.n());
            let y = rng.gen_range(0..h.n());
            g = glue_at_vertex(&g, x, h, y);
        } else {
            let ge: Vec<_> = g.edges().collect();
            let he: Vec<_> = h.edges().collect();
            let &(x1, x2) = ge.choose(rng).unwrap();
            let &(y1, y2) = he.choose(rng).unwrap();
            let flip = rng.gen_bool(0.5);
            let (y1, y2) = if flip { (y2, y1) } else { (y1, y2) };
            g = glue_at_edge(&g, (x1, x2), h, (y1, y2));
        }
    }
    shuffle_labels(rng, &g)
}

/// Isomorphic copy under a random vertex permutation.
pub fn shuffle_labels<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::girth;

    #[test]
    fn theta_sizes() {
        assert_eq!(theta(4, 4, 4).unwrap().n(), 11);
        assert_eq!(theta(1, 7, 7).unwrap().n(), 14);
        assert_eq!(theta(1, 1, 5), Err(GenError::ParallelEars));
        assert_eq!(theta(0, 3, 5), Err(GenError::ZeroEar));
        assert_eq!(girth(&theta(4, 4, 4).unwrap()), Some(8));
        assert_eq!(girth(&theta(1, 7, 7).unwrap()), Some(8));
    }

    #[test]
    fn subdivision_examples() {
        let k4 = complete(4);
        let g = subdivision(&k4, &[4; 6]).unwrap();
        assert_eq!(girth(&g), Some(12));
        assert_eq!(subdivision(&cycle(8), &[1; 8]).unwrap(), cycle(8));
        assert_eq!(
            subdivision(&k4, &[1, 1, 0, 1, 1, 1]),
            Err(GenError::ZeroSubdivision(0, 3))
        );
    }

    #[test]
    fn named_graphs() {
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(girth(&p), Some(5));
        let t = tutte_coxeter();
        assert_eq!((t.n(), t.m()), (30, 45));
        assert!((0..30).all(|v| t.degree(v) == 3));
        assert_eq!(girth(&t), Some(8));
        assert_eq!(girth(&heawood()), Some(6));
    }

    #[test]
    fn gluing_counts() {
        let c = cycle(8);
        let g = glue_at_vertex(&c, 0, &c, 3);
        assert_eq!((g.n(), g.m()), (15, 16));
        let g = glue_at_edge(&c, (0, 1), &c, (4, 5));
        assert_eq!((g.n(), g.m()), (14, 15));
        assert_eq!(girth(&g), Some(8));
    }
}
