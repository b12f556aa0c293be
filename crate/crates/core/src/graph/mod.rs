//! Simple undirected graphs on vertices `0..n`, with graph6 I/O, named
//! generators, structural predicates and small-order enumeration.

pub(crate) mod canon;
mod enumerate;
pub(crate) mod generators;
mod graph6;
mod spec;

pub use canon::{canonical_form, CanonicalKey};
pub use enumerate::{enumerate_nonisomorphic, enumerate_nonisomorphic_with, MAX_ENUMERATION_ORDER};
pub use generators::{generate, GENERATORS};
pub use graph6::{parse_graph6, write_graph6};
pub use spec::GraphSpec;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph stored as a dense symmetric 0/1 matrix.
///
/// Values are immutable once built; all constructors enforce symmetry and a
/// zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { n, adj: vec![false; n * n] }
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    /// Builds a graph from a 0/1 matrix, validating symmetry and the diagonal.
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Graph> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut g = Graph::empty(n);
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!("row {u} has length {} != {n}", row.len())));
            }
            for (v, &x) in row.iter().enumerate() {
                if x > 1 {
                    return Err(Error::InvalidGraph(format!("entry ({u}, {v}) is not 0/1")));
                }
                if x != rows[v][u] {
                    return Err(Error::InvalidGraph(format!("matrix not symmetric at ({u}, {v})")));
                }
                if u == v && x != 0 {
                    return Err(Error::InvalidGraph(format!("nonzero diagonal at {u}")));
                }
                if x == 1 {
                    g.adj[u * n + v] = true;
                }
            }
        }
        Ok(g)
    }

    fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u * self.n..(u + 1) * self.n].iter().filter(|&&b| b).count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Edges as pairs `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbourhood of `u` as a bitmask. Only valid for `n <= 64`.
    #[inline]
    pub fn row_mask(&self, u: usize) -> u64 {
        debug_assert!(self.n <= 64);
        let row = &self.adj[u * self.n..(u + 1) * self.n];
        row.iter().enumerate().fold(0u64, |m, (v, &b)| if b { m | (1 << v) } else { m })
    }

    /// Adjacency matrix as `f64` rows.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        self.adj.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g
    }

    /// Induced subgraph on `vertices` (in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// True when the map `perm` preserves adjacency in both directions.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && (0..self.n).all(|u| (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(perm[u], perm[v])))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-colouring or odd closed walk.
    pub fn bipartition(&self) -> Bipartition {
        let mut color: Vec<Option<u8>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            parent[v] = u;
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => {
                            return Bipartition::OddCycle(odd_cycle(&parent, u, v));
                        }
                        _ => {}
                    }
                }
            }
        }
        Bipartition::Coloring(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Coloring(_))
    }
}

/// Result of a bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// A proper 2-colouring, one entry (0 or 1) per vertex.
    Coloring(Vec<u8>),
    /// Vertices of an odd cycle `c_0 c_1 ... c_{k-1}` (closing edge `c_{k-1} c_0`).
    OddCycle(Vec<usize>),
}

// u and v are adjacent, same BFS colour: join their tree paths at the
// lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    let mut i = pu.len();
    let mut j = pv.len();
    while i > 0 && j > 0 && pu[i - 1] == pv[j - 1] {
        i -= 1;
        j -= 1;
    }
    // pu[i] == pv[j] is the lowest common ancestor
    let mut cycle: Vec<usize> = pu[..=i].to_vec();
    cycle.extend(pv[..j].iter().rev());
    cycle
}
