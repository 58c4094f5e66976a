//! Finite simple graphs on the vertex set `1..=n` and the exact algorithms
//! the regularity analysis needs: complements, induced subgraphs,
//! chordality, induced matchings, induced cycles and anticycle witnesses.
//!
//! Vertices are 1-based everywhere in the public API. Adjacency is stored as
//! one bitset row per vertex (bit `v - 1` set in row `u - 1` iff `{u, v}` is
//! an edge), which keeps neighbourhood intersections cheap for the dense
//! graphs produced by chain expansion.

mod chordal;
mod cycles;
mod matching;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chordal::{is_chordal, is_cochordal, perfect_elimination_order};
pub use cycles::{
    enumerate_induced_cycles, enumerate_induced_cycles_capped, InducedCycles, DEFAULT_CYCLE_CAP,
};
pub use matching::{find_induced_kk2, induced_matching_number, induced_matching_number_capped};

/// An unordered edge, always stored as `(min, max)`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
}

/// A simple undirected graph on `1..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// The cycle `1, 2, ..., n, 1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = SimpleGraph::empty(n);
        for u in 1..n {
            g.insert_unchecked(u, u + 1);
        }
        g.insert_unchecked(n, 1);
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u - 1].insert(v - 1);
        self.adj[v - 1].insert(u - 1);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && (1..=self.n).contains(&u)
            && (1..=self.n).contains(&v)
            && self.adj[u - 1].contains(v - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|row| !row.is_clear())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for w in self.adj[u - 1].ones() {
                if w + 1 > u {
                    out.push((u, w + 1));
                }
            }
        }
        out
    }

    /// Open neighbourhood of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v - 1].ones().map(|w| w + 1).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones(..)
    }

    /// Closed neighbourhood `N[v]`, ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut row = self.adj[v - 1].clone();
        row.insert(v - 1);
        row.ones().map(|w| w + 1).collect()
    }

    pub(crate) fn row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v - 1]
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].clone();
            row.toggle_range(..);
            row.set(v, false);
            adj.push(row);
        }
        SimpleGraph { n: self.n, adj }
    }

    /// The subgraph induced on `vertices`, relabelled to `1..=|W|` in
    /// ascending order of the original labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut labels = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let mut graph = SimpleGraph::empty(labels.len());
        for (a, &u) in labels.iter().enumerate() {
            for (b, &v) in labels.iter().enumerate().skip(a + 1) {
                if self.adj[u - 1].contains(v - 1) {
                    graph.insert_unchecked(a + 1, b + 1);
                }
            }
        }
        Ok(InducedSubgraph { graph, labels })
    }

    /// `G \ U`: the subgraph induced on the vertices outside `removed`.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<InducedSubgraph, GraphError> {
        let mut keep = vec![true; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            keep[v - 1] = false;
        }
        let kept: Vec<usize> = (1..=self.n).filter(|&v| keep[v - 1]).collect();
        self.induced_subgraph(&kept)
    }

    /// Vertices that lie on at least one edge.
    pub fn non_isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&v| !self.adj[v - 1].is_clear())
            .collect()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// JSON shape `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges(),
        }
    }
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = GraphError;

    fn try_from(value: GraphJson) -> Result<Self, Self::Error> {
        SimpleGraph::from_edges(value.n, value.edges)
    }
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        SimpleGraph::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// An induced subgraph together with the original label of each of its
/// vertices: vertex `k` of `graph` is `labels[k - 1]` in the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: SimpleGraph,
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    pub fn original(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    /// Edges of the subgraph written in the parent's labels.
    pub fn original_edges(&self) -> Vec<Edge> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| (self.original(u), self.original(v)))
            .collect()
    }
}

/// An ordered list of vertices claimed to be the consecutive vertices of an
/// induced anticycle `C_m^c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnticycleWitness {
    pub vertices: Vec<usize>,
}

impl AnticycleWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        AnticycleWitness { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Checks that `w` lists the consecutive vertices of an induced `C_m^c` in
/// `g`: `m >= 4`, cyclically consecutive pairs are non-edges and every other
/// pair is an edge.
pub fn verify_anticycle(g: &SimpleGraph, w: &AnticycleWitness) -> Result<bool, GraphError> {
    for &v in &w.vertices {
        g.check_vertex(v)?;
    }
    let m = w.vertices.len();
    if m < 4 {
        return Ok(false);
    }
    let mut seen = FixedBitSet::with_capacity(g.n);
    for &v in &w.vertices {
        if seen.put(v - 1) {
            return Ok(false);
        }
    }
    for p in 0..m {
        for z in p + 1..m {
            let consecutive = z == p + 1 || (p == 0 && z == m - 1);
            if g.has_edge(w.vertices[p], w.vertices[z]) == consecutive {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
