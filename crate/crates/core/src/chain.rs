//! Inc-invariant chains of edge ideals presented by `(r, E(G_r))`.
//!
//! Every edge `(i, j)` of `G_r` spreads, at index `n >= r`, over the lattice
//! triangle `{(u, v) : 0 <= u - i <= v - j <= n - r}`. All chain-level
//! quantities below are read off those triangles.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, SimpleGraph};

/// Largest `n` for which [`expand`] builds an explicit adjacency structure.
/// Above it use [`contains_edge`].
pub const MAX_MATERIALIZED: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("the edge set is empty")]
    EmptyEdgeSet,
    #[error("edge ({i}, {j}) has an endpoint outside [1, {r}]")]
    EdgeOutOfRange { i: i64, j: i64, r: i64 },
    #[error("degenerate edge ({0}, {0})")]
    DegenerateEdge(i64),
    #[error("index {n} is below the stability index {r}")]
    IndexBelowStability { n: usize, r: usize },
    #[error("index {n} is too large to materialize (limit {limit})")]
    TooLarge { n: usize, limit: usize },
}

/// On-disk form of a chain: `{"r": 7, "edges": [[3, 4], [2, 7]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawSpec {
    pub r: i64,
    pub edges: Vec<[i64; 2]>,
}

/// A chain given by its stability index `r` and the edges of `G_r`, sorted
/// by first coordinate and then by second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct ChainSpec {
    r: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawSpec> for ChainSpec {
    type Error = ChainError;

    fn try_from(raw: RawSpec) -> Result<Self, Self::Error> {
        normalize_spec(raw.r, &raw.edges)
    }
}

impl From<ChainSpec> for RawSpec {
    fn from(spec: ChainSpec) -> Self {
        RawSpec {
            r: spec.r as i64,
            edges: spec
                .edges
                .iter()
                .map(|&(i, j)| [i as i64, j as i64])
                .collect(),
        }
    }
}

/// Orients, deduplicates and sorts a raw edge list.
pub fn normalize_spec(r: i64, raw_edges: &[[i64; 2]]) -> Result<ChainSpec, ChainError> {
    if raw_edges.is_empty() {
        return Err(ChainError::EmptyEdgeSet);
    }
    let mut edges = BTreeSet::new();
    for &[a, b] in raw_edges {
        if a == b {
            return Err(ChainError::DegenerateEdge(a));
        }
        let (i, j) = (a.min(b), a.max(b));
        if i < 1 || j > r {
            return Err(ChainError::EdgeOutOfRange { i: a, j: b, r });
        }
        edges.insert((i as usize, j as usize));
    }
    Ok(ChainSpec {
        r: r as usize,
        edges: edges.into_iter().collect(),
    })
}

impl ChainSpec {
    /// Builds a spec from already positive pairs; same checks as
    /// [`normalize_spec`].
    pub fn new<I>(r: usize, edges: I) -> Result<Self, ChainError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let raw: Vec<[i64; 2]> = edges
            .into_iter()
            .map(|(i, j)| [i as i64, j as i64])
            .collect();
        normalize_spec(r as i64, &raw)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of generators `s`.
    pub fn s(&self) -> usize {
        self.edges.len()
    }

    /// Edge number `t`, counted from 1.
    pub fn edge(&self, t: usize) -> Edge {
        self.edges[t - 1]
    }

    /// `j_t - i_t` for the 1-based position `t`.
    pub fn gap(&self, t: usize) -> usize {
        let (i, j) = self.edge(t);
        j - i
    }

    pub fn max_j(&self) -> usize {
        self.edges.iter().map(|e| e.1).max().expect("non-empty")
    }

    pub fn min_gap(&self) -> usize {
        self.edges
            .iter()
            .map(|&(i, j)| j - i)
            .min()
            .expect("non-empty")
    }

    fn check_index(&self, n: usize) -> Result<(), ChainError> {
        if n < self.r {
            Err(ChainError::IndexBelowStability { n, r: self.r })
        } else {
            Ok(())
        }
    }

    pub fn to_raw(&self) -> RawSpec {
        self.clone().into()
    }
}

/// The lattice region `Δ((i, j), n) = {(u, v) : 0 <= u - i <= v - j <= n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triangle {
    pub corner: Edge,
    pub size: usize,
}

impl Triangle {
    pub fn new(corner: Edge, size: usize) -> Self {
        Triangle { corner, size }
    }

    pub fn contains(&self, (u, v): Edge) -> bool {
        let (i, j) = (self.corner.0 as i64, self.corner.1 as i64);
        let du = u as i64 - i;
        let dv = v as i64 - j;
        0 <= du && du <= dv && dv <= self.size as i64
    }

    /// All lattice points, row by row.
    pub fn points(&self) -> impl Iterator<Item = Edge> + '_ {
        let (i, j) = self.corner;
        let n = self.size;
        (0..=n).flat_map(move |a| (a..=n).map(move |b| (i + a, j + b)))
    }
}

/// True iff `triangle` contains `point`.
pub fn triangle_contains(triangle: &Triangle, point: Edge) -> bool {
    triangle.contains(point)
}

/// Membership test for `{u, v}` in `E(G_n)` without building the graph.
pub fn contains_edge(spec: &ChainSpec, n: usize, u: usize, v: usize) -> Result<bool, ChainError> {
    spec.check_index(n)?;
    let pair = (u.min(v), u.max(v));
    if pair.0 == pair.1 || pair.0 == 0 || pair.1 > n {
        return Ok(false);
    }
    let size = n - spec.r;
    Ok(spec
        .edges
        .iter()
        .any(|&e| Triangle::new(e, size).contains(pair)))
}

/// The graph `G_n` on `[n]`.
pub fn expand(spec: &ChainSpec, n: usize) -> Result<SimpleGraph, ChainError> {
    spec.check_index(n)?;
    if n > MAX_MATERIALIZED {
        return Err(ChainError::TooLarge {
            n,
            limit: MAX_MATERIALIZED,
        });
    }
    let mut g = SimpleGraph::empty(n);
    let size = n - spec.r;
    for &e in &spec.edges {
        for (u, v) in Triangle::new(e, size).points() {
            g.insert_unchecked(u, v);
        }
    }
    Ok(g)
}

/// The increasing map that carries a generator onto a point of its
/// triangle: `t -> t + low_shift` below `breakpoint`, `t -> t + high_shift`
/// from `breakpoint` on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncMapWitness {
    pub breakpoint: usize,
    pub low_shift: usize,
    pub high_shift: usize,
}

impl IncMapWitness {
    pub fn apply(&self, t: usize) -> usize {
        if t < self.breakpoint {
            t + self.low_shift
        } else {
            t + self.high_shift
        }
    }

    /// Strictly increasing on all of `N` exactly when the shifts do not
    /// decrease across the breakpoint.
    pub fn is_increasing(&self) -> bool {
        self.low_shift <= self.high_shift
    }
}

/// The first generator whose orbit reaches `{u, v}` in `G_n`, together with
/// an explicit map realizing it.
pub fn orbit_witness(
    spec: &ChainSpec,
    n: usize,
    u: usize,
    v: usize,
) -> Result<Option<(usize, IncMapWitness)>, ChainError> {
    spec.check_index(n)?;
    let pair = (u.min(v), u.max(v));
    if pair.0 == pair.1 || pair.0 == 0 || pair.1 > n {
        return Ok(None);
    }
    let size = n - spec.r;
    Ok(spec.edges.iter().enumerate().find_map(|(t, &(i, j))| {
        Triangle::new((i, j), size).contains(pair).then(|| {
            (
                t + 1,
                IncMapWitness {
                    breakpoint: j,
                    low_shift: pair.0 - i,
                    high_shift: pair.1 - j,
                },
            )
        })
    }))
}

/// Largest vertex covered by an edge of `G_n`. The corner `(i_t, j_t)` with
/// the largest `j_t` shifts to `j_t + n - r`, so this is `p + n - r`.
pub fn msupp(spec: &ChainSpec, n: usize) -> Result<usize, ChainError> {
    spec.check_index(n)?;
    Ok(spec.max_j() + n - spec.r)
}

/// Number of monomials of degree at most two in `x_1..x_p` outside the ideal
/// generated by the edges, with `p` the largest vertex of `G_r` in an edge.
pub fn q_invariant(spec: &ChainSpec) -> usize {
    let p = spec.max_j();
    1 + p + p * (p + 1) / 2 - spec.s()
}

/// The chain `(r + 1, E(G_{r+1}) ∩ [p])`.
pub fn derived_chain(spec: &ChainSpec) -> ChainSpec {
    let p = spec.max_j();
    let mut edges = BTreeSet::new();
    for &(i, j) in &spec.edges {
        edges.insert((i, j));
        if j < p {
            edges.insert((i, j + 1));
            edges.insert((i + 1, j + 1));
        }
    }
    ChainSpec {
        r: spec.r + 1,
        edges: edges.into_iter().collect(),
    }
}

/// The derived chain adds no new generators.
pub fn is_quasi_saturated(spec: &ChainSpec) -> bool {
    derived_chain(spec).edges == spec.edges
}

/// Bookkeeping indices into the sorted edge list, all counted from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainIndices {
    /// Last edge sharing the smallest first coordinate (`q`).
    #[serde(rename = "q")]
    pub last_of_first_row: usize,
    /// Edges of minimal gap `j - i` (`J1`).
    #[serde(rename = "J1")]
    pub tightest: Vec<usize>,
    /// `h = min J1`.
    #[serde(rename = "h")]
    pub first_tightest: usize,
    /// `H = max J1`.
    #[serde(rename = "H")]
    pub last_tightest: usize,
    /// First edge reaching the largest `j` (`b`).
    #[serde(rename = "b")]
    pub first_highest: usize,
    /// Last edge reaching the largest `j` (`B`).
    #[serde(rename = "B")]
    pub last_highest: usize,
}

pub fn chain_indices(spec: &ChainSpec) -> ChainIndices {
    let s = spec.s();
    let i1 = spec.edge(1).0;
    let q = (1..=s).filter(|&t| spec.edge(t).0 == i1).max().unwrap();
    let g = spec.min_gap();
    let tightest: Vec<usize> = (1..=s).filter(|&t| spec.gap(t) == g).collect();
    let p = spec.max_j();
    let highest: Vec<usize> = (1..=s).filter(|&t| spec.edge(t).1 == p).collect();
    ChainIndices {
        last_of_first_row: q,
        first_tightest: tightest[0],
        last_tightest: *tightest.last().unwrap(),
        tightest,
        first_highest: highest[0],
        last_highest: *highest.last().unwrap(),
    }
}

/// Re-presents the chain at the smallest index that still generates `G_r`.
///
/// For each candidate `r' < r` the generators are the edges of `G_r` inside
/// `[r']` whose own orbit stays within `G_r`; the first `r'` whose
/// generators regenerate `G_r` exactly wins.
pub fn reduce_index(spec: &ChainSpec) -> ChainSpec {
    let r = spec.r;
    let target = expand(spec, r).expect("n = r is always valid");
    for r2 in 2..r {
        let safe: Vec<Edge> = spec
            .edges
            .iter()
            .copied()
            .filter(|&(_, j)| j <= r2)
            .filter(|&e| {
                Triangle::new(e, r - r2)
                    .points()
                    .all(|(u, v)| target.has_edge(u, v))
            })
            .collect();
        if safe.is_empty() {
            continue;
        }
        let candidate = ChainSpec { r: r2, edges: safe };
        if expand(&candidate, r).expect("r >= r'") == target {
            return candidate;
        }
    }
    spec.clone()
}
