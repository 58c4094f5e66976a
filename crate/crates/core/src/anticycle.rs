//! Long induced anticycles in `G_{n+r}` when the largest `j` exceeds `j_q`
//! by one and every generator has gap at least two.
//!
//! The J-sets walk leftwards through the tightest triangles until the first
//! row of the highest edge is passed, the K-sets walk upwards until the
//! highest edge is reached. The anticycle vertices then advance by
//! `gap - 1` steps, always using the leftmost (resp. lowest) triangle that
//! still covers the current vertex.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chain::{chain_indices, contains_edge, ChainError, ChainIndices, ChainSpec};
use crate::graph::AnticycleWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hypothesis {
    /// Some generator has `j - i = 1`.
    GapAtLeastTwo,
    /// `max j != j_q + 1`.
    MaxJFollowsFirstRow,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Hypothesis::GapAtLeastTwo => write!(f, "some generator has j - i = 1"),
            Hypothesis::MaxJFollowsFirstRow => {
                write!(f, "max j differs from j_q + 1")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnticycleError {
    #[error("i_h = {i_h} < i_b = {i_b}: use the second case")]
    CaseMismatch { i_b: usize, i_h: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
    #[error("n = {n} is below 2r = {min}")]
    IndexTooSmall { n: usize, min: usize },
    #[error("start vertex {start} is outside [{lo}, {hi}]")]
    StartOutOfRange { start: usize, lo: usize, hi: usize },
    #[error("constructed vertices {vertices:?} do not form an induced anticycle in G_{graph}")]
    VerificationFailed { vertices: Vec<usize>, graph: usize },
    #[error(transparent)]
    Chain(#[from] ChainError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JTrace {
    pub sets: Vec<Vec<usize>>,
    pub pivots: Vec<usize>,
}

impl JTrace {
    pub fn beta(&self) -> usize {
        self.pivots.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTrace {
    pub sets: Vec<Vec<usize>>,
    pub pivots: Vec<usize>,
}

impl KTrace {
    pub fn gamma(&self) -> usize {
        self.pivots.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// `i_b <= i_h`
    I,
    /// `i_h < i_b`
    II,
}

/// Everything the construction computed, in the layout used for JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnticycleTrace {
    pub case: Case,
    #[serde(rename = "J")]
    pub j_sets: Vec<Vec<usize>>,
    #[serde(rename = "K")]
    pub k_sets: Vec<Vec<usize>>,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub beta: usize,
    pub gamma: usize,
    pub epsilon: usize,
    /// `a_1..a_{d+1}` in the first case, `a_1, a_2` in the second.
    pub initial: Vec<usize>,
    pub d: usize,
    /// `a_{d+1}..a_m`.
    #[serde(rename = "final")]
    pub final_segment: Vec<usize>,
    pub m: usize,
    /// Index of the graph that contains the anticycle, `n + r`.
    pub graph: usize,
    pub vertices: Vec<usize>,
}

fn check_gap(spec: &ChainSpec) -> Result<(), AnticycleError> {
    if spec.min_gap() < 2 {
        return Err(AnticycleError::HypothesisViolated(
            Hypothesis::GapAtLeastTwo,
        ));
    }
    Ok(())
}

fn check_hypotheses(spec: &ChainSpec, idx: &ChainIndices) -> Result<(), AnticycleError> {
    check_gap(spec)?;
    if spec.max_j() != spec.edge(idx.last_of_first_row).1 + 1 {
        return Err(AnticycleError::HypothesisViolated(
            Hypothesis::MaxJFollowsFirstRow,
        ));
    }
    Ok(())
}

fn check_n(spec: &ChainSpec, n: usize) -> Result<(), AnticycleError> {
    if n < 2 * spec.r() {
        return Err(AnticycleError::IndexTooSmall {
            n,
            min: 2 * spec.r(),
        });
    }
    Ok(())
}

fn row(spec: &ChainSpec, t: usize) -> usize {
    spec.edge(t).0
}

fn col(spec: &ChainSpec, t: usize) -> usize {
    spec.edge(t).1
}

/// Positions among `candidates` with the smallest gap.
fn tightest_among(spec: &ChainSpec, candidates: &[usize]) -> Vec<usize> {
    let g = candidates.iter().map(|&a| spec.gap(a)).min().unwrap();
    candidates
        .iter()
        .copied()
        .filter(|&a| spec.gap(a) == g)
        .collect()
}

pub fn build_j_sets(spec: &ChainSpec) -> Result<JTrace, AnticycleError> {
    let idx = chain_indices(spec);
    check_hypotheses(spec, &idx)?;
    let (b, h) = (idx.first_highest, idx.first_tightest);
    if row(spec, h) < row(spec, b) {
        return Err(AnticycleError::CaseMismatch {
            i_b: row(spec, b),
            i_h: row(spec, h),
        });
    }
    let mut used = idx.tightest.clone();
    let mut sets = vec![idx.tightest.clone()];
    let mut pivots = vec![h];
    while row(spec, *pivots.last().unwrap()) >= row(spec, b) {
        let limit = row(spec, *pivots.last().unwrap());
        let candidates: Vec<usize> = (1..=spec.s())
            .filter(|a| !used.contains(a) && row(spec, *a) < limit)
            .collect();
        // Non-empty: q sits strictly left of b and is never in an earlier set.
        assert!(
            !candidates.is_empty(),
            "first-row edge must remain available"
        );
        let next = tightest_among(spec, &candidates);
        used.extend(&next);
        pivots.push(next[0]);
        sets.push(next);
    }
    Ok(JTrace { sets, pivots })
}

pub fn build_k_sets(spec: &ChainSpec) -> Result<KTrace, AnticycleError> {
    check_gap(spec)?;
    let idx = chain_indices(spec);
    let top = col(spec, idx.last_highest);
    let mut used = idx.tightest.clone();
    let mut sets = vec![idx.tightest.clone()];
    let mut pivots = vec![idx.last_tightest];
    while col(spec, *pivots.last().unwrap()) < top {
        let limit = col(spec, *pivots.last().unwrap());
        let candidates: Vec<usize> = (1..=spec.s())
            .filter(|a| !used.contains(a) && col(spec, *a) > limit)
            .collect();
        assert!(
            !candidates.is_empty(),
            "the highest edge must remain available"
        );
        let next = tightest_among(spec, &candidates);
        used.extend(&next);
        pivots.push(*next.last().unwrap());
        sets.push(next);
    }
    Ok(KTrace { sets, pivots })
}

/// Largest `eps >= 0` with `eps * step + start < bound`, given `start < bound`.
fn epsilon(start: usize, step: usize, bound: usize) -> usize {
    (bound - 1 - start) / step
}

fn initial_with_trace(
    spec: &ChainSpec,
    n: usize,
) -> Result<(JTrace, usize, Vec<usize>), AnticycleError> {
    let jt = build_j_sets(spec)?;
    check_n(spec, n)?;
    let idx = chain_indices(spec);
    let i_b = row(spec, idx.first_highest);
    let i_h = row(spec, idx.first_tightest);
    let last = *jt.pivots.last().unwrap();
    let eps = epsilon(row(spec, last), spec.gap(last) - 1, i_b);
    let mut term = eps * (spec.gap(last) - 1) + row(spec, last);
    let mut out = vec![term];
    while term < i_h {
        let t = jt
            .pivots
            .iter()
            .copied()
            .find(|&u| row(spec, u) <= term)
            .expect("the last pivot lies left of every term");
        term += spec.gap(t) - 1;
        out.push(term);
    }
    Ok((jt, eps, out))
}

/// `a_1, ..., a_{d+1}` in the first case.
pub fn initial_vertices(spec: &ChainSpec, n: usize) -> Result<Vec<usize>, AnticycleError> {
    initial_with_trace(spec, n).map(|(_, _, a)| a)
}

/// `a_index, ..., a_m`, ending with `n + j_B`.
pub fn final_vertices(
    spec: &ChainSpec,
    n: usize,
    a_index: usize,
) -> Result<Vec<usize>, AnticycleError> {
    let kt = build_k_sets(spec)?;
    check_n(spec, n)?;
    let idx = chain_indices(spec);
    let i_h = row(spec, idx.first_tightest);
    let big_b = idx.last_highest;
    if a_index < i_h || a_index > n + spec.r() {
        return Err(AnticycleError::StartOutOfRange {
            start: a_index,
            lo: i_h,
            hi: n + spec.r(),
        });
    }
    let mut term = a_index;
    let mut out = vec![term];
    while term <= n + row(spec, big_b) {
        let t = kt
            .pivots
            .iter()
            .copied()
            .find(|&v| term <= n + row(spec, v))
            .expect("the last pivot is B");
        term += spec.gap(t) - 1;
        out.push(term);
    }
    out.push(n + col(spec, big_b));
    Ok(out)
}

fn verify(spec: &ChainSpec, graph: usize, vertices: &[usize]) -> Result<bool, ChainError> {
    let m = vertices.len();
    if m < 4 {
        return Ok(false);
    }
    for x in 0..m {
        for y in x + 1..m {
            let consecutive = y == x + 1 || (x == 0 && y == m - 1);
            if contains_edge(spec, graph, vertices[x], vertices[y])? == consecutive {
                return Ok(false);
            }
        }
    }
    Ok(vertices.windows(2).all(|w| w[0] < w[1]))
}

/// Builds the anticycle in `G_{n+r}` and checks it against the chain before
/// returning.
pub fn construct_anticycle(
    spec: &ChainSpec,
    n: usize,
) -> Result<(AnticycleWitness, AnticycleTrace), AnticycleError> {
    let idx = chain_indices(spec);
    check_hypotheses(spec, &idx)?;
    check_n(spec, n)?;
    let kt = build_k_sets(spec)?;
    let i_b = row(spec, idx.first_highest);
    let h = idx.first_tightest;
    let i_h = row(spec, h);

    let (case, jt, eps, initial) = if i_b <= i_h {
        let (jt, eps, initial) = initial_with_trace(spec, n)?;
        (Case::I, Some(jt), eps, initial)
    } else {
        let step = spec.gap(h) - 1;
        let eps = epsilon(i_h, step, i_b);
        let a1 = eps * step + i_h;
        (Case::II, None, eps, vec![a1, a1 + step])
    };
    let start = *initial.last().unwrap();
    let final_segment = final_vertices(spec, n, start)?;
    let mut vertices = initial.clone();
    vertices.extend(&final_segment[1..]);

    let graph = n + spec.r();
    if !verify(spec, graph, &vertices)? {
        return Err(AnticycleError::VerificationFailed { vertices, graph });
    }
    let (j_sets, u) = jt.map(|t| (t.sets, t.pivots)).unwrap_or_default();
    let trace = AnticycleTrace {
        case,
        beta: u.len(),
        gamma: kt.gamma(),
        j_sets,
        k_sets: kt.sets,
        u,
        v: kt.pivots,
        epsilon: eps,
        d: initial.len() - 1,
        initial,
        final_segment,
        m: vertices.len(),
        graph,
        vertices: vertices.clone(),
    };
    Ok((AnticycleWitness::new(vertices), trace))
}
