//! Regularity of edge ideals from the homology of independence complexes.
//!
//! By Hochster's formula, `reg I(G) = 2 + max d` over vertex subsets `W`
//! with `H̃_d(Ind(G[W])) != 0`. Subsets whose induced graph has an isolated
//! vertex are skipped: the isolated vertex is a cone point.

mod homology;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    induced_matching_number, induced_matching_number_capped, is_cochordal,
    perfect_elimination_order, Edge, SimpleGraph,
};

/// Default bound on the number of non-isolated vertices the oracle accepts.
pub const DEFAULT_ORACLE_CAP: usize = 22;

const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{vertices} non-isolated vertices exceed the oracle cap of {cap}")]
    SubsetBudgetExceeded { vertices: usize, cap: usize },
    #[error("the graph has no edges")]
    EdgelessGraph,
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("homology is limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
}

fn check_field(p: u32) -> Result<u64, OracleError> {
    if homology::is_prime(p) && p < (1 << 31) {
        Ok(p as u64)
    } else {
        Err(OracleError::NotPrime(p))
    }
}

/// Adjacency masks on the given vertices, re-indexed from bit 0.
fn local_adjacency(g: &SimpleGraph, vertices: &[usize]) -> Vec<u64> {
    vertices
        .iter()
        .map(|&u| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &v)| g.has_edge(u, v))
                .fold(0u64, |m, (b, _)| m | 1 << b)
        })
        .collect()
}

/// Reduced homology ranks of a simplicial complex over `GF(field)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: u32,
    /// `ranks[k]` is the rank of `H̃_{k-1}`; index 0 is dimension -1.
    pub ranks: Vec<usize>,
    /// `face_counts[k]` is the number of faces of dimension `k - 1`.
    pub face_counts: Vec<usize>,
}

impl HomologyProfile {
    /// Rank of `H̃_d` for `d >= -1`.
    pub fn rank(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    /// Largest `d` with `H̃_d != 0`.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.ranks
            .iter()
            .rposition(|&r| r != 0)
            .map(|k| k as isize - 1)
    }

    fn alternating(values: &[usize]) -> i64 {
        // index k carries dimension k - 1, hence sign (-1)^(k-1)
        values
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 1 { x as i64 } else { -(x as i64) })
            .sum()
    }

    /// `Σ (-1)^d rank H̃_d`.
    pub fn euler_from_ranks(&self) -> i64 {
        Self::alternating(&self.ranks)
    }

    /// Reduced Euler characteristic `Σ_{d >= -1} (-1)^d f_d`.
    pub fn euler_from_faces(&self) -> i64 {
        Self::alternating(&self.face_counts)
    }
}

/// Reduced homology of the independence complex of `g`. Ranks are reported
/// for every dimension from -1 to `n - 1`.
pub fn reduced_homology_ranks(
    g: &SimpleGraph,
    field_char: u32,
) -> Result<HomologyProfile, OracleError> {
    let p = check_field(field_char)?;
    let n = g.n();
    if n > 64 {
        return Err(OracleError::TooManyVertices(n));
    }
    let vertices: Vec<usize> = (1..=n).collect();
    let adj = local_adjacency(g, &vertices);
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let (mut ranks, mut face_counts) = homology::reduced_ranks_of(&adj, all, p);
    ranks.resize(n + 1, 0);
    face_counts.resize(n + 1, 0);
    Ok(HomologyProfile {
        field: field_char,
        ranks,
        face_counts,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    HochsterOracle,
    Froeberg,
    IndmatchBound,
    Classifier,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// A vertex set `W` with `H̃_d(Ind(G[W])) != 0` and `d = reg - 2`.
    Subset {
        vertices: Vec<usize>,
        dimension: usize,
    },
    /// Perfect elimination order of the complement.
    EliminationOrder { order: Vec<usize> },
    /// An induced matching giving the lower bound.
    InducedMatching { edges: Vec<Edge> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    /// `None` for the zero ideal of an edgeless graph.
    pub value: Option<usize>,
    pub method: Method,
    pub field: u32,
    /// False when `value` is only a lower bound.
    pub exact: bool,
    pub certificate: Option<Certificate>,
}

/// True when `G[w]` has an isolated vertex, or two distinct vertices `u, v`
/// with `N(u) ⊆ N(v)`. In the second case `Ind(G[w])` is homotopy
/// equivalent to `Ind(G[w - v])`, and `w - v` is a smaller mask, so `w`
/// never decides the maximum nor its certificate.
fn prunable(adj: &[u64], w: u64) -> bool {
    let mut rest = w;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nu = adj[u] & w;
        if nu == 0 {
            return true;
        }
        let mut others = w & !(1 << u);
        while others != 0 {
            let v = others.trailing_zeros() as usize;
            others &= others - 1;
            if nu & !adj[v] == 0 {
                return true;
            }
        }
    }
    false
}

/// Best `(d, mask)` in a range of masks: larger `d` wins, then smaller mask.
fn scan(adj: &[u64], masks: std::ops::Range<u64>, p: u64) -> Option<(usize, u64)> {
    let mut best: Option<(usize, u64)> = None;
    for w in masks {
        if prunable(adj, w) {
            continue;
        }
        // Masks grow within a range, so a tie never replaces the current best.
        let floor = best.map_or(0, |(d, _)| d + 1);
        if let Some(d) = homology::top_homology(adj, w, p, floor) {
            best = Some((d, w));
        }
    }
    best
}

fn better(a: Option<(usize, u64)>, b: Option<(usize, u64)>) -> Option<(usize, u64)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
            y
        } else {
            x
        }),
    }
}

/// Exact regularity of `I(g)` over `GF(field_char)`, refusing graphs with
/// more than `cap` non-isolated vertices.
pub fn regularity_capped(
    g: &SimpleGraph,
    field_char: u32,
    cap: usize,
) -> Result<RegularityReport, OracleError> {
    let p = check_field(field_char)?;
    let vertices = g.non_isolated_vertices();
    if vertices.is_empty() {
        return Ok(RegularityReport {
            value: None,
            method: Method::HochsterOracle,
            field: field_char,
            exact: true,
            certificate: None,
        });
    }
    let k = vertices.len();
    if k > cap || k > 63 {
        return Err(OracleError::SubsetBudgetExceeded {
            vertices: k,
            cap: cap.min(63),
        });
    }
    let adj = local_adjacency(g, &vertices);
    let total = 1u64 << k;
    let chunks = total.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = (c * CHUNK).max(1);
            let hi = ((c + 1) * CHUNK).min(total);
            let found = scan(&adj, lo..hi, p);
            log::debug!("oracle chunk {}/{} done", c + 1, chunks);
            found
        })
        .reduce(|| None, better);
    let (d, mask) = best.expect("an edge gives H̃_0 != 0");
    let w: Vec<usize> = (0..k)
        .filter(|&b| mask >> b & 1 == 1)
        .map(|b| vertices[b])
        .collect();
    Ok(RegularityReport {
        value: Some(d + 2),
        method: Method::HochsterOracle,
        field: field_char,
        exact: true,
        certificate: Some(Certificate::Subset {
            vertices: w,
            dimension: d,
        }),
    })
}

/// [`regularity_capped`] with [`DEFAULT_ORACLE_CAP`].
pub fn regularity(g: &SimpleGraph, field_char: u32) -> Result<RegularityReport, OracleError> {
    regularity_capped(g, field_char, DEFAULT_ORACLE_CAP)
}

/// `(1 + indmatch(g), is_cochordal(g))`; when the flag is set the
/// regularity is exactly 2.
pub fn regularity_bounds(g: &SimpleGraph) -> Result<(usize, bool), OracleError> {
    if !g.has_edges() {
        return Err(OracleError::EdgelessGraph);
    }
    Ok((1 + induced_matching_number(g), is_cochordal(g)))
}

/// The oracle when the graph fits under `cap`; otherwise the cochordal
/// certificate when it applies, and the induced matching lower bound when
/// it does not.
pub fn regularity_auto(
    g: &SimpleGraph,
    field_char: u32,
    cap: usize,
) -> Result<RegularityReport, OracleError> {
    match regularity_capped(g, field_char, cap) {
        Err(OracleError::SubsetBudgetExceeded { .. }) => {}
        other => return other,
    }
    if let Some(order) = perfect_elimination_order(&g.complement()) {
        return Ok(RegularityReport {
            value: Some(2),
            method: Method::Froeberg,
            field: field_char,
            exact: true,
            certificate: Some(Certificate::EliminationOrder { order }),
        });
    }
    let matching = induced_matching_number_capped(g, usize::MAX);
    // A non-cochordal graph has regularity at least 3 even when the
    // matching bound alone gives 2.
    let value = (1 + matching.len()).max(3);
    Ok(RegularityReport {
        value: Some(value),
        method: Method::IndmatchBound,
        field: field_char,
        exact: false,
        certificate: Some(Certificate::InducedMatching { edges: matching }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        let k2 = SimpleGraph::complete(2);
        let h = reduced_homology_ranks(&k2, 2).unwrap();
        assert_eq!(h.ranks, vec![0, 1, 0]);
        assert_eq!(h.top_nonzero(), Some(0));

        let two_k2 = SimpleGraph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        let h = reduced_homology_ranks(&two_k2, 3).unwrap();
        assert_eq!(h.rank(1), 1);
        assert_eq!(h.euler_from_ranks(), h.euler_from_faces());

        let empty = SimpleGraph::empty(3);
        let h = reduced_homology_ranks(&empty, 2).unwrap();
        assert!(h.ranks.iter().all(|&r| r == 0));
    }

    #[test]
    fn small_regularities() {
        let k2 = SimpleGraph::complete(2);
        assert_eq!(regularity(&k2, 2).unwrap().value, Some(2));
        let two_k2 = SimpleGraph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        let rep = regularity(&two_k2, 2).unwrap();
        assert_eq!(rep.value, Some(3));
        assert_eq!(
            rep.certificate,
            Some(Certificate::Subset {
                vertices: vec![1, 2, 3, 4],
                dimension: 1
            })
        );
        assert_eq!(regularity(&SimpleGraph::empty(3), 2).unwrap().value, None);
        // C5: Ind(C5) is a circle, reg 3.
        assert_eq!(
            regularity(&SimpleGraph::cycle(5), 2).unwrap().value,
            Some(3)
        );
    }

    #[test]
    fn bounds() {
        let two_k2 = SimpleGraph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(regularity_bounds(&two_k2).unwrap(), (3, false));
        assert_eq!(
            regularity_bounds(&SimpleGraph::complete(4)).unwrap(),
            (2, true)
        );
        assert_eq!(
            regularity_bounds(&SimpleGraph::empty(2)),
            Err(OracleError::EdgelessGraph)
        );
    }

    #[test]
    fn errors() {
        let g = SimpleGraph::complete(3);
        assert_eq!(regularity(&g, 4), Err(OracleError::NotPrime(4)));
        assert_eq!(
            regularity_capped(&g, 2, 2),
            Err(OracleError::SubsetBudgetExceeded {
                vertices: 3,
                cap: 2
            })
        );
        let auto = regularity_auto(&g, 2, 2).unwrap();
        assert_eq!((auto.value, auto.method), (Some(2), Method::Froeberg));
        let auto = regularity_auto(&SimpleGraph::cycle(6), 2, 3).unwrap();
        assert_eq!((auto.value, auto.exact), (Some(3), false));
    }

    #[test]
    fn json_names() {
        assert_eq!(
            serde_json::to_string(&Method::HochsterOracle).unwrap(),
            "\"hochster-oracle\""
        );
    }
}
