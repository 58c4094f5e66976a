//! Limit regularity of a chain and the thresholds from which it holds.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chain::{
    chain_indices, expand, is_quasi_saturated, q_invariant, reduce_index, ChainError, ChainSpec,
};
use crate::graph::{induced_matching_number_capped, is_cochordal};
use crate::oracle::{regularity_capped, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimitCase {
    /// The first row reaches the largest `j`.
    #[serde(rename = "jq-is-max")]
    JqIsMax,
    /// Some generator has gap one and `G_{3r}` has no induced `2K_2`.
    #[serde(rename = "gap1-and-indmatch1")]
    Gap1AndIndmatch1,
    /// Everything else: the limit is 3.
    #[serde(rename = "else-reg3")]
    ElseReg3,
}

impl LimitCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            LimitCase::JqIsMax => "jq-is-max",
            LimitCase::Gap1AndIndmatch1 => "gap1-and-indmatch1",
            LimitCase::ElseReg3 => "else-reg3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifierVerdict {
    pub limit_reg: usize,
    pub case: LimitCase,
    /// `reg I_n = limit_reg` for every `n >= n0`.
    pub n0: usize,
    /// `max{5r, 2r(r - 2), 4(r + q)}` for the reduced presentation.
    #[serde(rename = "N")]
    pub big_n: usize,
    /// `2(r^2 + 5r)` for the reduced presentation.
    pub coarse: usize,
    pub limit_indmatch: usize,
    pub reduced_r: usize,
    pub presented_r: usize,
}

/// `(N, 2(r^2 + 5r))` for the spec as presented.
pub fn stabilization_threshold(spec: &ChainSpec) -> (usize, usize) {
    let r = spec.r();
    let q = q_invariant(spec);
    let n = (5 * r).max(2 * r * r.saturating_sub(2)).max(4 * (r + q));
    (n, 2 * (r * r + 5 * r))
}

/// `indmatch(G_{3r})`, which is 1 or 2 and equals `indmatch(G_n)` for all
/// `n >= 3r`.
pub fn limit_indmatch(spec: &ChainSpec) -> usize {
    let g = expand(spec, 3 * spec.r()).expect("3r >= r");
    // Larger induced matchings do not occur from 3r on, so stop at 2.
    induced_matching_number_capped(&g, 2).len()
}

/// Classifies the chain after moving it to its smallest presentation.
pub fn limit_regularity(spec: &ChainSpec) -> ClassifierVerdict {
    let reduced = reduce_index(spec);
    let r = reduced.r();
    let idx = chain_indices(&reduced);
    let j_q = reduced.edge(idx.last_of_first_row).1;
    let indmatch = limit_indmatch(&reduced);
    let (big_n, coarse) = stabilization_threshold(&reduced);
    let (limit_reg, case, n0) = if j_q == reduced.max_j() {
        let n0 = if is_quasi_saturated(&reduced) {
            r
        } else {
            3 * r
        };
        (2, LimitCase::JqIsMax, n0)
    } else if reduced.min_gap() == 1 && indmatch == 1 {
        (
            2,
            LimitCase::Gap1AndIndmatch1,
            (5 * r).max(2 * r * r.saturating_sub(2)),
        )
    } else {
        let n0 = if indmatch == 2 {
            4 * r
        } else {
            4 * (r + q_invariant(&reduced))
        };
        (3, LimitCase::ElseReg3, n0)
    };
    ClassifierVerdict {
        limit_reg,
        case,
        n0: n0.max(spec.r()),
        big_n,
        coarse,
        limit_indmatch: indmatch,
        reduced_r: r,
        presented_r: spec.r(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("range [{lo}, {hi}] must satisfy r = {r} <= lo <= hi")]
    InvalidRange { lo: usize, hi: usize, r: usize },
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub edges: usize,
    pub cochordal: bool,
    /// Oracle value, absent when the graph exceeds the oracle cap.
    pub reg: Option<usize>,
    /// Set when `n >= n0` and the observation contradicts the verdict.
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub verdict: ClassifierVerdict,
    pub field: u32,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn flagged(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.flagged)
            .map(|r| r.n)
            .collect()
    }
}

/// Compares observed regularities on `[n_lo, n_hi]` with the verdict.
pub fn sweep_verify(
    spec: &ChainSpec,
    n_lo: usize,
    n_hi: usize,
    field_char: u32,
    oracle_cap: usize,
) -> Result<SweepReport, SweepError> {
    if n_lo < spec.r() || n_hi < n_lo {
        return Err(SweepError::InvalidRange {
            lo: n_lo,
            hi: n_hi,
            r: spec.r(),
        });
    }
    let verdict = limit_regularity(spec);
    let rows = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| -> Result<SweepRow, SweepError> {
            let g = expand(spec, n)?;
            let cochordal = is_cochordal(&g);
            let reg = match regularity_capped(&g, field_char, oracle_cap) {
                Ok(report) => report.value,
                Err(OracleError::SubsetBudgetExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let flagged = n >= verdict.n0
                && (cochordal != (verdict.limit_reg == 2)
                    || reg.is_some_and(|v| v != verdict.limit_reg));
            Ok(SweepRow {
                n,
                edges: g.edge_count(),
                cochordal,
                reg,
                flagged,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SweepReport {
        verdict,
        field: field_char,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(r: usize, edges: &[(usize, usize)]) -> ChainSpec {
        ChainSpec::new(r, edges.iter().copied()).unwrap()
    }

    #[test]
    fn verdicts() {
        let v = limit_regularity(&spec(10, &[(1, 10), (2, 4), (3, 5), (7, 9)]));
        assert_eq!((v.limit_reg, v.case, v.n0), (2, LimitCase::JqIsMax, 30));
        let v = limit_regularity(&spec(4, &[(1, 3), (2, 4)]));
        assert_eq!((v.limit_reg, v.case), (3, LimitCase::ElseReg3));
        let v = limit_regularity(&spec(9, &[(1, 5), (1, 8), (2, 9), (3, 6), (4, 7), (5, 9)]));
        assert_eq!(v.limit_reg, 3);
        let v = limit_regularity(&spec(9, &[(1, 9), (6, 8)]));
        assert_eq!((v.limit_reg, v.n0), (2, 27));
    }

    #[test]
    fn quasi_saturated_starts_at_r() {
        let v = limit_regularity(&spec(2, &[(1, 2)]));
        assert_eq!((v.limit_reg, v.n0), (2, 2));
    }

    #[test]
    fn thresholds() {
        let e58 = spec(9, &[(1, 5), (1, 8), (2, 9), (3, 6), (4, 7), (5, 9)]);
        assert_eq!(stabilization_threshold(&e58), (232, 252));
        assert_eq!(stabilization_threshold(&spec(2, &[(1, 2)])), (28, 28));
        let s = spec(10, &[(1, 10), (2, 4), (3, 5), (7, 9)]);
        assert_eq!(stabilization_threshold(&s), (288, 300));
    }

    #[test]
    fn limit_matchings() {
        assert_eq!(limit_indmatch(&spec(4, &[(1, 3), (2, 4)])), 1);
        assert_eq!(limit_indmatch(&spec(9, &[(1, 9), (6, 8)])), 1);
        assert_eq!(
            limit_indmatch(&spec(10, &[(1, 10), (2, 4), (3, 5), (7, 9)])),
            1
        );
    }

    #[test]
    fn sweep_of_single_edge() {
        let rep = sweep_verify(&spec(2, &[(1, 2)]), 2, 8, 2, 22).unwrap();
        assert!(rep.rows.iter().all(|r| r.reg == Some(2) && r.cochordal));
        assert!(rep.flagged().is_empty());
        assert!(matches!(
            sweep_verify(&spec(3, &[(1, 2)]), 2, 4, 2, 22),
            Err(SweepError::InvalidRange { .. })
        ));
    }
}
