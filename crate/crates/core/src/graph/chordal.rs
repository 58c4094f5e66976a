use fixedbitset::FixedBitSet;

use super::SimpleGraph;

/// Maximum cardinality search. Returns `rank[v - 1]`: the first vertex
/// picked gets rank `n - 1`, so eliminating in increasing rank is a perfect
/// elimination order whenever the graph is chordal.
fn mcs_ranks(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = FixedBitSet::with_capacity(n);
    let mut rank = vec![0usize; n];
    for i in (0..n).rev() {
        let v = (0..n)
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unnumbered vertex remains");
        numbered.insert(v);
        rank[v] = i;
        for w in g.row(v + 1).ones() {
            if !numbered.contains(w) {
                weight[w] += 1;
            }
        }
    }
    rank
}

/// A perfect elimination order of `g` (vertices listed in elimination
/// order), or `None` when `g` is not chordal.
///
/// The order comes from maximum cardinality search and is then checked:
/// for each vertex, its later neighbours minus the earliest of them must be
/// adjacent to that earliest one.
pub fn perfect_elimination_order(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let rank = mcs_ranks(g);
    let mut order = vec![0usize; n];
    for v in 0..n {
        order[rank[v]] = v;
    }
    for &v in &order {
        let later: Vec<usize> = g.row(v + 1).ones().filter(|&w| rank[w] > rank[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| rank[w]) else {
            continue;
        };
        let parent_row = g.row(parent + 1);
        if later
            .iter()
            .any(|&w| w != parent && !parent_row.contains(w))
        {
            return None;
        }
    }
    Some(order.into_iter().map(|v| v + 1).collect())
}

/// True iff `g` has no induced cycle of length at least 4.
pub fn is_chordal(g: &SimpleGraph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// True iff the complement of `g` is chordal.
pub fn is_cochordal(g: &SimpleGraph) -> bool {
    is_chordal(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles() {
        assert!(is_chordal(&SimpleGraph::cycle(3)));
        assert!(!is_chordal(&SimpleGraph::cycle(4)));
        assert!(!is_chordal(&SimpleGraph::cycle(7)));
    }

    #[test]
    fn small_and_complete() {
        assert!(is_chordal(&SimpleGraph::empty(0)));
        assert!(is_chordal(&SimpleGraph::empty(5)));
        assert!(is_chordal(&SimpleGraph::complete(6)));
        assert!(is_cochordal(&SimpleGraph::complete(4)));
    }

    #[test]
    fn cycle_with_chord_is_chordal() {
        let mut g = SimpleGraph::cycle(4);
        g.add_edge(1, 3).unwrap();
        let order = perfect_elimination_order(&g).unwrap();
        assert_eq!(order.len(), 4);
    }

    #[test]
    fn two_k2_is_not_cochordal() {
        let g = SimpleGraph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(is_chordal(&g));
        assert!(!is_cochordal(&g));
    }
}
