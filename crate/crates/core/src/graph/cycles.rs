use fixedbitset::FixedBitSet;

use super::SimpleGraph;

/// Default bound on the number of cycles collected before giving up.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// Result of an induced-cycle enumeration. Each cycle starts at its smallest
/// vertex and continues towards the smaller of that vertex's two cycle
/// neighbours; the list is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedCycles {
    pub cycles: Vec<Vec<usize>>,
    /// Set when the cap was hit and the list is incomplete.
    pub truncated: bool,
}

struct Walk<'a> {
    g: &'a SimpleGraph,
    lmin: usize,
    lmax: usize,
    cap: usize,
    out: Vec<Vec<usize>>,
    truncated: bool,
}

impl Walk<'_> {
    /// `path` is an induced path starting at its minimum vertex `path[0]`.
    /// `forbidden` holds the path itself plus every neighbour of an interior
    /// vertex, so candidates only need to avoid it and touch the last vertex.
    fn extend(&mut self, path: &mut Vec<usize>, forbidden: &FixedBitSet) {
        if self.truncated {
            return;
        }
        let start = path[0];
        let last = *path.last().unwrap();
        let k = path.len() - 1;
        let start_row = self.g.row(start);
        for w in self.g.row(last).ones().map(|w| w + 1) {
            if w <= start || forbidden.contains(w - 1) {
                continue;
            }
            if k >= 1 && start_row.contains(w - 1) {
                let len = k + 2;
                if len >= self.lmin && len <= self.lmax && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    self.out.push(cycle);
                    if self.out.len() >= self.cap {
                        self.truncated = true;
                        return;
                    }
                }
                continue;
            }
            // Any cycle through this longer path has at least k + 3 vertices.
            if k + 3 > self.lmax {
                continue;
            }
            let mut next = forbidden.clone();
            next.insert(w - 1);
            if k >= 1 {
                next.union_with(self.g.row(last));
            }
            path.push(w);
            self.extend(path, &next);
            path.pop();
            if self.truncated {
                return;
            }
        }
    }
}

/// All induced cycles of `g` with length in `lmin..=lmax`, up to `cap`.
pub fn enumerate_induced_cycles_capped(
    g: &SimpleGraph,
    lmin: usize,
    lmax: usize,
    cap: usize,
) -> InducedCycles {
    assert!(3 <= lmin && lmin <= lmax, "need 3 <= lmin <= lmax");
    let mut walk = Walk {
        g,
        lmin,
        lmax,
        cap,
        out: Vec::new(),
        truncated: false,
    };
    for s in 1..=g.n() {
        let mut forbidden = FixedBitSet::with_capacity(g.n());
        forbidden.insert(s - 1);
        walk.extend(&mut vec![s], &forbidden);
        if walk.truncated {
            break;
        }
    }
    let mut cycles = walk.out;
    cycles.sort();
    InducedCycles {
        cycles,
        truncated: walk.truncated,
    }
}

/// All induced cycles with length in `lmin..=lmax`, capped at
/// [`DEFAULT_CYCLE_CAP`].
pub fn enumerate_induced_cycles(g: &SimpleGraph, lmin: usize, lmax: usize) -> InducedCycles {
    enumerate_induced_cycles_capped(g, lmin, lmax, DEFAULT_CYCLE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cycle() {
        let c5 = SimpleGraph::cycle(5);
        let found = enumerate_induced_cycles(&c5, 5, 5);
        assert_eq!(found.cycles, vec![vec![1, 2, 3, 4, 5]]);
        assert!(!found.truncated);
        assert!(enumerate_induced_cycles(&c5, 3, 4).cycles.is_empty());
    }

    #[test]
    fn triangles_and_squares() {
        // K4 has four triangles and no induced C4.
        let k4 = SimpleGraph::complete(4);
        assert_eq!(enumerate_induced_cycles(&k4, 3, 4).cycles.len(), 4);
        assert!(enumerate_induced_cycles(&k4, 4, 4).cycles.is_empty());
        // K_{2,3}: three induced 4-cycles.
        let k23 =
            SimpleGraph::from_edges(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let c = enumerate_induced_cycles(&k23, 4, 5);
        assert_eq!(
            c.cycles,
            vec![vec![1, 3, 2, 4], vec![1, 3, 2, 5], vec![1, 4, 2, 5]]
        );
    }

    #[test]
    fn chord_kills_cycle() {
        let mut g = SimpleGraph::cycle(6);
        g.add_edge(1, 4).unwrap();
        let c = enumerate_induced_cycles(&g, 4, 6);
        assert_eq!(c.cycles, vec![vec![1, 2, 3, 4], vec![1, 4, 5, 6]]);
    }

    #[test]
    fn cap_truncates() {
        let k23 =
            SimpleGraph::from_edges(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let c = enumerate_induced_cycles_capped(&k23, 4, 4, 2);
        assert!(c.truncated);
        assert_eq!(c.cycles.len(), 2);
    }
}
