#![allow(dead_code)]

use std::collections::BTreeSet;

use increg::{ChainSpec, SimpleGraph};

/// Every strictly increasing map `[r] -> [n]`, as its image list.
pub fn increasing_maps(r: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, left: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=n + 1 - left {
            cur.push(x);
            go(x + 1, left - 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, r, n, &mut Vec::new(), &mut out);
    out
}

/// `G_n` as the union of the Inc-orbits of the generators.
pub fn orbit_graph(spec: &ChainSpec, n: usize) -> SimpleGraph {
    let mut edges = BTreeSet::new();
    for pi in increasing_maps(spec.r(), n) {
        for &(i, j) in spec.edges() {
            edges.insert((pi[i - 1], pi[j - 1]));
        }
    }
    SimpleGraph::from_edges(n, edges).unwrap()
}

/// Largest induced matching by trying every edge subset in order.
pub fn brute_indmatch(g: &SimpleGraph) -> usize {
    let edges = g.edges();
    fn ok(g: &SimpleGraph, a: (usize, usize), b: (usize, usize)) -> bool {
        let vs = [a.0, a.1, b.0, b.1];
        let distinct = vs.iter().collect::<BTreeSet<_>>().len() == 4;
        distinct
            && !g.has_edge(a.0, b.0)
            && !g.has_edge(a.0, b.1)
            && !g.has_edge(a.1, b.0)
            && !g.has_edge(a.1, b.1)
    }
    fn go(
        g: &SimpleGraph,
        edges: &[(usize, usize)],
        k: usize,
        chosen: &mut Vec<(usize, usize)>,
    ) -> usize {
        let mut best = chosen.len();
        for t in k..edges.len() {
            if chosen.iter().all(|&c| ok(g, c, edges[t])) {
                chosen.push(edges[t]);
                best = best.max(go(g, edges, t + 1, chosen));
                chosen.pop();
            }
        }
        best
    }
    go(g, &edges, 0, &mut Vec::new())
}

/// True iff some vertex subset of size at least 4 induces a cycle.
pub fn brute_has_long_hole(g: &SimpleGraph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|mask| {
        let vs: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if vs.len() < 4 {
            return false;
        }
        let degree_two = vs
            .iter()
            .all(|&v| vs.iter().filter(|&&w| g.has_edge(v, w)).count() == 2);
        if !degree_two {
            return false;
        }
        // 2-regular and connected means a single cycle.
        let mut seen = vec![vs[0]];
        let mut stack = vec![vs[0]];
        while let Some(v) = stack.pop() {
            for &w in &vs {
                if g.has_edge(v, w) && !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == vs.len()
    })
}

pub fn brute_cochordal(g: &SimpleGraph) -> bool {
    !brute_has_long_hole(&g.complement())
}

/// Graph on `[n]` from the bits of `code` over the pairs in lexicographic order.
pub fn graph_from_code(n: usize, code: u64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    let mut bit = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if code >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

pub fn six_edge_chain() -> ChainSpec {
    ChainSpec::new(9, [(1, 5), (1, 8), (2, 9), (3, 6), (4, 7), (5, 9)]).unwrap()
}
