//! Reduced homology of independence complexes over a prime field.
//!
//! Vertices are bits of a `u64`, faces are masks. Boundary ranks come from
//! sparse column reduction modulo `p`.

use std::collections::HashMap;

/// Faces of `Ind(G[w])` grouped by size: `faces[k]` holds the independent
/// sets with `k` vertices, so `faces[0] == [0]` is the empty face.
pub(crate) fn independence_faces(adj: &[u64], w: u64) -> Vec<Vec<u64>> {
    // Each entry is (face, vertices that may still be added).
    let mut layer: Vec<(u64, u64)> = vec![(0, w)];
    let mut faces = vec![vec![0u64]];
    loop {
        let mut next = Vec::new();
        for &(face, allowed) in &layer {
            let mut rest = allowed;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                // Only add vertices above v afterwards, so each face appears once.
                let above = if v == 63 { 0 } else { !0u64 << (v + 1) };
                next.push((face | 1 << v, allowed & !adj[v] & above));
            }
        }
        if next.is_empty() {
            break;
        }
        faces.push(next.iter().map(|&(f, _)| f).collect());
        layer = next;
    }
    faces
}

fn inverse(a: u64, p: u64) -> u64 {
    // a^(p-2) mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// `a - factor * b` on sorted sparse vectors mod `p`.
fn axpy(a: &[(u32, u64)], factor: u64, b: &[(u32, u64)], p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        let take_a = y == b.len() || (x < a.len() && a[x].0 < b[y].0);
        let take_b = x == a.len() || (y < b.len() && b[y].0 < a[x].0);
        if take_a {
            out.push(a[x]);
            x += 1;
        } else if take_b {
            out.push((b[y].0, (p - factor * b[y].1 % p) % p));
            y += 1;
        } else {
            let c = (a[x].1 + p - factor * b[y].1 % p) % p;
            if c != 0 {
                out.push((a[x].0, c));
            }
            x += 1;
            y += 1;
        }
    }
    out
}

/// Rank of the boundary map from faces of size `k` to faces of size `k - 1`.
fn boundary_rank(high: &[u64], low: &[u64], p: u64) -> usize {
    if high.is_empty() || low.is_empty() {
        return 0;
    }
    let index: HashMap<u64, u32> = low
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i as u32))
        .collect();
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    let mut rank = 0;
    for &face in high {
        let mut col: Vec<(u32, u64)> = Vec::new();
        let mut rest = face;
        let mut k = 0;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let sign = if k % 2 == 0 { 1 } else { p - 1 };
            col.push((index[&(face ^ bit)], sign % p));
            k += 1;
        }
        col.sort_unstable_by_key(|e| e.0);
        while let Some(&(low_row, c)) = col.last() {
            match pivots.get(&low_row) {
                Some(pivot) => {
                    let pc = pivot.last().unwrap().1;
                    let factor = c * inverse(pc, p) % p;
                    col = axpy(&col, factor, pivot, p);
                }
                None => {
                    pivots.insert(low_row, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Reduced Betti numbers of `Ind(G[w])`: entry `k` is the rank of
/// `H̃_{k-1}`, so index 0 is dimension -1.
pub(crate) fn reduced_ranks_of(adj: &[u64], w: u64, p: u64) -> (Vec<usize>, Vec<usize>) {
    let faces = independence_faces(adj, w);
    let counts: Vec<usize> = faces.iter().map(Vec::len).collect();
    // rank of ∂ from size k to size k - 1, for k = 1..=len
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        ranks[k] = boundary_rank(&faces[k], &faces[k - 1], p);
    }
    let betti = (0..faces.len())
        .map(|k| counts[k] - ranks[k] - ranks[k + 1])
        .collect();
    (betti, counts)
}

/// Largest `d >= floor` with `H̃_d(Ind(G[w])) != 0`, scanning from the top
/// dimension down so that the first hit ends the work.
pub(crate) fn top_homology(adj: &[u64], w: u64, p: u64, floor: usize) -> Option<usize> {
    let faces = independence_faces(adj, w);
    // faces[k] has dimension k - 1; dimension d uses faces[d + 1].
    let top = faces.len().checked_sub(2)?;
    let mut rank_above = 0;
    for d in (floor..=top).rev() {
        let rank_here = boundary_rank(&faces[d + 1], &faces[d], p);
        if faces[d + 1].len() > rank_here + rank_above {
            return Some(d);
        }
        rank_above = rank_here;
    }
    None
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_of_two_points() {
        // K2: vertices 0 and 1 adjacent.
        let adj = [0b10, 0b01];
        let f = independence_faces(&adj, 0b11);
        assert_eq!(f, vec![vec![0], vec![1, 2]]);
        let (betti, _) = reduced_ranks_of(&adj, 0b11, 2);
        assert_eq!(betti, vec![0, 1]);
    }

    #[test]
    fn square_from_two_k2() {
        // 2K2 = {0,1}, {2,3}: Ind is a 4-cycle.
        let adj = [0b0010, 0b0001, 0b1000, 0b0100];
        for p in [2, 3, 5] {
            let (betti, counts) = reduced_ranks_of(&adj, 0b1111, p);
            assert_eq!(counts, vec![1, 4, 4]);
            assert_eq!(betti, vec![0, 0, 1]);
        }
    }

    #[test]
    fn simplex_is_acyclic() {
        let adj = [0u64; 4];
        let (betti, counts) = reduced_ranks_of(&adj, 0b1111, 2);
        assert_eq!(counts, vec![1, 4, 6, 4, 1]);
        assert!(betti.iter().all(|&b| b == 0));
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(101));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(9));
    }
}
