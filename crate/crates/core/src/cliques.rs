//! Maximal clique enumeration (Bron–Kerbosch with pivoting).

use alloc::vec::Vec;

/// All maximal cliques of the graph given by the symmetric relation
/// `adjacent` on `0..n`. Each clique is sorted; cliques come out in a
/// deterministic order.
pub fn maximal_cliques<F>(n: usize, adjacent: F) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    if n == 0 {
        return Vec::new();
    }
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| a != b && adjacent(a, b)).collect())
        .collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(&adj, &mut r, (0..n).collect(), Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot: vertex of P ∪ X with the most neighbours in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&w| adj[u][w]).count())
        .expect("P is non-empty");
    let todo: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in todo {
        let next_p = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let next_x = x.iter().copied().filter(|&w| adj[v][w]).collect();
        r.push(v);
        expand(adj, r, next_p, next_x, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_graph() {
        // 0-1-2 triangle, 2-3, isolated 4
        let edges = [(0, 1), (0, 2), (1, 2), (2, 3)];
        let adj = |a: usize, b: usize| {
            edges
                .iter()
                .any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
        };
        assert_eq!(
            maximal_cliques(5, adj),
            vec![vec![0, 1, 2], vec![2, 3], vec![4]]
        );
    }

    #[test]
    fn empty_and_complete() {
        assert!(maximal_cliques(0, |_, _| true).is_empty());
        assert_eq!(maximal_cliques(4, |_, _| true), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        // pseudo-random graphs on 8 vertices; oracle: every clique that is
        // not contained in a larger clique
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..50 {
            let n = 8;
            let mut m = vec![vec![false; n]; n];
            for a in 0..n {
                for b in a + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    let on = state % 2 == 0;
                    m[a][b] = on;
                    m[b][a] = on;
                }
            }
            let is_clique = |mask: u32| {
                (0..n).all(|a| {
                    (0..n)
                        .all(|b| a == b || mask & (1 << a) == 0 || mask & (1 << b) == 0 || m[a][b])
                })
            };
            let mut expected = Vec::new();
            for mask in 1u32..(1 << n) {
                if is_clique(mask)
                    && (0..n).all(|v| mask & (1 << v) != 0 || !is_clique(mask | (1 << v)))
                {
                    expected.push((0..n).filter(|&v| mask & (1 << v) != 0).collect::<Vec<_>>());
                }
            }
            expected.sort();
            assert_eq!(maximal_cliques(n, |a, b| m[a][b]), expected);
        }
    }
}
