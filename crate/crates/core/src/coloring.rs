//! Proper hyperedge colorings and the exact chromatic-index solver.
//!
//! Coloring the edges of `H` properly is coloring the vertices of its
//! intersection graph, so the solver works on that graph: DSATUR ordering,
//! branch and bound, new colors opened only as `max_used + 1`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::{Hypergraph, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    MissingEdgeAssignment {
        expected: usize,
        found: usize,
    },
    /// Color indices must be exactly `0..q`.
    NotSurjective {
        unused: usize,
    },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingEdgeAssignment { expected, found } => write!(
                f,
                "coloring assigns {found} edges but the hypergraph has {expected}"
            ),
            Self::NotSurjective { unused } => {
                write!(f, "color {unused} is never used; colors must be 0..q")
            }
        }
    }
}

impl core::error::Error for ColoringError {}

/// Edge index → color index, with colors exactly `0..q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    q: usize,
}

impl EdgeColoring {
    pub fn new(colors: Vec<usize>) -> Result<Self, ColoringError> {
        let q = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; q];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(unused) = used.iter().position(|&u| !u) {
            return Err(ColoringError::NotSurjective { unused });
        }
        Ok(Self { colors, q })
    }

    /// Renumbers colors by first appearance in edge order.
    fn canonical(colors: &[usize]) -> Self {
        let mut map = Vec::new();
        let mut next = 0;
        let mut out = Vec::with_capacity(colors.len());
        for &c in colors {
            if c >= map.len() {
                map.resize(c + 1, usize::MAX);
            }
            if map[c] == usize::MAX {
                map[c] = next;
                next += 1;
            }
            out.push(map[c]);
        }
        Self {
            colors: out,
            q: next,
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn edges_with(&self, color: usize) -> impl Iterator<Item = usize> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(move |&(_, &c)| c == color)
            .map(|(e, _)| e)
    }
}

/// Graph on the edge indices of `h`, adjacent when the edges meet.
pub fn intersection_graph(h: &Hypergraph) -> SimpleGraph {
    let mut g = SimpleGraph::new(h.edge_count());
    for v in 0..h.vertex_count() {
        let star = h.star(v);
        for (i, &a) in star.iter().enumerate() {
            for &b in &star[i + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    g
}

pub fn is_proper(h: &Hypergraph, coloring: &EdgeColoring) -> Result<bool, ColoringError> {
    if coloring.colors.len() != h.edge_count() {
        return Err(ColoringError::MissingEdgeAssignment {
            expected: h.edge_count(),
            found: coloring.colors.len(),
        });
    }
    Ok((0..h.vertex_count()).all(|v| {
        let mut seen = BTreeSet::new();
        h.star(v).iter().all(|&e| seen.insert(coloring.color(e)))
    }))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Shuffles the DSATUR tie-break order, which can select a different
    /// minimal coloring. `None` breaks ties by edge index.
    pub seed: Option<u64>,
}

/// A minimal proper coloring; its `q()` is the chromatic index.
pub fn chromatic_index(h: &Hypergraph) -> EdgeColoring {
    chromatic_index_with(h, &SolverOptions::default())
}

pub fn chromatic_index_with(h: &Hypergraph, options: &SolverOptions) -> EdgeColoring {
    let g = intersection_graph(h);
    let mut rank: Vec<usize> = (0..g.vertex_count()).collect();
    if let Some(seed) = options.seed {
        rank.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let colors = color_graph_exact(&g, &rank);
    EdgeColoring::canonical(&colors)
}

/// Exact vertex coloring of `g`. `rank[v]` breaks saturation ties (lower first).
pub(crate) fn color_graph_exact(g: &SimpleGraph, rank: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let lower = greedy_clique(&adj).len();

    let mut search = Search::new(adj, rank);
    let greedy = search.greedy();
    let upper = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);
    search.best = greedy;
    search.best_q = upper;
    search.lower = lower;
    if upper > lower {
        search.dfs(0, 0);
    }
    search.best
}

/// Greedily grown clique: from each start vertex add the candidate with the
/// most neighbours among the remaining candidates.
pub(crate) fn greedy_clique(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut best: Vec<usize> = Vec::new();
    let mut is_adj = vec![vec![false; n]; n];
    for (v, nbrs) in adj.iter().enumerate() {
        for &w in nbrs {
            is_adj[v][w] = true;
        }
    }
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand: Vec<usize> = adj[start].clone();
        while !cand.is_empty() {
            let pick = *cand
                .iter()
                .max_by_key(|&&c| {
                    let inner = cand.iter().filter(|&&d| is_adj[c][d]).count();
                    (inner, core::cmp::Reverse(c))
                })
                .expect("non-empty");
            clique.push(pick);
            cand.retain(|&c| c != pick && is_adj[pick][c]);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

const UNCOLORED: usize = usize::MAX;

struct Search<'r> {
    adj: Vec<Vec<usize>>,
    rank: &'r [usize],
    colors: Vec<usize>,
    /// `conflicts[v][c]`: colored neighbours of `v` holding color `c`.
    conflicts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: Vec<usize>,
    best_q: usize,
    lower: usize,
}

impl<'r> Search<'r> {
    fn new(adj: Vec<Vec<usize>>, rank: &'r [usize]) -> Self {
        let n = adj.len();
        Self {
            adj,
            rank,
            colors: vec![UNCOLORED; n],
            conflicts: vec![vec![0; n + 1]; n],
            saturation: vec![0; n],
            best: Vec::new(),
            best_q: usize::MAX,
            lower: 0,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.conflicts[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.conflicts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.conflicts[w][c] -= 1;
            if self.conflicts[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncolored vertex of maximum saturation, ties by rank.
    fn select(&self) -> usize {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], core::cmp::Reverse(self.rank[v])))
            .expect("an uncolored vertex remains")
    }

    fn greedy(&mut self) -> Vec<usize> {
        let n = self.colors.len();
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = self.select();
            let c = (0..)
                .find(|&c| self.conflicts[v][c] == 0)
                .expect("a free color");
            self.assign(v, c);
            order.push(v);
        }
        let out = self.colors.clone();
        for &v in order.iter().rev() {
            self.unassign(v);
        }
        out
    }

    fn dfs(&mut self, colored: usize, used: usize) {
        if colored == self.colors.len() {
            if used < self.best_q {
                self.best_q = used;
                self.best = self.colors.clone();
            }
            return;
        }
        let v = self.select();
        for c in 0..used {
            if self.conflicts[v][c] == 0 {
                self.assign(v, c);
                self.dfs(colored + 1, used);
                self.unassign(v);
                if self.best_q == self.lower {
                    return;
                }
            }
        }
        if used + 1 < self.best_q {
            self.assign(v, used);
            self.dfs(colored + 1, used + 1);
            self.unassign(v);
        }
    }
}

/// Per-vertex set of colors on the edges through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColorSets(Vec<BTreeSet<usize>>);

impl VertexColorSets {
    pub fn get(&self, v: usize) -> &BTreeSet<usize> {
        &self.0[v]
    }

    pub fn as_slice(&self) -> &[BTreeSet<usize>] {
        &self.0
    }
}

pub fn induced_vertex_colors(h: &Hypergraph, coloring: &EdgeColoring) -> VertexColorSets {
    VertexColorSets(
        (0..h.vertex_count())
            .map(|v| h.star(v).iter().map(|&e| coloring.color(e)).collect())
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairAdjacency {
    Holds,
    /// No edge colored `kept` meets an edge colored `merged`; `witness` is
    /// the proper coloring with one color fewer obtained by recoloring
    /// `merged` as `kept`.
    Violated {
        kept: usize,
        merged: usize,
        witness: EdgeColoring,
    },
}

impl PairAdjacency {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Holds)
    }
}

/// Every pair of color classes must touch in a minimal coloring; otherwise
/// the two classes merge.
pub fn pair_adjacency_check(h: &Hypergraph, coloring: &EdgeColoring) -> PairAdjacency {
    let q = coloring.q();
    let mut touch = vec![vec![false; q]; q];
    for v in 0..h.vertex_count() {
        let star = h.star(v);
        for &a in star {
            for &b in star {
                touch[coloring.color(a)][coloring.color(b)] = true;
            }
        }
    }
    for kept in 0..q {
        for merged in kept + 1..q {
            if !touch[kept][merged] {
                let colors = coloring
                    .colors()
                    .iter()
                    .map(|&c| match c.cmp(&merged) {
                        core::cmp::Ordering::Equal => kept,
                        core::cmp::Ordering::Greater => c - 1,
                        core::cmp::Ordering::Less => c,
                    })
                    .collect();
                return PairAdjacency::Violated {
                    kept,
                    merged,
                    witness: EdgeColoring { colors, q: q - 1 },
                };
            }
        }
    }
    PairAdjacency::Holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab;

    fn disjoint_pair() -> Hypergraph {
        Hypergraph::from_edges("d", 4, vec![vec![0, 1], vec![2, 3]]).unwrap()
    }

    #[test]
    fn coloring_must_be_surjective() {
        assert_eq!(
            EdgeColoring::new(vec![0, 2]).unwrap_err(),
            ColoringError::NotSurjective { unused: 1 }
        );
        assert_eq!(EdgeColoring::new(vec![1, 0, 1]).unwrap().q(), 2);
    }

    #[test]
    fn intersection_graph_examples() {
        let g = intersection_graph(&lab::fano());
        assert_eq!(g.edge_count(), 21);
        assert_eq!(intersection_graph(&disjoint_pair()).edge_count(), 0);
        assert_eq!(intersection_graph(&lab::flower(3, 3)).edge_count(), 3);
    }

    #[test]
    fn chromatic_index_examples() {
        let fano = chromatic_index(&lab::fano());
        assert_eq!(fano.q(), 7);
        assert_eq!(fano.colors(), &[0, 1, 2, 3, 4, 5, 6]);

        let tri = Hypergraph::from_edges("t", 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(chromatic_index(&tri).q(), 3);
        assert_eq!(chromatic_index(&disjoint_pair()).q(), 1);
    }

    #[test]
    fn odd_cycle_needs_three() {
        // C5 as a 2-uniform hypergraph: edge chromatic index 3
        let c5 = Hypergraph::from_edges(
            "c5",
            5,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]],
        )
        .unwrap();
        let c = chromatic_index(&c5);
        assert_eq!(c.q(), 3);
        assert!(is_proper(&c5, &c).unwrap());
    }

    #[test]
    fn seeded_solver_stays_minimal() {
        let h = lab::flower(4, 3);
        for seed in 0..10 {
            let c = chromatic_index_with(&h, &SolverOptions { seed: Some(seed) });
            assert_eq!(c.q(), 4);
            assert!(is_proper(&h, &c).unwrap());
        }
    }

    #[test]
    fn properness_examples() {
        let fano = lab::fano();
        assert!(is_proper(&fano, &EdgeColoring::new((0..7).collect()).unwrap()).unwrap());
        let flower = lab::flower(3, 3);
        assert!(!is_proper(&flower, &EdgeColoring::new(vec![0, 0, 1]).unwrap()).unwrap());
        assert!(is_proper(&disjoint_pair(), &EdgeColoring::new(vec![0, 0]).unwrap()).unwrap());
        assert_eq!(
            is_proper(&flower, &EdgeColoring::new(vec![0, 1]).unwrap()).unwrap_err(),
            ColoringError::MissingEdgeAssignment {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn induced_colors_examples() {
        let fano = lab::fano();
        let c = chromatic_index(&fano);
        let sets = induced_vertex_colors(&fano, &c);
        // point "2" is on 123, 246, 257: edges 0, 3, 4
        let expected: BTreeSet<usize> = [c.color(0), c.color(3), c.color(4)].into_iter().collect();
        assert_eq!(sets.get(1), &expected);

        let flower = lab::flower(3, 3);
        let c = chromatic_index(&flower);
        let sets = induced_vertex_colors(&flower, &c);
        assert_eq!(sets.get(1).len(), 1);
        assert_eq!(sets.get(0).len(), 3);
    }

    #[test]
    fn pair_adjacency_examples() {
        let fano = lab::fano();
        assert!(pair_adjacency_check(&fano, &chromatic_index(&fano)).holds());

        let d = disjoint_pair();
        match pair_adjacency_check(&d, &EdgeColoring::new(vec![0, 1]).unwrap()) {
            PairAdjacency::Violated {
                kept,
                merged,
                witness,
            } => {
                assert_eq!((kept, merged), (0, 1));
                assert_eq!(witness.colors(), &[0, 0]);
                assert!(is_proper(&d, &witness).unwrap());
            }
            PairAdjacency::Holds => panic!("disjoint classes should merge"),
        }

        assert!(pair_adjacency_check(&d, &EdgeColoring::new(vec![0, 0]).unwrap()).holds());
    }
}
