//! Validated linear loopless hypergraphs, their two-section graph and the
//! degree/rank metrics everything else is phrased in.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Reason a raw vertex/edge description is not a linear loopless hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationError {
    EmptyVertexList,
    DuplicateLabel(String),
    UnknownLabel { edge: usize, label: String },
    UnknownVertex { edge: usize, vertex: usize },
    RepeatedVertex { edge: usize, label: String },
    SizeOneEdge { edge: usize },
    DuplicateEdge { first: usize, second: usize },
    NonLinearPair { first: usize, second: usize },
    IsolatedVertex(String),
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyVertexList => write!(f, "vertex list is empty"),
            Self::DuplicateLabel(l) => write!(f, "vertex label {l:?} appears more than once"),
            Self::UnknownLabel { edge, label } => {
                write!(f, "edges[{edge}]: unknown vertex label {label:?}")
            }
            Self::UnknownVertex { edge, vertex } => {
                write!(f, "edges[{edge}]: vertex index {vertex} out of range")
            }
            Self::RepeatedVertex { edge, label } => {
                write!(f, "edges[{edge}]: vertex {label:?} listed twice")
            }
            Self::SizeOneEdge { edge } => {
                write!(f, "edges[{edge}]: hyperedges need at least two vertices")
            }
            Self::DuplicateEdge { first, second } => {
                write!(
                    f,
                    "edges[{first}] and edges[{second}] are the same vertex set"
                )
            }
            Self::NonLinearPair { first, second } => write!(
                f,
                "edges[{first}] and edges[{second}] share more than one vertex (not linear)"
            ),
            Self::IsolatedVertex(l) => write!(f, "vertex {l:?} is not contained in any edge"),
        }
    }
}

impl core::error::Error for ValidationError {}

/// A linear, loopless hypergraph without isolated vertices.
///
/// Vertices are dense indices `0..n` carrying text labels. Edges keep their
/// input order and are stored as sorted vertex lists; the edge index is the
/// identifier used by colorings, orbits and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    name: String,
    labels: Vec<String>,
    edges: Vec<Vec<usize>>,
    stars: Vec<Vec<usize>>,
    lookup: BTreeMap<Vec<usize>, usize>,
}

impl Hypergraph {
    /// Builds a hypergraph from text labels, reporting the first violated
    /// invariant.
    pub fn validate<S, T>(
        name: &str,
        vertices: &[S],
        edges: &[Vec<T>],
    ) -> Result<Self, ValidationError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(ValidationError::DuplicateLabel(l.clone()));
            }
        }
        let mut indexed = Vec::with_capacity(edges.len());
        for (e, raw) in edges.iter().enumerate() {
            let mut members = Vec::with_capacity(raw.len());
            for l in raw {
                match index.get(l.as_ref()) {
                    Some(&v) => members.push(v),
                    None => {
                        return Err(ValidationError::UnknownLabel {
                            edge: e,
                            label: l.as_ref().to_string(),
                        })
                    }
                }
            }
            indexed.push(members);
        }
        Self::with_labels(name, labels, indexed)
    }

    /// Builds a hypergraph over explicit labels from vertex-index edges.
    pub fn with_labels(
        name: &str,
        labels: Vec<String>,
        edges: Vec<Vec<usize>>,
    ) -> Result<Self, ValidationError> {
        if labels.is_empty() {
            return Err(ValidationError::EmptyVertexList);
        }
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ValidationError::DuplicateLabel(l.clone()));
            }
        }

        let mut sorted_edges = Vec::with_capacity(edges.len());
        for (e, mut members) in edges.into_iter().enumerate() {
            if let Some(&v) = members.iter().find(|&&v| v >= n) {
                return Err(ValidationError::UnknownVertex { edge: e, vertex: v });
            }
            members.sort_unstable();
            if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
                return Err(ValidationError::RepeatedVertex {
                    edge: e,
                    label: labels[w[0]].clone(),
                });
            }
            if members.len() < 2 {
                return Err(ValidationError::SizeOneEdge { edge: e });
            }
            sorted_edges.push(members);
        }

        let mut lookup = BTreeMap::new();
        for (e, members) in sorted_edges.iter().enumerate() {
            if let Some(&first) = lookup.get(members) {
                return Err(ValidationError::DuplicateEdge { first, second: e });
            }
            lookup.insert(members.clone(), e);
        }

        // Two edges sharing two vertices share the pair; one owner per pair.
        let mut pair_owner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (e, members) in sorted_edges.iter().enumerate() {
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if let Some(&first) = pair_owner.get(&(a, b)) {
                        return Err(ValidationError::NonLinearPair { first, second: e });
                    }
                    pair_owner.insert((a, b), e);
                }
            }
        }

        let mut stars = alloc::vec![Vec::new(); n];
        for (e, members) in sorted_edges.iter().enumerate() {
            for &v in members {
                stars[v].push(e);
            }
        }
        if let Some(v) = stars.iter().position(Vec::is_empty) {
            return Err(ValidationError::IsolatedVertex(labels[v].clone()));
        }

        Ok(Self {
            name: name.to_string(),
            labels,
            edges: sorted_edges,
            stars,
            lookup,
        })
    }

    /// Convenience constructor labelling vertex `i` as `i` in decimal.
    pub fn from_edges(
        name: &str,
        n: usize,
        edges: Vec<Vec<usize>>,
    ) -> Result<Self, ValidationError> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(name, labels, edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    /// The edges containing `v`, in edge-index order.
    pub fn star(&self, v: usize) -> &[usize] {
        &self.stars[v]
    }

    /// Membership predicate of the edge set: the index of the edge equal to
    /// `set` (in any order), if there is one.
    pub fn edge_id(&self, set: &[usize]) -> Option<usize> {
        if set.windows(2).all(|w| w[0] < w[1]) {
            self.lookup.get(set).copied()
        } else {
            let mut sorted = set.to_vec();
            sorted.sort_unstable();
            self.lookup.get(&sorted).copied()
        }
    }

    pub fn is_edge(&self, set: &[usize]) -> bool {
        self.edge_id(set).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.stars[v].len()
    }

    /// Two-section degree by the incidence sum `Σ (|e| - 1)`; equals the
    /// graph degree in the two-section because the hypergraph is linear.
    pub fn degree2(&self, v: usize) -> usize {
        self.stars[v].iter().map(|&e| self.edges[e].len() - 1).sum()
    }

    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn antirank(&self) -> usize {
        self.edges.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(k)` when every edge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.rank();
        (r == self.antirank()).then_some(r)
    }

    pub fn edges_intersect(&self, a: usize, b: usize) -> bool {
        intersects_sorted(&self.edges[a], &self.edges[b])
    }

    pub fn metrics(&self) -> Metrics {
        let degrees: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        let degrees2: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree2(v)).collect();
        Metrics {
            delta: degrees.iter().copied().max().unwrap_or(0),
            delta2: degrees2.iter().copied().max().unwrap_or(0),
            rank: self.rank(),
            antirank: self.antirank(),
            degrees,
            degrees2,
        }
    }

    /// The graph in which every edge is replaced by a clique on its vertices.
    pub fn two_section(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertex_count());
        for e in &self.edges {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// `(ar - 1)·Δ <= Δ₂ <= (r - 1)·Δ`.
    pub fn check_sandwich(&self) -> Sandwich {
        let m = self.metrics();
        let lower = (m.antirank - 1) * m.delta;
        let upper = (m.rank - 1) * m.delta;
        Sandwich {
            lower,
            middle: m.delta2,
            upper,
            holds: lower <= m.delta2 && m.delta2 <= upper,
        }
    }
}

/// Degree and size statistics of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    pub delta: usize,
    pub delta2: usize,
    pub rank: usize,
    pub antirank: usize,
    pub degrees: Vec<usize>,
    pub degrees2: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sandwich {
    pub lower: usize,
    pub middle: usize,
    pub upper: usize,
    pub holds: bool,
}

/// Undirected simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        Self {
            adjacency: alloc::vec![BTreeSet::new(); n],
        }
    }

    /// Adds `{a, b}`; self-loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adjacency[a].insert(b);
            self.adjacency[b].insert(a);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.range(a + 1..).map(|&b| (a, b)));
        }
        out
    }
}

/// A finite family of point sets with no structural requirements; used for
/// the derived hypergraphs over colors and over quotient classes, which are
/// generally neither linear nor uniform.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SetSystem {
    points: Vec<usize>,
    edges: Vec<Vec<usize>>,
}

impl SetSystem {
    /// Point set is the union of the edges.
    pub fn new(edges: Vec<Vec<usize>>) -> Self {
        let mut edges = edges;
        for e in &mut edges {
            e.sort_unstable();
            e.dedup();
        }
        let points: BTreeSet<usize> = edges.iter().flatten().copied().collect();
        Self {
            points: points.into_iter().collect(),
            edges,
        }
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn degree(&self, p: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&p).is_ok())
            .count()
    }

    pub fn max_degree(&self) -> usize {
        self.points
            .iter()
            .map(|&p| self.degree(p))
            .max()
            .unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of distinct points sharing an edge with `p`.
    pub fn two_section_degree(&self, p: usize) -> usize {
        let nbrs: BTreeSet<usize> = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&p).is_ok())
            .flatten()
            .copied()
            .filter(|&x| x != p)
            .collect();
        nbrs.len()
    }

    pub fn max_two_section_degree(&self) -> usize {
        self.points
            .iter()
            .map(|&p| self.two_section_degree(p))
            .max()
            .unwrap_or(0)
    }
}

/// `|A Δ B|`, the Hamming-style distance on vertex subsets.
pub fn sym_diff_distance(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> usize {
    a.symmetric_difference(b).count()
}

pub(crate) fn intersects_sorted(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab;
    use alloc::vec;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn fano_is_valid_and_linear() {
        let h = lab::fano();
        assert_eq!(h.edge_count(), 7);
        for a in 0..7 {
            for b in a + 1..7 {
                assert_eq!(intersect_sorted(h.edge(a), h.edge(b)).len(), 1);
            }
        }
    }

    #[test]
    fn rejects_shared_pair() {
        let err = Hypergraph::validate(
            "x",
            &["a", "b", "c", "d"],
            &[vec!["a", "b", "c"], vec!["a", "b", "d"]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            ValidationError::NonLinearPair {
                first: 0,
                second: 1
            }
        );
    }

    #[test]
    fn rejects_size_one_edge() {
        let err = Hypergraph::validate("x", &["a"], &[vec!["a"]]).unwrap_err();
        assert_eq!(err, ValidationError::SizeOneEdge { edge: 0 });
    }

    #[test]
    fn rejects_other_defects() {
        assert_eq!(
            Hypergraph::validate::<&str, &str>("x", &[], &[]).unwrap_err(),
            ValidationError::EmptyVertexList
        );
        assert_eq!(
            Hypergraph::validate("x", &["a", "a"], &[vec!["a", "a"]]).unwrap_err(),
            ValidationError::DuplicateLabel("a".into())
        );
        assert_eq!(
            Hypergraph::validate("x", &["a", "b"], &[vec!["a", "z"]]).unwrap_err(),
            ValidationError::UnknownLabel {
                edge: 0,
                label: "z".into()
            }
        );
        assert_eq!(
            Hypergraph::validate("x", &["a", "b", "c"], &[vec!["a", "b"], vec!["b", "a"]])
                .unwrap_err(),
            ValidationError::DuplicateEdge {
                first: 0,
                second: 1
            }
        );
        assert_eq!(
            Hypergraph::validate("x", &["a", "b", "c"], &[vec!["a", "b"]]).unwrap_err(),
            ValidationError::IsolatedVertex("c".into())
        );
        assert_eq!(
            Hypergraph::validate("x", &["a", "b"], &[vec!["a", "b", "a"]]).unwrap_err(),
            ValidationError::RepeatedVertex {
                edge: 0,
                label: "a".into()
            }
        );
    }

    #[test]
    fn two_section_examples() {
        let tri = Hypergraph::validate("t", &["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let g = tri.two_section();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge_list(), vec![(0, 1), (0, 2), (1, 2)]);

        let two = Hypergraph::validate(
            "d",
            &["a", "b", "c", "d"],
            &[vec!["a", "b"], vec!["c", "d"]],
        )
        .unwrap();
        assert_eq!(two.two_section().edge_list(), vec![(0, 1), (2, 3)]);

        let fano = lab::fano();
        let g = fano.two_section();
        assert!((0..7).all(|v| g.degree(v) == 6));
    }

    #[test]
    fn metrics_examples() {
        let m = lab::fano().metrics();
        assert_eq!((m.delta, m.delta2, m.antirank, m.rank), (3, 6, 3, 3));

        let m = lab::flower(3, 3).metrics();
        assert_eq!((m.delta, m.delta2, m.antirank, m.rank), (3, 6, 3, 3));

        let single = Hypergraph::from_edges("s", 4, vec![vec![0, 1, 2, 3]]).unwrap();
        let m = single.metrics();
        assert_eq!((m.delta, m.delta2, m.antirank, m.rank), (1, 3, 4, 4));
    }

    #[test]
    fn stars() {
        let fano = lab::fano();
        // point "1" is index 0; lines 123, 145, 167 are edges 0, 1, 2
        assert_eq!(fano.star(0), &[0, 1, 2]);
        let flower = lab::flower(3, 3);
        assert_eq!(flower.star(0), &[0, 1, 2]);
        assert_eq!(flower.star(1), &[0]);
    }

    #[test]
    fn membership_predicate() {
        let fano = lab::fano();
        assert_eq!(fano.edge_id(&[2, 0, 1]), Some(0));
        assert_eq!(fano.edge_id(&[0, 1]), None);
        assert!(!fano.is_edge(&[0, 1, 3]));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(sym_diff_distance(&set(&[0, 1]), &set(&[1, 2])), 2);
        assert_eq!(sym_diff_distance(&set(&[0, 4]), &set(&[0, 4])), 0);
        assert_eq!(sym_diff_distance(&set(&[]), &set(&[0, 1, 2])), 3);
    }

    #[test]
    fn sandwich_examples() {
        let s = lab::fano().check_sandwich();
        assert_eq!((s.lower, s.middle, s.upper, s.holds), (6, 6, 6, true));

        let h = Hypergraph::validate(
            "p",
            &["a", "b", "c", "d"],
            &[vec!["a", "b"], vec!["b", "c", "d"]],
        )
        .unwrap();
        let s = h.check_sandwich();
        assert_eq!((s.lower, s.middle, s.upper, s.holds), (2, 3, 4, true));

        let s = lab::flower(3, 3).check_sandwich();
        assert_eq!((s.lower, s.middle, s.upper), (6, 6, 6));
    }

    #[test]
    fn set_system_two_section_counts_distinct_neighbours() {
        // non-linear: {0,1,2} and {0,1,3} share the pair 01
        let s = SetSystem::new(vec![vec![0, 1, 2], vec![0, 1, 3]]);
        assert_eq!(s.two_section_degree(0), 3);
        assert_eq!(s.degree(0), 2);
        assert_eq!(s.rank(), 3);
    }
}
