//! Hypergraph automorphisms as explicit permutation lists, the subgroup
//! preserving a coloring, its edge orbits, and the Burnside orbit count
//! that bounds the chromatic index from above.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::EdgeColoring;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    VertexCapExceeded {
        vertices: usize,
        cap: usize,
    },
    GroupTooLarge {
        cap: usize,
    },
    NotAPermutation,
    EmptyGroup,
    /// The fixed-point sum is not a multiple of the group order, so the
    /// element list was not a group.
    NonIntegerAverage {
        fixed_sum: usize,
        order: usize,
    },
}

impl fmt::Display for SymmetryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexCapExceeded { vertices, cap } => write!(
                f,
                "{vertices} vertices exceeds the automorphism search cap of {cap}"
            ),
            Self::GroupTooLarge { cap } => {
                write!(f, "automorphism group has more than {cap} elements")
            }
            Self::NotAPermutation => write!(f, "image list is not a bijection"),
            Self::EmptyGroup => write!(f, "group element list is empty"),
            Self::NonIntegerAverage { fixed_sum, order } => write!(
                f,
                "fixed-point sum {fixed_sum} is not divisible by group order {order}"
            ),
        }
    }
}

impl core::error::Error for SymmetryError {}

/// A bijection on `0..n`; `images()[v]` is the image of `v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPermutation(Vec<usize>);

impl VertexPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self, SymmetryError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(SymmetryError::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Pointwise image of a vertex set.
    pub fn lift(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter().map(|&v| self.0[v]).collect()
    }

    /// Pointwise image of a sorted vertex list, sorted.
    pub fn lift_sorted(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&v| self.0[v]).collect();
        out.sort_unstable();
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        Self(inv)
    }

    /// The induced permutation of edge indices, if every edge maps to an edge.
    pub fn edge_action(&self, h: &Hypergraph) -> Option<Vec<usize>> {
        h.edges()
            .iter()
            .map(|e| h.edge_id(&self.lift_sorted(e)))
            .collect()
    }
}

/// An explicit, sorted list of permutations. The identity sorts first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismSet {
    elements: Vec<VertexPermutation>,
}

impl AutomorphismSet {
    pub fn from_elements(mut elements: Vec<VertexPermutation>) -> Self {
        elements.sort();
        elements.dedup();
        Self { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[VertexPermutation] {
        &self.elements
    }

    pub fn contains(&self, p: &VertexPermutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn contains_identity(&self) -> bool {
        self.elements
            .first()
            .is_some_and(VertexPermutation::is_identity)
    }

    /// Full closure check: identity, inverses and all pairwise products.
    pub fn is_closed(&self) -> bool {
        self.contains_identity()
            && self.elements.iter().all(|g| self.contains(&g.inverse()))
            && self
                .elements
                .iter()
                .all(|a| self.elements.iter().all(|b| self.contains(&a.compose(b))))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryLimits {
    pub max_vertices: usize,
    pub max_order: usize,
}

impl Default for SymmetryLimits {
    fn default() -> Self {
        Self {
            max_vertices: 128,
            max_order: 1 << 16,
        }
    }
}

pub fn automorphisms(h: &Hypergraph) -> Result<AutomorphismSet, SymmetryError> {
    automorphisms_with(h, &SymmetryLimits::default())
}

/// All vertex permutations mapping the edge set onto itself.
///
/// Backtracking over vertex images: a vertex may only map to one with the
/// same (degree, two-section degree, incident edge sizes) signature,
/// two-section adjacency to already mapped vertices must be preserved, and
/// each edge is checked as soon as all of its vertices are mapped.
pub fn automorphisms_with(
    h: &Hypergraph,
    limits: &SymmetryLimits,
) -> Result<AutomorphismSet, SymmetryError> {
    let n = h.vertex_count();
    if n > limits.max_vertices {
        return Err(SymmetryError::VertexCapExceeded {
            vertices: n,
            cap: limits.max_vertices,
        });
    }
    let two = h.two_section();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| two.has_edge(a, b)).collect())
        .collect();
    let signature: Vec<(usize, usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut sizes: Vec<usize> = h.star(v).iter().map(|&e| h.edge(e).len()).collect();
            sizes.sort_unstable();
            (h.degree(v), h.degree2(v), sizes)
        })
        .collect();

    // breadth-first order so most vertices have an already-mapped neighbour
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for root in 0..n {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in two.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut completes_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, members) in h.edges().iter().enumerate() {
        let last = members
            .iter()
            .map(|&v| position[v])
            .max()
            .expect("edges are non-empty");
        completes_at[last].push(e);
    }

    let mut search = AutSearch {
        h,
        adj,
        signature,
        order,
        completes_at,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
        cap: limits.max_order,
    };
    search.extend(0)?;
    Ok(AutomorphismSet::from_elements(search.found))
}

struct AutSearch<'h> {
    h: &'h Hypergraph,
    adj: Vec<Vec<bool>>,
    signature: Vec<(usize, usize, Vec<usize>)>,
    order: Vec<usize>,
    completes_at: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<VertexPermutation>,
    cap: usize,
}

impl AutSearch<'_> {
    fn extend(&mut self, pos: usize) -> Result<(), SymmetryError> {
        let n = self.order.len();
        if pos == n {
            if self.found.len() == self.cap {
                return Err(SymmetryError::GroupTooLarge { cap: self.cap });
            }
            self.found.push(VertexPermutation(self.image.clone()));
            return Ok(());
        }
        let v = self.order[pos];
        for w in 0..n {
            if self.used[w] || self.signature[w] != self.signature[v] {
                continue;
            }
            let consistent = self.order[..pos]
                .iter()
                .all(|&u| self.adj[u][v] == self.adj[self.image[u]][w]);
            if !consistent {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            let edges_ok = self.completes_at[pos].iter().all(|&e| {
                let mut lifted: Vec<usize> =
                    self.h.edge(e).iter().map(|&x| self.image[x]).collect();
                lifted.sort_unstable();
                self.h.is_edge(&lifted)
            });
            if edges_ok {
                self.extend(pos + 1)?;
            }
            self.used[w] = false;
            self.image[v] = usize::MAX;
        }
        Ok(())
    }
}

/// The automorphisms in `group` that keep every edge's color.
///
/// # Panics
/// If an element of `group` is not an automorphism of `h`, or if color
/// preservation fails for the inverse of a kept element.
pub fn color_preserving_subgroup(
    group: &AutomorphismSet,
    h: &Hypergraph,
    coloring: &EdgeColoring,
) -> AutomorphismSet {
    let preserves = |g: &VertexPermutation| {
        let action = g.edge_action(h).expect("group elements are automorphisms");
        action
            .iter()
            .enumerate()
            .all(|(e, &img)| coloring.color(img) == coloring.color(e))
    };
    let kept: Vec<VertexPermutation> = group
        .elements()
        .iter()
        .filter(|g| preserves(g))
        .cloned()
        .collect();
    for g in &kept {
        assert!(
            preserves(&g.inverse()),
            "inverse of a color-preserving automorphism must preserve colors"
        );
    }
    AutomorphismSet::from_elements(kept)
}

/// Orbits of a permutation set acting on edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

pub fn orbits(group: &AutomorphismSet, h: &Hypergraph) -> OrbitPartition {
    let m = h.edge_count();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in group.elements() {
        let action = g.edge_action(h).expect("group elements are automorphisms");
        for (e, img) in action.into_iter().enumerate() {
            let (a, b) = (find(&mut parent, e), find(&mut parent, img));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![usize::MAX; m];
    for e in 0..m {
        let root = find(&mut parent, e);
        if block_of[root] == usize::MAX {
            block_of[root] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_of[root]].push(e);
    }
    OrbitPartition { blocks }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideBound {
    pub bound: usize,
    pub order: usize,
    /// Edges fixed setwise by each element, in element order.
    pub fixed_counts: Vec<usize>,
    pub fixed_sum: usize,
}

/// `(Σ_t |edges fixed by t|) / |T|`, the number of edge orbits of `T`.
pub fn burnside_bound(
    group: &AutomorphismSet,
    h: &Hypergraph,
) -> Result<BurnsideBound, SymmetryError> {
    let fixed_counts: Vec<usize> = group
        .elements()
        .iter()
        .map(|g| h.edges().iter().filter(|e| g.lift_sorted(e) == **e).count())
        .collect();
    let fixed_sum = fixed_counts.iter().sum();
    let bound = burnside_average(group.order(), fixed_sum)?;
    Ok(BurnsideBound {
        bound,
        order: group.order(),
        fixed_counts,
        fixed_sum,
    })
}

/// Exact integer average of a fixed-point sum over a group of `order`.
pub fn burnside_average(order: usize, fixed_sum: usize) -> Result<usize, SymmetryError> {
    if order == 0 {
        return Err(SymmetryError::EmptyGroup);
    }
    if !fixed_sum.is_multiple_of(order) {
        return Err(SymmetryError::NonIntegerAverage { fixed_sum, order });
    }
    Ok(fixed_sum / order)
}
