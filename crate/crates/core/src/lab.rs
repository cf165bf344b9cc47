//! Named instances, a seeded random generator for linear hypergraphs and
//! brute-force oracles that share no search code with the main solvers.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabError {
    InvalidConfig(&'static str),
    InfeasibleConfig,
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
}

impl fmt::Display for LabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidConfig(why) => write!(f, "invalid generator config: {why}"),
            Self::InfeasibleConfig => write!(f, "generator could not place a single edge"),
            Self::TooLarge { what, size, limit } => {
                write!(f, "oracle input too large: {size} {what} (limit {limit})")
            }
        }
    }
}

impl core::error::Error for LabError {}

/// The seven-point projective plane. Lines come out in the order
/// 123, 145, 167, 246, 257, 347, 356.
pub fn fano() -> Hypergraph {
    let lines = ["123", "145", "167", "246", "257", "347", "356"];
    let edges: Vec<Vec<usize>> = lines
        .iter()
        .map(|l| l.bytes().map(|b| usize::from(b - b'1')).collect())
        .collect();
    let labels = (1..=7).map(|i| format!("{i}")).collect();
    Hypergraph::with_labels("fano", labels, edges).expect("Fano plane is valid")
}

/// `k` edges of size `s` through vertex 0 and otherwise disjoint.
///
/// # Panics
/// If `k == 0` or `s < 2`.
pub fn flower(k: usize, s: usize) -> Hypergraph {
    assert!(k >= 1 && s >= 2, "flower needs k >= 1 and s >= 2");
    let edges = (0..k)
        .map(|i| {
            let mut e = vec![0];
            e.extend((0..s - 1).map(|j| 1 + i * (s - 1) + j));
            e
        })
        .collect();
    Hypergraph::from_edges(&format!("flower-{k}-{s}"), 1 + k * (s - 1), edges)
        .expect("flower is valid")
}

/// A 3-uniform instance whose colors missing at `pivot` all sit at `hub`.
#[derive(Debug, Clone)]
pub struct HellyPositive {
    pub hypergraph: Hypergraph,
    pub pivot: usize,
    pub hub: usize,
}

/// `k_missing + 1` triples through the hub `u`; the pivot `v` is a tip of
/// the first one. The triples pairwise intersect, so every minimal coloring
/// uses `k_missing + 1` distinct colors and exactly `k_missing` of them
/// miss `v`, all of them at `u`.
///
/// # Panics
/// If `k_missing < 2`.
pub fn helly_positive(k_missing: usize) -> HellyPositive {
    assert!(
        k_missing >= 2,
        "helly_positive needs at least two missing colors"
    );
    let mut labels: Vec<String> = vec!["u".into(), "v".into(), "w".into()];
    let mut edges = vec![vec![0, 1, 2]];
    for i in 1..=k_missing {
        let a = labels.len();
        labels.push(format!("a{i}"));
        labels.push(format!("b{i}"));
        edges.push(vec![0, a, a + 1]);
    }
    let hypergraph = Hypergraph::with_labels(&format!("helly-positive-{k_missing}"), labels, edges)
        .expect("construction is valid");
    HellyPositive {
        hypergraph,
        pivot: 1,
        hub: 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub m: usize,
    pub size_min: usize,
    pub size_max: usize,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<(), LabError> {
        if self.size_min < 2 {
            return Err(LabError::InvalidConfig("size_min must be at least 2"));
        }
        if self.size_min > self.size_max {
            return Err(LabError::InvalidConfig("size_min exceeds size_max"));
        }
        if self.size_max > self.n {
            return Err(LabError::InvalidConfig("size_max exceeds n"));
        }
        if self.m == 0 {
            return Err(LabError::InvalidConfig("m must be at least 1"));
        }
        Ok(())
    }
}

/// Rejection-samples up to `m` edges under the linearity constraint with a
/// budget of `n·m·10` draws. Vertices left uncovered are dropped; the
/// survivors keep their original indices as labels.
pub fn random_linear(cfg: &GeneratorConfig) -> Result<Hypergraph, LabError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let budget = cfg.n * cfg.m * 10;
    for _ in 0..budget {
        if edges.len() == cfg.m {
            break;
        }
        let size = rng.random_range(cfg.size_min..=cfg.size_max);
        let mut e = sample(&mut rng, cfg.n, size).into_vec();
        e.sort_unstable();
        let linear = edges
            .iter()
            .all(|f| f.iter().filter(|x| e.binary_search(x).is_ok()).count() <= 1);
        if linear {
            edges.push(e);
        }
    }
    if edges.is_empty() {
        return Err(LabError::InfeasibleConfig);
    }
    let used: BTreeSet<usize> = edges.iter().flatten().copied().collect();
    let index: Vec<usize> = used.iter().copied().collect();
    let labels = index.iter().map(|v| format!("{v}")).collect();
    let edges = edges
        .into_iter()
        .map(|e| {
            e.iter()
                .map(|v| index.binary_search(v).expect("covered"))
                .collect()
        })
        .collect();
    let name = format!(
        "random-{}-{}-{}-{}-{}",
        cfg.n, cfg.m, cfg.size_min, cfg.size_max, cfg.seed
    );
    Ok(Hypergraph::with_labels(&name, labels, edges).expect("sampled edges are linear"))
}

pub const ORACLE_MAX_EDGES: usize = 10;
pub const ORACLE_MAX_VERTICES: usize = 8;
pub const ORACLE_MAX_FAMILY: usize = 12;

fn share_vertex(a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|x| b.contains(x))
}

/// Chromatic index by enumerating every partition of the edge set
/// (restricted-growth color vectors) and keeping the proper ones.
pub fn oracle_chromatic_index(h: &Hypergraph) -> Result<usize, LabError> {
    let m = h.edge_count();
    if m > ORACLE_MAX_EDGES {
        return Err(LabError::TooLarge {
            what: "edges",
            size: m,
            limit: ORACLE_MAX_EDGES,
        });
    }
    let edges = h.edges();
    let mut colors = vec![0usize; m];
    let mut best = m;
    loop {
        let proper = (0..m).all(|a| {
            (a + 1..m).all(|b| colors[a] != colors[b] || !share_vertex(&edges[a], &edges[b]))
        });
        if proper {
            let used = colors.iter().max().map_or(0, |c| c + 1);
            best = best.min(used);
        }
        // next restricted-growth string: colors[i] <= 1 + max(colors[..i])
        let mut i = m;
        loop {
            if i <= 1 {
                return Ok(best);
            }
            i -= 1;
            let cap = colors[..i].iter().max().map_or(0, |c| c + 1);
            if colors[i] < cap {
                colors[i] += 1;
                for c in &mut colors[i + 1..] {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// Order of the automorphism group by testing all `n!` permutations.
pub fn oracle_automorphism_count(h: &Hypergraph) -> Result<usize, LabError> {
    let n = h.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(LabError::TooLarge {
            what: "vertices",
            size: n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    let edge_set: BTreeSet<Vec<usize>> = h.edges().iter().cloned().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        let preserved = h.edges().iter().all(|e| {
            let mut image: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
            image.sort_unstable();
            edge_set.contains(&image)
        });
        if preserved {
            count += 1;
        }
        // lexicographic next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return Ok(count);
        };
        let j = (i..n)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Helly property checked over every subfamily of size at least two.
pub fn oracle_helly(family: &[Vec<usize>]) -> Result<bool, LabError> {
    let m = family.len();
    if m > ORACLE_MAX_FAMILY {
        return Err(LabError::TooLarge {
            what: "sets",
            size: m,
            limit: ORACLE_MAX_FAMILY,
        });
    }
    for mask in 0u32..(1 << m) {
        if mask.count_ones() < 2 {
            continue;
        }
        let members: Vec<&Vec<usize>> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &family[i])
            .collect();
        let pairwise = members
            .iter()
            .enumerate()
            .all(|(i, a)| members[i + 1..].iter().all(|b| share_vertex(a, b)));
        if pairwise
            && !members[0]
                .iter()
                .any(|x| members.iter().all(|s| s.contains(x)))
        {
            return Ok(false);
        }
    }
    Ok(true)
}
