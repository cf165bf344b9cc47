//! Quotients of the vertex set around a pivot vertex and the inequalities
//! and sufficient conditions built on them.
//!
//! Fix a minimal coloring and a pivot `v` of maximum two-section degree.
//! Vertices with identical stars form the `~` classes. Classes whose color
//! set meets the colors missing at `v` form `Ω`, and `θ` groups those by
//! color set. For a missing color `c0`, `Γ(c0)` holds the θ-classes whose
//! key contains `c0` and some other missing color.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::cliques::maximal_cliques;
use crate::coloring::{induced_vertex_colors, EdgeColoring, VertexColorSets};
use crate::hypergraph::{intersect_sorted, intersects_sorted, Hypergraph, SetSystem};

pub type Rational = Ratio<i64>;

/// Why a construction or condition does not apply at this pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inapplicable {
    AllColorsAtPivot,
    SingleMissingColor,
    AntirankBelowThree,
    NotUniform,
    UniformityBelowThree,
    NoQualifyingFamily,
}

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AllColorsAtPivot => "every color appears at the pivot",
            Self::SingleMissingColor => "only one color is missing at the pivot",
            Self::AntirankBelowThree => "antirank is below 3",
            Self::NotUniform => "hypergraph is not uniform",
            Self::UniformityBelowThree => "edge size is below 3",
            Self::NoQualifyingFamily => {
                "no pairwise-intersecting family carries exactly the missing colors"
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    NotApplicable(Inapplicable),
    ColorNotMissing {
        color: usize,
    },
    SameColor {
        color: usize,
    },
    /// No edge colored `c0` meets an edge colored `ci`; the coloring cannot
    /// be minimal.
    NonMinimalColoring {
        c0: usize,
        ci: usize,
    },
    AntirankDegenerate,
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotApplicable(why) => write!(f, "not applicable: {why}"),
            Self::ColorNotMissing { color } => {
                write!(f, "color {color} appears at the pivot")
            }
            Self::SameColor { color } => write!(f, "colors must differ (both are {color})"),
            Self::NonMinimalColoring { c0, ci } => write!(
                f,
                "no edge of color {c0} meets an edge of color {ci}; the coloring is not minimal"
            ),
            Self::AntirankDegenerate => write!(f, "antirank 1 makes the bound undefined"),
        }
    }
}

impl core::error::Error for QuotientError {}

/// A class of vertices sharing the same star.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimClass {
    pub members: Vec<usize>,
    pub star: Vec<usize>,
    pub colors: BTreeSet<usize>,
}

/// Ω-classes sharing one color set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaClass {
    pub key: BTreeSet<usize>,
    pub classes: Vec<SimClass>,
}

impl ThetaClass {
    /// Smallest vertex in the class.
    pub fn representative(&self) -> usize {
        self.classes[0].members[0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().flat_map(|c| c.members.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PivotCase {
    /// Every color appears at the pivot.
    Covered,
    SingleMissing(usize),
    MultiMissing(BTreeSet<usize>),
}

impl PivotCase {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Covered => "Case1",
            Self::SingleMissing(_) => "SingleMissing",
            Self::MultiMissing(_) => "Case2",
        }
    }
}

/// `Γ(c0)`: indices into the θ-class list plus their keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    pub c0: usize,
    pub members: Vec<usize>,
    pub keys: Vec<BTreeSet<usize>>,
}

impl GammaSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `lhs <= rhs` in exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inequality {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Inequality {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        Self { lhs, rhs }
    }

    pub fn integers(lhs: usize, rhs: usize) -> Self {
        Self::new(int(lhs), int(rhs))
    }

    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

/// The bound chain for one missing color `c0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub c0: usize,
    pub gamma_size: usize,
    pub pivot_colors: usize,
    pub union_colors: BTreeSet<usize>,
    pub star_delta2: usize,
    pub star_rank: usize,
    pub star_degree_c0: usize,
    /// `q <= |C*(v)| + |∪ keys|`
    pub union_bound: Inequality,
    /// `q <= |C*(v)| + Δ₂(H*) + 1`
    pub star_bound: Inequality,
    /// `q <= |C*(v)| + (Δ - 1)·|Γ| + 1`
    pub delta_bound: Inequality,
    /// `q + |Γ| <= (|Γ| + 1)/(ar - 1)·Δ₂ + 1`
    pub theorem2: Inequality,
    /// `|Γ| + 1 <= ar - 1`; when it holds, `q <= Δ₂ + 1` follows.
    pub gamma_threshold: Inequality,
}

/// Hypergraph on θ-class indices whose edges are the distinct Γ sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaHypergraph {
    pub system: SetSystem,
    /// Missing colors whose Γ set produced each edge; more than one entry
    /// means identical Γ sets were merged.
    pub sources: Vec<Vec<usize>>,
}

/// Result of the Helly test on a set family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HellyVerdict {
    Helly,
    /// `clique` is a maximal pairwise-intersecting subfamily with empty
    /// common intersection; `minimal` is an inclusion-minimal subfamily of
    /// it that still has empty intersection. Both are indices into the family.
    NotHelly {
        clique: Vec<usize>,
        minimal: Vec<usize>,
    },
}

impl HellyVerdict {
    pub fn is_helly(&self) -> bool {
        matches!(self, Self::Helly)
    }
}

/// Evidence that `q <= Δ₂ + 1` via a vertex `hub` whose colors cover
/// every color missing at the pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    pub hub: usize,
    pub missing_count: usize,
    pub hub_color_count: usize,
    pub q: usize,
    pub delta: usize,
    pub delta2: usize,
    /// `q = |C*(v)| + |missing|`
    pub split_identity: bool,
    /// `|missing| <= |C*(hub)| <= Δ`
    pub covered: bool,
    /// `q <= 2Δ`
    pub two_delta: Inequality,
    /// `q <= Δ₂ + 1`
    pub conjecture: Inequality,
}

impl CoverCertificate {
    pub fn sound(&self) -> bool {
        self.split_identity && self.covered && self.two_delta.holds() && self.conjecture.holds()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theorem21Verdict {
    NotApplicable(Inapplicable),
    NotHelly {
        clique: Vec<usize>,
        minimal: Vec<usize>,
    },
    Certified {
        common_class: usize,
        certificate: CoverCertificate,
    },
    /// Helly held but the derived chain failed.
    Refuted {
        common_class: usize,
        certificate: CoverCertificate,
    },
}

impl Theorem21Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Self::Certified { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueVerdict {
    NotApplicable(Inapplicable),
    BelowThreshold {
        family: Vec<usize>,
        threshold: usize,
    },
    Certified {
        family: Vec<usize>,
        threshold: usize,
        certificate: CoverCertificate,
    },
    /// The family exceeds the threshold yet has no common vertex, or the
    /// derived chain failed.
    Refuted {
        family: Vec<usize>,
        threshold: usize,
        certificate: Option<CoverCertificate>,
    },
}

impl CliqueVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Self::Certified { .. })
    }
}

/// Vertices of maximum two-section degree, in index order.
pub fn pivot_candidates(h: &Hypergraph) -> Vec<usize> {
    let best = (0..h.vertex_count())
        .map(|v| h.degree2(v))
        .max()
        .unwrap_or(0);
    (0..h.vertex_count())
        .filter(|&v| h.degree2(v) == best)
        .collect()
}

/// Smallest-index vertex of maximum two-section degree.
pub fn pick_pivot(h: &Hypergraph) -> usize {
    pivot_candidates(h)[0]
}

pub fn sim_partition(h: &Hypergraph, coloring: &EdgeColoring) -> Vec<SimClass> {
    let mut by_star: BTreeMap<&[usize], usize> = BTreeMap::new();
    let mut classes: Vec<SimClass> = Vec::new();
    for v in 0..h.vertex_count() {
        let star = h.star(v);
        match by_star.get(star) {
            Some(&i) => classes[i].members.push(v),
            None => {
                by_star.insert(star, classes.len());
                classes.push(SimClass {
                    members: vec![v],
                    star: star.to_vec(),
                    colors: star.iter().map(|&e| coloring.color(e)).collect(),
                });
            }
        }
    }
    classes
}

/// All quotient structure for one (hypergraph, coloring, pivot) triple.
#[derive(Debug, Clone)]
pub struct PivotView<'a> {
    h: &'a Hypergraph,
    coloring: &'a EdgeColoring,
    pivot: usize,
    vertex_colors: VertexColorSets,
    sim: Vec<SimClass>,
    missing: BTreeSet<usize>,
    theta: Vec<ThetaClass>,
}

impl<'a> PivotView<'a> {
    pub fn new(h: &'a Hypergraph, coloring: &'a EdgeColoring, pivot: usize) -> Self {
        let vertex_colors = induced_vertex_colors(h, coloring);
        let sim = sim_partition(h, coloring);
        let at_pivot = vertex_colors.get(pivot);
        let missing: BTreeSet<usize> = (0..coloring.q())
            .filter(|c| !at_pivot.contains(c))
            .collect();

        let mut theta: Vec<ThetaClass> = Vec::new();
        for class in &sim {
            if class.colors.is_disjoint(&missing) {
                continue;
            }
            match theta.iter_mut().find(|t| t.key == class.colors) {
                Some(t) => t.classes.push(class.clone()),
                None => theta.push(ThetaClass {
                    key: class.colors.clone(),
                    classes: vec![class.clone()],
                }),
            }
        }
        Self {
            h,
            coloring,
            pivot,
            vertex_colors,
            sim,
            missing,
            theta,
        }
    }

    /// View at the default pivot.
    pub fn at_default_pivot(h: &'a Hypergraph, coloring: &'a EdgeColoring) -> Self {
        Self::new(h, coloring, pick_pivot(h))
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        self.h
    }

    pub fn coloring(&self) -> &EdgeColoring {
        self.coloring
    }

    pub fn vertex_colors(&self) -> &VertexColorSets {
        &self.vertex_colors
    }

    pub fn pivot_colors(&self) -> &BTreeSet<usize> {
        self.vertex_colors.get(self.pivot)
    }

    pub fn sim_classes(&self) -> &[SimClass] {
        &self.sim
    }

    pub fn missing(&self) -> &BTreeSet<usize> {
        &self.missing
    }

    pub fn case(&self) -> PivotCase {
        match self.missing.len() {
            0 => PivotCase::Covered,
            1 => PivotCase::SingleMissing(*self.missing.first().expect("one element")),
            _ => PivotCase::MultiMissing(self.missing.clone()),
        }
    }

    /// `Ω/θ`, ordered by smallest vertex.
    pub fn theta(&self) -> Result<&[ThetaClass], QuotientError> {
        if self.missing.is_empty() {
            return Err(QuotientError::NotApplicable(Inapplicable::AllColorsAtPivot));
        }
        Ok(&self.theta)
    }

    fn require_multi(&self) -> Result<(), QuotientError> {
        match self.missing.len() {
            0 => Err(QuotientError::NotApplicable(Inapplicable::AllColorsAtPivot)),
            1 => Err(QuotientError::NotApplicable(
                Inapplicable::SingleMissingColor,
            )),
            _ => Ok(()),
        }
    }

    /// A θ-class whose key holds both missing colors `c0` and `ci`.
    pub fn pair_witness(&self, c0: usize, ci: usize) -> Result<usize, QuotientError> {
        for c in [c0, ci] {
            if !self.missing.contains(&c) {
                return Err(QuotientError::ColorNotMissing { color: c });
            }
        }
        if c0 == ci {
            return Err(QuotientError::SameColor { color: c0 });
        }
        self.theta
            .iter()
            .position(|t| t.key.contains(&c0) && t.key.contains(&ci))
            .ok_or(QuotientError::NonMinimalColoring { c0, ci })
    }

    pub fn gamma(&self, c0: usize) -> Result<GammaSet, QuotientError> {
        self.require_multi()?;
        if !self.missing.contains(&c0) {
            return Err(QuotientError::ColorNotMissing { color: c0 });
        }
        let members: Vec<usize> = (0..self.theta.len())
            .filter(|&i| {
                let key = &self.theta[i].key;
                key.contains(&c0) && key.iter().any(|c| *c != c0 && self.missing.contains(c))
            })
            .collect();
        // minimality puts a witness for every other missing color into Γ(c0)
        for &ci in self.missing.iter().filter(|&&c| c != c0) {
            if !members.iter().any(|&i| self.theta[i].key.contains(&ci)) {
                return Err(QuotientError::NonMinimalColoring { c0, ci });
            }
        }
        let keys = members.iter().map(|&i| self.theta[i].key.clone()).collect();
        Ok(GammaSet { c0, members, keys })
    }

    pub fn bounds(&self, c0: usize) -> Result<BoundsReport, QuotientError> {
        let gamma = self.gamma(c0)?;
        let hstar = star_color_hypergraph(&gamma);
        let q = self.coloring.q();
        let pivot_colors = self.pivot_colors().len();
        let delta = (0..self.h.vertex_count())
            .map(|v| self.h.degree(v))
            .max()
            .unwrap_or(0);
        let delta2 = (0..self.h.vertex_count())
            .map(|v| self.h.degree2(v))
            .max()
            .unwrap_or(0);
        let ar = self.h.antirank();
        let g = gamma.len();
        let union_colors: BTreeSet<usize> = gamma.keys.iter().flatten().copied().collect();
        let star_delta2 = hstar.max_two_section_degree();

        Ok(BoundsReport {
            c0,
            gamma_size: g,
            pivot_colors,
            star_delta2,
            star_rank: hstar.rank(),
            star_degree_c0: hstar.degree(c0),
            union_bound: Inequality::integers(q, pivot_colors + union_colors.len()),
            star_bound: Inequality::integers(q, pivot_colors + star_delta2 + 1),
            delta_bound: Inequality::integers(q, pivot_colors + (delta - 1) * g + 1),
            theorem2: theorem2_evaluate(q, g, ar, delta2)?,
            gamma_threshold: Inequality::integers(g + 1, ar - 1),
            union_colors,
        })
    }

    pub fn gamma_hypergraph(&self) -> Result<GammaHypergraph, QuotientError> {
        self.require_multi()?;
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut sources: Vec<Vec<usize>> = Vec::new();
        for &c in &self.missing {
            let members = self.gamma(c)?.members;
            match edges.iter().position(|e| *e == members) {
                Some(i) => sources[i].push(c),
                None => {
                    edges.push(members);
                    sources.push(vec![c]);
                }
            }
        }
        Ok(GammaHypergraph {
            system: SetSystem::new(edges),
            sources,
        })
    }

    fn cover_certificate(&self, hub: usize) -> CoverCertificate {
        let q = self.coloring.q();
        let delta = (0..self.h.vertex_count())
            .map(|v| self.h.degree(v))
            .max()
            .unwrap_or(0);
        let delta2 = (0..self.h.vertex_count())
            .map(|v| self.h.degree2(v))
            .max()
            .unwrap_or(0);
        let hub_colors = self.vertex_colors.get(hub);
        CoverCertificate {
            hub,
            missing_count: self.missing.len(),
            hub_color_count: hub_colors.len(),
            q,
            delta,
            delta2,
            split_identity: q == self.pivot_colors().len() + self.missing.len(),
            covered: self.missing.is_subset(hub_colors) && hub_colors.len() <= delta,
            two_delta: Inequality::integers(q, 2 * delta),
            conjecture: Inequality::integers(q, delta2 + 1),
        }
    }

    /// Helly condition on the Γ hypergraph (requires antirank >= 3).
    pub fn theorem21(&self) -> Result<Theorem21Verdict, QuotientError> {
        if self.h.antirank() < 3 {
            return Ok(Theorem21Verdict::NotApplicable(
                Inapplicable::AntirankBelowThree,
            ));
        }
        let hg = match self.gamma_hypergraph() {
            Ok(hg) => hg,
            Err(QuotientError::NotApplicable(why)) => {
                return Ok(Theorem21Verdict::NotApplicable(why))
            }
            Err(e) => return Err(e),
        };
        let family = hg.system.edges();
        match helly_check(family) {
            HellyVerdict::NotHelly { clique, minimal } => {
                Ok(Theorem21Verdict::NotHelly { clique, minimal })
            }
            HellyVerdict::Helly => {
                // the Γ sets pairwise intersect, so Helly yields a common θ-class
                let common = family
                    .iter()
                    .skip(1)
                    .fold(family[0].clone(), |acc, e| intersect_sorted(&acc, e));
                let common_class = *common
                    .first()
                    .expect("pairwise-intersecting Helly family has a common point");
                let certificate = self.cover_certificate(self.theta[common_class].representative());
                Ok(if certificate.sound() {
                    Theorem21Verdict::Certified {
                        common_class,
                        certificate,
                    }
                } else {
                    Theorem21Verdict::Refuted {
                        common_class,
                        certificate,
                    }
                })
            }
        }
    }

    /// Large pairwise-intersecting family carrying exactly the missing
    /// colors, in a k-uniform hypergraph with k >= 3.
    pub fn clique_condition(&self) -> CliqueVerdict {
        let k = match self.h.uniformity() {
            None => return CliqueVerdict::NotApplicable(Inapplicable::NotUniform),
            Some(k) if k < 3 => {
                return CliqueVerdict::NotApplicable(Inapplicable::UniformityBelowThree)
            }
            Some(k) => k,
        };
        if let Err(QuotientError::NotApplicable(why)) = self.require_multi() {
            return CliqueVerdict::NotApplicable(why);
        }
        let candidates: Vec<usize> = (0..self.h.edge_count())
            .filter(|&e| self.missing.contains(&self.coloring.color(e)))
            .collect();
        let cliques = maximal_cliques(candidates.len(), |a, b| {
            self.h.edges_intersect(candidates[a], candidates[b])
        });
        let best = cliques
            .into_iter()
            .map(|c| c.into_iter().map(|i| candidates[i]).collect::<Vec<usize>>())
            .filter(|f| {
                let colors: BTreeSet<usize> = f.iter().map(|&e| self.coloring.color(e)).collect();
                colors == self.missing
            })
            .max_by_key(|f| (f.len(), core::cmp::Reverse(f.clone())));
        let Some(family) = best else {
            return CliqueVerdict::NotApplicable(Inapplicable::NoQualifyingFamily);
        };
        let threshold = k * k - k + 1;
        if family.len() <= threshold {
            return CliqueVerdict::BelowThreshold { family, threshold };
        }
        let common = family
            .iter()
            .skip(1)
            .fold(self.h.edge(family[0]).to_vec(), |acc, &e| {
                intersect_sorted(&acc, self.h.edge(e))
            });
        match common.first() {
            None => CliqueVerdict::Refuted {
                family,
                threshold,
                certificate: None,
            },
            Some(&hub) => {
                let certificate = self.cover_certificate(hub);
                if certificate.sound() {
                    CliqueVerdict::Certified {
                        family,
                        threshold,
                        certificate,
                    }
                } else {
                    CliqueVerdict::Refuted {
                        family,
                        threshold,
                        certificate: Some(certificate),
                    }
                }
            }
        }
    }
}

pub fn classify_case(h: &Hypergraph, coloring: &EdgeColoring, v: usize) -> PivotCase {
    PivotView::new(h, coloring, v).case()
}

pub fn omega_theta(
    h: &Hypergraph,
    coloring: &EdgeColoring,
    v: usize,
) -> Result<Vec<ThetaClass>, QuotientError> {
    PivotView::new(h, coloring, v)
        .theta()
        .map(<[ThetaClass]>::to_vec)
}

pub fn gamma(
    h: &Hypergraph,
    coloring: &EdgeColoring,
    v: usize,
    c0: usize,
) -> Result<GammaSet, QuotientError> {
    PivotView::new(h, coloring, v).gamma(c0)
}

pub fn pair_witness(
    h: &Hypergraph,
    coloring: &EdgeColoring,
    v: usize,
    c0: usize,
    ci: usize,
) -> Result<ThetaClass, QuotientError> {
    let view = PivotView::new(h, coloring, v);
    let i = view.pair_witness(c0, ci)?;
    Ok(view.theta[i].clone())
}

/// Hypergraph on colors whose edges are the keys of `Γ(c0)`.
pub fn star_color_hypergraph(gamma: &GammaSet) -> SetSystem {
    SetSystem::new(
        gamma
            .keys
            .iter()
            .map(|k| k.iter().copied().collect())
            .collect(),
    )
}

pub fn bounds_report(
    h: &Hypergraph,
    coloring: &EdgeColoring,
    v: usize,
    c0: usize,
) -> Result<BoundsReport, QuotientError> {
    PivotView::new(h, coloring, v).bounds(c0)
}

pub fn gamma_hypergraph(
    h: &Hypergraph,
    coloring: &EdgeColoring,
    v: usize,
) -> Result<GammaHypergraph, QuotientError> {
    PivotView::new(h, coloring, v).gamma_hypergraph()
}

pub fn theorem21_check(
    h: &Hypergraph,
    coloring: &EdgeColoring,
) -> Result<Theorem21Verdict, QuotientError> {
    PivotView::at_default_pivot(h, coloring).theorem21()
}

pub fn clique_condition_check(h: &Hypergraph, coloring: &EdgeColoring, v: usize) -> CliqueVerdict {
    PivotView::new(h, coloring, v).clique_condition()
}

/// `q + |Γ| <= (|Γ| + 1)/(ar - 1)·Δ₂ + 1`, evaluated exactly.
pub fn theorem2_evaluate(
    q: usize,
    gamma_size: usize,
    antirank: usize,
    delta2: usize,
) -> Result<Inequality, QuotientError> {
    if antirank < 2 {
        return Err(QuotientError::AntirankDegenerate);
    }
    let rhs = Rational::new((gamma_size + 1) as i64, (antirank - 1) as i64) * int(delta2) + int(1);
    Ok(Inequality::new(int(q + gamma_size), rhs))
}

/// Helly test via maximal cliques of the intersection relation: the family
/// is Helly iff every maximal pairwise-intersecting subfamily has a common
/// point. Empty sets never take part in an intersecting subfamily.
pub fn helly_check(family: &[Vec<usize>]) -> HellyVerdict {
    let live: Vec<usize> = (0..family.len())
        .filter(|&i| !family[i].is_empty())
        .collect();
    let cliques = maximal_cliques(live.len(), |a, b| {
        intersects_sorted(&family[live[a]], &family[live[b]])
    });
    let common = |members: &[usize]| {
        members
            .iter()
            .skip(1)
            .fold(family[members[0]].clone(), |acc, &i| {
                intersect_sorted(&acc, &family[i])
            })
    };
    for clique in cliques {
        let clique: Vec<usize> = clique.into_iter().map(|i| live[i]).collect();
        if common(&clique).is_empty() {
            let mut minimal = clique.clone();
            let mut i = 0;
            while i < minimal.len() {
                let mut trial = minimal.clone();
                trial.remove(i);
                if trial.len() >= 2 && common(&trial).is_empty() {
                    minimal = trial;
                } else {
                    i += 1;
                }
            }
            return HellyVerdict::NotHelly { clique, minimal };
        }
    }
    HellyVerdict::Helly
}
