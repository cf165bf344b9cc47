//! End-to-end analysis of one hypergraph: exact coloring, pivot quotients,
//! per-color bounds, sufficient conditions and the direct check.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{
    chromatic_index_with, pair_adjacency_check, EdgeColoring, PairAdjacency, SolverOptions,
};
use crate::hypergraph::{Hypergraph, Metrics, Sandwich};
use crate::quotient::{
    pick_pivot, pivot_candidates, BoundsReport, CliqueVerdict, GammaHypergraph, HellyVerdict,
    PivotCase, PivotView, QuotientError, Theorem21Verdict,
};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub seed: Option<u64>,
    pub pivot: Option<usize>,
    pub all_pivots: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportError {
    InvalidPivot { pivot: usize, vertices: usize },
    Quotient(QuotientError),
}

impl fmt::Display for ReportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidPivot { pivot, vertices } => {
                write!(f, "pivot {pivot} is out of range for {vertices} vertices")
            }
            Self::Quotient(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ReportError {}

impl From<QuotientError> for ReportError {
    fn from(e: QuotientError) -> Self {
        Self::Quotient(e)
    }
}

/// `q <= Δ₂ + 1` checked on the computed coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectCheck {
    pub q: usize,
    pub delta2: usize,
    pub holds: bool,
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `|Γ(c0)| + 1 <= ar - 1` together with the evaluated bound for `c0`.
    GammaThreshold {
        c0: usize,
    },
    Theorem21 {
        hub: usize,
    },
    CliqueCondition {
        hub: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotReport {
    pub pivot: usize,
    pub case: PivotCase,
    pub pivot_colors: BTreeSet<usize>,
    pub missing: BTreeSet<usize>,
    pub theta_count: usize,
    pub per_c0: Vec<BoundsReport>,
    pub gamma_hypergraph: Option<GammaHypergraph>,
    pub helly: Option<HellyVerdict>,
    pub theorem21: Theorem21Verdict,
    pub clique: CliqueVerdict,
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub name: String,
    pub metrics: Metrics,
    pub sandwich: Sandwich,
    pub coloring: EdgeColoring,
    pub pivots: Vec<PivotReport>,
    pub direct: DirectCheck,
    pub pair_adjacency: PairAdjacency,
}

impl ConjectureReport {
    pub fn q(&self) -> usize {
        self.coloring.q()
    }

    /// The first analyzed pivot.
    pub fn primary(&self) -> &PivotReport {
        &self.pivots[0]
    }
}

pub fn conjecture_report(h: &Hypergraph) -> Result<ConjectureReport, ReportError> {
    conjecture_report_with(h, &ReportOptions::default())
}

pub fn conjecture_report_with(
    h: &Hypergraph,
    options: &ReportOptions,
) -> Result<ConjectureReport, ReportError> {
    let n = h.vertex_count();
    let pivots: Vec<usize> = match (options.pivot, options.all_pivots) {
        (Some(p), _) if p >= n => {
            return Err(ReportError::InvalidPivot {
                pivot: p,
                vertices: n,
            })
        }
        (Some(p), false) => alloc::vec![p],
        (Some(p), true) => {
            let mut all = pivot_candidates(h);
            all.retain(|&v| v != p);
            all.insert(0, p);
            all
        }
        (None, true) => pivot_candidates(h),
        (None, false) => alloc::vec![pick_pivot(h)],
    };

    let coloring = chromatic_index_with(h, &SolverOptions { seed: options.seed });
    let metrics = h.metrics();
    let q = coloring.q();
    let direct = DirectCheck {
        q,
        delta2: metrics.delta2,
        holds: q <= metrics.delta2 + 1,
        equality: q == metrics.delta2 + 1,
    };
    let pivots = pivots
        .into_iter()
        .map(|v| pivot_report(&PivotView::new(h, &coloring, v)))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(ConjectureReport {
        name: h.name().into(),
        sandwich: h.check_sandwich(),
        pair_adjacency: pair_adjacency_check(h, &coloring),
        metrics,
        coloring,
        pivots,
        direct,
    })
}

fn pivot_report(view: &PivotView<'_>) -> Result<PivotReport, QuotientError> {
    let case = view.case();
    let multi = matches!(case, PivotCase::MultiMissing(_));
    let mut per_c0 = Vec::new();
    let mut gamma_hypergraph = None;
    let mut helly = None;
    if multi {
        for &c0 in view.missing() {
            per_c0.push(view.bounds(c0)?);
        }
        let hg = view.gamma_hypergraph()?;
        helly = Some(crate::quotient::helly_check(hg.system.edges()));
        gamma_hypergraph = Some(hg);
    }
    let theorem21 = view.theorem21()?;
    let clique = view.clique_condition();

    let mut certificates = Vec::new();
    for b in &per_c0 {
        if b.gamma_threshold.holds() && b.theorem2.holds() {
            certificates.push(Certificate::GammaThreshold { c0: b.c0 });
        }
    }
    if let Theorem21Verdict::Certified { certificate, .. } = &theorem21 {
        certificates.push(Certificate::Theorem21 {
            hub: certificate.hub,
        });
    }
    if let CliqueVerdict::Certified { certificate, .. } = &clique {
        certificates.push(Certificate::CliqueCondition {
            hub: certificate.hub,
        });
    }

    Ok(PivotReport {
        pivot: view.pivot(),
        pivot_colors: view.pivot_colors().clone(),
        missing: view.missing().clone(),
        theta_count: view.theta().map_or(0, <[_]>::len),
        case,
        per_c0,
        gamma_hypergraph,
        helly,
        theorem21,
        clique,
        certificates,
    })
}
