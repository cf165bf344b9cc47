//! JSON rendering of analysis results. Colors are shown as `1..=q`,
//! vertices by label, edges by their label lists, rationals as `"p/q"`.

use std::collections::BTreeSet;

use hyperchrom_core::lab::{oracle_automorphism_count, oracle_chromatic_index, oracle_helly};
use hyperchrom_core::quotient::{
    BoundsReport, CliqueVerdict, CoverCertificate, GammaHypergraph, Inapplicable, PivotView,
    Theorem21Verdict,
};
use hyperchrom_core::report::{Certificate, PivotReport};
use hyperchrom_core::{
    automorphisms, burnside_bound, color_preserving_subgroup, orbits, ConjectureReport,
    EdgeColoring, HellyVerdict, Hypergraph, Inequality, PairAdjacency, Rational,
};
use serde::Serialize;
use serde_json::{json, Value};

pub fn rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn color_name(c: usize) -> usize {
    c + 1
}

fn color_names(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().copied().map(color_name).collect()
}

fn edge_labels(h: &Hypergraph, e: usize) -> Vec<String> {
    h.edge(e).iter().map(|&v| h.label(v).to_string()).collect()
}

#[derive(Debug, Serialize)]
pub struct InequalityJson {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl From<Inequality> for InequalityJson {
    fn from(i: Inequality) -> Self {
        Self {
            lhs: rational(i.lhs),
            rhs: rational(i.rhs),
            holds: i.holds(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MetricsJson {
    pub vertices: usize,
    pub edges: usize,
    pub delta: usize,
    pub delta2: usize,
    pub rank: usize,
    pub antirank: usize,
    pub sandwich: SandwichJson,
}

#[derive(Debug, Serialize)]
pub struct SandwichJson {
    pub lower: usize,
    pub middle: usize,
    pub upper: usize,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct ColoredEdge {
    pub edge: Vec<String>,
    pub color: usize,
}

#[derive(Debug, Serialize)]
pub struct PerColorJson {
    pub c0: usize,
    pub gamma_size: usize,
    pub gamma_classes: Vec<Vec<String>>,
    pub star_hypergraph_delta2: usize,
    pub union: InequalityJson,
    pub star: InequalityJson,
    pub delta: InequalityJson,
    pub theorem2: InequalityJson,
    pub gamma_threshold: InequalityJson,
}

#[derive(Debug, Serialize)]
pub struct ThetaClassJson {
    pub colors: Vec<usize>,
    pub vertices: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct GammaEdgeJson {
    pub classes: Vec<usize>,
    pub colors: Vec<usize>,
    pub multiplicity: usize,
}

#[derive(Debug, Serialize)]
pub struct PivotJson {
    pub pivot: String,
    pub case: &'static str,
    pub missing_colors: Vec<usize>,
    pub theta_classes: Vec<ThetaClassJson>,
    pub per_c0: Vec<PerColorJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_hypergraph: Option<Vec<GammaEdgeJson>>,
    pub helly: Value,
    pub theorem21: Value,
    pub clique_condition: Value,
    pub certificates: Vec<Value>,
}

#[derive(Debug, Serialize)]
pub struct DirectCheckJson {
    pub q: usize,
    pub delta2: usize,
    pub holds: bool,
    pub equality: bool,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub name: String,
    pub metrics: MetricsJson,
    pub q: usize,
    pub coloring: Vec<ColoredEdge>,
    #[serde(flatten)]
    pub primary: PivotJson,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub other_pivots: Vec<PivotJson>,
    pub direct_check: DirectCheckJson,
    pub pair_adjacency: Value,
    pub symmetry: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_check: Option<Value>,
}

impl ReportJson {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }
}

pub fn build(h: &Hypergraph, report: &ConjectureReport, oracle_check: bool) -> ReportJson {
    let m = &report.metrics;
    let coloring = &report.coloring;
    let pivots: Vec<PivotJson> = report
        .pivots
        .iter()
        .map(|p| pivot_json(h, coloring, p))
        .collect();
    let mut pivots = pivots.into_iter();
    let primary = pivots.next().expect("at least one pivot");
    ReportJson {
        name: report.name.clone(),
        metrics: MetricsJson {
            vertices: h.vertex_count(),
            edges: h.edge_count(),
            delta: m.delta,
            delta2: m.delta2,
            rank: m.rank,
            antirank: m.antirank,
            sandwich: SandwichJson {
                lower: report.sandwich.lower,
                middle: report.sandwich.middle,
                upper: report.sandwich.upper,
                holds: report.sandwich.holds,
            },
        },
        q: report.q(),
        coloring: (0..h.edge_count())
            .map(|e| ColoredEdge {
                edge: edge_labels(h, e),
                color: color_name(coloring.color(e)),
            })
            .collect(),
        primary,
        other_pivots: pivots.collect(),
        direct_check: DirectCheckJson {
            q: report.direct.q,
            delta2: report.direct.delta2,
            holds: report.direct.holds,
            equality: report.direct.equality,
        },
        pair_adjacency: match &report.pair_adjacency {
            PairAdjacency::Holds => json!({ "holds": true }),
            PairAdjacency::Violated { kept, merged, .. } => json!({
                "holds": false,
                "kept": color_name(*kept),
                "merged": color_name(*merged),
            }),
        },
        symmetry: symmetry_json(h, coloring),
        oracle_check: oracle_check.then(|| oracle_json(h, report)),
    }
}

fn pivot_json(h: &Hypergraph, coloring: &EdgeColoring, p: &PivotReport) -> PivotJson {
    let view = PivotView::new(h, coloring, p.pivot);
    let theta = view.theta().map(<[_]>::to_vec).unwrap_or_default();
    let class_vertices = |i: usize| -> Vec<String> {
        theta[i]
            .vertices()
            .map(|v| h.label(v).to_string())
            .collect()
    };
    PivotJson {
        pivot: h.label(p.pivot).to_string(),
        case: p.case.tag(),
        missing_colors: color_names(&p.missing),
        theta_classes: theta
            .iter()
            .enumerate()
            .map(|(i, t)| ThetaClassJson {
                colors: color_names(&t.key),
                vertices: class_vertices(i),
            })
            .collect(),
        per_c0: p
            .per_c0
            .iter()
            .map(|b| per_color_json(&view, b, &class_vertices))
            .collect(),
        gamma_hypergraph: p.gamma_hypergraph.as_ref().map(gamma_edges),
        helly: match &p.helly {
            None => json!({ "applicable": false }),
            Some(HellyVerdict::Helly) => json!({ "applicable": true, "holds": true }),
            Some(HellyVerdict::NotHelly { clique, minimal }) => json!({
                "applicable": true,
                "holds": false,
                "witness": clique,
                "minimal_witness": minimal,
            }),
        },
        theorem21: theorem21_json(h, &p.theorem21),
        clique_condition: clique_json(h, &p.clique),
        certificates: p
            .certificates
            .iter()
            .map(|c| certificate_json(h, c))
            .collect(),
    }
}

fn per_color_json(
    view: &PivotView<'_>,
    b: &BoundsReport,
    class_vertices: &dyn Fn(usize) -> Vec<String>,
) -> PerColorJson {
    let members = view.gamma(b.c0).map(|g| g.members).unwrap_or_default();
    PerColorJson {
        c0: color_name(b.c0),
        gamma_size: b.gamma_size,
        gamma_classes: members.into_iter().map(class_vertices).collect(),
        star_hypergraph_delta2: b.star_delta2,
        union: b.union_bound.into(),
        star: b.star_bound.into(),
        delta: b.delta_bound.into(),
        theorem2: b.theorem2.into(),
        gamma_threshold: b.gamma_threshold.into(),
    }
}

fn gamma_edges(hg: &GammaHypergraph) -> Vec<GammaEdgeJson> {
    hg.system
        .edges()
        .iter()
        .zip(&hg.sources)
        .map(|(e, src)| GammaEdgeJson {
            classes: e.clone(),
            colors: src.iter().copied().map(color_name).collect(),
            multiplicity: src.len(),
        })
        .collect()
}

fn inapplicable(why: Inapplicable) -> Value {
    json!({ "verdict": "not_applicable", "reason": why.to_string() })
}

fn cover_json(h: &Hypergraph, c: &CoverCertificate) -> Value {
    json!({
        "hub": h.label(c.hub),
        "missing_count": c.missing_count,
        "hub_color_count": c.hub_color_count,
        "split_identity": c.split_identity,
        "covered": c.covered,
        "two_delta": InequalityJson::from(c.two_delta),
        "conjecture": InequalityJson::from(c.conjecture),
    })
}

fn theorem21_json(h: &Hypergraph, v: &Theorem21Verdict) -> Value {
    match v {
        Theorem21Verdict::NotApplicable(why) => inapplicable(*why),
        Theorem21Verdict::NotHelly { clique, minimal } => {
            json!({ "verdict": "not_helly", "witness": clique, "minimal_witness": minimal })
        }
        Theorem21Verdict::Certified {
            common_class,
            certificate,
        } => json!({
            "verdict": "certified",
            "common_class": common_class,
            "certificate": cover_json(h, certificate),
        }),
        Theorem21Verdict::Refuted {
            common_class,
            certificate,
        } => json!({
            "verdict": "refuted",
            "common_class": common_class,
            "certificate": cover_json(h, certificate),
        }),
    }
}

fn clique_json(h: &Hypergraph, v: &CliqueVerdict) -> Value {
    let edges =
        |f: &[usize]| -> Vec<Vec<String>> { f.iter().map(|&e| edge_labels(h, e)).collect() };
    match v {
        CliqueVerdict::NotApplicable(why) => inapplicable(*why),
        CliqueVerdict::BelowThreshold { family, threshold } => json!({
            "verdict": "not_triggered",
            "family_size": family.len(),
            "threshold": threshold,
            "family": edges(family),
        }),
        CliqueVerdict::Certified {
            family,
            threshold,
            certificate,
        } => json!({
            "verdict": "certified",
            "family_size": family.len(),
            "threshold": threshold,
            "family": edges(family),
            "certificate": cover_json(h, certificate),
        }),
        CliqueVerdict::Refuted {
            family,
            threshold,
            certificate,
        } => json!({
            "verdict": "refuted",
            "family_size": family.len(),
            "threshold": threshold,
            "family": edges(family),
            "certificate": certificate.as_ref().map(|c| cover_json(h, c)),
        }),
    }
}

fn certificate_json(h: &Hypergraph, c: &Certificate) -> Value {
    match c {
        Certificate::GammaThreshold { c0 } => json!({ "kind": "gamma_threshold", "c0": color_name(*c0) }),
        Certificate::Theorem21 { hub } => json!({ "kind": "helly", "hub": h.label(*hub) }),
        Certificate::CliqueCondition { hub } => json!({ "kind": "clique", "hub": h.label(*hub) }),
    }
}

pub fn symmetry_json(h: &Hypergraph, coloring: &EdgeColoring) -> Value {
    let group = match automorphisms(h) {
        Ok(g) => g,
        Err(e) => return json!({ "error": e.to_string() }),
    };
    let t = color_preserving_subgroup(&group, h, coloring);
    let parts = orbits(&t, h);
    let orbit_edges: Vec<Vec<Vec<String>>> = parts
        .blocks
        .iter()
        .map(|b| b.iter().map(|&e| edge_labels(h, e)).collect())
        .collect();
    match burnside_bound(&t, h) {
        Ok(b) => json!({
            "automorphisms": group.order(),
            "color_preserving": t.order(),
            "orbit_count": parts.len(),
            "burnside_bound": b.bound,
            "fixed_sum": b.fixed_sum,
            "q_within_bound": coloring.q() <= b.bound,
            "orbits": orbit_edges,
        }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn oracle_json(h: &Hypergraph, report: &ConjectureReport) -> Value {
    let q = match oracle_chromatic_index(h) {
        Ok(q) => json!({ "oracle": q, "agrees": q == report.q() }),
        Err(e) => json!({ "skipped": e.to_string() }),
    };
    let aut = match (oracle_automorphism_count(h), automorphisms(h)) {
        (Ok(n), Ok(g)) => json!({ "oracle": n, "agrees": n == g.order() }),
        (Err(e), _) => json!({ "skipped": e.to_string() }),
        (_, Err(e)) => json!({ "skipped": e.to_string() }),
    };
    let helly = match report.primary().gamma_hypergraph.as_ref() {
        None => json!({ "skipped": "no gamma hypergraph at this pivot" }),
        Some(hg) => match oracle_helly(hg.system.edges()) {
            Ok(o) => {
                let mine = report
                    .primary()
                    .helly
                    .as_ref()
                    .is_some_and(HellyVerdict::is_helly);
                json!({ "oracle": o, "agrees": o == mine })
            }
            Err(e) => json!({ "skipped": e.to_string() }),
        },
    };
    json!({ "chromatic_index": q, "automorphisms": aut, "helly": helly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperchrom_core::conjecture_report;
    use hyperchrom_core::lab::fano;

    #[test]
    fn rationals_render_as_fractions() {
        assert_eq!(rational(Rational::new(26, 2)), "13/1");
        assert_eq!(rational(Rational::new(3, 2)), "3/2");
    }

    #[test]
    fn fano_report_fields() {
        let h = fano();
        let r = build(&h, &conjecture_report(&h).unwrap(), true);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["q"], 7);
        assert_eq!(v["metrics"]["delta2"], 6);
        assert_eq!(v["direct_check"]["equality"], true);
        assert_eq!(v["case"], "Case2");
        assert_eq!(v["missing_colors"], json!([4, 5, 6, 7]));
        assert_eq!(v["per_c0"][0]["theorem2"]["lhs"], "10/1");
        assert_eq!(v["per_c0"][0]["theorem2"]["rhs"], "13/1");
        assert_eq!(v["helly"]["holds"], false);
        assert_eq!(v["symmetry"]["automorphisms"], 168);
        assert_eq!(v["symmetry"]["burnside_bound"], 7);
        assert_eq!(v["oracle_check"]["chromatic_index"]["agrees"], true);
        assert_eq!(v["oracle_check"]["automorphisms"]["agrees"], true);
        assert_eq!(v["oracle_check"]["helly"]["agrees"], true);
    }
}
