//! One PASS/FAIL line per acceptance criterion. All comparisons are exact
//! (integer or rational equality, zero tolerance); runtime limits are
//! wall-clock and pinned below.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperchrom::commands::{analyze_hypergraph, AnalyzeOptions};
use hyperchrom::document::InstanceDocument;
use hyperchrom_core::lab::{
    fano, helly_positive, oracle_automorphism_count, oracle_chromatic_index, oracle_helly,
    random_linear, GeneratorConfig,
};
use hyperchrom_core::quotient::{CliqueVerdict, PivotCase, PivotView, Theorem21Verdict};
use hyperchrom_core::{
    automorphisms, burnside_average, burnside_bound, chromatic_index, chromatic_index_with,
    color_preserving_subgroup, conjecture_report, helly_check, orbits, pair_adjacency_check,
    theorem2_evaluate, HellyVerdict, Hypergraph, Inequality, Rational, SolverOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FANO_LIMIT: Duration = Duration::from_secs(5);
const ORACLE_SUITE_LIMIT: Duration = Duration::from_secs(120);
const ORACLE_SEEDS: u64 = 500;
const THEOREM_SEEDS: u64 = 1000;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

/// n ≤ 10, at most 8 edges.
fn oracle_instance(seed: u64) -> Hypergraph {
    let n = 3 + (seed % 8) as usize;
    let size_max = (2 + (seed / 8 % 3) as usize).min(n);
    let cfg = GeneratorConfig {
        n,
        m: 1 + (seed / 24 % 8) as usize,
        size_min: 2,
        size_max,
        seed,
    };
    random_linear(&cfg).expect("valid config")
}

fn theorem_instance(seed: u64) -> Hypergraph {
    let n = 5 + (seed % 10) as usize;
    let size_min = 2 + (seed / 10 % 2) as usize;
    let size_max = (size_min + (seed / 20 % 3) as usize).min(n);
    let cfg = GeneratorConfig {
        n,
        m: 3 + (seed / 60 % 12) as usize,
        size_min,
        size_max,
        seed: seed ^ 0x5eed,
    };
    random_linear(&cfg).expect("valid config")
}

fn dump(h: &Hypergraph, what: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-counterexamples");
    fs::create_dir_all(&dir).expect("counterexample dir");
    let path = dir.join(format!("{}.{what}.json", h.name()));
    fs::write(&path, InstanceDocument::from_hypergraph(h).to_json()).expect("write counterexample");
    path
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn timed(limit: Duration, body: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let detail = body()?;
    let took = start.elapsed();
    check(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(format!("{detail}; {:.2?} (limit {limit:?})", took))
}

fn fano_regression() -> Verdict {
    timed(FANO_LIMIT, || {
        let h = fano();
        let m = h.metrics();
        check(
            (m.delta, m.delta2, m.antirank, m.rank) == (3, 6, 3, 3),
            || format!("metrics {m:?}"),
        )?;

        let analysis =
            analyze_hypergraph(h.clone(), &AnalyzeOptions::default()).map_err(|e| e.to_string())?;
        let d = analysis.report.direct;
        check(d.q == 7 && d.delta2 == 6 && d.holds && d.equality, || {
            format!("direct check {d:?}")
        })?;

        let aut = automorphisms(&h).map_err(|e| e.to_string())?;
        let oracle = oracle_automorphism_count(&h).map_err(|e| e.to_string())?;
        check(aut.order() == 168 && oracle == 168, || {
            format!("|Aut| {} oracle {oracle}", aut.order())
        })?;

        for seed in [None].into_iter().chain((0..16).map(Some)) {
            let c = chromatic_index_with(&h, &SolverOptions { seed });
            let t = color_preserving_subgroup(&aut, &h, &c);
            let b = burnside_bound(&t, &h).map_err(|e| e.to_string())?;
            let o = orbits(&t, &h).len();
            check(t.order() == 1 && b.bound == 7 && o == 7, || {
                format!(
                    "seed {seed:?}: |T| {} bound {} orbits {o}",
                    t.order(),
                    b.bound
                )
            })?;
        }

        let p = analysis.report.primary();
        let PivotCase::MultiMissing(missing) = &p.case else {
            return Err(format!("case {:?}", p.case));
        };
        check(missing.len() == 4, || format!("missing {missing:?}"))?;
        for b in &p.per_c0 {
            check(b.gamma_size == 3, || {
                format!("|Γ({})| = {}", b.c0, b.gamma_size)
            })?;
            check(
                b.theorem2 == Inequality::integers(10, 13) && b.theorem2.holds(),
                || format!("c0 {}: {:?}", b.c0, b.theorem2),
            )?;
        }
        check(p.per_c0.len() == 4, || "per-c0 count".into())?;
        match &p.helly {
            Some(HellyVerdict::NotHelly { clique, .. }) if clique.len() == 4 => {}
            other => return Err(format!("helly {other:?}")),
        }
        Ok("q=7 Δ=3 Δ₂=6 ar=r=3, 7 ≤ 7 (equality), |Aut|=168=oracle, |T|=1, Burnside=7=orbits, |Γ|=3 ×4, 10 ≤ 13 ×4, not Helly (4-set witness)".into())
    })
}

fn worked_example_burnside() -> Verdict {
    let bound = burnside_average(64, 32 + 32 * 11).map_err(|e| e.to_string())?;
    check(bound == 6, || format!("bound {bound}"))?;
    check(Inequality::integers(4, bound).holds(), || {
        "4 ≤ 6 fails".into()
    })?;
    Ok("(32 + 32·11)/64 = 6, 4 ≤ 6".into())
}

fn worked_example_theorem2() -> Verdict {
    let t = theorem2_evaluate(7, 2, 3, 20).map_err(|e| e.to_string())?;
    let shown = format!(
        "{}/{} ≤ {}/{}",
        t.lhs.numer(),
        t.lhs.denom(),
        t.rhs.numer(),
        t.rhs.denom()
    );
    check(
        t.lhs == Rational::from_integer(9) && t.rhs == Rational::from_integer(21) && t.holds(),
        || format!("expected 9 ≤ 21, evaluator gives {shown}"),
    )?;
    Ok(shown)
}

fn oracle_chromatic() -> Verdict {
    timed(ORACLE_SUITE_LIMIT, || {
        for seed in 0..ORACLE_SEEDS {
            let h = oracle_instance(seed);
            let (q, o) = (
                chromatic_index(&h).q(),
                oracle_chromatic_index(&h).map_err(|e| e.to_string())?,
            );
            check(q == o, || format!("seed {seed}: solver {q} oracle {o}"))?;
        }
        Ok(format!("{ORACLE_SEEDS} seeds agree"))
    })
}

fn oracle_automorphisms() -> Verdict {
    timed(ORACLE_SUITE_LIMIT, || {
        let mut checked = 0;
        let mut seed = 0;
        while checked < ORACLE_SEEDS {
            let h = oracle_instance(seed);
            seed += 1;
            if h.vertex_count() > 8 {
                continue;
            }
            let a = automorphisms(&h).map_err(|e| e.to_string())?.order();
            let o = oracle_automorphism_count(&h).map_err(|e| e.to_string())?;
            check(a == o, || {
                format!("seed {}: search {a} oracle {o}", seed - 1)
            })?;
            checked += 1;
        }
        Ok(format!("{checked} instances with n ≤ 8 agree"))
    })
}

fn oracle_helly_suite() -> Verdict {
    timed(ORACLE_SUITE_LIMIT, || {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut negatives = 0;
        for round in 0..ORACLE_SEEDS {
            let sets = rng.random_range(0..=12);
            let universe = rng.random_range(1..=7);
            let family: Vec<Vec<usize>> = (0..sets)
                .map(|_| (0..universe).filter(|_| rng.random_bool(0.4)).collect())
                .collect();
            let o = oracle_helly(&family).map_err(|e| e.to_string())?;
            check(helly_check(&family).is_helly() == o, || {
                format!("round {round}: {family:?}")
            })?;
            negatives += usize::from(!o);
        }
        Ok(format!(
            "{ORACLE_SEEDS} families agree ({negatives} non-Helly)"
        ))
    })
}

fn oracle_burnside() -> Verdict {
    timed(ORACLE_SUITE_LIMIT, || {
        for seed in 0..ORACLE_SEEDS {
            let h = oracle_instance(seed);
            let c = chromatic_index(&h);
            let t =
                color_preserving_subgroup(&automorphisms(&h).map_err(|e| e.to_string())?, &h, &c);
            let b = burnside_bound(&t, &h).map_err(|e| e.to_string())?.bound;
            let o = orbits(&t, &h).len();
            check(b == o, || format!("seed {seed}: Burnside {b} orbits {o}"))?;
        }
        Ok(format!("{ORACLE_SEEDS} seeds: bound = orbit count"))
    })
}

fn theorem_suite(name: &str, body: impl Fn(u64, &Hypergraph) -> Result<(), String>) -> Verdict {
    for seed in 0..THEOREM_SEEDS {
        let h = theorem_instance(seed);
        body(seed, &h).map_err(|e| format!("{e} (counterexample {})", dump(&h, name).display()))?;
    }
    Ok(format!("{THEOREM_SEEDS} seeds"))
}

fn sandwich() -> Verdict {
    theorem_suite("sandwich", |seed, h| {
        let s = h.check_sandwich();
        check(s.holds, || format!("seed {seed}: {s:?}"))
    })
}

fn conjecture() -> Verdict {
    theorem_suite("conjecture", |seed, h| {
        let q = chromatic_index(h).q();
        let m = h.metrics();
        check(q >= m.delta && q <= m.delta2 + 1, || {
            format!("seed {seed}: q {q} Δ {} Δ₂ {}", m.delta, m.delta2)
        })
    })
}

fn orbit_suites() -> Verdict {
    theorem_suite("orbits", |seed, h| {
        let c = chromatic_index(h);
        let t = color_preserving_subgroup(&automorphisms(h).map_err(|e| e.to_string())?, h, &c);
        for block in &orbits(&t, h).blocks {
            check(
                block.iter().all(|&e| c.color(e) == c.color(block[0])),
                || format!("seed {seed}: orbit {block:?} not monochromatic"),
            )?;
        }
        let b = burnside_bound(&t, h).map_err(|e| e.to_string())?.bound;
        check(c.q() <= b, || {
            format!("seed {seed}: q {} > Burnside {b}", c.q())
        })
    })
}

fn pair_adjacency() -> Verdict {
    theorem_suite("pair-adjacency", |seed, h| {
        for s in [None, Some(seed)] {
            let c = chromatic_index_with(h, &SolverOptions { seed: s });
            check(pair_adjacency_check(h, &c).holds(), || {
                format!("seed {seed}/{s:?}")
            })?;
        }
        Ok(())
    })
}

fn theorem2_every_c0() -> Verdict {
    theorem_suite("theorem2", |seed, h| {
        let report = conjecture_report(h).map_err(|e| format!("seed {seed}: {e}"))?;
        for b in &report.primary().per_c0 {
            check(b.theorem2.holds(), || {
                format!("seed {seed} c0 {}: {:?}", b.c0, b.theorem2)
            })?;
        }
        Ok(())
    })
}

fn certificate_soundness() -> Verdict {
    theorem_suite("certificates", |seed, h| {
        let c = chromatic_index(h);
        let direct = c.q() <= h.metrics().delta2 + 1;
        for v in 0..h.vertex_count() {
            let view = PivotView::new(h, &c, v);
            let issued = view.theorem21().map_err(|e| e.to_string())?.is_certified()
                || view.clique_condition().is_certified();
            check(!issued || direct, || {
                format!("seed {seed} pivot {v}: certificate without direct hold")
            })?;
        }
        Ok(())
    })
}

fn constructed_theorem21() -> Verdict {
    let hp = helly_positive(3);
    let h = &hp.hypergraph;
    let c = chromatic_index(h);
    let view = PivotView::new(h, &c, hp.pivot);
    match view.theorem21().map_err(|e| e.to_string())? {
        Theorem21Verdict::Certified { certificate, .. } => {
            check(certificate.two_delta.holds() && certificate.sound(), || {
                format!("{certificate:?}")
            })?;
            let q = c.q();
            let delta = h.metrics().delta;
            check(q <= 2 * delta, || format!("q {q} > 2Δ {}", 2 * delta))?;
            Ok(format!(
                "{} missing colors at pivot {}, hub {}; q={q} ≤ 2Δ={}",
                view.missing().len(),
                h.label(hp.pivot),
                h.label(certificate.hub),
                2 * delta
            ))
        }
        other => Err(format!("{other:?}")),
    }
}

fn constructed_clique() -> Verdict {
    let hp = helly_positive(8);
    let h = &hp.hypergraph;
    check(h.uniformity() == Some(3), || "not 3-uniform".into())?;
    let c = chromatic_index(h);
    match PivotView::new(h, &c, hp.pivot).clique_condition() {
        CliqueVerdict::Certified {
            family,
            threshold,
            certificate,
        } => {
            check(family.len() == 8 && threshold == 7, || {
                format!("|F| {} threshold {threshold}", family.len())
            })?;
            let hub = certificate.hub;
            check(family.iter().all(|&e| h.edge(e).contains(&hub)), || {
                "hub not on every edge".into()
            })?;
            Ok(format!(
                "|F| = 8 > 7, every edge of F contains {}",
                h.label(hub)
            ))
        }
        other => Err(format!("{other:?}")),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("fano-regression", fano_regression),
        ("worked-example/burnside-average", worked_example_burnside),
        ("worked-example/theorem2-bound", worked_example_theorem2),
        ("oracle/chromatic-index", oracle_chromatic),
        ("oracle/automorphisms", oracle_automorphisms),
        ("oracle/helly", oracle_helly_suite),
        ("oracle/burnside-orbits", oracle_burnside),
        ("theorems/sandwich", sandwich),
        ("theorems/delta-and-conjecture", conjecture),
        ("theorems/orbits-and-burnside", orbit_suites),
        ("theorems/pair-adjacency", pair_adjacency),
        ("theorems/theorem2-every-c0", theorem2_every_c0),
        ("theorems/certificate-soundness", certificate_soundness),
        ("constructed/helly-positive-3", constructed_theorem21),
        ("constructed/clique-condition-8", constructed_clique),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {id}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id}: {detail}");
            }
        }
    }
    println!("acceptance: {failed} criterion line(s) failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
