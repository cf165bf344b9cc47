use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::thread;

use hyperchrom_core::lab::{self, GeneratorConfig, LabError};
use hyperchrom_core::report::ReportError;
use hyperchrom_core::{conjecture_report_with, ConjectureReport, Hypergraph, ReportOptions};
use serde_json::json;
use thiserror::Error;

use crate::document::{self, DocumentError, InstanceDocument};
use crate::dot;
use crate::report::{self, ReportJson};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("{name}: no vertex labelled `{label}` for --pivot")]
    UnknownPivot { name: String, label: String },
    #[error("{name}: {source}")]
    Report {
        name: String,
        #[source]
        source: ReportError,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Lab(#[from] LabError),
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Report file, or a directory when the input is a directory.
    pub json: Option<PathBuf>,
    pub dot: Option<PathBuf>,
    pub seed: Option<u64>,
    pub pivot: Option<String>,
    pub all_pivots: bool,
    pub oracle_check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Holds,
    InputError,
    BoundFails,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Self::Holds => 0,
            Self::InputError => 1,
            Self::BoundFails => 2,
        }
    }
}

pub struct Analysis {
    pub hypergraph: Hypergraph,
    pub report: ConjectureReport,
    pub json: ReportJson,
}

impl Analysis {
    pub fn outcome(&self) -> Outcome {
        if self.report.direct.holds {
            Outcome::Holds
        } else {
            Outcome::BoundFails
        }
    }

    pub fn summary(&self) -> String {
        let d = &self.report.direct;
        let verdict = match (d.holds, d.equality) {
            (true, true) => "holds with equality",
            (true, false) => "holds",
            (false, _) => "FAILS",
        };
        let p = self.report.primary();
        format!(
            "{}: q={} delta2={} {} ({} at pivot {}, {} certificate(s))",
            self.report.name,
            d.q,
            d.delta2,
            verdict,
            p.case.tag(),
            self.hypergraph.label(p.pivot),
            p.certificates.len()
        )
    }
}

pub fn analyze_hypergraph(h: Hypergraph, opts: &AnalyzeOptions) -> Result<Analysis, CliError> {
    let pivot = match &opts.pivot {
        None => None,
        Some(label) => Some(
            h.vertex_index(label)
                .ok_or_else(|| CliError::UnknownPivot {
                    name: h.name().to_string(),
                    label: label.clone(),
                })?,
        ),
    };
    let ro = ReportOptions {
        seed: opts.seed,
        pivot,
        all_pivots: opts.all_pivots,
    };
    let report = conjecture_report_with(&h, &ro).map_err(|source| CliError::Report {
        name: h.name().to_string(),
        source,
    })?;
    let json = report::build(&h, &report, opts.oracle_check);
    Ok(Analysis {
        hypergraph: h,
        report,
        json,
    })
}

/// DOT files for the two-section, `H_Γ` and each `H*` at the first pivot.
pub fn write_dot(analysis: &Analysis, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let h = &analysis.hypergraph;
    let report = &analysis.report;
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let name = h.name();
    let mut written = Vec::new();
    let mut emit = |file: String, text: String| -> Result<(), CliError> {
        let path = dir.join(file);
        write_file(&path, &text)?;
        written.push(path);
        Ok(())
    };
    emit(format!("{name}.2sec.dot"), dot::two_section(h))?;

    let view = hyperchrom_core::PivotView::new(h, &report.coloring, report.primary().pivot);
    let theta = view.theta().map(<[_]>::to_vec).unwrap_or_default();
    let class_label = |i: usize| {
        let vs: Vec<&str> = theta[i].vertices().map(|v| h.label(v)).collect();
        format!("{{{}}}", vs.join(","))
    };
    let empty = hyperchrom_core::SetSystem::new(Vec::new());
    let (hg_system, sources) = match &report.primary().gamma_hypergraph {
        Some(hg) => (&hg.system, hg.sources.clone()),
        None => (&empty, Vec::new()),
    };
    let gamma_name = |i: usize| {
        let cs: Vec<String> = sources[i].iter().map(|c| (c + 1).to_string()).collect();
        format!("Γ({})", cs.join(","))
    };
    emit(
        format!("{name}.hgamma.dot"),
        dot::incidence(
            &format!("{name}.hgamma"),
            hg_system,
            class_label,
            gamma_name,
        ),
    )?;

    for &c0 in view.missing() {
        let Ok(gamma) = view.gamma(c0) else { break };
        let star = hyperchrom_core::quotient::star_color_hypergraph(&gamma);
        let color = c0 + 1;
        emit(
            format!("{name}.hstar.{color}.dot"),
            dot::incidence(
                &format!("{name}.hstar.{color}"),
                &star,
                |c| (c + 1).to_string(),
                |i| class_label(gamma.members[i]),
            ),
        )?;
    }
    Ok(written)
}

pub fn write_counterexample(analysis: &Analysis, dir: &Path) -> Result<PathBuf, CliError> {
    let h = &analysis.hypergraph;
    let doc = json!({
        "instance": InstanceDocument::from_hypergraph(h),
        "q": analysis.report.direct.q,
        "delta2": analysis.report.direct.delta2,
        "coloring": analysis.json.coloring,
    });
    let path = dir.join(format!("{}.counterexample.json", h.name()));
    write_file(
        &path,
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&doc).expect("serializable")
        ),
    )?;
    Ok(path)
}

/// Analyze one file and write the requested artifacts. Returns the
/// analysis and the stdout text.
pub fn analyze_file(
    path: &Path,
    opts: &AnalyzeOptions,
    report_path: Option<&Path>,
) -> Result<(Analysis, String), CliError> {
    let h = document::read_path(path)?;
    let analysis = analyze_hypergraph(h, opts)?;
    let mut stdout = String::new();
    match report_path {
        Some(p) => write_file(p, &analysis.json.to_json())?,
        None => stdout.push_str(&analysis.json.to_json()),
    }
    if let Some(dir) = &opts.dot {
        write_dot(&analysis, dir)?;
    }
    if analysis.outcome() == Outcome::BoundFails {
        let dir = report_path
            .and_then(Path::parent)
            .filter(|p| !p.as_os_str().is_empty())
            .map_or_else(|| PathBuf::from("."), Path::to_path_buf);
        let written = write_counterexample(&analysis, &dir)?;
        eprintln!("counterexample written to {}", written.display());
    }
    Ok((analysis, stdout))
}

fn instance_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io_err = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io_err)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json") && p.is_file())
        .collect();
    files.sort();
    Ok(files)
}

/// Per file: path, summary line or error, outcome.
pub type BatchEntry = (PathBuf, Result<String, CliError>, Outcome);

/// Analyze every `*.json` file in `dir` in parallel; output is in file order.
pub fn analyze_dir(dir: &Path, opts: &AnalyzeOptions) -> Result<Vec<BatchEntry>, CliError> {
    let files = instance_files(dir)?;
    if let Some(out) = &opts.json {
        fs::create_dir_all(out).map_err(|source| CliError::Io {
            path: out.clone(),
            source,
        })?;
    }
    let results = thread::scope(|s| {
        let handles: Vec<_> = files
            .iter()
            .map(|f| {
                s.spawn(move || {
                    let report_path = opts.json.as_ref().map(|d| {
                        let stem = f.file_stem().unwrap_or_default().to_string_lossy();
                        d.join(format!("{stem}.report.json"))
                    });
                    analyze_file(f, opts, report_path.as_deref())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("analysis thread panicked"))
            .collect::<Vec<_>>()
    });
    Ok(files
        .into_iter()
        .zip(results)
        .map(|(f, r)| match r {
            Ok((a, _)) => {
                let outcome = a.outcome();
                (f, Ok(a.summary()), outcome)
            }
            Err(e) => (f, Err(e), Outcome::InputError),
        })
        .collect())
}

pub enum GenRequest {
    Fano,
    Flower { k: usize, s: usize },
    HellyPositive { k: usize },
    Random(GeneratorConfig),
}

/// Instance document plus an optional note (the intended pivot).
pub fn generate(req: &GenRequest) -> Result<(InstanceDocument, Option<String>), CliError> {
    let (h, note) = match req {
        GenRequest::Fano => (lab::fano(), None),
        GenRequest::Flower { k, s } => {
            if *k == 0 || *s < 2 {
                return Err(LabError::InvalidConfig("flower needs k >= 1 and s >= 2").into());
            }
            (lab::flower(*k, *s), None)
        }
        GenRequest::HellyPositive { k } => {
            if *k < 2 {
                return Err(LabError::InvalidConfig("helly-positive needs k >= 2").into());
            }
            let hp = lab::helly_positive(*k);
            let note = format!(
                "intended pivot: {} (hub {})",
                hp.hypergraph.label(hp.pivot),
                hp.hypergraph.label(hp.hub)
            );
            (hp.hypergraph, Some(note))
        }
        GenRequest::Random(cfg) => (lab::random_linear(cfg)?, None),
    };
    Ok((InstanceDocument::from_hypergraph(&h), note))
}
