#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use hyperchrom_core::lab::{random_linear, GeneratorConfig};
use hyperchrom_core::Hypergraph;

/// Small instance for oracle comparison: n ≤ 10, at most 8 edges.
pub fn small_instance(seed: u64) -> Hypergraph {
    let n = 3 + (seed % 8) as usize;
    let size_max = (2 + (seed / 8 % 3) as usize).min(n);
    let cfg = GeneratorConfig {
        n,
        m: 1 + (seed / 24 % 8) as usize,
        size_min: 2,
        size_max,
        seed,
    };
    random_linear(&cfg).expect("config is valid")
}

/// Somewhat larger instance for the theorem suites.
pub fn medium_instance(seed: u64) -> Hypergraph {
    let n = 5 + (seed % 10) as usize;
    let size_min = 2 + (seed / 10 % 2) as usize;
    let size_max = (size_min + (seed / 20 % 3) as usize).min(n);
    let cfg = GeneratorConfig {
        n,
        m: 3 + (seed / 60 % 12) as usize,
        size_min,
        size_max,
        seed,
    };
    random_linear(&cfg).expect("config is valid")
}

/// Writes the instance to the test scratch directory and returns the path.
pub fn dump_counterexample(h: &Hypergraph, what: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("counterexamples");
    fs::create_dir_all(&dir).expect("create counterexample dir");
    let path = dir.join(format!("{}.{what}.txt", h.name()));
    let mut text = format!("vertices: {}\n", h.labels().join(" "));
    for e in h.edges() {
        let names: Vec<&str> = e.iter().map(|&v| h.label(v)).collect();
        text.push_str(&format!("edge: {}\n", names.join(" ")));
    }
    fs::write(&path, text).expect("write counterexample");
    path
}
