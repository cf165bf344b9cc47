//! Exact edge coloring of linear loopless hypergraphs together with the
//! machinery to check chromatic-index bounds against a concrete minimal
//! coloring: color-preserving automorphism orbits (Burnside), the star and
//! color-set quotients around a maximum two-section-degree vertex, and the
//! Helly / clique sufficient conditions for `q <= Δ₂ + 1`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! DOT export live in the `hyperchrom` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cliques;
pub mod coloring;
pub mod hypergraph;
pub mod lab;
pub mod quotient;
pub mod report;
pub mod symmetry;

pub use coloring::{
    chromatic_index, chromatic_index_with, induced_vertex_colors, intersection_graph, is_proper,
    pair_adjacency_check, ColoringError, EdgeColoring, PairAdjacency, SolverOptions,
    VertexColorSets,
};
pub use hypergraph::{
    sym_diff_distance, Hypergraph, Metrics, Sandwich, SetSystem, SimpleGraph, ValidationError,
};
pub use quotient::{
    clique_condition_check, helly_check, pick_pivot, pivot_candidates, theorem21_check,
    theorem2_evaluate, HellyVerdict, Inequality, PivotCase, PivotView, QuotientError, Rational,
};
pub use report::{
    conjecture_report, conjecture_report_with, ConjectureReport, ReportError, ReportOptions,
};
pub use symmetry::{
    automorphisms, automorphisms_with, burnside_average, burnside_bound, color_preserving_subgroup,
    orbits, AutomorphismSet, BurnsideBound, OrbitPartition, SymmetryError, SymmetryLimits,
    VertexPermutation,
};
