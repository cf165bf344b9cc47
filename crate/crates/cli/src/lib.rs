//! Instance documents, JSON reports, DOT export and the `analyze` / `gen`
//! commands built on `hyperchrom-core`.

pub mod commands;
pub mod document;
pub mod dot;
pub mod report;
