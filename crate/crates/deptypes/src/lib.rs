//! File formats, the extraction driver and the command-line front end
//! built on `deptypes-core`.

pub mod alpino;
pub mod cli;
pub mod config;
pub mod pipeline;
pub mod records;
pub mod sexpr;
pub mod stats;

pub use deptypes_core as core;
