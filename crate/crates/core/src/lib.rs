//! Dependency-decorated MILL type grammar.
//!
//! The crate is `no_std` and only needs `alloc`. Ingestion from XML, file
//! formats and the command line live in the `deptypes` crate.

#![no_std]

extern crate alloc;

pub mod dag;
pub mod extraction;
pub mod lexicon;
pub mod parser;
pub mod proofs;
pub mod transforms;
pub mod typelang;
pub mod types;

pub use dag::{Dag, Edge, EdgeRank, Node, NodeId};
pub use types::{Label, Notation, Type, Vocabulary};
