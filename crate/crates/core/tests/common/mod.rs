#![allow(dead_code)]

pub mod dag;
pub mod proofs;
