//! Somos sequences, their symmetry maps and invariants.

pub mod algebra;
pub mod bfile;
pub mod fixtures;
pub mod invariants;
pub mod projmap;
pub mod report;
pub mod somos;
pub mod verdict;
