//! Exact computation of CCS-numbers and xi-invariants of spherical space forms
//! `S^3 / Gamma` for the finite subgroups `Gamma` of `U(2)` acting freely.

pub mod classify;
pub mod cli;
pub mod cyclo;
pub mod invariants;
pub mod matgroup;
pub mod reptheory;
