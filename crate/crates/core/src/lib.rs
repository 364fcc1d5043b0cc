//! MILP toolkit for mission concept-of-operations design.
//!
//! The crate is organised around a self-contained linear-programming kernel
//! ([`lp`]), a branch-and-bound mixed-integer layer ([`milp`]), a grouped
//! column-generation driver ([`colgen`]), and two campaign model builders:
//! a crewed-Mars transfer-vehicle design model ([`mars`]) and a time-expanded
//! lunar logistics network ([`lunar`]). [`experiment`] ties scenarios,
//! solver modes, and report emission together for the CLI.

pub mod colgen;
pub mod experiment;
pub mod lp;
pub mod lunar;
pub mod mars;
pub mod milp;
