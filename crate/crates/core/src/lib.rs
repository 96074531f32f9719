//! Exhaustive verifier for the arithmetic case analysis ruling out
//! line-transitive, point-primitive groups of holomorph type (HS and HC)
//! on thick generalised quadrangles, together with small coset-geometry
//! checks of the structural lemmas it rests on.

pub mod arith;
pub mod catalog;
pub mod diophantine;
pub mod geometry;
pub mod params;
pub mod report;
pub mod verify;
