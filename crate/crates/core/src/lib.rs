//! Computable Chow motives of geometrically split varieties with coefficients
//! in a prime field GF(p).
//!
//! Split Chow rings are supplied as data (graded basis, structure constants,
//! degree functional). On top of them the crate implements the calculus of
//! correspondences, motivic direct summands and their base/bottom/top,
//! Krull-Schmidt decompositions of endomorphism algebras, an axiomatized
//! model of rational cycles over a tower of fields, and a self-verifying
//! construction extracting outer summands from a field extension to the base
//! field.

pub mod algebra;
pub mod chow;
pub mod correspondence;
pub mod decompose;
pub mod error;
pub mod ff;
pub mod model;
pub mod motive;
pub mod poly;
pub mod rationality;
pub mod report;
pub mod run;
pub mod sampling;
pub mod theorem;
pub mod zoo;

pub use chow::{Cycle, SplitChowStructure, VarietyExpression};
pub use correspondence::Correspondence;
pub use error::{Error, Result};
pub use ff::{Fp, FpMatrix, FpSubspace};
pub use motive::{MotiveSummand, SummandProfile};

