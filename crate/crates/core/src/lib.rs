//! Exact character theory for small finite groups, with checkers for
//! distinct-degree pairs, Camina pairs and related classification results.

pub mod arith;
pub mod chartable;
pub mod clifford;
pub mod construct;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod io;
pub mod orbits;
pub mod property_d;
pub mod report;

pub use error::{Error, Result, Witness};
pub use group::{ConjugacyClasses, Group, QuotientMap, Subgroup};
