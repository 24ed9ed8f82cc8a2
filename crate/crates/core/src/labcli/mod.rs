//! Enumeration, theorem suites, counterexample hunting and named fixtures.

pub mod enumerate;
pub mod fixtures;
pub mod hunt;
pub mod registry;
pub mod suites;
