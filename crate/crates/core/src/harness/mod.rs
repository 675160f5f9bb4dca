//! Instance sources and the verification suite.

pub mod enumerate;
pub mod random;
pub mod suite;
