//! Exact-arithmetic toolkit for superspecial representations of finite
//! Weyl and Coxeter groups: classification, generic-degree reconstruction,
//! constructible cells and conjugacy-class searches, all over exact
//! coefficient fields (ℚ, ℚ(√5), real cyclotomic fields).

pub mod cells;
pub mod classify;
pub mod conjugacy;
pub mod data;
pub mod error;
pub mod poly;
pub mod registry;
pub mod report;
pub mod scalar;
pub mod symbols;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
