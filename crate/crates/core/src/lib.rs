//! Exact noncommutative differential calculus for finite-dimensional algebras.

pub mod algebra;
pub mod coinvariants;
pub mod cyclic;
pub mod deform;
pub mod drcomplex;
pub mod exactlin;
pub mod forms;
pub mod freeprod;
pub mod io;
pub mod report;
pub mod suites;
pub mod repfunctor;

pub use exactlin::{LinMap, Rational, Subspace};
