//! Finite-model workbench for monoidal t-norm based logic (MTL) and its
//! FL_ew-algebra relatives.
//!
//! Algebras live on the carrier `0..n`, with `0` the bottom and `n - 1` the
//! top. Every table operation is derived from the order and the monoid and
//! checked before use; the semantic, filter and model-theoretic layers only
//! accept verified algebras.

pub mod algebra;
pub mod catalog;
pub mod constructions;
pub mod enumeration;
pub mod filters;
pub mod formula;
pub mod modeltheory;
pub mod morphism;
pub mod scenarios;
pub mod semantics;

pub use algebra::{AlgebraError, Elem, FiniteAlgebra, Law};
pub use filters::{Filter, FilterError};
pub use formula::{parse, Formula, ParseError};
pub use morphism::Morphism;
pub use semantics::{Semantics, SemanticsError};
