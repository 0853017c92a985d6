//! Exact arithmetic for flipped non-associative polynomial rings over
//! Cayley-Dickson algebras.
//!
//! All scalars are rationals. Algebras are given by structure constants on a
//! fixed basis `e0, ..., e(n-1)` with `e0` the unit for every preset.

pub mod algebra;
pub mod cayley_dickson;
pub mod error;
pub mod flip_poly;
pub mod involutions;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod quotient;
pub mod scalars;
pub mod structure;
pub mod verify;

pub use algebra::{
    AlgebraElement, Involution, NucleusSide, StarAlgebra, StructureConstants, Witness,
};
pub use cayley_dickson::{
    cayley_double, find_zero_divisor, named, tower, DoublingSpec, NamedAlgebra,
};
pub use error::{Error, Result};
pub use flip_poly::{
    check_axioms, flip_rule, poly_mul, tau, AxiomFamily, FlipPolyRing, ProductRule,
};
pub use linalg::{Matrix, Subspace};
pub use poly::Poly;
pub use quotient::{PolyPair, QuotElement};
pub use scalars::Rational;
