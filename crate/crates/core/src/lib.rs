//! Exact graded commutative algebra over weighted polynomial rings.
//!
//! Modules are finitely presented cokernels over `k[x_1, ..., x_n]` with
//! positive integer weights, where `k` is the rationals or a prime field.
//! Every quantity is computed exactly.

pub mod cli;
pub mod decompose;
pub mod error;
pub mod groebner;
pub mod grmod;
pub mod gsop;
pub mod koszul;
pub mod linalg;
pub mod ring;
pub mod samuel;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use grmod::{ComponentSpace, LengthValue, ModulePresentation};
pub use ring::{FieldElement, FieldKind, Monomial, Polynomial, Ring, RingDescriptor};
pub use series::{dimension_and_degree, poincare, Dimension, DimensionReport, LaurentPoly, RationalSeries};
