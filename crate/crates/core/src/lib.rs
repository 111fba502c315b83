//! Exact computer algebra for combinatorial Hopf algebras: symmetric,
//! noncommutative symmetric and quasisymmetric functions, the Faà di Bruno
//! and Brouder–Frabetti–Krattenthaler algebras, their comodule and Hopf
//! algebroid structure, cobar complexes, and formal-group-law computations.

pub mod algebra;
pub mod algebroid;
mod cache;
pub mod error;
pub mod index;
pub mod json;
pub mod lin;
pub mod linalg;
pub mod nsym;
pub mod parse;
pub mod poly;
pub mod renorm;
pub mod scalar;
pub mod series;
pub mod sym;
pub mod topology;
pub mod verify;

pub use algebra::{Algebra, Element, Hopf};
pub use error::{Error, Result};
pub use index::{Composition, Graded, Partition};
pub use lin::{Lin, Tensor};
pub use nsym::{NSym, QSym};
pub use renorm::{BPoly, Bfk, FaaDiBruno};
pub use scalar::{Scalar, ScalarRing};
pub use series::{MultiSeries, Series};
pub use sym::{Sym, SymBasis, SymElement};
