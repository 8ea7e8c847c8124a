//! Correspondence scrolls: construction, Gröbner bases, degrees and Hilbert
//! polynomials.

pub mod chow;
pub mod document;
pub mod error;
pub mod field;
pub mod gallery;
pub mod groebner;
pub mod hilbert;
pub mod order;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod scroll;

pub use error::{BudgetExceeded, Error, Result};
pub use field::{Field, Fp, Rational, F32003};
pub use groebner::{GroebnerBasis, GroebnerOptions, Ideal, MonomialIdeal};
pub use order::MonomialOrder;
pub use poly::Polynomial;
pub use ring::{Monomial, Multidegree, Ring};
pub use scroll::ScrollSpec;
