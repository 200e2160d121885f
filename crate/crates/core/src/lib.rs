pub mod analytic;
pub mod arith;
pub mod cache;
pub mod cli;
pub mod config;
pub mod error;
pub mod field;
pub mod gfun;
pub mod hnf;
pub mod ideal;
pub mod io;
pub mod measure;
pub mod modp;
pub mod psi;
pub mod selberg;

pub use error::{Error, Result};
pub use field::{build_field, EmbeddingPoint, FieldElement, NumberField, NumberFieldSpec};
pub use ideal::{FractionalElement, Ideal, PrimeIdeal, PrimeTable};
