//! Finite fields, BCH codes and explicit minimum-weight certificates.

pub mod arith;
pub mod bch;
pub mod bounds;
pub mod error;
pub mod gf;
pub mod locator;
pub mod oracle;
pub mod poly;
pub mod record;

pub use bch::{build_code, BchCode, Codeword};
pub use error::{Error, Result};
pub use gf::{build_field, Field, FieldElement, FieldSpec};
pub use locator::{certify, lift_certificate, search_certificate, Certificate, SearchOutcome};
pub use poly::Polynomial;
