//! Serializable snapshots of fields, codes and certificates.
//!
//! Elements of GF(q) are written as exponents of `γ = α^N`, the generator of
//! GF(q)^* inside the ambient field, with `null` for zero.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bch::{build_code, BchCode};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::locator::{certify_normalized, Certificate};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub p: u32,
    pub e: u32,
    pub size: u64,
    pub modulus: Vec<u32>,
    pub primitive: u32,
}

impl FieldRecord {
    pub fn of(f: &Field) -> Self {
        FieldRecord {
            p: f.characteristic(),
            e: f.degree(),
            size: f.size(),
            modulus: f.modulus().to_vec(),
            primitive: f.primitive_encoding(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub q: u64,
    pub n: usize,
    pub delta: usize,
    pub b: usize,
    pub m: u32,
    pub k: usize,
    pub defining_set_size: usize,
    pub generator: Vec<Option<u64>>,
    pub field: FieldRecord,
    pub beta_exponent: u64,
}

impl CodeRecord {
    pub fn of(code: &BchCode) -> Self {
        CodeRecord {
            q: code.q(),
            n: code.n(),
            delta: code.delta(),
            b: code.b(),
            m: code.m(),
            k: code.dimension(),
            defining_set_size: code.defining_set().len(),
            generator: code
                .generator()
                .coeffs()
                .iter()
                .map(|&c| subfield_marker(code, c))
                .collect(),
            field: FieldRecord::of(code.field()),
            beta_exponent: code.beta_exponent(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub code: CodeRecord,
    pub locator_exponents: Vec<usize>,
    pub s_values: Vec<Option<u64>>,
    pub coefficients: Vec<Option<u64>>,
    pub codeword_support: Vec<(usize, Option<u64>)>,
    pub weight: usize,
}

impl CertificateRecord {
    pub fn of(cert: &Certificate) -> Self {
        let code = cert.code();
        let mark = |v: &[FieldElement]| v.iter().map(|&c| subfield_marker(code, c)).collect();
        CertificateRecord {
            code: CodeRecord::of(code),
            locator_exponents: cert.locator_exponents().to_vec(),
            s_values: mark(cert.s_values()),
            coefficients: mark(cert.coefficients()),
            codeword_support: cert
                .codeword()
                .support
                .iter()
                .map(|&(i, c)| (i, subfield_marker(code, c)))
                .collect(),
            weight: cert.weight(),
        }
    }
}

/// `Some(k)` for `γ^k`, `None` for zero. Panics off the base field, which
/// code and certificate invariants rule out.
pub fn subfield_marker(code: &BchCode, a: FieldElement) -> Option<u64> {
    if a.is_zero() {
        return None;
    }
    Some(code.subfield_log(a).expect("element of GF(q)"))
}

fn mismatch<T: PartialEq>(what: &str, a: &T, b: &T) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RecordMismatch(what.into()))
    }
}

/// Rebuilds the code from `(q, n, δ, b)` and checks every recorded field.
pub fn verify_code_record(rec: &CodeRecord) -> Result<Arc<BchCode>> {
    let code = Arc::new(build_code(rec.q, rec.n, rec.delta, rec.b)?);
    mismatch("code", &CodeRecord::of(&code), rec)?;
    Ok(code)
}

/// Re-derives the certificate from the recorded code parameters, locator
/// exponents and last coefficient, then compares the whole record.
pub fn verify_certificate_record(rec: &CertificateRecord) -> Result<Certificate> {
    let code = verify_code_record(&rec.code)?;
    let last = rec
        .coefficients
        .last()
        .copied()
        .flatten()
        .ok_or_else(|| Error::RecordMismatch("coefficients".into()))?;
    let cert = certify_normalized(code.clone(), &rec.locator_exponents, code.subfield_element(last))?;
    let fresh = CertificateRecord::of(&cert);
    mismatch("s_values", &fresh.s_values, &rec.s_values)?;
    mismatch("coefficients", &fresh.coefficients, &rec.coefficients)?;
    mismatch("codeword_support", &fresh.codeword_support, &rec.codeword_support)?;
    mismatch("weight", &fresh.weight, &rec.weight)?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::locator::construct_nonprimitive_family;

    #[test]
    fn round_trip() {
        let cert = construct_nonprimitive_family(3, 1, 2).unwrap();
        let rec = CertificateRecord::of(&cert);
        let text = serde_json::to_string(&rec).unwrap();
        let back: CertificateRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rec);
        verify_certificate_record(&back).unwrap();

        let mut bad = rec.clone();
        bad.weight = 3;
        assert_eq!(
            verify_certificate_record(&bad).unwrap_err(),
            Error::RecordMismatch("weight".into())
        );
        let mut bad = rec;
        bad.code.k = 8;
        assert_eq!(
            verify_certificate_record(&bad).unwrap_err(),
            Error::RecordMismatch("code".into())
        );
    }
}
