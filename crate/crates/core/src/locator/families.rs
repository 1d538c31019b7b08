//! The three explicit constructions of minimum-weight codewords.

use std::sync::Arc;

use super::{certify_normalized, lift_certificate, Certificate};
use crate::arith::{is_prime, prime_power};
use crate::bch::{build_code, build_code_in};
use crate::error::{Error, Result};
use crate::gf::{build_field, Field};
use crate::poly::Polynomial;

fn primitive_length(q: u64, m: u32) -> Result<usize> {
    let n = (q as u128)
        .checked_pow(m)
        .map(|v| v - 1)
        .ok_or(Error::TooLarge {
            size: u128::MAX,
            limit: u64::MAX,
        })?;
    usize::try_from(n).map_err(|_| Error::TooLarge {
        size: n,
        limit: usize::MAX as u64,
    })
}

/// C(q, q^m - 1, δ, 1) for `2 ≤ δ ≤ q - 1`, with locators the first δ-1
/// elements `γ, γ^2, …` of GF(q)^* \ {1}.
pub fn construct_small_delta(q: u64, m: u32, delta: usize) -> Result<Certificate> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let max = q as usize - 1;
    if delta < 2 || delta > max {
        return Err(Error::DeltaOutOfRange { delta, max });
    }
    if m == 0 {
        return Err(Error::BadParameters("m must be positive".into()));
    }
    let code = Arc::new(build_code(q, primitive_length(q, m)?, delta, 1)?);
    let step = code.subfield_index() / code.beta_exponent();
    let exponents: Vec<usize> = (1..delta as u64).map(|k| (k * step) as usize).collect();
    certify_normalized(code, &exponents, crate::gf::FieldElement::ONE)
}

/// `L(x) = x^Q - x^{Q-1} + 1` with `Q = q^t`, over the prime field.
pub fn l_polynomial(field: &Arc<Field>, big_q: usize) -> Polynomial {
    let mut c = vec![0i64; big_q + 1];
    c[0] = 1;
    c[big_q - 1] = -1;
    c[big_q] = 1;
    Polynomial::from_ints(field.clone(), &c)
}

/// `Q(x) = x^p + x^{p-1} + … + x - 1`.
pub fn q_polynomial(field: &Arc<Field>, p: usize) -> Polynomial {
    let mut c = vec![1i64; p + 1];
    c[0] = -1;
    Polynomial::from_ints(field.clone(), &c)
}

/// `A(x) = x^p - x - 1`.
pub fn a_polynomial(field: &Arc<Field>, p: usize) -> Polynomial {
    let mut c = vec![0i64; p + 1];
    c[0] = -1;
    c[1] = -1;
    c[p] = 1;
    Polynomial::from_ints(field.clone(), &c)
}

/// C(q, q^m - 1, q^t + 1, 1) with the roots of `L(x)` as locators; needs
/// `p t | m`.
pub fn construct_qt_family(q: u64, t: u32, m: u32) -> Result<Certificate> {
    let (p, _) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if t == 0 {
        return Err(Error::BadParameters("t must be positive".into()));
    }
    let pt = p as u32 * t;
    if m == 0 || !m.is_multiple_of(pt) {
        return Err(Error::BadModulus { m, pt });
    }
    let big_q = (q as u128).pow(t);
    let base_n = primitive_length(q, pt)?;
    let base = Arc::new(build_code(q, base_n, big_q as usize + 1, 1)?);
    let f = base.field().clone();
    let l = l_polynomial(&f, big_q as usize);
    let roots = l.roots_in_field()?;
    if roots.len() != big_q as usize {
        return Err(Error::Internal(format!(
            "L(x) has {} roots in GF(q^pt), expected {big_q}",
            roots.len()
        )));
    }
    let exponents: Vec<usize> = roots
        .iter()
        .map(|r| r.log().expect("L(0) = 1") as usize)
        .collect();
    let cert = certify_normalized(base, &exponents, f.neg(f.one()))?;
    lift_certificate(&cert, m)
}

/// C(q, (q^p - 1)/λ, p + 1, 1) with `q = p^e`, locators `γ^{i_j/λ}` where
/// `β^{i_j}` are the roots of `Q(x)` and `γ = β^λ`.
pub fn construct_nonprimitive_family(p: u32, e: u32, lambda: u64) -> Result<Certificate> {
    if p == 2 || !is_prime(p as u64) {
        return Err(Error::BadParameters(format!("p = {p} must be an odd prime")));
    }
    if e == 0 || e.is_multiple_of(p) {
        return Err(Error::BadParameters(format!("p = {p} divides e = {e}")));
    }
    let q = (p as u64).pow(e);
    if lambda == 0 || !(q - 1).is_multiple_of(lambda) {
        return Err(Error::BadParameters(format!(
            "λ = {lambda} does not divide q - 1 = {}",
            q - 1
        )));
    }
    let field = build_field(p, e * p)?;
    let roots = q_polynomial(&field, p as usize).roots_in_field()?;
    if roots.len() != p as usize {
        return Err(Error::Internal(format!(
            "Q(x) has {} roots in GF(q^p), expected {p}",
            roots.len()
        )));
    }
    let mut exponents = Vec::with_capacity(roots.len());
    for r in &roots {
        let l = r.log().expect("Q(0) = -1") as u64;
        if !l.is_multiple_of(q - 1) {
            return Err(Error::NormCheckFailed {
                exponent: l,
                q_minus_one: q - 1,
            });
        }
        exponents.push((l / lambda) as usize);
    }
    let n = (field.order() / lambda) as usize;
    let code = Arc::new(build_code_in(field, q, n, p as usize + 1, 1)?);
    certify_normalized(code, &exponents, crate::gf::FieldElement::ONE)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_delta_examples() {
        let c = construct_small_delta(4, 2, 3).unwrap();
        assert_eq!((c.code().n(), c.code().dimension(), c.weight()), (15, 11, 3));
        let c = construct_small_delta(3, 3, 2).unwrap();
        assert_eq!((c.code().n(), c.code().dimension(), c.weight()), (26, 23, 2));
        let c = construct_small_delta(5, 1, 3).unwrap();
        assert_eq!((c.code().n(), c.code().dimension(), c.weight()), (4, 2, 3));
        assert_eq!(
            construct_small_delta(3, 2, 3).unwrap_err(),
            Error::DeltaOutOfRange { delta: 3, max: 2 }
        );
    }

    #[test]
    fn qt_small_cases() {
        let c = construct_qt_family(3, 1, 3).unwrap();
        assert_eq!((c.code().n(), c.code().dimension(), c.weight()), (26, 20, 4));
        assert!(c.s_values().iter().all(|&s| s == c.code().field().one()));
        let c = construct_qt_family(2, 1, 4).unwrap();
        assert_eq!((c.code().n(), c.code().dimension(), c.weight()), (15, 11, 3));
        assert_eq!(
            construct_qt_family(3, 1, 4).unwrap_err(),
            Error::BadModulus { m: 4, pt: 3 }
        );
    }

    #[test]
    fn nonprimitive_small_case() {
        let c = construct_nonprimitive_family(3, 1, 2).unwrap();
        assert_eq!((c.code().n(), c.code().dimension(), c.weight()), (13, 7, 4));
        let f = c.code().field();
        assert!(c.s_values().iter().all(|&s| s == f.neg(f.one())));
        assert!(c.coefficients().iter().all(|&x| x == f.one()));
        assert!(matches!(
            construct_nonprimitive_family(3, 3, 2),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            construct_nonprimitive_family(2, 1, 1),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            construct_nonprimitive_family(3, 1, 4),
            Err(Error::BadParameters(_))
        ));
    }
}
