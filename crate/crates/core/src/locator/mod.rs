//! Minimum-weight certificates for narrow-sense BCH codes.
//!
//! A weight-δ codeword of C(q, n, δ, 1) is determined by its locators
//! `x_j = β^{i_j}`, normalized so that `i_δ = 0`. Such a word exists on the
//! given locators exactly when every
//!
//! ```text
//! S_j = ∏_{k≠j}(1 - x_k) / (x_j ∏_{k≠j}(x_j - x_k))
//! ```
//!
//! lies in GF(q)^*, and then `c_{i_j} = -c_{i_δ} S_j`.

pub mod families;
pub mod vandermonde;

use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::binomial;
use crate::bch::{build_code, BchCode, Codeword};
use crate::error::{Error, Result};
use crate::gf::FieldElement;

pub use families::{construct_nonprimitive_family, construct_qt_family, construct_small_delta};
pub use vandermonde::{
    modified_vandermonde_inverse, s_values, vandermonde_inverse, Matrix, VandermondeSystem,
};

#[derive(Debug, Clone)]
pub struct Certificate {
    code: Arc<BchCode>,
    locator_exponents: Vec<usize>,
    s_values: Vec<FieldElement>,
    coefficients: Vec<FieldElement>,
    codeword: Codeword,
}

impl Certificate {
    pub fn code(&self) -> &Arc<BchCode> {
        &self.code
    }

    /// `i_1, …, i_{δ-1}`; `i_δ = 0` is implicit.
    pub fn locator_exponents(&self) -> &[usize] {
        &self.locator_exponents
    }

    pub fn s_values(&self) -> &[FieldElement] {
        &self.s_values
    }

    /// `c_{i_1}, …, c_{i_δ}`.
    pub fn coefficients(&self) -> &[FieldElement] {
        &self.coefficients
    }

    pub fn codeword(&self) -> &Codeword {
        &self.codeword
    }

    pub fn weight(&self) -> usize {
        self.codeword.weight()
    }

    /// `c_{i_δ}`.
    pub fn last_coefficient(&self) -> FieldElement {
        *self.coefficients.last().expect("at least one coefficient")
    }

    /// Rebuilds the certificate from the code and exponents alone and
    /// compares every derived value.
    pub fn verify(&self) -> Result<()> {
        let fresh = certify_normalized(
            self.code.clone(),
            &self.locator_exponents,
            self.last_coefficient(),
        )?;
        if fresh.s_values != self.s_values {
            return Err(Error::RecordMismatch("s_values".into()));
        }
        if fresh.coefficients != self.coefficients {
            return Err(Error::RecordMismatch("coefficients".into()));
        }
        if fresh.codeword != self.codeword {
            return Err(Error::RecordMismatch("codeword".into()));
        }
        Ok(())
    }
}

/// [`certify_normalized`] with `c_{i_δ} = 1`.
pub fn certify(code: Arc<BchCode>, exponents: &[usize]) -> Result<Certificate> {
    certify_normalized(code, exponents, FieldElement::ONE)
}

fn check_exponents(code: &BchCode, exponents: &[usize]) -> Result<()> {
    if !code.is_narrow_sense() {
        return Err(Error::NotNarrowSense(code.b()));
    }
    let expected = code.delta() - 1;
    if exponents.len() != expected {
        return Err(Error::WrongLocatorCount {
            expected,
            got: exponents.len(),
        });
    }
    for (j, &i) in exponents.iter().enumerate() {
        if i == 0 || i >= code.n() {
            return Err(Error::LocatorOutOfRange {
                exponent: i,
                n: code.n(),
            });
        }
        if exponents[..j].contains(&i) {
            return Err(Error::DuplicateLocator(i));
        }
    }
    Ok(())
}

/// Checks the S_j criterion on the given locator exponents and, on success,
/// builds the weight-δ codeword with last coefficient `c_last`.
pub fn certify_normalized(
    code: Arc<BchCode>,
    exponents: &[usize],
    c_last: FieldElement,
) -> Result<Certificate> {
    check_exponents(&code, exponents)?;
    if c_last.is_zero() || !code.in_base_field(c_last) {
        return Err(Error::InvalidArgument(
            "last coefficient must lie in GF(q)^*".into(),
        ));
    }
    let f = code.field().clone();
    let points: Vec<FieldElement> = exponents.iter().map(|&i| code.beta_pow(i as u64)).collect();
    let s = s_values(&f, &points)?;
    if let Some(j) = s.iter().position(|&sj| !code.in_base_field(sj)) {
        return Err(Error::CriterionFailed { index: j + 1 });
    }
    let neg_last = f.neg(c_last);
    let mut coefficients: Vec<FieldElement> = s.iter().map(|&sj| f.mul(neg_last, sj)).collect();
    coefficients.push(c_last);

    let mut support: Vec<(usize, FieldElement)> = exponents
        .iter()
        .copied()
        .zip(coefficients.iter().copied())
        .collect();
    support.push((0, c_last));
    let codeword = Codeword::new(code.n(), support);
    if codeword.weight() != code.delta() || !code.is_codeword(&codeword)? {
        return Err(Error::Internal(
            "certified word is not a weight-δ codeword".into(),
        ));
    }
    Ok(Certificate {
        code,
        locator_exponents: exponents.to_vec(),
        s_values: s,
        coefficients,
        codeword,
    })
}

/// Lifts a certificate for a primitive code of length `q^h - 1` to the
/// primitive code of length `q^m - 1` with the same δ.
pub fn lift_certificate(cert: &Certificate, m: u32) -> Result<Certificate> {
    let base = cert.code();
    if !base.is_primitive() {
        return Err(Error::NotPrimitive {
            n: base.n(),
            full: ((base.q() as u128).pow(base.m()) - 1) as u64,
        });
    }
    let h = base.m();
    if m == 0 || !m.is_multiple_of(h) {
        return Err(Error::NotADivisor {
            divisor: h as u64,
            value: m as u64,
        });
    }
    if m == h {
        return Ok(cert.clone());
    }
    let n_big = (base.q() as u128).pow(m) - 1;
    let n_big = usize::try_from(n_big).map_err(|_| Error::TooLarge {
        size: n_big,
        limit: usize::MAX as u64,
    })?;
    let big = Arc::new(build_code(base.q(), n_big, base.delta(), 1)?);
    let emb = base.field().embedding_into(big.field())?;
    let map = |log: u64| -> Result<u64> {
        let image = emb.map_log(log);
        if image % big.beta_exponent() != 0 {
            return Err(Error::Internal("lifted locator is not a power of β".into()));
        }
        Ok(image / big.beta_exponent())
    };
    let exponents = cert
        .locator_exponents()
        .iter()
        .map(|&i| map(base.beta_exponent() * i as u64).map(|e| e as usize))
        .collect::<Result<Vec<_>>>()?;
    let c_last = emb.map(cert.last_coefficient());
    certify_normalized(big, &exponents, c_last)
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(Certificate),
    /// The whole subset space was examined without success, so d > δ.
    Exhausted { examined: u64 },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

/// Log-domain form of the criterion: with `D[d] = log(1 - β^d)` and
/// `r = δ - 1`,
/// `log S_j ≡ Σ_{k≠j} D[i_k] - r s i_j - Σ_{k≠j} D[i_k - i_j]`, and
/// `S_j ∈ GF(q)^*` iff that is `≡ 0 (mod N)`.
struct LogCriterion {
    n: usize,
    modulus: u64,
    d: Vec<u64>,
    step: u64,
}

impl LogCriterion {
    fn new(code: &BchCode) -> Self {
        let f = code.field();
        let n = code.n();
        let modulus = code.subfield_index();
        let d = (0..n)
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    let v = f.sub(f.one(), code.beta_pow(k as u64));
                    v.log().expect("β^k ≠ 1 for 0 < k < n") as u64 % modulus
                }
            })
            .collect();
        let r = (code.delta() - 1) as u64;
        let step = (r % modulus) * (code.beta_exponent() % modulus) % modulus;
        LogCriterion { n, modulus, d, step }
    }

    fn holds(&self, idx: &[usize]) -> bool {
        let n = self.n;
        let md = self.modulus;
        let total = idx.iter().map(|&i| self.d[i]).sum::<u64>() % md;
        idx.iter().all(|&ij| {
            let mut v = (total + md - self.d[ij]) % md;
            v = (v + md - self.step * (ij as u64 % md) % md) % md;
            for &ik in idx {
                if ik != ij {
                    v = (v + md - self.d[(ik + n - ij) % n]) % md;
                }
            }
            v == 0
        })
    }
}

/// Scans (δ-1)-subsets of `[1, n)` in lexicographic order for locators
/// satisfying the criterion. The first `budget` subsets in that order are
/// examined; the result does not depend on the number of worker threads.
pub fn search_certificate(code: Arc<BchCode>, budget: u64) -> Result<SearchOutcome> {
    if !code.is_narrow_sense() {
        return Err(Error::NotNarrowSense(code.b()));
    }
    let n = code.n();
    let r = code.delta() - 1;
    let slots = n - 1;
    let total = binomial(slots as u64, r as u64);
    let crit = LogCriterion::new(&code);

    // offsets[a] = number of subsets whose first element is below a + 1
    let mut offsets = Vec::with_capacity(slots + 1);
    let mut acc = 0u64;
    for a in 0..slots {
        offsets.push(acc);
        acc = acc.saturating_add(binomial((slots - a - 1) as u64, r as u64 - 1));
    }

    let found = (0..slots).into_par_iter().find_map_first(|a| {
        let start = offsets[a];
        if start >= budget || slots - a < r {
            return None;
        }
        let mut idx: Vec<usize> = (0..r).map(|k| a + 1 + k).collect();
        let mut rank = start;
        loop {
            if rank >= budget {
                return None;
            }
            if crit.holds(&idx) {
                return Some(idx);
            }
            rank += 1;
            if !next_combination(&mut idx[1..], n) {
                return None;
            }
        }
    });

    match found {
        Some(idx) => Ok(SearchOutcome::Found(certify(code, &idx)?)),
        None if total <= budget => Ok(SearchOutcome::Exhausted { examined: total }),
        None => Err(Error::BudgetExceeded { budget }),
    }
}

/// Searches C(q, q^h - 1, δ, 1) and lifts any certificate found to
/// C(q, q^m - 1, δ, 1).
pub fn search_and_lift(q: u64, delta: usize, h: u32, m: u32, budget: u64) -> Result<SearchOutcome> {
    let n = (q as u128).checked_pow(h).map(|v| v - 1).unwrap_or(u128::MAX);
    let n = usize::try_from(n).map_err(|_| Error::TooLarge {
        size: n,
        limit: usize::MAX as u64,
    })?;
    let base = Arc::new(build_code(q, n, delta, 1)?);
    match search_certificate(base, budget)? {
        SearchOutcome::Found(cert) => Ok(SearchOutcome::Found(lift_certificate(&cert, m)?)),
        exhausted => Ok(exhausted),
    }
}

/// Advances a strictly increasing tuple with entries below `hi` to its
/// lexicographic successor.
fn next_combination(idx: &mut [usize], hi: usize) -> bool {
    let k = idx.len();
    if k == 0 {
        return false;
    }
    let mut pos = k;
    while pos > 0 {
        pos -= 1;
        if idx[pos] < hi - (k - pos) {
            idx[pos] += 1;
            for t in pos + 1..k {
                idx[t] = idx[t - 1] + 1;
            }
            return true;
        }
    }
    false
}
