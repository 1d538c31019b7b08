//! Cyclotomic cosets and BCH codes C(q, n, δ, b).

use std::sync::Arc;

use crate::arith::{gcd, multiplicative_order, prime_power};
use crate::error::{Error, Result};
use crate::gf::{build_field, Field, FieldElement};
use crate::poly::Polynomial;

/// Multiplicative order of `q` modulo `n`.
pub fn ord(n: u64, q: u64) -> Result<u32> {
    if n <= 1 {
        return Err(Error::InvalidLength(n as usize));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(multiplicative_order(n, q) as u32)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub leader: usize,
    pub members: Vec<usize>,
}

impl CyclotomicCoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The orbit of `i` under multiplication by `q` modulo `n`.
pub fn cyclotomic_coset(i: usize, n: usize, q: u64) -> Result<CyclotomicCoset> {
    if n == 0 {
        return Err(Error::InvalidLength(n));
    }
    if gcd(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q });
    }
    let qm = (q % n as u64) as u128;
    let start = i % n;
    let mut members = vec![start];
    let mut cur = (start as u128 * qm % n as u128) as usize;
    while cur != start {
        members.push(cur);
        cur = (cur as u128 * qm % n as u128) as usize;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset {
        leader: members[0],
        members,
    })
}

/// A word of length `n` stored by its nonzero positions, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    pub n: usize,
    pub support: Vec<(usize, FieldElement)>,
}

impl Codeword {
    pub fn new(n: usize, mut support: Vec<(usize, FieldElement)>) -> Self {
        support.retain(|(_, c)| !c.is_zero());
        support.sort_by_key(|&(i, _)| i);
        Codeword { n, support }
    }

    pub fn from_dense(dense: &[FieldElement]) -> Self {
        let support = dense
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (i, c))
            .collect();
        Codeword {
            n: dense.len(),
            support,
        }
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn positions(&self) -> Vec<usize> {
        self.support.iter().map(|&(i, _)| i).collect()
    }

    pub fn to_dense(&self) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::ZERO; self.n];
        for &(i, c) in &self.support {
            out[i] = c;
        }
        out
    }
}

/// A BCH code over GF(q) realized inside an ambient field that contains
/// GF(q^m). β is `α^beta_exponent` for the ambient primitive element α.
#[derive(Debug, Clone)]
pub struct BchCode {
    q: u64,
    p: u32,
    e: u32,
    n: usize,
    delta: usize,
    b: usize,
    m: u32,
    field: Arc<Field>,
    beta_exponent: u64,
    defining_set: Vec<usize>,
    in_defining_set: Vec<bool>,
    generator: Polynomial,
}

/// Builds C(q, n, δ, b) in GF(q^m), `m = ord_n(q)`.
pub fn build_code(q: u64, n: usize, delta: usize, b: usize) -> Result<BchCode> {
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let m = ord(n as u64, q)?;
    check_delta(n, delta)?;
    let field = build_field(p as u32, e * m)?;
    build_code_in(field, q, n, delta, b)
}

fn check_delta(n: usize, delta: usize) -> Result<()> {
    if delta < 2 || delta > n {
        return Err(Error::InvalidDelta { delta, n });
    }
    Ok(())
}

/// Membership mask of `T = ∪_{0 ≤ i ≤ δ-2} C_{b+i}`, computed from cosets
/// alone.
pub fn defining_set_mask(q: u64, n: usize, delta: usize, b: usize) -> Result<Vec<bool>> {
    check_delta(n, delta)?;
    let mut mask = vec![false; n];
    for i in 0..delta - 1 {
        let start = (b + i) % n;
        if mask[start] {
            continue;
        }
        for j in cyclotomic_coset(start, n, q)?.members {
            mask[j] = true;
        }
    }
    Ok(mask)
}

/// Bose distance of C(q, n, δ, 1) without building the code.
pub fn bose_distance_of(q: u64, n: usize, delta: usize) -> Result<usize> {
    let mask = defining_set_mask(q, n, delta, 1)?;
    let run = (1..n).take_while(|&i| mask[i]).count();
    Ok((run + 1).min(n))
}

/// Builds C(q, n, δ, b) inside an existing field containing GF(q^m).
pub fn build_code_in(
    field: Arc<Field>,
    q: u64,
    n: usize,
    delta: usize,
    b: usize,
) -> Result<BchCode> {
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let m = ord(n as u64, q)?;
    check_delta(n, delta)?;
    if field.characteristic() as u64 != p || !field.degree().is_multiple_of(e * m) {
        return Err(Error::NotASubfield {
            q: (q as u128).pow(m).min(u64::MAX as u128) as u64,
            size: field.size(),
        });
    }
    let beta_exponent = field.order() / n as u64;

    let in_defining_set = defining_set_mask(q, n, delta, b)?;
    let defining_set: Vec<usize> = (0..n).filter(|&i| in_defining_set[i]).collect();

    let mut generator = Polynomial::one(field.clone());
    for &i in &defining_set {
        generator.mul_linear_assign(field.alpha_pow(beta_exponent * i as u64));
    }
    for (j, &c) in generator.coeffs().iter().enumerate() {
        if !field.in_subfield(c, q)? {
            return Err(Error::Internal(format!(
                "generator coefficient {j} is not in GF({q})"
            )));
        }
    }

    Ok(BchCode {
        q,
        p: p as u32,
        e,
        n,
        delta,
        b,
        m,
        field,
        beta_exponent,
        defining_set,
        in_defining_set,
        generator,
    })
}

impl BchCode {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Degree of GF(q) over its prime field.
    pub fn q_degree(&self) -> u32 {
        self.e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn beta_exponent(&self) -> u64 {
        self.beta_exponent
    }

    pub fn beta(&self) -> FieldElement {
        self.field.alpha_pow(self.beta_exponent)
    }

    /// β^i.
    pub fn beta_pow(&self, i: u64) -> FieldElement {
        let k = (self.beta_exponent as u128 * i as u128) % self.field.order() as u128;
        self.field.alpha_pow(k as u64)
    }

    pub fn defining_set(&self) -> &[usize] {
        &self.defining_set
    }

    pub fn in_defining_set(&self, i: usize) -> bool {
        self.in_defining_set[i % self.n]
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.n - self.defining_set.len()
    }

    pub fn is_narrow_sense(&self) -> bool {
        self.b == 1
    }

    /// Whether `n = q^m - 1`.
    pub fn is_primitive(&self) -> bool {
        (self.q as u128).pow(self.m) - 1 == self.n as u128
    }

    /// `N = (|F| - 1)/(q - 1)`: GF(q)^* is generated by `γ = α^N`.
    pub fn subfield_index(&self) -> u64 {
        self.field.order() / (self.q - 1)
    }

    /// `γ^k` in the ambient field.
    pub fn subfield_element(&self, k: u64) -> FieldElement {
        self.field
            .alpha_pow((k % (self.q - 1)) * self.subfield_index())
    }

    /// `Some(k)` with `a = γ^k` when `a ∈ GF(q)^*`, else `None`.
    pub fn subfield_log(&self, a: FieldElement) -> Option<u64> {
        let l = a.log()? as u64;
        let idx = self.subfield_index();
        l.is_multiple_of(idx).then_some(l / idx)
    }

    pub fn in_base_field(&self, a: FieldElement) -> bool {
        a.is_zero() || self.subfield_log(a).is_some()
    }

    /// M_i(x) = ∏_{j ∈ C_i} (x - β^j).
    pub fn minimal_polynomial(&self, i: usize) -> Result<Polynomial> {
        let coset = cyclotomic_coset(i, self.n, self.q)?;
        let mut poly = Polynomial::one(self.field.clone());
        for j in coset.members {
            poly.mul_linear_assign(self.beta_pow(j as u64));
        }
        Ok(poly)
    }

    /// Largest δ' with `{1, …, δ'-1} ⊆ T`.
    pub fn bose_distance(&self) -> Result<usize> {
        if self.b != 1 {
            return Err(Error::NotNarrowSense(self.b));
        }
        let run = (1..self.n).take_while(|&i| self.in_defining_set[i]).count();
        Ok((run + 1).min(self.n))
    }

    /// One more than the longest cyclic run of consecutive residues in T.
    pub fn bch_bound(&self) -> usize {
        let n = self.n;
        if self.defining_set.len() == n {
            return n + 1;
        }
        let start = (0..n).find(|&i| !self.in_defining_set[i]).unwrap_or(0);
        let mut best = 0;
        let mut cur = 0;
        for k in 1..=n {
            if self.in_defining_set[(start + k) % n] {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best + 1
    }

    /// `c(β^i)` for a sparse word.
    pub fn syndrome(&self, c: &Codeword, i: usize) -> FieldElement {
        let f = &self.field;
        c.support.iter().fold(FieldElement::ZERO, |acc, &(j, cj)| {
            f.add(acc, f.mul(cj, self.beta_pow((i * j) as u64 % self.n as u64)))
        })
    }

    fn check_length(&self, got: usize) -> Result<()> {
        if got != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got,
            });
        }
        Ok(())
    }

    /// `c(β^i) = 0` for every `i ∈ T`.
    pub fn is_codeword(&self, c: &Codeword) -> Result<bool> {
        self.check_length(c.n)?;
        Ok(self
            .defining_set
            .iter()
            .all(|&i| self.syndrome(c, i).is_zero()))
    }

    /// `g(x) | c(x)`.
    pub fn is_codeword_by_division(&self, dense: &[FieldElement]) -> Result<bool> {
        self.check_length(dense.len())?;
        let c = Polynomial::new(self.field.clone(), dense.to_vec());
        Ok(c.rem(&self.generator)?.is_zero())
    }

    /// The generator as a word of length n.
    pub fn generator_word(&self) -> Codeword {
        let mut dense = self.generator.coeffs().to_vec();
        dense.resize(self.n, FieldElement::ZERO);
        Codeword::from_dense(&dense)
    }
}

/// `n - m⌈(δ-1)(1 - 1/q)⌉` without any range check.
pub fn closed_form_dimension_value(q: u64, n: usize, delta: usize) -> Result<i64> {
    let m = ord(n as u64, q)? as i64;
    let t = ((delta as u64 - 1) * (q - 1)).div_ceil(q) as i64;
    Ok(n as i64 - m * t)
}

/// The closed-form dimension, valid for `q^⌈m/2⌉ < n ≤ q^m - 1` and
/// `2 ≤ δ ≤ n` with every `i ≤ δ - 1` inside the range
/// `i ≤ n q^⌈m/2⌉/(q^m - 1)` where all cosets `C_i` have full size `m`.
pub fn dimension_closed_form(q: u64, n: usize, delta: usize) -> Result<usize> {
    let m = ord(n as u64, q)?;
    let half = (q as u128).pow(m.div_ceil(2));
    let full = (q as u128).pow(m) - 1;
    let n128 = n as u128;
    if !(half < n128 && n128 <= full) {
        return Err(Error::OutOfLemmaRange);
    }
    let max_delta = (n128 * half / full + 1).min(n128);
    if delta < 2 || delta as u128 > max_delta {
        return Err(Error::OutOfLemmaRange);
    }
    let v = closed_form_dimension_value(q, n, delta)?;
    usize::try_from(v).map_err(|_| Error::OutOfLemmaRange)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(ord(26, 3).unwrap(), 3);
        assert_eq!(ord(13, 3).unwrap(), 3);
        assert_eq!(ord(781, 5).unwrap(), 5);
        assert_eq!(ord(15, 3), Err(Error::NotCoprime { n: 15, q: 3 }));
    }

    #[test]
    fn cosets() {
        assert_eq!(cyclotomic_coset(0, 15, 2).unwrap().members, vec![0]);
        assert_eq!(cyclotomic_coset(1, 15, 2).unwrap().members, vec![1, 2, 4, 8]);
        let c = cyclotomic_coset(10, 15, 2).unwrap();
        assert_eq!((c.leader, c.members), (5, vec![5, 10]));
        assert_eq!(cyclotomic_coset(1, 26, 3).unwrap().len(), 3);
    }

    #[test]
    fn tabulated_dimensions() {
        assert_eq!(build_code(3, 26, 5, 1).unwrap().dimension(), 17);
        assert_eq!(build_code(4, 63, 6, 1).unwrap().dimension(), 51);
        assert_eq!(build_code(3, 13, 4, 1).unwrap().dimension(), 7);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(dimension_closed_form(2, 15, 5).unwrap(), 7);
        assert_eq!(dimension_closed_form(5, 3124, 6).unwrap(), 3104);
        assert_eq!(dimension_closed_form(3, 26, 2).unwrap(), 23);
        assert_eq!(dimension_closed_form(2, 15, 7), Err(Error::OutOfLemmaRange));
    }

    #[test]
    fn bose_and_bch_bound() {
        let c = build_code(2, 15, 5, 1).unwrap();
        assert_eq!(c.bose_distance().unwrap(), 5);
        assert_eq!(c.bch_bound(), 5);
        assert_eq!(build_code(3, 26, 4, 1).unwrap().bose_distance().unwrap(), 4);
        assert_eq!(build_code(3, 26, 26, 1).unwrap().bose_distance().unwrap(), 26);
        assert_eq!(bose_distance_of(2, 15, 5).unwrap(), 5);
        assert_eq!(bose_distance_of(2, 15, 4).unwrap(), 5);
        assert!(build_code(3, 26, 5, 1).unwrap().bch_bound() >= 5);
        assert_eq!(
            build_code(2, 15, 3, 0).unwrap().bose_distance(),
            Err(Error::NotNarrowSense(0))
        );
    }

    #[test]
    fn generator_properties() {
        let c = build_code(4, 15, 6, 1).unwrap();
        let f = c.field().clone();
        let mut xn = vec![FieldElement::ZERO; c.n() + 1];
        xn[0] = f.neg(f.one());
        xn[c.n()] = f.one();
        let xn = Polynomial::new(f.clone(), xn);
        assert!(xn.rem(c.generator()).unwrap().is_zero());
        assert_eq!(c.generator().degree(), Some(c.defining_set().len()));
        let g = c.generator_word();
        assert!(c.is_codeword(&g).unwrap());
        assert!(c.is_codeword_by_division(&g.to_dense()).unwrap());
        let zero = Codeword::new(c.n(), vec![]);
        assert!(c.is_codeword(&zero).unwrap());
        let one = Codeword::new(c.n(), vec![(0, f.one())]);
        assert!(!c.is_codeword(&one).unwrap());
        assert!(!c.is_codeword_by_division(&one.to_dense()).unwrap());
        assert!(matches!(
            c.is_codeword(&Codeword::new(3, vec![])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn generator_is_lcm_of_minimal_polynomials() {
        let c = build_code(3, 26, 5, 1).unwrap();
        let mut acc = Polynomial::one(c.field().clone());
        let mut seen = vec![];
        for i in 1..5 {
            let leader = cyclotomic_coset(i, 26, 3).unwrap().leader;
            if !seen.contains(&leader) {
                seen.push(leader);
                acc = acc.mul(&c.minimal_polynomial(i).unwrap()).unwrap();
            }
        }
        assert_eq!(&acc, c.generator());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(build_code(6, 5, 2, 1).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(
            build_code(3, 26, 1, 1).unwrap_err(),
            Error::InvalidDelta { delta: 1, n: 26 }
        );
        assert!(matches!(build_code(2, 14, 3, 1), Err(Error::NotCoprime { .. })));
    }
}
