//! Finite fields GF(p^e) in exponent form.
//!
//! A [`Field`] fixes a monic irreducible modulus over GF(p) and a primitive
//! element α. Nonzero elements are stored as their discrete logarithm to
//! base α, so multiplication, division and powering are integer arithmetic
//! modulo `p^e - 1`; addition goes through a Zech-logarithm table built once
//! at construction time.
//!
//! Subfields are never built separately. GF(q) inside GF(q^m) is the set
//! `{0} ∪ {α^(kN)}` with `N = (q^m - 1)/(q - 1)`, and lifting between
//! independently constructed fields goes through [`Field::embedding_into`].

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::arith::{gcd, is_prime, prime_factors};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Largest field size built when `BCH_FIELD_CAP` is not set.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 22;

/// Process-wide field size cap, read once from `BCH_FIELD_CAP`.
pub fn field_cap() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("BCH_FIELD_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_FIELD_CAP)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    pub size: u64,
}

const ZERO_RAW: u32 = u32::MAX;

/// An element of some [`Field`]: either zero or `α^k` with `0 <= k < size - 1`.
///
/// Elements carry no reference to their field; every operation goes through
/// the owning `Field`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(ZERO_RAW);
    pub const ONE: FieldElement = FieldElement(0);

    pub fn is_zero(self) -> bool {
        self.0 == ZERO_RAW
    }

    /// Discrete logarithm to base α, `None` for zero.
    pub fn log(self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(self.0)
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => write!(f, "0"),
            Some(k) => write!(f, "a^{k}"),
        }
    }
}

pub struct Field {
    spec: FieldSpec,
    modulus: Vec<u32>,
    primitive: u32,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    neg_one: u32,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.spec.p)
            .field("e", &self.spec.e)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .finish()
    }
}

/// Builds GF(p^e) under the process-wide cap.
pub fn build_field(p: u32, e: u32) -> Result<Arc<Field>> {
    build_field_with_cap(p, e, field_cap())
}

pub fn build_field_with_cap(p: u32, e: u32, cap: u64) -> Result<Arc<Field>> {
    Field::new(p, e, cap).map(Arc::new)
}

/// Maps exponent `i` of a primitive element of GF(q^h) to the exponent of the
/// same-order element `α^(i (q^m-1)/(q^h-1))` of GF(q^m).
pub fn embed_exponent(q: u64, i: u64, h: u32, m: u32) -> Result<u64> {
    if h == 0 || !m.is_multiple_of(h) {
        return Err(Error::NotADivisor {
            divisor: h as u64,
            value: m as u64,
        });
    }
    let big = (q as u128).pow(m) - 1;
    let small = (q as u128).pow(h) - 1;
    let scaled = (i as u128) * (big / small);
    u64::try_from(scaled).map_err(|_| Error::TooLarge {
        size: scaled,
        limit: u64::MAX,
    })
}

impl Field {
    fn new(p: u32, e: u32, cap: u64) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::BadParameters("field degree must be positive".into()));
        }
        let size = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if size > cap as u128 || size >= ZERO_RAW as u128 {
            return Err(Error::FieldTooLarge { size, cap });
        }
        let size = size as u64;
        let modulus = first_irreducible(p, e)?;
        let basis = PolyBasis::new(p, e, &modulus);
        let order = (size - 1) as u32;
        let primitive = (1..size as u32)
            .find(|&g| basis.is_primitive(g, order as u64))
            .ok_or_else(|| Error::Internal("no primitive element found".into()))?;

        let mut exp = vec![0u32; order as usize];
        let mut log = vec![ZERO_RAW; size as usize];
        let gen = basis.decode(primitive);
        let mut cur = vec![0u32; e as usize];
        cur[0] = 1;
        let mut scratch = basis.scratch();
        for k in 0..order {
            let enc = basis.encode(&cur);
            if log[enc as usize] != ZERO_RAW {
                return Err(Error::Internal(format!(
                    "exponent table is not a bijection at k = {k}"
                )));
            }
            exp[k as usize] = enc;
            log[enc as usize] = k;
            basis.mul_assign(&mut cur, &gen, &mut scratch);
        }
        if basis.encode(&cur) != 1 {
            return Err(Error::Internal("primitive element has wrong order".into()));
        }

        let zech = exp
            .iter()
            .map(|&enc| {
                let c0 = enc % p;
                let shifted = enc - c0 + (c0 + 1) % p;
                log[shifted as usize]
            })
            .collect();
        let neg_one = log[(p - 1) as usize];
        Ok(Field {
            spec: FieldSpec { p, e, size },
            modulus,
            primitive,
            order,
            exp,
            log,
            zech,
            neg_one,
        })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.e
    }

    pub fn size(&self) -> u64 {
        self.spec.size
    }

    /// Order of the multiplicative group, `size - 1`.
    pub fn order(&self) -> u64 {
        self.order as u64
    }

    /// Modulus coefficients over GF(p), constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Polynomial-basis encoding of α (base-p digits, constant digit lowest).
    pub fn primitive_encoding(&self) -> u32 {
        self.primitive
    }

    pub fn same_as(&self, other: &Field) -> bool {
        std::ptr::eq(self, other)
            || (self.spec == other.spec
                && self.modulus == other.modulus
                && self.primitive == other.primitive)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// α^k, with `k` reduced modulo the group order.
    pub fn alpha_pow(&self, k: u64) -> FieldElement {
        FieldElement((k % self.order as u64) as u32)
    }

    /// The prime-field element `v mod p`.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let p = self.spec.p as i64;
        self.from_encoding(v.rem_euclid(p) as u32)
    }

    pub fn from_encoding(&self, enc: u32) -> FieldElement {
        FieldElement(self.log[enc as usize])
    }

    pub fn encoding(&self, a: FieldElement) -> u32 {
        match a.log() {
            None => 0,
            Some(k) => self.exp[k as usize],
        }
    }

    /// The integer value of `a` if it lies in the prime field.
    pub fn prime_value(&self, a: FieldElement) -> Option<u32> {
        let enc = self.encoding(a);
        (enc < self.spec.p).then_some(enc)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let d = if b.0 >= a.0 { b.0 - a.0 } else { b.0 + self.order - a.0 };
        let z = self.zech[d as usize];
        if z == ZERO_RAW {
            FieldElement::ZERO
        } else {
            FieldElement(self.add_logs(a.0, z))
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.is_zero() {
            a
        } else {
            FieldElement(self.add_logs(a.0, self.neg_one))
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            FieldElement::ZERO
        } else {
            FieldElement(self.add_logs(a.0, b.0))
        }
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        let k = a.log()?;
        Some(FieldElement(if k == 0 { 0 } else { self.order - k }))
    }

    /// Panics when `b` is zero, like integer division.
    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inv = self.inv(b).expect("division by zero field element");
        self.mul(a, inv)
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        match a.log() {
            None if k == 0 => FieldElement::ONE,
            None => FieldElement::ZERO,
            Some(l) => {
                let e = (l as u128 * k as u128) % self.order as u128;
                FieldElement(e as u32)
            }
        }
    }

    /// x ↦ x^p.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.spec.p as u64)
    }

    /// All elements: zero first, then α^0, α^1, ….
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::ZERO).chain((0..self.order).map(FieldElement))
    }

    pub fn multiplicative_order_of(&self, a: FieldElement) -> Option<u64> {
        let k = a.log()? as u64;
        let n = self.order as u64;
        Some(n / gcd(k, n))
    }

    /// Index `N = (size - 1)/(q - 1)` of GF(q)^* inside this field's group.
    pub fn subfield_index(&self, q: u64) -> Result<u64> {
        let not_sub = || Error::NotASubfield {
            q,
            size: self.spec.size,
        };
        let (p, e) = crate::arith::prime_power(q).ok_or_else(not_sub)?;
        if p != self.spec.p as u64 || !self.spec.e.is_multiple_of(e) {
            return Err(not_sub());
        }
        Ok(self.order as u64 / (q - 1))
    }

    pub fn in_subfield(&self, a: FieldElement, q: u64) -> Result<bool> {
        let n = self.subfield_index(q)?;
        Ok(match a.log() {
            None => true,
            Some(k) => (k as u64).is_multiple_of(n),
        })
    }

    /// The primitive element α^N of GF(q) inside this field.
    pub fn subfield_generator(&self, q: u64) -> Result<FieldElement> {
        Ok(self.alpha_pow(self.subfield_index(q)?))
    }

    /// β = α^((size-1)/n), a primitive n-th root of unity.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        let order = self.order as u64;
        if n == 0 || !order.is_multiple_of(n) {
            return Err(Error::NotADivisor {
                divisor: n,
                value: order,
            });
        }
        Ok(self.alpha_pow(order / n))
    }

    /// N(x) = x^((size-1)/(q-1)), the norm down to the subfield GF(q).
    pub fn norm_to_subfield(&self, x: FieldElement, q: u64) -> Result<FieldElement> {
        let n = self.subfield_index(q)?;
        Ok(self.pow(x, n))
    }

    /// Tr(x) = x + x^p + … + x^(p^(e-1)).
    pub fn trace_to_prime_field(&self, x: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        let mut y = x;
        for _ in 0..self.spec.e {
            acc = self.add(acc, y);
            y = self.frobenius(y);
        }
        acc
    }

    /// A field homomorphism from `self` into `big`, which must contain a copy
    /// of `self`. The image of α is the root of α's minimal polynomial over
    /// GF(p) of the form `α_big^(N u)` with the least `u`.
    pub fn embedding_into(self: &Arc<Self>, big: &Arc<Field>) -> Result<FieldEmbedding> {
        let (ps, es) = (self.spec.p, self.spec.e);
        if big.spec.p != ps || !big.spec.e.is_multiple_of(es) {
            return Err(Error::NotASubfield {
                q: self.spec.size,
                size: big.spec.size,
            });
        }
        if self.same_as(big) {
            return Ok(FieldEmbedding {
                scale: 1,
                target_order: big.order(),
            });
        }
        let minpoly = self.minimal_polynomial_over_prime(self.alpha_pow(1));
        let ints: Vec<i64> = minpoly
            .coeffs()
            .iter()
            .map(|&c| {
                self.prime_value(c)
                    .map(|v| v as i64)
                    .ok_or_else(|| Error::Internal("minimal polynomial leaves GF(p)".into()))
            })
            .collect::<Result<_>>()?;
        let image_poly = Polynomial::from_ints(big.clone(), &ints);
        let step = big.order() / self.order();
        for u in 1..self.order().max(2) {
            if gcd(u, self.order()) != 1 {
                continue;
            }
            let scale = embed_exponent(ps as u64, u, es, big.spec.e)?;
            debug_assert_eq!(scale, step * u);
            if image_poly.eval(big.alpha_pow(scale)).is_zero() {
                return Ok(FieldEmbedding {
                    scale,
                    target_order: big.order(),
                });
            }
        }
        Err(Error::Internal("no image for the primitive element".into()))
    }

    /// Minimal polynomial of `a` over GF(p): the product over its Frobenius orbit.
    pub fn minimal_polynomial_over_prime(self: &Arc<Self>, a: FieldElement) -> Polynomial {
        let mut conj = vec![a];
        let mut y = self.frobenius(a);
        while y != a {
            conj.push(y);
            y = self.frobenius(y);
        }
        let mut poly = Polynomial::one(self.clone());
        for c in conj {
            poly.mul_linear_assign(c);
        }
        poly
    }

    #[inline]
    fn add_logs(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.order as u64 {
            (s - self.order as u64) as u32
        } else {
            s as u32
        }
    }
}

/// Exponent-level image of one field inside a larger one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldEmbedding {
    scale: u64,
    target_order: u64,
}

impl FieldEmbedding {
    /// Log of the image of α.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn map_log(&self, k: u64) -> u64 {
        ((k as u128 * self.scale as u128) % self.target_order as u128) as u64
    }

    pub fn map(&self, a: FieldElement) -> FieldElement {
        match a.log() {
            None => FieldElement::ZERO,
            Some(k) => FieldElement(self.map_log(k as u64) as u32),
        }
    }
}

/// Monic degree-e irreducible over GF(p): lower coefficients scanned as a
/// base-p counter with the constant term as the fastest digit.
fn first_irreducible(p: u32, e: u32) -> Result<Vec<u32>> {
    if e == 1 {
        return Ok(vec![0, 1]);
    }
    let prime = build_field_with_cap(p, 1, u64::MAX)?;
    let count = (p as u64).pow(e);
    for c in 0..count {
        if c % p as u64 == 0 {
            continue;
        }
        let mut digits = Vec::with_capacity(e as usize + 1);
        let mut r = c;
        for _ in 0..e {
            digits.push((r % p as u64) as u32);
            r /= p as u64;
        }
        digits.push(1);
        let ints: Vec<i64> = digits.iter().map(|&d| d as i64).collect();
        let poly = Polynomial::from_ints(prime.clone(), &ints);
        if poly.is_irreducible(p as u64)? {
            return Ok(digits);
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {e} over GF({p})")))
}

/// Polynomial-basis arithmetic used only while building the tables.
struct PolyBasis {
    p: u32,
    e: usize,
    low: Vec<u32>,
}

struct Scratch {
    acc: Vec<u32>,
    shifted: Vec<u32>,
}

impl PolyBasis {
    fn new(p: u32, e: u32, modulus: &[u32]) -> Self {
        PolyBasis {
            p,
            e: e as usize,
            low: modulus[..e as usize].to_vec(),
        }
    }

    fn scratch(&self) -> Scratch {
        Scratch {
            acc: vec![0; self.e],
            shifted: vec![0; self.e],
        }
    }

    fn decode(&self, mut enc: u32) -> Vec<u32> {
        let mut out = vec![0; self.e];
        for d in out.iter_mut() {
            *d = enc % self.p;
            enc /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn mul_x(&self, a: &mut [u32]) {
        let top = a[self.e - 1];
        for i in (1..self.e).rev() {
            a[i] = a[i - 1];
        }
        a[0] = 0;
        if top != 0 {
            let p = self.p;
            for (ai, &li) in a.iter_mut().zip(&self.low) {
                *ai = (*ai + p - (top * li) % p) % p;
            }
        }
    }

    /// a ← a·g, cost proportional to e·deg(g).
    fn mul_assign(&self, a: &mut [u32], g: &[u32], s: &mut Scratch) {
        let deg = g.iter().rposition(|&d| d != 0).unwrap_or(0);
        s.acc.iter_mut().for_each(|d| *d = 0);
        s.shifted.copy_from_slice(a);
        for (j, &gj) in g.iter().enumerate().take(deg + 1) {
            if gj != 0 {
                for (acc, &sh) in s.acc.iter_mut().zip(&s.shifted) {
                    *acc = (*acc + gj * sh) % self.p;
                }
            }
            if j < deg {
                self.mul_x(&mut s.shifted);
            }
        }
        a.copy_from_slice(&s.acc);
    }

    fn pow(&self, g: u32, mut k: u64) -> Vec<u32> {
        let mut s = self.scratch();
        let mut acc = vec![0; self.e];
        acc[0] = 1;
        let mut base = self.decode(g);
        while k > 0 {
            if k & 1 == 1 {
                self.mul_assign(&mut acc, &base, &mut s);
            }
            let b2 = base.clone();
            self.mul_assign(&mut base, &b2, &mut s);
            k >>= 1;
        }
        acc
    }

    fn is_primitive(&self, g: u32, order: u64) -> bool {
        let one = self.decode(1);
        if self.pow(g, order) != one {
            return false;
        }
        prime_factors(order)
            .into_iter()
            .all(|r| self.pow(g, order / r) != one)
    }
}
