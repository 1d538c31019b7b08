//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::sync::Arc;

use crate::arith::{lcm, prime_factors};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// Fields up to this size are searched for roots element by element.
pub const ROOT_SCAN_LIMIT: u64 = 1 << 16;

/// Coefficients are stored constant term first with no trailing zeros.
#[derive(Clone)]
pub struct Polynomial {
    field: Arc<Field>,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn new(field: Arc<Field>, coeffs: Vec<FieldElement>) -> Self {
        let mut p = Polynomial { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: Arc<Field>) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Arc<Field>) -> Self {
        Self::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: Arc<Field>, c: FieldElement) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: Arc<Field>) -> Self {
        Self::monomial(field, FieldElement::ONE, 1)
    }

    pub fn monomial(field: Arc<Field>, c: FieldElement, degree: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        Self::new(field, coeffs)
    }

    /// Polynomial with prime-field coefficients `ints[i] mod p` on `x^i`.
    pub fn from_ints(field: Arc<Field>, ints: &[i64]) -> Self {
        let coeffs = ints.iter().map(|&v| field.from_int(v)).collect();
        Self::new(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    fn check_field(&self, other: &Polynomial) -> Result<()> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Polynomial::new(self.field.clone(), coeffs))
    }

    pub fn neg(&self) -> Polynomial {
        let f = &self.field;
        Polynomial {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        let f = &self.field;
        Polynomial::new(
            self.field.clone(),
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field.clone()));
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Polynomial::new(self.field.clone(), out))
    }

    /// self ← self·(x - root).
    pub fn mul_linear_assign(&mut self, root: FieldElement) {
        if self.is_zero() {
            return;
        }
        let f = self.field.clone();
        let neg_root = f.neg(root);
        self.coeffs.push(FieldElement::ZERO);
        for i in (0..self.coeffs.len()).rev() {
            let lower = if i == 0 {
                FieldElement::ZERO
            } else {
                self.coeffs[i - 1]
            };
            self.coeffs[i] = f.add(lower, f.mul(self.coeffs[i], neg_root));
        }
        self.trim();
    }

    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(self.field.clone()), self.clone()));
        }
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quot[i] = t;
            let nt = f.neg(t);
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.add(rem[i + j], f.mul(nt, d));
            }
        }
        rem.truncate(dd);
        Ok((
            Polynomial::new(self.field.clone(), quot),
            Polynomial::new(self.field.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn monic(&self) -> Polynomial {
        match self.field.inv(self.leading()) {
            None => self.clone(),
            Some(inv) => self.scale(inv),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Polynomial) -> Result<Polynomial> {
        self.check_field(modulus)?;
        let mut base = self.rem(modulus)?;
        let mut acc = Polynomial::one(self.field.clone()).rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?.rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Formal derivative; the coefficient `i·a_i` is taken modulo p.
    pub fn derivative(&self) -> Polynomial {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        Polynomial::new(self.field.clone(), coeffs)
    }

    /// f(x + c).
    pub fn shift(&self, c: FieldElement) -> Polynomial {
        let lin = Polynomial::new(self.field.clone(), vec![c, FieldElement::ONE]);
        let mut acc = Polynomial::zero(self.field.clone());
        for &a in self.coeffs.iter().rev() {
            acc = acc
                .mul(&lin)
                .and_then(|p| p.add(&Polynomial::constant(self.field.clone(), a)))
                .expect("same field");
        }
        acc
    }

    /// x^deg · f(1/x).
    pub fn reciprocal(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::new(self.field.clone(), coeffs)
    }

    pub fn is_separable(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }

    fn check_over_subfield(&self, q: u64) -> Result<()> {
        for &c in &self.coeffs {
            if !self.field.in_subfield(c, q)? {
                return Err(Error::NotOverSubfield { q });
            }
        }
        Ok(())
    }

    /// Successive Frobenius images `x^(q^k) mod self` for `k = 1..=count`.
    fn frobenius_powers(&self, q: u64, count: usize) -> Result<Vec<Polynomial>> {
        let x = Polynomial::x(self.field.clone());
        let mut out = Vec::with_capacity(count);
        let mut cur = x.rem(self)?;
        for _ in 0..count {
            cur = cur.pow_mod(q, self)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// Rabin's test over the subfield GF(q): `x^(q^d) ≡ x` and
    /// `gcd(x^(q^(d/r)) - x, f) = 1` for every prime `r | d`.
    pub fn is_irreducible(&self, q: u64) -> Result<bool> {
        self.check_over_subfield(q)?;
        let d = match self.degree() {
            None | Some(0) => return Ok(false),
            Some(d) => d,
        };
        if d == 1 {
            return Ok(true);
        }
        let x = Polynomial::x(self.field.clone()).rem(self)?;
        let powers = self.frobenius_powers(q, d)?;
        if powers[d - 1] != x {
            return Ok(false);
        }
        for r in prime_factors(d as u64) {
            let k = d / r as usize;
            let g = powers[k - 1].sub(&x)?.gcd(self)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest `k >= 1` with `x^(q^k) ≡ x mod f`; the degree over GF(q) of
    /// the splitting field of a separable `f`.
    pub fn splitting_field_degree(&self, q: u64) -> Result<u64> {
        self.check_over_subfield(q)?;
        if !self.is_separable()? {
            return Err(Error::NotSeparable);
        }
        let d = self.degree().unwrap_or(0) as u64;
        if d <= 1 {
            return Ok(1);
        }
        // The true value is the lcm of the irreducible factor degrees.
        let cap = (1..=d).fold(1u64, |acc, i| lcm(acc, i).min(u64::MAX / (d + 1)));
        let x = Polynomial::x(self.field.clone()).rem(self)?;
        let mut cur = x.clone();
        for k in 1..=cap {
            cur = cur.pow_mod(q, self)?;
            if cur == x {
                return Ok(k);
            }
        }
        Err(Error::Internal("splitting degree search exceeded its cap".into()))
    }

    /// All roots in the polynomial's own field, sorted by exponent (zero
    /// last). Multiplicities are ignored.
    pub fn roots_in_field(&self) -> Result<Vec<FieldElement>> {
        if self.field.size() <= ROOT_SCAN_LIMIT {
            self.roots_by_scan()
        } else {
            self.roots_by_splitting()
        }
    }

    pub fn roots_by_scan(&self) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots: Vec<FieldElement> = self
            .field
            .elements()
            .filter(|&y| self.eval(y).is_zero())
            .collect();
        roots.sort();
        Ok(roots)
    }

    /// gcd with `x^|F| - x`, then deterministic equal-degree splitting.
    pub fn roots_by_splitting(&self) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let field = self.field.clone();
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let x = Polynomial::x(field.clone());
        let xq = x.pow_mod(field.size(), self)?;
        let g = xq.sub(&x)?.gcd(self)?;
        let mut roots = Vec::new();
        split_linear(&g, &mut roots)?;
        roots.sort();
        Ok(roots)
    }
}

/// Collects the roots of a squarefree product of distinct linear factors.
fn split_linear(g: &Polynomial, roots: &mut Vec<FieldElement>) -> Result<()> {
    let field = g.field.clone();
    match g.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            let g = g.monic();
            roots.push(field.neg(g.coeff(0)));
            return Ok(());
        }
        Some(_) => {}
    }
    let odd = field.characteristic() != 2;
    for k in 0..field.order() {
        let a = field.alpha_pow(k);
        let probe = if odd {
            let lin = Polynomial::new(field.clone(), vec![a, FieldElement::ONE]);
            lin.pow_mod(field.order() / 2, g)?
                .sub(&Polynomial::one(field.clone()))?
        } else {
            // absolute trace of a·x, as a polynomial mod g
            let mut term = Polynomial::monomial(field.clone(), a, 1).rem(g)?;
            let mut acc = term.clone();
            for _ in 1..field.degree() {
                term = term.mul(&term)?.rem(g)?;
                acc = acc.add(&term)?;
            }
            acc
        };
        let h = probe.gcd(g)?;
        if let Some(dh) = h.degree() {
            if dh > 0 && Some(dh) < g.degree() {
                let (other, _) = g.div_rem(&h)?;
                split_linear(&h, roots)?;
                split_linear(&other, roots)?;
                return Ok(());
            }
        }
    }
    Err(Error::Internal("equal-degree splitting did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    fn ints(f: &Arc<Field>, v: &[i64]) -> Polynomial {
        Polynomial::from_ints(f.clone(), v)
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = build_field(3, 1).unwrap();
        let a = ints(&f, &[1, 0, 2]);
        let g = a.gcd(&Polynomial::zero(f.clone())).unwrap();
        assert_eq!(g, a.monic());
        assert_eq!(g.leading(), f.one());
    }

    #[test]
    fn evaluations_at_one() {
        let f = build_field(3, 1).unwrap();
        // L(x) = x^3 - x^2 + 1
        assert_eq!(ints(&f, &[1, 0, -1, 1]).eval(f.one()), f.one());
        // Q(x) = x^3 + x^2 + x - 1
        assert_eq!(ints(&f, &[-1, 1, 1, 1]).eval(f.one()), f.from_int(-1));
    }

    #[test]
    fn derivatives() {
        let f = build_field(2, 2).unwrap();
        // L(x) = x^16 - x^15 + 1 over GF(4) has L' = x^14
        let mut l = vec![0i64; 17];
        l[0] = 1;
        l[15] = -1;
        l[16] = 1;
        let d = ints(&f, &l).derivative();
        assert_eq!(d, Polynomial::monomial(f.clone(), f.one(), 14));
        let g = build_field(3, 2).unwrap();
        assert_eq!(ints(&g, &[-1, -1, 0, 1]).derivative(), ints(&g, &[-1]));
        assert!(ints(&g, &[2]).derivative().is_zero());
    }

    #[test]
    fn separability() {
        let f = build_field(3, 1).unwrap();
        assert!(ints(&f, &[1, 0, -1, 1]).is_separable().unwrap());
        assert!(!ints(&f, &[1, -2, 1]).is_separable().unwrap());
        assert_eq!(
            Polynomial::zero(f.clone()).is_separable(),
            Err(Error::ZeroPolynomial)
        );
        let g = build_field(3, 2).unwrap();
        assert!(ints(&g, &[-1, -1, 0, 1]).is_separable().unwrap());
    }

    #[test]
    fn irreducibility_examples() {
        let f = build_field(3, 1).unwrap();
        assert!(ints(&f, &[-1, 1, 1, 1]).is_irreducible(3).unwrap());
        assert!(!ints(&f, &[-1, 0, 1]).is_irreducible(3).unwrap());
        let g = build_field(3, 2).unwrap();
        assert!(ints(&g, &[-1, -1, 0, 1]).is_irreducible(9).unwrap());
        // x^2 + 1 is irreducible over GF(3) but splits over GF(9)
        assert!(ints(&g, &[1, 0, 1]).is_irreducible(3).unwrap());
        assert!(!ints(&g, &[1, 0, 1]).is_irreducible(9).unwrap());
    }

    #[test]
    fn coefficients_must_lie_in_subfield() {
        let g = build_field(3, 2).unwrap();
        let p = Polynomial::new(g.clone(), vec![g.alpha_pow(1), g.one()]);
        assert_eq!(p.is_irreducible(3), Err(Error::NotOverSubfield { q: 3 }));
        assert!(p.is_irreducible(9).unwrap());
    }

    #[test]
    fn roots_examples() {
        let f = build_field(3, 1).unwrap();
        assert!(ints(&f, &[1, 0, 1]).roots_in_field().unwrap().is_empty());
        let f27 = build_field(3, 3).unwrap();
        let l = ints(&f27, &[1, 0, -1, 1]);
        let roots = l.roots_in_field().unwrap();
        assert_eq!(roots.len(), 3);
        assert!(!roots.contains(&f27.zero()) && !roots.contains(&f27.one()));
        let q = ints(&f27, &[-1, 1, 1, 1]);
        let roots = q.roots_in_field().unwrap();
        assert_eq!(roots.len(), 3);
        for r in roots {
            assert_eq!(f27.norm_to_subfield(r, 3).unwrap(), f27.one());
        }
    }

    #[test]
    fn splitting_routes_agree() {
        for (p, e) in [(2, 6), (3, 4), (5, 3), (2, 8)] {
            let f = build_field(p, e).unwrap();
            let polys = [
                ints(&f, &[1, 0, -1, 1]),
                ints(&f, &[-1, 1, 1, 1]),
                ints(&f, &[0, 1, 0, 0, 1, 1]),
                ints(&f, &[1, 1, 1, 1, 1, 0, 0, 1]),
            ];
            for poly in polys {
                assert_eq!(
                    poly.roots_by_scan().unwrap(),
                    poly.roots_by_splitting().unwrap(),
                    "GF({p}^{e}) {poly:?}"
                );
            }
        }
    }

    #[test]
    fn splitting_degrees() {
        let f = build_field(3, 1).unwrap();
        assert_eq!(ints(&f, &[1, 0, -1, 1]).splitting_field_degree(3).unwrap(), 3);
        assert_eq!(ints(&f, &[-1, 0, 1]).splitting_field_degree(3).unwrap(), 1);
        assert_eq!(
            ints(&f, &[1, -2, 1]).splitting_field_degree(3),
            Err(Error::NotSeparable)
        );
    }

    #[test]
    fn field_mismatch() {
        let f = build_field(3, 1).unwrap();
        let g = build_field(3, 2).unwrap();
        assert_eq!(ints(&f, &[1, 1]).add(&ints(&g, &[1])), Err(Error::FieldMismatch));
        assert_eq!(
            ints(&f, &[1, 1]).div_rem(&Polynomial::zero(f.clone())),
            Err(Error::DivisionByZeroPolynomial)
        );
    }
}
