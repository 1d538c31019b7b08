//! Brute-force minimum distance of small codes, independent of the
//! certificate machinery.

use serde::Serialize;

use crate::bch::{BchCode, Codeword};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// Largest message space enumerated by [`min_distance_full`].
pub const FULL_ENUMERATION_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FullEnumeration,
    SupportEnumeration,
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub d: usize,
    pub witness: Codeword,
    pub method: Method,
    /// Messages or supports examined.
    pub enumerated: u64,
}

#[derive(Debug, Clone)]
pub enum SupportOutcome {
    Found(OracleResult),
    /// No codeword of weight at most `w_max`; d is at least the payload.
    LowerBoundOnly(usize),
}

fn better(weight: usize, support: &[usize], best: &Option<(usize, Vec<usize>, Vec<FieldElement>)>) -> bool {
    match best {
        None => true,
        Some((w, s, _)) => weight < *w || (weight == *w && support < &s[..]),
    }
}

/// Exact minimum distance by enumerating all `q^k` messages.
///
/// Messages are written over GF(p) in the basis `γ^l x^j g(x)` and visited
/// in modular Gray order, so each step adds a single row.
pub fn min_distance_full(code: &BchCode) -> Result<OracleResult> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::DegenerateCode);
    }
    let total = (code.q() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > FULL_ENUMERATION_LIMIT as u128 {
        return Err(Error::TooLarge {
            size: total,
            limit: FULL_ENUMERATION_LIMIT,
        });
    }
    let f: &Field = code.field();
    let n = code.n();
    let p = code.characteristic() as u64;
    let e = code.q_degree() as usize;
    let g = code.generator().coeffs();

    // row d = γ^(d mod e) x^(d / e) g(x)
    let rows: Vec<(usize, Vec<FieldElement>)> = (0..k * e)
        .map(|d| {
            let b = code.subfield_element((d % e) as u64);
            (d / e, g.iter().map(|&c| f.mul(b, c)).collect())
        })
        .collect();

    let mut word = vec![FieldElement::ZERO; n];
    let mut weight = 0usize;
    let mut best: Option<(usize, Vec<usize>, Vec<FieldElement>)> = None;
    for s in 1..total as u64 {
        let mut digit = 0;
        let mut r = s;
        while r % p == 0 {
            r /= p;
            digit += 1;
        }
        let (shift, row) = &rows[digit];
        for (t, &c) in row.iter().enumerate() {
            let pos = shift + t;
            let old = word[pos];
            let new = f.add(old, c);
            word[pos] = new;
            match (old.is_zero(), new.is_zero()) {
                (true, false) => weight += 1,
                (false, true) => weight -= 1,
                _ => {}
            }
        }
        if best.as_ref().is_none_or(|(w, _, _)| weight <= *w) {
            let support: Vec<usize> = (0..n).filter(|&i| !word[i].is_zero()).collect();
            if better(weight, &support, &best) {
                best = Some((weight, support, word.clone()));
            }
        }
    }
    let (d, _, dense) = best.ok_or(Error::DegenerateCode)?;
    Ok(OracleResult {
        d,
        witness: Codeword::from_dense(&dense),
        method: Method::FullEnumeration,
        enumerated: total as u64,
    })
}

/// Kernel of a matrix over `f` when it is one-dimensional; `None` when the
/// kernel is trivial, `Err` when it is larger.
fn one_dim_kernel(f: &Field, mut a: Vec<Vec<FieldElement>>, cols: usize) -> Result<Option<Vec<FieldElement>>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        let inv = f.inv(a[row][col]).expect("nonzero pivot");
        for c in a[row].iter_mut() {
            *c = f.mul(*c, inv);
        }
        let pivot = a[row].clone();
        for (r, line) in a.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let factor = line[col];
                for (x, &y) in line.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    match free.len() {
        0 => Ok(None),
        1 => {
            let fc = free[0];
            let mut v = vec![FieldElement::ZERO; cols];
            v[fc] = FieldElement::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(a[r][fc]);
            }
            Ok(Some(v))
        }
        _ => Err(Error::Internal(
            "support kernel has dimension above one below the minimum weight".into(),
        )),
    }
}

/// Smallest weight `w ≤ w_max` of a codeword, found by scanning supports
/// that contain position 0 and solving the parity system `[β^{s i}]`,
/// `s ∈ T`, on each. At most `budget` supports are examined.
pub fn min_distance_support(code: &BchCode, w_max: usize, budget: u64) -> Result<SupportOutcome> {
    let start = code.bch_bound();
    let n = code.n();
    if w_max < start || code.dimension() == 0 {
        return Ok(SupportOutcome::LowerBoundOnly(w_max + 1));
    }
    let f = code.field();
    let t = code.defining_set();
    let mut examined = 0u64;
    for w in start..=w_max.min(n) {
        let mut rest: Vec<usize> = (1..w).collect();
        loop {
            if examined >= budget {
                return Err(Error::BudgetExceeded { budget });
            }
            examined += 1;
            let support: Vec<usize> = std::iter::once(0).chain(rest.iter().copied()).collect();
            let matrix: Vec<Vec<FieldElement>> = t
                .iter()
                .map(|&s| {
                    support
                        .iter()
                        .map(|&i| code.beta_pow((s * i % n) as u64))
                        .collect()
                })
                .collect();
            if let Some(v) = one_dim_kernel(f, matrix, w)? {
                let lead = f.inv(v[0]);
                if let Some(lead) = lead {
                    let v: Vec<FieldElement> = v.iter().map(|&x| f.mul(x, lead)).collect();
                    if v.iter().all(|&x| !x.is_zero() && code.in_base_field(x)) {
                        let witness = Codeword::new(n, support.into_iter().zip(v).collect());
                        return Ok(SupportOutcome::Found(OracleResult {
                            d: w,
                            witness,
                            method: Method::SupportEnumeration,
                            enumerated: examined,
                        }));
                    }
                }
            }
            if !advance(&mut rest, n) {
                break;
            }
        }
    }
    Ok(SupportOutcome::LowerBoundOnly(w_max + 1))
}

fn advance(idx: &mut [usize], hi: usize) -> bool {
    let k = idx.len();
    for pos in (0..k).rev() {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bch::build_code;

    #[test]
    fn full_enumeration_examples() {
        let c = build_code(3, 13, 4, 1).unwrap();
        let r = min_distance_full(&c).unwrap();
        assert_eq!((r.d, r.enumerated), (4, 2187));
        assert!(c.is_codeword(&r.witness).unwrap());
        assert_eq!(r.witness.weight(), 4);
        let c = build_code(2, 15, 5, 1).unwrap();
        assert_eq!(min_distance_full(&c).unwrap().d, 5);
    }

    #[test]
    fn degenerate_and_large() {
        let c = build_code(3, 26, 26, 1).unwrap();
        assert_eq!(c.dimension(), 1);
        assert_eq!(min_distance_full(&c).unwrap().d, 26);
        let c = build_code(2, 15, 15, 0).unwrap();
        assert_eq!(c.dimension(), 0);
        assert_eq!(min_distance_full(&c).unwrap_err(), Error::DegenerateCode);
        let c = build_code(3, 80, 5, 1).unwrap();
        assert!(matches!(min_distance_full(&c), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn support_examples() {
        let c = build_code(3, 26, 5, 1).unwrap();
        match min_distance_support(&c, 5, u64::MAX).unwrap() {
            SupportOutcome::Found(r) => {
                assert_eq!(r.d, 5);
                assert!(c.is_codeword(&r.witness).unwrap());
            }
            other => panic!("{other:?}"),
        }
        let c = build_code(4, 15, 6, 1).unwrap();
        match min_distance_support(&c, 6, u64::MAX).unwrap() {
            SupportOutcome::Found(r) => assert_eq!(r.d, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            min_distance_support(&c, 3, u64::MAX).unwrap(),
            SupportOutcome::LowerBoundOnly(4)
        ));
    }

    #[test]
    fn oracles_agree() {
        for (q, n, delta) in [(3, 13, 4), (2, 15, 5), (4, 15, 5), (2, 15, 7), (3, 8, 3)] {
            let c = build_code(q, n, delta, 1).unwrap();
            let full = min_distance_full(&c).unwrap();
            match min_distance_support(&c, full.d, u64::MAX).unwrap() {
                SupportOutcome::Found(r) => assert_eq!(r.d, full.d, "{q} {n} {delta}"),
                other => panic!("{other:?}"),
            }
        }
    }
}
