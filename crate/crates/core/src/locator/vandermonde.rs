//! Closed-form inverses of Vandermonde matrices and the S_j row sums.

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

pub type Matrix = Vec<Vec<FieldElement>>;

/// Distinct nonzero points together with the elementary symmetric values
/// `U_{k,i}` of all points except `x_i`.
#[derive(Debug, Clone)]
pub struct VandermondeSystem {
    points: Vec<FieldElement>,
    /// `sym[i][k] = U_{k,i}`, `0 <= k < r`.
    sym: Vec<Vec<FieldElement>>,
    /// `denom[i] = ∏_{k≠i} (x_i - x_k)`.
    denom: Vec<FieldElement>,
}

pub fn check_points(points: &[FieldElement]) -> Result<()> {
    for (i, &x) in points.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::ZeroPoint(i));
        }
        if points[..i].contains(&x) {
            return Err(Error::DuplicatePoint(i));
        }
    }
    Ok(())
}

impl VandermondeSystem {
    pub fn new(f: &Field, points: &[FieldElement]) -> Result<Self> {
        check_points(points)?;
        let r = points.len();
        let mut sym = Vec::with_capacity(r);
        let mut denom = Vec::with_capacity(r);
        for i in 0..r {
            // e[k] is the k-th elementary symmetric value of the other points
            let mut e = vec![FieldElement::ZERO; r];
            e[0] = FieldElement::ONE;
            let mut d = FieldElement::ONE;
            let mut used = 0;
            for (k, &xk) in points.iter().enumerate() {
                if k == i {
                    continue;
                }
                used += 1;
                for s in (1..=used).rev() {
                    e[s] = f.add(e[s], f.mul(e[s - 1], xk));
                }
                d = f.mul(d, f.sub(points[i], xk));
            }
            sym.push(e);
            denom.push(d);
        }
        Ok(VandermondeSystem {
            points: points.to_vec(),
            sym,
            denom,
        })
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn elementary_symmetric(&self, k: usize, i: usize) -> FieldElement {
        self.sym[i][k]
    }

    /// `M^{-1}` for `M_{ij} = x_j^{i}` (rows indexed from power 0):
    /// `(M^{-1})_{ij} = (-1)^{r-1-j} U_{r-1-j,i} / ∏_{k≠i}(x_i - x_k)`.
    pub fn inverse(&self, f: &Field) -> Matrix {
        let r = self.points.len();
        (0..r)
            .map(|i| {
                let inv_d = f.inv(self.denom[i]).expect("distinct points");
                (0..r)
                    .map(|j| {
                        let k = r - 1 - j;
                        let u = self.sym[i][k];
                        let signed = if k % 2 == 1 { f.neg(u) } else { u };
                        f.mul(signed, inv_d)
                    })
                    .collect()
            })
            .collect()
    }

    /// `V^{-1}` for `V_{ij} = x_j^{i+1}`: row i of `M^{-1}` scaled by `x_i^{-1}`.
    pub fn modified_inverse(&self, f: &Field) -> Matrix {
        let mut inv = self.inverse(f);
        for (row, &x) in inv.iter_mut().zip(&self.points) {
            let xi = f.inv(x).expect("nonzero point");
            for c in row.iter_mut() {
                *c = f.mul(*c, xi);
            }
        }
        inv
    }
}

pub fn vandermonde_matrix(f: &Field, points: &[FieldElement]) -> Matrix {
    let r = points.len();
    (0..r)
        .map(|i| points.iter().map(|&x| f.pow(x, i as u64)).collect())
        .collect()
}

pub fn modified_vandermonde_matrix(f: &Field, points: &[FieldElement]) -> Matrix {
    let r = points.len();
    (0..r)
        .map(|i| points.iter().map(|&x| f.pow(x, i as u64 + 1)).collect())
        .collect()
}

pub fn vandermonde_inverse(f: &Field, points: &[FieldElement]) -> Result<Matrix> {
    Ok(VandermondeSystem::new(f, points)?.inverse(f))
}

pub fn modified_vandermonde_inverse(f: &Field, points: &[FieldElement]) -> Result<Matrix> {
    Ok(VandermondeSystem::new(f, points)?.modified_inverse(f))
}

pub fn mat_mul(f: &Field, a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, |row| row.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(FieldElement::ZERO, |acc, (&x, brow)| f.add(acc, f.mul(x, brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn is_identity(m: &Matrix) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row.iter().enumerate().all(|(j, &c)| {
                if i == j {
                    c == FieldElement::ONE
                } else {
                    c.is_zero()
                }
            })
    })
}

/// `S_i = ∏_{k≠i}(1 - x_k) / (x_i ∏_{k≠i}(x_i - x_k))`.
pub fn s_values(f: &Field, points: &[FieldElement]) -> Result<Vec<FieldElement>> {
    check_points(points)?;
    if let Some(i) = points.iter().position(|&x| x == FieldElement::ONE) {
        return Err(Error::PointIsOne(i));
    }
    let one_minus: Vec<FieldElement> = points.iter().map(|&x| f.sub(f.one(), x)).collect();
    Ok(points
        .iter()
        .enumerate()
        .map(|(i, &xi)| {
            let mut num = FieldElement::ONE;
            let mut den = xi;
            for (k, &xk) in points.iter().enumerate() {
                if k != i {
                    num = f.mul(num, one_minus[k]);
                    den = f.mul(den, f.sub(xi, xk));
                }
            }
            f.div(num, den)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    #[test]
    fn one_by_one() {
        let f = build_field(3, 3).unwrap();
        let a = f.alpha_pow(5);
        assert_eq!(vandermonde_inverse(&f, &[a]).unwrap(), vec![vec![f.one()]]);
        assert_eq!(
            modified_vandermonde_inverse(&f, &[a]).unwrap(),
            vec![vec![f.inv(a).unwrap()]]
        );
    }

    #[test]
    fn two_points_over_gf5() {
        let f = build_field(5, 1).unwrap();
        let pts = [f.from_int(2), f.from_int(3)];
        let inv = vandermonde_inverse(&f, &pts).unwrap();
        assert!(is_identity(&mat_mul(&f, &vandermonde_matrix(&f, &pts), &inv)));
    }

    #[test]
    fn corner_entry_of_four_by_four() {
        let f = build_field(3, 3).unwrap();
        let x: Vec<_> = [1u64, 4, 9, 20].iter().map(|&k| f.alpha_pow(k)).collect();
        let inv = modified_vandermonde_inverse(&f, &x).unwrap();
        let mut den = x[0];
        for k in 1..4 {
            den = f.mul(den, f.sub(x[0], x[k]));
        }
        assert_eq!(inv[0][3], f.inv(den).unwrap());
    }

    #[test]
    fn point_errors() {
        let f = build_field(3, 2).unwrap();
        let a = f.alpha_pow(1);
        assert_eq!(s_values(&f, &[a, f.zero()]), Err(Error::ZeroPoint(1)));
        assert_eq!(s_values(&f, &[a, a]), Err(Error::DuplicatePoint(1)));
        assert_eq!(s_values(&f, &[f.one(), a]), Err(Error::PointIsOne(0)));
        assert!(vandermonde_inverse(&f, &[f.one(), a]).is_ok());
    }
}
