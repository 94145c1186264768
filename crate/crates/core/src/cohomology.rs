//! The cohomology ring of projective space over the rationals.
//!
//! Classes are coefficient vectors over the basis 1, H, ..., H^N, where H
//! is the hyperplane class; the basis element H^k sits in degree 2k. For
//! the plane we write L = H and pt = H^2. The Poincare pairing, its
//! inverse, the dual basis and the triple product F are all computed from
//! this basis so that another even-cohomology ring could slot in.

use crate::rational::rat;
use crate::{Error, Rational, Result};
use num::{One, Zero};

/// An element of H*(P^N, Q) in the basis 1, H, ..., H^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    ambient_dim: usize,
    coeffs: Vec<Rational>,
}

impl CohClass {
    pub fn zero(ambient_dim: usize) -> Self {
        CohClass {
            ambient_dim,
            coeffs: vec![Rational::zero(); ambient_dim + 1],
        }
    }

    /// The basis class H^k.
    pub fn h_power(ambient_dim: usize, k: usize) -> Result<Self> {
        if k > ambient_dim {
            return Err(Error::BadBasisIndex {
                index: k,
                size: ambient_dim + 1,
            });
        }
        let mut c = CohClass::zero(ambient_dim);
        c.coeffs[k] = Rational::one();
        Ok(c)
    }

    pub fn from_coeffs(ambient_dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != ambient_dim + 1 {
            return Err(Error::BadBasisIndex {
                index: coeffs.len(),
                size: ambient_dim + 1,
            });
        }
        Ok(CohClass {
            ambient_dim,
            coeffs,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &CohClass) -> Result<CohClass> {
        check_dims(self, other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CohClass {
            ambient_dim: self.ambient_dim,
            coeffs,
        })
    }

    pub fn scale(&self, s: &Rational) -> CohClass {
        CohClass {
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

fn check_dims(a: &CohClass, b: &CohClass) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch(a.ambient_dim, b.ambient_dim));
    }
    Ok(())
}

/// Cup product: H^i . H^j = H^{i+j} when i+j <= N, zero above the top
/// degree, extended bilinearly.
pub fn cup(a: &CohClass, b: &CohClass) -> Result<CohClass> {
    check_dims(a, b)?;
    let n = a.ambient_dim;
    let mut out = CohClass::zero(n);
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            if i + j <= n && !cb.is_zero() {
                out.coeffs[i + j] += ca * cb;
            }
        }
    }
    Ok(out)
}

/// Pairing with the fundamental class: the coefficient of H^N.
pub fn integrate(a: &CohClass) -> Rational {
    a.coeffs[a.ambient_dim].clone()
}

/// Triple product F(a, b, c) = integral of a . b . c.
pub fn triple_f(a: &CohClass, b: &CohClass, c: &CohClass) -> Result<Rational> {
    Ok(integrate(&cup(&cup(a, b)?, c)?))
}

/// The Poincare pairing matrix g_ij = integral of g_i . g_j together with
/// its exact inverse.
#[derive(Debug, Clone)]
pub struct PairingMatrix {
    pub g: Vec<Vec<Rational>>,
    pub g_inv: Vec<Vec<Rational>>,
}

impl PairingMatrix {
    pub fn new(ambient_dim: usize) -> Self {
        let m = ambient_dim + 1;
        let mut g = vec![vec![Rational::zero(); m]; m];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let gi = CohClass::h_power(ambient_dim, i).unwrap();
                let gj = CohClass::h_power(ambient_dim, j).unwrap();
                *entry = integrate(&cup(&gi, &gj).unwrap());
            }
        }
        let g_inv = invert(&g).expect("Poincare pairing must be invertible");
        PairingMatrix { g, g_inv }
    }
}

/// Exact inverse of a small rational matrix via Gauss-Jordan elimination.
fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { rat(1) } else { rat(0) })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// The dual basis g^i = sum_k g^{ik} g_k; for P^N this is g^i = H^{N-i}.
pub fn dual_basis(ambient_dim: usize) -> Vec<CohClass> {
    let pairing = PairingMatrix::new(ambient_dim);
    (0..=ambient_dim)
        .map(|i| {
            let mut c = CohClass::zero(ambient_dim);
            for (k, entry) in pairing.g_inv[i].iter().enumerate() {
                c.coeffs[k] = entry.clone();
            }
            c
        })
        .collect()
}

/// The product reconstructed from the triple product F against the dual
/// basis: a * b = sum_k F(a, b, g_k) g^k. Identical to the cup product.
pub fn product_via_f(a: &CohClass, b: &CohClass) -> Result<CohClass> {
    check_dims(a, b)?;
    let n = a.ambient_dim;
    let duals = dual_basis(n);
    let mut out = CohClass::zero(n);
    for (k, dual) in duals.iter().enumerate() {
        let gk = CohClass::h_power(n, k)?;
        let f = triple_f(a, b, &gk)?;
        out = out.add(&dual.scale(&f))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn h(n: usize, k: usize) -> CohClass {
        CohClass::h_power(n, k).unwrap()
    }

    #[test]
    fn cup_in_the_plane() {
        // L . L = pt
        assert_eq!(cup(&h(2, 1), &h(2, 1)).unwrap(), h(2, 2));
        // pt . L = 0 (degree exceeds the top)
        assert!(cup(&h(2, 2), &h(2, 1)).unwrap().is_zero());
        // unit law on a random-ish class
        let gamma = CohClass::from_coeffs(2, vec![ratio(2, 3), rat(-1), ratio(5, 7)]).unwrap();
        assert_eq!(cup(&h(2, 0), &gamma).unwrap(), gamma);
    }

    #[test]
    fn cup_rejects_mismatched_dimensions() {
        assert_eq!(
            cup(&h(2, 1), &h(3, 1)),
            Err(Error::DimensionMismatch(2, 3))
        );
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(integrate(&h(2, 2)), rat(1));
        assert_eq!(integrate(&h(2, 1)), rat(0));
        let mixed = CohClass::from_coeffs(2, vec![rat(0), rat(5), rat(3)]).unwrap();
        assert_eq!(integrate(&mixed), rat(3));
    }

    #[test]
    fn pairing_matrix_antidiagonal() {
        for n in 1..=8 {
            let p = PairingMatrix::new(n);
            for i in 0..=n {
                for j in 0..=n {
                    let expected = if i + j == n { rat(1) } else { rat(0) };
                    assert_eq!(p.g[i][j], expected);
                }
            }
            // g . g_inv = identity
            for i in 0..=n {
                for j in 0..=n {
                    let mut s = rat(0);
                    for k in 0..=n {
                        s += &p.g[i][k] * &p.g_inv[k][j];
                    }
                    assert_eq!(s, if i == j { rat(1) } else { rat(0) });
                }
            }
        }
    }

    #[test]
    fn dual_basis_reverses_the_basis() {
        // P^2: (g^0, g^1, g^2) = (pt, L, 1)
        let duals = dual_basis(2);
        assert_eq!(duals, vec![h(2, 2), h(2, 1), h(2, 0)]);
        // P^1: (pt, 1)
        assert_eq!(dual_basis(1), vec![h(1, 1), h(1, 0)]);
        // P^3: integral of g_1 . g^1 = H . H^2 = 1
        let duals3 = dual_basis(3);
        assert_eq!(
            integrate(&cup(&h(3, 1), &duals3[1]).unwrap()),
            rat(1)
        );
    }

    #[test]
    fn dual_basis_pairing_is_kronecker() {
        for n in 1..=5 {
            let duals = dual_basis(n);
            for i in 0..=n {
                for j in 0..=n {
                    let pair = integrate(&cup(&h(n, i), &duals[j]).unwrap());
                    assert_eq!(pair, if i == j { rat(1) } else { rat(0) });
                }
            }
        }
    }

    #[test]
    fn triple_f_examples() {
        // Point mapping table for the plane: <1,1,pt> = <1,L,L> = 1.
        assert_eq!(triple_f(&h(2, 0), &h(2, 0), &h(2, 2)).unwrap(), rat(1));
        assert_eq!(triple_f(&h(2, 0), &h(2, 1), &h(2, 1)).unwrap(), rat(1));
        // Total degree past the top vanishes.
        assert_eq!(triple_f(&h(2, 0), &h(2, 1), &h(2, 2)).unwrap(), rat(0));
        assert_eq!(triple_f(&h(2, 1), &h(2, 1), &h(2, 1)).unwrap(), rat(0));
        // Top class of P^3.
        assert_eq!(triple_f(&h(3, 1), &h(3, 1), &h(3, 1)).unwrap(), rat(1));
    }

    #[test]
    fn product_via_f_equals_cup() {
        for n in 1..=5 {
            for i in 0..=n {
                for j in 0..=n {
                    let a = h(n, i);
                    let b = h(n, j);
                    assert_eq!(
                        product_via_f(&a, &b).unwrap(),
                        cup(&a, &b).unwrap(),
                        "mismatch at N={n}, i={i}, j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn product_via_f_spot_checks() {
        assert_eq!(product_via_f(&h(2, 1), &h(2, 1)).unwrap(), h(2, 2));
        assert_eq!(product_via_f(&h(3, 1), &h(3, 2)).unwrap(), h(3, 3));
        assert!(product_via_f(&h(2, 2), &h(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn cup_associative_commutative_on_basis() {
        for n in 1..=5 {
            for i in 0..=n {
                for j in 0..=n {
                    assert_eq!(cup(&h(n, i), &h(n, j)), cup(&h(n, j), &h(n, i)));
                    for k in 0..=n {
                        let left = cup(&cup(&h(n, i), &h(n, j)).unwrap(), &h(n, k)).unwrap();
                        let right = cup(&h(n, i), &cup(&h(n, j), &h(n, k)).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}
