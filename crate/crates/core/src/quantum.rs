//! Small quantum product on H*(P^N) x Q[q] and the big quantum product on
//! the plane with series-valued structure constants.

use crate::cohomology::CohClass;
use crate::potential::{phi_ijk, P2Potential};
use crate::series::Series;
use crate::{Error, Rational, Result};
use num::Zero;

/// Polynomial in the Novikov variable q, coefficients in ascending powers
/// with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly(Vec<Rational>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn term(power: usize, coeff: Rational) -> Self {
        if coeff.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); power + 1];
        v[power] = coeff;
        QPoly(v)
    }

    pub fn constant(coeff: Rational) -> Self {
        QPoly::term(0, coeff)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Coefficient of q^power.
    pub fn coeff(&self, power: usize) -> Rational {
        self.0.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.0.len().max(other.0.len());
        let v = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        QPoly(v).trim()
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly(v).trim()
    }
}

/// Element of H*(P^N) x Q[q] over the basis 1, H, ..., H^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QClass {
    ambient_dim: usize,
    coeffs: Vec<QPoly>,
}

impl QClass {
    pub fn zero(ambient_dim: usize) -> Self {
        QClass {
            ambient_dim,
            coeffs: vec![QPoly::zero(); ambient_dim + 1],
        }
    }

    /// The basis class H^k with no q-dependence.
    pub fn h_power(ambient_dim: usize, k: usize) -> Result<Self> {
        if k > ambient_dim {
            return Err(Error::BadBasisIndex {
                index: k,
                size: ambient_dim + 1,
            });
        }
        let mut c = QClass::zero(ambient_dim);
        c.coeffs[k] = QPoly::constant(Rational::from_integer(1.into()));
        Ok(c)
    }

    pub fn from_cohomology(class: &CohClass) -> Self {
        QClass {
            ambient_dim: class.ambient_dim(),
            coeffs: class
                .coeffs()
                .iter()
                .map(|c| QPoly::constant(c.clone()))
                .collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &QClass) -> Result<QClass> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(self.ambient_dim, other.ambient_dim));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(QClass {
            ambient_dim: self.ambient_dim,
            coeffs,
        })
    }

    /// Specialization q = 0.
    pub fn at_q_zero(&self) -> CohClass {
        CohClass::from_coeffs(
            self.ambient_dim,
            self.coeffs.iter().map(|p| p.coeff(0)).collect(),
        )
        .expect("lengths agree")
    }
}

/// Small quantum product on P^N: the relations are H^i * H^j = H^{i+j} for
/// i+j <= N and H^i * H^j = q H^{i+j-N-1} for N < i+j <= 2N, extended
/// q-bilinearly. These follow from the single relation H^N * H = q plus
/// associativity.
pub fn small_qproduct(a: &QClass, b: &QClass) -> Result<QClass> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch(a.ambient_dim, b.ambient_dim));
    }
    let n = a.ambient_dim;
    let mut out = QClass::zero(n);
    for (i, pa) in a.coeffs.iter().enumerate() {
        if pa.is_zero() {
            continue;
        }
        for (j, pb) in b.coeffs.iter().enumerate() {
            if pb.is_zero() {
                continue;
            }
            let prod = pa.mul(pb);
            if i + j <= n {
                out.coeffs[i + j] = out.coeffs[i + j].add(&prod);
            } else {
                // i + j <= 2n always holds for basis exponents.
                let shifted = prod.mul(&QPoly::term(1, Rational::from_integer(1.into())));
                out.coeffs[i + j - n - 1] = out.coeffs[i + j - n - 1].add(&shifted);
            }
        }
    }
    Ok(out)
}

/// Element of H*(P^2) with series-valued coefficients over the basis
/// (pt, L, 1); component k multiplies the dual class g^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigQClass {
    /// Coefficients of pt, L, 1 in that order.
    pub coeffs: [Series; 3],
}

impl BigQClass {
    /// Evaluate every series variable at 0, recovering an ordinary class.
    pub fn at_origin(&self) -> CohClass {
        let values: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|s| s.coefficient(&[0, 0]).expect("origin is in bounds"))
            .collect();
        // coeffs[0] multiplies pt = H^2, coeffs[2] multiplies 1 = H^0.
        CohClass::from_coeffs(2, vec![values[2].clone(), values[1].clone(), values[0].clone()])
            .expect("three coefficients")
    }

    /// Set y2 = 0 and keep t-degrees 0 and 1, reading the t-linear part as
    /// the q-coefficient. This is the small-quantum-product limit.
    pub fn small_limit(&self) -> QClass {
        let mut out = QClass::zero(2);
        for (k, series) in self.coeffs.iter().enumerate() {
            // Basis position of the dual class g^k = H^{2-k}.
            let pos = 2 - k;
            let constant = series.coefficient(&[0, 0]).expect("in bounds");
            let linear = series.coefficient(&[1, 0]).expect("in bounds");
            out.coeffs[pos] = QPoly::constant(constant).add(&QPoly::term(1, linear));
        }
        out
    }
}

/// Big quantum product of the basis classes g_i and g_j of the plane:
/// g_i * g_j = sum_k Phi_ijk g^k with g^0 = pt, g^1 = L, g^2 = 1.
pub fn big_qproduct_p2(i: usize, j: usize, p: &P2Potential) -> Result<BigQClass> {
    Ok(BigQClass {
        coeffs: [
            phi_ijk(p, i, j, 0)?,
            phi_ijk(p, i, j, 1)?,
            phi_ijk(p, i, j, 2)?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cup;
    use crate::enumerative::CountTable;
    use crate::potential::assemble_potential;
    use crate::rational::rat;

    fn h(n: usize, k: usize) -> QClass {
        QClass::h_power(n, k).unwrap()
    }

    #[test]
    fn plane_products() {
        // H * H = pt
        assert_eq!(small_qproduct(&h(2, 1), &h(2, 1)).unwrap(), h(2, 2));
        // pt * pt = q H
        let qq = small_qproduct(&h(2, 2), &h(2, 2)).unwrap();
        let mut expected = QClass::zero(2);
        expected.coeffs[1] = QPoly::term(1, rat(1));
        assert_eq!(qq, expected);
    }

    #[test]
    fn unit_law() {
        for n in 1..=5 {
            for k in 0..=n {
                assert_eq!(small_qproduct(&h(n, 0), &h(n, k)).unwrap(), h(n, k));
            }
        }
    }

    #[test]
    fn top_relation() {
        // H^N * H = q . 1
        for n in 1..=5 {
            let prod = small_qproduct(&h(n, n), &h(n, 1)).unwrap();
            let mut expected = QClass::zero(n);
            expected.coeffs[0] = QPoly::term(1, rat(1));
            assert_eq!(prod, expected);
        }
    }

    #[test]
    fn associative_and_commutative() {
        for n in 1..=5 {
            for a in 0..=n {
                for b in 0..=n {
                    assert_eq!(
                        small_qproduct(&h(n, a), &h(n, b)).unwrap(),
                        small_qproduct(&h(n, b), &h(n, a)).unwrap()
                    );
                    for c in 0..=n {
                        let left = small_qproduct(
                            &small_qproduct(&h(n, a), &h(n, b)).unwrap(),
                            &h(n, c),
                        )
                        .unwrap();
                        let right = small_qproduct(
                            &h(n, a),
                            &small_qproduct(&h(n, b), &h(n, c)).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(left, right, "associativity fails at N={n} ({a},{b},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn q_zero_specializes_to_cup() {
        for n in 1..=5 {
            for a in 0..=n {
                for b in 0..=n {
                    let qprod = small_qproduct(&h(n, a), &h(n, b)).unwrap().at_q_zero();
                    let classical = cup(
                        &CohClass::h_power(n, a).unwrap(),
                        &CohClass::h_power(n, b).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(qprod, classical);
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        assert_eq!(
            small_qproduct(&h(2, 0), &h(3, 0)),
            Err(Error::DimensionMismatch(2, 3))
        );
    }

    #[test]
    fn big_product_line_times_line() {
        let mut table = CountTable::new();
        let p = assemble_potential(3, &mut table).unwrap();
        let prod = big_qproduct_p2(1, 1, &p).unwrap();
        // Coefficient of pt is the constant integral of L . L = 1.
        assert_eq!(prod.coeffs[0].coefficient(&[0, 0]).unwrap(), rat(1));
        assert_eq!(prod.coeffs[0].terms().count(), 1);
        // Coefficients of L and 1 are Phi_111 and Phi_112.
        assert_eq!(prod.coeffs[1], phi_ijk(&p, 1, 1, 1).unwrap());
        assert_eq!(prod.coeffs[2], phi_ijk(&p, 1, 1, 2).unwrap());
    }

    #[test]
    fn big_product_point_times_point_at_origin() {
        let mut table = CountTable::new();
        let p = assemble_potential(3, &mut table).unwrap();
        let prod = big_qproduct_p2(2, 2, &p).unwrap();
        // At the origin with t-degree 1 as the q-coefficient: q L.
        let small = prod.small_limit();
        let mut expected = QClass::zero(2);
        expected.coeffs[1] = QPoly::term(1, rat(1));
        assert_eq!(small, expected);
    }

    #[test]
    fn big_product_unit_at_origin() {
        let mut table = CountTable::new();
        let p = assemble_potential(2, &mut table).unwrap();
        for j in 0..3 {
            let prod = big_qproduct_p2(0, j, &p).unwrap();
            assert_eq!(
                prod.at_origin(),
                CohClass::h_power(2, j).unwrap(),
                "unit law fails at j = {j}"
            );
        }
    }

    #[test]
    fn big_product_symmetric() {
        let mut table = CountTable::new();
        let p = assemble_potential(3, &mut table).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    big_qproduct_p2(i, j, &p).unwrap(),
                    big_qproduct_p2(j, i, &p).unwrap()
                );
            }
        }
    }

    #[test]
    fn big_product_matches_small_on_all_pairs() {
        let mut table = CountTable::new();
        let p = assemble_potential(3, &mut table).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let big = big_qproduct_p2(i, j, &p).unwrap().small_limit();
                let small = small_qproduct(&h(2, i), &h(2, j)).unwrap();
                assert_eq!(big, small, "mismatch at ({i}, {j})");
            }
        }
    }
}
