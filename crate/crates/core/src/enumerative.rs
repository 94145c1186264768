//! Closed-form enumerative formulas: virtual dimensions, plane-curve genus
//! and family dimensions, point-insertion counts, elliptic cover counts,
//! and the recursion for the degree-d rational curve counts N_d.

use crate::exact::{binomial, sigma1};
use crate::{Error, Int, Result};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Memoized table of curve counts N_d. N_1 = 1 always holds; every stored
/// value is a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    values: BTreeMap<u32, Int>,
}

impl CountTable {
    pub fn new() -> Self {
        let mut values = BTreeMap::new();
        values.insert(1, Int::one());
        CountTable { values }
    }

    pub fn get(&self, d: u32) -> Option<&Int> {
        self.values.get(&d)
    }

    pub fn insert(&mut self, d: u32, n: Int) {
        self.values.insert(d, n);
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Int)> {
        self.values.iter().map(|(&d, n)| (d, n))
    }

    pub fn max_degree(&self) -> u32 {
        self.values.keys().copied().max().unwrap_or(0)
    }
}

impl Default for CountTable {
    fn default() -> Self {
        CountTable::new()
    }
}

/// Inputs to the expected-dimension formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionInput {
    /// Complex dimension of the target.
    pub dim_x: i64,
    /// Genus of the source curve.
    pub genus: u32,
    /// Number of marked points.
    pub marked_points: u32,
    /// Degree of c1 of the tangent bundle on the curve class.
    pub c1_beta: i64,
}

/// Expected dimension of the moduli space of stable maps:
/// (dim X - 3)(1 - g) + c1.beta + n.
pub fn virtual_dimension(input: DimensionInput) -> i64 {
    (input.dim_x - 3) * (1 - i64::from(input.genus)) + input.c1_beta
        + i64::from(input.marked_points)
}

/// Genus of a smooth degree-d plane curve: (d-1)(d-2)/2.
pub fn plane_genus(d: u32) -> Result<u64> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let d = i64::from(d);
    Ok(((d - 1) * (d - 2) / 2) as u64)
}

/// Dimensions of the two families of degree-d plane curves: the projective
/// space of all degree-d curves, C(d+2, 2) - 1, and the family of nodal
/// rational ones, 3d - 1. The two differ by the genus, node by node.
pub fn plane_curve_family_dim(d: u32) -> Result<(i64, i64)> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let coeff_space: Int = binomial(u64::from(d) + 2, 2) - 1;
    let coeff_space = i64::try_from(&coeff_space).expect("fits");
    Ok((coeff_space, 3 * i64::from(d) - 1))
}

/// Number of point insertions that pin down the genus-g curves in a surface:
/// (g - 1) + c1.beta. A negative result means there are no point invariants.
pub fn surface_point_insertions(genus: u32, c1_beta: i64) -> i64 {
    i64::from(genus) - 1 + c1_beta
}

/// Unramified degree-d covers of an elliptic curve with one point condition:
/// the divisor sum sigma_1(d).
pub fn elliptic_cover_count(d: u64) -> Result<Int> {
    sigma1(d)
}

/// The recursion for the number N_d of degree-d rational plane curves
/// through 3d - 1 general points:
///
///   N_d = sum over d1 + d2 = d of
///         d1^2 d2^2 N_{d1} N_{d2} C(3d-4, 3d1-2)
///       - d1^3 d2   N_{d1} N_{d2} C(3d-4, 3d1-1)
///
/// with N_1 = 1. Evaluation is memoized in `table`; every computed value is
/// checked to be a nonnegative integer before it is stored.
pub fn kontsevich_nd(d: u32, table: &mut CountTable) -> Result<Int> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    for e in 2..=d {
        if table.get(e).is_some() {
            continue;
        }
        let mut acc = Int::zero();
        let n = 3 * u64::from(e) - 4;
        for d1 in 1..e {
            let d2 = e - d1;
            let prod = table.get(d1).expect("filled in order")
                * table.get(d2).expect("filled in order");
            let k1 = Int::from(d1);
            let k2 = Int::from(d2);
            let first = &k1 * &k1 * &k2 * &k2 * &prod * binomial(n, 3 * i64::from(d1) - 2);
            let second = &k1 * &k1 * &k1 * &k2 * &prod * binomial(n, 3 * i64::from(d1) - 1);
            acc += first - second;
        }
        if acc.sign() == num::bigint::Sign::Minus {
            return Err(Error::NonIntegerCount(e));
        }
        table.insert(e, acc);
    }
    Ok(table.get(d).expect("just computed").clone())
}
