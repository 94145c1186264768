//! Exact interpolation of plane curves through rational points via the
//! symbolic-first-row determinant, backed by fraction-free elimination.

use crate::exact::binomial;
use crate::rational::rat;
use crate::{Error, Int, Rational, Result};
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeMap;

/// Affine point with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanePoint {
    pub x: Rational,
    pub y: Rational,
}

/// Bivariate polynomial in X, Y with rational coefficients, stored sparsely
/// by monomial exponents (i, j) with i + j <= degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanePoly {
    degree: u32,
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl PlanePoly {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, p: &PlanePoint) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.coeffs {
            let mut term = c.clone();
            for _ in 0..i {
                term *= &p.x;
            }
            for _ in 0..j {
                term *= &p.y;
            }
            acc += term;
        }
        acc
    }
}

/// The monomial column order for degree d: within each total degree s the
/// pure powers X^s, Y^s come first, then the mixed terms X^{s-1}Y down to
/// XY^{s-1}. For d = 2 this reads 1, X, Y, X^2, Y^2, XY.
pub fn monomial_order(d: u32) -> Vec<(u32, u32)> {
    let mut cols = vec![(0, 0)];
    for s in 1..=d {
        cols.push((s, 0));
        cols.push((0, s));
        for j in 1..s {
            cols.push((s - j, j));
        }
    }
    cols
}

/// Exact determinant of a square rational matrix.
///
/// Rows are scaled to integers first, then eliminated with the
/// fraction-free Bareiss scheme; the result is divided back by the row
/// scalings.
pub fn exact_determinant(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NonSquareMatrix);
        }
    }
    if n == 0 {
        return Ok(rat(1));
    }
    // Clear denominators row by row.
    let mut scaling = Int::one();
    let mut a: Vec<Vec<Int>> = Vec::with_capacity(n);
    for row in m {
        let mut lcm = Int::one();
        for entry in row {
            lcm = lcm.lcm(entry.denom());
        }
        scaling *= &lcm;
        a.push(
            row.iter()
                .map(|entry| entry.numer() * (&lcm / entry.denom()))
                .collect(),
        );
    }
    let det = bareiss(&mut a);
    Ok(Rational::new(det, scaling))
}

/// Bareiss fraction-free elimination on an integer matrix; every division
/// is exact. Consumes the matrix.
fn bareiss(a: &mut [Vec<Int>]) -> Int {
    let n = a.len();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Interpolate the degree-d curve through C(d+2, 2) - 1 points: expand the
/// determinant whose symbolic first row lists the degree-d monomials and
/// whose remaining rows evaluate them at the points. The coefficient of
/// each monomial is the signed minor. The result is normalized by its
/// content, with the first nonzero coefficient in column order positive,
/// and vanishes at every input point.
pub fn interpolate_curve(d: u32, points: &[PlanePoint]) -> Result<PlanePoly> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let cols = monomial_order(d);
    let expected = usize::try_from(&(binomial(u64::from(d) + 2, 2) - 1)).expect("small");
    if points.len() != expected {
        return Err(Error::WrongPointCount {
            expected,
            got: points.len(),
        });
    }

    // Point rows: each monomial evaluated at each point.
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            cols.iter()
                .map(|&(i, j)| {
                    let mut v = rat(1);
                    for _ in 0..i {
                        v *= &p.x;
                    }
                    for _ in 0..j {
                        v *= &p.y;
                    }
                    v
                })
                .collect()
        })
        .collect();

    // Cofactor expansion along the symbolic row: coefficient of column k is
    // (-1)^k times the minor omitting that column.
    let mut raw: Vec<Rational> = Vec::with_capacity(cols.len());
    for k in 0..cols.len() {
        let minor: Vec<Vec<Rational>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != k)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut det = exact_determinant(&minor)?;
        if k % 2 == 1 {
            det = -det;
        }
        raw.push(det);
    }

    if raw.iter().all(|c| c.is_zero()) {
        return Err(Error::DegenerateConfiguration);
    }

    // Normalize: clear denominators, divide by the integer content, and
    // make the first nonzero coefficient in column order positive.
    let mut lcm = Int::one();
    for c in &raw {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<Int> = raw.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut content = Int::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    let leading_negative = ints
        .iter()
        .find(|v| !v.is_zero())
        .map(|v| v.is_negative())
        .unwrap_or(false);
    if leading_negative {
        content = -content;
    }

    let mut coeffs = BTreeMap::new();
    for (&(i, j), v) in cols.iter().zip(&ints) {
        if !v.is_zero() {
            coeffs.insert((i, j), Rational::from_integer(v / &content));
        }
    }
    Ok(PlanePoly { degree: d, coeffs })
}
