//! The genus-0 potential of the plane, its third derivatives, and the WDVV
//! identity on truncations.
//!
//! The quantum part lives in two formal variables: `t`, which stands for
//! the combination q e^{y1} (the divisor variable only ever appears inside
//! that exponential, so one variable tracks both and d/dy1 becomes the
//! operator t d/dt), and `y2`, the point-insertion variable. The closed
//! classical cubic (y0^2 y2 + y0 y1^2)/2 is kept separately in
//! (y0, y1, y2).

use crate::enumerative::{kontsevich_nd, CountTable};
use crate::rational::{factorial, ratio};
use crate::series::Series;
use crate::{Error, Int, Rational, Result};
use num::{One, Zero};

pub const QUANTUM_VARS: [&str; 2] = ["t", "y2"];
pub const CLASSICAL_VARS: [&str; 3] = ["y0", "y1", "y2"];

/// The potential of the plane truncated at curve degree D: the classical
/// cubic plus the quantum terms N_d t^d y2^{3d-1}/(3d-1)! for 1 <= d <= D.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P2Potential {
    truncation_degree: u32,
    classical: Series,
    quantum: Series,
}

fn quantum_bounds(degree: u32) -> [u32; 2] {
    [degree, 3 * degree - 1]
}

/// The classical cubic (y0^2 y2 + y0 y1^2)/2.
fn classical_part() -> Series {
    let bounds = [2, 2, 1];
    let a = Series::monomial(&CLASSICAL_VARS, &bounds, &[2, 0, 1], ratio(1, 2)).unwrap();
    let b = Series::monomial(&CLASSICAL_VARS, &bounds, &[1, 2, 0], ratio(1, 2)).unwrap();
    a.add(&b).unwrap()
}

/// Quantum part assembled from the counts in `table` for degrees
/// 1 <= d <= terms_up_to, with truncation bounds t <= bound_degree,
/// y2 <= 3*bound_degree - 1.
fn quantum_part(terms_up_to: u32, bound_degree: u32, table: &CountTable) -> Series {
    let bounds = quantum_bounds(bound_degree);
    let mut q = Series::zero(&QUANTUM_VARS, &bounds);
    for d in 1..=terms_up_to {
        let n_d = table.get(d).expect("count available").clone();
        let coeff = Rational::new(n_d, factorial(u64::from(3 * d - 1)));
        let term = Series::monomial(&QUANTUM_VARS, &bounds, &[d, 3 * d - 1], coeff).unwrap();
        q = q.add(&term).unwrap();
    }
    q
}

/// Build the potential truncated at degree D, computing any missing counts
/// N_1..N_D in `table` on demand.
pub fn assemble_potential(degree: u32, table: &mut CountTable) -> Result<P2Potential> {
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    kontsevich_nd(degree, table)?;
    Ok(P2Potential {
        truncation_degree: degree,
        classical: classical_part(),
        quantum: quantum_part(degree, degree, table),
    })
}

impl P2Potential {
    pub fn truncation_degree(&self) -> u32 {
        self.truncation_degree
    }

    pub fn classical(&self) -> &Series {
        &self.classical
    }

    pub fn quantum(&self) -> &Series {
        &self.quantum
    }

    /// Exponent window in which truncated-product coefficients are exact:
    /// t <= D, y2 <= 3D - 4.
    pub fn residual_window(&self) -> (u32, u32) {
        // At D = 1 the window is degenerate; saturate instead of underflowing.
        (
            self.truncation_degree,
            (3 * self.truncation_degree).saturating_sub(4),
        )
    }
}

/// Third partial derivative of the potential with respect to y_i, y_j, y_k,
/// as a series in (t, y2).
///
/// On the quantum part d/dy0 annihilates everything, d/dy1 acts as t d/dt,
/// and d/dy2 is the ordinary derivative. The classical cubic has constant
/// third derivatives, embedded as constant series.
pub fn phi_ijk(p: &P2Potential, i: usize, j: usize, k: usize) -> Result<Series> {
    for idx in [i, j, k] {
        if idx > 2 {
            return Err(Error::BadBasisIndex { index: idx, size: 3 });
        }
    }
    // Classical contribution: differentiate the cubic directly.
    let mut classical = p.classical.clone();
    for idx in [i, j, k] {
        classical = classical.derive(CLASSICAL_VARS[idx])?;
    }
    let constant = classical.coefficient(&[0, 0, 0])?;
    let mut out = Series::constant(&QUANTUM_VARS, p.quantum.bounds(), constant);

    // Quantum contribution: zero as soon as y0 is involved.
    if ![i, j, k].contains(&0) {
        let mut q = p.quantum.clone();
        for idx in [i, j, k] {
            q = match idx {
                1 => q.scale_by_exponent("t")?,
                2 => q.derive("y2")?,
                _ => unreachable!(),
            };
        }
        out = out.add(&q)?;
    }
    Ok(out)
}

/// The WDVV combination Phi_222 + Phi_111 Phi_122 - Phi_112^2 on the
/// truncation. It vanishes identically; the caller should only inspect
/// coefficients inside `residual_window`, where no discarded cross-term
/// could have landed.
pub fn wdvv_residual(p: &P2Potential) -> Result<Series> {
    let phi222 = phi_ijk(p, 2, 2, 2)?;
    let phi111 = phi_ijk(p, 1, 1, 1)?;
    let phi122 = phi_ijk(p, 1, 2, 2)?;
    let phi112 = phi_ijk(p, 1, 1, 2)?;
    phi222
        .add(&phi111.mul(&phi122)?)?
        .sub(&phi112.mul(&phi112)?)
}

/// Largest numerator magnitude of the residual over the guaranteed window;
/// zero exactly when the residual vanishes there.
pub fn residual_max_in_window(p: &P2Potential) -> Result<Int> {
    let residual = wdvv_residual(p)?;
    let (t_max, y2_max) = p.residual_window();
    let mut max = Int::zero();
    for (exps, coeff) in residual.terms() {
        if exps[0] <= t_max && exps[1] <= y2_max {
            let mag = num::abs(coeff.numer().clone());
            if mag > max {
                max = mag;
            }
        }
    }
    Ok(max)
}

/// Solve for the counts N_d degree by degree from the WDVV identity alone:
/// with N_1..N_{d-1} known, the coefficient of t^d y2^{3d-4} in
/// Phi_112^2 - Phi_111 Phi_122 equals N_d/(3d-4)!.
///
/// This never invokes the closed recursion, so it is an independent
/// derivation of the same numbers.
pub fn nd_from_wdvv(degree: u32) -> Result<CountTable> {
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut table = CountTable::new();
    for d in 2..=degree {
        let quantum = quantum_part(d - 1, d, &table);
        let phi111 = quantum
            .scale_by_exponent("t")?
            .scale_by_exponent("t")?
            .scale_by_exponent("t")?;
        let phi112 = quantum
            .scale_by_exponent("t")?
            .scale_by_exponent("t")?
            .derive("y2")?;
        let phi122 = quantum
            .scale_by_exponent("t")?
            .derive("y2")?
            .derive("y2")?;
        let rhs = phi112.mul(&phi112)?.sub(&phi111.mul(&phi122)?)?;
        let coeff = rhs.coefficient(&[d, 3 * d - 4])?;
        let n_d = coeff * Rational::from_integer(factorial(u64::from(3 * d - 4)));
        if !n_d.denom().is_one() || n_d.numer().sign() == num::bigint::Sign::Minus {
            return Err(Error::NonIntegerCount(d));
        }
        table.insert(d, n_d.numer().clone());
    }
    Ok(table)
}
