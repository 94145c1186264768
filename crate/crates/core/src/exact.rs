//! Combinatorial and number-theoretic primitives: binomial coefficients,
//! divisor sums, and index-d sublattices of the integer lattice.

use crate::{Error, Int, Result};
use num::{One, Zero};

/// Binomial coefficient C(n, k).
///
/// Returns 0 when `k < 0` or `k > n`, so that out-of-range edge terms of
/// recursions vanish instead of needing special cases.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Sum of the positive divisors of `d`.
pub fn sigma1(d: u64) -> Result<Int> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut sum = Int::zero();
    for k in 1..=d {
        if d.is_multiple_of(k) {
            sum += Int::from(k);
        }
    }
    Ok(sum)
}

/// A finite-index sublattice of Z^2 in Hermite normal form, generated by
/// the rows (a, b) and (0, c) with 0 <= b < c. The form is unique per
/// sublattice, so counting sublattices is a finite loop over triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sublattice {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Sublattice {
    pub fn new(a: u64, b: u64, c: u64) -> Option<Self> {
        if a > 0 && c > 0 && b < c {
            Some(Sublattice { a, b, c })
        } else {
            None
        }
    }

    /// Index of the sublattice in Z^2.
    pub fn index(&self) -> u64 {
        self.a * self.c
    }

    /// Reduce an arbitrary generating pair to Hermite normal form.
    /// Returns `None` when the pair does not span a finite-index sublattice.
    pub fn from_basis(v1: (i64, i64), v2: (i64, i64)) -> Option<Self> {
        let det = v1.0 * v2.1 - v1.1 * v2.0;
        if det == 0 {
            return None;
        }
        let (mut u, mut v) = (v1, v2);
        // Euclid on the first coordinates; row operations preserve the lattice.
        while v.0 != 0 {
            let q = u.0.div_euclid(v.0);
            u = (u.0 - q * v.0, u.1 - q * v.1);
            std::mem::swap(&mut u, &mut v);
        }
        // v.0 == 0 now; u.0 = +/- gcd of the first column.
        let (mut a, mut b) = u;
        let mut c = v.1;
        if a < 0 {
            a = -a;
            b = -b;
        }
        if c < 0 {
            c = -c;
        }
        let b = b.rem_euclid(c);
        Sublattice::new(a as u64, b as u64, c as u64)
    }
}

/// Number of index-`d` sublattices of Z^2, counted by direct enumeration of
/// Hermite normal forms (a, b), (0, c) with a*c = d and 0 <= b < c.
///
/// This is deliberately independent of the divisor-sum formula `sigma1`,
/// which it provably equals.
pub fn count_sublattices(d: u64) -> Result<Int> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut count = Int::zero();
    for a in 1..=d {
        if d.is_multiple_of(a) {
            let c = d / a;
            // b ranges over 0..c
            count += Int::from(c);
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(2, 1), Int::from(2));
        // oracle: direct factorial evaluation 5!/(2!3!)
        assert_eq!(binomial(5, 2), Int::from(120 / (2 * 6)));
        assert_eq!(binomial(3, 5), Int::zero());
        assert_eq!(binomial(3, -1), Int::zero());
        assert_eq!(binomial(0, 0), Int::one());
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..=60u64 {
            for k in 1..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k) + binomial(n - 1, k - 1),
                    "Pascal fails at ({n}, {k})"
                );
            }
        }
    }

    #[test]
    fn sigma1_examples() {
        assert_eq!(sigma1(1).unwrap(), Int::from(1));
        assert_eq!(sigma1(6).unwrap(), Int::from(12)); // 1+2+3+6
        assert_eq!(sigma1(12).unwrap(), Int::from(28)); // 1+2+3+4+6+12
        assert_eq!(sigma1(0), Err(Error::ZeroDegree));
    }

    #[test]
    fn sublattice_count_examples() {
        assert_eq!(count_sublattices(1).unwrap(), Int::from(1));
        // (a,c) in {(4,1),(2,2),(1,4)} giving 1+2+4 = 7
        assert_eq!(count_sublattices(4).unwrap(), Int::from(7));
        assert_eq!(count_sublattices(6).unwrap(), Int::from(12));
        assert_eq!(count_sublattices(0), Err(Error::ZeroDegree));
    }

    #[test]
    fn sublattice_count_equals_divisor_sum() {
        for d in 1..=200 {
            assert_eq!(count_sublattices(d).unwrap(), sigma1(d).unwrap());
        }
    }

    /// Third oracle: enumerate generator pairs with entries in [-d, d],
    /// reduce each rank-2 pair to HNF, deduplicate, keep index d.
    fn brute_force_sublattices(d: u64) -> usize {
        let r = d as i64;
        let mut seen = BTreeSet::new();
        for p in -r..=r {
            for q in -r..=r {
                for s in -r..=r {
                    for t in -r..=r {
                        if (p * t - q * s).unsigned_abs() != d {
                            continue;
                        }
                        if let Some(l) = Sublattice::from_basis((p, q), (s, t)) {
                            debug_assert_eq!(l.index(), d);
                            seen.insert(l);
                        }
                    }
                }
            }
        }
        seen.len()
    }

    #[test]
    fn sublattice_count_matches_brute_force() {
        for d in 1..=8u64 {
            let expected: u64 = (1..=d).filter(|k| d % k == 0).sum();
            assert_eq!(brute_force_sublattices(d) as u64, expected, "d = {d}");
            assert_eq!(count_sublattices(d).unwrap(), Int::from(expected));
        }
    }

    #[test]
    fn hnf_reduction_is_canonical() {
        // Both pairs generate the same index-2 sublattice.
        let l1 = Sublattice::from_basis((2, 0), (0, 1)).unwrap();
        let l2 = Sublattice::from_basis((2, 1), (0, 1)).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(l1.index(), 2);
        // Rank-deficient pair is rejected.
        assert_eq!(Sublattice::from_basis((1, 2), (2, 4)), None);
    }
}
