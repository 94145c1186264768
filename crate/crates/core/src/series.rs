//! Truncated sparse multivariate formal power series over the rationals.
//!
//! Truncation is per variable: each variable carries a maximum exponent and
//! every operation discards terms that exceed any bound. Storage is a sparse
//! exponent-vector map; zero coefficients are never stored.

use crate::{Error, Rational, Result};
use num::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    vars: Vec<String>,
    bounds: Vec<u32>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Series {
    pub fn zero(vars: &[&str], bounds: &[u32]) -> Self {
        assert_eq!(vars.len(), bounds.len());
        Series {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            bounds: bounds.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// Single-term series; a zero coefficient yields the empty series.
    pub fn monomial(
        vars: &[&str],
        bounds: &[u32],
        exponents: &[u32],
        coeff: Rational,
    ) -> Result<Self> {
        let mut s = Series::zero(vars, bounds);
        s.check_exponents(exponents)?;
        if !coeff.is_zero() {
            s.terms.insert(exponents.to_vec(), coeff);
        }
        Ok(s)
    }

    /// Constant series.
    pub fn constant(vars: &[&str], bounds: &[u32], coeff: Rational) -> Self {
        let exps = vec![0; vars.len()];
        let mut s = Series::zero(vars, bounds);
        if !coeff.is_zero() {
            s.terms.insert(exps, coeff);
        }
        s
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn check_exponents(&self, exponents: &[u32]) -> Result<()> {
        if exponents.len() != self.vars.len() {
            return Err(Error::VariableMismatch);
        }
        for (k, (&e, &b)) in exponents.iter().zip(&self.bounds).enumerate() {
            if e > b {
                return Err(Error::ExponentOutOfBounds {
                    var: self.vars[k].clone(),
                    exponent: e,
                    bound: b,
                });
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Series) -> Result<()> {
        if self.vars != other.vars || self.bounds != other.bounds {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    fn var_index(&self, var: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Series {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Series {
        if s.is_zero() {
            return Series {
                vars: self.vars.clone(),
                bounds: self.bounds.clone(),
                terms: BTreeMap::new(),
            };
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= s;
        }
        out
    }

    /// Exact product; any cross-term exceeding a bound is discarded.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_compatible(other)?;
        let mut out = Series::zero(
            &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            &self.bounds,
        );
        for (ea, ca) in &self.terms {
            'inner: for (eb, cb) in &other.terms {
                let mut e = Vec::with_capacity(ea.len());
                for k in 0..ea.len() {
                    let s = ea[k] + eb[k];
                    if s > self.bounds[k] {
                        continue 'inner;
                    }
                    e.push(s);
                }
                let entry = out.terms.entry(e.clone()).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `var`.
    pub fn derive(&self, var: &str) -> Result<Series> {
        let k = self.var_index(var)?;
        let mut out = Series {
            vars: self.vars.clone(),
            bounds: self.bounds.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k] -= 1;
            out.terms
                .insert(e2, c * Rational::from_integer(e[k].into()));
        }
        Ok(out)
    }

    /// Multiply each term by its exponent of `var` (the operator x d/dx).
    /// For the plane potential this is exactly how the divisor variable
    /// differentiates: each degree-d term picks up a factor of d.
    pub fn scale_by_exponent(&self, var: &str) -> Result<Series> {
        let k = self.var_index(var)?;
        let mut out = Series {
            vars: self.vars.clone(),
            bounds: self.bounds.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            out.terms
                .insert(e.clone(), c * Rational::from_integer(e[k].into()));
        }
        Ok(out)
    }

    /// Stored coefficient at `exponents`, or zero.
    pub fn coefficient(&self, exponents: &[u32]) -> Result<Rational> {
        self.check_exponents(exponents)?;
        Ok(self
            .terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(Rational::zero))
    }
}
