//! Truncated noncommutative power series over an alphabet.
//!
//! Words longer than the cap are dropped by every operation, so the
//! series ring is the free associative algebra modulo words of length
//! `> cap`. Used as the independent route for BCH coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exp needs a series with zero constant term")]
    ExpConstantTerm,
    #[error("log needs a series with constant term 1")]
    LogConstantTerm,
    #[error("series caps differ ({0} vs {1})")]
    CapMismatch(usize, usize),
}

/// Keyed by `(length, word)` so iteration runs in shortlex order.
type Key = (usize, Vec<u8>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocSeries {
    cap: usize,
    terms: BTreeMap<Key, Rational>,
}

impl AssocSeries {
    pub fn zero(cap: usize) -> Self {
        Self {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::monomial(cap, Vec::new(), Rational::one())
    }

    pub fn monomial(cap: usize, word: Vec<u8>, coeff: Rational) -> Self {
        let mut s = Self::zero(cap);
        s.add_term(word, coeff);
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in shortlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Rational)> {
        self.terms.iter().map(|((_, w), c)| (w.as_slice(), c))
    }

    pub fn coefficient(&self, word: &[u8]) -> Rational {
        self.terms
            .get(&(word.len(), word.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&[])
    }

    /// Adds `coeff * word`, ignoring words beyond the cap.
    pub fn add_term(&mut self, word: Vec<u8>, coeff: Rational) {
        if word.len() > self.cap || coeff.is_zero() {
            return;
        }
        let key = (word.len(), word);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn check_cap(&self, other: &Self) -> Result<(), SeriesError> {
        if self.cap == other.cap {
            Ok(())
        } else {
            Err(SeriesError::CapMismatch(self.cap, other.cap))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_cap(other)?;
        let mut out = self.clone();
        for ((_, w), c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.cap);
        }
        Self {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Concatenation product, truncated at the cap.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_cap(other)?;
        let mut out = Self::zero(self.cap);
        for ((la, a), ca) in &self.terms {
            for ((lb, b), cb) in &other.terms {
                if la + lb > self.cap {
                    // terms are sorted by length
                    break;
                }
                let mut w = Vec::with_capacity(la + lb);
                w.extend_from_slice(a);
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        Ok(out)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self, SeriesError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `sum_{k=0}^{cap} s^k / k!` for `s` with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::ExpConstantTerm);
        }
        let mut sum = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        for k in 1..=self.cap {
            power = power.mul(self)?.scale(&(Rational::one() / int(k as i64)));
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        Ok(sum)
    }

    /// `log(1 + u) = sum_{k>=1} (-1)^{k+1} u^k / k` for `self = 1 + u`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::LogConstantTerm);
        }
        let u = self.sub(&Self::one(self.cap))?;
        let mut sum = Self::zero(self.cap);
        let mut power = Self::one(self.cap);
        for k in 1..=self.cap {
            power = power.mul(&u)?;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum = sum.add(&power.scale(&(int(sign) / int(k as i64))))?;
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn letter(cap: usize, l: u8) -> AssocSeries {
        AssocSeries::monomial(cap, vec![l], Rational::one())
    }

    #[test]
    fn multiplication_truncates() {
        let x = letter(2, 0);
        let x3 = x.mul(&x).unwrap().mul(&x).unwrap();
        assert!(x3.is_zero());
    }

    #[test]
    fn log_inverts_exp() {
        let cap = 5;
        let s = letter(cap, 0)
            .add(&letter(cap, 1).scale(&ratio(-1, 2)))
            .unwrap()
            .add(&AssocSeries::monomial(cap, vec![0, 1], ratio(3, 1)))
            .unwrap();
        assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn exp_of_single_letter() {
        let e = letter(4, 0).exp().unwrap();
        assert_eq!(e.coefficient(&[0, 0, 0]), ratio(1, 6));
        assert_eq!(e.coefficient(&[0, 0, 0, 0]), ratio(1, 24));
        assert_eq!(e.constant_term(), Rational::one());
    }

    #[test]
    fn bad_constant_terms_are_rejected() {
        assert_eq!(
            AssocSeries::one(3).exp(),
            Err(SeriesError::ExpConstantTerm)
        );
        assert_eq!(letter(3, 0).log(), Err(SeriesError::LogConstantTerm));
    }
}
